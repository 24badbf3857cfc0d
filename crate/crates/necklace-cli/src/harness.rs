//! Three-way cross-verification: for every composition in range, the closed
//! form, the expanded cycle index, and the brute-force orbit scan must all
//! report the same count, for both symmetry groups.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use necklace::cycleindex::{
    cycle_index_cyclic_bounded, cycle_index_dihedral_bounded, extract_count,
};
use necklace::numtheory;
use necklace::orbits::count_orbits_bounded;
use necklace::{
    classify_dihedral_case, count_cyclic, count_dihedral, ColorMultiplicities, CountValue, Mode,
    SymmetryGroup,
};

use crate::report::join_counts;

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub max_n: u64,
    pub max_colors: usize,
    pub mode: &'static str,
    pub compositions_checked: u64,
    pub comparisons: u64,
    pub case_hits: BTreeMap<&'static str, u64>,
    pub mismatches: Vec<Mismatch>,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct Mismatch {
    pub counts: Vec<u64>,
    pub group: &'static str,
    pub case: Option<&'static str>,
    pub closed_form: String,
    pub cycle_index: String,
    pub brute_force: String,
}

fn positive_compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if (parts as u64) > total {
        return Vec::new();
    }
    numtheory::compositions(total - parts as u64, parts)
        .map(|c| c.iter().map(|&x| x + 1).collect())
        .collect()
}

pub fn run_verify(
    max_n: u64,
    max_colors: usize,
    mode: Mode,
    mode_name: &'static str,
    term_limit: u64,
    word_limit: u64,
) -> Result<VerifyReport, necklace::Error> {
    let mut report = VerifyReport {
        max_n,
        max_colors,
        mode: mode_name,
        compositions_checked: 0,
        comparisons: 0,
        case_hits: BTreeMap::new(),
        mismatches: Vec::new(),
        ok: true,
    };

    for n in 1..=max_n {
        for m in 1..=max_colors.min(n as usize) {
            let comps = positive_compositions(n, m);
            if comps.is_empty() {
                continue;
            }
            let cyclic_index = cycle_index_cyclic_bounded(n, m, term_limit)?;
            let dihedral_index = cycle_index_dihedral_bounded(n, m, term_limit)?;

            for comp in comps {
                let tuple = ColorMultiplicities::new(&comp)?;
                let case = classify_dihedral_case(&tuple);
                *report.case_hits.entry(case.name()).or_insert(0) += 1;

                // rotations only
                let closed = count_cyclic(&tuple)?;
                let extracted = extract_count(&cyclic_index, &comp)?;
                let scanned = count_orbits_bounded(&tuple, SymmetryGroup::Cyclic, word_limit)?;
                report.comparisons += 1;
                if closed != extracted || closed != scanned {
                    report.mismatches.push(Mismatch {
                        counts: comp.clone(),
                        group: "cyclic",
                        case: None,
                        closed_form: closed.to_string(),
                        cycle_index: extracted.to_string(),
                        brute_force: scanned.to_string(),
                    });
                }

                // rotations and reflections
                let closed = count_dihedral(&tuple, mode)?;
                let extracted = extract_count(&dihedral_index, &comp)?;
                let scanned = count_orbits_bounded(&tuple, SymmetryGroup::Dihedral, word_limit)?;
                report.comparisons += 1;
                let agrees = match &closed {
                    CountValue::Integer(c) => *c == extracted && *c == scanned,
                    CountValue::Ratio(r) => {
                        extracted == scanned
                            && *r == BigRational::from_integer(BigInt::from(extracted.clone()))
                    }
                };
                if !agrees {
                    report.mismatches.push(Mismatch {
                        counts: comp.clone(),
                        group: "dihedral",
                        case: Some(case.name()),
                        closed_form: closed.to_string(),
                        cycle_index: extracted.to_string(),
                        brute_force: scanned.to_string(),
                    });
                }

                report.compositions_checked += 1;
            }
        }
    }
    report.ok = report.mismatches.is_empty();
    Ok(report)
}

pub fn render_text(report: &VerifyReport) -> String {
    let mut out = format!(
        "verify: max N {}, max colors {}, mode {}\n",
        report.max_n, report.max_colors, report.mode
    );
    out.push_str(&format!(
        "compositions checked: {}\ncomparisons: {}\n",
        report.compositions_checked, report.comparisons
    ));
    let hits: Vec<String> = report
        .case_hits
        .iter()
        .map(|(name, count)| format!("{name}={count}"))
        .collect();
    out.push_str(&format!("dihedral case hits: {}\n", hits.join(" ")));
    for miss in &report.mismatches {
        out.push_str(&format!(
            "MISMATCH group={} counts={} case={} closed_form={} cycle_index={} brute_force={}\n",
            miss.group,
            join_counts(&miss.counts),
            miss.case.unwrap_or("-"),
            miss.closed_form,
            miss.cycle_index,
            miss.brute_force
        ));
    }
    out.push_str(&format!("mismatches: {}\n", report.mismatches.len()));
    out.push_str(if report.ok {
        "result: OK\n"
    } else {
        "result: FAIL\n"
    });
    out
}
