//! Cycle-index polynomials expanded into explicit monomials — the first of
//! two independent oracles for the closed-form counts.
//!
//! The rotation group's index is `Z_C = (1/N) Σ_{g|N} φ(g) X_g^{N/g}` with
//! power sums `X_g = x_1^g + … + x_m^g`; adding reflections gives
//! `2 Z_D = Z_C + X_1 X_2^L` for `N = 2L + 1` and
//! `2 Z_D = Z_C + ½ (X_1² X_2^{L−1} + X_2^L)` for `N = 2L`. The coefficient
//! of `x_1^{n_1} ⋯ x_m^{n_m}` counts the colorings with those multiplicities.
//!
//! Indices are stored premultiplied by the group order (`N`, respectively
//! `2N`) so every coefficient stays an integer; the division happens at
//! extraction and is checked exact. The expansion is deliberately naive —
//! no shortcut through the closed form — so it stays an independent check.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{self, Count};

/// Ceiling on the number of monomials an expansion may hold,
/// `C(N + m − 1, m − 1)`; requests above it fail fast with
/// [`Error::TermLimit`].
pub const DEFAULT_TERM_LIMIT: u64 = 10_000_000;

/// Exponent vector of one monomial; fixed length within a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(exponents: Vec<u64>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    /// Total degree, the sum of all exponents.
    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// Sparse multivariate polynomial with exact nonnegative coefficients and a
/// positive `scale` denominator applied to the whole polynomial.
///
/// Invariants: no zero coefficient is stored and exponent vectors are unique;
/// term order is the lexicographic order of the exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    num_vars: usize,
    scale: u64,
    terms: BTreeMap<ExponentVector, Count>,
}

impl SparsePoly {
    fn empty(num_vars: usize) -> Self {
        SparsePoly {
            num_vars,
            scale: 1,
            terms: BTreeMap::new(),
        }
    }

    fn constant_one(num_vars: usize) -> Self {
        let mut p = SparsePoly::empty(num_vars);
        p.terms
            .insert(ExponentVector(vec![0; num_vars]), Count::one());
        p
    }

    fn with_scale(mut self, scale: u64) -> Self {
        self.scale = scale;
        self
    }

    fn add_term(&mut self, key: ExponentVector, value: Count) {
        if value.is_zero() {
            return;
        }
        *self.terms.entry(key).or_insert_with(Count::zero) += value;
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Denominator applied to the whole polynomial (`N` for the scaled
    /// rotation index, `2N` with reflections).
    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of the exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Count)> {
        self.terms.iter()
    }

    /// Raw (unscaled) coefficient of the given exponent vector.
    pub fn coefficient(&self, exponents: &[u64]) -> Option<&Count> {
        self.terms.get(&ExponentVector(exponents.to_vec()))
    }

    /// Sum of all raw coefficients — the polynomial evaluated at
    /// `x_1 = … = x_m = 1`.
    pub fn coefficient_sum(&self) -> Count {
        self.terms.values().fold(Count::zero(), |acc, c| acc + c)
    }
}

/// Debug serialization: a `scale=<k>` header, then one `coeff * x1^e1 … xm^em`
/// line per term, sorted by exponent vector.
impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scale={}", self.scale)?;
        for (exps, coeff) in &self.terms {
            write!(f, "{coeff} *")?;
            for (i, e) in exps.exponents().iter().enumerate() {
                write!(f, " x{}^{}", i + 1, e)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The power sum `X_g = x_1^g + … + x_m^g`.
pub fn power_sum(exponent: u64, num_vars: usize) -> Result<SparsePoly> {
    if exponent == 0 {
        return Err(Error::Zero {
            what: "power sum exponent",
        });
    }
    if num_vars == 0 {
        return Err(Error::Zero {
            what: "variable count",
        });
    }
    let mut p = SparsePoly::empty(num_vars);
    for i in 0..num_vars {
        let mut exps = vec![0u64; num_vars];
        exps[i] = exponent;
        p.terms.insert(ExponentVector(exps), Count::one());
    }
    Ok(p)
}

/// Exact distributive product; like terms merged.
pub fn poly_mul(a: &SparsePoly, b: &SparsePoly) -> Result<SparsePoly> {
    if a.num_vars != b.num_vars {
        return Err(Error::VariableMismatch {
            left: a.num_vars,
            right: b.num_vars,
        });
    }
    let mut out = SparsePoly::empty(a.num_vars);
    out.scale = a.scale * b.scale;
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            let exps: Vec<u64> = ea
                .exponents()
                .iter()
                .zip(eb.exponents())
                .map(|(x, y)| x + y)
                .collect();
            out.add_term(ExponentVector(exps), ca * cb);
        }
    }
    Ok(out)
}

/// `base` raised to `exp` by repeated multiplication; `exp == 0` gives the
/// constant 1.
pub fn poly_pow(base: &SparsePoly, exp: u64) -> Result<SparsePoly> {
    let mut out = SparsePoly::constant_one(base.num_vars);
    for _ in 0..exp {
        out = poly_mul(&out, base)?;
    }
    Ok(out)
}

/// `a + weight · b`, with the scales aligned on their least common multiple.
pub fn poly_add_scaled(a: &SparsePoly, b: &SparsePoly, weight: u64) -> Result<SparsePoly> {
    if a.num_vars != b.num_vars {
        return Err(Error::VariableMismatch {
            left: a.num_vars,
            right: b.num_vars,
        });
    }
    let scale = num_integer::lcm(a.scale, b.scale);
    let (boost_a, boost_b) = (scale / a.scale, scale / b.scale);
    let mut out = SparsePoly::empty(a.num_vars).with_scale(scale);
    for (e, c) in &a.terms {
        out.add_term(e.clone(), c * boost_a);
    }
    if weight != 0 {
        for (e, c) in &b.terms {
            out.add_term(e.clone(), c * (weight * boost_b));
        }
    }
    Ok(out)
}

/// `N · Z_C`: the rotation-group cycle index over `colors` variables,
/// premultiplied by `N` (so [`SparsePoly::scale`] is `N`).
pub fn cycle_index_cyclic(beads: u64, colors: usize) -> Result<SparsePoly> {
    cycle_index_cyclic_bounded(beads, colors, DEFAULT_TERM_LIMIT)
}

pub fn cycle_index_cyclic_bounded(beads: u64, colors: usize, max_terms: u64) -> Result<SparsePoly> {
    check_term_budget(beads, colors, max_terms)?;
    Ok(scaled_cyclic_terms(beads, colors)?.with_scale(beads))
}

/// `2N · Z_D`: the reflection-augmented cycle index, premultiplied by `2N`
/// (so [`SparsePoly::scale`] is `2N`).
pub fn cycle_index_dihedral(beads: u64, colors: usize) -> Result<SparsePoly> {
    cycle_index_dihedral_bounded(beads, colors, DEFAULT_TERM_LIMIT)
}

pub fn cycle_index_dihedral_bounded(
    beads: u64,
    colors: usize,
    max_terms: u64,
) -> Result<SparsePoly> {
    check_term_budget(beads, colors, max_terms)?;
    let rotations = scaled_cyclic_terms(beads, colors)?;
    let combined = if beads % 2 == 1 {
        // N = 2L + 1: N · X_1 X_2^L
        let half = poly_pow(&power_sum(2, colors)?, beads / 2)?;
        let extra = poly_mul(&power_sum(1, colors)?, &half)?;
        poly_add_scaled(&rotations, &extra, beads)?
    } else {
        // N = 2L: (N/2) · (X_1² X_2^{L−1} + X_2^L)
        let through_beads = poly_mul(
            &poly_pow(&power_sum(1, colors)?, 2)?,
            &poly_pow(&power_sum(2, colors)?, beads / 2 - 1)?,
        )?;
        let through_edges = poly_pow(&power_sum(2, colors)?, beads / 2)?;
        let partial = poly_add_scaled(&rotations, &through_beads, beads / 2)?;
        poly_add_scaled(&partial, &through_edges, beads / 2)?
    };
    Ok(combined.with_scale(2 * beads))
}

/// `Σ_{g|N} φ(g) X_g^{N/g}` with scale left at 1.
fn scaled_cyclic_terms(beads: u64, colors: usize) -> Result<SparsePoly> {
    if beads == 0 {
        return Err(Error::Zero { what: "bead count" });
    }
    if colors == 0 {
        return Err(Error::Zero {
            what: "color count",
        });
    }
    let mut acc = SparsePoly::empty(colors);
    for g in numtheory::divisors(beads)? {
        let term = poly_pow(&power_sum(g, colors)?, beads / g)?;
        acc = poly_add_scaled(&acc, &term, numtheory::totient(g)?)?;
    }
    Ok(acc)
}

/// The full expansion holds up to `C(N + m − 1, m − 1)` monomials.
fn check_term_budget(beads: u64, colors: usize, max_terms: u64) -> Result<()> {
    if colors == 0 {
        return Err(Error::Zero {
            what: "color count",
        });
    }
    let required = numtheory::binomial(beads + colors as u64 - 1, colors as u64 - 1);
    if required > Count::from(max_terms) {
        return Err(Error::TermLimit {
            required,
            limit: max_terms,
        });
    }
    Ok(())
}

/// Coefficient of `x_1^{e_1} ⋯ x_m^{e_m}` divided by the polynomial's scale.
///
/// For a scaled cycle index this is the coloring count for the multiplicity
/// tuple `exponents` (zero entries are fine). The division must be exact;
/// a remainder signals a bug in the polynomial construction.
pub fn extract_count(index: &SparsePoly, exponents: &[u64]) -> Result<Count> {
    if exponents.len() != index.num_vars {
        return Err(Error::VariableMismatch {
            left: index.num_vars,
            right: exponents.len(),
        });
    }
    let raw = index
        .coefficient(exponents)
        .cloned()
        .unwrap_or_else(Count::zero);
    let (q, r) = num_integer::Integer::div_rem(&raw, &Count::from(index.scale));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonIntegral {
            context: "cycle index extraction",
            numerator: raw,
            denominator: index.scale,
        })
    }
}
