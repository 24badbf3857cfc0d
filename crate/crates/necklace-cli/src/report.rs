use serde::Serialize;

/// One counted tuple, ready for text, JSON, or CSV output.
///
/// `value` is always an exact decimal integer string, or an exact fraction
/// like `3/2` in paper-literal mode; no count ever passes through floating
/// point.
#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub counts: Vec<u64>,
    #[serde(rename = "N")]
    pub n: u64,
    pub group: &'static str,
    pub mode: &'static str,
    pub case: Option<&'static str>,
    pub method: &'static str,
    pub value: String,
    pub diagnostic: bool,
}

pub const CSV_HEADER: &str = "counts,N,group,mode,case,method,value";

pub fn join_counts(counts: &[u64]) -> String {
    counts
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl CountReport {
    pub fn text_line(&self) -> String {
        let mut line = format!(
            "counts={} N={} group={} mode={} case={} method={} value={}",
            join_counts(&self.counts),
            self.n,
            self.group,
            self.mode,
            self.case.unwrap_or("-"),
            self.method,
            self.value
        );
        if self.diagnostic {
            line.push_str(" diagnostic=true");
        }
        line
    }

    /// Row under [`CSV_HEADER`]; the counts field is quoted since it holds
    /// commas of its own.
    pub fn csv_row(&self) -> String {
        format!(
            "\"{}\",{},{},{},{},{},{}",
            join_counts(&self.counts),
            self.n,
            self.group,
            self.mode,
            self.case.unwrap_or(""),
            self.method,
            self.value
        )
    }
}
