/// Significant digits used for every number written to a report.
pub const REPORT_SIGNIFICANT_DIGITS: usize = 12;

/// Rounds `x` to [`REPORT_SIGNIFICANT_DIGITS`] significant digits.
pub fn round_report(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{:.*e}", REPORT_SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

/// Shortest decimal text for `x` rounded to report precision: `1`, `1.33333333333`, `0.5`.
pub fn format_report(x: f64) -> String {
    round_report(x).to_string()
}
