//! Deterministic number formatting and the CSV/JSON sinks.
//!
//! Every float the tool emits goes through [`fmt6`]: six significant digits,
//! lowercase scientific once the magnitude drops below 1e-3. The format is a
//! pure function of the value, so identical runs produce identical bytes.

use std::fmt::Write as _;

/// Six significant digits; `x.xxxxxe-d` below 1e-3.
pub fn fmt6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let a = x.abs();
    if a < 1e-3 {
        format!("{x:.5e}")
    } else {
        let mut mag = a.log10().floor() as i32;
        // log10 of exact powers of ten can land just below the integer.
        if a >= 10f64.powi(mag + 1) {
            mag += 1;
        }
        let dec = (5 - mag).max(0) as usize;
        format!("{x:.dec$}")
    }
}

/// One CSV line from string cells.
pub fn csv_line(cells: &[String]) -> String {
    cells.join(",")
}

/// Assembles a full CSV document (header + rows, newline-terminated).
pub fn csv_document(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", header.join(","));
    for row in rows {
        let _ = writeln!(out, "{}", csv_line(row));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt6_pins_the_documented_format() {
        assert_eq!(fmt6(0.0), "0");
        assert_eq!(fmt6(0.0554), "0.0554000");
        assert_eq!(fmt6(1234.5678), "1234.57");
        assert_eq!(fmt6(0.000999), "9.99000e-4");
        assert_eq!(fmt6(0.001), "0.00100000");
        assert_eq!(fmt6(-0.25), "-0.250000");
        assert_eq!(fmt6(1.0), "1.00000");
    }

    #[test]
    fn csv_rows_join_with_commas() {
        let doc = csv_document(&["a", "b"], &[vec!["1".into(), "2".into()]]);
        assert_eq!(doc, "a,b\n1,2\n");
    }
}
