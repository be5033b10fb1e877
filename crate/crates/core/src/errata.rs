//! Misprints in the widely circulated order-8 table of explicit non-central
//! moment formulas.
//!
//! Each entry names the pattern, the term as printed (after multiplying out
//! the common prefactor, in the crate's text notation, using the printed
//! variable labels) and the term the Stirling expansion actually produces.
//! `catalog` output always follows the expansion; these records only explain
//! where a reader comparing against the printed table will see a difference.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Erratum {
    pub pattern: &'static [u32],
    /// `None` when the printed formula omits the term entirely.
    pub printed: Option<&'static str>,
    /// `None` when the printed term should not be there at all.
    pub expected: Option<&'static str>,
    pub note: &'static str,
}

pub const KNOWN: &[Erratum] = &[
    Erratum {
        pattern: &[8],
        printed: Some("966 m^(3) x1 x2^2"),
        expected: Some("966 m^(3) x1^3"),
        note: "variable label x_{j2} printed where x_{j1} is meant",
    },
    Erratum {
        pattern: &[7, 1],
        printed: Some("m x1 x2"),
        expected: Some("m^(2) x1 x2"),
        note: "leading falling factorial printed as m instead of m^(2)",
    },
    Erratum {
        pattern: &[5, 3],
        printed: Some("m^(6) x1 x2 x4^4"),
        expected: Some("m^(6) x1^5 x2"),
        note: "variable label x_{j4} printed where x_{j1} is meant",
    },
    Erratum {
        pattern: &[3, 2, 2, 1],
        printed: None,
        expected: Some("m^(6) x1^3 x2 x3 x4"),
        note: "the x_{j1}^2 summand inside the m^(6) group is missing",
    },
];

impl fmt::Display for Erratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pattern: Vec<String> = self.pattern.iter().map(u32::to_string).collect();
        write!(
            f,
            "({}): printed `{}`, expansion gives `{}` ({})",
            pattern.join(","),
            self.printed.unwrap_or("<missing>"),
            self.expected.unwrap_or("<none>"),
            self.note
        )
    }
}
