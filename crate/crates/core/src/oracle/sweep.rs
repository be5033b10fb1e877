use rayon::prelude::*;
use serde::Serialize;

use super::{check_size, Enumeration, Mode, SupportIterator};
use crate::rational::ratio;
use crate::{MultiIndex, MultinomialParams, Rational, Result};

/// Result of checking one closed-form value against enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub params: MultinomialParams,
    pub p: MultiIndex,
    pub mode: Mode,
    pub formula: Rational,
    pub oracle: Rational,
    pub pass: bool,
}

#[derive(Serialize)]
struct ReportLine<'a> {
    m: u64,
    x: Vec<String>,
    p: &'a [u32],
    mode: &'static str,
    formula: String,
    oracle: String,
    pass: bool,
}

impl OracleReport {
    pub fn new(
        params: MultinomialParams,
        p: MultiIndex,
        mode: Mode,
        formula: Rational,
        oracle: Rational,
    ) -> Self {
        let pass = formula == oracle;
        OracleReport {
            params,
            p,
            mode,
            formula,
            oracle,
            pass,
        }
    }

    /// One-line JSON: `{"m":..,"x":[..],"p":[..],"mode":..,"formula":..,"oracle":..,"pass":..}`.
    pub fn to_json_line(&self) -> String {
        let line = ReportLine {
            m: self.params.m(),
            x: self.params.x().iter().map(ToString::to_string).collect(),
            p: self.p.exponents(),
            mode: self.mode.as_str(),
            formula: self.formula.to_string(),
            oracle: self.oracle.to_string(),
            pass: self.pass,
        };
        serde_json::to_string(&line).expect("plain data always serializes")
    }
}

/// Candidate values for each probability coordinate. A sweep in dimension
/// `d` uses every `d`-tuple of grid values whose sum is at most 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityGrid {
    values: Vec<Rational>,
}

impl Default for ProbabilityGrid {
    /// `{0, 1/6, 1/4, 1/3, 1/2}`
    fn default() -> Self {
        ProbabilityGrid {
            values: vec![ratio(0, 1), ratio(1, 6), ratio(1, 4), ratio(1, 3), ratio(1, 2)],
        }
    }
}

impl ProbabilityGrid {
    pub fn new(values: Vec<Rational>) -> Self {
        ProbabilityGrid { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Every valid parameter vector of length `d`, in grid order.
    pub fn vectors(&self, d: usize) -> Vec<Vec<Rational>> {
        let mut out = vec![Vec::new()];
        for _ in 0..d {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Rational>| {
                    self.values.iter().map(move |v| {
                        let mut next = prefix.clone();
                        next.push(v.clone());
                        next
                    })
                })
                .filter(|v| v.iter().sum::<Rational>() <= ratio(1, 1))
                .collect();
        }
        out
    }
}

/// Checks the non-central, central and factorial formulas against exact
/// enumeration for every `m <= max_m`, every `d` in `dims`, every grid
/// vector and every exponent vector of total order `<= max_order`.
///
/// Instances are evaluated in parallel; reports come back ordered by
/// `(m, d, grid vector, p, mode)`.
pub fn verify_sweep(
    max_m: u64,
    dims: &[usize],
    max_order: u32,
    grid: &ProbabilityGrid,
) -> Result<Vec<OracleReport>> {
    let mut dims = dims.to_vec();
    dims.sort_unstable();
    dims.dedup();
    if let Some(&d) = dims.last() {
        check_size(max_m, d)?;
    }

    let mut instances = Vec::new();
    for m in 0..=max_m {
        for &d in &dims {
            for x in grid.vectors(d) {
                instances.push(MultinomialParams::new(m, x)?);
            }
        }
    }

    let per_instance: Vec<Vec<OracleReport>> = instances
        .par_iter()
        .map(|params| check_instance(params, max_order))
        .collect::<Result<_>>()?;
    Ok(per_instance.into_iter().flatten().collect())
}

fn check_instance(params: &MultinomialParams, max_order: u32) -> Result<Vec<OracleReport>> {
    let support = Enumeration::new(params)?;
    let mut reports = Vec::new();
    for p in SupportIterator::new(u64::from(max_order), params.dim()) {
        for mode in Mode::ALL {
            let formula = mode.formula(params, &p)?;
            let oracle = support.moment(&p, mode)?;
            reports.push(OracleReport::new(params.clone(), p.clone(), mode, formula, oracle));
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn grid_vectors_respect_simplex() {
        let g = ProbabilityGrid::default();
        assert_eq!(g.vectors(1).len(), 5);
        let two = g.vectors(2);
        assert!(two.iter().all(|v| v.iter().sum::<Rational>() <= ratio(1, 1)));
        // pairs from {0,1/6,1/4,1/3,1/2} with sum <= 1: all 25
        assert_eq!(two.len(), 25);
        assert_eq!(g.vectors(0), vec![Vec::<Rational>::new()]);
    }

    #[test]
    fn small_sweep_passes() {
        let reports = verify_sweep(3, &[1, 2], 3, &ProbabilityGrid::default()).unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.pass));
    }

    #[test]
    fn zero_trials_sweep() {
        let reports = verify_sweep(0, &[1, 2, 3], 4, &ProbabilityGrid::default()).unwrap();
        assert!(reports.iter().all(|r| r.pass));
        for r in reports.iter().filter(|r| r.p.order() > 0) {
            assert_eq!(r.formula, ratio(0, 1));
        }
    }

    #[test]
    fn empty_dims() {
        assert!(verify_sweep(6, &[], 4, &ProbabilityGrid::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn guard_applies_to_sweep() {
        assert!(matches!(
            verify_sweep(1000, &[4], 1, &ProbabilityGrid::default()),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn report_json_line() {
        let params = MultinomialParams::new(10, vec![ratio(1, 4)]).unwrap();
        let r = OracleReport::new(
            params,
            MultiIndex::from(vec![2]),
            Mode::Central,
            ratio(15, 8),
            ratio(15, 8),
        );
        assert_eq!(
            r.to_json_line(),
            r#"{"m":10,"x":["1/4"],"p":[2],"mode":"central","formula":"15/8","oracle":"15/8","pass":true}"#
        );
        let bad = OracleReport::new(
            r.params.clone(),
            r.p.clone(),
            Mode::Noncentral,
            ratio(1, 1),
            ratio(2, 1),
        );
        assert!(!bad.pass);
    }
}
