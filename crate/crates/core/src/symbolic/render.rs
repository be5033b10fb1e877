//! Text, LaTeX and JSON renderings of moment polynomials.
//!
//! The JSON encoding is
//!
//! ```text
//! {"pattern":[p1,...],"central":bool,"basis":"falling"|"ordinary",
//!  "terms":[{"m_degree":k,"monomial":[e1,...],"coeff":"<signed integer>"},...]}
//! ```
//!
//! with terms in canonical order and coefficients as decimal strings.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{Basis, Falling, Monomial, Pattern, Poly};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse {
                what: "format",
                input: s.to_string(),
            }),
        }
    }
}

pub fn render<B: Basis>(poly: &Poly<B>, format: Format) -> String {
    match format {
        Format::Text => render_expr::<B>(poly, false),
        Format::Latex => render_expr::<B>(poly, true),
        Format::Json => serde_json::to_string(&PolyJson::from_poly(poly))
            .expect("plain data always serializes"),
    }
}

fn is_falling<B: Basis>() -> bool {
    B::NAME == Falling::NAME
}

fn render_expr<B: Basis>(poly: &Poly<B>, latex: bool) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, mono, c)) in poly.terms().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut factors: Vec<String> = Vec::new();
        let magnitude = c.abs();
        let bare = k == 0 && mono.degrees().iter().all(|&e| e == 0);
        if !magnitude.is_one() || bare {
            factors.push(magnitude.to_string());
        }
        if k > 0 {
            factors.push(m_factor(k, is_falling::<B>(), latex));
        }
        for (j, &e) in mono.degrees().iter().enumerate() {
            if e > 0 {
                factors.push(x_factor(j + 1, e, latex));
            }
        }
        out.push_str(&factors.join(" "));
    }
    out
}

fn m_factor(k: u32, falling: bool, latex: bool) -> String {
    match (k, falling, latex) {
        (1, _, _) => "m".to_string(),
        (_, true, false) => format!("m^({k})"),
        (_, true, true) => format!("m^{{({k})}}"),
        (_, false, false) => format!("m^{k}"),
        (_, false, true) => format!("m^{{{k}}}"),
    }
}

fn x_factor(index: usize, e: u32, latex: bool) -> String {
    let mut s = String::new();
    if latex {
        write!(s, "x_{{{index}}}").unwrap();
        if e > 1 {
            write!(s, "^{{{e}}}").unwrap();
        }
    } else {
        write!(s, "x{index}").unwrap();
        if e > 1 {
            write!(s, "^{e}").unwrap();
        }
    }
    s
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    pattern: Vec<u32>,
    central: bool,
    basis: String,
    terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    m_degree: u32,
    monomial: Vec<u32>,
    coeff: String,
}

impl PolyJson {
    fn from_poly<B: Basis>(poly: &Poly<B>) -> Self {
        PolyJson {
            pattern: poly.pattern().exponents().to_vec(),
            central: poly.is_central(),
            basis: B::NAME.to_string(),
            terms: poly
                .terms()
                .map(|(k, mono, c)| TermJson {
                    m_degree: k,
                    monomial: mono.degrees().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl<B: Basis> Poly<B> {
    /// Parses the JSON encoding produced by [`render`] with [`Format::Json`].
    /// The basis tag must match `B` and the pattern must be canonical.
    pub fn from_json(input: &str) -> Result<Self> {
        let err = |what: &'static str| Error::Parse {
            what,
            input: input.to_string(),
        };
        let raw: PolyJson = serde_json::from_str(input).map_err(|_| err("moment polynomial"))?;
        if raw.basis != B::NAME {
            return Err(err("polynomial basis"));
        }
        let pattern = Pattern::new(raw.pattern.clone())?;
        if pattern.exponents() != raw.pattern.as_slice() {
            return Err(err("canonical pattern"));
        }
        let mut poly = Poly::zero(pattern, raw.central);
        for t in raw.terms {
            if t.monomial.len() != poly.pattern().arity() {
                return Err(err("monomial"));
            }
            let coeff: BigInt = t.coeff.parse().map_err(|_| err("coefficient"))?;
            poly.add_term(t.m_degree, Monomial::new(t.monomial), coeff);
        }
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{symbolic_central, symbolic_noncentral, to_ordinary, MomentPoly, OrdinaryPoly};

    fn pat(v: &[u32]) -> Pattern {
        Pattern::new(v.to_vec()).unwrap()
    }

    #[test]
    fn text_rendering() {
        assert_eq!(render(&symbolic_noncentral(&pat(&[1, 1])), Format::Text), "m^(2) x1 x2");
        assert_eq!(
            render(&symbolic_noncentral(&pat(&[3])), Format::Text),
            "m x1 + 3 m^(2) x1^2 + m^(3) x1^3"
        );
        assert_eq!(
            render(&to_ordinary(&symbolic_central(&pat(&[1, 1]))), Format::Text),
            "-m x1 x2"
        );
        assert_eq!(
            render(&to_ordinary(&symbolic_central(&pat(&[2]))), Format::Text),
            "m x1 - m x1^2"
        );
    }

    #[test]
    fn latex_rendering() {
        assert_eq!(
            render(&symbolic_noncentral(&pat(&[2])), Format::Latex),
            "m x_{1} + m^{(2)} x_{1}^{2}"
        );
        assert_eq!(
            render(&to_ordinary(&symbolic_central(&pat(&[1, 1, 1, 1]))), Format::Latex),
            "-6 m x_{1} x_{2} x_{3} x_{4} + 3 m^{2} x_{1} x_{2} x_{3} x_{4}"
        );
    }

    #[test]
    fn zero_renders_as_zero() {
        let zero = symbolic_central(&pat(&[1]));
        for f in [Format::Text, Format::Latex] {
            assert_eq!(render(&zero, f), "0");
        }
        assert_eq!(
            render(&zero, Format::Json),
            r#"{"pattern":[1],"central":true,"basis":"falling","terms":[]}"#
        );
    }

    #[test]
    fn constant_term_prints_coefficient() {
        let mut p = MomentPoly::zero(pat(&[1]), false);
        p.add_term(0, Monomial::new(vec![0]), BigInt::one());
        assert_eq!(render(&p, Format::Text), "1");
    }

    #[test]
    fn json_layout() {
        assert_eq!(
            render(&symbolic_noncentral(&pat(&[2])), Format::Json),
            r#"{"pattern":[2],"central":false,"basis":"falling","terms":[{"m_degree":1,"monomial":[1],"coeff":"1"},{"m_degree":2,"monomial":[2],"coeff":"1"}]}"#
        );
    }

    #[test]
    fn json_round_trip_and_basis_check() {
        let p = symbolic_central(&pat(&[3, 1]));
        let json = render(&p, Format::Json);
        assert_eq!(MomentPoly::from_json(&json).unwrap(), p);
        assert!(OrdinaryPoly::from_json(&json).is_err());
        let o = to_ordinary(&p);
        assert_eq!(OrdinaryPoly::from_json(&render(&o, Format::Json)).unwrap(), o);
        assert!(MomentPoly::from_json(r#"{"pattern":[1,2],"central":false,"basis":"falling","terms":[]}"#).is_err());
        assert!(MomentPoly::from_json("not json").is_err());
    }
}
