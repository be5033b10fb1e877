#![allow(dead_code)]

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use multinomial_moments::symbolic::{Basis, Poly};
use multinomial_moments::{MultinomialParams, Rational};
use num_bigint::BigInt;

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn params(m: u64, x: &[Rational]) -> MultinomialParams {
    MultinomialParams::new(m, x.to_vec()).unwrap()
}

/// A term keyed by m-degree and sparse variable exponents `{var: exp}` with
/// 1-based variable labels.
pub type TermKey = (u32, BTreeMap<u32, u32>);

/// Parses one term in the text notation, e.g. `966 m^(3) x1 x2^2` or `-m x1`.
pub fn parse_term(s: &str) -> (TermKey, BigInt) {
    let mut coeff = BigInt::from(1);
    let mut m_degree = 0;
    let mut vars = BTreeMap::new();
    let s = s.trim();
    let (sign, s) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s),
    };
    for tok in s.split_whitespace() {
        if let Ok(c) = tok.parse::<BigInt>() {
            coeff = c;
        } else if tok == "m" {
            m_degree = 1;
        } else if let Some(k) = tok.strip_prefix("m^(").and_then(|t| t.strip_suffix(')')) {
            m_degree = k.parse().unwrap();
        } else if let Some(k) = tok.strip_prefix("m^") {
            m_degree = k.parse().unwrap();
        } else if let Some(v) = tok.strip_prefix('x') {
            let (var, exp) = match v.split_once('^') {
                Some((var, exp)) => (var.parse().unwrap(), exp.parse().unwrap()),
                None => (v.parse().unwrap(), 1),
            };
            *vars.entry(var).or_insert(0) += exp;
        } else {
            panic!("unrecognised token {tok:?} in {s:?}");
        }
    }
    ((m_degree, vars), coeff * sign)
}

pub fn term_text(key: &TermKey, coeff: &BigInt) -> String {
    let mut parts = Vec::new();
    if *coeff != BigInt::from(1) {
        parts.push(coeff.to_string());
    }
    match key.0 {
        0 => {}
        1 => parts.push("m".into()),
        k => parts.push(format!("m^({k})")),
    }
    for (v, e) in &key.1 {
        parts.push(if *e == 1 { format!("x{v}") } else { format!("x{v}^{e}") });
    }
    parts.join(" ")
}

/// Published table lines: `(pattern, {term: coeff})`.
pub fn load_table(text: &str) -> Vec<(Vec<u32>, BTreeMap<TermKey, BigInt>)> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|line| {
            let (pat, terms) = line.split_once(':').unwrap();
            let pattern = pat.split(',').map(|p| p.trim().parse().unwrap()).collect();
            let mut map = BTreeMap::new();
            for t in terms.split(" + ") {
                let (k, c) = parse_term(t);
                *map.entry(k).or_insert_with(BigInt::default) += c;
            }
            (pattern, map)
        })
        .collect()
}

pub fn poly_terms<B: Basis>(poly: &Poly<B>) -> BTreeMap<TermKey, BigInt> {
    poly.terms()
        .map(|(k, mono, c)| {
            let vars = mono
                .degrees()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i as u32 + 1, e))
                .collect();
            ((k, vars), c.clone())
        })
        .collect()
}

/// Minimal dense polynomial over variables `[m, x1, x2, x3, x4]` with
/// ordinary powers, used to expand factored closed forms independently of
/// the library.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct P(pub BTreeMap<[u32; 5], i64>);

impl P {
    pub fn c(v: i64) -> P {
        let mut t = BTreeMap::new();
        if v != 0 {
            t.insert([0; 5], v);
        }
        P(t)
    }

    fn var(i: usize) -> P {
        let mut e = [0; 5];
        e[i] = 1;
        P(BTreeMap::from([(e, 1)]))
    }

    pub fn m() -> P {
        P::var(0)
    }

    pub fn x(i: usize) -> P {
        assert!((1..=4).contains(&i));
        P::var(i)
    }

    fn normalize(mut self) -> P {
        self.0.retain(|_, c| *c != 0);
        self
    }

    /// Keys as `(m degree, {var: exp})`.
    pub fn terms(&self) -> BTreeMap<TermKey, BigInt> {
        self.0
            .iter()
            .map(|(e, c)| {
                let vars = (1..5)
                    .filter(|&i| e[i] > 0)
                    .map(|i| (i as u32, e[i]))
                    .collect();
                ((e[0], vars), BigInt::from(*c))
            })
            .collect()
    }
}

impl Add for P {
    type Output = P;
    fn add(mut self, rhs: P) -> P {
        for (e, c) in rhs.0 {
            *self.0.entry(e).or_insert(0) += c;
        }
        self.normalize()
    }
}

impl Neg for P {
    type Output = P;
    fn neg(self) -> P {
        P(self.0.into_iter().map(|(e, c)| (e, -c)).collect())
    }
}

impl Sub for P {
    type Output = P;
    fn sub(self, rhs: P) -> P {
        self + (-rhs)
    }
}

impl Mul for P {
    type Output = P;
    fn mul(self, rhs: P) -> P {
        let mut out = BTreeMap::new();
        for (a, ca) in &self.0 {
            for (b, cb) in &rhs.0 {
                let mut e = [0; 5];
                for i in 0..5 {
                    e[i] = a[i] + b[i];
                }
                *out.entry(e).or_insert(0) += ca * cb;
            }
        }
        P(out).normalize()
    }
}

impl Mul<P> for i64 {
    type Output = P;
    fn mul(self, rhs: P) -> P {
        P::c(self) * rhs
    }
}

/// Closed forms of the central moments of orders 2 to 4, in factored form.
pub fn boxed_central_forms() -> Vec<(Vec<u32>, P)> {
    let m = P::m;
    let x = P::x;
    let one = || P::c(1);
    vec![
        (vec![2], m() * x(1) * (one() - x(1))),
        (vec![1, 1], -(m() * x(1) * x(2))),
        (vec![3], m() * x(1) * (x(1) - one()) * (2 * x(1) - one())),
        (vec![2, 1], m() * x(1) * x(2) * (2 * x(1) - one())),
        (vec![1, 1, 1], 2 * (m() * x(1) * x(2) * x(3))),
        (
            vec![4],
            3 * (m() * m() * x(1) * x(1) * (x(1) - one()) * (x(1) - one()))
                + m() * x(1) * (one() - x(1)) * (6 * (x(1) * x(1)) - 6 * x(1) + one()),
        ),
        (
            vec![3, 1],
            m() * x(1) * x(2) * (3 * ((m() - P::c(2)) * x(1) * (x(1) - one())) - one()),
        ),
        (
            vec![2, 2],
            m() * (m() - P::c(2)) * x(1) * x(2) * (3 * (x(1) * x(2)) - (x(1) + x(2)) + one())
                + m() * x(1) * x(2),
        ),
        (
            vec![2, 1, 1],
            m() * (m() - P::c(2)) * x(1) * x(2) * x(3) * (3 * x(1) - one()),
        ),
        (
            vec![1, 1, 1, 1],
            3 * (m() * (m() - P::c(2)) * x(1) * x(2) * x(3) * x(4)),
        ),
    ]
}

/// `S2(p, k)` for `0 <= k <= p <= 8`, as tabulated in the literature.
pub const STIRLING_TABLE: [&[u64]; 9] = [
    &[1],
    &[0, 1],
    &[0, 1, 1],
    &[0, 1, 3, 1],
    &[0, 1, 7, 6, 1],
    &[0, 1, 15, 25, 10, 1],
    &[0, 1, 31, 90, 65, 15, 1],
    &[0, 1, 63, 301, 350, 140, 21, 1],
    &[0, 1, 127, 966, 1701, 1050, 266, 28, 1],
];
