//! Stirling numbers of the second kind, binomial coefficients and falling
//! factorials, all exact.
//!
//! Stirling and binomial lookups go through process-wide triangular tables
//! that grow on demand behind an `RwLock`; readers never observe a partially
//! grown table.

use std::ops::{Mul, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{FromPrimitive, One, Zero};

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// Triangular table of `S2(p, k)` for `0 <= k <= p <= max_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    rows: Vec<Vec<Natural>>,
}

impl StirlingTable {
    pub fn new(max_p: usize) -> Self {
        let mut table = StirlingTable {
            rows: vec![vec![Natural::one()]],
        };
        table.grow_to(max_p);
        table
    }

    pub fn max_p(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S2(p, k)`, or `None` when `p` lies beyond the table. `k > p` is zero.
    pub fn get(&self, p: usize, k: usize) -> Option<Natural> {
        let row = self.rows.get(p)?;
        Some(row.get(k).cloned().unwrap_or_default())
    }

    pub fn row(&self, p: usize) -> Option<&[Natural]> {
        self.rows.get(p).map(Vec::as_slice)
    }

    fn grow_to(&mut self, max_p: usize) {
        while self.rows.len() <= max_p {
            let prev = self.rows.last().expect("row 0 always present");
            let p = prev.len();
            let mut row = Vec::with_capacity(p + 1);
            row.push(Natural::zero());
            for k in 1..=p {
                // S2(p,k) = k S2(p-1,k) + S2(p-1,k-1)
                let carry = prev.get(k).map(|s| s * k).unwrap_or_default();
                row.push(carry + &prev[k - 1]);
            }
            self.rows.push(row);
        }
    }
}

fn stirling_memo() -> &'static RwLock<StirlingTable> {
    static TABLE: OnceLock<RwLock<StirlingTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(StirlingTable::new(16)))
}

/// Stirling number of the second kind: the number of ways to partition a
/// set of `p` elements into `k` non-empty blocks. Zero when `k > p`.
pub fn stirling2(p: usize, k: usize) -> Natural {
    if k > p {
        return Natural::zero();
    }
    {
        let table = stirling_memo().read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(p, k) {
            return v;
        }
    }
    let mut table = stirling_memo().write().unwrap_or_else(|e| e.into_inner());
    table.grow_to(p);
    table.get(p, k).expect("table grown to p")
}

fn binomial_memo() -> &'static RwLock<Vec<Vec<Natural>>> {
    static TABLE: OnceLock<RwLock<Vec<Vec<Natural>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![vec![Natural::one()]]))
}

/// Binomial coefficient `p! / (l! (p - l)!)`, zero when `l > p`.
pub fn binomial(p: usize, l: usize) -> Natural {
    if l > p {
        return Natural::zero();
    }
    {
        let rows = binomial_memo().read().unwrap_or_else(|e| e.into_inner());
        if let Some(row) = rows.get(p) {
            return row[l].clone();
        }
    }
    let mut rows = binomial_memo().write().unwrap_or_else(|e| e.into_inner());
    while rows.len() <= p {
        let prev = rows.last().expect("row 0 always present");
        let n = prev.len();
        let row: Vec<Natural> = (0..=n)
            .map(|i| match i {
                0 => Natural::one(),
                i if i == n => Natural::one(),
                i => &prev[i - 1] + &prev[i],
            })
            .collect();
        rows.push(row);
    }
    rows[p][l].clone()
}

/// Falling factorial `m (m-1) ... (m-k+1)`, with `m^(0) = 1`.
///
/// Works for any exact number type. For a non-negative integer `m` and
/// `k > m` the product hits the factor `m - m` and the result is zero;
/// the loop stops there, so unsigned types never underflow.
pub fn falling_factorial<T>(m: &T, k: usize) -> T
where
    T: Clone + PartialEq + One + Zero + FromPrimitive + Mul<Output = T>,
    for<'a> &'a T: Sub<T, Output = T>,
{
    let mut acc = T::one();
    for i in 0..k {
        let i = T::from_usize(i).expect("exact types represent every usize");
        if &i == m {
            return T::zero();
        }
        acc = acc * (m - i);
    }
    acc
}

/// Bell number `B_p`, the row sum of the Stirling triangle.
pub fn bell(p: usize) -> Natural {
    (0..=p).map(|k| stirling2(p, k)).sum()
}
