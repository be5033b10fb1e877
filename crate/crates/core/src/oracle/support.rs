use crate::MultiIndex;

/// Walks `{k ∈ ℕ₀^d : Σ k_i <= m}` in lexicographic order, visiting each
/// point once. There are `C(m + d, d)` of them.
#[derive(Debug, Clone)]
pub struct SupportIterator {
    m: u64,
    cursor: Option<Vec<u32>>,
    sum: u64,
}

impl SupportIterator {
    pub fn new(m: u64, d: usize) -> Self {
        SupportIterator {
            m,
            cursor: Some(vec![0; d]),
            sum: 0,
        }
    }
}

impl Iterator for SupportIterator {
    type Item = MultiIndex;

    fn next(&mut self) -> Option<MultiIndex> {
        let current = self.cursor.take()?;
        let out = MultiIndex::from(current.clone());
        let mut k = current;
        let Some(last) = k.len().checked_sub(1) else {
            // d = 0: the single empty point
            return Some(out);
        };
        if self.sum < self.m {
            k[last] += 1;
            self.sum += 1;
            self.cursor = Some(k);
        } else if let Some(j) = k.iter().rposition(|&v| v > 0).filter(|&j| j > 0) {
            self.sum -= u64::from(k[j]) - 1;
            k[j] = 0;
            k[j - 1] += 1;
            self.cursor = Some(k);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;
    use num_bigint::BigUint;
    use std::collections::HashSet;

    #[test]
    fn small_support_in_order() {
        let pts: Vec<Vec<u32>> = SupportIterator::new(2, 2)
            .map(|k| k.exponents().to_vec())
            .collect();
        assert_eq!(
            pts,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![2, 0]
            ]
        );
    }

    #[test]
    fn cardinality_and_uniqueness() {
        for m in 0..=10u64 {
            for d in 0..=4usize {
                let pts: Vec<MultiIndex> = SupportIterator::new(m, d).collect();
                assert_eq!(
                    BigUint::from(pts.len()),
                    binomial(m as usize + d, d),
                    "m={m} d={d}"
                );
                let unique: HashSet<_> = pts.iter().cloned().collect();
                assert_eq!(unique.len(), pts.len());
                assert!(pts.iter().all(|k| k.order() <= m));
                assert!(pts.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}
