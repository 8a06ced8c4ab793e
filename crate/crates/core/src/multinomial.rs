//! Multinomial coefficients and exhaustive checks of the two multinomial inequalities.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `n! / (m_1! ... m_k!)`. Parts must be positive and sum to `n`.
pub fn multinomial(n: u64, parts: &[u64]) -> Result<u128> {
    if parts.is_empty() || parts.contains(&0) || parts.iter().sum::<u64>() != n {
        return Err(Error::InvalidPartition {
            n,
            parts: parts.to_vec(),
        });
    }
    Ok(multinomial_counts(parts.iter().map(|&m| m as usize)))
}

/// Multinomial of arbitrary non-negative counts (zeros allowed), total implied.
pub(crate) fn multinomial_counts(counts: impl IntoIterator<Item = usize>) -> u128 {
    let mut acc: u128 = 1;
    let mut total: u128 = 0;
    for m in counts {
        for i in 1..=m as u128 {
            total += 1;
            acc = acc * total / i;
        }
    }
    acc
}

/// A composition `(m_1, ..., m_k)` of `n` violating one of the inequalities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionViolation {
    pub n: u64,
    pub parts: Vec<u64>,
    pub value: u128,
}

/// Every composition of `n` into positive parts, in lexicographic order.
pub fn compositions(n: u64) -> Vec<Vec<u64>> {
    fn rec(rest: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            rec(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// The multinomial is `< n` only for the single part `m_1 = n`.
/// `slack` raises the threshold (`< n + slack`) for harness self-tests.
pub fn verify_cmb1_with(n_max: u64, slack: u64) -> Vec<CompositionViolation> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for parts in compositions(n) {
            let value = multinomial(n, &parts).expect("compositions are valid");
            let trivial = parts.len() == 1;
            if value < u128::from(n + slack) && !trivial {
                out.push(CompositionViolation { n, parts, value });
            }
        }
    }
    out
}

pub fn verify_cmb1(n_max: u64) -> Vec<CompositionViolation> {
    verify_cmb1_with(n_max, 0)
}

/// For two or more parts, the multinomial is `<= 2(n-1)` only for `{1, n-1}`
/// or for `n = 4` with parts `2, 2`.
pub fn verify_cmb2_with(n_max: u64, slack: u64) -> Vec<CompositionViolation> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for parts in compositions(n) {
            if parts.len() < 2 {
                continue;
            }
            let value = multinomial(n, &parts).expect("compositions are valid");
            if value > u128::from(2 * (n - 1) + slack) {
                continue;
            }
            let allowed = parts.len() == 2
                && ((parts[0] == 1 && parts[1] == n - 1)
                    || (parts[1] == 1 && parts[0] == n - 1)
                    || (n == 4 && parts == [2, 2]));
            if !allowed {
                out.push(CompositionViolation { n, parts, value });
            }
        }
    }
    out
}

pub fn verify_cmb2(n_max: u64) -> Vec<CompositionViolation> {
    verify_cmb2_with(n_max, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(multinomial(4, &[2, 2]).unwrap(), 6);
        for n in 2..10 {
            assert_eq!(multinomial(n, &[1, n - 1]).unwrap(), u128::from(n));
        }
        assert_eq!(multinomial(9, &[4, 1, 4]).unwrap(), 630);
        assert_eq!(multinomial(5, &[5]).unwrap(), 1);
    }

    #[test]
    fn invalid_partitions() {
        assert!(matches!(
            multinomial(4, &[2, 1]),
            Err(Error::InvalidPartition { .. })
        ));
        assert!(multinomial(4, &[4, 0]).is_err());
        assert!(multinomial(0, &[]).is_err());
    }

    #[test]
    fn composition_count() {
        for n in 1..=10u64 {
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn verifiers_are_empty() {
        assert!(verify_cmb1(12).is_empty());
        assert!(verify_cmb2(12).is_empty());
    }

    #[test]
    fn verifiers_detect_tightened_bounds() {
        // (1, n-1) attains n exactly
        assert!(!verify_cmb1_with(6, 1).is_empty());
        // the nearest disallowed value is (1, 1, 1) = 6 against 2(n-1) = 4
        assert!(verify_cmb2_with(6, 1).is_empty());
        let v = verify_cmb2_with(6, 2);
        assert_eq!(v[0].parts, vec![1, 1, 1]);
    }
}
