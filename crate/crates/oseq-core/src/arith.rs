//! Binomial coefficients, polynomial-ring dimension counts, and Macaulay's
//! binomial representation with its growth bound.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact binomial coefficient C(n, k); returns 0 when k > n.
pub fn binom(n: u64, k: u64) -> BigUint {
    binom_big(&BigUint::from(n), k)
}

/// C(n, k) for arbitrary-precision n. Computed multiplicatively; every
/// intermediate division is exact.
pub fn binom_big(n: &BigUint, k: u64) -> BigUint {
    if BigUint::from(k) > *n {
        return BigUint::zero();
    }
    let mut result = BigUint::one();
    for j in 0..k {
        result = result * (n - BigUint::from(j)) / BigUint::from(j + 1);
    }
    result
}

/// Number of degree-j monomials in r variables: C(r-1+j, j).
pub fn dim_ring(r: usize, j: usize) -> BigUint {
    assert!(r >= 1, "dim_ring requires at least one variable");
    binom((r - 1 + j) as u64, j as u64)
}

/// The i-th Macaulay representation of a positive integer:
/// h = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j) with
/// a_i > a_{i-1} > ... > a_j >= j >= 1. Unique for fixed i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    pub index: usize,
    /// Pairs (a_j, j), stored with j descending from `index`.
    pub terms: Vec<(BigUint, usize)>,
}

impl MacaulayRep {
    /// Evaluate the represented integer exactly.
    pub fn value(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(a, j)| binom_big(a, *j as u64))
            .sum()
    }

    /// The Macaulay bound h^{<i>} = sum of C(a_j + 1, j + 1) over the terms.
    pub fn growth(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(a, j)| binom_big(&(a + 1u32), (*j + 1) as u64))
            .sum()
    }
}

/// Largest a with C(a, k) <= target, given target >= 1. Monotone in a, so a
/// doubling phase followed by binary search suffices.
fn greedy_top(target: &BigUint, k: u64) -> BigUint {
    debug_assert!(!target.is_zero());
    let mut lo = BigUint::from(k); // C(k, k) = 1 <= target
    let mut hi = &lo + 1u32;
    while binom_big(&hi, k) <= *target {
        lo = hi.clone();
        hi = &hi * 2u32;
    }
    // invariant: binom(lo) <= target < binom(hi)
    while &lo + 1u32 < hi {
        let mid = (&lo + &hi) / 2u32;
        if binom_big(&mid, k) <= *target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The unique greedy i-th binomial representation of h >= 1.
pub fn macaulay_rep(h: &BigUint, i: usize) -> MacaulayRep {
    assert!(!h.is_zero(), "macaulay_rep requires h >= 1");
    assert!(i >= 1, "macaulay_rep requires index >= 1");
    let mut terms = Vec::new();
    let mut rem = h.clone();
    let mut k = i;
    while !rem.is_zero() {
        debug_assert!(k >= 1, "greedy representation always terminates by j = 1");
        let a = greedy_top(&rem, k as u64);
        rem -= binom_big(&a, k as u64);
        terms.push((a, k));
        k -= 1;
    }
    MacaulayRep { index: i, terms }
}

/// Macaulay's growth bound h^{<i>} for h >= 1; by convention 0^{<i>} = 0.
pub fn macaulay_growth(h: &BigUint, i: usize) -> BigUint {
    if h.is_zero() {
        return BigUint::zero();
    }
    macaulay_rep(h, i).growth()
}

/// Degrees at which a raw entry sequence violates Macaulay's bound
/// h_{i+1} <= h_i^{<i>}. The bound is enforced from degree 1 upward; h_1 is
/// unconstrained relative to h_0. The reported degree is that of the
/// violating (too large) entry.
pub fn o_sequence_violations(entries: &[BigUint]) -> Vec<usize> {
    let mut witnesses = Vec::new();
    for i in 1..entries.len().saturating_sub(1) {
        let bound = macaulay_growth(&entries[i], i);
        if entries[i + 1] > bound {
            witnesses.push(i + 1);
        }
    }
    witnesses
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binom_small_values() {
        assert_eq!(binom(5, 2), big(10));
        assert_eq!(binom(4, 0), big(1));
        assert_eq!(binom(3, 7), big(0));
    }

    #[test]
    fn binom_against_pascal_triangle() {
        // Independent additive oracle.
        let n_max = 60usize;
        let mut row = vec![BigUint::one()];
        for n in 0..=n_max {
            for (k, value) in row.iter().enumerate() {
                assert_eq!(binom(n as u64, k as u64), *value, "C({n},{k})");
            }
            let mut next = vec![BigUint::one()];
            for k in 1..=n {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(BigUint::one());
            row = next;
        }
        assert_eq!(binom(31, 15), big(300540195));
    }

    #[test]
    fn binom_symmetry() {
        for n in 0..=60u64 {
            for k in 0..=n {
                assert_eq!(binom(n, k), binom(n, n - k));
            }
        }
    }

    #[test]
    fn dim_ring_examples() {
        assert_eq!(dim_ring(3, 2), big(6));
        assert_eq!(dim_ring(1, 7), big(1));
        // oracle: enumerate exponent vectors of degree 9 in 4 variables
        let mut count = 0u64;
        for a in 0..=9u32 {
            for b in 0..=9 - a {
                for c in 0..=9 - a - b {
                    let _d = 9 - a - b - c;
                    count += 1;
                }
            }
        }
        assert_eq!(dim_ring(4, 9), big(count));
        assert_eq!(count, 220);
    }

    #[test]
    fn macaulay_rep_examples() {
        let rep = macaulay_rep(&big(4), 2);
        assert_eq!(rep.terms, vec![(big(3), 2), (big(1), 1)]);
        let rep = macaulay_rep(&big(1), 5);
        assert_eq!(rep.terms, vec![(big(5), 5)]);
        let rep = macaulay_rep(&big(10), 3);
        assert_eq!(rep.terms, vec![(big(5), 3)]);
    }

    #[test]
    fn macaulay_rep_round_trip_and_shape() {
        for h in 1u64..=500 {
            for i in 1usize..=8 {
                let rep = macaulay_rep(&big(h), i);
                assert_eq!(rep.value(), big(h), "round trip h={h} i={i}");
                // strictly decreasing a_j with a_j >= j
                for w in rep.terms.windows(2) {
                    assert!(w[0].0 > w[1].0);
                }
                for (a, j) in &rep.terms {
                    assert!(*a >= big(*j as u64));
                    assert!(*j >= 1);
                }
            }
        }
    }

    #[test]
    fn macaulay_growth_examples() {
        assert_eq!(macaulay_growth(&big(4), 2), big(5));
        for i in 1usize..=12 {
            assert_eq!(macaulay_growth(&big(1), i), big(1));
        }
        assert_eq!(macaulay_growth(&big(3), 1), big(6));
    }

    #[test]
    fn macaulay_growth_nondecreasing_in_h() {
        for i in 1usize..=8 {
            let mut prev = macaulay_growth(&big(1), i);
            for h in 2u64..=500 {
                let next = macaulay_growth(&big(h), i);
                assert!(next >= prev, "growth dropped at h={h} i={i}");
                prev = next;
            }
        }
    }

    #[test]
    fn o_sequence_violation_examples() {
        let seq: Vec<BigUint> = [1u64, 3, 4, 2].iter().map(|&v| big(v)).collect();
        assert!(o_sequence_violations(&seq).is_empty());
        let seq: Vec<BigUint> = [1u64, 2, 4].iter().map(|&v| big(v)).collect();
        assert_eq!(o_sequence_violations(&seq), vec![2]);
        let seq: Vec<BigUint> = [1u64].iter().map(|&v| big(v)).collect();
        assert!(o_sequence_violations(&seq).is_empty());
    }

    #[test]
    fn zero_entries_forbid_later_growth() {
        let seq: Vec<BigUint> = [1u64, 2, 0, 1].iter().map(|&v| big(v)).collect();
        assert_eq!(o_sequence_violations(&seq), vec![3]);
    }
}
