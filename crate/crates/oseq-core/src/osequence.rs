//! Pure O-sequences from monomial generator sets, computed exactly two ways:
//! inclusion–exclusion over subset gcds, and brute-force divisor enumeration.

use crate::error::{Error, Result};
use crate::monomial::{GeneratorSet, Monomial};
use crate::sequence::HilbertSequence;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

/// Default cap on brute-force divisor enumeration.
pub const DEFAULT_DIVISOR_BUDGET: u64 = 10_000_000;

/// Coefficient vector of the product (1 + q + ... + q^{a_1}) ... times one
/// factor per exponent. Schoolbook multiplication over exact integers; the
/// degrees in play are small enough that nothing fancier is warranted.
fn chain_product(exponents: &[u32]) -> Vec<BigUint> {
    let mut coeffs = vec![BigUint::one()];
    for &a in exponents {
        let a = a as usize;
        let mut next = vec![BigUint::zero(); coeffs.len() + a];
        for (i, c) in coeffs.iter().enumerate() {
            for j in 0..=a {
                next[i + j] += c;
            }
        }
        coeffs = next;
    }
    coeffs
}

/// Number of degree-i monomial divisors of m: the q^i coefficient of the
/// divisor generating function. Lenient out of range: returns 0.
pub fn divisor_count(m: &Monomial, i: usize) -> BigUint {
    if i > m.degree() {
        return BigUint::zero();
    }
    chain_product(m.exponents())[i].clone()
}

/// The pure O-sequence of a generator set: h_i is the number of distinct
/// degree-i monomials dividing at least one generator. Computed by
/// inclusion–exclusion over nonempty subsets T, using that the common
/// divisors of T are exactly the divisors of gcd(T).
pub fn pure_o_sequence(gens: &GeneratorSet) -> Result<HilbertSequence> {
    let e = gens.degree();
    let t = gens.type_t();
    let mut acc = vec![BigInt::zero(); e + 1];
    for mask in 1u64..(1u64 << t) {
        let mut gcd: Option<Monomial> = None;
        for (k, m) in gens.monomials().iter().enumerate() {
            if mask >> k & 1 == 1 {
                gcd = Some(match gcd {
                    None => m.clone(),
                    Some(g) => g.gcd(m),
                });
            }
        }
        let gcd = gcd.expect("mask is nonempty");
        let sign_positive = mask.count_ones() % 2 == 1;
        let coeffs = chain_product(gcd.exponents());
        for (i, c) in coeffs.iter().enumerate() {
            let c = BigInt::from(c.clone());
            if sign_positive {
                acc[i] += c;
            } else {
                acc[i] -= c;
            }
        }
    }
    let entries = acc
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            if v.is_negative() {
                return Err(Error::Internal(format!(
                    "inclusion-exclusion produced a negative count at degree {i}"
                )));
            }
            Ok(v.to_biguint().expect("nonnegative"))
        })
        .collect::<Result<Vec<_>>>()?;
    HilbertSequence::algebra(entries)
}

/// Same contract as `pure_o_sequence`, computed by materializing every
/// divisor of every generator into a deduplicating set. Serves as the
/// independent oracle for the inclusion–exclusion path.
pub fn pure_o_sequence_bruteforce(gens: &GeneratorSet, budget: u64) -> Result<HilbertSequence> {
    let mut estimate: u128 = 0;
    for m in gens.monomials() {
        let product: u128 = m
            .exponents()
            .iter()
            .fold(1u128, |acc, &a| acc.saturating_mul(a as u128 + 1));
        estimate = estimate.saturating_add(product);
    }
    if estimate > budget as u128 {
        return Err(Error::BudgetExceeded { estimate, budget });
    }

    let e = gens.degree();
    let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
    let mut counts = vec![0u64; e + 1];
    for m in gens.monomials() {
        // odometer over the exponent box [0, a_1] x ... x [0, a_r]
        let caps = m.exponents();
        let mut cur = vec![0u32; caps.len()];
        loop {
            if seen.insert(cur.clone(), ()).is_none() {
                let deg: usize = cur.iter().map(|&a| a as usize).sum();
                counts[deg] += 1;
            }
            let mut k = 0;
            loop {
                if k == caps.len() {
                    break;
                }
                if cur[k] < caps[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
            if k == caps.len() {
                break;
            }
        }
    }
    HilbertSequence::algebra(counts.into_iter().map(BigUint::from).collect())
}

/// The pure O-sequence of the single monomial with the given exponents, via
/// the generating-function identity: the coefficient vector of the product
/// of the chains (1 + q + ... + q^{a_i}).
pub fn type1_sequence(exponents: &[u32]) -> HilbertSequence {
    HilbertSequence::algebra(chain_product(exponents))
        .expect("chain products start at 1 and end at 1")
}

/// Append a fresh variable with exponent 1 to the generator of a type-1
/// sequence: H_0 = 1, H_i = h_i + h_{i-1} for 1 <= i <= e, H_{e+1} = 1.
pub fn append_variable(seq: &HilbertSequence) -> Result<HilbertSequence> {
    if !seq.last().is_one() {
        return Err(Error::NotType1(format!(
            "h_e = {} but a type-1 sequence ends in 1",
            seq.last()
        )));
    }
    if !seq.get(0).is_one() {
        return Err(Error::NotType1(format!(
            "h_0 = {} but a type-1 sequence starts at 1",
            seq.get(0)
        )));
    }
    let e = seq.socle_degree();
    let mut entries = Vec::with_capacity(e + 2);
    entries.push(BigUint::one());
    for i in 1..=e {
        entries.push(seq.get(i) + seq.get(i - 1));
    }
    entries.push(BigUint::one());
    HilbertSequence::algebra(entries)
}
