//! Independent verification of the closed-form Hilbert functions by exact
//! linear algebra: inverse-system modules are represented by explicit forms
//! over a large prime field, the polynomial ring acts by contraction
//! (x^b . y^a = y^(a-b) when b <= a, else 0, with coefficient 1), and the
//! Hilbert function is read off as ranks of contraction matrices.
//!
//! The contraction action is the characteristic-free counterpart of partial
//! differentiation: over a prime exceeding the socle degree it produces the
//! same ranks, with no multinomial factors to manage. Consequently monomial
//! duality is exact here: contracting a monomial form by monomial operators
//! enumerates its divisors with coefficient 1.

use crate::arith::dim_ring;
use crate::error::{Error, Result};
use crate::level::{add_general_powers, compressed_gorenstein};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::sequence::HilbertSequence;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Default field characteristic: a prime comfortably above every socle
/// degree used at desk scale.
pub const DEFAULT_PRIME: u64 = 1_000_003;

/// Deterministic Miller-Rabin for u64 (the listed bases are exact for the
/// full 64-bit range).
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Field modulus and RNG seed for a verification run. Identical configs give
/// bit-identical reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldConfig {
    pub prime: u64,
    pub seed: u64,
}

impl FieldConfig {
    pub fn new(prime: u64, seed: u64) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        Ok(FieldConfig { prime, seed })
    }

    /// Seed for an individual trial, derived with a fixed stride so trials
    /// are independent and the whole run is reproducible.
    pub fn trial_seed(&self, trial: usize) -> u64 {
        self.seed
            .wrapping_add((trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig { prime: DEFAULT_PRIME, seed: 42 }
    }
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p { s - p } else { s }
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulm(acc, base, p);
        }
        base = mulm(base, base, p);
        exp >>= 1;
    }
    acc
}

fn invm(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powm(a, p - 2, p)
}

/// A homogeneous form with coefficients modulo a prime, stored sparsely by
/// exponent vector. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyOverPrimeField {
    r: usize,
    degree: usize,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl PolyOverPrimeField {
    pub fn zero(r: usize, degree: usize) -> Self {
        PolyOverPrimeField { r, degree, terms: BTreeMap::new() }
    }

    /// The form consisting of the single monomial with coefficient 1.
    pub fn from_monomial(m: &Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m.exponents().to_vec(), 1u64);
        PolyOverPrimeField { r: m.num_vars(), degree: m.degree(), terms }
    }

    /// Build from explicit terms; coefficients are reduced modulo p and
    /// exponent degrees are validated.
    pub fn from_terms(
        r: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>,
        p: u64,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (exps, coeff) in terms {
            if exps.len() != r {
                return Err(Error::Malformed(format!(
                    "term has {} exponents, expected {r}",
                    exps.len()
                )));
            }
            let d: usize = exps.iter().map(|&a| a as usize).sum();
            if d != degree {
                return Err(Error::Malformed(format!(
                    "term of degree {d} in a form of degree {degree}"
                )));
            }
            let rem = (&coeff % p).to_i64().expect("residue fits i64");
            let residue = if rem < 0 { rem + p as i64 } else { rem } as u64;
            if residue != 0 {
                let slot = map.entry(exps).or_insert(0u64);
                *slot = addm(*slot, residue, p);
            }
        }
        map.retain(|_, &mut c| c != 0);
        Ok(PolyOverPrimeField { r, degree, terms: map })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], u64)> {
        self.terms.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    fn add_assign(&mut self, other: &PolyOverPrimeField, p: u64) {
        debug_assert_eq!(self.degree, other.degree);
        debug_assert_eq!(self.r, other.r);
        for (exps, &c) in &other.terms {
            let slot = self.terms.entry(exps.clone()).or_insert(0);
            *slot = addm(*slot, c, p);
        }
        self.terms.retain(|_, &mut c| c != 0);
    }
}

/// Contraction of a form by a monomial operator: each term y^a with
/// operator <= a componentwise survives as y^(a - operator), coefficient
/// unchanged. Linear in the form; degree drops by the operator degree.
/// Operators of excessive degree annihilate everything.
pub fn contract(operator: &Monomial, f: &PolyOverPrimeField) -> PolyOverPrimeField {
    let op_deg = operator.degree();
    if op_deg > f.degree {
        return PolyOverPrimeField::zero(f.r, 0);
    }
    let mut terms = BTreeMap::new();
    for (exps, &c) in &f.terms {
        let fits = exps
            .iter()
            .zip(operator.exponents())
            .all(|(&a, &b)| b <= a);
        if fits {
            let reduced: Vec<u32> = exps
                .iter()
                .zip(operator.exponents())
                .map(|(&a, &b)| a - b)
                .collect();
            terms.insert(reduced, c);
        }
    }
    PolyOverPrimeField { r: f.r, degree: f.degree - op_deg, terms }
}

/// Incremental row reduction over F_p: rows are offered one at a time and
/// the running rank is maintained, stopping early at full column rank.
struct RowReducer {
    p: u64,
    /// normalized pivot rows, keyed and ordered by pivot column
    pivots: Vec<(usize, Vec<u64>)>,
}

impl RowReducer {
    fn new(p: u64) -> Self {
        RowReducer { p, pivots: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce the row against existing pivots; keep it if independent. The
    /// pivot set is kept in reduced echelon form (each pivot row is zero at
    /// every other pivot column), so a single reduction pass suffices.
    fn offer(&mut self, mut row: Vec<u64>) {
        let p = self.p;
        for (col, pivot) in &self.pivots {
            let factor = row[*col];
            if factor != 0 {
                for (x, y) in row.iter_mut().zip(pivot) {
                    *x = (*x + p - mulm(factor, *y, p)) % p;
                }
            }
        }
        let Some(lead) = row.iter().position(|&x| x != 0) else {
            return;
        };
        let inv = invm(row[lead], p);
        for x in row.iter_mut() {
            *x = mulm(*x, inv, p);
        }
        for (_, pivot) in self.pivots.iter_mut() {
            let factor = pivot[lead];
            if factor != 0 {
                for (x, y) in pivot.iter_mut().zip(&row) {
                    *x = (*x + p - mulm(factor, *y, p)) % p;
                }
            }
        }
        let pos = self
            .pivots
            .binary_search_by_key(&lead, |(c, _)| *c)
            .expect_err("no two pivots share a column");
        self.pivots.insert(pos, (lead, row));
    }
}

/// The Hilbert function of the level algebra dual to the module generated by
/// the given forms of common degree e: h_i is the rank over F_p of the set
/// of contractions of the generators by all degree-(e-i) monomials,
/// expressed in the degree-i monomial basis.
pub fn dual_hilbert(forms: &[PolyOverPrimeField], cfg: &FieldConfig) -> Result<HilbertSequence> {
    let (r, e) = validate_forms(forms)?;
    if cfg.prime <= e as u64 {
        return Err(Error::PrimeTooSmall { prime: cfg.prime, degree: e });
    }
    let mut entries = Vec::with_capacity(e + 1);
    for i in 0..=e {
        let basis = monomials_of_degree(r, i);
        let index: BTreeMap<&[u32], usize> = basis
            .iter()
            .enumerate()
            .map(|(k, m)| (m.exponents(), k))
            .collect();
        let mut reducer = RowReducer::new(cfg.prime);
        let operators = monomials_of_degree(r, e - i);
        'outer: for op in &operators {
            for f in forms {
                let g = contract(op, f);
                if g.is_zero() {
                    continue;
                }
                let mut row = vec![0u64; basis.len()];
                for (exps, c) in g.terms() {
                    row[index[exps]] = c;
                }
                reducer.offer(row);
                if reducer.rank() == basis.len() {
                    break 'outer;
                }
            }
        }
        entries.push(num_bigint::BigUint::from(reducer.rank()));
    }
    HilbertSequence::new(entries)
}

/// As `dual_hilbert`, but with coefficients lifted to the integers and ranks
/// computed exactly over the rationals via fraction-free (Bareiss)
/// elimination. Slow; intended for bit-certain runs at small sizes.
pub fn dual_hilbert_rational(forms: &[PolyOverPrimeField]) -> Result<HilbertSequence> {
    let (r, e) = validate_forms(forms)?;
    let mut entries = Vec::with_capacity(e + 1);
    for i in 0..=e {
        let basis = monomials_of_degree(r, i);
        let index: BTreeMap<&[u32], usize> = basis
            .iter()
            .enumerate()
            .map(|(k, m)| (m.exponents(), k))
            .collect();
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for op in monomials_of_degree(r, e - i) {
            for f in forms {
                let g = contract(&op, f);
                if g.is_zero() {
                    continue;
                }
                let mut row = vec![BigInt::zero(); basis.len()];
                for (exps, c) in g.terms() {
                    row[index[exps]] = BigInt::from(c);
                }
                rows.push(row);
            }
        }
        entries.push(num_bigint::BigUint::from(rank_bareiss(rows)));
    }
    HilbertSequence::new(entries)
}

/// Exact integer rank by fraction-free Gaussian elimination.
fn rank_bareiss(mut rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&k| !rows[k][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for k in rank + 1..rows.len() {
            for j in col + 1..ncols {
                let val = (&pivot * &rows[k][j] - &rows[k][col] * &rows[rank][j]) / &prev;
                rows[k][j] = val;
            }
            rows[k][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
        if rank == ncols || rank == rows.len() {
            break;
        }
    }
    rank
}

fn validate_forms(forms: &[PolyOverPrimeField]) -> Result<(usize, usize)> {
    let first = forms
        .first()
        .ok_or_else(|| Error::Malformed("no forms given".into()))?;
    let (r, e) = (first.r, first.degree);
    for f in forms {
        if f.r != r || f.degree != e {
            return Err(Error::Malformed(
                "forms must share the number of variables and the degree".into(),
            ));
        }
    }
    if forms.iter().all(PolyOverPrimeField::is_zero) {
        return Err(Error::Malformed("all forms are zero".into()));
    }
    Ok((r, e))
}

/// A sum of e-th divided powers of m seeded-random linear forms: the
/// coefficient of y^a is the sum over the forms of the products c^a of their
/// coefficient vectors. Divided powers pair with the contraction action the
/// way ordinary powers pair with differentiation, with no multinomial
/// factors in sight. Deterministic for a fixed config.
pub fn random_power_sum(r: usize, e: usize, m: usize, cfg: &FieldConfig) -> PolyOverPrimeField {
    assert!(m >= 1, "need at least one summand");
    let p = cfg.prime;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut total = PolyOverPrimeField::zero(r, e);
    let basis = monomials_of_degree(r, e);
    for _ in 0..m {
        let mut coeffs = vec![0u64; r];
        loop {
            for c in coeffs.iter_mut() {
                *c = rng.random_range(0..p);
            }
            if coeffs.iter().any(|&c| c != 0) {
                break;
            }
        }
        let mut terms = BTreeMap::new();
        for mono in &basis {
            let mut v = 1u64;
            for (&c, &a) in coeffs.iter().zip(mono.exponents()) {
                if a > 0 {
                    v = mulm(v, powm(c, a as u64, p), p);
                }
                if v == 0 {
                    break;
                }
            }
            if v != 0 {
                terms.insert(mono.exponents().to_vec(), v);
            }
        }
        total.add_assign(&PolyOverPrimeField { r, degree: e, terms }, p);
    }
    total
}

/// Outcome of a single randomized trial against a formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TrialOutcome {
    /// Observed sequence equals the formula entry-wise.
    Matched,
    /// Observed below the formula somewhere (a genericity failure).
    Below { observed: HilbertSequence },
    /// Observed above the formula somewhere: the formula is a proven upper
    /// bound, so this is an implementation bug, never a genericity failure.
    Exceeded { observed: HilbertSequence, degree: usize },
    /// The random construction degenerated (e.g. the form vanished).
    Degenerate { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialResult {
    pub trial: usize,
    pub seed: u64,
    pub outcome: TrialOutcome,
}

/// Aggregate result of a Monte Carlo verification: the formula being tested,
/// per-trial outcomes merged by trial index, and the pass verdict (at least
/// one exact match and no exceedance).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub label: String,
    pub formula: HilbertSequence,
    pub trials: Vec<TrialResult>,
    pub matched: usize,
    pub passed: bool,
}

fn classify(observed: HilbertSequence, formula: &HilbertSequence) -> TrialOutcome {
    if observed == *formula {
        return TrialOutcome::Matched;
    }
    if observed.socle_degree() > formula.socle_degree() {
        return TrialOutcome::Exceeded {
            degree: formula.socle_degree() + 1,
            observed,
        };
    }
    for i in 0..=observed.socle_degree() {
        if observed.get(i) > formula.get(i) {
            return TrialOutcome::Exceeded { degree: i, observed };
        }
    }
    TrialOutcome::Below { observed }
}

fn aggregate(
    label: String,
    formula: HilbertSequence,
    trials: Vec<TrialResult>,
) -> VerificationReport {
    let matched = trials
        .iter()
        .filter(|t| t.outcome == TrialOutcome::Matched)
        .count();
    let exceeded = trials
        .iter()
        .any(|t| matches!(t.outcome, TrialOutcome::Exceeded { .. }));
    VerificationReport {
        label,
        formula,
        matched,
        passed: matched >= 1 && !exceeded,
        trials,
    }
}

/// Monte Carlo check of the compressed Gorenstein formula: over `trials`
/// independent seeds, the dual Hilbert function of a random sum of m e-th
/// powers must never exceed min { m, dim R_j, dim R_{e-j} }, and at least
/// one trial must attain it everywhere.
pub fn verify_power_sum_formula(
    r: usize,
    e: usize,
    m: usize,
    trials: usize,
    cfg: &FieldConfig,
) -> Result<VerificationReport> {
    if cfg.prime <= e as u64 {
        return Err(Error::PrimeTooSmall { prime: cfg.prime, degree: e });
    }
    let formula = compressed_gorenstein(r, e, m as u64);
    let results: Vec<TrialResult> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let seed = cfg.trial_seed(trial);
            let trial_cfg = FieldConfig { prime: cfg.prime, seed };
            let form = random_power_sum(r, e, m, &trial_cfg);
            let outcome = match dual_hilbert(std::slice::from_ref(&form), &trial_cfg) {
                Ok(observed) => classify(observed, &formula),
                Err(err) => TrialOutcome::Degenerate { reason: err.to_string() },
            };
            TrialResult { trial, seed, outcome }
        })
        .collect();
    Ok(aggregate(
        format!("power-sum formula (r={r}, e={e}, m={m})"),
        formula,
        results,
    ))
}

/// Monte Carlo check of the general-powers addition formula: the dual of
/// (base forms + one random sum of m e-th powers) must match
/// `add_general_powers` applied to the base module's computed Hilbert
/// function, with the same pass criteria as `verify_power_sum_formula`.
pub fn verify_add_powers_formula(
    base_forms: &[PolyOverPrimeField],
    m: usize,
    trials: usize,
    cfg: &FieldConfig,
) -> Result<VerificationReport> {
    let (r, e) = validate_forms(base_forms)?;
    if cfg.prime <= e as u64 {
        return Err(Error::PrimeTooSmall { prime: cfg.prime, degree: e });
    }
    let base_h = dual_hilbert(base_forms, cfg)?;
    if base_h.socle_degree() != e {
        return Err(Error::Malformed(
            "base module is not level: its dual vanishes in the top degree".into(),
        ));
    }
    let formula = add_general_powers(&base_h, r, m as u64)?;
    let results: Vec<TrialResult> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let seed = cfg.trial_seed(trial);
            let trial_cfg = FieldConfig { prime: cfg.prime, seed };
            let mut forms = base_forms.to_vec();
            forms.push(random_power_sum(r, e, m, &trial_cfg));
            let outcome = match dual_hilbert(&forms, &trial_cfg) {
                Ok(observed) => classify(observed, &formula),
                Err(err) => TrialOutcome::Degenerate { reason: err.to_string() },
            };
            TrialResult { trial, seed, outcome }
        })
        .collect();
    Ok(aggregate(
        format!("add-powers formula (r={r}, e={e}, m={m}, base h={base_h})"),
        formula,
        results,
    ))
}

/// Forms for the inverse system of a monomial generator set: one form per
/// monomial, coefficient 1.
pub fn monomial_forms(gens: &crate::monomial::GeneratorSet) -> Vec<PolyOverPrimeField> {
    gens.monomials()
        .iter()
        .map(PolyOverPrimeField::from_monomial)
        .collect()
}

/// Sanity bounds satisfied by any dual Hilbert function: h_i is at most the
/// ring dimension and at most (number of generators) * dim R_{e-i}.
pub fn within_rank_bounds(h: &HilbertSequence, r: usize, e: usize, forms: usize) -> bool {
    (0..=h.socle_degree()).all(|i| {
        *h.get(i) <= dim_ring(r, i)
            && *h.get(i) <= dim_ring(r, e - i) * num_bigint::BigUint::from(forms)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::GeneratorSet;
    use crate::osequence::pure_o_sequence;

    fn seq(values: &[u64]) -> HilbertSequence {
        HilbertSequence::from_u64s(values).unwrap()
    }

    #[test]
    fn primality_checker() {
        assert!(is_prime(2));
        assert!(is_prime(1_000_003));
        assert!(is_prime(10_007));
        assert!(!is_prime(1));
        assert!(!is_prime(1_000_001)); // 101 * 9901
        assert!(is_prime((1u64 << 61) - 1));
        assert!(!is_prime((1u64 << 61) - 3));
    }

    #[test]
    fn field_config_rejects_composites() {
        assert!(FieldConfig::new(1_000_000, 1).is_err());
        assert!(FieldConfig::new(1_000_003, 1).is_ok());
    }

    #[test]
    fn contraction_basics() {
        let f = PolyOverPrimeField::from_monomial(&Monomial::new(vec![2, 1]));
        // x1 . y1^2 y2 = y1 y2
        let g = contract(&Monomial::new(vec![1, 0]), &f);
        assert_eq!(g.terms().collect::<Vec<_>>(), vec![(&[1u32, 1][..], 1)]);
        // x1 x2 . y1^3 = 0
        let f = PolyOverPrimeField::from_monomial(&Monomial::new(vec![3, 0]));
        assert!(contract(&Monomial::new(vec![1, 1]), &f).is_zero());
        // linearity over a sum
        let cfg = FieldConfig::default();
        let mut sum = PolyOverPrimeField::from_monomial(&Monomial::new(vec![2, 1]));
        sum.add_assign(
            &PolyOverPrimeField::from_monomial(&Monomial::new(vec![1, 2])),
            cfg.prime,
        );
        let g = contract(&Monomial::new(vec![1, 0]), &sum);
        assert_eq!(
            g.terms().collect::<Vec<_>>(),
            vec![(&[0u32, 2][..], 1), (&[1u32, 1][..], 1)]
        );
    }

    #[test]
    fn monomial_duality_section1() {
        let gens = GeneratorSet::parse("x1*x2*x3, x1*x3^2", None).unwrap();
        let cfg = FieldConfig::default();
        let h = dual_hilbert(&monomial_forms(&gens), &cfg).unwrap();
        assert_eq!(h, seq(&[1, 3, 4, 2]));
        assert_eq!(h, pure_o_sequence(&gens).unwrap());
    }

    #[test]
    fn dual_of_single_power_is_all_ones() {
        let cfg = FieldConfig::default();
        let f = random_power_sum(3, 4, 1, &cfg);
        let h = dual_hilbert(std::slice::from_ref(&f), &cfg).unwrap();
        assert_eq!(h, seq(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn dual_of_two_powers_is_compressed() {
        let cfg = FieldConfig { prime: DEFAULT_PRIME, seed: 7 };
        let f = random_power_sum(3, 4, 2, &cfg);
        let h = dual_hilbert(std::slice::from_ref(&f), &cfg).unwrap();
        assert_eq!(h, seq(&[1, 2, 2, 2, 1]));
    }

    #[test]
    fn binary_power_sums_fill_the_generic_sequence() {
        // 4 general sextic powers in 2 variables: min{4, j+1, 7-j}
        let cfg = FieldConfig { prime: DEFAULT_PRIME, seed: 3 };
        let f = random_power_sum(2, 6, 4, &cfg);
        let h = dual_hilbert(std::slice::from_ref(&f), &cfg).unwrap();
        assert_eq!(h, seq(&[1, 2, 3, 4, 3, 2, 1]));
        assert_eq!(h, compressed_gorenstein(2, 6, 4));
    }

    #[test]
    fn prime_must_exceed_degree() {
        let cfg = FieldConfig { prime: 5, seed: 1 };
        let f = PolyOverPrimeField::from_monomial(&Monomial::new(vec![3, 3]));
        assert!(matches!(
            dual_hilbert(&[f], &cfg),
            Err(Error::PrimeTooSmall { .. })
        ));
    }

    #[test]
    fn verify_power_sum_small_cases() {
        let cfg = FieldConfig { prime: 10_007, seed: 11 };
        let report = verify_power_sum_formula(3, 8, 5, 20, &cfg).unwrap();
        assert!(report.passed, "trials: {:?}", report.trials);
        assert_eq!(report.formula, compressed_gorenstein(3, 8, 5));

        // m far above every cap
        let report = verify_power_sum_formula(4, 6, 100, 10, &cfg).unwrap();
        assert!(report.passed);
        assert_eq!(report.formula, compressed_gorenstein(4, 6, 100));

        // one variable: all-ones
        let report = verify_power_sum_formula(1, 5, 3, 5, &cfg).unwrap();
        assert!(report.passed);
        assert_eq!(report.formula, seq(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn verify_add_powers_small_case() {
        let gens = GeneratorSet::parse("x1*x2*x3, x1*x3^2", None).unwrap();
        let cfg = FieldConfig { prime: DEFAULT_PRIME, seed: 5 };
        let report = verify_add_powers_formula(&monomial_forms(&gens), 1, 10, &cfg).unwrap();
        assert!(report.passed);
        assert_eq!(report.formula, seq(&[1, 3, 5, 3]));
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = FieldConfig { prime: DEFAULT_PRIME, seed: 99 };
        let a = verify_power_sum_formula(3, 6, 4, 8, &cfg).unwrap();
        let b = verify_power_sum_formula(3, 6, 4, 8, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rank_bounds_hold() {
        let gens = GeneratorSet::parse("x1^2*x2^2, x1*x2^2*x3", Some(3)).unwrap();
        let cfg = FieldConfig::default();
        let forms = monomial_forms(&gens);
        let h = dual_hilbert(&forms, &cfg).unwrap();
        assert!(within_rank_bounds(&h, 3, 4, forms.len()));
    }

    #[test]
    fn rational_rank_agrees_with_modular_on_monomials() {
        let gens = GeneratorSet::parse("x1^2*x2, x1*x2^2", None).unwrap();
        let forms = monomial_forms(&gens);
        let cfg = FieldConfig::default();
        assert_eq!(
            dual_hilbert_rational(&forms).unwrap(),
            dual_hilbert(&forms, &cfg).unwrap()
        );
    }

    #[test]
    fn bareiss_rank_small_matrices() {
        let rows = vec![
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)],
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)],
        ];
        assert_eq!(rank_bareiss(rows), 2);
        assert_eq!(rank_bareiss(Vec::new()), 0);
    }

    #[test]
    fn from_terms_validates_and_reduces() {
        let p = 17u64;
        let f = PolyOverPrimeField::from_terms(
            2,
            3,
            vec![
                (vec![2, 1], BigInt::from(18)), // reduces to 1
                (vec![1, 2], BigInt::from(-1)), // reduces to 16
                (vec![3, 0], BigInt::from(17)), // vanishes
            ],
            p,
        )
        .unwrap();
        assert_eq!(
            f.terms().collect::<Vec<_>>(),
            vec![(&[1u32, 2][..], 16), (&[2u32, 1][..], 1)]
        );
        assert!(PolyOverPrimeField::from_terms(2, 3, vec![(vec![1, 1], BigInt::from(1))], p)
            .is_err());
    }
}
