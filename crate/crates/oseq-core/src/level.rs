//! Closed-form level Hilbert functions and the non-log-concave families:
//! compressed Gorenstein sequences of power sums, the formula for adjoining
//! general powers to a level inverse system, a known non-log-concave
//! Gorenstein function of codimension 4, and the monomial families of low
//! type in every codimension >= 3.

use crate::arith::{binom, dim_ring};
use crate::error::{Error, Result};
use crate::monomial::{GeneratorSet, Monomial};
use crate::sequence::HilbertSequence;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// Parameters (codimension, type, socle degree) of a level Hilbert function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelParams {
    pub r: usize,
    pub t: usize,
    pub e: usize,
}

/// Hilbert function of the Gorenstein algebra dual to a sum of m general
/// e-th powers of linear forms in r variables:
/// h_j = min { m, dim R_j, dim R_{e-j} }.
pub fn compressed_gorenstein(r: usize, e: usize, m: u64) -> HilbertSequence {
    assert!(r >= 1 && e >= 1 && m >= 1, "compressed_gorenstein parameters");
    let m = BigUint::from(m);
    let mut entries = vec![BigUint::from(1u32)];
    for j in 1..=e {
        entries.push(m.clone().min(dim_ring(r, j)).min(dim_ring(r, e - j)));
    }
    HilbertSequence::algebra(entries).expect("h_0 = 1 and h_e = 1")
}

/// Hilbert function of the Gorenstein algebra dual to a single general form
/// of degree e: the m-cap of `compressed_gorenstein` never binds.
pub fn compressed_general_form(r: usize, e: usize) -> HilbertSequence {
    assert!(r >= 1 && e >= 1);
    let mut entries = vec![BigUint::from(1u32)];
    for j in 1..=e {
        entries.push(dim_ring(r, j).min(dim_ring(r, e - j)));
    }
    HilbertSequence::algebra(entries).expect("h_0 = 1 and h_e = 1")
}

/// Hilbert function of the level algebra dual to the module spanned by a
/// level inverse system with Hilbert function h together with a sum of m
/// general e-th powers: H_j = min { h_j + h_j(m), dim R_j }.
///
/// Requires 1 <= m <= binom(r-1+e, e) - h_e and h of codimension <= r.
pub fn add_general_powers(h: &HilbertSequence, r: usize, m: u64) -> Result<HilbertSequence> {
    let e = h.socle_degree();
    if e < 1 {
        return Err(Error::Malformed("socle degree must be at least 1".into()));
    }
    let bound = dim_ring(r, e) - h.last();
    if m == 0 || BigUint::from(m) > bound {
        return Err(Error::PreconditionM { m, bound });
    }
    if *h.get(1) > BigUint::from(r as u64) {
        return Err(Error::Malformed(format!(
            "h_1 = {} exceeds the target codimension {r}",
            h.get(1)
        )));
    }
    let cg = compressed_gorenstein(r, e, m);
    let mut entries = vec![BigUint::from(1u32)];
    for j in 1..=e {
        entries.push((h.get(j) + cg.get(j)).min(dim_ring(r, j)));
    }
    Ok(HilbertSequence::algebra(entries).expect("h_0 = 1, h_e >= 1"))
}

/// A non-log-concave Gorenstein Hilbert function of codimension 4 and socle
/// degree 28 (known from the literature; input data here, not derived). Only
/// the first half is stored; the second half is filled in by symmetry.
pub fn gorenstein_codim4_socle28() -> HilbertSequence {
    const FIRST_HALF: [u64; 15] = [
        1, 4, 10, 20, 35, 56, 84, 120, 165, 175, 186, 198, 211, 225, 240,
    ];
    let mut entries: Vec<u64> = FIRST_HALF.to_vec();
    for i in 15..=28 {
        entries.push(FIRST_HALF[28 - i]);
    }
    HilbertSequence::from_u64s(&entries).expect("positive entries")
}

/// Smallest admissible socle degree for `family_codim3_level`: the least e
/// with (2e - 5)^2 >= 48t + 73.
pub fn codim3_min_socle_degree(t: usize) -> usize {
    let target = 48u64 * t as u64 + 73;
    let mut e = 3usize;
    loop {
        let s = 2 * e as u64 - 5;
        if s * s >= target {
            return e;
        }
        e += 1;
    }
}

/// The codimension-3 type-t level family (t >= 3): a general form plus t-1
/// sums of six general e-th powers, realized by iterating
/// `add_general_powers` with m = 6 on the compressed sequence of a general
/// form. The last five entries come out as
/// (15+6(t-1), 10+6(t-1), 6+6(t-1), 3+3(t-1), t) and log-concavity fails in
/// degree e-3.
pub fn family_codim3_level(t: usize, e: usize) -> Result<HilbertSequence> {
    if t < 3 {
        return Err(Error::TOutOfRange { t, min: 3, max: usize::MAX });
    }
    let min = codim3_min_socle_degree(t);
    if e < min {
        return Err(Error::ETooSmall { e, min });
    }
    let mut h = compressed_general_form(3, e);
    for _ in 1..t {
        h = add_general_powers(&h, 3, 6)?;
    }
    Ok(h)
}

/// The codimension-4 type-2 level family: the codimension-4 Gorenstein
/// function above plus one general 28th power, which adds 1 in every degree
/// 9..=28. Log-concavity fails in degrees 10..=13 and 15..=19.
pub fn family_codim4_type2() -> HilbertSequence {
    let h = add_general_powers(&gorenstein_codim4_socle28(), 4, 1)
        .expect("m = 1 is always admissible here");
    debug_assert_eq!(h, family_codim4_type2_literal());
    h
}

/// The same sequence as a literal 29-entry table, kept as an independent
/// transcription for cross-checks.
pub fn family_codim4_type2_literal() -> HilbertSequence {
    const ENTRIES: [u64; 29] = [
        1, 4, 10, 20, 35, 56, 84, 120, 165, 176, 187, 199, 212, 226, 241, 226, 212, 199, 187,
        176, 166, 121, 85, 57, 36, 21, 11, 5, 2,
    ];
    HilbertSequence::from_u64s(&ENTRIES).expect("positive entries")
}

/// The four-monomial generator set of codimension 3 and type 4 whose pure
/// O-sequence has tail (27, 22, 18, 12, 4) and fails log-concavity in degree
/// e-3, for any e >= 12:
/// { x^4 y^4 z^(e-8), x^(e-2) y z, x y^(e-2) z, x y z^(e-2) }.
pub fn family_codim3_type4(e: usize) -> Result<GeneratorSet> {
    const MIN_E: usize = 12;
    if e < MIN_E {
        return Err(Error::ETooSmall { e, min: MIN_E });
    }
    let e32 = e as u32;
    GeneratorSet::new(
        3,
        vec![
            Monomial::new(vec![4, 4, e32 - 8]),
            Monomial::new(vec![e32 - 2, 1, 1]),
            Monomial::new(vec![1, e32 - 2, 1]),
            Monomial::new(vec![1, 1, e32 - 2]),
        ],
    )
}

/// The low-type families in codimension r >= 4 (2 <= t <= r+1): F is a
/// monomial in three variables behaving like a general form through degree
/// r+10, and the remaining generators are obtained from
/// G = x1^(e-r-8) x2^4 x3^4 x4^4 x5...xr by swapping the exponent of x1 into
/// x2, ..., x_{t-1}. Log-concavity fails in degree e-r-9. Requires
/// e >= 3r + 30.
pub fn family_low_type(r: usize, t: usize, e: usize) -> Result<GeneratorSet> {
    if r < 4 {
        return Err(Error::Malformed(format!(
            "the low-type family needs codimension >= 4, got {r}"
        )));
    }
    if !(2..=r + 1).contains(&t) {
        return Err(Error::TOutOfRange { t, min: 2, max: r + 1 });
    }
    let min = 3 * r + 30;
    if e < min {
        return Err(Error::ETooSmall { e, min });
    }
    let mut f = vec![0u32; r];
    f[0] = (r + 10) as u32;
    f[1] = (r + 10) as u32;
    f[2] = (e - 2 * r - 20) as u32;

    let mut g = vec![1u32; r];
    g[0] = (e - r - 8) as u32;
    g[1] = 4;
    g[2] = 4;
    g[3] = 4;

    let mut monomials = vec![Monomial::new(f)];
    for j in 0..t - 1 {
        let mut gj = g.clone();
        gj.swap(0, j);
        monomials.push(Monomial::new(gj));
    }
    GeneratorSet::new(r, monomials)
}

/// The built-in constructions, addressable by the CLI names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyName {
    /// codim-3 level family of type t >= 3 (needs --t, --e)
    Thm25Codim3,
    /// codim-4 type-2 level function (no parameters)
    Thm25Codim4T2,
    /// the codim-4 Gorenstein function of socle degree 28 (no parameters)
    Thm24Gorenstein,
    /// four-monomial codim-3 type-4 family (needs --e)
    Thm32R3T4,
    /// general low-type family, r >= 4 (needs --r, --t, --e)
    Thm32General,
}

impl FamilyName {
    pub fn cli_name(&self) -> &'static str {
        match self {
            FamilyName::Thm25Codim3 => "thm25-codim3",
            FamilyName::Thm25Codim4T2 => "thm25-codim4t2",
            FamilyName::Thm24Gorenstein => "thm24-gorenstein",
            FamilyName::Thm32R3T4 => "thm32-r3t4",
            FamilyName::Thm32General => "thm32-general",
        }
    }
}

/// A built family: the generator set when the construction is monomial, and
/// the resulting Hilbert function either way.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyOutput {
    pub name: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<GeneratorSet>,
    pub sequence: HilbertSequence,
}

/// Build a family by name. `r`, `t`, `e` are consulted as each construction
/// requires.
pub fn build_family(
    name: FamilyName,
    r: Option<usize>,
    t: Option<usize>,
    e: Option<usize>,
) -> Result<FamilyOutput> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Error::Parse(format!("{} requires --{flag}", name.cli_name())))
    };
    match name {
        FamilyName::Thm25Codim3 => {
            let t = need(t, "t")?;
            let e = need(e, "e")?;
            Ok(FamilyOutput {
                name: name.cli_name(),
                generators: None,
                sequence: family_codim3_level(t, e)?,
            })
        }
        FamilyName::Thm25Codim4T2 => Ok(FamilyOutput {
            name: name.cli_name(),
            generators: None,
            sequence: family_codim4_type2(),
        }),
        FamilyName::Thm24Gorenstein => Ok(FamilyOutput {
            name: name.cli_name(),
            generators: None,
            sequence: gorenstein_codim4_socle28(),
        }),
        FamilyName::Thm32R3T4 => {
            let e = need(e, "e")?;
            let gens = family_codim3_type4(e)?;
            let sequence = crate::osequence::pure_o_sequence(&gens)?;
            Ok(FamilyOutput {
                name: name.cli_name(),
                generators: Some(gens),
                sequence,
            })
        }
        FamilyName::Thm32General => {
            let r = need(r, "r")?;
            let t = need(t, "t")?;
            let e = need(e, "e")?;
            let gens = family_low_type(r, t, e)?;
            let sequence = crate::osequence::pure_o_sequence(&gens)?;
            Ok(FamilyOutput {
                name: name.cli_name(),
                generators: Some(gens),
                sequence,
            })
        }
    }
}

/// The threshold comparison behind each family's failure: the shifted triple
/// of maximal entries is non-log-concave exactly when the shift exceeds the
/// middle binomial C(i+2, 2).
pub fn triple_shift_exceeds(i: usize, a: u64) -> bool {
    BigUint::from(a) > binom((i + 2) as u64, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::osequence::{pure_o_sequence, pure_o_sequence_bruteforce, DEFAULT_DIVISOR_BUDGET};
    use crate::properties::{check_log_concavity, check_unimodality, lemma_triple_test};

    fn seq(values: &[u64]) -> HilbertSequence {
        HilbertSequence::from_u64s(values).unwrap()
    }

    fn u64s(h: &HilbertSequence) -> Vec<u64> {
        h.to_u64s().unwrap()
    }

    #[test]
    fn compressed_gorenstein_examples() {
        assert_eq!(compressed_gorenstein(3, 4, 2), seq(&[1, 2, 2, 2, 1]));
        assert_eq!(compressed_gorenstein(5, 6, 1), seq(&[1, 1, 1, 1, 1, 1, 1]));
        let h = compressed_gorenstein(3, 10, 6);
        assert_eq!(&u64s(&h)[6..], &[6, 6, 6, 3, 1]);
        // corrected value for (2, 6, 4): the min formula gives 4 at j = 3
        assert_eq!(compressed_gorenstein(2, 6, 4), seq(&[1, 2, 3, 4, 3, 2, 1]));
    }

    #[test]
    fn compressed_gorenstein_palindromic_unimodal() {
        for r in 1..=5 {
            for e in 1..=20 {
                for m in [1u64, 2, 3, 7, 20, 50] {
                    let h = compressed_gorenstein(r, e, m);
                    assert!(h.is_palindromic(), "r={r} e={e} m={m}");
                    assert!(check_unimodality(&h).holds, "r={r} e={e} m={m}");
                }
            }
        }
    }

    #[test]
    fn add_general_powers_examples() {
        let h = seq(&[1, 3, 4, 2]);
        assert_eq!(add_general_powers(&h, 3, 1).unwrap(), seq(&[1, 3, 5, 3]));

        // m = 0 is rejected; m above the bound is rejected
        assert!(matches!(
            add_general_powers(&h, 3, 0),
            Err(Error::PreconditionM { .. })
        ));
        let bound = dim_ring(3, 3) - h.last(); // 10 - 2 = 8
        assert_eq!(bound, BigUint::from(8u32));
        assert!(add_general_powers(&h, 3, 8).is_ok());
        assert!(matches!(
            add_general_powers(&h, 3, 9),
            Err(Error::PreconditionM { .. })
        ));
    }

    #[test]
    fn add_general_powers_never_exceeds_ring_dimension() {
        let h = compressed_general_form(3, 9);
        for m in [1u64, 2, 6, 17, 40] {
            let sum = add_general_powers(&h, 3, m).unwrap();
            for j in 0..=sum.socle_degree() {
                assert!(*sum.get(j) <= dim_ring(3, j), "m={m} j={j}");
            }
        }
        // widening the ring: codim-3 input into 4 variables
        let wide = add_general_powers(&seq(&[1, 3, 4, 2]), 4, 2).unwrap();
        assert_eq!(wide, seq(&[1, 4, 6, 3]));
    }

    #[test]
    fn gorenstein_codim4_socle28_data() {
        let h = gorenstein_codim4_socle28();
        assert_eq!(h.socle_degree(), 28);
        assert_eq!(u64s(&h)[8], 165);
        assert_eq!(u64s(&h)[14], 240);
        assert_eq!(u64s(&h)[20], 165);
        assert_eq!(u64s(&h)[28], 1);
        assert!(h.is_palindromic());
        let report = check_log_concavity(&h);
        assert_eq!(report.witnesses, vec![9, 10, 11, 12, 13, 15, 16, 17, 18, 19]);
    }

    #[test]
    fn family_codim4_type2_data() {
        let h = family_codim4_type2();
        assert_eq!(h, family_codim4_type2_literal());
        assert_eq!(u64s(&h)[9], 176);
        assert_eq!(u64s(&h)[13], 226);
        assert_eq!(u64s(&h)[15], 226);
        assert_eq!(u64s(&h)[28], 2);
        let report = check_log_concavity(&h);
        assert_eq!(report.witnesses, vec![10, 11, 12, 13, 15, 16, 17, 18, 19]);
    }

    #[test]
    fn codim3_family_minimum_socle_degrees() {
        assert_eq!(codim3_min_socle_degree(3), 10);
        assert_eq!(codim3_min_socle_degree(4), 11);
        assert_eq!(codim3_min_socle_degree(5), 12);
        assert_eq!(codim3_min_socle_degree(6), 12);
        assert_eq!(codim3_min_socle_degree(7), 13);
        assert_eq!(codim3_min_socle_degree(8), 14);
    }

    #[test]
    fn family_codim3_level_examples() {
        let h = family_codim3_level(3, 12).unwrap();
        assert_eq!(&u64s(&h)[8..], &[27, 22, 18, 9, 3]);
        let report = check_log_concavity(&h);
        assert!(report.witnesses.contains(&9));

        let h = family_codim3_level(5, 15).unwrap();
        assert_eq!(&u64s(&h)[11..], &[39, 34, 30, 15, 5]);

        assert!(matches!(
            family_codim3_level(3, 9),
            Err(Error::ETooSmall { min: 10, .. })
        ));
        assert!(matches!(family_codim3_level(2, 20), Err(Error::TOutOfRange { .. })));
    }

    #[test]
    fn family_codim3_type4_examples() {
        let gens = family_codim3_type4(12).unwrap();
        let h = pure_o_sequence(&gens).unwrap();
        assert_eq!(&u64s(&h)[8..], &[27, 22, 18, 12, 4]);
        assert_eq!(check_log_concavity(&h).witnesses, vec![9]);

        let gens = family_codim3_type4(20).unwrap();
        let h = pure_o_sequence(&gens).unwrap();
        let brute = pure_o_sequence_bruteforce(&gens, DEFAULT_DIVISOR_BUDGET).unwrap();
        assert_eq!(h, brute);
        assert_eq!(&u64s(&h)[16..], &[27, 22, 18, 12, 4]);

        assert!(matches!(
            family_codim3_type4(11),
            Err(Error::ETooSmall { min: 12, .. })
        ));
    }

    #[test]
    fn family_low_type_examples() {
        let gens = family_low_type(4, 2, 42).unwrap();
        let h = pure_o_sequence(&gens).unwrap();
        assert_eq!(&u64s(&h)[28..31], &[245, 230, 216]);
        assert_eq!(check_log_concavity(&h).witnesses, vec![29]);

        let gens = family_low_type(5, 2, 45).unwrap();
        let h = pure_o_sequence(&gens).unwrap();
        assert_eq!(&u64s(&h)[30..33], &[386, 370, 355]);
        assert!(check_log_concavity(&h).witnesses.contains(&31));

        assert!(matches!(
            family_low_type(4, 2, 41),
            Err(Error::ETooSmall { min: 42, .. })
        ));
        assert!(matches!(
            family_low_type(4, 6, 42),
            Err(Error::TOutOfRange { min: 2, max: 5, .. })
        ));
        assert!(matches!(family_low_type(3, 2, 60), Err(Error::Malformed(_))));
    }

    #[test]
    fn family_low_type_cross_terms_vanish_in_tail() {
        // pairwise gcds live strictly below degree e - r - 10, so the tail of
        // the pure O-sequence is the plain sum of individual divisor counts
        for r in [4usize, 5] {
            let e = 3 * r + 30;
            let t = r + 1;
            let gens = family_low_type(r, t, e).unwrap();
            let cutoff = e - r - 10;
            let ms = gens.monomials();
            for i in 0..ms.len() {
                for j in i + 1..ms.len() {
                    assert!(
                        ms[i].gcd(&ms[j]).degree() < cutoff,
                        "gcd of generators {i},{j} reaches degree {cutoff}"
                    );
                }
            }
            let h = pure_o_sequence(&gens).unwrap();
            for d in cutoff..=e {
                let sum: BigUint = ms
                    .iter()
                    .map(|m| crate::osequence::divisor_count(m, d))
                    .sum();
                assert_eq!(*h.get(d), sum, "cross terms at degree {d}");
            }
        }
    }

    #[test]
    fn lemma_predicts_family_failures() {
        // codim-3 level family: shift 6(t-1) against middle binomial 10
        for t in 3..=8u64 {
            assert!(!lemma_triple_test(3, 6 * (t - 1)));
            assert!(triple_shift_exceeds(3, 6 * (t - 1)));
        }
        // codim-3 type-4 monomial family: shift 3*4 = 12 against 10
        assert!(!lemma_triple_test(3, 12));
        // low-type families: 125 * 2^(r-4) against C(r+11, 2)
        for r in [4usize, 5, 6] {
            let shift = 125u64 << (r - 4);
            assert!(triple_shift_exceeds(r + 9, shift), "r={r}");
            assert!(!lemma_triple_test(r + 9, shift), "r={r}");
        }
    }

    #[test]
    fn build_family_dispatch() {
        let out = build_family(FamilyName::Thm24Gorenstein, None, None, None).unwrap();
        assert_eq!(out.sequence.socle_degree(), 28);
        assert!(out.generators.is_none());

        let out = build_family(FamilyName::Thm32R3T4, None, None, Some(12)).unwrap();
        assert_eq!(out.generators.as_ref().unwrap().type_t(), 4);

        assert!(build_family(FamilyName::Thm32R3T4, None, None, None).is_err());
        let out = build_family(FamilyName::Thm32General, Some(4), Some(3), Some(42)).unwrap();
        assert_eq!(out.generators.as_ref().unwrap().type_t(), 3);
    }
}
