//! Exhaustive, symmetry-reduced enumeration of generator sets for small
//! (r, t, e), property screening with double-checked failures, and
//! collection-level interval-gap reports.

use crate::arith::dim_ring;
use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, GeneratorSet};
use crate::osequence::{pure_o_sequence, pure_o_sequence_bruteforce};
use crate::properties::{run_checks, Property, PropertyReport};
use crate::sequence::HilbertSequence;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

/// Exact canonicalization enumerates r! variable permutations.
pub const MAX_CANONICAL_VARS: usize = 8;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

/// The canonical representative of a generator set's orbit under variable
/// permutation: the lexicographically smallest sorted exponent-vector list
/// over all r! relabelings. Idempotent and permutation-invariant.
pub fn canonicalize(gens: &GeneratorSet) -> Result<GeneratorSet> {
    let r = gens.r();
    if r > MAX_CANONICAL_VARS {
        return Err(Error::RTooLarge { r, max: MAX_CANONICAL_VARS });
    }
    let mut best: Option<GeneratorSet> = None;
    for perm in permutations(r) {
        let candidate = gens.permuted(&perm);
        let better = match &best {
            None => true,
            Some(b) => candidate.exponent_lists() < b.exponent_lists(),
        };
        if better {
            best = Some(candidate);
        }
    }
    Ok(best.expect("at least the identity permutation"))
}

/// All canonical generator-set classes with t distinct monomials of degree e
/// in r variables, in a deterministic order: subsets of the degree-e
/// monomial list are enumerated lexicographically and a set is yielded
/// exactly when it equals its own canonical form.
pub fn enumerate_generator_sets(
    r: usize,
    t: usize,
    e: usize,
    budget: u64,
) -> Result<Vec<GeneratorSet>> {
    if r > MAX_CANONICAL_VARS {
        return Err(Error::RTooLarge { r, max: MAX_CANONICAL_VARS });
    }
    let n = dim_ring(r, e)
        .to_usize()
        .ok_or_else(|| Error::BudgetExceeded { estimate: u128::MAX, budget })?;
    if t > n {
        return Ok(Vec::new());
    }
    let estimate = crate::arith::binom(n as u64, t as u64);
    let estimate_u128 = estimate.to_u128().unwrap_or(u128::MAX);
    if estimate_u128 > budget as u128 {
        return Err(Error::BudgetExceeded { estimate: estimate_u128, budget });
    }

    let monomials = monomials_of_degree(r, e);
    let perms = permutations(r);
    let mut out = Vec::new();
    let mut indices: Vec<usize> = (0..t).collect();
    loop {
        let set = GeneratorSet::new(r, indices.iter().map(|&i| monomials[i].clone()).collect())
            .expect("distinct same-degree monomials");
        let lists = set.exponent_lists();
        let is_canonical = perms
            .iter()
            .all(|perm| set.permuted(perm).exponent_lists() >= lists);
        if is_canonical {
            out.push(set);
        }
        // next t-combination of 0..n in lexicographic order
        let mut k = t;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if indices[k] != k + n - t {
                indices[k] += 1;
                for j in k + 1..t {
                    indices[j] = indices[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Parameters of a screening run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchJob {
    pub r: usize,
    pub t: usize,
    pub e_min: usize,
    pub e_max: usize,
    /// Properties to screen; failures are recorded with witnesses.
    pub properties: Vec<Property>,
    /// Worker threads; 0 uses the global default. Reports are identical for
    /// any worker count.
    pub jobs: usize,
    /// Cap on raw subsets enumerated per socle degree.
    pub budget: u64,
}

/// One screened set that failed at least one property. Failures are
/// double-checked against the brute-force oracle before inclusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchFailure {
    pub e: usize,
    pub generators: Vec<Vec<u32>>,
    pub sequence: HilbertSequence,
    pub failed: Vec<Property>,
    /// Union of witness degrees across the failed properties.
    pub witnesses: Vec<usize>,
    pub reports: Vec<PropertyReport>,
}

/// A hole observed in the value set at one degree: two sequences in the
/// collection differ only at `degree`, but some intermediate value is absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalGap {
    pub degree: usize,
    pub lower: HilbertSequence,
    pub upper: HilbertSequence,
    /// Absent intermediate values at `degree`, as decimal strings.
    pub missing: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub e: usize,
    pub canonical_sets: u64,
    pub distinct_sequences: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub job: SearchJob,
    pub total_canonical_sets: u64,
    pub sequences_distinct: u64,
    pub failures: Vec<SearchFailure>,
    pub interval_gaps: Vec<IntervalGap>,
    pub per_degree: Vec<DegreeSummary>,
    pub elapsed_ms: u128,
}

impl SearchReport {
    /// The report with timing stripped, for determinism comparisons.
    pub fn without_timing(&self) -> SearchReport {
        let mut c = self.clone();
        c.elapsed_ms = 0;
        c
    }
}

fn screen_set(
    set: &GeneratorSet,
    properties: &[Property],
    budget: u64,
) -> Result<(HilbertSequence, Option<SearchFailure>)> {
    let sequence = pure_o_sequence(set)?;
    let reports = run_checks(&sequence, properties)?;
    if reports.iter().all(|rep| rep.holds) {
        return Ok((sequence, None));
    }
    // double check: recompute by brute force and re-run the checkers
    let brute = pure_o_sequence_bruteforce(set, budget)?;
    if brute != sequence {
        return Err(Error::Internal(format!(
            "inclusion-exclusion {sequence} disagrees with brute force {brute} on {set}"
        )));
    }
    let recheck = run_checks(&brute, properties)?;
    if recheck != reports {
        return Err(Error::Internal(format!(
            "property reports unstable across recomputation on {set}"
        )));
    }
    let failed: Vec<Property> = reports
        .iter()
        .filter(|rep| !rep.holds)
        .map(|rep| rep.property)
        .collect();
    let mut witnesses: Vec<usize> = reports
        .iter()
        .flat_map(|rep| rep.witnesses.iter().copied())
        .collect();
    witnesses.sort_unstable();
    witnesses.dedup();
    let failure = SearchFailure {
        e: set.degree(),
        generators: set.exponent_lists(),
        sequence: sequence.clone(),
        failed,
        witnesses,
        reports,
    };
    Ok((sequence, Some(failure)))
}

/// Screen every canonical generator set with the job's parameters. Results
/// are merged in canonical enumeration order, so the report is independent
/// of the worker count.
pub fn run_search(job: &SearchJob) -> Result<SearchReport> {
    if job.e_min > job.e_max || job.t == 0 || job.r == 0 {
        return Err(Error::Malformed("search needs r, t >= 1 and e_min <= e_max".into()));
    }
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(job.jobs)
        .build()
        .map_err(|err| Error::Internal(format!("thread pool: {err}")))?;

    let mut failures = Vec::new();
    let mut per_degree = Vec::new();
    let mut total_sets = 0u64;
    let mut all_sequences: HashSet<HilbertSequence> = HashSet::new();
    let mut by_degree: BTreeMap<usize, Vec<HilbertSequence>> = BTreeMap::new();

    for e in job.e_min..=job.e_max {
        let sets = enumerate_generator_sets(job.r, job.t, e, job.budget)?;
        total_sets += sets.len() as u64;
        let screened: Vec<(HilbertSequence, Option<SearchFailure>)> = pool.install(|| {
            sets.par_iter()
                .map(|set| screen_set(set, &job.properties, job.budget))
                .collect::<Result<Vec<_>>>()
        })?;
        let mut distinct: HashSet<HilbertSequence> = HashSet::new();
        let mut degree_failures = 0u64;
        for (sequence, failure) in screened {
            distinct.insert(sequence.clone());
            all_sequences.insert(sequence.clone());
            by_degree.entry(e).or_default().push(sequence);
            if let Some(f) = failure {
                degree_failures += 1;
                failures.push(f);
            }
        }
        per_degree.push(DegreeSummary {
            e,
            canonical_sets: sets.len() as u64,
            distinct_sequences: distinct.len() as u64,
            failures: degree_failures,
        });
    }

    let mut interval_gaps = Vec::new();
    for sequences in by_degree.values() {
        let mut unique: Vec<HilbertSequence> = sequences
            .iter()
            .cloned()
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        unique.sort_by(|a, b| a.entries().cmp(b.entries()));
        interval_gaps.extend(interval_report(&unique)?);
    }

    Ok(SearchReport {
        job: job.clone(),
        total_canonical_sets: total_sets,
        sequences_distinct: all_sequences.len() as u64,
        failures,
        interval_gaps,
        per_degree,
        elapsed_ms: started.elapsed().as_millis(),
    })
}

/// Interval gaps in a collection of same-socle-degree sequences: for every
/// pair differing at exactly one degree by at least 2, report intermediate
/// values absent from the collection. An empty result means no gaps within
/// the given universe.
pub fn interval_report(sequences: &[HilbertSequence]) -> Result<Vec<IntervalGap>> {
    let Some(first) = sequences.first() else {
        return Ok(Vec::new());
    };
    let e = first.socle_degree();
    if sequences.iter().any(|s| s.socle_degree() != e) {
        return Err(Error::MixedSocleDegrees);
    }
    let universe: HashSet<&[BigUint]> = sequences.iter().map(|s| s.entries()).collect();
    let mut gaps = Vec::new();
    let mut seen_pairs: HashSet<(Vec<BigUint>, Vec<BigUint>)> = HashSet::new();
    for a in sequences {
        for b in sequences {
            let (lo, hi) = (a.entries(), b.entries());
            let diffs: Vec<usize> = (0..=e).filter(|&i| lo[i] != hi[i]).collect();
            let [i] = diffs[..] else { continue };
            if lo[i] >= hi[i] {
                continue;
            }
            let alpha = &hi[i] - &lo[i];
            if alpha < BigUint::from(2u32) {
                continue;
            }
            if !seen_pairs.insert((lo.to_vec(), hi.to_vec())) {
                continue;
            }
            let mut missing = Vec::new();
            let mut value = &lo[i] + 1u32;
            while value < hi[i] {
                let mut candidate = lo.to_vec();
                candidate[i] = value.clone();
                if !universe.contains(candidate.as_slice()) {
                    missing.push(value.to_string());
                }
                value += 1u32;
            }
            if !missing.is_empty() {
                gaps.push(IntervalGap {
                    degree: i,
                    lower: a.clone(),
                    upper: b.clone(),
                    missing,
                });
            }
        }
    }
    gaps.sort_by(|x, y| {
        (x.degree, x.lower.entries(), x.upper.entries()).cmp(&(
            y.degree,
            y.lower.entries(),
            y.upper.entries(),
        ))
    });
    Ok(gaps)
}
