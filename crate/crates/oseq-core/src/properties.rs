//! Numerical property checkers with witness degrees: log-concavity,
//! unimodality, flawlessness, first-half differentiability, and Macaulay's
//! growth condition. All inequalities are weak and evaluated exactly.

use crate::arith::{binom, macaulay_growth, o_sequence_violations};
use crate::error::{Error, Result};
use crate::sequence::HilbertSequence;
use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Property {
    LogConcave,
    Unimodal,
    Flawless,
    DifferentiableFirstHalf,
    OSequence,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::LogConcave,
        Property::Unimodal,
        Property::Flawless,
        Property::DifferentiableFirstHalf,
        Property::OSequence,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Property::LogConcave => "LOG_CONCAVE",
            Property::Unimodal => "UNIMODAL",
            Property::Flawless => "FLAWLESS",
            Property::DifferentiableFirstHalf => "DIFFERENTIABLE_FIRST_HALF",
            Property::OSequence => "O_SEQUENCE",
        }
    }

    /// Parse the CLI spelling (kebab-case).
    pub fn parse_cli(name: &str) -> Result<Property> {
        match name.trim().to_ascii_lowercase().as_str() {
            "log-concave" | "log_concave" => Ok(Property::LogConcave),
            "unimodal" => Ok(Property::Unimodal),
            "flawless" => Ok(Property::Flawless),
            "differentiable" | "differentiable-first-half" => {
                Ok(Property::DifferentiableFirstHalf)
            }
            "o-sequence" | "osequence" => Ok(Property::OSequence),
            other => Err(Error::Parse(format!("unknown property {other:?}"))),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Verdict for one property on one sequence. `holds` is true exactly when
/// `witnesses` is empty; each witness is a degree where the defining
/// inequality fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: Property,
    pub holds: bool,
    pub witnesses: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl PropertyReport {
    fn new(property: Property, witnesses: Vec<usize>, detail: Option<String>) -> Self {
        PropertyReport {
            property,
            holds: witnesses.is_empty(),
            witnesses,
            detail,
        }
    }
}

/// Log-concavity: h_{i-1} * h_{i+1} <= h_i^2 at every interior index
/// 1 <= i <= e-1 of the trimmed sequence. Entries beyond the socle degree
/// are not treated as zeros.
pub fn check_log_concavity(seq: &HilbertSequence) -> PropertyReport {
    let h = seq.entries();
    let witnesses = (1..h.len().saturating_sub(1))
        .filter(|&i| &h[i - 1] * &h[i + 1] > &h[i] * &h[i])
        .collect();
    PropertyReport::new(Property::LogConcave, witnesses, None)
}

/// Unimodality: nondecreasing up to some peak, then nonincreasing. Witnesses
/// are valley degrees: i with h_{i-1} > h_i and some later entry > h_i.
pub fn check_unimodality(seq: &HilbertSequence) -> PropertyReport {
    let h = seq.entries();
    let mut witnesses = Vec::new();
    // max_after[i] = maximum of h[i+1..]
    let mut max_after: Vec<Option<&BigUint>> = vec![None; h.len()];
    for i in (0..h.len() - 1).rev() {
        max_after[i] = Some(match max_after[i + 1] {
            Some(m) if m > &h[i + 1] => m,
            _ => &h[i + 1],
        });
    }
    for i in 1..h.len() {
        if h[i - 1] > h[i] && max_after[i].is_some_and(|m| m > &h[i]) {
            witnesses.push(i);
        }
    }
    PropertyReport::new(Property::Unimodal, witnesses, None)
}

/// Flawlessness: h_i <= h_{e-i} for all i <= e/2.
pub fn check_flawless(seq: &HilbertSequence) -> PropertyReport {
    let h = seq.entries();
    let e = seq.socle_degree();
    let witnesses = (0..=e / 2).filter(|&i| h[i] > h[e - i]).collect();
    PropertyReport::new(Property::Flawless, witnesses, None)
}

/// Macaulay's growth condition on the sequence itself.
pub fn check_o_sequence(seq: &HilbertSequence) -> Result<PropertyReport> {
    if !seq.get(0).is_one() {
        return Err(Error::Malformed(format!(
            "O-sequence check requires h_0 = 1, got {}",
            seq.get(0)
        )));
    }
    let witnesses = o_sequence_violations(seq.entries());
    Ok(PropertyReport::new(Property::OSequence, witnesses, None))
}

/// First-half differentiability: the difference sequence
/// (1, h_1 - 1, ..., h_{floor(e/2)} - h_{floor(e/2)-1}) must be nonnegative
/// and itself satisfy Macaulay's growth condition. Witnesses are degrees of
/// negative differences, or of growth violations when all differences are
/// nonnegative.
pub fn check_differentiable_first_half(seq: &HilbertSequence) -> Result<PropertyReport> {
    if !seq.get(0).is_one() {
        return Err(Error::Malformed(format!(
            "differentiability check requires h_0 = 1, got {}",
            seq.get(0)
        )));
    }
    let half = seq.socle_degree() / 2;
    let mut negative = Vec::new();
    let mut delta = Vec::with_capacity(half + 1);
    delta.push(BigUint::one());
    for i in 1..=half {
        if seq.get(i) < seq.get(i - 1) {
            negative.push(i);
        } else {
            delta.push(seq.get(i) - seq.get(i - 1));
        }
    }
    if !negative.is_empty() {
        return Ok(PropertyReport::new(
            Property::DifferentiableFirstHalf,
            negative,
            Some("negative first difference".into()),
        ));
    }
    let witnesses = o_sequence_violations(&delta);
    Ok(PropertyReport::new(
        Property::DifferentiableFirstHalf,
        witnesses,
        None,
    ))
}

/// Run the requested checks in a fixed order.
pub fn run_checks(seq: &HilbertSequence, properties: &[Property]) -> Result<Vec<PropertyReport>> {
    properties
        .iter()
        .map(|p| match p {
            Property::LogConcave => Ok(check_log_concavity(seq)),
            Property::Unimodal => Ok(check_unimodality(seq)),
            Property::Flawless => Ok(check_flawless(seq)),
            Property::DifferentiableFirstHalf => check_differentiable_first_half(seq),
            Property::OSequence => check_o_sequence(seq),
        })
        .collect()
}

/// Whether three consecutive maximal codimension-3 entries shifted by a,
/// (C(i+1,2)+a, C(i+2,2)+a, C(i+3,2)+a), form a log-concave triple. Holds
/// exactly when a <= C(i+2,2); evaluated via the explicit triple.
pub fn lemma_triple_test(i: usize, a: u64) -> bool {
    let triple = HilbertSequence::new(vec![
        binom((i + 1) as u64, 2) + a,
        binom((i + 2) as u64, 2) + a,
        binom((i + 3) as u64, 2) + a,
    ])
    .expect("positive entries");
    check_log_concavity(&triple).holds
}
