use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A finite sequence (h_0, ..., h_e) of nonnegative integers, the universal
/// output type of every computation in this crate.
///
/// Trailing zeros are trimmed on construction, so `entries[e] > 0` always
/// holds and the socle degree is `len() - 1`. Entries are arbitrary
/// precision; comparisons and products in the property checkers are exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertSequence {
    entries: Vec<BigUint>,
}

impl HilbertSequence {
    /// Build a raw sequence: trims trailing zeros, rejects the empty/all-zero
    /// case, but places no constraint on h_0. Used by the `check` path where
    /// arbitrary integer sequences are examined.
    pub fn new(mut entries: Vec<BigUint>) -> Result<Self> {
        while entries.last().is_some_and(Zero::is_zero) {
            entries.pop();
        }
        if entries.is_empty() {
            return Err(Error::Malformed("sequence is empty or all zero".into()));
        }
        Ok(HilbertSequence { entries })
    }

    /// Build a sequence representing an algebra's Hilbert function: as `new`,
    /// plus h_0 == 1 is enforced.
    pub fn algebra(entries: Vec<BigUint>) -> Result<Self> {
        let seq = Self::new(entries)?;
        if !seq.entries[0].is_one() {
            return Err(Error::Malformed(format!(
                "h_0 must be 1, got {}",
                seq.entries[0]
            )));
        }
        Ok(seq)
    }

    /// Convenience constructor from machine integers.
    pub fn from_u64s(values: &[u64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least one positive entry
    }

    /// Largest index e with h_e > 0.
    pub fn socle_degree(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, i: usize) -> &BigUint {
        &self.entries[i]
    }

    /// The last entry h_e (the type, for a level Hilbert function).
    pub fn last(&self) -> &BigUint {
        self.entries.last().expect("nonempty by construction")
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigUint> {
        self.entries.iter()
    }

    /// Lossy conversion for small sequences; None if any entry exceeds u64.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.entries.iter().map(ToPrimitive::to_u64).collect()
    }

    pub fn is_palindromic(&self) -> bool {
        let e = self.socle_degree();
        (0..=e / 2).all(|i| self.entries[i] == self.entries[e - i])
    }

    pub fn into_entries(self) -> Vec<BigUint> {
        self.entries
    }
}

impl fmt::Display for HilbertSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, h) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

// Sequences serialize as arrays of decimal strings so that arbitrary
// precision survives JSON round trips bit-exactly.
impl Serialize for HilbertSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries.iter().map(|h| h.to_string()))
    }
}

impl<'de> Deserialize<'de> for HilbertSequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let entries = strings
            .iter()
            .map(|s| {
                s.parse::<BigUint>()
                    .map_err(|_| D::Error::custom(format!("invalid entry {s:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        HilbertSequence::new(entries).map_err(D::Error::custom)
    }
}

/// Parse a comma-separated list of nonnegative decimal integers.
pub fn parse_sequence(input: &str) -> Result<HilbertSequence> {
    let entries = input
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<BigUint>()
                .map_err(|_| Error::Parse(format!("invalid sequence entry {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    HilbertSequence::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let s = HilbertSequence::from_u64s(&[1, 3, 4, 2, 0, 0]).unwrap();
        assert_eq!(s.socle_degree(), 3);
        assert_eq!(s.to_u64s().unwrap(), vec![1, 3, 4, 2]);
    }

    #[test]
    fn rejects_all_zero() {
        assert!(HilbertSequence::from_u64s(&[0, 0]).is_err());
        assert!(HilbertSequence::from_u64s(&[]).is_err());
    }

    #[test]
    fn algebra_requires_unit_start() {
        assert!(HilbertSequence::algebra(vec![BigUint::from(2u32)]).is_err());
        assert!(HilbertSequence::algebra(vec![BigUint::from(1u32)]).is_ok());
    }

    #[test]
    fn raw_allows_other_start() {
        let s = HilbertSequence::from_u64s(&[3, 1]).unwrap();
        assert_eq!(s.socle_degree(), 1);
    }

    #[test]
    fn json_round_trip_uses_decimal_strings() {
        let s = HilbertSequence::from_u64s(&[1, 3, 4, 2]).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"["1","3","4","2"]"#);
        let back: HilbertSequence = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn display_matches_tuple_notation() {
        let s = HilbertSequence::from_u64s(&[1, 3, 4, 2]).unwrap();
        assert_eq!(s.to_string(), "(1, 3, 4, 2)");
    }

    #[test]
    fn parse_sequence_accepts_whitespace() {
        let s = parse_sequence("1, 3, 4, 2").unwrap();
        assert_eq!(s.to_u64s().unwrap(), vec![1, 3, 4, 2]);
        assert!(parse_sequence("1,x").is_err());
    }
}
