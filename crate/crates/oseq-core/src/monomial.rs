//! Monomials as exponent vectors, and sets of same-degree generators.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A monic monomial in r variables, stored as its exponent vector.
/// Variable x_i corresponds to `exponents[i-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(!exponents.is_empty(), "monomial needs at least one variable");
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&a| a as usize).sum()
    }

    /// Componentwise minimum: the gcd of two monomials on the same variables.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.num_vars(), other.num_vars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.num_vars() == other.num_vars()
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(&a, &b)| a <= b)
    }

    /// Relabel variables: new exponent of x_{perm[k]+1} is the old exponent
    /// of x_{k+1}.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        assert_eq!(perm.len(), self.num_vars());
        let mut exps = vec![0u32; self.num_vars()];
        for (k, &dest) in perm.iter().enumerate() {
            exps[dest] = self.exponents[k];
        }
        Monomial::new(exps)
    }

    /// Parse `x1^4*x2*x3^2` into sparse (index, exponent) pairs. Indices are
    /// 1-based in the text syntax.
    fn parse_sparse(input: &str) -> Result<Vec<(usize, u32)>> {
        let input = input.trim();
        if input.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        let mut pairs = Vec::new();
        for factor in input.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("expected x<i>[^e], got {factor:?}")))?;
            let (idx_str, exp_str) = match rest.split_once('^') {
                Some((i, e)) => (i, Some(e)),
                None => (rest, None),
            };
            let idx: usize = idx_str
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in {factor:?}")))?;
            if idx == 0 {
                return Err(Error::Parse("variable indices are 1-based".into()));
            }
            let exp: u32 = match exp_str {
                Some(e) => e
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                None => 1,
            };
            pairs.push((idx, exp));
        }
        Ok(pairs)
    }

    /// Parse the text syntax with an explicit number of variables.
    pub fn parse(input: &str, r: usize) -> Result<Monomial> {
        let pairs = Self::parse_sparse(input)?;
        let mut exps = vec![0u32; r];
        for (idx, exp) in pairs {
            if idx > r {
                return Err(Error::Parse(format!(
                    "variable x{idx} exceeds the declared {r} variables"
                )));
            }
            exps[idx - 1] += exp;
        }
        Ok(Monomial::new(exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, &a) in self.exponents.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            if a == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, a)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All exponent vectors of length r summing to d, in lexicographically
/// descending order of the leading exponent. Deterministic; used as the
/// monomial basis ordering throughout.
pub fn monomials_of_degree(r: usize, d: usize) -> Vec<Monomial> {
    fn rec(r: usize, d: usize, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if r == 1 {
            prefix.push(d as u32);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a as u32);
            rec(r - 1, d - a, prefix, out);
            prefix.pop();
        }
    }
    assert!(r >= 1);
    let mut out = Vec::new();
    rec(r, d, &mut Vec::with_capacity(r), &mut out);
    out
}

/// A set of t distinct monomials of common degree e in r variables: the
/// generators of a monomial level algebra's inverse system.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSet {
    r: usize,
    monomials: Vec<Monomial>,
}

impl GeneratorSet {
    /// Validates distinctness, common degree, and variable count; monomials
    /// are stored sorted so equal sets compare equal.
    pub fn new(r: usize, mut monomials: Vec<Monomial>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidGenerators("need at least one variable".into()));
        }
        if monomials.is_empty() {
            return Err(Error::InvalidGenerators("no generators given".into()));
        }
        for m in &monomials {
            if m.num_vars() != r {
                return Err(Error::InvalidGenerators(format!(
                    "monomial {m} has {} variables, expected {r}",
                    m.num_vars()
                )));
            }
        }
        let e = monomials[0].degree();
        if let Some(bad) = monomials.iter().find(|m| m.degree() != e) {
            return Err(Error::InvalidGenerators(format!(
                "mixed degrees: {bad} has degree {}, expected {e}",
                bad.degree()
            )));
        }
        monomials.sort();
        if monomials.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGenerators("duplicate generators".into()));
        }
        Ok(GeneratorSet { r, monomials })
    }

    /// Strict codimension check: every variable must divide at least one
    /// generator, otherwise the true codimension is smaller than r.
    pub fn check_strict_codimension(&self) -> Result<()> {
        for k in 0..self.r {
            if self.monomials.iter().all(|m| m.exponents()[k] == 0) {
                return Err(Error::InvalidGenerators(format!(
                    "variable x{} divides no generator (strict codimension check)",
                    k + 1
                )));
            }
        }
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// The common degree e of the generators.
    pub fn degree(&self) -> usize {
        self.monomials[0].degree()
    }

    /// The number of generators t (the type of the level algebra).
    pub fn type_t(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn permuted(&self, perm: &[usize]) -> GeneratorSet {
        let monomials = self.monomials.iter().map(|m| m.permuted(perm)).collect();
        GeneratorSet::new(self.r, monomials).expect("permutation preserves validity")
    }

    /// Exponent vectors, in the set's sorted order.
    pub fn exponent_lists(&self) -> Vec<Vec<u32>> {
        self.monomials.iter().map(|m| m.exponents().to_vec()).collect()
    }

    /// Parse a comma-separated list in the text syntax. The number of
    /// variables is taken from `r`, or inferred as the largest index used.
    pub fn parse(input: &str, r: Option<usize>) -> Result<GeneratorSet> {
        let parts: Vec<&str> = input
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        if parts.is_empty() {
            return Err(Error::Parse("no generators given".into()));
        }
        let sparse = parts
            .iter()
            .map(|p| Monomial::parse_sparse(p))
            .collect::<Result<Vec<_>>>()?;
        let max_idx = sparse
            .iter()
            .flat_map(|pairs| pairs.iter().map(|&(idx, _)| idx))
            .max()
            .unwrap_or(1);
        let r = r.unwrap_or(max_idx);
        let monomials = parts
            .iter()
            .map(|p| Monomial::parse(p, r))
            .collect::<Result<Vec<_>>>()?;
        GeneratorSet::new(r, monomials)
    }

    /// Build from raw exponent vectors (the JSON interface).
    pub fn from_exponents(r: Option<usize>, lists: Vec<Vec<u32>>) -> Result<GeneratorSet> {
        let r = match r {
            Some(r) => r,
            None => lists
                .first()
                .map(|l| l.len())
                .ok_or_else(|| Error::InvalidGenerators("no generators given".into()))?,
        };
        let monomials = lists
            .into_iter()
            .map(|mut l| {
                if l.len() < r {
                    l.resize(r, 0);
                }
                if l.len() != r {
                    return Err(Error::InvalidGenerators(format!(
                        "exponent vector of length {} exceeds r = {r}",
                        l.len()
                    )));
                }
                Ok(Monomial::new(l))
            })
            .collect::<Result<Vec<_>>>()?;
        GeneratorSet::new(r, monomials)
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.monomials.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_text_syntax() {
        let m = Monomial::parse("x1^4*x2*x3^2", 3).unwrap();
        assert_eq!(m.exponents(), &[4, 1, 2]);
        assert_eq!(m.degree(), 7);
        assert_eq!(m.to_string(), "x1^4*x2*x3^2");
        assert!(Monomial::parse("y1", 2).is_err());
        assert!(Monomial::parse("x0", 2).is_err());
        assert!(Monomial::parse("x3", 2).is_err());
    }

    #[test]
    fn gcd_is_componentwise_min() {
        let a = Monomial::new(vec![1, 1, 1]);
        let b = Monomial::new(vec![1, 0, 2]);
        assert_eq!(a.gcd(&b).exponents(), &[1, 0, 1]);
        assert!(a.gcd(&b).divides(&a));
        assert!(a.gcd(&b).divides(&b));
    }

    #[test]
    fn generator_set_validation() {
        let gens = GeneratorSet::parse("x1*x2*x3, x1*x3^2", None).unwrap();
        assert_eq!(gens.r(), 3);
        assert_eq!(gens.degree(), 3);
        assert_eq!(gens.type_t(), 2);

        // mixed degrees
        assert!(GeneratorSet::parse("x1^2, x1", None).is_err());
        // duplicates
        assert!(GeneratorSet::parse("x1*x2, x2*x1", None).is_err());
        // empty
        assert!(GeneratorSet::parse("", None).is_err());
    }

    #[test]
    fn strict_codimension() {
        let gens = GeneratorSet::parse("x1^2", Some(2)).unwrap();
        assert!(gens.check_strict_codimension().is_err());
        let gens = GeneratorSet::parse("x1*x2", Some(2)).unwrap();
        assert!(gens.check_strict_codimension().is_ok());
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(1, 7).len(), 1);
        assert_eq!(monomials_of_degree(4, 9).len(), 220);
        // all distinct, all of the right degree
        let ms = monomials_of_degree(3, 5);
        for m in &ms {
            assert_eq!(m.degree(), 5);
        }
        let mut sorted = ms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ms.len());
    }

    #[test]
    fn permutation_relabels_variables() {
        let m = Monomial::new(vec![2, 1, 0]);
        // send x1 -> x3, x2 -> x1, x3 -> x2
        let p = m.permuted(&[2, 0, 1]);
        assert_eq!(p.exponents(), &[1, 0, 2]);
    }
}
