use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ambient polynomial ring: an ordered list of distinct variable names.
///
/// The coefficient field is never materialized; every computation in this
/// crate is exact arithmetic on exponent vectors. The declared variable
/// order is fixed at construction and drives all canonical orderings.
#[derive(Clone, Debug)]
pub struct Ring {
    names: Arc<Vec<String>>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new<I, S>(names: I) -> Result<Ring>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Ring {
            names: Arc::new(names),
        })
    }

    /// Ring with variables `x1, ..., xn`.
    pub fn with_arity(n: usize) -> Ring {
        Ring {
            names: Arc::new((1..=n).map(|i| format!("x{i}")).collect()),
        }
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The unit monomial 1.
    pub fn one(&self) -> Monomial {
        Monomial::new(vec![0; self.arity()])
    }

    /// The variable `x_index` as a monomial.
    pub fn var(&self, index: usize) -> Monomial {
        self.var_pow(index, 1)
    }

    pub fn var_pow(&self, index: usize, exp: u32) -> Monomial {
        assert!(index < self.arity(), "variable index out of range");
        let mut exps = vec![0; self.arity()];
        exps[index] = exp;
        Monomial::new(exps)
    }

    /// Monomial from an exponent slice; the length must match the arity.
    pub fn monomial(&self, exps: &[u32]) -> Monomial {
        assert_eq!(exps.len(), self.arity(), "exponent vector length mismatch");
        Monomial::new(exps.to_vec())
    }

    /// Renders a monomial in this ring, e.g. `x^2*y` (unit renders as `1`).
    pub fn display(&self, m: &Monomial) -> String {
        assert_eq!(m.arity(), self.arity(), "monomial from another ring");
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.name(i).to_string()),
                _ => parts.push(format!("{}^{}", self.name(i), e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Exponent vector of length equal to the ring arity; the unit monomial is
/// all zeros. Ordering is graded lexicographic: degree first, then the
/// exponent vector componentwise from the first variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub(crate) fn new(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    /// Componentwise divisibility test: true iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity(), "ring mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity(), "ring mismatch");
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity(), "ring mismatch");
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity(), "ring mismatch");
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// The quotient `self / gcd(self, f)`, i.e. saturating subtraction.
    pub fn colon_quotient(&self, f: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), f.arity(), "ring mismatch");
        Monomial::new(
            self.exps
                .iter()
                .zip(&f.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Componentwise minimum with `cap`.
    pub fn truncate(&self, cap: &Monomial) -> Monomial {
        self.gcd(cap)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_rejects_duplicate_names() {
        assert_eq!(
            Ring::new(["x", "y", "x"]).unwrap_err(),
            Error::DuplicateVariable("x".into())
        );
    }

    #[test]
    fn divides_is_componentwise() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let x1 = r.var(0);
        let x1x2 = r.monomial(&[1, 1]);
        let x1sq = r.monomial(&[2, 0]);
        assert!(x1.divides(&x1x2));
        assert!(r.one().divides(&x1sq));
        assert!(!x1sq.divides(&x1x2));
    }

    #[test]
    fn order_is_degree_then_lex() {
        let r = Ring::new(["x", "y"]).unwrap();
        let mut ms = vec![r.monomial(&[2, 0]), r.monomial(&[0, 1]), r.monomial(&[1, 1])];
        ms.sort();
        assert_eq!(ms, vec![r.monomial(&[0, 1]), r.monomial(&[1, 1]), r.monomial(&[2, 0])]);
    }

    #[test]
    fn display_round_trips_shape() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        assert_eq!(r.display(&r.monomial(&[0, 2, 1])), "y^2*z");
        assert_eq!(r.display(&r.one()), "1");
    }
}
