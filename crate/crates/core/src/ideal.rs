use std::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ring::{Monomial, Ring};

/// A monomial ideal held by its canonical minimal generating set.
///
/// Invariants: no generator divides another, and generators are sorted in
/// the graded lexicographic order of the ring. The zero ideal has an empty
/// generator set; the unit ideal is generated by the unit monomial. Two
/// ideals are equal iff their rings and canonical generator sequences are.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Removes duplicates and divisibility-redundant monomials, returning the
/// sorted minimal generating set of the ideal they generate.
fn minimal_sorted(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    'outer: for g in gens {
        // Sorted ascending: a proper divisor of g has strictly smaller degree,
        // so only earlier entries of smaller degree can eliminate g.
        for k in &kept {
            if k.degree() == g.degree() {
                break;
            }
            if k.divides(&g) {
                continue 'outer;
            }
        }
        kept.push(g);
    }
    kept
}

impl MonomialIdeal {
    /// Canonicalizes an arbitrary generating set (the `minimalize` operation).
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> MonomialIdeal {
        for g in &gens {
            assert_eq!(g.arity(), ring.arity(), "monomial from another ring");
        }
        MonomialIdeal {
            ring,
            gens: minimal_sorted(gens),
        }
    }

    pub fn zero(ring: Ring) -> MonomialIdeal {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Ring) -> MonomialIdeal {
        let one = ring.one();
        MonomialIdeal { ring, gens: vec![one] }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    /// Proper means not the unit ideal (the zero ideal is proper).
    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Minimum generator degree; `None` for the zero ideal.
    pub fn alpha(&self) -> Option<u32> {
        self.gens.first().map(Monomial::degree)
    }

    pub fn is_equigenerated(&self) -> bool {
        match self.gens.split_first() {
            None => true,
            Some((first, rest)) => {
                let d = first.degree();
                rest.iter().all(|g| g.degree() == d)
            }
        }
    }

    /// Least common multiple of the generators (the unit for the zero ideal).
    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens
            .iter()
            .fold(self.ring.one(), |acc, g| acc.lcm(g))
    }

    /// Membership test: some generator divides `f`.
    pub fn contains(&self, f: &Monomial) -> bool {
        assert_eq!(f.arity(), self.ring.arity(), "monomial from another ring");
        self.gens.iter().any(|g| g.divides(f))
    }

    /// Inclusion test: every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        other.gens.iter().all(|g| self.contains(g))
    }

    /// The colon ideal `(self : f)`, generated by `u / gcd(u, f)` over the
    /// generators. Returns the unit ideal iff `f` lies in the ideal, and the
    /// zero ideal for the zero ideal.
    pub fn colon_monomial(&self, f: &Monomial) -> MonomialIdeal {
        assert_eq!(f.arity(), self.ring.arity(), "monomial from another ring");
        let quotients = self.gens.iter().map(|u| u.colon_quotient(f)).collect();
        MonomialIdeal::new(self.ring.clone(), quotients)
    }

    /// The colon ideal `(self : other)`, computed as the intersection of
    /// `(self : g)` over the generators of `other`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        if self.is_zero() {
            return MonomialIdeal::zero(self.ring.clone());
        }
        if other.is_zero() {
            // Every element multiplies the zero ideal into self.
            return MonomialIdeal::unit(self.ring.clone());
        }
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.gens {
            let colon = self.colon_monomial(g);
            acc = Some(match acc {
                None => colon,
                Some(a) => a.intersect(&colon),
            });
        }
        acc.unwrap()
    }

    /// Intersection via pairwise lcm of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                lcms.push(u.lcm(v));
            }
        }
        MonomialIdeal::new(self.ring.clone(), lcms)
    }

    /// Product ideal, generated by pairwise products.
    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                prods.push(u.mul(v));
            }
        }
        MonomialIdeal::new(self.ring.clone(), prods)
    }

    /// `k`-th power (`k >= 1`), computed by iterated products with
    /// minimalization at every step to bound intermediate blowup.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        self.power_with(k, &Limits::DEFAULT)
    }

    pub fn power_with(&self, k: u32, limits: &Limits) -> Result<MonomialIdeal> {
        if k < 1 {
            return Err(Error::InvalidPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            let pairs = acc.gens.len().saturating_mul(self.gens.len());
            if pairs > 10_000_000 {
                return Err(Error::GeneratorLimit {
                    count: pairs,
                    limit: limits.max_generators,
                });
            }
            acc = acc.product(self);
            if acc.gens.len() > limits.max_generators {
                return Err(Error::GeneratorLimit {
                    count: acc.gens.len(),
                    limit: limits.max_generators,
                });
            }
        }
        Ok(acc)
    }

    pub fn profile(&self) -> IdealProfile {
        let alpha = self.alpha();
        IdealProfile {
            alpha,
            equigenerated: self.is_equigenerated(),
            squarefree: self.is_squarefree(),
            lcm_of_generators: self.lcm_of_generators(),
            num_generators: self.gens.len(),
        }
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "<0>");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.display(g)).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// Coarse shape data for an ideal: initial degree, equigeneration,
/// square-freeness, generator lcm and count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealProfile {
    pub alpha: Option<u32>,
    pub equigenerated: bool,
    pub squarefree: bool,
    pub lcm_of_generators: Monomial,
    pub num_generators: usize,
}

/// All divisors of `bound`, in canonical (degree, lex) order.
pub fn divisors(ring: &Ring, bound: &Monomial) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for i in 0..ring.arity() {
        let mut next = Vec::with_capacity(out.len() * (bound.exponent(i) as usize + 1));
        for prefix in &out {
            for e in 0..=bound.exponent(i) {
                let mut v = prefix.clone();
                v.push(e);
                next.push(v);
            }
        }
        out = next;
    }
    let mut ms: Vec<Monomial> = out.into_iter().map(|v| ring.monomial(&v)).collect();
    ms.sort();
    ms
}
