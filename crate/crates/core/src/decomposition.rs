//! Irreducible decomposition, associated primes, the invariant c(I), and
//! symbolic powers of square-free ideals.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::Lattice;
use crate::limits::Limits;
use crate::ring::{Monomial, Ring};

/// A monomial prime: the ideal generated by a non-empty set of variables.
/// Canonical order is by cardinality, then by the variable index sequence.
#[derive(Clone)]
pub struct PrimeIdeal {
    ring: Ring,
    vars: Vec<usize>,
}

impl PrimeIdeal {
    pub fn new(ring: Ring, mut vars: Vec<usize>) -> Result<PrimeIdeal> {
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() || vars.iter().any(|&v| v >= ring.arity()) {
            return Err(Error::InvalidPrime);
        }
        Ok(PrimeIdeal { ring, vars })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_var(&self, index: usize) -> bool {
        self.vars.binary_search(&index).is_ok()
    }

    /// Initial degree of the prime; variable-generated, so always 1.
    pub fn alpha(&self) -> u32 {
        self.vars
            .iter()
            .map(|&v| self.ring.var(v).degree())
            .min()
            .expect("prime is non-empty")
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.ring.clone(),
            self.vars.iter().map(|&v| self.ring.var(v)).collect(),
        )
    }

    pub fn is_subset_of(&self, other: &PrimeIdeal) -> bool {
        self.vars.iter().all(|v| other.contains_var(*v))
    }
}

impl PartialEq for PrimeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.vars == other.vars
    }
}

impl Eq for PrimeIdeal {}

impl std::hash::Hash for PrimeIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vars.hash(state);
    }
}

impl Ord for PrimeIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars
            .len()
            .cmp(&other.vars.len())
            .then_with(|| self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for PrimeIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vars.iter().map(|&v| self.ring.name(v)).collect();
        write!(f, "<{}>", names.join(","))
    }
}

/// An irreducible monomial ideal `<x_i^{a_i} : i in support>`, stored as
/// sorted (variable, exponent) pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IrreducibleComponent {
    powers: Vec<(usize, u32)>,
}

impl IrreducibleComponent {
    fn new(mut powers: Vec<(usize, u32)>) -> IrreducibleComponent {
        powers.sort_unstable();
        debug_assert!(powers.iter().all(|&(_, a)| a >= 1));
        IrreducibleComponent { powers }
    }

    pub fn powers(&self) -> &[(usize, u32)] {
        &self.powers
    }

    pub fn support(&self) -> Vec<usize> {
        self.powers.iter().map(|&(v, _)| v).collect()
    }

    pub fn to_ideal(&self, ring: &Ring) -> MonomialIdeal {
        MonomialIdeal::new(
            ring.clone(),
            self.powers
                .iter()
                .map(|&(v, a)| ring.var_pow(v, a))
                .collect(),
        )
    }

    /// Ideal containment: self is contained in other iff every pure power of
    /// self is a multiple of the matching pure power of other.
    fn subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.powers.iter().all(|&(v, b)| {
            other
                .powers
                .iter()
                .any(|&(w, a)| w == v && a <= b)
        })
    }
}

/// The associated primes of an ideal, canonically sorted, with the
/// inclusion-minimal members flagged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedPrimes {
    pub primes: Vec<PrimeIdeal>,
    pub minimal: Vec<bool>,
}

impl AssociatedPrimes {
    fn from_primes(mut primes: Vec<PrimeIdeal>) -> AssociatedPrimes {
        primes.sort();
        primes.dedup();
        let minimal = primes
            .iter()
            .map(|p| {
                !primes
                    .iter()
                    .any(|q| q.len() < p.len() && q.is_subset_of(p))
            })
            .collect();
        AssociatedPrimes { primes, minimal }
    }

    pub fn minimal_primes(&self) -> impl Iterator<Item = &PrimeIdeal> {
        self.primes
            .iter()
            .zip(&self.minimal)
            .filter(|(_, &m)| m)
            .map(|(p, _)| p)
    }

    pub fn embedded_primes(&self) -> impl Iterator<Item = &PrimeIdeal> {
        self.primes
            .iter()
            .zip(&self.minimal)
            .filter(|(_, &m)| !m)
            .map(|(p, _)| p)
    }

    pub fn contains(&self, p: &PrimeIdeal) -> bool {
        self.primes.binary_search(p).is_ok()
    }
}

fn require_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// Irredundant irreducible decomposition by generator splitting.
///
/// A generator `u = x_j^{a} * w` with coprime factors splits the ideal as
/// `(I + <x_j^a>) ∩ (I + <w>)`; recursion bottoms out when every generator
/// is a pure power. The split always targets the canonically first
/// generator with at least two support variables and peels off the pure
/// power of its first support variable, so the recursion tree is
/// deterministic. A component is redundant exactly when it contains another
/// component (for irreducible monomial ideals the witness lcm argument
/// reduces redundancy against an intersection to pairwise containment).
pub fn irreducible_decomposition(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<Vec<IrreducibleComponent>> {
    require_proper_nonzero(ideal)?;
    let ring = ideal.ring().clone();
    let mut stack = vec![ideal.clone()];
    let mut components: HashSet<IrreducibleComponent> = HashSet::new();
    let mut nodes = 0usize;
    while let Some(current) = stack.pop() {
        nodes += 1;
        if nodes > limits.max_generators {
            return Err(Error::DecompositionLimit {
                limit: limits.max_generators,
            });
        }
        match current
            .gens()
            .iter()
            .find(|g| g.support_size() >= 2)
            .cloned()
        {
            None => {
                let powers = current
                    .gens()
                    .iter()
                    .map(|g| {
                        let v = g.support().next().expect("proper pure power");
                        (v, g.exponent(v))
                    })
                    .collect();
                components.insert(IrreducibleComponent::new(powers));
            }
            Some(u) => {
                let j = u.support().next().expect("non-unit generator");
                let pure = ring.var_pow(j, u.exponent(j));
                let rest = u.colon_quotient(&pure);
                for piece in [pure, rest] {
                    let mut gens = current.gens().to_vec();
                    gens.push(piece);
                    stack.push(MonomialIdeal::new(ring.clone(), gens));
                }
            }
        }
    }
    let mut components: Vec<IrreducibleComponent> = components.into_iter().collect();
    components.sort();
    let irredundant: Vec<IrreducibleComponent> = components
        .iter()
        .filter(|c| {
            !components
                .iter()
                .any(|other| other != *c && other.subset_of(c))
        })
        .cloned()
        .collect();
    Ok(irredundant)
}

/// The associated primes of a proper nonzero monomial ideal.
///
/// A prime on a variable set A is associated iff, after sending every
/// variable outside A to 1, the localized ideal has a monomial f outside it
/// with x_i * f inside it for all i in A. Candidate sets are the vertex
/// covers of the generator supports; the socle test runs on the divisor
/// lattice of the localized generator lcm.
pub fn associated_primes(ideal: &MonomialIdeal, limits: &Limits) -> Result<AssociatedPrimes> {
    require_proper_nonzero(ideal)?;
    let ring = ideal.ring();
    let n = ring.arity();
    if n >= 28 {
        return Err(Error::LatticeLimit {
            points: 1u128 << n,
            limit: limits.max_lattice_points,
        });
    }
    let support_masks: Vec<u32> = ideal
        .gens()
        .iter()
        .map(|g| g.support().fold(0u32, |m, v| m | (1 << v)))
        .collect();
    let used: u32 = support_masks.iter().fold(0, |a, b| a | b);

    let mut primes = Vec::new();
    let mut subset = used;
    // Enumerate the subsets of the used variables.
    loop {
        if subset != 0 && support_masks.iter().all(|&m| m & subset != 0) {
            let vars: Vec<usize> = (0..n).filter(|&v| subset & (1 << v) != 0).collect();
            let localized = MonomialIdeal::new(
                ring.clone(),
                ideal
                    .gens()
                    .iter()
                    .map(|g| {
                        let exps: Vec<u32> = (0..n)
                            .map(|v| if subset & (1 << v) != 0 { g.exponent(v) } else { 0 })
                            .collect();
                        Monomial::new(exps)
                    })
                    .collect(),
            );
            let lattice = Lattice::new(&localized, limits)?;
            if lattice.socle_nonempty(&vars) {
                primes.push(PrimeIdeal::new(ring.clone(), vars)?);
            }
        }
        if subset == 0 {
            break;
        }
        subset = (subset - 1) & used;
    }
    Ok(AssociatedPrimes::from_primes(primes))
}

/// `c(I) = max { alpha(p) : p in Ass(I) }`; equals 1 for monomial ideals
/// since every associated prime is variable-generated.
pub fn c_invariant(ideal: &MonomialIdeal, limits: &Limits) -> Result<u32> {
    let ass = associated_primes(ideal, limits)?;
    Ok(ass
        .primes
        .iter()
        .map(PrimeIdeal::alpha)
        .max()
        .expect("proper nonzero ideal has an associated prime"))
}

/// The k-th symbolic power of a square-free ideal: the intersection of the
/// k-th powers of its minimal primes.
pub fn symbolic_power_squarefree(
    ideal: &MonomialIdeal,
    k: u32,
    limits: &Limits,
) -> Result<MonomialIdeal> {
    require_proper_nonzero(ideal)?;
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if k < 1 {
        return Err(Error::InvalidPower);
    }
    let ass = associated_primes(ideal, limits)?;
    let mut acc: Option<MonomialIdeal> = None;
    for p in ass.minimal_primes() {
        let pk = p.to_ideal().power_with(k, limits)?;
        let next = match acc {
            None => pk,
            Some(a) => a.intersect(&pk),
        };
        if next.num_generators() > limits.max_generators {
            return Err(Error::GeneratorLimit {
                count: next.num_generators(),
                limit: limits.max_generators,
            });
        }
        acc = Some(next);
    }
    Ok(acc.expect("proper nonzero ideal has a minimal prime"))
}
