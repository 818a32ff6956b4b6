//! Divisor-lattice machinery shared by the associated-prime and
//! colon-by-prime computations.
//!
//! Every minimal generator of `(I : p)` divides `lcm(G(I))`: replacing a
//! generator `g` by `gcd(g, lcm)` leaves every quotient `u / gcd(u, g)`
//! unchanged, so the colon ideal is unchanged and minimality forces
//! `g | lcm`. The same truncation argument caps socle witnesses. Both
//! computations therefore reduce to scans over the finite lattice of
//! divisors of the generator lcm, with membership closed upward once by
//! dynamic programming.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::ring::Monomial;

struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(len: usize) -> BitSet {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    fn get(&self, i: usize) -> bool {
        self.words[i >> 6] & (1 << (i & 63)) != 0
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }
}

/// Walks all exponent vectors below `dims` in mixed-radix order, least
/// significant variable first.
struct Odometer {
    exps: Vec<u32>,
    dims: Vec<u32>,
    done: bool,
}

impl Odometer {
    fn new(dims: &[u32]) -> Odometer {
        Odometer {
            exps: vec![0; dims.len()],
            dims: dims.to_vec(),
            done: false,
        }
    }

    fn step(&mut self) {
        for i in 0..self.exps.len() {
            if self.exps[i] < self.dims[i] {
                self.exps[i] += 1;
                return;
            }
            self.exps[i] = 0;
        }
        self.done = true;
    }
}

pub(crate) struct Lattice {
    /// Maximum exponent per variable (the lcm of the generators).
    caps: Vec<u32>,
    strides: Vec<usize>,
    size: usize,
    membership: BitSet,
}

impl Lattice {
    /// Estimated point count for the lattice of an ideal's generator lcm.
    pub(crate) fn point_count(ideal: &MonomialIdeal) -> u128 {
        ideal
            .lcm_of_generators()
            .exponents()
            .iter()
            .fold(1u128, |acc, &e| acc.saturating_mul(e as u128 + 1))
    }

    pub(crate) fn new(ideal: &MonomialIdeal, limits: &Limits) -> Result<Lattice> {
        let lcm = ideal.lcm_of_generators();
        let caps: Vec<u32> = lcm.exponents().to_vec();
        let points = Lattice::point_count(ideal);
        if points > limits.max_lattice_points as u128 {
            return Err(Error::LatticeLimit {
                points,
                limit: limits.max_lattice_points,
            });
        }
        let size = points as usize;
        let mut strides = vec![0usize; caps.len()];
        let mut acc = 1usize;
        for (i, &c) in caps.iter().enumerate() {
            strides[i] = acc;
            acc *= c as usize + 1;
        }

        let mut membership = BitSet::new(size);
        for g in ideal.gens() {
            let idx: usize = g
                .exponents()
                .iter()
                .zip(&strides)
                .map(|(&e, &s)| e as usize * s)
                .sum();
            membership.set(idx);
        }
        // Upward closure: a point is in the ideal iff it is a generator or
        // any single-step predecessor is. Predecessor indices are smaller,
        // so one ascending sweep suffices.
        let mut odo = Odometer::new(&caps);
        for idx in 0..size {
            if !membership.get(idx) {
                for (i, &e) in odo.exps.iter().enumerate() {
                    if e > 0 && membership.get(idx - strides[i]) {
                        membership.set(idx);
                        break;
                    }
                }
            }
            odo.step();
        }

        Ok(Lattice {
            caps,
            strides,
            size,
            membership,
        })
    }

    /// Membership of `point * x_i`, capping exponents at the lcm (valid
    /// because every generator divides the lcm).
    #[inline]
    fn contains_after_mul(&self, idx: usize, exps: &[u32], var: usize) -> bool {
        if exps[var] >= self.caps[var] {
            self.membership.get(idx)
        } else {
            self.membership.get(idx + self.strides[var])
        }
    }

    /// True iff some monomial `f` outside the ideal has `x_i * f` inside it
    /// for every `i` in `vars` — i.e. `(I : f)` is exactly the prime on
    /// `vars`.
    pub(crate) fn socle_nonempty(&self, vars: &[usize]) -> bool {
        let mut odo = Odometer::new(&self.caps);
        for idx in 0..self.size {
            if !self.membership.get(idx)
                && vars
                    .iter()
                    .all(|&v| self.contains_after_mul(idx, &odo.exps, v))
            {
                return true;
            }
            odo.step();
        }
        false
    }

    /// Minimal generators of `(I : <x_v : v in vars>)`, sorted canonically.
    pub(crate) fn colon_by_vars_gens<F>(&self, vars: &[usize], to_monomial: F) -> Vec<Monomial>
    where
        F: Fn(&[u32]) -> Monomial,
    {
        let mut upset = BitSet::new(self.size);
        let mut odo = Odometer::new(&self.caps);
        for idx in 0..self.size {
            if vars
                .iter()
                .all(|&v| self.contains_after_mul(idx, &odo.exps, v))
            {
                upset.set(idx);
            }
            odo.step();
        }
        let mut gens = Vec::new();
        let mut odo = Odometer::new(&self.caps);
        for idx in 0..self.size {
            if upset.get(idx) {
                let minimal = odo
                    .exps
                    .iter()
                    .enumerate()
                    .all(|(i, &e)| e == 0 || !upset.get(idx - self.strides[i]));
                if minimal {
                    gens.push(to_monomial(&odo.exps));
                }
            }
            odo.step();
        }
        gens.sort();
        gens
    }
}
