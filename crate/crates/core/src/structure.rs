//! Structural detectors and hypothesis checkers: polarization, linear
//! quotients, vertex splittability, torsion-freeness and persistence
//! windows, and unsupported witnesses.

use std::collections::HashMap;

use crate::decomposition::associated_primes;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::ring::{Monomial, Ring};
use crate::vnumber::{colon_by_prime_gens, prime_colon, v_number, witness_cmp, VWitness};

fn require_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(())
}

fn require_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    require_nonzero(ideal)?;
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// Correspondence between a ring and its polarized extension: variable i
/// expands into `slots[i].len()` square-free slots.
#[derive(Clone, Debug)]
pub struct Polarization {
    pub source: Ring,
    pub target: Ring,
    slots: Vec<Vec<usize>>,
}

impl Polarization {
    pub fn slots(&self, var: usize) -> &[usize] {
        &self.slots[var]
    }

    pub fn polarize_monomial(&self, m: &Monomial) -> Monomial {
        let mut exps = vec![0u32; self.target.arity()];
        for (i, &e) in m.exponents().iter().enumerate() {
            for j in 0..e as usize {
                exps[self.slots[i][j]] = 1;
            }
        }
        self.target.monomial(&exps)
    }
}

/// Polarization: each power x_i^a expands into a product of `a` distinct
/// slot variables, yielding a square-free ideal in the extended ring with
/// per-generator degrees preserved.
pub fn polarize(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, Polarization)> {
    require_nonzero(ideal)?;
    let source = ideal.ring().clone();
    let lcm = ideal.lcm_of_generators();
    let mut names = Vec::new();
    let mut slots = Vec::with_capacity(source.arity());
    for i in 0..source.arity() {
        let mut var_slots = Vec::new();
        for j in 1..=lcm.exponent(i) {
            var_slots.push(names.len());
            names.push(format!("{}_{}", source.name(i), j));
        }
        slots.push(var_slots);
    }
    let target = Ring::new(names)?;
    let map = Polarization {
        source,
        target: target.clone(),
        slots,
    };
    let gens = ideal
        .gens()
        .iter()
        .map(|g| map.polarize_monomial(g))
        .collect();
    Ok((MonomialIdeal::new(target, gens), map))
}

/// Outcome of the linear-quotients search. `Unknown` only occurs when the
/// backtracking budget is exhausted on large generator sets; below ten
/// generators the search is exhaustive and `Absent` is definitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearQuotients {
    Found(Vec<Monomial>),
    Absent,
    Unknown,
}

/// Searches for an ordering u_1, ..., u_r of the generators with every
/// colon `<u_1, ..., u_{i-1}> : u_i` generated by variables, by
/// backtracking over candidates in canonical order.
pub fn has_linear_quotients(ideal: &MonomialIdeal) -> Result<LinearQuotients> {
    if !ideal.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    let gens = ideal.gens();
    if gens.len() <= 1 {
        return Ok(LinearQuotients::Found(gens.to_vec()));
    }
    let budget: usize = if gens.len() < 10 { 2_000_000 } else { 200_000 };

    fn admissible(chosen: &[usize], candidate: usize, gens: &[Monomial]) -> bool {
        let cand = &gens[candidate];
        let n = cand.arity();
        let mut is_var = vec![false; n];
        let mut quotients: Vec<&Monomial> = Vec::new();
        let mut stored: Vec<Monomial> = Vec::with_capacity(chosen.len());
        for &c in chosen {
            let q = gens[c].colon_quotient(cand);
            debug_assert!(!q.is_unit(), "minimal generators are incomparable");
            if q.degree() == 1 {
                is_var[q.support().next().unwrap()] = true;
            } else {
                stored.push(q);
            }
        }
        quotients.extend(stored.iter());
        quotients
            .iter()
            .all(|q| q.support().any(|v| is_var[v]))
    }

    fn search(
        chosen: &mut Vec<usize>,
        used: &mut Vec<bool>,
        gens: &[Monomial],
        nodes: &mut usize,
        budget: usize,
    ) -> Option<bool> {
        // Some(true): ordering completed in `chosen`. Some(false): subtree
        // exhausted. None: budget ran out.
        if chosen.len() == gens.len() {
            return Some(true);
        }
        for i in 0..gens.len() {
            if used[i] {
                continue;
            }
            *nodes += 1;
            if *nodes > budget {
                return None;
            }
            if admissible(chosen, i, gens) {
                chosen.push(i);
                used[i] = true;
                match search(chosen, used, gens, nodes, budget) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
                chosen.pop();
                used[i] = false;
            }
        }
        Some(false)
    }

    let mut chosen = Vec::with_capacity(gens.len());
    let mut used = vec![false; gens.len()];
    let mut nodes = 0usize;
    match search(&mut chosen, &mut used, gens, &mut nodes, budget) {
        Some(true) => Ok(LinearQuotients::Found(
            chosen.into_iter().map(|i| gens[i].clone()).collect(),
        )),
        Some(false) => Ok(LinearQuotients::Absent),
        None => Ok(LinearQuotients::Unknown),
    }
}

/// Witness tree for the recursive vertex-splittable structure
/// I = x*I1 + I2 with G(I) = G(x*I1) ⊔ G(I2) and I2 ⊆ I1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitTree {
    Leaf(SplitLeaf),
    Node {
        var: usize,
        /// The factor ideal I1 (multiplied by the splitting variable).
        left: Box<SplitTree>,
        /// The remainder ideal I2.
        right: Box<SplitTree>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitLeaf {
    Zero,
    Unit,
    Principal(Monomial),
}

impl SplitTree {
    /// Reconstructs the ideal the tree describes; replaying and comparing
    /// against the original verifies the witness.
    pub fn replay(&self, ring: &Ring) -> MonomialIdeal {
        match self {
            SplitTree::Leaf(SplitLeaf::Zero) => MonomialIdeal::zero(ring.clone()),
            SplitTree::Leaf(SplitLeaf::Unit) => MonomialIdeal::unit(ring.clone()),
            SplitTree::Leaf(SplitLeaf::Principal(m)) => {
                MonomialIdeal::new(ring.clone(), vec![m.clone()])
            }
            SplitTree::Node { var, left, right } => {
                let x = ring.var(*var);
                let mut gens: Vec<Monomial> = left
                    .replay(ring)
                    .gens()
                    .iter()
                    .map(|g| g.mul(&x))
                    .collect();
                gens.extend(right.replay(ring).gens().iter().cloned());
                MonomialIdeal::new(ring.clone(), gens)
            }
        }
    }
}

/// Finds a vertex-splitting tree, trying splitting variables in ring order
/// and memoizing on canonical generator sets.
pub fn is_vertex_splittable(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<Option<SplitTree>> {
    let mut memo: HashMap<Vec<Monomial>, Option<SplitTree>> = HashMap::new();
    split_rec(ideal, &mut memo, limits)
}

fn split_rec(
    ideal: &MonomialIdeal,
    memo: &mut HashMap<Vec<Monomial>, Option<SplitTree>>,
    limits: &Limits,
) -> Result<Option<SplitTree>> {
    if ideal.is_zero() {
        return Ok(Some(SplitTree::Leaf(SplitLeaf::Zero)));
    }
    if ideal.is_unit() {
        return Ok(Some(SplitTree::Leaf(SplitLeaf::Unit)));
    }
    if ideal.num_generators() == 1 {
        return Ok(Some(SplitTree::Leaf(SplitLeaf::Principal(
            ideal.gens()[0].clone(),
        ))));
    }
    let key = ideal.gens().to_vec();
    if let Some(cached) = memo.get(&key) {
        return Ok(cached.clone());
    }
    if memo.len() > limits.max_generators {
        return Err(Error::DecompositionLimit {
            limit: limits.max_generators,
        });
    }
    let ring = ideal.ring();
    let mut found = None;
    'vars: for x in 0..ring.arity() {
        let mut left_gens = Vec::new();
        let mut right_gens = Vec::new();
        for g in ideal.gens() {
            match g.exponent(x) {
                0 => right_gens.push(g.clone()),
                1 => left_gens.push(g.colon_quotient(&ring.var(x))),
                _ => continue 'vars, // I1 would retain x
            }
        }
        if left_gens.is_empty() {
            continue;
        }
        let left = MonomialIdeal::new(ring.clone(), left_gens);
        let right = MonomialIdeal::new(ring.clone(), right_gens);
        // I2 ⊆ I1 and the generator partition must be exact.
        if !left.contains_ideal(&right) {
            continue;
        }
        if let (Some(lt), Some(rt)) = (
            split_rec(&left, memo, limits)?,
            split_rec(&right, memo, limits)?,
        ) {
            found = Some(SplitTree::Node {
                var: x,
                left: Box::new(lt),
                right: Box::new(rt),
            });
            break;
        }
    }
    memo.insert(key, found.clone());
    Ok(found)
}

/// Per-power torsion-freeness record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NtfRow {
    pub k: u32,
    /// Ass(I^k) ⊆ Ass(I).
    pub ass_contained: bool,
    /// For square-free ideals: I^k equals the k-th symbolic power.
    pub symbolic_matches: Option<bool>,
}

/// Checks Ass(I^k) ⊆ Ass(I) for k = 1..kmax; for square-free ideals also
/// compares each power against the symbolic power. A finite window cannot
/// certify torsion-freeness, hence per-k flags rather than a verdict.
pub fn is_ntf_upto(ideal: &MonomialIdeal, kmax: u32, limits: &Limits) -> Result<Vec<NtfRow>> {
    require_proper_nonzero(ideal)?;
    if kmax < 1 {
        return Err(Error::InvalidPower);
    }
    let base = associated_primes(ideal, limits)?;
    let squarefree = ideal.is_squarefree();
    let mut rows = Vec::new();
    let mut power = ideal.clone();
    for k in 1..=kmax {
        if k > 1 {
            power = power.product(ideal);
            if power.num_generators() > limits.max_generators {
                return Err(Error::GeneratorLimit {
                    count: power.num_generators(),
                    limit: limits.max_generators,
                });
            }
        }
        let ass_k = associated_primes(&power, limits)?;
        let ass_contained = ass_k.primes.iter().all(|p| base.contains(p));
        let symbolic_matches = if squarefree {
            let symb = crate::decomposition::symbolic_power_squarefree(ideal, k, limits)?;
            Some(symb == power)
        } else {
            None
        };
        rows.push(NtfRow {
            k,
            ass_contained,
            symbolic_matches,
        });
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistenceRow {
    pub k: u32,
    /// (I^{k+1} : I) = I^k.
    pub holds: bool,
}

/// Strong persistence window check: (I^{k+1} : I) = I^k for k = 1..kmax.
pub fn has_strong_persistence_upto(
    ideal: &MonomialIdeal,
    kmax: u32,
    limits: &Limits,
) -> Result<Vec<PersistenceRow>> {
    require_proper_nonzero(ideal)?;
    if kmax < 1 {
        return Err(Error::InvalidPower);
    }
    let mut rows = Vec::new();
    let mut power = ideal.clone();
    for k in 1..=kmax {
        let next = power.product(ideal);
        if next.num_generators() > limits.max_generators {
            return Err(Error::GeneratorLimit {
                count: next.num_generators(),
                limit: limits.max_generators,
            });
        }
        let colon = next.colon_ideal(ideal);
        rows.push(PersistenceRow {
            k,
            holds: colon == power,
        });
        power = next;
    }
    Ok(rows)
}

/// A minimum-degree witness (f, p) with (I : f) = p and no variable of p
/// dividing f, or `None` when every degree-v(I) witness meets its prime.
///
/// Only minimal generators of (I : p) need scanning: a witness divisible by
/// a smaller one would contradict degree minimality, and divisors inherit
/// coprimality with p.
pub fn find_unsupported_witness(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<Option<VWitness>> {
    require_proper_nonzero(ideal)?;
    let v = v_number(ideal, limits)?.degree;
    let ass = associated_primes(ideal, limits)?;
    let mut best: Option<VWitness> = None;
    for prime in &ass.primes {
        for g in colon_by_prime_gens(ideal, prime, limits)? {
            if g.degree() > v {
                break;
            }
            if g.degree() < v || prime.vars().iter().any(|&x| g.exponent(x) > 0) {
                continue;
            }
            if let Some(p) = prime_colon(ideal, &g) {
                if p == *prime {
                    let w = VWitness {
                        degree: g.degree(),
                        monomial: g,
                        prime: p,
                    };
                    if best
                        .as_ref()
                        .is_none_or(|b| witness_cmp(&w, b) == std::cmp::Ordering::Less)
                    {
                        best = Some(w);
                    }
                    break;
                }
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::PrimeIdeal;

    fn ideal(ring: &Ring, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            ring.clone(),
            gens.iter().map(|e| ring.monomial(e)).collect(),
        )
    }

    const LIM: &Limits = &Limits::DEFAULT;

    #[test]
    fn polarize_definitional_expansion() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let i = ideal(&r, &[&[0, 2, 1], &[0, 0, 3], &[1, 2, 0]]);
        let (pol, map) = polarize(&i).unwrap();
        assert_eq!(
            map.target.names(),
            &["x_1", "y_1", "y_2", "z_1", "z_2", "z_3"]
        );
        assert!(pol.is_squarefree());
        let t = &map.target;
        let expected = MonomialIdeal::new(
            t.clone(),
            vec![
                // y1 y2 z1, z1 z2 z3, y1 y2 x1
                t.monomial(&[0, 1, 1, 1, 0, 0]),
                t.monomial(&[0, 0, 0, 1, 1, 1]),
                t.monomial(&[1, 1, 1, 0, 0, 0]),
            ],
        );
        assert_eq!(pol, expected);
        // Degrees preserved per generator.
        for g in i.gens() {
            assert_eq!(map.polarize_monomial(g).degree(), g.degree());
        }
    }

    #[test]
    fn polarize_squarefree_is_renaming() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = ideal(&r, &[&[1, 1]]);
        let (pol, map) = polarize(&i).unwrap();
        assert_eq!(map.target.names(), &["x_1", "y_1"]);
        assert_eq!(pol.gens().len(), 1);
        assert_eq!(pol.gens()[0].degree(), 2);
    }

    #[test]
    fn polarization_preserves_v_on_example() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let i = ideal(&r, &[&[0, 2, 1], &[0, 0, 3], &[1, 2, 0]]);
        let (pol, _) = polarize(&i).unwrap();
        assert_eq!(
            v_number(&i, LIM).unwrap().degree,
            v_number(&pol, LIM).unwrap().degree
        );
        assert_eq!(v_number(&pol, LIM).unwrap().degree, 2);
    }

    #[test]
    fn linear_quotients_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]);
        match has_linear_quotients(&i).unwrap() {
            LinearQuotients::Found(order) => {
                // Verify the defining colons are variable-generated.
                for idx in 1..order.len() {
                    let prefix = MonomialIdeal::new(r.clone(), order[..idx].to_vec());
                    let colon = prefix.colon_monomial(&order[idx]);
                    assert!(colon.gens().iter().all(|g| g.degree() == 1));
                }
            }
            other => panic!("expected ordering, got {other:?}"),
        }

        // Triangle edge ideal has linear quotients.
        let r3 = Ring::new(["x", "y", "z"]).unwrap();
        let tri = ideal(&r3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert!(matches!(
            has_linear_quotients(&tri).unwrap(),
            LinearQuotients::Found(_)
        ));

        // Two disjoint edges never do: each colon is a degree-2 principal.
        let r4 = Ring::with_arity(4);
        let disjoint = ideal(&r4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(
            has_linear_quotients(&disjoint).unwrap(),
            LinearQuotients::Absent
        );

        // Non-equigenerated input is rejected.
        let bad = ideal(&r, &[&[1, 0], &[0, 2]]);
        assert_eq!(
            has_linear_quotients(&bad).unwrap_err(),
            Error::NotEquigenerated
        );
    }

    #[test]
    fn vertex_splittable_examples() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        // Leaves.
        assert_eq!(
            is_vertex_splittable(&MonomialIdeal::zero(r.clone()), LIM).unwrap(),
            Some(SplitTree::Leaf(SplitLeaf::Zero))
        );
        assert_eq!(
            is_vertex_splittable(&MonomialIdeal::unit(r.clone()), LIM).unwrap(),
            Some(SplitTree::Leaf(SplitLeaf::Unit))
        );
        let principal = ideal(&r, &[&[1, 0, 0]]);
        assert!(matches!(
            is_vertex_splittable(&principal, LIM).unwrap(),
            Some(SplitTree::Leaf(SplitLeaf::Principal(_)))
        ));

        // <xy, xz> = x <y, z> + 0.
        let i = ideal(&r, &[&[1, 1, 0], &[1, 0, 1]]);
        let tree = is_vertex_splittable(&i, LIM).unwrap().unwrap();
        match &tree {
            SplitTree::Node { var, .. } => assert_eq!(*var, 0),
            other => panic!("expected split, got {other:?}"),
        }
        assert_eq!(tree.replay(&r), i);

        // Two disjoint edges are not vertex splittable.
        let r4 = Ring::with_arity(4);
        let disjoint = ideal(&r4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(is_vertex_splittable(&disjoint, LIM).unwrap(), None);

        // Variable-generated primes split down to leaves.
        let p = ideal(&r, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let tree = is_vertex_splittable(&p, LIM).unwrap().unwrap();
        assert_eq!(tree.replay(&r), p);
    }

    #[test]
    fn ntf_examples() {
        // Bipartite edge ideal: torsion-free window.
        let r6 = Ring::with_arity(6);
        let bip = ideal(
            &r6,
            &[
                &[1, 1, 0, 0, 0, 0],
                &[0, 1, 1, 0, 0, 0],
                &[0, 0, 0, 1, 1, 0],
                &[0, 0, 0, 0, 1, 1],
            ],
        );
        let rows = is_ntf_upto(&bip, 4, LIM).unwrap();
        assert!(rows.iter().all(|r| r.ass_contained));
        assert!(rows.iter().all(|r| r.symbolic_matches == Some(true)));

        // Triangle: fails at k = 2 (xyz separates I^2 from I^(2)).
        let r3 = Ring::new(["x", "y", "z"]).unwrap();
        let tri = ideal(&r3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let rows = is_ntf_upto(&tri, 3, LIM).unwrap();
        assert!(rows[0].ass_contained);
        assert!(!rows[1].ass_contained);
        assert_eq!(rows[1].symbolic_matches, Some(false));

        // Principal ideals are torsion-free at every power.
        let rx = Ring::new(["x", "y"]).unwrap();
        let principal = ideal(&rx, &[&[2, 1]]);
        let rows = is_ntf_upto(&principal, 4, LIM).unwrap();
        assert!(rows.iter().all(|r| r.ass_contained));
    }

    #[test]
    fn strong_persistence_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        let principal = ideal(&r, &[&[2, 1]]);
        assert!(has_strong_persistence_upto(&principal, 4, LIM)
            .unwrap()
            .iter()
            .all(|r| r.holds));

        let c5 = crate::graphs::Graph::cycle(5);
        let i5 = crate::graphs::edge_ideal(&c5).unwrap();
        assert!(has_strong_persistence_upto(&i5, 3, LIM)
            .unwrap()
            .iter()
            .all(|r| r.holds));

        let mixed = ideal(&r, &[&[2, 0], &[1, 1]]);
        let rows = has_strong_persistence_upto(&mixed, 3, LIM).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.holds));
    }

    #[test]
    fn unsupported_witness_examples() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let i = ideal(&r, &[&[0, 2, 1], &[0, 0, 3], &[1, 2, 0]]);
        let w = find_unsupported_witness(&i, LIM).unwrap().unwrap();
        assert_eq!(w.monomial, r.monomial(&[0, 2, 0]));
        assert_eq!(
            w.prime,
            PrimeIdeal::new(r.clone(), vec![0, 2]).unwrap()
        );

        // Square-free with v = alpha - 1: a witness avoiding its prime exists.
        let p3 = crate::graphs::Graph::path(3);
        let ip3 = crate::graphs::edge_ideal(&p3).unwrap();
        let w = find_unsupported_witness(&ip3, LIM).unwrap().unwrap();
        assert_eq!(w.degree, 1);

        // <x^2, xy>: enumerate all degree-1 witnesses by hand. (I : x) =
        // <x, y> meets x; (I : y) = <x> avoids y, so a witness exists.
        let r2 = Ring::new(["x", "y"]).unwrap();
        let j = ideal(&r2, &[&[2, 0], &[1, 1]]);
        let all_degree_one: Vec<(Monomial, Option<PrimeIdeal>)> = vec![
            (r2.var(0), prime_colon(&j, &r2.var(0))),
            (r2.var(1), prime_colon(&j, &r2.var(1))),
        ];
        let unsupported: Vec<&Monomial> = all_degree_one
            .iter()
            .filter_map(|(f, p)| {
                p.as_ref().and_then(|p| {
                    if p.vars().iter().all(|&v| f.exponent(v) == 0) {
                        Some(f)
                    } else {
                        None
                    }
                })
            })
            .collect();
        assert_eq!(unsupported, vec![&r2.var(1)]);
        let w = find_unsupported_witness(&j, LIM).unwrap().unwrap();
        assert_eq!(w.monomial, r2.var(1));
        assert_eq!(w.prime.vars(), &[0]);
    }
}
