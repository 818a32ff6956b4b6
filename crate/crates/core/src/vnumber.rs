//! Local and global v-numbers, v-functions over powers, the brute-force
//! oracle, stability estimation, and the conjecture checker.

use std::cmp::Ordering;

use crate::decomposition::{associated_primes, c_invariant, PrimeIdeal};
use crate::error::{Error, Result};
use crate::graphs::StabBound;
use crate::ideal::{divisors, MonomialIdeal};
use crate::lattice::Lattice;
use crate::limits::Limits;
use crate::ring::Monomial;
use crate::structure::{has_linear_quotients, LinearQuotients};

/// Total exponent mass of the generator lcm beyond which the brute-force
/// oracle refuses to enumerate divisors.
const ORACLE_MASS_LIMIT: u32 = 24;

/// A degree witness: a monomial `f` whose colon `(I : f)` is the recorded
/// associated prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VWitness {
    pub monomial: Monomial,
    pub degree: u32,
    pub prime: PrimeIdeal,
}

impl VWitness {
    fn new(monomial: Monomial, prime: PrimeIdeal) -> VWitness {
        VWitness {
            degree: monomial.degree(),
            monomial,
            prime,
        }
    }

    /// Recomputes the defining colon; true iff the witness is valid for `ideal`.
    pub fn verify(&self, ideal: &MonomialIdeal) -> bool {
        self.degree == self.monomial.degree()
            && ideal.colon_monomial(&self.monomial) == self.prime.to_ideal()
    }

    /// Witness order used for tie-breaking: degree, then monomial, then prime.
    fn key(&self) -> (u32, &Monomial, &PrimeIdeal) {
        (self.degree, &self.monomial, &self.prime)
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

/// Single-pass primality check of `(I : f)`: returns the prime when the
/// colon is generated exactly by variables, without materializing the
/// minimalized colon ideal.
pub(crate) fn prime_colon(ideal: &MonomialIdeal, f: &Monomial) -> Option<PrimeIdeal> {
    let n = ideal.ring().arity();
    let mut is_var = vec![false; n];
    let mut any_var = false;
    let mut quotients = Vec::with_capacity(ideal.num_generators());
    for u in ideal.gens() {
        let q = u.colon_quotient(f);
        if q.is_unit() {
            return None; // f lies in the ideal
        }
        if q.degree() == 1 {
            let v = q.support().next().expect("degree-1 monomial");
            if !is_var[v] {
                is_var[v] = true;
                any_var = true;
            }
        } else {
            quotients.push(q);
        }
    }
    if !any_var {
        return None;
    }
    if quotients
        .iter()
        .any(|q| !q.support().any(|v| is_var[v]))
    {
        return None;
    }
    let vars: Vec<usize> = (0..n).filter(|&v| is_var[v]).collect();
    Some(PrimeIdeal::new(ideal.ring().clone(), vars).expect("non-empty variable set"))
}

/// Minimal generators of `(I : p)`. Uses the divisor lattice when it fits,
/// the pairwise intersection route otherwise.
pub(crate) fn colon_by_prime_gens(
    ideal: &MonomialIdeal,
    prime: &PrimeIdeal,
    limits: &Limits,
) -> Result<Vec<Monomial>> {
    let ring = ideal.ring().clone();
    if ideal.num_generators() <= 512
        || Lattice::point_count(ideal) > limits.max_lattice_points as u128
    {
        return Ok(ideal.colon_ideal(&prime.to_ideal()).gens().to_vec());
    }
    let lattice = Lattice::new(ideal, limits)?;
    Ok(lattice.colon_by_vars_gens(prime.vars(), |e| ring.monomial(e)))
}

/// Minimum-degree monomial witness for a fixed prime, or `None` when the
/// prime is not associated.
///
/// Every witness `f` of `(I : f) = p` is a multiple of some minimal
/// generator `g` of `(I : p)`, and then `p ⊆ (I : g) ⊆ (I : f) = p` with
/// `deg g <= deg f`, so scanning `G(I : p)` in canonical order finds the
/// minimum and its canonical representative.
pub fn local_v_number(
    ideal: &MonomialIdeal,
    prime: &PrimeIdeal,
    limits: &Limits,
) -> Result<Option<VWitness>> {
    require_proper_nonzero(ideal)?;
    assert_eq!(ideal.ring(), prime.ring(), "ring mismatch");
    let gens = colon_by_prime_gens(ideal, prime, limits)?;
    for g in gens {
        if let Some(p) = prime_colon(ideal, &g) {
            if p == *prime {
                return Ok(Some(VWitness::new(g, p)));
            }
        }
    }
    Ok(None)
}

/// The v-number of a proper nonzero ideal with its canonical witness.
///
/// Ties are broken by (degree, monomial, prime). Witnesses of the least
/// possible degree `alpha(I) - 1` must push a minimum-degree generator into
/// the ideal, so they are exactly the quotients `u / x_i` with `u` a
/// generator of degree `alpha(I)`; that fast path skips the associated-prime
/// computation entirely when it hits.
pub fn v_number(ideal: &MonomialIdeal, limits: &Limits) -> Result<VWitness> {
    require_proper_nonzero(ideal)?;
    let alpha = ideal.alpha().expect("nonzero ideal");

    if alpha >= 1 {
        let mut candidates: Vec<Monomial> = ideal
            .gens()
            .iter()
            .take_while(|u| u.degree() == alpha)
            .flat_map(|u| {
                let u = u.clone();
                let ring = ideal.ring().clone();
                u.support()
                    .map(|i| u.colon_quotient(&ring.var(i)))
                    .collect::<Vec<_>>()
            })
            .collect();
        candidates.sort();
        candidates.dedup();
        for f in candidates {
            if let Some(p) = prime_colon(ideal, &f) {
                return Ok(VWitness::new(f, p));
            }
        }
    }

    let ass = associated_primes(ideal, limits)?;
    let mut best: Option<VWitness> = None;
    for prime in &ass.primes {
        let gens = colon_by_prime_gens(ideal, prime, limits)?;
        for g in gens {
            if let Some(b) = &best {
                // The scan is ascending, so once (degree, monomial) cannot
                // beat the current best within this prime, move on. Equality
                // keeps the earlier (canonically smaller) prime.
                if (g.degree(), &g) >= (b.degree, &b.monomial) {
                    break;
                }
            }
            if let Some(p) = prime_colon(ideal, &g) {
                if p == *prime {
                    best = Some(VWitness::new(g, p));
                    break;
                }
            }
        }
    }
    Ok(best.expect("a proper nonzero monomial ideal has a v-witness"))
}

/// Independent brute-force v-number: scans all divisors of the generator
/// lcm in (degree, lex) order and returns the first with a prime colon.
/// Truncating any monomial at the lcm exponents leaves its colon unchanged,
/// so the divisor scan is exhaustive.
pub fn v_oracle(ideal: &MonomialIdeal) -> Result<VWitness> {
    require_proper_nonzero(ideal)?;
    let lcm = ideal.lcm_of_generators();
    let mass = lcm.degree();
    if mass > ORACLE_MASS_LIMIT {
        return Err(Error::OracleLimit {
            mass,
            limit: ORACLE_MASS_LIMIT,
        });
    }
    for f in divisors(ideal.ring(), &lcm) {
        let q = ideal.colon_monomial(&f);
        if q.is_zero() || q.is_unit() {
            continue;
        }
        if q.gens().iter().all(|g| g.degree() == 1) {
            let vars = q
                .gens()
                .iter()
                .map(|g| g.support().next().expect("variable generator"))
                .collect();
            let prime = PrimeIdeal::new(ideal.ring().clone(), vars)?;
            return Ok(VWitness::new(f, prime));
        }
    }
    unreachable!("a proper nonzero monomial ideal has a v-witness")
}

/// One row of a v-function report.
#[derive(Clone, Debug)]
pub struct VRow {
    pub k: u32,
    /// Initial degree of the k-th power (equals alpha(I)*k for monomial ideals).
    pub alpha_k: u32,
    pub witness: VWitness,
    /// Local v-numbers per associated prime, when requested.
    pub locals: Option<Vec<VWitness>>,
}

impl VRow {
    pub fn v(&self) -> u32 {
        self.witness.degree
    }
}

/// The v-function v(I^k) for k = 1..kmax, with partial results retained
/// when a resource limit interrupts the sweep.
#[derive(Clone, Debug)]
pub struct VReport {
    pub rows: Vec<VRow>,
    pub truncated: Option<Error>,
}

pub fn v_function(
    ideal: &MonomialIdeal,
    kmax: u32,
    with_locals: bool,
    limits: &Limits,
) -> Result<VReport> {
    require_proper_nonzero(ideal)?;
    if kmax < 1 {
        return Err(Error::InvalidPower);
    }
    let mut rows = Vec::new();
    let mut power = ideal.clone();
    for k in 1..=kmax {
        if k > 1 {
            let pairs = power.num_generators() * ideal.num_generators();
            if pairs > 10_000_000 {
                return Ok(VReport {
                    rows,
                    truncated: Some(Error::GeneratorLimit {
                        count: pairs,
                        limit: limits.max_generators,
                    }),
                });
            }
            power = power.product(ideal);
            if power.num_generators() > limits.max_generators {
                return Ok(VReport {
                    rows,
                    truncated: Some(Error::GeneratorLimit {
                        count: power.num_generators(),
                        limit: limits.max_generators,
                    }),
                });
            }
        }
        let row = (|| -> Result<VRow> {
            let witness = v_number(&power, limits)?;
            let locals = if with_locals {
                let ass = associated_primes(&power, limits)?;
                let mut ws = Vec::with_capacity(ass.primes.len());
                for p in &ass.primes {
                    let w = local_v_number(&power, p, limits)?
                        .expect("every associated prime has a witness");
                    ws.push(w);
                }
                Some(ws)
            } else {
                None
            };
            Ok(VRow {
                k,
                alpha_k: power.alpha().expect("nonzero power"),
                witness,
                locals,
            })
        })();
        match row {
            Ok(row) => rows.push(row),
            Err(e) if e.is_resource_limit() => {
                return Ok(VReport {
                    rows,
                    truncated: Some(e),
                });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(VReport {
        rows,
        truncated: None,
    })
}

/// Provenance of a stability claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateSource {
    WindowOnly,
    GraphBound,
}

impl CertificateSource {
    pub fn tag(&self) -> &'static str {
        match self {
            CertificateSource::WindowOnly => "window-only",
            CertificateSource::GraphBound => "graph-bound",
        }
    }
}

/// The largest observed suffix of the v-function lying on a line of slope
/// alpha(I), with its starting index. `certified` is only set through a
/// theorem-backed graph bound: a finite window alone cannot certify the
/// stability index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityEstimate {
    pub slope: u32,
    pub intercept: i64,
    pub index: u32,
    pub certified: bool,
    pub source: CertificateSource,
}

impl StabilityEstimate {
    /// Upgrades the estimate when a graph bound pins the same line beyond
    /// the observed window: the theorem covers k >= bound, the window covers
    /// index..=kmax, so together they cover every k >= index whenever
    /// bound <= kmax + 1.
    pub fn certify_with(self, bound: &StabBound, kmax: u32) -> StabilityEstimate {
        if self.slope == bound.slope
            && self.intercept == bound.intercept
            && bound.bound <= kmax + 1
        {
            StabilityEstimate {
                certified: true,
                source: CertificateSource::GraphBound,
                ..self
            }
        } else {
            self
        }
    }
}

/// Fits the longest linear suffix of slope `alpha` to an observed report.
/// Returns `None` when fewer than two trailing values are collinear.
pub fn stability_estimate(report: &VReport, alpha: u32) -> Option<StabilityEstimate> {
    let rows = &report.rows;
    if rows.len() < 2 {
        return None;
    }
    let b = |row: &VRow| row.v() as i64 - (alpha as i64) * (row.k as i64);
    let last = b(rows.last().unwrap());
    let mut index = rows.last().unwrap().k;
    for row in rows.iter().rev().skip(1) {
        if b(row) == last {
            index = row.k;
        } else {
            break;
        }
    }
    let kmax = rows.last().unwrap().k;
    if kmax - index + 1 < 2 {
        return None;
    }
    Some(StabilityEstimate {
        slope: alpha,
        intercept: last,
        index,
        certified: false,
        source: CertificateSource::WindowOnly,
    })
}

/// Checks the lower bound v_p(I) >= alpha(I) - 1 at every associated prime.
/// A failure indicates an engine bug, never a mathematical fact.
pub fn check_lower_bound(ideal: &MonomialIdeal, limits: &Limits) -> Result<bool> {
    require_proper_nonzero(ideal)?;
    let alpha = ideal.alpha().expect("nonzero ideal") as i64;
    let ass = associated_primes(ideal, limits)?;
    for p in &ass.primes {
        let w = local_v_number(ideal, p, limits)?
            .expect("every associated prime has a witness");
        if (w.degree as i64) < alpha - (p.alpha() as i64) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Status of the linear-quotients proxy on one power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LqStatus {
    Found,
    Absent,
    Unknown,
    NotEquigenerated,
}

impl LqStatus {
    pub fn tag(&self) -> &'static str {
        match self {
            LqStatus::Found => "found",
            LqStatus::Absent => "absent",
            LqStatus::Unknown => "unknown",
            LqStatus::NotEquigenerated => "not-equigenerated",
        }
    }

    fn holds(&self) -> bool {
        matches!(self, LqStatus::Found)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureRow {
    pub k: u32,
    pub linear_quotients: LqStatus,
    pub v: u32,
    /// alpha(I)*k - c(I), the conjectured value.
    pub expected: i64,
    pub matches: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureVerdict {
    Consistent,
    CounterexampleCandidate,
    HypothesisNotMet,
}

impl ConjectureVerdict {
    pub fn tag(&self) -> &'static str {
        match self {
            ConjectureVerdict::Consistent => "consistent",
            ConjectureVerdict::CounterexampleCandidate => "counterexample-candidate",
            ConjectureVerdict::HypothesisNotMet => "hypothesis-not-met",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub alpha: u32,
    pub c: u32,
    pub rows: Vec<ConjectureRow>,
    pub verdict: ConjectureVerdict,
    pub first_hypothesis_failure: Option<u32>,
}

/// Tests v(I^k) = alpha(I)k - c(I) against the linear-powers hypothesis,
/// approximated per power by the linear-quotients search. Powers that are
/// not equigenerated cannot have a linear resolution, so they fail the
/// hypothesis outright (the check therefore accepts non-equigenerated
/// input and reports rather than rejects).
pub fn check_conjecture(
    ideal: &MonomialIdeal,
    kmax: u32,
    limits: &Limits,
) -> Result<ConjectureReport> {
    require_proper_nonzero(ideal)?;
    if kmax < 1 {
        return Err(Error::InvalidPower);
    }
    let alpha = ideal.alpha().expect("nonzero ideal");
    let c = c_invariant(ideal, limits)?;
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
        let lq = if power.is_equigenerated() {
            match has_linear_quotients(&power)? {
                LinearQuotients::Found(_) => LqStatus::Found,
                LinearQuotients::Absent => LqStatus::Absent,
                LinearQuotients::Unknown => LqStatus::Unknown,
            }
        } else {
            LqStatus::NotEquigenerated
        };
        let v = v_number(&power, limits)?.degree;
        let expected = alpha as i64 * k as i64 - c as i64;
        rows.push(ConjectureRow {
            k,
            matches: v as i64 == expected,
            linear_quotients: lq,
            v,
            expected,
        });
    }
    let first_hypothesis_failure = rows
        .iter()
        .find(|r| !r.linear_quotients.holds())
        .map(|r| r.k);
    let verdict = if first_hypothesis_failure.is_some() {
        ConjectureVerdict::HypothesisNotMet
    } else if rows.iter().all(|r| r.matches) {
        ConjectureVerdict::Consistent
    } else {
        ConjectureVerdict::CounterexampleCandidate
    };
    Ok(ConjectureReport {
        alpha,
        c,
        rows,
        verdict,
        first_hypothesis_failure,
    })
}

/// Comparison helper exposed for deterministic witness selection in callers.
pub(crate) fn witness_cmp(a: &VWitness, b: &VWitness) -> Ordering {
    a.key().cmp(&b.key())
}
