//! Exact computation engine for v-numbers of powers of monomial ideals.
//!
//! The crate is organized around five concerns:
//!
//! * [`ring`] / [`ideal`] — exact arithmetic on monomials and monomial
//!   ideals: divisibility, colon, intersection, product, power,
//!   minimalization, profiling.
//! * [`decomposition`] — irreducible decomposition, associated primes,
//!   the invariant c(I), symbolic powers of square-free ideals.
//! * [`vnumber`] — local and global v-numbers with witnesses, v-functions
//!   over powers, a brute-force oracle, stability estimation, and the
//!   conjecture checker.
//! * [`graphs`] — graph and weighted-oriented-graph ideal constructors,
//!   even-connection machinery for edge-ideal power colons, and
//!   theorem-backed stability upper bounds.
//! * [`structure`] — polarization, linear quotients, vertex
//!   splittability, torsion-freeness and persistence windows, and
//!   unsupported witnesses.
//!
//! All values are immutable after construction and all operations are pure
//! functions with deterministic, canonically ordered outputs.

pub mod decomposition;
pub mod error;
pub mod graphs;
pub mod ideal;
mod lattice;
pub mod limits;
pub mod ring;
pub mod structure;
pub mod vnumber;

pub use decomposition::{
    associated_primes, c_invariant, irreducible_decomposition, symbolic_power_squarefree,
    AssociatedPrimes, IrreducibleComponent, PrimeIdeal,
};
pub use error::{Error, Result};
pub use graphs::{
    cover_ideal, edge_ideal, edge_power_colon, even_connected_pairs, graph_profile, path_ideal,
    v_stab_upper_bound, weighted_oriented_edge_ideal, BoundSource, CycleShape, Graph,
    GraphProfile, StabBound, WeightedOrientedGraph,
};
pub use ideal::{IdealProfile, MonomialIdeal};
pub use limits::Limits;
pub use ring::{Monomial, Ring};
pub use structure::{
    find_unsupported_witness, has_linear_quotients, has_strong_persistence_upto, is_ntf_upto,
    is_vertex_splittable, polarize, LinearQuotients, NtfRow, PersistenceRow, Polarization,
    SplitLeaf, SplitTree,
};
pub use vnumber::{
    check_conjecture, check_lower_bound, local_v_number, stability_estimate, v_function,
    v_number, v_oracle, CertificateSource, ConjectureReport, ConjectureRow, ConjectureVerdict,
    LqStatus, StabilityEstimate, VReport, VRow, VWitness,
};
