/// Resource caps that turn runaway computations into clean errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Cap on the number of minimal generators of any constructed ideal.
    pub max_generators: usize,
    /// Cap on the size of the exponent lattice used for associated-prime
    /// and colon-by-prime computations.
    pub max_lattice_points: u64,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_generators: 50_000,
        max_lattice_points: 200_000_000,
    };

    pub fn with_max_generators(max_generators: usize) -> Limits {
        Limits {
            max_generators,
            ..Limits::DEFAULT
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
