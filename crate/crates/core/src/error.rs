use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate: 2k = n (n = {n}, k = {k}) doubles the inner edges")]
    DegenerateParams { n: u64, k: u64 },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("index j = {j} outside [0, {}]", n - 1)]
    IndexOutOfRange { j: u64, n: u64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("spectrum has fewer than two values")]
    TooFewValues,

    #[error("epsilon must be positive, got {0}")]
    NonpositiveEpsilon(f64),

    #[error("search range t0 * m * q^N overflows the exactly representable integers")]
    RangeOverflow,

    #[error("no admissible scale factor found in [{lo}, {hi}]")]
    SearchExhausted { lo: u64, hi: u64 },

    #[error("n = {n} must exceed q^2 = {} (q = {q})", q * q)]
    TooSmallN { n: u64, q: u64 },

    #[error("phi({m}) + kappa({m}) = {total} is not divisible by 4")]
    NonIntegral { m: u64, total: u64 },

    #[error("vertex set is empty")]
    EmptySet,

    #[error("vertex {vertex} is not in the graph ({vertex_count} vertices)")]
    InvalidVertex { vertex: usize, vertex_count: usize },

    #[error("exact search limited to {max} vertices, graph has {vertices}")]
    TooLarge { vertices: usize, max: usize },
}
