use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the transform and interpolation modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("moebius: argument must be positive")]
    ZeroArgument,

    #[error("moebius: index {index} exceeds sequence length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("aft: shift alpha = {0} outside (-1, 1)")]
    InvalidShift(f64),

    #[error("aft: Bruns average index {0} must be even and positive")]
    InvalidBrunsIndex(usize),

    #[error("aht: blocklength {0} must be at least 2")]
    BlockTooSmall(usize),

    #[error("aht: average order {order} outside 1..{limit}")]
    OrderOutOfRange { order: usize, limit: usize },

    #[error("interp: fractional index {0} outside [0, N)")]
    IndexOutsideBlock(f64),

    #[error("interp: retained weights sum to zero, top-{0} interpolation is degenerate")]
    DegenerateWeights(usize),

    #[error("interp: top-m order {m} must satisfy 1 <= m < {n}")]
    InvalidTruncationOrder { m: usize, n: usize },

    #[error("interp: weight spec blocklength {spec} does not match signal length {len}")]
    SpecLengthMismatch { spec: usize, len: usize },

    #[error("signal: grid must span exactly one period (L*T0 = T)")]
    GridPeriodMismatch,

    #[error("signal: coefficient vectors a and b must both have length N")]
    CoefficientLengthMismatch,

    #[error("oracle: sequences have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("oracle: {points} quadrature points insufficient for {harmonics} harmonics")]
    TooFewQuadraturePoints { points: usize, harmonics: usize },
}
