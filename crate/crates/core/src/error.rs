use thiserror::Error;

/// Errors raised by the geometric and numeric routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate matrix: determinant {0:e} is zero")]
    DegenerateMatrix(f64),

    #[error("no translation/rotation decomposition for a parabolic or identity map")]
    NoDecomposition,

    #[error("no axis: map is parabolic or the identity")]
    NoAxis,

    #[error("identity not applicable: {0}")]
    IdentityNotApplicable(&'static str),

    #[error("parabolic: use parabolic_displacement")]
    Parabolic,

    #[error("bound vacuous: 4t = {four_t} does not exceed |beta_f + 4| = {beta_f_plus4}")]
    BoundVacuous { four_t: f64, beta_f_plus4: f64 },

    #[error("order {0} out of range (need n >= 3)")]
    OrderOutOfRange(u32),

    #[error("unsupported elliptic order {0} (gamma tables exist for 3, 4, 5, 6)")]
    UnsupportedOrder(u32),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
