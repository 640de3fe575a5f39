use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A recurrence or structure coefficient has a vanishing denominator
    /// factor, or a genuine 0/0 that no exact cancellation removes.
    #[error("degenerate parameters in {context}: factor {factor} vanishes")]
    DegenerateParams {
        context: &'static str,
        factor: String,
    },

    /// Gamma evaluated at a nonpositive integer.
    #[error("gamma pole at {re}{im:+}i")]
    GammaPole { re: f64, im: f64 },

    /// phi(z) = z + sqrt(z^2-1) has two unit-modulus candidates on [-1,1].
    #[error("branch ambiguity: {re}{im:+}i lies on [-1,1]")]
    BranchAmbiguity { re: f64, im: f64 },

    /// Degree cap for coefficient-space work in double precision.
    #[error("degree {n} exceeds the cap {max}")]
    DegreeCap { n: usize, max: usize },

    /// Moment tables exist only for Re alpha > -1 and Re beta > -1.
    #[error("moment functional requires Re alpha > -1 and Re beta > -1")]
    RegimeError,

    /// An inner product needs moments beyond the table capacity.
    #[error("moment table capacity {capacity} exceeded, need {needed}")]
    CapacityExceeded { capacity: usize, needed: usize },

    /// The simultaneous root iteration did not reach the tolerance; carries
    /// the clustered best iterate for diagnosis.
    #[error("root finder did not converge within {sweeps} sweeps (worst correction {worst:.3e})")]
    NoConvergence {
        sweeps: usize,
        worst: f64,
        best: Box<crate::zeros::ZeroSet>,
    },

    /// Root finding asked of a constant (or empty) polynomial.
    #[error("polynomial of degree zero has no roots")]
    DegreeZero,

    /// A validator precondition does not hold.
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    /// A construction that must stay monic drifted beyond 1e-12.
    #[error("monic leading coefficient drifted by {drift:.3e}")]
    MonicDrift { drift: f64 },
}

impl Error {
    pub(crate) fn degenerate(context: &'static str, factor: impl Into<String>) -> Self {
        Error::DegenerateParams {
            context,
            factor: factor.into(),
        }
    }
}
