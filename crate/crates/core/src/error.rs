use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degenerate preimage: |w(t)|^2 = {sigma:e} at t = {t}")]
    DegeneratePreimage { t: f64, sigma: f64 },

    #[error("end points coincide")]
    CoincidentEndpoints,

    #[error("arc length {length} does not exceed the chord length {chord}")]
    LengthTooShort { length: f64, chord: f64 },

    #[error("tangent direction {0} is not a unit vector")]
    NonUnitTangent(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("half angle {0} outside (0, pi)")]
    AlphaOutOfRange(f64),

    #[error("root refinement did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("polynomial does not change sign on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("singular Jacobian")]
    SingularJacobian,

    #[error("u1 undefined: d^2 = {d2} hits a pole of the linear equation")]
    PoleInU1 { d2: f64 },

    #[error("solution residual {0:e} exceeds tolerance")]
    ResidualTooLarge(f64),

    #[error("empty solution set")]
    EmptySolutionSet,

    #[error("criterion `{0}` needs circular-arc data")]
    CriterionNeedsArc(&'static str),

    #[error("i/o: {0}")]
    Io(String),

    #[error("internal check failed: {0}")]
    Assertion(String),
}

impl Error {
    /// Process exit status used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CoincidentEndpoints
            | Error::LengthTooShort { .. }
            | Error::NonUnitTangent(_)
            | Error::InvalidInput(_)
            | Error::AlphaOutOfRange(_)
            | Error::CriterionNeedsArc(_) => 3,
            Error::EmptySolutionSet => 2,
            _ => 4,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
