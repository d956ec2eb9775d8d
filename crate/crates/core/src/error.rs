use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("double factorial undefined for {0} (need n >= -1)")]
    NegativeDoubleFactorial(i64),

    #[error("pi exponent {0} is outside the supported range -1..=2")]
    ExponentOutOfRange(i32),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("angle {0} is outside the open interval (0, pi/2)")]
    AngleOutOfRange(f64),

    #[error("routes disagree for {family}_{k}: {left} vs {right}")]
    RouteMismatch {
        family: char,
        k: usize,
        left: String,
        right: String,
    },

    #[error("cannot parse pi expression {0:?}")]
    Parse(String),
}
