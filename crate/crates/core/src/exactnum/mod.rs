//! Exact coefficient rings and truncated power series.
//!
//! Everything here is exact: rationals, the nilpotent ring `Q[a]/(a^N)`
//! used for Frobenius deformations, and the fifth cyclotomic field.

mod cyclotomic;
pub mod integer_serde;
mod nilpotent;
mod rational;
mod ring;
mod series;

pub use cyclotomic::CyclotomicElement;
pub use nilpotent::{NilpotentElement, DEFAULT_NILPOTENT_DEGREE};
pub use rational::Rational;
pub use ring::{Field, Ring, RingTag};
pub use series::{series_arith, series_log_exp, series_reversion, LogExp, SeriesOp, TruncatedSeries};

/// Default truncation order for series pipelines.
pub const DEFAULT_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("nilpotent ring degree must be at least 1")]
    ZeroModulusDegree,
    #[error("{len} coefficients do not fit in Q[a]/(a^{degree})")]
    DegreeOverflow { degree: usize, len: usize },
    #[error("ring mismatch: {left:?} vs {right:?}")]
    RingMismatch { left: RingTag, right: RingTag },
    #[error("series carry different exponent shifts")]
    ShiftMismatch,
    #[error("operation needs a series without a symbolic z^s prefactor")]
    ShiftedSeries,
    #[error("constant term is not a unit")]
    NonUnitConstantTerm,
    #[error("log needs constant term 1")]
    LogRequiresUnitConstant,
    #[error("exp needs constant term 0")]
    ExpRequiresZeroConstant,
    #[error("series must have zero constant term")]
    NonZeroConstantTerm,
    #[error("linear coefficient is not a unit")]
    NonUnitLinearTerm,
}
