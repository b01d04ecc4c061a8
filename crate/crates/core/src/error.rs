use thiserror::Error;

/// Errors raised by the polynomial, root-location and construction layers.
///
/// Variants fall in two groups: precondition failures (the caller handed in
/// data that does not satisfy an operation's hypotheses) and internal
/// anomalies (a certified invariant failed, which indicates a bug).
/// [`Error::is_internal`] tells them apart.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0}: zero polynomial not allowed")]
    ZeroPolynomial(&'static str),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact division: remainder is nonzero")]
    InexactDivision,
    #[error("primitive part is not monic")]
    NotMonic,
    #[error("census degenerate: {0}")]
    DegenerateCensus(String),
    #[error("interval does not isolate a simple root (multiplicity {0})")]
    NotSimple(usize),
    #[error("quotient cannot be transformed to the real line: {0}")]
    NotTransformable(String),
    #[error("quotient is not an interlacing quotient: {0}")]
    NotInterlacing(String),
    #[error("sum of two non-CC interlacing quotients is not supported")]
    UnsupportedSum,
    #[error("expected a CC-interlacing quotient, found {0}")]
    NotCc(String),
    #[error("expected a CS-interlacing quotient, found {0}")]
    NotCs(String),
    #[error("expected an SS-interlacing quotient, found {0}")]
    NotSs(String),
    #[error("expected a CS- or SS-interlacing quotient, found {0}")]
    NotCsOrSs(String),
    #[error("condition at z = 1 fails: {0}")]
    ConditionAtOneFails(String),
    #[error("limit function spec has no terms")]
    EmptySpec,
    #[error("invalid limit function spec: {0}")]
    InvalidSpec(String),
    #[error("polynomial is not a Pisot polynomial: {0}")]
    NotPisot(String),
    #[error("polynomial is not a Salem minimal polynomial: {0}")]
    NotSalem(String),
    #[error("Boyd identity S(z)R(z) = zA(z) + eps A*(z) does not hold")]
    BoydIdentityFails,
    #[error("Salem root is not below the real root of z^3 - z - 1")]
    TauNotSmall,
    #[error("unsupported epsilon {0}; expected 1 or -1")]
    BadEpsilon(i64),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    // Internal anomalies.
    #[error("cleared polynomial is not monic (leading coefficient {0})")]
    NonMonicCleared(String),
    #[error("certified census contradicts the construction: {0}")]
    UnexpectedCensus(String),
    #[error("recovered core differs from the source polynomial")]
    RoundTripMismatch,
    #[error("interlacing classification returned NONE where a type is guaranteed: {0}")]
    ClassifyNone(String),
    #[error("small-Salem proposition check failed: {0}")]
    PropositionFails(String),
}

impl Error {
    /// True for errors that signal a bug rather than a violated hypothesis.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NonMonicCleared(_)
                | Error::UnexpectedCensus(_)
                | Error::RoundTripMismatch
                | Error::ClassifyNone(_)
                | Error::PropositionFails(_)
                | Error::DegenerateCensus(_)
        )
    }

    /// Stable upper-case tag used in serialized diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial(_) => "ZERO_POLYNOMIAL",
            Error::DivisionByZero => "DIVISION_BY_ZERO",
            Error::InexactDivision => "INEXACT_DIVISION",
            Error::NotMonic => "NOT_MONIC",
            Error::DegenerateCensus(_) => "DEGENERATE_CENSUS",
            Error::NotSimple(_) => "NOT_SIMPLE",
            Error::NotTransformable(_) => "NOT_TRANSFORMABLE",
            Error::NotInterlacing(_) => "NOT_INTERLACING",
            Error::UnsupportedSum => "UNSUPPORTED_SUM",
            Error::NotCc(_) => "NOT_CC",
            Error::NotCs(_) => "NOT_CS",
            Error::NotSs(_) => "NOT_SS",
            Error::NotCsOrSs(_) => "NOT_CS_OR_SS",
            Error::ConditionAtOneFails(_) => "CONDITION_AT_ONE_FAILS",
            Error::EmptySpec => "EMPTY_SPEC",
            Error::InvalidSpec(_) => "INVALID_SPEC",
            Error::NotPisot(_) => "NOT_PISOT",
            Error::NotSalem(_) => "NOT_SALEM",
            Error::BoydIdentityFails => "BOYD_IDENTITY_FAILS",
            Error::TauNotSmall => "TAU_NOT_SMALL",
            Error::BadEpsilon(_) => "BAD_EPSILON",
            Error::Parse { .. } => "PARSE_ERROR",
            Error::NonMonicCleared(_) => "NON_MONIC_CLEARED",
            Error::UnexpectedCensus(_) => "UNEXPECTED_CENSUS",
            Error::RoundTripMismatch => "ROUND_TRIP_MISMATCH",
            Error::ClassifyNone(_) => "CLASSIFY_NONE",
            Error::PropositionFails(_) => "PROPOSITION_FAILS",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
