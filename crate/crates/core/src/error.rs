use thiserror::Error;

/// Errors raised anywhere in the pipeline.
///
/// Several variants are "soft": they signal that a particular prime is
/// degenerate and should be skipped (see [`Error::is_discardable`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element has no square root")]
    NoSquareRoot,
    #[error("duplicate modulus {0} in CRT input")]
    DuplicateModulus(String),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("repeated interpolation node")]
    DuplicateNode,
    #[error("element is not a unit")]
    NonUnit,
    #[error("seed root does not square to the constant term")]
    BadSeed,
    #[error("root is not simple modulo epsilon")]
    SingularRoot,
    #[error("denominator is not a unit")]
    NonUnitDenominator,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("could not sample a torsion basis")]
    TorsionSamplingFailed,
    #[error("point is not {0}-torsion")]
    NotTorsion(u64),
    #[error("point does not have the expected order {0}")]
    BadOrder(u64),
    #[error("curves are not isomorphic")]
    NotIsomorphic,
    #[error("invalid kernel: {0}")]
    BadKernel(String),
    #[error("value is a pole of the j-map")]
    Pole,
    #[error("degenerate curve (j = 0 or 1728 or singular)")]
    DegenerateCurve,
    #[error("level structure does not match: {0}")]
    BadStructure(String),
    #[error("Weil pairing of the basis is not the fixed cube root of unity")]
    PairingMismatch,
    #[error("value is outside the image of the invariant")]
    OutOfImage,
    #[error("polynomial division is not exact")]
    NonExactDivision,
    #[error("base curve is degenerate for this prime")]
    DegenerateBase,
    #[error("prime {prime} discarded: {reason}")]
    DiscardPrime { prime: u64, reason: String },
    #[error("could not collect enough distinct samples")]
    InsufficientSamples,
    #[error("internal error: {0}")]
    InternalError(String),
    #[error("unsupported order: {0}")]
    UnsupportedOrder(String),
    #[error("no usable prime found")]
    PrimePoolExhausted,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Whether a failure at one prime means "try the next prime".
    pub fn is_discardable(&self) -> bool {
        matches!(
            self,
            Error::SingularRoot
                | Error::NonUnit
                | Error::NonUnitDenominator
                | Error::DegenerateBase
                | Error::DegenerateCurve
                | Error::DiscardPrime { .. }
                | Error::InsufficientSamples
                | Error::Pole
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
