use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is reducible over {0}")]
    ReduciblePolynomial(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("base mismatch: {0}")]
    BaseMismatch(String),
    #[error("unsupported characteristic {0}")]
    UnsupportedCharacteristic(u64),
    #[error("not an algebra: {0}")]
    NotAnAlgebra(String),
    #[error("not a bimodule: {0}")]
    NotABimodule(String),
    #[error("module is not free over the base algebra")]
    NotFree,
    #[error("not a coideal: generator {index} fails {condition}")]
    NotACoideal { index: usize, condition: String },
    #[error("not a subalgebra of End(Sigma_A): {0}")]
    NotASubalgebraOfEnd(String),
    #[error("not an intermediate subring: {0}")]
    NotIntermediate(String),
    #[error("singular change of basis")]
    SingularChangeOfBasis,
    #[error("carrier of dimension {0} exceeds the group-like search bound 8")]
    CarrierTooLarge(usize),
    #[error("no isomorphism supplied: {0}")]
    NoIsomorphismSupplied(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("unknown extension {0}")]
    UnknownExtension(String),
    #[error("quaternions embed in M_n(Q(i)) only for even n, got n = {0}")]
    OddRankForH(usize),
    #[error("outside the decidable range: {0}")]
    Undecidable(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("schema error at {pointer}: {message}")]
    Schema { pointer: String, message: String },
    #[error("unknown instance {0}")]
    UnknownInstance(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ReduciblePolynomial(_) => "ReduciblePolynomial",
            Error::DivisionByZero => "DivisionByZero",
            Error::InvalidPolynomial(_) => "InvalidPolynomial",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::BaseMismatch(_) => "BaseMismatch",
            Error::UnsupportedCharacteristic(_) => "UnsupportedCharacteristic",
            Error::NotAnAlgebra(_) => "NotAnAlgebra",
            Error::NotABimodule(_) => "NotABimodule",
            Error::NotFree => "NotFree",
            Error::NotACoideal { .. } => "NotACoideal",
            Error::NotASubalgebraOfEnd(_) => "NotASubalgebraOfEnd",
            Error::NotIntermediate(_) => "NotIntermediate",
            Error::SingularChangeOfBasis => "SingularChangeOfBasis",
            Error::CarrierTooLarge(_) => "CarrierTooLarge",
            Error::NoIsomorphismSupplied(_) => "NoIsomorphismSupplied",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::UnknownExtension(_) => "UnknownExtension",
            Error::OddRankForH(_) => "OddRankForH",
            Error::Undecidable(_) => "Undecidable",
            Error::Unsupported(_) => "Unsupported",
            Error::Schema { .. } => "Schema",
            Error::UnknownInstance(_) => "UnknownInstance",
            Error::Io(_) => "Io",
        }
    }

    /// Errors caused by the request itself rather than by a failed check.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Schema { .. }
                | Error::UnknownInstance(_)
                | Error::UnknownExtension(_)
                | Error::Io(_)
                | Error::Unsupported(_)
                | Error::UnsupportedCharacteristic(_)
                | Error::HypothesisViolated(_)
                | Error::OddRankForH(_)
                | Error::ReduciblePolynomial(_)
                | Error::InvalidPolynomial(_)
        )
    }
}
