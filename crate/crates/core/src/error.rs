use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),

    #[error("modulus {0:?} is not a monic polynomial of the requested degree")]
    InvalidModulus(Vec<u64>),

    #[error("modulus {0:?} is reducible over the prime field")]
    ReducibleModulus(Vec<u64>),

    #[error("local ring needs a nonzero maximal ideal (k >= 2); use a field spec for k = 1")]
    TrivialIdeal,

    #[error("operands belong to different rings ({0} and {1})")]
    MixedRings(String, String),

    #[error("element {0} is not a unit")]
    NonUnitInverse(String),

    #[error("operation requires a field, got {0}")]
    NotAField(String),

    #[error("operation requires a local ring with nonzero maximal ideal, got {0}")]
    NotLocalRing(String),

    #[error("operation requires a prime field, got {0}")]
    NotPrimeField(String),

    #[error("field has q = {0} elements; transposition polynomials need q > 2")]
    FieldTooSmall(u64),

    #[error("residue field has q = {0} elements; the lifted construction needs q > 2")]
    ResidueFieldTooSmall(u64),

    #[error("transposition endpoints must differ")]
    EqualPoints,

    #[error("endpoints must differ modulo the maximal ideal")]
    CongruentPoints,

    #[error("point must be nonzero")]
    ZeroPoint,

    #[error("residue polynomial does not permute the residue field")]
    ResidueNotPermutation,

    #[error("g takes a non-unit value at {0}")]
    GNotUnitValued(String),

    #[error("table is not a bijection")]
    NotBijective,

    #[error("ring or search space too large: {0}")]
    RingTooLarge(String),

    #[error("expansion too large: {0}")]
    ExpansionTooLarge(String),

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("invalid ring spec: {0}")]
    InvalidRingSpec(String),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonPrimeCharacteristic(_) => "NonPrimeCharacteristic",
            Error::InvalidModulus(_) => "InvalidModulus",
            Error::ReducibleModulus(_) => "ReducibleModulus",
            Error::TrivialIdeal => "TrivialIdeal",
            Error::MixedRings(..) => "MixedRings",
            Error::NonUnitInverse(_) => "NonUnitInverse",
            Error::NotAField(_) => "NotAField",
            Error::NotLocalRing(_) => "NotLocalRing",
            Error::NotPrimeField(_) => "NotPrimeField",
            Error::FieldTooSmall(_) => "FieldTooSmall",
            Error::ResidueFieldTooSmall(_) => "ResidueFieldTooSmall",
            Error::EqualPoints => "EqualPoints",
            Error::CongruentPoints => "CongruentPoints",
            Error::ZeroPoint => "ZeroPoint",
            Error::ResidueNotPermutation => "ResidueNotPermutation",
            Error::GNotUnitValued(_) => "GNotUnitValued",
            Error::NotBijective => "NotBijective",
            Error::RingTooLarge(_) => "RingTooLarge",
            Error::ExpansionTooLarge(_) => "ExpansionTooLarge",
            Error::EmptyGenerators => "EmptyGenerators",
            Error::InvalidRingSpec(_) => "InvalidRingSpec",
            Error::InvalidElement(_) => "InvalidElement",
            Error::InvalidPolynomial(_) => "InvalidPolynomial",
        }
    }

    /// True for errors caused by malformed input text rather than by the
    /// mathematics of well-formed input.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidRingSpec(_) | Error::InvalidElement(_) | Error::InvalidPolynomial(_)
        )
    }
}
