use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} must be positive")]
    NonPositive { what: &'static str },

    #[error("residue {residue} out of range for modulus {modulus}")]
    ResidueOutOfRange { residue: String, modulus: String },

    #[error("parity must be 0 or 1, got {0}")]
    InvalidParity(u32),

    #[error("polynomial or integer division is not exact")]
    NonExactDivision,

    #[error("computed count is negative or exceeds the word length")]
    InvalidCount,

    #[error("floating point result deviates from an integer by {deviation:e}")]
    IntegralityFailure { deviation: f64 },

    #[error("imaginary part {imaginary:e} of a real-valued sum exceeds tolerance")]
    ImaginaryResidue { imaginary: f64 },

    #[error("enumeration of {what} exceeds the cap of {cap}")]
    CapExceeded { what: String, cap: String },

    #[error("invalid codebook: {0}")]
    InvalidCodebook(String),

    #[error("modulus {0} is too large for this evaluation path")]
    ModulusTooLarge(String),
}
