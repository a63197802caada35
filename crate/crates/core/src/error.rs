use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in different symmetric groups.
    SizeMismatch { left: usize, right: usize },
    InvalidPermutation(String),
    InvalidGenerator { index: usize, n: usize },
    InvalidTransposition { i: usize, j: usize, n: usize },
    InvalidHessenberg(String),
    InvalidPartition(String),
    UnknownName(String),
    /// `u <= w` was required.
    NotBruhatBelow,
    NotMinimalRepresentative,
    NotInParabolicSubgroup,
    NotReduced,
    NotGoodWord,
    WordLengthMismatch { word: usize, bits: usize },
    NotPolynomial,
    DegreeMismatch { left: usize, right: usize },
    NotContained,
    BasisMismatch,
    UnclearedDenominator,
    IdentityFailed(&'static str),
    SymmetryViolation(String),
    BudgetExceeded { what: &'static str, size: usize, limit: usize },
    Postcondition(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: S_{} vs S_{}", left, right)
            }
            Error::InvalidPermutation(s) => write!(f, "invalid permutation: {}", s),
            Error::InvalidGenerator { index, n } => {
                write!(f, "generator index {} out of range for S_{}", index, n)
            }
            Error::InvalidTransposition { i, j, n } => {
                write!(f, "invalid transposition ({},{}) for S_{}", i, j, n)
            }
            Error::InvalidHessenberg(s) => write!(f, "invalid Hessenberg function: {}", s),
            Error::InvalidPartition(s) => write!(f, "invalid partition: {}", s),
            Error::UnknownName(s) => write!(f, "unknown name: {}", s),
            Error::NotBruhatBelow => write!(f, "u is not below w in Bruhat order"),
            Error::NotMinimalRepresentative => {
                write!(f, "permutation is not a minimal coset representative")
            }
            Error::NotInParabolicSubgroup => {
                write!(f, "permutation is not in the parabolic subgroup")
            }
            Error::NotReduced => write!(f, "word is not reduced"),
            Error::NotGoodWord => write!(f, "binary word is not good for this permutation"),
            Error::WordLengthMismatch { word, bits } => {
                write!(f, "binary word has length {} but the word has length {}", bits, word)
            }
            Error::NotPolynomial => write!(f, "expected a polynomial in q"),
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {} vs {}", left, right)
            }
            Error::NotContained => write!(f, "inner partition is not contained in outer one"),
            Error::BasisMismatch => write!(f, "operands are in incompatible bases"),
            Error::UnclearedDenominator => write!(f, "denominators did not clear"),
            Error::IdentityFailed(name) => write!(f, "identity failed: {}", name),
            Error::SymmetryViolation(s) => write!(f, "symmetry violated: {}", s),
            Error::BudgetExceeded { what, size, limit } => {
                write!(f, "{} size {} exceeds budget {}", what, size, limit)
            }
            Error::Postcondition(s) => write!(f, "postcondition violated: {}", s),
        }
    }
}

impl core::error::Error for Error {}
