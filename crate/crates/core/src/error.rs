use core::fmt;

use crate::groups::ClassId;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two group elements (or an element and a descriptor) have different shapes.
    DescriptorMismatch,
    /// A box sum or box sum map was requested over no components.
    EmptyList,
    ArityMismatch {
        expected: usize,
        found: usize,
    },
    /// A strictly positive input was required.
    NonPositiveInput,
    UnsupportedGroup,
    InvalidMorphism(&'static str),
    /// Exponent list of a presentation is not injective.
    NotSimple,
    LengthMismatch,
    /// Two series live over different exponent groups.
    GroupMismatch,
    /// Zero series, or a truncated series without any stored term.
    ZeroOrUnknownLeading,
    /// A truncated factor has no stored term, so the product cannot be bounded.
    UnknownLeading,
    IndeterminateSign,
    IndeterminateComparison,
    NonInvertibleCoefficient,
    NotLexSumGroup,
    UnknownClass(ClassId),
    NotExact,
    TooFewTerms,
    InfiniteDegree,
    /// Oracle inverse of a polynomial without a nonzero leading term.
    ZeroLeading,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DescriptorMismatch => f.write_str("group elements belong to different groups"),
            Error::EmptyList => f.write_str("empty component list"),
            Error::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected} components, found {found}")
            }
            Error::NonPositiveInput => f.write_str("input must be strictly positive"),
            Error::UnsupportedGroup => f.write_str("unsupported group descriptor"),
            Error::InvalidMorphism(why) => write!(f, "invalid morphism: {why}"),
            Error::NotSimple => f.write_str("exponent list is not injective"),
            Error::LengthMismatch => f.write_str("exponent and coefficient lists differ in length"),
            Error::GroupMismatch => f.write_str("series have different exponent groups"),
            Error::ZeroOrUnknownLeading => f.write_str("series has no determinate leading term"),
            Error::UnknownLeading => f.write_str("truncated factor has no stored term"),
            Error::IndeterminateSign => f.write_str("sign is indeterminate at the known precision"),
            Error::IndeterminateComparison => f.write_str("comparison is indeterminate at the known precision"),
            Error::NonInvertibleCoefficient => f.write_str("leading coefficient is not invertible"),
            Error::NotLexSumGroup => f.write_str("exponent group is not a two-component lex sum"),
            Error::UnknownClass(c) => write!(f, "unknown Archimedean class {c}"),
            Error::NotExact => f.write_str("operation requires an exact series"),
            Error::TooFewTerms => f.write_str("series has too few terms"),
            Error::InfiniteDegree => f.write_str("non-Archimedean degree is infinite"),
            Error::ZeroLeading => f.write_str("polynomial has no nonzero leading term"),
        }
    }
}

impl core::error::Error for Error {}
