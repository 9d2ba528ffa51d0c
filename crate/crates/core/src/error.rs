use alloc::string::String;
use core::fmt;

/// Errors surfaced by the library.
///
/// Value-level absences (a braiding that is not of Cartan type, a matrix
/// that is not symmetrizable, …) are `Option`/verdict types on the relevant
/// operations, not errors; `Error` is reserved for violated preconditions,
/// resource guards, and malformed data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input data (non-square matrix, bad invariant factors, …).
    InvalidInput(String),
    /// Two cyclotomic integers (or matrix entries) live at different levels.
    LevelMismatch { left: u64, right: u64 },
    /// An exponent vector has the wrong length for its group.
    LengthMismatch { expected: usize, got: usize },
    /// `discrete_log` found several exponents in a window wider than the
    /// base order.
    AmbiguousDiscreteLog,
    /// The operation requires a braiding of Cartan type.
    NotCartanType,
    /// The operation requires every entry to have odd order.
    EvenOrder,
    /// The operation requires a finite-type Cartan matrix.
    NotFiniteType,
    /// A connected component mixes diagonal entries of different orders,
    /// which the graded-dimension formula does not cover.
    UnequalComponentOrders,
    /// Mixed braided-polynomial contexts (different braiding matrices).
    ContextMismatch,
    /// A symbolic expansion or antisymmetrizer block exceeded its guard.
    ResourceGuard(String),
    /// The automorphism group is too large (or unsupported) for enumeration.
    AutEnumeration(String),
    /// Argument out of the documented range.
    OutOfRange(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::LevelMismatch { left, right } => {
                write!(f, "cyclotomic level mismatch: {left} vs {right}")
            }
            Error::LengthMismatch { expected, got } => {
                write!(f, "exponent vector length {got}, expected {expected}")
            }
            Error::AmbiguousDiscreteLog => {
                write!(f, "discrete log ambiguous: window exceeds base order")
            }
            Error::NotCartanType => write!(f, "braiding is not of Cartan type"),
            Error::EvenOrder => write!(f, "an entry has even order"),
            Error::NotFiniteType => write!(f, "Cartan matrix is not of finite type"),
            Error::UnequalComponentOrders => {
                write!(
                    f,
                    "connected component has diagonal entries of unequal order"
                )
            }
            Error::ContextMismatch => write!(f, "braided polynomials from different contexts"),
            Error::ResourceGuard(msg) => write!(f, "resource guard exceeded: {msg}"),
            Error::AutEnumeration(msg) => write!(f, "automorphism enumeration: {msg}"),
            Error::OutOfRange(msg) => write!(f, "out of range: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
