use thiserror::Error;

/// Library-wide error type. The CLI maps `Syntax`-class errors to exit
/// code 2, validation failures to 3, and `Internal` aborts the run: an
/// `Internal` error means a mathematical invariant the library guarantees
/// was violated, not that the input was bad.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("malformed structure-equation entry `{entry}`: {msg}")]
    MalformedSalamon { entry: String, msg: String },

    #[error("index {index} exceeds dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("d^2 != 0: d(d e{generator}) is nonzero (Jacobi identity fails)")]
    JacobiFailed { generator: usize },

    #[error("algebra dimension must be a positive even integer, got {dim}")]
    OddDimension { dim: usize },

    #[error("exp argument must be a form of positive even degree with no scalar part: {msg}")]
    ExpArgument { msg: String },

    #[error("dimension mismatch: {msg}")]
    DimensionMismatch { msg: String },

    #[error("endomorphism entries must be real: {msg}")]
    ComplexEntries { msg: String },

    #[error("no image given for e{generator} and it cannot be completed from J^2 = -1")]
    MissingImage { generator: usize },

    #[error("declared almost-complex but J^2 != -identity")]
    NotAlmostComplex,

    #[error("2-form is not symplectic: {msg}")]
    NotSymplectic { msg: String },

    #[error("form does not generate a generalized-complex structure: {msg}")]
    InvalidSpinor { msg: String },

    #[error("operation requires an integrable structure")]
    NotIntegrable,

    #[error("operation requires a closed 2-form: {msg}")]
    NotClosed { msg: String },

    #[error("family structure requires a circle point (cos/sin substitution)")]
    CircleRequired,

    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("vector is not a member of the expected subspace")]
    NotInSubspace,

    #[error("manifest error: {msg}")]
    Manifest { msg: String },

    #[error("internal invariant violated: {msg}")]
    Internal { msg: String },
}
