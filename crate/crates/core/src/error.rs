use thiserror::Error;

/// Errors raised by the algebra (bases, vectors, operators, superoperators).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a basis needs at least one label")]
    EmptyBasis,

    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),

    #[error("product of an empty list of bases")]
    EmptyProduct,

    #[error("unknown basis element `{0}`")]
    UnknownElement(String),

    #[error("index {index} out of range for basis of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },

    #[error("expected {expected} amplitudes, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("operator must be square, got {input} -> {output}")]
    NotSquare { input: String, output: String },

    #[error("basis {0} is not a binary product")]
    NotBinaryProduct(String),

    #[error("invalid permutation {perm:?} of {arity} positions")]
    InvalidPermutation { perm: Vec<usize>, arity: usize },

    #[error("unknown state `{name}`; valid names: {valid}")]
    UnknownState { name: String, valid: String },

    #[error("unknown gate `{name}`; valid names: {valid}")]
    UnknownGate { name: String, valid: String },

    #[error("unknown circuit `{name}`; valid names: {valid}")]
    UnknownCircuit { name: String, valid: String },

    #[error("law `{law}` has no compatible instances: {detail}")]
    IncompatiblePool { law: String, detail: String },

    #[error("malformed density: {0}")]
    MalformedDensity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
