use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    // field construction and arithmetic
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field of order {p}^{s} exceeds the supported maximum of 16")]
    FieldTooLarge { p: u32, s: u32 },
    #[error("modulus {0:?} is not irreducible over the prime field")]
    ReducibleModulus(Vec<u8>),
    #[error("modulus {coeffs:?} does not describe a degree-{degree} polynomial over GF({p})")]
    BadModulus { coeffs: Vec<u8>, degree: u32, p: u32 },
    #[error("no primitive element found (internal error)")]
    NoPrimitiveElement,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("zero has no discrete logarithm")]
    ZeroHasNoLog,
    #[error("element code {code} is out of range for GF({q})")]
    ElementOutOfRange { code: u32, q: u32 },
    #[error("cannot parse field element {0:?}")]
    BadElement(String),

    // codes
    #[error("generator rows are dependent (rank {rank} < {rows})")]
    DependentRows { rank: usize, rows: usize },
    #[error("the code is zero-dimensional")]
    EmptyCode,
    #[error("rows have inconsistent lengths")]
    RaggedMatrix,
    #[error("{what}: {count} exceeds the configured cap {cap}")]
    TooLarge { what: &'static str, count: u128, cap: u128 },
    #[error("index {i} outside 1..={k}")]
    BadIndex { i: usize, k: usize },
    #[error("zero word where a nonzero codeword is required")]
    ZeroInput,
    #[error("word lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("word is not a codeword")]
    NotACodeword,
    #[error("word length {0} exceeds the support-mask limit")]
    TooLong(usize),

    // orders and monomials
    #[error("monomial is not in the image of the word encoding")]
    NotInImage,

    // groebner
    #[error("monomial degree {degree} exceeds the traversal cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },
    #[error("frontier grew past {cap} candidates")]
    FrontierOverflow { cap: usize },
    #[error("basis element {element} violates the binomial shape: {detail}")]
    ShapeViolation { element: String, detail: String },
    #[error("basis element has zero associated codeword")]
    RxElement,

    // d2
    #[error("code dimension {0} is smaller than 2")]
    DimensionTooSmall(usize),
    #[error("candidate set contains a word without minimal support")]
    NotMinimalSupport,

    // betti
    #[error("ideal needs at least {needed} generators, got {got}")]
    TooFewGenerators { needed: usize, got: usize },
    #[error("generators are not an antichain under inclusion")]
    NotAntichain,
    #[error("generator index {0} outside 1..=n")]
    VertexOutOfRange(usize),

    // counterexample
    #[error("seed hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("order is not compatible with the construction: {0}")]
    OrderNotCompatible(String),
    #[error("truncation {t} outside 1..={ell}")]
    TruncationOutOfRange { t: usize, ell: usize },

    /// A checked statement came out false; carries a serialized witness.
    #[error("falsified: {0}")]
    Falsified(String),
}

pub type Result<T> = std::result::Result<T, Error>;
