use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("minimal polynomial of `{0}` is not monic")]
    NonMonic(String),
    #[error("minimal polynomial of `{0}` has degree below 2")]
    DegreeTooSmall(String),
    #[error("embedding hint for `{symbol}` is ambiguous: {count} roots within tolerance")]
    AmbiguousHint { symbol: String, count: usize },
    #[error("embedding of `{0}` could not be isolated")]
    EmbeddingFailed(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("tower mismatch")]
    TowerMismatch,
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("coefficient domain mismatch")]
    DomainMismatch,
    #[error("zero input to {0}")]
    ZeroInput(&'static str),
    #[error("images are not homogeneous of a common degree")]
    NonHomogeneousImages,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is singular on the curve")]
    SingularPoint,
    #[error("line is a component of the curve")]
    LineIsComponent,
    #[error("singular pencil member")]
    SingularMember,
    #[error("elimination degenerated in every chart")]
    EliminationDegenerate,
    #[error("group closure exceeded cap {0}")]
    CapExceeded(usize),
    #[error("transformation is not invertible")]
    Singular,
    #[error("subgroup is not contained in the group")]
    NotSubgroup,
    #[error("generator does not permute the point list")]
    NotPermuting,
    #[error("transformation does not preserve the pencil")]
    NotPencilPreserving,
    #[error("not proportional: {0}")]
    NotProportional(String),
    #[error("precision insufficient: {0}")]
    Precision(String),
    #[error("sample point on the branch locus or outside the chart")]
    BadSample,
    #[error("ratio is not constant across samples")]
    NonConstantRatio,
    #[error("degenerate Gram matrix")]
    DegenerateGram,
    #[error("form is not definite")]
    Indefinite,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("invalid lattice name `{0}`")]
    InvalidLattice(String),
    #[error("invalid fiber type `{0}`")]
    InvalidFiber(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
