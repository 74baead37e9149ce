use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("column {index} out of range for ambient dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generator count mismatch: {left} vs {right}")]
    GeneratorMismatch { left: usize, right: usize },
    #[error("letter {letter} outside [1, {n}]")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("graded piece of dimension {dim} exceeds the resource cap {cap}")]
    ResourceLimit { dim: u128, cap: u128 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("level m = {m} outside the computed range 1..={max}")]
    LevelOutOfRange { m: usize, max: usize },
    #[error("partition {parts:?} has more than {n} rows")]
    TooManyRows { parts: Vec<usize>, n: usize },
    #[error("the empty diagram has no tensor-field character")]
    ZeroDiagram,
    #[error("character is not symmetric in degree {degree}")]
    NotSymmetric { degree: usize },
    #[error(
        "negative or fractional coefficient {coefficient} for shape {shape:?} in degree {degree}"
    )]
    NegativeMultiplicity {
        degree: usize,
        shape: Vec<usize>,
        coefficient: String,
    },
    #[error("(m, n) = ({m}, {n}) outside the bound's hypotheses m >= 3, n >= 2")]
    OutOfHypothesis { m: usize, n: usize },
    #[error("tensor factor {factor} outside [1, {m}]")]
    FactorOutOfRange { factor: usize, m: usize },
    #[error("shape mismatch: (n, m) = ({0}, {1}) vs ({2}, {3})")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("input form has a term of odd rank {rank}")]
    OddRank { rank: usize },
    #[error(
        "Groebner basis is only complete through degree {complete_through}, requested {degree}"
    )]
    PartialBasis {
        degree: usize,
        complete_through: usize,
    },
    #[error("operation needs exact rational arithmetic")]
    NeedsRational,
}
