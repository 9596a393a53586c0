use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the family of sets is empty")]
    EmptyFamily,
    #[error("the family contains the empty set")]
    EmptySetMember,
    #[error("set is not contained in the ground set")]
    OutOfGround,
    #[error("operands live on different ground sets")]
    GroundMismatch,
    #[error("the list of operands is empty")]
    EmptyList,
    #[error("rank {r} is outside 1..={n}")]
    RankOutOfRange { r: usize, n: usize },
    #[error("ground set must have between 1 and 64 elements, got {0}")]
    InvalidGroundSize(usize),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid label `{0}`")]
    InvalidLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("invalid edge {0}-{1}")]
    InvalidEdge(String, String),
    #[error("graphs share the label `{0}`")]
    OverlappingLabels(String),
    #[error("the operation needs at least {0} operands")]
    TooFewOperands(usize),
    #[error("graph has an isolated vertex `{0}`")]
    HasIsolatedVertex(String),
    #[error("family {family} is not defined for n = {n}")]
    FamilyArityMismatch { family: &'static str, n: usize },
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    GroundTooLarge { n: usize, cap: usize },
    #[error("graph is not a disjoint union of stars")]
    NotAStarForest,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("C({s},{t}) = {count} candidate subsets exceed the search budget {budget}")]
    SearchSpaceExceeded {
        s: usize,
        t: usize,
        count: u128,
        budget: u64,
    },
    #[error("sets are not pairwise incomparable")]
    NotAnAntichain,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Stable identifier printed by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyFamily => "EmptyFamily",
            Error::EmptySetMember => "EmptySetMember",
            Error::OutOfGround => "OutOfGround",
            Error::GroundMismatch => "GroundMismatch",
            Error::EmptyList => "EmptyList",
            Error::RankOutOfRange { .. } => "RankOutOfRange",
            Error::InvalidGroundSize(_) => "InvalidGroundSize",
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::InvalidLabel(_) => "InvalidLabel",
            Error::UnknownLabel(_) => "UnknownLabel",
            Error::InvalidEdge(..) => "InvalidEdge",
            Error::OverlappingLabels(_) => "OverlappingLabels",
            Error::TooFewOperands(_) => "TooFewOperands",
            Error::HasIsolatedVertex(_) => "HasIsolatedVertex",
            Error::FamilyArityMismatch { .. } => "FamilyArityMismatch",
            Error::GroundTooLarge { .. } => "GroundTooLarge",
            Error::NotAStarForest => "NotAStarForest",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::SearchSpaceExceeded { .. } => "SearchSpaceExceeded",
            Error::NotAnAntichain => "NotAnAntichain",
            Error::Parse { .. } => "ParseError",
        }
    }

    /// Errors raised while reading input documents rather than by a computation.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::NotAnAntichain
                | Error::DuplicateLabel(_)
                | Error::InvalidLabel(_)
                | Error::UnknownLabel(_)
                | Error::InvalidEdge(..)
                | Error::InvalidGroundSize(_)
        )
    }
}
