use num_bigint::BigUint;
use thiserror::Error;

/// Errors raised by the workbench. Each variant maps onto a stable
/// [`Error::code`] string that the command line reports verbatim.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed formation: {0}")]
    MalformedFormation(String),
    #[error("not a {expected}: {found}")]
    NotInCategory {
        expected: &'static str,
        found: String,
    },
    #[error("ambiguous formation: reads both as {first} and as {second}")]
    Ambiguous { first: String, second: String },
    #[error("presentable syntax error at token {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("term is not a cognomen: {0}")]
    NotCognomen(String),
    #[error("zero is not a formation")]
    ZeroNotFormation,
    #[error("concatenation operands must be positive")]
    ZeroOperand,
    #[error("budget exceeded: at least {required} bits required, {budget} allowed")]
    BudgetExceeded { required: BigUint, budget: u64 },
    #[error("enumeration budget exceeded after scanning values below 2^{max_bits}")]
    EnumerationExhausted { max_bits: u32 },
    #[error("value does not code a term: {0}")]
    NotTermCode(String),
    #[error("diagonal input must have exactly noema v0 present, found {0:?}")]
    WrongNoemata(Vec<u64>),
    #[error("term not enumerated in prefix: {0}")]
    NotEnumerated(String),
    #[error("unresolved term in fragment: {0}")]
    UnresolvedTerm(String),
    #[error("enumerator atom requires a euro-enabled fragment: {0}")]
    EuroDisabled(String),
    #[error("fragment exceeds {limit} terms while closing under instances")]
    FragmentTooLarge { limit: usize },
    #[error("no noema alias for v{0}: enumeration prefix too short")]
    MissingAlias(u64),
    #[error("sentence not tracked in trace: {0}")]
    Untracked(String),
    #[error("revision did not converge within {max_blocks} blocks of {max_steps} steps")]
    NotConverged { max_steps: usize, max_blocks: usize },
    #[error("unknown scenario: {0}")]
    UnknownScenario(String),
    #[error("file not found: {0}")]
    FileNotFound(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Stable identifier used by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MalformedFormation(_) => "MalformedFormation",
            Error::NotInCategory { .. } => "NotInCategory",
            Error::Ambiguous { .. } => "Ambiguous",
            Error::Syntax { .. } => "Syntax",
            Error::NotCognomen(_) => "NotCognomen",
            Error::ZeroNotFormation => "ZeroNotFormation",
            Error::ZeroOperand => "ZeroOperand",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::EnumerationExhausted { .. } => "EnumerationExhausted",
            Error::NotTermCode(_) => "NotTermCode",
            Error::WrongNoemata(_) => "WrongNoemata",
            Error::NotEnumerated(_) => "NotEnumerated",
            Error::UnresolvedTerm(_) => "UnresolvedTerm",
            Error::EuroDisabled(_) => "EuroDisabled",
            Error::FragmentTooLarge { .. } => "FragmentTooLarge",
            Error::MissingAlias(_) => "MissingAlias",
            Error::Untracked(_) => "Untracked",
            Error::NotConverged { .. } => "NotConverged",
            Error::UnknownScenario(_) => "UnknownScenario",
            Error::FileNotFound(_) => "FileNotFound",
            Error::Invalid(_) => "Invalid",
        }
    }

    /// Budget and convergence failures are distinguished from domain errors.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. }
                | Error::EnumerationExhausted { .. }
                | Error::NotConverged { .. }
                | Error::FragmentTooLarge { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
