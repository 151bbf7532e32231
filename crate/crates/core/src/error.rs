use thiserror::Error;

use crate::closed_forms::Condition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("a single isolated vertex has no finite curvature")]
    SingleVertex,
    #[error("graph is not a block graph")]
    NotABlockGraph,
    #[error("graph is not a tree")]
    NotATree,
    #[error("composition conditions violated: {}", fmt_conditions(.0))]
    ConditionsViolated(Vec<Condition>),
    #[error("curvature is negative somewhere or no solution exists")]
    NotApplicable,
    #[error("expected diameter {expected}, found {found}")]
    WrongDiameter { expected: usize, found: usize },
    #[error("bundled data file invalid: {0}")]
    DataFileInvalid(String),
    #[error("no attachment with at most {budget} leaves works")]
    NotFoundWithinBudget { budget: usize },
    #[error("{what} = {value} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("unknown family or bad parameters: {0}")]
    Family(String),
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
    #[error("linear program is unbounded")]
    Unbounded,
}

fn fmt_conditions(conds: &[Condition]) -> String {
    conds.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

impl Error {
    /// Stable machine-readable name, used in CLI error JSON and HTTP bodies.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyGraph => "EmptyGraph",
            Error::SelfLoop(_) => "SelfLoop",
            Error::DuplicateEdge(..) => "DuplicateEdge",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::DisconnectedGraph => "DisconnectedGraph",
            Error::SingleVertex => "SingleVertex",
            Error::NotABlockGraph => "NotABlockGraph",
            Error::NotATree => "NotATree",
            Error::ConditionsViolated(_) => "ConditionViolated",
            Error::NotApplicable => "NotApplicable",
            Error::WrongDiameter { .. } => "WrongDiameter",
            Error::DataFileInvalid(_) => "DataFileInvalid",
            Error::NotFoundWithinBudget { .. } => "NotFoundWithinBudget",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::Parse { .. } => "ParseError",
            Error::Graph6(_) => "MalformedGraph6",
            Error::Family(_) => "UnknownFamily",
            Error::UnknownPredicate(_) => "UnknownPredicate",
            Error::Unbounded => "Unbounded",
        }
    }

    /// True for errors caused by a malformed graph description rather than a
    /// well-formed graph that fails a mathematical precondition.
    pub fn is_malformed_input(&self) -> bool {
        matches!(
            self,
            Error::EmptyGraph
                | Error::SelfLoop(_)
                | Error::DuplicateEdge(..)
                | Error::VertexOutOfRange { .. }
                | Error::Parse { .. }
                | Error::Graph6(_)
                | Error::Family(_)
                | Error::UnknownPredicate(_)
        )
    }
}
