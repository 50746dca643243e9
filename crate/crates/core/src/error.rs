//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input ontology inconsistent")]
    InconsistentInput,

    #[error("trigger inconsistent")]
    TriggerInconsistent,

    #[error("msc undefined on inconsistent ontology")]
    MscUndefined,

    #[error("search budget exceeded")]
    SearchBudgetExceeded,

    #[error("trigger concept must be atomic")]
    NonAtomicTrigger,

    #[error("trigger contains internal symbol {0}")]
    InternalSymbolInTrigger(String),

    #[error("reflexive inequality {0} != {0} is unsatisfiable at construction")]
    ReflexiveInequality(String),

    #[error("clause must contain at least one literal")]
    EmptyClause,

    #[error("operator {0} requires {1}")]
    TriggerShape(String, String),

    #[error("empty remainder family")]
    EmptyRemainderFamily,
}
