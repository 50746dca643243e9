//! Ontology revision by reinterpretation.
//!
//! A toolkit for revising description-logic ontologies whose conflicts with
//! incoming information are explained by ambiguous symbol use. Conflicting
//! symbols are moved into an internal vocabulary by renaming, the renamed and
//! original symbols are reconnected with bridging axioms, and selection
//! functions pick which bridging axioms survive. On top of the operators sits
//! a harness that checks adapted AGM and iterated-revision postulates, both
//! on pinned counterexample instances and on seeded random sweeps.
//!
//! The supported logic is ALC plus role hierarchies, individual equality and
//! inequality, negative role assertions and boolean ABox clauses, decided by
//! a tableau calculus with GCI internalization and subset blocking.

pub mod axiom;
pub mod bridging;
pub mod concept;
pub mod conflict;
pub mod error;
pub mod gen;
pub mod msc;
pub mod ontology;
pub mod postulate;
pub mod reasoner;
pub mod revise;
pub mod rng;
pub mod space;
pub mod subst;
pub mod symbol;

pub use axiom::{Assertion, Axiom, AxiomSet, Literal};
pub use concept::ConceptExpr;
pub use error::Error;
pub use ontology::Ontology;
pub use symbol::{Symbol, SymbolKind, Tier};
