//! An ontology: a finite axiom set together with its public and internal
//! vocabularies.

use crate::axiom::{axiom_set_symbols, Axiom, AxiomSet};
use crate::symbol::{Symbol, SymbolKind};
use std::collections::BTreeSet;

/// Axioms plus the (disjoint) public and internal vocabularies. The tier of a
/// symbol is determined by its prime level, so the two vocabularies cannot
/// overlap; every symbol occurring in the axioms is recorded in one of them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ontology {
    axioms: AxiomSet,
    public_vocab: BTreeSet<Symbol>,
    internal_vocab: BTreeSet<Symbol>,
}

impl Ontology {
    /// Builds an ontology whose vocabulary is inferred from the axioms.
    pub fn from_axioms<I: IntoIterator<Item = Axiom>>(axioms: I) -> Self {
        let axioms: AxiomSet = axioms.into_iter().collect();
        let mut o = Ontology { axioms, public_vocab: BTreeSet::new(), internal_vocab: BTreeSet::new() };
        o.refresh_vocab();
        o
    }

    /// Adds declared public symbols on top of the occurring ones.
    pub fn with_declared_public<I: IntoIterator<Item = Symbol>>(mut self, extra: I) -> Self {
        for s in extra {
            assert!(s.is_public(), "declared public symbol must have prime level 0");
            self.public_vocab.insert(s);
        }
        self
    }

    fn refresh_vocab(&mut self) {
        for s in axiom_set_symbols(&self.axioms) {
            if s.is_public() {
                self.public_vocab.insert(s);
            } else {
                self.internal_vocab.insert(s);
            }
        }
    }

    pub fn axioms(&self) -> &AxiomSet {
        &self.axioms
    }

    pub fn into_axioms(self) -> AxiomSet {
        self.axioms
    }

    pub fn public_vocab(&self) -> &BTreeSet<Symbol> {
        &self.public_vocab
    }

    pub fn internal_vocab(&self) -> &BTreeSet<Symbol> {
        &self.internal_vocab
    }

    /// All symbols occurring in the axioms (the paper's V(O) on axiom sets).
    pub fn occurring(&self) -> BTreeSet<Symbol> {
        axiom_set_symbols(&self.axioms)
    }

    pub fn vocab(&self) -> BTreeSet<Symbol> {
        self.public_vocab.union(&self.internal_vocab).cloned().collect()
    }

    pub fn concepts(&self) -> Vec<Symbol> {
        self.vocab().into_iter().filter(|s| s.kind() == SymbolKind::Concept).collect()
    }

    pub fn roles(&self) -> Vec<Symbol> {
        self.vocab().into_iter().filter(|s| s.kind() == SymbolKind::Role).collect()
    }

    pub fn individuals(&self) -> Vec<Symbol> {
        self.vocab().into_iter().filter(|s| s.kind() == SymbolKind::Individual).collect()
    }
}
