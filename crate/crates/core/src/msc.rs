//! Depth-bounded most-specific-concept approximation.
//!
//! The msc of an individual collects every entailed atomic or negated-atomic
//! concept literal at the individual and, below the depth bound, one
//! existential conjunct per entailed positive role edge. A closure pass then
//! conjoins any concept of the same-depth space that is entailed at the
//! individual but not yet subsumed; disjunctively forced existentials (say,
//! through a clause or an inclusion axiom) leave no entailed single edge, so
//! the recursive collection alone would miss them. The result is always
//! entailed at the individual and minimal relative to the concept space of
//! the same depth.

use crate::axiom::{axiom_set_symbols, Axiom, AxiomSet};
use crate::concept::ConceptExpr;
use crate::error::Error;
use crate::reasoner::{entails, is_consistent};
use crate::space::concept_space;
use crate::symbol::{Symbol, SymbolKind};

/// Computes the msc approximation of `individual` at the given depth.
pub fn msc(axioms: &AxiomSet, individual: &Symbol, depth: u32) -> Result<ConceptExpr, Error> {
    if !is_consistent(axioms) {
        return Err(Error::MscUndefined);
    }
    let symbols = axiom_set_symbols(axioms);
    let concepts: Vec<Symbol> =
        symbols.iter().filter(|s| s.kind() == SymbolKind::Concept).cloned().collect();
    let roles: Vec<Symbol> =
        symbols.iter().filter(|s| s.kind() == SymbolKind::Role).cloned().collect();
    let individuals: Vec<Symbol> =
        symbols.iter().filter(|s| s.kind() == SymbolKind::Individual).cloned().collect();
    let mut m = msc_rec(axioms, individual, depth, &concepts, &roles, &individuals);
    for c in concept_space(&concepts, &roles, depth) {
        if entails(axioms, &Axiom::concept_assert(c.clone(), individual.clone()))
            && !entails(axioms, &Axiom::gci(m.clone(), c.clone()))
        {
            m = ConceptExpr::and([m, c]);
        }
    }
    Ok(m)
}

fn msc_rec(
    axioms: &AxiomSet,
    individual: &Symbol,
    depth: u32,
    concepts: &[Symbol],
    roles: &[Symbol],
    individuals: &[Symbol],
) -> ConceptExpr {
    let mut conjuncts = Vec::new();
    for c in concepts {
        let atom = ConceptExpr::atom(c.clone());
        if entails(axioms, &Axiom::concept_assert(atom.clone(), individual.clone())) {
            conjuncts.push(atom);
        } else {
            let neg = ConceptExpr::not(atom);
            if entails(axioms, &Axiom::concept_assert(neg.clone(), individual.clone())) {
                conjuncts.push(neg);
            }
        }
    }
    if depth > 0 {
        for role in roles {
            for succ in individuals {
                let edge =
                    Axiom::role_assert(role.clone(), individual.clone(), succ.clone(), true);
                if entails(axioms, &edge) {
                    let inner = msc_rec(axioms, succ, depth - 1, concepts, roles, individuals);
                    conjuncts.push(ConceptExpr::exists(role.clone(), inner));
                }
            }
        }
    }
    ConceptExpr::and(conjuncts)
}
