//! Finite concept-space generation and entailed-subsumption lattices.
//!
//! The concept language over a vocabulary is infinite; the toolkit works with
//! a depth-bounded closure instead. Depth 0 holds ⊤, ⊥ and all (negated)
//! atoms. Each further level first lifts every previous member under each
//! role's existential restriction, then closes the union under pairwise
//! conjunction and disjunction. Depth 1 therefore already contains
//! combinations such as an atom conjoined with an existential restriction.

use crate::axiom::{Axiom, AxiomSet};
use crate::concept::ConceptExpr;
use crate::reasoner::entails;
use crate::symbol::{Symbol, SymbolKind};
use std::collections::BTreeSet;

/// The depth-bounded concept space over the given concept and role symbols.
pub fn concept_space(concepts: &[Symbol], roles: &[Symbol], depth: u32) -> Vec<ConceptExpr> {
    for s in concepts {
        assert_eq!(s.kind(), SymbolKind::Concept);
    }
    for s in roles {
        assert_eq!(s.kind(), SymbolKind::Role);
    }
    let mut space: BTreeSet<ConceptExpr> = BTreeSet::new();
    space.insert(ConceptExpr::Top);
    space.insert(ConceptExpr::Bot);
    for s in concepts {
        let atom = ConceptExpr::atom(s.clone());
        space.insert(ConceptExpr::not(atom.clone()));
        space.insert(atom);
    }
    for _ in 0..depth {
        let previous: Vec<ConceptExpr> = space.iter().cloned().collect();
        let mut pool = previous.clone();
        for role in roles {
            for c in &previous {
                let lifted = ConceptExpr::exists(role.clone(), c.clone());
                if space.insert(lifted.clone()) {
                    pool.push(lifted);
                }
            }
        }
        for i in 0..pool.len() {
            for j in (i + 1)..pool.len() {
                space.insert(ConceptExpr::and([pool[i].clone(), pool[j].clone()]));
                space.insert(ConceptExpr::or([pool[i].clone(), pool[j].clone()]));
            }
        }
    }
    space.into_iter().collect()
}

/// Convenience: the concept space over all concept/role symbols of a set of
/// symbols.
pub fn concept_space_over(symbols: &BTreeSet<Symbol>, depth: u32) -> Vec<ConceptExpr> {
    let concepts: Vec<Symbol> =
        symbols.iter().filter(|s| s.kind() == SymbolKind::Concept).cloned().collect();
    let roles: Vec<Symbol> =
        symbols.iter().filter(|s| s.kind() == SymbolKind::Role).cloned().collect();
    concept_space(&concepts, &roles, depth)
}

/// The Hasse diagram of entailed subsumption between the given concepts,
/// after collapsing entailment-equivalent concepts into their canonically
/// least representative. Edges point from the more specific representative to
/// the more general one.
pub fn subsumption_lattice(
    axioms: &AxiomSet,
    concepts: &[ConceptExpr],
) -> Vec<(ConceptExpr, ConceptExpr)> {
    let items: Vec<ConceptExpr> = {
        let set: BTreeSet<ConceptExpr> = concepts.iter().cloned().collect();
        set.into_iter().collect()
    };
    let n = items.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = i == j
                || entails(axioms, &Axiom::gci(items[i].clone(), items[j].clone()));
        }
    }
    // Representatives: the first (canonically least) member of each
    // equivalence class.
    let mut rep: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..i {
            if leq[i][j] && leq[j][i] {
                rep[i] = rep[j];
                break;
            }
        }
    }
    // Distinct representatives are never mutually subsumed, so the preorder
    // restricted to them is a strict partial order and transitive reduction
    // is well defined.
    let reps: Vec<usize> = (0..n).filter(|&i| rep[i] == i).collect();
    let mut edges = Vec::new();
    for &i in &reps {
        for &j in &reps {
            if i == j || !leq[i][j] {
                continue;
            }
            let has_intermediate =
                reps.iter().any(|&k| k != i && k != j && leq[i][k] && leq[k][j]);
            if !has_intermediate {
                edges.push((items[i].clone(), items[j].clone()));
            }
        }
    }
    edges.sort();
    edges
}
