//! Bridging axioms: hypotheses connecting internalized symbols with their
//! public originals.
//!
//! Simple bridging relates each renamed concept or role to its image by the
//! two inclusions; strong bridging additionally imports every entailed
//! subsumption between a renamed concept description and a support symbol.
//! Internalized individuals always contribute the identity between original
//! and image, which is what lets a selection function keep constants
//! effectively un-reinterpreted. The `oa` family provides the
//! literal-trigger operators with disjunctive weakenings of the two
//! inclusions.

use crate::axiom::{Axiom, AxiomSet, Literal};
use crate::concept::ConceptExpr;
use crate::error::Error;
use crate::ontology::Ontology;
use crate::reasoner::{entails, is_consistent};
use crate::space::concept_space;
use crate::subst::Substitution;
use crate::symbol::{Symbol, SymbolKind};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BridgingFlavor {
    Simple,
    Strong,
    Oa,
}

/// A generated set of bridging axioms together with its provenance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BridgingAxiomSet {
    pub axioms: AxiomSet,
    pub flavor: BridgingFlavor,
    pub origin: Substitution,
}

/// The simple bridging axioms of a substitution: both inclusions per renamed
/// concept or role, the identity per renamed individual.
pub fn simple_bridging(sigma: &Substitution) -> BridgingAxiomSet {
    let mut axioms = AxiomSet::new();
    for (from, to) in sigma.mappings() {
        match from.kind() {
            SymbolKind::Concept => {
                let original = ConceptExpr::atom(from.clone());
                let image = ConceptExpr::atom(to.clone());
                axioms.insert(Axiom::gci(original.clone(), image.clone()));
                axioms.insert(Axiom::gci(image, original));
            }
            SymbolKind::Role => {
                axioms.insert(Axiom::role_inc(from.clone(), to.clone()));
                axioms.insert(Axiom::role_inc(to.clone(), from.clone()));
            }
            SymbolKind::Individual => {
                axioms.insert(Axiom::eq(from.clone(), to.clone()));
            }
        }
    }
    BridgingAxiomSet { axioms, flavor: BridgingFlavor::Simple, origin: sigma.clone() }
}

/// The scan family for strong bridging: literals, their existential lifts,
/// and boolean pairs of literals, per level. Leaner than the full concept
/// space (no boolean combinations of lifted terms), which keeps iterated
/// strong revision tractable while still importing every subsumption shape
/// the operators exercise.
fn bridging_space(symbols: &std::collections::BTreeSet<Symbol>, depth: u32) -> Vec<ConceptExpr> {
    let concepts: Vec<Symbol> =
        symbols.iter().filter(|s| s.kind() == SymbolKind::Concept).cloned().collect();
    let roles: Vec<Symbol> =
        symbols.iter().filter(|s| s.kind() == SymbolKind::Role).cloned().collect();
    let mut base: Vec<ConceptExpr> = vec![ConceptExpr::Top, ConceptExpr::Bot];
    for s in &concepts {
        base.push(ConceptExpr::atom(s.clone()));
        base.push(ConceptExpr::not(ConceptExpr::atom(s.clone())));
    }
    let mut space: std::collections::BTreeSet<ConceptExpr> = base.iter().cloned().collect();
    for i in 0..base.len() {
        for j in (i + 1)..base.len() {
            space.insert(ConceptExpr::and([base[i].clone(), base[j].clone()]));
            space.insert(ConceptExpr::or([base[i].clone(), base[j].clone()]));
        }
    }
    let mut frontier: Vec<ConceptExpr> = base.clone();
    for _ in 0..depth {
        let mut next = Vec::new();
        for r in &roles {
            for c in &frontier {
                let lifted = ConceptExpr::exists(r.clone(), c.clone());
                if space.insert(lifted.clone()) {
                    next.push(lifted);
                }
            }
        }
        frontier = next;
    }
    space.into_iter().collect()
}

/// The strong bridging axioms of a substitution with respect to an ontology:
/// for every concept C of the depth-bounded scan family over V(O) and every
/// concept symbol s in the support, Cσ ⊑ s when O ⊨ C ⊑ s and s ⊑ Cσ when
/// O ⊨ s ⊑ C. Roles fall back to the simple two-way inclusions (the only
/// role-typed bridging the language admits); individuals contribute
/// identities.
pub fn strong_bridging(
    sigma: &Substitution,
    ontology: &Ontology,
    depth: u32,
) -> Result<BridgingAxiomSet, Error> {
    if !is_consistent(ontology.axioms()) {
        return Err(Error::InconsistentInput);
    }
    let mut axioms = AxiomSet::new();
    let space = bridging_space(&ontology.occurring(), depth);
    let empty = AxiomSet::new();
    // Axioms valid in every interpretation belong to every remainder and
    // carry no bridging content; they are dropped from the generated set.
    let insert_contingent = |axioms: &mut AxiomSet, ax: Axiom| {
        if !entails(&empty, &ax) {
            axioms.insert(ax);
        }
    };
    for (from, to) in sigma.mappings() {
        match from.kind() {
            SymbolKind::Concept => {
                let s = ConceptExpr::atom(from.clone());
                for c in &space {
                    if entails(ontology.axioms(), &Axiom::gci(c.clone(), s.clone())) {
                        insert_contingent(&mut axioms, Axiom::gci(sigma.apply_concept(c), s.clone()));
                    }
                    if entails(ontology.axioms(), &Axiom::gci(s.clone(), c.clone())) {
                        insert_contingent(&mut axioms, Axiom::gci(s.clone(), sigma.apply_concept(c)));
                    }
                }
                // The two simple inclusions arise from C = s itself.
                let image = ConceptExpr::atom(to.clone());
                axioms.insert(Axiom::gci(s.clone(), image.clone()));
                axioms.insert(Axiom::gci(image, s));
            }
            SymbolKind::Role => {
                axioms.insert(Axiom::role_inc(from.clone(), to.clone()));
                axioms.insert(Axiom::role_inc(to.clone(), from.clone()));
            }
            SymbolKind::Individual => {
                axioms.insert(Axiom::eq(from.clone(), to.clone()));
            }
        }
    }
    Ok(BridgingAxiomSet { axioms, flavor: BridgingFlavor::Strong, origin: sigma.clone() })
}

/// The auxiliary axiom family for the selection-based literal operator.
///
/// For a positive trigger A(b) this is every A ⊑ A' ⊔ C with Oσ ⊨ C(b) and A
/// not occurring in C; for a negative trigger ¬A(b), every A' ⊑ A ⊔ C under
/// the same side conditions. C ranges over the depth-bounded space over the
/// ontology's vocabulary extended with the internalized symbol.
pub fn oa(
    ontology: &Ontology,
    literal: &Literal,
    internal: &Symbol,
    depth: u32,
) -> Result<BridgingAxiomSet, Error> {
    if !is_consistent(ontology.axioms()) {
        return Err(Error::InconsistentInput);
    }
    let public = &literal.concept;
    assert_eq!(internal.kind(), SymbolKind::Concept);
    let sigma = Substitution::from_pairs([(public.clone(), internal.clone())]);
    let renamed = sigma.apply_axioms(ontology.axioms());

    let mut concepts: Vec<Symbol> = Vec::new();
    let mut roles: Vec<Symbol> = Vec::new();
    for s in ontology.occurring() {
        match s.kind() {
            SymbolKind::Concept if s != *public => concepts.push(s),
            SymbolKind::Role => roles.push(s),
            _ => {}
        }
    }
    if !concepts.contains(internal) {
        concepts.push(internal.clone());
    }
    concepts.sort();

    let mut axioms = AxiomSet::new();
    let original = ConceptExpr::atom(public.clone());
    let image = ConceptExpr::atom(internal.clone());
    for c in concept_space(&concepts, &roles, depth) {
        if c.mentions(public) {
            continue;
        }
        let holds_at_b =
            entails(&renamed, &Axiom::concept_assert(c.clone(), literal.individual.clone()));
        if !holds_at_b {
            continue;
        }
        let axiom = if literal.positive {
            Axiom::gci(original.clone(), ConceptExpr::or([image.clone(), c]))
        } else {
            Axiom::gci(image.clone(), ConceptExpr::or([original.clone(), c]))
        };
        axioms.insert(axiom);
    }
    Ok(BridgingAxiomSet { axioms, flavor: BridgingFlavor::Oa, origin: sigma })
}
