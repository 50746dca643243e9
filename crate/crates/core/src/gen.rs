//! Seeded random instance generation for the postulate sweeps.
//!
//! Instances stay at desk scale: up to three concept names, two roles and
//! three individuals, with shallow concepts. Generation is deterministic for
//! a given seed via the SplitMix generator.

use crate::axiom::{Assertion, Axiom, AxiomSet, Literal};
use crate::concept::ConceptExpr;
use crate::ontology::Ontology;
use crate::reasoner::{entails, is_consistent};
use crate::rng::Rng;
use crate::symbol::Symbol;

/// The fixed sweep signature.
pub fn concepts() -> Vec<Symbol> {
    vec![Symbol::concept("A"), Symbol::concept("B"), Symbol::concept("C")]
}

pub fn roles() -> Vec<Symbol> {
    vec![Symbol::role("r"), Symbol::role("s")]
}

pub fn individuals() -> Vec<Symbol> {
    vec![Symbol::individual("a"), Symbol::individual("b"), Symbol::individual("c")]
}

/// Knobs for the axiom shapes a generator may emit.
#[derive(Clone, Copy, Debug)]
pub struct GenOptions {
    pub allow_exists: bool,
    pub allow_clauses: bool,
    pub allow_equalities: bool,
    pub allow_role_assertions: bool,
}

impl Default for GenOptions {
    fn default() -> Self {
        GenOptions {
            allow_exists: true,
            allow_clauses: true,
            allow_equalities: true,
            allow_role_assertions: true,
        }
    }
}

impl GenOptions {
    pub fn exists_free() -> Self {
        GenOptions { allow_exists: false, ..GenOptions::default() }
    }
}

/// A random concept of the given structural depth.
pub fn gen_concept(rng: &mut Rng, depth: u32, opts: &GenOptions) -> ConceptExpr {
    let atom = |rng: &mut Rng| {
        let c = ConceptExpr::atom(rng.pick(&concepts()).clone());
        if rng.chance(1, 3) {
            ConceptExpr::not(c)
        } else {
            c
        }
    };
    if depth == 0 {
        return atom(rng);
    }
    match rng.below(if opts.allow_exists { 4 } else { 3 }) {
        0 => atom(rng),
        1 => ConceptExpr::and([gen_concept(rng, depth - 1, opts), gen_concept(rng, depth - 1, opts)]),
        2 => ConceptExpr::or([gen_concept(rng, depth - 1, opts), gen_concept(rng, depth - 1, opts)]),
        _ => ConceptExpr::exists(rng.pick(&roles()).clone(), gen_concept(rng, depth - 1, opts)),
    }
}

/// A random axiom, weighted towards assertions.
pub fn gen_axiom(rng: &mut Rng, opts: &GenOptions) -> Axiom {
    loop {
        match rng.below(100) {
            0..=44 => {
                let depth = if rng.chance(1, 2) { 1 } else { 0 };
                return Axiom::concept_assert(
                    gen_concept(rng, depth, opts),
                    rng.pick(&individuals()).clone(),
                );
            }
            45..=59 => {
                return Axiom::gci(gen_concept(rng, 1, opts), gen_concept(rng, 1, opts));
            }
            60..=74 if opts.allow_role_assertions => {
                return Axiom::role_assert(
                    rng.pick(&roles()).clone(),
                    rng.pick(&individuals()).clone(),
                    rng.pick(&individuals()).clone(),
                    rng.chance(3, 4),
                );
            }
            75..=89 if opts.allow_clauses => {
                let lits = [
                    Assertion::concept(gen_concept(rng, 0, opts), rng.pick(&individuals()).clone()),
                    Assertion::concept(gen_concept(rng, 0, opts), rng.pick(&individuals()).clone()),
                ];
                return Axiom::clause(lits).expect("two literals");
            }
            90..=94 if opts.allow_equalities => {
                let a = rng.pick(&individuals()).clone();
                let b = rng.pick(&individuals()).clone();
                if a != b {
                    return if rng.chance(1, 2) {
                        Axiom::eq(a, b)
                    } else {
                        Axiom::neq(a, b).expect("distinct")
                    };
                }
            }
            95..=99 if opts.allow_role_assertions => {
                return Axiom::role_inc(rng.pick(&roles()).clone(), rng.pick(&roles()).clone());
            }
            _ => {}
        }
    }
}

/// A random axiom set of the given size.
pub fn gen_axiom_set(rng: &mut Rng, size: usize, opts: &GenOptions) -> AxiomSet {
    let mut set = AxiomSet::new();
    while set.len() < size {
        set.insert(gen_axiom(rng, opts));
    }
    set
}

/// A random consistent axiom set (retrying generation).
pub fn gen_consistent_set(rng: &mut Rng, size: usize, opts: &GenOptions) -> AxiomSet {
    loop {
        let set = gen_axiom_set(rng, size, opts);
        if is_consistent(&set) {
            return set;
        }
    }
}

pub fn gen_consistent_ontology(rng: &mut Rng, size: usize, opts: &GenOptions) -> Ontology {
    Ontology::from_axioms(gen_consistent_set(rng, size, opts))
}

/// A random signed atomic literal over the sweep signature.
pub fn gen_literal(rng: &mut Rng) -> Literal {
    Literal::new(
        rng.pick(&concepts()).clone(),
        rng.pick(&individuals()).clone(),
        rng.chance(1, 2),
    )
}

/// A consistent receiver that entails the negation of the returned literal
/// (the conflict case of the literal operators).
pub fn gen_conflict_literal_instance(rng: &mut Rng, size: usize) -> (Ontology, Literal) {
    loop {
        let literal = gen_literal(rng);
        let mut axioms = gen_axiom_set(rng, size.saturating_sub(1), &GenOptions::default());
        axioms.insert(literal.negated_axiom());
        if !is_consistent(&axioms) {
            continue;
        }
        if entails(&axioms, &literal.negated_axiom()) {
            return (Ontology::from_axioms(axioms), literal);
        }
    }
}
