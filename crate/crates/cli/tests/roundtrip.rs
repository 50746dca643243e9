//! Render/parse fixpoint on randomized ontologies.

use proptest::prelude::*;
use reinterp::axiom::{Assertion, Axiom};
use reinterp::concept::ConceptExpr;
use reinterp::ontology::Ontology;
use reinterp::symbol::Symbol;
use reinterp_cli::parser::{parse_ontology, render_ontology};

fn arb_concept() -> impl Strategy<Value = ConceptExpr> {
    let leaf = prop_oneof![
        Just(ConceptExpr::Top),
        Just(ConceptExpr::Bot),
        "[A-D]".prop_map(|n| ConceptExpr::atom(Symbol::concept(&n))),
    ];
    leaf.prop_recursive(3, 16, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(ConceptExpr::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ConceptExpr::and([a, b])),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ConceptExpr::or([a, b])),
            ("[rs]", inner).prop_map(|(r, c)| ConceptExpr::exists(Symbol::role(&r), c)),
        ]
    })
}

fn arb_individual() -> impl Strategy<Value = Symbol> {
    "[a-c]".prop_map(|n| Symbol::individual(&n))
}

fn arb_axiom() -> impl Strategy<Value = Axiom> {
    prop_oneof![
        (arb_concept(), arb_individual()).prop_map(|(c, a)| Axiom::concept_assert(c, a)),
        (arb_concept(), arb_concept()).prop_map(|(l, r)| Axiom::gci(l, r)),
        ("[rs]", arb_individual(), arb_individual(), any::<bool>())
            .prop_map(|(r, a, b, pos)| Axiom::role_assert(Symbol::role(&r), a, b, pos)),
        ("[rs]", "[rs]").prop_map(|(a, b)| Axiom::role_inc(Symbol::role(&a), Symbol::role(&b))),
        (arb_individual(), arb_individual()).prop_map(|(a, b)| Axiom::eq(a, b)),
        (arb_individual(), arb_individual()).prop_filter_map("distinct", |(a, b)| {
            Axiom::neq(a, b).ok()
        }),
        proptest::collection::vec((arb_concept(), arb_individual()), 1..3).prop_map(|lits| {
            Axiom::clause(lits.into_iter().map(|(c, a)| Assertion::concept(c, a))).unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // The parser never panics: arbitrary input yields a value or a
    // structured error.
    #[test]
    fn parser_total_on_arbitrary_text(text in ".{0,120}") {
        let _ = parse_ontology(&text);
    }

    // Mutations of valid sources also stay panic-free.
    #[test]
    fn parser_total_on_mutated_sources(
        axioms in proptest::collection::vec(arb_axiom(), 0..4),
        cut in any::<usize>(),
        junk in "[[:punct:] a-zA-Z0-9]{0,8}",
    ) {
        let ontology = Ontology::from_axioms(axioms);
        let mut text = render_ontology("probe", &ontology);
        let at = cut % (text.len() + 1);
        // The renderer emits ASCII, so any index is a char boundary.
        text.insert_str(at, &junk);
        let _ = parse_ontology(&text);
    }

    #[test]
    fn parse_render_fixpoint(axioms in proptest::collection::vec(arb_axiom(), 0..6)) {
        let ontology = Ontology::from_axioms(axioms);
        let rendered = render_ontology("probe", &ontology);
        let (name, reparsed) = parse_ontology(&rendered).unwrap_or_else(|e| {
            panic!("reparse failed: {e}\n{rendered}")
        });
        prop_assert_eq!(name, "probe");
        prop_assert_eq!(reparsed.axioms(), ontology.axioms());
        prop_assert_eq!(reparsed.public_vocab(), ontology.public_vocab());
        // Rendering is a fixpoint.
        prop_assert_eq!(render_ontology("probe", &reparsed), rendered);
    }
}
