//! Invariant checks beyond the acceptance criteria: randomized sweeps backed
//! by the independent oracles plus proptest structural properties.

mod common;

use proptest::prelude::*;
use reinterp::axiom::{axiom_set_symbols, Assertion, Axiom, AxiomSet};
use reinterp::concept::ConceptExpr;
use reinterp::conflict::{dual_remainders, mcs};
use reinterp::gen::{self, GenOptions};
use reinterp::msc::msc;
use reinterp::ontology::Ontology;
use reinterp::postulate::{check_ragm, probe_equiv, VerdictStatus};
use reinterp::reasoner::{entails, is_consistent};
use reinterp::revise::{
    max_based_selection, BridgeSelection, InternalizationMode, Operator, OperatorKind, Trigger,
};
use reinterp::rng::Rng;
use reinterp::space::{concept_space, subsumption_lattice};
use reinterp::subst::{make_substitution, Substitution};
use reinterp::symbol::{Symbol, SymbolKind};
use std::collections::BTreeSet;

fn concept(name: &str) -> ConceptExpr {
    ConceptExpr::atom(Symbol::concept(name))
}
fn ind(name: &str) -> Symbol {
    Symbol::individual(name)
}

// ---------------------------------------------------------------------------
// Crafted supplementary-postulate violations for non-maximum-based selections
// ---------------------------------------------------------------------------

#[test]
fn full_meet_selection_breaks_postulate_seven() {
    let o = Ontology::from_axioms([
        Axiom::concept_assert(concept("B"), ind("a")),
        Axiom::concept_assert(concept("C"), ind("b")),
    ]);
    let o1: AxiomSet = [Axiom::clause([
        Assertion::concept(ConceptExpr::not(concept("B")), ind("a")),
        Assertion::concept(ConceptExpr::not(concept("C")), ind("b")),
    ])
    .unwrap()]
    .into_iter()
    .collect();
    let o2: AxiomSet =
        [Axiom::concept_assert(ConceptExpr::not(concept("B")), ind("a"))].into_iter().collect();
    let op = Operator {
        mode: InternalizationMode::Full,
        bridge_selection: BridgeSelection::All,
        ..Operator::with_kind(OperatorKind::Weak)
    };
    let verdict = check_ragm(7, &o, &o1, &o2, &op, 0).unwrap();
    assert_eq!(verdict.status, VerdictStatus::Violated);
    let witness = verdict.witness.unwrap();
    assert_eq!(witness, Axiom::concept_assert(concept("C"), ind("b")));

    // Independent re-check: the joint revision entails the witness, the
    // stepwise expansion does not.
    let mut joint = o1.clone();
    joint.extend(o2.iter().cloned());
    let joint_result = op.apply(&o, &Trigger::Axioms(joint)).unwrap().ontology;
    let mut expansion = op.apply(&o, &Trigger::Axioms(o1)).unwrap().ontology.axioms().clone();
    expansion.extend(o2);
    assert!(entails(joint_result.axioms(), &witness));
    assert!(!entails(&expansion, &witness));
}

#[test]
fn index_selection_breaks_postulate_eight() {
    let o = Ontology::from_axioms([
        Axiom::concept_assert(concept("B"), ind("a")),
        Axiom::concept_assert(concept("B"), ind("b")),
    ]);
    let o1: AxiomSet = [Axiom::clause([
        Assertion::concept(ConceptExpr::not(concept("B")), ind("a")),
        Assertion::concept(ConceptExpr::not(concept("B")), ind("b")),
    ])
    .unwrap()]
    .into_iter()
    .collect();
    let o2: AxiomSet =
        [Axiom::concept_assert(ConceptExpr::not(concept("B")), ind("a"))].into_iter().collect();
    let op = Operator {
        mode: InternalizationMode::Full,
        bridge_selection: BridgeSelection::Nth(1),
        ..Operator::with_kind(OperatorKind::Weak)
    };
    let verdict = check_ragm(8, &o, &o1, &o2, &op, 0).unwrap();
    assert_eq!(verdict.status, VerdictStatus::Violated);
    let witness = verdict.witness.unwrap();
    assert_eq!(witness, Axiom::concept_assert(concept("B"), ind("b")));

    let mut expansion = op.apply(&o, &Trigger::Axioms(o1.clone())).unwrap().ontology.axioms().clone();
    expansion.extend(o2.iter().cloned());
    assert!(is_consistent(&expansion));
    let mut joint = o1;
    joint.extend(o2);
    let joint_result = op.apply(&o, &Trigger::Axioms(joint)).unwrap().ontology;
    assert!(entails(&expansion, &witness));
    assert!(!entails(joint_result.axioms(), &witness));
}

#[test]
fn maximum_based_selection_never_breaks_the_supplementary_postulates() {
    let mut rng = Rng::new(0x8a8a);
    let op = Operator {
        mode: InternalizationMode::Full,
        bridge_selection: max_based_selection(vec![]),
        ..Operator::with_kind(OperatorKind::Weak)
    };
    let opts = GenOptions::default();
    for _ in 0..100 {
        let s0 = 1 + rng.below(3);
        let o = gen::gen_consistent_ontology(&mut rng, s0, &opts);
        let s1 = 1 + rng.below(2);
        let o1 = gen::gen_consistent_set(&mut rng, s1, &opts);
        let s2 = 1 + rng.below(2);
        let o2 = gen::gen_consistent_set(&mut rng, s2, &opts);
        for which in [7, 8] {
            if let Ok(v) = check_ragm(which, &o, &o1, &o2, &op, 0) {
                assert_ne!(v.status, VerdictStatus::Violated, "postulate {which} broke");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Displayed remainder selections of the iterated counterexample
// ---------------------------------------------------------------------------

#[test]
fn third_postulate_counterexample_selected_bridges_match_display() {
    let (o, o1, o2, _) = reinterp::postulate::counterexamples::rdp3_ontology();
    let op = Operator::with_kind(OperatorKind::Weak);

    // One step with the second trigger: everything but the backward concept
    // inclusion survives.
    let direct = op.apply(&o, &Trigger::Axioms(o2.clone())).unwrap();
    let sigma = &direct.trace[0].substitution;
    let bridge = reinterp::bridging::simple_bridging(sigma).axioms;
    let dropped_backward: AxiomSet = bridge
        .iter()
        .filter(|ax| {
            **ax != Axiom::gci(
                ConceptExpr::atom(Symbol::concept("A").primed()),
                concept("A"),
            )
        })
        .cloned()
        .collect();
    assert_eq!(direct.trace[0].bridge_axioms, dropped_backward);

    // Two steps: both concept inclusions for the conflicted symbol drop.
    let two = op
        .iterate(&o, &[Trigger::Axioms(o1), Trigger::Axioms(o2)])
        .unwrap();
    let sigma2 = &two.trace[1].substitution;
    let bridge2 = reinterp::bridging::simple_bridging(sigma2).axioms;
    let dropped_both: AxiomSet = bridge2
        .iter()
        .filter(|ax| {
            **ax != Axiom::gci(ConceptExpr::atom(Symbol::concept("A").primed()), concept("A"))
                && **ax != Axiom::gci(concept("A"), ConceptExpr::atom(Symbol::concept("A").primed()))
        })
        .cloned()
        .collect();
    assert_eq!(two.trace[1].bridge_axioms, dropped_both);
}

// ---------------------------------------------------------------------------
// Oracle-backed sweeps
// ---------------------------------------------------------------------------

#[test]
fn concept_space_count_matches_enumeration() {
    let concepts = [Symbol::concept("A"), Symbol::concept("B")];
    for (roles, depth) in [(vec![], 1u32), (vec![Symbol::role("r")], 1)] {
        let space = concept_space(&concepts, &roles, depth);
        let oracle = common::concept_space_by_enumeration(&concepts, &roles, depth);
        let space_set: BTreeSet<ConceptExpr> = space.iter().cloned().collect();
        let oracle_set: BTreeSet<ConceptExpr> = oracle.iter().cloned().collect();
        assert_eq!(space_set, oracle_set);
        assert_eq!(space.len(), oracle.len());
    }
}

#[test]
fn msc_is_minimal_relative_to_its_depth() {
    let mut rng = Rng::new(0x315c);
    let opts = GenOptions::default();
    for _ in 0..40 {
        let size = 1 + rng.below(4);
        let axioms = gen::gen_consistent_set(&mut rng, size, &opts);
        let b = ind("a");
        let m = msc(&axioms, &b, 1).unwrap();
        assert!(entails(&axioms, &Axiom::concept_assert(m.clone(), b.clone())));
        let symbols = axiom_set_symbols(&axioms);
        let concepts: Vec<Symbol> =
            symbols.iter().filter(|s| s.kind() == SymbolKind::Concept).cloned().collect();
        let roles: Vec<Symbol> =
            symbols.iter().filter(|s| s.kind() == SymbolKind::Role).cloned().collect();
        for c in concept_space(&concepts, &roles, 1) {
            if entails(&axioms, &Axiom::concept_assert(c.clone(), b.clone())) {
                assert!(
                    entails(&axioms, &Axiom::gci(m.clone(), c.clone())),
                    "msc not below entailed concept {c}"
                );
            }
        }
    }
}

#[test]
fn lattice_is_acyclic_and_reachability_matches_entailment() {
    let mut rng = Rng::new(0x7a77);
    let opts = GenOptions::exists_free();
    for _ in 0..20 {
        let size = rng.below(4);
        let axioms = gen::gen_axiom_set(&mut rng, size, &opts);
        if !is_consistent(&axioms) {
            continue;
        }
        let nodes: Vec<ConceptExpr> = vec![
            ConceptExpr::Bot,
            concept("A"),
            concept("B"),
            ConceptExpr::and([concept("A"), concept("B")]),
            ConceptExpr::or([concept("A"), concept("C")]),
            ConceptExpr::Top,
        ];
        let edges = subsumption_lattice(&axioms, &nodes);
        // Representatives must not cycle: reachability never returns to a
        // strictly smaller node.
        let mut reach: Vec<(ConceptExpr, ConceptExpr)> = edges.clone();
        loop {
            let mut grew = false;
            let snapshot = reach.clone();
            for (x, y) in &snapshot {
                for (y2, z) in &snapshot {
                    if y == y2 && !reach.contains(&(x.clone(), z.clone())) {
                        reach.push((x.clone(), z.clone()));
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        for (x, y) in &reach {
            assert_ne!(x, y, "cycle through {x}");
            assert!(entails(&axioms, &Axiom::gci(x.clone(), y.clone())));
        }
        // Every strict entailment between representatives is reachable.
        let reps: BTreeSet<ConceptExpr> = edges
            .iter()
            .flat_map(|(x, y)| [x.clone(), y.clone()])
            .collect();
        for x in &reps {
            for y in &reps {
                if x == y {
                    continue;
                }
                let fwd = entails(&axioms, &Axiom::gci(x.clone(), y.clone()));
                let bwd = entails(&axioms, &Axiom::gci(y.clone(), x.clone()));
                if fwd && !bwd {
                    assert!(
                        reach.contains(&(x.clone(), y.clone())),
                        "entailed {x} below {y} unreachable"
                    );
                }
            }
        }
    }
}

#[test]
fn revision_results_are_deterministic() {
    let mut rng = Rng::new(0xdede);
    for kind in [OperatorKind::Weak, OperatorKind::Strong, OperatorKind::MscLiteral] {
        let op = Operator::with_kind(kind);
        let size = 1 + rng.below(4);
        let o = gen::gen_consistent_ontology(&mut rng, size, &GenOptions::default());
        let lit = gen::gen_literal(&mut rng);
        let first = op.apply(&o, &Trigger::Literal(lit.clone())).unwrap();
        let second = op.apply(&o, &Trigger::Literal(lit)).unwrap();
        assert_eq!(first.ontology.axioms(), second.ontology.axioms());
        assert_eq!(first.composed, second.composed);
    }
}

#[test]
fn conflict_families_are_minimal_and_sufficient() {
    let mut rng = Rng::new(0x3c3c);
    let narrow = GenOptions { allow_exists: false, allow_clauses: false, ..GenOptions::default() };
    let mut checked = 0;
    while checked < 30 {
        let s1 = 1 + rng.below(3);
        let o1 = Ontology::from_axioms(gen::gen_consistent_set(&mut rng, s1, &narrow));
        let s2 = 1 + rng.below(2);
        let o2 = Ontology::from_axioms(gen::gen_consistent_set(&mut rng, s2, &narrow));
        let Ok(result) = mcs(&o1, &o2) else { continue };
        for family in &result.families {
            let sigma = make_substitution(family);
            let mut joined = sigma.apply_axioms(o1.axioms());
            joined.extend(o2.axioms().iter().cloned());
            assert!(is_consistent(&joined), "family does not restore consistency");
            for dropped in family {
                let mut smaller = family.clone();
                smaller.remove(dropped);
                let sigma = make_substitution(&smaller);
                let mut joined = sigma.apply_axioms(o1.axioms());
                joined.extend(o2.axioms().iter().cloned());
                assert!(!is_consistent(&joined), "family not minimal at {dropped}");
            }
        }
        checked += 1;
    }
}

#[test]
fn probe_equivalence_is_an_equivalence_at_fixed_depth() {
    let mut rng = Rng::new(0x9999);
    let opts = GenOptions::exists_free();
    let vocab: BTreeSet<Symbol> = [
        Symbol::concept("A"),
        Symbol::concept("B"),
        ind("a"),
        ind("b"),
    ]
    .into_iter()
    .collect();
    for _ in 0..15 {
        let (sx, sy, sz) = (rng.below(3), rng.below(3), rng.below(3));
        let xs = gen::gen_axiom_set(&mut rng, sx, &opts);
        let ys = gen::gen_axiom_set(&mut rng, sy, &opts);
        let zs = gen::gen_axiom_set(&mut rng, sz, &opts);
        assert!(probe_equiv(&xs, &xs, &vocab, 0));
        let xy = probe_equiv(&xs, &ys, &vocab, 0);
        assert_eq!(xy, probe_equiv(&ys, &xs, &vocab, 0));
        if xy && probe_equiv(&ys, &zs, &vocab, 0) {
            assert!(probe_equiv(&xs, &zs, &vocab, 0));
        }
    }
}

#[test]
fn refutation_agrees_with_model_enumeration() {
    // entails(X, C(a)) must coincide with the absence of counter-models,
    // checked by the independent enumerator on existential-free inputs.
    let mut rng = Rng::new(0xbead);
    let opts = GenOptions::exists_free();
    let mut positives = 0;
    for _ in 0..150 {
        let size = 1 + rng.below(5);
        let axioms = gen::gen_axiom_set(&mut rng, size, &opts);
        let goal_concept = gen::gen_concept(&mut rng, 1, &opts);
        let at = rng.pick(&gen::individuals()).clone();
        let goal = Axiom::concept_assert(goal_concept.clone(), at.clone());
        let mut refuted = axioms.clone();
        refuted.insert(Axiom::concept_assert(ConceptExpr::not(goal_concept), at));
        let by_tableau = entails(&axioms, &goal);
        let by_models = !common::satisfiable_by_enumeration(&refuted);
        assert_eq!(by_tableau, by_models, "disagreement on {goal}");
        if by_tableau {
            positives += 1;
        }
    }
    assert!(positives > 5, "sweep must exercise entailed goals, got {positives}");
}

#[test]
fn probe_difference_separates_the_iterated_counterexample() {
    let (o, o1, o2, witness) = reinterp::postulate::counterexamples::rdp1_ontology();
    let op = Operator::with_kind(OperatorKind::Weak);
    let two = op
        .iterate(&o, &[Trigger::Axioms(o1.clone()), Trigger::Axioms(o2.clone())])
        .unwrap()
        .ontology;
    let one = op.apply(&o, &Trigger::Axioms(o2)).unwrap().ontology;
    let vocab: BTreeSet<Symbol> =
        [Symbol::concept("A"), Symbol::concept("B"), ind("a")].into_iter().collect();
    assert!(!probe_equiv(two.axioms(), one.axioms(), &vocab, 1));
    assert!(entails(two.axioms(), &witness));
    assert!(!entails(one.axioms(), &witness));
}

#[test]
fn consistency_is_antitone_in_the_axiom_set() {
    let mut rng = Rng::new(0x5151);
    for _ in 0..60 {
        let size = 1 + rng.below(6);
        let set = gen::gen_axiom_set(&mut rng, size, &GenOptions::default());
        if is_consistent(&set) {
            for ax in &set {
                let mut smaller = set.clone();
                smaller.remove(ax);
                assert!(is_consistent(&smaller));
            }
        }
    }
}

#[test]
fn strong_revision_follows_the_definition_on_the_library_example() {
    let receiver = Ontology::from_axioms([
        Axiom::concept_assert(concept("Article"), ind("pr1")),
        Axiom::concept_assert(concept("Article"), ind("pr2")),
        Axiom::concept_assert(ConceptExpr::not(concept("Article")), ind("bo1")),
    ]);
    let trigger: AxiomSet =
        [Axiom::concept_assert(ConceptExpr::not(concept("Article")), ind("pr1"))]
            .into_iter()
            .collect();
    let op = Operator {
        mode: InternalizationMode::McsBased,
        bridge_selection: BridgeSelection::Greedy { identities_first: true, rotation: 0 },
        ..Operator::with_kind(OperatorKind::Strong)
    };
    let result = op.apply(&receiver, &Trigger::Axioms(trigger.clone())).unwrap();

    // Definition-following oracle: internalize the selected conflict symbols,
    // regenerate the bridging set, rebuild the same greedy-maximal remainder
    // by direct iteration, and union.
    let support: BTreeSet<Symbol> = [Symbol::concept("Article")].into_iter().collect();
    let sigma = make_substitution(&support);
    let bridge = reinterp::bridging::strong_bridging(&sigma, &receiver, 1).unwrap().axioms;
    let mut base = sigma.apply_axioms(receiver.axioms());
    base.extend(trigger);
    let mut working = base.clone();
    let mut chosen = AxiomSet::new();
    for ax in &bridge {
        let mut attempt = working.clone();
        attempt.insert(ax.clone());
        if is_consistent(&attempt) {
            working = attempt;
            chosen.insert(ax.clone());
        }
    }
    let mut expected = base;
    expected.extend(chosen);
    assert_eq!(result.ontology.axioms(), &expected);
    assert!(is_consistent(result.ontology.axioms()));
}

#[test]
fn maximum_based_selection_on_the_library_remainder_family() {
    // The library conflict's remainder family is the singleton containing
    // only the forward inclusion, so the maximum-based pick is forced.
    let article = Symbol::concept("Article");
    let forward = Axiom::gci(concept("Article"), ConceptExpr::atom(article.primed()));
    let backward = Axiom::gci(ConceptExpr::atom(article.primed()), concept("Article"));
    let bridge: AxiomSet = [forward.clone(), backward].into_iter().collect();
    let base: AxiomSet = [
        Axiom::concept_assert(ConceptExpr::atom(article.primed()), ind("pr1")),
        Axiom::concept_assert(ConceptExpr::atom(article.primed()), ind("pr2")),
        Axiom::concept_assert(ConceptExpr::not(ConceptExpr::atom(article.primed())), ind("bo1")),
        Axiom::concept_assert(ConceptExpr::not(concept("Article")), ind("pr1")),
    ]
    .into_iter()
    .collect();
    let family = dual_remainders(&bridge, &base);
    let picked = max_based_selection(vec![]).pick_from_family(&family, &bridge);
    let expected: AxiomSet = [forward].into_iter().collect();
    assert_eq!(picked, vec![expected]);
}

#[test]
fn substitution_application_is_idempotent_outside_its_support() {
    let support: BTreeSet<Symbol> =
        [Symbol::concept("A"), ind("a")].into_iter().collect();
    let sigma = make_substitution(&support);
    let axioms: AxiomSet = [
        Axiom::concept_assert(ConceptExpr::or([concept("A"), concept("B")]), ind("a")),
        Axiom::role_assert(Symbol::role("r"), ind("a"), ind("b"), true),
    ]
    .into_iter()
    .collect();
    let once = sigma.apply_axioms(&axioms);
    let twice = sigma.apply_axioms(&once);
    assert_eq!(once, twice);
}

// ---------------------------------------------------------------------------
// Structural properties via proptest
// ---------------------------------------------------------------------------

fn arb_concept() -> impl Strategy<Value = ConceptExpr> {
    let leaf = prop_oneof![
        Just(ConceptExpr::Top),
        Just(ConceptExpr::Bot),
        "[ABC]".prop_map(|n| ConceptExpr::atom(Symbol::concept(&n))),
    ];
    leaf.prop_recursive(3, 24, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(ConceptExpr::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ConceptExpr::and([a, b])),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ConceptExpr::or([a, b])),
            ("[rs]", inner).prop_map(|(r, c)| ConceptExpr::exists(Symbol::role(&r), c)),
        ]
    })
}

proptest! {
    #[test]
    fn canonicalization_is_idempotent(c in arb_concept()) {
        // Rebuilding a canonical concept through the constructors is the
        // identity.
        let rebuilt = c.rename(&|s: &Symbol| s.clone());
        prop_assert_eq!(rebuilt, c);
    }

    #[test]
    fn double_negation_is_identity(c in arb_concept()) {
        prop_assert_eq!(ConceptExpr::not(ConceptExpr::not(c.clone())), c);
    }

    #[test]
    fn conjunction_order_is_irrelevant(a in arb_concept(), b in arb_concept()) {
        prop_assert_eq!(
            ConceptExpr::and([a.clone(), b.clone()]),
            ConceptExpr::and([b.clone(), a.clone()])
        );
        prop_assert_eq!(
            ConceptExpr::or([a.clone(), b.clone()]),
            ConceptExpr::or([b, a])
        );
    }

    #[test]
    fn schema_support_round_trips(names in proptest::collection::btree_set("[A-E]", 0..4)) {
        let support: BTreeSet<Symbol> =
            names.iter().map(|n| Symbol::concept(n)).collect();
        let sigma = make_substitution(&support);
        prop_assert_eq!(sigma.support(), support);
    }

    #[test]
    fn equal_supports_give_identical_substitutions(names in proptest::collection::btree_set("[A-E]", 0..4)) {
        let support: BTreeSet<Symbol> =
            names.iter().map(|n| Symbol::concept(n)).collect();
        prop_assert_eq!(make_substitution(&support), make_substitution(&support));
    }

    #[test]
    fn renaming_preserves_kinds(c in arb_concept()) {
        let support: BTreeSet<Symbol> = c.symbol_set();
        let sigma = make_substitution(&support);
        let renamed = sigma.apply_concept(&c);
        for s in renamed.symbol_set() {
            prop_assert!(support.iter().all(|orig| orig.base_name() != s.base_name()
                || orig.kind() == s.kind()));
        }
    }
}

// Inverse renaming undoes arbitrary histories built from the schema.
#[test]
fn inverse_renaming_round_trips_histories() {
    let mut rng = Rng::new(0xf00f);
    for _ in 0..30 {
        let size = 1 + rng.below(4);
        let axioms = gen::gen_consistent_set(&mut rng, size, &GenOptions::default());
        let mut current = axioms.clone();
        let mut history: Vec<Substitution> = Vec::new();
        for _ in 0..(1 + rng.below(2)) {
            let support = axiom_set_symbols(&current);
            let sigma = make_substitution(&support);
            current = sigma.apply_axioms(&current);
            history.push(sigma);
        }
        let rho = reinterp::subst::inverse_renaming(&history);
        assert_eq!(rho.apply_axioms(&current), axioms);
    }
}
