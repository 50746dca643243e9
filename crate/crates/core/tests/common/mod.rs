// Shared across test targets; each target uses a subset.
#![allow(dead_code)]

//! Independent oracles for the acceptance suite. These deliberately avoid the
//! library's search code: satisfiability by finite-model enumeration,
//! remainder and conflict-set search by powerset scan, and lattice
//! construction by direct closure computation.

use reinterp::axiom::{axiom_set_symbols, Axiom, AxiomSet};
use reinterp::concept::ConceptExpr;
use reinterp::ontology::Ontology;
use reinterp::reasoner::{entails, is_consistent};
use reinterp::subst::make_substitution;
use reinterp::symbol::{Symbol, SymbolKind};
use std::collections::{BTreeMap, BTreeSet};

/// Brute-force satisfiability for existential-free axiom sets: enumerate all
/// interpretations over domains of size up to the number of named
/// individuals (at least one). Existential-free models restrict to the named
/// individuals' images, so this bound is complete for the fragment.
pub fn satisfiable_by_enumeration(axioms: &AxiomSet) -> bool {
    let symbols = axiom_set_symbols(axioms);
    let concepts: Vec<Symbol> =
        symbols.iter().filter(|s| s.kind() == SymbolKind::Concept).cloned().collect();
    let individuals: Vec<Symbol> =
        symbols.iter().filter(|s| s.kind() == SymbolKind::Individual).cloned().collect();

    // Split clause axioms from the rest; clauses branch over one chosen
    // literal each.
    let clauses: Vec<&Axiom> = axioms.iter().filter(|a| matches!(a, Axiom::Clause(_))).collect();
    let plain: Vec<&Axiom> = axioms.iter().filter(|a| !matches!(a, Axiom::Clause(_))).collect();

    let mut choice = vec![0usize; clauses.len()];
    loop {
        let mut effective: Vec<Axiom> = plain.iter().map(|a| (*a).clone()).collect();
        for (i, c) in clauses.iter().enumerate() {
            if let Axiom::Clause(lits) = c {
                effective.push(lits[choice[i]].clone().into_axiom());
            }
        }
        if satisfiable_clause_free(&effective, &concepts, &individuals) {
            return true;
        }
        // Next clause-literal combination.
        let mut i = 0;
        loop {
            if i == clauses.len() {
                return false;
            }
            let len = match clauses[i] {
                Axiom::Clause(lits) => lits.len(),
                _ => unreachable!(),
            };
            choice[i] += 1;
            if choice[i] < len {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn satisfiable_clause_free(axioms: &[Axiom], concepts: &[Symbol], individuals: &[Symbol]) -> bool {
    let n = individuals.len();
    let max_domain = n.max(1);
    for domain in 1..=max_domain {
        let mut assignment = vec![0usize; n];
        loop {
            if check_assignment(axioms, concepts, individuals, domain, &assignment) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    // All assignments for this domain size exhausted.
                    break;
                }
                assignment[i] += 1;
                if assignment[i] < domain {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    false
}

fn check_assignment(
    axioms: &[Axiom],
    concepts: &[Symbol],
    individuals: &[Symbol],
    domain: usize,
    assignment: &[usize],
) -> bool {
    let image = |s: &Symbol| -> usize {
        let idx = individuals.iter().position(|i| i == s).unwrap();
        assignment[idx]
    };
    // Equality constraints depend only on the assignment.
    for ax in axioms {
        match ax {
            Axiom::Eq(a, b) if image(a) != image(b) => return false,
            Axiom::Neq(a, b) if image(a) == image(b) => return false,
            _ => {}
        }
    }

    // Enumerate concept extensions: one bit per (concept, element).
    let bits = concepts.len() * domain;
    assert!(bits <= 20, "oracle limited to small signatures");
    for ext in 0u32..(1 << bits) {
        let holds = |sym: &Symbol, x: usize| -> bool {
            let ci = concepts.iter().position(|c| c == sym).unwrap();
            ext & (1 << (ci * domain + x)) != 0
        };
        let ok = axioms.iter().all(|ax| match ax {
            Axiom::ConceptAssert(c, a) => eval_concept(c, image(a), domain, &holds),
            Axiom::Gci(lhs, rhs) => (0..domain)
                .all(|x| !eval_concept(lhs, x, domain, &holds) || eval_concept(rhs, x, domain, &holds)),
            _ => true,
        });
        if !ok {
            continue;
        }
        if roles_satisfiable(axioms, &image) {
            return true;
        }
    }
    false
}

/// Role extensions: positive assertions closed upward under the role
/// hierarchy form the minimal candidate; negative assertions must avoid it.
/// Existential-free concepts never mention roles, so minimality is safe.
fn roles_satisfiable(axioms: &[Axiom], image: &dyn Fn(&Symbol) -> usize) -> bool {
    let mut pairs: BTreeSet<(Symbol, usize, usize)> = BTreeSet::new();
    for ax in axioms {
        if let Axiom::RoleAssert { role, from, to, positive: true } = ax {
            pairs.insert((role.clone(), image(from), image(to)));
        }
    }
    loop {
        let mut grew = false;
        for ax in axioms {
            if let Axiom::RoleInc(r1, r2) = ax {
                let lifted: Vec<_> = pairs
                    .iter()
                    .filter(|(r, _, _)| r == r1)
                    .map(|(_, x, y)| (r2.clone(), *x, *y))
                    .collect();
                for p in lifted {
                    grew |= pairs.insert(p);
                }
            }
        }
        if !grew {
            break;
        }
    }
    axioms.iter().all(|ax| match ax {
        Axiom::RoleAssert { role, from, to, positive: false } => {
            !pairs.contains(&(role.clone(), image(from), image(to)))
        }
        _ => true,
    })
}

fn eval_concept(
    c: &ConceptExpr,
    x: usize,
    domain: usize,
    holds: &dyn Fn(&Symbol, usize) -> bool,
) -> bool {
    match c {
        ConceptExpr::Top => true,
        ConceptExpr::Bot => false,
        ConceptExpr::Atom(s) => holds(s, x),
        ConceptExpr::Not(inner) => !eval_concept(inner, x, domain, holds),
        ConceptExpr::And(items) => items.iter().all(|i| eval_concept(i, x, domain, holds)),
        ConceptExpr::Or(items) => items.iter().any(|i| eval_concept(i, x, domain, holds)),
        ConceptExpr::Exists(_, _) => panic!("oracle is existential-free only"),
    }
}

/// Remainder sets by full powerset scan.
pub fn remainders_by_powerset(candidates: &AxiomSet, fixed: &AxiomSet) -> Vec<AxiomSet> {
    let items: Vec<Axiom> = candidates.iter().cloned().collect();
    let n = items.len();
    assert!(n <= 16);
    let mut consistent_masks: Vec<u32> = Vec::new();
    for mask in 0u32..(1 << n) {
        let mut set: AxiomSet = fixed.clone();
        for (i, ax) in items.iter().enumerate() {
            if mask & (1 << i) != 0 {
                set.insert(ax.clone());
            }
        }
        if is_consistent(&set) {
            consistent_masks.push(mask);
        }
    }
    let mut maximal: Vec<AxiomSet> = Vec::new();
    for &m in &consistent_masks {
        let has_strict_superset = consistent_masks.iter().any(|&o| o != m && o & m == m);
        if !has_strict_superset {
            let mut set = AxiomSet::new();
            for (i, ax) in items.iter().enumerate() {
                if m & (1 << i) != 0 {
                    set.insert(ax.clone());
                }
            }
            maximal.push(set);
        }
    }
    maximal.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().cloned().collect::<Vec<_>>().cmp(&b.iter().cloned().collect()))
    });
    maximal
}

/// Minimal conflicting symbol sets by full powerset scan over the shared
/// occurring symbols.
pub fn mcs_by_powerset(o1: &Ontology, o2: &Ontology) -> Vec<BTreeSet<Symbol>> {
    let pool: Vec<Symbol> = {
        let s1 = axiom_set_symbols(o1.axioms());
        let s2 = axiom_set_symbols(o2.axioms());
        s1.intersection(&s2).cloned().collect()
    };
    let n = pool.len();
    assert!(n <= 12);
    let mut solutions: Vec<BTreeSet<Symbol>> = Vec::new();
    for mask in 0u32..(1 << n) {
        let support: BTreeSet<Symbol> =
            pool.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, s)| s.clone()).collect();
        let sigma = make_substitution(&support);
        let mut joined = sigma.apply_axioms(o1.axioms());
        joined.extend(o2.axioms().iter().cloned());
        if is_consistent(&joined) {
            solutions.push(support);
        }
    }
    let minimal: Vec<BTreeSet<Symbol>> = solutions
        .iter()
        .filter(|s| !solutions.iter().any(|o| *o != **s && o.is_subset(s)))
        .cloned()
        .collect();
    let mut out = minimal;
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().cloned().collect::<Vec<_>>().cmp(&b.iter().cloned().collect()))
    });
    out.dedup();
    out
}

/// Hasse edges computed independently: full entailment matrix, equivalence
/// collapse onto least representatives, reachability-based reduction.
pub fn hasse_by_closure(
    axioms: &AxiomSet,
    nodes: &[ConceptExpr],
) -> Vec<(ConceptExpr, ConceptExpr)> {
    let items: Vec<ConceptExpr> = {
        let s: BTreeSet<ConceptExpr> = nodes.iter().cloned().collect();
        s.into_iter().collect()
    };
    let n = items.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] =
                i == j || entails(axioms, &Axiom::gci(items[i].clone(), items[j].clone()));
        }
    }
    let mut rep: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..n {
        let r = (0..=i).find(|&j| leq[i][j] && leq[j][i]).unwrap();
        rep.insert(i, r);
    }
    let reps: Vec<usize> = (0..n).filter(|i| rep[i] == *i).collect();
    let mut edges = Vec::new();
    for &i in &reps {
        for &j in &reps {
            if i == j || !leq[i][j] {
                continue;
            }
            let strictly_between =
                reps.iter().any(|&k| k != i && k != j && leq[i][k] && leq[k][j]);
            if !strictly_between {
                edges.push((items[i].clone(), items[j].clone()));
            }
        }
    }
    edges.sort();
    edges
}

/// Independent concept-space enumerator: same level discipline, written as a
/// plain loop with linear-scan dedup over rendered forms.
pub fn concept_space_by_enumeration(
    concepts: &[Symbol],
    roles: &[Symbol],
    depth: u32,
) -> Vec<ConceptExpr> {
    let mut space: Vec<ConceptExpr> = vec![ConceptExpr::Top, ConceptExpr::Bot];
    for s in concepts {
        space.push(ConceptExpr::atom(s.clone()));
        space.push(ConceptExpr::not(ConceptExpr::atom(s.clone())));
    }
    let push_unique = |space: &mut Vec<ConceptExpr>, c: ConceptExpr| {
        if !space.iter().any(|k| *k == c) {
            space.push(c);
        }
    };
    for _ in 0..depth {
        let mut pool = space.clone();
        for r in roles {
            for c in space.clone() {
                let lifted = ConceptExpr::exists(r.clone(), c);
                if !pool.iter().any(|k| *k == lifted) {
                    pool.push(lifted);
                }
            }
        }
        let mut next = pool.clone();
        for i in 0..pool.len() {
            for j in (i + 1)..pool.len() {
                push_unique(&mut next, ConceptExpr::and([pool[i].clone(), pool[j].clone()]));
                push_unique(&mut next, ConceptExpr::or([pool[i].clone(), pool[j].clone()]));
            }
        }
        space = next;
    }
    space
}
