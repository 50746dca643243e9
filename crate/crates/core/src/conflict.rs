//! The two combinatorial search kernels: minimal conflicting symbol sets and
//! dual remainder sets.

use crate::axiom::{axiom_set_symbols, Axiom, AxiomSet};
use crate::error::Error;
use crate::ontology::Ontology;
use crate::reasoner::is_consistent;
use crate::subst::make_substitution;
use crate::symbol::Symbol;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

/// Default cap on the shared-symbol pool explored by [`mcs`].
pub const DEFAULT_MCS_BUDGET: usize = 16;

/// Outcome of the minimal-conflicting-symbol-set search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct McsResult {
    /// Inclusion-minimal symbol sets whose renaming restores joint
    /// consistency, sorted by (cardinality, canonical order). `[{}]` iff the
    /// union was already consistent.
    pub families: Vec<BTreeSet<Symbol>>,
    pub resolvable: bool,
}

/// Computes the minimal conflicting symbol sets of two individually
/// consistent ontologies.
///
/// Candidates are drawn from the symbols occurring on both sides: renaming a
/// symbol absent from one side cannot change joint consistency when both
/// inputs are consistent, since the renamed copy can be interpreted exactly
/// like the original.
pub fn mcs(o1: &Ontology, o2: &Ontology) -> Result<McsResult, Error> {
    mcs_with_budget(o1, o2, DEFAULT_MCS_BUDGET)
}

pub fn mcs_with_budget(o1: &Ontology, o2: &Ontology, budget: usize) -> Result<McsResult, Error> {
    if !is_consistent(o1.axioms()) || !is_consistent(o2.axioms()) {
        return Err(Error::InconsistentInput);
    }
    let pool: Vec<Symbol> = {
        let s1 = axiom_set_symbols(o1.axioms());
        let s2 = axiom_set_symbols(o2.axioms());
        s1.intersection(&s2).cloned().collect()
    };
    if pool.len() > budget {
        return Err(Error::SearchBudgetExceeded);
    }

    let consistent_with = |support: &BTreeSet<Symbol>| {
        let sigma = make_substitution(support);
        let mut joined: AxiomSet = sigma.apply_axioms(o1.axioms());
        joined.extend(o2.axioms().iter().cloned());
        is_consistent(&joined)
    };

    let mut families: Vec<BTreeSet<Symbol>> = Vec::new();
    // Breadth-first by cardinality; supersets of found solutions are pruned,
    // so every accepted set is inclusion-minimal.
    for k in 0..=pool.len() {
        for combo in combinations(pool.len(), k) {
            let candidate: BTreeSet<Symbol> = combo.iter().map(|&i| pool[i].clone()).collect();
            if families.iter().any(|f| f.is_subset(&candidate)) {
                continue;
            }
            if consistent_with(&candidate) {
                families.push(candidate);
            }
        }
    }
    let resolvable = !families.is_empty();
    Ok(McsResult { families, resolvable })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(n, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut out);
    out
}

/// Dual remainder sets: the inclusion-maximal subsets of `candidates` whose
/// union with `fixed` is consistent. Empty when `fixed` itself is
/// inconsistent.
///
/// Candidates entailed by `fixed` belong to every remainder and are split off
/// before the search; the rest is explored top-down, dropping one axiom at a
/// time from inconsistent subsets, with memoized consistency probes.
pub fn dual_remainders(candidates: &AxiomSet, fixed: &AxiomSet) -> Vec<AxiomSet> {
    if !is_consistent(fixed) {
        return Vec::new();
    }
    let mut forced: AxiomSet = AxiomSet::new();
    let mut open: Vec<Axiom> = Vec::new();
    for ax in candidates {
        if crate::reasoner::entails(fixed, ax) {
            forced.insert(ax.clone());
        } else {
            open.push(ax.clone());
        }
    }
    let n = open.len();
    assert!(n <= 128, "remainder search limited to 128 contingent axioms");

    let consistent = |mask: u128, memo: &mut HashMap<u128, bool>| -> bool {
        if let Some(&v) = memo.get(&mask) {
            return v;
        }
        let mut axioms: AxiomSet = fixed.clone();
        axioms.extend(forced.iter().cloned());
        for (i, ax) in open.iter().enumerate() {
            if mask & (1 << i) != 0 {
                axioms.insert(ax.clone());
            }
        }
        let v = is_consistent(&axioms);
        memo.insert(mask, v);
        v
    };

    let full: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut memo: HashMap<u128, bool> = HashMap::new();
    let mut maximal: Vec<u128> = Vec::new();
    let mut queue: VecDeque<u128> = VecDeque::new();
    let mut seen: HashSet<u128> = HashSet::new();
    queue.push_back(full);
    seen.insert(full);
    while let Some(mask) = queue.pop_front() {
        if maximal.iter().any(|&m| mask & !m == 0) {
            continue;
        }
        if consistent(mask, &mut memo) {
            maximal.push(mask);
            continue;
        }
        for i in 0..n {
            if mask & (1 << i) != 0 {
                let child = mask & !(1 << i);
                if seen.insert(child) {
                    queue.push_back(child);
                }
            }
        }
    }

    let mut out: Vec<AxiomSet> = maximal
        .into_iter()
        .map(|mask| {
            let mut set = forced.clone();
            for (i, ax) in open.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    set.insert(ax.clone());
                }
            }
            set
        })
        .collect();
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().cloned().collect::<Vec<_>>().cmp(&b.iter().cloned().collect()))
    });
    out
}

/// Greedily extends a consistent subset of `candidates` to an
/// inclusion-maximal one, taking axioms in the given order. The result is a
/// member of `dual_remainders(candidates, fixed)`; `None` when `fixed` is
/// inconsistent.
pub fn greedy_remainder(order: &[Axiom], fixed: &AxiomSet) -> Option<AxiomSet> {
    if !is_consistent(fixed) {
        return None;
    }
    let mut chosen: AxiomSet = AxiomSet::new();
    let mut working: AxiomSet = fixed.clone();
    for ax in order {
        if working.contains(ax) || chosen.contains(ax) {
            chosen.insert(ax.clone());
            continue;
        }
        working.insert(ax.clone());
        if is_consistent(&working) {
            chosen.insert(ax.clone());
        } else {
            working.remove(ax);
        }
    }
    Some(chosen)
}
