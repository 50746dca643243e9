//! Renaming substitutions, the disambiguation schema and inverse renamings.
//!
//! The substitutions used for internalization map each support symbol to the
//! same-named symbol one prime level deeper; the inverse renaming used for
//! reconstruction maps every internal symbol back to its prime-level-0
//! ancestor.

use crate::axiom::{Axiom, AxiomSet};
use crate::concept::ConceptExpr;
use crate::symbol::Symbol;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A finite symbol-to-symbol renaming. Only non-identity entries are stored,
/// so the support is exactly the key set. Mappings are kind-preserving by
/// construction.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Substitution {
    map: BTreeMap<Symbol, Symbol>,
}

impl Substitution {
    pub fn identity() -> Self {
        Substitution::default()
    }

    /// Builds a substitution from explicit pairs; identity entries are
    /// dropped, kinds must match.
    pub fn from_pairs<I: IntoIterator<Item = (Symbol, Symbol)>>(pairs: I) -> Self {
        let mut map = BTreeMap::new();
        for (from, to) in pairs {
            assert_eq!(from.kind(), to.kind(), "substitution must preserve kinds");
            if from != to {
                map.insert(from, to);
            }
        }
        Substitution { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    /// The support sp(σ): symbols not mapped to themselves.
    pub fn support(&self) -> BTreeSet<Symbol> {
        self.map.keys().cloned().collect()
    }

    /// Support restricted to individual constants.
    pub fn support_individuals(&self) -> BTreeSet<Symbol> {
        self.map
            .keys()
            .filter(|s| s.kind() == crate::symbol::SymbolKind::Individual)
            .cloned()
            .collect()
    }

    /// Support restricted to concept and role symbols.
    pub fn support_concepts_roles(&self) -> BTreeSet<Symbol> {
        self.map
            .keys()
            .filter(|s| s.kind() != crate::symbol::SymbolKind::Individual)
            .cloned()
            .collect()
    }

    pub fn apply_symbol(&self, s: &Symbol) -> Symbol {
        self.map.get(s).cloned().unwrap_or_else(|| s.clone())
    }

    pub fn apply_concept(&self, c: &ConceptExpr) -> ConceptExpr {
        c.rename(&|s| self.apply_symbol(s))
    }

    pub fn apply_axiom(&self, ax: &Axiom) -> Axiom {
        ax.rename(&|s| self.apply_symbol(s))
    }

    /// Homomorphic application to an axiom set; equal images collapse under
    /// canonical form, so the result may be smaller.
    pub fn apply_axioms(&self, axioms: &AxiomSet) -> AxiomSet {
        axioms.iter().map(|ax| self.apply_axiom(ax)).collect()
    }

    /// The composition `self` then `other` as a single substitution.
    pub fn compose(&self, other: &Substitution) -> Substitution {
        let mut pairs: Vec<(Symbol, Symbol)> = Vec::new();
        for (from, to) in &self.map {
            pairs.push((from.clone(), other.apply_symbol(to)));
        }
        for (from, to) in &other.map {
            if !self.map.contains_key(from) {
                pairs.push((from.clone(), to.clone()));
            }
        }
        Substitution::from_pairs(pairs)
    }

    pub fn mappings(&self) -> impl Iterator<Item = (&Symbol, &Symbol)> {
        self.map.iter()
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (from, to)) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{from}/{to}")?;
        }
        write!(f, "]")
    }
}

/// The disambiguation schema: the representative substitution with the given
/// support maps each support symbol to the same-named symbol one prime level
/// deeper. Deterministic, and invertible by stripping primes.
pub fn make_substitution(support: &BTreeSet<Symbol>) -> Substitution {
    Substitution::from_pairs(support.iter().map(|s| (s.clone(), s.primed())))
}

/// Support ordering: σ₁ ≤ σ₂ iff sp(σ₁) ⊆ sp(σ₂).
pub fn support_leq(s1: &Substitution, s2: &Substitution) -> bool {
    s1.support().is_subset(&s2.support())
}

/// The inverse renaming of an internalization history: every internal symbol
/// produced or consumed by a step maps back to its prime-level-0 ancestor;
/// public symbols stay fixed.
pub fn inverse_renaming(history: &[Substitution]) -> Substitution {
    let mut pairs = Vec::new();
    for step in history {
        for (from, to) in step.mappings() {
            for s in [from, to] {
                if s.is_internal() {
                    pairs.push((s.clone(), s.ancestor()));
                }
            }
        }
    }
    Substitution::from_pairs(pairs)
}
