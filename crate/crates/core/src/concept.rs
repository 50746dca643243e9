//! Concept descriptions over ⊤, ⊥, atoms, ¬, ⊓, ⊔ and ∃R.C, kept in a
//! canonical form so that structural equality is decidable and deterministic.
//!
//! Canonicalization rules: nested conjunctions/disjunctions are flattened,
//! their arguments sorted and deduplicated, double negation is collapsed, and
//! ⊤/⊥ units are removed (⊤ is dropped from ⊓ and absorbs ⊔, dually for ⊥).
//! All construction goes through the smart constructors, so every value of
//! this type is canonical.

use crate::symbol::{Symbol, SymbolKind};
use std::collections::BTreeSet;
use std::fmt;

/// A concept description in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ConceptExpr {
    Top,
    Bot,
    Atom(Symbol),
    Not(Box<ConceptExpr>),
    /// Conjunction; canonical: flat, sorted, deduped, at least two members.
    And(Vec<ConceptExpr>),
    /// Disjunction; canonical: flat, sorted, deduped, at least two members.
    Or(Vec<ConceptExpr>),
    Exists(Symbol, Box<ConceptExpr>),
}

impl ConceptExpr {
    pub fn atom(sym: Symbol) -> Self {
        assert_eq!(sym.kind(), SymbolKind::Concept, "atom requires a concept symbol");
        ConceptExpr::Atom(sym)
    }

    pub fn not(c: ConceptExpr) -> Self {
        match c {
            ConceptExpr::Top => ConceptExpr::Bot,
            ConceptExpr::Bot => ConceptExpr::Top,
            ConceptExpr::Not(inner) => *inner,
            other => ConceptExpr::Not(Box::new(other)),
        }
    }

    pub fn and<I: IntoIterator<Item = ConceptExpr>>(items: I) -> Self {
        let mut flat = BTreeSet::new();
        for item in items {
            match item {
                ConceptExpr::Top => {}
                ConceptExpr::Bot => return ConceptExpr::Bot,
                ConceptExpr::And(inner) => flat.extend(inner),
                other => {
                    flat.insert(other);
                }
            }
        }
        if flat.contains(&ConceptExpr::Bot) {
            return ConceptExpr::Bot;
        }
        let mut v: Vec<_> = flat.into_iter().collect();
        match v.len() {
            0 => ConceptExpr::Top,
            1 => v.pop().unwrap(),
            _ => ConceptExpr::And(v),
        }
    }

    pub fn or<I: IntoIterator<Item = ConceptExpr>>(items: I) -> Self {
        let mut flat = BTreeSet::new();
        for item in items {
            match item {
                ConceptExpr::Bot => {}
                ConceptExpr::Top => return ConceptExpr::Top,
                ConceptExpr::Or(inner) => flat.extend(inner),
                other => {
                    flat.insert(other);
                }
            }
        }
        if flat.contains(&ConceptExpr::Top) {
            return ConceptExpr::Top;
        }
        let mut v: Vec<_> = flat.into_iter().collect();
        match v.len() {
            0 => ConceptExpr::Bot,
            1 => v.pop().unwrap(),
            _ => ConceptExpr::Or(v),
        }
    }

    pub fn exists(role: Symbol, filler: ConceptExpr) -> Self {
        assert_eq!(role.kind(), SymbolKind::Role, "exists requires a role symbol");
        ConceptExpr::Exists(role, Box::new(filler))
    }

    /// All symbols occurring in the expression.
    pub fn symbols(&self, out: &mut BTreeSet<Symbol>) {
        match self {
            ConceptExpr::Top | ConceptExpr::Bot => {}
            ConceptExpr::Atom(s) => {
                out.insert(s.clone());
            }
            ConceptExpr::Not(c) => c.symbols(out),
            ConceptExpr::And(items) | ConceptExpr::Or(items) => {
                for c in items {
                    c.symbols(out);
                }
            }
            ConceptExpr::Exists(r, c) => {
                out.insert(r.clone());
                c.symbols(out);
            }
        }
    }

    pub fn symbol_set(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        self.symbols(&mut out);
        out
    }

    pub fn mentions(&self, sym: &Symbol) -> bool {
        match self {
            ConceptExpr::Top | ConceptExpr::Bot => false,
            ConceptExpr::Atom(s) => s == sym,
            ConceptExpr::Not(c) => c.mentions(sym),
            ConceptExpr::And(items) | ConceptExpr::Or(items) => items.iter().any(|c| c.mentions(sym)),
            ConceptExpr::Exists(r, c) => r == sym || c.mentions(sym),
        }
    }

    /// Applies a symbol-to-symbol mapping homomorphically, re-canonicalizing.
    pub fn rename(&self, map: &dyn Fn(&Symbol) -> Symbol) -> ConceptExpr {
        match self {
            ConceptExpr::Top => ConceptExpr::Top,
            ConceptExpr::Bot => ConceptExpr::Bot,
            ConceptExpr::Atom(s) => ConceptExpr::atom(map(s)),
            ConceptExpr::Not(c) => ConceptExpr::not(c.rename(map)),
            ConceptExpr::And(items) => ConceptExpr::and(items.iter().map(|c| c.rename(map))),
            ConceptExpr::Or(items) => ConceptExpr::or(items.iter().map(|c| c.rename(map))),
            ConceptExpr::Exists(r, c) => ConceptExpr::exists(map(r), c.rename(map)),
        }
    }
}

impl fmt::Display for ConceptExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConceptExpr::Top => write!(f, "Top"),
            ConceptExpr::Bot => write!(f, "Bot"),
            ConceptExpr::Atom(s) => write!(f, "{s}"),
            ConceptExpr::Not(c) => write!(f, "!{c}"),
            ConceptExpr::And(items) => {
                write!(f, "(")?;
                for (i, c) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " & ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
            ConceptExpr::Or(items) => {
                write!(f, "(")?;
                for (i, c) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " | ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
            ConceptExpr::Exists(r, c) => write!(f, "exists {r}. {c}"),
        }
    }
}
