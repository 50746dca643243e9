//! TBox, ABox and boolean-ABox axioms.

use crate::concept::ConceptExpr;
use crate::error::Error;
use crate::symbol::{Symbol, SymbolKind};
use std::collections::BTreeSet;
use std::fmt;

/// A set of axioms in canonical order.
pub type AxiomSet = BTreeSet<Axiom>;

/// A single assertion usable as a clause literal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Assertion {
    Concept(ConceptExpr, Symbol),
    Role { role: Symbol, from: Symbol, to: Symbol, positive: bool },
}

impl Assertion {
    pub fn concept(c: ConceptExpr, individual: Symbol) -> Self {
        assert_eq!(individual.kind(), SymbolKind::Individual);
        Assertion::Concept(c, individual)
    }

    pub fn role(role: Symbol, from: Symbol, to: Symbol, positive: bool) -> Self {
        assert_eq!(role.kind(), SymbolKind::Role);
        assert_eq!(from.kind(), SymbolKind::Individual);
        assert_eq!(to.kind(), SymbolKind::Individual);
        Assertion::Role { role, from, to, positive }
    }

    /// The assertion with opposite polarity.
    pub fn negated(&self) -> Assertion {
        match self {
            Assertion::Concept(c, a) => Assertion::Concept(ConceptExpr::not(c.clone()), a.clone()),
            Assertion::Role { role, from, to, positive } => Assertion::Role {
                role: role.clone(),
                from: from.clone(),
                to: to.clone(),
                positive: !positive,
            },
        }
    }

    pub fn into_axiom(self) -> Axiom {
        match self {
            Assertion::Concept(c, a) => Axiom::ConceptAssert(c, a),
            Assertion::Role { role, from, to, positive } => Axiom::RoleAssert { role, from, to, positive },
        }
    }

    fn symbols(&self, out: &mut BTreeSet<Symbol>) {
        match self {
            Assertion::Concept(c, a) => {
                c.symbols(out);
                out.insert(a.clone());
            }
            Assertion::Role { role, from, to, .. } => {
                out.insert(role.clone());
                out.insert(from.clone());
                out.insert(to.clone());
            }
        }
    }

    fn rename(&self, map: &dyn Fn(&Symbol) -> Symbol) -> Assertion {
        match self {
            Assertion::Concept(c, a) => Assertion::Concept(c.rename(map), map(a)),
            Assertion::Role { role, from, to, positive } => Assertion::Role {
                role: map(role),
                from: map(from),
                to: map(to),
                positive: *positive,
            },
        }
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Assertion::Concept(c, a) => write!(f, "{c}({a})"),
            Assertion::Role { role, from, to, positive: true } => write!(f, "{role}({from}, {to})"),
            Assertion::Role { role, from, to, positive: false } => write!(f, "!{role}({from}, {to})"),
        }
    }
}

/// An ontology axiom.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Axiom {
    /// General concept inclusion C ⊑ D.
    Gci(ConceptExpr, ConceptExpr),
    /// Role inclusion R₁ ⊑ R₂.
    RoleInc(Symbol, Symbol),
    ConceptAssert(ConceptExpr, Symbol),
    RoleAssert { role: Symbol, from: Symbol, to: Symbol, positive: bool },
    /// Individual equality; canonical: lhs ≤ rhs.
    Eq(Symbol, Symbol),
    /// Individual inequality; canonical: lhs < rhs, never reflexive.
    Neq(Symbol, Symbol),
    /// Disjunction of assertions; canonical: sorted, deduped, at least two.
    Clause(Vec<Assertion>),
}

impl Axiom {
    pub fn gci(lhs: ConceptExpr, rhs: ConceptExpr) -> Self {
        Axiom::Gci(lhs, rhs)
    }

    pub fn role_inc(sub: Symbol, sup: Symbol) -> Self {
        assert_eq!(sub.kind(), SymbolKind::Role);
        assert_eq!(sup.kind(), SymbolKind::Role);
        Axiom::RoleInc(sub, sup)
    }

    pub fn concept_assert(c: ConceptExpr, a: Symbol) -> Self {
        assert_eq!(a.kind(), SymbolKind::Individual);
        Axiom::ConceptAssert(c, a)
    }

    pub fn role_assert(role: Symbol, from: Symbol, to: Symbol, positive: bool) -> Self {
        Assertion::role(role, from, to, positive).into_axiom()
    }

    pub fn eq(a: Symbol, b: Symbol) -> Self {
        assert_eq!(a.kind(), SymbolKind::Individual);
        assert_eq!(b.kind(), SymbolKind::Individual);
        if a <= b {
            Axiom::Eq(a, b)
        } else {
            Axiom::Eq(b, a)
        }
    }

    /// Fails on `a != a`, which is unsatisfiable by construction.
    pub fn neq(a: Symbol, b: Symbol) -> Result<Self, Error> {
        assert_eq!(a.kind(), SymbolKind::Individual);
        assert_eq!(b.kind(), SymbolKind::Individual);
        if a == b {
            return Err(Error::ReflexiveInequality(a.to_string()));
        }
        Ok(if a < b { Axiom::Neq(a, b) } else { Axiom::Neq(b, a) })
    }

    /// Builds a boolean-ABox clause; a singleton collapses to the plain
    /// assertion axiom.
    pub fn clause<I: IntoIterator<Item = Assertion>>(literals: I) -> Result<Self, Error> {
        let set: BTreeSet<Assertion> = literals.into_iter().collect();
        match set.len() {
            0 => Err(Error::EmptyClause),
            1 => Ok(set.into_iter().next().unwrap().into_axiom()),
            _ => Ok(Axiom::Clause(set.into_iter().collect())),
        }
    }

    pub fn symbols(&self, out: &mut BTreeSet<Symbol>) {
        match self {
            Axiom::Gci(l, r) => {
                l.symbols(out);
                r.symbols(out);
            }
            Axiom::RoleInc(r1, r2) => {
                out.insert(r1.clone());
                out.insert(r2.clone());
            }
            Axiom::ConceptAssert(c, a) => {
                c.symbols(out);
                out.insert(a.clone());
            }
            Axiom::RoleAssert { role, from, to, .. } => {
                out.insert(role.clone());
                out.insert(from.clone());
                out.insert(to.clone());
            }
            Axiom::Eq(a, b) | Axiom::Neq(a, b) => {
                out.insert(a.clone());
                out.insert(b.clone());
            }
            Axiom::Clause(lits) => {
                for lit in lits {
                    lit.symbols(out);
                }
            }
        }
    }

    pub fn symbol_set(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        self.symbols(&mut out);
        out
    }

    /// Applies a kind-preserving symbol mapping homomorphically. The result is
    /// re-canonicalized; the mapping must not identify the two sides of an
    /// inequality.
    pub fn rename(&self, map: &dyn Fn(&Symbol) -> Symbol) -> Axiom {
        match self {
            Axiom::Gci(l, r) => Axiom::Gci(l.rename(map), r.rename(map)),
            Axiom::RoleInc(r1, r2) => Axiom::RoleInc(map(r1), map(r2)),
            Axiom::ConceptAssert(c, a) => Axiom::ConceptAssert(c.rename(map), map(a)),
            Axiom::RoleAssert { role, from, to, positive } => Axiom::RoleAssert {
                role: map(role),
                from: map(from),
                to: map(to),
                positive: *positive,
            },
            Axiom::Eq(a, b) => Axiom::eq(map(a), map(b)),
            Axiom::Neq(a, b) => {
                Axiom::neq(map(a), map(b)).expect("renaming must not identify unequal individuals")
            }
            Axiom::Clause(lits) => Axiom::clause(lits.iter().map(|l| l.rename(map)))
                .expect("renaming a clause preserves non-emptiness"),
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::Gci(l, r) => write!(f, "{l} [= {r}"),
            Axiom::RoleInc(r1, r2) => write!(f, "{r1} [=r {r2}"),
            Axiom::ConceptAssert(c, a) => write!(f, "{c}({a})"),
            Axiom::RoleAssert { role, from, to, positive: true } => write!(f, "{role}({from}, {to})"),
            Axiom::RoleAssert { role, from, to, positive: false } => write!(f, "!{role}({from}, {to})"),
            Axiom::Eq(a, b) => write!(f, "{a} == {b}"),
            Axiom::Neq(a, b) => write!(f, "{a} != {b}"),
            Axiom::Clause(lits) => {
                write!(f, "clause {{ ")?;
                for (i, lit) in lits.iter().enumerate() {
                    if i > 0 {
                        write!(f, " | ")?;
                    }
                    write!(f, "{lit}")?;
                }
                write!(f, " }}")
            }
        }
    }
}

/// A signed atomic concept assertion Â(b), the trigger shape of the
/// literal revision operators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Literal {
    pub concept: Symbol,
    pub individual: Symbol,
    pub positive: bool,
}

impl Literal {
    pub fn new(concept: Symbol, individual: Symbol, positive: bool) -> Self {
        assert_eq!(concept.kind(), SymbolKind::Concept);
        assert_eq!(individual.kind(), SymbolKind::Individual);
        Literal { concept, individual, positive }
    }

    pub fn axiom(&self) -> Axiom {
        let atom = ConceptExpr::atom(self.concept.clone());
        let c = if self.positive { atom } else { ConceptExpr::not(atom) };
        Axiom::concept_assert(c, self.individual.clone())
    }

    pub fn negated_axiom(&self) -> Axiom {
        let atom = ConceptExpr::atom(self.concept.clone());
        let c = if self.positive { ConceptExpr::not(atom) } else { atom };
        Axiom::concept_assert(c, self.individual.clone())
    }

    /// Recognizes an axiom of the shape A(b) or ¬A(b) with atomic A.
    pub fn from_axiom(ax: &Axiom) -> Option<Literal> {
        match ax {
            Axiom::ConceptAssert(ConceptExpr::Atom(s), a) => {
                Some(Literal::new(s.clone(), a.clone(), true))
            }
            Axiom::ConceptAssert(ConceptExpr::Not(inner), a) => match inner.as_ref() {
                ConceptExpr::Atom(s) => Some(Literal::new(s.clone(), a.clone(), false)),
                _ => None,
            },
            _ => None,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.axiom())
    }
}

/// Renders an axiom set one axiom per line in canonical order.
pub fn render_axioms(axioms: &AxiomSet) -> String {
    let mut out = String::new();
    for ax in axioms {
        out.push_str(&ax.to_string());
        out.push('\n');
    }
    out
}

/// All symbols occurring in a set of axioms.
pub fn axiom_set_symbols(axioms: &AxiomSet) -> BTreeSet<Symbol> {
    let mut out = BTreeSet::new();
    for ax in axioms {
        ax.symbols(&mut out);
    }
    out
}
