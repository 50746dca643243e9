//! Non-logical symbols: concept names, role names, and individual constants.
//!
//! A symbol carries a prime level counting how many times it has been moved
//! into the internal vocabulary. Level 0 symbols form the public vocabulary;
//! every renaming step bumps the level by one and is rendered with one
//! apostrophe per level (`Article`, `Article'`, `Article''`, ...).

use std::fmt;

/// The three kinds of non-logical symbols.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SymbolKind {
    Concept,
    Role,
    Individual,
}

impl fmt::Display for SymbolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolKind::Concept => write!(f, "concept"),
            SymbolKind::Role => write!(f, "role"),
            SymbolKind::Individual => write!(f, "individual"),
        }
    }
}

/// Public vs internal vocabulary membership, derived from the prime level.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Tier {
    Public,
    Internal,
}

/// A named symbol. Identity is `(kind, name, prime_level)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Symbol {
    kind: SymbolKind,
    name: String,
    prime_level: u32,
}

impl Symbol {
    /// Creates a symbol at the given prime level. The base name must be a
    /// plain identifier; apostrophes are a rendering of the level, never part
    /// of the name.
    pub fn new(kind: SymbolKind, name: &str, prime_level: u32) -> Self {
        assert!(
            !name.is_empty()
                && name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'),
            "invalid symbol name: {name:?}"
        );
        Symbol { kind, name: name.to_string(), prime_level }
    }

    pub fn concept(name: &str) -> Self {
        Symbol::new(SymbolKind::Concept, name, 0)
    }

    pub fn role(name: &str) -> Self {
        Symbol::new(SymbolKind::Role, name, 0)
    }

    pub fn individual(name: &str) -> Self {
        Symbol::new(SymbolKind::Individual, name, 0)
    }

    pub fn kind(&self) -> SymbolKind {
        self.kind
    }

    pub fn base_name(&self) -> &str {
        &self.name
    }

    pub fn prime_level(&self) -> u32 {
        self.prime_level
    }

    pub fn tier(&self) -> Tier {
        if self.prime_level == 0 {
            Tier::Public
        } else {
            Tier::Internal
        }
    }

    pub fn is_public(&self) -> bool {
        self.prime_level == 0
    }

    pub fn is_internal(&self) -> bool {
        self.prime_level > 0
    }

    /// The same-named symbol one internalization generation deeper.
    pub fn primed(&self) -> Symbol {
        Symbol { kind: self.kind, name: self.name.clone(), prime_level: self.prime_level + 1 }
    }

    /// The prime-level-0 ancestor of this symbol.
    pub fn ancestor(&self) -> Symbol {
        Symbol { kind: self.kind, name: self.name.clone(), prime_level: 0 }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        for _ in 0..self.prime_level {
            write!(f, "'")?;
        }
        Ok(())
    }
}
