//! Text format for ontologies: lexer, recursive-descent parser, and the
//! canonical renderer.
//!
//! ```text
//! ontology name {
//!   public: Article, pr1;
//!   Article(pr1)
//!   (A & B) [= C
//!   r1 [=r r2
//!   publishedIn(pr1, proc1)
//!   !publishedIn(pr1, bo1)
//!   a == b
//!   a != c
//!   clause { A(a) | !B(b) }
//! }
//! ```
//!
//! Conjunctions and disjunctions may chain inside one pair of parentheses
//! (`(A & B & C)`); mixed operators need nesting. Apostrophes are the
//! rendering of internal symbols and are rejected in source files. Symbol
//! kinds are inferred from the positions a name occurs in; a name used in
//! two kinds is an error.

use reinterp::axiom::{Assertion, Axiom};
use reinterp::concept::ConceptExpr;
use reinterp::ontology::Ontology;
use reinterp::symbol::{Symbol, SymbolKind};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl ParseError {
    fn new(pos: (usize, usize), expected: &[&str], found: impl Into<String>) -> Self {
        ParseError {
            line: pos.0,
            column: pos.1,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: found.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: expected {}, found {}",
            self.line,
            self.column,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String, u32),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Dot,
    Semi,
    Colon,
    Pipe,
    Amp,
    Bang,
    Subsume,
    SubsumeRole,
    EqEq,
    NotEq,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s, primes) => {
                write!(f, "'{s}")?;
                for _ in 0..*primes {
                    write!(f, "'")?;
                }
                write!(f, "'")
            }
            Tok::LBrace => write!(f, "'{{'"),
            Tok::RBrace => write!(f, "'}}'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::Comma => write!(f, "','"),
            Tok::Dot => write!(f, "'.'"),
            Tok::Semi => write!(f, "';'"),
            Tok::Colon => write!(f, "':'"),
            Tok::Pipe => write!(f, "'|'"),
            Tok::Amp => write!(f, "'&'"),
            Tok::Bang => write!(f, "'!'"),
            Tok::Subsume => write!(f, "'[='"),
            Tok::SubsumeRole => write!(f, "'[=r'"),
            Tok::EqEq => write!(f, "'=='"),
            Tok::NotEq => write!(f, "'!='"),
        }
    }
}

fn lex(text: &str, allow_primes: bool) -> Result<Vec<(Tok, (usize, usize))>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    let advance = |c: char, line: &mut usize, col: &mut usize| {
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let pos = (line, col);
        match c {
            '#' => {
                for c in chars.by_ref() {
                    advance(c, &mut line, &mut col);
                    if c == '\n' {
                        break;
                    }
                }
            }
            c if c.is_whitespace() => {
                chars.next();
                advance(c, &mut line, &mut col);
            }
            '\'' => {
                return Err(ParseError::new(
                    pos,
                    &["a name"],
                    "an apostrophe (apostrophes attach to names)",
                ))
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                        advance(c, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                let mut primes = 0u32;
                while chars.peek() == Some(&'\'') {
                    chars.next();
                    advance('\'', &mut line, &mut col);
                    primes += 1;
                }
                if primes > 0 && !allow_primes {
                    return Err(ParseError::new(
                        pos,
                        &["a public name"],
                        format!("'{name}'' (apostrophes are reserved for internal symbols)"),
                    ));
                }
                out.push((Tok::Ident(name, primes), pos));
            }
            '{' | '}' | '(' | ')' | ',' | '.' | ';' | ':' | '|' | '&' => {
                chars.next();
                advance(c, &mut line, &mut col);
                let tok = match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '.' => Tok::Dot,
                    ';' => Tok::Semi,
                    ':' => Tok::Colon,
                    '|' => Tok::Pipe,
                    _ => Tok::Amp,
                };
                out.push((tok, pos));
            }
            '[' => {
                chars.next();
                advance('[', &mut line, &mut col);
                if chars.peek() != Some(&'=') {
                    return Err(ParseError::new(pos, &["'[='"], "'['"));
                }
                chars.next();
                advance('=', &mut line, &mut col);
                // "[=r" only when the r is not the start of a name.
                let mut lookahead = chars.clone();
                if lookahead.next() == Some('r')
                    && !lookahead
                        .next()
                        .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    chars.next();
                    advance('r', &mut line, &mut col);
                    out.push((Tok::SubsumeRole, pos));
                } else {
                    out.push((Tok::Subsume, pos));
                }
            }
            '=' => {
                chars.next();
                advance('=', &mut line, &mut col);
                if chars.peek() == Some(&'=') {
                    chars.next();
                    advance('=', &mut line, &mut col);
                    out.push((Tok::EqEq, pos));
                } else {
                    return Err(ParseError::new(pos, &["'=='"], "'='"));
                }
            }
            '!' => {
                chars.next();
                advance('!', &mut line, &mut col);
                if chars.peek() == Some(&'=') {
                    chars.next();
                    advance('=', &mut line, &mut col);
                    out.push((Tok::NotEq, pos));
                } else {
                    out.push((Tok::Bang, pos));
                }
            }
            other => {
                return Err(ParseError::new(pos, &["an axiom"], format!("'{other}'")));
            }
        }
    }
    Ok(out)
}

/// Tracks the inferred kind of every name and reports clashes.
struct SymbolTable {
    kinds: BTreeMap<String, SymbolKind>,
}

impl SymbolTable {
    fn new() -> Self {
        SymbolTable { kinds: BTreeMap::new() }
    }

    fn resolve(
        &mut self,
        name: &str,
        primes: u32,
        kind: SymbolKind,
        pos: (usize, usize),
    ) -> Result<Symbol, ParseError> {
        match self.kinds.get(name) {
            Some(&k) if k != kind => Err(ParseError::new(
                pos,
                &[&format!("{kind} (kind clash: '{name}' was used as a {k})")],
                format!("'{name}'"),
            )),
            _ => {
                self.kinds.insert(name.to_string(), kind);
                Ok(Symbol::new(kind, name, primes))
            }
        }
    }
}

struct Parser {
    tokens: Vec<(Tok, (usize, usize))>,
    pos: usize,
    table: SymbolTable,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.tokens.get(self.pos + offset).map(|(t, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .or_else(|| self.tokens.last())
            .map(|(_, p)| *p)
            .unwrap_or((1, 1))
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(t) => t.to_string(),
            None => "end of input".into(),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(self.here(), &[what], self.found()))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, u32), ParseError> {
        match self.peek() {
            Some(Tok::Ident(name, primes)) => {
                let pair = (name.clone(), *primes);
                self.pos += 1;
                Ok(pair)
            }
            _ => Err(ParseError::new(self.here(), &[what], self.found())),
        }
    }

    fn parse_ontology(&mut self) -> Result<(String, Ontology), ParseError> {
        let (kw, _) = self.ident("'ontology'")?;
        if kw != "ontology" {
            return Err(ParseError::new(self.here(), &["'ontology'"], format!("'{kw}'")));
        }
        let (name, _) = self.ident("an ontology name")?;
        self.expect(&Tok::LBrace, "'{'")?;

        let mut declared: Vec<String> = Vec::new();
        if matches!(self.peek(), Some(Tok::Ident(kw, 0)) if kw == "public")
            && self.peek_at(1) == Some(&Tok::Colon)
        {
            self.pos += 2;
            loop {
                declared.push(self.ident("a public name")?.0);
                match self.peek() {
                    Some(Tok::Comma) => {
                        self.pos += 1;
                    }
                    Some(Tok::Semi) => {
                        self.pos += 1;
                        break;
                    }
                    _ => {
                        return Err(ParseError::new(self.here(), &["','", "';'"], self.found()))
                    }
                }
            }
        }

        let mut axioms = Vec::new();
        while self.peek() != Some(&Tok::RBrace) {
            if self.peek().is_none() {
                return Err(ParseError::new(self.here(), &["an axiom", "'}'"], self.found()));
            }
            axioms.push(self.parse_axiom()?);
        }
        self.pos += 1;

        let mut extra_public = Vec::new();
        for name in declared {
            let kind = self.table.kinds.get(&name).copied().unwrap_or(SymbolKind::Concept);
            extra_public.push(Symbol::new(kind, &name, 0));
        }
        let ontology = Ontology::from_axioms(axioms).with_declared_public(extra_public);
        Ok((name, ontology))
    }

    /// True when the upcoming tokens read as `name ( name , name )`.
    fn at_role_assertion(&self, offset: usize) -> bool {
        matches!(self.peek_at(offset), Some(Tok::Ident(_, _)))
            && self.peek_at(offset + 1) == Some(&Tok::LParen)
            && matches!(self.peek_at(offset + 2), Some(Tok::Ident(_, _)))
            && self.peek_at(offset + 3) == Some(&Tok::Comma)
    }

    fn parse_role_assertion(&mut self, positive: bool) -> Result<Axiom, ParseError> {
        let role_pos = self.here();
        let (role, role_primes) = self.ident("a role name")?;
        self.expect(&Tok::LParen, "'('")?;
        let from_pos = self.here();
        let (from, from_primes) = self.ident("an individual name")?;
        self.expect(&Tok::Comma, "','")?;
        let to_pos = self.here();
        let (to, to_primes) = self.ident("an individual name")?;
        self.expect(&Tok::RParen, "')'")?;
        let role = self.table.resolve(&role, role_primes, SymbolKind::Role, role_pos)?;
        let from = self.table.resolve(&from, from_primes, SymbolKind::Individual, from_pos)?;
        let to = self.table.resolve(&to, to_primes, SymbolKind::Individual, to_pos)?;
        Ok(Axiom::role_assert(role, from, to, positive))
    }

    fn parse_assertion(&mut self) -> Result<Assertion, ParseError> {
        if self.at_role_assertion(0) {
            if let Axiom::RoleAssert { role, from, to, positive } = self.parse_role_assertion(true)?
            {
                return Ok(Assertion::role(role, from, to, positive));
            }
            unreachable!()
        }
        if self.peek() == Some(&Tok::Bang) && self.at_role_assertion(1) {
            self.pos += 1;
            if let Axiom::RoleAssert { role, from, to, positive } =
                self.parse_role_assertion(false)?
            {
                return Ok(Assertion::role(role, from, to, positive));
            }
            unreachable!()
        }
        let c = self.parse_concept()?;
        self.expect(&Tok::LParen, "'('")?;
        let ind_pos = self.here();
        let (ind, ind_primes) = self.ident("an individual name")?;
        self.expect(&Tok::RParen, "')'")?;
        let ind = self.table.resolve(&ind, ind_primes, SymbolKind::Individual, ind_pos)?;
        Ok(Assertion::concept(c, ind))
    }

    fn parse_axiom(&mut self) -> Result<Axiom, ParseError> {
        // clause { assertion | assertion | ... }
        if matches!(self.peek(), Some(Tok::Ident(kw, 0)) if kw == "clause")
            && self.peek_at(1) == Some(&Tok::LBrace)
        {
            let clause_pos = self.here();
            self.pos += 2;
            let mut literals = vec![self.parse_assertion()?];
            while self.peek() == Some(&Tok::Pipe) {
                self.pos += 1;
                literals.push(self.parse_assertion()?);
            }
            self.expect(&Tok::RBrace, "'}'")?;
            return Axiom::clause(literals).map_err(|e| {
                ParseError::new(clause_pos, &["a non-empty clause"], e.to_string())
            });
        }
        // Negative role assertion: ! r(a, b)
        if self.peek() == Some(&Tok::Bang) && self.at_role_assertion(1) {
            self.pos += 1;
            return self.parse_role_assertion(false);
        }
        // Positive role assertion: r(a, b)
        if self.at_role_assertion(0) {
            return self.parse_role_assertion(true);
        }
        // Equality and inequality: a == b, a != b
        if matches!(self.peek(), Some(Tok::Ident(_, _)))
            && matches!(self.peek_at(1), Some(Tok::EqEq) | Some(Tok::NotEq))
        {
            let a_pos = self.here();
            let (a, a_primes) = self.ident("an individual name")?;
            let negated = self.bump() == Some(Tok::NotEq);
            let b_pos = self.here();
            let (b, b_primes) = self.ident("an individual name")?;
            let a = self.table.resolve(&a, a_primes, SymbolKind::Individual, a_pos)?;
            let b = self.table.resolve(&b, b_primes, SymbolKind::Individual, b_pos)?;
            return if negated {
                Axiom::neq(a, b)
                    .map_err(|e| ParseError::new(b_pos, &["distinct individuals"], e.to_string()))
            } else {
                Ok(Axiom::eq(a, b))
            };
        }
        // Role inclusion: r1 [=r r2
        if matches!(self.peek(), Some(Tok::Ident(_, _)))
            && self.peek_at(1) == Some(&Tok::SubsumeRole)
        {
            let a_pos = self.here();
            let (a, a_primes) = self.ident("a role name")?;
            self.pos += 1;
            let b_pos = self.here();
            let (b, b_primes) = self.ident("a role name")?;
            let a = self.table.resolve(&a, a_primes, SymbolKind::Role, a_pos)?;
            let b = self.table.resolve(&b, b_primes, SymbolKind::Role, b_pos)?;
            return Ok(Axiom::role_inc(a, b));
        }
        // Concept-led: subsumption or concept assertion.
        let lhs = self.parse_concept()?;
        match self.peek() {
            Some(Tok::Subsume) => {
                self.pos += 1;
                let rhs = self.parse_concept()?;
                Ok(Axiom::gci(lhs, rhs))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let ind_pos = self.here();
                let (ind, ind_primes) = self.ident("an individual name")?;
                self.expect(&Tok::RParen, "')'")?;
                let ind = self.table.resolve(&ind, ind_primes, SymbolKind::Individual, ind_pos)?;
                Ok(Axiom::concept_assert(lhs, ind))
            }
            _ => Err(ParseError::new(self.here(), &["'[='", "'('"], self.found())),
        }
    }

    fn parse_concept(&mut self) -> Result<ConceptExpr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Bang) => {
                self.pos += 1;
                Ok(ConceptExpr::not(self.parse_concept()?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let first = self.parse_concept()?;
                let op = match self.peek() {
                    Some(Tok::Amp) => Tok::Amp,
                    Some(Tok::Pipe) => Tok::Pipe,
                    _ => {
                        return Err(ParseError::new(self.here(), &["'&'", "'|'"], self.found()))
                    }
                };
                let mut items = vec![first];
                while self.peek() == Some(&op) {
                    self.pos += 1;
                    items.push(self.parse_concept()?);
                }
                self.expect(&Tok::RParen, "')'")?;
                Ok(if op == Tok::Amp {
                    ConceptExpr::and(items)
                } else {
                    ConceptExpr::or(items)
                })
            }
            Some(Tok::Ident(name, 0)) if name == "exists" => {
                self.pos += 1;
                let role_pos = self.here();
                let (role, role_primes) = self.ident("a role name")?;
                self.expect(&Tok::Dot, "'.'")?;
                let filler = self.parse_concept()?;
                let role = self.table.resolve(&role, role_primes, SymbolKind::Role, role_pos)?;
                Ok(ConceptExpr::exists(role, filler))
            }
            Some(Tok::Ident(name, 0)) if name == "Top" => {
                self.pos += 1;
                Ok(ConceptExpr::Top)
            }
            Some(Tok::Ident(name, 0)) if name == "Bot" => {
                self.pos += 1;
                Ok(ConceptExpr::Bot)
            }
            Some(Tok::Ident(name, primes)) => {
                let pos = self.here();
                self.pos += 1;
                let sym = self.table.resolve(&name, primes, SymbolKind::Concept, pos)?;
                Ok(ConceptExpr::atom(sym))
            }
            _ => Err(ParseError::new(self.here(), &["a concept"], self.found())),
        }
    }
}

/// Parses an ontology file; returns its name and contents.
pub fn parse_ontology(text: &str) -> Result<(String, Ontology), ParseError> {
    let tokens = lex(text, false)?;
    let mut parser = Parser { tokens, pos: 0, table: SymbolTable::new() };
    let result = parser.parse_ontology()?;
    if parser.pos != parser.tokens.len() {
        return Err(ParseError::new(parser.here(), &["end of input"], parser.found()));
    }
    Ok(result)
}

/// Parses a rendered revision result: same grammar, but internal symbols
/// written with apostrophes are accepted. Receiver and trigger sources stay
/// strict; only analysis commands reading machine-produced output use this.
pub fn parse_rendered_ontology(text: &str) -> Result<(String, Ontology), ParseError> {
    let tokens = lex(text, true)?;
    let mut parser = Parser { tokens, pos: 0, table: SymbolTable::new() };
    let result = parser.parse_ontology()?;
    if parser.pos != parser.tokens.len() {
        return Err(ParseError::new(parser.here(), &["end of input"], parser.found()));
    }
    Ok(result)
}

/// Parses a single concept expression. Unlike ontology sources, internal
/// symbols written with apostrophes are accepted, so rendered revision
/// results can be referenced (say, in lattice node files).
pub fn parse_concept_text(text: &str) -> Result<ConceptExpr, ParseError> {
    let tokens = lex(text, true)?;
    let mut parser = Parser { tokens, pos: 0, table: SymbolTable::new() };
    let concept = parser.parse_concept()?;
    if parser.pos != parser.tokens.len() {
        return Err(ParseError::new(parser.here(), &["end of input"], parser.found()));
    }
    Ok(concept)
}

/// Renders an ontology in the text format, canonically: sorted public
/// declaration, one axiom per line in canonical order.
pub fn render_ontology(name: &str, ontology: &Ontology) -> String {
    let mut out = format!("ontology {name} {{\n");
    if !ontology.public_vocab().is_empty() {
        let names: Vec<String> =
            ontology.public_vocab().iter().map(|s| s.to_string()).collect();
        out.push_str(&format!("  public: {};\n", names.join(", ")));
    }
    for ax in ontology.axioms() {
        out.push_str(&format!("  {ax}\n"));
    }
    out.push_str("}\n");
    out
}
