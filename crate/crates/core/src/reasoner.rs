//! Tableau-based consistency and entailment for the supported fragment: ALC
//! plus role hierarchies, individual equality/inequality, negative role
//! assertions and boolean ABox clauses.
//!
//! GCIs are internalized (each C ⊑ D contributes ¬C ⊔ D to every node),
//! equalities are handled by merging named individuals up front, and
//! termination comes from subset blocking of generated individuals against
//! earlier-created unblocked nodes. Named individuals are never blocked.

use crate::axiom::{Assertion, Axiom, AxiomSet};
use crate::concept::ConceptExpr;
use crate::symbol::{Symbol, SymbolKind};
use std::collections::HashMap;

/// Decides whether a set of axioms has a model.
pub fn is_consistent(axioms: &AxiomSet) -> bool {
    match Tableau::build(axioms.iter()) {
        Some(tableau) => tableau.solve(),
        None => false,
    }
}

/// Decides `axioms ⊨ goal` by refutation.
pub fn entails(axioms: &AxiomSet, goal: &Axiom) -> bool {
    let extra = match refutation_axioms(axioms, goal) {
        Some(extra) => extra,
        // Goals like a == a hold in every interpretation.
        None => return true,
    };
    match Tableau::build(axioms.iter().chain(extra.iter())) {
        Some(tableau) => !tableau.solve(),
        None => true,
    }
}

/// Decides `axioms ⊨ goal` for every goal.
pub fn entails_all<'a, I: IntoIterator<Item = &'a Axiom>>(axioms: &AxiomSet, goals: I) -> bool {
    goals.into_iter().all(|g| entails(axioms, g))
}

/// The axioms whose addition refutes the goal, or `None` when the goal is
/// valid outright.
fn refutation_axioms(axioms: &AxiomSet, goal: &Axiom) -> Option<Vec<Axiom>> {
    match goal {
        Axiom::Gci(lhs, rhs) => {
            let witness = fresh_individual(axioms, goal);
            let c = ConceptExpr::and([lhs.clone(), ConceptExpr::not(rhs.clone())]);
            if c == ConceptExpr::Bot {
                return None;
            }
            Some(vec![Axiom::concept_assert(c, witness)])
        }
        Axiom::RoleInc(r1, r2) => {
            if r1 == r2 {
                return None;
            }
            let x = fresh_individual(axioms, goal);
            let y = Symbol::individual(&format!("{}_b", x.base_name()));
            Some(vec![
                Axiom::role_assert(r1.clone(), x.clone(), y.clone(), true),
                Axiom::role_assert(r2.clone(), x, y, false),
            ])
        }
        Axiom::ConceptAssert(c, a) => {
            let neg = ConceptExpr::not(c.clone());
            if neg == ConceptExpr::Bot {
                return None;
            }
            Some(vec![Axiom::concept_assert(neg, a.clone())])
        }
        Axiom::RoleAssert { role, from, to, positive } => Some(vec![Axiom::RoleAssert {
            role: role.clone(),
            from: from.clone(),
            to: to.clone(),
            positive: !positive,
        }]),
        Axiom::Eq(a, b) => {
            if a == b {
                return None;
            }
            Some(vec![Axiom::neq(a.clone(), b.clone()).expect("distinct individuals")])
        }
        Axiom::Neq(a, b) => Some(vec![Axiom::eq(a.clone(), b.clone())]),
        Axiom::Clause(lits) => Some(lits.iter().map(|l| l.negated().into_axiom()).collect()),
    }
}

fn fresh_individual(axioms: &AxiomSet, goal: &Axiom) -> Symbol {
    let mut used = crate::axiom::axiom_set_symbols(axioms);
    goal.symbols(&mut used);
    for i in 0.. {
        let cand = Symbol::individual(&format!("_g{i}"));
        if !used.contains(&cand) {
            return cand;
        }
    }
    unreachable!()
}

// ---------------------------------------------------------------------------
// Internal representation
// ---------------------------------------------------------------------------

/// NNF concept in the per-call table. Children are table indices.
#[derive(Clone, PartialEq, Eq, Hash)]
enum Nc {
    Top,
    Bot,
    Pos(u32),
    Neg(u32),
    And(Vec<u32>),
    Or(Vec<u32>),
    Exists(u32, u32),
    Forall(u32, u32),
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: u32) {
        self.0[(i / 64) as usize] |= 1 << (i % 64);
    }
    fn get(&self, i: u32) -> bool {
        self.0[(i / 64) as usize] & (1 << (i % 64)) != 0
    }
    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }
}

#[derive(Clone)]
struct Node {
    label: Bits,
    /// Table ids waiting for rule application; always a subset of `label`.
    pending: Vec<u32>,
    named: bool,
}

#[derive(Clone)]
struct State {
    nodes: Vec<Node>,
    /// Positive edges (role, from, to).
    edges: Vec<(u32, u32, u32)>,
    /// Negative role assertions (role, from, to), named individuals only.
    neg_edges: Vec<(u32, u32, u32)>,
    clause_done: Vec<bool>,
    /// (edge index, forall table id) pairs already propagated.
    propagated: HashMap<(u32, u32), ()>,
    clash: bool,
}

enum ClauseLit {
    Concept { node: u32, id: u32 },
    Role { role: u32, from: u32, to: u32, positive: bool },
}

struct Tableau {
    table: Vec<Nc>,
    index: HashMap<Nc, u32>,
    /// Complement id for literal ids (Pos/Neg/Top/Bot); u32::MAX elsewhere.
    complement: Vec<u32>,
    /// Super-roles (reflexive-transitive) as a bitmask per role.
    role_up: Vec<u64>,
    /// GCI internalization: ids added to every node label.
    universals: Vec<u32>,
    clauses: Vec<Vec<ClauseLit>>,
    initial: State,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let root = self.find(self.0[i]);
            self.0[i] = root;
            root
        } else {
            i
        }
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra.max(rb)] = ra.min(rb);
    }
}

impl Tableau {
    /// Preprocesses the axioms; `None` means a clash was already found
    /// (an inequality between merged individuals).
    fn build<'a, I: Iterator<Item = &'a Axiom> + Clone>(axioms: I) -> Option<Tableau> {
        // Symbol interning.
        let mut concepts: HashMap<Symbol, u32> = HashMap::new();
        let mut roles: HashMap<Symbol, u32> = HashMap::new();
        let mut individuals: HashMap<Symbol, usize> = HashMap::new();
        let mut names: Vec<Symbol> = Vec::new();
        for ax in axioms.clone() {
            for s in ax.symbol_set() {
                match s.kind() {
                    SymbolKind::Concept => {
                        let next = concepts.len() as u32;
                        concepts.entry(s).or_insert(next);
                    }
                    SymbolKind::Role => {
                        let next = roles.len() as u32;
                        roles.entry(s).or_insert(next);
                    }
                    SymbolKind::Individual => {
                        let next = names.len();
                        individuals.entry(s.clone()).or_insert_with(|| {
                            names.push(s);
                            next
                        });
                    }
                }
            }
        }
        assert!(roles.len() <= 64, "role vocabulary limited to 64 symbols");

        // Merge individuals along equalities.
        let mut uf = UnionFind::new(names.len());
        for ax in axioms.clone() {
            if let Axiom::Eq(a, b) = ax {
                uf.union(individuals[a], individuals[b]);
            }
        }
        for ax in axioms.clone() {
            if let Axiom::Neq(a, b) = ax {
                if uf.find(individuals[a]) == uf.find(individuals[b]) {
                    return None;
                }
            }
        }
        // Node index per equivalence class.
        let mut class_node: HashMap<usize, u32> = HashMap::new();
        let mut node_count: u32 = 0;
        for i in 0..names.len() {
            let root = uf.find(i);
            class_node.entry(root).or_insert_with(|| {
                let n = node_count;
                node_count += 1;
                n
            });
        }
        if node_count == 0 {
            node_count = 1; // anonymous seed for pure TBox input
        }
        let node_of = |uf: &mut UnionFind, s: &Symbol| class_node[&uf.find(individuals[s])];

        // Role hierarchy closure.
        let nroles = roles.len();
        let mut role_up: Vec<u64> = (0..nroles).map(|r| 1u64 << r).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for ax in axioms.clone() {
                if let Axiom::RoleInc(r1, r2) = ax {
                    let (i, j) = (roles[r1] as usize, roles[r2] as usize);
                    let merged = role_up[i] | role_up[j];
                    if merged != role_up[i] {
                        role_up[i] = merged;
                        changed = true;
                    }
                }
            }
        }

        let mut t = Tableau {
            table: Vec::new(),
            index: HashMap::new(),
            complement: Vec::new(),
            role_up,
            universals: Vec::new(),
            clauses: Vec::new(),
            initial: State {
                nodes: Vec::new(),
                edges: Vec::new(),
                neg_edges: Vec::new(),
                clause_done: Vec::new(),
                propagated: HashMap::new(),
                clash: false,
            },
        };

        // Intern all concepts appearing in the axioms, in NNF.
        let mut initial_concepts: Vec<(u32, u32)> = Vec::new(); // (node, id)
        for ax in axioms.clone() {
            match ax {
                Axiom::Gci(lhs, rhs) => {
                    let l = t.intern(lhs, false, &concepts, &roles);
                    let r = t.intern(rhs, true, &concepts, &roles);
                    let u = t.mk(Nc::Or(normalize_children(vec![l, r])));
                    t.universals.push(u);
                }
                Axiom::ConceptAssert(c, a) => {
                    let id = t.intern(c, true, &concepts, &roles);
                    initial_concepts.push((node_of(&mut uf, a), id));
                }
                Axiom::RoleAssert { role, from, to, positive } => {
                    let e = (roles[role], node_of(&mut uf, from), node_of(&mut uf, to));
                    if *positive {
                        t.initial.edges.push(e);
                    } else {
                        t.initial.neg_edges.push(e);
                    }
                }
                Axiom::Clause(lits) => {
                    let mut clause = Vec::new();
                    for lit in lits {
                        clause.push(match lit {
                            Assertion::Concept(c, a) => ClauseLit::Concept {
                                node: node_of(&mut uf, a),
                                id: t.intern(c, true, &concepts, &roles),
                            },
                            Assertion::Role { role, from, to, positive } => ClauseLit::Role {
                                role: roles[role],
                                from: node_of(&mut uf, from),
                                to: node_of(&mut uf, to),
                                positive: *positive,
                            },
                        });
                    }
                    t.clauses.push(clause);
                }
                Axiom::RoleInc(_, _) | Axiom::Eq(_, _) | Axiom::Neq(_, _) => {}
            }
        }

        // Complement ids for every table entry: clash detection on literals
        // and unit propagation on disjunctions both need them. Children are
        // interned before parents, so one growing pass suffices.
        t.complement = vec![u32::MAX; t.table.len()];
        let mut id = 0;
        while id < t.table.len() {
            let comp = match t.table[id].clone() {
                Nc::Top => Nc::Bot,
                Nc::Bot => Nc::Top,
                Nc::Pos(p) => Nc::Neg(p),
                Nc::Neg(p) => Nc::Pos(p),
                Nc::And(ch) => {
                    Nc::Or(normalize_children(ch.iter().map(|&c| t.complement[c as usize]).collect()))
                }
                Nc::Or(ch) => {
                    Nc::And(normalize_children(ch.iter().map(|&c| t.complement[c as usize]).collect()))
                }
                Nc::Exists(r, f) => Nc::Forall(r, t.complement[f as usize]),
                Nc::Forall(r, f) => Nc::Exists(r, t.complement[f as usize]),
            };
            let cid = t.mk(comp);
            if t.complement.len() < t.table.len() {
                t.complement.resize(t.table.len(), u32::MAX);
            }
            t.complement[id] = cid;
            t.complement[cid as usize] = id as u32;
            id += 1;
        }

        let width = t.table.len();
        t.initial.nodes = (0..node_count)
            .map(|_| Node { label: Bits::new(width), pending: Vec::new(), named: true })
            .collect();
        t.initial.clause_done = vec![false; t.clauses.len()];

        let universals = t.universals.clone();
        let mut st = std::mem::replace(
            &mut t.initial,
            State {
                nodes: Vec::new(),
                edges: Vec::new(),
                neg_edges: Vec::new(),
                clause_done: Vec::new(),
                propagated: HashMap::new(),
                clash: false,
            },
        );
        for n in 0..node_count {
            for &u in &universals {
                t.add_to_node(&mut st, n, u);
            }
        }
        for (n, id) in initial_concepts {
            t.add_to_node(&mut st, n, id);
        }
        t.check_edge_clashes(&mut st);
        t.initial = st;
        Some(t)
    }

    fn mk(&mut self, nc: Nc) -> u32 {
        if let Some(&id) = self.index.get(&nc) {
            return id;
        }
        let id = self.table.len() as u32;
        self.table.push(nc.clone());
        self.index.insert(nc, id);
        id
    }

    /// Interns a concept in NNF; `positive` false interns its negation.
    fn intern(
        &mut self,
        c: &ConceptExpr,
        positive: bool,
        concepts: &HashMap<Symbol, u32>,
        roles: &HashMap<Symbol, u32>,
    ) -> u32 {
        match (c, positive) {
            (ConceptExpr::Top, true) | (ConceptExpr::Bot, false) => self.mk(Nc::Top),
            (ConceptExpr::Top, false) | (ConceptExpr::Bot, true) => self.mk(Nc::Bot),
            (ConceptExpr::Atom(s), true) => {
                let p = concepts[s];
                self.mk(Nc::Pos(p))
            }
            (ConceptExpr::Atom(s), false) => {
                let p = concepts[s];
                self.mk(Nc::Neg(p))
            }
            (ConceptExpr::Not(inner), pol) => self.intern(inner, !pol, concepts, roles),
            (ConceptExpr::And(items), pol) => {
                let children: Vec<u32> =
                    items.iter().map(|i| self.intern(i, pol, concepts, roles)).collect();
                let children = normalize_children(children);
                if pol {
                    self.mk(Nc::And(children))
                } else {
                    self.mk(Nc::Or(children))
                }
            }
            (ConceptExpr::Or(items), pol) => {
                let children: Vec<u32> =
                    items.iter().map(|i| self.intern(i, pol, concepts, roles)).collect();
                let children = normalize_children(children);
                if pol {
                    self.mk(Nc::Or(children))
                } else {
                    self.mk(Nc::And(children))
                }
            }
            (ConceptExpr::Exists(r, filler), true) => {
                let f = self.intern(filler, true, concepts, roles);
                let r = roles[r];
                self.mk(Nc::Exists(r, f))
            }
            (ConceptExpr::Exists(r, filler), false) => {
                let f = self.intern(filler, false, concepts, roles);
                let r = roles[r];
                self.mk(Nc::Forall(r, f))
            }
        }
    }

    fn add_to_node(&self, st: &mut State, node: u32, id: u32) {
        let n = &mut st.nodes[node as usize];
        if n.label.get(id) {
            return;
        }
        if matches!(self.table[id as usize], Nc::Bot) {
            st.clash = true;
            return;
        }
        let comp = self.complement[id as usize];
        if comp != u32::MAX && n.label.get(comp) {
            st.clash = true;
            return;
        }
        n.label.set(id);
        n.pending.push(id);
    }

    fn sub_role_of(&self, sub: u32, sup: u32) -> bool {
        self.role_up[sub as usize] & (1 << sup) != 0
    }

    fn check_edge_clashes(&self, st: &mut State) {
        for &(nr, nf, nt) in &st.neg_edges {
            for &(pr, pf, pt) in &st.edges {
                if pf == nf && pt == nt && self.sub_role_of(pr, nr) {
                    st.clash = true;
                    return;
                }
            }
        }
    }

    fn add_edge(&self, st: &mut State, role: u32, from: u32, to: u32) {
        if st.edges.contains(&(role, from, to)) {
            return;
        }
        st.edges.push((role, from, to));
        for &(nr, nf, nt) in &st.neg_edges {
            if nf == from && nt == to && self.sub_role_of(role, nr) {
                st.clash = true;
                return;
            }
        }
    }

    fn add_neg_edge(&self, st: &mut State, role: u32, from: u32, to: u32) {
        if st.neg_edges.contains(&(role, from, to)) {
            return;
        }
        st.neg_edges.push((role, from, to));
        for &(pr, pf, pt) in &st.edges {
            if pf == from && pt == to && self.sub_role_of(pr, role) {
                st.clash = true;
                return;
            }
        }
    }

    /// Applies all deterministic rules to a fixpoint. Returns false on clash.
    fn saturate(&self, st: &mut State) -> bool {
        loop {
            if st.clash {
                return false;
            }
            let mut progress = false;

            // Conjunctions from pending queues.
            for node in 0..st.nodes.len() {
                while let Some(id) = st.nodes[node].pending.pop() {
                    if let Nc::And(children) = &self.table[id as usize] {
                        for c in children.clone() {
                            self.add_to_node(st, node as u32, c);
                        }
                    }
                    progress = true;
                    if st.clash {
                        return false;
                    }
                }
            }

            // Universal restrictions along edges (with role hierarchy).
            let width = self.table.len() as u32;
            for e in 0..st.edges.len() {
                let (role, from, to) = st.edges[e];
                for id in 0..width {
                    if !st.nodes[from as usize].label.get(id) {
                        continue;
                    }
                    if let Nc::Forall(r, filler) = self.table[id as usize] {
                        if self.sub_role_of(role, r)
                            && st.propagated.insert((e as u32, id), ()).is_none()
                        {
                            if !st.nodes[to as usize].label.get(filler) {
                                self.add_to_node(st, to, filler);
                                progress = true;
                            }
                            if st.clash {
                                return false;
                            }
                        }
                    }
                }
            }

            if !progress {
                return true;
            }
        }
    }

    /// True when some clause literal already holds syntactically.
    fn clause_satisfied(&self, st: &State, clause: &[ClauseLit]) -> bool {
        clause.iter().any(|lit| match lit {
            ClauseLit::Concept { node, id } => st.nodes[*node as usize].label.get(*id),
            ClauseLit::Role { role, from, to, positive: true } => st
                .edges
                .iter()
                .any(|&(r, f, t)| f == *from && t == *to && self.sub_role_of(r, *role)),
            ClauseLit::Role { role, from, to, positive: false } => {
                st.neg_edges.contains(&(*role, *from, *to))
            }
        })
    }

    /// Blocking status per node: a generated node is blocked when some
    /// earlier-created unblocked node's label includes its label.
    fn blocked_set(&self, st: &State) -> Vec<bool> {
        let mut blocked = vec![false; st.nodes.len()];
        for i in 0..st.nodes.len() {
            if st.nodes[i].named {
                continue;
            }
            for j in 0..i {
                if !blocked[j] && st.nodes[i].label.is_subset(&st.nodes[j].label) {
                    blocked[i] = true;
                    break;
                }
            }
        }
        blocked
    }

    fn solve(&self) -> bool {
        if self.initial.clash {
            return false;
        }
        self.search(self.initial.clone())
    }

    /// Unit propagation over disjunctions: a disjunct whose complement is in
    /// the node label is eliminated; a single survivor is forced, none is a
    /// clash. Returns false on clash.
    fn propagate_units(&self, st: &mut State) -> bool {
        loop {
            let mut progress = false;
            for node in 0..st.nodes.len() {
                for id in 0..self.table.len() as u32 {
                    if !st.nodes[node].label.get(id) {
                        continue;
                    }
                    if let Nc::Or(children) = &self.table[id as usize] {
                        if children.iter().any(|&c| st.nodes[node].label.get(c)) {
                            continue;
                        }
                        let open: Vec<u32> = children
                            .iter()
                            .copied()
                            .filter(|&c| {
                                let comp = self.complement[c as usize];
                                comp == u32::MAX || !st.nodes[node].label.get(comp)
                            })
                            .collect();
                        match open.len() {
                            0 => {
                                st.clash = true;
                                return false;
                            }
                            1 => {
                                self.add_to_node(st, node as u32, open[0]);
                                if st.clash {
                                    return false;
                                }
                                progress = true;
                            }
                            _ => {}
                        }
                    }
                }
            }
            if !progress {
                return true;
            }
        }
    }

    fn search(&self, mut st: State) -> bool {
        loop {
            if !self.saturate(&mut st) || !self.propagate_units(&mut st) {
                return false;
            }
            // Unit propagation can queue fresh conjunctions; settle both.
            if st.nodes.iter().any(|n| !n.pending.is_empty()) {
                continue;
            }

            for c in 0..self.clauses.len() {
                if !st.clause_done[c] && self.clause_satisfied(&st, &self.clauses[c]) {
                    st.clause_done[c] = true;
                }
            }
            let blocked = self.blocked_set(&st);

            // Disjunction branching: first unresolved ⊔ on an unblocked node,
            // with semantic branching (later branches assume the complements
            // of the disjuncts already tried).
            for node in 0..st.nodes.len() {
                if blocked[node] {
                    continue;
                }
                for id in 0..self.table.len() as u32 {
                    if !st.nodes[node].label.get(id) {
                        continue;
                    }
                    if let Nc::Or(children) = &self.table[id as usize] {
                        if children.iter().any(|&c| st.nodes[node].label.get(c)) {
                            continue;
                        }
                        let open: Vec<u32> = children
                            .iter()
                            .copied()
                            .filter(|&c| {
                                let comp = self.complement[c as usize];
                                comp == u32::MAX || !st.nodes[node].label.get(comp)
                            })
                            .collect();
                        return open.iter().enumerate().any(|(i, &c)| {
                            let mut branch = st.clone();
                            for &tried in &open[..i] {
                                let comp = self.complement[tried as usize];
                                if comp != u32::MAX {
                                    self.add_to_node(&mut branch, node as u32, comp);
                                }
                            }
                            self.add_to_node(&mut branch, node as u32, c);
                            !branch.clash && self.search(branch)
                        });
                    }
                }
            }

            // Clause branching.
            if let Some(c) = (0..self.clauses.len()).find(|&c| !st.clause_done[c]) {
                return self.clauses[c].iter().any(|lit| {
                    let mut branch = st.clone();
                    branch.clause_done[c] = true;
                    match lit {
                        ClauseLit::Concept { node, id } => self.add_to_node(&mut branch, *node, *id),
                        ClauseLit::Role { role, from, to, positive: true } => {
                            self.add_edge(&mut branch, *role, *from, *to)
                        }
                        ClauseLit::Role { role, from, to, positive: false } => {
                            self.add_neg_edge(&mut branch, *role, *from, *to)
                        }
                    }
                    !branch.clash && self.search(branch)
                });
            }

            // Existential generation: first unsatisfied ∃ on an unblocked node.
            let mut generated = false;
            'outer: for node in 0..st.nodes.len() {
                if blocked[node] {
                    continue;
                }
                for id in 0..self.table.len() as u32 {
                    if !st.nodes[node].label.get(id) {
                        continue;
                    }
                    if let Nc::Exists(role, filler) = self.table[id as usize] {
                        let witnessed = st.edges.iter().any(|&(r, f, t)| {
                            f == node as u32
                                && self.sub_role_of(r, role)
                                && st.nodes[t as usize].label.get(filler)
                        });
                        if witnessed {
                            continue;
                        }
                        let new_node = st.nodes.len() as u32;
                        st.nodes.push(Node {
                            label: Bits::new(self.table.len()),
                            pending: Vec::new(),
                            named: false,
                        });
                        st.edges.push((role, node as u32, new_node));
                        self.add_to_node(&mut st, new_node, filler);
                        for &u in &self.universals {
                            self.add_to_node(&mut st, new_node, u);
                        }
                        if st.clash {
                            return false;
                        }
                        generated = true;
                        break 'outer;
                    }
                }
            }
            if !generated {
                return true;
            }
        }
    }
}

/// Sorts, dedups and flattens trivial cases for And/Or children so that the
/// table index treats equal sets of children as equal concepts.
fn normalize_children(mut children: Vec<u32>) -> Vec<u32> {
    children.sort_unstable();
    children.dedup();
    children
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axiom::Assertion;

    fn concept(name: &str) -> ConceptExpr {
        ConceptExpr::atom(Symbol::concept(name))
    }
    fn ind(name: &str) -> Symbol {
        Symbol::individual(name)
    }
    fn set<I: IntoIterator<Item = Axiom>>(axioms: I) -> AxiomSet {
        axioms.into_iter().collect()
    }

    #[test]
    fn direct_clash_is_inconsistent() {
        let axioms = set([
            Axiom::concept_assert(concept("A"), ind("a")),
            Axiom::concept_assert(ConceptExpr::not(concept("A")), ind("a")),
        ]);
        assert!(!is_consistent(&axioms));
    }

    #[test]
    fn empty_set_is_consistent() {
        assert!(is_consistent(&set([])));
    }

    #[test]
    fn library_conflict_is_inconsistent() {
        // The receiver's three facts plus the sender's contradicting one.
        let article = || concept("Article");
        let axioms = set([
            Axiom::concept_assert(article(), ind("pr1")),
            Axiom::concept_assert(article(), ind("pr2")),
            Axiom::concept_assert(ConceptExpr::not(article()), ind("bo1")),
            Axiom::concept_assert(ConceptExpr::not(article()), ind("pr1")),
        ]);
        assert!(!is_consistent(&axioms));
    }

    #[test]
    fn renamed_result_is_consistent() {
        let article = Symbol::concept("Article");
        let internal = ConceptExpr::atom(article.primed());
        let axioms = set([
            Axiom::concept_assert(internal.clone(), ind("pr1")),
            Axiom::concept_assert(internal.clone(), ind("pr2")),
            Axiom::concept_assert(ConceptExpr::not(internal.clone()), ind("bo1")),
            Axiom::concept_assert(ConceptExpr::not(ConceptExpr::atom(article.clone())), ind("pr1")),
            Axiom::gci(ConceptExpr::atom(article), internal),
        ]);
        assert!(is_consistent(&axioms));
    }

    #[test]
    fn gci_internalization_reaches_all_individuals() {
        let axioms = set([
            Axiom::gci(ConceptExpr::Top, concept("A")),
            Axiom::concept_assert(ConceptExpr::not(concept("A")), ind("a")),
        ]);
        assert!(!is_consistent(&axioms));
    }

    #[test]
    fn exists_with_gci_terminates() {
        // ⊤ ⊑ ∃r.A forces an infinite chain without blocking.
        let r = Symbol::role("r");
        let axioms = set([
            Axiom::gci(ConceptExpr::Top, ConceptExpr::exists(r, concept("A"))),
            Axiom::concept_assert(concept("A"), ind("a")),
        ]);
        assert!(is_consistent(&axioms));
    }

    #[test]
    fn unsatisfiable_existential_chain() {
        let r = Symbol::role("r");
        let axioms = set([
            Axiom::gci(concept("A"), ConceptExpr::exists(r.clone(), concept("A"))),
            Axiom::gci(concept("A"), ConceptExpr::Bot),
            Axiom::concept_assert(concept("A"), ind("a")),
        ]);
        assert!(!is_consistent(&axioms));
    }

    #[test]
    fn equality_merges_individuals() {
        let axioms = set([
            Axiom::concept_assert(concept("A"), ind("a")),
            Axiom::eq(ind("a"), ind("b")),
            Axiom::concept_assert(ConceptExpr::not(concept("A")), ind("b")),
        ]);
        assert!(!is_consistent(&axioms));
    }

    #[test]
    fn inequality_clashes_with_equality() {
        let axioms = set([
            Axiom::eq(ind("a"), ind("b")),
            Axiom::neq(ind("a"), ind("b")).unwrap(),
        ]);
        assert!(!is_consistent(&axioms));
        // Without the equality the inequality is satisfiable.
        assert!(is_consistent(&set([Axiom::neq(ind("a"), ind("b")).unwrap()])));
    }

    #[test]
    fn negative_role_assertion_clashes_with_positive() {
        let r = Symbol::role("r");
        let axioms = set([
            Axiom::role_assert(r.clone(), ind("a"), ind("b"), true),
            Axiom::role_assert(r, ind("a"), ind("b"), false),
        ]);
        assert!(!is_consistent(&axioms));
    }

    #[test]
    fn role_hierarchy_propagates_to_negative_assertions() {
        let r = Symbol::role("r");
        let s = Symbol::role("s");
        let axioms = set([
            Axiom::role_inc(r.clone(), s.clone()),
            Axiom::role_assert(r.clone(), ind("a"), ind("b"), true),
            Axiom::role_assert(s.clone(), ind("a"), ind("b"), false),
        ]);
        assert!(!is_consistent(&axioms));
        // The other direction does not follow.
        let axioms = set([
            Axiom::role_inc(r.clone(), s.clone()),
            Axiom::role_assert(s, ind("a"), ind("b"), true),
            Axiom::role_assert(r, ind("a"), ind("b"), false),
        ]);
        assert!(is_consistent(&axioms));
    }

    #[test]
    fn role_hierarchy_feeds_universal_restrictions() {
        let r = Symbol::role("r");
        let s = Symbol::role("s");
        // ∀s.B at a (encoded as ¬∃s.¬B), r ⊑ s, r(a,b), ¬B(b) must clash.
        let axioms = set([
            Axiom::role_inc(r.clone(), s.clone()),
            Axiom::concept_assert(
                ConceptExpr::not(ConceptExpr::exists(s, ConceptExpr::not(concept("B")))),
                ind("a"),
            ),
            Axiom::role_assert(r, ind("a"), ind("b"), true),
            Axiom::concept_assert(ConceptExpr::not(concept("B")), ind("b")),
        ]);
        assert!(!is_consistent(&axioms));
    }

    #[test]
    fn clause_requires_one_disjunct() {
        let cl = Axiom::clause([
            Assertion::concept(concept("A"), ind("a")),
            Assertion::concept(concept("B"), ind("a")),
        ])
        .unwrap();
        let axioms = set([
            cl.clone(),
            Axiom::concept_assert(ConceptExpr::not(concept("A")), ind("a")),
            Axiom::concept_assert(ConceptExpr::not(concept("B")), ind("a")),
        ]);
        assert!(!is_consistent(&axioms));
        let axioms = set([
            cl,
            Axiom::concept_assert(ConceptExpr::not(concept("A")), ind("a")),
        ]);
        assert!(is_consistent(&axioms));
    }

    #[test]
    fn entails_by_refutation() {
        let axioms = set([
            Axiom::concept_assert(ConceptExpr::not(concept("A")), ind("a")),
            Axiom::concept_assert(ConceptExpr::or([concept("A"), concept("B")]), ind("a")),
        ]);
        assert!(entails(&axioms, &Axiom::concept_assert(concept("B"), ind("a"))));
        assert!(!entails(&axioms, &Axiom::concept_assert(concept("A"), ind("a"))));
    }

    #[test]
    fn entails_reflexivity() {
        let ax = Axiom::gci(concept("A"), concept("B"));
        let axioms = set([ax.clone()]);
        assert!(entails(&axioms, &ax));
    }

    #[test]
    fn entails_gci_contrapositive() {
        let axioms = set([Axiom::gci(concept("A"), concept("B"))]);
        let contra = Axiom::gci(ConceptExpr::not(concept("B")), ConceptExpr::not(concept("A")));
        assert!(entails(&axioms, &contra));
    }

    #[test]
    fn entails_trivial_goals() {
        let axioms = set([]);
        assert!(entails(&axioms, &Axiom::eq(ind("a"), ind("a"))));
        assert!(entails(&axioms, &Axiom::gci(concept("A"), concept("A"))));
        assert!(entails(&axioms, &Axiom::role_inc(Symbol::role("r"), Symbol::role("r"))));
        assert!(!entails(&axioms, &Axiom::eq(ind("a"), ind("b"))));
        assert!(!entails(&axioms, &Axiom::neq(ind("a"), ind("b")).unwrap()));
    }

    #[test]
    fn entails_all_vacuous_and_conjunctive() {
        let axioms = set([Axiom::concept_assert(concept("A"), ind("a"))]);
        assert!(entails_all(&axioms, []));
        let goals = [
            Axiom::concept_assert(concept("A"), ind("a")),
            Axiom::concept_assert(ConceptExpr::or([concept("A"), concept("B")]), ind("a")),
        ];
        assert!(entails_all(&axioms, goals.iter()));
    }

    #[test]
    fn most_specific_concept_assertion_from_example() {
        // With publishedIn(pr1, proc1) and Proceed(proc1), pr1 is an article
        // published in some proceedings.
        let published_in = Symbol::role("publishedIn");
        let axioms = set([
            Axiom::concept_assert(concept("Article"), ind("pr1")),
            Axiom::concept_assert(concept("Article"), ind("pr2")),
            Axiom::concept_assert(ConceptExpr::not(concept("Article")), ind("bo1")),
            Axiom::role_assert(published_in.clone(), ind("pr1"), ind("proc1"), true),
            Axiom::concept_assert(concept("Proceed"), ind("proc1")),
        ]);
        let goal = Axiom::concept_assert(
            ConceptExpr::and([
                concept("Article"),
                ConceptExpr::exists(published_in, concept("Proceed")),
            ]),
            ind("pr1"),
        );
        assert!(entails(&axioms, &goal));
    }

    #[test]
    fn consistency_is_monotone_under_subsets() {
        let r = Symbol::role("r");
        let big = set([
            Axiom::concept_assert(ConceptExpr::or([concept("A"), concept("B")]), ind("a")),
            Axiom::role_assert(r, ind("a"), ind("b"), true),
            Axiom::gci(concept("A"), concept("B")),
        ]);
        assert!(is_consistent(&big));
        for ax in &big {
            let mut smaller = big.clone();
            smaller.remove(ax);
            assert!(is_consistent(&smaller));
        }
    }
}
