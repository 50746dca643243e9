//! The revision operators and their selection strategies.
//!
//! All four operators share one recipe: when the trigger is consistent with
//! the receiver, take the plain union; otherwise rename the conflicting part
//! of the receiver's vocabulary into the internal tier, keep the trigger
//! verbatim, and add a selected set of bridging axioms that reconnects the
//! renamed symbols with their originals.

use crate::axiom::{axiom_set_symbols, Axiom, AxiomSet, Literal};
use crate::bridging::{oa, simple_bridging, strong_bridging};
use crate::concept::ConceptExpr;
use crate::conflict::{dual_remainders, greedy_remainder, mcs};
use crate::error::Error;
use crate::msc::msc;
use crate::ontology::Ontology;
use crate::reasoner::is_consistent;
use crate::subst::{make_substitution, Substitution};
use crate::symbol::{Symbol, SymbolKind};
use std::collections::BTreeSet;

/// The operator handles exposed to the CLI.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OperatorKind {
    /// Weak reinterpretation on ontology triggers (simple bridging).
    Weak,
    /// Strong reinterpretation on ontology triggers (strong bridging).
    Strong,
    /// Msc-based strong reinterpretation on literal triggers.
    MscLiteral,
    /// Selection-based strong reinterpretation on literal triggers.
    SelLiteral,
}

impl OperatorKind {
    pub fn name(&self) -> &'static str {
        match self {
            OperatorKind::Weak => "weak",
            OperatorKind::Strong => "strong",
            OperatorKind::MscLiteral => "msc-literal",
            OperatorKind::SelLiteral => "sel-literal",
        }
    }

    pub fn from_name(name: &str) -> Option<OperatorKind> {
        match name {
            "weak" => Some(OperatorKind::Weak),
            "strong" => Some(OperatorKind::Strong),
            "msc-literal" => Some(OperatorKind::MscLiteral),
            "sel-literal" => Some(OperatorKind::SelLiteral),
            _ => None,
        }
    }
}

/// Which symbols get internalized in the conflict case.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InternalizationMode {
    /// Internalize the union of the selected minimal conflicting symbol sets.
    McsBased,
    /// Internalize every symbol occurring in the receiver.
    Full,
}

impl InternalizationMode {
    pub fn from_name(name: &str) -> Option<InternalizationMode> {
        match name {
            "mcs" => Some(InternalizationMode::McsBased),
            "full" => Some(InternalizationMode::Full),
            _ => None,
        }
    }
}

/// Selection over the minimal-conflicting-symbol-set families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum McsSelection {
    All,
    /// Keep only families made of concept and role symbols when such families
    /// exist: constants are then effectively not reinterpreted.
    PreferConceptsRoles,
}

impl McsSelection {
    fn select(&self, families: &[BTreeSet<Symbol>]) -> Vec<BTreeSet<Symbol>> {
        match self {
            McsSelection::All => families.to_vec(),
            McsSelection::PreferConceptsRoles => {
                let cr: Vec<_> = families
                    .iter()
                    .filter(|f| f.iter().all(|s| s.kind() != SymbolKind::Individual))
                    .cloned()
                    .collect();
                if cr.is_empty() {
                    families.to_vec()
                } else {
                    cr
                }
            }
        }
    }
}

/// Selection over remainder families of bridging-axiom sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BridgeSelection {
    /// Keep the whole family (full meet).
    All,
    /// The first member in canonical family order.
    CanonicalOne,
    /// The n-th member in canonical family order (wrapping); used to realize
    /// "there is a selection function" claims by explicit search.
    Nth(usize),
    /// Maximum-based selection: each bridging axiom carries a distinct binary
    /// weight and the member with the greatest weight sum wins. Axioms listed
    /// in `priority` outrank the rest (earlier is heavier); remaining axioms
    /// follow in canonical order.
    MaxBased { priority: Vec<Axiom> },
    /// Restrict to members containing every constant identity whenever such
    /// members exist, then take the first in canonical order.
    GammaCr,
    /// Like `GammaCr` but taking the n-th identity-keeping member (wrapping);
    /// realizes "there is an identity-preferring selection" claims.
    GammaCrNth(usize),
    /// Build one maximal member greedily instead of enumerating the family.
    /// With `identities_first` the constant identities are offered first;
    /// `rotation` rotates the remaining offer order for search purposes.
    Greedy { identities_first: bool, rotation: usize },
    /// Greedy construction with a fixed priority prefix: identities first,
    /// then the listed axioms (when present in the bridging set), then the
    /// rest canonically.
    GreedyPreferring { prefer: Vec<Axiom> },
}

impl BridgeSelection {
    pub fn name(&self) -> String {
        match self {
            BridgeSelection::All => "all".into(),
            BridgeSelection::CanonicalOne => "one".into(),
            BridgeSelection::Nth(n) => format!("nth:{n}"),
            BridgeSelection::MaxBased { .. } => "max".into(),
            BridgeSelection::GammaCr => "gamma-cr".into(),
            BridgeSelection::GammaCrNth(n) => format!("gamma-cr-nth:{n}"),
            BridgeSelection::Greedy { identities_first: true, rotation } => {
                format!("greedy-cr:{rotation}")
            }
            BridgeSelection::Greedy { identities_first: false, rotation } => {
                format!("greedy:{rotation}")
            }
            BridgeSelection::GreedyPreferring { prefer } => {
                let names: Vec<String> = prefer.iter().map(|a| a.to_string()).collect();
                format!("greedy-preferring:[{}]", names.join("; "))
            }
        }
    }

    pub fn from_name(name: &str) -> Option<BridgeSelection> {
        if let Some(rest) = name.strip_prefix("nth:") {
            return rest.parse().ok().map(BridgeSelection::Nth);
        }
        if let Some(rest) = name.strip_prefix("gamma-cr-nth:") {
            return rest.parse().ok().map(BridgeSelection::GammaCrNth);
        }
        if let Some(rest) = name.strip_prefix("greedy-cr:") {
            return rest
                .parse()
                .ok()
                .map(|rotation| BridgeSelection::Greedy { identities_first: true, rotation });
        }
        if let Some(rest) = name.strip_prefix("greedy:") {
            return rest
                .parse()
                .ok()
                .map(|rotation| BridgeSelection::Greedy { identities_first: false, rotation });
        }
        match name {
            "all" => Some(BridgeSelection::All),
            "one" => Some(BridgeSelection::CanonicalOne),
            "max" => Some(BridgeSelection::MaxBased { priority: Vec::new() }),
            "gamma-cr" => Some(BridgeSelection::GammaCr),
            "greedy" => Some(BridgeSelection::Greedy { identities_first: false, rotation: 0 }),
            "greedy-cr" => Some(BridgeSelection::Greedy { identities_first: true, rotation: 0 }),
            _ => None,
        }
    }

    /// Chooses the remainder members whose intersection is added to the
    /// revision result. `bridge` is the full bridging-axiom set, `base` the
    /// renamed receiver plus trigger.
    pub fn choose(&self, bridge: &AxiomSet, base: &AxiomSet) -> Result<Vec<AxiomSet>, Error> {
        let greedy = match self {
            BridgeSelection::Greedy { identities_first, rotation } => {
                Some(greedy_order(bridge, *identities_first, *rotation))
            }
            BridgeSelection::GreedyPreferring { prefer } => {
                let mut order = greedy_order(bridge, true, 0);
                let mut reordered: Vec<Axiom> = order
                    .iter()
                    .filter(|ax| matches!(ax, Axiom::Eq(_, _)))
                    .cloned()
                    .collect();
                for ax in prefer {
                    if bridge.contains(ax) && !reordered.contains(ax) {
                        reordered.push(ax.clone());
                    }
                }
                order.retain(|ax| !reordered.contains(ax));
                reordered.append(&mut order);
                Some(reordered)
            }
            _ => None,
        };
        if let Some(order) = greedy {
            return match greedy_remainder(&order, base) {
                Some(x) => Ok(vec![x]),
                None => Err(Error::EmptyRemainderFamily),
            };
        }
        let family = dual_remainders(bridge, base);
        if family.is_empty() {
            return Err(Error::EmptyRemainderFamily);
        }
        Ok(self.pick_from_family(&family, bridge))
    }

    /// The selection rule on an explicit non-empty family.
    pub fn pick_from_family(&self, family: &[AxiomSet], bridge: &AxiomSet) -> Vec<AxiomSet> {
        assert!(!family.is_empty());
        match self {
            BridgeSelection::All => family.to_vec(),
            BridgeSelection::CanonicalOne => vec![family[0].clone()],
            BridgeSelection::Nth(n) => vec![family[n % family.len()].clone()],
            BridgeSelection::MaxBased { priority } => {
                // Rank: priority entries first (earlier = heavier), then the
                // remaining bridging axioms in canonical order.
                let mut ranked: Vec<&Axiom> = Vec::new();
                for ax in priority {
                    if bridge.contains(ax) && !ranked.contains(&ax) {
                        ranked.push(ax);
                    }
                }
                for ax in bridge {
                    if !ranked.contains(&ax) {
                        ranked.push(ax);
                    }
                }
                assert!(ranked.len() <= 128, "maximum-based selection limited to 128 axioms");
                let weight = |member: &AxiomSet| -> u128 {
                    let mut w = 0u128;
                    for (i, ax) in ranked.iter().enumerate() {
                        if member.contains(ax) {
                            w |= 1 << (ranked.len() - 1 - i);
                        }
                    }
                    w
                };
                let best = family.iter().max_by_key(|m| weight(m)).expect("non-empty family");
                vec![best.clone()]
            }
            BridgeSelection::GammaCr | BridgeSelection::GammaCrNth(_) => {
                let identities: Vec<&Axiom> =
                    bridge.iter().filter(|ax| matches!(ax, Axiom::Eq(_, _))).collect();
                let with_all: Vec<&AxiomSet> = family
                    .iter()
                    .filter(|m| identities.iter().all(|id| m.contains(id)))
                    .collect();
                let n = match self {
                    BridgeSelection::GammaCrNth(n) => *n,
                    _ => 0,
                };
                if with_all.is_empty() {
                    vec![family[n % family.len()].clone()]
                } else {
                    vec![with_all[n % with_all.len()].clone()]
                }
            }
            BridgeSelection::Greedy { .. } | BridgeSelection::GreedyPreferring { .. } => {
                unreachable!("greedy bypasses family enumeration")
            }
        }
    }
}

fn greedy_order(bridge: &AxiomSet, identities_first: bool, rotation: usize) -> Vec<Axiom> {
    let mut identities = Vec::new();
    let mut rest = Vec::new();
    for ax in bridge {
        if identities_first && matches!(ax, Axiom::Eq(_, _)) {
            identities.push(ax.clone());
        } else {
            rest.push(ax.clone());
        }
    }
    if !rest.is_empty() {
        let shift = rotation % rest.len();
        rest.rotate_left(shift);
    }
    identities.extend(rest);
    identities
}

/// Maximum-based selection with the given priority ranking.
pub fn max_based_selection(priority: Vec<Axiom>) -> BridgeSelection {
    BridgeSelection::MaxBased { priority }
}

/// The selection preferring members that keep every constant identity.
pub fn gamma_cr() -> BridgeSelection {
    BridgeSelection::GammaCr
}

/// Selection over the `oa` axiom family of the literal operator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OaSelection {
    /// Select nothing; the operator degenerates to weak reinterpretation.
    None,
    All,
    CanonicalOne,
    /// Select exactly the axiom whose added disjunct is the msc of the
    /// trigger individual in the renamed receiver, when that axiom lies in
    /// the generated family.
    MscConjunction,
}

impl OaSelection {
    pub fn name(&self) -> &'static str {
        match self {
            OaSelection::None => "none",
            OaSelection::All => "all",
            OaSelection::CanonicalOne => "one",
            OaSelection::MscConjunction => "msc",
        }
    }

    pub fn from_name(name: &str) -> Option<OaSelection> {
        match name {
            "none" => Some(OaSelection::None),
            "all" => Some(OaSelection::All),
            "one" => Some(OaSelection::CanonicalOne),
            "msc" => Some(OaSelection::MscConjunction),
            _ => None,
        }
    }
}

/// One revision step of an iterated run.
#[derive(Clone, Debug)]
pub struct StepRecord {
    pub operator: OperatorKind,
    pub substitution: Substitution,
    /// The bridging axioms that made it into the result.
    pub bridge_axioms: AxiomSet,
    /// True when the trigger was compatible and the step was a plain union.
    pub consistent_case: bool,
}

/// A revised ontology with its full derivation trace.
#[derive(Clone, Debug)]
pub struct RevisionResult {
    pub ontology: Ontology,
    pub trace: Vec<StepRecord>,
    /// The composition of all per-step internalizations.
    pub composed: Substitution,
}

impl RevisionResult {
    fn initial(o: &Ontology) -> Self {
        RevisionResult {
            ontology: o.clone(),
            trace: Vec::new(),
            composed: Substitution::identity(),
        }
    }

    fn push(&mut self, ontology: Ontology, step: StepRecord) {
        self.composed = self.composed.compose(&step.substitution);
        self.trace.push(step);
        self.ontology = ontology;
    }

    /// The per-step substitution history.
    pub fn history(&self) -> Vec<Substitution> {
        self.trace.iter().map(|s| s.substitution.clone()).collect()
    }
}

/// A single revision trigger.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Trigger {
    Axioms(AxiomSet),
    Literal(Literal),
}

impl Trigger {
    pub fn axioms(&self) -> AxiomSet {
        match self {
            Trigger::Axioms(set) => set.clone(),
            Trigger::Literal(lit) => [lit.axiom()].into_iter().collect(),
        }
    }

    /// Views the trigger as a signed atomic literal when it has that shape.
    pub fn as_literal(&self) -> Option<Literal> {
        match self {
            Trigger::Literal(lit) => Some(lit.clone()),
            Trigger::Axioms(set) if set.len() == 1 => {
                Literal::from_axiom(set.iter().next().unwrap())
            }
            Trigger::Axioms(_) => None,
        }
    }
}

/// A configured revision operator.
#[derive(Clone, Debug)]
pub struct Operator {
    pub kind: OperatorKind,
    pub mode: InternalizationMode,
    pub mcs_selection: McsSelection,
    pub bridge_selection: BridgeSelection,
    pub oa_selection: OaSelection,
    pub msc_depth: u32,
    pub bridge_depth: u32,
}

impl Default for Operator {
    fn default() -> Self {
        Operator {
            kind: OperatorKind::Weak,
            mode: InternalizationMode::Full,
            mcs_selection: McsSelection::PreferConceptsRoles,
            bridge_selection: BridgeSelection::GammaCr,
            oa_selection: OaSelection::All,
            msc_depth: 1,
            bridge_depth: 1,
        }
    }
}

impl Operator {
    pub fn with_kind(kind: OperatorKind) -> Self {
        let bridge_selection = match kind {
            // Enumerating the strong bridging family is infeasible; build one
            // maximal member greedily, identities first.
            OperatorKind::Strong => BridgeSelection::Greedy { identities_first: true, rotation: 0 },
            _ => BridgeSelection::GammaCr,
        };
        Operator { kind, bridge_selection, ..Operator::default() }
    }

    /// Applies one revision step.
    pub fn apply(&self, receiver: &Ontology, trigger: &Trigger) -> Result<RevisionResult, Error> {
        let mut result = RevisionResult::initial(receiver);
        self.step(&mut result, trigger)?;
        Ok(result)
    }

    /// Left fold over a trigger sequence, recording every step.
    pub fn iterate(&self, receiver: &Ontology, seq: &[Trigger]) -> Result<RevisionResult, Error> {
        let mut result = RevisionResult::initial(receiver);
        for trigger in seq {
            self.step(&mut result, trigger)?;
        }
        Ok(result)
    }

    fn step(&self, result: &mut RevisionResult, trigger: &Trigger) -> Result<(), Error> {
        let receiver = result.ontology.clone();
        let (ontology, record) = match self.kind {
            OperatorKind::Weak | OperatorKind::Strong => {
                self.revise_ontology(&receiver, &trigger.axioms())?
            }
            OperatorKind::MscLiteral | OperatorKind::SelLiteral => {
                let literal = trigger.as_literal().ok_or_else(|| {
                    Error::TriggerShape(self.kind.name().into(), "a signed atomic assertion".into())
                })?;
                self.revise_literal(&receiver, &literal)?
            }
        };
        result.push(ontology, record);
        Ok(())
    }

    fn check_trigger_public(trigger: &AxiomSet) -> Result<(), Error> {
        for s in axiom_set_symbols(trigger) {
            if s.is_internal() {
                return Err(Error::InternalSymbolInTrigger(s.to_string()));
            }
        }
        Ok(())
    }

    fn revise_ontology(
        &self,
        receiver: &Ontology,
        trigger: &AxiomSet,
    ) -> Result<(Ontology, StepRecord), Error> {
        if !is_consistent(receiver.axioms()) {
            return Err(Error::InconsistentInput);
        }
        Self::check_trigger_public(trigger)?;
        if !is_consistent(trigger) {
            return Err(Error::TriggerInconsistent);
        }

        let mut union: AxiomSet = receiver.axioms().clone();
        union.extend(trigger.iter().cloned());
        if is_consistent(&union) {
            let ontology = Ontology::from_axioms(union)
                .with_declared_public(receiver.public_vocab().iter().cloned());
            let record = StepRecord {
                operator: self.kind,
                substitution: Substitution::identity(),
                bridge_axioms: AxiomSet::new(),
                consistent_case: true,
            };
            return Ok((ontology, record));
        }

        let support: BTreeSet<Symbol> = match self.mode {
            InternalizationMode::Full => axiom_set_symbols(receiver.axioms()),
            InternalizationMode::McsBased => {
                let trigger_onto = Ontology::from_axioms(trigger.iter().cloned());
                let families = mcs(receiver, &trigger_onto)?.families;
                let mut support = BTreeSet::new();
                for f in self.mcs_selection.select(&families) {
                    support.extend(f);
                }
                support
            }
        };
        let sigma = make_substitution(&support);

        let bridge = match self.kind {
            OperatorKind::Weak => simple_bridging(&sigma),
            OperatorKind::Strong => strong_bridging(&sigma, receiver, self.bridge_depth)?,
            _ => unreachable!(),
        };

        let mut base = sigma.apply_axioms(receiver.axioms());
        base.extend(trigger.iter().cloned());
        let chosen = self.bridge_selection.choose(&bridge.axioms, &base)?;
        let added = intersect_all(&chosen);

        let mut axioms = base;
        axioms.extend(added.iter().cloned());
        let ontology = Ontology::from_axioms(axioms)
            .with_declared_public(receiver.public_vocab().iter().cloned());
        let record = StepRecord {
            operator: self.kind,
            substitution: sigma,
            bridge_axioms: added,
            consistent_case: false,
        };
        Ok((ontology, record))
    }

    /// The internal symbol for a literal trigger: the trigger concept primed
    /// past every same-named symbol occurring in the receiver, so repeated
    /// conflicts on one symbol stay well defined.
    fn literal_target(receiver: &Ontology, concept: &Symbol) -> Symbol {
        let max_prime = axiom_set_symbols(receiver.axioms())
            .iter()
            .filter(|s| s.kind() == SymbolKind::Concept && s.base_name() == concept.base_name())
            .map(|s| s.prime_level())
            .max()
            .unwrap_or(0);
        Symbol::new(SymbolKind::Concept, concept.base_name(), max_prime + 1)
    }

    fn revise_literal(
        &self,
        receiver: &Ontology,
        literal: &Literal,
    ) -> Result<(Ontology, StepRecord), Error> {
        if !is_consistent(receiver.axioms()) {
            return Err(Error::InconsistentInput);
        }
        if literal.concept.is_internal() || literal.individual.is_internal() {
            return Err(Error::InternalSymbolInTrigger(literal.to_string()));
        }

        let mut union: AxiomSet = receiver.axioms().clone();
        union.insert(literal.axiom());
        if is_consistent(&union) {
            let ontology = Ontology::from_axioms(union)
                .with_declared_public(receiver.public_vocab().iter().cloned());
            let record = StepRecord {
                operator: self.kind,
                substitution: Substitution::identity(),
                bridge_axioms: AxiomSet::new(),
                consistent_case: true,
            };
            return Ok((ontology, record));
        }

        let public = literal.concept.clone();
        let internal = Self::literal_target(receiver, &public);
        let sigma = Substitution::from_pairs([(public.clone(), internal.clone())]);
        let renamed = sigma.apply_axioms(receiver.axioms());
        let original = ConceptExpr::atom(public.clone());
        let image = ConceptExpr::atom(internal.clone());

        let (axioms, added) = match self.kind {
            OperatorKind::MscLiteral => {
                let m = msc(&renamed, &literal.individual, self.msc_depth)?;
                let added: AxiomSet = if literal.positive {
                    [
                        Axiom::gci(image.clone(), original.clone()),
                        Axiom::gci(original.clone(), ConceptExpr::or([image.clone(), m])),
                    ]
                    .into_iter()
                    .collect()
                } else {
                    [
                        Axiom::gci(original.clone(), image.clone()),
                        Axiom::gci(image.clone(), ConceptExpr::or([original.clone(), m])),
                    ]
                    .into_iter()
                    .collect()
                };
                let mut axioms = renamed;
                axioms.insert(literal.axiom());
                axioms.extend(added.iter().cloned());
                (axioms, added)
            }
            OperatorKind::SelLiteral => {
                // Weak reinterpretation on the literal with the fixed
                // single-symbol substitution, then the selected weakenings.
                let bridge: AxiomSet = [
                    Axiom::gci(original.clone(), image.clone()),
                    Axiom::gci(image.clone(), original.clone()),
                ]
                .into_iter()
                .collect();
                let mut base = renamed;
                base.insert(literal.axiom());
                let chosen = BridgeSelection::All.choose(&bridge, &base)?;
                let mut added = intersect_all(&chosen);
                added.extend(self.select_oa(receiver, literal, &internal)?);
                let mut axioms = base;
                axioms.extend(added.iter().cloned());
                (axioms, added)
            }
            _ => unreachable!(),
        };

        let ontology = Ontology::from_axioms(axioms)
            .with_declared_public(receiver.public_vocab().iter().cloned());
        let record = StepRecord {
            operator: self.kind,
            substitution: sigma,
            bridge_axioms: added,
            consistent_case: false,
        };
        Ok((ontology, record))
    }

    fn select_oa(
        &self,
        receiver: &Ontology,
        literal: &Literal,
        internal: &Symbol,
    ) -> Result<AxiomSet, Error> {
        if self.oa_selection == OaSelection::None {
            return Ok(AxiomSet::new());
        }
        let family = oa(receiver, literal, internal, self.bridge_depth)?.axioms;
        Ok(match self.oa_selection {
            OaSelection::None => unreachable!(),
            OaSelection::All => family,
            OaSelection::CanonicalOne => family.into_iter().take(1).collect(),
            OaSelection::MscConjunction => {
                let sigma = Substitution::from_pairs([(literal.concept.clone(), internal.clone())]);
                let renamed = sigma.apply_axioms(receiver.axioms());
                let m = msc(&renamed, &literal.individual, self.msc_depth)?;
                let original = ConceptExpr::atom(literal.concept.clone());
                let image = ConceptExpr::atom(internal.clone());
                let expected = if literal.positive {
                    Axiom::gci(original, ConceptExpr::or([image, m]))
                } else {
                    Axiom::gci(image, ConceptExpr::or([original, m]))
                };
                family.into_iter().filter(|ax| *ax == expected).collect()
            }
        })
    }
}

fn intersect_all(members: &[AxiomSet]) -> AxiomSet {
    let mut iter = members.iter();
    let first = match iter.next() {
        Some(f) => f.clone(),
        None => return AxiomSet::new(),
    };
    iter.fold(first, |acc, m| acc.intersection(m).cloned().collect())
}
