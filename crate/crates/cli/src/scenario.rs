//! Scenario files: a flat key-value format packaging a receiver, a trigger
//! sequence, operator configuration, and postulate checks.
//!
//! ```text
//! # one key = value per line
//! receiver = example1_receiver.ont
//! trigger = example1_trigger.ont        # repeatable; order is the sequence
//! operator = weak                       # weak | strong | msc-literal | sel-literal
//! mode = mcs                            # mcs | full
//! strategy = gamma-cr                   # all|one|max|gamma-cr|greedy|greedy-cr|nth:K|...
//! mcs-selection = prefer-cr             # all | prefer-cr
//! oa-selection = all                    # none | all | one | msc
//! depth-msc = 1
//! depth-bridge = 1
//! depth-probe = 1
//! seed = 7
//! check = preservation
//! check = rdp1 expect violated          # optional expectation
//! ```
//!
//! File paths are resolved relative to the scenario file. The postulate
//! checks over two triggers (the supplementary and iteration postulates)
//! require the scenario to list exactly two.

use crate::parser::{parse_ontology, render_ontology};
use reinterp::ontology::Ontology;
use reinterp::postulate::{
    check_ragm, check_rdp, preservation_of, reconstruction_of, Verdict, VerdictStatus,
};
use reinterp::revise::{
    BridgeSelection, InternalizationMode, McsSelection, OaSelection, Operator, OperatorKind,
    Trigger,
};
use serde_json::{json, Value};
use std::fmt;
use std::path::{Path, PathBuf};

#[derive(Debug)]
pub enum ScenarioError {
    Io(PathBuf, std::io::Error),
    Parse(PathBuf, crate::parser::ParseError),
    Key(usize, String),
    Run(String),
}

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScenarioError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            ScenarioError::Parse(path, e) => write!(f, "{}: {e}", path.display()),
            ScenarioError::Key(line, msg) => write!(f, "scenario line {line}: {msg}"),
            ScenarioError::Run(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for ScenarioError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub id: String,
    pub expect: Option<VerdictStatus>,
}

/// A parsed scenario.
#[derive(Debug)]
pub struct Scenario {
    pub receiver_path: PathBuf,
    pub trigger_paths: Vec<PathBuf>,
    pub operator: Operator,
    pub checks: Vec<CheckSpec>,
    pub probe_depth: u32,
    pub seed: u64,
}

fn parse_status(word: &str) -> Option<VerdictStatus> {
    match word {
        "satisfied" => Some(VerdictStatus::Satisfied),
        "violated" => Some(VerdictStatus::Violated),
        "vacuous" => Some(VerdictStatus::Vacuous),
        _ => None,
    }
}

pub fn status_name(status: VerdictStatus) -> &'static str {
    match status {
        VerdictStatus::Satisfied => "satisfied",
        VerdictStatus::Violated => "violated",
        VerdictStatus::Vacuous => "vacuous",
    }
}

impl Scenario {
    pub fn load(path: &Path) -> Result<Scenario, ScenarioError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ScenarioError::Io(path.to_path_buf(), e))?;
        let dir = path.parent().unwrap_or_else(|| Path::new("."));
        let mut receiver_path = None;
        let mut trigger_paths = Vec::new();
        let mut operator = Operator::default();
        let mut kind_set = false;
        let mut checks = Vec::new();
        let mut probe_depth = 1;
        let mut seed = 0x5eed;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ScenarioError::Key(line_no, format!("expected key = value, found '{line}'")))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |msg: String| ScenarioError::Key(line_no, msg);
            match key {
                "receiver" => receiver_path = Some(dir.join(value)),
                "trigger" => trigger_paths.push(dir.join(value)),
                "operator" => {
                    let kind = OperatorKind::from_name(value)
                        .ok_or_else(|| bad(format!("unknown operator '{value}'")))?;
                    let configured = Operator::with_kind(kind);
                    operator.kind = configured.kind;
                    if !kind_set {
                        operator.bridge_selection = configured.bridge_selection;
                    }
                }
                "mode" => {
                    operator.mode = InternalizationMode::from_name(value)
                        .ok_or_else(|| bad(format!("unknown mode '{value}'")))?;
                }
                "strategy" => {
                    operator.bridge_selection = BridgeSelection::from_name(value)
                        .ok_or_else(|| bad(format!("unknown strategy '{value}'")))?;
                    kind_set = true;
                }
                "mcs-selection" => {
                    operator.mcs_selection = match value {
                        "all" => McsSelection::All,
                        "prefer-cr" => McsSelection::PreferConceptsRoles,
                        other => return Err(bad(format!("unknown mcs-selection '{other}'"))),
                    };
                }
                "oa-selection" => {
                    operator.oa_selection = OaSelection::from_name(value)
                        .ok_or_else(|| bad(format!("unknown oa-selection '{value}'")))?;
                }
                "depth-msc" => {
                    operator.msc_depth =
                        value.parse().map_err(|_| bad(format!("bad depth '{value}'")))?;
                }
                "depth-bridge" => {
                    operator.bridge_depth =
                        value.parse().map_err(|_| bad(format!("bad depth '{value}'")))?;
                }
                "depth-probe" => {
                    probe_depth = value.parse().map_err(|_| bad(format!("bad depth '{value}'")))?;
                }
                "seed" => {
                    seed = value.parse().map_err(|_| bad(format!("bad seed '{value}'")))?;
                }
                "check" => {
                    let mut words = value.split_whitespace();
                    let id = words
                        .next()
                        .ok_or_else(|| bad("check needs a postulate id".into()))?
                        .to_string();
                    let expect = match (words.next(), words.next()) {
                        (None, _) => None,
                        (Some("expect"), Some(status)) => Some(
                            parse_status(status)
                                .ok_or_else(|| bad(format!("unknown status '{status}'")))?,
                        ),
                        _ => return Err(bad(format!("malformed check '{value}'"))),
                    };
                    let known = [
                        "ragm7",
                        "ragm8",
                        "rdp1",
                        "rdp2",
                        "rdp3",
                        "rdp4",
                        "preservation",
                        "reconstruction",
                    ];
                    if !known.contains(&id.as_str()) {
                        return Err(bad(format!("unknown check '{id}'")));
                    }
                    checks.push(CheckSpec { id, expect });
                }
                other => return Err(bad(format!("unknown key '{other}'"))),
            }
        }
        Ok(Scenario {
            receiver_path: receiver_path
                .ok_or_else(|| ScenarioError::Key(0, "missing receiver".into()))?,
            trigger_paths,
            operator,
            checks,
            probe_depth,
            seed,
        })
    }
}

pub struct CheckOutcome {
    pub spec: CheckSpec,
    pub verdict: Verdict,
    pub matched: Option<bool>,
}

pub struct ScenarioReport {
    pub final_name: String,
    pub final_ontology: Ontology,
    pub rendered: String,
    pub steps: Vec<(String, bool, String)>,
    pub checks: Vec<CheckOutcome>,
    pub seed: u64,
}

impl ScenarioReport {
    /// Exit status: zero unless a check with an expectation missed it.
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.matched != Some(false))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": 1,
            "seed": self.seed,
            "name": self.final_name,
            "axiom_count": self.final_ontology.axioms().len(),
            "final_ontology": self.rendered,
            "steps": self.steps.iter().map(|(sigma, consistent, bridge)| json!({
                "substitution": sigma,
                "consistent_case": consistent,
                "bridge_axioms": bridge,
            })).collect::<Vec<_>>(),
            "checks": self.checks.iter().map(|c| json!({
                "id": c.spec.id,
                "status": status_name(c.verdict.status),
                "precondition_held": c.verdict.precondition_held,
                "conclusion_held": c.verdict.conclusion_held,
                "witness": c.verdict.witness.as_ref().map(|w| w.to_string()),
                "expected": c.spec.expect.map(status_name),
                "matched": c.matched,
            })).collect::<Vec<_>>(),
        })
    }
}

fn load_ontology(path: &Path) -> Result<(String, Ontology), ScenarioError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| ScenarioError::Io(path.to_path_buf(), e))?;
    parse_ontology(&text).map_err(|e| ScenarioError::Parse(path.to_path_buf(), e))
}

/// Executes the scenario: iterate the operator over the trigger sequence,
/// then run every requested postulate check.
pub fn run_scenario(scenario: &Scenario) -> Result<ScenarioReport, ScenarioError> {
    let (name, receiver) = load_ontology(&scenario.receiver_path)?;
    let mut triggers = Vec::new();
    for path in &scenario.trigger_paths {
        let (_, t) = load_ontology(path)?;
        triggers.push(Trigger::Axioms(t.axioms().clone()));
    }

    let op = &scenario.operator;
    let result = op
        .iterate(&receiver, &triggers)
        .map_err(|e| ScenarioError::Run(format!("revision failed: {e}")))?;

    let mut checks = Vec::new();
    for spec in &scenario.checks {
        let verdict = match spec.id.as_str() {
            "preservation" => preservation_of(&result, &receiver),
            "reconstruction" => reconstruction_of(&result, &receiver, &triggers),
            two_trigger => {
                if triggers.len() != 2 {
                    return Err(ScenarioError::Run(format!(
                        "check '{two_trigger}' needs exactly two triggers, scenario has {}",
                        triggers.len()
                    )));
                }
                let o1 = triggers[0].axioms();
                let o2 = triggers[1].axioms();
                let run = |r: Result<Verdict, reinterp::error::Error>| {
                    r.map_err(|e| ScenarioError::Run(format!("check {two_trigger} failed: {e}")))
                };
                match two_trigger {
                    "ragm7" => run(check_ragm(7, &receiver, &o1, &o2, op, scenario.probe_depth))?,
                    "ragm8" => run(check_ragm(8, &receiver, &o1, &o2, op, scenario.probe_depth))?,
                    "rdp1" => run(check_rdp(1, &receiver, &o1, &o2, op, scenario.probe_depth))?,
                    "rdp2" => run(check_rdp(2, &receiver, &o1, &o2, op, scenario.probe_depth))?,
                    "rdp3" => run(check_rdp(3, &receiver, &o1, &o2, op, scenario.probe_depth))?,
                    "rdp4" => run(check_rdp(4, &receiver, &o1, &o2, op, scenario.probe_depth))?,
                    other => unreachable!("validated key {other}"),
                }
            }
        };
        let matched = spec.expect.map(|e| e == verdict.status);
        checks.push(CheckOutcome { spec: spec.clone(), verdict, matched });
    }

    let steps = result
        .trace
        .iter()
        .map(|s| {
            (
                s.substitution.to_string(),
                s.consistent_case,
                s.bridge_axioms.iter().map(|a| a.to_string()).collect::<Vec<_>>().join("; "),
            )
        })
        .collect();
    let rendered = render_ontology(&name, &result.ontology);
    Ok(ScenarioReport {
        final_name: name,
        final_ontology: result.ontology,
        rendered,
        steps,
        checks,
        seed: scenario.seed,
    })
}
