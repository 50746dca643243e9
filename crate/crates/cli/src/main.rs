//! Command-line driver for reinterpretation-based ontology revision.

use clap::{Args, Parser as ClapParser, Subcommand};
use reinterp_cli::parser::{parse_ontology, render_ontology};
use reinterp_cli::scenario;
use reinterp::axiom::AxiomSet;
use reinterp::concept::ConceptExpr;
use reinterp::ontology::Ontology;
use reinterp::postulate::{
    check_preservation, check_ragm, check_rdp, check_reconstruction, table1_suite, Table1Config,
};
use reinterp::revise::{
    BridgeSelection, InternalizationMode, McsSelection, OaSelection, Operator, OperatorKind,
    Trigger,
};
use reinterp::space::subsumption_lattice;
use scenario::{run_scenario, status_name, Scenario};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(ClapParser)]
#[command(
    name = "reinterp",
    about = "Ontology revision by reinterpretation: revise, iterate, and check postulates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OperatorFlags {
    /// Operator handle: weak | strong | msc-literal | sel-literal.
    #[arg(long, default_value = "weak")]
    operator: String,
    /// Bridging-axiom selection: all | one | max | gamma-cr | greedy |
    /// greedy-cr | nth:K | gamma-cr-nth:K | greedy:K | greedy-cr:K.
    #[arg(long)]
    strategy: Option<String>,
    /// Internalization mode: mcs | full.
    #[arg(long, default_value = "full")]
    mode: String,
    /// Conflict-set selection: all | prefer-cr.
    #[arg(long, default_value = "prefer-cr")]
    mcs_selection: String,
    /// Literal-operator weakening selection: none | all | one | msc.
    #[arg(long, default_value = "all")]
    oa_selection: String,
    #[arg(long, default_value_t = 1)]
    depth_msc: u32,
    #[arg(long, default_value_t = 1)]
    depth_bridge: u32,
}

impl OperatorFlags {
    fn build(&self) -> Result<Operator, String> {
        let kind = OperatorKind::from_name(&self.operator)
            .ok_or_else(|| format!("unknown operator '{}'", self.operator))?;
        let mut op = Operator::with_kind(kind);
        op.mode = InternalizationMode::from_name(&self.mode)
            .ok_or_else(|| format!("unknown mode '{}'", self.mode))?;
        if let Some(strategy) = &self.strategy {
            op.bridge_selection = BridgeSelection::from_name(strategy)
                .ok_or_else(|| format!("unknown strategy '{strategy}'"))?;
        }
        op.mcs_selection = match self.mcs_selection.as_str() {
            "all" => McsSelection::All,
            "prefer-cr" => McsSelection::PreferConceptsRoles,
            other => return Err(format!("unknown mcs-selection '{other}'")),
        };
        op.oa_selection = OaSelection::from_name(&self.oa_selection)
            .ok_or_else(|| format!("unknown oa-selection '{}'", self.oa_selection))?;
        op.msc_depth = self.depth_msc;
        op.bridge_depth = self.depth_bridge;
        Ok(op)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse an ontology file and print its canonical rendering.
    Parse {
        file: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Revise a receiver ontology with one trigger.
    Revise {
        #[arg(long)]
        receiver: PathBuf,
        #[arg(long)]
        trigger: PathBuf,
        #[command(flatten)]
        flags: OperatorFlags,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a scenario file: iterated revision plus its checks.
    Iterate {
        scenario: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check one postulate on a receiver and its triggers.
    Check {
        #[arg(long)]
        receiver: PathBuf,
        /// Trigger files in sequence order (two for the iteration and
        /// supplementary postulates).
        #[arg(long)]
        trigger: Vec<PathBuf>,
        /// ragm7 | ragm8 | rdp1 | rdp2 | rdp3 | rdp4 | preservation |
        /// reconstruction.
        #[arg(long)]
        postulate: String,
        #[command(flatten)]
        flags: OperatorFlags,
        #[arg(long, default_value_t = 1)]
        depth_probe: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run the full operator-by-postulate grid.
    Table1 {
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        instances: u32,
        #[arg(long, default_value_t = 0)]
        depth_probe: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the entailed-subsumption Hasse diagram over a concept set.
    Lattice {
        file: PathBuf,
        /// Optional file with one concept per line; defaults to the
        /// depth-bounded space over the ontology's vocabulary.
        #[arg(long)]
        nodes: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        depth: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::FAILURE
}

fn write_json(path: &Option<PathBuf>, value: &Value) -> Result<(), String> {
    if let Some(path) = path {
        std::fs::write(path, serde_json::to_string_pretty(value).unwrap())
            .map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn load(path: &Path) -> Result<(String, Ontology), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_ontology(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// REINTERP_SEED overrides any --seed flag.
fn effective_seed(flag: u64) -> u64 {
    std::env::var("REINTERP_SEED").ok().and_then(|v| v.parse().ok()).unwrap_or(flag)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => fail(msg),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Parse { file, json } => {
            let (name, ontology) = load(&file)?;
            let rendered = render_ontology(&name, &ontology);
            print!("{rendered}");
            write_json(
                &json,
                &json!({
                    "schema_version": 1,
                    "name": name,
                    "axioms": ontology.axioms().len(),
                    "public_vocab": ontology.public_vocab().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "rendered": rendered,
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Revise { receiver, trigger, flags, json } => {
            let (name, receiver) = load(&receiver)?;
            let (_, trigger) = load(&trigger)?;
            let op = flags.build()?;
            let result = op
                .apply(&receiver, &Trigger::Axioms(trigger.axioms().clone()))
                .map_err(|e| e.to_string())?;
            let rendered = render_ontology(&name, &result.ontology);
            print!("{rendered}");
            let step = &result.trace[0];
            write_json(
                &json,
                &json!({
                    "schema_version": 1,
                    "operator": op.kind.name(),
                    "strategy": op.bridge_selection.name(),
                    "consistent_case": step.consistent_case,
                    "substitution": step.substitution.to_string(),
                    "bridge_axioms": step.bridge_axioms.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                    "rendered": rendered,
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Iterate { scenario, json } => {
            let scenario = Scenario::load(&scenario).map_err(|e| e.to_string())?;
            let report = run_scenario(&scenario).map_err(|e| e.to_string())?;
            print!("{}", report.rendered);
            for outcome in &report.checks {
                let suffix = match outcome.matched {
                    Some(true) => " (as expected)",
                    Some(false) => " (EXPECTATION MISSED)",
                    None => "",
                };
                let witness = outcome
                    .verdict
                    .witness
                    .as_ref()
                    .map(|w| format!(", witness {w}"))
                    .unwrap_or_default();
                println!(
                    "check {}: {}{witness}{suffix}",
                    outcome.spec.id,
                    status_name(outcome.verdict.status)
                );
            }
            write_json(&json, &report.to_json())?;
            Ok(if report.ok() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Check { receiver, trigger, postulate, flags, depth_probe, json } => {
            let (_, receiver) = load(&receiver)?;
            let op = flags.build()?;
            let triggers: Vec<AxiomSet> = trigger
                .iter()
                .map(|p| load(p).map(|(_, o)| o.axioms().clone()))
                .collect::<Result<_, _>>()?;
            let verdict = match postulate.as_str() {
                "preservation" | "reconstruction" => {
                    let seq: Vec<Trigger> = triggers.iter().cloned().map(Trigger::Axioms).collect();
                    if postulate == "preservation" {
                        check_preservation(&receiver, &seq, &op).map_err(|e| e.to_string())?
                    } else {
                        check_reconstruction(&receiver, &seq, &op).map_err(|e| e.to_string())?
                    }
                }
                other => {
                    if triggers.len() != 2 {
                        return Err(format!("postulate '{other}' needs exactly two --trigger files"));
                    }
                    let r = match other {
                        "ragm7" => check_ragm(7, &receiver, &triggers[0], &triggers[1], &op, depth_probe),
                        "ragm8" => check_ragm(8, &receiver, &triggers[0], &triggers[1], &op, depth_probe),
                        "rdp1" => check_rdp(1, &receiver, &triggers[0], &triggers[1], &op, depth_probe),
                        "rdp2" => check_rdp(2, &receiver, &triggers[0], &triggers[1], &op, depth_probe),
                        "rdp3" => check_rdp(3, &receiver, &triggers[0], &triggers[1], &op, depth_probe),
                        "rdp4" => check_rdp(4, &receiver, &triggers[0], &triggers[1], &op, depth_probe),
                        unknown => return Err(format!("unknown postulate '{unknown}'")),
                    };
                    r.map_err(|e| e.to_string())?
                }
            };
            let witness =
                verdict.witness.as_ref().map(|w| format!(", witness {w}")).unwrap_or_default();
            println!("{}: {}{witness}", verdict.postulate, status_name(verdict.status));
            write_json(
                &json,
                &json!({
                    "schema_version": 1,
                    "postulate": verdict.postulate,
                    "status": status_name(verdict.status),
                    "precondition_held": verdict.precondition_held,
                    "conclusion_held": verdict.conclusion_held,
                    "witness": verdict.witness.as_ref().map(|w| w.to_string()),
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table1 { seed, instances, depth_probe, json } => {
            let cfg = Table1Config {
                seed: effective_seed(seed),
                instances,
                sweep_probe_depth: depth_probe,
                ..Table1Config::default()
            };
            let report = table1_suite(cfg).map_err(|e| e.to_string())?;
            print!("{}", report.render_grid());
            println!(
                "{} cells, seed {}, {} instances per sweep cell",
                report.cells.len(),
                report.seed,
                instances
            );
            write_json(&json, &report.to_json())?;
            Ok(if report.matches_expected() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Lattice { file, nodes, depth, json } => {
            // Lattices are typically computed over rendered revision
            // results, so internal symbols are admitted here.
            let text =
                std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let (name, ontology) = reinterp_cli::parser::parse_rendered_ontology(&text)
                .map_err(|e| format!("{}: {e}", file.display()))?;
            let concepts: Vec<ConceptExpr> = match nodes {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    let mut out = Vec::new();
                    for (idx, line) in text.lines().enumerate() {
                        let line = line.split('#').next().unwrap_or("").trim();
                        if line.is_empty() {
                            continue;
                        }
                        let concept = reinterp_cli::parser::parse_concept_text(line)
                            .map_err(|e| format!("{} line {}: {e}", path.display(), idx + 1))?;
                        out.push(concept);
                    }
                    out
                }
                None => reinterp::space::concept_space_over(&ontology.vocab(), depth),
            };
            let edges = subsumption_lattice(ontology.axioms(), &concepts);
            println!("lattice of {name}: {} node candidates", concepts.len());
            for (below, above) in &edges {
                println!("{below} < {above}");
            }
            write_json(
                &json,
                &json!({
                    "schema_version": 1,
                    "name": name,
                    "edges": edges.iter().map(|(a, b)| json!([a.to_string(), b.to_string()])).collect::<Vec<_>>(),
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
