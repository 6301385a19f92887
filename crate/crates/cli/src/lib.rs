//! Command-line driver for orthokit.
//!
//! Reports are flat `key value` lines sorted by key. Exit codes: 0 success,
//! 1 input or validation error, 2 failed `--expect`, 3 exhausted budget.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use orthokit::checkers::{
    check_defect_free, check_distributive, check_modular, check_modular_inequality, check_order_implies_compatible,
    check_orthomodular, check_proof_step, defect_pairs, PropertyReport,
};
use orthokit::enumerate::{enumerate_ortholattices, EnumerateError, EnumerationOptions, EnumerationSummary};
use orthokit::format::{export_dot, export_olf, parse_gdf, parse_olf};
use orthokit::generators::{gen_boolean, gen_mo, gen_o6, gen_subspace_mo, greechie_paste};
use orthokit::info::{capacity, defect_witness, CapacityError, CapacityOptions, CapacityReport, DEFAULT_NODE_BUDGET};
use orthokit::relevance::{is_relevant, strictly_greater_relevant};
use orthokit::{ElementId, OrthoLattice};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_EXPECT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "orthokit", version, about = "Finite ortholattice toolkit")]
struct Cli {
    /// Write the report to FILE instead of standard output.
    #[arg(short = 'o', long = "output", global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Summary verdicts and the defect pairs of a lattice.
    Check {
        file: PathBuf,
        #[arg(long)]
        expect: Option<Expectation>,
    },
    /// Every law with its first witness.
    Props { file: PathBuf },
    /// Pairs x < z with x⊥ ∧ z = 0.
    Defects { file: PathBuf },
    /// Which questions stay relevant with respect to A.
    Relevance { file: PathBuf, element: String },
    /// Longest relevance-preserving question sequence.
    Capacity {
        file: PathBuf,
        #[arg(long, value_name = "K")]
        max_len: Option<usize>,
        #[arg(long, value_name = "NODES", default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// A defect pair with its relevance-preserving certificate, if any.
    Witness { file: PathBuf },
    /// Build a named lattice and print it as OLF.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// All ortholattices up to a size, one class each.
    Enumerate {
        #[arg(long, value_name = "N")]
        max_size: usize,
        #[arg(long)]
        orthomodular_only: bool,
        #[arg(long, value_name = "J")]
        jobs: Option<usize>,
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        #[arg(long, value_name = "CANDIDATES")]
        budget: Option<u64>,
    },
    /// Hasse diagram in Graphviz format.
    Dot { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum Family {
    Boolean {
        k: u32,
    },
    Mo {
        m: usize,
    },
    O6,
    Subspace {
        p: u64,
    },
    Paste {
        gdf: PathBuf,
        #[arg(long)]
        allow_violations: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Expectation {
    Orthomodular,
    NonOrthomodular,
    Modular,
    NonModular,
    Distributive,
    NonDistributive,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Display) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }
}

type Report = BTreeMap<String, String>;

enum Output {
    Report(Report),
    Text(String),
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            } else {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_INPUT
            };
        }
    };
    let (output, failure) = match execute(cli.command) {
        Ok(output) => (Some(output), None),
        Err((output, failure)) => (output, Some(failure)),
    };
    if let Some(output) = output {
        let text = match output {
            Output::Report(report) => report.iter().map(|(k, v)| format!("{k} {v}\n")).collect(),
            Output::Text(text) => text,
        };
        let written = match &cli.output {
            Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
            None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
        };
        if let Err(message) = written {
            let _ = writeln!(err, "error: {message}");
            return EXIT_INPUT;
        }
    }
    match failure {
        Some(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
        None => EXIT_OK,
    }
}

/// A failure may still carry output: a report whose expectation failed, or
/// the best bound reached before a budget ran out.
type Outcome = Result<Output, (Option<Output>, Failure)>;

fn execute(command: Command) -> Outcome {
    let fail = |f: Failure| (None, f);
    match command {
        Command::Check { file, expect } => {
            let l = load(&file).map_err(fail)?;
            let report = check_report(&l);
            match expect {
                Some(e) if !expectation_holds(&report, e) => {
                    let message = format!("expected {}", e.to_possible_value().expect("named").get_name());
                    Err((
                        Some(Output::Report(report)),
                        Failure {
                            code: EXIT_EXPECT,
                            message,
                        },
                    ))
                }
                _ => Ok(Output::Report(report)),
            }
        }
        Command::Props { file } => load(&file).map(|l| Output::Report(props_report(&l))).map_err(fail),
        Command::Defects { file } => {
            let l = load(&file).map_err(fail)?;
            let defects = defect_pairs(&l);
            let mut r = Report::new();
            r.insert("count".into(), defects.len().to_string());
            r.insert("defects".into(), pair_list(&l, &defects));
            Ok(Output::Report(r))
        }
        Command::Relevance { file, element } => {
            let l = load(&file).map_err(fail)?;
            let a = l
                .find(&element)
                .ok_or_else(|| fail(Failure::input(format!("no element named {element:?}"))))?;
            let (relevant, irrelevant): (Vec<ElementId>, Vec<ElementId>) =
                l.elements().partition(|&b| is_relevant(&l, b, a));
            let mut r = Report::new();
            r.insert("element".into(), l.name(a));
            r.insert("ortho".into(), l.name(l.ortho(a)));
            r.insert("relevant".into(), element_list(&l, &relevant));
            r.insert("irrelevant".into(), element_list(&l, &irrelevant));
            r.insert(
                "strictly_greater_relevant".into(),
                element_list(&l, &strictly_greater_relevant(&l, a)),
            );
            Ok(Output::Report(r))
        }
        Command::Capacity {
            file,
            max_len,
            node_budget,
        } => {
            let l = load(&file).map_err(fail)?;
            match capacity(&l, CapacityOptions { max_len, node_budget }) {
                Ok(rep) => Ok(Output::Report(capacity_report(&l, &rep, true))),
                Err(CapacityError::BudgetExceeded { lower_bound }) => Err((
                    Some(Output::Report(capacity_report(&l, &lower_bound, false))),
                    Failure {
                        code: EXIT_BUDGET,
                        message: format!(
                            "node budget {node_budget} exhausted; capacity is at least {}",
                            lower_bound.capacity
                        ),
                    },
                )),
            }
        }
        Command::Witness { file } => {
            let l = load(&file).map_err(fail)?;
            let mut r = Report::new();
            match defect_witness(&l) {
                Some(w) => {
                    r.insert("orthomodular".into(), "false".into());
                    r.insert("lower".into(), l.name(w.lower));
                    r.insert("upper".into(), l.name(w.upper));
                    r.insert("certificate".into(), element_list(&l, w.certificate.as_slice()));
                }
                None => {
                    r.insert("orthomodular".into(), "true".into());
                    r.insert("certificate".into(), "none".into());
                }
            }
            Ok(Output::Report(r))
        }
        Command::Generate { family } => generate(family).map(|l| Output::Text(export_olf(&l))).map_err(fail),
        Command::Enumerate {
            max_size,
            orthomodular_only,
            jobs,
            out,
            budget,
        } => {
            let options = EnumerationOptions {
                jobs,
                candidate_budget: budget.unwrap_or(u64::MAX),
                ..EnumerationOptions::new(max_size)
            };
            match enumerate_ortholattices(options) {
                Ok(summary) => {
                    let summary = if orthomodular_only {
                        summary.orthomodular_only()
                    } else {
                        summary
                    };
                    if let Some(dir) = &out {
                        summary
                            .write_corpus(dir)
                            .map_err(|e| fail(Failure::input(format!("cannot write {}: {e}", dir.display()))))?;
                    }
                    Ok(Output::Report(enumerate_report(&summary)))
                }
                Err(EnumerateError::SizeCap(n)) => Err(fail(Failure::input(EnumerateError::SizeCap(n)))),
                Err(e @ EnumerateError::BudgetExceeded { .. }) => Err(fail(Failure {
                    code: EXIT_BUDGET,
                    message: e.to_string(),
                })),
            }
        }
        Command::Dot { file } => load(&file).map(|l| Output::Text(export_dot(&l))).map_err(fail),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<OrthoLattice, Failure> {
    parse_olf(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn generate(family: Family) -> Result<OrthoLattice, Failure> {
    match family {
        Family::Boolean { k } => gen_boolean(k).map_err(Failure::input),
        Family::Mo { m } => gen_mo(m).map_err(Failure::input),
        Family::O6 => Ok(gen_o6()),
        Family::Subspace { p } => gen_subspace_mo(p).map_err(Failure::input),
        Family::Paste { gdf, allow_violations } => {
            let diagram = parse_gdf(&read(&gdf)?).map_err(|e| Failure::input(format!("{}: {e}", gdf.display())))?;
            greechie_paste(&diagram, allow_violations).map_err(Failure::input)
        }
    }
}

fn element_list(l: &OrthoLattice, xs: &[ElementId]) -> String {
    if xs.is_empty() {
        return "none".into();
    }
    xs.iter().map(|&x| l.name(x)).collect::<Vec<_>>().join(";")
}

fn tuple(l: &OrthoLattice, xs: &[ElementId]) -> String {
    format!("({})", xs.iter().map(|&x| l.name(x)).collect::<Vec<_>>().join(","))
}

fn pair_list(l: &OrthoLattice, pairs: &[(ElementId, ElementId)]) -> String {
    if pairs.is_empty() {
        return "none".into();
    }
    pairs
        .iter()
        .map(|&(x, y)| tuple(l, &[x, y]))
        .collect::<Vec<_>>()
        .join(";")
}

fn check_report(l: &OrthoLattice) -> Report {
    let mut r = Report::new();
    r.insert("size".into(), l.len().to_string());
    r.insert("atoms".into(), l.atoms().len().to_string());
    r.insert("atomic".into(), l.lattice().is_atomic().to_string());
    r.insert(
        "distributive".into(),
        check_distributive(l.lattice()).verdict.to_string(),
    );
    r.insert("modular".into(), check_modular(l.lattice()).verdict.to_string());
    r.insert("orthomodular".into(), check_orthomodular(l).verdict.to_string());
    r.insert("defects".into(), pair_list(l, &defect_pairs(l)));
    r.insert("canonical".into(), l.canonical_form().digest());
    r
}

fn expectation_holds(report: &Report, e: Expectation) -> bool {
    let (key, want) = match e {
        Expectation::Orthomodular => ("orthomodular", true),
        Expectation::NonOrthomodular => ("orthomodular", false),
        Expectation::Modular => ("modular", true),
        Expectation::NonModular => ("modular", false),
        Expectation::Distributive => ("distributive", true),
        Expectation::NonDistributive => ("distributive", false),
    };
    report[key] == want.to_string()
}

fn props_report(l: &OrthoLattice) -> Report {
    let reports: [PropertyReport; 7] = [
        check_distributive(l.lattice()),
        check_modular(l.lattice()),
        check_orthomodular(l),
        check_defect_free(l),
        check_modular_inequality(l.lattice()),
        check_proof_step(l),
        check_order_implies_compatible(l),
    ];
    let mut r = Report::new();
    for rep in reports {
        let tag = rep.property.tag();
        r.insert(tag.into(), rep.verdict.to_string());
        let witness = rep.first_witness().map_or_else(|| "none".into(), |w| tuple(l, w));
        r.insert(format!("{tag}_witness"), witness);
        r.insert(format!("{tag}_violations"), rep.witnesses.len().to_string());
    }
    r
}

fn capacity_report(l: &OrthoLattice, rep: &CapacityReport, complete: bool) -> Report {
    let mut r = Report::new();
    r.insert("capacity".into(), rep.capacity.to_string());
    r.insert("measure".into(), "longest-relevance-preserving-sequence".into());
    r.insert("maximizer".into(), element_list(l, rep.maximizer.as_slice()));
    r.insert("nodes".into(), rep.nodes.to_string());
    r.insert("capped".into(), rep.capped.to_string());
    r.insert("complete".into(), complete.to_string());
    r
}

fn enumerate_report(summary: &EnumerationSummary) -> Report {
    let mut r = Report::new();
    let counts = summary.counts();
    for (size, (all, om)) in &counts {
        r.insert(format!("count{size}"), all.to_string());
        r.insert(format!("orthomodular{size}"), om.to_string());
    }
    r.insert("max_size".into(), summary.max_size.to_string());
    r.insert("total".into(), summary.classes.len().to_string());
    r.insert("candidates".into(), summary.candidates.to_string());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("orthokit").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn expectations() {
        let report = check_report(&gen_o6());
        assert!(expectation_holds(&report, Expectation::NonOrthomodular));
        assert!(expectation_holds(&report, Expectation::NonModular));
        assert!(!expectation_holds(&report, Expectation::Orthomodular));
        let report = check_report(&gen_boolean(2).unwrap());
        assert!(expectation_holds(&report, Expectation::Distributive));
    }

    #[test]
    fn lists() {
        let o6 = gen_o6();
        assert_eq!(element_list(&o6, &[]), "none");
        assert_eq!(pair_list(&o6, &defect_pairs(&o6)), "(a,b);(b',a')");
    }

    #[test]
    fn generate_prints_olf() {
        let (code, out, err) = run_str(&["generate", "o6"]);
        assert_eq!(code, EXIT_OK);
        assert!(err.is_empty());
        assert_eq!(out, export_olf(&gen_o6()));
        let (code, out, err) = run_str(&["generate", "mo", "0"]);
        assert_eq!((code, out.is_empty()), (EXIT_INPUT, true));
        assert!(err.starts_with("error: "));
    }
}
