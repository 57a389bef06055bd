//! Command-line surface: build bases, compute canonical forms, do group
//! arithmetic, and run the verification suite.
//!
//! Exit codes: 0 success, 1 verification failure or internal invariant
//! failure, 2 usage or input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use pcnil::{
    parse_word, run_verification, Collector, CommutationGraph, Error, MaltsevBasis, NormalForm,
    VerifyReport,
};

const SCHEMA: &str = "pcnil/1";

/// The bundled three-generator example: x1 > x2 > x3, single edge
/// {x1, x2}, class 3.
const EXAMPLE_GRAPH: &str = r#"{"vertices":["x3","x2","x1"],"edges":[["x1","x2"]]}"#;
const EXAMPLE_CLASS: usize = 3;
const EXAMPLE_GOLDEN: [(usize, &str); 10] = [
    (1, "x1"),
    (1, "x2"),
    (1, "x3"),
    (2, "(x1,x3)"),
    (2, "(x2,x3)"),
    (3, "(x1,(x1,x3))"),
    (3, "((x1,x3),x2)"),
    (3, "((x1,x3),x3)"),
    (3, "(x2,(x2,x3))"),
    (3, "((x2,x3),x3)"),
];

#[derive(Parser)]
#[command(
    name = "pcnil",
    version,
    about = "Commutator bases and canonical forms for partially commutative nilpotent groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the ordered commutator basis, grouped by weight
    Basis {
        /// Graph description file (JSON)
        #[arg(long)]
        graph: PathBuf,
        /// Nilpotency class (maximal commutator weight)
        #[arg(long)]
        class: usize,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Canonical form of a word
    Nf {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        class: usize,
        /// Word over the generators, e.g. "x1^2 [x1,x3] x2^-1"
        #[arg(long)]
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Product of two words, as a canonical form
    Mul {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        class: usize,
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Inverse of a word, as a canonical form
    Inv {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        class: usize,
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Commutator of two words, as a canonical form
    Comm {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        class: usize,
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Integer power of a word, as a canonical form
    Pow {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        class: usize,
        word: String,
        #[arg(allow_negative_numbers = true)]
        exponent: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the counting, consistency, and round-trip checks
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        class: usize,
        /// Number of random trials
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Seed for the trial generator
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Build the bundled example and check it against its golden basis
    Example {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Serialize)]
struct ElementJson {
    weight: usize,
    foliage: String,
    tree: String,
}

#[derive(Serialize)]
struct BasisJson {
    schema: &'static str,
    class: usize,
    elements: Vec<ElementJson>,
}

#[derive(Serialize)]
struct TermJson {
    commutator: String,
    exponent: String,
}

#[derive(Serialize)]
struct NfJson {
    schema: &'static str,
    class: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize)]
struct VerifyJson {
    schema: &'static str,
    #[serde(flatten)]
    report: VerifyReport,
    pass: bool,
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// Input and usage problems exit 2; anything that indicates a failed
/// check or broken invariant exits 1.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::GraphDocument(_)
        | Error::DuplicateVertex(_)
        | Error::BadVertexSymbol(_)
        | Error::LoopEdge(_)
        | Error::UnknownEdgeEndpoint(_)
        | Error::UnknownVertex(_)
        | Error::WordSyntax { .. }
        | Error::ClassTooSmall => 2,
        _ => 1,
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Basis { graph, class, json } => {
            let basis = load_basis(&graph, class)?;
            print_basis(&basis, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Nf {
            graph,
            class,
            word,
            json,
        } => {
            let collector = Collector::new(load_basis(&graph, class)?)?;
            let nf = collector.collect(&parse_word(collector.graph(), &word)?)?;
            print_nf(&nf, class, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Mul {
            graph,
            class,
            left,
            right,
            json,
        } => {
            let collector = Collector::new(load_basis(&graph, class)?)?;
            let g = collector.graph();
            let a = collector.collect(&parse_word(g, &left)?)?;
            let b = collector.collect(&parse_word(g, &right)?)?;
            print_nf(&collector.nf_mul(&a, &b)?, class, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Inv {
            graph,
            class,
            word,
            json,
        } => {
            let collector = Collector::new(load_basis(&graph, class)?)?;
            let a = collector.collect(&parse_word(collector.graph(), &word)?)?;
            print_nf(&collector.nf_inv(&a)?, class, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Comm {
            graph,
            class,
            left,
            right,
            json,
        } => {
            let collector = Collector::new(load_basis(&graph, class)?)?;
            let g = collector.graph();
            let a = collector.collect(&parse_word(g, &left)?)?;
            let b = collector.collect(&parse_word(g, &right)?)?;
            print_nf(&collector.nf_comm(&a, &b)?, class, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Pow {
            graph,
            class,
            word,
            exponent,
            json,
        } => {
            let collector = Collector::new(load_basis(&graph, class)?)?;
            let e = BigInt::from_str(&exponent).map_err(|_| Error::WordSyntax {
                position: 0,
                message: format!("invalid integer exponent `{exponent}`"),
            })?;
            let a = collector.collect(&parse_word(collector.graph(), &word)?)?;
            print_nf(&collector.nf_pow(&a, &e)?, class, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            graph,
            class,
            trials,
            seed,
            json,
        } => {
            let g = load_graph(&graph)?;
            let report = run_verification(&g, class, trials, seed)?;
            let pass = report.pass();
            print_verify(&report, json);
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Example { json } => {
            let g = CommutationGraph::parse(EXAMPLE_GRAPH)?;
            let basis = MaltsevBasis::construct(&g, EXAMPLE_CLASS)?;
            print_basis(&basis, json);
            if golden_matches(&basis, &EXAMPLE_GOLDEN) {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("error: basis does not match the golden listing");
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn load_graph(path: &Path) -> Result<CommutationGraph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::GraphDocument(format!("{}: {e}", path.display())))?;
    CommutationGraph::parse(&text)
}

fn load_basis(path: &Path, class: usize) -> Result<MaltsevBasis, Error> {
    MaltsevBasis::construct(&load_graph(path)?, class)
}

fn golden_matches(basis: &MaltsevBasis, golden: &[(usize, &str)]) -> bool {
    let g = basis.graph();
    basis.len() == golden.len()
        && basis
            .elements()
            .iter()
            .zip(golden)
            .all(|(e, (w, tree))| e.weight == *w && e.tree.format(g) == *tree)
}

fn print_basis(basis: &MaltsevBasis, json: bool) {
    let g = basis.graph();
    if json {
        let out = BasisJson {
            schema: SCHEMA,
            class: basis.class(),
            elements: basis
                .elements()
                .iter()
                .map(|e| ElementJson {
                    weight: e.weight,
                    foliage: pcnil::format_word(g, &e.foliage),
                    tree: e.tree.format(g),
                })
                .collect(),
        };
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
        return;
    }
    for k in 1..=basis.class() {
        let trees: Vec<String> = basis.segment(k).iter().map(|e| e.tree.format(g)).collect();
        println!("weight {k}: {}", trees.join(", "));
    }
    println!("total: {}", basis.len());
}

fn print_nf(nf: &NormalForm, class: usize, json: bool) {
    if json {
        let g = nf.basis().graph();
        let out = NfJson {
            schema: SCHEMA,
            class,
            terms: nf
                .nonzero_terms()
                .map(|(e, t)| TermJson {
                    commutator: e.tree.format(g),
                    exponent: t.to_string(),
                })
                .collect(),
        };
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
        return;
    }
    println!("{}", nf.format());
}

fn print_verify(report: &VerifyReport, json: bool) {
    if json {
        let out = VerifyJson {
            schema: SCHEMA,
            report: report.clone(),
            pass: report.pass(),
        };
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
        return;
    }
    for d in &report.degrees {
        println!(
            "degree {}: als={} standard={} basis={} rank={} {}",
            d.degree,
            d.als_count,
            d.standard_count,
            d.basis_count,
            d.oracle_rank,
            if d.pass { "ok" } else { "MISMATCH" }
        );
    }
    println!(
        "trials: {} run, {} failures",
        report.round_trips_run, report.failures
    );
    println!("{}", if report.pass() { "PASS" } else { "FAIL" });
}
