//! The `homrel` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error, 3 failed defensive
//! check.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::document::{digest, TreeDocument};
use crate::error::Error;
use crate::factperm::{self, FactoringPermutation, ScanOptions};
use crate::good::{self, DecomposeOptions};
use crate::relation::{from_digraph, from_two_structure, HomogeneousRelation};
use crate::{axioms, gen, io, modules, oracle, recognize, strong};

#[derive(Debug, Parser)]
#[command(name = "homrel", version, about = "Modular decomposition of homogeneous relations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the decomposition tree of a relation.
    Decompose(DecomposeArgs),
    /// Report which axioms hold, with counterexamples.
    Check(InputArgs),
    /// Decide whether a relation comes from a graph or a tournament.
    Recognize(RecognizeArgs),
    /// Exhaustive module enumeration for small inputs.
    Oracle(InputArgs),
    /// Write a seeded random input file.
    Gen(GenArgs),
    /// List the elements splitting a subset.
    Splitters(SplittersArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    /// Undirected edge list.
    Graph,
    /// Directed arc list.
    Digraph,
    /// Directed arc list of a tournament.
    Tournament,
    /// Relation matrix.
    Relation,
    /// Colour matrix.
    TwoStructure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Good,
    StrongEnum,
    Factperm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Graph,
    Digraph,
    Tournament,
    Relation,
    TwoStructure,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file, or `-` for standard input.
    pub file: PathBuf,
    #[arg(long, value_enum, default_value = "graph")]
    pub input: InputKind,
    /// Comma-separated element names, in index order.
    #[arg(long)]
    pub labels: Option<String>,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "good")]
    pub algo: Algorithm,
    /// Factoring permutation as a comma-separated element list.
    #[arg(long)]
    pub perm: Option<String>,
    /// Run the extra consistency checks.
    #[arg(long)]
    pub defensive: bool,
    /// Record wall-clock timings in the output.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct RecognizeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Where to write the reconstructed graph; printed otherwise.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(long)]
    pub n: usize,
    /// Edge or arc probability.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Classes per element for random relations.
    #[arg(long, default_value_t = 3)]
    pub classes: u32,
    /// Colours for random 2-structures.
    #[arg(long, default_value_t = 3)]
    pub colors: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SplittersArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Comma-separated elements of the subset.
    #[arg(long)]
    pub subset: String,
}

/// Failure of a command after argument parsing.
#[derive(Debug)]
enum Failure {
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotGood(_) | Error::InvalidPermutation(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the CLI on process arguments and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                1
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Decompose(a) => decompose(a, out),
        Command::Check(a) => check(a, out),
        Command::Recognize(a) => recognize_cmd(a, out),
        Command::Oracle(a) => oracle_cmd(a, out),
        Command::Gen(a) => gen_cmd(a, out),
        Command::Splitters(a) => splitters(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            3
        }
    }
}

/// A parsed input with its element names and content hash.
struct Loaded {
    h: HomogeneousRelation,
    graph: Option<crate::relation::Digraph>,
    labels: Vec<String>,
    hash: String,
}

impl Loaded {
    fn name(&self, e: usize) -> &str {
        &self.labels[e]
    }

    fn names(&self, elems: &[usize]) -> String {
        elems.iter().map(|&e| self.name(e)).collect::<Vec<_>>().join(",")
    }

    /// Resolves a comma-separated list of element names or indices.
    fn elements(&self, list: &str) -> std::result::Result<Vec<usize>, Failure> {
        list.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                self.labels
                    .iter()
                    .position(|l| l == t)
                    .or_else(|| t.parse().ok().filter(|&i: &usize| i < self.labels.len()))
                    .ok_or_else(|| Failure::Input(format!("unknown element `{t}`")))
            })
            .collect()
    }
}

fn read_input(path: &PathBuf) -> std::result::Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn load(args: &InputArgs) -> std::result::Result<Loaded, Failure> {
    let text = read_input(&args.file)?;
    let (h, graph) = match args.input {
        InputKind::Graph => {
            let g = io::parse_digraph(&text, true)?;
            (from_digraph(&g), Some(g))
        }
        InputKind::Digraph => {
            let g = io::parse_digraph(&text, false)?;
            (from_digraph(&g), Some(g))
        }
        InputKind::Tournament => {
            let g = io::parse_digraph(&text, false)?;
            if !g.is_tournament() {
                return Err(Failure::Input("input is not a tournament".into()));
            }
            (from_digraph(&g), Some(g))
        }
        InputKind::Relation => (io::parse_relation(&text)?, None),
        InputKind::TwoStructure => (from_two_structure(&io::parse_two_structure(&text)?), None),
    };
    let n = h.len();
    let labels: Vec<String> = match &args.labels {
        Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
        None => (0..n).map(|e| e.to_string()).collect(),
    };
    if labels.len() != n {
        return Err(Failure::Input(format!("{} labels given for {n} elements", labels.len())));
    }
    let mut sorted = labels.clone();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) || labels.iter().any(|l| l.is_empty() || l.contains(char::is_whitespace)) {
        return Err(Failure::Input("labels must be distinct and contain no whitespace".into()));
    }
    Ok(Loaded { h, graph, labels, hash: digest(text.as_bytes()) })
}

fn decompose(args: &DecomposeArgs, out: &mut dyn Write) -> Outcome {
    let input = load(&args.input)?;
    let h = &input.h;
    if h.is_empty() {
        return Err(Failure::Input("empty ground set".into()));
    }
    let start = Instant::now();
    let algo_name = match args.algo {
        Algorithm::Good => "good",
        Algorithm::StrongEnum => "strong-enum",
        Algorithm::Factperm => "factperm",
    };
    let mut doc = match args.algo {
        Algorithm::Good => {
            let mut tree = good::decompose_with(h, DecomposeOptions { defensive: args.defensive })?;
            tree.canonicalize();
            TreeDocument::from_tree(&tree, &input.labels, algo_name, &input.hash)
        }
        Algorithm::StrongEnum => {
            let tree = strong::strong_modules(h);
            TreeDocument::from_generalized(&tree, &input.labels, algo_name, &input.hash)
        }
        Algorithm::Factperm => {
            let sigma = match (&args.perm, &input.graph) {
                (Some(list), _) => FactoringPermutation::new(input.elements(list)?)
                    .map_err(|e| Failure::Input(e.to_string()))?,
                (None, Some(g)) if args.input.input == InputKind::Tournament => {
                    factperm::tournament_factoring_permutation(g)?
                }
                (None, _) => return Err(Failure::Input("--perm is required unless the input is a tournament".into())),
            };
            let opts = ScanOptions { check_invariant: false, validate_modules: args.defensive };
            let tree = factperm::tree_from_permutation_with(h, &sigma, opts)?;
            TreeDocument::from_generalized(&tree, &input.labels, algo_name, &input.hash)
        }
    };
    if args.timings {
        doc.timings.push(("decompose".into(), start.elapsed().as_secs_f64() * 1e3));
    }
    out.write_all(doc.render().as_bytes())?;
    Ok(())
}

fn check(args: &InputArgs, out: &mut dyn Write) -> Outcome {
    let input = load(args)?;
    let report = axioms::check_axioms(&input.h);
    let mut text = String::new();
    match report.weakly_graphic {
        None => text.push_str("weakly_graphic=true\n"),
        Some(w) => text.push_str(&format!("weakly_graphic=false witness={}\n", input.names(&w))),
    }
    match report.weakly_digraphic {
        None => text.push_str("weakly_digraphic=true\n"),
        Some(w) => text.push_str(&format!("weakly_digraphic=false witness={}\n", input.names(&w))),
    }
    let mq = &report.modular_quotient;
    match &mq.witness {
        None => text.push_str(&format!("modular_quotient=true exact={}\n", mq.exact)),
        Some(w) => text.push_str(&format!(
            "modular_quotient=false exact={} module={} members={} pair={}\n",
            mq.exact,
            input.names(&w.module),
            input.names(&[w.x, w.y]),
            input.names(&[w.s, w.t]),
        )),
    }
    match report.local_congruence {
        Some(k) => text.push_str(&format!("local_congruence={k}\n")),
        None => text.push_str("local_congruence=none\n"),
    }
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn recognize_cmd(args: &RecognizeArgs, out: &mut dyn Write) -> Outcome {
    let input = load(&args.input)?;
    let graph = recognize::recognize_graphic(&input.h);
    let tournament = recognize::recognize_tournamental(&input.h);
    writeln!(out, "graphic={}", graph.is_some())?;
    writeln!(out, "tournamental={}", tournament.is_some())?;
    let file = match (&graph, &tournament) {
        (Some(g), _) => Some(io::write_digraph(g, true)),
        (None, Some(t)) => Some(io::write_digraph(t, false)),
        (None, None) => None,
    };
    if let Some(file) = file {
        match &args.output {
            Some(path) => std::fs::write(path, file).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
            None => out.write_all(file.as_bytes())?,
        }
    }
    Ok(())
}

fn oracle_cmd(args: &InputArgs, out: &mut dyn Write) -> Outcome {
    let input = load(args)?;
    let report = oracle::all_modules(&input.h)?;
    writeln!(out, "modules={}", report.modules.len())?;
    writeln!(out, "strong={}", report.strong.len())?;
    writeln!(out, "prime={}", report.is_prime())?;
    let mut tree = report.tree.clone();
    tree.canonicalize();
    let doc = TreeDocument::from_tree(&tree, &input.labels, "oracle", &input.hash);
    out.write_all(doc.render().as_bytes())?;
    Ok(())
}

fn gen_cmd(args: &GenArgs, out: &mut dyn Write) -> Outcome {
    if !(0.0..=1.0).contains(&args.p) {
        return Err(Failure::Input("--p must lie in [0, 1]".into()));
    }
    let text = match args.kind {
        GenKind::Graph => io::write_digraph(&gen::random_graph(args.n, args.p, args.seed), true),
        GenKind::Digraph => io::write_digraph(&gen::random_digraph(args.n, args.p, args.seed), false),
        GenKind::Tournament => io::write_digraph(&gen::random_tournament(args.n, args.seed), false),
        GenKind::Relation => {
            if args.classes == 0 {
                return Err(Failure::Input("--classes must be positive".into()));
            }
            io::write_relation(&gen::random_relation(args.n, args.classes, args.seed))
        }
        GenKind::TwoStructure => {
            if args.colors == 0 {
                return Err(Failure::Input("--colors must be positive".into()));
            }
            io::write_two_structure(&gen::random_two_structure(args.n, args.colors, args.seed))
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn splitters(args: &SplittersArgs, out: &mut dyn Write) -> Outcome {
    let input = load(&args.input)?;
    let subset = input.elements(&args.subset)?;
    let report = modules::splitters(&input.h, &subset)?;
    writeln!(out, "subset={}", input.names(&report.subset))?;
    writeln!(out, "splitters={}", input.names(&report.splitters))?;
    writeln!(out, "count={}", report.count)?;
    writeln!(out, "module={}", report.count == 0)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> String {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(args, &mut out, &mut err);
        assert_eq!(code, 0, "stderr: {}", String::from_utf8_lossy(&err));
        String::from_utf8(out).unwrap()
    }

    fn exit_code(args: &[&str]) -> i32 {
        run_with(args, &mut Vec::new(), &mut Vec::new())
    }

    #[test]
    fn usage_errors_exit_with_one() {
        assert_eq!(exit_code(&["homrel"]), 1);
        assert_eq!(exit_code(&["homrel", "frobnicate"]), 1);
        assert_eq!(exit_code(&["homrel", "gen", "graph"]), 1);
        assert_eq!(exit_code(&["homrel", "--help"]), 0);
    }

    #[test]
    fn missing_file_is_an_input_error() {
        assert_eq!(exit_code(&["homrel", "check", "/nonexistent/file"]), 2);
    }

    #[test]
    fn gen_is_deterministic() {
        let a = run_ok(&["homrel", "gen", "tournament", "--n", "6", "--seed", "4"]);
        let b = run_ok(&["homrel", "gen", "tournament", "--n", "6", "--seed", "4"]);
        assert_eq!(a, b);
        assert!(a.starts_with("6 15\n"));
        assert_eq!(exit_code(&["homrel", "gen", "graph", "--n", "3", "--p", "2"]), 2);
    }
}
