//! Command-line front end. [`run`] is the whole program minus process
//! setup, so it can be driven from tests.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::catalog::named_graph;
use crate::enumeration::{
    are_isomorphic, enumerate_nonisomorphic, expected_counts, find_min_imperfect, table1, GraphSource,
};
use crate::error::{Error, Result};
use crate::game::{
    self, domination_number, optimal_first_moves, total_domination_number, GameVariant, Mover,
};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{parse_graph6, write_graph6};
use crate::perfection::{
    brute_force_gg_perfect, build, check_psc, classify_with, mhc_contraction, recognize_gg_perfect,
    BuildScript, Certificate, CliqueFamily, ClassificationReport, ContractionReport,
};

/// Largest order accepted by `--oracle`.
pub const ORACLE_MAX: usize = 7;

#[derive(Debug, Parser)]
#[command(name = "domgame", version, about = "Domination game solver and game-perfect graph recognizer")]
pub struct Cli {
    /// Refuse solver calls on graphs with more vertices than this.
    #[arg(long, global = true, default_value_t = 24)]
    pub max_n: usize,

    /// Worker threads for stream commands (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph as a graph6 line.
    #[arg(long, conflicts_with_all = ["edges", "name"])]
    pub graph6: Option<String>,

    /// Graph as "n; u v; u v; ...".
    #[arg(long, conflicts_with = "name")]
    pub edges: Option<String>,

    /// Catalog graph such as P5, C6, K3,3, F2, co-domino, antihole7.
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Args)]
pub struct StreamInput {
    /// Order of the builtin stream.
    #[arg(long)]
    pub n: Option<usize>,

    /// Read graphs from a graph6 file instead.
    #[arg(long)]
    pub graph6_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Domination numbers and a game value.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "dom", value_parser = ["dom", "total"])]
        variant: String,
        #[arg(long, default_value = "d", value_parser = ["d", "s"])]
        mover: String,
        /// Cross-check against unmemoised minimax.
        #[arg(long)]
        oracle: bool,
    },
    /// All perfection verdicts for one graph.
    Classify {
        #[command(flatten)]
        input: GraphInput,
        /// Print the construction script on a positive verdict.
        #[arg(long)]
        certificate: bool,
        /// Shrink to a minimal obstruction when no catalog graph is found.
        #[arg(long)]
        shrink: bool,
        /// Cross-check against the subgraph-enumeration definition.
        #[arg(long)]
        oracle: bool,
    },
    /// Twin-class contraction.
    Contract {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Replay a construction script (file or stdin) and print the graph.
    Build {
        script: Option<PathBuf>,
        /// Also run the recognizer on the result.
        #[arg(long)]
        verify: bool,
    },
    /// Check a clique family such as "0;3" or "0,1;5,6".
    CheckPsc {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        family: String,
    },
    /// Print all graphs on n vertices, one graph6 line each.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Perfection counts for one order.
    Table1 {
        #[command(flatten)]
        stream: StreamInput,
        /// Compare with the published counts.
        #[arg(long)]
        check: bool,
    },
    /// List the minimally imperfect graphs of a stream.
    HuntImperfect {
        #[command(flatten)]
        stream: StreamInput,
    },
    /// Decide isomorphism. Each argument is graph6, an edge list, or name:<catalog name>.
    Iso { first: String, second: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub n: usize,
    pub gamma: usize,
    pub gamma_t: Option<usize>,
    pub variant: GameVariant,
    pub first: Mover,
    pub value: usize,
    pub optimal_first_moves: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle_value: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntEntry {
    pub graph6: String,
    pub name: Option<String>,
}

/// Reads a graph given as graph6, an edge list (`;`-separated or a bare
/// vertex count) or `name:<catalog name>`.
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    if let Some(name) = spec.strip_prefix("name:") {
        return named_graph(name);
    }
    if spec.contains(';') || (!spec.is_empty() && spec.bytes().all(|b| b.is_ascii_digit())) {
        return Graph::parse_edge_list(spec);
    }
    parse_graph6(spec)
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

/// Exit status of a finished command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Ok,
    CheckFailed,
}

fn read_input(input: &GraphInput, io: &mut Io) -> Result<Graph> {
    if let Some(s) = &input.graph6 {
        return parse_graph6(s);
    }
    if let Some(s) = &input.edges {
        return Graph::parse_edge_list(s);
    }
    if let Some(s) = &input.name {
        return named_graph(s);
    }
    let mut text = String::new();
    io.stdin
        .read_to_string(&mut text)
        .map_err(|source| Error::Io { path: "<stdin>".into(), source })?;
    let line = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match line {
        Some(l) => parse_graph_spec(l),
        None => Err(Error::InvalidArgument("no graph given (use --graph6, --edges, --name or stdin)".into())),
    }
}

fn guard(g: &Graph, max_n: usize) -> Result<()> {
    if g.n() > max_n {
        return Err(Error::InvalidArgument(format!(
            "graph has {} vertices, above --max-n {max_n}",
            g.n()
        )));
    }
    Ok(())
}

fn source_of(stream: &StreamInput) -> Result<GraphSource> {
    match (&stream.graph6_file, stream.n) {
        (Some(path), _) => Ok(GraphSource::Graph6File(path.clone())),
        (None, Some(n)) if n <= crate::enumeration::BUILTIN_MAX => Ok(GraphSource::Builtin(n)),
        (None, Some(n)) => Err(Error::EnumerationRange { n, max: crate::enumeration::BUILTIN_MAX }),
        (None, None) => Err(Error::InvalidArgument("give --n or --graph6-file".into())),
    }
}

fn json_line<T: Serialize>(io: &mut Io, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("reports serialise");
    say(io, &text)
}

fn say(io: &mut Io, text: &str) -> Result<()> {
    writeln!(io.out, "{text}").map_err(|source| Error::Io { path: "<stdout>".into(), source })
}

fn join(set: impl IntoIterator<Item = usize>) -> String {
    set.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_yes_no(b: Option<bool>) -> &'static str {
    b.map_or("n/a", yes_no)
}

fn graph_text(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| g.to_edge_list())
}

fn solve(cli: &Cli, input: &GraphInput, variant: &str, mover: &str, oracle: bool, io: &mut Io) -> Result<Status> {
    let g = read_input(input, io)?;
    guard(&g, cli.max_n)?;
    let variant: GameVariant = variant.parse()?;
    let first: Mover = mover.parse()?;
    let value = game::game_value(&g, variant, first)?;
    let moves = if g.n() == 0 { VertexSet::EMPTY } else { optimal_first_moves(&g, variant, first)? };
    let oracle_value = if oracle {
        if g.n() > ORACLE_MAX {
            return Err(Error::InvalidArgument(format!("--oracle supports n <= {ORACLE_MAX}")));
        }
        Some(game::oracle::naive_value(&g, variant, VertexSet::EMPTY, first))
    } else {
        None
    };
    let report = SolveReport {
        n: g.n(),
        gamma: domination_number(&g),
        gamma_t: total_domination_number(&g).ok(),
        variant,
        first,
        value,
        optimal_first_moves: moves.to_vec(),
        oracle_value,
    };
    if cli.json {
        json_line(io, &report)?;
    } else {
        say(io, &format!("n: {}", report.n))?;
        say(io, &format!("gamma: {}", report.gamma))?;
        if let Some(t) = report.gamma_t {
            say(io, &format!("gamma_t: {t}"))?;
        }
        say(io, &format!("game: {variant}, {first} starts"))?;
        say(io, &format!("value: {value}"))?;
        say(io, &format!("optimal first moves: {}", join(report.optimal_first_moves.iter().copied())))?;
        if let Some(o) = oracle_value {
            say(io, &format!("oracle value: {o}"))?;
        }
    }
    Ok(if oracle_value.is_some_and(|o| o != value) { Status::CheckFailed } else { Status::Ok })
}

fn render_report(r: &ClassificationReport, certificate: bool, io: &mut Io) -> Result<()> {
    say(io, &format!("n: {}", r.n))?;
    say(io, &format!("gamma_g-perfect: {}", yes_no(r.gg_perfect)))?;
    say(io, &format!("2-gamma_g-perfect: {}", yes_no(r.two_gg_perfect)))?;
    say(io, &format!("gamma'_g-perfect: {}", yes_no(r.gg_prime_perfect)))?;
    say(io, &format!("gamma_tg-perfect: {}", opt_yes_no(r.tg_perfect)))?;
    say(io, &format!("gamma'_tg-perfect: {}", opt_yes_no(r.tg_prime_perfect)))?;
    say(io, &format!("min-imperfect: {}", yes_no(r.min_imperfect)))?;
    if let Some(hit) = &r.forbidden {
        say(io, &format!("forbidden: {} on {}", hit.name, join(hit.vertices.iter().copied())))?;
    }
    match &r.certificate {
        Certificate::Build { script, order } if certificate => {
            say(io, &format!("order: {}", join(order.iter().copied())))?;
            say(io, "script:")?;
            for step in &script.steps {
                say(io, &format!("  {step}"))?;
            }
        }
        Certificate::Failure { stage } => {
            say(io, &format!("failure: {}", serde_json::to_string(stage).expect("serialisable")))?;
        }
        _ => {}
    }
    Ok(())
}

fn run_command(cli: &Cli, io: &mut Io) -> Result<Status> {
    match &cli.command {
        Command::Solve { input, variant, mover, oracle } => solve(cli, input, variant, mover, *oracle, io),
        Command::Classify { input, certificate, shrink, oracle } => {
            let g = read_input(input, io)?;
            guard(&g, cli.max_n)?;
            if *oracle && g.n() > ORACLE_MAX {
                return Err(Error::InvalidArgument(format!("--oracle supports n <= {ORACLE_MAX}")));
            }
            let report = classify_with(&g, *shrink);
            let agrees = !*oracle || brute_force_gg_perfect(&g) == report.gg_perfect;
            if cli.json {
                json_line(io, &report)?;
            } else {
                render_report(&report, *certificate, io)?;
                if *oracle {
                    say(io, &format!("oracle agrees: {}", yes_no(agrees)))?;
                }
            }
            Ok(if agrees { Status::Ok } else { Status::CheckFailed })
        }
        Command::Contract { input } => {
            let g = read_input(input, io)?;
            let map = mhc_contraction(&g);
            let report: ContractionReport = map.report();
            if cli.json {
                json_line(io, &report)?;
            } else {
                for (i, class) in report.classes.iter().enumerate() {
                    say(io, &format!("class {i}: {}", join(class.iter().copied())))?;
                }
                say(io, &format!("contracted: {}", graph_text(map.contracted())))?;
            }
            Ok(Status::Ok)
        }
        Command::Build { script, verify } => {
            let text = match script {
                Some(path) => std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.clone(), source })?,
                None => {
                    let mut s = String::new();
                    io.stdin.read_to_string(&mut s).map_err(|source| Error::Io { path: "<stdin>".into(), source })?;
                    s
                }
            };
            let script: BuildScript = text.parse()?;
            let g = build(&script)?;
            let perfect = verify.then(|| recognize_gg_perfect(&g).perfect);
            if cli.json {
                #[derive(Serialize)]
                struct Built {
                    graph6: String,
                    edges: String,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    recognized: Option<bool>,
                }
                json_line(io, &Built { graph6: graph_text(&g), edges: g.to_edge_list(), recognized: perfect })?;
            } else {
                say(io, &graph_text(&g))?;
                if let Some(p) = perfect {
                    say(io, &format!("recognized: {}", yes_no(p)))?;
                }
            }
            Ok(if perfect == Some(false) { Status::CheckFailed } else { Status::Ok })
        }
        Command::CheckPsc { input, family } => {
            let g = read_input(input, io)?;
            let family: CliqueFamily = family.parse()?;
            let verdict = check_psc(&g, &family);
            if cli.json {
                #[derive(Serialize)]
                struct Psc<'a> {
                    psc: bool,
                    violation: Option<&'a crate::perfection::PscViolation>,
                }
                json_line(io, &Psc { psc: verdict.is_ok(), violation: verdict.as_ref().err() })?;
            } else {
                match &verdict {
                    Ok(()) => say(io, "psc: yes")?,
                    Err(v) => say(io, &format!("psc: no ({v})"))?,
                }
            }
            Ok(Status::Ok)
        }
        Command::Enumerate { n } => {
            for g in enumerate_nonisomorphic(*n)? {
                say(io, &graph_text(&g))?;
            }
            Ok(Status::Ok)
        }
        Command::Table1 { stream, check } => {
            let source = source_of(stream)?;
            let row = table1(&source, cli.jobs)?;
            if cli.json {
                json_line(io, &row)?;
            } else {
                say(io, "n\tperfect_all\tperfect_connected\tmin_imperfect")?;
                say(io, &row.tsv())?;
            }
            if !*check {
                return Ok(Status::Ok);
            }
            let Some(expected) = expected_counts(row.n) else {
                return Err(Error::InvalidArgument(format!("no published counts for n = {}", row.n)));
            };
            if row == expected {
                if !cli.json {
                    say(io, "check: pass")?;
                }
                Ok(Status::Ok)
            } else {
                if !cli.json {
                    say(io, &format!("check: FAIL, expected {}", expected.tsv()))?;
                }
                Ok(Status::CheckFailed)
            }
        }
        Command::HuntImperfect { stream } => {
            let found = find_min_imperfect(&source_of(stream)?, cli.jobs)?;
            let entries: Vec<HuntEntry> =
                found.iter().map(|m| HuntEntry { graph6: graph_text(&m.graph), name: m.name.clone() }).collect();
            if cli.json {
                json_line(io, &entries)?;
            } else {
                for e in &entries {
                    say(io, &format!("{}\t{}", e.graph6, e.name.as_deref().unwrap_or("unnamed")))?;
                }
            }
            Ok(Status::Ok)
        }
        Command::Iso { first, second } => {
            let iso = are_isomorphic(&parse_graph_spec(first)?, &parse_graph_spec(second)?);
            if cli.json {
                json_line(io, &serde_json::json!({ "isomorphic": iso }))?;
            } else {
                say(io, yes_no(iso))?;
            }
            Ok(Status::Ok)
        }
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code: 0 on success, 1 when a check or oracle disagrees, 2 on errors.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(stderr, "{}", e.render()) } else { write!(stdout, "{}", e.render()) };
            return code;
        }
    };
    let mut io = Io { stdin, out: stdout };
    match run_command(&cli, &mut io) {
        Ok(Status::Ok) => 0,
        Ok(Status::CheckFailed) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
