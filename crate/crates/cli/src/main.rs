use std::fs::{self, File};
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use c4free::coloring::{color_within_bound, verify_coloring, OracleBudget};
use c4free::decompose::{build_decomposition_tree, forbidden_witness};
use c4free::harness::{
    coloring_suite, run_sweep, Check, HarnessError, Source, SweepConfig, SweepReport,
};
use c4free::patterns::{find_hole, find_induced};
use c4free::verify::{
    check_bull_homogeneous_clique, check_bull_structure, check_centred_hole,
    check_consecutive_neighbours, check_hammer_structure,
};
use c4free::{Graph, Pattern, Variant};

/// Exit status when a check or bound fails.
const EXIT_FAILED: u8 = 1;
/// Exit status for semantic errors (bad graph, class violation, ...).
const EXIT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "c4free",
    version,
    about = "Decompose, colour and verify (C4, bull)-free and (C4, hammer)-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Look for an induced copy of a pattern (or a hole).
    Detect {
        #[command(flatten)]
        input: Input,
        /// P<t>, C<t>, K<t>, bull, hammer, T1, T2, T3 or hole.
        #[arg(long)]
        pattern: String,
    },
    /// Print the decomposition tree.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        variant: Variant,
    },
    /// Colour within the variant's bound.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        variant: Variant,
        /// Colours available for triangle-free members of the class.
        #[arg(long)]
        k: usize,
    },
    /// Run structural checks on one graph.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Repeatable; defaults to every structural check.
        #[arg(long = "check")]
        checks: Vec<Check>,
    },
    /// Run checks over a graph6 stream or the built-in generator.
    Sweep {
        /// graph6 file, or - for stdin. Without it, all connected graphs up
        /// to --max-n vertices are generated.
        #[arg(long)]
        source: Option<String>,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long = "filter")]
        filters: Vec<Pattern>,
        #[arg(long = "check", required = true)]
        checks: Vec<Check>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        connected: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write one JSON line per check result here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a named colouring suite over generated connected graphs.
    Suite {
        /// P6-hammer, P6-bull, P8-*, T1-*, T2-*, T3-* or tree-<T>-<variant>.
        name: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// A graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// A file whose first non-empty line is graph6.
    #[arg(long)]
    g6_file: Option<PathBuf>,
    /// An edge-list file ("n m" then one "u v" per line), or - for stdin.
    #[arg(long)]
    edge_list: Option<String>,
}

struct Failure {
    kind: &'static str,
    message: String,
}

impl Failure {
    fn new(kind: &'static str, message: impl ToString) -> Self {
        Failure {
            kind,
            message: message.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new("io", e)
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        Failure::new("sweep", e)
    }
}

fn read_input(input: &Input) -> Result<Graph, Failure> {
    if let Some(code) = &input.g6 {
        return Graph::from_graph6(code).map_err(|e| Failure::new("graph6", e));
    }
    if let Some(path) = &input.g6_file {
        let text = fs::read_to_string(path)?;
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        return Graph::from_graph6(line).map_err(|e| Failure::new("graph6", e));
    }
    let path = input.edge_list.as_deref().expect("clap enforces one input");
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path)?
    };
    Graph::parse_edge_list(&text).map_err(|e| Failure::new("edge-list", e))
}

fn print_json(v: &Value) -> io::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, v)?;
    out.write_all(b"\n")
}

fn detect(g: &Graph, pattern: &str) -> Result<Value, Failure> {
    if pattern == "hole" {
        let hole = find_hole(g);
        return Ok(
            json!({"pattern": "hole", "found": hole.is_some(), "embedding": hole.map(|h| h.vertices)}),
        );
    }
    let p: Pattern = pattern.parse().map_err(|e| Failure::new("pattern", e))?;
    let e = find_induced(g, p);
    Ok(json!({"pattern": p, "found": e.is_some(), "embedding": e}))
}

fn verify(g: &Graph, checks: &[Check]) -> Result<(Vec<Value>, bool), Failure> {
    let defaults = [
        Check::HammerStructure,
        Check::BullStructure,
        Check::CentredHole,
        Check::HomogeneousClique,
        Check::ConsecutiveNeighbours,
    ];
    let checks = if checks.is_empty() {
        &defaults[..]
    } else {
        checks
    };
    let mut entries = Vec::new();
    for &c in checks {
        match c {
            Check::HammerStructure => entries.push(check_hammer_structure(g)),
            Check::BullStructure => entries.push(check_bull_structure(g)),
            Check::CentredHole => {
                entries.push(check_centred_hole(g, Variant::Bull));
                entries.push(check_centred_hole(g, Variant::Hammer));
            }
            Check::CentredHoleFor(v) => entries.push(check_centred_hole(g, v)),
            Check::HomogeneousClique => entries.push(check_bull_homogeneous_clique(g)),
            Check::ConsecutiveNeighbours => entries.push(check_consecutive_neighbours(g)),
            Check::Color(_) => {
                return Err(Failure::new(
                    "usage",
                    "colour checks run through `color` or `sweep`",
                ))
            }
        }
    }
    let ok = entries.iter().all(|e| e.pass);
    let values = entries
        .iter()
        .map(|e| serde_json::to_value(e).expect("entries serialize"))
        .collect();
    Ok((values, ok))
}

fn sink(path: &Option<PathBuf>) -> Result<Option<BufWriter<File>>, Failure> {
    Ok(match path {
        Some(p) => Some(BufWriter::new(File::create(p)?)),
        None => None,
    })
}

fn finish_sweep(report: SweepReport, writer: Option<BufWriter<File>>) -> Result<bool, Failure> {
    if let Some(mut w) = writer {
        w.flush()?;
    }
    print_json(&serde_json::to_value(&report).expect("report serializes"))?;
    Ok(report.success())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Detect { input, pattern } => {
            let g = read_input(&input)?;
            print_json(&detect(&g, &pattern)?)?;
            Ok(true)
        }
        Command::Decompose { input, variant } => {
            let g = read_input(&input)?;
            if let Some((pattern, embedding)) = forbidden_witness(&g, variant) {
                return Err(Failure::new(
                    "not-free",
                    format!("graph contains an induced {pattern} at {embedding:?}"),
                ));
            }
            let parts: Vec<Value> = g
                .connected_components()
                .into_iter()
                .map(|comp| {
                    let sub = g
                        .induced_subgraph(comp)
                        .map_err(|e| Failure::new("graph", e))?;
                    let tree = build_decomposition_tree(&sub.graph, variant)
                        .map_err(|e| Failure::new("decompose", e))?;
                    Ok(json!({"component": comp, "tree": tree.to_json()}))
                })
                .collect::<Result<_, Failure>>()?;
            let out = if parts.len() == 1 {
                parts[0]["tree"].clone()
            } else {
                json!({"components": parts})
            };
            print_json(&out)?;
            Ok(true)
        }
        Command::Color { input, variant, k } => {
            let g = read_input(&input)?;
            let budget = OracleBudget::new(k).map_err(|e| Failure::new("budget", e))?;
            let c =
                color_within_bound(&g, variant, budget).map_err(|e| Failure::new("color", e))?;
            let ok = verify_coloring(&g, &c).map_err(|e| Failure::new("color", e))?;
            print_json(&serde_json::to_value(&c).expect("coloring serializes"))?;
            if !ok {
                eprintln!("colouring failed verification");
            }
            Ok(ok)
        }
        Command::Verify { input, checks } => {
            let g = read_input(&input)?;
            let (entries, ok) = verify(&g, &checks)?;
            let mut out = io::stdout().lock();
            for e in entries {
                serde_json::to_writer(&mut out, &e).map_err(io::Error::from)?;
                out.write_all(b"\n")?;
            }
            Ok(ok)
        }
        Command::Sweep {
            source,
            max_n,
            filters,
            checks,
            k,
            connected,
            jobs,
            json,
        } => {
            let source = match source.as_deref() {
                Some("-") => Source::Stdin,
                Some(path) => Source::File(path.into()),
                None => Source::Generated { min_n: 1, max_n },
            };
            let cfg = SweepConfig {
                source,
                filters,
                checks,
                k,
                connected_only: connected,
                jobs,
            };
            let mut writer = sink(&json)?;
            let report = run_sweep(&cfg, writer.as_mut().map(|w| w as &mut dyn Write))?;
            finish_sweep(report, writer)
        }
        Command::Suite {
            name,
            max_n,
            jobs,
            json,
        } => {
            let mut writer = sink(&json)?;
            let report = coloring_suite(
                &name,
                max_n,
                jobs,
                writer.as_mut().map(|w| w as &mut dyn Write),
            )?;
            finish_sweep(report, writer)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILED),
        Err(f) => {
            eprintln!("error: {}", f.message);
            let _ = print_json(&json!({"error": f.kind, "message": f.message}));
            ExitCode::from(EXIT_ERROR)
        }
    }
}
