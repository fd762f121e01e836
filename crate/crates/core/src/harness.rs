//! Sweeps over graph6 streams: filter by forbidden induced subgraphs, run
//! the selected checks on every surviving graph, and aggregate.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::coloring::{
    color_within_bound, exact_clique_number, verify_coloring, ColoringError, OracleBudget,
};
use crate::decompose::{forbidden_witness, Variant};
use crate::generate::connected_graphs;
use crate::graph::Graph;
use crate::patterns::{contains_induced, Pattern};
use crate::verify::{
    check_bull_homogeneous_clique, check_bull_structure, check_centred_hole,
    check_consecutive_neighbours, check_hammer_structure, CheckEntry,
};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("no checks selected")]
    NoChecks,
    #[error("check {0} needs a colour budget k")]
    MissingK(Check),
    #[error(transparent)]
    Budget(#[from] ColoringError),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("failed to start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    HammerStructure,
    BullStructure,
    /// Both variants of the centred-hole check.
    CentredHole,
    CentredHoleFor(Variant),
    HomogeneousClique,
    ConsecutiveNeighbours,
    Color(Variant),
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::HammerStructure,
        Check::BullStructure,
        Check::CentredHole,
        Check::HomogeneousClique,
        Check::ConsecutiveNeighbours,
        Check::Color(Variant::Bull),
        Check::Color(Variant::Hammer),
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::HammerStructure => "structure-hammer",
            Check::BullStructure => "structure-bull",
            Check::CentredHole => "centred-hole",
            Check::CentredHoleFor(Variant::Bull) => "centred-hole-bull",
            Check::CentredHoleFor(Variant::Hammer) => "centred-hole-hammer",
            Check::HomogeneousClique => "homogeneous-clique",
            Check::ConsecutiveNeighbours => "consecutive-neighbours",
            Check::Color(Variant::Bull) => "color-bull",
            Check::Color(Variant::Hammer) => "color-hammer",
        }
    }

    pub fn needs_k(self) -> bool {
        matches!(self, Check::Color(_))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let all = Check::ALL.into_iter().chain([
            Check::CentredHoleFor(Variant::Bull),
            Check::CentredHoleFor(Variant::Hammer),
        ]);
        all.into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| HarnessError::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Stdin,
    /// In-memory graph6 lines.
    Lines(Vec<String>),
    /// The built-in generator: connected graphs up to isomorphism.
    Generated {
        min_n: usize,
        max_n: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub source: Source,
    /// Graphs containing any of these as an induced subgraph are skipped.
    pub filters: Vec<Pattern>,
    pub checks: Vec<Check>,
    pub k: Option<usize>,
    pub connected_only: bool,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
}

impl SweepConfig {
    pub fn new(source: Source, checks: Vec<Check>) -> Self {
        SweepConfig {
            source,
            filters: Vec::new(),
            checks,
            k: None,
            connected_only: false,
            jobs: 0,
        }
    }

    fn budget(&self) -> Result<Option<OracleBudget>, HarnessError> {
        if self.checks.is_empty() {
            return Err(HarnessError::NoChecks);
        }
        match (self.k, self.checks.iter().find(|c| c.needs_k())) {
            (Some(k), _) => Ok(Some(OracleBudget::new(k)?)),
            (None, Some(&c)) => Err(HarnessError::MissingK(c)),
            (None, None) => Ok(None),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub g6: String,
    pub check: String,
    pub detail: Value,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub run: usize,
    pub hypothesis_held: usize,
    pub passed: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub read: usize,
    pub malformed: usize,
    pub filtered_in: usize,
    pub checked: usize,
    pub colorings: usize,
    /// Graphs whose triangle-free base needed more than k colours.
    pub budget_rejections: usize,
    /// Largest `used - bound` over all colourings; 0 unless a bound failed.
    pub max_colors_over_bound: usize,
    pub tallies: BTreeMap<String, Tally>,
    pub failures: Vec<Failure>,
}

impl SweepReport {
    pub fn success(&self) -> bool {
        self.failures.is_empty()
    }
}

enum Item {
    Line(String),
    Graph(Graph),
}

#[derive(Default)]
struct ColorStat {
    over: usize,
    rejected: bool,
}

enum Outcome {
    Malformed(String, String),
    Skipped,
    Checked(Vec<(CheckEntry, Option<ColorStat>)>),
}

fn check_color(g: &Graph, variant: Variant, budget: OracleBudget) -> (CheckEntry, ColorStat) {
    let name = Check::Color(variant).name().to_string();
    let entry = |hyp: bool, concl: bool, witness: Option<Value>| CheckEntry {
        g6: g.to_graph6(),
        check: name.clone(),
        hyp,
        concl,
        pass: !hyp || concl,
        witness,
    };
    if forbidden_witness(g, variant).is_some() {
        return (entry(false, true, None), ColorStat::default());
    }
    match color_within_bound(g, variant, budget) {
        Ok(c) => {
            let ok = verify_coloring(g, &c).unwrap_or(false);
            let stat = ColorStat {
                over: c.used.saturating_sub(c.bound),
                rejected: false,
            };
            let w = json!({"coloring": c, "omega": exact_clique_number(g)});
            (entry(true, ok, Some(w)), stat)
        }
        Err(e @ ColoringError::LeafExceedsBudget { .. }) => (
            entry(false, true, Some(json!({"rejected": e.to_string()}))),
            ColorStat {
                over: 0,
                rejected: true,
            },
        ),
        Err(e) => (
            entry(true, false, Some(json!({"error": e.to_string()}))),
            ColorStat::default(),
        ),
    }
}

fn run_checks(
    g: &Graph,
    checks: &[Check],
    budget: Option<OracleBudget>,
) -> Vec<(CheckEntry, Option<ColorStat>)> {
    let mut out = Vec::new();
    for &c in checks {
        match c {
            Check::HammerStructure => out.push((check_hammer_structure(g), None)),
            Check::BullStructure => out.push((check_bull_structure(g), None)),
            Check::CentredHole => {
                out.push((check_centred_hole(g, Variant::Bull), None));
                out.push((check_centred_hole(g, Variant::Hammer), None));
            }
            Check::CentredHoleFor(v) => out.push((check_centred_hole(g, v), None)),
            Check::HomogeneousClique => out.push((check_bull_homogeneous_clique(g), None)),
            Check::ConsecutiveNeighbours => out.push((check_consecutive_neighbours(g), None)),
            Check::Color(v) => {
                let (e, s) = check_color(g, v, budget.expect("budget checked"));
                out.push((e, Some(s)));
            }
        }
    }
    out
}

fn process(cfg: &SweepConfig, budget: Option<OracleBudget>, item: Item) -> Outcome {
    let g = match item {
        Item::Graph(g) => g,
        Item::Line(line) => match Graph::from_graph6(&line) {
            Ok(g) => g,
            Err(e) => return Outcome::Malformed(line, e.to_string()),
        },
    };
    if cfg.connected_only && !g.is_connected() {
        return Outcome::Skipped;
    }
    if cfg.filters.iter().any(|&p| contains_induced(&g, p)) {
        return Outcome::Skipped;
    }
    Outcome::Checked(run_checks(&g, &cfg.checks, budget))
}

const BATCH: usize = 4096;

struct Sweep<'a, 'w> {
    cfg: &'a SweepConfig,
    budget: Option<OracleBudget>,
    pool: rayon::ThreadPool,
    report: SweepReport,
    sink: Option<&'w mut dyn Write>,
}

impl Sweep<'_, '_> {
    fn flush(&mut self, batch: &mut Vec<Item>) -> Result<(), HarnessError> {
        let (cfg, budget) = (self.cfg, self.budget);
        let items = std::mem::take(batch);
        let outcomes: Vec<Outcome> = self.pool.install(|| {
            items
                .into_par_iter()
                .map(|it| process(cfg, budget, it))
                .collect()
        });
        let r = &mut self.report;
        for outcome in outcomes {
            r.read += 1;
            match outcome {
                Outcome::Malformed(line, err) => {
                    r.malformed += 1;
                    r.failures.push(Failure {
                        g6: line,
                        check: "parse".to_string(),
                        detail: json!({"error": err}),
                    });
                }
                Outcome::Skipped => {}
                Outcome::Checked(entries) => {
                    r.filtered_in += 1;
                    r.checked += 1;
                    for (entry, stat) in entries {
                        if let Some(s) = stat {
                            r.budget_rejections += s.rejected as usize;
                            r.colorings += (entry.hyp && !s.rejected) as usize;
                            r.max_colors_over_bound = r.max_colors_over_bound.max(s.over);
                        }
                        let t = r.tallies.entry(entry.check.clone()).or_default();
                        t.run += 1;
                        t.hypothesis_held += entry.hyp as usize;
                        t.passed += entry.pass as usize;
                        if let Some(sink) = self.sink.as_deref_mut() {
                            serde_json::to_writer(&mut *sink, &entry).map_err(io::Error::from)?;
                            sink.write_all(b"\n")?;
                        }
                        if !entry.pass {
                            r.failures.push(Failure {
                                g6: entry.g6,
                                check: entry.check,
                                detail: entry.witness.unwrap_or(Value::Null),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn push(&mut self, batch: &mut Vec<Item>, item: Item) -> Result<(), HarnessError> {
        batch.push(item);
        if batch.len() >= BATCH {
            self.flush(batch)?;
        }
        Ok(())
    }

    fn lines(&mut self, reader: impl BufRead) -> Result<(), HarnessError> {
        let mut batch = Vec::new();
        for line in reader.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            self.push(&mut batch, Item::Line(line))?;
        }
        self.flush(&mut batch)
    }
}

/// Runs every selected check on every graph of the source that passes the
/// filters. Per-check JSON lines go to `sink` in stream order. Malformed
/// lines are recorded as failures and the sweep continues; only I/O errors
/// abort.
pub fn run_sweep(
    cfg: &SweepConfig,
    sink: Option<&mut dyn Write>,
) -> Result<SweepReport, HarnessError> {
    let budget = cfg.budget()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    let mut sweep = Sweep {
        cfg,
        budget,
        pool,
        report: SweepReport::default(),
        sink,
    };
    match &cfg.source {
        Source::File(path) => sweep.lines(BufReader::new(File::open(path)?))?,
        Source::Stdin => sweep.lines(io::stdin().lock())?,
        Source::Lines(lines) => sweep.lines(io::Cursor::new(lines.join("\n")))?,
        Source::Generated { min_n, max_n } => {
            let mut batch = Vec::new();
            for n in *min_n..=*max_n {
                for g in connected_graphs(n).iter() {
                    sweep.push(&mut batch, Item::Graph(g.clone()))?;
                }
            }
            sweep.flush(&mut batch)?;
        }
    }
    Ok(sweep.report)
}

/// Named suites for the colouring corollaries. `F-variant` forbids F with
/// k = 3 for F in {P6, P8, T1, T2, T3}; `tree-T-variant` forbids a tree T
/// with k = |V(T)| - 1.
pub const SUITES: [&str; 10] = [
    "P6-hammer",
    "P6-bull",
    "P8-hammer",
    "P8-bull",
    "T1-hammer",
    "T1-bull",
    "T2-hammer",
    "T2-bull",
    "T3-hammer",
    "T3-bull",
];

/// The filters, check and k of a named suite over generated connected
/// graphs on at most `max_n` vertices.
pub fn suite_config(name: &str, max_n: usize) -> Result<SweepConfig, HarnessError> {
    let unknown = || HarnessError::UnknownSuite(name.to_string());
    let (forbidden, variant, k) = if let Some(rest) = name.strip_prefix("tree-") {
        let (tree, variant) = rest.rsplit_once('-').ok_or_else(unknown)?;
        let tree: Pattern = tree.parse().map_err(|_| unknown())?;
        if !tree.is_tree() || tree.order() < 3 {
            return Err(unknown());
        }
        (tree, variant, tree.order() - 1)
    } else {
        if !SUITES.contains(&name) {
            return Err(unknown());
        }
        let (f, variant) = name.split_once('-').ok_or_else(unknown)?;
        (f.parse().map_err(|_| unknown())?, variant, 3)
    };
    let variant: Variant = variant.parse().map_err(|_| unknown())?;
    Ok(SweepConfig {
        source: Source::Generated { min_n: 1, max_n },
        filters: vec![forbidden, Pattern::Cycle(4), variant.pattern()],
        checks: vec![Check::Color(variant)],
        k: Some(k),
        connected_only: true,
        jobs: 0,
    })
}

pub fn coloring_suite(
    name: &str,
    max_n: usize,
    jobs: usize,
    sink: Option<&mut dyn Write>,
) -> Result<SweepReport, HarnessError> {
    let cfg = SweepConfig {
        jobs,
        ..suite_config(name, max_n)?
    };
    run_sweep(&cfg, sink)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert_eq!(
            "centred-hole-bull".parse::<Check>().unwrap(),
            Check::CentredHoleFor(Variant::Bull)
        );
        assert!("no-such-check".parse::<Check>().is_err());
    }

    #[test]
    fn five_vertex_hammer_sweep() {
        let mut cfg = SweepConfig::new(
            Source::Generated { min_n: 5, max_n: 5 },
            vec![Check::HammerStructure],
        );
        cfg.connected_only = true;
        let all = run_sweep(&cfg, None).unwrap();
        assert_eq!((all.read, all.filtered_in), (21, 21));
        cfg.filters = vec![Pattern::Cycle(4), Pattern::Hammer];
        let r = run_sweep(&cfg, None).unwrap();
        assert!(r.success());
        assert!(r.filtered_in < 21);
    }

    #[test]
    fn empty_stream() {
        let cfg = SweepConfig::new(Source::Lines(vec![]), vec![Check::ConsecutiveNeighbours]);
        let r = run_sweep(&cfg, None).unwrap();
        assert_eq!(r, SweepReport::default());
        assert!(r.success());
    }

    #[test]
    fn malformed_lines_are_recorded() {
        let lines = vec!["Dhc".to_string(), "D~".to_string(), "Ch".to_string()];
        let cfg = SweepConfig::new(Source::Lines(lines), vec![Check::BullStructure]);
        let mut out = Vec::new();
        let r = run_sweep(&cfg, Some(&mut out)).unwrap();
        assert_eq!((r.read, r.malformed, r.checked), (3, 1, 2));
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].check, "parse");
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), 2);
    }

    #[test]
    fn colour_checks_need_k() {
        let cfg = SweepConfig::new(Source::Lines(vec![]), vec![Check::Color(Variant::Bull)]);
        assert!(matches!(
            run_sweep(&cfg, None),
            Err(HarnessError::MissingK(_))
        ));
        let none = SweepConfig::new(Source::Lines(vec![]), vec![]);
        assert!(matches!(
            run_sweep(&none, None),
            Err(HarnessError::NoChecks)
        ));
    }

    #[test]
    fn suites() {
        let cfg = suite_config("tree-P4-hammer", 6).unwrap();
        assert_eq!(cfg.k, Some(3));
        assert_eq!(
            cfg.filters,
            vec![Pattern::Path(4), Pattern::Cycle(4), Pattern::Hammer]
        );
        assert!(suite_config("tree-C5-bull", 6).is_err());
        assert!(suite_config("P7-bull", 6).is_err());
        let r = coloring_suite("P6-hammer", 6, 1, None).unwrap();
        assert!(r.success() && r.colorings > 0);
        assert_eq!(r.max_colors_over_bound, 0);
    }
}
