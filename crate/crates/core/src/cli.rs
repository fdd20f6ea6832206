//! Command-line front end: validation, analysis, classification and census tables.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::cdc::{self, CdcError};
use crate::classify::{self, Classification, ClassifyOptions, ConstructionResult, Subtype};
use crate::graph::{self, CubicGraph};
use crate::surface::{self, SimplicialSurface};

#[derive(Parser, Debug)]
#[command(name = "ftsurf", version, about = "Face-transitive simplicial surfaces from cubic graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that a face list is a simplicial surface.
    Validate { file: PathBuf },
    /// Symmetry type of a surface.
    Analyze { file: PathBuf },
    /// Face-transitive surfaces with the given face graph(s), as JSON lines.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Summary table over a list of graph6/sparse6 graphs.
    Census {
        file: PathBuf,
        /// Also write the surface records here, as JSON lines.
        #[arg(long)]
        records: Option<PathBuf>,
        #[command(flatten)]
        flags: Flags,
    },
    /// Exhaustive cycle double cover report for a small graph.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = cdc::DEFAULT_CYCLE_CAP)]
        cycle_cap: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Flags {
    /// Only report these subtypes, e.g. "(1,6),(2,1).3".
    #[arg(long, value_parser = parse_subtypes)]
    pub subtypes: Option<SubtypeList>,
    /// Largest graph automorphism group to work in.
    #[arg(long, default_value_t = 100_000)]
    pub max_aut: u128,
    /// Cross-check against the exhaustive pipeline on graphs with at most this many nodes.
    #[arg(long, num_args = 0..=1, default_missing_value = "16")]
    pub oracle_check: Option<usize>,
    /// Search π over the whole automorphism group of the graph.
    #[arg(long)]
    pub wide_pi_search: bool,
    /// Let σ range over the whole automorphism group where allowed.
    #[arg(long)]
    pub wide_sigma: bool,
    /// Do not skip generalized m-gon graphs.
    #[arg(long)]
    pub no_mgon_shortcut: bool,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct SubtypeList(pub Vec<Subtype>);

fn parse_subtypes(s: &str) -> Result<SubtypeList, String> {
    // tags contain commas themselves, so split on the closing parenthesis structure
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        rest = rest.trim_start_matches([',', ' ']);
        if rest.is_empty() {
            break;
        }
        let close = rest.find(')').ok_or_else(|| format!("unknown subtype {rest:?}"))?;
        let mut end = close + 1;
        if rest[end..].starts_with('.') {
            end += rest[end + 1..].find(|c: char| !c.is_ascii_digit()).map_or(rest.len() - end - 1, |i| i) + 1;
        }
        out.push(rest[..end].parse()?);
        rest = &rest[end..];
    }
    Ok(SubtypeList(out))
}

impl Flags {
    pub fn options(&self) -> ClassifyOptions {
        ClassifyOptions {
            max_aut: self.max_aut,
            wide_pi_search: self.wide_pi_search,
            wide_sigma: self.wide_sigma,
            mgon_shortcut: !self.no_mgon_shortcut,
            subtypes: self.subtypes.as_ref().map(|s| s.0.clone()),
        }
    }
}

/// One line of classify output.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CensusRecord {
    pub id: String,
    pub faces: Vec<[u32; 3]>,
    pub face_count: usize,
    pub vertices: usize,
    pub chi: i64,
    pub orientable: bool,
    pub subtype: Subtype,
    pub aut_order: u64,
    pub graph_id: String,
    pub minimal: bool,
}

impl CensusRecord {
    pub fn new(r: &ConstructionResult, graph_id: &str) -> Self {
        let x = &r.surface;
        let aut_order = r.group.order() as u64;
        debug_assert_eq!(aut_order, r.subtype.vs().1 as u64 * x.num_faces() as u64);
        CensusRecord {
            id: r.form.id(),
            faces: r.form.faces().to_vec(),
            face_count: x.num_faces(),
            vertices: x.num_vertices(),
            chi: x.euler_characteristic(),
            orientable: x.is_orientable(),
            subtype: r.subtype,
            aut_order,
            graph_id: graph_id.to_string(),
            minimal: surface::is_minimal(x),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Cap(_) => 2,
            _ => 1,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Graphs in a file: one edge list, or one graph6/sparse6 string per line.
pub fn read_graphs(path: &Path) -> Result<Vec<(usize, CubicGraph)>, CliError> {
    let text = read(path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Ok(Vec::new()),
        Some(l) if l.starts_with(|c: char| c.is_ascii_digit()) => {
            let g =
                CubicGraph::parse_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            Ok(vec![(1, g)])
        }
        Some(_) => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|(i, l)| {
                CubicGraph::parse(l)
                    .map(|g| (i + 1, g))
                    .map_err(|e| CliError::Input(format!("{}:{}: {e}", path.display(), i + 1)))
            })
            .collect(),
    }
}

fn read_surface(path: &Path) -> Result<SimplicialSurface, CliError> {
    SimplicialSurface::parse(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn orientability(o: bool) -> &'static str {
    if o {
        "orientable"
    } else {
        "non-orientable"
    }
}

pub fn cmd_validate(path: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let x = read_surface(path)?;
    writeln!(
        out,
        "valid, V={} E={} F={} χ={} {}",
        x.num_vertices(),
        x.num_edges(),
        x.num_faces(),
        x.euler_characteristic(),
        orientability(x.is_orientable())
    )?;
    Ok(())
}

pub fn cmd_analyze(path: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let x = read_surface(path)?;
    let chi = x.euler_characteristic();
    writeln!(
        out,
        "V={} E={} F={} χ={} {}",
        x.num_vertices(),
        x.num_edges(),
        x.num_faces(),
        chi,
        orientability(x.is_orientable())
    )?;
    let lambda = x.lambda_image();
    writeln!(out, "|Aut| = {}", lambda.order())?;
    let g = x.face_graph();
    writeln!(out, "face graph: {} nodes, |Aut| = {}", g.order(), graph::automorphism_group(&g).order())?;
    if let Ok(bound) = surface::min_vertex_bound(chi) {
        let minimal = bound == x.num_vertices() as u64;
        writeln!(out, "minimal: {} (bound {bound})", if minimal { "yes" } else { "no" })?;
    }
    if !lambda.is_transitive() {
        writeln!(out, "not face-transitive")?;
        return Ok(());
    }
    let vf = x.vertex_face_type_with(&lambda).map_err(|e| CliError::Input(e.to_string()))?;
    writeln!(out, "vertex-face type ({},{})", vf.v, vf.s)?;
    let t = classify::subtype_of(&x).map_err(|e| CliError::Input(e.to_string()))?;
    writeln!(out, "subtype {t}")?;
    Ok(())
}

/// Per-graph outcome, in input order.
#[derive(Debug)]
pub struct GraphReport {
    pub graph_id: String,
    pub line: usize,
    pub classification: Classification,
    pub oracle: Option<bool>,
}

impl GraphReport {
    pub fn records(&self) -> Vec<CensusRecord> {
        self.classification.results().iter().map(|r| CensusRecord::new(r, &self.graph_id)).collect()
    }
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j);
    }
    let pool = b.build().map_err(|e| CliError::Input(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

pub fn classify_all(graphs: &[(usize, CubicGraph)], flags: &Flags) -> Result<Vec<GraphReport>, CliError> {
    let opts = flags.options();
    with_pool(flags.jobs, || {
        graphs
            .par_iter()
            .map(|(line, g)| {
                let classification = classify::classify_graph(g, &opts);
                let oracle = match (flags.oracle_check, &classification) {
                    (Some(limit), Classification::Done(found)) if g.order() <= limit => {
                        classify::brute_force_surfaces(g, cdc::DEFAULT_CYCLE_CAP).ok().map(|o| {
                            let mut want: Vec<_> = o
                                .surfaces
                                .iter()
                                .filter(|(_, x)| {
                                    opts.subtypes.is_none()
                                        || classify::subtype_of(x)
                                            .is_ok_and(|t| opts.subtypes.as_ref().unwrap().contains(&t))
                                })
                                .map(|(f, _)| f.clone())
                                .collect();
                            want.sort();
                            let got: Vec<_> = found.iter().map(|r| r.form.clone()).collect();
                            want == got
                        })
                    }
                    _ => None,
                };
                GraphReport { graph_id: graph::canonical_form(g).id(), line: *line, classification, oracle }
            })
            .collect()
    })
}

#[derive(Serialize)]
struct SkipLine<'a> {
    graph_id: &'a str,
    line: usize,
    skipped: String,
}

#[derive(Serialize)]
struct OracleLine<'a> {
    graph_id: &'a str,
    line: usize,
    oracle_check: &'static str,
}

pub fn cmd_classify(path: &Path, flags: &Flags, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let graphs = read_graphs(path)?;
    for rep in classify_all(&graphs, flags)? {
        if let Classification::Skipped(reason) = &rep.classification {
            let line = SkipLine { graph_id: &rep.graph_id, line: rep.line, skipped: reason.to_string() };
            writeln!(out, "{}", serde_json::to_string(&line).expect("plain data"))?;
            continue;
        }
        for r in rep.records() {
            writeln!(out, "{}", serde_json::to_string(&r).expect("plain data"))?;
        }
        if let Some(ok) = rep.oracle {
            let verdict = if ok { "agree" } else { "disagree" };
            if !ok {
                writeln!(err, "oracle disagreement on graph {} (line {})", rep.graph_id, rep.line)?;
            }
            let line = OracleLine { graph_id: &rep.graph_id, line: rep.line, oracle_check: verdict };
            writeln!(out, "{}", serde_json::to_string(&line).expect("plain data"))?;
        }
    }
    Ok(())
}

/// Counts of isomorphism classes per (orientable, χ) row and subtype column.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusTable {
    pub rows: BTreeMap<(bool, i64), [u64; 13]>,
}

impl CensusTable {
    pub fn from_records<'a>(records: impl IntoIterator<Item = &'a CensusRecord>) -> Self {
        let mut seen = std::collections::BTreeSet::new();
        let mut rows: BTreeMap<(bool, i64), [u64; 13]> = BTreeMap::new();
        for r in records {
            if seen.insert(r.id.clone()) {
                rows.entry((r.orientable, r.chi)).or_default()[r.subtype.column()] += 1;
            }
        }
        CensusTable { rows }
    }

    pub fn get(&self, orientable: bool, chi: i64, t: Subtype) -> u64 {
        self.rows.get(&(orientable, chi)).map_or(0, |r| r[t.column()])
    }

    pub fn to_csv(&self) -> String {
        let header: Vec<String> =
            std::iter::once("chi".to_string()).chain(Subtype::ALL.iter().map(|t| t.to_string())).collect();
        let sections: Vec<String> = [true, false]
            .into_iter()
            .map(|orientable| {
                let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
                w.write_record([orientability(orientable)]).expect("in-memory write");
                w.write_record(&header).expect("in-memory write");
                for ((_, chi), counts) in self.rows.iter().rev().filter(|((o, _), _)| *o == orientable) {
                    let row: Vec<String> =
                        std::iter::once(chi.to_string()).chain(counts.iter().map(u64::to_string)).collect();
                    w.write_record(&row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory write")).expect("ASCII")
            })
            .collect();
        sections.join("\n")
    }
}

pub fn cmd_census(
    path: &Path,
    records_path: Option<&Path>,
    flags: &Flags,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let graphs = read_graphs(path)?;
    let reports = classify_all(&graphs, flags)?;
    let mut records = Vec::new();
    for rep in &reports {
        if let Classification::Skipped(reason) = &rep.classification {
            writeln!(err, "line {}: skipped: {reason}", rep.line)?;
        }
        if rep.oracle == Some(false) {
            writeln!(err, "line {}: oracle disagreement", rep.line)?;
        }
        records.extend(rep.records());
    }
    if let Some(p) = records_path {
        let mut f = fs::File::create(p)?;
        for r in &records {
            writeln!(f, "{}", serde_json::to_string(r).expect("plain data"))?;
        }
    }
    write!(out, "{}", CensusTable::from_records(&records).to_csv())?;
    Ok(())
}

pub fn cmd_oracle(path: &Path, cycle_cap: usize, out: &mut dyn Write) -> Result<(), CliError> {
    let graphs = read_graphs(path)?;
    for (line, g) in graphs {
        let rep = classify::brute_force_surfaces(&g, cycle_cap).map_err(|e| match e {
            CdcError::CapExceeded(_) => CliError::Cap(format!("line {line}: {e}")),
            e => CliError::Input(format!("line {line}: {e}")),
        })?;
        writeln!(out, "graph {} ({} nodes)", graph::canonical_form(&g).id(), g.order())?;
        writeln!(out, "cycle double covers: {}", rep.cdcs)?;
        writeln!(out, "up to isomorphism: {}", rep.cdcs_up_to_iso)?;
        writeln!(out, "vertex-faithful: {}", rep.vertex_faithful)?;
        if rep.node_condition_failures > 0 {
            writeln!(
                out,
                "chordless, sharing at most one arc, but failing a node condition: {}",
                rep.node_condition_failures
            )?;
        }
        writeln!(out, "face-transitive surfaces: {}", rep.surfaces.len())?;
        for (form, x) in &rep.surfaces {
            let t = classify::subtype_of(x).map(|t| t.to_string()).unwrap_or_else(|_| "?".into());
            writeln!(
                out,
                "  {} V={} E={} F={} χ={} {} {}",
                form.id(),
                x.num_vertices(),
                x.num_edges(),
                x.num_faces(),
                x.euler_characteristic(),
                orientability(x.is_orientable()),
                t
            )?;
        }
    }
    Ok(())
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let res = match &cli.command {
        Command::Validate { file } => cmd_validate(file, out),
        Command::Analyze { file } => cmd_analyze(file, out),
        Command::Classify { file, flags } => cmd_classify(file, flags, out, err),
        Command::Census { file, records, flags } => cmd_census(file, records.as_deref(), flags, out, err),
        Command::Oracle { file, cycle_cap } => cmd_oracle(file, *cycle_cap, out),
    };
    match res {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subtype_lists() {
        let l = parse_subtypes("(1,6),(2,1).3, (1,1).4").unwrap().0;
        assert_eq!(l, vec![Subtype::T16, Subtype::T21(3), Subtype::T11(4)]);
        assert!(parse_subtypes("(4,4)").is_err());
        assert!(parse_subtypes("(2,1").is_err());
    }

    #[test]
    fn census_csv_layout() {
        let empty = CensusTable::default().to_csv();
        assert_eq!(empty.lines().count(), 5);
        assert!(empty.starts_with("orientable\nchi,\"(3,1)\",\"(2,2)\""));
    }
}
