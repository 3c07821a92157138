//! On-disk formats.
//!
//! * Edge list: `#` comment lines, then one `u v` line per edge (0-based
//!   decimal ids separated by a single space; a self-loop is `i i`). The
//!   writer records the node count as `# nodes N` so isolated nodes survive
//!   a round trip; without it the reader uses `max id + 1`.
//! * Histogram CSV: header `k,count,fraction`, ascending `k`, absent degrees
//!   omitted.
//! * PMF CSV: header `k,p`.
//! * Fit JSON and run manifests via serde.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::analytic_pmf::PmfModel;
use crate::graph_gen::{DegreeHistogram, HistogramBin, MultiGraph};
use crate::powerlaw_fit::PowerLawFit;
use crate::{Error, Result};

pub const HISTOGRAM_HEADER: &str = "k,count,fraction";
pub const PMF_HEADER: &str = "k,p";
pub const REVISION: &str = concat!("scalefree ", env!("CARGO_PKG_VERSION"));

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn write_edge_list<W: Write>(g: &MultiGraph, mut w: W) -> Result<()> {
    writeln!(w, "# nodes {}", g.node_count())?;
    writeln!(w, "# edges {}", g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    w.flush()?;
    Ok(())
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(line, format!("expected a decimal node id, found {token:?}")));
    }
    token
        .parse()
        .map_err(|e| parse_err(line, format!("node id {token:?}: {e}")))
}

pub fn read_edge_list<R: BufRead>(r: R) -> Result<MultiGraph> {
    let mut declared_nodes: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, line) in r.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("nodes ") {
                declared_nodes = Some(parse_id(n.trim(), line_no)?);
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let (u, v) = line
            .split_once(' ')
            .ok_or_else(|| parse_err(line_no, "expected two ids separated by a space"))?;
        edges.push((parse_id(u, line_no)?, parse_id(v, line_no)?));
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared_nodes {
        Some(n) if n < implied => {
            return Err(parse_err(0, format!("edge ids reach {} but only {n} nodes declared", implied - 1)))
        }
        Some(n) => n,
        None => implied,
    };
    MultiGraph::from_edges(n, edges)
}

pub fn write_histogram_csv<W: Write>(hist: &DegreeHistogram, mut w: W) -> Result<()> {
    writeln!(w, "{HISTOGRAM_HEADER}")?;
    for bin in &hist.bins {
        writeln!(w, "{},{},{}", bin.k, bin.count, bin.fraction)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_histogram_csv<R: BufRead>(r: R) -> Result<DegreeHistogram> {
    let mut lines = r.lines().enumerate();
    let header = lines.next().map(|(_, l)| l).transpose()?;
    if header.as_deref().map(str::trim_end) != Some(HISTOGRAM_HEADER) {
        return Err(parse_err(1, format!("expected header {HISTOGRAM_HEADER:?}")));
    }
    let mut bins: Vec<HistogramBin> = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        let line = line?;
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let [k, count, fraction] = fields[..] else {
            return Err(parse_err(line_no, "expected three fields"));
        };
        let bin = HistogramBin {
            k: k.parse().map_err(|e| parse_err(line_no, format!("k: {e}")))?,
            count: count.parse().map_err(|e| parse_err(line_no, format!("count: {e}")))?,
            fraction: fraction
                .parse()
                .map_err(|e| parse_err(line_no, format!("fraction: {e}")))?,
        };
        if bins.last().is_some_and(|prev| prev.k >= bin.k) {
            return Err(parse_err(line_no, "degrees must be strictly ascending"));
        }
        bins.push(bin);
    }
    Ok(DegreeHistogram { bins })
}

pub fn write_pmf_csv<W: Write>(model: PmfModel, kmax: u64, mut w: W) -> Result<()> {
    writeln!(w, "{PMF_HEADER}")?;
    for k in 1..=kmax {
        writeln!(w, "{k},{}", model.pmf(k)?)?;
    }
    w.flush()?;
    Ok(())
}

/// Serialized form of a [`PowerLawFit`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub alpha: f64,
    pub kmin: u64,
    pub ks: f64,
    pub n_tail: usize,
    pub n_total: usize,
    pub input: String,
}

impl FitResult {
    pub fn new(fit: PowerLawFit, input: impl Into<String>) -> Self {
        FitResult {
            alpha: fit.alpha,
            kmin: fit.kmin,
            ks: fit.ks,
            n_tail: fit.n_tail,
            n_total: fit.n_total,
            input: input.into(),
        }
    }
}

/// Everything needed to rerun the command that produced a set of files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub artifacts: Vec<String>,
    pub revision: String,
}

impl RunManifest {
    pub fn new(subcommand: &str) -> Self {
        RunManifest {
            subcommand: subcommand.to_string(),
            params: BTreeMap::new(),
            artifacts: Vec::new(),
            revision: REVISION.to_string(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn artifact(&mut self, path: &Path) {
        self.artifacts.push(path.display().to_string());
    }
}

/// `g.edges` → `g.edges.manifest.json`.
pub fn manifest_path_for(output: &Path) -> PathBuf {
    let mut name = output.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

pub fn write_json<T: Serialize>(value: &T, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

pub fn create_file(path: &Path) -> Result<BufWriter<fs::File>> {
    Ok(BufWriter::new(fs::File::create(path)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    EdgeList,
    Histogram,
}

/// Sniffs the format from the first non-blank line.
pub fn detect_format(text: &str) -> InputFormat {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    if first == Some(HISTOGRAM_HEADER) {
        InputFormat::Histogram
    } else {
        InputFormat::EdgeList
    }
}

/// Degree multiset from an edge list or histogram file. Nodes of degree zero
/// in an edge list are dropped.
pub fn read_degrees(path: &Path) -> Result<(Vec<u64>, InputFormat)> {
    let text = fs::read_to_string(path)?;
    let format = detect_format(&text);
    let degrees = match format {
        InputFormat::Histogram => read_histogram_csv(io::Cursor::new(&text))?.to_degrees(),
        InputFormat::EdgeList => read_edge_list(io::Cursor::new(&text))?
            .degrees()
            .iter()
            .copied()
            .filter(|&k| k > 0)
            .collect(),
    };
    Ok((degrees, format))
}
