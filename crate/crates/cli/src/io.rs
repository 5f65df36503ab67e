//! Input loading: files or stdin, with format detection by extension.

use std::collections::BTreeSet;
use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;

use romankit_core::codec;
use romankit_core::graph::{Graph, SplitPartition};
use romankit_core::hypergraph::Hypergraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// graph6, one line
    G6,
    /// edge list: `n m` then `u v` lines
    El,
    /// hypergraph: `n m` then one line per hyperedge
    Hg,
}

pub fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn detect(path: &str, fallback: Format) -> Format {
    match path.rsplit_once('.').map(|(_, ext)| ext) {
        Some("g6") => Format::G6,
        Some("el") => Format::El,
        Some("hg") => Format::Hg,
        _ => fallback,
    }
}

/// Loads a graph; format from `--format`, else the file extension, else
/// graph6.
pub fn load_graph(path: &str, format: Option<Format>) -> Result<Graph> {
    let format = format.unwrap_or_else(|| detect(path, Format::G6));
    let text = read_source(path)?;
    match format {
        Format::G6 => codec::graph6_decode(&text).map_err(|e| anyhow!("{path}: {e}")),
        Format::El => codec::edge_list_decode(&text).map_err(|e| anyhow!("{path}: {e}")),
        Format::Hg => bail!("{path}: expected a graph, got hypergraph format"),
    }
}

/// Loads a hypergraph; only the `hg` format applies.
pub fn load_hypergraph(path: &str, format: Option<Format>) -> Result<Hypergraph> {
    match format.unwrap_or_else(|| detect(path, Format::Hg)) {
        Format::Hg => {}
        other => bail!("{path}: hypergraph input cannot use format {other:?}"),
    }
    let text = read_source(path)?;
    codec::hypergraph_decode(&text).map_err(|e| anyhow!("{path}: {e}"))
}

fn parse_vertex_line(line: &str) -> Result<BTreeSet<usize>> {
    if line.trim() == "-" {
        return Ok(BTreeSet::new());
    }
    line.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| anyhow!("bad vertex {t:?}")))
        .collect()
}

/// Partition file: two data lines (clique vertices, then independent
/// vertices), `-` for an empty side, `#` comments ignored.
pub fn load_partition(path: &str, g: &Graph) -> Result<SplitPartition> {
    let text = read_source(path)?;
    let lines: Vec<&str> = text
        .lines()
        .map(|raw| raw.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    if lines.len() != 2 {
        bail!("{path}: expected two lines (clique, independent), found {}", lines.len());
    }
    let clique = parse_vertex_line(lines[0]).with_context(|| format!("{path}: clique line"))?;
    let independent =
        parse_vertex_line(lines[1]).with_context(|| format!("{path}: independent line"))?;
    SplitPartition::new(g, clique, independent).map_err(|e| anyhow!("{path}: {e}"))
}

pub fn load_weight_function(path: &str) -> Result<romankit_core::WeightFunction> {
    let text = read_source(path)?;
    codec::weight_fn_decode(&text).map_err(|e| anyhow!("{path}: {e}"))
}
