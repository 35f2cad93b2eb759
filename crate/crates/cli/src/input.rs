//! Reading graphs and formulas from arguments, files and stdin.

use crate::CliError;
use fodepth::graph::{from_edge_list, from_graph6, to_edge_list, to_graph6, Graph};
use fodepth::logic::{parse, Formula};
use std::io::Read;

/// Graph serialisations accepted by `convert`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

pub fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { context: format!("reading {path}"), source })
}

pub fn read_stdin() -> Result<String, CliError> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|source| CliError::Io { context: "reading stdin".into(), source })?;
    Ok(text)
}

/// A graph argument: a graph6 string, or `@path` naming a file that holds
/// either one graph6 line or an edge list. A bare `@` is the graph6 code of
/// the one-vertex graph.
pub fn graph_arg(arg: &str) -> Result<Graph, CliError> {
    match arg.strip_prefix('@').filter(|path| !path.is_empty()) {
        Some(path) => {
            let text = read_file(path)?;
            let trimmed = text.trim();
            if !trimmed.is_empty() && !trimmed.contains(char::is_whitespace) && !trimmed.starts_with('#') {
                Ok(from_graph6(trimmed)?)
            } else {
                Ok(from_edge_list(&text)?)
            }
        }
        None => Ok(from_graph6(arg)?),
    }
}

/// A formula argument: formula text, or `@path` naming a file holding it.
pub fn formula_arg(arg: &str) -> Result<Formula, CliError> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read_file(path)?,
        None => arg.to_string(),
    };
    Ok(parse(text.trim())?)
}

/// Non-empty, non-comment lines of graph6 text.
pub fn graph6_lines(text: &str) -> Result<Vec<Graph>, CliError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| from_graph6(l).map_err(CliError::from))
        .collect()
}

pub fn convert(text: &str, from: GraphFormat, to: GraphFormat) -> Result<String, CliError> {
    let graph = match from {
        GraphFormat::Graph6 => from_graph6(text.trim())?,
        GraphFormat::EdgeList => from_edge_list(text)?,
    };
    Ok(match to {
        GraphFormat::Graph6 => format!("{}\n", to_graph6(&graph)),
        GraphFormat::EdgeList => to_edge_list(&graph),
    })
}

/// `u:v,u:v,...` pairs of G- and H-vertices.
pub fn pairs_arg(text: &str) -> Result<Vec<(usize, usize)>, CliError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (u, v) =
                pair.split_once(':').ok_or_else(|| CliError::Usage(format!("`{pair}` is not a `u:v` pair")))?;
            let num = |s: &str| {
                s.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("`{s}` is not a vertex index")))
            };
            Ok((num(u)?, num(v)?))
        })
        .collect()
}
