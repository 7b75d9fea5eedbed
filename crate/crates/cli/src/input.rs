//! Graph input: a graph6 string or an edge list of 1-based `u v` lines.

use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use upm_core::{from_graph6, SimpleGraph};

pub fn read_source(path: &Path) -> Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
    } else {
        text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(text)
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

/// Edge lists are recognised by a line holding two integers.
fn looks_like_edge_list(text: &str) -> bool {
    meaningful_lines(text).any(|l| {
        let tokens: Vec<_> = l.split_whitespace().collect();
        tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok())
    })
}

/// Lines `u v` with 1-based vertices. A line with a single integer fixes the
/// vertex count, otherwise it is the largest label seen.
fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (k, line) in meaningful_lines(text).enumerate() {
        let nums = line
            .split_whitespace()
            .map(str::parse::<usize>)
            .collect::<std::result::Result<Vec<_>, _>>()
            .with_context(|| format!("edge list line {}: {line:?}", k + 1))?;
        match nums.as_slice() {
            [n] => declared = Some(*n),
            [u, v] if *u >= 1 && *v >= 1 => edges.push((u - 1, v - 1)),
            _ => bail!(
                "edge list line {}: expected `u v` with 1-based vertices",
                k + 1
            ),
        }
    }
    let largest = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(largest);
    if n < largest {
        bail!("edge list declares {n} vertices but uses vertex {largest}");
    }
    Ok(SimpleGraph::from_edges(n, &edges)?)
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    if looks_like_edge_list(text) {
        parse_edge_list(text)
    } else {
        let line = meaningful_lines(text).next().unwrap_or("");
        Ok(from_graph6(line)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_formats() {
        let g = parse_graph("EhcO\n").unwrap();
        let h = parse_graph("1 2\n1 5\n2 3\n3 4\n4 5\n4 6\n").unwrap();
        assert_eq!(g, h);
        assert_eq!(parse_graph(">>graph6<<A_").unwrap().edge_count(), 1);
    }

    #[test]
    fn declared_order_allows_isolated_vertices() {
        let g = parse_graph("# two components\n4\n1 2\n").unwrap();
        assert_eq!(g.order(), 4);
        assert!(parse_graph("2\n1 3\n").is_err());
        assert!(parse_graph("0 1\n").is_err());
    }
}
