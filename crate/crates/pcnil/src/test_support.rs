//! Shared fixtures for the unit tests.

use crate::graph::CommutationGraph;
use crate::words::Word;

/// Three vertices with x1 > x2 > x3 and the single edge {x1, x2}.
pub fn example_graph() -> CommutationGraph {
    CommutationGraph::parse(r#"{"vertices":["x3","x2","x1"],"edges":[["x1","x2"]]}"#).unwrap()
}

/// Graph with the given vertices (listed smallest first) and no edges.
pub fn edgeless(symbols: &[&str]) -> CommutationGraph {
    CommutationGraph::new(symbols, &[]).unwrap()
}

/// Complete graph on the given vertices (listed smallest first).
pub fn complete(symbols: &[&str]) -> CommutationGraph {
    let mut edges = Vec::new();
    for i in 0..symbols.len() {
        for j in i + 1..symbols.len() {
            edges.push((symbols[i].to_string(), symbols[j].to_string()));
        }
    }
    let edges: Vec<(&str, &str)> = edges
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    CommutationGraph::new(symbols, &edges).unwrap()
}

/// Parses a space-separated plain word, panicking on unknown symbols.
pub fn word(g: &CommutationGraph, text: &str) -> Word {
    crate::words::parse_plain_word(g, text).unwrap()
}
