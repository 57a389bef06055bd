//! The defining graph: an ordered vertex set plus a symmetric, loop-free
//! edge relation. Adjacent vertices are the ones that commute.

use std::collections::HashMap;
use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};

/// Vertex handle: the position of the vertex in the ascending base order.
/// Comparing two `Vertex` values compares them in the base order.
pub type Vertex = u32;

/// A finite simple graph with a total order on its vertices.
///
/// The vertex order is the listing order of the input document: the first
/// listed vertex is the smallest. All algebraic layers reference vertices
/// by their rank in this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationGraph {
    symbols: Vec<String>,
    index: HashMap<String, Vertex>,
    adjacency: Vec<Vec<bool>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDocument {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

fn valid_symbol(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl CommutationGraph {
    /// Builds a graph from listed vertices (ascending order) and undirected
    /// edges given as symbol pairs.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut symbols = Vec::with_capacity(vertices.len());
        let mut index = HashMap::new();
        for v in vertices {
            let v = v.as_ref();
            if !valid_symbol(v) {
                return Err(Error::BadVertexSymbol(v.to_string()));
            }
            if index.insert(v.to_string(), symbols.len() as Vertex).is_some() {
                return Err(Error::DuplicateVertex(v.to_string()));
            }
            symbols.push(v.to_string());
        }
        let n = symbols.len();
        let mut adjacency = vec![vec![false; n]; n];
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index
                .get(a)
                .ok_or_else(|| Error::UnknownEdgeEndpoint(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| Error::UnknownEdgeEndpoint(b.to_string()))?;
            if ia == ib {
                return Err(Error::LoopEdge(a.to_string()));
            }
            adjacency[ia as usize][ib as usize] = true;
            adjacency[ib as usize][ia as usize] = true;
        }
        Ok(CommutationGraph {
            symbols,
            index,
            adjacency,
        })
    }

    /// Parses the JSON graph schema: `{"vertices": [...], "edges": [[a,b], ...]}`.
    /// Unknown keys are rejected.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| Error::GraphDocument(e.to_string()))?;
        Self::new(&doc.vertices, &doc.edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.symbols.len()
    }

    /// All vertices in ascending base order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        0..self.symbols.len() as Vertex
    }

    pub fn symbol(&self, v: Vertex) -> &str {
        &self.symbols[v as usize]
    }

    /// Resolves a symbol to its vertex handle.
    pub fn vertex(&self, symbol: &str) -> Result<Vertex> {
        self.index
            .get(symbol)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(symbol.to_string()))
    }

    /// Position of the vertex in the ascending base order.
    pub fn vertex_rank(&self, v: Vertex) -> usize {
        debug_assert!((v as usize) < self.symbols.len());
        v as usize
    }

    /// True iff `{a, b}` is an edge. A vertex is never adjacent to itself.
    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.adjacency[a as usize][b as usize]
    }

    /// All unordered edges `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.symbols.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.adjacency[a][b] {
                    out.push((a as Vertex, b as Vertex));
                }
            }
        }
        out
    }

    /// True iff every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.symbols.len();
        (0..n).all(|a| (a + 1..n).all(|b| self.adjacency[a][b]))
    }
}

impl fmt::Display for CommutationGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}; {{", self.symbols.join(", "))?;
        let mut first = true;
        for (a, b) in self.edges() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{{{}, {}}}", self.symbol(a), self.symbol(b))?;
            first = false;
        }
        write!(f, "}}>")
    }
}
