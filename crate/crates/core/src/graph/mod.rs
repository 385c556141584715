//! Simple undirected graphs, named families, and their adjacency and
//! Laplacian matrices.
//!
//! Vertices are `0..n`. Edges are stored as normalized pairs `(u, v)` with
//! `u < v`, so the edge set is symmetric by construction.

mod matrix;
mod named;
mod spec;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub use matrix::SymmetricMatrix;
pub use named::{build_named, Family};
pub use spec::parse_graph_spec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: BTreeMap<usize, String>,
}

/// On-disk JSON layout: `{"n": .., "edges": [[u, v], ..], "labels": {"<idx>": ".."}}`.
#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<BTreeMap<String, String>>,
}

impl TryFrom<GraphFile> for Graph {
    type Error = Error;

    fn try_from(file: GraphFile) -> Result<Self> {
        let mut g = Graph::from_edges(file.n, file.edges.iter().map(|[u, v]| (*u, *v)))?;
        for (key, label) in file.labels.unwrap_or_default() {
            let idx: usize = key.parse().map_err(|_| {
                Error::InvalidArgument(format!("label key {key:?} is not an index"))
            })?;
            g.set_label(idx, label)?;
        }
        Ok(g)
    }
}

impl From<Graph> for GraphFile {
    fn from(g: Graph) -> Self {
        let labels = if g.labels.is_empty() {
            None
        } else {
            Some(
                g.labels
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect(),
            )
        };
        GraphFile {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
            labels,
        }
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
            labels: BTreeMap::new(),
        }
    }

    /// Builds a graph from an edge list. Self-loops, repeated edges (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return invalid(format!("self-loop at vertex {u}"));
        }
        if u >= self.n || v >= self.n {
            return invalid(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            ));
        }
        if !self.edges.insert((u.min(v), u.max(v))) {
            return invalid(format!("duplicate edge ({u}, {v})"));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, each with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) -> Result<()> {
        if v >= self.n {
            return invalid(format!(
                "label index {v} out of range for {} vertices",
                self.n
            ));
        }
        self.labels.insert(v, label.into());
        Ok(())
    }

    /// Same vertex set and edges, labels dropped.
    pub fn unlabeled(&self) -> Self {
        Self {
            n: self.n,
            edges: self.edges.clone(),
            labels: BTreeMap::new(),
        }
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.edges.insert((u, v));
                }
            }
        }
        g
    }

    pub fn adjacency(&self) -> SymmetricMatrix {
        let mut a = SymmetricMatrix::zeros(self.n);
        for &(u, v) in &self.edges {
            a.set(u, v, 1.0);
        }
        a
    }

    /// `L = D - A`.
    pub fn laplacian(&self) -> SymmetricMatrix {
        let mut l = SymmetricMatrix::zeros(self.n);
        for (v, d) in self.degrees().into_iter().enumerate() {
            l.set(v, v, d as f64);
        }
        for &(u, v) in &self.edges {
            l.set(u, v, -1.0);
        }
        l
    }

    /// Component id per vertex, numbered in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let adj = self.neighbors();
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |c| c + 1)
    }

    /// True iff the graph has exactly one connected component. The graph on
    /// zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }
}
