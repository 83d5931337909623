//! Simple undirected graphs with string labels, the edge-list text format,
//! BFS distances and the standard generators.

mod canon;
mod distance;
mod generate;

pub use canon::{all_graphs, automorphisms, canonical_code, connected_graphs};
pub use distance::{bfs, DistanceMatrix, UNREACHABLE};
pub use generate::{generate, Family};

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph. Vertices are dense indices `0..n`, each
/// carrying a unique label; adjacency lists are kept sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// An edgeless graph on the given labels.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Graph> {
        let mut g = Graph {
            labels: Vec::new(),
            index: HashMap::new(),
            adj: Vec::new(),
            edge_count: 0,
        };
        for l in labels {
            let l = l.into();
            if g.index.contains_key(&l) {
                return Err(Error::InvalidArgument(format!("duplicate label {l:?}")));
            }
            g.push_vertex(l);
        }
        Ok(g)
    }

    /// Edgeless graph labelled "0".."n-1".
    pub fn with_order(n: usize) -> Graph {
        Graph::new((0..n).map(|i| i.to_string())).expect("numeric labels are distinct")
    }

    pub fn from_edges<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph> {
        let mut g = Graph::new(labels)?;
        for (u, v) in edges {
            if u >= g.n() || v >= g.n() || u == v {
                return Err(Error::InvalidArgument(format!("bad edge ({u}, {v})")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn push_vertex(&mut self, label: String) -> usize {
        let v = self.labels.len();
        self.index.insert(label.clone(), v);
        self.labels.push(label);
        self.adj.push(Vec::new());
        v
    }

    /// Adds a vertex, or returns the existing index for the label.
    pub fn add_vertex(&mut self, label: &str) -> usize {
        match self.index.get(label) {
            Some(&v) => v,
            None => self.push_vertex(label.to_string()),
        }
    }

    /// Adds the edge `uv`. Returns false if it was already present.
    ///
    /// Panics on a self-loop or an out-of-range index.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at vertex {u}");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                true
            }
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Looks up a label, failing with [`Error::UnknownVertex`].
    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Fails with a pair of vertices from different components.
    pub fn require_connected(&self) -> Result<()> {
        let comps = self.components();
        if comps.len() > 1 {
            return Err(Error::Disconnected(
                self.labels[comps[0][0]].clone(),
                self.labels[comps[1][0]].clone(),
            ));
        }
        Ok(())
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count + 1 == self.n() && self.is_connected()
    }

    /// Vertices of degree one, in index order.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// The graph with vertex `v` renamed to `perm[v]`, keeping labels.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut labels = vec![String::new(); self.n()];
        for v in 0..self.n() {
            labels[perm[v]] = self.labels[v].clone();
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(labels, edges).expect("permutation preserves simplicity")
    }

    /// Canonical edge-list text: one `u v` line per edge, each pair ordered
    /// by label and the lines sorted.
    pub fn to_edge_list(&self) -> String {
        let mut pairs: Vec<(&str, &str)> = self
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.label(u), self.label(v));
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        pairs.sort_unstable();
        let mut out = String::new();
        for (a, b) in pairs {
            out.push_str(a);
            out.push(' ');
            out.push_str(b);
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.label(u), self.label(v)))
            .collect();
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &edges)
            .finish()
    }
}

/// BFS distances between every pair of vertices.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    DistanceMatrix::new(g)
}

/// Parses the edge-list format: one `u v` pair per line, blank lines and
/// `#` comments ignored. Vertices are numbered by first appearance.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut g = Graph::new(Vec::<String>::new())?;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let tokens: Vec<&str> = body.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [a, b] => {
                if a == b {
                    return Err(Error::SelfLoop(line));
                }
                let u = g.add_vertex(a);
                let v = g.add_vertex(b);
                g.add_edge(u, v);
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected 2 tokens, found {}", tokens.len()),
                })
            }
        }
    }
    Ok(g)
}
