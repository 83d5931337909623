//! Placements of graphs in strong products of paths `P_side^{⊠k}`.
//!
//! Two grid points are adjacent when every coordinate differs by at most
//! one, so the product distance is the Chebyshev distance. A placement
//! determines a supergraph of its host: the graph induced on the occupied
//! grid points.

pub(crate) mod region;
mod render;

pub use region::{dim2_diagnostics, feasible_region, Dim2Report, FeasibleRegion};
pub use render::render_grid;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dimension::unresolved_pair;
use crate::error::{invalid, Error, Result};
use crate::graph::{bfs, DistanceMatrix, Graph, UNREACHABLE};

/// Grid coordinate.
pub type Coord = u32;

/// Chebyshev distance between two tuples of equal length.
pub fn chebyshev(x: &[Coord], y: &[Coord]) -> Result<Coord> {
    if x.len() != y.len() {
        return Err(invalid(format!(
            "tuple lengths differ: {} and {}",
            x.len(),
            y.len()
        )));
    }
    Ok(cheb(x, y))
}

#[inline]
pub(crate) fn cheb(x: &[Coord], y: &[Coord]) -> Coord {
    x.iter()
        .zip(y)
        .map(|(a, b)| a.abs_diff(*b))
        .max()
        .unwrap_or(0)
}

/// An injective map from the vertices of a graph into `{0..side-1}^k`,
/// together with the ordered anchor list `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub k: usize,
    pub side: Coord,
    /// Anchor vertex indices `w_1..w_k`.
    pub anchors: Vec<usize>,
    /// `placement[v]` is the k-tuple of vertex `v`.
    pub placement: Vec<Vec<Coord>>,
}

impl Embedding {
    /// Checks shape only: tuple lengths, coordinate range, anchor indices.
    pub fn new(side: Coord, anchors: Vec<usize>, placement: Vec<Vec<Coord>>) -> Result<Embedding> {
        let k = anchors.len();
        let n = placement.len();
        if let Some(&w) = anchors.iter().find(|&&w| w >= n) {
            return Err(Error::InvalidEmbedding(format!(
                "anchor index {w} out of range"
            )));
        }
        for (v, p) in placement.iter().enumerate() {
            if p.len() != k {
                return Err(Error::InvalidEmbedding(format!(
                    "vertex {v} has {} coordinates, expected {k}",
                    p.len()
                )));
            }
            if p.iter().any(|&c| c >= side) {
                return Err(Error::InvalidEmbedding(format!(
                    "vertex {v} has a coordinate outside 0..{side}"
                )));
            }
        }
        Ok(Embedding {
            k,
            side,
            anchors,
            placement,
        })
    }

    pub fn n(&self) -> usize {
        self.placement.len()
    }

    /// Largest coordinate in use.
    pub fn max_coord(&self) -> Coord {
        self.placement.iter().flatten().copied().max().unwrap_or(0)
    }

    /// The graph on the host's vertices joining every pair placed at
    /// Chebyshev distance one.
    pub fn induced_supergraph<'a>(&self, host: &'a Graph) -> InducedSupergraph<'a> {
        InducedSupergraph {
            host,
            h: self.induced_graph(host.labels().iter().cloned()),
        }
    }

    fn induced_graph(&self, labels: impl IntoIterator<Item = String>) -> Graph {
        let mut h = Graph::new(labels).expect("labels are unique");
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if cheb(&self.placement[u], &self.placement[v]) == 1 {
                    h.add_edge(u, v);
                }
            }
        }
        h
    }

    fn unlabelled_induced(&self) -> Graph {
        self.induced_graph((0..self.n()).map(|i| i.to_string()))
    }

    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let doc = EmbeddingDoc {
            k: self.k,
            side: self.side,
            anchors: self
                .anchors
                .iter()
                .map(|&w| g.label(w).to_string())
                .collect(),
            placement: (0..self.n())
                .map(|v| (g.label(v).to_string(), self.placement[v].clone()))
                .collect(),
        };
        serde_json::to_value(doc).expect("embedding serialises")
    }

    pub fn from_json(value: &serde_json::Value, g: &Graph) -> Result<Embedding> {
        let doc: EmbeddingDoc = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidEmbedding(e.to_string()))?;
        if doc.anchors.len() != doc.k {
            return Err(Error::InvalidEmbedding(format!(
                "k is {} but {} anchors are listed",
                doc.k,
                doc.anchors.len()
            )));
        }
        let anchors = doc
            .anchors
            .iter()
            .map(|l| g.vertex(l))
            .collect::<Result<Vec<_>>>()?;
        let mut placement = vec![None; g.n()];
        for (label, p) in doc.placement {
            placement[g.vertex(&label)?] = Some(p);
        }
        let placement = placement
            .into_iter()
            .enumerate()
            .map(|(v, p)| {
                p.ok_or_else(|| {
                    Error::InvalidEmbedding(format!("vertex {:?} is not placed", g.label(v)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Embedding::new(doc.side, anchors, placement)
    }
}

#[derive(Serialize, Deserialize)]
struct EmbeddingDoc {
    k: usize,
    side: Coord,
    anchors: Vec<String>,
    placement: BTreeMap<String, Vec<Coord>>,
}

/// The supergraph a placement induces on its host's vertex set.
#[derive(Clone, Debug)]
pub struct InducedSupergraph<'a> {
    pub host: &'a Graph,
    pub h: Graph,
}

impl InducedSupergraph<'_> {
    /// Whether every edge of the host is present.
    pub fn contains_host(&self) -> bool {
        self.host.edges().all(|(u, v)| self.h.has_edge(u, v))
    }

    /// Edges of `h` that are not edges of the host.
    pub fn added_edges(&self) -> Vec<(usize, usize)> {
        self.h
            .edges()
            .filter(|&(u, v)| !self.host.has_edge(u, v))
            .collect()
    }
}

/// Places every vertex at its distance vector to `anchors`. The side is
/// `diam(h) + 1`.
pub fn distance_vector_embedding(h: &Graph, anchors: &[usize]) -> Result<Embedding> {
    h.require_connected()?;
    if anchors.is_empty() {
        return Err(invalid("the anchor list is empty"));
    }
    let d = DistanceMatrix::new(h);
    if let Some((u, v)) = unresolved_pair(&d, anchors) {
        let names: Vec<&str> = anchors.iter().map(|&w| h.label(w)).collect();
        return Err(Error::NotResolving(
            format!("{names:?}"),
            h.label(u).to_string(),
            h.label(v).to_string(),
        ));
    }
    let placement = (0..h.n())
        .map(|x| anchors.iter().map(|&w| d.get(x, w)).collect())
        .collect();
    Embedding::new(d.diameter() + 1, anchors.to_vec(), placement)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    /// A host edge is not mapped to adjacent grid points.
    EdgeAdjacent,
    /// Two vertices share a grid point.
    Injective,
    /// A coordinate differs from the induced distance to its anchor.
    AnchorDistance,
    /// Induced and product distances differ for some pair.
    Isometric,
}

impl Clause {
    pub fn name(self) -> &'static str {
        match self {
            Clause::EdgeAdjacent => "W-resolved(a)",
            Clause::Injective => "W-resolved(b)",
            Clause::AnchorDistance => "W-resolved(c)",
            Clause::Isometric => "isometric",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub clause: Clause,
    /// The witnessing vertices (a pair, or a vertex and an anchor).
    pub vertices: Vec<usize>,
    pub note: String,
}

impl Violation {
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        serde_json::json!({
            "clause": self.clause.name(),
            "vertices": self.vertices.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
            "note": self.note,
        })
    }
}

/// Outcome of a certification check: `Ok(())` or the first violation.
pub type Verdict = std::result::Result<(), Violation>;

/// Checks the three clauses of a W-resolved embedding of `g`: host edges
/// go to adjacent points, the placement is injective, and each coordinate
/// is the distance to its anchor in the induced supergraph.
pub fn is_w_resolved(e: &Embedding, g: &Graph) -> Verdict {
    assert_eq!(e.n(), g.n(), "embedding and graph sizes differ");
    for (u, v) in g.edges() {
        let c = cheb(&e.placement[u], &e.placement[v]);
        if c != 1 {
            return Err(Violation {
                clause: Clause::EdgeAdjacent,
                vertices: vec![u, v],
                note: format!("edge endpoints at Chebyshev distance {c}"),
            });
        }
    }
    let mut seen: BTreeMap<&[Coord], usize> = BTreeMap::new();
    for (v, p) in e.placement.iter().enumerate() {
        if let Some(&u) = seen.get(p.as_slice()) {
            return Err(Violation {
                clause: Clause::Injective,
                vertices: vec![u, v],
                note: format!("both placed at {p:?}"),
            });
        }
        seen.insert(p, v);
    }
    let h = e.unlabelled_induced();
    for (i, &w) in e.anchors.iter().enumerate() {
        let dist = bfs(&h, w);
        for x in 0..e.n() {
            if dist[x] != e.placement[x][i] {
                let shown = if dist[x] == UNREACHABLE {
                    "unreachable".to_string()
                } else {
                    dist[x].to_string()
                };
                return Err(Violation {
                    clause: Clause::AnchorDistance,
                    vertices: vec![x, w],
                    note: format!(
                        "coordinate {} is {} but the induced distance is {shown}",
                        i + 1,
                        e.placement[x][i]
                    ),
                });
            }
        }
    }
    Ok(())
}

/// Whether induced distances equal product distances for every pair.
pub fn is_isometric_in_product(e: &Embedding) -> Verdict {
    let h = e.unlabelled_induced();
    for u in 0..e.n() {
        let dist = bfs(&h, u);
        for v in u + 1..e.n() {
            let c = cheb(&e.placement[u], &e.placement[v]);
            if dist[v] != c {
                let note = if dist[v] == UNREACHABLE {
                    "induced supergraph is disconnected".to_string()
                } else {
                    format!("induced distance {} but product distance {c}", dist[v])
                };
                return Err(Violation {
                    clause: Clause::Isometric,
                    vertices: vec![u, v],
                    note,
                });
            }
        }
    }
    Ok(())
}

/// Whether the induced distance from every vertex to every anchor equals
/// the product distance.
pub fn anchor_distances_collapse(e: &Embedding) -> bool {
    let h = e.unlabelled_induced();
    e.anchors.iter().all(|&w| {
        let dist = bfs(&h, w);
        (0..e.n()).all(|x| dist[x] == cheb(&e.placement[x], &e.placement[w]))
    })
}

/// W-resolved and, when `strong`, also isometric.
pub fn certify(e: &Embedding, g: &Graph, strong: bool) -> Verdict {
    is_w_resolved(e, g)?;
    if strong {
        is_isometric_in_product(e)?;
    }
    Ok(())
}
