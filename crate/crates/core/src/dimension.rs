//! Resolving and strongly resolving sets, mutual maximal distance, the
//! strong resolving graph, and the two ways of computing a dimension.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::cover::min_vertex_cover;
use crate::error::{invalid, Error, Result};
use crate::graph::{DistanceMatrix, Graph, UNREACHABLE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DimensionMode {
    Metric,
    Strong,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Reduction,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionResult {
    pub value: usize,
    /// Sorted vertex indices.
    pub witness: Vec<usize>,
    pub method: Method,
}

impl DimensionResult {
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        serde_json::json!({
            "value": self.value,
            "witness": self.witness.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
            "method": self.method,
        })
    }
}

fn connected(g: &Graph, d: &DistanceMatrix) -> Result<()> {
    if g.n() > 0 && d.row(0).contains(&UNREACHABLE) {
        return g.require_connected();
    }
    Ok(())
}

/// `v` is maximally distant from `u`: no neighbour of `v` is farther
/// from `u` than `v` is.
fn maximally_distant(g: &Graph, d: &DistanceMatrix, v: usize, u: usize) -> bool {
    let duv = d.get(u, v);
    g.neighbors(v).iter().all(|&x| d.get(u, x) <= duv)
}

/// Mutual maximal distance between `u` and `v`.
pub fn is_mmd(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Err(invalid(
            "mutual maximal distance needs two distinct vertices",
        ));
    }
    connected(g, d)?;
    Ok(maximally_distant(g, d, v, u) && maximally_distant(g, d, u, v))
}

/// The graph on `V(base)` whose edges are the mutually maximally distant
/// pairs of `base`.
#[derive(Clone, Debug)]
pub struct StrongResolvingGraph<'a> {
    pub base: &'a Graph,
    pub sr: Graph,
}

pub fn strong_resolving_graph(g: &Graph) -> Result<StrongResolvingGraph<'_>> {
    g.require_connected()?;
    let d = DistanceMatrix::new(g);
    Ok(strong_resolving_graph_with(g, &d))
}

pub(crate) fn strong_resolving_graph_with<'a>(
    g: &'a Graph,
    d: &DistanceMatrix,
) -> StrongResolvingGraph<'a> {
    let mut sr = Graph::new(g.labels().iter().cloned()).expect("labels are unique");
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if maximally_distant(g, d, v, u) && maximally_distant(g, d, u, v) {
                sr.add_edge(u, v);
            }
        }
    }
    StrongResolvingGraph { base: g, sr }
}

/// Whether `w` strongly resolves `u` and `v`, via the interval identity.
pub fn strongly_resolves(d: &DistanceMatrix, w: usize, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Err(invalid("strong resolution needs two distinct vertices"));
    }
    Ok(strongly_resolves_unchecked(d, w, u, v))
}

#[inline]
fn strongly_resolves_unchecked(d: &DistanceMatrix, w: usize, u: usize, v: usize) -> bool {
    let duv = d.get(u, v);
    d.get(u, w) == duv + d.get(v, w) || d.get(v, w) == duv + d.get(u, w)
}

fn check_members(g: &Graph, set: &[usize]) -> Result<()> {
    match set.iter().find(|&&w| w >= g.n()) {
        Some(w) => Err(Error::UnknownVertex(w.to_string())),
        None => Ok(()),
    }
}

pub fn is_strong_resolving_set(g: &Graph, set: &[usize]) -> Result<bool> {
    check_members(g, set)?;
    g.require_connected()?;
    let d = DistanceMatrix::new(g);
    Ok(strongly_resolving_with(&d, set))
}

pub fn is_resolving_set(g: &Graph, set: &[usize]) -> Result<bool> {
    check_members(g, set)?;
    g.require_connected()?;
    let d = DistanceMatrix::new(g);
    Ok(resolving_with(&d, set))
}

/// Strong resolution check against a precomputed distance matrix.
pub fn strongly_resolving_with(d: &DistanceMatrix, set: &[usize]) -> bool {
    let n = d.n();
    (0..n).all(|u| (u + 1..n).all(|v| set.iter().any(|&w| strongly_resolves_unchecked(d, w, u, v))))
}

/// First pair not strongly resolved by `set`.
pub fn unresolved_strong_pair(d: &DistanceMatrix, set: &[usize]) -> Option<(usize, usize)> {
    let n = d.n();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| !set.iter().any(|&w| strongly_resolves_unchecked(d, w, u, v)))
}

/// Resolution check against a precomputed distance matrix.
pub fn resolving_with(d: &DistanceMatrix, set: &[usize]) -> bool {
    unresolved_pair(d, set).is_none()
}

/// First pair with equal distance vectors to `set`.
pub fn unresolved_pair(d: &DistanceMatrix, set: &[usize]) -> Option<(usize, usize)> {
    let n = d.n();
    let mut vectors: Vec<(Vec<u32>, usize)> = (0..n)
        .map(|x| (set.iter().map(|&w| d.get(x, w)).collect(), x))
        .collect();
    vectors.sort();
    vectors
        .windows(2)
        .filter(|p| p[0].0 == p[1].0)
        .map(|p| (p[0].1, p[1].1))
        .min()
}

/// Strong dimension as the vertex covering number of the strong resolving
/// graph. The witness is the minimum cover picked by the cover solver's
/// tie-break.
pub fn strong_dimension(g: &Graph) -> Result<DimensionResult> {
    g.require_connected()?;
    let d = DistanceMatrix::new(g);
    Ok(strong_dimension_with(g, &d))
}

pub(crate) fn strong_dimension_with(g: &Graph, d: &DistanceMatrix) -> DimensionResult {
    let sr = strong_resolving_graph_with(g, d);
    let cover = min_vertex_cover(&sr.sr);
    assert!(
        strongly_resolving_with(d, &cover.cover),
        "a vertex cover of the strong resolving graph must strongly resolve"
    );
    DimensionResult {
        value: cover.size,
        witness: cover.cover,
        method: Method::Reduction,
    }
}

/// Smallest set passing the chosen predicate, by size and then in
/// lexicographic index order. Exponential; meant for `n <= 12`.
pub fn brute_force_dimension(g: &Graph, mode: DimensionMode) -> Result<DimensionResult> {
    g.require_connected()?;
    let d = DistanceMatrix::new(g);
    let n = g.n();
    for k in 0..=n {
        for set in (0..n).combinations(k) {
            let ok = match mode {
                DimensionMode::Metric => resolving_with(&d, &set),
                DimensionMode::Strong => strongly_resolving_with(&d, &set),
            };
            if ok {
                return Ok(DimensionResult {
                    value: k,
                    witness: set,
                    method: Method::BruteForce,
                });
            }
        }
    }
    unreachable!("the full vertex set always resolves")
}
