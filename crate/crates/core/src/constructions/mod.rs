//! Explicit graphs and placements: the two-star realizations, the
//! constructive supergraph bounds, and resolved placements of cycles,
//! trees with four or five leaves, caterpillars `L_{3n}` and the chained
//! family `G_n`.

pub mod bounds;
mod trees;
mod types;

pub use bounds::{
    chromatic_bound_supergraph, construction_upper_bound, greedy_coloring, optimal_coloring,
    tree_bound_supergraph, ProperColoring, UpperBound,
};
pub use trees::{
    canonical_tree_params, embed_tree, tree_dim3_embedding, tree_dim4_embedding, CanonicalTree,
    FiveLeafTreeParams, FourLeafTreeParams, TreeParams,
};
pub use types::{type_graph, type_sr_mismatch, verify_type_sr, StarPairSpec};

use crate::embedding::{Coord, Embedding};
use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Builds a graph and its placement from `(label, point)` pairs and a list
/// of labelled edges. Anchors are given by label.
pub(crate) fn placed_graph(
    points: &[(String, Vec<Coord>)],
    edges: &[(String, String)],
    anchors: &[&str],
) -> Result<(Graph, Embedding)> {
    let mut g = Graph::new(points.iter().map(|(l, _)| l.clone()))?;
    for (a, b) in edges {
        let (a, b) = (g.vertex(a)?, g.vertex(b)?);
        g.add_edge(a, b);
    }
    let anchors = anchors
        .iter()
        .map(|a| g.vertex(a))
        .collect::<Result<Vec<_>>>()?;
    let side = points
        .iter()
        .flat_map(|(_, p)| p.iter().copied())
        .max()
        .unwrap_or(0)
        + 1;
    let e = Embedding::new(
        side,
        anchors,
        points.iter().map(|(_, p)| p.clone()).collect(),
    )?;
    Ok((g, e))
}

/// The 23-vertex graph `G_1` drawn on the 7x7 grid with anchors `w1` at
/// `(0,5)` and `w2` at `(5,0)`. Its coordinates are its distance vectors to
/// `w1, w2`; `{w1, w2}` resolves it but does not strongly resolve it.
pub fn g1_fixture() -> (Graph, Embedding) {
    const POINTS: [(&str, [Coord; 2]); 23] = [
        ("w1", [0, 5]),
        ("a1", [1, 4]),
        ("a2", [1, 5]),
        ("a3", [1, 6]),
        ("b1", [2, 3]),
        ("b2", [2, 4]),
        ("b3", [2, 5]),
        ("b4", [2, 6]),
        ("c1", [3, 2]),
        ("c2", [3, 3]),
        ("c3", [3, 4]),
        ("c4", [3, 5]),
        ("c5", [3, 6]),
        ("d1", [4, 1]),
        ("d2", [4, 2]),
        ("d3", [4, 3]),
        ("e1", [5, 1]),
        ("e2", [5, 2]),
        ("e3", [5, 3]),
        ("f1", [6, 1]),
        ("f2", [6, 2]),
        ("f3", [6, 3]),
        ("w2", [5, 0]),
    ];
    const EDGES: [(&str, &str); 60] = [
        // down-right steps
        ("w1", "a1"),
        ("a1", "b1"),
        ("b1", "c1"),
        ("c1", "d1"),
        ("a2", "b2"),
        ("b2", "c2"),
        ("c2", "d2"),
        ("d2", "e1"),
        ("b3", "c3"),
        ("c3", "d3"),
        ("d3", "e2"),
        ("e2", "f1"),
        ("a3", "b3"),
        ("b4", "c4"),
        ("e3", "f2"),
        ("d1", "w2"),
        // horizontal runs
        ("a3", "b4"),
        ("b4", "c5"),
        ("w1", "a2"),
        ("a2", "b3"),
        ("b3", "c4"),
        ("a1", "b2"),
        ("b2", "c3"),
        ("b1", "c2"),
        ("c2", "d3"),
        ("d3", "e3"),
        ("e3", "f3"),
        ("c1", "d2"),
        ("d2", "e2"),
        ("e2", "f2"),
        ("d1", "e1"),
        ("e1", "f1"),
        // vertical runs
        ("a3", "a2"),
        ("a2", "a1"),
        ("b4", "b3"),
        ("b3", "b2"),
        ("b2", "b1"),
        ("c5", "c4"),
        ("c4", "c3"),
        ("c3", "c2"),
        ("c2", "c1"),
        ("d3", "d2"),
        ("d2", "d1"),
        ("e3", "e2"),
        ("e2", "e1"),
        ("e1", "w2"),
        ("f3", "f2"),
        ("f2", "f1"),
        // up-right steps
        ("w1", "a3"),
        ("a2", "b4"),
        ("a1", "b3"),
        ("b3", "c5"),
        ("b2", "c4"),
        ("b1", "c3"),
        ("c1", "d3"),
        ("d2", "e3"),
        ("d1", "e2"),
        ("e2", "f3"),
        ("e1", "f2"),
        ("w2", "f1"),
    ];
    let points: Vec<(String, Vec<Coord>)> = POINTS
        .iter()
        .map(|(l, p)| (l.to_string(), p.to_vec()))
        .collect();
    let edges: Vec<(String, String)> = EDGES
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    placed_graph(&points, &edges, &["w1", "w2"]).expect("fixture is well formed")
}

/// `G_n`: `n` copies of `G_1` chained so that `w2, f1` of copy `i` are
/// the same vertices as `w1, a3` of copy `i+1`, with the extra edges
/// `f2(i) b4(i+1)` and `e1(i) a2(i+1)`. For `n >= 2` labels carry the copy
/// number (`c5_2`); a shared vertex keeps its name from the earlier copy.
pub fn gn_family(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("G_n needs n >= 1"));
    }
    let (g1, _) = g1_fixture();
    if n == 1 {
        return Ok(g1);
    }
    let name = |copy: usize, l: &str| -> String {
        match l {
            "w1" if copy > 1 => format!("w2_{}", copy - 1),
            "a3" if copy > 1 => format!("f1_{}", copy - 1),
            _ => format!("{l}_{copy}"),
        }
    };
    let mut g = Graph::new(Vec::<String>::new())?;
    for copy in 1..=n {
        for l in g1.labels() {
            g.add_vertex(&name(copy, l));
        }
        for (u, v) in g1.edges() {
            let a = g.add_vertex(&name(copy, g1.label(u)));
            let b = g.add_vertex(&name(copy, g1.label(v)));
            g.add_edge(a, b);
        }
        if copy > 1 {
            for (x, y) in [("f2", "b4"), ("e1", "a2")] {
                let a = g.vertex(&name(copy - 1, x))?;
                let b = g.vertex(&name(copy, y))?;
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// A `{w1, w2}`-resolved isometric placement of `C_n` (`n >= 4`) on the
/// `ceil((n+1)/2)` grid. Cycle vertex `0` is `w1`; vertices are labelled
/// `0..n-1` in cycle order, matching [`crate::graph::Family::Cycle`].
pub fn cycle_embedding(n: usize) -> Result<Embedding> {
    if n < 4 {
        return Err(invalid(format!("cycle placement needs n >= 4, got {n}")));
    }
    let mut pts: Vec<Vec<Coord>> = Vec::with_capacity(n);
    let anchors;
    if n % 2 == 1 {
        // w1 on the anti-diagonal, the far arc one step above it
        let m = ((n - 1) / 2) as Coord;
        pts.push(vec![0, m]);
        for i in 1..=m {
            pts.push(vec![i, m + 1 - i]);
        }
        pts.push(vec![m, 0]);
        for j in 1..m {
            pts.push(vec![m - j, j]);
        }
        anchors = vec![0, m as usize + 1];
    } else {
        let p = ((n - 2) / 2) as Coord;
        pts.push(vec![0, p]);
        pts.push(vec![1, p + 1]);
        for j in 2..=p + 1 {
            pts.push(vec![j - 1, p + 2 - j]);
        }
        pts.push(vec![p, 0]);
        for t in 1..p {
            pts.push(vec![p - t, t]);
        }
        anchors = vec![0, p as usize + 2];
    }
    let side = (n as Coord + 2) / 2;
    Embedding::new(side, anchors, pts)
}

/// `L_{3n}`: the path `v1..vn` with two pendant leaves `u_i, w_i` at each
/// `v_i`, placed on three parallel diagonals with anchors `u1, w1`.
pub fn l3n_family(n: usize) -> Result<(Graph, Embedding)> {
    if n < 2 {
        return Err(invalid(format!("L_3n needs n >= 2, got {n}")));
    }
    let mut points = Vec::new();
    let mut edges = Vec::new();
    for i in 1..=n {
        let c = i as Coord;
        points.push((format!("v{i}"), vec![c, c]));
        points.push((format!("u{i}"), vec![c - 1, c]));
        points.push((format!("w{i}"), vec![c, c - 1]));
        edges.push((format!("v{i}"), format!("u{i}")));
        edges.push((format!("v{i}"), format!("w{i}")));
        if i > 1 {
            edges.push((format!("v{}", i - 1), format!("v{i}")));
        }
    }
    placed_graph(&points, &edges, &["u1", "w1"])
}
