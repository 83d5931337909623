//! Brute-force oracles for the integration tests. Distances, resolution and
//! supergraph enumeration are recomputed here from adjacency alone so that
//! they share no code with the library under test.
#![allow(dead_code)]

use std::collections::VecDeque;

use itertools::Itertools;
use rand::Rng;
use strongdim::Graph;

pub const INF: u32 = u32::MAX;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

pub fn apsp(adj: &[Vec<bool>]) -> Vec<Vec<u32>> {
    let n = adj.len();
    let mut d = vec![vec![INF; n]; n];
    for s in 0..n {
        d[s][s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for u in 0..n {
                if adj[v][u] && d[s][u] == INF {
                    d[s][u] = d[s][v] + 1;
                    q.push_back(u);
                }
            }
        }
    }
    d
}

pub fn distances(g: &Graph) -> Vec<Vec<u32>> {
    apsp(&adjacency(g))
}

fn on_geodesic(d: &[Vec<u32>], w: usize, u: usize, v: usize) -> bool {
    // v lies on a shortest u-w path
    d[u][v] != INF && d[v][w] != INF && d[u][w] == d[u][v] + d[v][w]
}

pub fn strongly_resolved(d: &[Vec<u32>], set: &[usize]) -> bool {
    let n = d.len();
    (0..n).tuple_combinations().all(|(u, v)| {
        set.iter()
            .any(|&w| on_geodesic(d, w, u, v) || on_geodesic(d, w, v, u))
    })
}

pub fn resolved(d: &[Vec<u32>], set: &[usize]) -> bool {
    let n = d.len();
    (0..n)
        .tuple_combinations()
        .all(|(u, v)| set.iter().any(|&w| d[u][w] != d[v][w]))
}

/// Smallest size of a (strongly) resolving set, by subset enumeration.
pub fn min_set_size(g: &Graph, strong: bool) -> usize {
    let d = distances(g);
    let n = g.n();
    (0..=n)
        .find(|&k| {
            (0..n).combinations(k).any(|s| {
                if strong {
                    strongly_resolved(&d, &s)
                } else {
                    resolved(&d, &s)
                }
            })
        })
        .unwrap()
}

/// For every anchor set `W` (as a bitmask over the vertices), whether some
/// supergraph of `g` on the same vertex set is (strongly) resolved by `W`.
/// Every edge superset is built explicitly.
pub fn resolvable_anchor_sets(g: &Graph, strong: bool) -> Vec<bool> {
    let n = g.n();
    assert!(n <= 8);
    let base = adjacency(g);
    let missing: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .filter(|&(u, v)| !base[u][v])
        .collect();
    let mut ok = vec![false; 1 << n];
    for extra in 0u64..1 << missing.len() {
        let mut adj = base.clone();
        for (i, &(u, v)) in missing.iter().enumerate() {
            if extra >> i & 1 == 1 {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
        let d = apsp(&adj);
        // the anchors that settle each pair
        let settles: Vec<u32> = (0..n)
            .tuple_combinations()
            .map(|(u, v)| {
                (0..n)
                    .filter(|&w| {
                        if strong {
                            on_geodesic(&d, w, u, v) || on_geodesic(&d, w, v, u)
                        } else {
                            d[u][w] != d[v][w]
                        }
                    })
                    .map(|w| 1u32 << w)
                    .sum()
            })
            .collect();
        for (w, slot) in ok.iter_mut().enumerate() {
            if !*slot && settles.iter().all(|&s| s & w as u32 != 0) {
                *slot = true;
            }
        }
    }
    ok
}

/// The graph a placement induces: points at Chebyshev distance one are
/// joined.
pub fn grid_graph(points: &[Vec<u32>]) -> Vec<Vec<bool>> {
    let n = points.len();
    let mut adj = vec![vec![false; n]; n];
    for u in 0..n {
        for v in 0..n {
            let cheb = points[u]
                .iter()
                .zip(&points[v])
                .map(|(a, b)| a.abs_diff(*b))
                .max()
                .unwrap_or(0);
            adj[u][v] = u != v && cheb == 1;
        }
    }
    adj
}

/// Whether the placement induces a supergraph of `g` that `anchors`
/// strongly (or plainly) resolves, checked from scratch.
pub fn placement_witnesses(
    g: &Graph,
    points: &[Vec<u32>],
    anchors: &[usize],
    strong: bool,
) -> Result<(), String> {
    if points.iter().tuple_combinations().any(|(a, b)| a == b) {
        return Err("two vertices share a point".into());
    }
    let adj = grid_graph(points);
    if let Some((u, v)) = g.edges().find(|&(u, v)| !adj[u][v]) {
        return Err(format!("edge {}-{} is not kept", g.label(u), g.label(v)));
    }
    let d = apsp(&adj);
    let good = if strong {
        strongly_resolved(&d, anchors)
    } else {
        resolved(&d, anchors)
    };
    if good {
        Ok(())
    } else {
        Err("anchors do not resolve the induced supergraph".into())
    }
}

pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::with_order(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn leaf_count(g: &Graph) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) == 1).count()
}

pub fn ceil_log2(x: usize) -> usize {
    let mut r = 0;
    while (1usize << r) < x {
        r += 1;
    }
    r
}
