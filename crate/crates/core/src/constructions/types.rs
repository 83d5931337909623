//! Graphs whose strong resolving graph is two stars, optionally with the
//! centres joined and/or a common extra neighbour of the centres.

use std::collections::BTreeSet;

use crate::dimension::strong_resolving_graph;
use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Target shape `K_{1,m} ∪ K_{1,n}` plus:
/// kind 1 nothing, kind 2 the centre edge, kind 3 a vertex adjacent to both
/// centres, kind 4 both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarPairSpec {
    pub m: usize,
    pub n: usize,
    pub kind: u8,
}

impl StarPairSpec {
    pub fn new(m: usize, n: usize, kind: u8) -> Result<StarPairSpec> {
        if m < 1 || m > n {
            return Err(invalid(format!(
                "star sizes need 1 <= m <= n, got m={m}, n={n}"
            )));
        }
        if !(1..=4).contains(&kind) {
            return Err(invalid(format!("type must be 1..4, got {kind}")));
        }
        Ok(StarPairSpec { m, n, kind })
    }

    fn same_parity(&self) -> bool {
        (self.n - self.m) % 2 == 0
    }
}

type Pt = (i64, i64);

/// Lattice points on or inside a convex polygon given counter-clockwise.
fn lattice_polygon(corners: &[Pt]) -> Vec<Pt> {
    let (x1, y1) = (
        corners.iter().map(|p| p.0).max().unwrap(),
        corners.iter().map(|p| p.1).max().unwrap(),
    );
    let mut out = Vec::new();
    for x in 0..=x1 {
        for y in 0..=y1 {
            let inside = corners
                .iter()
                .zip(corners.iter().cycle().skip(1))
                .all(|(a, b)| (b.0 - a.0) * (y - a.1) - (b.1 - a.1) * (x - a.0) >= 0);
            if inside {
                out.push((x, y));
            }
        }
    }
    out
}

fn pt_label(p: Pt) -> String {
    format!("({},{})", p.0, p.1)
}

/// The realization of `spec`: lattice points of the two-star region of the
/// grid joined as in the strong product, with the pendant leaves and the
/// corner vertex the kind calls for. Grid vertices are labelled `(x,y)`,
/// added leaves `leaf@(x,y)` after their neighbour.
pub fn type_graph(spec: &StarPairSpec) -> Result<Graph> {
    let spec = StarPairSpec::new(spec.m, spec.n, spec.kind)?;
    let (m, n) = (spec.m as i64, spec.n as i64);
    let (corners, corner_vertex): (Vec<Pt>, (Pt, [Pt; 3])) = if spec.same_parity() {
        let top = n + (n - m) / 2 + 1;
        let c = ((n + m + 2) / 2, (3 * n - m + 2) / 2);
        (
            vec![
                (0, n),
                (n, 0),
                (n + 1, 1),
                (n + 1, n),
                ((n + m) / 2, top),
                ((n - m) / 2 + 1, top),
            ],
            (c, [(c.0 - 1, c.1), (c.0, c.1 - 1), (c.0 - 1, c.1 - 1)]),
        )
    } else {
        let top = (3 * n - m + 1) / 2;
        let c = ((n + m + 1) / 2, (3 * n - m + 1) / 2);
        (
            vec![
                (0, n),
                (n, 0),
                (n, n),
                ((n + m - 1) / 2, top),
                ((n - m + 1) / 2, top),
            ],
            (c, [(c.0 - 1, c.1), (c.0, c.1 - 1), (c.0 - 1, c.1 - 1)]),
        )
    };
    let pts = lattice_polygon(&corners);
    let mut g = Graph::new(pts.iter().map(|&p| pt_label(p)))?;
    for (i, a) in pts.iter().enumerate() {
        for (j, b) in pts.iter().enumerate().skip(i + 1) {
            if (a.0 - b.0).abs() <= 1 && (a.1 - b.1).abs() <= 1 {
                g.add_edge(i, j);
            }
        }
    }
    if spec.kind >= 3 {
        let (c, nbrs) = corner_vertex;
        let v = g.add_vertex(&pt_label(c));
        for p in nbrs {
            let u = g.vertex(&pt_label(p))?;
            g.add_edge(u, v);
        }
    }
    let leaves: &[Pt] = match spec.kind {
        2 if !spec.same_parity() => &[(0, n)],
        2 | 4 => &[(0, n), (n, 0)],
        _ => &[],
    };
    for &p in leaves {
        let u = g.vertex(&pt_label(p))?;
        let leaf = g.add_vertex(&format!("leaf@{}", pt_label(p)));
        g.add_edge(u, leaf);
    }
    Ok(g)
}

/// Whether the strong resolving graph of `g`, with isolated vertices
/// dropped, has the shape `spec` describes.
pub fn verify_type_sr(g: &Graph, spec: &StarPairSpec) -> bool {
    type_sr_mismatch(g, spec).is_none()
}

/// Why [`verify_type_sr`] fails, or `None` when it holds.
pub fn type_sr_mismatch(g: &Graph, spec: &StarPairSpec) -> Option<String> {
    let sr = match strong_resolving_graph(g) {
        Ok(sr) => sr.sr,
        Err(e) => return Some(e.to_string()),
    };
    let edges: BTreeSet<(usize, usize)> = sr.edges().collect();
    let support: Vec<usize> = (0..sr.n()).filter(|&v| sr.degree(v) > 0).collect();
    let (extra_v, extra_e) = match spec.kind {
        1 => (0, 0),
        2 => (0, 1),
        3 => (1, 2),
        _ => (1, 3),
    };
    let want_v = spec.m + spec.n + 2 + extra_v;
    let want_e = spec.m + spec.n + extra_e;
    if support.len() != want_v || edges.len() != want_e {
        return Some(format!(
            "strong resolving graph has {} non-isolated vertices and {} edges, expected {want_v} and {want_e}",
            support.len(),
            edges.len()
        ));
    }
    let e = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
    let apex: Vec<Option<usize>> = if extra_v == 1 {
        support.iter().map(|&v| Some(v)).collect()
    } else {
        vec![None]
    };
    for (i, &c1) in support.iter().enumerate() {
        for &c2 in &support[i + 1..] {
            let joined = matches!(spec.kind, 2 | 4);
            if e(c1, c2) != joined {
                continue;
            }
            for &v in &apex {
                if v == Some(c1) || v == Some(c2) {
                    continue;
                }
                if let Some(v) = v {
                    if sr.degree(v) != 2 || !e(v, c1) || !e(v, c2) {
                        continue;
                    }
                }
                // every other edge is a star edge at exactly one centre
                let star_edges = edges.iter().filter(|&&(a, b)| {
                    Some(a) != v && Some(b) != v && !((a == c1 && b == c2) || (a == c2 && b == c1))
                });
                let mut ok = true;
                let mut sizes = [0, 0];
                for &(a, b) in star_edges {
                    let hits = [a, b].iter().filter(|&&x| x == c1 || x == c2).count();
                    if hits != 1 {
                        ok = false;
                        break;
                    }
                    let leaf = if a == c1 || a == c2 { b } else { a };
                    if sr.degree(leaf) != 1 {
                        ok = false;
                        break;
                    }
                    sizes[usize::from(a == c2 || b == c2)] += 1;
                }
                sizes.sort_unstable();
                if ok && sizes == [spec.m, spec.n] {
                    return None;
                }
            }
        }
    }
    Some(format!(
        "no choice of centres gives K_1,{} and K_1,{} with the type {} extras",
        spec.m, spec.n, spec.kind
    ))
}
