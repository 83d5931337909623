//! Canonical codes for small graphs, isomorphism-free enumeration, and
//! automorphism listing.

use std::collections::HashSet;

use super::{DistanceMatrix, Graph};

/// Largest order supported by [`canonical_code`].
pub const MAX_CANON_ORDER: usize = 11;

fn pair_bit(i: usize, j: usize, n: usize) -> u32 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    // row-major over the upper triangle
    (i * (2 * n - i - 1) / 2 + (j - i - 1)) as u32
}

/// Ordered cells of an isomorphism-invariant equitable-ish refinement.
fn refined_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&u| color[u]).collect();
                ns.sort_unstable();
                (color[v], ns)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = keys
            .drain(..)
            .map(|k| sorted.binary_search(&k).unwrap())
            .collect();
        let before = color.iter().collect::<HashSet<_>>().len();
        let after = sorted.len();
        color = next;
        if after == before {
            break;
        }
    }
    let classes = color.iter().max().map_or(0, |&m| m + 1);
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells.retain(|c| !c.is_empty());
    cells
}

fn for_each_permutation(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_permutation(items, k + 1, f);
        items.swap(k, i);
    }
}

/// A code equal for two graphs iff they are isomorphic. Limited to
/// `n <= 11` so the upper triangle fits in a `u64`.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(
        n <= MAX_CANON_ORDER,
        "canonical codes support n <= {MAX_CANON_ORDER}"
    );
    let cells = refined_cells(g);
    let mut pos = vec![0usize; n];
    let mut best = 0u64;
    let mut first = true;
    let edges: Vec<(usize, usize)> = g.edges().collect();

    fn rec(
        cells: &[Vec<usize>],
        ci: usize,
        offset: usize,
        pos: &mut Vec<usize>,
        edges: &[(usize, usize)],
        n: usize,
        best: &mut u64,
        first: &mut bool,
    ) {
        if ci == cells.len() {
            let code = edges.iter().fold(0u64, |acc, &(u, v)| {
                acc | 1u64 << pair_bit(pos[u], pos[v], n)
            });
            if *first || code > *best {
                *best = code;
                *first = false;
            }
            return;
        }
        let mut items = cells[ci].clone();
        let len = items.len();
        for_each_permutation(&mut items, 0, &mut |perm| {
            for (i, &v) in perm.iter().enumerate() {
                pos[v] = offset + i;
            }
            rec(cells, ci + 1, offset + len, pos, edges, n, best, first);
        });
    }
    rec(&cells, 0, 0, &mut pos, &edges, n, &mut best, &mut first);
    best
}

fn from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::with_order(n);
    for i in 0..n {
        for j in i + 1..n {
            if code >> pair_bit(i, j, n) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, in increasing code order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "exhaustive enumeration is limited to n <= 8");
    if n == 0 {
        return vec![Graph::with_order(0)];
    }
    let mut layer = vec![Graph::with_order(1)];
    for m in 2..=n {
        let mut seen = HashSet::new();
        for base in &layer {
            for mask in 0u32..(1 << (m - 1)) {
                let mut g = Graph::with_order(m);
                for (u, v) in base.edges() {
                    g.add_edge(u, v);
                }
                for u in 0..m - 1 {
                    if mask >> u & 1 == 1 {
                        g.add_edge(u, m - 1);
                    }
                }
                seen.insert(canonical_code(&g));
            }
        }
        let mut codes: Vec<u64> = seen.into_iter().collect();
        codes.sort_unstable();
        layer = codes.into_iter().map(|c| from_code(m, c)).collect();
    }
    layer
}

/// One representative of every isomorphism class of connected graphs on
/// `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

/// All automorphisms of a connected graph as vertex maps, or `None` once
/// more than `cap` have been found.
pub fn automorphisms(g: &Graph, d: &DistanceMatrix, cap: usize) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let signature: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            let mut row = d.row(v).to_vec();
            row.sort_unstable();
            row
        })
        .collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        v: usize,
        n: usize,
        d: &DistanceMatrix,
        signature: &[Vec<u32>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> bool {
        if v == n {
            out.push(map.clone());
            return out.len() <= cap;
        }
        for img in 0..n {
            if used[img] || signature[img] != signature[v] {
                continue;
            }
            if (0..v).any(|u| d.get(u, v) != d.get(map[u], img)) {
                continue;
            }
            map[v] = img;
            used[img] = true;
            let keep_going = rec(v + 1, n, d, signature, map, used, out, cap);
            used[img] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }

    if rec(0, n, d, &signature, &mut map, &mut used, &mut out, cap) {
        Some(out)
    } else {
        None
    }
}
