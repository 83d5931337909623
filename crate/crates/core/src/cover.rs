//! Exact minimum vertex cover by branch and bound.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    pub size: usize,
    /// Sorted vertex indices.
    pub cover: Vec<usize>,
    pub nodes_explored: u64,
}

impl CoverResult {
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        serde_json::json!({
            "size": self.size,
            "cover": self.cover.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
            "nodes_explored": self.nodes_explored,
        })
    }
}

pub fn is_vertex_cover(g: &Graph, set: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    g.edges().all(|(u, v)| inside[u] || inside[v])
}

struct Solver {
    adj: Vec<FixedBitSet>,
    nodes: u64,
}

impl Solver {
    fn new(g: &Graph) -> Solver {
        let n = g.n();
        let adj = (0..n)
            .map(|v| {
                let mut row = FixedBitSet::with_capacity(n);
                for &u in g.neighbors(v) {
                    row.insert(u);
                }
                row
            })
            .collect();
        Solver { adj, nodes: 0 }
    }

    fn degree(&self, v: usize, active: &FixedBitSet) -> usize {
        self.adj[v].intersection(active).count()
    }

    /// Size of a greedy maximal matching, a lower bound on any cover.
    fn matching_bound(&self, active: &FixedBitSet) -> usize {
        let mut free = active.clone();
        let mut size = 0;
        for v in active.ones() {
            if !free.contains(v) {
                continue;
            }
            if let Some(u) = self.adj[v].intersection(&free).next() {
                free.set(u, false);
                free.set(v, false);
                size += 1;
            }
        }
        size
    }

    /// Minimum cover of the subgraph induced by `active`, if smaller than
    /// `best`; otherwise `best` is left alone.
    fn search(&mut self, mut active: FixedBitSet, mut acc: usize, best: &mut usize) {
        self.nodes += 1;
        loop {
            let mut changed = false;
            for v in 0..active.len() {
                if !active.contains(v) {
                    continue;
                }
                match self.degree(v, &active) {
                    0 => {
                        active.set(v, false);
                        changed = true;
                    }
                    1 => {
                        let u = self.adj[v].intersection(&active).next().unwrap();
                        active.set(u, false);
                        active.set(v, false);
                        acc += 1;
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
        if acc >= *best {
            return;
        }
        if active.count_ones(..) == 0 {
            *best = acc;
            return;
        }
        if acc + self.matching_bound(&active) >= *best {
            return;
        }
        let (v, deg) = active
            .ones()
            .map(|v| (v, self.degree(v, &active)))
            .max_by_key(|&(v, deg)| (deg, std::cmp::Reverse(v)))
            .unwrap();
        let mut without_v = active.clone();
        without_v.set(v, false);
        self.search(without_v.clone(), acc + 1, best);
        let mut without_closed = without_v;
        without_closed.difference_with(&self.adj[v]);
        self.search(without_closed, acc + deg, best);
    }

    fn min_size(&mut self, active: FixedBitSet) -> usize {
        let mut best = active.count_ones(..) + 1;
        self.search(active, 0, &mut best);
        best
    }
}

/// Exact minimum vertex cover. Among minimum covers the one whose sorted
/// index sequence is lexicographically smallest is returned.
pub fn min_vertex_cover(g: &Graph) -> CoverResult {
    let n = g.n();
    let mut solver = Solver::new(g);
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let size = solver.min_size(all);

    // Fix vertices in index order, preferring inclusion whenever a minimum
    // cover extending the decisions so far still exists.
    let mut chosen = FixedBitSet::with_capacity(n);
    let mut excluded = FixedBitSet::with_capacity(n);
    for v in 0..n {
        if chosen.contains(v) || g.degree(v) == 0 {
            continue;
        }
        chosen.insert(v);
        if !extendable(&mut solver, &chosen, &excluded, size) {
            chosen.set(v, false);
            excluded.insert(v);
            // every neighbour of an excluded vertex is in the cover
            chosen.union_with(&solver.adj[v]);
        }
    }
    let cover: Vec<usize> = chosen.ones().collect();
    debug_assert_eq!(cover.len(), size);
    CoverResult {
        size,
        cover,
        nodes_explored: solver.nodes,
    }
}

fn extendable(
    solver: &mut Solver,
    chosen: &FixedBitSet,
    excluded: &FixedBitSet,
    target: usize,
) -> bool {
    let fixed = chosen.count_ones(..);
    if fixed > target {
        return false;
    }
    let mut rest = FixedBitSet::with_capacity(chosen.len());
    rest.insert_range(..);
    rest.difference_with(chosen);
    rest.difference_with(excluded);
    fixed + solver.min_size(rest) == target
}
