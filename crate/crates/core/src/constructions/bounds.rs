//! Supergraphs that certify upper bounds on the threshold strong
//! dimension: one from a proper colouring, one for trees.

use crate::dimension::strong_dimension_with;
use crate::error::{invalid, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Colour classes sorted by size ascending (ties by smallest member).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperColoring {
    pub classes: Vec<Vec<usize>>,
}

impl ProperColoring {
    /// Validates that `classes` partition the vertices into independent sets.
    pub fn new(g: &Graph, classes: Vec<Vec<usize>>) -> Result<ProperColoring> {
        let mut class_of = vec![usize::MAX; g.n()];
        for (i, c) in classes.iter().enumerate() {
            if c.is_empty() {
                return Err(invalid("empty colour class"));
            }
            for &v in c {
                if v >= g.n() || class_of[v] != usize::MAX {
                    return Err(invalid(format!(
                        "vertex {v} is missing from or repeated in the colouring"
                    )));
                }
                class_of[v] = i;
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(invalid(format!("vertex {} has no colour", g.label(v))));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| class_of[u] == class_of[v]) {
            return Err(invalid(format!(
                "not a proper colouring: {} and {} are adjacent and share a colour",
                g.label(u),
                g.label(v)
            )));
        }
        Ok(ProperColoring::sorted(classes))
    }

    fn sorted(mut classes: Vec<Vec<usize>>) -> ProperColoring {
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        ProperColoring { classes }
    }

    fn from_colors(colors: &[usize]) -> ProperColoring {
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].push(v);
        }
        ProperColoring::sorted(classes)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

fn saturation_pick(g: &Graph, colors: &[Option<usize>]) -> Option<usize> {
    (0..g.n())
        .filter(|&v| colors[v].is_none())
        .max_by_key(|&v| {
            let mut seen: Vec<usize> = g.neighbors(v).iter().filter_map(|&u| colors[u]).collect();
            seen.sort_unstable();
            seen.dedup();
            (seen.len(), g.degree(v), std::cmp::Reverse(v))
        })
}

/// DSatur colouring.
pub fn greedy_coloring(g: &Graph) -> ProperColoring {
    let mut colors: Vec<Option<usize>> = vec![None; g.n()];
    while let Some(v) = saturation_pick(g, &colors) {
        let c = (0..)
            .find(|&c| g.neighbors(v).iter().all(|&u| colors[u] != Some(c)))
            .unwrap();
        colors[v] = Some(c);
    }
    ProperColoring::from_colors(&colors.into_iter().map(Option::unwrap).collect::<Vec<_>>())
}

const COLORING_NODE_CAP: u64 = 2_000_000;

fn color_with(
    g: &Graph,
    k: usize,
    colors: &mut Vec<Option<usize>>,
    used: usize,
    nodes: &mut u64,
) -> Option<bool> {
    *nodes += 1;
    if *nodes > COLORING_NODE_CAP {
        return None;
    }
    let Some(v) = saturation_pick(g, colors) else {
        return Some(true);
    };
    // a fresh colour is interchangeable with any other fresh colour
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().any(|&u| colors[u] == Some(c)) {
            continue;
        }
        colors[v] = Some(c);
        match color_with(g, k, colors, used.max(c + 1), nodes)? {
            true => return Some(true),
            false => {}
        }
    }
    colors[v] = None;
    Some(false)
}

/// A colouring with the fewest colours, by exact backtracking. Returns
/// `None` when the search exceeds its node cap.
pub fn optimal_coloring(g: &Graph) -> Option<ProperColoring> {
    let greedy = greedy_coloring(g);
    let mut best = greedy.clone();
    let lower = if g.edge_count() > 0 { 2 } else { 1 };
    let mut nodes = 0;
    for k in (lower..greedy.len()).rev() {
        let mut colors = vec![None; g.n()];
        match color_with(g, k, &mut colors, 0, &mut nodes)? {
            true => {
                best = ProperColoring::from_colors(
                    &colors.into_iter().map(Option::unwrap).collect::<Vec<_>>(),
                )
            }
            false => break,
        }
    }
    Some(best)
}

/// A supergraph together with the bound it certifies and the set the
/// construction intends as its strong basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundSupergraph {
    pub supergraph: Graph,
    pub bound: usize,
    pub anchors: Vec<usize>,
}

fn ceil_log2(x: usize) -> usize {
    x.next_power_of_two().trailing_zeros() as usize
}

/// Subsets of `0..bits` as bitmasks in counting order, skipping `taken`.
fn fresh_masks(bits: usize, taken: &[u64]) -> impl Iterator<Item = u64> + '_ {
    (0..1u64 << bits).filter(move |m| !taken.contains(m))
}

/// The colouring bound: complete the colouring to a complete multipartite
/// graph, give the non-basis vertices of each class of size >= 2 distinct
/// proper subsets of that class's basis as neighbourhoods, and make all
/// non-basis vertices of a class a clique. The bound is
/// `l - 1 + sum ceil(log2 |V_i|)` over the non-singleton classes when there
/// are `l >= 1` singleton classes, and the plain sum otherwise.
pub fn chromatic_bound_supergraph(g: &Graph, coloring: &ProperColoring) -> Result<BoundSupergraph> {
    let coloring = ProperColoring::new(g, coloring.classes.clone())?;
    let mut h = Graph::new(g.labels().iter().cloned())?;
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    let classes = &coloring.classes;
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            for &u in a {
                for &v in b {
                    h.add_edge(u, v);
                }
            }
        }
    }
    let singles: Vec<usize> = classes
        .iter()
        .filter(|c| c.len() == 1)
        .map(|c| c[0])
        .collect();
    let mut anchors: Vec<usize> = singles
        .iter()
        .copied()
        .take(singles.len().saturating_sub(1))
        .collect();
    for class in classes.iter().filter(|c| c.len() > 1) {
        let r = ceil_log2(class.len());
        let (basis, rest) = class.split_at(r);
        anchors.extend_from_slice(basis);
        let full = (1u64 << r) - 1;
        for (&v, mask) in rest.iter().zip(fresh_masks(r, &[full])) {
            for (j, &w) in basis.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    h.add_edge(v, w);
                }
            }
        }
        for (i, &u) in rest.iter().enumerate() {
            for &v in &rest[i + 1..] {
                h.add_edge(u, v);
            }
        }
    }
    anchors.sort_unstable();
    Ok(BoundSupergraph {
        supergraph: h,
        bound: anchors.len(),
        anchors,
    })
}

/// The tree bound `ceil(log2 n)`. With fewer leaves than that the tree
/// itself is returned with bound `leaves - 1`. Otherwise the first
/// `ceil(log2 n)` leaves form `W`; every other vertex gets a distinct
/// `W`-neighbourhood (keeping the leaves it already has), one of them gets
/// all of `W`, and the non-`W` vertices become a clique.
pub fn tree_bound_supergraph(t: &Graph) -> Result<BoundSupergraph> {
    if !t.is_tree() {
        return Err(invalid("the tree bound needs a tree"));
    }
    let n = t.n();
    if n < 2 {
        return Err(invalid("the tree bound needs at least 2 vertices"));
    }
    let leaves = t.leaves();
    let r = ceil_log2(n);
    if leaves.len() < r {
        return Ok(BoundSupergraph {
            supergraph: t.clone(),
            bound: leaves.len() - 1,
            anchors: leaves[..leaves.len() - 1].to_vec(),
        });
    }
    let basis = &leaves[..r];
    let bit = |v: usize| basis.iter().position(|&w| w == v);
    let full = (1u64 << r) - 1;
    let others: Vec<usize> = (0..n).filter(|v| bit(*v).is_none()).collect();
    let mut mask = vec![None; n];
    for &v in &others {
        let m: u64 = t
            .neighbors(v)
            .iter()
            .filter_map(|&u| bit(u))
            .map(|j| 1u64 << j)
            .sum();
        if m != 0 {
            mask[v] = Some(m);
        }
    }
    let mut taken: Vec<u64> = mask.iter().flatten().copied().collect();
    if !taken.contains(&full) {
        // the full set goes to the first vertex without basis leaves; if
        // every vertex already has some, the first such vertex is widened
        let v = others
            .iter()
            .copied()
            .find(|&v| mask[v].is_none())
            .unwrap_or(others[0]);
        taken.retain(|&m| Some(m) != mask[v]);
        mask[v] = Some(full);
        taken.push(full);
    }
    let free: Vec<u64> = fresh_masks(r, &taken).collect();
    let mut free = free.into_iter();
    for &v in &others {
        if mask[v].is_none() {
            mask[v] = Some(free.next().expect("2^r >= n leaves enough subsets"));
        }
    }
    let mut h = t.clone();
    for &v in &others {
        let m = mask[v].unwrap();
        for (j, &w) in basis.iter().enumerate() {
            if m >> j & 1 == 1 {
                h.add_edge(v, w);
            }
        }
    }
    for (i, &u) in others.iter().enumerate() {
        for &v in &others[i + 1..] {
            h.add_edge(u, v);
        }
    }
    Ok(BoundSupergraph {
        supergraph: h,
        bound: r,
        anchors: basis.to_vec(),
    })
}

/// The best upper bound the constructions give, as the strong dimension
/// of the built supergraph, which is computed rather than trusted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperBound {
    pub value: usize,
    /// "tree" or "chromatic".
    pub source: &'static str,
    /// A strong basis of the supergraph.
    pub witness: Option<Vec<usize>>,
}

pub fn construction_upper_bound(g: &Graph) -> Result<Option<UpperBound>> {
    if g.n() < 2 {
        return Ok(None);
    }
    let mut best: Option<UpperBound> = None;
    let mut consider = |b: BoundSupergraph, source: &'static str| {
        let dh = DistanceMatrix::new(&b.supergraph);
        let sd = strong_dimension_with(&b.supergraph, &dh);
        if best.as_ref().map_or(true, |x| sd.value < x.value) {
            best = Some(UpperBound {
                value: sd.value,
                source,
                witness: Some(sd.witness),
            });
        }
    };
    if g.is_tree() {
        consider(tree_bound_supergraph(g)?, "tree");
    }
    let coloring = optimal_coloring(g).unwrap_or_else(|| greedy_coloring(g));
    consider(chromatic_bound_supergraph(g, &coloring)?, "chromatic");
    Ok(best)
}
