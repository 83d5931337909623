//! Two-anchor placements of trees with four or five leaves.
//!
//! A four-leaf tree is a spine `v1..v_{k1}` with pendant paths `y, z` at
//! `v1` and `u, x` at `v_{k1}`; a five-leaf tree adds a pendant path `t`
//! at `v_{k7}`. Segment lengths are `k1..k5` (and `k6` for `t`).

use crate::embedding::{Coord, Embedding};
use crate::error::{invalid, Result};
use crate::graph::Graph;

use super::placed_graph;

/// `k = [k1, k2, k3, k4, k5]`: spine, `u`, `x`, `y`, `z` lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FourLeafTreeParams {
    pub k: [usize; 5],
}

/// `k = [k1, .., k7]`; `k6` is the length of `t` and `k7` the spine index
/// it hangs from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiveLeafTreeParams {
    pub k: [usize; 7],
}

impl FourLeafTreeParams {
    /// Requires every length positive, `k2 >= k3` and `k4 >= k5`.
    pub fn new(k: [usize; 5]) -> Result<FourLeafTreeParams> {
        if k.contains(&0) {
            return Err(invalid(format!("segment lengths must be positive: {k:?}")));
        }
        if k[1] < k[2] || k[3] < k[4] {
            return Err(invalid(format!("need k2 >= k3 and k4 >= k5: {k:?}")));
        }
        Ok(FourLeafTreeParams { k })
    }
}

impl FiveLeafTreeParams {
    pub fn new(k: [usize; 7]) -> Result<FiveLeafTreeParams> {
        FourLeafTreeParams::new([k[0], k[1], k[2], k[3], k[4]])?;
        if k[5] == 0 || k[6] == 0 || k[6] > k[0] {
            return Err(invalid(format!("need k6 >= 1 and 1 <= k7 <= k1: {k:?}")));
        }
        Ok(FiveLeafTreeParams { k })
    }

    pub fn four_leaf_part(&self) -> FourLeafTreeParams {
        FourLeafTreeParams {
            k: [self.k[0], self.k[1], self.k[2], self.k[3], self.k[4]],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeParams {
    FourLeaf(FourLeafTreeParams),
    FiveLeaf(FiveLeafTreeParams),
}

/// Segment lengths of a tree together with the role of each vertex:
/// `roles[v]` is a label such as `"v2"` or `"t1"` in the tree the
/// parameters build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTree {
    pub params: TreeParams,
    pub roles: Vec<String>,
}

type Points = Vec<(String, Vec<Coord>)>;
type Edges = Vec<(String, String)>;

fn segment(edges: &mut Edges, name: &str, len: usize) {
    for i in 1..len {
        edges.push((format!("{name}{i}"), format!("{name}{}", i + 1)));
    }
}

/// Spine vertices with odd index (and `v_{k1}`) run along the anti-diagonal
/// `x + y = K` from `y_{k4}` at `(0, K)` to `u_{k2}`; the rest run one
/// diagonal further out starting with `z_{k5}` at `(k4 - k5 + 1, ..)`.
fn four_leaf_layout(p: &FourLeafTreeParams) -> (Points, Edges) {
    let [k1, k2, k3, k4, k5] = p.k;
    let big_k = (k1 / 2 + k2 + k4) as Coord;
    let mut first: Vec<String> = (1..=k4).rev().map(|i| format!("y{i}")).collect();
    first.extend(
        (1..=k1)
            .filter(|&i| i % 2 == 1 || i == k1)
            .map(|i| format!("v{i}")),
    );
    first.extend((1..=k2).map(|i| format!("u{i}")));
    let mut second: Vec<String> = (1..=k5).rev().map(|i| format!("z{i}")).collect();
    second.extend((1..k1).filter(|&i| i % 2 == 0).map(|i| format!("v{i}")));
    second.extend((1..=k3).map(|i| format!("x{i}")));

    let mut points = Vec::new();
    for (i, l) in first.into_iter().enumerate() {
        let i = i as Coord;
        points.push((l, vec![i, big_k - i]));
    }
    let start = (k4 - k5 + 1) as Coord;
    for (j, l) in second.into_iter().enumerate() {
        let x = start + j as Coord;
        points.push((l, vec![x, big_k + 1 - x]));
    }
    let mut edges = Vec::new();
    for (name, len) in [("v", k1), ("u", k2), ("x", k3), ("y", k4), ("z", k5)] {
        segment(&mut edges, name, len);
    }
    for (a, b) in [("v1", "y1"), ("v1", "z1")] {
        edges.push((a.to_string(), b.to_string()));
    }
    for b in ["u1", "x1"] {
        edges.push((format!("v{k1}"), b.to_string()));
    }
    (points, edges)
}

/// Builds the four-leaf tree with lengths `p` and its `{y_{k4}, u_{k2}}`-
/// resolved isometric placement.
pub fn tree_dim3_embedding(p: &FourLeafTreeParams) -> Result<(Graph, Embedding)> {
    let p = FourLeafTreeParams::new(p.k)?;
    let (points, edges) = four_leaf_layout(&p);
    let anchors = [format!("y{}", p.k[3]), format!("u{}", p.k[1])];
    placed_graph(&sorted_roles(points), &edges, &[&anchors[0], &anchors[1]])
}

/// Builds the five-leaf tree with lengths `p`: the four-leaf placement of
/// the tree without `t`, then `t1..t_{k6}` stepping up and right from
/// `v_{k7}`.
pub fn tree_dim4_embedding(p: &FiveLeafTreeParams) -> Result<(Graph, Embedding)> {
    let p = FiveLeafTreeParams::new(p.k)?;
    let (mut points, mut edges) = four_leaf_layout(&p.four_leaf_part());
    let root = format!("v{}", p.k[6]);
    let base = points.iter().find(|(l, _)| *l == root).unwrap().1.clone();
    for i in 1..=p.k[5] {
        let step = i as Coord;
        points.push((format!("t{i}"), vec![base[0] + step, base[1] + step]));
    }
    segment(&mut edges, "t", p.k[5]);
    edges.push((root, "t1".to_string()));
    let anchors = [format!("y{}", p.k[3]), format!("u{}", p.k[1])];
    placed_graph(&sorted_roles(points), &edges, &[&anchors[0], &anchors[1]])
}

/// Orders vertices `v, u, x, y, z, t`, each by index.
fn sorted_roles(mut points: Points) -> Points {
    let key = |l: &str| {
        let rank = "vuxyzt".find(&l[..1]).unwrap();
        (rank, l[1..].parse::<usize>().unwrap())
    };
    points.sort_by_key(|(l, _)| key(l));
    points
}

/// Walks from `first` away from `from` until a leaf; `None` if the walk
/// meets a vertex of degree 3 or more.
fn pendant_path(t: &Graph, from: usize, first: usize) -> Option<Vec<usize>> {
    let mut path = vec![first];
    let (mut prev, mut cur) = (from, first);
    loop {
        match t.degree(cur) {
            1 => return Some(path),
            2 => {
                let next = t
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&x| x != prev)
                    .unwrap();
                path.push(next);
                (prev, cur) = (cur, next);
            }
            _ => return None,
        }
    }
}

fn tree_path(t: &Graph, a: usize, b: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; t.n()];
    let mut queue = std::collections::VecDeque::from([a]);
    parent[a] = a;
    while let Some(v) = queue.pop_front() {
        for &u in t.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    let mut path = vec![b];
    while *path.last().unwrap() != a {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

/// Candidate role assignment for one spine orientation.
struct Assignment {
    key: Vec<usize>,
    roles: Vec<(Vec<usize>, &'static str)>,
    spine: Vec<usize>,
    t_at: usize,
}

/// Segment lengths and vertex roles for a tree with four or five leaves,
/// or `None` for any other leaf count. Among the valid ways to read the
/// tree, the one with the lexicographically largest `(k2, k3, k4, k5, k6)`
/// is chosen, so the longest pendant paths hang at the `u` end.
pub fn canonical_tree_params(t: &Graph) -> Result<Option<CanonicalTree>> {
    if !t.is_tree() {
        return Err(invalid("tree parameters need a tree"));
    }
    let leaves = t.leaves().len();
    if leaves != 4 && leaves != 5 {
        return Ok(None);
    }
    let branch: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) >= 3).collect();
    let mut best: Option<Assignment> = None;
    for &p in &branch {
        for &q in &branch {
            let spine = tree_path(t, p, q);
            // pendant paths off the spine, grouped by attachment index
            let mut legs: Vec<(usize, Vec<usize>)> = Vec::new();
            let mut ok = true;
            for (i, &s) in spine.iter().enumerate() {
                for &x in t.neighbors(s) {
                    if spine.contains(&x) {
                        continue;
                    }
                    match pendant_path(t, s, x) {
                        Some(path) => legs.push((i, path)),
                        None => ok = false,
                    }
                }
            }
            if !ok || legs.len() != leaves {
                continue;
            }
            let last = spine.len() - 1;
            let at_start: Vec<usize> = (0..legs.len()).filter(|&j| legs[j].0 == 0).collect();
            let at_end: Vec<usize> = (0..legs.len()).filter(|&j| legs[j].0 == last).collect();
            // choose y, z at the start, u, x at the end, t anywhere else
            for &y in &at_start {
                for &z in &at_start {
                    for &u in &at_end {
                        for &x in &at_end {
                            let picked = [y, z, u, x];
                            if (0..4).any(|i| (i + 1..4).any(|j| picked[i] == picked[j])) {
                                continue;
                            }
                            let rest: Vec<usize> =
                                (0..legs.len()).filter(|j| !picked.contains(j)).collect();
                            let len = |j: usize| legs[j].1.len();
                            if len(u) < len(x) || len(y) < len(z) {
                                continue;
                            }
                            let mut key = vec![len(u), len(x), len(y), len(z)];
                            let mut roles = vec![
                                (legs[u].1.clone(), "u"),
                                (legs[x].1.clone(), "x"),
                                (legs[y].1.clone(), "y"),
                                (legs[z].1.clone(), "z"),
                            ];
                            let mut t_at = 0;
                            if let [tl] = rest[..] {
                                key.push(len(tl));
                                roles.push((legs[tl].1.clone(), "t"));
                                t_at = legs[tl].0 + 1;
                            }
                            if best.as_ref().map_or(true, |b| key > b.key) {
                                best = Some(Assignment {
                                    key,
                                    roles,
                                    spine: spine.clone(),
                                    t_at,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    let Some(a) = best else {
        return Err(invalid(
            "tree has the right leaf count but no spine reading",
        ));
    };
    let mut roles = vec![String::new(); t.n()];
    for (i, &v) in a.spine.iter().enumerate() {
        roles[v] = format!("v{}", i + 1);
    }
    for (path, name) in &a.roles {
        for (i, &v) in path.iter().enumerate() {
            roles[v] = format!("{name}{}", i + 1);
        }
    }
    let k1 = a.spine.len();
    let params = match a.key[..] {
        [k2, k3, k4, k5] => TreeParams::FourLeaf(FourLeafTreeParams::new([k1, k2, k3, k4, k5])?),
        [k2, k3, k4, k5, k6] => {
            TreeParams::FiveLeaf(FiveLeafTreeParams::new([k1, k2, k3, k4, k5, k6, a.t_at])?)
        }
        _ => unreachable!(),
    };
    Ok(Some(CanonicalTree { params, roles }))
}

/// A two-anchor resolved isometric placement of a tree with four or five
/// leaves, indexed like `t`, or `None` for other leaf counts.
pub fn embed_tree(t: &Graph) -> Result<Option<Embedding>> {
    let Some(c) = canonical_tree_params(t)? else {
        return Ok(None);
    };
    let (h, e) = match &c.params {
        TreeParams::FourLeaf(p) => tree_dim3_embedding(p)?,
        TreeParams::FiveLeaf(p) => tree_dim4_embedding(p)?,
    };
    let placement = c
        .roles
        .iter()
        .map(|r| e.placement[h.vertex(r).expect("roles name built vertices")].clone())
        .collect();
    let anchors = e
        .anchors
        .iter()
        .map(|&w| c.roles.iter().position(|r| r == h.label(w)).unwrap())
        .collect();
    Embedding::new(e.side, anchors, placement).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::certify;
    use crate::graph::{generate, parse_edge_list, Family};

    fn at(g: &Graph, e: &Embedding, l: &str) -> Vec<Coord> {
        e.placement[g.index_of(l).unwrap()].clone()
    }

    #[test]
    fn odd_spine_layout() {
        let (g, e) =
            tree_dim3_embedding(&FourLeafTreeParams::new([3, 4, 4, 4, 3]).unwrap()).unwrap();
        assert_eq!(at(&g, &e, "y4"), [0, 9]);
        assert_eq!(at(&g, &e, "u4"), [9, 0]);
        assert_eq!(at(&g, &e, "z1"), [4, 6]);
        assert_eq!(certify(&e, &g, true), Ok(()));
    }

    #[test]
    fn even_spine_layout() {
        let (g, e) =
            tree_dim3_embedding(&FourLeafTreeParams::new([4, 2, 2, 3, 2]).unwrap()).unwrap();
        assert_eq!(at(&g, &e, "y3"), [0, 7]);
        assert_eq!(at(&g, &e, "x2"), [6, 2]);
        assert_eq!(certify(&e, &g, true), Ok(()));
    }

    #[test]
    fn five_leaf_layouts() {
        let (g, e) =
            tree_dim4_embedding(&FiveLeafTreeParams::new([3, 2, 2, 3, 2, 3, 2]).unwrap()).unwrap();
        assert_eq!(at(&g, &e, "t3"), [7, 6]);
        assert_eq!(e.side, 8);
        assert_eq!(certify(&e, &g, true), Ok(()));
        let (g, e) =
            tree_dim4_embedding(&FiveLeafTreeParams::new([4, 2, 2, 3, 2, 2, 4]).unwrap()).unwrap();
        assert_eq!(at(&g, &e, "t2"), [7, 4]);
        assert_eq!(certify(&e, &g, true), Ok(()));
    }

    #[test]
    fn reading_parameters_back() {
        let (g, _) =
            tree_dim3_embedding(&FourLeafTreeParams::new([3, 4, 4, 4, 3]).unwrap()).unwrap();
        let c = canonical_tree_params(&g).unwrap().unwrap();
        assert_eq!(
            c.params,
            TreeParams::FourLeaf(FourLeafTreeParams { k: [3, 4, 4, 4, 3] })
        );
        let spider = parse_edge_list("c a1\na1 a2\nc b1\nc d1\nc e1\ne1 e2\ne2 e3").unwrap();
        let c = canonical_tree_params(&spider).unwrap().unwrap();
        assert_eq!(
            c.params,
            TreeParams::FourLeaf(FourLeafTreeParams { k: [1, 3, 2, 1, 1] })
        );
        assert_eq!(c.roles[spider.index_of("c").unwrap()], "v1");
        let p10 = generate(&Family::Path(10)).unwrap();
        assert_eq!(canonical_tree_params(&p10).unwrap(), None);
        assert!(canonical_tree_params(&generate(&Family::Cycle(5)).unwrap()).is_err());
    }

    #[test]
    fn embedding_an_arbitrary_labelled_tree() {
        let t = parse_edge_list("a b\nb c\nc d\nd e\nb f\nf g\nd h\nc i\ni j").unwrap();
        let e = embed_tree(&t).unwrap().unwrap();
        assert_eq!(certify(&e, &t, true), Ok(()));
    }

    #[test]
    fn parameter_validation() {
        assert!(FourLeafTreeParams::new([1, 1, 2, 1, 1]).is_err());
        assert!(FourLeafTreeParams::new([0, 1, 1, 1, 1]).is_err());
        assert!(FiveLeafTreeParams::new([2, 1, 1, 1, 1, 1, 3]).is_err());
    }
}
