//! The planar case: where a two-anchor placement can put vertices, and the
//! structural consequences for graphs resolved by two vertices.

use super::Coord;
use crate::dimension::resolving_with;
use crate::error::{invalid, Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Grid points `(x, y)` with `x, y <= D`, `x + y >= a` and
/// `|x - y| <= a`, where `a` is the distance between the two anchors
/// placed at `(0, a)` and `(a, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FeasibleRegion {
    pub d: Coord,
    pub a: Coord,
}

pub fn feasible_region(d: Coord, a: Coord) -> Result<FeasibleRegion> {
    if a > d {
        return Err(invalid(format!("anchor distance {a} exceeds diameter {d}")));
    }
    Ok(FeasibleRegion { d, a })
}

impl FeasibleRegion {
    pub fn contains(&self, x: Coord, y: Coord) -> bool {
        x <= self.d && y <= self.d && x + y >= self.a && x.abs_diff(y) <= self.a
    }

    /// Member points, by `x` then `y`.
    pub fn cells(&self) -> Vec<(Coord, Coord)> {
        (0..=self.d)
            .flat_map(|x| (0..=self.d).map(move |y| (x, y)))
            .filter(|&(x, y)| self.contains(x, y))
            .collect()
    }
}

/// Structural checks for a graph resolved by `{w1, w2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dim2Report {
    pub anchor_degrees: [usize; 2],
    /// Both anchors have degree at most 3.
    pub anchor_degree_ok: bool,
    /// Exactly one shortest `w1`-`w2` path.
    pub geodesic_unique: bool,
    /// The path itself when unique.
    pub geodesic: Vec<usize>,
    /// Every vertex on the unique geodesic has degree at most 5.
    pub geodesic_degree_ok: bool,
    /// Every distance level around each anchor induces disjoint paths.
    pub levels_are_paths: bool,
    /// `|N_i(w_j)| <= 2i + 1` throughout.
    pub level_sizes_ok: bool,
    /// No vertex has more than three neighbours one level up or down.
    pub level_adjacency_ok: bool,
}

impl Dim2Report {
    pub fn all_pass(&self) -> bool {
        self.anchor_degree_ok
            && self.geodesic_unique
            && self.geodesic_degree_ok
            && self.levels_are_paths
            && self.level_sizes_ok
            && self.level_adjacency_ok
    }
}

/// Runs the planar structure checks for `h` with anchors `w`, which must
/// resolve `h`.
pub fn dim2_diagnostics(h: &Graph, w: [usize; 2]) -> Result<Dim2Report> {
    h.require_connected()?;
    let d = DistanceMatrix::new(h);
    if let Some((u, v)) = crate::dimension::unresolved_pair(&d, &w) {
        return Err(Error::NotResolving(
            format!("[{:?}, {:?}]", h.label(w[0]), h.label(w[1])),
            h.label(u).to_string(),
            h.label(v).to_string(),
        ));
    }
    debug_assert!(resolving_with(&d, &w));

    let anchor_degrees = [h.degree(w[0]), h.degree(w[1])];
    let (geodesic_unique, geodesic) = unique_geodesic(h, &d, w[0], w[1]);
    let geodesic_degree_ok = geodesic.iter().all(|&v| h.degree(v) <= 5);

    let mut levels_are_paths = true;
    let mut level_sizes_ok = true;
    let mut level_adjacency_ok = true;
    for &wj in &w {
        let ecc = d.eccentricity(wj) as usize;
        let mut levels = vec![Vec::new(); ecc + 1];
        for v in 0..h.n() {
            levels[d.get(v, wj) as usize].push(v);
        }
        for (i, level) in levels.iter().enumerate() {
            level_sizes_ok &= level.len() <= 2 * i + 1;
            levels_are_paths &= induces_linear_forest(h, level);
            for &v in level {
                let up = h
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| d.get(u, wj) as usize == i + 1);
                let down = h
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| d.get(u, wj) as usize + 1 == i);
                level_adjacency_ok &= up.count() <= 3 && down.count() <= 3;
            }
        }
    }
    Ok(Dim2Report {
        anchor_degrees,
        anchor_degree_ok: anchor_degrees.iter().all(|&x| x <= 3),
        geodesic_unique,
        geodesic: if geodesic_unique {
            geodesic
        } else {
            Vec::new()
        },
        geodesic_degree_ok,
        levels_are_paths,
        level_sizes_ok,
        level_adjacency_ok,
    })
}

/// Whether there is exactly one shortest `s`-`t` path, and one such path.
fn unique_geodesic(h: &Graph, d: &DistanceMatrix, s: usize, t: usize) -> (bool, Vec<usize>) {
    let dst = d.get(s, t);
    let mut path = vec![s];
    let mut unique = true;
    let mut cur = s;
    while cur != t {
        let next: Vec<usize> = h
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|&x| d.get(s, x) == d.get(s, cur) + 1 && d.get(s, x) + d.get(x, t) == dst)
            .collect();
        unique &= next.len() == 1;
        cur = next[0];
        path.push(cur);
    }
    (unique, path)
}

/// Maximum degree at most 2 and no cycle inside `set`.
pub(crate) fn induces_linear_forest(h: &Graph, set: &[usize]) -> bool {
    let inside = |v: usize| set.binary_search(&v).is_ok();
    let mut edges = 0;
    for &v in set {
        let deg = h.neighbors(v).iter().filter(|&&u| inside(u)).count();
        if deg > 2 {
            return false;
        }
        edges += deg;
    }
    edges /= 2;
    // a forest has |V| - components edges
    let mut seen = vec![false; h.n()];
    let mut components = 0;
    for &s in set {
        if seen[s] {
            continue;
        }
        components += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &u in h.neighbors(v) {
                if inside(u) && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    edges + components == set.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, parse_edge_list, Family};

    #[test]
    fn region_membership() {
        let r = feasible_region(5, 5).unwrap();
        assert!(r.contains(0, 5));
        assert!(!r.contains(0, 0));
        let r = feasible_region(5, 2).unwrap();
        assert!(!r.contains(5, 2));
        assert!(r.contains(4, 2));
        assert!(feasible_region(3, 4).is_err());
    }

    #[test]
    fn region_cells_are_members() {
        let r = feasible_region(4, 2).unwrap();
        let cells = r.cells();
        assert!(cells.contains(&(0, 2)) && cells.contains(&(2, 0)));
        assert!(cells.iter().all(|&(x, y)| r.contains(x, y)));
        // column x = i holds 2i+1 points while i <= a and the grid allows
        assert_eq!(cells.iter().filter(|c| c.0 == 1).count(), 3);
    }

    #[test]
    fn diagnostics_on_a_cycle() {
        let c6 = generate(&Family::Cycle(6)).unwrap();
        let report = dim2_diagnostics(&c6, [0, 1]).unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.geodesic, [0, 1]);
    }

    #[test]
    fn diagnostics_need_a_resolving_pair() {
        let c6 = generate(&Family::Cycle(6)).unwrap();
        assert!(dim2_diagnostics(&c6, [0, 3]).is_err());
        let c4 = generate(&Family::Cycle(4)).unwrap();
        assert!(dim2_diagnostics(&c4, [0, 2]).is_err());
    }

    #[test]
    fn linear_forest() {
        let g = parse_edge_list("a b\nb c\nc a\nc d").unwrap();
        assert!(!induces_linear_forest(&g, &[0, 1, 2]));
        assert!(induces_linear_forest(&g, &[0, 1, 3]));
    }
}
