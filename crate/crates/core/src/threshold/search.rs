//! Depth-first placement search with forward checking.
//!
//! Every vertex keeps a domain of grid cells, stored as a bitset. Placing a
//! vertex `x` at cell `c` prunes the other domains with necessary
//! conditions:
//!
//! * `cheb(c, p) <= d_G(x, z)` for every other vertex `z` at `p`, since
//!   induced distances are at least product distances and at most host
//!   distances;
//! * for an anchor `w_i` at `c`, every point `p` must satisfy
//!   `p_i = cheb(p, c)`, which is what a coordinate equal to the induced
//!   anchor distance forces;
//! * injectivity.
//!
//! What remains of the W-resolved and isometry conditions is local: for an
//! ordered pair `(u, v)` at product distance `d >= 2` some occupied cell
//! next to `u` must lie at distance `d - 1` from `v`. These requirements
//! are tracked for the pairs that matter (`v` an anchor, or every pair in
//! strong mode), each watching one cell that could still satisfy it. A
//! requirement that no occupied or still-reachable cell can satisfy cuts
//! the branch. Leaves are certified from scratch.

use crate::embedding::{certify, region::induces_linear_forest, Coord, Embedding};
use crate::graph::{DistanceMatrix, Graph};

use super::{SearchMode, SearchOutcome};

/// Grids above this many cells are refused.
pub const MAX_CELLS: usize = 1 << 22;

pub(crate) struct Grid {
    k: usize,
    side: usize,
    cells: usize,
    words: usize,
    /// `coords[c * k + i]`
    coords: Vec<Coord>,
    /// `interval[(i * side + lo) * side + hi]`: cells with `lo <= p_i <= hi`
    interval: Vec<Vec<u64>>,
    /// Per-coordinate offsets of the king moves.
    moves: Vec<Vec<i32>>,
}

impl Grid {
    pub(crate) fn new(k: usize, side: usize) -> Grid {
        let cells = side.pow(k as u32);
        let words = cells.div_ceil(64).max(1);
        let mut coords = vec![0; cells * k];
        for c in 0..cells {
            let mut rest = c;
            for i in 0..k {
                coords[c * k + i] = (rest % side) as Coord;
                rest /= side;
            }
        }
        let mut interval = Vec::with_capacity(k * side * side);
        for i in 0..k {
            for lo in 0..side {
                for hi in 0..side {
                    let mut mask = vec![0u64; words];
                    if lo <= hi {
                        for c in 0..cells {
                            let x = coords[c * k + i] as usize;
                            if lo <= x && x <= hi {
                                mask[c / 64] |= 1 << (c % 64);
                            }
                        }
                    }
                    interval.push(mask);
                }
            }
        }
        let mut moves = Vec::new();
        let total = 3usize.pow(k as u32);
        for m in 0..total {
            let mut rest = m;
            let delta: Vec<i32> = (0..k)
                .map(|_| {
                    let d = (rest % 3) as i32 - 1;
                    rest /= 3;
                    d
                })
                .collect();
            if delta.iter().any(|&d| d != 0) {
                moves.push(delta);
            }
        }
        Grid {
            k,
            side,
            cells,
            words,
            coords,
            interval,
            moves,
        }
    }

    #[inline]
    fn coord(&self, c: usize) -> &[Coord] {
        &self.coords[c * self.k..(c + 1) * self.k]
    }

    #[inline]
    fn cheb(&self, a: usize, b: usize) -> Coord {
        crate::embedding::cheb(self.coord(a), self.coord(b))
    }

    fn interval(&self, i: usize, lo: usize, hi: usize) -> &[u64] {
        &self.interval[(i * self.side + lo) * self.side + hi]
    }

    fn cell_of(&self, p: &[Coord]) -> usize {
        p.iter()
            .rev()
            .fold(0, |acc, &x| acc * self.side + x as usize)
    }

    /// King-move neighbours of `c` inside the grid.
    fn neighbours(&self, c: usize, out: &mut Vec<usize>) {
        out.clear();
        let p = self.coord(c);
        'next: for delta in &self.moves {
            let mut q = 0usize;
            for i in (0..self.k).rev() {
                let x = p[i] as i32 + delta[i];
                if x < 0 || x >= self.side as i32 {
                    continue 'next;
                }
                q = q * self.side + x as usize;
            }
            out.push(q);
        }
    }
}

#[inline]
fn test(bits: &[u64], c: usize) -> bool {
    bits[c / 64] >> (c % 64) & 1 == 1
}

#[inline]
fn clear(bits: &mut [u64], c: usize) {
    bits[c / 64] &= !(1 << (c % 64));
}

#[inline]
fn and_into(dst: &mut [u64], src: &[u64]) -> bool {
    let mut any = 0;
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= *s;
        any |= *d;
    }
    any != 0
}

fn popcount(bits: &[u64]) -> u32 {
    bits.iter().map(|w| w.count_ones()).sum()
}

fn ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}

#[derive(Clone, Copy)]
struct Requirement {
    u: usize,
    v: usize,
    d: Coord,
    watch: usize,
}

pub(crate) struct Report {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

enum Step {
    Found(Embedding),
    Exhausted,
    Failed,
}

pub(crate) struct Search<'a> {
    g: &'a Graph,
    grid: &'a Grid,
    d: &'a DistanceMatrix,
    anchors: Vec<usize>,
    strong: bool,
    planar: bool,
    maxc: usize,
    n: usize,
    budget: u64,
    nodes: u64,
    pos: Vec<usize>,
    occupant: Vec<usize>,
    anchor_index: Vec<Option<usize>>,
    upper: Vec<Vec<Coord>>,
    rank: Vec<usize>,
    /// `doms[depth]` holds `n * words` words.
    doms: Vec<Vec<u64>>,
    reqs: Vec<Vec<Requirement>>,
    scratch: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl<'a> Search<'a> {
    pub(crate) fn new(
        g: &'a Graph,
        d: &'a DistanceMatrix,
        grid: &'a Grid,
        anchors: &[usize],
        mode: SearchMode,
        planar: bool,
        budget: u64,
    ) -> Search<'a> {
        let n = g.n();
        let k = anchors.len();
        assert_eq!(grid.k, k, "grid dimension must match the anchor count");
        let maxc = grid.side - 1;
        let mut anchor_index = vec![None; n];
        for (i, &w) in anchors.iter().enumerate() {
            anchor_index[w] = Some(i);
        }
        let upper: Vec<Vec<Coord>> = (0..n)
            .map(|x| {
                anchors
                    .iter()
                    .map(|&w| d.get(x, w).min(maxc as Coord))
                    .collect()
            })
            .collect();
        // breadth-first order from the first anchor breaks ties
        let mut rank = vec![0; n];
        let mut order: Vec<usize> = (0..n).collect();
        if let Some(&w) = anchors.first() {
            order.sort_by_key(|&x| (d.get(w, x), x));
        }
        for (r, &x) in order.iter().enumerate() {
            rank[x] = r;
        }
        Search {
            g,
            grid,
            d,
            anchors: anchors.to_vec(),
            strong: mode == SearchMode::StronglyResolved,
            planar,
            maxc,
            n,
            budget,
            nodes: 0,
            pos: vec![NONE; n],
            occupant: Vec::new(),
            anchor_index,
            upper,
            rank,
            doms: Vec::new(),
            reqs: Vec::new(),
            scratch: Vec::new(),
        }
    }

    /// Necessary conditions checked before any search.
    fn static_refutation(&self) -> bool {
        let k = self.anchors.len();
        let limit = 3usize.pow(k as u32 - 1);
        if self.anchors.iter().any(|&w| self.g.degree(w) > limit) {
            return true;
        }
        if self.planar {
            for &w in &self.anchors {
                if !induces_linear_forest(self.g, self.g.neighbors(w)) {
                    return true;
                }
                // at most (r+1)^2 points lie within r of an anchor
                let mut count = vec![0usize; self.maxc + 2];
                for x in 0..self.n {
                    count[(self.d.get(x, w) as usize).min(self.maxc + 1)] += 1;
                }
                let mut total = 0;
                for (r, c) in count.iter().enumerate().take(self.maxc + 1) {
                    total += c;
                    if total > (r + 1) * (r + 1) {
                        return true;
                    }
                }
            }
        }
        false
    }

    pub(crate) fn run(mut self) -> Report {
        if self.static_refutation() {
            return Report {
                outcome: SearchOutcome::No,
                nodes: 0,
            };
        }
        let words = self.grid.words;
        let n = self.n;
        let maxc = self.maxc;
        let mut dom = vec![0u64; n * words];
        for x in 0..n {
            let slot = &mut dom[x * words..(x + 1) * words];
            slot.iter_mut().for_each(|w| *w = !0);
            for i in 0..self.anchors.len() {
                let (lo, hi) = if self.anchors[i] == x {
                    (0, 0)
                } else {
                    (1, self.upper[x][i] as usize)
                };
                if lo > hi || !and_into(slot, self.grid.interval(i, lo, hi.min(maxc))) {
                    return Report {
                        outcome: SearchOutcome::No,
                        nodes: 0,
                    };
                }
            }
            // drop padding bits past the last cell
            for c in self.grid.cells..words * 64 {
                clear(slot, c);
            }
        }
        self.occupant = vec![NONE; self.grid.cells];
        self.doms = vec![dom];
        self.doms.resize(n + 1, vec![0u64; n * words]);
        self.reqs = vec![Vec::new(); n + 1];
        let outcome = match self.dfs(0) {
            Step::Found(e) => SearchOutcome::Yes(e),
            Step::Exhausted => SearchOutcome::BudgetExhausted,
            Step::Failed => SearchOutcome::No,
        };
        Report {
            outcome,
            nodes: self.nodes,
        }
    }

    fn dom(&self, depth: usize, x: usize) -> &[u64] {
        let w = self.grid.words;
        &self.doms[depth][x * w..(x + 1) * w]
    }

    fn pick(&self, depth: usize) -> usize {
        if depth < self.anchors.len() {
            return self.anchors[depth];
        }
        (0..self.n)
            .filter(|&x| self.pos[x] == NONE)
            .min_by_key(|&x| (popcount(self.dom(depth, x)), self.rank[x]))
            .expect("an unplaced vertex remains")
    }

    fn dfs(&mut self, depth: usize) -> Step {
        if depth == self.n {
            return self.leaf();
        }
        let x = self.pick(depth);
        let mut candidates: Vec<usize> = ones(self.dom(depth, x)).collect();
        let upper = &self.upper[x];
        let grid = &self.grid;
        candidates.sort_by_key(|&c| {
            let slack: Coord = grid
                .coord(c)
                .iter()
                .zip(upper)
                .map(|(&p, &u)| u.saturating_sub(p))
                .sum();
            (slack, c)
        });
        for c in candidates {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::Exhausted;
            }
            let (head, tail) = self.doms.split_at_mut(depth + 1);
            tail[0].copy_from_slice(&head[depth]);
            self.pos[x] = c;
            self.occupant[c] = x;
            let ok = self.propagate(depth + 1, x, c) && self.requirements(depth, x, c);
            let step = if ok {
                self.dfs(depth + 1)
            } else {
                Step::Failed
            };
            self.pos[x] = NONE;
            self.occupant[c] = NONE;
            match step {
                Step::Failed => {}
                other => return other,
            }
        }
        Step::Failed
    }

    fn leaf(&mut self) -> Step {
        let placement: Vec<Vec<Coord>> = self
            .pos
            .iter()
            .map(|&c| self.grid.coord(c).to_vec())
            .collect();
        let e = Embedding::new(self.grid.side as Coord, self.anchors.clone(), placement)
            .expect("search cells are in range");
        match certify(&e, self.g, self.strong) {
            Ok(()) => Step::Found(e),
            Err(v) => {
                debug_assert!(false, "leaf failed certification: {v:?}");
                Step::Failed
            }
        }
    }

    /// Forward checking after placing `x` at `c`; works on `doms[depth]`.
    fn propagate(&mut self, depth: usize, x: usize, c: usize) -> bool {
        let words = self.grid.words;
        let k = self.grid.k;
        let maxc = self.maxc;
        let anchor_i = self.anchor_index[x];
        let consistent = anchor_i.map(|i| self.consistency_mask(i, c));
        let pc: Vec<Coord> = self.grid.coord(c).to_vec();
        let mut dom = std::mem::take(&mut self.doms[depth]);
        let mut ok = true;
        for z in 0..self.n {
            if self.pos[z] != NONE {
                continue;
            }
            let slot = &mut dom[z * words..(z + 1) * words];
            clear(slot, c);
            let r = self.d.get(x, z) as usize;
            for (i, &ci) in pc.iter().enumerate() {
                let lo = (ci as usize).saturating_sub(r);
                let hi = (ci as usize + r).min(maxc);
                if lo > 0 || hi < maxc {
                    and_into(slot, self.grid.interval(i, lo, hi));
                }
            }
            if let Some(mask) = &consistent {
                and_into(slot, mask);
                if let (Some(i), Some(j)) = (anchor_i, self.anchor_index[z]) {
                    // both coordinates record the same anchor-to-anchor distance
                    let t = pc[j] as usize;
                    and_into(slot, self.grid.interval(i, t, t));
                }
            }
            if self.planar && k == 2 && depth == 2 {
                self.diagonal_degree_filter(z, slot);
            }
            if slot.iter().all(|&w| w == 0) {
                ok = false;
                break;
            }
        }
        self.doms[depth] = dom;
        ok
    }

    /// Cells `p` with `p_i = cheb(p, c)`, for anchor `i` placed at `c`.
    fn consistency_mask(&self, i: usize, c: usize) -> Vec<u64> {
        let mut mask = vec![0u64; self.grid.words];
        for p in 0..self.grid.cells {
            if self.grid.coord(p)[i] == self.grid.cheb(p, c) {
                mask[p / 64] |= 1 << (p % 64);
            }
        }
        mask
    }

    /// Interior diagonal points have at most five neighbours in the planar
    /// region, so higher-degree vertices cannot sit there.
    fn diagonal_degree_filter(&self, z: usize, slot: &mut [u64]) {
        if self.g.degree(z) <= 5 {
            return;
        }
        let a = self.grid.coord(self.pos[self.anchors[0]])[1] as usize;
        for t in 1..a {
            clear(slot, self.grid.cell_of(&[t as Coord, (a - t) as Coord]));
        }
    }

    fn union(&self, depth: usize) -> Vec<u64> {
        let words = self.grid.words;
        let mut u = vec![0u64; words];
        for z in 0..self.n {
            if self.pos[z] == NONE {
                for (a, b) in u.iter_mut().zip(self.dom(depth + 1, z)) {
                    *a |= *b;
                }
            }
        }
        u
    }

    /// A cell next to `u` at distance `d - 1` from `v`, occupied if
    /// possible, else one still in `reachable`.
    fn find_step(
        &mut self,
        u: usize,
        v: usize,
        d: Coord,
        reachable: Option<&[u64]>,
    ) -> Option<(usize, bool)> {
        let (pu, pv) = (self.pos[u], self.pos[v]);
        let mut around = std::mem::take(&mut self.scratch);
        self.grid.neighbours(pu, &mut around);
        let mut spare = None;
        for &q in &around {
            if self.grid.cheb(q, pv) + 1 != d {
                continue;
            }
            if self.occupant[q] != NONE {
                self.scratch = around;
                return Some((q, true));
            }
            if spare.is_none() && reachable.is_some_and(|r| test(r, q)) {
                spare = Some((q, false));
            }
        }
        self.scratch = around;
        spare
    }

    /// Updates the open step requirements after placing `x` at `c` and
    /// checks that each can still be met.
    fn requirements(&mut self, depth: usize, x: usize, c: usize) -> bool {
        let reachable = self.union(depth);
        if self.planar && self.grid.k == 2 && depth + 1 >= 2 && !self.diagonal_fillable(&reachable)
        {
            return false;
        }
        let mut open = Vec::with_capacity(self.reqs[depth].len() + 2 * self.n);
        let previous = std::mem::take(&mut self.reqs[depth]);
        let mut ok = true;
        for r in &previous {
            // the new vertex may be the missing step
            if self.grid.cheb(c, self.pos[r.u]) == 1 && self.grid.cheb(c, self.pos[r.v]) + 1 == r.d
            {
                continue;
            }
            if test(&reachable, r.watch) {
                open.push(*r);
                continue;
            }
            match self.find_step(r.u, r.v, r.d, Some(&reachable)) {
                Some((_, true)) => {}
                Some((q, false)) => open.push(Requirement { watch: q, ..*r }),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        self.reqs[depth] = previous;
        if !ok {
            return false;
        }
        let mut pairs = Vec::new();
        match self.anchor_index[x] {
            _ if self.strong => {
                for y in 0..self.n {
                    if y != x && self.pos[y] != NONE {
                        pairs.push((x, y));
                        pairs.push((y, x));
                    }
                }
            }
            Some(_) => {
                for y in 0..self.n {
                    if y != x && self.pos[y] != NONE {
                        pairs.push((y, x));
                    }
                }
                for &w in &self.anchors {
                    if w != x && self.pos[w] != NONE {
                        pairs.push((x, w));
                    }
                }
            }
            None => {
                for &w in &self.anchors {
                    if self.pos[w] != NONE {
                        pairs.push((x, w));
                    }
                }
            }
        }
        for (u, v) in pairs {
            let d = self.grid.cheb(self.pos[u], self.pos[v]);
            if d < 2 {
                continue;
            }
            match self.find_step(u, v, d, Some(&reachable)) {
                Some((_, true)) => {}
                Some((q, false)) => open.push(Requirement { u, v, d, watch: q }),
                None => return false,
            }
        }
        self.reqs[depth + 1] = open;
        true
    }

    /// Every point of the anchor-to-anchor diagonal must end up occupied.
    fn diagonal_fillable(&self, reachable: &[u64]) -> bool {
        let (w1, w2) = (self.anchors[0], self.anchors[1]);
        if self.pos[w1] == NONE || self.pos[w2] == NONE {
            return true;
        }
        let a = self.grid.coord(self.pos[w1])[1] as usize;
        (0..=a).all(|t| {
            let q = self.grid.cell_of(&[t as Coord, (a - t) as Coord]);
            self.occupant[q] != NONE || test(reachable, q)
        })
    }
}
