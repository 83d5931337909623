//! Threshold dimension and threshold strong dimension.
//!
//! `W` resolves (strongly resolves) some supergraph of `G` on the same
//! vertex set exactly when `G` has a W-resolved (and isometric) placement
//! in `P_{D+1}^{⊠k}`, `D = diam(G)`. The supergraph is whatever the
//! placement induces, so the search runs over placements only.

mod search;

use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::bounds::construction_upper_bound;
use crate::constructions::gn_family;
use crate::dimension::{strong_dimension_with, DimensionMode};
use crate::embedding::{Coord, Embedding};
use crate::error::{invalid, Error, Result};
use crate::graph::{automorphisms, DistanceMatrix, Graph};
use search::{Grid, Search, MAX_CELLS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Resolved,
    StronglyResolved,
}

impl From<DimensionMode> for SearchMode {
    fn from(m: DimensionMode) -> SearchMode {
        match m {
            DimensionMode::Metric => SearchMode::Resolved,
            DimensionMode::Strong => SearchMode::StronglyResolved,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacementSearchConfig {
    pub mode: SearchMode,
    /// Grid side; `diam(G) + 1` when unset.
    pub max_side: Option<Coord>,
    /// Node limit for each anchor set.
    pub node_budget: u64,
    /// Skip anchor sets equivalent under an automorphism.
    pub symmetry_pruning: bool,
    /// Largest `k` tried by [`threshold_dimension`].
    pub max_k: Option<usize>,
    /// Use the strong dimension and the constructive bounds as upper bounds.
    pub construction_bounds: bool,
}

impl Default for PlacementSearchConfig {
    fn default() -> Self {
        PlacementSearchConfig {
            mode: SearchMode::StronglyResolved,
            max_side: None,
            node_budget: 2_000_000,
            symmetry_pruning: true,
            max_k: None,
            construction_bounds: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Yes(Embedding),
    No,
    BudgetExhausted,
}

impl SearchOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, SearchOutcome::Yes(_))
    }
}

/// Outcome of one anchor set, with the number of placements tried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

fn prepare(
    g: &Graph,
    anchors: &[usize],
    cfg: &PlacementSearchConfig,
) -> Result<(DistanceMatrix, usize)> {
    g.require_connected()?;
    if let Some(&w) = anchors.iter().find(|&&w| w >= g.n()) {
        return Err(Error::UnknownVertex(w.to_string()));
    }
    if anchors.iter().duplicates().next().is_some() {
        return Err(invalid("anchor list has a repeated vertex"));
    }
    if cfg.node_budget == 0 {
        return Err(invalid("node budget must be positive"));
    }
    let d = DistanceMatrix::new(g);
    let side = match cfg.max_side {
        Some(s) if (s as u64) < d.diameter() as u64 + 1 => {
            return Err(invalid(format!(
                "side {s} is below diam + 1 = {}",
                d.diameter() + 1
            )))
        }
        Some(s) => s as usize,
        None => d.diameter() as usize + 1,
    };
    Ok((d, side))
}

fn grid_for(k: usize, side: usize) -> Result<Grid> {
    match side.checked_pow(k as u32) {
        Some(cells) if cells <= MAX_CELLS => Ok(Grid::new(k, side)),
        _ => Err(invalid(format!("grid {side}^{k} is too large to search"))),
    }
}

fn trivial(g: &Graph, anchors: &[usize]) -> Option<SearchReport> {
    if !anchors.is_empty() {
        return None;
    }
    let outcome = if g.n() <= 1 {
        SearchOutcome::Yes(Embedding::new(1, Vec::new(), vec![Vec::new(); g.n()]).unwrap())
    } else {
        SearchOutcome::No
    };
    Some(SearchReport { outcome, nodes: 0 })
}

/// Whether some supergraph of `g` on the same vertex set is resolved
/// (strongly resolved) by `anchors`, decided by exhaustive placement
/// search. A `No` is only returned after the search space is exhausted.
pub fn exists_supergraph_resolved_by(
    g: &Graph,
    anchors: &[usize],
    cfg: &PlacementSearchConfig,
) -> Result<SearchReport> {
    let (d, side) = prepare(g, anchors, cfg)?;
    if let Some(r) = trivial(g, anchors) {
        return Ok(r);
    }
    let grid = grid_for(anchors.len(), side)?;
    Ok(run(g, &d, &grid, anchors, cfg, false))
}

/// The two-anchor search with the extra planar pruning: anchor degree at
/// most 3 with a linear-forest neighbourhood, ball-size caps, a fully
/// occupied anchor-to-anchor diagonal, and no vertex of degree above 5 on
/// that diagonal. Verdicts agree with [`exists_supergraph_resolved_by`].
pub fn dim2_pruned_search(
    g: &Graph,
    anchors: &[usize],
    cfg: &PlacementSearchConfig,
) -> Result<SearchReport> {
    if anchors.len() != 2 {
        return Err(invalid(format!(
            "the planar search takes 2 anchors, got {}",
            anchors.len()
        )));
    }
    let (d, side) = prepare(g, anchors, cfg)?;
    let grid = grid_for(2, side)?;
    Ok(run(g, &d, &grid, anchors, cfg, true))
}

fn run(
    g: &Graph,
    d: &DistanceMatrix,
    grid: &Grid,
    anchors: &[usize],
    cfg: &PlacementSearchConfig,
    planar: bool,
) -> SearchReport {
    let r = Search::new(g, d, grid, anchors, cfg.mode, planar, cfg.node_budget).run();
    SearchReport {
        outcome: r.outcome,
        nodes: r.nodes,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exact,
    LowerBoundOnly,
    Bounds,
}

/// Per-`k` search statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelStats {
    pub k: usize,
    /// Anchor sets left after symmetry pruning.
    pub anchor_sets: usize,
    /// Anchor sets searched before stopping.
    pub searched: usize,
    pub budget_exhausted: usize,
    /// Every anchor set of this size was searched to completion without success.
    pub refuted: bool,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdResult {
    pub status: Status,
    pub lo: usize,
    pub hi: Option<usize>,
    /// Where `hi` came from: "search", "strong_dimension", "chromatic" or "tree".
    pub hi_source: Option<&'static str>,
    pub witness_w: Option<Vec<usize>>,
    pub embedding: Option<Embedding>,
    pub levels: Vec<LevelStats>,
    pub nodes_explored: u64,
    pub wall_ms: u128,
}

impl ThresholdResult {
    pub fn value(&self) -> Option<usize> {
        (self.status == Status::Exact).then_some(self.lo)
    }

    /// The documented JSON shape. Wall time is left out unless asked for,
    /// so identical runs print identical bytes.
    pub fn to_json(&self, g: &Graph, with_time: bool) -> serde_json::Value {
        let value = match self.status {
            Status::Exact => serde_json::json!(self.lo),
            _ => serde_json::json!({"lo": self.lo, "hi": self.hi}),
        };
        let mut stats = serde_json::json!({
            "nodes_explored": self.nodes_explored,
            "hi_source": self.hi_source,
            "levels": self.levels,
        });
        if with_time {
            stats["wall_ms"] = serde_json::json!(self.wall_ms as u64);
        }
        serde_json::json!({
            "status": self.status,
            "value": value,
            "witness_W": self.witness_w.as_ref().map(|w| w.iter().map(|&v| g.label(v)).collect::<Vec<_>>()),
            "embedding": self.embedding.as_ref().map(|e| e.to_json(g)),
            "stats": stats,
        })
    }
}

/// Anchor sets of size `k`, by eccentricity sum descending and then
/// lexicographically, keeping one representative per automorphism orbit
/// when `autos` is given.
fn anchor_sets(n: usize, k: usize, ecc: &[u32], autos: Option<&[Vec<usize>]>) -> Vec<Vec<usize>> {
    let mut sets: Vec<Vec<usize>> = (0..n)
        .combinations(k)
        .filter(|w| match autos {
            None => true,
            Some(autos) => autos.iter().all(|a| {
                let mut img: Vec<usize> = w.iter().map(|&v| a[v]).collect();
                img.sort_unstable();
                img >= *w
            }),
        })
        .collect();
    sets.sort_by_key(|w| {
        (
            std::cmp::Reverse(w.iter().map(|&v| ecc[v] as u64).sum::<u64>()),
            w.clone(),
        )
    });
    sets
}

const AUTOMORPHISM_CAP: usize = 50_000;

/// `tau(g)` (metric) or `tau_s(g)` (strong): the least `k` for which some
/// `k` anchors (strongly) resolve a supergraph of `g`.
///
/// Levels `k = 1, 2, ...` are searched in turn; anchor sets within a level
/// run on the rayon pool and the first success in enumeration order wins.
/// The result is exact when a level succeeds and every smaller level was
/// refuted completely; otherwise it carries bounds.
pub fn threshold_dimension(
    g: &Graph,
    mode: DimensionMode,
    cfg: &PlacementSearchConfig,
) -> Result<ThresholdResult> {
    let start = Instant::now();
    let cfg = PlacementSearchConfig {
        mode: mode.into(),
        ..cfg.clone()
    };
    let (d, side) = prepare(g, &[], &cfg)?;
    let n = g.n();
    let mut result = ThresholdResult {
        status: Status::Exact,
        lo: 0,
        hi: Some(0),
        hi_source: Some("search"),
        witness_w: Some(Vec::new()),
        embedding: Some(Embedding::new(1, Vec::new(), vec![Vec::new(); n]).unwrap()),
        levels: Vec::new(),
        nodes_explored: 0,
        wall_ms: 0,
    };
    if n <= 1 {
        return Ok(result);
    }
    result.lo = 1;
    result.hi = None;
    result.hi_source = None;
    result.witness_w = None;
    result.embedding = None;
    if cfg.construction_bounds {
        let sd = strong_dimension_with(g, &d);
        result.hi = Some(sd.value);
        result.hi_source = Some("strong_dimension");
        result.witness_w = Some(sd.witness);
        if let Some(b) = construction_upper_bound(g)? {
            if b.value < sd.value {
                result.hi = Some(b.value);
                result.hi_source = Some(b.source);
                result.witness_w = b.witness;
            }
        }
    }
    let autos = if cfg.symmetry_pruning {
        automorphisms(g, &d, AUTOMORPHISM_CAP)
    } else {
        None
    };
    let top = [Some(n - 1), cfg.max_k, result.hi]
        .into_iter()
        .flatten()
        .min()
        .unwrap();
    let chunk = rayon::current_num_threads().max(1) * 2;
    let mut all_lower_refuted = true;
    for k in 1..=top {
        let grid = grid_for(k, side)?;
        let sets = anchor_sets(n, k, d.eccentricities(), autos.as_deref());
        let mut stats = LevelStats {
            k,
            anchor_sets: sets.len(),
            searched: 0,
            budget_exhausted: 0,
            refuted: false,
            nodes: 0,
        };
        let mut found = None;
        'level: for batch in sets.chunks(chunk) {
            let reports: Vec<SearchReport> = batch
                .par_iter()
                .map(|w| run(g, &d, &grid, w, &cfg, k == 2))
                .collect();
            for (w, r) in batch.iter().zip(reports) {
                stats.searched += 1;
                stats.nodes += r.nodes;
                match r.outcome {
                    SearchOutcome::Yes(e) => {
                        found = Some((w.clone(), e));
                        break 'level;
                    }
                    SearchOutcome::BudgetExhausted => stats.budget_exhausted += 1,
                    SearchOutcome::No => {}
                }
            }
        }
        stats.refuted = found.is_none() && stats.budget_exhausted == 0;
        result.nodes_explored += stats.nodes;
        let refuted = stats.refuted;
        result.levels.push(stats);
        if let Some((w, e)) = found {
            result.hi = Some(k);
            result.hi_source = Some("search");
            result.witness_w = Some(w);
            result.embedding = Some(e);
            break;
        }
        if refuted && all_lower_refuted {
            result.lo = k + 1;
        } else {
            all_lower_refuted = false;
        }
    }
    result.status = match result.hi {
        Some(hi) if hi == result.lo => Status::Exact,
        Some(_) => Status::Bounds,
        None => Status::LowerBoundOnly,
    };
    if result.status == Status::Exact && result.hi_source != Some("search") {
        // the bound was met from above without a placement in hand
        result.embedding = None;
    }
    result.wall_ms = start.elapsed().as_millis();
    Ok(result)
}

/// One row of the threshold gap experiment on the chained family `G_n`.
#[derive(Clone, Debug)]
pub struct GapReport {
    pub n: usize,
    pub graph: Graph,
    pub tau: ThresholdResult,
    pub tau_s: ThresholdResult,
}

impl GapReport {
    pub fn to_json(&self, with_time: bool) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "vertices": self.graph.n(),
            "tau": self.tau.to_json(&self.graph, with_time),
            "tau_s": self.tau_s.to_json(&self.graph, with_time),
        })
    }
}

/// Computes `tau(G_n)` and bounds on `tau_s(G_n)`.
pub fn tau_gap_experiment(n: usize, cfg: &PlacementSearchConfig) -> Result<GapReport> {
    let graph = gn_family(n)?;
    let tau = threshold_dimension(&graph, DimensionMode::Metric, cfg)?;
    let tau_s = threshold_dimension(&graph, DimensionMode::Strong, cfg)?;
    Ok(GapReport {
        n,
        graph,
        tau,
        tau_s,
    })
}
