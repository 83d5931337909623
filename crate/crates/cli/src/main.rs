use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use strongdim::constructions::{
    chromatic_bound_supergraph, cycle_embedding, g1_fixture, gn_family, greedy_coloring,
    l3n_family, optimal_coloring, tree_bound_supergraph, tree_dim3_embedding, tree_dim4_embedding,
    type_graph, verify_type_sr, FiveLeafTreeParams, FourLeafTreeParams, StarPairSpec,
};
use strongdim::embedding::{certify, render_grid};
use strongdim::graph::{generate, Family};
use strongdim::threshold::{tau_gap_experiment, Status};
use strongdim::{
    brute_force_dimension, min_vertex_cover, parse_edge_list, strong_dimension,
    strong_resolving_graph, threshold_dimension, DimensionMode, Embedding, Graph,
    PlacementSearchConfig,
};

#[derive(Parser)]
#[command(
    name = "strongdim",
    version,
    about = "Strong metric dimension and threshold strong dimension"
)]
struct Cli {
    /// Seed for randomized generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Metric,
    Strong,
}

impl From<Mode> for DimensionMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Metric => DimensionMode::Metric,
            Mode::Strong => DimensionMode::Strong,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CertifyMode {
    Resolved,
    Strong,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Path,
    Cycle,
    Complete,
    Star,
    Multipartite,
    RandomTree,
    Type,
    Tree4,
    Tree5,
    L3n,
    Gn,
}

#[derive(clap::Args)]
struct SearchArgs {
    /// Node budget per anchor set.
    #[arg(long, default_value_t = PlacementSearchConfig::default().node_budget)]
    budget: u64,
    /// Largest number of anchors to try.
    #[arg(long)]
    max_k: Option<usize>,
    /// Worker threads (0 = all cores). Output does not depend on it.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Search every level instead of stopping at the constructive upper bounds.
    #[arg(long)]
    no_bounds: bool,
    /// Search every anchor set, not one per automorphism orbit.
    #[arg(long)]
    no_symmetry: bool,
    /// Add wall-clock time to the stats (makes output run-dependent).
    #[arg(long)]
    time: bool,
}

impl SearchArgs {
    fn config(&self) -> PlacementSearchConfig {
        PlacementSearchConfig {
            node_budget: self.budget,
            max_k: self.max_k,
            construction_bounds: !self.no_bounds,
            symmetry_pruning: !self.no_symmetry,
            ..PlacementSearchConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Metric or strong dimension with a witness basis.
    Dim {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "strong")]
        mode: Mode,
        /// Cross-check against exhaustive search.
        #[arg(long)]
        oracle: bool,
    },
    /// Edge list of the strong resolving graph.
    Srgraph {
        #[arg(long)]
        input: PathBuf,
    },
    /// Minimum vertex cover of the input graph.
    Cover {
        #[arg(long)]
        input: PathBuf,
    },
    /// Threshold (strong) dimension by placement search.
    Threshold {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "strong")]
        mode: Mode,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check a placement against the input graph.
    Certify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        embedding: PathBuf,
        #[arg(long, value_enum, default_value = "strong")]
        mode: CertifyMode,
    },
    /// Emit a generated graph as an edge list.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        /// Comma-separated integers, see the README for each family.
        #[arg(long, default_value = "")]
        params: String,
        /// Write the family's placement here, when it has one.
        #[arg(long)]
        embedding_out: Option<PathBuf>,
        /// Append the placement as '#'-prefixed grid lines (two anchors only).
        #[arg(long)]
        render: bool,
    },
    /// Constructive upper bounds with the strong dimension of each supergraph.
    Bounds {
        #[arg(long)]
        input: PathBuf,
    },
    /// Threshold and threshold strong dimension of the chained family G_n.
    GapExperiment {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
}

enum Failure {
    Usage(String),
    Input(String),
}

impl From<strongdim::Error> for Failure {
    fn from(e: strongdim::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(String, u8), Failure>;

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let g = parse_edge_list(&text)?;
    g.require_connected()?;
    Ok(g)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json serialises") + "\n"
}

fn params(s: &str, want: usize, family: &str) -> Result<Vec<usize>, Failure> {
    let vals: Vec<usize> = s
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse()
                .map_err(|_| Failure::Usage(format!("bad integer {x:?} in --params")))
        })
        .collect::<Result<_, _>>()?;
    if want != 0 && vals.len() != want {
        return Err(Failure::Usage(format!(
            "--family {family} takes {want} comma-separated integers, got {}",
            vals.len()
        )));
    }
    Ok(vals)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Dim {
            input,
            mode,
            oracle,
        } => {
            let g = read_graph(&input)?;
            let r = match mode {
                Mode::Strong => strong_dimension(&g)?,
                Mode::Metric => brute_force_dimension(&g, DimensionMode::Metric)?,
            };
            let mut out = r.to_json(&g);
            if oracle {
                let b = brute_force_dimension(&g, mode.into())?;
                out["oracle"] = json!({"value": b.value, "agrees": b.value == r.value});
            }
            Ok((pretty(&out), 0))
        }
        Command::Srgraph { input } => {
            let g = read_graph(&input)?;
            let sr = strong_resolving_graph(&g)?.sr;
            let mut out = sr.to_edge_list();
            let isolated: Vec<&str> = (0..sr.n())
                .filter(|&v| sr.degree(v) == 0)
                .map(|v| sr.label(v))
                .collect();
            if !isolated.is_empty() {
                out.push_str(&format!("# isolated: {}\n", isolated.join(" ")));
            }
            Ok((out, 0))
        }
        Command::Cover { input } => {
            let g = read_graph(&input)?;
            Ok((pretty(&min_vertex_cover(&g).to_json(&g)), 0))
        }
        Command::Threshold {
            input,
            mode,
            search,
        } => {
            let g = read_graph(&input)?;
            let r = threshold_dimension(&g, mode.into(), &search.config())?;
            let code = if r.status == Status::Exact { 0 } else { 3 };
            Ok((pretty(&r.to_json(&g, search.time)), code))
        }
        Command::Certify {
            input,
            embedding,
            mode,
        } => {
            let g = read_graph(&input)?;
            let text = fs::read_to_string(&embedding)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", embedding.display())))?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| Failure::Input(format!("embedding is not JSON: {e}")))?;
            let e = Embedding::from_json(&value, &g)?;
            let out = match certify(&e, &g, matches!(mode, CertifyMode::Strong)) {
                Ok(()) => json!({"verdict": true, "violation": null}),
                Err(v) => json!({"verdict": false, "violation": v.to_json(&g)}),
            };
            Ok((pretty(&out), 0))
        }
        Command::Gen {
            family,
            params: p,
            embedding_out,
            render,
        } => generate_family(family, &p, cli.seed, embedding_out, render),
        Command::Bounds { input } => {
            let g = read_graph(&input)?;
            let describe = |h: &Graph, bound: usize| -> Result<Value, Failure> {
                let sd = strong_dimension(h)?;
                let added: Vec<[&str; 2]> = h
                    .edges()
                    .filter(|&(u, v)| !g.has_edge(u, v))
                    .map(|(u, v)| [h.label(u), h.label(v)])
                    .collect();
                Ok(json!({
                    "bound": bound,
                    "strong_dimension_of_supergraph": sd.value,
                    "matches": sd.value == bound,
                    "basis": sd.witness.iter().map(|&v| h.label(v)).collect::<Vec<_>>(),
                    "added_edges": added,
                }))
            };
            let tree = if g.is_tree() && g.n() >= 2 {
                let b = tree_bound_supergraph(&g)?;
                describe(&b.supergraph, b.bound)?
            } else {
                Value::Null
            };
            let coloring = optimal_coloring(&g).unwrap_or_else(|| greedy_coloring(&g));
            let b = chromatic_bound_supergraph(&g, &coloring)?;
            let mut chromatic = describe(&b.supergraph, b.bound)?;
            chromatic["classes"] = json!(coloring
                .classes
                .iter()
                .map(|c| c.iter().map(|&v| g.label(v)).collect::<Vec<_>>())
                .collect::<Vec<_>>());
            Ok((pretty(&json!({"tree": tree, "chromatic": chromatic})), 0))
        }
        Command::GapExperiment { n, search } => {
            let r = tau_gap_experiment(n, &search.config())?;
            let exact = r.tau.status == Status::Exact && r.tau_s.status == Status::Exact;
            Ok((pretty(&r.to_json(search.time)), if exact { 0 } else { 3 }))
        }
    }
}

fn generate_family(
    family: GenFamily,
    p: &str,
    seed: u64,
    embedding_out: Option<PathBuf>,
    render: bool,
) -> Outcome {
    let one = |name| params(p, 1, name).map(|v| v[0]);
    let (g, e): (Graph, Option<Embedding>) = match family {
        GenFamily::Path => (generate(&Family::Path(one("path")?))?, None),
        GenFamily::Cycle => {
            let n = one("cycle")?;
            let g = generate(&Family::Cycle(n))?;
            (
                g,
                if n >= 4 {
                    Some(cycle_embedding(n)?)
                } else {
                    None
                },
            )
        }
        GenFamily::Complete => (generate(&Family::Complete(one("complete")?))?, None),
        GenFamily::Star => (generate(&Family::Star(one("star")?))?, None),
        GenFamily::Multipartite => (
            generate(&Family::CompleteMultipartite(params(p, 0, "multipartite")?))?,
            None,
        ),
        GenFamily::RandomTree => (
            generate(&Family::RandomTree {
                n: one("random-tree")?,
                seed,
            })?,
            None,
        ),
        GenFamily::Type => {
            let v = params(p, 3, "type")?;
            let kind =
                u8::try_from(v[0]).map_err(|_| Failure::Usage("type must be 1..4".into()))?;
            let spec = StarPairSpec::new(v[1], v[2], kind)?;
            let g = type_graph(&spec)?;
            debug_assert!(verify_type_sr(&g, &spec));
            (g, None)
        }
        GenFamily::Tree4 => {
            let v = params(p, 5, "tree4")?;
            let (g, e) =
                tree_dim3_embedding(&FourLeafTreeParams::new([v[0], v[1], v[2], v[3], v[4]])?)?;
            (g, Some(e))
        }
        GenFamily::Tree5 => {
            let v = params(p, 7, "tree5")?;
            let k = [v[0], v[1], v[2], v[3], v[4], v[5], v[6]];
            let (g, e) = tree_dim4_embedding(&FiveLeafTreeParams::new(k)?)?;
            (g, Some(e))
        }
        GenFamily::L3n => {
            let (g, e) = l3n_family(one("l3n")?)?;
            (g, Some(e))
        }
        GenFamily::Gn => {
            let n = one("gn")?;
            if n == 1 {
                let (g, e) = g1_fixture();
                (g, Some(e))
            } else {
                (gn_family(n)?, None)
            }
        }
    };
    let mut out = g.to_edge_list();
    if let Some(path) = embedding_out {
        let e = e
            .as_ref()
            .ok_or_else(|| Failure::Usage("this family has no placement to write".into()))?;
        fs::write(&path, pretty(&e.to_json(&g)))
            .map_err(|err| Failure::Input(format!("cannot write {}: {err}", path.display())))?;
    }
    if render {
        let e = e
            .as_ref()
            .ok_or_else(|| Failure::Usage("this family has no placement to render".into()))?;
        for line in render_grid(e, &g)?.lines() {
            out.push_str(&format!("# {line}\n"));
        }
    }
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Command::Threshold { search, .. } | Command::GapExperiment { search, .. } = &cli.command
    {
        if search.jobs > 0 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(search.jobs)
                .build_global()
                .expect("thread pool is configured once");
        }
    }
    match run(cli) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::from(code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
