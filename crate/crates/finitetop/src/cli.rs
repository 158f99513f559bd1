//! Command-line surface. All output is deterministic: sets print in
//! canonical sorted order and JSON fields in declaration order.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use finitetop_core::hyperspace::{build_power_finite, hyperspace_of_finite_space};
use finitetop_core::invlimit::{thread_of, verify_h_bijection, DirectedIndex, ThreadSource};
use finitetop_core::{
    face_poset, functor_y, guards, homology, nerve, order_complex, rho_embedding, shape_scan,
    vietoris_rips, FiniteMetricSpace,
};

use crate::csvio;
use crate::dot;
use crate::error::{AppError, AppResult};
use crate::formats;

/// Combinatorial topology workbench: finite spaces, hyperspaces,
/// inverse limits, order complexes, homology and Rips filtrations.
/// The environment variable FINITETOP_MAX_FACES overrides the default
/// face-count guard for subdivision and homology commands.
#[derive(Parser)]
#[command(name = "finitetop", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite T0 spaces as posets (open = down-set).
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Hyperspaces of nonempty finite subsets.
    #[command(subcommand)]
    Hyper(HyperCmd),
    /// The inverse sequence of hyperspace stages and its limit checks.
    #[command(subcommand)]
    Invlimit(InvlimitCmd),
    /// Abstract simplicial complexes.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Order-complex / face-poset functors and embeddings.
    #[command(subcommand)]
    Mccord(MccordCmd),
    /// Integral simplicial homology of a complex.
    Homology(HomologyArgs),
    /// Scale-filtered shape reports for point clouds.
    #[command(subcommand)]
    Shape(ShapeCmd),
}

#[derive(Subcommand)]
enum PosetCmd {
    /// Validate a poset file and print its separation properties.
    Check(InputArgs),
    /// Strong-collapse core (iterated beat-point removal).
    Core(PosetOutArgs),
    /// Print the Hasse diagram.
    Show(PosetOutArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input JSON file.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct PosetOutArgs {
    #[arg(long)]
    input: PathBuf,
    /// Emit DOT instead of text.
    #[arg(long)]
    dot: bool,
}

#[derive(Subcommand)]
enum HyperCmd {
    /// Build the hyperspace of a finite ground set.
    Build(HyperBuildArgs),
    /// Number of self-homeomorphisms (equals n!).
    Auto(GroundSizeArgs),
    /// Number of points (equals 2^n - 1).
    Count(GroundSizeArgs),
    /// Hyperspace of nonempty closed sets of a finite space.
    OfSpace(InputArgs),
}

#[derive(Args)]
struct HyperBuildArgs {
    /// Ground set size; ground elements are 1..n.
    #[arg(long, conflicts_with = "ground")]
    n: Option<u32>,
    /// Explicit comma-separated ground elements.
    #[arg(long, value_delimiter = ',')]
    ground: Option<Vec<String>>,
    /// Restrict to subsets of at most this cardinality.
    #[arg(long)]
    cap: Option<usize>,
    /// List every point label.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct GroundSizeArgs {
    /// Ground set size.
    #[arg(long)]
    n: u32,
}

#[derive(Subcommand)]
enum InvlimitCmd {
    /// Print the thread table of the truncated sequence of stages.
    Demo(GroundSizeArgs),
    /// Run the four truncation checks of the limit description.
    Verify(GroundSizeArgs),
}

#[derive(Subcommand)]
enum ComplexCmd {
    /// Vietoris-Rips complex of a point cloud or distance matrix.
    Rips(RipsArgs),
    /// Barycentric subdivision.
    Sd(InputArgs),
    /// Nerve of a named family of sets.
    Nerve(InputArgs),
    /// q-skeleton.
    Skeleton(SkeletonArgs),
}

#[derive(Args)]
struct RipsArgs {
    /// CSV input: one point per row (optional id first column), or a
    /// square distance matrix with --metric matrix.
    #[arg(long)]
    points: PathBuf,
    /// Scale; simplices have diameter strictly below it.
    #[arg(long)]
    eps: f64,
    /// Input interpretation: "cloud" (default) or "matrix".
    #[arg(long, default_value = "cloud")]
    metric: String,
    /// Symmetry tolerance for matrix input.
    #[arg(long, default_value_t = 0.0)]
    tol: f64,
    /// Emit DOT of the 1-skeleton instead of JSON.
    #[arg(long)]
    dot: bool,
}

#[derive(Args)]
struct SkeletonArgs {
    #[arg(long)]
    input: PathBuf,
    /// Dimension to truncate at.
    #[arg(long)]
    dim: usize,
}

#[derive(Subcommand)]
enum MccordCmd {
    /// Order complex of a poset (functor K).
    K(InputArgs),
    /// Face poset of a complex (functor X).
    X(InputArgs),
    /// Complex of a simplicial neighborhood (functor Y).
    Y(NeighborhoodArgs),
    /// Check Y(X(K)) = K and K(X(K)) = sd(K) on a complex file.
    Roundtrip(InputArgs),
    /// Minimal-neighborhood embedding of a T0 poset.
    Rho(InputArgs),
}

#[derive(Args)]
struct NeighborhoodArgs {
    #[arg(long)]
    input: PathBuf,
    /// Reject input that is not already down-closed instead of closing.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct HomologyArgs {
    /// Complex JSON file.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Subcommand)]
enum ShapeCmd {
    /// Per-scale homology and transition ranks.
    Scan(ScanArgs),
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    points: PathBuf,
    /// Strictly increasing comma-separated scales.
    #[arg(long, value_delimiter = ',', required = true)]
    eps: Vec<f64>,
    #[arg(long, default_value = "cloud")]
    metric: String,
    #[arg(long, default_value_t = 0.0)]
    tol: f64,
    /// Append DOT of each stage complex 1-skeleton after the report.
    #[arg(long)]
    stage_dot: bool,
}

fn max_faces() -> AppResult<usize> {
    match std::env::var("FINITETOP_MAX_FACES") {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|_| AppError::io(format!("FINITETOP_MAX_FACES: `{v}` is not a number"))),
        Err(_) => Ok(guards::DEFAULT_MAX_FACES),
    }
}

fn load_metric(path: &PathBuf, metric: &str, tol: f64) -> AppResult<FiniteMetricSpace> {
    match metric {
        "cloud" => csvio::load_point_cloud(path),
        "matrix" => csvio::load_distance_matrix(path, tol),
        other => Err(AppError::io(format!(
            "field `metric`: expected cloud or matrix, got `{other}`"
        ))),
    }
}

fn ground_of(n: u32) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

pub fn run() -> AppResult<()> {
    dispatch(Cli::parse())
}

fn dispatch(cli: Cli) -> AppResult<()> {
    match cli.command {
        Command::Poset(cmd) => poset_cmd(cmd),
        Command::Hyper(cmd) => hyper_cmd(cmd),
        Command::Invlimit(cmd) => invlimit_cmd(cmd),
        Command::Complex(cmd) => complex_cmd(cmd),
        Command::Mccord(cmd) => mccord_cmd(cmd),
        Command::Homology(args) => {
            let k = formats::load_complex(&args.input)?;
            let h = homology(&k)?;
            println!("{}", formats::to_pretty(&formats::homology_json(&h)?));
            Ok(())
        }
        Command::Shape(ShapeCmd::Scan(args)) => shape_cmd(args),
    }
}

fn poset_cmd(cmd: PosetCmd) -> AppResult<()> {
    match cmd {
        PosetCmd::Check(args) => {
            let p = formats::load_poset(&args.input)?;
            println!("points: {}", p.len());
            println!("t0: {}", p.is_t0());
            println!("antichain: {}", p.is_antichain());
            println!("strongly locally finite: {}", p.is_strongly_locally_finite());
            Ok(())
        }
        PosetCmd::Core(args) => {
            let p = formats::load_poset(&args.input)?;
            let core = p.core()?;
            if args.dot {
                print!("{}", dot::hasse_dot(&core));
            } else {
                println!("{}", formats::to_pretty(&formats::poset_json(&core)));
            }
            Ok(())
        }
        PosetCmd::Show(args) => {
            let p = formats::load_poset(&args.input)?;
            if args.dot {
                print!("{}", dot::hasse_dot(&p));
            } else {
                for e in p.elements() {
                    println!("{e}");
                }
                for (lo, hi) in p.covers() {
                    println!("{lo} < {hi}");
                }
            }
            Ok(())
        }
    }
}

fn hyper_cmd(cmd: HyperCmd) -> AppResult<()> {
    match cmd {
        HyperCmd::Build(args) => {
            let ground = match (&args.n, &args.ground) {
                (Some(n), None) => ground_of(*n),
                (None, Some(g)) => g.clone(),
                _ => {
                    return Err(AppError::io(
                        "exactly one of --n or --ground is required".into(),
                    ))
                }
            };
            let h = build_power_finite(&ground, args.cap)?;
            println!("points: {}", h.len());
            println!("t0: {}", h.is_t0());
            println!("t1: {}", h.is_t1());
            if args.list {
                for &mask in h.point_masks() {
                    println!("{}", h.label_of(mask));
                }
            }
            Ok(())
        }
        HyperCmd::Auto(args) => {
            let h = build_power_finite(&ground_of(args.n), None)?;
            println!("{}", h.automorphism_group_order()?);
            Ok(())
        }
        HyperCmd::Count(args) => {
            let h = build_power_finite(&ground_of(args.n), None)?;
            println!("{}", h.len());
            Ok(())
        }
        HyperCmd::OfSpace(args) => {
            let p = formats::load_poset(&args.input)?;
            let h = hyperspace_of_finite_space(&p)?;
            println!("points: {}", h.len());
            println!("t0: {}", h.is_t0());
            for e in h.elements() {
                println!("{e}");
            }
            Ok(())
        }
    }
}

fn invlimit_cmd(cmd: InvlimitCmd) -> AppResult<()> {
    match cmd {
        InvlimitCmd::Demo(args) => {
            if !(1..=5).contains(&args.n) {
                return Err(finitetop_core::Error::domain(
                    "demo table is printed for n in 1..=5",
                )
                .into());
            }
            let index = DirectedIndex::initial_chain(args.n)?;
            let stages: Vec<String> =
                index.members().iter().map(|c| c.label()).collect();
            let mut rows: Vec<(String, Vec<String>)> = Vec::new();
            for d in DirectedIndex::full_power(args.n)?.members() {
                let t = thread_of(ThreadSource::Finite(d.clone()), &index);
                rows.push((
                    d.label(),
                    t.components().iter().map(|c| c.label()).collect(),
                ));
            }
            let top = thread_of(ThreadSource::Top, &index);
            rows.push((
                "N".to_string(),
                top.components().iter().map(|c| c.label()).collect(),
            ));
            let mut widths: Vec<usize> = stages.iter().map(|s| s.len()).collect();
            let source_width = rows.iter().map(|(s, _)| s.len()).max().unwrap_or(1);
            for (_, cells) in &rows {
                for (w, cell) in widths.iter_mut().zip(cells) {
                    *w = (*w).max(cell.len());
                }
            }
            let header: Vec<String> = stages
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}"))
                .collect();
            println!("{:>source_width$}  {}", "source", header.join("  "));
            for (source, cells) in rows {
                let line: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                println!("{source:>source_width$}  {}", line.join("  "));
            }
            Ok(())
        }
        InvlimitCmd::Verify(args) => {
            let report = verify_h_bijection(args.n)?;
            for line in report.lines() {
                println!("{line}");
            }
            let index = DirectedIndex::initial_chain(args.n)?;
            let top = thread_of(ThreadSource::Top, &index);
            let prefix: Vec<String> =
                top.components().iter().map(|c| c.label()).collect();
            println!("h(N) prefix: {}", prefix.join(" "));
            if report.pass() {
                Ok(())
            } else {
                Err(finitetop_core::Error::domain("verification failed").into())
            }
        }
    }
}

fn complex_cmd(cmd: ComplexCmd) -> AppResult<()> {
    match cmd {
        ComplexCmd::Rips(args) => {
            let m = load_metric(&args.points, &args.metric, args.tol)?;
            let k = vietoris_rips(&m, args.eps)?;
            if args.dot {
                print!("{}", dot::skeleton_dot(&k)?);
            } else {
                println!("{}", formats::to_pretty(&formats::complex_json(&k)));
            }
            Ok(())
        }
        ComplexCmd::Sd(args) => {
            let k = formats::load_complex(&args.input)?;
            let sd = k.barycentric_subdivision_with_guard(max_faces()?)?;
            println!("{}", formats::to_pretty(&formats::complex_json(&sd)));
            Ok(())
        }
        ComplexCmd::Nerve(args) => {
            let family = formats::load_family(&args.input)?;
            let named: Vec<(String, std::collections::BTreeSet<String>)> = family
                .into_iter()
                .map(|(name, elems)| (name, elems.into_iter().collect()))
                .collect();
            let k = nerve(&named)?;
            println!("{}", formats::to_pretty(&formats::complex_json(&k)));
            Ok(())
        }
        ComplexCmd::Skeleton(args) => {
            let k = formats::load_complex(&args.input)?;
            println!(
                "{}",
                formats::to_pretty(&formats::complex_json(&k.skeleton(args.dim)))
            );
            Ok(())
        }
    }
}

fn mccord_cmd(cmd: MccordCmd) -> AppResult<()> {
    match cmd {
        MccordCmd::K(args) => {
            let p = formats::load_poset(&args.input)?;
            let k = order_complex(&p)?;
            println!("{}", formats::to_pretty(&formats::complex_json(&k)));
            Ok(())
        }
        MccordCmd::X(args) => {
            let k = formats::load_complex(&args.input)?;
            let fp = face_poset(&k)?;
            println!("{}", formats::to_pretty(&formats::poset_json(&fp)));
            Ok(())
        }
        MccordCmd::Y(args) => {
            let u = formats::load_neighborhood(&args.input, args.strict)?;
            println!("{}", formats::to_pretty(&formats::complex_json(&functor_y(&u))));
            Ok(())
        }
        MccordCmd::Roundtrip(args) => {
            let k = formats::load_complex(&args.input)?;
            let fp = face_poset(&k)?;
            let members: Vec<Vec<String>> = k
                .faces()?
                .iter()
                .map(|f| f.iter().map(|&i| k.vertices()[i].clone()).collect())
                .collect();
            let image = finitetop_core::SimplicialNeighborhood::new_strict(
                &k.vertices().to_vec(),
                &members,
            )?;
            let y_ok = functor_y(&image).is_isomorphic(&k)?;
            let sd_ok = order_complex(&fp)? == k.barycentric_subdivision_with_guard(max_faces()?)?;
            println!("Y(X(K)) isomorphic to K: {}", if y_ok { "pass" } else { "FAIL" });
            println!("K(X(K)) equals sd(K): {}", if sd_ok { "pass" } else { "FAIL" });
            if y_ok && sd_ok {
                Ok(())
            } else {
                Err(finitetop_core::Error::domain("roundtrip failed").into())
            }
        }
        MccordCmd::Rho(args) => {
            let p = formats::load_poset(&args.input)?;
            let rho = rho_embedding(&p)?;
            for (x, image) in p.elements().iter().zip(rho.images()) {
                let members: Vec<&str> = image.iter().map(|s| s.as_str()).collect();
                println!("{x} -> {{{}}}", members.join(","));
            }
            println!("order embedding: {}", rho.is_order_embedding(&p));
            println!("image open: {}", rho.image_is_open());
            Ok(())
        }
    }
}

fn shape_cmd(args: ScanArgs) -> AppResult<()> {
    let m = load_metric(&args.points, &args.metric, args.tol)?;
    let report = shape_scan(&m, &args.eps)?;
    println!("{}", formats::to_pretty(&formats::shape_report_json(&report)?));
    if args.stage_dot {
        for &eps in &args.eps {
            let k = vietoris_rips(&m, eps)?;
            print!("{}", dot::skeleton_dot(&k)?);
        }
    }
    Ok(())
}
