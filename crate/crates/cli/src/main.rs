//! Command-line front end: parse body / polynomial / sample JSON, run the
//! computations, and emit CSV or JSON suitable for plotting. Identical
//! inputs produce byte-identical outputs: orderings are fixed and floats
//! print with 12 significant digits.

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use siciak::extremal::{phi_m, WeightedSampleSet};
use siciak::io;
use siciak::logsupport::hs_eval_grid;
use siciak::massint::{ma_total_mass, monomial_l2_norm, L2Mode};
use siciak::polyspace::{gap_distance, lattice_points, GapNorm, MultiIndex};
use siciak::pullback::{newton_polytope, pullback_body};
use siciak::ratgeom::{gamma_hull, is_lower_set, lower_hull, Body, PolyCone};
use siciak::suites;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_BAD_INPUT: i32 = 2;

#[derive(Parser)]
#[command(name = "siciak", version, about = "Convex-body polynomial classes: supports, hulls, lattices, extremal functions")]
struct Cli {
    /// Worker threads for grid subcommands (0 = library default).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the logarithmic supporting function on a point grid (CSV).
    HsEval {
        #[arg(long)]
        body: PathBuf,
        /// JSON file with a sample set; its points form the grid.
        #[arg(long, conflicts_with = "grid")]
        points: Option<PathBuf>,
        /// Per-axis real grid lo:hi:steps[,lo:hi:steps...] (imaginary parts zero).
        #[arg(long)]
        grid: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Lattice points of the scaled body.
    Lattice {
        #[arg(long)]
        body: PathBuf,
        #[arg(short)]
        m: u32,
        /// Emit a JSON array instead of plain rows.
        #[arg(long)]
        json: bool,
    },
    /// Distance from the scaled body to the excluded lattice points.
    Dm {
        #[arg(long)]
        body: PathBuf,
        #[arg(short)]
        m: u32,
        #[arg(long, value_enum, default_value_t = NormArg::L1)]
        norm: NormArg,
    },
    /// Extremal values at evaluation points (CSV rows).
    Phi {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        samples: PathBuf,
        #[arg(short)]
        m: u32,
        /// Inline evaluation point `re[,im];re[,im];...`.
        #[arg(long, conflicts_with = "z_points")]
        z: Option<String>,
        /// JSON sample set whose points are the evaluation grid.
        #[arg(long)]
        z_points: Option<PathBuf>,
        #[arg(long, default_value_t = 64)]
        phases: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Total Monge-Ampere mass report.
    Mass {
        #[arg(long)]
        body: PathBuf,
    },
    /// Weighted L2 norm of a monomial (JSON report).
    L2 {
        #[arg(long)]
        body: PathBuf,
        /// Exponent vector, comma separated.
        #[arg(long)]
        alpha: String,
        #[arg(short)]
        m: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Closed)]
        mode: ModeArg,
    },
    /// Cone hull of a body (JSON body out).
    Hull {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        cone: PathBuf,
    },
    /// Lower hull and lower-set flag (JSON out).
    Lower {
        #[arg(long)]
        body: PathBuf,
    },
    /// Pullback body of a polynomial map (JSON body out).
    Pullback {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        body: PathBuf,
    },
    /// Run a named verification suite (or `all`); exit 0 iff it passes.
    Check {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum NormArg {
    L1,
    L2,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Closed,
    Quadrature,
}

fn main() {
    let cli = Cli::parse();
    if cli.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.workers)
            .build_global()
            .ok();
    }
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(EXIT_BAD_INPUT);
        }
    }
}

fn read_json(path: &Path) -> Result<serde_json::Value> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| {
        let snippet: String = text.chars().take(160).collect();
        anyhow!("{} is not valid JSON: {e}\noffending input: {snippet}", path.display())
    })
}

fn load_body(path: &Path) -> Result<Body> {
    let v = read_json(path)?;
    io::body_from_json(&v).map_err(|e| anyhow!("{}: {e}\noffending input: {v}", path.display()))
}

fn load_cone(path: &Path) -> Result<PolyCone> {
    let v = read_json(path)?;
    io::cone_from_json(&v).map_err(|e| anyhow!("{}: {e}\noffending input: {v}", path.display()))
}

fn load_samples(path: &Path) -> Result<WeightedSampleSet> {
    let v = read_json(path)?;
    io::samples_from_json(&v)
        .map_err(|e| anyhow!("{}: {e}\noffending input: {v}", path.display()))
}

fn parse_grid(spec: &str, dim: usize) -> Result<Vec<Vec<num_complex::Complex64>>> {
    let axes: Vec<&str> = spec.split(',').collect();
    if axes.len() != dim {
        return Err(anyhow!(
            "grid has {} axes but the body dimension is {dim}\noffending input: {spec}",
            axes.len()
        ));
    }
    let mut ranges = Vec::new();
    for axis in axes {
        let parts: Vec<&str> = axis.split(':').collect();
        if parts.len() != 3 {
            return Err(anyhow!("grid axis must be lo:hi:steps\noffending input: {axis}"));
        }
        let lo: f64 = parts[0].parse().context("bad grid lower bound")?;
        let hi: f64 = parts[1].parse().context("bad grid upper bound")?;
        let steps: usize = parts[2].parse().context("bad grid step count")?;
        if steps < 1 {
            return Err(anyhow!("grid needs at least one step\noffending input: {axis}"));
        }
        let vals: Vec<f64> = (0..steps)
            .map(|k| {
                if steps == 1 {
                    lo
                } else {
                    lo + (hi - lo) * k as f64 / (steps - 1) as f64
                }
            })
            .collect();
        ranges.push(vals);
    }
    let mut pts = vec![Vec::new()];
    for r in &ranges {
        let mut next = Vec::with_capacity(pts.len() * r.len());
        for p in &pts {
            for &v in r {
                let mut q: Vec<num_complex::Complex64> = p.clone();
                q.push(num_complex::Complex64::new(v, 0.0));
                next.push(q);
            }
        }
        pts = next;
    }
    Ok(pts)
}

fn write_out(output: Option<&Path>, content: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, content).with_context(|| format!("cannot write {}", p.display())),
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
            Ok(())
        }
    }
}

fn parse_alpha(s: &str) -> Result<MultiIndex> {
    let entries: Result<Vec<u32>, _> = s.split(',').map(|x| x.trim().parse()).collect();
    entries
        .map(MultiIndex)
        .map_err(|e| anyhow!("bad exponent vector: {e}\noffending input: {s}"))
}

fn run(cmd: Command) -> Result<i32> {
    match cmd {
        Command::HsEval {
            body,
            points,
            grid,
            output,
        } => {
            let b = load_body(&body)?;
            let pts = if let Some(p) = points {
                load_samples(&p)?.points().to_vec()
            } else if let Some(g) = grid {
                parse_grid(&g, b.dim())?
            } else {
                return Err(anyhow!("hs-eval needs --points or --grid"));
            };
            let values = hs_eval_grid(&b, &pts);
            let mut out = String::new();
            for j in 1..=b.dim() {
                out.push_str(&format!("re_{j},im_{j},"));
            }
            out.push_str("H_S\n");
            for (z, v) in pts.iter().zip(&values) {
                for c in z {
                    out.push_str(&io::fmt_g12(c.re));
                    out.push(',');
                    out.push_str(&io::fmt_g12(c.im));
                    out.push(',');
                }
                out.push_str(&io::fmt_g12(*v));
                out.push('\n');
            }
            write_out(output.as_deref(), &out)?;
            Ok(0)
        }
        Command::Lattice { body, m, json } => {
            let b = load_body(&body)?;
            let pts = lattice_points(&b, m);
            if json {
                let v = io::lattice_to_json(pts.as_slice());
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                for a in pts.iter() {
                    let row: Vec<String> = a.0.iter().map(|e| e.to_string()).collect();
                    println!("{}", row.join(" "));
                }
            }
            Ok(0)
        }
        Command::Dm { body, m, norm } => {
            let b = load_body(&body)?;
            let d = match norm {
                NormArg::L1 => gap_distance(&b, m, GapNorm::L1),
                NormArg::L2 => gap_distance(&b, m, GapNorm::L2),
            };
            println!("{}", io::fmt_g12(d));
            Ok(0)
        }
        Command::Phi {
            body,
            samples,
            m,
            z,
            z_points,
            phases,
            output,
        } => {
            let b = load_body(&body)?;
            let k = load_samples(&samples)?;
            let zs: Vec<Vec<num_complex::Complex64>> = if let Some(s) = z {
                vec![io::point_from_str(&s).map_err(|e| anyhow!("--z: {e}"))?]
            } else if let Some(p) = z_points {
                load_samples(&p)?.points().to_vec()
            } else {
                return Err(anyhow!("phi needs --z or --z-points"));
            };
            use rayon::prelude::*;
            let rows: Result<Vec<String>> = zs
                .par_iter()
                .map(|zp| {
                    let r = phi_m(&b, &k, m, zp, phases)
                        .map_err(|e| anyhow!("extremal LP failed: {e}"))?;
                    let mut row = String::new();
                    for c in zp {
                        row.push_str(&io::fmt_g12(c.re));
                        row.push(',');
                        row.push_str(&io::fmt_g12(c.im));
                        row.push(',');
                    }
                    row.push_str(&format!(
                        "{},{},{},{},{}",
                        m,
                        io::fmt_g12(r.value),
                        io::fmt_g12(r.lower_bound()),
                        io::fmt_g12(r.upper_bound()),
                        r.basis_size
                    ));
                    Ok(row)
                })
                .collect();
            let mut out = String::new();
            for j in 1..=b.dim() {
                out.push_str(&format!("re_{j},im_{j},"));
            }
            out.push_str("m,value,lower_bound,upper_bound,basis_size\n");
            for r in rows? {
                out.push_str(&r);
                out.push('\n');
            }
            write_out(output.as_deref(), &out)?;
            Ok(0)
        }
        Command::Mass { body } => {
            let b = load_body(&body)?;
            let rep = ma_total_mass(&b);
            println!("{}", serde_json::to_string_pretty(&io::mass_to_json(&rep))?);
            Ok(0)
        }
        Command::L2 {
            body,
            alpha,
            m,
            mode,
        } => {
            let b = load_body(&body)?;
            let a = parse_alpha(&alpha)?;
            if a.dim() != b.dim() {
                return Err(anyhow!(
                    "exponent has {} entries but the body dimension is {}",
                    a.dim(),
                    b.dim()
                ));
            }
            let mode = match mode {
                ModeArg::Closed => L2Mode::ClosedForm,
                ModeArg::Quadrature => L2Mode::Quadrature,
            };
            let rep = monomial_l2_norm(&b, &a, m, mode).map_err(|e| anyhow!("l2: {e}"))?;
            println!("{}", serde_json::to_string_pretty(&io::l2_report_to_json(&rep))?);
            Ok(0)
        }
        Command::Hull { body, cone } => {
            let b = load_body(&body)?;
            let c = load_cone(&cone)?;
            let h = gamma_hull(&b, &c).map_err(|e| anyhow!("hull: {e}"))?;
            println!(
                "{}",
                serde_json::to_string_pretty(&io::body_to_json(&h.reduced()))?
            );
            Ok(0)
        }
        Command::Lower { body } => {
            let b = load_body(&body)?;
            let lh = lower_hull(&b);
            let out = serde_json::json!({
                "is_lower_set": is_lower_set(&b),
                "lower_hull": io::body_to_json(&lh),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(0)
        }
        Command::Pullback { map, body } => {
            let v = read_json(&map)?;
            let f = io::polymap_from_json(&v)
                .map_err(|e| anyhow!("{}: {e}\noffending input: {v}", map.display()))?;
            let b = load_body(&body)?;
            let comps: Result<Vec<_>, _> =
                f.components().iter().map(newton_polytope).collect();
            let comps = comps.map_err(|e| anyhow!("pullback: {e}"))?;
            let s2 = pullback_body(&b, &comps).map_err(|e| anyhow!("pullback: {e}"))?;
            println!("{}", serde_json::to_string_pretty(&io::body_to_json(&s2))?);
            Ok(0)
        }
        Command::Check { suite, seed } => {
            let reports = if suite == "all" {
                suites::run_all(seed)
            } else {
                match suites::run_suite(&suite, seed) {
                    Some(r) => vec![r],
                    None => {
                        return Err(anyhow!(
                            "unknown suite {suite:?}; known: {} or all",
                            suites::SUITE_NAMES.join(", ")
                        ))
                    }
                }
            };
            let mut all_ok = true;
            for rep in &reports {
                // timings go to stderr so stdout stays byte-identical
                println!(
                    "[{}] {}",
                    if rep.passed { "PASS" } else { "FAIL" },
                    rep.name
                );
                eprintln!("{}: {} ms", rep.name, rep.elapsed_ms);
                for line in &rep.lines {
                    println!("  {line}");
                }
                all_ok &= rep.passed;
            }
            Ok(if all_ok { 0 } else { EXIT_CHECK_FAILED })
        }
    }
}
