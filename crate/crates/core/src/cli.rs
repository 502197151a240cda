//! Command-line interface: one JSON document per run.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::census::{
    deformation_probe, discriminant_implicitize, discriminant_singularities, generalized_cusp_index,
    infinity_analysis, plane_census_with, sample_map, sphere_census_height, CensusOptions, CensusReport, Check,
    MapKind, DEFAULT_HEIGHT,
};
use crate::error::{Error, Result};
use crate::formulas::{
    bezout_split, delta_infinity_decomposition, plane_invariants, serre_closure, sphere_invariants, sweep,
    symbolic_identities,
};
use crate::jets::{plane_equations, PlaneMap};
use crate::poly::{parse_poly, Rat, Var};
use crate::puiseux::{analyze_germ, milnor_number};
use crate::solve::{count_common_zeros, count_solution_overlap};

pub const EXIT_OK: i32 = 0;
pub const EXIT_GENERICITY: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cuspidal", version, about = "Cusps, nodes and discriminants of generic polynomial maps")]
pub struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; the report does not depend on it.
    #[arg(long, global = true, env = "CUSPIDAL_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Include wall-clock timings (makes the output run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Degrees {
    #[arg(long)]
    pub d1: Option<u32>,
    #[arg(long)]
    pub d2: Option<u32>,
}

#[derive(Args, Debug, Clone)]
pub struct MapInput {
    /// `f=<poly>; g=<poly>`
    #[arg(long)]
    pub map: Option<String>,
    #[arg(long)]
    pub map_file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Closed-form invariants and their identities.
    Formulas {
        #[command(flatten)]
        deg: Degrees,
        #[arg(long)]
        sphere: bool,
        /// Identity table for all 1 <= d2 <= d1 <= N.
        #[arg(long)]
        sweep: Option<u32>,
    },
    /// Measure the invariants of random plane maps against the formulas.
    PlaneCensus {
        #[command(flatten)]
        deg: Degrees,
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
        #[arg(long)]
        discriminant: bool,
        #[arg(long, default_value_t = 12)]
        disc_max_degree: i64,
        #[arg(long)]
        infinity: bool,
    },
    /// Measure the cusp counts of random maps of the sphere.
    SphereCensus {
        #[command(flatten)]
        deg: Degrees,
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
    },
    /// Implicit equation and singular points of the discriminant.
    Discriminant {
        #[command(flatten)]
        input: MapInput,
        #[command(flatten)]
        deg: Degrees,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
    },
    /// Delta invariants of the discriminant at infinity.
    Infinity {
        #[command(flatten)]
        input: MapInput,
        #[command(flatten)]
        deg: Degrees,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
    },
    /// Branches and delta invariant of a plane curve germ.
    Puiseux {
        #[arg(long)]
        curve: String,
        #[arg(long, default_value = "0,0")]
        point: String,
    },
    /// Generalized cusp index at a point.
    CuspIndex {
        #[command(flatten)]
        input: MapInput,
        #[arg(long, default_value = "0,0")]
        point: String,
    },
    /// Simple cusps in a polydisc.
    Probe {
        #[command(flatten)]
        input: MapInput,
        #[arg(long, default_value = "0,0")]
        point: String,
        #[arg(long, default_value = "1")]
        radius: String,
    },
}

/// Outcome of a subcommand: the JSON body and whether every check passed.
struct Outcome {
    body: Value,
    pass: bool,
}

fn input_error(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_map(s: &str) -> Result<PlaneMap> {
    let mut f = None;
    let mut g = None;
    for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, body) = part.split_once('=').ok_or_else(|| input_error(format!("expected name=poly in {part:?}")))?;
        let p = parse_poly(body)?;
        match name.trim() {
            "f" => f = Some(p),
            "g" => g = Some(p),
            other => return Err(input_error(format!("unknown component {other:?}"))),
        }
    }
    match (f, g) {
        (Some(f), Some(g)) => Ok(PlaneMap::new(f, g)),
        _ => Err(input_error("map needs both f and g")),
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let p = parse_poly(s.trim())?;
    if !p.is_constant() {
        return Err(input_error(format!("expected a rational number, got {s:?}")));
    }
    Ok(p.constant_term())
}

pub fn parse_point(s: &str) -> Result<[Rat; 2]> {
    let (a, b) = s.split_once(',').ok_or_else(|| input_error(format!("expected x,y, got {s:?}")))?;
    Ok([parse_rat(a)?, parse_rat(b)?])
}

fn read_map(input: &MapInput) -> Result<Option<PlaneMap>> {
    match (&input.map, &input.map_file) {
        (Some(m), _) => parse_map(m).map(Some),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
            parse_map(&text).map(Some)
        }
        (None, None) => Ok(None),
    }
}

fn degrees(deg: &Degrees) -> Result<(u32, u32)> {
    match (deg.d1, deg.d2) {
        (Some(a), Some(b)) if a >= 1 && b >= 1 => Ok((a, b)),
        _ => Err(input_error("--d1 and --d2 must be positive")),
    }
}

/// An explicit map, or a random one of the given degrees.
fn map_or_sample(input: &MapInput, deg: &Degrees, seed: u64, height: i64) -> Result<PlaneMap> {
    match read_map(input)? {
        Some(m) => Ok(m),
        None => {
            let (d1, d2) = degrees(deg)?;
            Ok(sample_map(MapKind::Plane, d1.max(d2), d1.min(d2), seed, height)?.plane())
        }
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn checks_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

fn formulas_cmd(deg: &Degrees, sphere: bool, sweep_n: Option<u32>) -> Result<Outcome> {
    let identities = symbolic_identities();
    let ids_hold = identities.iter().all(|i| i.holds);
    if let Some(n) = sweep_n {
        let rows = sweep(n);
        let pass = ids_hold && rows.iter().all(|r| r.all_hold());
        let body = json!({
            "config": {"command": "formulas", "sweep": n},
            "symbolic": to_value(&identities),
            "rows": to_value(&rows),
            "pass": pass,
        });
        return Ok(Outcome { body, pass });
    }
    let (d1, d2) = degrees(deg)?;
    let inv = if sphere { sphere_invariants(d1, d2) } else { plane_invariants(d1, d2) };
    let checks = vec![
        Check::new("serre_closure", true, serre_closure(&inv)),
        Check::new("bezout_split", true, bezout_split(&inv)),
        Check::new("delta_infinity_decomposition", true, delta_infinity_decomposition(&inv)),
    ];
    let pass = ids_hold && checks_pass(&checks);
    let body = json!({
        "config": {"command": "formulas", "d1": d1, "d2": d2, "surface": if sphere { "sphere" } else { "plane" }},
        "predicted": to_value(&inv),
        "checks": to_value(&checks),
        "symbolic": to_value(&identities),
        "pass": pass,
    });
    Ok(Outcome { body, pass })
}

/// One report, or an envelope over several trials with seeds `seed, seed + 1, ...`.
fn census_outcome(reports: Vec<CensusReport>, seed: u64) -> Outcome {
    let pass = reports.iter().all(|r| r.pass);
    if reports.len() == 1 {
        let r = reports.into_iter().next().unwrap();
        return Outcome { body: to_value(&r), pass };
    }
    let mut checks = Vec::new();
    let mut primes: Vec<u64> = Vec::new();
    let mut shears = Vec::new();
    let mut timings: BTreeMap<String, u64> = BTreeMap::new();
    for (i, r) in reports.iter().enumerate() {
        for c in &r.checks {
            checks.push(Check { name: format!("trial{i}.{}", c.name), ..c.clone() });
        }
        primes.extend(&r.primes);
        shears.extend(r.shears.iter().copied());
        for (k, v) in &r.timings_ms {
            *timings.entry(k.clone()).or_default() += v;
        }
    }
    primes.sort_unstable();
    primes.dedup();
    let mut config = reports[0].config.clone();
    config.insert("trials".into(), json!(reports.len()));
    let body = json!({
        "config": config,
        "predicted": to_value(&reports[0].predicted),
        "measured": reports.iter().map(|r| to_value(&r.measured)).collect::<Vec<_>>(),
        "checks": to_value(&checks),
        "trials": to_value(&reports),
        "pass": pass,
        "timings_ms": timings,
        "seed": seed,
        "primes": primes,
        "shears": to_value(&shears),
    });
    Outcome { body, pass }
}

fn strip_timings(mut reports: Vec<CensusReport>, keep: bool) -> Vec<CensusReport> {
    if !keep {
        for r in &mut reports {
            r.timings_ms.clear();
        }
    }
    reports
}

fn discriminant_cmd(map: &PlaneMap) -> Result<Outcome> {
    let (d1, d2) = (map.f.degree().max(map.g.degree()), map.f.degree().min(map.g.degree()));
    let inv = plane_invariants(d1, d2);
    let eq = plane_equations(map);
    let disc = discriminant_implicitize(map)?;
    let (fx, fy) = (map.f.diff(Var::X), map.f.diff(Var::Y));
    let on_crit = count_common_zeros(&eq.j, &eq.j11)?.distinct as i64;
    let grad = if fx.is_constant() || fy.is_constant() {
        0
    } else {
        count_solution_overlap((&eq.j, &eq.j11), (&fx, &fy))? as i64
    };
    let cusps = on_crit - grad;
    let (total, nodes) = discriminant_singularities(&disc.poly, cusps)?;
    let deg = disc.degree() as i64;
    let checks = vec![
        Check::new("disc_degree", inv.disc_degree, deg),
        Check::new("cusp_count", inv.cusp_count, cusps),
        Check::new("disc_singular_count", inv.cusp_count + inv.node_count, total),
        Check::new("node_count", inv.node_count, nodes),
    ];
    let pass = checks_pass(&checks);
    let body = json!({
        "config": {"command": "discriminant"},
        "map": {"f": map.f.to_string(), "g": map.g.to_string()},
        "predicted": to_value(&inv),
        "measured": {
            "discriminant": disc.poly.to_string(),
            "disc_degree": deg,
            "cusp_count": cusps,
            "disc_singular_count": total,
            "node_count": nodes,
        },
        "checks": to_value(&checks),
        "pass": pass,
        "shears": [to_value(&disc.shear)],
    });
    Ok(Outcome { body, pass })
}

fn infinity_cmd(map: &PlaneMap) -> Result<Outcome> {
    let rep = infinity_analysis(map)?;
    let inv = plane_invariants(rep.d1, rep.d2);
    let mut checks = vec![Check::new("delta_infinity_total", rep.formula_total, rep.total)];
    for (i, b) in rep.branches.iter().enumerate() {
        checks.push(Check::new(&format!("branch{i}.delta"), inv.branch_delta, b.delta));
        checks.push(Check::new(&format!("branch{i}.cd_nonzero"), true, b.cd_nonzero));
        checks.push(Check::new(&format!("branch{i}.d2c_minus_d1d_nonzero"), true, b.d2c_minus_d1d_nonzero));
    }
    if let Some(p) = rep.pairwise {
        checks.push(Check::new("pairwise", inv.branch_pair_intersection, p));
    }
    let pass = checks_pass(&checks);
    let body = json!({
        "config": {"command": "infinity"},
        "map": {"f": map.f.to_string(), "g": map.g.to_string()},
        "predicted": to_value(&inv),
        "measured": to_value(&rep),
        "checks": to_value(&checks),
        "pass": pass,
    });
    Ok(Outcome { body, pass })
}

fn puiseux_cmd(curve: &str, point: &str) -> Result<Outcome> {
    let p = parse_poly(curve)?;
    let a = parse_point(point)?;
    let germ = analyze_germ(&p, &a)?;
    let mu = milnor_number(&p, &a)? as i64;
    let milnor = 2 * germ.delta as i64 - germ.branch_count as i64 + 1;
    let checks = vec![Check::new("milnor_formula", mu, milnor)];
    let pass = checks_pass(&checks);
    let body = json!({
        "config": {"command": "puiseux", "curve": p.to_string(), "point": [a[0].to_string(), a[1].to_string()]},
        "measured": to_value(&germ),
        "milnor_number": mu,
        "checks": to_value(&checks),
        "pass": pass,
    });
    Ok(Outcome { body, pass })
}

fn require_map(input: &MapInput) -> Result<PlaneMap> {
    read_map(input)?.ok_or_else(|| input_error("--map or --map-file is required"))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let seed = cli.seed;
    match &cli.command {
        Command::Formulas { deg, sphere, sweep } => formulas_cmd(deg, *sphere, *sweep),
        Command::PlaneCensus { deg, trials, height, discriminant, disc_max_degree, infinity } => {
            let (d1, d2) = degrees(deg)?;
            let opts = CensusOptions {
                height: *height,
                with_discriminant: *discriminant,
                disc_max_degree: *disc_max_degree,
                with_infinity: *infinity,
            };
            let reports: Vec<CensusReport> = (0..(*trials).max(1))
                .into_par_iter()
                .map(|i| plane_census_with(d1, d2, seed.wrapping_add(i), &opts))
                .collect::<Result<_>>()?;
            Ok(census_outcome(strip_timings(reports, cli.timings), seed))
        }
        Command::SphereCensus { deg, trials, height } => {
            let (d1, d2) = degrees(deg)?;
            let reports: Vec<CensusReport> = (0..(*trials).max(1))
                .into_par_iter()
                .map(|i| sphere_census_height(d1, d2, seed.wrapping_add(i), *height))
                .collect::<Result<_>>()?;
            Ok(census_outcome(strip_timings(reports, cli.timings), seed))
        }
        Command::Discriminant { input, deg, height } => discriminant_cmd(&map_or_sample(input, deg, seed, *height)?),
        Command::Infinity { input, deg, height } => infinity_cmd(&map_or_sample(input, deg, seed, *height)?),
        Command::Puiseux { curve, point } => puiseux_cmd(curve, point),
        Command::CuspIndex { input, point } => {
            let map = require_map(input)?;
            let r = generalized_cusp_index(&map, &parse_point(point)?)?;
            let body = json!({"config": {"command": "cusp-index"}, "measured": to_value(&r), "pass": true});
            Ok(Outcome { body, pass: true })
        }
        Command::Probe { input, point, radius } => {
            let map = require_map(input)?;
            let n = deformation_probe(&map, &parse_point(point)?, &parse_rat(radius)?)?;
            let body = json!({"config": {"command": "probe", "radius": radius}, "measured": {"cusps": n}, "pass": true});
            Ok(Outcome { body, pass: true })
        }
    }
}

fn error_name(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GenericityExhausted(_) | Error::ShearExhausted(_) | Error::AgreementFailed(_) => EXIT_GENERICITY,
        _ => EXIT_INPUT,
    }
}

fn emit(cli: &Cli, body: &Value) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(body).expect("serializable");
    text.push('\n');
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let (body, code) = match pool.install(|| execute(&cli)) {
        Ok(o) => (o.body, if o.pass { EXIT_OK } else { EXIT_GENERICITY }),
        Err(e) => {
            eprintln!("error: {e}");
            (json!({"error": error_name(&e), "message": e.to_string()}), exit_code(&e))
        }
    };
    if let Err(e) = emit(&cli, &body) {
        eprintln!("error: {e}");
        return EXIT_INPUT;
    }
    code
}

pub fn run() -> i32 {
    run_with(std::env::args_os())
}
