//! End-to-end acceptance suite: one line per criterion, nonzero exit if any fails.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use cuspidal::census::{
    deformation_probe, discriminant_implicitize, generalized_cusp_index, infinity_analysis, plane_census,
    plane_census_with, sample_map, sphere_census, CensusOptions, CensusReport, MapKind, DEFAULT_HEIGHT,
};
use cuspidal::formulas::{
    bezout_split, delta_infinity_decomposition, plane_invariants, serre_closure, sphere_invariants,
    symbolic_identities,
};
use cuspidal::jets::PlaneMap;
use cuspidal::poly::{parse_poly, rat, Mono, QPoly, Rat, Ring, Var};
use cuspidal::puiseux::{analyze_germ, milnor_number};
use cuspidal::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEEDS: [u64; 3] = [1, 2, 3];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok: impl Into<String>) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail: ok.into() }
    } else {
        Outcome { pass: false, detail: failures.join("; ") }
    }
}

fn within(t: Duration, limit: Duration, what: &str, failures: &mut Vec<String>) {
    if t > limit {
        failures.push(format!("{what} took {:.1}s (limit {}s)", t.as_secs_f64(), limit.as_secs()));
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T, failures: &mut Vec<String>) {
    if got != want {
        failures.push(format!("{what}: got {got:?}, expected {want:?}"));
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for d1 in 1..=12 {
        for d2 in 1..=d1 {
            for inv in [plane_invariants(d1, d2), sphere_invariants(d1, d2)] {
                if inv.degenerate {
                    continue;
                }
                let tag = format!("{:?} ({d1},{d2})", inv.surface);
                if !serre_closure(&inv) {
                    failures.push(format!("{tag} genus closure"));
                }
                if !bezout_split(&inv) {
                    failures.push(format!("{tag} Bezout split"));
                }
                if !delta_infinity_decomposition(&inv) {
                    failures.push(format!("{tag} delta at infinity"));
                }
            }
        }
    }
    for id in symbolic_identities() {
        if !id.holds {
            failures.push(format!("symbolic identity {}", id.name));
        }
    }
    within(start.elapsed(), Duration::from_secs(1), "identity suite", &mut failures);
    outcome(failures, format!("78 degree pairs, both surfaces, {:?}", start.elapsed()))
}

/// Plane census samples for each degree pair and seed, with their wall time.
fn plane_samples() -> Vec<((u32, u32), u64, Duration, cuspidal::Result<CensusReport>)> {
    let mut out = Vec::new();
    for dd in [(2, 2), (3, 2), (3, 3)] {
        for seed in SEEDS {
            let start = Instant::now();
            let r = plane_census(dd.0, dd.1, seed, false);
            out.push((dd, seed, start.elapsed(), r));
        }
    }
    out
}

fn plane_census_counts(samples: &[((u32, u32), u64, Duration, cuspidal::Result<CensusReport>)]) -> Outcome {
    let table = |dd: (u32, u32)| match dd {
        (2, 2) => (4, 1, 3),
        (3, 2) => (12, 4, 8),
        _ => (20, 4, 16),
    };
    let mut failures = Vec::new();
    for (dd, seed, t, r) in samples {
        let tag = format!("({},{}) seed {seed}", dd.0, dd.1);
        within(*t, Duration::from_secs(10), &tag, &mut failures);
        match r {
            Ok(r) => {
                let m = &r.measured;
                let got = (m.bezout_total, m.gradf_count, m.cusp_count);
                let (b, g, c) = table(*dd);
                expect(&tag, got, (Some(b), Some(g), Some(c)), &mut failures);
            }
            Err(e) => failures.push(format!("{tag}: {e}")),
        }
    }
    let slowest = samples.iter().map(|s| s.2).max().unwrap_or_default();
    outcome(failures, format!("(2,2) 4/1/3, (3,2) 12/4/8, (3,3) 20/4/16 over seeds 1-3, slowest {slowest:?}"))
}

fn critical_curve(samples: &[((u32, u32), u64, Duration, cuspidal::Result<CensusReport>)]) -> Outcome {
    let mut failures = Vec::new();
    for (dd, seed, _, r) in samples {
        let tag = format!("({},{}) seed {seed}", dd.0, dd.1);
        let Ok(r) = r else {
            failures.push(format!("{tag}: no sample"));
            continue;
        };
        let m = &r.measured;
        let big_d = (dd.0 + dd.1 - 2) as i64;
        expect(&format!("{tag} deg J"), m.crit_degree, Some(big_d), &mut failures);
        expect(&format!("{tag} smooth"), m.crit_smooth, Some(true), &mut failures);
        expect(&format!("{tag} points at infinity"), m.infinity_point_count, Some(big_d), &mut failures);
        expect(&format!("{tag} transversal"), m.transversality, Some(true), &mut failures);
    }
    outcome(failures, format!("{} samples", samples.len()))
}

/// `Δ` vanishes on the parametrized image of the critical curve.
fn vanishes_on_image(disc: &QPoly) -> bool {
    (-4..=4).all(|t| {
        let t = rat(t);
        let u = rat(-3) * t.clone() * t.clone();
        let v = rat(-2) * t.clone() * t.clone() * t;
        Ring::is_zero(&disc.eval(&[(Var::U, u), (Var::V, v)]))
    })
}

fn discriminant_curve() -> Outcome {
    let mut failures = Vec::new();
    let opts = CensusOptions { with_discriminant: true, ..Default::default() };
    for (dd, want) in [((2, 2), (4, 3, 0)), ((3, 2), (9, 18, 10))] {
        let tag = format!("({},{})", dd.0, dd.1);
        let start = Instant::now();
        match plane_census_with(dd.0, dd.1, 1, &opts) {
            Ok(r) => {
                let m = &r.measured;
                let got = (m.disc_degree, m.disc_singular_count, m.node_count);
                expect(&tag, got, (Some(want.0), Some(want.1), Some(want.2)), &mut failures);
                expect(&format!("{tag} genus closure"), m.serre_closure, Some(true), &mut failures);
            }
            Err(e) => failures.push(format!("{tag}: {e}")),
        }
        within(start.elapsed(), Duration::from_secs(300), &tag, &mut failures);
    }
    let hand = PlaneMap::parse("x", "y^3+x*y").unwrap();
    match discriminant_implicitize(&hand) {
        Ok(d) => {
            expect("hand oracle", d.poly.to_string(), "4*u^3+27*v^2".to_string(), &mut failures);
            if !vanishes_on_image(&d.poly) {
                failures.push("hand oracle does not vanish on (-3t^2, -2t^3)".into());
            }
        }
        Err(e) => failures.push(format!("hand oracle: {e}")),
    }
    outcome(failures, "(2,2) 4/3/0, (3,2) 9/18/10, cusp discriminant 4u^3+27v^2")
}

fn sphere_counts() -> Outcome {
    let mut failures = Vec::new();
    for (dd, want) in [((2, 1), (12, 6, 6)), ((2, 2), (24, 6, 18))] {
        let tag = format!("({},{})", dd.0, dd.1);
        let start = Instant::now();
        match sphere_census(dd.0, dd.1, 1) {
            Ok(r) => {
                let m = &r.measured;
                let got = (m.bezout_total, m.kernel_count, m.cusp_count);
                expect(&tag, got, (Some(want.0), Some(want.1), Some(want.2)), &mut failures);
            }
            Err(e) => failures.push(format!("{tag}: {e}")),
        }
        within(start.elapsed(), Duration::from_secs(120), &tag, &mut failures);
    }
    outcome(failures, "(2,1) 12/6/6, (2,2) 24/6/18")
}

fn germs() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let o = [rat(0), rat(0)];
    for (curve, delta, branches) in
        [("y^2-x^3", 1, 1), ("y^3-x^4", 3, 1), ("y^2-x^4", 2, 2), ("y^2-x^2-x^3", 1, 2)]
    {
        let p = parse_poly(curve).unwrap();
        match (analyze_germ(&p, &o), milnor_number(&p, &o)) {
            (Ok(g), Ok(mu)) => {
                expect(curve, (g.delta, g.branch_count), (delta, branches), &mut failures);
                let formula = 2 * g.delta as i64 - g.branch_count as i64 + 1;
                expect(&format!("{curve} Milnor"), mu as i64, formula, &mut failures);
            }
            (Err(e), _) | (_, Err(e)) => failures.push(format!("{curve}: {e}")),
        }
    }
    within(start.elapsed(), Duration::from_secs(1), "germs", &mut failures);
    outcome(failures, "delta 1, 3, 2, 1 and mu = 2 delta - r + 1")
}

fn infinity() -> Outcome {
    let mut failures = Vec::new();
    for (dd, total, branches, delta, pair) in [((3, 2), 9, 3, 0, 3), ((4, 2), 56, 4, 2, 8)] {
        let tag = format!("({},{})", dd.0, dd.1);
        let map = match sample_map(MapKind::Plane, dd.0, dd.1, 1, DEFAULT_HEIGHT) {
            Ok(s) => s.plane(),
            Err(e) => {
                failures.push(format!("{tag}: {e}"));
                continue;
            }
        };
        let r = match infinity_analysis(&map) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{tag}: {e}"));
                continue;
            }
        };
        let (d1, d2) = (dd.0 as i64, dd.1 as i64);
        let branch_delta = ((d1 - 1) * (d1 - d2 - 1) + gcd(d1, d2) - 1) / 2;
        expect(&format!("{tag} branch delta formula"), branch_delta, delta, &mut failures);
        expect(&format!("{tag} total"), r.total, total, &mut failures);
        expect(&format!("{tag} branches"), r.branch_count, branches, &mut failures);
        expect(&format!("{tag} pairwise"), r.pairwise, Some(pair), &mut failures);
        let n = r.branch_count as u64;
        expect(&format!("{tag} decomposition"), n * delta as u64 + n * (n - 1) / 2 * pair, total, &mut failures);
        for b in &r.branches {
            expect(&format!("{tag} branch delta at {}", b.points), b.delta, delta as u64, &mut failures);
            if !(b.cd_nonzero && b.d2c_minus_d1d_nonzero) {
                failures.push(format!("{tag} branch at {}: c = {}, d = {}", b.points, b.c, b.d));
            }
        }
    }
    outcome(failures, "(3,2) 9 = 3*0 + 3*3, (4,2) 56 = 4*2 + 6*8")
}

fn cusp_index() -> Outcome {
    let mut failures = Vec::new();
    let o = [rat(0), rat(0)];
    for (g, want) in [("y^3+x*y", Ok(1)), ("y^4+x*y", Ok(2)), ("y^3", Err(Error::NonReducedJacobian))] {
        let r = generalized_cusp_index(&PlaneMap::parse("x", g).unwrap(), &o);
        if let Ok(r) = &r {
            expect(&format!("(x, {g}) second draw"), r.check_mu, r.mu, &mut failures);
        }
        expect(&format!("(x, {g})"), r.map(|r| r.mu), want, &mut failures);
    }
    outcome(failures, "1, 2, NonReducedJacobian")
}

fn perturbed_swallowtail(rng: &mut ChaCha8Rng) -> PlaneMap {
    let base = PlaneMap::parse("x", "y^4+x*y").unwrap();
    let (x, y) = (Mono::var(Var::X, 1), Mono::var(Var::Y, 1));
    let c = loop {
        let c: i64 = rng.gen_range(-9..=9);
        if c != 0 {
            break c;
        }
    };
    let terms = [(x.mul(&x), rng.gen_range(-9..=9)), (x.mul(&y), rng.gen_range(-9..=9)), (y.mul(&y), c)];
    let bump = QPoly::from_int_terms(base.g.vars(), &terms).scale(&Rat::new(1.into(), 1000.into()));
    PlaneMap::new(base.f.clone(), &base.g + &bump)
}

fn probe() -> Outcome {
    let mut failures = Vec::new();
    let o = [rat(0), rat(0)];
    let half = Rat::new(1.into(), 2.into());
    for (g, want) in [("y^3+y", 0), ("y^3+x*y", 1)] {
        let r = deformation_probe(&PlaneMap::parse("x", g).unwrap(), &o, &half);
        expect(&format!("(x, {g})"), r, Ok(want), &mut failures);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..3 {
        let m = perturbed_swallowtail(&mut rng);
        expect(&format!("perturbation {k}: {}", m.g), deformation_probe(&m, &o, &half), Ok(2), &mut failures);
    }
    outcome(failures, "0, 1, and 2 for three perturbations of (x, y^4+xy)")
}

fn cli_bytes(threads: usize, args: &[&str]) -> String {
    let path: PathBuf = std::env::temp_dir().join(format!("cuspidal-acceptance-{}-{threads}.json", std::process::id()));
    let mut argv: Vec<String> =
        ["cuspidal", "--out", &path.display().to_string(), "--threads", &threads.to_string()].map(String::from).into();
    argv.extend(args.iter().map(|s| s.to_string()));
    cuspidal::cli::run_with(argv);
    let text = std::fs::read_to_string(&path).unwrap_or_default();
    let _ = std::fs::remove_file(&path);
    text
}

fn determinism() -> Outcome {
    let mut failures = Vec::new();
    let runs: [&[&str]; 3] = [
        &["--seed", "11", "plane-census", "--d1", "2", "--d2", "2", "--trials", "2", "--discriminant"],
        &["--seed", "11", "plane-census", "--d1", "3", "--d2", "2", "--infinity"],
        &["--seed", "11", "sphere-census", "--d1", "2", "--d2", "1"],
    ];
    for args in runs {
        let base = cli_bytes(1, args);
        if base.is_empty() {
            failures.push(format!("{args:?}: no output"));
            continue;
        }
        for threads in [2, 4] {
            if cli_bytes(threads, args) != base {
                failures.push(format!("{args:?}: output differs at {threads} threads"));
            }
        }
    }
    outcome(failures, "plane, discriminant, infinity and sphere reports identical at 1, 2, 4 threads")
}

fn main() {
    let samples = plane_samples();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("identity suite", Box::new(identity_suite)),
        ("plane census counts", Box::new(|| plane_census_counts(&samples))),
        ("critical curve per sample", Box::new(|| critical_curve(&samples))),
        ("discriminant curve", Box::new(discriminant_curve)),
        ("sphere census", Box::new(sphere_counts)),
        ("germ delta invariants", Box::new(germs)),
        ("delta at infinity", Box::new(infinity)),
        ("generalized cusp index", Box::new(cusp_index)),
        ("deformation probe", Box::new(probe)),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("[{status}] {:>2} {name}: {} ({:.2}s)", i + 1, o.detail, start.elapsed().as_secs_f64());
        failed += !o.pass as usize;
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
