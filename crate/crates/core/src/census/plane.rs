use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::Result;
use crate::formulas::{plane_invariants, Invariants};
use crate::jets::plane_equations;
use crate::poly::Var;
use crate::solve::{count_common_zeros_seeded, count_solution_overlap, points_at_infinity};

use super::discriminant::{discriminant_implicitize, discriminant_singularities};
use super::infinity::infinity_analysis;
use super::sample::{sample_map_from, sub_seed, MapKind, SampledMap, MAX_RESAMPLES};
use super::{timed, CensusReport, Check, MapText, Measured, DEFAULT_HEIGHT};

#[derive(Clone, Debug, PartialEq)]
pub struct CensusOptions {
    pub height: i64,
    pub with_discriminant: bool,
    /// The discriminant path runs only up to this predicted degree.
    pub disc_max_degree: i64,
    pub with_infinity: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { height: DEFAULT_HEIGHT, with_discriminant: false, disc_max_degree: 12, with_infinity: false }
    }
}

pub fn plane_census(d1: u32, d2: u32, seed: u64, with_discriminant: bool) -> Result<CensusReport> {
    plane_census_with(d1, d2, seed, &CensusOptions { with_discriminant, ..Default::default() })
}

/// Resamples until every enabled check passes; the last failing report is returned otherwise.
pub fn plane_census_with(d1: u32, d2: u32, seed: u64, opts: &CensusOptions) -> Result<CensusReport> {
    let (d1, d2) = (d1.max(d2), d1.min(d2));
    let predicted = plane_invariants(d1, d2);
    let mut next = 0;
    let mut report = None;
    while next < MAX_RESAMPLES {
        let sample = sample_map_from(MapKind::Plane, d1, d2, seed, opts.height, next)?;
        let r = measure(&sample, &predicted, opts)?;
        next = sample.attempt + 1;
        let pass = r.pass;
        report = Some(r);
        if pass {
            break;
        }
    }
    Ok(report.expect("at least one sample"))
}

fn config(sample: &SampledMap, opts: &CensusOptions) -> BTreeMap<String, Value> {
    let mut c = BTreeMap::new();
    c.insert("kind".into(), json!("plane"));
    c.insert("d1".into(), json!(sample.d1));
    c.insert("d2".into(), json!(sample.d2));
    c.insert("height".into(), json!(opts.height));
    c.insert("with_discriminant".into(), json!(opts.with_discriminant));
    c.insert("with_infinity".into(), json!(opts.with_infinity));
    c
}

fn measure(sample: &SampledMap, predicted: &Invariants, opts: &CensusOptions) -> Result<CensusReport> {
    let map = sample.plane();
    let mut timings = BTreeMap::new();
    let eq = timed(&mut timings, "equations", || plane_equations(&map));
    let mut m = Measured { crit_degree: Some(eq.j.degree() as i64), ..Default::default() };
    let mut checks = sample.checklist.clone();
    checks.push(Check::new("crit_degree", predicted.crit_degree, eq.j.degree()));
    let mut primes = Vec::new();
    let mut shears = Vec::new();
    if !sample.degenerate {
        let (fx, fy) = (map.f.diff(Var::X), map.f.diff(Var::Y));
        let (jx, jy) = (eq.j.diff(Var::X), eq.j.diff(Var::Y));
        let s = |k: u64| sub_seed(sample.seed, 1000 + k);
        timed(&mut timings, "critical_curve", || -> Result<()> {
            let sing = count_solution_overlap((&eq.j, &jx), (&eq.j, &jy))?;
            m.crit_smooth = Some(sing == 0);
            checks.push(Check::new("crit_smooth", true, sing == 0));
            let inf = points_at_infinity(&eq.j);
            m.infinity_point_count = Some(inf.count as i64);
            m.transversality = Some(inf.transversal);
            checks.push(Check::new("infinity_point_count", predicted.crit_infinity_points, inf.count));
            checks.push(Check::new("infinity_transversal", true, inf.transversal));
            Ok(())
        })?;
        let cusps = timed(&mut timings, "cusps", || -> Result<i64> {
            let bz = count_common_zeros_seeded(&eq.j, &eq.j11, s(1))?;
            let gz = count_common_zeros_seeded(&fx, &fy, s(2))?;
            let overlap = count_solution_overlap((&eq.j, &eq.j11), (&fx, &fy))?;
            for z in [&bz, &gz] {
                primes.extend(z.primes.iter().copied());
                shears.extend([z.shear, z.check_shear]);
            }
            m.bezout_total = Some(bz.resultant_degree as i64);
            m.bezout_distinct = Some(bz.distinct as i64);
            m.gradf_count = Some(gz.distinct as i64);
            m.gradf_overlap = Some(overlap as i64);
            let cusps = bz.distinct as i64 - overlap as i64;
            m.cusp_count = Some(cusps);
            checks.push(Check::new("bezout_total", predicted.bezout_total, bz.resultant_degree));
            checks.push(Check::new("bezout_distinct", predicted.bezout_total, bz.distinct));
            checks.push(Check::new("gradf_count", predicted.gradf_count, gz.distinct));
            checks.push(Check::new("gradf_overlap", predicted.gradf_count, overlap));
            checks.push(Check::new("cusp_count", predicted.cusp_count, cusps));
            Ok(cusps)
        })?;
        if opts.with_discriminant && predicted.disc_degree <= opts.disc_max_degree {
            timed(&mut timings, "discriminant", || -> Result<()> {
                let disc = discriminant_implicitize(&map)?.poly;
                let deg = disc.degree() as i64;
                m.disc_degree = Some(deg);
                checks.push(Check::new("disc_degree", predicted.disc_degree, deg));
                let (total, nodes) = discriminant_singularities(&disc, cusps)?;
                m.disc_singular_count = Some(total as i64);
                m.node_count = Some(nodes);
                checks.push(Check::new(
                    "disc_singular_count",
                    predicted.cusp_count + predicted.node_count,
                    total,
                ));
                checks.push(Check::new("node_count", predicted.node_count, nodes));
                let serre = (deg - 1) * (deg - 2)
                    == 2 * (predicted.crit_genus + cusps + nodes + predicted.delta_infinity_total);
                m.serre_closure = Some(serre);
                checks.push(Check::new("serre_closure", true, serre));
                Ok(())
            })?;
        }
        if opts.with_infinity && sample.d1 > sample.d2 {
            timed(&mut timings, "infinity", || -> Result<()> {
                let inf = infinity_analysis(&map)?;
                m.delta_infinity_total = Some(inf.total as i64);
                checks.push(Check::new("delta_infinity_total", predicted.delta_infinity_total, inf.total));
                Ok(())
            })?;
        }
    }
    primes.sort_unstable();
    primes.dedup();
    let pass = checks.iter().all(|c| c.pass);
    Ok(CensusReport {
        config: config(sample, opts),
        map: MapText { f: map.f.to_string(), g: map.g.to_string() },
        predicted: predicted.clone(),
        measured: m,
        checks,
        degenerate: sample.degenerate,
        pass,
        resamples: sample.attempt,
        timings_ms: timings,
        seed: sample.seed,
        primes,
        shears,
    })
}
