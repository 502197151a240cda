use std::collections::BTreeMap;

use serde_json::json;

use crate::error::Result;
use crate::formulas::{sphere_invariants, Invariants};
use crate::jets::sphere_equations;
use crate::solve::{count_on_sphere, count_on_sphere_many};

use super::sample::{sample_map_from, MapKind, SampledMap, MAX_RESAMPLES};
use super::{timed, CensusReport, Check, MapText, Measured, DEFAULT_HEIGHT};

/// Cusps of a random map of the quadric `y^2 + 2xz = 1` to the plane.
pub fn sphere_census(d1: u32, d2: u32, seed: u64) -> Result<CensusReport> {
    sphere_census_height(d1, d2, seed, DEFAULT_HEIGHT)
}

pub fn sphere_census_height(d1: u32, d2: u32, seed: u64, height: i64) -> Result<CensusReport> {
    let (d1, d2) = (d1.max(d2), d1.min(d2));
    let predicted = sphere_invariants(d1, d2);
    let mut next = 0;
    let mut report = None;
    while next < MAX_RESAMPLES {
        let sample = sample_map_from(MapKind::Sphere, d1, d2, seed, height, next)?;
        let r = measure(&sample, &predicted)?;
        next = sample.attempt + 1;
        let pass = r.pass;
        report = Some(r);
        if pass {
            break;
        }
    }
    Ok(report.expect("at least one sample"))
}

fn measure(sample: &SampledMap, predicted: &Invariants) -> Result<CensusReport> {
    let map = sample.sphere();
    let mut timings = BTreeMap::new();
    let eq = timed(&mut timings, "equations", || sphere_equations(&map));
    let mut m = Measured { crit_degree: Some(eq.j.degree() as i64), ..Default::default() };
    let mut checks = sample.checklist.clone();
    checks.push(Check::new("crit_degree", predicted.big_d, eq.j.degree()));
    if !sample.degenerate {
        timed(&mut timings, "cusps", || -> Result<()> {
            let total = count_on_sphere(&eq.j, &eq.j11)? as i64;
            let vf = eq.v_f.as_ref().expect("sphere equations carry v(f)");
            let kernel = count_on_sphere_many(&vf.components().map(|p| p.clone()))? as i64;
            m.bezout_total = Some(total);
            m.kernel_count = Some(kernel);
            m.cusp_count = Some(total - kernel);
            checks.push(Check::new("bezout_total", predicted.bezout_total, total));
            checks.push(Check::new("kernel_count", predicted.kernel_locus_count, kernel));
            checks.push(Check::new("cusp_count", predicted.cusp_count, total - kernel));
            Ok(())
        })?;
    }
    let mut config = BTreeMap::new();
    config.insert("kind".into(), json!("sphere"));
    config.insert("d1".into(), json!(sample.d1));
    config.insert("d2".into(), json!(sample.d2));
    config.insert("height".into(), json!(sample.height));
    let pass = checks.iter().all(|c| c.pass);
    Ok(CensusReport {
        config,
        map: MapText { f: map.f.to_string(), g: map.g.to_string() },
        predicted: predicted.clone(),
        measured: m,
        checks,
        degenerate: sample.degenerate,
        pass,
        resamples: sample.attempt,
        timings_ms: timings,
        seed: sample.seed,
        primes: vec![],
        shears: vec![],
    })
}
