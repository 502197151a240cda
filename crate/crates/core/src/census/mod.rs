//! End-to-end censuses: sample a map, measure every predicted invariant, compare.

mod discriminant;
mod index;
mod infinity;
mod plane;
mod probe;
mod sample;
mod sphere;

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::formulas::Invariants;
use crate::solve::Shear;

pub use discriminant::{discriminant_implicitize, discriminant_singularities, DiscriminantResult};
pub use index::{generalized_cusp_index, CuspIndexResult};
pub use infinity::{infinity_analysis, InfinityBranch, InfinityReport};
pub use plane::{plane_census, plane_census_with, CensusOptions};
pub use probe::deformation_probe;
pub use sample::{random_poly, sample_map, sub_seed, MapKind, SampledMap, MAX_RESAMPLES};
pub use sphere::{sphere_census, sphere_census_height};

pub const DEFAULT_HEIGHT: i64 = 100;

/// One predicate compared against its prediction.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub got: Value,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, expected: impl Into<Value>, got: impl Into<Value>) -> Self {
        let (expected, got) = (expected.into(), got.into());
        Check { name: name.to_string(), pass: expected == got, expected, got }
    }
}

/// Measured invariants; absent entries were not measured.
#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct Measured {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crit_degree: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crit_smooth: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infinity_point_count: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transversality: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bezout_total: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bezout_distinct: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gradf_count: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gradf_overlap: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_count: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cusp_count: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disc_degree: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disc_singular_count: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node_count: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_infinity_total: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub serre_closure: Option<bool>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct MapText {
    pub f: String,
    pub g: String,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CensusReport {
    pub config: BTreeMap<String, Value>,
    pub map: MapText,
    pub predicted: Invariants,
    pub measured: Measured,
    pub checks: Vec<Check>,
    /// Counts are not asserted: the critical locus is empty or the degrees are below the formulas' range.
    pub degenerate: bool,
    pub pass: bool,
    pub resamples: usize,
    pub timings_ms: BTreeMap<String, u64>,
    pub seed: u64,
    pub primes: Vec<u64>,
    pub shears: Vec<Shear>,
}

impl CensusReport {
    pub fn failing(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }
}

/// Wall-clock milliseconds spent in `f`, recorded under `name`.
pub(crate) fn timed<T>(timings: &mut BTreeMap<String, u64>, name: &str, f: impl FnOnce() -> T) -> T {
    let start = std::time::Instant::now();
    let out = f();
    *timings.entry(name.to_string()).or_default() += start.elapsed().as_millis() as u64;
    out
}
