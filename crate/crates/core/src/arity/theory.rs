use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::signature::level_partition;
use super::{compare_with_orbits, PartitionCheck};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::orbits::OrbitTable;
use crate::structures::FiniteStructure;

/// Least `n` passing every check, or the "exceeds max_n" sentinel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoryArity {
    Value(usize),
    ExceedsMaxN,
}

impl TheoryArity {
    pub fn value(self) -> Option<usize> {
        match self {
            TheoryArity::Value(n) => Some(n),
            TheoryArity::ExceedsMaxN => None,
        }
    }
}

impl Serialize for TheoryArity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TheoryArity::Value(n) => serializer.serialize_u64(*n as u64),
            TheoryArity::ExceedsMaxN => serializer.serialize_str("exceeds max_n"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelCheck {
    pub n: usize,
    #[serde(flatten)]
    pub check: PartitionCheck,
}

/// Wall-clock timings; kept out of serialized reports so they stay byte-stable.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Timings {
    pub orbits_ms: f64,
    pub checks_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ArityReport {
    pub structure: String,
    pub size: usize,
    pub aut_order: u64,
    pub max_m: usize,
    pub max_n: usize,
    pub checks: Vec<LevelCheck>,
    pub theory_arity: TheoryArity,
    /// Set when `max_m ≥ s`: repeated coordinates reduce every longer tuple
    /// to one of at most `s` distinct entries.
    pub exact: bool,
    #[serde(skip)]
    pub timings: Timings,
}

/// Theory arity of `structure`, checking tuple lengths up to `max_m`.
pub fn theory_arity(structure: &FiniteStructure, max_m: usize, max_n: usize, limits: &Limits) -> Result<ArityReport> {
    let mut orbits = OrbitTable::for_structure(structure, *limits)?;
    theory_arity_in(&mut orbits, max_m, max_n)
}

/// As [`theory_arity`], reusing an existing orbit table. The per-`m` checks
/// of each level run on the current rayon pool; results are assembled in
/// order, so the report does not depend on the thread count.
pub fn theory_arity_in(orbits: &mut OrbitTable, max_m: usize, max_n: usize) -> Result<ArityReport> {
    if max_m == 0 || max_n == 0 {
        return Err(Error::InvalidParameter("max_m and max_n must be at least 1".into()));
    }
    let size = orbits.size();
    let started = Instant::now();
    orbits.ensure_upto(max_m)?;
    if max_m >= 2 && !orbits.require(2)?.diagonal_is_union_of_classes() {
        return Err(Error::InvariantViolation(
            "an orbit of pairs straddles the diagonal".into(),
        ));
    }
    let orbits_ms = started.elapsed().as_secs_f64() * 1e3;

    let started = Instant::now();
    let table: &OrbitTable = orbits;
    let mut checks = Vec::new();
    let mut arity = TheoryArity::ExceedsMaxN;
    for n in 1..=max_n {
        let level: Vec<LevelCheck> = (n + 1..=max_m)
            .into_par_iter()
            .map(|m| {
                let labels = level_partition(table, n, m)?;
                let check = compare_with_orbits(&labels, table.require(m)?)?;
                Ok(LevelCheck { n, check })
            })
            .collect::<Result<_>>()?;
        let passed = level.iter().all(|c| c.check.passed);
        checks.extend(level);
        if passed {
            arity = TheoryArity::Value(n);
            break;
        }
    }
    Ok(ArityReport {
        structure: table.structure().name().to_string(),
        size,
        aut_order: table.aut().order(),
        max_m,
        max_n,
        checks,
        theory_arity: arity,
        exact: max_m >= size,
        timings: Timings {
            orbits_ms,
            checks_ms: started.elapsed().as_secs_f64() * 1e3,
        },
    })
}
