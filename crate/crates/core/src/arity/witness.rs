//! Signatures extended by membership in substitution instances of given relations.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::signature::{equality_pattern, labelled_partition, SignatureScheme};
use super::{compare_with_orbits, Counterexample, PartitionCheck};
use crate::error::{Error, Result};
use crate::orbits::{for_each_tuple, OrbitTable, TupleSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    /// Signature level for almost-arity checks; absent for Δ-basedness.
    pub level: Option<usize>,
    pub max_m: usize,
    pub holds: bool,
    pub checks: Vec<PartitionCheck>,
    /// First failing check's pair, if any.
    pub counterexample: Option<Counterexample>,
}

/// Every map `{0..k-1} → {0..m-1}`, in lexicographic order.
fn index_maps(k: usize, m: usize) -> Vec<Vec<usize>> {
    let mut maps = Vec::new();
    if m == 0 && k > 0 {
        return maps;
    }
    for_each_tuple(m, k, |_, map| maps.push(map.to_vec()));
    maps
}

/// Substitution instances `W(x_ι(1), …, x_ι(k))` of each relation over `m` variables.
struct Substitutions<'a> {
    instances: Vec<(&'a TupleSet, Vec<Vec<usize>>)>,
    bits: usize,
}

impl<'a> Substitutions<'a> {
    fn new(relations: &'a [TupleSet], m: usize) -> Self {
        let instances: Vec<_> = relations.iter().map(|w| (w, index_maps(w.arity(), m))).collect();
        let bits = instances.iter().map(|(_, maps)| maps.len()).sum();
        Substitutions { instances, bits }
    }

    fn membership(&self, tuple: &[usize]) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.bits);
        let mut bit = 0;
        for (w, maps) in &self.instances {
            let s = w.size();
            for map in maps {
                let rank = map.iter().fold(0, |r, &i| r * s + tuple[i]);
                out.set(bit, w.contains_rank(rank));
                bit += 1;
            }
        }
        out
    }
}

fn validate(relations: &[TupleSet], orbits: &mut OrbitTable, max_m: usize) -> Result<()> {
    for w in relations {
        if w.size() != orbits.size() {
            return Err(Error::LengthMismatch {
                expected: orbits.size(),
                found: w.size(),
            });
        }
        if w.arity() > max_m {
            return Err(Error::InvalidParameter(format!(
                "relation of arity {} exceeds max_m = {max_m}",
                w.arity()
            )));
        }
        if w.arity() > 0 {
            orbits.ensure(w.arity())?.check_invariant(w)?;
        }
    }
    Ok(())
}

fn finish(level: Option<usize>, max_m: usize, checks: Vec<PartitionCheck>) -> WitnessReport {
    let counterexample = checks.iter().find_map(|c| c.counterexample.clone());
    WitnessReport {
        level,
        max_m,
        holds: checks.iter().all(|c| c.passed),
        checks,
        counterexample,
    }
}

/// Whether level-`n` signatures plus membership in every substitution
/// instance of the witnesses separate the orbits of `M^m` for `m ≤ max_m`.
pub fn almost_arity_check(
    orbits: &mut OrbitTable,
    witnesses: &[TupleSet],
    n: usize,
    max_m: usize,
) -> Result<WitnessReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("level must be at least 1".into()));
    }
    validate(witnesses, orbits, max_m)?;
    orbits.ensure_upto(max_m.max(1))?;
    let mut checks = Vec::new();
    for m in n + 1..=max_m {
        let scheme = SignatureScheme::new(orbits, n, m)?;
        let subs = Substitutions::new(witnesses, m);
        let labels = labelled_partition(orbits, m, |t| (scheme.signature(t), subs.membership(t)))?;
        checks.push(compare_with_orbits(&labels, orbits.require(m)?)?);
    }
    Ok(finish(Some(n), max_m, checks))
}

/// Whether membership in substitution instances of `delta` (with equality
/// always included) separates the orbits of `M^m` for `1 ≤ m ≤ max_m`.
pub fn delta_based_check(orbits: &mut OrbitTable, delta: &[TupleSet], max_m: usize) -> Result<WitnessReport> {
    validate(delta, orbits, max_m)?;
    orbits.ensure_upto(max_m.max(1))?;
    let mut checks = Vec::new();
    for m in 1..=max_m {
        let subs = Substitutions::new(delta, m);
        let labels = labelled_partition(orbits, m, |t| (equality_pattern(t), subs.membership(t)))?;
        checks.push(compare_with_orbits(&labels, orbits.require(m)?)?);
    }
    Ok(finish(None, max_m, checks))
}
