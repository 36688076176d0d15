//! Arity of relations and theories of finite structures.
//!
//! A relation is `n`-ary when it is a union of level-`n` signature classes;
//! a theory is `n`-ary when the level-`n` signature partition of every `M^m`
//! coincides with the orbit partition. Definability is taken to be
//! invariance under `Aut(M)`, so non-invariant inputs are rejected.

mod hypotheses;
mod relation;
mod signature;
mod theory;
mod witness;

use serde::Serialize;

pub use hypotheses::{
    check_arit_hypotheses, HypothesisReport, ProjectionCondition, SolutionCondition, SubstitutionWitness,
    CONCLUSION_NOTE,
};
pub use relation::{is_n_ary_relation, relation_arity, MembershipCounterexample, RelationVerdict};
pub use signature::{equality_pattern, level_partition, signature_of, LevelPartition, SubtypeSignature};
pub use theory::{theory_arity, theory_arity_in, ArityReport, LevelCheck, TheoryArity, Timings};
pub use witness::{almost_arity_check, delta_based_check, WitnessReport};

use crate::error::{Error, Result};
use crate::orbits::{tuple_unrank, OrbitPartition};

/// Two tuples with equal labels lying in different orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

/// Outcome of comparing a labelling of `M^m` with its orbit partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionCheck {
    pub m: usize,
    pub passed: bool,
    pub signature_classes: usize,
    pub orbit_classes: usize,
    pub counterexample: Option<Counterexample>,
}

/// Compares a labelling with the orbit partition. Labels must be constant on
/// orbits (an invariant violation otherwise); the check passes when they also
/// separate orbits. On failure the lexicographically least pair of ranks is
/// reported.
pub(crate) fn compare_with_orbits(labels: &LevelPartition, orbits: &OrbitPartition) -> Result<PartitionCheck> {
    if labels.class_of.len() != orbits.class_of().len() {
        return Err(Error::InvariantViolation(
            "labelling and orbit partition cover different spaces".into(),
        ));
    }
    let mut label_of_orbit: Vec<Option<u32>> = vec![None; orbits.class_count()];
    for (rank, (&label, &orbit)) in labels.class_of.iter().zip(orbits.class_of()).enumerate() {
        let slot = label_of_orbit[orbit as usize].get_or_insert(label);
        if *slot != label {
            return Err(Error::InvariantViolation(format!(
                "signature partition is finer than the orbit partition at rank {rank} (m = {})",
                labels.m
            )));
        }
    }
    let mut check = PartitionCheck {
        m: labels.m,
        passed: labels.class_count == orbits.class_count(),
        signature_classes: labels.class_count,
        orbit_classes: orbits.class_count(),
        counterexample: None,
    };
    if !check.passed {
        let mut first_rank: Vec<Option<usize>> = vec![None; labels.class_count];
        let mut first_diff: Vec<Option<usize>> = vec![None; labels.class_count];
        for (rank, &label) in labels.class_of.iter().enumerate() {
            let c = label as usize;
            match first_rank[c] {
                None => first_rank[c] = Some(rank),
                Some(a) => {
                    if first_diff[c].is_none() && orbits.class_of_rank(a) != orbits.class_of_rank(rank) {
                        first_diff[c] = Some(rank);
                    }
                }
            }
        }
        let (a, b) = (0..labels.class_count)
            .filter_map(|c| Some((first_rank[c]?, first_diff[c]?)))
            .min()
            .ok_or_else(|| Error::InvariantViolation("class counts differ but no mixed class".into()))?;
        let (s, m) = (orbits.size(), orbits.m());
        check.counterexample = Some(Counterexample {
            first: tuple_unrank(a, m, s)?,
            second: tuple_unrank(b, m, s)?,
        });
    }
    Ok(check)
}
