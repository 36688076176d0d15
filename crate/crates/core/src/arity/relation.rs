use serde::Serialize;

use super::signature::level_partition;
use crate::error::{Error, Result};
use crate::orbits::{tuple_unrank, OrbitTable, TupleSet};

/// Equal-signature tuples on both sides of a relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipCounterexample {
    pub member: Vec<usize>,
    pub non_member: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationVerdict {
    pub level: usize,
    pub holds: bool,
    pub counterexample: Option<MembershipCounterexample>,
}

fn checked_relation(relation: &TupleSet, orbits: &mut OrbitTable) -> Result<()> {
    if relation.size() != orbits.size() {
        return Err(Error::LengthMismatch {
            expected: orbits.size(),
            found: relation.size(),
        });
    }
    let m = relation.arity();
    if m == 0 {
        return Ok(());
    }
    orbits.ensure(m)?.check_invariant(relation)
}

/// Whether `relation` is a union of level-`n` signature classes of `M^m`.
/// Level 0 holds exactly for `∅` and `M^m`.
pub fn is_n_ary_relation(relation: &TupleSet, n: usize, orbits: &mut OrbitTable) -> Result<RelationVerdict> {
    checked_relation(relation, orbits)?;
    let m = relation.arity();
    let s = orbits.size();
    if n == 0 || m == 0 {
        let holds = relation.is_empty() || relation.is_full();
        let counterexample = if holds {
            None
        } else {
            let member = relation.ranks().next().expect("non-empty");
            let non_member = relation.complement().ranks().next().expect("not full");
            Some(MembershipCounterexample {
                member: tuple_unrank(member, m, s)?,
                non_member: tuple_unrank(non_member, m, s)?,
            })
        };
        return Ok(RelationVerdict {
            level: n,
            holds,
            counterexample,
        });
    }
    for k in 1..=n.min(m) {
        orbits.ensure(k)?;
    }
    let partition = level_partition(orbits, n, m)?;
    let mut first_in = vec![None; partition.class_count];
    let mut first_out = vec![None; partition.class_count];
    for (rank, &c) in partition.class_of.iter().enumerate() {
        let slot = if relation.contains_rank(rank) {
            &mut first_in
        } else {
            &mut first_out
        };
        slot[c as usize].get_or_insert(rank);
    }
    let split = (0..partition.class_count)
        .filter_map(|c| Some((first_in[c]?, first_out[c]?)))
        .min_by_key(|&(a, b)| a.min(b));
    let counterexample = match split {
        None => None,
        Some((member, non_member)) => Some(MembershipCounterexample {
            member: tuple_unrank(member, m, s)?,
            non_member: tuple_unrank(non_member, m, s)?,
        }),
    };
    Ok(RelationVerdict {
        level: n,
        holds: counterexample.is_none(),
        counterexample,
    })
}

/// Least `n` with `relation` `n`-ary; `0` exactly for `∅` and `M^m`.
pub fn relation_arity(relation: &TupleSet, orbits: &mut OrbitTable) -> Result<usize> {
    checked_relation(relation, orbits)?;
    if relation.is_empty() || relation.is_full() {
        return Ok(0);
    }
    let m = relation.arity();
    for n in 1..m {
        if is_n_ary_relation(relation, n, orbits)?.holds {
            return Ok(n);
        }
    }
    Ok(m)
}
