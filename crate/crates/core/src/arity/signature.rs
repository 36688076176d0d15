//! Subtype signatures: the atoms of the algebra generated by `n`-variable
//! definable relations inside `M^m`.
//!
//! For `n ≥ 2` a tuple is labelled by the `n`-orbits of its projections onto
//! every strictly increasing index tuple `i_1 < … < i_n`. For `n = 1` the
//! label is the unary orbit of each coordinate together with the equality
//! pattern of the coordinates. For `n ≥ m` the label is the orbit itself.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbits::{canonical_classes, unrank_into, OrbitPartition, OrbitTable};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SubtypeSignature {
    pub level: usize,
    /// Orbit ids of the projections (or of the whole tuple when `level ≥ m`).
    pub classes: Vec<u32>,
    /// Equality pattern as a restricted-growth string; present only at level 1 with `m > 1`.
    pub equality: Option<Vec<u8>>,
}

/// Restricted-growth string of the equality pattern: position `i` gets the
/// index of the first distinct value equal to `tuple[i]`.
pub fn equality_pattern(tuple: &[usize]) -> Vec<u8> {
    let mut seen: Vec<usize> = Vec::with_capacity(tuple.len());
    tuple
        .iter()
        .map(|a| match seen.iter().position(|b| b == a) {
            Some(i) => i as u8,
            None => {
                seen.push(*a);
                (seen.len() - 1) as u8
            }
        })
        .collect()
}

/// Precomputed projection pattern for one `(n, m)` pair.
pub(crate) struct SignatureScheme<'a> {
    level: usize,
    size: usize,
    kind: SchemeKind<'a>,
}

enum SchemeKind<'a> {
    Whole(&'a OrbitPartition),
    Unary(&'a OrbitPartition),
    Projections {
        partition: &'a OrbitPartition,
        index_tuples: Vec<Vec<usize>>,
    },
}

impl<'a> SignatureScheme<'a> {
    pub(crate) fn new(orbits: &'a OrbitTable, n: usize, m: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("signature level must be at least 1".into()));
        }
        let kind = if n >= m {
            SchemeKind::Whole(orbits.require(m)?)
        } else if n == 1 {
            SchemeKind::Unary(orbits.require(1)?)
        } else {
            SchemeKind::Projections {
                partition: orbits.require(n)?,
                index_tuples: (0..m).combinations(n).collect(),
            }
        };
        Ok(SignatureScheme {
            level: n,
            size: orbits.size(),
            kind,
        })
    }

    pub(crate) fn signature(&self, tuple: &[usize]) -> SubtypeSignature {
        let s = self.size;
        let (classes, equality) = match &self.kind {
            SchemeKind::Whole(p) => (vec![p.class_of_rank(crate::orbits::rank_unchecked(tuple, s))], None),
            SchemeKind::Unary(p) => (
                tuple.iter().map(|&a| p.class_of_rank(a)).collect(),
                Some(equality_pattern(tuple)),
            ),
            SchemeKind::Projections {
                partition,
                index_tuples,
            } => (
                index_tuples
                    .iter()
                    .map(|idx| partition.class_of_rank(idx.iter().fold(0, |r, &i| r * s + tuple[i])))
                    .collect(),
                None,
            ),
        };
        SubtypeSignature {
            level: self.level,
            classes,
            equality,
        }
    }
}

/// Signature of `tuple` at level `n`; the needed partitions must already be in `orbits`.
pub fn signature_of(tuple: &[usize], n: usize, orbits: &OrbitTable) -> Result<SubtypeSignature> {
    if let Some(&bad) = tuple.iter().find(|&&a| a >= orbits.size()) {
        return Err(Error::IndexOutOfRange {
            value: bad,
            bound: orbits.size(),
        });
    }
    Ok(SignatureScheme::new(orbits, n, tuple.len())?.signature(tuple))
}

/// Partition of `M^m` into level-`n` signature classes, canonically numbered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelPartition {
    pub m: usize,
    pub class_of: Vec<u32>,
    pub class_count: usize,
}

pub(crate) fn labelled_partition<K: std::hash::Hash + Eq>(
    orbits: &OrbitTable,
    m: usize,
    mut label: impl FnMut(&[usize]) -> K,
) -> Result<LevelPartition> {
    let s = orbits.size();
    let total = orbits.limits().tuple_space(s, m)?;
    let mut buf = vec![0; m];
    let (class_of, class_count) = canonical_classes(total, |rank| {
        unrank_into(rank, s, &mut buf);
        label(&buf)
    });
    Ok(LevelPartition {
        m,
        class_of,
        class_count,
    })
}

/// Level-`n` signature partition of `M^m`.
pub fn level_partition(orbits: &OrbitTable, n: usize, m: usize) -> Result<LevelPartition> {
    let scheme = SignatureScheme::new(orbits, n, m)?;
    labelled_partition(orbits, m, |t| scheme.signature(t))
}
