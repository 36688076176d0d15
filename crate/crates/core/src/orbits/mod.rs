//! Orbit partitions of `M^m` under the coordinatewise action of `Aut(M)`.
//!
//! On a finite structure the ∅-definable `m`-ary relations are exactly the
//! unions of these orbits.

mod tuples;
mod union_find;

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::hash::Hash;

use serde::Serialize;

use crate::automorph::AutGroup;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::structures::FiniteStructure;

pub(crate) use tuples::{for_each_tuple, rank_unchecked, unrank_into};
pub use tuples::{tuple_rank, tuple_unrank, TupleSet};
use union_find::UnionFind;

/// Renumbers labels canonically: class ids in order of first occurrence by rank.
pub(crate) fn canonical_classes<K: Hash + Eq>(total: usize, mut key: impl FnMut(usize) -> K) -> (Vec<u32>, usize) {
    let mut ids: HashMap<K, u32> = HashMap::new();
    let mut class_of = Vec::with_capacity(total);
    for rank in 0..total {
        let next = ids.len() as u32;
        class_of.push(*ids.entry(key(rank)).or_insert(next));
    }
    (class_of, ids.len())
}

/// Partition of `M^m` into `Aut`-orbits, ids assigned by first occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    size: usize,
    m: usize,
    class_of: Vec<u32>,
    class_count: usize,
}

impl OrbitPartition {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn class_of(&self) -> &[u32] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    #[inline]
    pub fn class_of_rank(&self, rank: usize) -> u32 {
        self.class_of[rank]
    }

    /// Orbit id of `tuple`.
    pub fn orbit_of(&self, tuple: &[usize]) -> Result<u32> {
        if tuple.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                found: tuple.len(),
            });
        }
        Ok(self.class_of[tuple_rank(tuple, self.size)?])
    }

    /// Member ranks of every orbit, ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (rank, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(rank);
        }
        out
    }

    /// The union of the listed orbits.
    pub fn union_of(&self, classes: &[u32]) -> Result<TupleSet> {
        let mut wanted = vec![false; self.class_count];
        for &c in classes {
            *wanted.get_mut(c as usize).ok_or(Error::IndexOutOfRange {
                value: c as usize,
                bound: self.class_count,
            })? = true;
        }
        let mut set = TupleSet::empty(self.size, self.m)?;
        for (rank, &c) in self.class_of.iter().enumerate() {
            if wanted[c as usize] {
                set.insert_rank(rank);
            }
        }
        Ok(set)
    }

    /// Errors with a split orbit unless `set` is a union of orbits.
    pub fn check_invariant(&self, set: &TupleSet) -> Result<()> {
        if set.arity() != self.m || set.size() != self.size {
            return Err(Error::LengthMismatch {
                expected: self.m,
                found: set.arity(),
            });
        }
        // per orbit: first member and first non-member
        let mut first_in = vec![None; self.class_count];
        let mut first_out = vec![None; self.class_count];
        for (rank, &c) in self.class_of.iter().enumerate() {
            let slot = if set.contains_rank(rank) {
                &mut first_in
            } else {
                &mut first_out
            };
            slot[c as usize].get_or_insert(rank);
        }
        let split = (0..self.class_count)
            .filter_map(|c| Some((first_in[c]?, first_out[c]?)))
            .min_by_key(|&(a, b)| a.min(b));
        match split {
            None => Ok(()),
            Some((inside, outside)) => Err(Error::NotInvariant {
                inside: tuple_unrank(inside, self.m, self.size)?,
                outside: tuple_unrank(outside, self.m, self.size)?,
            }),
        }
    }

    /// Each orbit of pairs lies entirely on or entirely off the diagonal.
    pub(crate) fn diagonal_is_union_of_classes(&self) -> bool {
        if self.m != 2 {
            return true;
        }
        let mut on_diagonal: Vec<Option<bool>> = vec![None; self.class_count];
        self.class_of.iter().enumerate().all(|(rank, &c)| {
            let diag = rank / self.size == rank % self.size;
            *on_diagonal[c as usize].get_or_insert(diag) == diag
        })
    }
}

/// Union-find over ranks merged along every generator; canonical renumbering.
pub fn orbit_partition(
    structure: &FiniteStructure,
    aut: &AutGroup,
    m: usize,
    limits: &Limits,
) -> Result<OrbitPartition> {
    let s = structure.size();
    if aut.size() != s {
        return Err(Error::LengthMismatch {
            expected: s,
            found: aut.size(),
        });
    }
    let total = limits.tuple_space(s, m)?;
    let mut uf = UnionFind::new(total);
    for g in aut.generators() {
        for_each_tuple(s, m, |rank, t| {
            let image = t.iter().fold(0, |r, &a| r * s + g.apply(a));
            uf.union(rank, image);
        });
    }
    let (class_of, class_count) = canonical_classes(total, |rank| uf.find(rank));
    Ok(OrbitPartition {
        size: s,
        m,
        class_of,
        class_count,
    })
}

/// Orbit partitions of one structure for several tuple lengths.
#[derive(Clone, Debug)]
pub struct OrbitTable {
    structure: FiniteStructure,
    aut: AutGroup,
    limits: Limits,
    partitions: BTreeMap<usize, OrbitPartition>,
}

impl OrbitTable {
    pub fn new(structure: &FiniteStructure, aut: AutGroup, limits: Limits) -> Result<Self> {
        if aut.size() != structure.size() {
            return Err(Error::LengthMismatch {
                expected: structure.size(),
                found: aut.size(),
            });
        }
        Ok(OrbitTable {
            structure: structure.clone(),
            aut,
            limits,
            partitions: BTreeMap::new(),
        })
    }

    /// Computes `Aut(structure)` and wraps it in an empty table.
    pub fn for_structure(structure: &FiniteStructure, limits: Limits) -> Result<Self> {
        let aut = crate::automorph::automorphisms(structure, &limits)?;
        Self::new(structure, aut, limits)
    }

    pub fn structure(&self) -> &FiniteStructure {
        &self.structure
    }

    pub fn size(&self) -> usize {
        self.structure.size()
    }

    pub fn aut(&self) -> &AutGroup {
        &self.aut
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn ensure(&mut self, m: usize) -> Result<&OrbitPartition> {
        if !self.partitions.contains_key(&m) {
            let p = orbit_partition(&self.structure, &self.aut, m, &self.limits)?;
            self.partitions.insert(m, p);
        }
        Ok(&self.partitions[&m])
    }

    /// Ensures partitions for every length in `1..=m`.
    pub fn ensure_upto(&mut self, m: usize) -> Result<()> {
        // fail on the budget before doing any work
        self.limits.tuple_space(self.size(), m)?;
        for k in 1..=m {
            self.ensure(k)?;
        }
        Ok(())
    }

    pub fn get(&self, m: usize) -> Option<&OrbitPartition> {
        self.partitions.get(&m)
    }

    pub fn require(&self, m: usize) -> Result<&OrbitPartition> {
        self.get(m).ok_or(Error::MissingPartition(m))
    }
}
