//! Big-endian ranking of tuples over `{0..s-1}` and rank-indexed tuple sets.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::limits::{checked_space, Limits};

/// Rank of `tuple` in `M^m`: `Σ a_i · s^(m-i)`, first coordinate most significant.
pub fn tuple_rank(tuple: &[usize], size: usize) -> Result<usize> {
    let mut rank = 0usize;
    for &a in tuple {
        if a >= size {
            return Err(Error::IndexOutOfRange { value: a, bound: size });
        }
        rank = rank
            .checked_mul(size)
            .and_then(|r| r.checked_add(a))
            .ok_or_else(|| Error::InvalidParameter("tuple rank overflows".into()))?;
    }
    Ok(rank)
}

/// Inverse of [`tuple_rank`].
pub fn tuple_unrank(rank: usize, m: usize, size: usize) -> Result<Vec<usize>> {
    let total =
        checked_space(size, m).ok_or_else(|| Error::InvalidParameter(format!("tuple space {size}^{m} overflows")))?;
    if rank >= total {
        return Err(Error::IndexOutOfRange {
            value: rank,
            bound: total,
        });
    }
    let mut out = vec![0; m];
    unrank_into(rank, size, &mut out);
    Ok(out)
}

#[inline]
pub(crate) fn rank_unchecked(tuple: &[usize], size: usize) -> usize {
    tuple.iter().fold(0, |r, &a| r * size + a)
}

#[inline]
pub(crate) fn unrank_into(mut rank: usize, size: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = rank % size;
        rank /= size;
    }
}

/// Calls `f(rank, tuple)` for every tuple of `M^m` in ascending rank order.
pub(crate) fn for_each_tuple(size: usize, m: usize, mut f: impl FnMut(usize, &[usize])) {
    let total = checked_space(size, m).expect("tuple space checked by caller");
    let mut digits = vec![0usize; m];
    for rank in 0..total {
        f(rank, &digits);
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < size {
                break;
            }
            *d = 0;
        }
    }
}

/// A set of `m`-tuples over a universe of size `s`, stored as a bitmap over ranks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TupleSet {
    size: usize,
    arity: usize,
    bits: FixedBitSet,
}

impl TupleSet {
    pub fn empty(size: usize, arity: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidParameter("universe must be non-empty".into()));
        }
        let total = Limits::default().tuple_space(size, arity)?;
        Ok(TupleSet {
            size,
            arity,
            bits: FixedBitSet::with_capacity(total),
        })
    }

    pub fn full(size: usize, arity: usize) -> Result<Self> {
        let mut set = Self::empty(size, arity)?;
        set.bits.insert_range(..);
        Ok(set)
    }

    pub fn from_tuples<'a, I>(size: usize, arity: usize, tuples: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a [usize]>,
    {
        let mut set = Self::empty(size, arity)?;
        for t in tuples {
            set.insert(t)?;
        }
        Ok(set)
    }

    /// The set of tuples satisfying `pred`.
    pub fn from_predicate(size: usize, arity: usize, mut pred: impl FnMut(&[usize]) -> bool) -> Result<Self> {
        let mut set = Self::empty(size, arity)?;
        for_each_tuple(size, arity, |rank, t| {
            if pred(t) {
                set.bits.insert(rank);
            }
        });
        Ok(set)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of tuples in the ambient space `M^m`.
    pub fn space(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn insert(&mut self, tuple: &[usize]) -> Result<bool> {
        if tuple.len() != self.arity {
            return Err(Error::LengthMismatch {
                expected: self.arity,
                found: tuple.len(),
            });
        }
        let rank = tuple_rank(tuple, self.size)?;
        Ok(!self.bits.put(rank))
    }

    pub fn insert_rank(&mut self, rank: usize) {
        self.bits.insert(rank);
    }

    /// Membership; tuples of the wrong length or out of range are never members.
    pub fn contains(&self, tuple: &[usize]) -> bool {
        tuple.len() == self.arity
            && tuple.iter().all(|&a| a < self.size)
            && self.bits.contains(rank_unchecked(tuple, self.size))
    }

    pub fn contains_rank(&self, rank: usize) -> bool {
        self.bits.contains(rank)
    }

    pub fn ranks(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    /// Member tuples in ascending rank order.
    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.bits.ones().map(move |r| {
            let mut t = vec![0; self.arity];
            unrank_into(r, self.size, &mut t);
            t
        })
    }

    pub fn complement(&self) -> TupleSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        TupleSet { bits, ..*self }
    }

    pub fn union_with(&mut self, other: &TupleSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn is_disjoint(&self, other: &TupleSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }
}

impl fmt::Debug for TupleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TupleSet")
            .field("size", &self.size)
            .field("arity", &self.arity)
            .field("tuples", &self.tuples().collect::<Vec<_>>())
            .finish()
    }
}

impl serde::Serialize for TupleSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.tuples())
    }
}
