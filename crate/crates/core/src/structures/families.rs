//! Parametric families of small algebras.

use serde::Serialize;

use super::FiniteStructure;
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `Z_n` under addition.
    Cyclic(usize),
    /// `Z_a × Z_b`, the pair `(x, y)` encoded as `x·b + y`.
    DirectProduct(usize, usize),
    /// Identity `0` plus `k` non-units whose pairwise products are all `0`.
    FlatMonoid(usize),
    /// Identity `0` plus non-units `1..=k`; the product of non-units `i, j`
    /// is `c_{((i + j) mod r) + 1}` where `c_1..c_r` are the elements `1..=r`.
    FiniteRangeMonoid { k: usize, r: usize },
}

impl Family {
    pub fn size(&self) -> Option<usize> {
        match *self {
            Family::Cyclic(n) => Some(n),
            Family::DirectProduct(a, b) => a.checked_mul(b),
            Family::FlatMonoid(k) | Family::FiniteRangeMonoid { k, .. } => k.checked_add(1),
        }
    }

    pub fn structure_name(&self) -> String {
        match *self {
            Family::Cyclic(n) => format!("Z_{n}"),
            Family::DirectProduct(a, b) => format!("Z_{a}xZ_{b}"),
            Family::FlatMonoid(k) => format!("flat_monoid_{k}"),
            Family::FiniteRangeMonoid { k, r } => format!("finite_range_monoid_{k}_{r}"),
        }
    }
}

/// Builds a family member with its operation named `mul`.
pub fn gen_family(family: Family, limits: &Limits) -> Result<FiniteStructure> {
    let positive = match family {
        Family::Cyclic(n) => n >= 1,
        Family::DirectProduct(a, b) => a >= 1 && b >= 1,
        Family::FlatMonoid(k) => k >= 1,
        Family::FiniteRangeMonoid { k, r } => k >= 1 && r >= 1 && r <= k,
    };
    if !positive {
        return Err(Error::InvalidParameter(format!(
            "{family:?}: parameters must be at least 1 (and r <= k)"
        )));
    }
    let s = family
        .size()
        .ok_or_else(|| Error::InvalidParameter(format!("{family:?}: size overflows")))?;
    limits.check_size(s)?;

    let mut table = vec![0; s * s];
    for a in 0..s {
        for b in 0..s {
            table[a * s + b] = match family {
                Family::Cyclic(n) => (a + b) % n,
                Family::DirectProduct(_, m) => {
                    let n = s / m;
                    ((a / m + b / m) % n) * m + (a % m + b % m) % m
                }
                Family::FlatMonoid(_) => match (a, b) {
                    (0, x) | (x, 0) => x,
                    _ => 0,
                },
                Family::FiniteRangeMonoid { r, .. } => match (a, b) {
                    (0, x) | (x, 0) => x,
                    (i, j) => (i + j) % r + 1,
                },
            };
        }
    }
    FiniteStructure::new(family.structure_name(), s)?.with_function("mul", 2, table)
}
