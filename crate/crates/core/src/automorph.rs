//! Automorphism groups of finite structures.
//!
//! The group is built as a stabilizer chain along the base `0, 1, …, s-1`.
//! Levels are processed from the last base point to the first; at level `i`
//! every generator found so far fixes `0..i`, and each point `j` not yet in
//! the orbit of `i` triggers a backtracking search for an automorphism fixing
//! `0..i-1` and sending `i` to `j`. The search assigns images point by point
//! in ascending order and propagates forced images through completed function
//! cells, so the first hit is the lexicographically least such automorphism.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::structures::FiniteStructure;

/// A bijection on `{0..s-1}`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidParameter(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` followed by `other`: `x ↦ other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// True iff `p` preserves every function, relation and constant of `structure`.
pub fn is_automorphism(p: &Permutation, structure: &FiniteStructure) -> Result<bool> {
    let s = structure.size();
    if p.len() != s {
        return Err(Error::LengthMismatch {
            expected: s,
            found: p.len(),
        });
    }
    if structure.constants().iter().any(|c| p.apply(c.value) != c.value) {
        return Ok(false);
    }
    for f in structure.functions() {
        let mut image = vec![0; f.arity];
        let mut ok = true;
        crate::orbits::for_each_tuple(s, f.arity, |rank, args| {
            if !ok {
                return;
            }
            for (slot, &a) in image.iter_mut().zip(args) {
                *slot = p.apply(a);
            }
            ok = p.apply(f.table[rank]) == f.apply(&image, s);
        });
        if !ok {
            return Ok(false);
        }
    }
    for r in structure.relations() {
        // an injective map of a finite set into itself is onto, so the forward
        // direction is enough
        for t in r.tuples.tuples() {
            let image: Vec<usize> = t.iter().map(|&a| p.apply(a)).collect();
            if !r.tuples.contains(&image) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Automorphism group as generators plus stabilizer chain data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutGroup {
    size: usize,
    generators: Vec<Permutation>,
    base: Vec<usize>,
    chain_orders: Vec<usize>,
    order: u64,
}

impl AutGroup {
    /// The trivial group on `size` points.
    pub fn trivial(size: usize) -> Self {
        AutGroup {
            size,
            generators: Vec::new(),
            base: (0..size).collect(),
            chain_orders: vec![1; size],
            order: 1,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Basic orbit sizes `|G_i · base[i]|` along the chain.
    pub fn chain_orders(&self) -> &[usize] {
        &self.chain_orders
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

struct Search<'a> {
    structure: &'a FiniteStructure,
    image: Vec<Option<usize>>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(structure: &'a FiniteStructure) -> Self {
        let s = structure.size();
        Search {
            structure,
            image: vec![None; s],
            used: vec![false; s],
            trail: Vec::with_capacity(s),
        }
    }

    /// Assigns `x ↦ y`; false if that clashes with the partial map.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        match self.image[x] {
            Some(v) => v == y,
            None if self.used[y] => false,
            None => {
                self.image[x] = Some(y);
                self.used[y] = true;
                self.trail.push(x);
                true
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail non-empty");
            let y = self.image[x].take().expect("assigned");
            self.used[y] = false;
        }
    }

    /// Forces images through completed function cells and checks completed
    /// relation tuples, to a fixpoint.
    fn propagate(&mut self) -> bool {
        let s = self.structure.size();
        loop {
            let before = self.trail.len();
            for f in self.structure.functions() {
                let mut args = vec![0; f.arity];
                let mut mapped = vec![0; f.arity];
                let cells = f.table.len();
                for rank in 0..cells {
                    crate::orbits::unrank_into(rank, s, &mut args);
                    let complete = args
                        .iter()
                        .zip(mapped.iter_mut())
                        .all(|(&a, slot)| match self.image[a] {
                            Some(v) => {
                                *slot = v;
                                true
                            }
                            None => false,
                        });
                    if complete && !self.assign(f.table[rank], f.apply(&mapped, s)) {
                        return false;
                    }
                }
            }
            for r in self.structure.relations() {
                let mut mapped = vec![0; r.arity()];
                for t in r.tuples.tuples() {
                    let complete = t.iter().zip(mapped.iter_mut()).all(|(&a, slot)| match self.image[a] {
                        Some(v) => {
                            *slot = v;
                            true
                        }
                        None => false,
                    });
                    if complete && !r.tuples.contains(&mapped) {
                        return false;
                    }
                }
            }
            if self.trail.len() == before {
                return true;
            }
        }
    }

    fn extend(&mut self) -> Option<Permutation> {
        let Some(point) = self.image.iter().position(Option::is_none) else {
            let images = self.image.iter().map(|v| v.expect("complete")).collect();
            return Some(Permutation { images });
        };
        for candidate in 0..self.structure.size() {
            if self.used[candidate] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(point, candidate) && self.propagate() {
                if let Some(found) = self.extend() {
                    return Some(found);
                }
            }
            self.undo_to(mark);
        }
        None
    }

    /// Least automorphism fixing `0..level` pointwise and sending `level` to `target`.
    fn find(structure: &'a FiniteStructure, level: usize, target: usize) -> Option<Permutation> {
        let mut search = Search::new(structure);
        for c in structure.constants() {
            if !search.assign(c.value, c.value) {
                return None;
            }
        }
        for x in 0..level {
            if !search.assign(x, x) {
                return None;
            }
        }
        if !search.assign(level, target) || !search.propagate() {
            return None;
        }
        search.extend()
    }
}

fn orbit_of(point: usize, generators: &[Permutation], size: usize) -> Vec<bool> {
    let mut seen = vec![false; size];
    let mut stack = vec![point];
    seen[point] = true;
    while let Some(x) = stack.pop() {
        for g in generators {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Computes `Aut(structure)`; deterministic for a fixed input.
pub fn automorphisms(structure: &FiniteStructure, limits: &Limits) -> Result<AutGroup> {
    let s = structure.size();
    limits.check_size(s)?;
    let mut generators: Vec<Permutation> = Vec::new();
    let mut chain_orders = vec![1; s];
    for level in (0..s).rev() {
        let mut orbit = orbit_of(level, &generators, s);
        for target in level + 1..s {
            if orbit[target] {
                continue;
            }
            if let Some(g) = Search::find(structure, level, target) {
                debug_assert!(is_automorphism(&g, structure).unwrap_or(false));
                generators.push(g);
                orbit = orbit_of(level, &generators, s);
            }
        }
        chain_orders[level] = orbit.iter().filter(|&&b| b).count();
    }
    let order = chain_orders
        .iter()
        .try_fold(1u64, |acc, &k| acc.checked_mul(k as u64))
        .ok_or_else(|| Error::InvariantViolation("group order overflows u64".into()))?;
    Ok(AutGroup {
        size: s,
        generators,
        base: (0..s).collect(),
        chain_orders,
        order,
    })
}
