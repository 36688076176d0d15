//! Brute-force reference implementations.
//!
//! Nothing here goes through the orbit or signature machinery: automorphisms
//! come from filtering all `s!` permutations, orbits from applying every
//! automorphism to every tuple, and definable atoms from literally
//! intersecting the ground set with each seed relation and its complement.
//! Only parsing, [`is_automorphism`] and the [`TupleSet`] container are shared
//! with the engine.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::Serialize;

use crate::automorph::{is_automorphism, Permutation};
use crate::error::{Error, Result};
use crate::orbits::TupleSet;
use crate::structures::FiniteStructure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCaps {
    pub max_size: usize,
    pub max_m: usize,
    pub max_n: usize,
    /// Largest universe for the `s!` permutation filter.
    pub max_perm_size: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_size: 4,
            max_m: 4,
            max_n: 2,
            max_perm_size: 8,
        }
    }
}

impl OracleCaps {
    fn check(&self, size: usize, m: usize, n: usize) -> Result<()> {
        if size > self.max_size {
            return Err(Error::SizeCap {
                size,
                cap: self.max_size,
            });
        }
        if m > self.max_m || n > self.max_n {
            return Err(Error::InvalidParameter(format!(
                "oracle caps exceeded: m = {m} (cap {}), n = {n} (cap {})",
                self.max_m, self.max_n
            )));
        }
        Ok(())
    }
}

fn space(size: usize, m: usize) -> usize {
    (0..m).fold(1, |acc, _| acc * size)
}

fn decode(mut rank: usize, size: usize, m: usize) -> Vec<usize> {
    let mut out = vec![0; m];
    for i in (0..m).rev() {
        out[i] = rank % size;
        rank /= size;
    }
    out
}

fn encode(tuple: impl IntoIterator<Item = usize>, size: usize) -> usize {
    tuple.into_iter().fold(0, |r, a| r * size + a)
}

/// All automorphisms, in lexicographic order of their image lists.
pub fn brute_automorphisms(structure: &FiniteStructure) -> Result<Vec<Permutation>> {
    let s = structure.size();
    if s > OracleCaps::default().max_perm_size {
        return Err(Error::SizeCap {
            size: s,
            cap: OracleCaps::default().max_perm_size,
        });
    }
    let mut out = Vec::new();
    for images in (0..s).permutations(s) {
        let p = Permutation::from_images(images)?;
        if is_automorphism(&p, structure)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Orbits of `M^m` under the full automorphism list, as bitmasks over ranks.
pub fn brute_orbits(size: usize, automorphisms: &[Permutation], m: usize) -> Vec<FixedBitSet> {
    let total = space(size, m);
    let mut seen = FixedBitSet::with_capacity(total);
    let mut orbits = Vec::new();
    for rank in 0..total {
        if seen.contains(rank) {
            continue;
        }
        let t = decode(rank, size, m);
        let mut orbit = FixedBitSet::with_capacity(total);
        for g in automorphisms {
            orbit.insert(encode(t.iter().map(|&a| g.apply(a)), size));
        }
        seen.union_with(&orbit);
        orbits.push(orbit);
    }
    orbits
}

/// Atoms of the Boolean algebra generated by a family of subsets of `M^m`.
#[derive(Clone, Debug)]
pub struct AlgebraClosure {
    size: usize,
    m: usize,
    seeds: Vec<FixedBitSet>,
    atoms: Vec<FixedBitSet>,
}

impl AlgebraClosure {
    /// Deduplicates the seeds, then splits the ground set by each seed and its
    /// complement in turn. The algebra is the set of unions of the atoms.
    pub fn generate(size: usize, m: usize, seeds: impl IntoIterator<Item = FixedBitSet>) -> Self {
        let total = space(size, m);
        let mut unique = HashSet::new();
        let seeds: Vec<FixedBitSet> = seeds.into_iter().filter(|s| unique.insert(s.clone())).collect();
        // atom label per tuple; splitting keeps labels dense
        let mut label = vec![0u32; total];
        let mut count = usize::from(total > 0);
        for seed in &seeds {
            let mut remap: Vec<[u32; 2]> = vec![[u32::MAX; 2]; count];
            let mut next = 0u32;
            for (rank, l) in label.iter_mut().enumerate() {
                let side = usize::from(seed.contains(rank));
                let slot = &mut remap[*l as usize][side];
                if *slot == u32::MAX {
                    *slot = next;
                    next += 1;
                }
                *l = *slot;
            }
            count = next as usize;
        }
        let mut atoms = vec![FixedBitSet::with_capacity(total); count];
        for (rank, &l) in label.iter().enumerate() {
            atoms[l as usize].insert(rank);
        }
        atoms.sort_by_key(|a| a.minimum());
        AlgebraClosure { size, m, seeds, atoms }
    }

    pub fn ground(&self) -> usize {
        space(self.size, self.m)
    }

    pub fn seeds(&self) -> &[FixedBitSet] {
        &self.seeds
    }

    /// Atoms ordered by their least rank.
    pub fn atoms(&self) -> &[FixedBitSet] {
        &self.atoms
    }

    /// Atom index of each rank; atoms numbered by first occurrence.
    pub fn labels(&self) -> Vec<u32> {
        let mut out = vec![0; self.ground()];
        for (i, atom) in self.atoms.iter().enumerate() {
            for r in atom.ones() {
                out[r] = i as u32;
            }
        }
        out
    }

    /// Whether `set` belongs to the algebra, i.e. is a union of atoms.
    pub fn contains(&self, set: &FixedBitSet) -> bool {
        self.atoms.iter().all(|a| a.is_subset(set) || a.is_disjoint(set))
    }
}

/// Canonical labels of a list of disjoint classes covering `0..total`.
pub fn labels_of(classes: &[FixedBitSet], total: usize) -> Vec<u32> {
    let mut sorted: Vec<&FixedBitSet> = classes.iter().collect();
    sorted.sort_by_key(|c| c.minimum());
    let mut out = vec![u32::MAX; total];
    for (i, class) in sorted.into_iter().enumerate() {
        for r in class.ones() {
            out[r] = i as u32;
        }
    }
    out
}

/// `{ā ∈ M^m : (a_ι(1), …, a_ι(k)) ∈ base}` for the index map `ι`.
fn cylinder(base: &FixedBitSet, size: usize, map: &[usize], m: usize) -> FixedBitSet {
    let total = space(size, m);
    let mut out = FixedBitSet::with_capacity(total);
    for rank in 0..total {
        let t = decode(rank, size, m);
        if base.contains(encode(map.iter().map(|&i| t[i]), size)) {
            out.insert(rank);
        }
    }
    out
}

/// Every map `{0..k-1} → {0..m-1}`, lexicographically.
fn index_maps(k: usize, m: usize) -> Vec<Vec<usize>> {
    (0..space(m, k)).map(|r| decode(r, m, k)).collect()
}

fn diagonals(size: usize, m: usize) -> Vec<FixedBitSet> {
    let total = space(size, m);
    (0..m)
        .tuple_combinations()
        .map(|(i, j)| {
            let mut d = FixedBitSet::with_capacity(total);
            for rank in 0..total {
                let t = decode(rank, size, m);
                if t[i] == t[j] {
                    d.insert(rank);
                }
            }
            d
        })
        .collect()
}

fn n_ary_seeds(size: usize, automorphisms: &[Permutation], m: usize, n: usize) -> Vec<FixedBitSet> {
    let mut seeds = Vec::new();
    for k in 1..=n {
        for orbit in brute_orbits(size, automorphisms, k) {
            for map in index_maps(k, m) {
                seeds.push(cylinder(&orbit, size, &map, m));
            }
        }
    }
    if n == 1 {
        seeds.extend(diagonals(size, m));
    }
    seeds
}

/// Atoms of the algebra generated by cylinders over `Aut`-orbits of `M^k`
/// (`k ≤ n`) along every index map, plus equality diagonals when `n = 1`.
pub fn brute_n_ary_atoms(structure: &FiniteStructure, m: usize, n: usize, caps: &OracleCaps) -> Result<AlgebraClosure> {
    caps.check(structure.size(), m, n)?;
    let auts = brute_automorphisms(structure)?;
    Ok(AlgebraClosure::generate(
        structure.size(),
        m,
        n_ary_seeds(structure.size(), &auts, m, n),
    ))
}

/// Atoms generated by all substitution instances of `delta` plus equality.
pub fn brute_delta_atoms(
    structure: &FiniteStructure,
    delta: &[TupleSet],
    m: usize,
    caps: &OracleCaps,
) -> Result<AlgebraClosure> {
    caps.check(structure.size(), m, 0)?;
    let s = structure.size();
    let mut seeds = diagonals(s, m);
    for w in delta {
        let base = to_bits(w, s)?;
        for map in index_maps(w.arity(), m) {
            seeds.push(cylinder(&base, s, &map, m));
        }
    }
    Ok(AlgebraClosure::generate(s, m, seeds))
}

fn to_bits(relation: &TupleSet, size: usize) -> Result<FixedBitSet> {
    if relation.size() != size {
        return Err(Error::LengthMismatch {
            expected: size,
            found: relation.size(),
        });
    }
    let mut bits = FixedBitSet::with_capacity(space(size, relation.arity()));
    for t in relation.tuples() {
        bits.insert(encode(t, size));
    }
    Ok(bits)
}

/// Least `n` such that `relation` is a union of level-`n` atoms.
pub fn brute_relation_arity(structure: &FiniteStructure, relation: &TupleSet, caps: &OracleCaps) -> Result<usize> {
    let (s, m) = (structure.size(), relation.arity());
    caps.check(s, m, 0)?;
    let bits = to_bits(relation, s)?;
    let total = space(s, m);
    if bits.count_ones(..) == 0 || bits.count_ones(..) == total {
        return Ok(0);
    }
    let auts = brute_automorphisms(structure)?;
    for n in 1..=m.min(caps.max_n) {
        let closure = AlgebraClosure::generate(s, m, n_ary_seeds(s, &auts, m, n));
        if closure.contains(&bits) {
            return Ok(n);
        }
    }
    Err(Error::InvalidParameter(format!(
        "relation is not a union of atoms for any level up to {} (non-invariant, or oracle cap too low)",
        m.min(caps.max_n)
    )))
}

/// Least `n ≥ 1` whose atoms equal the orbit partition of `M^m` for every
/// `m ≤ s`; `None` if no `n ≤ caps.max_n` works.
pub fn brute_theory_arity(structure: &FiniteStructure, caps: &OracleCaps) -> Result<Option<usize>> {
    let s = structure.size();
    caps.check(s, s, 0)?;
    let auts = brute_automorphisms(structure)?;
    let orbit_labels: Vec<Vec<u32>> = (0..=s)
        .map(|m| labels_of(&brute_orbits(s, &auts, m), space(s, m)))
        .collect();
    'levels: for n in 1..=caps.max_n {
        for (m, orbits) in orbit_labels.iter().enumerate().skip(n + 1) {
            let closure = AlgebraClosure::generate(s, m, n_ary_seeds(s, &auts, m, n));
            if closure.labels() != *orbits {
                continue 'levels;
            }
        }
        return Ok(Some(n));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;
    use crate::structures::{gen_family, Family};

    fn family(f: Family) -> FiniteStructure {
        gen_family(f, &Limits::default()).unwrap()
    }

    fn as_tuples(closure: &AlgebraClosure) -> Vec<Vec<Vec<usize>>> {
        closure
            .atoms()
            .iter()
            .map(|a| a.ones().map(|r| decode(r, closure.size, closure.m)).collect())
            .collect()
    }

    #[test]
    fn brute_automorphism_lists() {
        assert_eq!(brute_automorphisms(&family(Family::Cyclic(2))).unwrap().len(), 1);
        let z3 = brute_automorphisms(&family(Family::Cyclic(3))).unwrap();
        assert_eq!(
            z3.iter().map(|p| p.images().to_vec()).collect::<Vec<_>>(),
            vec![vec![0, 1, 2], vec![0, 2, 1]]
        );
        assert_eq!(brute_automorphisms(&family(Family::FlatMonoid(2))).unwrap().len(), 2);
        assert!(brute_automorphisms(&FiniteStructure::new("Big", 9).unwrap()).is_err());
    }

    #[test]
    fn z2_unary_atoms_are_singletons() {
        let c = brute_n_ary_atoms(&family(Family::Cyclic(2)), 2, 1, &OracleCaps::default()).unwrap();
        assert_eq!(c.atoms().len(), 4);
    }

    #[test]
    fn z3_unary_atoms_of_pairs() {
        let c = brute_n_ary_atoms(&family(Family::Cyclic(3)), 2, 1, &OracleCaps::default()).unwrap();
        let expected = vec![
            vec![vec![0, 0]],
            vec![vec![0, 1], vec![0, 2]],
            vec![vec![1, 0], vec![2, 0]],
            vec![vec![1, 1], vec![2, 2]],
            vec![vec![1, 2], vec![2, 1]],
        ];
        assert_eq!(as_tuples(&c), expected);
    }

    #[test]
    fn whole_level_atoms_are_orbits() {
        let s = family(Family::FlatMonoid(3));
        let auts = brute_automorphisms(&s).unwrap();
        let c = brute_n_ary_atoms(&s, 2, 2, &OracleCaps::default()).unwrap();
        assert_eq!(c.labels(), labels_of(&brute_orbits(4, &auts, 2), 16));
    }

    #[test]
    fn relation_arities() {
        let caps = OracleCaps::default();
        let z2 = family(Family::Cyclic(2));
        assert_eq!(
            brute_relation_arity(&z2, &TupleSet::empty(2, 2).unwrap(), &caps).unwrap(),
            0
        );
        assert_eq!(
            brute_relation_arity(&z2, &z2.graph_of("mul").unwrap(), &caps).unwrap(),
            1
        );
    }

    #[test]
    fn caps_are_enforced() {
        let z5 = family(Family::Cyclic(5));
        assert!(brute_n_ary_atoms(&z5, 2, 1, &OracleCaps::default()).is_err());
        let z3 = family(Family::Cyclic(3));
        assert!(brute_n_ary_atoms(&z3, 5, 1, &OracleCaps::default()).is_err());
    }

    #[test]
    fn closure_membership() {
        let c = AlgebraClosure::generate(2, 1, [FixedBitSet::with_capacity_and_blocks(2, [0b01])]);
        assert_eq!(c.atoms().len(), 2);
        assert!(c.contains(&FixedBitSet::with_capacity_and_blocks(2, [0b10])));
    }
}
