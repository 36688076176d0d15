//! Shared fixtures for the integration and acceptance suites.
#![allow(dead_code)]

use aritylab::automorph::Permutation;
use aritylab::orbits::{OrbitTable, TupleSet};
use aritylab::structures::{gen_family, Family, FiniteStructure};
use aritylab::{corpus, Limits};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Values computed by the brute-force oracle and frozen here; the engine
/// must reproduce them exactly. `oracle_pins.rs` recomputes them.
pub mod pinned {
    /// Relation arity of the graph `{(x, y, x·y)}`.
    pub const GRAPH_ARITY_Z3: usize = 1;
    pub const GRAPH_ARITY_Z4: usize = 1;
    pub const GRAPH_ARITY_Z5: usize = 2;
    /// Theory arity with `max_m = max_n = s`.
    pub const THEORY_ARITY_Z3: usize = 1;
    pub const THEORY_ARITY_Z4: usize = 1;
    pub const THEORY_ARITY_S3: usize = 3;
    /// Z_3 is based on `{graph of +}` up to `m = 3`.
    pub const Z3_DELTA_BASED_M3: bool = true;
}

pub fn limits() -> Limits {
    Limits::default()
}

pub fn family(f: Family) -> FiniteStructure {
    gen_family(f, &limits()).expect("family parameters are valid")
}

pub fn bundled(name: &str) -> FiniteStructure {
    corpus::get(&format!("{name}.struct"))
        .unwrap_or_else(|| panic!("missing corpus file {name}"))
        .expect("corpus file parses")
}

pub fn corpus_upto(max_size: usize) -> Vec<FiniteStructure> {
    corpus::load()
        .expect("corpus parses")
        .into_iter()
        .filter(|s| s.size() <= max_size)
        .collect()
}

pub fn table(structure: &FiniteStructure) -> OrbitTable {
    OrbitTable::for_structure(structure, limits()).expect("orbit table")
}

/// A random structure of the given size mixing a few symbol shapes. Some
/// shapes are symmetric by construction so that automorphism groups are
/// not always trivial.
pub fn random_structure(rng: &mut StdRng, size: usize) -> FiniteStructure {
    let mut s = FiniteStructure::new(format!("random_{size}"), size).unwrap();
    match rng.gen_range(0..6) {
        0 => {
            let table = (0..size).map(|_| rng.gen_range(0..size)).collect();
            s.add_function("f", 1, table).unwrap();
        }
        1 => {
            let table = (0..size * size).map(|_| rng.gen_range(0..size)).collect();
            s.add_function("mul", 2, table).unwrap();
        }
        2 => {
            let mut edges = TupleSet::empty(size, 2).unwrap();
            for a in 0..size {
                for b in a + 1..size {
                    if rng.gen_bool(0.5) {
                        edges.insert(&[a, b]).unwrap();
                        edges.insert(&[b, a]).unwrap();
                    }
                }
            }
            s.add_relation("E", edges).unwrap();
        }
        3 => {
            let colour = TupleSet::from_predicate(size, 1, |t| t[0] % 2 == 0 && rng.gen_bool(0.7)).unwrap();
            s.add_relation("P", colour).unwrap();
        }
        4 => {
            // x·y = e for non-units with a random identity: flat magma shape.
            let e = rng.gen_range(0..size);
            let table = (0..size * size)
                .map(|r| {
                    let (x, y) = (r / size, r % size);
                    if x == e {
                        y
                    } else if y == e {
                        x
                    } else {
                        e
                    }
                })
                .collect();
            s.add_function("mul", 2, table).unwrap();
        }
        _ => {
            let c = rng.gen_range(0..size);
            s.add_constant("c", c).unwrap();
            let table = (0..size).map(|x| (x + 1) % size).collect();
            if rng.gen_bool(0.5) {
                s.add_function("succ", 1, table).unwrap();
            }
        }
    }
    s
}

pub fn random_permutation(rng: &mut StdRng, size: usize) -> Permutation {
    let mut images: Vec<usize> = (0..size).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// A union of a random subset of the `Aut`-orbits of `M^m`.
pub fn random_invariant_relation(rng: &mut StdRng, table: &mut OrbitTable, m: usize) -> TupleSet {
    let orbits = table.ensure(m).expect("orbit partition");
    let chosen: Vec<u32> = (0..orbits.class_count() as u32).filter(|_| rng.gen_bool(0.5)).collect();
    orbits.union_of(&chosen).expect("union of orbits")
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Canonical relabelling of a labelling by first occurrence.
pub fn canonical<T: Clone + Ord>(labels: &[T]) -> Vec<u32> {
    let mut seen = std::collections::BTreeMap::new();
    labels
        .iter()
        .map(|l| {
            let next = seen.len() as u32;
            *seen.entry(l.clone()).or_insert(next)
        })
        .collect()
}

/// Whether `fine` refines `coarse` (both labellings of the same space).
pub fn refines(fine: &[u32], coarse: &[u32]) -> bool {
    let mut map = std::collections::HashMap::new();
    fine.iter().zip(coarse).all(|(f, c)| *map.entry(*f).or_insert(*c) == *c)
}
