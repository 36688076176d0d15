//! Recomputes the pinned constants with the brute-force oracle alone.

mod common;

use aritylab::oracle::{
    brute_automorphisms, brute_delta_atoms, brute_orbits, brute_relation_arity, brute_theory_arity, labels_of,
    OracleCaps,
};
use common::{bundled, pinned};

fn caps() -> OracleCaps {
    OracleCaps {
        max_size: 6,
        max_m: 6,
        max_n: 3,
        ..OracleCaps::default()
    }
}

fn graph_arity(name: &str) -> usize {
    let s = bundled(name);
    let graph = s.graph_of("mul").unwrap();
    brute_relation_arity(&s, &graph, &caps()).unwrap()
}

#[test]
fn oracle_graph_arities() {
    assert_eq!(graph_arity("z3"), pinned::GRAPH_ARITY_Z3);
    assert_eq!(graph_arity("z4"), pinned::GRAPH_ARITY_Z4);
    assert_eq!(graph_arity("z5"), pinned::GRAPH_ARITY_Z5);
}

#[test]
fn oracle_theory_arities() {
    let arity = |name: &str| brute_theory_arity(&bundled(name), &caps()).unwrap();
    assert_eq!(arity("z3"), Some(pinned::THEORY_ARITY_Z3));
    assert_eq!(arity("z4"), Some(pinned::THEORY_ARITY_Z4));
    assert_eq!(arity("s3"), Some(pinned::THEORY_ARITY_S3));
}

#[test]
fn oracle_z3_delta_basedness() {
    let z3 = bundled("z3");
    let graph = z3.graph_of("mul").unwrap();
    let auts = brute_automorphisms(&z3).unwrap();
    let based = (1..=3).all(|m| {
        let closure = brute_delta_atoms(&z3, std::slice::from_ref(&graph), m, &caps()).unwrap();
        closure.labels() == labels_of(&brute_orbits(3, &auts, m), 3usize.pow(m as u32))
    });
    assert_eq!(based, pinned::Z3_DELTA_BASED_M3);
}
