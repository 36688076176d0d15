//! Engine against brute-force oracle on small structures.

mod common;

use aritylab::arity::{level_partition, relation_arity};
use aritylab::automorph::{automorphisms, is_automorphism};
use aritylab::oracle::{
    brute_automorphisms, brute_n_ary_atoms, brute_orbits, brute_relation_arity, labels_of, OracleCaps,
};
use aritylab::structures::{Family, FiniteStructure};
use common::*;

fn small_structures() -> Vec<FiniteStructure> {
    let mut out = corpus_upto(4);
    out.push(family(Family::FlatMonoid(1)));
    out.push(FiniteStructure::new("bare_3", 3).unwrap());
    let mut r = rng(7);
    for i in 0..24 {
        out.push(random_structure(&mut r, 1 + i % 4));
    }
    out
}

#[test]
fn signature_atoms_match_closure_atoms() {
    let caps = OracleCaps::default();
    for s in small_structures() {
        let mut t = table(&s);
        t.ensure_upto(4).unwrap();
        for m in 1..=4 {
            for n in 1..=2 {
                let engine = level_partition(&t, n, m).unwrap();
                let oracle = brute_n_ary_atoms(&s, m, n, &caps).unwrap();
                assert_eq!(engine.class_of, oracle.labels(), "{} m={m} n={n}", s.name());
            }
        }
    }
}

#[test]
fn orbit_partitions_match_brute_orbits() {
    for s in small_structures() {
        let mut t = table(&s);
        let auts = brute_automorphisms(&s).unwrap();
        for m in 0..=3 {
            let engine = t.ensure(m).unwrap().class_of().to_vec();
            let brute = labels_of(&brute_orbits(s.size(), &auts, m), s.size().pow(m as u32));
            assert_eq!(engine, brute, "{} m={m}", s.name());
        }
    }
}

#[test]
fn relation_arity_on_sampled_invariant_relations() {
    let caps = OracleCaps {
        max_n: 4,
        ..OracleCaps::default()
    };
    let mut r = rng(11);
    let structures = small_structures();
    let mut checked = 0;
    for round in 0..3 {
        for s in &structures {
            let mut t = table(s);
            let m = 1 + (round + checked) % 3;
            let rel = random_invariant_relation(&mut r, &mut t, m);
            let engine = relation_arity(&rel, &mut t).unwrap();
            let oracle = brute_relation_arity(s, &rel, &caps).unwrap();
            assert_eq!(engine, oracle, "{} m={m} {:?}", s.name(), rel);
            checked += 1;
        }
    }
    assert!(checked >= 50, "only {checked} relations checked");
}

#[test]
fn group_orders_match_brute_counts() {
    let mut structures: Vec<FiniteStructure> = corpus_upto(7);
    for k in 1..=6 {
        structures.push(family(Family::FlatMonoid(k)));
    }
    for n in 2..=7 {
        structures.push(family(Family::Cyclic(n)));
        structures.push(FiniteStructure::new(format!("bare_{n}"), n).unwrap());
    }
    let mut r = rng(3);
    for i in 0..30 {
        structures.push(random_structure(&mut r, 2 + i % 6));
    }
    for s in structures {
        let aut = automorphisms(&s, &limits()).unwrap();
        let brute = brute_automorphisms(&s).unwrap();
        assert_eq!(aut.order(), brute.len() as u64, "{}", s.name());
        for g in aut.generators() {
            assert!(is_automorphism(g, &s).unwrap());
        }
    }
}
