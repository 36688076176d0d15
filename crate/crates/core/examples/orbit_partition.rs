//! Orbit partitions of M^m and invariance of relations.

use aritylab::orbits::{OrbitTable, TupleSet};
use aritylab::structures::{gen_family, Family};
use aritylab::Limits;

fn main() -> aritylab::Result<()> {
    let limits = Limits::default();
    let z5 = gen_family(Family::Cyclic(5), &limits)?;
    let mut table = OrbitTable::for_structure(&z5, limits)?;
    for m in 0..=3 {
        let p = table.ensure(m)?;
        println!(
            "Z_5, m = {m}: {} orbits on {} tuples",
            p.class_count(),
            5usize.pow(m as u32)
        );
    }
    let p = table.ensure(1)?;
    println!("unary orbits: {:?}", p.classes());

    let squares = TupleSet::from_predicate(5, 1, |t| [1, 4].contains(&t[0]))?;
    match table.ensure(1)?.check_invariant(&squares) {
        Ok(()) => println!("{{1, 4}} is invariant"),
        Err(e) => println!("{{1, 4}}: {e}"),
    }
    let nonzero = TupleSet::from_predicate(5, 1, |t| t[0] != 0)?;
    println!(
        "nonzero invariant: {}",
        table.ensure(1)?.check_invariant(&nonzero).is_ok()
    );
    Ok(())
}
