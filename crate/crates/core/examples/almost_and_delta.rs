//! Almost-arity and Δ-basedness checks with a finite witness set.

use aritylab::arity::{almost_arity_check, delta_based_check, theory_arity_in};
use aritylab::orbits::OrbitTable;
use aritylab::structures::{gen_family, Family};
use aritylab::Limits;

fn main() -> aritylab::Result<()> {
    let limits = Limits::default();

    let z3 = gen_family(Family::Cyclic(3), &limits)?;
    let mut table = OrbitTable::for_structure(&z3, limits)?;
    let graph = z3.graph_of("mul")?;
    let delta = delta_based_check(&mut table, &[graph], 3)?;
    println!("Z_3 based on {{graph of mul}} up to m = 3: {}", delta.holds);
    for c in &delta.checks {
        println!(
            "  m = {}: {} classes vs {} orbits",
            c.m, c.signature_classes, c.orbit_classes
        );
    }

    let z5 = gen_family(Family::Cyclic(5), &limits)?;
    let mut table = OrbitTable::for_structure(&z5, limits)?;
    let plain = theory_arity_in(&mut table, 5, 5)?;
    let graph = z5.graph_of("mul")?;
    let almost = almost_arity_check(&mut table, &[graph], 1, 4)?;
    println!(
        "Z_5: theory arity {:?}; unary up to the graph of mul (m <= 4): {}",
        plain.theory_arity.value(),
        almost.holds
    );
    if let Some(c) = &almost.counterexample {
        println!("  separated only by orbits: {:?} vs {:?}", c.first, c.second);
    }

    let monoid = gen_family(Family::FiniteRangeMonoid { k: 3, r: 2 }, &limits)?;
    let mut table = OrbitTable::for_structure(&monoid, limits)?;
    let graph = monoid.graph_of("mul")?;
    let almost = almost_arity_check(&mut table, &[graph], 1, 4)?;
    println!(
        "{}: unary up to the graph of mul (m <= 4): {}",
        monoid.name(),
        almost.holds
    );
    Ok(())
}
