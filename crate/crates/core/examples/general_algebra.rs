//! Preimage predicates for every function symbol of an algebra.

use aritylab::arity::theory_arity;
use aritylab::expansions::expand_general_algebra;
use aritylab::structures::FiniteStructure;
use aritylab::Limits;

fn main() -> aritylab::Result<()> {
    let limits = Limits::default();
    // Two operations on four points: a flat product and a cyclic successor.
    let flat = (0..16)
        .map(|r| match (r / 4, r % 4) {
            (0, y) => y,
            (x, 0) => x,
            _ => 0,
        })
        .collect();
    let succ = (0..4).map(|x| (x + 1) % 4).collect();
    let s = FiniteStructure::new("two_ops", 4)?
        .with_function("mul", 2, flat)?
        .with_function("succ", 1, succ)?;
    let e = expand_general_algebra(&s)?;
    for p in &e.added {
        println!("{:>6} (arity {}): {} tuples", p.name, p.arity, p.tuples.len());
    }
    for note in &e.notes {
        println!("note: {note}");
    }
    let before = theory_arity(&s, 4, 4, &limits)?;
    let after = theory_arity(&e.combined, 4, 4, &limits)?;
    println!(
        "arity {:?} -> {:?}",
        before.theory_arity.value(),
        after.theory_arity.value()
    );
    Ok(())
}
