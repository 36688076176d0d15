//! Expanding a monoid with finite range by D_i and R_i predicates.

use aritylab::arity::theory_arity;
use aritylab::expansions::{expand_finite_range, IdentityRows};
use aritylab::structures::{gen_family, serialize_structure, Family};
use aritylab::Limits;

fn main() -> aritylab::Result<()> {
    let limits = Limits::default();
    for k in 3..=6 {
        let m = gen_family(Family::FiniteRangeMonoid { k, r: 2 }, &limits)?;
        let e = expand_finite_range(&m, IdentityRows::Exclude)?;
        let n = m.size();
        let before = theory_arity(&m, n, n, &limits)?;
        let after = theory_arity(&e.combined, n, n, &limits)?;
        println!(
            "{}: arity {:?} -> {:?}; added {:?}",
            m.name(),
            before.theory_arity.value(),
            after.theory_arity.value(),
            e.added.iter().map(|p| (&p.name, p.tuples.len())).collect::<Vec<_>>()
        );
    }
    let m = gen_family(Family::FiniteRangeMonoid { k: 3, r: 2 }, &limits)?;
    print!(
        "{}",
        serialize_structure(&expand_finite_range(&m, IdentityRows::Exclude)?.combined)
    );
    Ok(())
}
