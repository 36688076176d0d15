//! Naming every element makes a theory unary.

use aritylab::arity::theory_arity;
use aritylab::automorph::automorphisms;
use aritylab::expansions::expand_singletons;
use aritylab::{corpus, Limits};

fn main() -> aritylab::Result<()> {
    let limits = Limits::default();
    for s in corpus::load()? {
        let n = s.size();
        let e = expand_singletons(&s)?;
        let before = theory_arity(&s, n, n, &limits)?.theory_arity.value();
        let after = theory_arity(&e.combined, n, n, &limits)?.theory_arity.value();
        let aut = automorphisms(&e.combined, &limits)?;
        println!(
            "{:>24}  {:?} -> {:?}  ({} predicates, |Aut| {})",
            s.name(),
            before,
            after,
            e.added.len(),
            aut.order()
        );
    }
    Ok(())
}
