//! Automorphism groups via the stabilizer chain.

use aritylab::automorph::automorphisms;
use aritylab::structures::{gen_family, Family};
use aritylab::{corpus, Limits};

fn main() -> aritylab::Result<()> {
    let limits = Limits::default();
    let mut structures = corpus::load()?;
    structures.push(gen_family(Family::FlatMonoid(6), &limits)?);
    structures.push(gen_family(Family::Cyclic(12), &limits)?);
    for s in &structures {
        let aut = automorphisms(s, &limits)?;
        let gens: Vec<_> = aut.generators().iter().map(|g| g.images().to_vec()).collect();
        println!(
            "{:>24}  |Aut| = {:<5} chain {:?}  generators {:?}",
            s.name(),
            aut.order(),
            aut.chain_orders(),
            gens
        );
    }
    Ok(())
}
