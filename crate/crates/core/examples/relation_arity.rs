//! Relation arity of operation graphs and the aritization hypotheses.

use aritylab::arity::{check_arit_hypotheses, is_n_ary_relation, relation_arity};
use aritylab::orbits::OrbitTable;
use aritylab::structures::{gen_family, Family};
use aritylab::Limits;

fn main() -> aritylab::Result<()> {
    let limits = Limits::default();
    for q in 2..=7 {
        let z = gen_family(Family::Cyclic(q), &limits)?;
        let mut table = OrbitTable::for_structure(&z, limits)?;
        let graph = z.graph_of("mul")?;
        let arity = relation_arity(&graph, &mut table)?;
        print!("Z_{q}: graph of + has arity {arity}");
        if arity > 1 {
            let v = is_n_ary_relation(&graph, arity - 1, &mut table)?;
            if let Some(c) = v.counterexample {
                print!("; level {} confuses {:?} with {:?}", arity - 1, c.member, c.non_member);
            }
        }
        println!();
    }

    let z5 = gen_family(Family::Cyclic(5), &limits)?;
    for n in 2..=3 {
        let rel = z5.power_graph_of("mul", n)?;
        let h = check_arit_hypotheses(&rel, 1, 0, &limits)?;
        println!(
            "Z_5, y = x1+…+x{n}: bounded solutions {} (max {}), full projections {}",
            h.bounded_solutions.holds, h.bounded_solutions.max.completions, h.cofinite_projections.holds
        );
    }
    let flat = gen_family(Family::FlatMonoid(2), &limits)?;
    let h = check_arit_hypotheses(&flat.graph_of("mul")?, 1, 0, &limits)?;
    println!(
        "flat_monoid(2): bounded solutions {} (witness {:?})",
        h.bounded_solutions.holds, h.bounded_solutions.max
    );
    Ok(())
}
