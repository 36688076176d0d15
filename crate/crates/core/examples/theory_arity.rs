//! Theory arity of every bundled structure, with the first failing level.

use aritylab::arity::theory_arity;
use aritylab::{corpus, Limits};

fn main() -> aritylab::Result<()> {
    let limits = Limits::default();
    for s in corpus::load()? {
        let n = s.size();
        let report = theory_arity(&s, n, n, &limits)?;
        let failing = report.checks.iter().find(|c| !c.check.passed);
        print!(
            "{:>24}  arity {:?}  exact {}",
            s.name(),
            report.theory_arity.value(),
            report.exact
        );
        if let Some(c) = failing.and_then(|c| c.check.counterexample.as_ref().map(|x| (c, x))) {
            print!(
                "  (level {} fails at m = {}: {:?} ~ {:?})",
                c.0.n, c.0.check.m, c.1.first, c.1.second
            );
        }
        println!();
    }
    Ok(())
}
