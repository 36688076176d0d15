//! Compares the engine's theory arity with the brute-force oracle.
//!
//! Usage: `cargo run --release --example oracle_crosscheck [corpus-name ...]`

use aritylab::arity::theory_arity;
use aritylab::oracle::{brute_theory_arity, OracleCaps};
use aritylab::{corpus, Limits};

fn main() -> aritylab::Result<()> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let names = if names.is_empty() {
        vec!["z3".to_string(), "z4".into(), "klein".into(), "path4".into()]
    } else {
        names
    };
    let caps = OracleCaps {
        max_size: 6,
        max_m: 6,
        max_n: 3,
        ..OracleCaps::default()
    };
    for name in names {
        let file = format!("{name}.struct");
        let structure = corpus::get(&file).unwrap_or_else(|| panic!("no bundled structure {file}"))?;
        let s = structure.size();
        let engine = theory_arity(&structure, s, s, &Limits::default())?;
        let brute = brute_theory_arity(&structure, &caps)?;
        println!(
            "{name:>18}  size {s}  engine {:?}  oracle {:?}",
            engine.theory_arity.value(),
            brute
        );
    }
    Ok(())
}
