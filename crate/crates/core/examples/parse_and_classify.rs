//! Parse a structure from text and classify its binary operation.

use aritylab::structures::{classify, parse_structure, serialize_structure};

const FLAT: &str = "\
# identity 0; every product of non-units is 0
structure flat
universe 3
function mul 2
0 1 2
1 0 0
2 0 0
end
";

fn main() -> aritylab::Result<()> {
    let s = parse_structure(FLAT)?;
    let report = classify(&s)?;
    println!("{} (size {}): identity {:?}", s.name(), s.size(), report.identity);
    println!("  associative: {}", report.is_associative);
    if let Some([a, b, c]) = report.non_associative_witness {
        println!("  ({a}·{b})·{c} ≠ {a}·({b}·{c})");
    }
    println!("  range of non-unit products: {:?}", report.range);
    print!("{}", serialize_structure(&s));

    match parse_structure("structure bad\nuniverse 2\nfunction f 1\n0 5\nend\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
