//! Parse a Cayley table, validate it, and look at its zero and L-classes.

use idealgraph::semigroup::parse_text;

fn main() -> idealgraph::Result<()> {
    // {0, 1, 2} with 0 a zero and 1, 2 right-zero among themselves
    let table = parse_text("3\n0 0 0\n0 1 2\n0 1 2\n")?;
    println!("valid: {:?}", table.validate());
    println!("zero: {:?}", table.zero_element());
    for a in 0..table.order() {
        println!("S1{a} = {}", table.principal_left_ideal(a));
    }
    println!("L-classes: {:?}", table.l_class_partition().classes);
    println!("digest: {}", table.digest());

    let broken = parse_text("2\n1 0\n0 0\n")?;
    println!("non-associative: {}", broken.ensure_associative().unwrap_err());
    Ok(())
}
