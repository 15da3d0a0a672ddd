//! Build the intersection ideal graph of right-zero(3) and print it as DOT
//! and JSON.

use idealgraph::semigroup::{generate, FamilySpec};
use idealgraph::{all_left_ideals, build_gamma, quotient_graph};

fn main() -> idealgraph::Result<()> {
    let table = generate(&FamilySpec::RightZero(3))?;
    let gamma = build_gamma(&all_left_ideals(&table)?)?;
    println!("{}", gamma.to_dot());
    println!("{}", serde_json::to_string(&gamma.to_json())?);
    let q = quotient_graph(&gamma.graph);
    println!("closed-neighborhood classes: {:?}", q.classes);
    Ok(())
}
