//! Count labeled semigroups of small orders and show the first few of order 2.

use idealgraph::semigroup::{count_semigroups, enumerate_semigroups};

fn main() -> idealgraph::Result<()> {
    for order in 1..=4 {
        println!("order {order}: {} labeled semigroups", count_semigroups(order)?);
    }
    for table in enumerate_semigroups(2)?.take(3) {
        println!("{:?}", table.to_rows());
    }
    Ok(())
}
