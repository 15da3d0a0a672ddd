//! Left ideals of a rectangular band: minimal, maximal, and the union of
//! the minimal ones.

use idealgraph::ideals::chromatic_bound_data;
use idealgraph::semigroup::{generate, FamilySpec};
use idealgraph::all_left_ideals;

fn main() -> idealgraph::Result<()> {
    let spec: FamilySpec = "rectangular-band(2,3)".parse()?;
    let family = all_left_ideals(&generate(&spec)?)?;
    let show = |ids: &[usize]| ids.iter().map(|&i| family.ideal(i).to_string()).collect::<Vec<_>>();
    println!("{spec}: {} left ideals", family.all.len());
    println!("nontrivial: {:?}", show(&family.nontrivial));
    println!("minimal:    {:?}", show(&family.minimal));
    println!("maximal:    {:?}", show(&family.maximal));
    println!("S is the union of its minimal ideals: {}", family.s_equals_union);
    let bound = chromatic_bound_data(&family)?;
    println!("chromatic bound: {}", bound.bound);
    Ok(())
}
