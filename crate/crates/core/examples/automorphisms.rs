//! The automorphism group of the ideal graph of right-zero(4), and the
//! automorphisms induced by permuting its minimal ideals.

use idealgraph::automorphism::{
    automorphism_group, phi_sigma, verify_symmetric_group, Permutation,
};
use idealgraph::invariants::Deadline;
use idealgraph::semigroup::{generate, FamilySpec};
use idealgraph::{all_left_ideals, build_gamma};

fn main() -> idealgraph::Result<()> {
    let family = all_left_ideals(&generate(&FamilySpec::RightZero(4))?)?;
    let gamma = build_gamma(&family)?;
    let aut = automorphism_group(&gamma.graph, &mut Deadline::unlimited("automorphisms"))?;
    println!("|Aut| = {}", aut.order);
    for g in aut.generators_cycle_notation(&gamma.labels()) {
        println!("  generator {g}");
    }
    let sigma = Permutation::from_images(vec![1, 2, 3, 0])?;
    let action = phi_sigma(&family, &gamma, &sigma)?;
    println!(
        "sigma {} induces {}",
        sigma,
        action.vertex_map.cycle_notation_with(|v| gamma.label(v))
    );
    let verdict = verify_symmetric_group(&family, &gamma, &aut)?;
    println!("Aut is S_{}: {}", verdict.n, verdict.holds());
    Ok(())
}
