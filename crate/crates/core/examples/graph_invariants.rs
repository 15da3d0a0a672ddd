//! Exact invariants of the ideal graph of right-zero(n) for n = 2..5.

use idealgraph::invariants::{analyze, Budget};
use idealgraph::semigroup::{generate, FamilySpec};
use idealgraph::{all_left_ideals, build_gamma};

fn main() -> idealgraph::Result<()> {
    for n in 2..=5 {
        let family = all_left_ideals(&generate(&FamilySpec::RightZero(n))?)?;
        let gamma = build_gamma(&family)?;
        let r = analyze(&gamma.graph, Budget::from_env());
        println!(
            "n={n}: |V|={} |E|={} omega={:?} chi={:?} alpha={:?} gamma={:?} beta={:?} sdim={:?} planar={} perfect={:?}",
            r.vertex_count,
            r.edge_count,
            r.clique_number.value(),
            r.chromatic_number.value(),
            r.independence_number.value(),
            r.domination_number.value(),
            r.metric_dimension.value(),
            r.strong_metric_dimension.value(),
            r.planar,
            r.perfect.value(),
        );
    }
    Ok(())
}
