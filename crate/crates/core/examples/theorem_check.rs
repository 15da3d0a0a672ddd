//! Run the check registry on a few families, then sweep all semigroups of
//! order 3.

use idealgraph::harness::{check_theorems, run_corpus, CorpusSource, CorpusSpec};
use idealgraph::invariants::Budget;
use idealgraph::semigroup::generate;

fn main() -> idealgraph::Result<()> {
    for spec in ["right-zero(4)", "zn-multiplication(6)", "null-with-zero(3)"] {
        let report = check_theorems(&generate(&spec.parse()?)?, Budget::from_env())?;
        let failing: Vec<&str> = report.counterexamples().map(|c| c.id.as_str()).collect();
        println!("{spec}: {} checks, failing {failing:?}", report.checks.len());
    }
    let summary = run_corpus(&CorpusSpec::new(CorpusSource::orders("3")?))?;
    println!(
        "order 3: {} processed, {} with a failing check",
        summary.processed, summary.counterexamples
    );
    Ok(())
}
