use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use idealgraph::automorphism::automorphism_group;
use idealgraph::harness::{
    check_theorems, run_corpus, CheckStatus, CorpusSource, CorpusSpec, CorpusSummary,
    TheoremReport, CHECKS,
};
use idealgraph::invariants::{analyze, Budget, Computed, BUDGET_ENV};
use idealgraph::semigroup::{enumerate_semigroups, generate, read_table, FamilySpec};
use idealgraph::{all_left_ideals, build_gamma, Error, Result};

/// Intersection ideal graphs of finite semigroups.
#[derive(Parser)]
#[command(name = "idealgraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the ideal graph of a table and report its invariants.
    Analyze {
        file: PathBuf,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Write the Cayley table of a standard family.
    Gen {
        /// right-zero, left-zero, null-with-zero, rectangular-band,
        /// cyclic-group, zn-multiplication or direct-product.
        #[arg(long)]
        family: String,
        /// Comma-separated parameters, e.g. `2,3`.
        #[arg(long)]
        params: String,
        /// Output file; `.json` selects JSON. Defaults to stdout as text.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Stream every labeled semigroup of an order as JSON lines.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Run every registered check on one table.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Run every registered check over a corpus.
    CheckCorpus(CorpusArgs),
    /// List the registered checks.
    ListChecks,
}

#[derive(Args)]
struct BudgetArg {
    /// Per-invariant time budget in milliseconds; 0 disables it.
    #[arg(long, env = BUDGET_ENV)]
    budget_ms: Option<u64>,
}

impl BudgetArg {
    fn budget(&self) -> Budget {
        match self.budget_ms {
            Some(0) => Budget::unlimited(),
            Some(ms) => Budget::millis(ms),
            None => Budget::from_env(),
        }
    }
}

#[derive(Args)]
#[group(id = "source", required = true, multiple = false, args = ["order", "families", "glob"])]
struct CorpusArgs {
    /// An order `k` or an inclusive range `a..b`.
    #[arg(long)]
    order: Option<String>,
    /// Comma-separated family specs; `right-zero(2..5)` expands to four.
    #[arg(long)]
    families: Option<String>,
    #[arg(long)]
    glob: Option<String>,
    /// Stop at the first semigroup with a failing check.
    #[arg(long)]
    fail_fast: bool,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    budget: BudgetArg,
    /// Write one JSON record per semigroup to this file.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Do not tally semigroups with a zero separately.
    #[arg(long)]
    no_zero_slice: bool,
    /// Print the summary as JSON.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Analyze { file, json, dot, budget } => analyze_file(&file, json, dot, budget.budget()),
        Command::Gen { family, params, output } => {
            let spec: FamilySpec = format!("{family}({params})").parse()?;
            let table = generate(&spec)?.with_name(spec.to_string());
            match output {
                Some(path) => {
                    let text = if path.extension().is_some_and(|e| e == "json") {
                        table_json(&table).to_string() + "\n"
                    } else {
                        table.to_text()
                    };
                    std::fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
                }
                None => print!("{}", table.to_text()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { order, count_only } => {
            let tables = enumerate_semigroups(order)?;
            if count_only {
                println!("{}", tables.count());
            } else {
                let stdout = std::io::stdout();
                let mut out = std::io::BufWriter::new(stdout.lock());
                for (index, t) in tables.enumerate() {
                    let line = json!({ "schema": 1, "index": index, "table": t.to_rows() });
                    if writeln!(out, "{line}").is_err() {
                        break;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { file, json, budget } => {
            let report = check_theorems(&read_table(&file)?, budget.budget())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print_report(&report);
            }
            Ok(verdict_code(report.counterexamples().count(), report.inconclusive().count()))
        }
        Command::CheckCorpus(args) => check_corpus(args),
        Command::ListChecks => {
            for c in CHECKS {
                println!("{:<32} {}", c.id, c.description);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verdict_code(failures: usize, inconclusive: usize) -> ExitCode {
    if failures == 0 && inconclusive == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn table_json(table: &idealgraph::CayleyTable) -> serde_json::Value {
    json!({ "schema": 1, "name": table.name(), "order": table.order(), "table": table.to_rows() })
}

fn analyze_file(file: &Path, json: bool, dot: bool, budget: Budget) -> Result<ExitCode> {
    let table = read_table(file)?;
    table.ensure_associative()?;
    let family = all_left_ideals(&table)?;
    let gamma = build_gamma(&family)?;
    if dot {
        print!("{}", gamma.to_dot());
        return Ok(ExitCode::SUCCESS);
    }
    let report = analyze(&gamma.graph, budget);
    let aut = Computed::from_result(automorphism_group(
        &gamma.graph,
        &mut budget.start("automorphism group"),
    ));
    if json {
        let doc = json!({
            "schema": 1,
            "semigroup": table_json(&table),
            "minimal_ideals": family.minimal.iter().map(|&i| family.ideal(i).to_string()).collect::<Vec<_>>(),
            "maximal_ideals": family.maximal.iter().map(|&i| family.ideal(i).to_string()).collect::<Vec<_>>(),
            "s_is_union_of_minimals": family.s_equals_union,
            "graph": gamma.to_json(),
            "invariants": report,
            "automorphisms": aut.map(|a| json!({
                "order": a.order.to_string(),
                "generators": a.generators_cycle_notation(&gamma.labels()),
                "orbits": a.orbit_partition,
            })),
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
        return Ok(ExitCode::SUCCESS);
    }
    let show = |c: &Computed<usize>| match c {
        Computed::Value(v) => v.to_string(),
        Computed::NotApplicable => "n/a".into(),
        Computed::Aborted => "aborted".into(),
    };
    println!("semigroup        {} (order {})", table.name().unwrap_or("-"), table.order());
    println!("minimal ideals   {}", family.min_count());
    println!("union of minimals {}", family.s_equals_union);
    println!("vertices         {}", report.vertex_count);
    println!("edges            {}", report.edge_count);
    println!("connected        {}", report.connected);
    println!("diameter         {}", match report.diameter {
        Computed::Value(d) => d.to_string(),
        Computed::NotApplicable => "n/a".into(),
        Computed::Aborted => "aborted".into(),
    });
    println!("girth            {}", report.girth);
    println!("clique number    {}", show(&report.clique_number));
    println!("chromatic number {}", show(&report.chromatic_number));
    println!("independence     {}", show(&report.independence_number));
    println!("domination       {}", show(&report.domination_number));
    println!("metric dim       {}", show(&report.metric_dimension));
    println!("strong metric    {}", show(&report.strong_metric_dimension));
    println!("planar           {}", report.planar);
    println!("perfect          {}", match report.perfect {
        Computed::Value(p) => p.to_string(),
        Computed::NotApplicable => "n/a".into(),
        Computed::Aborted => "aborted".into(),
    });
    println!("eulerian         {}", report.is_eulerian);
    match &aut {
        Computed::Value(a) => println!("|Aut|            {}", a.order),
        Computed::NotApplicable => println!("|Aut|            n/a"),
        Computed::Aborted => println!("|Aut|            aborted"),
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &TheoremReport) {
    println!(
        "{} (order {}, {} vertices, {} minimal ideals)",
        report.name.as_deref().unwrap_or(&report.hash[..12]),
        report.order,
        report.vertex_count,
        report.minimal_count
    );
    for c in &report.checks {
        let status = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "n/a",
            CheckStatus::Inconclusive => "inconclusive",
        };
        print!("  {status:<12} {}", c.id);
        if let Some(note) = &c.note {
            print!("  ({note})");
        }
        println!();
        if c.status == CheckStatus::Fail {
            if let Some(w) = &c.witness {
                println!("               witness: {w}");
            }
        }
    }
}

fn check_corpus(args: CorpusArgs) -> Result<ExitCode> {
    let source = match (&args.order, &args.families, &args.glob) {
        (Some(o), _, _) => CorpusSource::orders(o)?,
        (_, Some(f), _) => CorpusSource::families(f)?,
        (_, _, Some(g)) => CorpusSource::Glob(g.clone()),
        _ => unreachable!("clap requires a source"),
    };
    let mut spec = CorpusSpec::new(source);
    spec.zero_slice = !args.no_zero_slice;
    spec.budget = args.budget.budget();
    spec.fail_fast = args.fail_fast;
    spec.jobs = args.jobs;
    spec.output = args.output;
    let summary = run_corpus(&spec)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&summary)?);
    } else {
        print_summary(&summary);
    }
    Ok(verdict_code(summary.counterexamples + summary.errors, summary.inconclusive))
}

fn print_summary(s: &CorpusSummary) {
    println!(
        "processed {}  counterexamples {}  inconclusive {}  errors {}  ({} ms{})",
        s.processed,
        s.counterexamples,
        s.inconclusive,
        s.errors,
        s.elapsed_ms,
        if s.stopped_early { ", stopped early" } else { "" }
    );
    println!("{:<32} {:>8} {:>8} {:>8} {:>8}", "check", "pass", "fail", "n/a", "inconc.");
    for (id, t) in &s.checks {
        println!(
            "{id:<32} {:>8} {:>8} {:>8} {:>8}",
            t.pass, t.fail, t.not_applicable, t.inconclusive
        );
    }
    if let (Some(z), Some(nz)) = (&s.with_zero, &s.without_zero) {
        println!(
            "with zero: {} processed, {} counterexamples; without zero: {} processed, {} counterexamples",
            z.processed, z.counterexamples, nz.processed, nz.counterexamples
        );
    }
    for c in &s.first_counterexamples {
        println!(
            "counterexample #{} {} {:?}: {} {}",
            c.index,
            c.name.as_deref().unwrap_or("-"),
            c.table,
            c.check,
            c.witness.as_ref().map(ToString::to_string).unwrap_or_default()
        );
    }
}
