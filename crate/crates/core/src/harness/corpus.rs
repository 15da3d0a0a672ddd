//! Corpus sweeps: stream semigroups, check each one, aggregate verdicts.

use std::collections::BTreeMap;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::theorems::{check_theorems, CheckStatus, TheoremReport, CHECKS};
use crate::error::{Error, Result};
use crate::invariants::Budget;
use crate::semigroup::{
    enumerate_semigroups, generate, read_table, CayleyTable, FamilySpec, MAX_ENUMERATION_ORDER,
};

const BATCH: usize = 4096;
const MAX_REPORTED_COUNTEREXAMPLES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSource {
    /// Every labeled semigroup of each order in the range, in order.
    Enumerate(RangeInclusive<usize>),
    Families(Vec<FamilySpec>),
    /// Table files matching a glob pattern, in sorted path order.
    Glob(String),
}

impl CorpusSource {
    /// Parses `k` or `a..b` (inclusive).
    pub fn orders(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("`{s}` is not an order or an order range a..b"));
        let range = match s.split_once("..") {
            Some((a, b)) => {
                let a: usize = a.trim().parse().map_err(|_| bad())?;
                let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
                a..=b
            }
            None => {
                let k: usize = s.trim().parse().map_err(|_| bad())?;
                k..=k
            }
        };
        if range.is_empty() {
            return Err(bad());
        }
        if *range.start() == 0 || *range.end() > MAX_ENUMERATION_ORDER {
            return Err(Error::EnumerationOrder(if *range.start() == 0 { 0 } else { *range.end() }));
        }
        Ok(CorpusSource::Enumerate(range))
    }

    /// Parses a comma-separated family list. A size parameter written as
    /// `a..b` expands to one member per value, so `right-zero(2..5)` is four
    /// families.
    pub fn families(s: &str) -> Result<Self> {
        let mut specs = Vec::new();
        for item in crate::semigroup::split_top_level(s) {
            for expanded in expand_ranges(item.trim())? {
                specs.push(expanded.parse()?);
            }
        }
        if specs.is_empty() {
            return Err(Error::Precondition("empty family list".into()));
        }
        Ok(CorpusSource::Families(specs))
    }
}

fn expand_ranges(item: &str) -> Result<Vec<String>> {
    let Some(pos) = item.find("..") else {
        return Ok(vec![item.to_string()]);
    };
    let start = item[..pos]
        .rfind(|c: char| !c.is_ascii_digit())
        .map_or(0, |i| i + 1);
    let end = pos
        + 2
        + item[pos + 2..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(item.len() - pos - 2);
    let bad = || Error::Family {
        spec: item.to_string(),
        reason: "malformed range".into(),
    };
    let lo: usize = item[start..pos].parse().map_err(|_| bad())?;
    let hi: usize = item[pos + 2..end].parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    let mut out = Vec::new();
    for k in lo..=hi {
        out.extend(expand_ranges(&format!("{}{k}{}", &item[..start], &item[end..]))?);
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub source: CorpusSource,
    /// Tally semigroups with a zero separately.
    pub zero_slice: bool,
    pub budget: Budget,
    pub fail_fast: bool,
    /// Worker threads; 0 uses rayon's default.
    pub jobs: usize,
    /// JSON-lines destination, one [`CorpusRecord`] per semigroup.
    pub output: Option<PathBuf>,
}

impl CorpusSpec {
    pub fn new(source: CorpusSource) -> Self {
        Self {
            source,
            zero_slice: true,
            budget: Budget::from_env(),
            fail_fast: false,
            jobs: 0,
            output: None,
        }
    }
}

/// One line of the JSON-lines output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusRecord {
    pub schema: u32,
    pub index: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<TheoremReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub inconclusive: usize,
}

impl Tally {
    fn add(&mut self, status: CheckStatus) {
        match status {
            CheckStatus::Pass => self.pass += 1,
            CheckStatus::Fail => self.fail += 1,
            CheckStatus::NotApplicable => self.not_applicable += 1,
            CheckStatus::Inconclusive => self.inconclusive += 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slice {
    pub processed: usize,
    pub counterexamples: usize,
    pub checks: BTreeMap<String, Tally>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: usize,
    pub name: Option<String>,
    pub table: Vec<Vec<usize>>,
    pub check: String,
    pub witness: Option<serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub schema: u32,
    pub processed: usize,
    /// Semigroups with at least one failing check.
    pub counterexamples: usize,
    /// Semigroups with at least one inconclusive check.
    pub inconclusive: usize,
    pub errors: usize,
    /// Per-check tallies in registry order.
    pub checks: Vec<(String, Tally)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub with_zero: Option<Slice>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub without_zero: Option<Slice>,
    /// The first failing checks, at most 20.
    pub first_counterexamples: Vec<Counterexample>,
    pub stopped_early: bool,
    pub elapsed_ms: u64,
}

impl CorpusSummary {
    /// No counterexamples, nothing inconclusive, no per-member errors.
    pub fn is_clean(&self) -> bool {
        self.counterexamples == 0 && self.inconclusive == 0 && self.errors == 0
    }

    pub fn tally(&self, id: &str) -> Option<&Tally> {
        self.checks.iter().find(|(c, _)| c == id).map(|(_, t)| t)
    }
}

/// A lazily produced, fallible stream of named tables.
fn stream(source: &CorpusSource) -> Result<Box<dyn Iterator<Item = Result<CayleyTable>> + '_>> {
    Ok(match source {
        CorpusSource::Enumerate(range) => {
            let mut parts = Vec::new();
            for k in range.clone() {
                parts.push(enumerate_semigroups(k)?.enumerate().map(move |(i, t)| {
                    Ok(t.with_name(format!("order{k}-{i}")))
                }));
            }
            Box::new(parts.into_iter().flatten())
        }
        CorpusSource::Families(specs) => Box::new(
            specs
                .iter()
                .map(|s| generate(s).map(|t| t.with_name(s.to_string()))),
        ),
        CorpusSource::Glob(pattern) => {
            let paths = glob::glob(pattern).map_err(|e| {
                Error::Precondition(format!("bad glob pattern `{pattern}`: {e}"))
            })?;
            let mut paths: Vec<PathBuf> = paths
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| {
                    let path = e.path().to_path_buf();
                    Error::io(path, e.into())
                })?;
            paths.sort();
            Box::new(paths.into_iter().map(read_table))
        }
    })
}

struct Aggregator {
    summary: CorpusSummary,
    sink: Option<(PathBuf, std::io::BufWriter<std::fs::File>)>,
}

impl Aggregator {
    fn record(&mut self, index: usize, outcome: Result<TheoremReport>) -> Result<()> {
        let s = &mut self.summary;
        s.processed += 1;
        let record = match outcome {
            Ok(report) => {
                let failed = report.counterexamples().count() > 0;
                s.counterexamples += failed as usize;
                s.inconclusive += (report.inconclusive().count() > 0) as usize;
                for (check, (_, tally)) in report.checks.iter().zip(s.checks.iter_mut()) {
                    tally.add(check.status);
                }
                let slice = if report.has_zero { &mut s.with_zero } else { &mut s.without_zero };
                if let Some(slice) = slice {
                    slice.processed += 1;
                    slice.counterexamples += failed as usize;
                    for check in &report.checks {
                        slice.checks.entry(check.id.clone()).or_default().add(check.status);
                    }
                }
                for check in report.counterexamples() {
                    if s.first_counterexamples.len() < MAX_REPORTED_COUNTEREXAMPLES {
                        s.first_counterexamples.push(Counterexample {
                            index,
                            name: report.name.clone(),
                            table: report.table.clone(),
                            check: check.id.clone(),
                            witness: check.witness.clone(),
                        });
                    }
                }
                CorpusRecord { schema: 1, index, report: Some(report), error: None }
            }
            Err(e) => {
                s.errors += 1;
                CorpusRecord { schema: 1, index, report: None, error: Some(e.to_string()) }
            }
        };
        if let Some((path, out)) = &mut self.sink {
            serde_json::to_writer(&mut *out, &record)?;
            out.write_all(b"\n").map_err(|e| Error::io(path.clone(), e))?;
        }
        Ok(())
    }
}

/// Checks every member of the corpus. Members are evaluated in parallel
/// batches and recorded in corpus order, so the output does not depend on
/// the thread count.
pub fn run_corpus(spec: &CorpusSpec) -> Result<CorpusSummary> {
    let started = Instant::now();
    let sink = match &spec.output {
        Some(path) => {
            let file = std::fs::File::create(path).map_err(|e| Error::io(path.clone(), e))?;
            Some((path.clone(), std::io::BufWriter::new(file)))
        }
        None => None,
    };
    let slice = || spec.zero_slice.then(Slice::default);
    let mut agg = Aggregator {
        summary: CorpusSummary {
            schema: 1,
            processed: 0,
            counterexamples: 0,
            inconclusive: 0,
            errors: 0,
            checks: CHECKS.iter().map(|c| (c.id.to_string(), Tally::default())).collect(),
            with_zero: slice(),
            without_zero: slice(),
            first_counterexamples: Vec::new(),
            stopped_early: false,
            elapsed_ms: 0,
        },
        sink,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;

    let mut members = stream(&spec.source)?.enumerate();
    'outer: loop {
        let batch: Vec<(usize, Result<CayleyTable>)> = members.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let results: Vec<(usize, Result<TheoremReport>)> = pool.install(|| {
            batch
                .into_par_iter()
                .map(|(i, table)| (i, table.and_then(|t| check_theorems(&t, spec.budget))))
                .collect()
        });
        for (i, outcome) in results {
            let failed = match &outcome {
                Ok(r) => r.counterexamples().count() > 0,
                Err(_) => true,
            };
            agg.record(i, outcome)?;
            if failed && spec.fail_fast {
                agg.summary.stopped_early = true;
                break 'outer;
            }
        }
    }
    if let Some((path, out)) = &mut agg.sink {
        out.flush().map_err(|e| Error::io(path.clone(), e))?;
    }
    agg.summary.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(agg.summary)
}

/// Re-runs [`check_theorems`] on every report in a JSON-lines file and
/// returns the indices whose verdicts changed.
pub fn replay(path: &std::path::Path, budget: Budget) -> Result<Vec<usize>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut changed = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let record: CorpusRecord = serde_json::from_str(line)?;
        let Some(report) = record.report else { continue };
        let mut table = CayleyTable::from_rows(report.table.clone())?;
        if let Some(name) = &report.name {
            table = table.with_name(name.clone());
        }
        if check_theorems(&table, budget)?.verdicts() != report.verdicts() {
            changed.push(record.index);
        }
    }
    Ok(changed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_ranges() {
        assert_eq!(CorpusSource::orders("4").unwrap(), CorpusSource::Enumerate(4..=4));
        assert_eq!(CorpusSource::orders("2..4").unwrap(), CorpusSource::Enumerate(2..=4));
        assert!(CorpusSource::orders("6").is_err());
        assert!(CorpusSource::orders("3..2").is_err());
    }

    #[test]
    fn family_ranges_expand() {
        let CorpusSource::Families(specs) =
            CorpusSource::families("right-zero(2..5), rectangular-band(2,3..4)").unwrap()
        else {
            panic!()
        };
        let names: Vec<String> = specs.iter().map(ToString::to_string).collect();
        assert_eq!(
            names,
            [
                "right-zero(2)",
                "right-zero(3)",
                "right-zero(4)",
                "right-zero(5)",
                "rectangular-band(2,3)",
                "rectangular-band(2,4)"
            ]
        );
    }

    #[test]
    fn order_three_sweep() {
        let mut spec = CorpusSpec::new(CorpusSource::orders("3").unwrap());
        spec.budget = Budget::unlimited();
        let s = run_corpus(&spec).unwrap();
        assert_eq!(s.processed, 113);
        assert_eq!(s.errors, 0);
        let with = s.with_zero.as_ref().unwrap().processed;
        let without = s.without_zero.as_ref().unwrap().processed;
        assert_eq!(with + without, 113);
        let total: usize = s.checks.iter().map(|(_, t)| t.pass + t.fail + t.not_applicable + t.inconclusive).sum();
        assert_eq!(total, 113 * CHECKS.len());
    }

    #[test]
    fn union_families_apply_everywhere() {
        let mut spec = CorpusSpec::new(CorpusSource::families("right-zero(2..5)").unwrap());
        spec.budget = Budget::unlimited();
        let s = run_corpus(&spec).unwrap();
        assert_eq!(s.processed, 4);
        for id in ["union-of-minimals-structure", "degree-formula", "automorphism-group-symmetric"] {
            let t = s.tally(id).unwrap();
            assert_eq!((t.pass, t.fail), (4, 0), "{id}");
        }
    }

    #[test]
    fn output_replays() {
        let dir = std::env::temp_dir().join(format!("idealgraph-replay-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("out.jsonl");
        let mut spec = CorpusSpec::new(CorpusSource::families("right-zero(2..4),zn-multiplication(6..8)").unwrap());
        spec.budget = Budget::unlimited();
        spec.output = Some(path.clone());
        let s = run_corpus(&spec).unwrap();
        assert_eq!(s.processed, 6);
        assert!(replay(&path, Budget::unlimited()).unwrap().is_empty());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
