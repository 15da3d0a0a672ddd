//! Exact graph invariants.
//!
//! Every search is deterministic: vertices are scanned in index order and
//! subsets in lexicographic order by size. Searches that can blow up run
//! under a [`Deadline`] and fail with [`Error::Aborted`] instead of
//! returning an unverified value.

mod clique;
mod coloring;
mod combinations;
mod distance;
mod domination;
mod metric;
mod perfect;
mod planarity;

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use clique::{clique_number, independence_number, max_clique};
pub use coloring::{chromatic_number, is_proper_coloring, k_coloring};
pub use combinations::Combinations;
pub use distance::{
    bfs_distances, components, connectivity_and_diameter, girth, Connectivity, DistanceMatrix,
};
pub use domination::{domination_number, is_dominating};
pub use metric::{
    metric_dimension, metric_dimension_lower_bound, resolves, strong_metric_dimension,
    strong_metric_dimension_brute_force, strong_metric_dimension_by_quotient, strongly_resolves,
    MetricDimension, StrongMetricDimension, SDIM_BRUTE_FORCE_LIMIT,
};
pub use perfect::{find_odd_hole, is_perfect, perfect_by_definition, OddWitness, PerfectResult, WitnessKind};
pub use planarity::is_planar;

/// Environment variable holding the default per-invariant budget in
/// milliseconds.
pub const BUDGET_ENV: &str = "IDEALGRAPH_BUDGET_MS";
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(10);

/// Wall-clock allowance for one exact search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Self::from_env()
    }
}

impl Budget {
    pub const fn unlimited() -> Self {
        Self { limit: None }
    }

    pub const fn new(limit: Duration) -> Self {
        Self { limit: Some(limit) }
    }

    pub fn millis(ms: u64) -> Self {
        Self::new(Duration::from_millis(ms))
    }

    /// Reads [`BUDGET_ENV`], falling back to [`DEFAULT_BUDGET`]. A value of 0
    /// disables the limit.
    pub fn from_env() -> Self {
        match std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse::<u64>().ok()) {
            Some(0) => Self::unlimited(),
            Some(ms) => Self::millis(ms),
            None => Self::new(DEFAULT_BUDGET),
        }
    }

    pub fn limit(self) -> Option<Duration> {
        self.limit
    }

    pub fn start(self, what: &'static str) -> Deadline {
        Deadline {
            end: self.limit.map(|d| Instant::now() + d),
            what,
            ticks: 0,
        }
    }
}

/// A running budget. Call [`Deadline::tick`] from inner loops; the clock is
/// only consulted every 1024 ticks.
#[derive(Clone, Debug)]
pub struct Deadline {
    end: Option<Instant>,
    what: &'static str,
    ticks: u32,
}

impl Deadline {
    pub fn unlimited(what: &'static str) -> Self {
        Budget::unlimited().start(what)
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks & 1023 == 0 {
            if let Some(end) = self.end {
                if Instant::now() >= end {
                    return Err(Error::Aborted(self.what));
                }
            }
        }
        Ok(())
    }
}

/// A size that may be infinite; serializes infinity as `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extent {
    Finite(usize),
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extent::Finite(n) => Some(n),
            Extent::Infinite => None,
        }
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(n) => write!(f, "{n}"),
            Extent::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extent::Finite(n) => s.serialize_u64(*n as u64),
            Extent::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Outcome of one invariant computation inside a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Computed<T> {
    Value(T),
    /// Preconditions not met (e.g. metric dimension of a disconnected graph).
    NotApplicable,
    /// The time budget ran out.
    Aborted,
}

impl<T> Computed<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Computed::Value(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_aborted(&self) -> bool {
        matches!(self, Computed::Aborted)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Computed<U> {
        match self {
            Computed::Value(v) => Computed::Value(f(v)),
            Computed::NotApplicable => Computed::NotApplicable,
            Computed::Aborted => Computed::Aborted,
        }
    }

    /// Converts a search result, turning budget exhaustion into `Aborted`
    /// and precondition failures into `NotApplicable`.
    pub fn from_result(r: Result<T>) -> Self {
        match r {
            Ok(v) => Computed::Value(v),
            Err(Error::Aborted(_)) => Computed::Aborted,
            Err(_) => Computed::NotApplicable,
        }
    }
}

impl<T: Serialize> Serialize for Computed<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Computed::Value(v) => v.serialize(s),
            Computed::NotApplicable => s.serialize_none(),
            Computed::Aborted => s.serialize_str("aborted"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub max_clique: Option<Vec<usize>>,
    pub coloring: Option<Vec<usize>>,
    pub independent_set: Option<Vec<usize>>,
    pub dominating_set: Option<Vec<usize>>,
    pub resolving_set: Option<Vec<usize>>,
    pub strong_resolving_set: Option<Vec<usize>>,
    pub imperfection: Option<OddWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub component_count: usize,
    pub diameter: Computed<Extent>,
    pub girth: Extent,
    pub is_complete: bool,
    pub is_null: bool,
    pub is_regular: bool,
    pub is_bipartite: bool,
    pub is_tree: bool,
    pub is_star: bool,
    pub is_eulerian: bool,
    pub degrees: Vec<usize>,
    pub clique_number: Computed<usize>,
    pub chromatic_number: Computed<usize>,
    pub independence_number: Computed<usize>,
    pub domination_number: Computed<usize>,
    pub metric_dimension: Computed<usize>,
    pub metric_dimension_lower_bound: Computed<usize>,
    pub strong_metric_dimension: Computed<usize>,
    pub planar: bool,
    pub perfect: Computed<bool>,
    pub witnesses: Witnesses,
}

/// An [`InvariantReport`] together with the full results of the searches
/// whose details the report only summarizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub report: InvariantReport,
    pub metric: Computed<MetricDimension>,
    pub strong: Computed<StrongMetricDimension>,
    pub perfect: Computed<PerfectResult>,
}

/// Computes every invariant of `g`, each under its own budget.
pub fn analyze(g: &Graph, budget: Budget) -> InvariantReport {
    analyze_detailed(g, budget).report
}

pub fn analyze_detailed(g: &Graph, budget: Budget) -> Analysis {
    let n = g.vertex_count();
    let conn = connectivity_and_diameter(g);
    let degrees = g.degrees();
    let edges = g.edge_count();
    let connected = conn.connected();

    let clique = Computed::from_result(max_clique(g, &mut budget.start("clique number")));
    let omega = clique.clone().map(|c| c.len());
    let coloring = match omega.value() {
        Some(&w) => Computed::from_result(chromatic_number(g, w, &mut budget.start("chromatic number"))),
        None => Computed::Aborted,
    };
    let independent =
        Computed::from_result(max_clique(&g.complement(), &mut budget.start("independence number")));
    let dominating = if n == 0 {
        Computed::NotApplicable
    } else {
        Computed::from_result(domination_number(g, &mut budget.start("domination number")))
    };
    let metric = if connected && n >= 2 {
        Computed::from_result(metric_dimension(g, &mut budget.start("metric dimension")))
    } else {
        Computed::NotApplicable
    };
    let strong = if connected && n >= 2 {
        Computed::from_result(strong_metric_dimension(g, &mut budget.start("strong metric dimension")))
    } else {
        Computed::NotApplicable
    };
    let perfect = Computed::from_result(is_perfect(g, &mut budget.start("perfectness")));

    let is_tree = connected && n >= 1 && edges + 1 == n;
    let report = InvariantReport {
        vertex_count: n,
        edge_count: edges,
        connected,
        component_count: conn.components.len(),
        diameter: match conn.diameter {
            Some(d) => Computed::Value(d),
            None => Computed::NotApplicable,
        },
        girth: girth(g),
        is_complete: edges == n * n.saturating_sub(1) / 2,
        is_null: edges == 0,
        is_regular: degrees.windows(2).all(|w| w[0] == w[1]),
        is_bipartite: is_bipartite(g),
        is_tree,
        is_star: is_tree && n >= 2 && degrees.iter().any(|&d| d == n - 1),
        is_eulerian: connected && n >= 1 && degrees.iter().all(|d| d % 2 == 0),
        degrees,
        clique_number: omega,
        chromatic_number: coloring.clone().map(|c| c.iter().copied().max().map_or(0, |m| m + 1)),
        independence_number: independent.clone().map(|s| s.len()),
        domination_number: dominating.clone().map(|s| s.len()),
        metric_dimension: metric.clone().map(|m| m.value),
        metric_dimension_lower_bound: metric.clone().map(|m| m.lower_bound),
        strong_metric_dimension: strong.clone().map(|s| s.value),
        planar: is_planar(g),
        perfect: perfect.clone().map(|p| p.perfect),
        witnesses: Witnesses {
            max_clique: clique.value().cloned(),
            coloring: coloring.value().cloned(),
            independent_set: independent.value().cloned(),
            dominating_set: dominating.value().cloned(),
            resolving_set: metric.value().map(|m| m.witness.clone()),
            strong_resolving_set: strong.value().and_then(|s| s.witness.clone()),
            imperfection: perfect.value().and_then(|p| p.witness.clone()),
        },
    };
    Analysis {
        report,
        metric,
        strong,
        perfect,
    }
}

/// Two-colorability by BFS.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = vec![s];
        while let Some(u) = queue.pop() {
            for v in g.neighbors(u).iter() {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    queue.push(v);
                } else if side[v] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `set` is a clique of `g`.
pub fn is_clique(g: &Graph, set: VertexSet) -> bool {
    set.iter().all(|v| set.difference(VertexSet::singleton(v)).is_subset(g.neighbors(v)))
}
