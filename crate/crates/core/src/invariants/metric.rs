//! Metric and strong metric dimension.

use std::collections::HashSet;

use serde::Serialize;

use super::distance::UNREACHABLE;
use super::{max_clique, Combinations, Deadline, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{quotient_graph, Graph};

/// Largest graph on which the strong metric dimension is brute forced.
pub const SDIM_BRUTE_FORCE_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricDimension {
    pub value: usize,
    /// The lexicographically first minimum resolving set.
    pub witness: Vec<usize>,
    /// Least `k` with `k + diam^k >= |V|`.
    pub lower_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongMetricDimension {
    pub value: usize,
    /// Exhaustive search result, when `|V| <= SDIM_BRUTE_FORCE_LIMIT`.
    pub brute_force: Option<usize>,
    /// `|V| - ω(quotient)`, when the diameter is at most 2.
    pub quotient_formula: Option<usize>,
    pub witness: Option<Vec<usize>>,
}

fn require_connected(g: &Graph, what: &'static str) -> Result<DistanceMatrix> {
    let d = DistanceMatrix::new(g);
    let n = g.vertex_count();
    if n < 2 || (0..n).any(|v| d.get(0, v) == UNREACHABLE) {
        return Err(Error::Disconnected(what));
    }
    Ok(d)
}

/// Least positive `k` with `k + d^k >= m`.
pub fn metric_dimension_lower_bound(m: usize, d: usize) -> usize {
    (1..=m.max(1))
        .find(|&k| {
            let power = u32::try_from(k)
                .ok()
                .and_then(|k| (d as u128).checked_pow(k))
                .unwrap_or(u128::MAX);
            (k as u128).saturating_add(power) >= m as u128
        })
        .unwrap_or(m)
}

/// Whether the distance vectors to `set` separate every pair of vertices.
pub fn resolves(d: &DistanceMatrix, set: &[usize]) -> bool {
    let n = d.vertex_count();
    let bits = usize::BITS - d.diameter().leading_zeros();
    if (bits as usize) * set.len() <= 128 {
        let mut seen = HashSet::with_capacity(n);
        (0..n).all(|v| {
            let key = set
                .iter()
                .fold(0u128, |acc, &w| (acc << bits) | d.get(v, w) as u128);
            seen.insert(key)
        })
    } else {
        let mut seen = HashSet::with_capacity(n);
        (0..n).all(|v| seen.insert(set.iter().map(|&w| d.get(v, w)).collect::<Vec<_>>()))
    }
}

/// Minimum resolving set by increasing-size subset search.
pub fn metric_dimension(g: &Graph, deadline: &mut Deadline) -> Result<MetricDimension> {
    let d = require_connected(g, "metric dimension")?;
    let n = g.vertex_count();
    let lower_bound = metric_dimension_lower_bound(n, d.diameter());
    for k in 1..=n {
        let mut subsets = Combinations::new(n, k);
        while let Some(s) = subsets.next_subset() {
            deadline.tick()?;
            if resolves(&d, s) {
                return Ok(MetricDimension {
                    value: k,
                    witness: s.to_vec(),
                    lower_bound,
                });
            }
        }
    }
    unreachable!("the full vertex set resolves a connected graph")
}

/// `w` strongly resolves `u, v` when one of them lies on a shortest path
/// from the other to `w`.
pub fn strongly_resolves(d: &DistanceMatrix, w: usize, u: usize, v: usize) -> bool {
    d.get(u, w) == d.get(u, v) + d.get(v, w) || d.get(v, w) == d.get(v, u) + d.get(u, w)
}

/// Exhaustive strong metric dimension for graphs with at most
/// [`SDIM_BRUTE_FORCE_LIMIT`] vertices.
pub fn strong_metric_dimension_brute_force(
    g: &Graph,
    deadline: &mut Deadline,
) -> Result<Vec<usize>> {
    let d = require_connected(g, "strong metric dimension")?;
    let n = g.vertex_count();
    if n > SDIM_BRUTE_FORCE_LIMIT {
        return Err(Error::GraphTooLarge {
            operation: "brute-force strong metric dimension",
            vertices: n,
            limit: SDIM_BRUTE_FORCE_LIMIT,
        });
    }
    // per pair, the mask of vertices strongly resolving it
    let mut pair_masks = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let mask = (0..n)
                .filter(|&w| strongly_resolves(&d, w, u, v))
                .fold(0u32, |m, w| m | (1 << w));
            pair_masks.push(mask);
        }
    }
    for k in 1..=n {
        let mut subsets = Combinations::new(n, k);
        while let Some(s) = subsets.next_subset() {
            deadline.tick()?;
            let set = s.iter().fold(0u32, |m, &w| m | (1 << w));
            if pair_masks.iter().all(|&p| p & set != 0) {
                return Ok(s.to_vec());
            }
        }
    }
    unreachable!("the full vertex set strongly resolves a connected graph")
}

/// `|V| - ω(Ĝ)` for connected graphs of diameter at most 2.
pub fn strong_metric_dimension_by_quotient(g: &Graph, deadline: &mut Deadline) -> Result<usize> {
    let d = require_connected(g, "strong metric dimension")?;
    if d.diameter() > 2 {
        return Err(Error::Precondition(
            "the quotient formula needs diameter at most 2".into(),
        ));
    }
    let q = quotient_graph(g);
    Ok(g.vertex_count() - max_clique(&q.graph, deadline)?.len())
}

/// Runs both routes where they apply. The reported value comes from the
/// brute force when available; otherwise from the quotient formula.
pub fn strong_metric_dimension(g: &Graph, deadline: &mut Deadline) -> Result<StrongMetricDimension> {
    let d = require_connected(g, "strong metric dimension")?;
    let n = g.vertex_count();
    let quotient_formula = if d.diameter() <= 2 {
        Some(strong_metric_dimension_by_quotient(g, deadline)?)
    } else {
        None
    };
    let witness = if n <= SDIM_BRUTE_FORCE_LIMIT {
        Some(strong_metric_dimension_brute_force(g, deadline)?)
    } else {
        None
    };
    let brute_force = witness.as_ref().map(Vec::len);
    let value = match brute_force.or(quotient_formula) {
        Some(v) => v,
        None => {
            return Err(Error::GraphTooLarge {
                operation: "strong metric dimension beyond diameter 2",
                vertices: n,
                limit: SDIM_BRUTE_FORCE_LIMIT,
            })
        }
    };
    Ok(StrongMetricDimension {
        value,
        brute_force,
        quotient_formula,
        witness,
    })
}
