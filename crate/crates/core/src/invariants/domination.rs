use super::{Combinations, Deadline};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A minimum dominating set, the lexicographically first of its size.
pub fn domination_number(g: &Graph, deadline: &mut Deadline) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::Precondition("domination number of the empty graph".into()));
    }
    let closed: Vec<VertexSet> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    let all = g.vertices();
    for k in 1..=n {
        let mut subsets = Combinations::new(n, k);
        while let Some(s) = subsets.next_subset() {
            deadline.tick()?;
            let covered = s.iter().fold(VertexSet::empty(), |acc, &v| acc.union(closed[v]));
            if covered == all {
                return Ok(s.to_vec());
            }
        }
    }
    unreachable!("the full vertex set dominates")
}

pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .fold(VertexSet::empty(), |acc, &v| acc.union(g.closed_neighborhood(v)))
        == g.vertices()
}
