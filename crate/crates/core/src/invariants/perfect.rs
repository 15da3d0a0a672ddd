//! Perfectness via odd holes and odd antiholes, plus the definitional
//! check used to cross-validate it.

use serde::Serialize;

use super::{chromatic_number, max_clique, Deadline};
use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// Induced odd cycle of length at least 5 in the graph.
    OddHole,
    /// Induced odd cycle of length at least 5 in the complement.
    OddAntihole,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddWitness {
    pub kind: WitnessKind,
    /// Vertices in cycle order.
    pub cycle: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectResult {
    pub perfect: bool,
    pub witness: Option<OddWitness>,
}

pub fn is_perfect(g: &Graph, deadline: &mut Deadline) -> Result<PerfectResult> {
    if let Some(cycle) = find_odd_hole(g, deadline)? {
        return Ok(PerfectResult {
            perfect: false,
            witness: Some(OddWitness {
                kind: WitnessKind::OddHole,
                cycle,
            }),
        });
    }
    if let Some(cycle) = find_odd_hole(&g.complement(), deadline)? {
        return Ok(PerfectResult {
            perfect: false,
            witness: Some(OddWitness {
                kind: WitnessKind::OddAntihole,
                cycle,
            }),
        });
    }
    Ok(PerfectResult {
        perfect: true,
        witness: None,
    })
}

/// An induced cycle of odd length at least 5, found by extending induced
/// paths from each start vertex through higher-numbered vertices only.
pub fn find_odd_hole(g: &Graph, deadline: &mut Deadline) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    for start in 0..n {
        let above = VertexSet::full(n).difference(VertexSet::full(start + 1));
        let mut path = vec![start];
        for first in g.neighbors(start).intersection(above).iter() {
            path.push(first);
            // vertices adjacent to an interior path vertex can never join
            let blocked = VertexSet::singleton(start).union(VertexSet::singleton(first));
            if extend(g, above, &mut path, blocked, deadline)? {
                return Ok(Some(path));
            }
            path.pop();
        }
    }
    Ok(None)
}

/// `path` is an induced path `p0 .. pk` (k >= 1). `blocked` holds the path
/// and the neighbors of `p1 .. p(k-1)`.
fn extend(
    g: &Graph,
    allowed: VertexSet,
    path: &mut Vec<usize>,
    blocked: VertexSet,
    deadline: &mut Deadline,
) -> Result<bool> {
    deadline.tick()?;
    let start = path[0];
    let last = *path.last().expect("path is non-empty");
    let candidates = g.neighbors(last).intersection(allowed).difference(blocked);
    let closing = candidates.intersection(g.neighbors(start));
    // a closing vertex makes a cycle of length path.len() + 1
    if path.len() + 1 >= 5 && (path.len() + 1) % 2 == 1 {
        if let Some(v) = closing.first() {
            path.push(v);
            return Ok(true);
        }
    }
    let next_blocked = blocked.union(g.neighbors(last)).union(VertexSet::singleton(last));
    for v in candidates.difference(closing).iter() {
        path.push(v);
        if extend(g, allowed, path, next_blocked.union(VertexSet::singleton(v)), deadline)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

/// Perfectness by definition: `ω(H) = χ(H)` for every induced subgraph
/// `H`. Exponential in `|V|`.
pub fn perfect_by_definition(g: &Graph, deadline: &mut Deadline) -> Result<bool> {
    let n = g.vertex_count();
    assert!(n <= 24, "definitional perfectness is limited to 24 vertices");
    for mask in 1u32..(1u32 << n) {
        let vertices: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = g.induced_subgraph(&vertices);
        let omega = max_clique(&h, deadline)?.len();
        let coloring = chromatic_number(&h, omega, deadline)?;
        let chi = coloring.iter().max().map_or(0, |m| m + 1);
        if chi != omega {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dl() -> Deadline {
        Deadline::unlimited("test")
    }

    fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
        let k = cycle.len();
        g.induced_subgraph(cycle) == Graph::cycle(k)
    }

    #[test]
    fn odd_holes() {
        for k in [5, 7, 9] {
            let hole = find_odd_hole(&Graph::cycle(k), &mut dl()).unwrap().unwrap();
            assert_eq!(hole.len(), k);
        }
        assert!(find_odd_hole(&Graph::cycle(6), &mut dl()).unwrap().is_none());
        assert!(find_odd_hole(&Graph::complete(6), &mut dl()).unwrap().is_none());
    }

    #[test]
    fn hole_inside_larger_graph() {
        // C7 plus a chord-free pendant and a vertex seeing two cycle vertices
        let mut g = Graph::empty(9);
        for i in 0..7 {
            g.add_edge(i, (i + 1) % 7);
        }
        g.add_edge(7, 0);
        g.add_edge(8, 1);
        g.add_edge(8, 3);
        let hole = find_odd_hole(&g, &mut dl()).unwrap().unwrap();
        assert!(hole.len() >= 5 && hole.len() % 2 == 1);
        assert!(is_induced_cycle(&g, &hole));
    }

    #[test]
    fn perfectness() {
        let r = is_perfect(&Graph::cycle(5), &mut dl()).unwrap();
        assert!(!r.perfect);
        assert_eq!(r.witness.unwrap().kind, WitnessKind::OddHole);
        let r = is_perfect(&Graph::cycle(7).complement(), &mut dl()).unwrap();
        assert_eq!(r.witness.unwrap().kind, WitnessKind::OddAntihole);
        assert!(is_perfect(&Graph::cycle(6), &mut dl()).unwrap().perfect);
        assert!(is_perfect(&Graph::empty(3), &mut dl()).unwrap().perfect);
    }

    #[test]
    fn definition_agrees_on_small_graphs() {
        assert!(!perfect_by_definition(&Graph::cycle(5), &mut dl()).unwrap());
        assert!(perfect_by_definition(&Graph::cycle(4), &mut dl()).unwrap());
        assert!(perfect_by_definition(&Graph::path(5), &mut dl()).unwrap());
    }
}
