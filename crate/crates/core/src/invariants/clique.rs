//! Maximum clique by branch and bound with greedy-coloring bounds.

use super::Deadline;
use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;

/// A maximum clique, sorted by vertex index.
pub fn max_clique(g: &Graph, deadline: &mut Deadline) -> Result<Vec<usize>> {
    let mut search = Search {
        g,
        best: Vec::new(),
        current: Vec::new(),
        deadline,
    };
    search.expand(g.vertices())?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

pub fn clique_number(g: &Graph, deadline: &mut Deadline) -> Result<usize> {
    Ok(max_clique(g, deadline)?.len())
}

/// Maximum independent set, computed as a maximum clique of the complement.
pub fn independence_number(g: &Graph, deadline: &mut Deadline) -> Result<Vec<usize>> {
    max_clique(&g.complement(), deadline)
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    deadline: &'a mut Deadline,
}

impl Search<'_> {
    fn expand(&mut self, mut candidates: VertexSet) -> Result<()> {
        self.deadline.tick()?;
        let (order, bounds) = self.color_sort(candidates);
        for i in (0..order.len()).rev() {
            if self.current.len() + bounds[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            self.current.push(v);
            let next = candidates.intersection(self.g.neighbors(v));
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            candidates.remove(v);
        }
        Ok(())
    }

    /// Greedy sequential coloring of `candidates`; returns the vertices in
    /// nondecreasing color order together with each vertex's color number
    /// (1-based), an upper bound on any clique among the vertices up to it.
    fn color_sort(&self, candidates: VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(candidates.len());
        let mut bounds = Vec::with_capacity(candidates.len());
        let mut uncolored = candidates;
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut available = uncolored;
            while let Some(v) = available.first() {
                available.remove(v);
                available = available.difference(self.g.neighbors(v));
                uncolored.remove(v);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::is_clique;

    fn omega(g: &Graph) -> usize {
        clique_number(g, &mut Deadline::unlimited("test")).unwrap()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(omega(&Graph::empty(0)), 0);
        assert_eq!(omega(&Graph::empty(3)), 1);
        assert_eq!(omega(&Graph::complete(6)), 6);
        assert_eq!(omega(&Graph::cycle(5)), 2);
        assert_eq!(omega(&Graph::path(3)), 2);
    }

    #[test]
    fn witness_is_a_clique() {
        let mut g = Graph::cycle(7);
        for (u, v) in [(0, 2), (0, 3), (1, 3), (2, 3), (3, 5)] {
            g.add_edge(u, v);
        }
        let c = max_clique(&g, &mut Deadline::unlimited("test")).unwrap();
        assert_eq!(c.len(), 4);
        assert!(is_clique(&g, c.iter().copied().collect()));
    }

    #[test]
    fn independence_of_cycle() {
        let s = independence_number(&Graph::cycle(7), &mut Deadline::unlimited("test")).unwrap();
        assert_eq!(s.len(), 3);
    }
}
