//! Exact chromatic number by iterative deepening over DSATUR backtracking.

use super::Deadline;
use crate::error::Result;
use crate::graph::Graph;

/// A minimum proper coloring (colors `0..χ`). The search starts at
/// `lower`, which must be a valid lower bound such as the clique number.
pub fn chromatic_number(g: &Graph, lower: usize, deadline: &mut Deadline) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    for k in lower.max(1)..upper {
        if let Some(coloring) = k_coloring(g, k, deadline)? {
            return Ok(coloring);
        }
    }
    Ok(greedy)
}

pub fn is_proper_coloring(g: &Graph, coloring: &[usize]) -> bool {
    coloring.len() == g.vertex_count() && g.edges().all(|(u, v)| coloring[u] != coloring[v])
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn k_coloring(g: &Graph, k: usize, deadline: &mut Deadline) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut state = State::new(g);
    Ok(if state.backtrack(k, 0, deadline)? {
        Some(state.color)
    } else {
        None
    })
}

const NONE: usize = usize::MAX;

struct State<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    /// Per vertex, the colors used on its neighbors (one bit per color).
    forbidden: Vec<u128>,
}

impl<'a> State<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        Self {
            g,
            color: vec![NONE; n],
            forbidden: vec![0; n],
        }
    }

    /// Uncolored vertex with the most distinct neighbor colors, then the
    /// most uncolored neighbors, then the lowest index.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, usize, usize)> = None;
        for v in 0..self.g.vertex_count() {
            if self.color[v] != NONE {
                continue;
            }
            let sat = self.forbidden[v].count_ones();
            let deg = self
                .g
                .neighbors(v)
                .iter()
                .filter(|&u| self.color[u] == NONE)
                .count();
            if best.is_none_or(|(s, d, _)| (sat, deg) > (s, d)) {
                best = Some((sat, deg, v));
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn assign(&mut self, v: usize, c: usize) -> Vec<usize> {
        self.color[v] = c;
        let mut changed = Vec::new();
        for u in self.g.neighbors(v).iter() {
            if self.forbidden[u] & (1 << c) == 0 {
                self.forbidden[u] |= 1 << c;
                changed.push(u);
            }
        }
        changed
    }

    fn unassign(&mut self, v: usize, c: usize, changed: Vec<usize>) {
        self.color[v] = NONE;
        for u in changed {
            self.forbidden[u] &= !(1 << c);
        }
    }

    /// `used` is the number of colors in use; a new color is only ever
    /// opened as color `used`, which removes color-permutation symmetry.
    fn backtrack(&mut self, k: usize, used: usize, deadline: &mut Deadline) -> Result<bool> {
        deadline.tick()?;
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        for c in 0..(used + 1).min(k) {
            if self.forbidden[v] & (1 << c) != 0 {
                continue;
            }
            let changed = self.assign(v, c);
            if self.backtrack(k, used.max(c + 1), deadline)? {
                return Ok(true);
            }
            self.unassign(v, c, changed);
        }
        Ok(false)
    }
}

/// DSATUR without backtracking; always proper, used as the upper bound.
fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let mut state = State::new(g);
    while let Some(v) = state.pick() {
        let c = (!state.forbidden[v]).trailing_zeros() as usize;
        state.assign(v, c);
    }
    state.color
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(g: &Graph) -> usize {
        let c = chromatic_number(g, 0, &mut Deadline::unlimited("test")).unwrap();
        assert!(is_proper_coloring(g, &c));
        c.iter().max().map_or(0, |m| m + 1)
    }

    #[test]
    fn classic_values() {
        assert_eq!(chi(&Graph::empty(0)), 0);
        assert_eq!(chi(&Graph::empty(4)), 1);
        assert_eq!(chi(&Graph::path(3)), 2);
        assert_eq!(chi(&Graph::cycle(6)), 2);
        assert_eq!(chi(&Graph::cycle(7)), 3);
        assert_eq!(chi(&Graph::complete(5)), 5);
        // complement of C7 needs 4 colors
        assert_eq!(chi(&Graph::cycle(7).complement()), 4);
    }

    #[test]
    fn mycielski_grotzsch_graph() {
        // triangle-free with chromatic number 4
        let mut g = Graph::cycle(5);
        let mut big = Graph::empty(11);
        for (u, v) in g.edges().collect::<Vec<_>>() {
            big.add_edge(u, v);
            big.add_edge(u + 5, v);
            big.add_edge(u, v + 5);
        }
        for i in 5..10 {
            big.add_edge(i, 10);
        }
        g = big;
        assert_eq!(chi(&g), 4);
        assert_eq!(k_coloring(&g, 3, &mut Deadline::unlimited("test")).unwrap(), None);
    }
}
