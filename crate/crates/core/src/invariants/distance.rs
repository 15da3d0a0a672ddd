use super::Extent;
use crate::graph::Graph;

/// Marker for unreachable pairs in distance tables.
pub const UNREACHABLE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub components: Vec<Vec<usize>>,
    /// `None` for the empty graph; infinite when there are two or more
    /// components.
    pub diameter: Option<Extent>,
}

impl Connectivity {
    pub fn connected(&self) -> bool {
        self.components.len() == 1
    }
}

/// BFS distances from `source`; [`UNREACHABLE`] marks other components.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    dist[source] = 0;
    let mut frontier = crate::bitset::VertexSet::singleton(source);
    let mut seen = frontier;
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = crate::bitset::VertexSet::empty();
        for u in frontier.iter() {
            next = next.union(g.neighbors(u));
        }
        next = next.difference(seen);
        for v in next.iter() {
            dist[v] = d;
        }
        seen = seen.union(next);
        frontier = next;
    }
    dist
}

pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        if seen[s] {
            continue;
        }
        let comp: Vec<usize> = bfs_distances(g, s)
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d != UNREACHABLE)
            .map(|(v, _)| v)
            .collect();
        for &v in &comp {
            seen[v] = true;
        }
        out.push(comp);
    }
    out
}

pub fn connectivity_and_diameter(g: &Graph) -> Connectivity {
    let components = components(g);
    let diameter = match components.len() {
        0 => None,
        1 => Some(Extent::Finite(DistanceMatrix::new(g).diameter())),
        _ => Some(Extent::Infinite),
    };
    Connectivity {
        components,
        diameter,
    }
}

/// All-pairs shortest path lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<usize>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut dist = Vec::with_capacity(n * n);
        for s in 0..n {
            dist.extend(bfs_distances(g, s));
        }
        Self { n, dist }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> usize {
        self.dist.iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0)
    }
}

/// Length of a shortest cycle. A BFS from every vertex: a non-tree edge
/// `(u, v)` closes a closed walk of length `d(u) + d(v) + 1`, and the
/// minimum over all roots is the girth.
pub fn girth(g: &Graph) -> Extent {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    for root in 0..n {
        let mut dist = vec![UNREACHABLE; n];
        let mut parent = vec![UNREACHABLE; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for v in g.neighbors(u).iter() {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Extent::Infinite
    } else {
        Extent::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_cycle() {
        let p = Graph::path(4);
        assert_eq!(bfs_distances(&p, 0), vec![0, 1, 2, 3]);
        assert_eq!(connectivity_and_diameter(&p).diameter, Some(Extent::Finite(3)));
        assert_eq!(girth(&p), Extent::Infinite);
        for n in 3..9 {
            assert_eq!(girth(&Graph::cycle(n)), Extent::Finite(n));
        }
        assert_eq!(girth(&Graph::complete(4)), Extent::Finite(3));
    }

    #[test]
    fn disconnected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]);
        let c = connectivity_and_diameter(&g);
        assert_eq!(c.components, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(c.diameter, Some(Extent::Infinite));
        assert_eq!(bfs_distances(&g, 0)[3], UNREACHABLE);
        assert_eq!(connectivity_and_diameter(&Graph::empty(0)).diameter, None);
        assert_eq!(connectivity_and_diameter(&Graph::empty(1)).diameter, Some(Extent::Finite(0)));
    }

    #[test]
    fn girth_of_cycle_with_pendant_tree() {
        let mut g = Graph::cycle(5);
        let mut big = Graph::empty(8);
        for (u, v) in g.edges().collect::<Vec<_>>() {
            big.add_edge(u, v);
        }
        big.add_edge(0, 5);
        big.add_edge(5, 6);
        big.add_edge(6, 7);
        g = big;
        assert_eq!(girth(&g), Extent::Finite(5));
    }
}
