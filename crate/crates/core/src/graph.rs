//! Simple undirected graphs on at most 128 vertices, and the intersection
//! ideal graph built from a family of left ideals.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bitset::{ElementSet, VertexSet};
use crate::error::{Error, Result};
use crate::ideals::IdealFamily;

pub const MAX_VERTICES: usize = VertexSet::CAPACITY;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graphs support at most {MAX_VERTICES} vertices");
        Self {
            adj: vec![VertexSet::empty(); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            g.adj[u] = VertexSet::full(n).difference(VertexSet::singleton(u));
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut n = self.adj[v];
        n.insert(v);
        n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.len()).collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(u, a)| all.difference(*a).difference(VertexSet::singleton(u)))
                .collect(),
        }
    }

    /// The subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn induced_by_set(&self, vertices: VertexSet) -> Graph {
        self.induced_subgraph(&vertices.to_vec())
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.vertex_count()
            && (0..self.vertex_count()).all(|u| {
                let image: VertexSet = self.adj[u].iter().map(|v| perm[v]).collect();
                image == self.adj[perm[u]]
            })
    }
}

/// The intersection ideal graph: vertices are the nontrivial left ideals,
/// adjacent when their intersection is nontrivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGraph {
    pub graph: Graph,
    /// Vertex to index in `IdealFamily::all`.
    pub vertex_labels: Vec<usize>,
    /// Vertex to the ideal's elements.
    pub ideals: Vec<ElementSet>,
}

pub fn build_gamma(family: &IdealFamily) -> Result<IdealGraph> {
    let n = family.nontrivial.len();
    if n > MAX_VERTICES {
        return Err(Error::GraphTooLarge {
            operation: "the intersection ideal graph",
            vertices: n,
            limit: MAX_VERTICES,
        });
    }
    let triv = family.triviality();
    let ideals: Vec<ElementSet> = family.nontrivial.iter().map(|&i| family.ideal(i)).collect();
    let mut graph = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if triv.intersect_nontrivially(ideals[u], ideals[v]) {
                graph.add_edge(u, v);
            }
        }
    }
    Ok(IdealGraph {
        graph,
        vertex_labels: family.nontrivial.clone(),
        ideals,
    })
}

impl IdealGraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn label(&self, v: usize) -> String {
        self.ideals[v].to_string()
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.vertex_count()).map(|v| self.label(v)).collect()
    }

    pub fn vertex_of(&self, ideal: ElementSet) -> Option<usize> {
        self.ideals.iter().position(|&s| s == ideal)
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> IdealGraph {
        IdealGraph {
            graph: self.graph.induced_subgraph(vertices),
            vertex_labels: vertices.iter().map(|&v| self.vertex_labels[v]).collect(),
            ideals: vertices.iter().map(|&v| self.ideals[v]).collect(),
        }
    }

    pub fn complement(&self) -> IdealGraph {
        IdealGraph {
            graph: self.graph.complement(),
            vertex_labels: self.vertex_labels.clone(),
            ideals: self.ideals.clone(),
        }
    }

    /// Graphviz rendering with vertices named by their element lists.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph gamma {\n");
        for v in 0..self.vertex_count() {
            let _ = writeln!(out, "  \"{}\";", self.label(v));
        }
        for (u, v) in self.graph.edges() {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.label(u), self.label(v));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphDump {
        GraphDump {
            schema: 1,
            vertices: self.labels(),
            edges: self.graph.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphDump {
    pub schema: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

/// The quotient of a graph by equality of closed neighborhoods.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    /// Classes in order of their smallest member.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub graph: Graph,
}

pub fn quotient_graph(g: &Graph) -> QuotientGraph {
    let n = g.vertex_count();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![usize::MAX; n];
    for u in 0..n {
        if class_of[u] != usize::MAX {
            continue;
        }
        let nu = g.closed_neighborhood(u);
        let members: Vec<usize> = (u..n)
            .filter(|&v| class_of[v] == usize::MAX && g.closed_neighborhood(v) == nu)
            .collect();
        for &v in &members {
            class_of[v] = classes.len();
        }
        classes.push(members);
    }
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let graph = g.induced_subgraph(&reps);
    QuotientGraph {
        classes,
        class_of,
        graph,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::all_left_ideals;
    use crate::semigroup::{generate, FamilySpec};

    fn gamma(spec: FamilySpec) -> IdealGraph {
        let t = generate(&spec).unwrap();
        build_gamma(&all_left_ideals(&t).unwrap()).unwrap()
    }

    fn vertex(g: &IdealGraph, xs: &[usize]) -> usize {
        g.vertex_of(xs.iter().copied().collect()).unwrap()
    }

    #[test]
    fn right_zero_two_is_null() {
        let g = gamma(FamilySpec::RightZero(2));
        assert_eq!((g.vertex_count(), g.graph.edge_count()), (2, 0));
    }

    #[test]
    fn right_zero_three() {
        let g = gamma(FamilySpec::RightZero(3));
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.graph.edge_count(), 9);
        let mut degrees = g.graph.degrees();
        degrees.sort();
        assert_eq!(degrees, vec![2, 2, 2, 4, 4, 4]);
    }

    #[test]
    fn z6_is_a_path() {
        let g = gamma(FamilySpec::ZnMultiplication(6));
        let (a, b, c) = (vertex(&g, &[0, 3]), vertex(&g, &[0, 2, 3, 4]), vertex(&g, &[0, 2, 4]));
        assert!(g.graph.has_edge(a, b) && g.graph.has_edge(b, c));
        assert!(!g.graph.has_edge(a, c));
        assert_eq!(g.graph.edge_count(), 2);
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient_graph(&Graph::complete(5)).classes.len(), 1);
        let g = gamma(FamilySpec::RightZero(3));
        let q = quotient_graph(&g.graph);
        assert_eq!(q.classes.len(), 6);
        assert_eq!(q.graph, g.graph);
        assert_eq!(quotient_graph(&Graph::empty(2)).classes, vec![vec![0], vec![1]]);
    }

    #[test]
    fn induced_four_cycle() {
        let g = gamma(FamilySpec::RightZero(4));
        let vs = [
            vertex(&g, &[0, 1]),
            vertex(&g, &[1, 2]),
            vertex(&g, &[2, 3]),
            vertex(&g, &[0, 3]),
        ];
        let h = g.graph.induced_subgraph(&vs);
        assert_eq!(h, Graph::cycle(4));
        assert_eq!(g.graph.induced_subgraph(&[3]).edge_count(), 0);
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        assert_eq!(g.graph.induced_subgraph(&all), g.graph);
    }

    #[test]
    fn complements() {
        assert_eq!(Graph::empty(4).complement(), Graph::complete(4));
        let g = gamma(FamilySpec::RightZero(3));
        assert_eq!(g.graph.complement().complement(), g.graph);
        // the singletons are pairwise disjoint, and each misses the
        // complementary pair
        let c = g.complement();
        assert_eq!(c.graph.edge_count(), 6);
        for (single, pair) in [(0, [1, 2]), (1, [0, 2]), (2, [0, 1])] {
            assert!(c.graph.has_edge(vertex(&g, &[single]), vertex(&g, &pair)));
            assert!(c.graph.has_edge(vertex(&g, &[pair[0]]), vertex(&g, &[pair[1]])));
        }
    }

    #[test]
    fn dot_and_json() {
        let g = gamma(FamilySpec::ZnMultiplication(6));
        let dot = g.to_dot();
        assert!(dot.contains("\"{0,3}\" -- \"{0,2,3,4}\";"));
        let json = serde_json::to_value(g.to_json()).unwrap();
        assert_eq!(json["vertices"][0], "{0,3}");
        assert_eq!(json["edges"].as_array().unwrap().len(), 2);
    }
}
