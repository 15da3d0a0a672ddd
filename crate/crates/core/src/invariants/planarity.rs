use rustworkx_core::petgraph::graph::UnGraph;

use crate::graph::Graph;

/// Planarity by the left-right criterion.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    // sparse graphs with few vertices are decided without building anything
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    let edges: Vec<(u32, u32)> = g.edges().map(|(u, v)| (u as u32, v as u32)).collect();
    let mut pg = UnGraph::<(), ()>::with_capacity(n, edges.len());
    for _ in 0..n {
        pg.add_node(());
    }
    pg.extend_with_edges(edges);
    rustworkx_core::planar::is_planar(&pg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&Graph::complete(5)));
        let k33 = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v))));
        assert!(!is_planar(&k33));
        let mut k5_minus = Graph::complete(5);
        k5_minus = Graph::from_edges(5, k5_minus.edges().filter(|&e| e != (0, 1)));
        assert!(is_planar(&k5_minus));
        assert!(is_planar(&Graph::empty(1)));
        assert!(is_planar(&Graph::cycle(12)));
    }

    #[test]
    fn petersen_is_nonplanar() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        assert!(!is_planar(&Graph::from_edges(10, edges)));
    }
}
