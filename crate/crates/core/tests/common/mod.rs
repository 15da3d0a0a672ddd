//! Slow, independent reference implementations used to cross-check the
//! library. Nothing here calls into the algorithms it checks.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use idealgraph::semigroup::enumerate_semigroups;
use idealgraph::{all_left_ideals, build_gamma, CayleyTable, Graph};

pub type Edges = Vec<(usize, usize)>;

/// A plain adjacency-matrix graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Adj {
    pub n: usize,
    pub m: Vec<Vec<bool>>,
}

impl Adj {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut m = vec![vec![false; n]; n];
        for &(u, v) in edges {
            m[u][v] = true;
            m[v][u] = true;
        }
        Self { n, m }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let edges: Edges = g.edges().collect();
        Self::new(g.vertex_count(), &edges)
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, self.edges())
    }

    pub fn edges(&self) -> Edges {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.m[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.m[v].iter().filter(|&&b| b).count()
    }

    pub fn induced(&self, vs: &[usize]) -> Adj {
        let m = vs.iter().map(|&u| vs.iter().map(|&v| self.m[u][v]).collect()).collect();
        Adj { n: vs.len(), m }
    }
}

// ---------- semigroups ----------

pub fn naive_associative(n: usize, cells: &[usize]) -> bool {
    let p = |a: usize, b: usize| cells[a * n + b];
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| p(p(a, b), c) == p(a, p(b, c)))))
}

/// Counts associative tables among all `n^(n^2)` binary operations.
pub fn brute_force_semigroup_count(n: usize) -> usize {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut table = vec![0; cells];
    let mut count = 0;
    for mut code in 0..total {
        for c in table.iter_mut() {
            *c = code % n;
            code /= n;
        }
        count += naive_associative(n, &table) as usize;
    }
    count
}

/// Every nonempty subset closed under left multiplication.
pub fn subset_filter_ideals(t: &CayleyTable) -> Vec<BTreeSet<usize>> {
    let n = t.order();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let set: BTreeSet<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
        if (0..n).all(|s| set.iter().all(|&i| set.contains(&t.product(s, i)))) {
            out.push(set);
        }
    }
    out
}

pub fn naive_zero(t: &CayleyTable) -> Option<usize> {
    let n = t.order();
    (0..n).find(|&z| (0..n).all(|x| t.product(z, x) == z && t.product(x, z) == z))
}

/// The ideal graph from first principles: nontrivial ideals are neither
/// `S` nor `{zero}`, adjacency is an intersection that is neither empty
/// nor `{zero}`. Vertices are sorted by size, then lexicographically.
pub fn naive_gamma(t: &CayleyTable) -> (Vec<BTreeSet<usize>>, Adj) {
    let n = t.order();
    let zero = naive_zero(t);
    let full: BTreeSet<usize> = (0..n).collect();
    let trivial = |s: &BTreeSet<usize>| s.is_empty() || zero.is_some_and(|z| s.len() == 1 && s.contains(&z));
    let mut vertices: Vec<BTreeSet<usize>> = subset_filter_ideals(t)
        .into_iter()
        .filter(|s| *s != full && !trivial(s))
        .collect();
    vertices.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let meet: BTreeSet<usize> = vertices[i].intersection(&vertices[j]).copied().collect();
            if !trivial(&meet) {
                edges.push((i, j));
            }
        }
    }
    let adj = Adj::new(vertices.len(), &edges);
    (vertices, adj)
}

/// Distinct ideal graphs (by adjacency matrix in library vertex order)
/// arising from all semigroups of the given orders, restricted to at most
/// `max_vertices` vertices.
pub fn corpus_graphs(orders: std::ops::RangeInclusive<usize>, max_vertices: usize) -> Vec<Adj> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for k in orders {
        for t in enumerate_semigroups(k).unwrap() {
            let g = build_gamma(&all_left_ideals(&t).unwrap()).unwrap().graph;
            if g.vertex_count() <= max_vertices {
                let a = Adj::from_graph(&g);
                if seen.insert(a.clone()) {
                    out.push(a);
                }
            }
        }
    }
    out
}

// ---------- graph basics ----------

pub fn bfs(g: &Adj, s: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; g.n];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for v in 0..g.n {
            if g.m[u][v] && d[v].is_none() {
                d[v] = Some(d[u].unwrap() + 1);
                q.push_back(v);
            }
        }
    }
    d
}

pub fn all_distances(g: &Adj) -> Vec<Vec<Option<usize>>> {
    (0..g.n).map(|s| bfs(g, s)).collect()
}

pub fn connected(g: &Adj) -> bool {
    g.n == 0 || bfs(g, 0).iter().all(Option::is_some)
}

/// Diameter of a connected graph.
pub fn diameter(g: &Adj) -> usize {
    all_distances(g).iter().flatten().map(|d| d.unwrap()).max().unwrap_or(0)
}

/// Shortest cycle length, found by checking every vertex sequence.
pub fn girth(g: &Adj) -> Option<usize> {
    fn extend(g: &Adj, path: &mut Vec<usize>, len: usize) -> bool {
        if path.len() == len {
            return g.m[*path.last().unwrap()][path[0]];
        }
        for v in path[0] + 1..g.n {
            if !path.contains(&v) && g.m[*path.last().unwrap()][v] {
                path.push(v);
                if extend(g, path, len) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (3..=g.n).find(|&len| (0..g.n).any(|s| extend(g, &mut vec![s], len)))
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn is_clique(g: &Adj, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| g.m[u][v]))
}

pub fn clique_number(g: &Adj) -> usize {
    (1..=g.n).rev().find(|&k| subsets(g.n, k).iter().any(|s| is_clique(g, s))).unwrap_or(0)
}

pub fn independence_number(g: &Adj) -> usize {
    let comp = Adj {
        n: g.n,
        m: (0..g.n).map(|u| (0..g.n).map(|v| u != v && !g.m[u][v]).collect()).collect(),
    };
    clique_number(&comp)
}

fn colorable(g: &Adj, k: usize, colors: &mut Vec<usize>) -> bool {
    let v = colors.len();
    if v == g.n {
        return true;
    }
    for c in 0..k {
        if (0..v).all(|u| !g.m[u][v] || colors[u] != c) {
            colors.push(c);
            if colorable(g, k, colors) {
                return true;
            }
            colors.pop();
        }
    }
    false
}

pub fn chromatic_number(g: &Adj) -> usize {
    (0..=g.n).find(|&k| colorable(g, k, &mut Vec::new())).unwrap()
}

pub fn domination_number(g: &Adj) -> usize {
    (1..=g.n)
        .find(|&k| {
            subsets(g.n, k)
                .iter()
                .any(|s| (0..g.n).all(|v| s.contains(&v) || s.iter().any(|&u| g.m[u][v])))
        })
        .unwrap_or(0)
}

pub fn metric_dimension(g: &Adj) -> usize {
    let d = all_distances(g);
    (1..=g.n)
        .find(|&k| {
            subsets(g.n, k).iter().any(|s| {
                let vecs: HashSet<Vec<Option<usize>>> =
                    (0..g.n).map(|v| s.iter().map(|&w| d[v][w]).collect()).collect();
                vecs.len() == g.n
            })
        })
        .unwrap()
}

pub fn strong_metric_dimension(g: &Adj) -> usize {
    let d: Vec<Vec<usize>> = all_distances(g)
        .into_iter()
        .map(|r| r.into_iter().map(Option::unwrap).collect())
        .collect();
    let resolves = |w: usize, u: usize, v: usize| {
        d[u][w] == d[u][v] + d[v][w] || d[v][w] == d[v][u] + d[u][w]
    };
    (1..=g.n)
        .find(|&k| {
            subsets(g.n, k).iter().any(|s| {
                (0..g.n).all(|u| (u + 1..g.n).all(|v| s.iter().any(|&w| resolves(w, u, v))))
            })
        })
        .unwrap()
}

/// Perfect by definition: every induced subgraph has omega = chi.
pub fn perfect(g: &Adj) -> bool {
    (1..1u32 << g.n).all(|mask| {
        let vs: Vec<usize> = (0..g.n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = g.induced(&vs);
        clique_number(&h) == chromatic_number(&h)
    })
}

// ---------- planarity ----------

/// Searches for a subdivision of K5 or K3,3: branch vertices joined by
/// internally vertex-disjoint paths.
pub fn has_kuratowski_subdivision(g: &Adj) -> bool {
    let k5: Vec<(usize, usize)> = subsets(5, 2).into_iter().map(|p| (p[0], p[1])).collect();
    for branch in subsets(g.n, 5) {
        if branch.iter().all(|&v| g.degree(v) >= 4) && routes(g, &branch, &k5) {
            return true;
        }
    }
    let k33: Vec<(usize, usize)> =
        (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    for six in subsets(g.n, 6) {
        if !six.iter().all(|&v| g.degree(v) >= 3) {
            continue;
        }
        // sides containing six[0], to count each bipartition once
        for rest in subsets(5, 2) {
            let left = [six[0], six[rest[0] + 1], six[rest[1] + 1]];
            let right: Vec<usize> = six.iter().copied().filter(|v| !left.contains(v)).collect();
            let branch = [left.to_vec(), right].concat();
            if routes(g, &branch, &k33) {
                return true;
            }
        }
    }
    false
}

/// Whether every pattern edge can be realized as a path between the
/// corresponding branch vertices, with all paths internally disjoint and
/// avoiding branch vertices.
fn routes(g: &Adj, branch: &[usize], pattern: &[(usize, usize)]) -> bool {
    let mut used = vec![false; g.n];
    for &b in branch {
        used[b] = true;
    }
    route_from(g, branch, pattern, 0, &mut used)
}

fn route_from(g: &Adj, branch: &[usize], pattern: &[(usize, usize)], i: usize, used: &mut Vec<bool>) -> bool {
    if i == pattern.len() {
        return true;
    }
    let (a, b) = (branch[pattern[i].0], branch[pattern[i].1]);
    let mut path = Vec::new();
    extend_path(g, branch, pattern, i, a, b, used, &mut path)
}

#[allow(clippy::too_many_arguments)]
fn extend_path(
    g: &Adj,
    branch: &[usize],
    pattern: &[(usize, usize)],
    i: usize,
    at: usize,
    target: usize,
    used: &mut Vec<bool>,
    path: &mut Vec<usize>,
) -> bool {
    if g.m[at][target] && route_from(g, branch, pattern, i + 1, used) {
        return true;
    }
    for v in 0..g.n {
        if g.m[at][v] && !used[v] {
            used[v] = true;
            path.push(v);
            if extend_path(g, branch, pattern, i, v, target, used, path) {
                return true;
            }
            path.pop();
            used[v] = false;
        }
    }
    false
}

// ---------- automorphisms ----------

/// Counts automorphisms by trying all `n!` permutations (Heap's algorithm).
pub fn automorphism_count(g: &Adj) -> u64 {
    let n = g.n;
    let edges = g.edges();
    let is_aut = |p: &[usize]| edges.iter().all(|&(u, v)| g.m[p[u]][p[v]]);
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut count = is_aut(&p) as u64;
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            count += is_aut(&p) as u64;
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

// ---------- standard graphs ----------

pub fn complete(n: usize) -> Adj {
    Adj::new(n, &subsets(n, 2).into_iter().map(|p| (p[0], p[1])).collect::<Vec<_>>())
}

pub fn k33() -> Adj {
    Adj::new(6, &(0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect::<Vec<_>>())
}

pub fn petersen() -> Adj {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    Adj::new(10, &e)
}

/// Adjacency matrix from an edge bitmask over the pairs of `subsets(n, 2)`.
pub fn from_mask(n: usize, mask: u64) -> Adj {
    let pairs = subsets(n, 2);
    let e: Edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| (p[0], p[1]))
        .collect();
    Adj::new(n, &e)
}
