//! Automorphism groups of small graphs, and the automorphisms of the
//! intersection graph induced by permuting minimal left ideals.
//!
//! The group is computed along a stabilizer chain. A base is read off an
//! individualization-refinement path; for each base point, candidate images
//! come from its cell in the refined partition, and each candidate outside
//! the orbit generated so far is settled by a backtracking search over
//! individualizations of the two colorings refined jointly.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, IdealGraph};
use crate::ideals::IdealFamily;
use crate::invariants::Deadline;

/// Largest graph whose automorphism group is computed.
pub const MAX_AUTOMORPHISM_VERTICES: usize = 32;

/// A permutation of `0..n`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Precondition(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Self(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }

    /// One-line cycle notation with points rendered by `label`; the identity
    /// is `()`.
    pub fn cycle_notation_with(&self, label: impl Fn(usize) -> String) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|&x| label(x)).collect();
                format!("({})", parts.join(" "))
            })
            .collect()
    }

    pub fn cycle_notation(&self) -> String {
        self.cycle_notation_with(|x| x.to_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.cycle_notation())
    }
}

/// Every permutation of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation(p.clone()));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("a larger suffix element");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismResult {
    pub vertex_count: usize,
    pub generators: Vec<Permutation>,
    /// Exact group order, the product of the basic orbit sizes.
    pub order: u128,
    pub orbit_partition: Vec<Vec<usize>>,
    pub base: Vec<usize>,
    pub basic_orbit_sizes: Vec<usize>,
}

impl AutomorphismResult {
    /// All group elements, generated by closure; fails when the order
    /// exceeds `cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        if self.order > cap as u128 {
            return Err(Error::Precondition(format!(
                "group of order {} exceeds the element cap {cap}",
                self.order
            )));
        }
        let id = Permutation::identity(self.vertex_count);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut out = vec![id];
        let mut i = 0;
        while i < out.len() {
            for g in &self.generators {
                let p = g.compose(&out[i]);
                if seen.insert(p.clone()) {
                    out.push(p);
                }
            }
            i += 1;
        }
        out.sort();
        Ok(out)
    }

    pub fn generators_cycle_notation(&self, labels: &[String]) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| g.cycle_notation_with(|x| labels[x].clone()))
            .collect()
    }
}

pub fn automorphism_group(g: &Graph, deadline: &mut Deadline) -> Result<AutomorphismResult> {
    let n = g.vertex_count();
    if n > MAX_AUTOMORPHISM_VERTICES {
        return Err(Error::GraphTooLarge {
            operation: "automorphism group computation",
            vertices: n,
            limit: MAX_AUTOMORPHISM_VERTICES,
        });
    }
    // base and the cell of each base point along the refinement path
    let mut colors = vec![0u32; n];
    let mut scratch = colors.clone();
    refine(g, &mut colors, &mut scratch, deadline)?;
    let mut base = Vec::new();
    let mut cells = Vec::new();
    while let Some((_, x)) = target_cell(&colors) {
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == colors[x]).collect();
        base.push(x);
        cells.push(cell);
        individualize(&mut colors, x);
        let mut scratch = colors.clone();
        refine(g, &mut colors, &mut scratch, deadline)?;
    }

    let mut generators: Vec<Permutation> = Vec::new();
    let mut sizes = vec![1; base.len()];
    for level in (0..base.len()).rev() {
        let mut orbit = orbit_of(base[level], &generators, n);
        for &c in &cells[level] {
            if orbit.contains(c) {
                continue;
            }
            if let Some(p) = map_base_point(g, &base[..level], base[level], c, deadline)? {
                generators.push(p);
                orbit = orbit_of(base[level], &generators, n);
            }
        }
        sizes[level] = orbit.len();
    }
    generators.reverse();
    let order = sizes.iter().fold(1u128, |acc, &s| acc * s as u128);
    Ok(AutomorphismResult {
        vertex_count: n,
        orbit_partition: orbit_partition(&generators, n),
        generators,
        order,
        base,
        basic_orbit_sizes: sizes,
    })
}

/// An automorphism fixing `prefix` pointwise and sending `from` to `to`.
fn map_base_point(
    g: &Graph,
    prefix: &[usize],
    from: usize,
    to: usize,
    deadline: &mut Deadline,
) -> Result<Option<Permutation>> {
    let n = g.vertex_count();
    let mut left = vec![0u32; n];
    let mut right = left.clone();
    refine(g, &mut left, &mut right, deadline)?;
    for &b in prefix {
        individualize(&mut left, b);
        individualize(&mut right, b);
        refine(g, &mut left, &mut right, deadline)?;
    }
    individualize(&mut left, from);
    individualize(&mut right, to);
    search(g, left, right, deadline)
}

fn search(
    g: &Graph,
    mut left: Vec<u32>,
    mut right: Vec<u32>,
    deadline: &mut Deadline,
) -> Result<Option<Permutation>> {
    deadline.tick()?;
    if !refine(g, &mut left, &mut right, deadline)? {
        return Ok(None);
    }
    let Some((color, x)) = target_cell(&left) else {
        let mut by_color = vec![0; left.len()];
        for (v, &c) in right.iter().enumerate() {
            by_color[c as usize] = v;
        }
        let p = Permutation(left.iter().map(|&c| by_color[c as usize]).collect());
        return Ok(g.is_automorphism(p.images()).then_some(p));
    };
    for y in (0..right.len()).filter(|&y| right[y] == color) {
        let (mut l, mut r) = (left.clone(), right.clone());
        individualize(&mut l, x);
        individualize(&mut r, y);
        if let Some(p) = search(g, l, r, deadline)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// The lowest color whose cell has more than one vertex, with that cell's
/// smallest vertex.
fn target_cell(colors: &[u32]) -> Option<(u32, usize)> {
    let mut count: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        count.entry(c).or_insert((0, v)).0 += 1;
    }
    count
        .into_iter()
        .find(|&(_, (k, _))| k > 1)
        .map(|(c, (_, v))| (c, v))
}

fn individualize(colors: &mut [u32], v: usize) {
    let fresh = colors.iter().copied().max().map_or(0, |m| m + 1);
    colors[v] = fresh;
}

/// Refines both colorings jointly to the coarsest equitable partition,
/// so equal color ids mean the same thing on both sides. Returns false
/// when the color multisets of the two sides differ, in which case no
/// color-preserving isomorphism exists.
fn refine(g: &Graph, left: &mut [u32], right: &mut [u32], deadline: &mut Deadline) -> Result<bool> {
    let n = left.len();
    let mut classes = count_classes(left, right);
    loop {
        deadline.tick()?;
        let signature = |colors: &[u32], v: usize| {
            let mut around: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
            around.sort_unstable();
            (colors[v], around)
        };
        let sl: Vec<_> = (0..n).map(|v| signature(left, v)).collect();
        let sr: Vec<_> = (0..n).map(|v| signature(right, v)).collect();
        let ids: BTreeMap<&(u32, Vec<u32>), u32> = sl
            .iter()
            .chain(sr.iter())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i as u32))
            .collect();
        for v in 0..n {
            left[v] = ids[&sl[v]];
            right[v] = ids[&sr[v]];
        }
        let mut l = left.to_vec();
        let mut r = right.to_vec();
        l.sort_unstable();
        r.sort_unstable();
        if l != r {
            return Ok(false);
        }
        let now = count_classes(left, right);
        if now == classes {
            return Ok(true);
        }
        classes = now;
    }
}

fn count_classes(left: &[u32], right: &[u32]) -> usize {
    left.iter().chain(right).collect::<HashSet<_>>().len()
}

fn orbit_of(x: usize, generators: &[Permutation], n: usize) -> VertexSet {
    let mut orbit = VertexSet::singleton(x);
    let mut stack = vec![x];
    while let Some(y) = stack.pop() {
        for g in generators {
            let z = g.image(y);
            if !orbit.contains(z) {
                orbit.insert(z);
                stack.push(z);
            }
        }
    }
    debug_assert!(orbit.is_subset(VertexSet::full(n)));
    orbit
}

fn orbit_partition(generators: &[Permutation], n: usize) -> Vec<Vec<usize>> {
    let mut assigned = VertexSet::empty();
    let mut out = Vec::new();
    for v in 0..n {
        if !assigned.contains(v) {
            let orbit = orbit_of(v, generators, n);
            assigned = assigned.union(orbit);
            out.push(orbit.to_vec());
        }
    }
    out
}

/// The vertex permutation induced by permuting minimal left ideals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaAction {
    /// Permutation of positions in `IdealFamily::minimal`.
    pub sigma: Permutation,
    pub vertex_map: Permutation,
}

/// Requires `S` to be the union of its minimal left ideals, so that every
/// vertex is a union of minimal ideals.
pub fn phi_sigma(
    family: &IdealFamily,
    gamma: &IdealGraph,
    sigma: &Permutation,
) -> Result<SigmaAction> {
    let n = family.min_count();
    if !family.s_equals_union {
        return Err(Error::Precondition(
            "the semigroup is not the union of its minimal left ideals".into(),
        ));
    }
    if sigma.len() != n {
        return Err(Error::Precondition(format!(
            "sigma permutes {} points but there are {n} minimal left ideals",
            sigma.len()
        )));
    }
    let mut images = Vec::with_capacity(gamma.vertex_count());
    for &ideal in &gamma.ideals {
        let mask = family.contained_minimals(ideal);
        debug_assert_eq!(family.union_of(mask), ideal);
        let moved = (0..n)
            .filter(|&k| (mask >> k) & 1 == 1)
            .fold(0u64, |m, k| m | (1 << sigma.image(k)));
        let target = gamma.vertex_of(family.union_of(moved)).ok_or_else(|| {
            Error::Precondition(format!("{ideal} has no image under the induced map"))
        })?;
        images.push(target);
    }
    Ok(SigmaAction {
        sigma: sigma.clone(),
        vertex_map: Permutation::from_images(images)?,
    })
}

/// The permutation of minimal ideals induced by an automorphism, if it
/// maps minimal-ideal vertices to minimal-ideal vertices.
pub fn restriction_to_minimals(
    family: &IdealFamily,
    gamma: &IdealGraph,
    automorphism: &Permutation,
) -> Option<Permutation> {
    let vertices: Vec<usize> = family
        .minimal
        .iter()
        .map(|&m| gamma.vertex_of(family.ideal(m)))
        .collect::<Option<_>>()?;
    let images: Vec<usize> = vertices
        .iter()
        .map(|&v| vertices.iter().position(|&w| w == automorphism.image(v)))
        .collect::<Option<_>>()?;
    Permutation::from_images(images).ok()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricGroupVerdict {
    pub n: usize,
    pub expected_order: u128,
    pub order: u128,
    /// Every checked automorphism equals its induced `phi_sigma`.
    pub all_induced: bool,
    /// Distinct permutations induce distinct automorphisms.
    pub injective: bool,
    /// How many automorphisms were matched (all elements, or the
    /// generators when the group is large).
    pub checked: usize,
    /// An automorphism not of the induced form.
    pub counterexample: Option<Permutation>,
}

impl SymmetricGroupVerdict {
    pub fn holds(&self) -> bool {
        self.order == self.expected_order && self.all_induced && self.injective
    }
}

/// Largest group whose elements are matched one by one.
const ELEMENT_CHECK_CAP: usize = 5040;

pub fn verify_symmetric_group(
    family: &IdealFamily,
    gamma: &IdealGraph,
    aut: &AutomorphismResult,
) -> Result<SymmetricGroupVerdict> {
    let n = family.min_count();
    if !family.s_equals_union || n < 2 {
        return Err(Error::Precondition(
            "needs a union of at least two minimal left ideals".into(),
        ));
    }
    let expected_order = (1..=n as u128).product();
    let to_check = if aut.order <= ELEMENT_CHECK_CAP as u128 {
        aut.elements(ELEMENT_CHECK_CAP)?
    } else {
        aut.generators.clone()
    };
    let mut counterexample = None;
    for f in &to_check {
        let induced = restriction_to_minimals(family, gamma, f)
            .map(|sigma| phi_sigma(family, gamma, &sigma))
            .transpose()?;
        if induced.is_none_or(|a| &a.vertex_map != f) {
            counterexample = Some(f.clone());
            break;
        }
    }
    let injective = if n <= 7 {
        let mut seen = HashSet::new();
        let mut ok = true;
        for sigma in all_permutations(n) {
            ok &= seen.insert(phi_sigma(family, gamma, &sigma)?.vertex_map);
        }
        ok
    } else {
        true
    };
    Ok(SymmetricGroupVerdict {
        n,
        expected_order,
        order: aut.order,
        all_induced: counterexample.is_none(),
        injective,
        checked: to_check.len(),
        counterexample,
    })
}
