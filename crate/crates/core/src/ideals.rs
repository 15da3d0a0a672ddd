//! Left ideals of a finite semigroup.
//!
//! A left ideal is *trivial* when it is the whole semigroup, or `{θ}` when
//! the semigroup has a zero `θ`. An intersection is trivial when it is empty
//! or contained in `{θ}`. Minimality and maximality are taken among the
//! nontrivial left ideals only.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::semigroup::{CayleyTable, Element, LClassPartition};

/// Default cap on the number of left ideals produced by the closure.
pub const DEFAULT_IDEAL_CAP: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LeftIdeal {
    pub elements: ElementSet,
    #[serde(rename = "trivial")]
    pub is_trivial: bool,
    #[serde(rename = "minimal")]
    pub is_minimal: bool,
    #[serde(rename = "maximal")]
    pub is_maximal: bool,
}

/// The triviality convention for one semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triviality {
    carrier: ElementSet,
    zero: Option<Element>,
}

impl Triviality {
    pub fn new(carrier: ElementSet, zero: Option<Element>) -> Self {
        Self { carrier, zero }
    }

    pub fn for_table(table: &CayleyTable) -> Self {
        Self::new(table.elements(), table.zero_element())
    }

    pub fn is_trivial_ideal(self, ideal: ElementSet) -> bool {
        ideal == self.carrier || self.zero.is_some_and(|z| ideal == ElementSet::singleton(z))
    }

    pub fn is_trivial_set(self, set: ElementSet) -> bool {
        set.is_empty() || self.zero.is_some_and(|z| set.is_subset(ElementSet::singleton(z)))
    }

    pub fn intersect_nontrivially(self, a: ElementSet, b: ElementSet) -> bool {
        !self.is_trivial_set(a.intersection(b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealFamily {
    pub order: usize,
    pub zero: Option<Element>,
    /// Every left ideal, sorted by size and then lexicographically.
    pub all: Vec<LeftIdeal>,
    /// Indices into `all`; the vertex set of the intersection graph.
    pub nontrivial: Vec<usize>,
    pub minimal: Vec<usize>,
    pub maximal: Vec<usize>,
    /// Union of the minimal left ideals (empty when there are none).
    pub union_of_minimals: ElementSet,
    /// Whether the semigroup is the union of its (at least one) minimal
    /// left ideals.
    pub s_equals_union: bool,
}

impl IdealFamily {
    pub fn triviality(&self) -> Triviality {
        Triviality::new(ElementSet::full(self.order), self.zero)
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn min_count(&self) -> usize {
        self.minimal.len()
    }

    pub fn ideal(&self, index: usize) -> ElementSet {
        self.all[index].elements
    }

    pub fn position(&self, set: ElementSet) -> Option<usize> {
        self.all.iter().position(|i| i.elements == set)
    }

    /// The minimal ideals contained in `set`, as a bit mask over positions in
    /// `self.minimal`.
    pub fn contained_minimals(&self, set: ElementSet) -> u64 {
        self.minimal
            .iter()
            .enumerate()
            .filter(|&(_, &m)| self.all[m].elements.is_subset(set))
            .fold(0u64, |mask, (k, _)| mask | (1 << k))
    }

    /// The union of the minimal ideals selected by `mask`.
    pub fn union_of(&self, mask: u64) -> ElementSet {
        self.minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| (mask >> k) & 1 == 1)
            .fold(ElementSet::empty(), |acc, (_, &m)| acc.union(self.all[m].elements))
    }
}

/// Whether `subset` is a non-empty set closed under left multiplication.
pub fn is_left_ideal(table: &CayleyTable, subset: ElementSet) -> bool {
    !subset.is_empty()
        && subset.is_subset(table.elements())
        && subset
            .iter()
            .all(|x| (0..table.order()).all(|s| subset.contains(table.product(s, x))))
}

pub fn all_left_ideals(table: &CayleyTable) -> Result<IdealFamily> {
    all_left_ideals_with_cap(table, DEFAULT_IDEAL_CAP)
}

/// Every left ideal is the union of the principal left ideals of its
/// elements, so the family is the closure of the principal ideals under
/// pairwise union.
pub fn all_left_ideals_with_cap(table: &CayleyTable, cap: usize) -> Result<IdealFamily> {
    let n = table.order();
    let mut principals: Vec<ElementSet> = (0..n).map(|a| table.principal_left_ideal(a)).collect();
    principals.sort_by_key(|s| s.bits());
    principals.dedup();

    let mut seen: HashSet<ElementSet> = principals.iter().copied().collect();
    let mut frontier: Vec<ElementSet> = principals.clone();
    while let Some(ideal) = frontier.pop() {
        for &p in &principals {
            let u = ideal.union(p);
            if seen.insert(u) {
                if seen.len() > cap {
                    return Err(Error::IdealOverflow(cap));
                }
                frontier.push(u);
            }
        }
    }

    let mut sets: Vec<ElementSet> = seen.into_iter().collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.lex_cmp(*b)));

    let zero = table.zero_element();
    let triv = Triviality::new(table.elements(), zero);
    let mut all: Vec<LeftIdeal> = sets
        .iter()
        .map(|&elements| LeftIdeal {
            elements,
            is_trivial: triv.is_trivial_ideal(elements),
            is_minimal: false,
            is_maximal: false,
        })
        .collect();
    let nontrivial: Vec<usize> = (0..all.len()).filter(|&i| !all[i].is_trivial).collect();
    for &i in &nontrivial {
        let set = all[i].elements;
        all[i].is_minimal = !nontrivial
            .iter()
            .any(|&j| all[j].elements.is_proper_subset(set));
        all[i].is_maximal = !nontrivial
            .iter()
            .any(|&j| set.is_proper_subset(all[j].elements));
    }
    let minimal: Vec<usize> = nontrivial.iter().copied().filter(|&i| all[i].is_minimal).collect();
    let maximal: Vec<usize> = nontrivial.iter().copied().filter(|&i| all[i].is_maximal).collect();
    let union_of_minimals = minimal
        .iter()
        .fold(ElementSet::empty(), |acc, &i| acc.union(all[i].elements));
    let s_equals_union = !minimal.is_empty() && union_of_minimals == table.elements();

    Ok(IdealFamily {
        order: n,
        zero,
        all,
        nontrivial,
        minimal,
        maximal,
        union_of_minimals,
        s_equals_union,
    })
}

/// Decides maximality of a nontrivial left ideal by checking whether its
/// complement is a single L-class.
pub fn maximality_via_lclass(table: &CayleyTable, ideal: ElementSet) -> bool {
    complement_is_lclass(&table.l_class_partition(), table.elements(), ideal)
}

pub fn complement_is_lclass(
    partition: &LClassPartition,
    carrier: ElementSet,
    ideal: ElementSet,
) -> bool {
    partition.is_class(carrier.difference(ideal))
}

/// Data for the X-partition bound on the chromatic number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticBoundData {
    /// Nontrivial ideals containing the union of minimals (indices into
    /// `IdealFamily::all`).
    pub x1: Vec<usize>,
    /// Nontrivial ideals properly inside the union of minimals.
    pub x2: Vec<usize>,
    pub x3: Vec<usize>,
    /// Classes of `x3` under equality of contained minimal ideals.
    pub rho_classes: Vec<Vec<usize>>,
    /// Largest `rho` class size (0 when `x3` is empty).
    pub m: usize,
    pub n_min: usize,
    /// `|X1| + (2^(n-1) - 1) + (2^(n-1) - 1) * m`, saturating.
    pub bound: u64,
}

pub fn chromatic_bound_data(family: &IdealFamily) -> Result<ChromaticBoundData> {
    let n = family.min_count();
    if n == 0 {
        return Err(Error::Precondition(
            "the chromatic bound needs at least one minimal left ideal".into(),
        ));
    }
    let u = family.union_of_minimals;
    let (mut x1, mut x2, mut x3) = (Vec::new(), Vec::new(), Vec::new());
    for &i in &family.nontrivial {
        let set = family.ideal(i);
        if u.is_subset(set) {
            x1.push(i);
        } else if set.is_proper_subset(u) {
            x2.push(i);
        } else {
            x3.push(i);
        }
    }
    let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for &i in &x3 {
        classes
            .entry(family.contained_minimals(family.ideal(i)))
            .or_default()
            .push(i);
    }
    let rho_classes: Vec<Vec<usize>> = classes.into_values().collect();
    let m = rho_classes.iter().map(Vec::len).max().unwrap_or(0);
    let half = pow2(n - 1).saturating_sub(1);
    let bound = (x1.len() as u64)
        .saturating_add(half)
        .saturating_add(half.saturating_mul(m as u64));
    Ok(ChromaticBoundData {
        x1,
        x2,
        x3,
        rho_classes,
        m,
        n_min: n,
        bound,
    })
}

/// `2^k`, saturating at `u64::MAX`.
pub fn pow2(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        1u64 << k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{generate, FamilySpec};

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    fn family(spec: FamilySpec) -> (CayleyTable, IdealFamily) {
        let t = generate(&spec).unwrap();
        let f = all_left_ideals(&t).unwrap();
        (t, f)
    }

    fn sets(f: &IdealFamily, idx: &[usize]) -> Vec<ElementSet> {
        idx.iter().map(|&i| f.ideal(i)).collect()
    }

    #[test]
    fn right_zero_three() {
        let (_, f) = family(FamilySpec::RightZero(3));
        assert_eq!(f.all.len(), 7);
        assert_eq!(f.nontrivial.len(), 6);
        assert_eq!(sets(&f, &f.minimal), vec![set(&[0]), set(&[1]), set(&[2])]);
        assert_eq!(
            sets(&f, &f.maximal),
            vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]
        );
        assert!(f.s_equals_union);
    }

    #[test]
    fn left_zero_has_no_nontrivial_ideals() {
        let (_, f) = family(FamilySpec::LeftZero(3));
        assert_eq!(f.all.len(), 1);
        assert!(f.nontrivial.is_empty());
        assert!(!f.s_equals_union);
    }

    #[test]
    fn z6_multiplication() {
        let (_, f) = family(FamilySpec::ZnMultiplication(6));
        assert_eq!(
            sets(&f, &f.nontrivial),
            vec![set(&[0, 3]), set(&[0, 2, 4]), set(&[0, 2, 3, 4])]
        );
        assert_eq!(sets(&f, &f.minimal), vec![set(&[0, 3]), set(&[0, 2, 4])]);
        let zero = f.position(set(&[0])).unwrap();
        assert!(f.all[zero].is_trivial);
        assert!(!f.s_equals_union);
    }

    #[test]
    fn left_ideal_predicate() {
        let z6 = generate(&FamilySpec::ZnMultiplication(6)).unwrap();
        assert!(!is_left_ideal(&z6, set(&[0, 4])));
        assert!(is_left_ideal(&z6, z6.elements()));
        let rz4 = generate(&FamilySpec::RightZero(4)).unwrap();
        assert!(is_left_ideal(&rz4, set(&[1, 3])));
        assert!(!is_left_ideal(&rz4, ElementSet::empty()));
    }

    #[test]
    fn maximality_from_l_classes() {
        let rz3 = generate(&FamilySpec::RightZero(3)).unwrap();
        assert!(maximality_via_lclass(&rz3, set(&[0, 1])));
        assert!(!maximality_via_lclass(&rz3, set(&[0])));
        let z6 = generate(&FamilySpec::ZnMultiplication(6)).unwrap();
        assert!(maximality_via_lclass(&z6, set(&[0, 2, 3, 4])));
    }

    #[test]
    fn chromatic_bound_examples() {
        let (_, f) = family(FamilySpec::ZnMultiplication(6));
        let d = chromatic_bound_data(&f).unwrap();
        assert_eq!(sets(&f, &d.x1), vec![set(&[0, 2, 3, 4])]);
        assert_eq!(sets(&f, &d.x2), vec![set(&[0, 3]), set(&[0, 2, 4])]);
        assert!(d.x3.is_empty());
        assert_eq!((d.n_min, d.m, d.bound), (2, 0, 2));

        let (_, f) = family(FamilySpec::RightZero(3));
        let d = chromatic_bound_data(&f).unwrap();
        assert!(d.x1.is_empty());
        assert_eq!(d.x2.len(), 6);
        assert_eq!((d.n_min, d.m, d.bound), (3, 0, 3));

        let (_, f) = family(FamilySpec::NullWithZero(3));
        assert_eq!(sets(&f, &f.minimal), vec![set(&[0, 1]), set(&[0, 2])]);
        let d = chromatic_bound_data(&f).unwrap();
        assert!(d.x1.is_empty() && d.x3.is_empty());
        assert_eq!((d.n_min, d.bound), (2, 1));
    }

    #[test]
    fn bound_needs_minimal_ideals() {
        let (_, f) = family(FamilySpec::CyclicGroup(3));
        assert!(chromatic_bound_data(&f).is_err());
    }

    #[test]
    fn ideal_cap() {
        let t = generate(&FamilySpec::RightZero(6)).unwrap();
        assert!(matches!(
            all_left_ideals_with_cap(&t, 10),
            Err(Error::IdealOverflow(10))
        ));
    }
}
