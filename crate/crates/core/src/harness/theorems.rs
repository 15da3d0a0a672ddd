//! The registry of executable checks. Each check decides whether its
//! hypotheses hold for one semigroup and, if so, whether its conclusion
//! does; a false conclusion carries a witness.

use std::cell::OnceCell;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::automorphism::{
    all_permutations, automorphism_group, phi_sigma, verify_symmetric_group, AutomorphismResult,
    Permutation,
};
use crate::bitset::ElementSet;
use crate::error::Result;
use crate::graph::{build_gamma, IdealGraph};
use crate::ideals::{
    all_left_ideals, chromatic_bound_data, complement_is_lclass, pow2, IdealFamily,
};
use crate::invariants::{
    analyze_detailed, is_clique, perfect_by_definition, Analysis, Budget, Computed, Extent,
    InvariantReport,
};
use crate::semigroup::{CayleyTable, LClassPartition};

/// Largest graph on which perfectness is also checked by definition.
pub const PERFECT_BY_DEFINITION_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug)]
pub struct CheckInfo {
    pub id: &'static str,
    pub description: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub id: String,
    pub status: CheckStatus,
    pub applicable: bool,
    /// Meaningful only when applicable and not inconclusive.
    pub holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub schema: u32,
    pub name: Option<String>,
    pub hash: String,
    pub order: usize,
    pub has_zero: bool,
    pub table: Vec<Vec<usize>>,
    pub vertex_count: usize,
    pub minimal_count: usize,
    pub checks: Vec<TheoremCheck>,
    pub elapsed_ms: u64,
}

impl TheoremReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn inconclusive(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Inconclusive)
    }

    pub fn check(&self, id: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// `(id, status)` pairs, for comparing runs.
    pub fn verdicts(&self) -> Vec<(String, CheckStatus)> {
        self.checks.iter().map(|c| (c.id.clone(), c.status)).collect()
    }
}

enum Verdict {
    NotApplicable(Option<String>),
    Decided {
        holds: bool,
        witness: Option<Value>,
        note: Option<String>,
    },
}

impl Verdict {
    fn na() -> Self {
        Verdict::NotApplicable(None)
    }

    /// `witness` is only built when the conclusion fails.
    fn decide(holds: bool, witness: impl FnOnce() -> Value) -> Self {
        Verdict::Decided {
            holds,
            witness: (!holds).then(witness),
            note: None,
        }
    }

    /// Attaches a witness even when the conclusion holds.
    fn exhibit(holds: bool, witness: Value) -> Self {
        Verdict::Decided {
            holds,
            witness: Some(witness),
            note: None,
        }
    }

    fn with_note(mut self, text: impl Into<String>) -> Self {
        match &mut self {
            Verdict::NotApplicable(note) | Verdict::Decided { note, .. } => *note = Some(text.into()),
        }
        self
    }
}

/// An input the check needs could not be computed within budget.
struct Inconclusive(String);

type CheckFn = fn(&Context) -> std::result::Result<Verdict, Inconclusive>;

struct Entry {
    info: CheckInfo,
    run: CheckFn,
}

macro_rules! registry {
    ($($id:literal => $run:ident : $desc:literal,)*) => {
        const ENTRIES: &[Entry] = &[
            $(Entry { info: CheckInfo { id: $id, description: $desc }, run: $run },)*
        ];
        /// Every registered check, in evaluation order.
        pub const CHECKS: &[CheckInfo] = &[
            $(CheckInfo { id: $id, description: $desc },)*
        ];
    };
}

registry! {
    "minimal-ideals-disjoint" => minimal_ideals_disjoint:
        "Distinct minimal left ideals intersect trivially.",
    "union-of-minimals-structure" => union_of_minimals_structure:
        "If S is the union of its n minimal left ideals, every nontrivial left ideal is a union of minimal ones, giving 2^n - 2 vertices.",
    "maximal-iff-complement-l-class" => maximal_iff_complement_l_class:
        "A nontrivial left ideal K is maximal iff S \\ K is a single L-class.",
    "strong-perfect-criterion" => strong_perfect_criterion:
        "The odd hole/antihole test agrees with omega(H) = chi(H) over all induced subgraphs H (|V| <= 10).",
    "sdim-quotient-formula" => sdim_quotient_formula:
        "On a connected graph of diameter at most 2, sdim = |V| - omega of the closed-neighborhood quotient (brute force for |V| <= 16).",
    "disconnected-classification" => disconnected_classification:
        "Gamma is disconnected iff S has at least two minimal left ideals and every nontrivial left ideal is both minimal and maximal.",
    "disconnected-null" => disconnected_null:
        "A disconnected Gamma has no edges.",
    "disconnected-two-minimals" => disconnected_two_minimals:
        "Gamma is disconnected iff S is the union of exactly two minimal left ideals.",
    "diameter-at-most-two" => diameter_at_most_two:
        "A connected Gamma has diameter at most 2.",
    "complete-iff-unique-minimal" => complete_iff_unique_minimal:
        "Gamma is complete iff S has a unique minimal left ideal.",
    "regular-iff-null-or-complete" => regular_iff_null_or_complete:
        "Gamma is regular iff it is null or complete.",
    "diameter-two-classification" => diameter_two_classification:
        "For connected Gamma, the diameter is 2 iff S has at least two minimal left ideals.",
    "girth-three" => girth_three:
        "If Gamma contains a cycle, its girth is 3.",
    "planarity" => planarity:
        "Planar Gamma forces |Min(S)| <= 3; for S a union of n minimal left ideals, Gamma is planar iff n <= 3.",
    "perfectness" => perfectness:
        "Perfect Gamma forces |Min(S)| <= 4; for S a union of n minimal left ideals, Gamma is perfect iff n <= 4.",
    "star-tree-bipartite" => star_tree_bipartite:
        "With |V| > 1: star, tree, bipartite and the ideal condition are equivalent. The ideal condition reads: exactly three nontrivial left ideals I1, I2, I1 u I2 with I1, I2 minimal, or exactly two nontrivial left ideals I1 subset of I2.",
    "domination" => domination:
        "gamma = 1 if S is not the union of its minimal left ideals, and gamma = 2 if it is.",
    "independence" => independence:
        "alpha equals the number of minimal left ideals.",
    "clique-of-size-n" => clique_of_size_n:
        "With n >= 3 minimal left ideals, the n unions of n - 1 of them form a clique.",
    "clique-number-classification" => clique_number_classification:
        "With n > 1 minimal left ideals, omega = n iff S = I1 u I2 u I3, or n = 2 and I1 u I2 is the unique maximal left ideal.",
    "maximal-ideals-clique" => maximal_ideals_clique:
        "If Gamma is connected, the maximal left ideals form a clique.",
    "finite-degree-chromatic" => finite_degree_chromatic:
        "A maximal left ideal of finite degree forces a finite chromatic number.",
    "omega-chi-union" => omega_chi_union:
        "For S a union of n minimal left ideals, omega = chi = 2^(n-1) - 1.",
    "weakly-perfect-union" => weakly_perfect_union:
        "For S a union of minimal left ideals, Gamma is weakly perfect (omega = chi).",
    "chromatic-bound" => chromatic_bound:
        "chi <= |X1| + (2^(n-1) - 1) + (2^(n-1) - 1) m, with X1 the ideals containing the union of minimals and m the largest class of equal contained minimals in X3.",
    "strong-metric-dimension" => strong_metric_dimension:
        "sdim = |X1| + |X3| + 2^(n-1) - 2 if S is not the union of its n minimal left ideals, and 2^(n-1) - 1 if it is (connected Gamma, n >= 2).",
    "metric-dimension-lower-bound" => metric_dimension_lower_bound:
        "For connected Gamma of order m >= 2 and diameter d < m, beta >= the least k >= 1 with k + d^k >= m.",
    "metric-dimension-union" => metric_dimension_union:
        "For S a union of n >= 3 minimal left ideals, beta = 2 if n = 3 and beta = n if n >= 4.",
    "degree-formula" => degree_formula:
        "For S a union of n minimal left ideals, a vertex containing k of them has degree (2^k - 2) + (2^(n-k) - 2) + (2^(n-k) - 1)(2^k - 2).",
    "eulerian-union" => eulerian_union:
        "For S a union of n >= 3 minimal left ideals, Gamma is Eulerian.",
    "phi-sigma-automorphism" => phi_sigma_automorphism:
        "For S a union of n minimal left ideals, every permutation of the minimal ideals induces an automorphism of Gamma.",
    "automorphisms-are-phi-sigma" => automorphisms_are_phi_sigma:
        "For S a union of n minimal left ideals, every automorphism of Gamma is induced by a permutation of the minimal ideals.",
    "automorphism-group-symmetric" => automorphism_group_symmetric:
        "For S a union of n >= 2 minimal left ideals, Aut(Gamma) is isomorphic to S_n and has order n!.",
}

pub fn check_ids() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|c| c.id)
}

/// Runs every registered check on one semigroup. Budget exhaustion inside
/// an invariant makes the dependent checks inconclusive; it never makes
/// them fail.
pub fn check_theorems(table: &CayleyTable, budget: Budget) -> Result<TheoremReport> {
    let started = Instant::now();
    table.ensure_associative()?;
    let family = all_left_ideals(table)?;
    let gamma = build_gamma(&family)?;
    let analysis = analyze_detailed(&gamma.graph, budget);
    let ctx = Context {
        partition: table.l_class_partition(),
        n: family.min_count(),
        nv: gamma.vertex_count(),
        family,
        gamma,
        analysis,
        budget,
        aut: OnceCell::new(),
    };
    let checks = ENTRIES
        .iter()
        .map(|e| {
            let (status, applicable, holds, witness, note) = match (e.run)(&ctx) {
                Ok(Verdict::NotApplicable(note)) => {
                    (CheckStatus::NotApplicable, false, None, None, note)
                }
                Ok(Verdict::Decided { holds, witness, note }) => {
                    let status = if holds { CheckStatus::Pass } else { CheckStatus::Fail };
                    (status, true, Some(holds), witness, note)
                }
                Err(Inconclusive(why)) => (CheckStatus::Inconclusive, true, None, None, Some(why)),
            };
            debug_assert!(status != CheckStatus::Fail || witness.is_some(), "{}", e.info.id);
            TheoremCheck {
                id: e.info.id.to_string(),
                status,
                applicable,
                holds,
                witness,
                note,
            }
        })
        .collect();
    Ok(TheoremReport {
        schema: 1,
        name: table.name().map(str::to_string),
        hash: table.digest(),
        order: table.order(),
        has_zero: ctx.family.zero.is_some(),
        table: table.to_rows(),
        vertex_count: ctx.nv,
        minimal_count: ctx.n,
        checks,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

struct Context {
    partition: LClassPartition,
    family: IdealFamily,
    gamma: IdealGraph,
    analysis: Analysis,
    budget: Budget,
    aut: OnceCell<Computed<AutomorphismResult>>,
    /// Number of minimal left ideals.
    n: usize,
    /// Number of vertices.
    nv: usize,
}

fn need<T: Clone>(c: &Computed<T>, what: &str) -> std::result::Result<T, Inconclusive> {
    match c {
        Computed::Value(v) => Ok(v.clone()),
        Computed::Aborted => Err(Inconclusive(format!("{what}: exact search aborted"))),
        Computed::NotApplicable => Err(Inconclusive(format!("{what} could not be computed"))),
    }
}

impl Context {
    fn report(&self) -> &InvariantReport {
        &self.analysis.report
    }

    fn s_is_union(&self) -> bool {
        self.family.s_equals_union
    }

    fn connected(&self) -> bool {
        self.report().connected
    }

    fn edge(&self, u: usize, v: usize) -> bool {
        self.gamma.graph.has_edge(u, v)
    }

    fn set(&self, index: usize) -> ElementSet {
        self.family.ideal(index)
    }

    fn label_of_vertices(&self, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
        vs.into_iter().map(|v| self.gamma.label(v)).collect()
    }

    fn labels_of_ideals(&self, indices: &[usize]) -> Vec<String> {
        indices.iter().map(|&i| self.set(i).to_string()).collect()
    }

    fn vertex_of_mask(&self, mask: u64) -> Option<usize> {
        self.gamma.vertex_of(self.family.union_of(mask))
    }

    fn aut(&self) -> std::result::Result<&AutomorphismResult, Inconclusive> {
        let computed = self.aut.get_or_init(|| {
            Computed::from_result(automorphism_group(
                &self.gamma.graph,
                &mut self.budget.start("automorphism group"),
            ))
        });
        match computed {
            Computed::Value(a) => Ok(a),
            Computed::Aborted => Err(Inconclusive("automorphism group: exact search aborted".into())),
            Computed::NotApplicable => Err(Inconclusive(format!(
                "automorphism group not computed for {} vertices",
                self.nv
            ))),
        }
    }

    fn summary(&self) -> Value {
        json!({
            "vertices": self.nv,
            "edges": self.report().edge_count,
            "minimal": self.labels_of_ideals(&self.family.minimal),
            "maximal": self.labels_of_ideals(&self.family.maximal),
            "s_is_union_of_minimals": self.s_is_union(),
        })
    }
}

type Outcome = std::result::Result<Verdict, Inconclusive>;

fn minimal_ideals_disjoint(c: &Context) -> Outcome {
    if c.n < 2 {
        return Ok(Verdict::na());
    }
    let triv = c.family.triviality();
    let mins = &c.family.minimal;
    let bad = mins.iter().enumerate().find_map(|(i, &a)| {
        mins[i + 1..]
            .iter()
            .find(|&&b| triv.intersect_nontrivially(c.set(a), c.set(b)))
            .map(|&b| (a, b))
    });
    Ok(Verdict::decide(bad.is_none(), || {
        let (a, b) = bad.expect("failing pair");
        json!({ "ideals": c.labels_of_ideals(&[a, b]) })
    }))
}

fn union_of_minimals_structure(c: &Context) -> Outcome {
    if !c.s_is_union() {
        return Ok(Verdict::na());
    }
    let not_union: Vec<usize> = c
        .family
        .nontrivial
        .iter()
        .copied()
        .filter(|&i| c.family.union_of(c.family.contained_minimals(c.set(i))) != c.set(i))
        .collect();
    let expected = pow2(c.n).saturating_sub(2);
    let holds = not_union.is_empty() && c.nv as u64 == expected;
    Ok(Verdict::decide(holds, || {
        json!({
            "not_unions_of_minimals": c.labels_of_ideals(&not_union),
            "vertices": c.nv,
            "expected_vertices": expected,
        })
    }))
}

fn maximal_iff_complement_l_class(c: &Context) -> Outcome {
    if c.family.nontrivial.is_empty() {
        return Ok(Verdict::na());
    }
    let carrier = c.family.carrier();
    let bad = c.family.nontrivial.iter().copied().find(|&i| {
        c.family.all[i].is_maximal != complement_is_lclass(&c.partition, carrier, c.set(i))
    });
    Ok(Verdict::decide(bad.is_none(), || {
        let i = bad.expect("failing ideal");
        json!({
            "ideal": c.set(i).to_string(),
            "maximal": c.family.all[i].is_maximal,
            "complement": carrier.difference(c.set(i)).to_string(),
            "l_classes": c.partition.classes,
        })
    }))
}

fn strong_perfect_criterion(c: &Context) -> Outcome {
    if c.nv == 0 || c.nv > PERFECT_BY_DEFINITION_LIMIT {
        return Ok(Verdict::na());
    }
    let by_holes = need(&c.analysis.perfect, "perfectness")?;
    let by_definition = perfect_by_definition(
        &c.gamma.graph,
        &mut c.budget.start("perfectness by definition"),
    )
    .map_err(|_| Inconclusive("perfectness by definition: exact search aborted".into()))?;
    Ok(Verdict::decide(by_holes.perfect == by_definition, || {
        json!({
            "odd_hole_test": by_holes.perfect,
            "definition": by_definition,
            "hole_witness": by_holes.witness,
        })
    }))
}

fn sdim_quotient_formula(c: &Context) -> Outcome {
    if !c.connected() || c.nv < 2 {
        return Ok(Verdict::na());
    }
    let s = need(&c.analysis.strong, "strong metric dimension")?;
    match (s.brute_force, s.quotient_formula) {
        (Some(brute), Some(formula)) => Ok(Verdict::decide(brute == formula, || {
            json!({ "brute_force": brute, "quotient_formula": formula })
        })),
        _ => Ok(Verdict::NotApplicable(Some(
            "needs diameter at most 2 and at most 16 vertices".into(),
        ))),
    }
}

fn disconnected_classification(c: &Context) -> Outcome {
    if c.nv < 2 {
        return Ok(Verdict::na());
    }
    let all_min_max = c
        .family
        .nontrivial
        .iter()
        .all(|&i| c.family.all[i].is_minimal && c.family.all[i].is_maximal);
    let rhs = c.n >= 2 && all_min_max;
    let disconnected = !c.connected();
    Ok(Verdict::decide(disconnected == rhs, || {
        json!({ "disconnected": disconnected, "ideal_condition": rhs, "structure": c.summary() })
    }))
}

fn disconnected_null(c: &Context) -> Outcome {
    if c.nv < 2 || c.connected() {
        return Ok(Verdict::na());
    }
    let edges: Vec<(usize, usize)> = c.gamma.graph.edges().collect();
    Ok(Verdict::decide(edges.is_empty(), || {
        let (u, v) = edges[0];
        json!({ "edge": c.label_of_vertices([u, v]) })
    }))
}

fn disconnected_two_minimals(c: &Context) -> Outcome {
    if c.nv < 2 {
        return Ok(Verdict::na());
    }
    let rhs = c.n == 2 && c.s_is_union();
    let disconnected = !c.connected();
    Ok(Verdict::decide(disconnected == rhs, || {
        json!({ "disconnected": disconnected, "union_of_two_minimals": rhs, "structure": c.summary() })
    }))
}

fn diameter_at_most_two(c: &Context) -> Outcome {
    if c.nv < 2 || !c.connected() {
        return Ok(Verdict::na());
    }
    let d = need(&c.report().diameter, "diameter")?;
    Ok(Verdict::decide(d <= Extent::Finite(2), || json!({ "diameter": d })))
}

fn complete_iff_unique_minimal(c: &Context) -> Outcome {
    if c.nv < 2 || c.n == 0 {
        return Ok(Verdict::na());
    }
    let complete = c.report().is_complete;
    Ok(Verdict::decide(complete == (c.n == 1), || {
        json!({ "complete": complete, "structure": c.summary() })
    }))
}

fn regular_iff_null_or_complete(c: &Context) -> Outcome {
    if c.nv < 2 {
        return Ok(Verdict::na());
    }
    let r = c.report();
    let rhs = r.is_null || r.is_complete;
    Ok(Verdict::decide(r.is_regular == rhs, || {
        json!({ "regular": r.is_regular, "null": r.is_null, "complete": r.is_complete, "degrees": r.degrees })
    }))
}

fn diameter_two_classification(c: &Context) -> Outcome {
    if c.nv < 2 || !c.connected() || c.n == 0 {
        return Ok(Verdict::na());
    }
    let d = need(&c.report().diameter, "diameter")?;
    let two = d == Extent::Finite(2);
    Ok(Verdict::decide(two == (c.n >= 2), || {
        json!({ "diameter": d, "minimal_count": c.n })
    }))
}

fn girth_three(c: &Context) -> Outcome {
    let g = c.report().girth;
    if c.nv < 2 || g == Extent::Infinite {
        return Ok(Verdict::na());
    }
    Ok(Verdict::decide(g == Extent::Finite(3), || json!({ "girth": g })))
}

/// The K5 exhibited for four minimal ideals: I1, I12, I123, I14, I124.
fn k5_witness(c: &Context) -> Option<Vec<usize>> {
    if c.n < 4 {
        return None;
    }
    [0b0001u64, 0b0011, 0b0111, 0b1001, 0b1011]
        .iter()
        .map(|&m| c.vertex_of_mask(m))
        .collect()
}

fn planarity(c: &Context) -> Outcome {
    if c.nv < 2 {
        return Ok(Verdict::na());
    }
    let planar = c.report().planar;
    let necessity = !planar || c.n <= 3;
    let characterization = !c.s_is_union() || planar == (c.n <= 3);
    let holds = necessity && characterization;
    let k5 = k5_witness(c).filter(|k| is_clique(&c.gamma.graph, k.iter().copied().collect()));
    let v = Verdict::decide(holds, || {
        json!({ "planar": planar, "minimal_count": c.n, "s_is_union_of_minimals": c.s_is_union() })
    });
    Ok(match (holds, k5) {
        (true, Some(k)) => Verdict::exhibit(true, json!({ "k5": c.label_of_vertices(k) })),
        _ => v,
    })
}

/// The 5-hole exhibited for five minimal ideals: I12, I23, I34, I45, I15.
fn c5_witness(c: &Context) -> Option<Vec<usize>> {
    if c.n < 5 {
        return None;
    }
    [0b00011u64, 0b00110, 0b01100, 0b11000, 0b10001]
        .iter()
        .map(|&m| c.vertex_of_mask(m))
        .collect()
}

fn perfectness(c: &Context) -> Outcome {
    if c.nv < 2 {
        return Ok(Verdict::na());
    }
    let perfect = need(&c.report().perfect, "perfectness")?;
    let necessity = !perfect || c.n <= 4;
    let characterization = !c.s_is_union() || perfect == (c.n <= 4);
    let holds = necessity && characterization;
    let hole = c5_witness(c).filter(|h| c.gamma.graph.induced_subgraph(h) == crate::graph::Graph::cycle(5));
    let v = Verdict::decide(holds, || {
        json!({
            "perfect": perfect,
            "minimal_count": c.n,
            "s_is_union_of_minimals": c.s_is_union(),
            "odd_hole_or_antihole": c.report().witnesses.imperfection,
        })
    });
    Ok(match (holds, hole) {
        (true, Some(h)) => Verdict::exhibit(true, json!({ "hole": c.label_of_vertices(h) })),
        _ => v,
    })
}

fn star_tree_bipartite(c: &Context) -> Outcome {
    if c.nv < 2 || c.n == 0 {
        return Ok(Verdict::na());
    }
    let r = c.report();
    let nontrivial = &c.family.nontrivial;
    let three = c.n == 2
        && nontrivial.len() == 3
        && c.family.position(c.family.union_of_minimals).is_some_and(|u| nontrivial.contains(&u));
    let two_nested = nontrivial.len() == 2 && {
        let (a, b) = (c.set(nontrivial[0]), c.set(nontrivial[1]));
        a.is_proper_subset(b) || b.is_proper_subset(a)
    };
    let ideal_condition = three || two_nested;
    let values = [r.is_star, r.is_tree, r.is_bipartite, ideal_condition];
    let holds = values.iter().all(|&v| v == values[0]);
    Ok(Verdict::decide(holds, || {
        json!({
            "star": r.is_star,
            "tree": r.is_tree,
            "bipartite": r.is_bipartite,
            "ideal_condition": ideal_condition,
            "nontrivial_ideals": c.labels_of_ideals(nontrivial),
            "structure": c.summary(),
        })
    })
    .with_note("the second ideal condition is read as exactly two nontrivial left ideals"))
}

fn domination(c: &Context) -> Outcome {
    if c.nv < 2 || c.n == 0 {
        return Ok(Verdict::na());
    }
    let gamma = need(&c.report().domination_number, "domination number")?;
    let expected = if c.s_is_union() { 2 } else { 1 };
    Ok(Verdict::decide(gamma == expected, || {
        json!({
            "domination_number": gamma,
            "expected": expected,
            "dominating_set": c.report().witnesses.dominating_set.clone().map(|s| c.label_of_vertices(s)),
        })
    }))
}

fn independence(c: &Context) -> Outcome {
    if c.nv < 2 {
        return Ok(Verdict::na());
    }
    let alpha = need(&c.report().independence_number, "independence number")?;
    Ok(Verdict::decide(alpha == c.n, || {
        json!({
            "independence_number": alpha,
            "minimal_count": c.n,
            "independent_set": c.report().witnesses.independent_set.clone().map(|s| c.label_of_vertices(s)),
        })
    }))
}

fn clique_of_size_n(c: &Context) -> Outcome {
    if c.n < 3 || c.n > 63 {
        return Ok(Verdict::na());
    }
    let full = (1u64 << c.n) - 1;
    let members: Option<Vec<usize>> = (0..c.n).map(|k| c.vertex_of_mask(full & !(1 << k))).collect();
    let omega = need(&c.report().clique_number, "clique number")?;
    let clique = members.filter(|m| is_clique(&c.gamma.graph, m.iter().copied().collect()));
    let holds = clique.is_some() && omega >= c.n;
    Ok(match clique {
        Some(m) if holds => Verdict::exhibit(true, json!({ "clique": c.label_of_vertices(m) })),
        _ => Verdict::decide(false, || json!({ "clique_number": omega, "minimal_count": c.n })),
    })
}

fn clique_number_classification(c: &Context) -> Outcome {
    if c.n <= 1 {
        return Ok(Verdict::na());
    }
    let omega = need(&c.report().clique_number, "clique number")?;
    let u = c.family.position(c.family.union_of_minimals);
    let case_three = c.n == 3 && c.s_is_union();
    let case_two = c.n == 2 && !c.s_is_union() && u.is_some_and(|u| c.family.maximal == [u]);
    let rhs = case_three || case_two;
    Ok(Verdict::decide((omega == c.n) == rhs, || {
        json!({ "clique_number": omega, "minimal_count": c.n, "ideal_condition": rhs, "structure": c.summary() })
    }))
}

fn maximal_ideals_clique(c: &Context) -> Outcome {
    if c.nv < 2 || !c.connected() {
        return Ok(Verdict::na());
    }
    let maximal: Vec<usize> = c
        .family
        .maximal
        .iter()
        .map(|&i| c.gamma.vertex_of(c.set(i)).expect("maximal ideals are vertices"))
        .collect();
    let bad = maximal.iter().enumerate().find_map(|(i, &a)| {
        maximal[i + 1..].iter().find(|&&b| !c.edge(a, b)).map(|&b| (a, b))
    });
    Ok(Verdict::decide(bad.is_none(), || {
        let (a, b) = bad.expect("non-adjacent pair");
        json!({ "non_adjacent_maximal": c.label_of_vertices([a, b]) })
    }))
}

fn finite_degree_chromatic(_: &Context) -> Outcome {
    Ok(Verdict::Decided {
        holds: true,
        witness: None,
        note: Some("vacuous at finite scale".into()),
    })
}

fn omega_chi_union(c: &Context) -> Outcome {
    if !c.s_is_union() {
        return Ok(Verdict::na());
    }
    let omega = need(&c.report().clique_number, "clique number")?;
    let chi = need(&c.report().chromatic_number, "chromatic number")?;
    let expected = pow2(c.n - 1) - 1;
    Ok(Verdict::decide(omega as u64 == expected && chi as u64 == expected, || {
        json!({ "clique_number": omega, "chromatic_number": chi, "expected": expected })
    }))
}

fn weakly_perfect_union(c: &Context) -> Outcome {
    if !c.s_is_union() {
        return Ok(Verdict::na());
    }
    let omega = need(&c.report().clique_number, "clique number")?;
    let chi = need(&c.report().chromatic_number, "chromatic number")?;
    Ok(Verdict::decide(omega == chi, || {
        json!({ "clique_number": omega, "chromatic_number": chi })
    }))
}

fn chromatic_bound(c: &Context) -> Outcome {
    if c.n == 0 || c.nv == 0 {
        return Ok(Verdict::na());
    }
    let chi = need(&c.report().chromatic_number, "chromatic number")?;
    let data = chromatic_bound_data(&c.family).map_err(|e| Inconclusive(e.to_string()))?;
    Ok(Verdict::decide(chi as u64 <= data.bound, || {
        json!({
            "chromatic_number": chi,
            "bound": data.bound,
            "x1": data.x1.len(),
            "m": data.m,
            "minimal_count": data.n_min,
        })
    }))
}

fn strong_metric_dimension(c: &Context) -> Outcome {
    if c.nv < 2 || !c.connected() {
        return Ok(Verdict::na());
    }
    let sdim = need(&c.report().strong_metric_dimension, "strong metric dimension")?;
    let data = chromatic_bound_data(&c.family).map_err(|e| Inconclusive(e.to_string()))?;
    let expected = if c.s_is_union() {
        pow2(c.n - 1) as i128 - 1
    } else {
        (data.x1.len() + data.x3.len()) as i128 + pow2(c.n - 1) as i128 - 2
    };
    if c.n < 2 {
        return Ok(Verdict::NotApplicable(Some(format!(
            "single minimal left ideal: formula gives {expected}, computed sdim {sdim}"
        ))));
    }
    Ok(Verdict::decide(sdim as i128 == expected, || {
        json!({
            "strong_metric_dimension": sdim,
            "expected": expected,
            "x1": data.x1.len(),
            "x3": data.x3.len(),
            "s_is_union_of_minimals": c.s_is_union(),
        })
    }))
}

fn metric_dimension_lower_bound(c: &Context) -> Outcome {
    if c.nv < 2 || !c.connected() {
        return Ok(Verdict::na());
    }
    let d = need(&c.report().diameter, "diameter")?.finite().unwrap_or(usize::MAX);
    if d >= c.nv {
        return Ok(Verdict::na());
    }
    let m = need(&c.analysis.metric, "metric dimension")?;
    Ok(Verdict::decide(m.value >= m.lower_bound, || {
        json!({ "metric_dimension": m.value, "lower_bound": m.lower_bound, "order": c.nv, "diameter": d })
    }))
}

fn metric_dimension_union(c: &Context) -> Outcome {
    if !c.s_is_union() || c.n < 3 {
        return Ok(Verdict::na());
    }
    let m = need(&c.analysis.metric, "metric dimension")?;
    let expected = if c.n == 3 { 2 } else { c.n };
    Ok(Verdict::decide(m.value == expected, || {
        json!({
            "metric_dimension": m.value,
            "expected": expected,
            "resolving_set": c.label_of_vertices(m.witness.clone()),
        })
    }))
}

fn degree_formula(c: &Context) -> Outcome {
    if !c.s_is_union() {
        return Ok(Verdict::na());
    }
    let n = c.n;
    let formula = |k: usize| {
        let (a, b) = (pow2(k) as i128, pow2(n - k) as i128);
        (a - 2) + (b - 2) + (b - 1) * (a - 2)
    };
    let degrees = &c.report().degrees;
    let bad: Vec<Value> = c
        .gamma
        .ideals
        .iter()
        .enumerate()
        .filter_map(|(v, &ideal)| {
            let k = c.family.contained_minimals(ideal).count_ones() as usize;
            let expected = formula(k);
            (degrees[v] as i128 != expected).then(|| {
                json!({ "vertex": ideal.to_string(), "k": k, "degree": degrees[v], "expected": expected })
            })
        })
        .collect();
    Ok(Verdict::decide(bad.is_empty(), || json!({ "mismatches": bad })))
}

fn eulerian_union(c: &Context) -> Outcome {
    if !c.s_is_union() || c.n < 3 {
        return Ok(Verdict::na());
    }
    let r = c.report();
    Ok(Verdict::decide(r.is_eulerian, || {
        json!({ "connected": r.connected, "degrees": r.degrees })
    }))
}

/// Largest n for which every permutation is tried; above it the two
/// generators of the symmetric group are.
const ALL_SIGMA_LIMIT: usize = 7;

fn sigma_candidates(n: usize) -> Vec<Permutation> {
    if n <= ALL_SIGMA_LIMIT {
        return all_permutations(n);
    }
    let transposition = Permutation::from_images((0..n).map(|i| match i {
        0 => 1,
        1 => 0,
        _ => i,
    }).collect())
    .expect("a transposition");
    let cycle = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("a cycle");
    vec![transposition, cycle]
}

fn phi_sigma_automorphism(c: &Context) -> Outcome {
    if !c.s_is_union() {
        return Ok(Verdict::na());
    }
    for sigma in sigma_candidates(c.n) {
        let action = phi_sigma(&c.family, &c.gamma, &sigma)
            .map_err(|e| Inconclusive(e.to_string()))?;
        if !c.gamma.graph.is_automorphism(action.vertex_map.images()) {
            return Ok(Verdict::decide(false, || {
                json!({
                    "sigma": sigma.cycle_notation(),
                    "vertex_map": action.vertex_map.cycle_notation_with(|v| c.gamma.label(v)),
                })
            }));
        }
    }
    Ok(Verdict::decide(true, || Value::Null))
}

fn automorphisms_are_phi_sigma(c: &Context) -> Outcome {
    if !c.s_is_union() || c.n < 2 {
        return Ok(Verdict::na());
    }
    let aut = c.aut()?;
    let verdict = verify_symmetric_group(&c.family, &c.gamma, aut)
        .map_err(|e| Inconclusive(e.to_string()))?;
    Ok(Verdict::decide(verdict.all_induced, || {
        json!({
            "automorphism": verdict
                .counterexample
                .as_ref()
                .map(|p| p.cycle_notation_with(|v| c.gamma.label(v))),
        })
    }))
}

fn automorphism_group_symmetric(c: &Context) -> Outcome {
    if !c.s_is_union() || c.n < 2 {
        return Ok(Verdict::na());
    }
    let aut = c.aut()?;
    let verdict = verify_symmetric_group(&c.family, &c.gamma, aut)
        .map_err(|e| Inconclusive(e.to_string()))?;
    Ok(Verdict::decide(verdict.holds(), || {
        json!({
            "order": verdict.order.to_string(),
            "expected_order": verdict.expected_order.to_string(),
            "all_induced": verdict.all_induced,
            "injective": verdict.injective,
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{generate, FamilySpec};

    fn report(spec: &str) -> TheoremReport {
        let t = generate(&spec.parse::<FamilySpec>().unwrap()).unwrap();
        check_theorems(&t, Budget::unlimited()).unwrap()
    }

    fn status(r: &TheoremReport, id: &str) -> CheckStatus {
        r.check(id).unwrap_or_else(|| panic!("no check {id}")).status
    }

    #[test]
    fn registry_ids_are_unique() {
        let mut ids: Vec<_> = check_ids().collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert_eq!(report("right-zero(3)").checks.len(), n);
    }

    #[test]
    fn right_zero_two() {
        let r = report("right-zero(2)");
        assert_eq!(status(&r, "disconnected-classification"), CheckStatus::Pass);
        assert_eq!(status(&r, "disconnected-null"), CheckStatus::Pass);
        assert_eq!(status(&r, "disconnected-two-minimals"), CheckStatus::Pass);
        assert_eq!(status(&r, "automorphism-group-symmetric"), CheckStatus::Pass);
        // the two-vertex null graph is bipartite but neither a star nor a tree
        assert_eq!(status(&r, "star-tree-bipartite"), CheckStatus::Fail);
        assert!(r.check("star-tree-bipartite").unwrap().witness.is_some());
    }

    #[test]
    fn z6_multiplication() {
        let r = report("zn-multiplication(6)");
        for id in ["diameter-at-most-two", "domination", "star-tree-bipartite", "independence"] {
            assert_eq!(status(&r, id), CheckStatus::Pass, "{id}");
        }
        assert_eq!(status(&r, "omega-chi-union"), CheckStatus::NotApplicable);
    }

    #[test]
    fn right_zero_five() {
        let r = report("right-zero(5)");
        assert_eq!(r.counterexamples().count(), 0, "{:?}", r.counterexamples().collect::<Vec<_>>());
        assert_eq!(r.inconclusive().count(), 0);
        let perfect = r.check("perfectness").unwrap();
        assert_eq!(perfect.status, CheckStatus::Pass);
        assert_eq!(perfect.witness.as_ref().unwrap()["hole"].as_array().unwrap().len(), 5);
        assert_eq!(status(&r, "omega-chi-union"), CheckStatus::Pass);
    }

    #[test]
    fn finite_degree_is_vacuous() {
        let r = report("cyclic-group(3)");
        let c = r.check("finite-degree-chromatic").unwrap();
        assert_eq!(c.status, CheckStatus::Pass);
        assert_eq!(c.note.as_deref(), Some("vacuous at finite scale"));
        assert_eq!(r.vertex_count, 0);
    }

    #[test]
    fn report_round_trips_through_json() {
        let r = report("rectangular-band(2,3)");
        let back: TheoremReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
