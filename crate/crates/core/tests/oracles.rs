mod common;

use common::*;
use idealgraph::automorphism::automorphism_group;
use idealgraph::bitset::ElementSet;
use idealgraph::invariants::{
    analyze, chromatic_number as lib_chi, is_perfect, is_planar, strong_metric_dimension,
    Budget, Computed, Deadline, Extent,
};
use idealgraph::semigroup::{count_semigroups, enumerate_semigroups, generate, FamilySpec};
use idealgraph::{all_left_ideals, build_gamma};

fn dl() -> Deadline {
    Deadline::unlimited("test")
}

#[test]
fn enumeration_counts_match_brute_force() {
    for n in 1..=3 {
        assert_eq!(count_semigroups(n).unwrap(), brute_force_semigroup_count(n), "order {n}");
    }
}

#[test]
fn ideals_match_subset_filter() {
    for k in 1..=4 {
        for t in enumerate_semigroups(k).unwrap() {
            let family = all_left_ideals(&t).unwrap();
            let mut lib: Vec<Vec<usize>> = family.all.iter().map(|i| i.elements.to_vec()).collect();
            let mut naive: Vec<Vec<usize>> =
                subset_filter_ideals(&t).into_iter().map(|s| s.into_iter().collect()).collect();
            lib.sort();
            naive.sort();
            assert_eq!(lib, naive, "{:?}", t.to_rows());
        }
    }
}

#[test]
fn gamma_matches_double_loop() {
    for k in 1..=4 {
        for t in enumerate_semigroups(k).unwrap() {
            let gamma = build_gamma(&all_left_ideals(&t).unwrap()).unwrap();
            let (sets, adj) = naive_gamma(&t);
            assert_eq!(gamma.vertex_count(), sets.len(), "{:?}", t.to_rows());
            let index: Vec<usize> = sets
                .iter()
                .map(|s| gamma.vertex_of(s.iter().copied().collect::<ElementSet>()).unwrap())
                .collect();
            for i in 0..sets.len() {
                for j in 0..sets.len() {
                    if i != j {
                        assert_eq!(gamma.graph.has_edge(index[i], index[j]), adj.m[i][j]);
                    }
                }
            }
        }
    }
}

#[test]
fn invariants_match_naive_on_corpus_graphs() {
    for a in corpus_graphs(1..=4, 10) {
        let g = a.to_graph();
        let r = analyze(&g, Budget::unlimited());
        if a.n == 0 {
            continue;
        }
        assert_eq!(r.clique_number, Computed::Value(clique_number(&a)));
        assert_eq!(r.chromatic_number, Computed::Value(chromatic_number(&a)));
        assert_eq!(r.independence_number, Computed::Value(independence_number(&a)));
        assert_eq!(r.domination_number, Computed::Value(domination_number(&a)));
        assert_eq!(r.connected, connected(&a));
        assert_eq!(r.girth, girth(&a).map_or(Extent::Infinite, Extent::Finite));
        if r.connected && a.n >= 2 {
            assert_eq!(r.diameter, Computed::Value(Extent::Finite(diameter(&a))));
            assert_eq!(r.metric_dimension, Computed::Value(metric_dimension(&a)));
            assert_eq!(r.strong_metric_dimension, Computed::Value(common::strong_metric_dimension(&a)));
        }
    }
}

#[test]
fn planarity_against_kuratowski_search() {
    for a in [complete(5), k33(), petersen(), complete(4)] {
        assert_eq!(is_planar(&a.to_graph()), !has_kuratowski_subdivision(&a));
    }
    for a in corpus_graphs(1..=4, 10) {
        assert_eq!(is_planar(&a.to_graph()), !has_kuratowski_subdivision(&a), "{a:?}");
    }
}

#[test]
fn automorphism_order_against_enumeration() {
    for a in corpus_graphs(1..=4, 8) {
        let aut = automorphism_group(&a.to_graph(), &mut dl()).unwrap();
        assert_eq!(aut.order, automorphism_count(&a) as u128, "{a:?}");
    }
    assert_eq!(automorphism_group(&petersen().to_graph(), &mut dl()).unwrap().order, 120);
}

#[test]
fn perfectness_against_definition() {
    for a in corpus_graphs(1..=4, 10) {
        let p = is_perfect(&a.to_graph(), &mut dl()).unwrap();
        assert_eq!(p.perfect, perfect(&a), "{a:?}");
    }
}

#[test]
fn sdim_routes_agree_on_corpus() {
    for a in corpus_graphs(1..=4, 10) {
        if a.n < 2 || !connected(&a) {
            continue;
        }
        let s = strong_metric_dimension(&a.to_graph(), &mut dl()).unwrap();
        assert_eq!(s.brute_force, Some(common::strong_metric_dimension(&a)));
        if diameter(&a) <= 2 {
            assert_eq!(s.quotient_formula, s.brute_force, "{a:?}");
        }
    }
}

#[test]
fn family_invariants_against_naive() {
    for spec in ["right-zero(3)", "rectangular-band(2,3)", "zn-multiplication(8)", "null-with-zero(4)"] {
        let t = generate(&spec.parse::<FamilySpec>().unwrap()).unwrap();
        let g = build_gamma(&all_left_ideals(&t).unwrap()).unwrap().graph;
        let a = Adj::from_graph(&g);
        let chi = lib_chi(&g, 0, &mut dl()).unwrap();
        assert_eq!(chi.iter().copied().max().map_or(0, |c| c + 1), chromatic_number(&a), "{spec}");
    }
}
