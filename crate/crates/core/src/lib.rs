//! Intersection ideal graphs of finite semigroups.
//!
//! A finite semigroup is given by its Cayley table. Its nontrivial left
//! ideals form the vertices of the intersection ideal graph, two ideals
//! being adjacent when they intersect nontrivially. The crate builds that
//! graph, computes exact invariants, and checks a registry of structural
//! statements about it over enumerated and constructed corpora.

pub mod automorphism;
pub mod bitset;
pub mod error;
pub mod graph;
pub mod harness;
pub mod ideals;
pub mod invariants;
pub mod semigroup;

pub use error::{Error, Result};
pub use harness::{check_theorems, run_corpus, CorpusSource, CorpusSpec, TheoremReport};
pub use graph::{build_gamma, quotient_graph, Graph, IdealGraph, QuotientGraph};
pub use ideals::{all_left_ideals, IdealFamily, LeftIdeal, Triviality};
pub use invariants::{analyze, Budget, InvariantReport};
pub use semigroup::{CayleyTable, FamilySpec};
