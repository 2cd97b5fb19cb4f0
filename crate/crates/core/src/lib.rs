//! A calculus for finitely generated subgroups of free groups, built on
//! Stallings graphs: folded, labeled graphs whose basepoint-rooted closed
//! paths spell out exactly the elements of a subgroup.
//!
//! The crate provides
//!
//! * the graph layer: labeled graphs as involutive dart structures, folding,
//!   coring, Euler characteristics, and canonical forms ([`LabeledGraph`]);
//! * the subgroup layer: membership, joins, conjugates, finite index,
//!   intersections via pullbacks, and double-coset decompositions
//!   ([`Subgroup`], [`intersect`], [`double_cosets`]);
//! * rank-inequality reports for the meet/join rank comparison and the
//!   Hanna Neumann bounds ([`im_inequality`], [`hanna_neumann_check`]);
//! * a parametric three-cycle graph family and the machinery that reproduces
//!   a counterexample to the Imrich-Mueller meet/join rank conjecture,
//!   together with its two certificates ([`build_gamma`], [`verify_theorem`]);
//! * coprime-quotient kernel constructions realizing extremal rank behaviour
//!   ([`build_example`], [`verify_example`]);
//! * a seeded random search probing when the meet rank bound is attained
//!   ([`problem_search`]);
//! * plain-text graph and subgroup formats plus DOT export ([`io`]).

mod alphabet;
mod canon;
mod error;
mod example;
mod fold;
mod gamma;
mod graph;
mod inequality;
pub mod io;
mod problem;
mod pullback;
mod subgroup;
mod word;

pub use alphabet::{Alphabet, Letter, SignedLetter};
pub use canon::CanonicalForm;
pub use error::{Error, Result};
pub use example::{build_example, verify_example, ExampleReport, QuotientSpec};
pub use gamma::{
    build_gamma, certificate_c1, certificate_c2, gamma_alphabet, gamma_base, recognize_gamma,
    theorem_pair, verify_theorem, CertificateC1, CertificateC2, GammaParams, Side, TheoremReport,
    Witness,
};
pub use graph::{Dart, LabeledGraph, Vertex};
pub use inequality::{
    generalized_im_inequality, hanna_neumann_check, im_inequality, GeneralizedReport,
    HannaNeumannReport, InequalityReport,
};
pub use problem::{problem_probe, problem_search, random_subgroup, Finding, ProbeResult,
    SearchOutcome};
pub use pullback::{double_cosets, intersect, pullback, CosetComponent, DoubleCosetReport,
    Pullback};
pub use subgroup::{kernel_of_finite_quotient, kernel_of_finite_quotient_with_budget,
    Permutation, Subgroup, DEFAULT_ELEMENT_BUDGET};
pub use word::Word;
