//! Group-theoretic partial matrix multiplication.
//!
//! Subsets `S, T, U` of a finite group index a matrix product through the
//! group algebra. When they fail the triple product property the product
//! picks up spurious ("aliasing") terms; zeroing input entries that cover the
//! aliasing leaves a correct *partial* product whose size `f` still yields an
//! upper bound on the exponent of matrix multiplication.
//!
//! * [`group`]: finite group arithmetic (tables, cyclic powers, dihedral, `H ≀ S₂`)
//! * [`indexing`]: triple product property and aliasing enumeration
//! * [`cover`]: the `f` objective, branch and bound, König heuristic
//! * [`hardness`]: INDEPENDENT-SET reduction and certificate checking
//! * [`bound`]: character-degree spectra and the `ω` fixed-point solver
//! * [`engine`]: the group-algebra multiplication on integer matrices
//! * [`constructions`]: wreath-product sets, original and relaxed

pub mod bound;
pub mod constructions;
pub mod cover;
pub mod engine;
pub mod error;
pub mod group;
pub mod hardness;
pub mod indexing;

pub use bound::{degrees_for, solve_omega, supply_degrees, tpp_bound, BoundResult, DegreeSpectrum};
pub use constructions::{
    build_sets, classify_aliasing, formula_f, paper_cover, AliasingTaxonomy, WreathConstruction,
};
pub use cover::{
    brute_force_max_f, exact_max_f, f_value, heuristic_cover, is_cover, Cover, ExactOptions,
    PartialPatternInstance, SolveMethod, SolveReport,
};
pub use engine::{convolve, cu_multiply, embed, predicted_output, GroupAlgebraElement, IntMatrix};
pub use error::{Error, Result};
pub use group::{Group, GroupDescriptor, GroupElement};
pub use hardness::{
    brute_force_alpha, reduce_independent_set, verify_certificate, Certificate, SimpleGraph, Symbol,
};
pub use indexing::{
    check_tpp, enumerate_aliasing, AliasingSet, AliasingTriple, EntryIndex, IndexingTriple,
    WorkBudget,
};
