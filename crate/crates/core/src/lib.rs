//! Gröbner basis computation over exact rationals, with both the classical
//! static Buchberger algorithm and a dynamic variant that discovers a term
//! ordering during the run.
//!
//! The dynamic driver keeps a linear program describing the cone of
//! orderings consistent with the leading terms chosen so far, refines it
//! as the basis grows, and uses two geometric criteria to keep the linear
//! programs small and few: a boundary-vector approximation of the cone's
//! cross-section that filters candidate leading terms before any
//! constraints are built, and a registry of constraint sets already known
//! to be inconsistent.

pub mod cones;
pub mod engine;
pub mod hilbert;
pub mod order;
pub mod poly;
pub mod simplex;
pub mod systems;
pub mod term;

pub use cones::{
    compute_boundary_vectors, compute_boundary_vectors_at, constraints_for, feasible_weight,
    filter_by_boundary_vectors, solve, BoundaryVectorSet, Constraint, ConstraintSystem,
    RejectRegistry, SimplexOutcome,
};
pub use engine::{
    distinct_term_count, dynamic_run, interreduce, is_groebner_oracle, monitor_lts, static_run,
    MonitorOutcome, RunResult, Stats, Strategy, StrategyConfig,
};
pub use hilbert::{
    compare_candidates, hilbert_data, hilbert_numerator, standard_monomial_count, CandidateCmp,
    HilbertData, MonomialIdeal,
};
pub use order::{TermOrdering, TieBreak};
pub use poly::{reduce, reduce_top, s_polynomial, Coeff, Polynomial, SugarKind, TrackedPolynomial};
pub use simplex::Sense;
pub use systems::{generate_cyclic, generate_katsura, SystemError};
pub use term::Term;
