//! Exact solvers for the balanced assignment problem: assign `K` workers to
//! `K` jobs, one-to-one, minimizing total cost.
//!
//! The crate offers several routes to the same optimum and the plumbing to
//! compare them:
//!
//! * [`solve_brute_force`] — exhaustive enumeration of all `K!` assignments,
//!   the correctness oracle for everything else.
//! * [`solve_hungarian`] — the reduce / cover / adjust scheme with explicit
//!   row and column potentials, returning a verifiable [`DualCertificate`].
//! * [`solve_bnb`] — branch and bound over the tree of partial assignments,
//!   with FIFO, LIFO, least-cost, and best-first ([`Strategy`]) frontiers.
//! * [`bench`] — seeded instance generation, timed trials, CSV records, and
//!   an SVG comparison chart.
//!
//! All solvers report work counters in a [`SolveReport`] so their costs can
//! be compared instance by instance.

pub mod bench;
pub mod bnb;
pub mod brute;
pub mod error;
pub mod hungarian;
pub mod matrix_file;
pub mod model;
pub mod perm;
pub mod plot;
pub mod solver;

mod clock;

pub use bench::{
    emit_csv, gen_instance, run_suite, run_trial, trial_seed, BenchConfig, BenchRecord, CostRange,
    SuiteOutcome, TrialId, TrialOutcome,
};
pub use bnb::{
    expand, lower_bound, solve_bnb, solve_bnb_capped, solve_bnb_full, solve_bnb_full_capped,
    tree_stats_check, ExploredTreeStats, SearchNode, Strategy, TreeStatsViolation,
};
pub use brute::{solve_brute_force, solve_brute_force_capped, DEFAULT_BRUTE_CAP};
pub use error::Error;
pub use hungarian::{
    min_line_cover, solve_hungarian, verify_certificate, CertificateViolation, LineCover,
    ReducedState,
};
pub use matrix_file::{parse_matrix, serialize_matrix, ParseError};
pub use model::{
    assignment_cost, validate_assignment, Assignment, CostMatrix, DualCertificate, SolveReport,
    MAX_COST,
};
pub use perm::{permutations, Permutations};
pub use plot::emit_svg_plot;
pub use solver::SolverKind;
