//! Exhaustive solver: evaluates every one of the `K!` assignments and keeps
//! the cheapest. Useless beyond small `K`, which is exactly what makes it a
//! trustworthy oracle for the other solvers.

use crate::clock::Stopwatch;
use crate::error::Error;
use crate::model::{Assignment, CostMatrix, SolveReport};
use crate::perm::next_permutation;

/// Default size cap; `13!` permutations is already north of six billion.
pub const DEFAULT_BRUTE_CAP: usize = 12;

/// Solves by full enumeration with the default size cap.
pub fn solve_brute_force(matrix: &CostMatrix) -> Result<SolveReport, Error> {
    solve_brute_force_capped(matrix, Some(DEFAULT_BRUTE_CAP))
}

/// Solves by full enumeration. `cap: None` removes the size guard; the
/// caller owns the consequences.
///
/// The incumbent starts at infinity and is replaced only on strictly
/// cheaper assignments, so the lexicographically first minimizer wins.
/// `nodes_expanded` is the number of permutations evaluated, i.e. `K!`.
pub fn solve_brute_force_capped(
    matrix: &CostMatrix,
    cap: Option<usize>,
) -> Result<SolveReport, Error> {
    let k = matrix.size();
    if let Some(cap) = cap {
        if k > cap {
            return Err(Error::InstanceTooLarge {
                solver: "brute",
                k,
                cap,
            });
        }
    }
    let sw = Stopwatch::start();
    let mut current: Vec<usize> = (0..k).collect();
    let mut best: Vec<usize> = current.clone();
    let mut best_cost: Option<u64> = None;
    let mut evaluated: u64 = 0;
    loop {
        evaluated += 1;
        let mut total: u64 = 0;
        for (worker, &job) in current.iter().enumerate() {
            total = total
                .checked_add(matrix.entry(worker, job))
                .ok_or(Error::Overflow)?;
        }
        if best_cost.map_or(true, |b| total < b) {
            best_cost = Some(total);
            best.clone_from_slice(&current);
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    Ok(SolveReport {
        optimal_cost: best_cost.expect("at least one permutation is always enumerated"),
        assignment: Assignment::from_permutation(best),
        nodes_expanded: evaluated,
        edges_generated: 0,
        elapsed_ns: sw.elapsed_ns(),
        certificate: None,
    })
}
