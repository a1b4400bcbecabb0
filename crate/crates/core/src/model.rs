//! Problem representation shared by every solver: the square cost matrix,
//! permutation assignments, and the solve report with its optional dual
//! certificate.

use serde::Serialize;

use crate::error::Error;

/// Largest cost value accepted for a single entry. Entries are kept within
/// `i64` range so the reduction arithmetic in the Hungarian solver stays in
/// signed 64-bit without surprises.
pub const MAX_COST: u64 = i64::MAX as u64;

/// Square grid of non-negative costs; `entry(i, j)` is the cost of worker
/// `i` performing job `j`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostMatrix {
    size: usize,
    entries: Vec<u64>,
}

impl CostMatrix {
    /// Validates and copies a row-major grid. The caller keeps ownership of
    /// its input.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self, Error> {
        let k = rows.len();
        let mut entries = Vec::with_capacity(k * k);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::NonSquare {
                    rows: k,
                    row: i,
                    len: row.len(),
                });
            }
            for (j, &value) in row.iter().enumerate() {
                if value < 0 {
                    return Err(Error::NegativeCost {
                        row: i,
                        col: j,
                        value,
                    });
                }
                entries.push(value as u64);
            }
        }
        Ok(CostMatrix { size: k, entries })
    }

    /// Builds a matrix from a flat row-major entry vector.
    pub fn from_entries(size: usize, entries: Vec<u64>) -> Result<Self, Error> {
        if entries.len() != size.checked_mul(size).ok_or(Error::Overflow)? {
            return Err(Error::BadEntryCount {
                k: size,
                len: entries.len(),
            });
        }
        for (idx, &value) in entries.iter().enumerate() {
            if value > MAX_COST {
                return Err(Error::CostTooLarge {
                    row: idx / size,
                    col: idx % size,
                    value,
                });
            }
        }
        Ok(CostMatrix { size, entries })
    }

    /// Number of workers (= number of jobs).
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn entry(&self, worker: usize, job: usize) -> u64 {
        self.entries[worker * self.size + job]
    }

    pub fn row(&self, worker: usize) -> &[u64] {
        &self.entries[worker * self.size..(worker + 1) * self.size]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Largest single entry, or 0 for the empty matrix.
    pub fn max_entry(&self) -> u64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }
}

/// A one-to-one mapping of workers to jobs: `mapping()[i]` is the job done by
/// worker `i`, and every job appears exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Assignment {
    mapping: Vec<usize>,
}

impl Assignment {
    /// Validates that `mapping` is a permutation of `0..mapping.len()`.
    pub fn new(mapping: Vec<usize>) -> Result<Self, Error> {
        validate_assignment(&mapping, mapping.len())?;
        Ok(Assignment { mapping })
    }

    /// Construction for callers that produce permutations by construction.
    pub(crate) fn from_permutation(mapping: Vec<usize>) -> Self {
        debug_assert!(validate_assignment(&mapping, mapping.len()).is_ok());
        Assignment { mapping }
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn job_for(&self, worker: usize) -> usize {
        self.mapping[worker]
    }
}

/// Checks that `mapping` has length `k` and is a permutation of `0..k`,
/// reporting the specific violation.
pub fn validate_assignment(mapping: &[usize], k: usize) -> Result<(), Error> {
    if mapping.len() != k {
        return Err(Error::DimensionMismatch {
            len: mapping.len(),
            k,
        });
    }
    let mut seen = vec![false; k];
    for &job in mapping {
        if job >= k {
            return Err(Error::JobOutOfRange { job, k });
        }
        if seen[job] {
            return Err(Error::DuplicateJob { job });
        }
        seen[job] = true;
    }
    Ok(())
}

/// Total cost of an assignment: the sum over workers of their assigned
/// entry. Overflow is reported rather than wrapped.
pub fn assignment_cost(matrix: &CostMatrix, assignment: &Assignment) -> Result<u64, Error> {
    validate_assignment(assignment.mapping(), matrix.size())?;
    let mut total: u64 = 0;
    for (worker, &job) in assignment.mapping().iter().enumerate() {
        total = total
            .checked_add(matrix.entry(worker, job))
            .ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// Row and column potentials proving optimality: `u[i] + v[j] <= entry(i, j)`
/// everywhere, with equality on assigned cells, and the potentials sum to
/// the optimal cost.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualCertificate {
    pub row_potentials: Vec<i64>,
    pub col_potentials: Vec<i64>,
}

impl DualCertificate {
    /// Sum of all potentials, computed wide so it never wraps.
    pub fn potential_total(&self) -> i128 {
        let rows: i128 = self.row_potentials.iter().map(|&u| i128::from(u)).sum();
        let cols: i128 = self.col_potentials.iter().map(|&v| i128::from(v)).sum();
        rows + cols
    }
}

/// What a solver hands back: the optimum, the witnessing assignment, work
/// counters, wall time, and (for the Hungarian route) a dual certificate.
///
/// `nodes_expanded` counts search-tree vertices whose children were
/// generated; for brute force it is the number of permutations evaluated and
/// for the Hungarian solver the number of adjust iterations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub optimal_cost: u64,
    pub assignment: Assignment,
    pub nodes_expanded: u64,
    pub edges_generated: u64,
    pub elapsed_ns: u64,
    pub certificate: Option<DualCertificate>,
}

impl SolveReport {
    /// Equality ignoring wall time, for determinism checks.
    pub fn same_outcome(&self, other: &SolveReport) -> bool {
        self.optimal_cost == other.optimal_cost
            && self.assignment == other.assignment
            && self.nodes_expanded == other.nodes_expanded
            && self.edges_generated == other.edges_generated
            && self.certificate == other.certificate
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn descending_3x3() -> CostMatrix {
        CostMatrix::new(&[vec![9, 8, 7], vec![6, 5, 4], vec![3, 2, 1]]).unwrap()
    }

    #[test]
    fn builds_the_3x3_fixture() {
        let m = descending_3x3();
        assert_eq!(m.size(), 3);
        assert_eq!(m.entry(0, 0), 9);
        assert_eq!(m.entry(2, 2), 1);
        assert_eq!(m.row(1), &[6, 5, 4]);
    }

    #[test]
    fn builds_a_single_cell_matrix() {
        let m = CostMatrix::new(&[vec![5]]).unwrap();
        assert_eq!(m.size(), 1);
        assert_eq!(m.entry(0, 0), 5);
    }

    #[test]
    fn rejects_ragged_grids() {
        let err = CostMatrix::new(&[vec![1, 2], vec![3, 4, 5]]).unwrap_err();
        assert_eq!(
            err,
            Error::NonSquare {
                rows: 2,
                row: 1,
                len: 3
            }
        );
    }

    #[test]
    fn rejects_negative_entries() {
        let err = CostMatrix::new(&[vec![1, -2], vec![3, 4]]).unwrap_err();
        assert_eq!(
            err,
            Error::NegativeCost {
                row: 0,
                col: 1,
                value: -2
            }
        );
    }

    #[test]
    fn input_grid_is_copied() {
        let rows = vec![vec![1, 2], vec![3, 4]];
        let m = CostMatrix::new(&rows).unwrap();
        assert_eq!(rows[0], vec![1, 2]);
        assert_eq!(m.entry(1, 1), 4);
    }

    #[test]
    fn empty_matrix_is_the_degenerate_case() {
        let m = CostMatrix::new(&[]).unwrap();
        assert_eq!(m.size(), 0);
        let a = Assignment::new(vec![]).unwrap();
        assert_eq!(assignment_cost(&m, &a).unwrap(), 0);
    }

    #[test]
    fn cost_of_identity_mapping_on_the_fixture() {
        let m = descending_3x3();
        let a = Assignment::new(vec![0, 1, 2]).unwrap();
        assert_eq!(assignment_cost(&m, &a).unwrap(), 15); // 9 + 5 + 1
    }

    #[test]
    fn cost_of_rotated_mapping_on_the_fixture() {
        let m = descending_3x3();
        let a = Assignment::new(vec![2, 0, 1]).unwrap();
        assert_eq!(assignment_cost(&m, &a).unwrap(), 15); // 7 + 6 + 2
    }

    #[test]
    fn zero_matrix_has_zero_cost() {
        let m = CostMatrix::new(&[vec![0]]).unwrap();
        let a = Assignment::new(vec![0]).unwrap();
        assert_eq!(assignment_cost(&m, &a).unwrap(), 0);
    }

    #[test]
    fn cost_overflow_is_reported() {
        let big = MAX_COST as i64;
        let m = CostMatrix::new(&[vec![big, big], vec![big, big]]).unwrap();
        let a = Assignment::new(vec![0, 1]).unwrap();
        assert_eq!(assignment_cost(&m, &a), Err(Error::Overflow));
    }

    #[test]
    fn validate_accepts_permutations() {
        assert!(validate_assignment(&[1, 0, 2], 3).is_ok());
    }

    #[test]
    fn validate_reports_duplicates() {
        assert_eq!(
            validate_assignment(&[0, 0, 2], 3),
            Err(Error::DuplicateJob { job: 0 })
        );
    }

    #[test]
    fn validate_reports_length_mismatch() {
        assert_eq!(
            validate_assignment(&[0, 1], 3),
            Err(Error::DimensionMismatch { len: 2, k: 3 })
        );
    }

    #[test]
    fn validate_reports_out_of_range() {
        assert_eq!(
            validate_assignment(&[0, 3, 1], 3),
            Err(Error::JobOutOfRange { job: 3, k: 3 })
        );
    }

    #[test]
    fn assignment_serializes_as_an_array() {
        let a = Assignment::new(vec![1, 0]).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), "[1,0]");
    }
}
