use thiserror::Error;

/// Errors shared by the model, the solvers, and the benchmark harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cost grid is not square: {rows} rows, but row {row} has {len} entries")]
    NonSquare { rows: usize, row: usize, len: usize },
    #[error("negative cost {value} at row {row}, column {col}")]
    NegativeCost { row: usize, col: usize, value: i64 },
    #[error("{len} entries do not form a {k}x{k} grid")]
    BadEntryCount { k: usize, len: usize },
    #[error("cost {value} at row {row}, column {col} exceeds the supported maximum")]
    CostTooLarge { row: usize, col: usize, value: u64 },
    #[error("assignment has {len} entries but the instance has size {k}")]
    DimensionMismatch { len: usize, k: usize },
    #[error("job {job} is assigned more than once")]
    DuplicateJob { job: usize },
    #[error("job {job} is out of range for size {k}")]
    JobOutOfRange { job: usize, k: usize },
    #[error("cost sum overflows the accumulator")]
    Overflow,
    #[error("{solver}: instance size {k} exceeds the cap of {cap}")]
    InstanceTooLarge {
        solver: &'static str,
        k: usize,
        cap: usize,
    },
    #[error("every zero is already covered; there is no uncovered cell to adjust")]
    NoUncoveredCell,
    #[error("node at depth {depth} is complete and cannot be expanded")]
    ExpandComplete { depth: usize },
    #[error("invalid cost range {lo}..{hi}")]
    InvalidRange { lo: u64, hi: u64 },
    #[error("invalid benchmark config: {0}")]
    InvalidBenchConfig(&'static str),
    #[error("unknown solver '{0}'")]
    UnknownSolver(String),
    #[error("not enough data to plot: {0}")]
    InsufficientData(&'static str),
}
