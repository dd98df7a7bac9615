//! Verification and stability tooling around the ranking pipeline.
//!
//! [`dense_oracle`] recomputes scores from a fully materialized traversal
//! matrix with a direct linear solve and shares no code with
//! [`crate::ranking`]. [`robustness_harness`] measures how much rankings move
//! when only part of the journal set is observed.

mod correlation;
mod oracle;
mod robustness;

pub use correlation::{average_ranks, rank_correlation};
pub use oracle::{dense_oracle, OracleResult, MAX_ORACLE_JOURNALS};
pub use robustness::{
    robustness_harness, sample_size, RobustnessConfig, RobustnessReport, RobustnessSummary,
    TrialOutcome, TrialStatus,
};

use thiserror::Error;

use crate::graph::GraphError;
use crate::ranking::RankingError;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("instance has {0} journals; the dense oracle accepts at most {MAX_ORACLE_JOURNALS}")]
    InstanceTooLarge(usize),
    #[error("the stationary system is singular")]
    SingularSystem,
    #[error("sample of {size} journals is too small (need at least 2)")]
    SampleTooSmall { size: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("sequences differ in length ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("rank correlation is undefined: {0}")]
    DegenerateInput(&'static str),
    #[error(transparent)]
    Ranking(#[from] RankingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
