//! From a cross-citation matrix to Eigenfactor and Article Influence scores.
//!
//! The pipeline is
//!
//! 1. normalize the columns of `Z` into `H` ([`NormalizedMatrix`]),
//! 2. replace dangling columns by the article vector `a` to get `H'`
//!    ([`PatchedMatrix`]),
//! 3. find the stationary vector of `P = alpha H' + (1 - alpha) a e^T` by
//!    power iteration ([`leading_eigenvector`]),
//! 4. project it back through `H` ([`eigenfactor_scores`]).
//!
//! All matrix-vector products run sequentially in a fixed column order, so a
//! given input yields bit-identical output on a given machine.

mod article;
mod normalize;
mod power;
mod scores;
mod traversal;

pub use article::ArticleVector;
pub use normalize::NormalizedMatrix;
pub use power::{
    leading_eigenvector, DampingParameters, StationaryVector, DEFAULT_ALPHA,
    DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE,
};
pub use scores::{article_influence, eigenfactor_scores, rank, JournalScore};
pub use traversal::{DanglingTreatment, PatchedMatrix, TraversalOperator};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{CrossCitationMatrix, JournalRegistry};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RankingError {
    #[error("the network has no journals")]
    EmptyNetwork,
    #[error("every journal reports zero articles")]
    ZeroTotalArticles,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("no journal passes citation weight to another journal")]
    NoInternalCitations,
}

/// Run-level facts reported next to the scores.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankingMetadata {
    pub alpha: f64,
    pub tolerance: f64,
    pub max_iterations: usize,
    pub iterations: usize,
    pub residual: f64,
    pub journals: usize,
    pub dangling: usize,
    /// Label only; never used in the computation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census_year: Option<i32>,
}

/// Scores for every journal, in rank order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankingResult {
    pub metadata: RankingMetadata,
    pub journals: Vec<JournalScore>,
}

impl RankingResult {
    /// Eigenfactor scores indexed by registry position.
    pub fn eigenfactor_by_position(&self) -> Vec<f64> {
        self.by_position(|s| s.eigenfactor)
    }

    /// Stationary vector indexed by registry position.
    pub fn pi_by_position(&self) -> Vec<f64> {
        self.by_position(|s| s.pi)
    }

    /// Ranks indexed by registry position.
    pub fn rank_by_position(&self) -> Vec<usize> {
        self.by_position(|s| s.rank)
    }

    fn by_position<T: Copy + Default>(&self, field: impl Fn(&JournalScore) -> T) -> Vec<T> {
        let mut out = vec![T::default(); self.journals.len()];
        for score in &self.journals {
            out[score.position] = field(score);
        }
        out
    }
}

/// Intermediate products of a ranking run, for callers that need more than
/// the final table.
#[derive(Debug, Clone)]
pub struct Computation {
    pub normalized: NormalizedMatrix,
    pub articles: ArticleVector,
    pub stationary: StationaryVector,
    pub eigenfactor: Vec<f64>,
    pub article_influence: Vec<Option<f64>>,
}

/// Runs the full pipeline and keeps every intermediate.
pub fn compute(
    registry: &JournalRegistry,
    z: &CrossCitationMatrix,
    params: &DampingParameters,
) -> Result<Computation, RankingError> {
    if registry.is_empty() {
        return Err(RankingError::EmptyNetwork);
    }
    if z.n() != registry.len() {
        return Err(RankingError::DimensionMismatch {
            expected: registry.len(),
            found: z.n(),
        });
    }
    let articles = ArticleVector::from_registry(registry)?;
    let normalized = NormalizedMatrix::from_cross_citations(z);
    let patched = PatchedMatrix::new(&normalized, &articles)?;
    let stationary = leading_eigenvector(patched, params)?;
    let eigenfactor = eigenfactor_scores(&normalized, &stationary)?;
    let article_influence = article_influence(&eigenfactor, &articles);
    Ok(Computation {
        normalized,
        articles,
        stationary,
        eigenfactor,
        article_influence,
    })
}

/// Computes the ranked Eigenfactor table for a network.
pub fn compute_rankings(
    registry: &JournalRegistry,
    z: &CrossCitationMatrix,
    params: &DampingParameters,
) -> Result<RankingResult, RankingError> {
    let run = compute(registry, z, params)?;
    Ok(run.into_result(registry, params))
}

impl Computation {
    pub fn into_result(self, registry: &JournalRegistry, params: &DampingParameters) -> RankingResult {
        let journals = rank(
            registry,
            &self.eigenfactor,
            &self.article_influence,
            &self.stationary.pi,
        );
        RankingResult {
            metadata: RankingMetadata {
                alpha: params.alpha(),
                tolerance: params.tolerance(),
                max_iterations: params.max_iterations(),
                iterations: self.stationary.iterations,
                residual: self.stationary.residual,
                journals: registry.len(),
                dangling: self.normalized.dangling().len(),
                census_year: None,
            },
            journals,
        }
    }
}
