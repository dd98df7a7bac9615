use std::ops::Deref;

use crate::graph::JournalRegistry;

use super::RankingError;

/// Each journal's share of all articles published in the window.
#[derive(Debug, Clone, PartialEq)]
pub struct ArticleVector(Vec<f64>);

impl ArticleVector {
    pub fn from_registry(registry: &JournalRegistry) -> Result<Self, RankingError> {
        Self::from_counts(&registry.iter().map(|j| j.articles).collect::<Vec<_>>())
    }

    pub fn from_counts(counts: &[u64]) -> Result<Self, RankingError> {
        let total: u64 = counts.iter().sum();
        if total == 0 {
            return Err(RankingError::ZeroTotalArticles);
        }
        let total = total as f64;
        Ok(ArticleVector(counts.iter().map(|&c| c as f64 / total).collect()))
    }

    /// Wraps an explicit weight vector after checking it is a probability
    /// vector (non-negative, sums to one within `1e-12`).
    pub fn from_weights(weights: Vec<f64>) -> Result<Self, RankingError> {
        let sum: f64 = weights.iter().sum();
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) || (sum - 1.0).abs() > 1e-12 {
            return Err(RankingError::InvalidParameters(format!(
                "article weights must be non-negative and sum to 1 (sum = {sum})"
            )));
        }
        Ok(ArticleVector(weights))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl Deref for ArticleVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}
