use std::cmp::Ordering;

use serde::Serialize;

use crate::graph::JournalRegistry;

use super::{ArticleVector, NormalizedMatrix, RankingError, StationaryVector};

/// Eigenfactor scores: `100 * H pi / sum(H pi)`.
///
/// Uses `H`, not `H'`: journals that issue no citations pass no weight on.
pub fn eigenfactor_scores(
    h: &NormalizedMatrix,
    pi: &StationaryVector,
) -> Result<Vec<f64>, RankingError> {
    if pi.pi.len() != h.n() {
        return Err(RankingError::DimensionMismatch {
            expected: h.n(),
            found: pi.pi.len(),
        });
    }
    let weighted = h.multiply(&pi.pi);
    let total: f64 = weighted.iter().sum();
    if total.is_nan() || total <= 0.0 {
        return Err(RankingError::NoInternalCitations);
    }
    Ok(weighted.into_iter().map(|w| 100.0 * w / total).collect())
}

/// Article Influence: `0.01 * EF_i / a_i`, so the article-weighted mean is 1.
/// `None` for journals without articles.
pub fn article_influence(eigenfactor: &[f64], articles: &ArticleVector) -> Vec<Option<f64>> {
    eigenfactor
        .iter()
        .zip(articles.iter())
        .map(|(&ef, &a)| (a > 0.0).then(|| 0.01 * ef / a))
        .collect()
}

/// One journal's row in a ranking.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JournalScore {
    pub rank: usize,
    pub id: String,
    pub name: String,
    pub eigenfactor: f64,
    /// `None` when the journal published no articles.
    pub article_influence: Option<f64>,
    pub pi: f64,
    /// Position in the registry.
    #[serde(skip)]
    pub position: usize,
}

/// Orders journals by descending Eigenfactor, ties by ascending id, and
/// numbers them `1..=n`.
pub fn rank(
    registry: &JournalRegistry,
    eigenfactor: &[f64],
    article_influence: &[Option<f64>],
    pi: &[f64],
) -> Vec<JournalScore> {
    let mut order: Vec<usize> = (0..registry.len()).collect();
    order.sort_by(|&x, &y| match eigenfactor[y].total_cmp(&eigenfactor[x]) {
        Ordering::Equal => registry.journals()[x].id.cmp(&registry.journals()[y].id),
        other => other,
    });
    order
        .into_iter()
        .enumerate()
        .map(|(k, position)| {
            let journal = &registry.journals()[position];
            JournalScore {
                rank: k + 1,
                id: journal.id.clone(),
                name: journal.name.clone(),
                eigenfactor: eigenfactor[position],
                article_influence: article_influence[position],
                pi: pi[position],
                position,
            }
        })
        .collect()
}
