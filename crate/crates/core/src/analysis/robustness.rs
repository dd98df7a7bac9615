use std::collections::HashSet;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{CitationEdge, CrossCitationMatrix, JournalRegistry};
use crate::ranking::{compute_rankings, DampingParameters, RankingError};

use super::{rank_correlation, AnalysisError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobustnessConfig {
    /// Fraction of journals kept in each trial, in `(0, 1]`.
    pub keep_fraction: f64,
    pub trials: usize,
    pub seed: u64,
    pub params: DampingParameters,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TrialStatus {
    Ok,
    /// The subnetwork had no citations between its journals.
    SkippedNoInternalCitations,
    /// Every sampled journal reported zero articles.
    SkippedZeroArticles,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialOutcome {
    pub trial: usize,
    pub status: TrialStatus,
    /// Spearman's rho between full-network and subnetwork ranks of the
    /// retained journals; `None` for skipped trials.
    pub correlation: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RobustnessSummary {
    pub completed: usize,
    pub skipped: usize,
    pub mean: f64,
    pub min: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RobustnessReport {
    pub trials: usize,
    pub keep_fraction: f64,
    pub sample_size: usize,
    pub journals: usize,
    pub seed: u64,
    pub alpha: f64,
    pub outcomes: Vec<TrialOutcome>,
    /// `None` when every trial was skipped.
    pub summary: Option<RobustnessSummary>,
}

impl RobustnessReport {
    pub fn correlations(&self) -> impl Iterator<Item = f64> + '_ {
        self.outcomes.iter().filter_map(|o| o.correlation)
    }
}

/// `ceil(keep_fraction * n)`, ignoring representation error in the product.
pub fn sample_size(keep_fraction: f64, n: usize) -> usize {
    let raw = keep_fraction * n as f64;
    let nearest = raw.round();
    if (raw - nearest).abs() < 1e-9 {
        nearest as usize
    } else {
        raw.ceil() as usize
    }
}

/// Re-ranks random journal subsets and compares each against the ranking of
/// the full network.
///
/// Trial `t` draws its sample from a ChaCha8 stream keyed by `(seed, t)`, so
/// results do not depend on how trials are scheduled across threads.
pub fn robustness_harness(
    registry: &JournalRegistry,
    edges: &[CitationEdge],
    config: &RobustnessConfig,
) -> Result<RobustnessReport, AnalysisError> {
    if !(config.keep_fraction > 0.0 && config.keep_fraction <= 1.0) {
        return Err(AnalysisError::InvalidParameters(format!(
            "keep_fraction must lie in (0, 1], got {}",
            config.keep_fraction
        )));
    }
    if config.trials == 0 {
        return Err(AnalysisError::InvalidParameters("trials must be at least 1".into()));
    }
    let n = registry.len();
    let k = sample_size(config.keep_fraction, n);
    if k < 2 {
        return Err(AnalysisError::SampleTooSmall { size: k });
    }

    let z = CrossCitationMatrix::build(registry, edges)?;
    let full = compute_rankings(registry, &z, &config.params)?;
    let full_ranks = full.rank_by_position();

    let outcomes = (0..config.trials)
        .into_par_iter()
        .map(|trial| run_trial(registry, edges, config, &full_ranks, k, trial))
        .collect::<Result<Vec<_>, _>>()?;

    let correlations: Vec<f64> = outcomes.iter().filter_map(|o| o.correlation).collect();
    let summary = (!correlations.is_empty()).then(|| RobustnessSummary {
        completed: correlations.len(),
        skipped: outcomes.len() - correlations.len(),
        mean: correlations.iter().sum::<f64>() / correlations.len() as f64,
        min: correlations.iter().copied().fold(f64::INFINITY, f64::min),
        max: correlations.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    });

    Ok(RobustnessReport {
        trials: config.trials,
        keep_fraction: config.keep_fraction,
        sample_size: k,
        journals: n,
        seed: config.seed,
        alpha: config.params.alpha(),
        outcomes,
        summary,
    })
}

fn run_trial(
    registry: &JournalRegistry,
    edges: &[CitationEdge],
    config: &RobustnessConfig,
    full_ranks: &[usize],
    k: usize,
    trial: usize,
) -> Result<TrialOutcome, AnalysisError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(trial as u64);
    let mut positions = index::sample(&mut rng, registry.len(), k).into_vec();
    positions.sort_unstable();

    let sub_registry = registry.subset(&positions);
    let kept: HashSet<&str> = sub_registry.iter().map(|j| j.id.as_str()).collect();
    let sub_edges: Vec<CitationEdge> = edges
        .iter()
        .filter(|e| kept.contains(e.citing.as_str()) && kept.contains(e.cited.as_str()))
        .cloned()
        .collect();
    let sub_z = CrossCitationMatrix::build(&sub_registry, &sub_edges)?;

    let skipped = |status| TrialOutcome {
        trial,
        status,
        correlation: None,
    };
    let sub = match compute_rankings(&sub_registry, &sub_z, &config.params) {
        Ok(result) => result,
        Err(RankingError::NoInternalCitations) => {
            return Ok(skipped(TrialStatus::SkippedNoInternalCitations))
        }
        Err(RankingError::ZeroTotalArticles) => {
            return Ok(skipped(TrialStatus::SkippedZeroArticles))
        }
        Err(other) => return Err(other.into()),
    };

    let before: Vec<f64> = positions.iter().map(|&p| full_ranks[p] as f64).collect();
    let after: Vec<f64> = sub.rank_by_position().into_iter().map(|r| r as f64).collect();
    Ok(TrialOutcome {
        trial,
        status: TrialStatus::Ok,
        correlation: Some(rank_correlation(&before, &after)?),
    })
}
