use serde::{Deserialize, Serialize};

use super::{PatchedMatrix, RankingError, TraversalOperator};

pub const DEFAULT_ALPHA: f64 = 0.85;
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_MAX_ITERATIONS: usize = 100_000;

/// Damping factor and stopping rule for the power iteration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DampingParameters {
    alpha: f64,
    tolerance: f64,
    max_iterations: usize,
}

impl DampingParameters {
    /// Requires `0 < alpha < 1`, `tolerance > 0` and `max_iterations >= 1`.
    pub fn new(alpha: f64, tolerance: f64, max_iterations: usize) -> Result<Self, RankingError> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(RankingError::InvalidParameters(format!(
                "alpha must lie strictly between 0 and 1, got {alpha}"
            )));
        }
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(RankingError::InvalidParameters(format!(
                "tolerance must be positive, got {tolerance}"
            )));
        }
        if max_iterations == 0 {
            return Err(RankingError::InvalidParameters(
                "max_iterations must be at least 1".into(),
            ));
        }
        Ok(DampingParameters {
            alpha,
            tolerance,
            max_iterations,
        })
    }

    pub fn with_alpha(alpha: f64) -> Result<Self, RankingError> {
        Self::new(alpha, DEFAULT_TOLERANCE, DEFAULT_MAX_ITERATIONS)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn max_iterations(&self) -> usize {
        self.max_iterations
    }
}

impl Default for DampingParameters {
    fn default() -> Self {
        DampingParameters {
            alpha: DEFAULT_ALPHA,
            tolerance: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

/// Stationary distribution of the traversal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct StationaryVector {
    pub pi: Vec<f64>,
    pub iterations: usize,
    /// L1 change of the last step.
    pub residual: f64,
}

/// Power iteration on `P = alpha H' + (1 - alpha) a e^T`, started from the
/// article vector.
///
/// Each iterate is rescaled to sum to one. Stops once the L1 change between
/// consecutive iterates is at most `params.tolerance()`.
pub fn leading_eigenvector(
    patched: PatchedMatrix<'_>,
    params: &DampingParameters,
) -> Result<StationaryVector, RankingError> {
    let n = patched.n();
    if n == 0 {
        return Err(RankingError::EmptyNetwork);
    }
    let op = TraversalOperator::new(patched, params.alpha())?;

    let mut x = patched.articles().to_vec();
    let mut next = vec![0.0; n];
    let mut residual = f64::INFINITY;

    for iteration in 1..=params.max_iterations() {
        op.apply_into(&x, &mut next)?;
        let total: f64 = next.iter().sum();
        for v in &mut next {
            *v /= total;
        }
        residual = x.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut x, &mut next);
        if residual <= params.tolerance() {
            return Ok(StationaryVector {
                pi: x,
                iterations: iteration,
                residual,
            });
        }
    }

    Err(RankingError::NoConvergence {
        iterations: params.max_iterations(),
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CrossCitationMatrix;
    use crate::ranking::{ArticleVector, NormalizedMatrix};

    #[test]
    fn parameter_validation() {
        assert!(DampingParameters::new(0.0, 1e-12, 10).is_err());
        assert!(DampingParameters::new(1.0, 1e-12, 10).is_err());
        assert!(DampingParameters::new(f64::NAN, 1e-12, 10).is_err());
        assert!(DampingParameters::new(0.5, 0.0, 10).is_err());
        assert!(DampingParameters::new(0.5, 1e-9, 0).is_err());
        let d = DampingParameters::default();
        assert_eq!((d.alpha(), d.tolerance(), d.max_iterations()), (0.85, 1e-12, 100_000));
    }

    #[test]
    fn symmetric_cycle_is_uniform() {
        let h = NormalizedMatrix::from_cross_citations(&CrossCitationMatrix::from_triplets(
            2,
            &[(0, 1, 5.0), (1, 0, 5.0)],
        ));
        let a = ArticleVector::from_counts(&[1, 1]).unwrap();
        for alpha in [0.1, 0.5, 0.85, 0.99] {
            let pi = leading_eigenvector(
                PatchedMatrix::new(&h, &a).unwrap(),
                &DampingParameters::with_alpha(alpha).unwrap(),
            )
            .unwrap();
            assert_eq!(pi.pi, vec![0.5, 0.5]);
        }
    }

    #[test]
    fn rank_one_converges_in_one_step() {
        // every column dangling, so H' = a e^T
        let h = NormalizedMatrix::from_cross_citations(&CrossCitationMatrix::from_triplets(3, &[]));
        let a = ArticleVector::from_counts(&[1, 2, 5]).unwrap();
        let pi =
            leading_eigenvector(PatchedMatrix::new(&h, &a).unwrap(), &DampingParameters::default())
                .unwrap();
        assert_eq!(pi.iterations, 1);
        for (p, q) in pi.pi.iter().zip(a.iter()) {
            assert!((p - q).abs() < 1e-15);
        }
    }

    #[test]
    fn no_convergence_reports_budget() {
        let h = NormalizedMatrix::from_cross_citations(&CrossCitationMatrix::from_triplets(
            3,
            &[(1, 0, 1.0), (2, 1, 1.0), (0, 2, 1.0), (0, 1, 1.0)],
        ));
        let a = ArticleVector::from_counts(&[5, 1, 1]).unwrap();
        let params = DampingParameters::new(0.85, 1e-14, 3).unwrap();
        match leading_eigenvector(PatchedMatrix::new(&h, &a).unwrap(), &params) {
            Err(RankingError::NoConvergence { iterations, residual }) => {
                assert_eq!(iterations, 3);
                assert!(residual > 1e-14);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
