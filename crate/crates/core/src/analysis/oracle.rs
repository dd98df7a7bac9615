use nalgebra::{DMatrix, DVector};

use crate::graph::{CrossCitationMatrix, JournalRegistry};
use crate::ranking::RankingError;

use super::AnalysisError;

pub const MAX_ORACLE_JOURNALS: usize = 64;

/// `H pi` mass at or below this is treated as zero. LU round-off leaves
/// entries that are exactly zero in exact arithmetic at the 1e-17 level.
const ZERO_MASS: f64 = 1e-13;

/// Reference solution computed from dense matrices.
#[derive(Debug, Clone)]
pub struct OracleResult {
    /// Row-major `P = alpha H' + (1 - alpha) a e^T`.
    pub traversal: Vec<Vec<f64>>,
    pub pi: Vec<f64>,
    pub eigenfactor: Vec<f64>,
}

/// Materializes `H`, `H'` and `P` and obtains the stationary vector from the
/// linear system `(P - I) pi = 0, sum(pi) = 1` by LU decomposition.
///
/// Intended for small instances only (`n <= 64`).
pub fn dense_oracle(
    z: &CrossCitationMatrix,
    registry: &JournalRegistry,
    alpha: f64,
) -> Result<OracleResult, AnalysisError> {
    let n = registry.len();
    if n > MAX_ORACLE_JOURNALS {
        return Err(AnalysisError::InstanceTooLarge(n));
    }
    if n == 0 {
        return Err(RankingError::EmptyNetwork.into());
    }
    if z.n() != n {
        return Err(RankingError::DimensionMismatch {
            expected: n,
            found: z.n(),
        }
        .into());
    }
    if !(0.0..=1.0).contains(&alpha) {
        return Err(AnalysisError::InvalidParameters(format!("alpha = {alpha}")));
    }

    let total_articles: f64 = registry.iter().map(|j| j.articles as f64).sum();
    if total_articles == 0.0 {
        return Err(RankingError::ZeroTotalArticles.into());
    }
    let a = DVector::from_iterator(
        n,
        registry.iter().map(|j| j.articles as f64 / total_articles),
    );

    let mut zd = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                zd[(i, j)] = z.get(i, j);
            }
        }
    }

    let mut h = DMatrix::<f64>::zeros(n, n);
    let mut h_patched = DMatrix::<f64>::zeros(n, n);
    for j in 0..n {
        let col_sum: f64 = zd.column(j).sum();
        for i in 0..n {
            if col_sum > 0.0 {
                h[(i, j)] = zd[(i, j)] / col_sum;
                h_patched[(i, j)] = h[(i, j)];
            } else {
                h_patched[(i, j)] = a[i];
            }
        }
    }

    let ones = DMatrix::<f64>::from_element(1, n, 1.0);
    let p = &h_patched * alpha + (&a * &ones) * (1.0 - alpha);

    // (P - I) has rank n - 1; swap its last row for the normalization row.
    let mut system = &p - DMatrix::<f64>::identity(n, n);
    for j in 0..n {
        system[(n - 1, j)] = 1.0;
    }
    let mut rhs = DVector::<f64>::zeros(n);
    rhs[n - 1] = 1.0;
    let pi = system.lu().solve(&rhs).ok_or(AnalysisError::SingularSystem)?;

    let weighted = &h * &pi;
    let mass: f64 = weighted.sum();
    if mass <= ZERO_MASS {
        return Err(RankingError::NoInternalCitations.into());
    }
    let eigenfactor = weighted.iter().map(|w| 100.0 * w / mass).collect();

    let traversal = (0..n).map(|i| (0..n).map(|j| p[(i, j)]).collect()).collect();
    Ok(OracleResult {
        traversal,
        pi: pi.iter().copied().collect(),
        eigenfactor,
    })
}
