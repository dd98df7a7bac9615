use super::AnalysisError;

/// 1-based ranks of `values` in ascending order; tied values share the mean
/// of the positions they occupy.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        // positions start+1 ..= end
        let shared = (start + 1 + end) as f64 / 2.0;
        for &k in &order[start..end] {
            ranks[k] = shared;
        }
        start = end;
    }
    ranks
}

/// Spearman's rho between two rankings (or any two score sequences), with
/// ties given average ranks.
///
/// Computed as the Pearson correlation of the average ranks, which reduces to
/// `1 - 6 sum(d^2) / (n (n^2 - 1))` when there are no ties.
pub fn rank_correlation(left: &[f64], right: &[f64]) -> Result<f64, AnalysisError> {
    if left.len() != right.len() {
        return Err(AnalysisError::LengthMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    if left.len() < 2 {
        return Err(AnalysisError::DegenerateInput("need at least two items"));
    }
    let x = average_ranks(left);
    let y = average_ranks(right);
    let n = x.len() as f64;
    let mean = (n + 1.0) / 2.0;

    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(&y) {
        let (da, db) = (a - mean, b - mean);
        sxy += da * db;
        sxx += da * da;
        syy += db * db;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(AnalysisError::DegenerateInput("a sequence is constant"));
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}
