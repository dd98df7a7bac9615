use super::{ArticleVector, NormalizedMatrix, RankingError};

/// `H'`: the normalized matrix with every dangling column replaced by the
/// article vector. Kept implicit; only products are ever formed.
#[derive(Debug, Clone, Copy)]
pub struct PatchedMatrix<'a> {
    h: &'a NormalizedMatrix,
    articles: &'a ArticleVector,
}

impl<'a> PatchedMatrix<'a> {
    pub fn new(h: &'a NormalizedMatrix, articles: &'a ArticleVector) -> Result<Self, RankingError> {
        if h.n() != articles.len() {
            return Err(RankingError::DimensionMismatch {
                expected: h.n(),
                found: articles.len(),
            });
        }
        Ok(PatchedMatrix { h, articles })
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    pub fn normalized(&self) -> &'a NormalizedMatrix {
        self.h
    }

    pub fn articles(&self) -> &'a ArticleVector {
        self.articles
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        if self.h.is_dangling(j) {
            self.articles[i]
        } else {
            self.h.get(i, j)
        }
    }

    /// Column sums of `H'`. All equal one up to rounding.
    pub fn column_sums(&self) -> Vec<f64> {
        let article_sum: f64 = self.articles.iter().sum();
        (0..self.n())
            .map(|j| {
                if self.h.is_dangling(j) {
                    article_sum
                } else {
                    self.h.column(j).map(|(_, v)| v).sum()
                }
            })
            .collect()
    }

    /// Probability mass sitting on dangling journals.
    fn dangling_mass(&self, x: &[f64]) -> f64 {
        self.h.dangling().iter().map(|&j| x[j]).sum()
    }

    /// `out = H' x`.
    pub fn multiply_into(&self, x: &[f64], out: &mut [f64]) {
        self.h.multiply_into(x, out);
        let d = self.dangling_mass(x);
        if d != 0.0 {
            for (o, &a) in out.iter_mut().zip(self.articles.iter()) {
                *o += a * d;
            }
        }
    }

    pub fn multiply(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n()];
        self.multiply_into(x, &mut out);
        out
    }
}

/// How dangling columns enter the random walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DanglingTreatment {
    /// Dangling columns are replaced by the article vector (`H'`).
    Substitute,
    /// Dangling columns stay zero (`H`). The walk then leaks mass; only
    /// useful for demonstrating that the substitution matters.
    Drop,
}

/// The traversal matrix `P = alpha H' + (1 - alpha) a e^T`, applied without
/// ever being materialized.
#[derive(Debug, Clone, Copy)]
pub struct TraversalOperator<'a> {
    patched: PatchedMatrix<'a>,
    alpha: f64,
    dangling: DanglingTreatment,
}

impl<'a> TraversalOperator<'a> {
    /// `alpha` may be any value in `[0, 1]`; [`super::DampingParameters`]
    /// is stricter for production runs.
    pub fn new(patched: PatchedMatrix<'a>, alpha: f64) -> Result<Self, RankingError> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(RankingError::InvalidParameters(format!(
                "alpha must lie in [0, 1], got {alpha}"
            )));
        }
        Ok(TraversalOperator {
            patched,
            alpha,
            dangling: DanglingTreatment::Substitute,
        })
    }

    pub fn with_dangling(mut self, dangling: DanglingTreatment) -> Self {
        self.dangling = dangling;
        self
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn n(&self) -> usize {
        self.patched.n()
    }

    pub fn patched(&self) -> PatchedMatrix<'a> {
        self.patched
    }

    /// `out = P x = alpha H' x + (1 - alpha) a (e^T x)`.
    pub fn apply_into(&self, x: &[f64], out: &mut [f64]) -> Result<(), RankingError> {
        let n = self.n();
        for len in [x.len(), out.len()] {
            if len != n {
                return Err(RankingError::DimensionMismatch {
                    expected: n,
                    found: len,
                });
            }
        }
        match self.dangling {
            DanglingTreatment::Substitute => self.patched.multiply_into(x, out),
            DanglingTreatment::Drop => self.patched.normalized().multiply_into(x, out),
        }
        let mass: f64 = x.iter().sum();
        let teleport = (1.0 - self.alpha) * mass;
        for (o, &a) in out.iter_mut().zip(self.patched.articles().iter()) {
            *o = self.alpha * *o + teleport * a;
        }
        Ok(())
    }

    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>, RankingError> {
        let mut out = vec![0.0; self.n()];
        self.apply_into(x, &mut out)?;
        Ok(out)
    }
}
