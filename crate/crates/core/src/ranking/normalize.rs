use crate::graph::CrossCitationMatrix;

/// Column-normalized citation matrix `H`.
///
/// Every column with outgoing citations sums to one; columns of journals that
/// issue no citations are all zero and listed in [`dangling`](Self::dangling).
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedMatrix {
    n: usize,
    col_ptr: Vec<usize>,
    row_idx: Vec<usize>,
    values: Vec<f64>,
    dangling: Vec<usize>,
}

impl NormalizedMatrix {
    pub fn from_cross_citations(z: &CrossCitationMatrix) -> Self {
        let n = z.n();
        let mut col_ptr = Vec::with_capacity(n + 1);
        let mut row_idx = Vec::with_capacity(z.nnz());
        let mut values = Vec::with_capacity(z.nnz());
        let mut dangling = Vec::new();
        col_ptr.push(0);
        for j in 0..n {
            let sum = z.column_sum(j);
            if sum > 0.0 {
                for (i, v) in z.column(j) {
                    row_idx.push(i);
                    values.push(v / sum);
                }
            } else {
                dangling.push(j);
            }
            col_ptr.push(row_idx.len());
        }
        NormalizedMatrix {
            n,
            col_ptr,
            row_idx,
            values,
            dangling,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Columns whose source column in `Z` summed to zero, ascending.
    pub fn dangling(&self) -> &[usize] {
        &self.dangling
    }

    pub fn is_dangling(&self, j: usize) -> bool {
        self.col_ptr[j] == self.col_ptr[j + 1]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.col_ptr[j]..self.col_ptr[j + 1];
        self.row_idx[range.clone()]
            .iter()
            .copied()
            .zip(self.values[range].iter().copied())
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.column(j).find(|&(row, _)| row == i).map_or(0.0, |(_, v)| v)
    }

    /// All stored entries as `(row, column, value)`, column-major.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |j| self.column(j).map(move |(i, v)| (i, j, v)))
    }

    /// `out = H x`. Columns are visited in index order, so the result is
    /// bit-for-bit reproducible.
    pub fn multiply_into(&self, x: &[f64], out: &mut [f64]) {
        debug_assert_eq!(x.len(), self.n);
        debug_assert_eq!(out.len(), self.n);
        out.fill(0.0);
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0.0 {
                continue;
            }
            for k in self.col_ptr[j]..self.col_ptr[j + 1] {
                out[self.row_idx[k]] += self.values[k] * xj;
            }
        }
    }

    pub fn multiply(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        self.multiply_into(x, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(h: &NormalizedMatrix) -> Vec<Vec<f64>> {
        (0..h.n()).map(|i| (0..h.n()).map(|j| h.get(i, j)).collect()).collect()
    }

    #[test]
    fn single_entry_columns() {
        let z = CrossCitationMatrix::from_triplets(2, &[(0, 1, 1.0), (1, 0, 3.0)]);
        let h = NormalizedMatrix::from_cross_citations(&z);
        assert_eq!(dense(&h), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert!(h.dangling().is_empty());
    }

    #[test]
    fn three_by_three() {
        // Z = [[0,2,1],[1,0,1],[1,2,0]]
        let z = CrossCitationMatrix::from_triplets(
            3,
            &[(0, 1, 2.0), (0, 2, 1.0), (1, 0, 1.0), (1, 2, 1.0), (2, 0, 1.0), (2, 1, 2.0)],
        );
        let h = NormalizedMatrix::from_cross_citations(&z);
        assert_eq!(
            dense(&h),
            vec![vec![0.0, 0.5, 0.5], vec![0.5, 0.0, 0.5], vec![0.5, 0.5, 0.0]]
        );
    }

    #[test]
    fn zero_column_is_dangling() {
        let z = CrossCitationMatrix::from_triplets(2, &[(1, 0, 4.0)]);
        let h = NormalizedMatrix::from_cross_citations(&z);
        assert_eq!(h.dangling(), &[1]);
        assert!(h.is_dangling(1));
        assert_eq!(h.get(0, 1), 0.0);
        assert_eq!(h.get(1, 1), 0.0);
        assert_eq!(h.get(1, 0), 1.0);
    }

    #[test]
    fn multiply_matches_definition() {
        let z = CrossCitationMatrix::from_triplets(3, &[(0, 1, 1.0), (2, 1, 3.0), (1, 0, 2.0)]);
        let h = NormalizedMatrix::from_cross_citations(&z);
        let y = h.multiply(&[0.2, 0.8, 0.0]);
        assert_eq!(y, vec![0.25 * 0.8, 0.2, 0.75 * 0.8]);
    }
}
