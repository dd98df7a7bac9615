use serde::Serialize;

use super::{CitationEdge, GraphError, JournalRegistry, Location};

/// Sparse cross-citation matrix `Z`, stored column-compressed.
///
/// Entry `(i, j)` is the number of citations journal `j` issued to journal `i`.
/// The diagonal is always zero and absent entries are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossCitationMatrix {
    n: usize,
    col_ptr: Vec<usize>,
    row_idx: Vec<usize>,
    values: Vec<f64>,
    dropped_self_citations: f64,
}

impl CrossCitationMatrix {
    /// Accumulates `edges` over `registry`. Self-citations are dropped and
    /// repeated pairs are summed.
    pub fn build(registry: &JournalRegistry, edges: &[CitationEdge]) -> Result<Self, GraphError> {
        let n = registry.len();
        let mut columns: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
        let mut dropped: u64 = 0;

        for (k, edge) in edges.iter().enumerate() {
            let resolve = |id: &str| {
                registry.position(id).ok_or_else(|| GraphError::UnknownJournal {
                    id: id.to_string(),
                    location: None,
                })
            };
            let at = || Location::new("edge list", k as u64 + 1);
            let j = resolve(&edge.citing).map_err(|e| e.located(at()))?;
            let i = resolve(&edge.cited).map_err(|e| e.located(at()))?;
            if edge.count == 0 {
                return Err(GraphError::MalformedEdge {
                    citing: edge.citing.clone(),
                    cited: edge.cited.clone(),
                    reason: "count must be positive, got 0".into(),
                    location: Some(at()),
                });
            }
            if i == j {
                dropped += edge.count;
                continue;
            }
            columns[j].push((i, edge.count));
        }

        let mut col_ptr = Vec::with_capacity(n + 1);
        let mut row_idx = Vec::new();
        let mut values = Vec::new();
        col_ptr.push(0);
        for mut column in columns {
            column.sort_unstable_by_key(|&(row, _)| row);
            let mut iter = column.into_iter().peekable();
            while let Some((row, mut count)) = iter.next() {
                while let Some(&(next, more)) = iter.peek() {
                    if next != row {
                        break;
                    }
                    count += more;
                    iter.next();
                }
                row_idx.push(row);
                values.push(count as f64);
            }
            col_ptr.push(row_idx.len());
        }

        Ok(CrossCitationMatrix {
            n,
            col_ptr,
            row_idx,
            values,
            dropped_self_citations: dropped as f64,
        })
    }

    /// Builds a matrix from real-valued `(row, column, value)` triplets.
    /// Diagonal triplets are dropped, duplicates summed, zeros skipped.
    ///
    /// Panics on negative or non-finite values or out-of-range indices.
    pub fn from_triplets(n: usize, triplets: &[(usize, usize, f64)]) -> Self {
        let mut columns: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
        let mut dropped = 0.0;
        for &(i, j, v) in triplets {
            assert!(i < n && j < n, "triplet ({i}, {j}) out of range for n = {n}");
            assert!(v.is_finite() && v >= 0.0, "entry ({i}, {j}) = {v} must be finite and >= 0");
            if i == j {
                dropped += v;
            } else if v > 0.0 {
                columns[j].push((i, v));
            }
        }
        let mut col_ptr = vec![0];
        let mut row_idx = Vec::new();
        let mut values = Vec::new();
        for mut column in columns {
            column.sort_by_key(|&(row, _)| row);
            for (row, v) in column {
                if row_idx.len() > *col_ptr.last().unwrap() && *row_idx.last().unwrap() == row {
                    *values.last_mut().unwrap() += v;
                } else {
                    row_idx.push(row);
                    values.push(v);
                }
            }
            col_ptr.push(row_idx.len());
        }
        CrossCitationMatrix {
            n,
            col_ptr,
            row_idx,
            values,
            dropped_self_citations: dropped,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored (non-zero) entries.
    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// Citation mass removed because it was a self-citation.
    pub fn dropped_self_citations(&self) -> f64 {
        self.dropped_self_citations
    }

    /// Stored entries of column `j` as `(row, value)`, rows ascending.
    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.col_ptr[j]..self.col_ptr[j + 1];
        self.row_idx[range.clone()]
            .iter()
            .copied()
            .zip(self.values[range].iter().copied())
    }

    pub fn column_sum(&self, j: usize) -> f64 {
        self.column(j).map(|(_, v)| v).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let range = self.col_ptr[j]..self.col_ptr[j + 1];
        match self.row_idx[range.clone()].binary_search(&i) {
            Ok(k) => self.values[range.start + k],
            Err(_) => 0.0,
        }
    }

    /// All stored entries as `(row, column, value)`, column-major.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |j| self.column(j).map(move |(i, v)| (i, j, v)))
    }

    pub fn total(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Dense row-major copy.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut dense = vec![vec![0.0; self.n]; self.n];
        for (i, j, v) in self.triplets() {
            dense[i][j] = v;
        }
        dense
    }

    /// Reports dangling and isolated journals without touching the matrix.
    pub fn validate(&self) -> ValidationSummary {
        let mut row_nonzero = vec![false; self.n];
        for &i in &self.row_idx {
            row_nonzero[i] = true;
        }
        let dangling: Vec<usize> = (0..self.n)
            .filter(|&j| self.col_ptr[j] == self.col_ptr[j + 1])
            .collect();
        let isolated = dangling.iter().copied().filter(|&j| !row_nonzero[j]).collect();
        ValidationSummary {
            journals: self.n,
            stored_entries: self.nnz(),
            dangling,
            isolated,
            total_mass: self.total(),
            dropped_self_citations: self.dropped_self_citations,
        }
    }
}

/// Structural report on a cross-citation matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationSummary {
    pub journals: usize,
    pub stored_entries: usize,
    /// Columns with no outgoing citations.
    pub dangling: Vec<usize>,
    /// Journals that neither issue nor receive citations.
    pub isolated: Vec<usize>,
    pub total_mass: f64,
    pub dropped_self_citations: f64,
}
