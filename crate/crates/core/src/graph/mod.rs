//! Journal metadata, citation edges and the cross-citation matrix.
//!
//! Everything downstream is indexed by the positions of a [`JournalRegistry`].
//! Column `j` of a [`CrossCitationMatrix`] holds the citations *issued* by
//! journal `j`; row `i` holds the citations *received* by journal `i`.

mod edges;
mod error;
mod journal;
mod matrix;

pub use edges::{load_edges, read_edges, CitationEdge};
pub use error::{GraphError, Location};
pub use journal::{load_registry, read_registry, Journal, JournalRegistry};
pub use matrix::{CrossCitationMatrix, ValidationSummary};

use std::path::Path;

/// Picks the field delimiter from a file extension: tab for `.tsv`/`.tab`,
/// comma for everything else.
pub fn delimiter_for(path: &Path) -> u8 {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("tsv") || ext.eq_ignore_ascii_case("tab") => b'\t',
        _ => b',',
    }
}
