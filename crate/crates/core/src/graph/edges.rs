use std::fs::File;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::journal::{check_header, csv_row_error};
use super::{delimiter_for, GraphError, JournalRegistry, Location};

const EDGES_HEADER: &[&str] = &["citing", "cited", "count"];

/// `count` citations issued by `citing` to articles of `cited`, aggregated
/// over the whole citation window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CitationEdge {
    pub citing: String,
    pub cited: String,
    pub count: u64,
}

impl CitationEdge {
    pub fn new(citing: impl Into<String>, cited: impl Into<String>, count: u64) -> Self {
        CitationEdge {
            citing: citing.into(),
            cited: cited.into(),
            count,
        }
    }

    pub fn is_self_citation(&self) -> bool {
        self.citing == self.cited
    }
}

/// Reads an edges file, resolving both endpoints against `registry` so that
/// unknown ids are reported with their line number.
pub fn load_edges(
    path: impl AsRef<Path>,
    registry: &JournalRegistry,
) -> Result<Vec<CitationEdge>, GraphError> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| GraphError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_edges(file, &path.display().to_string(), delimiter_for(path), registry)
}

/// Reads an edge table with header `citing,cited,count`.
pub fn read_edges<R: Read>(
    input: R,
    source_name: &str,
    delimiter: u8,
    registry: &JournalRegistry,
) -> Result<Vec<CitationEdge>, GraphError> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .trim(csv::Trim::All)
        .has_headers(true)
        .from_reader(input);
    check_header(&mut reader, source_name, EDGES_HEADER, "citing,cited,count")?;

    let mut edges = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| csv_row_error(e, source_name))?;
        let line = record.position().map_or(0, |p| p.line());
        let location = Location::new(source_name, line);

        let citing = record[0].to_string();
        let cited = record[1].to_string();
        let count = parse_count(&record[2], &citing, &cited, &location)?;

        for id in [&citing, &cited] {
            if registry.position(id).is_none() {
                return Err(GraphError::UnknownJournal {
                    id: id.clone(),
                    location: Some(location),
                });
            }
        }
        edges.push(CitationEdge { citing, cited, count });
    }
    Ok(edges)
}

fn parse_count(
    raw: &str,
    citing: &str,
    cited: &str,
    location: &Location,
) -> Result<u64, GraphError> {
    let nonpositive = |reason: String| GraphError::MalformedEdge {
        citing: citing.to_string(),
        cited: cited.to_string(),
        reason,
        location: Some(location.clone()),
    };
    match raw.parse::<i64>() {
        Ok(v) if v <= 0 => Err(nonpositive(format!("count must be positive, got {v}"))),
        Ok(v) => Ok(v as u64),
        Err(_) => match raw.parse::<u64>() {
            Ok(v) => Ok(v),
            Err(_) => Err(GraphError::MalformedRow {
                location: location.clone(),
                field: "count",
                reason: format!("`{raw}` is not a positive integer"),
            }),
        },
    }
}
