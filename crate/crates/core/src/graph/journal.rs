use std::collections::HashMap;
use std::fs::File;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{delimiter_for, GraphError, Location};

pub(crate) const JOURNALS_HEADER: &[&str] = &["id", "name", "articles"];

/// A source journal and the number of articles it published in the
/// five-year window preceding the census year.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Journal {
    pub id: String,
    pub name: String,
    pub articles: u64,
}

impl Journal {
    pub fn new(id: impl Into<String>, name: impl Into<String>, articles: u64) -> Self {
        Journal {
            id: id.into(),
            name: name.into(),
            articles,
        }
    }
}

/// Ordered set of journals. Positions `0..len()` are the matrix indices used
/// everywhere else in the crate; the order is the insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JournalRegistry {
    journals: Vec<Journal>,
    index: HashMap<String, usize>,
}

impl JournalRegistry {
    /// Builds a registry, rejecting empty and duplicate ids.
    pub fn new(journals: Vec<Journal>) -> Result<Self, GraphError> {
        let mut registry = JournalRegistry::default();
        for journal in journals {
            registry.push(journal)?;
        }
        Ok(registry)
    }

    fn push(&mut self, journal: Journal) -> Result<(), GraphError> {
        if journal.id.is_empty() {
            return Err(GraphError::EmptyJournalId { location: None });
        }
        if self.index.contains_key(&journal.id) {
            return Err(GraphError::DuplicateJournalId {
                id: journal.id,
                location: None,
            });
        }
        self.index.insert(journal.id.clone(), self.journals.len());
        self.journals.push(journal);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.journals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.journals.is_empty()
    }

    pub fn journals(&self) -> &[Journal] {
        &self.journals
    }

    pub fn get(&self, position: usize) -> Option<&Journal> {
        self.journals.get(position)
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Journal> {
        self.journals.iter()
    }

    /// Registry restricted to `positions`, kept in the order given.
    pub fn subset(&self, positions: &[usize]) -> JournalRegistry {
        let journals = positions.iter().map(|&p| self.journals[p].clone()).collect();
        // ids were unique in self, so they stay unique in any subset
        JournalRegistry::new(journals).expect("subset of a valid registry")
    }

    /// Same journals in the order given by `order` (a permutation of positions).
    pub fn permuted(&self, order: &[usize]) -> JournalRegistry {
        assert_eq!(order.len(), self.len(), "permutation length");
        self.subset(order)
    }
}

/// Reads a journals table from a file. `.tsv` files are tab-separated.
pub fn load_registry(path: impl AsRef<Path>) -> Result<JournalRegistry, GraphError> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| GraphError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_registry(file, &path.display().to_string(), delimiter_for(path))
}

/// Reads a journals table with header `id,name,articles`.
///
/// `source_name` is only used in diagnostics.
pub fn read_registry<R: Read>(
    input: R,
    source_name: &str,
    delimiter: u8,
) -> Result<JournalRegistry, GraphError> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .trim(csv::Trim::All)
        .has_headers(true)
        .from_reader(input);
    check_header(&mut reader, source_name, JOURNALS_HEADER, "id,name,articles")?;

    let mut registry = JournalRegistry::default();
    for record in reader.records() {
        let record = record.map_err(|e| csv_row_error(e, source_name))?;
        let line = record.position().map_or(0, |p| p.line());
        let location = Location::new(source_name, line);

        let id = record[0].to_string();
        let name = record[1].to_string();
        let articles = parse_articles(&record[2], &id, &location)?;

        registry
            .push(Journal { id, name, articles })
            .map_err(|e| e.located(location))?;
    }
    Ok(registry)
}

fn parse_articles(raw: &str, id: &str, location: &Location) -> Result<u64, GraphError> {
    match raw.parse::<i64>() {
        Ok(v) if v < 0 => Err(GraphError::NegativeArticleCount {
            id: id.to_string(),
            location: Some(location.clone()),
        }),
        Ok(v) => Ok(v as u64),
        Err(_) => raw
            .parse::<u64>()
            .map_err(|_| GraphError::MalformedRow {
                location: location.clone(),
                field: "articles",
                reason: format!("`{raw}` is not a non-negative integer"),
            }),
    }
}

pub(crate) fn check_header<R: Read>(
    reader: &mut csv::Reader<R>,
    source_name: &str,
    expected: &[&str],
    expected_text: &'static str,
) -> Result<(), GraphError> {
    let headers = reader.headers().map_err(|e| csv_row_error(e, source_name))?;
    let found: Vec<&str> = headers.iter().collect();
    if found != expected {
        return Err(GraphError::BadHeader {
            source_name: source_name.to_string(),
            expected: expected_text,
            found: found.join(","),
        });
    }
    Ok(())
}

pub(crate) fn csv_row_error(err: csv::Error, source_name: &str) -> GraphError {
    let line = err.position().map_or(0, |p| p.line());
    match err.into_kind() {
        csv::ErrorKind::Io(source) => GraphError::Io {
            path: source_name.into(),
            source,
        },
        csv::ErrorKind::UnequalLengths { expected_len, len, .. } => GraphError::MalformedRow {
            location: Location::new(source_name, line),
            field: "row",
            reason: format!("expected {expected_len} fields, found {len}"),
        },
        csv::ErrorKind::Utf8 { err, .. } => GraphError::MalformedRow {
            location: Location::new(source_name, line),
            field: "row",
            reason: format!("invalid UTF-8 in field {}", err.field() + 1),
        },
        other => GraphError::MalformedRow {
            location: Location::new(source_name, line),
            field: "row",
            reason: format!("{other:?}"),
        },
    }
}
