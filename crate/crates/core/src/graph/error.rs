use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

/// Where in an input file a problem was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Location {
    pub source: String,
    pub line: u64,
}

impl Location {
    pub fn new(source: impl Into<String>, line: u64) -> Self {
        Location {
            source: source.into(),
            line,
        }
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.source, self.line)
    }
}

/// Renders an optional location as a `" (at file:line)"` suffix.
struct At<'a>(&'a Option<Location>);

impl fmt::Display for At<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(loc) => write!(f, " (at {loc})"),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{source_name}: expected header `{expected}`, found `{found}`")]
    BadHeader {
        source_name: String,
        expected: &'static str,
        found: String,
    },

    #[error("{location}: malformed row, field `{field}`: {reason}")]
    MalformedRow {
        location: Location,
        field: &'static str,
        reason: String,
    },

    #[error("duplicate journal id `{id}`{}", At(.location))]
    DuplicateJournalId {
        id: String,
        location: Option<Location>,
    },

    #[error("journal `{id}` has a negative article count{}", At(.location))]
    NegativeArticleCount {
        id: String,
        location: Option<Location>,
    },

    #[error("journal id must be non-empty{}", At(.location))]
    EmptyJournalId { location: Option<Location> },

    #[error("unknown journal `{id}`{}", At(.location))]
    UnknownJournal {
        id: String,
        location: Option<Location>,
    },

    #[error("malformed edge {citing} -> {cited}: {reason}{}", At(.location))]
    MalformedEdge {
        citing: String,
        cited: String,
        reason: String,
        location: Option<Location>,
    },
}

impl GraphError {
    /// Attaches a location to errors raised by in-memory construction.
    pub(crate) fn located(self, at: Location) -> Self {
        match self {
            GraphError::DuplicateJournalId { id, location: None } => GraphError::DuplicateJournalId {
                id,
                location: Some(at),
            },
            GraphError::EmptyJournalId { location: None } => {
                GraphError::EmptyJournalId { location: Some(at) }
            }
            GraphError::UnknownJournal { id, location: None } => GraphError::UnknownJournal {
                id,
                location: Some(at),
            },
            GraphError::MalformedEdge {
                citing,
                cited,
                reason,
                location: None,
            } => GraphError::MalformedEdge {
                citing,
                cited,
                reason,
                location: Some(at),
            },
            other => other,
        }
    }
}
