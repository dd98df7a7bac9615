//! Eigenfactor and Article Influence scores for journal citation networks.
//!
//! Journals rank highly when they are cited by journals that themselves rank
//! highly. Scores come from the stationary distribution of a damped random
//! walk over the journal-to-journal citation matrix, with self-citations
//! removed and journals that cite nothing redistributed in proportion to
//! article output.
//!
//! ```
//! use eigenfactor::graph::{CitationEdge, CrossCitationMatrix, Journal, JournalRegistry};
//! use eigenfactor::ranking::{compute_rankings, DampingParameters};
//!
//! let registry = JournalRegistry::new(vec![
//!     Journal::new("A", "Journal A", 10),
//!     Journal::new("B", "Journal B", 10),
//! ])
//! .unwrap();
//! let edges = [CitationEdge::new("A", "B", 3), CitationEdge::new("B", "A", 3)];
//! let z = CrossCitationMatrix::build(&registry, &edges).unwrap();
//! let result = compute_rankings(&registry, &z, &DampingParameters::default()).unwrap();
//! assert_eq!(result.journals[0].eigenfactor, 50.0);
//! ```
//!
//! Modules:
//!
//! - [`graph`]: journals, edge lists and the cross-citation matrix
//! - [`ranking`]: normalization, dangling correction, power iteration, scores
//! - [`analysis`]: dense reference solver and journal-selection robustness
//! - [`output`]: CSV/JSON tables, DOT/GraphML citation-flow graphs
//! - [`synthetic`]: seeded test networks
//! - [`cli`]: the `eigenfactor` command line

pub mod analysis;
pub mod cli;
pub mod graph;
pub mod output;
pub mod ranking;
pub mod synthetic;
