//! Seeded synthetic citation networks for tests, examples and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{CitationEdge, Journal, JournalRegistry};

/// Journals plus an aggregated edge list.
#[derive(Debug, Clone)]
pub struct Network {
    pub registry: JournalRegistry,
    pub edges: Vec<CitationEdge>,
}

/// Parameters for [`random_network`].
#[derive(Debug, Clone, Copy)]
pub struct RandomNetwork {
    pub journals: usize,
    /// Probability that an ordered pair of distinct journals is linked.
    pub density: f64,
    pub max_count: u64,
    pub max_articles: u64,
    /// Probability that a journal reports zero articles.
    pub zero_articles: f64,
    /// Probability that a journal also cites itself.
    pub self_citations: f64,
}

impl RandomNetwork {
    pub fn new(journals: usize, density: f64) -> Self {
        RandomNetwork {
            journals,
            density,
            max_count: 50,
            max_articles: 500,
            zero_articles: 0.0,
            self_citations: 0.0,
        }
    }

    /// Draws a network. At least one journal always has articles.
    pub fn generate(&self, seed: u64) -> Network {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.journals;
        let mut journals: Vec<Journal> = (0..n)
            .map(|k| {
                let articles = if rng.random_bool(self.zero_articles) {
                    0
                } else {
                    rng.random_range(1..=self.max_articles)
                };
                Journal::new(format!("J{k:02}"), format!("Journal {k}"), articles)
            })
            .collect();
        if n > 0 && journals.iter().all(|j| j.articles == 0) {
            journals[0].articles = 1;
        }

        let mut edges = Vec::new();
        for citing in 0..n {
            for cited in 0..n {
                let p = if citing == cited { self.self_citations } else { self.density };
                if rng.random_bool(p) {
                    edges.push(CitationEdge::new(
                        journals[citing].id.clone(),
                        journals[cited].id.clone(),
                        rng.random_range(1..=self.max_count),
                    ));
                }
            }
        }
        Network {
            registry: JournalRegistry::new(journals).expect("generated ids are unique"),
            edges,
        }
    }
}

/// Shorthand for `RandomNetwork::new(journals, density).generate(seed)`.
pub fn random_network(journals: usize, density: f64, seed: u64) -> Network {
    RandomNetwork::new(journals, density).generate(seed)
}

/// Citations issued `lag` years after the cited articles appeared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatedCitation {
    pub citing: String,
    pub cited: String,
    pub lag: u8,
    pub count: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Community {
    /// Cites recent work; all citations arrive within two years.
    Fast,
    /// Cites older work; most citations arrive after year two.
    Slow,
}

/// Two mirror-image communities of equal size and citation volume that
/// differ only in how quickly they cite.
#[derive(Debug, Clone)]
pub struct TwoCommunityNetwork {
    pub registry: JournalRegistry,
    pub community: Vec<Community>,
    pub citations: Vec<DatedCitation>,
}

impl TwoCommunityNetwork {
    /// `size` journals per community, 100 articles each.
    pub fn new(size: usize) -> Self {
        let mut journals = Vec::new();
        let mut community = Vec::new();
        for (prefix, kind) in [("F", Community::Fast), ("S", Community::Slow)] {
            for k in 0..size {
                journals.push(Journal::new(format!("{prefix}{k}"), format!("{kind:?} journal {k}"), 100));
                community.push(kind);
            }
        }

        // (lag, count) profiles. Within a community each pair exchanges 30
        // citations; across communities, 5.
        let profile = |citing: Community, same: bool| -> &'static [(u8, u64)] {
            match (citing, same) {
                (Community::Fast, true) => &[(1, 15), (2, 15)],
                (Community::Fast, false) => &[(1, 3), (2, 2)],
                (Community::Slow, true) => &[(2, 3), (3, 9), (4, 9), (5, 9)],
                (Community::Slow, false) => &[(3, 2), (4, 2), (5, 1)],
            }
        };

        let mut citations = Vec::new();
        for (j, citing) in journals.iter().enumerate() {
            for (i, cited) in journals.iter().enumerate() {
                if i == j {
                    continue;
                }
                for &(lag, count) in profile(community[j], community[i] == community[j]) {
                    citations.push(DatedCitation {
                        citing: citing.id.clone(),
                        cited: cited.id.clone(),
                        lag,
                        count,
                    });
                }
            }
        }

        TwoCommunityNetwork {
            registry: JournalRegistry::new(journals).expect("generated ids are unique"),
            community,
            citations,
        }
    }

    /// Aggregated edge list of citations with `lag <= max_lag`.
    pub fn edges_within(&self, max_lag: u8) -> Vec<CitationEdge> {
        self.citations
            .iter()
            .filter(|c| c.lag <= max_lag)
            .map(|c| CitationEdge::new(c.citing.clone(), c.cited.clone(), c.count))
            .collect()
    }

    pub fn members(&self, kind: Community) -> impl Iterator<Item = usize> + '_ {
        self.community
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == kind)
            .map(|(k, _)| k)
    }
}
