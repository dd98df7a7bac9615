//! Rank a handful of journals built in memory.
//!
//! ```bash
//! cargo run -p eigenfactor --example quickstart
//! ```

use eigenfactor::graph::{CitationEdge, CrossCitationMatrix, Journal, JournalRegistry};
use eigenfactor::ranking::{compute_rankings, DampingParameters};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let registry = JournalRegistry::new(vec![
        Journal::new("ECOL", "Journal of Ecology", 300),
        Journal::new("EVOL", "Evolution Letters", 150),
        Journal::new("GEN", "Genetics Review", 220),
        Journal::new("STAT", "Statistical Ecology", 40),
    ])?;

    let edges = vec![
        CitationEdge::new("ECOL", "EVOL", 120),
        CitationEdge::new("ECOL", "GEN", 40),
        CitationEdge::new("ECOL", "STAT", 25),
        CitationEdge::new("ECOL", "ECOL", 400), // self-citations never count
        CitationEdge::new("EVOL", "ECOL", 90),
        CitationEdge::new("EVOL", "GEN", 150),
        CitationEdge::new("GEN", "EVOL", 60),
        CitationEdge::new("GEN", "ECOL", 10),
        CitationEdge::new("STAT", "ECOL", 15),
    ];

    let z = CrossCitationMatrix::build(&registry, &edges)?;
    let result = compute_rankings(&registry, &z, &DampingParameters::default())?;

    println!("{:<5} {:<6} {:>12} {:>12}", "rank", "id", "eigenfactor", "influence");
    for row in &result.journals {
        let ai = row.article_influence.map_or("n/a".to_string(), |v| format!("{v:.4}"));
        println!("{:<5} {:<6} {:>12.4} {:>12}", row.rank, row.id, row.eigenfactor, ai);
    }
    println!(
        "\nconverged in {} iterations (residual {:.1e})",
        result.metadata.iterations, result.metadata.residual
    );
    Ok(())
}
