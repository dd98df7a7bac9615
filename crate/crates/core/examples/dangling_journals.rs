//! Journals that cite nothing. Their columns are replaced by the article
//! vector; without that the random walk loses probability mass every step.
//!
//! ```bash
//! cargo run -p eigenfactor --example dangling_journals
//! ```

use eigenfactor::graph::{CitationEdge, CrossCitationMatrix, Journal, JournalRegistry};
use eigenfactor::ranking::{
    compute, DampingParameters, DanglingTreatment, PatchedMatrix, TraversalOperator,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let registry = JournalRegistry::new(vec![
        Journal::new("A", "Active A", 40),
        Journal::new("B", "Active B", 30),
        Journal::new("ARCH", "Archive Quarterly", 30),
    ])?;
    // ARCH is cited but issues no citations of its own.
    let edges = [
        CitationEdge::new("A", "B", 10),
        CitationEdge::new("A", "ARCH", 10),
        CitationEdge::new("B", "A", 5),
        CitationEdge::new("B", "ARCH", 15),
    ];
    let z = CrossCitationMatrix::build(&registry, &edges)?;
    let summary = z.validate();
    println!("dangling columns: {:?}", summary.dangling);

    let params = DampingParameters::default();
    let run = compute(&registry, &z, &params)?;
    let patched = PatchedMatrix::new(&run.normalized, &run.articles)?;
    println!("column sums of H': {:?}", patched.column_sums());
    println!("stationary vector: {:?}", run.stationary.pi);
    println!("eigenfactor:       {:?}", run.eigenfactor);

    let leaky = TraversalOperator::new(patched, params.alpha())?.with_dangling(DanglingTreatment::Drop);
    let mut x = run.articles.to_vec();
    print!("walk mass without the substitution:");
    for step in 0..=10 {
        if step % 2 == 0 {
            print!(" {:.4}", x.iter().sum::<f64>());
        }
        x = leaky.apply(&x)?;
    }
    println!();
    Ok(())
}
