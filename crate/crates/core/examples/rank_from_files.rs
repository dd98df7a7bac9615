//! Load a journals table and an edge list from disk and print the ranking as
//! CSV and JSON.
//!
//! ```bash
//! cargo run -p eigenfactor --example rank_from_files
//! cargo run -p eigenfactor --example rank_from_files -- my_journals.csv my_edges.csv
//! ```

use std::io;
use std::path::PathBuf;

use eigenfactor::graph::{load_edges, load_registry, CrossCitationMatrix};
use eigenfactor::output::{write_rankings, Format};
use eigenfactor::ranking::{compute_rankings, DampingParameters};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let mut args = std::env::args().skip(1);
    let journals = args.next().map_or(data.join("journals.csv"), PathBuf::from);
    let edges = args.next().map_or(data.join("edges.csv"), PathBuf::from);

    let registry = load_registry(&journals)?;
    let edges = load_edges(&edges, &registry)?;
    let z = CrossCitationMatrix::build(&registry, &edges)?;
    let mut result = compute_rankings(&registry, &z, &DampingParameters::default())?;
    result.metadata.census_year = Some(2019);

    write_rankings(io::stdout().lock(), &result, Format::Csv, None)?;
    println!();
    write_rankings(io::stdout().lock(), &result, Format::Json, Some(3))?;
    Ok(())
}
