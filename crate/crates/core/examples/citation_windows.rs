//! Two communities with the same citation volume, one citing recent work and
//! one citing older work. A two-year citations-per-article count favours the
//! fast community; the five-year Eigenfactor does not.
//!
//! ```bash
//! cargo run -p eigenfactor --example citation_windows
//! ```

use std::collections::HashMap;

use eigenfactor::graph::CrossCitationMatrix;
use eigenfactor::ranking::{compute, DampingParameters};
use eigenfactor::synthetic::{Community, TwoCommunityNetwork};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let net = TwoCommunityNetwork::new(4);

    let z = CrossCitationMatrix::build(&net.registry, &net.edges_within(5))?;
    let run = compute(&net.registry, &z, &DampingParameters::default())?;

    let mut two_year: HashMap<&str, u64> = HashMap::new();
    for edge in net.edges_within(2) {
        let key = net.registry.journals()[net.registry.position(&edge.cited).unwrap()].id.as_str();
        *two_year.entry(key).or_default() += edge.count;
    }

    println!("{:<4} {:<5} {:>12} {:>16}", "id", "kind", "eigenfactor", "2y cites/article");
    for (p, journal) in net.registry.iter().enumerate() {
        let rate = two_year.get(journal.id.as_str()).copied().unwrap_or(0) as f64 / journal.articles as f64;
        println!("{:<4} {:<5} {:>12.4} {:>16.2}", journal.id, format!("{:?}", net.community[p]), run.eigenfactor[p], rate);
    }
    for kind in [Community::Fast, Community::Slow] {
        let total: f64 = net.members(kind).map(|p| run.eigenfactor[p]).sum();
        println!("{kind:?} community Eigenfactor total: {total:.4}");
    }
    Ok(())
}
