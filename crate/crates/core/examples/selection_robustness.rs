//! How stable is a ranking when only part of the journal universe is indexed?
//! Re-rank random subsets and correlate with the full ranking.
//!
//! ```bash
//! cargo run -p eigenfactor --example selection_robustness
//! ```

use eigenfactor::analysis::{robustness_harness, RobustnessConfig};
use eigenfactor::ranking::DampingParameters;
use eigenfactor::synthetic::random_network;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let net = random_network(40, 0.15, 2024);
    println!("{:>13} {:>8} {:>8} {:>8} {:>8}", "keep_fraction", "mean", "min", "max", "skipped");
    for keep_fraction in [1.0, 0.9, 0.75, 0.5, 0.25] {
        let config = RobustnessConfig {
            keep_fraction,
            trials: 100,
            seed: 42,
            params: DampingParameters::default(),
        };
        let report = robustness_harness(&net.registry, &net.edges, &config)?;
        match report.summary {
            Some(s) => println!(
                "{keep_fraction:>13} {:>8.4} {:>8.4} {:>8.4} {:>8}",
                s.mean, s.min, s.max, s.skipped
            ),
            None => println!("{keep_fraction:>13} every trial skipped"),
        }
    }
    Ok(())
}
