//! Compare the sparse power iteration against the dense reference solver on
//! random networks.
//!
//! ```bash
//! cargo run -p eigenfactor --example oracle_check
//! ```

use eigenfactor::analysis::dense_oracle;
use eigenfactor::graph::CrossCitationMatrix;
use eigenfactor::ranking::{compute, DampingParameters};
use eigenfactor::synthetic::random_network;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>3} {:>7} {:>5} {:>6} {:>12} {:>12}", "n", "density", "alpha", "iters", "max |d pi|", "max |d EF|");
    for (seed, (n, density)) in [(5, 0.3), (10, 0.2), (15, 0.5), (20, 0.8)].into_iter().enumerate() {
        for alpha in [0.5, 0.85, 0.99] {
            let net = random_network(n, density, seed as u64);
            let z = CrossCitationMatrix::build(&net.registry, &net.edges)?;
            let run = compute(&net.registry, &z, &DampingParameters::with_alpha(alpha)?)?;
            let oracle = dense_oracle(&z, &net.registry, alpha)?;
            let diff = |a: &[f64], b: &[f64]| {
                a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
            };
            println!(
                "{n:>3} {density:>7} {alpha:>5} {:>6} {:>12.2e} {:>12.2e}",
                run.stationary.iterations,
                diff(&run.stationary.pi, &oracle.pi),
                diff(&run.eigenfactor, &oracle.eigenfactor)
            );
        }
    }
    Ok(())
}
