//! Decay of ⟨R(μⁿ)f, f⟩ for the regular representation of ℤ.
//!
//! cargo run --release --example regular_z_decay

use grwalk::analysis::regular_z_decay;
use grwalk::measure::ProbMeasure;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mu = ProbMeasure::<i64, f64>::uniform([-1, 0, 1])?;
    let values = regular_z_decay(&mu, &[(0, 1.0)], 8000)?;
    for n in [0, 1, 2, 3, 10, 100, 1000, 4000, 8000] {
        println!("μ^{n}(0) = {:.6e}", values[n]);
    }
    for n in [1000, 2000] {
        println!("μ^{}(0) / μ^{n}(0) = {:.6}", 4 * n, values[4 * n] / values[n]);
    }

    let f = [(0, 0.6), (2, 0.8)];
    let values = regular_z_decay(&mu, &f, 200)?;
    println!("f = 0.6δ0 + 0.8δ2: n=0 {:.4}, n=10 {:.4}, n=200 {:.4}", values[0], values[10], values[200]);

    let periodic = ProbMeasure::<i64, f64>::uniform([-1, 1])?;
    println!("uniform{{-1, 1}}: {}", regular_z_decay(&periodic, &[(0, 1.0)], 10).unwrap_err());
    Ok(())
}
