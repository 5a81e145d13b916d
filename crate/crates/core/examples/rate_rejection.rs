//! Testing candidate mixing rates against sampled coefficient trajectories.
//!
//! cargo run --release --example rate_rejection

use grwalk::analysis::{rate_test, RateCandidate, RateThresholds};
use grwalk::group::FiniteGroup;
use grwalk::measure::ProbMeasure;
use grwalk::rep::{basis_vector, MatrixRep};
use grwalk::walk::{ensemble_run, Trajectory};
use num_complex::Complex64;
use num_rational::BigRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s3 = FiniteGroup::symmetric(3)?;
    let mu = ProbMeasure::<usize, BigRational>::uniform(
        ["e", "(12)", "(23)"]
            .iter()
            .map(|l| s3.element(l))
            .collect::<Result<Vec<_>, _>>()?,
    )?;
    let rho = MatrixRep::standard(&s3)?;
    let e1 = basis_vector(2, 0);
    let ensemble = ensemble_run(&mu, &rho, &e1, &e1, 10_000, 200, 7)?;
    let thresholds = RateThresholds::default();

    println!("S3 standard rep, u = v = e1, N = 10^4, 200 paths");
    for candidate in RateCandidate::default_battery() {
        let report = rate_test(&ensemble.trajectories, &candidate, &thresholds)?;
        let q = report.stats.growth_quantiles;
        println!(
            "  {:<14} growth M(N)/M(N/4): q10 {:.3}  median {:.3}  q90 {:.3}  saturated {:.2}  -> {}",
            candidate.to_string(),
            q[0],
            q[1],
            q[2],
            report.stats.saturated_fraction,
            report.verdict
        );
    }

    // a trajectory that decays exactly at the candidate rate
    let rho_rate: f64 = 0.95;
    let synthetic: Vec<Trajectory> = (0..10)
        .map(|i| Trajectory {
            seed: 0,
            path_index: i,
            values: (1..=1000).map(|n| Complex64::new(rho_rate.powi(n), 0.0)).collect(),
        })
        .collect();
    let report = rate_test(&synthetic, &RateCandidate::Geometric(rho_rate), &thresholds)?;
    println!("synthetic c_n = 0.95^n against 0.95^n -> {}", report.verdict);
    Ok(())
}
