//! Reproducible path ensembles compared with exact convolution powers.
//!
//! cargo run --release --example monte_carlo_ensemble

use std::collections::BTreeMap;
use std::f64::consts::PI;

use grwalk::group::{FiniteGroup, Group};
use grwalk::measure::{power, ProbMeasure};
use grwalk::rep::{basis_vector, RotationRep};
use grwalk::walk::{ensemble_run, random_products, sample_path, PathSampler};
use num_rational::BigRational;
use num_traits::ToPrimitive;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s3 = FiniteGroup::symmetric(3)?;
    let mu = ProbMeasure::<usize, BigRational>::uniform(
        ["e", "(12)", "(23)"]
            .iter()
            .map(|l| s3.element(l))
            .collect::<Result<Vec<_>, _>>()?,
    )?;

    let path = sample_path(&mu, 5, 42, 0)?;
    let labels: Vec<&str> = path.increments.iter().map(|g| s3.label(*g)).collect();
    let products: Vec<&str> = random_products(&s3, &path).iter().map(|g| s3.label(*g)).collect();
    println!("increments {labels:?}\nproducts   {products:?}");

    // empirical law of g_10 against the exact tenth convolution power
    let paths = 100_000u64;
    let sampler = PathSampler::new(&mu)?;
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for i in 0..paths {
        let g = sampler
            .increments(42, i)
            .take(10)
            .fold(s3.identity(), |acc, w| s3.mul(w, &acc));
        *counts.entry(g).or_default() += 1;
    }
    let exact = power(&s3, &mu, 10);
    for g in s3.elements() {
        println!(
            "  {:<6} empirical {:.5}  exact {:.5}",
            s3.label(g),
            counts.get(&g).copied().unwrap_or(0) as f64 / paths as f64,
            exact.weight(&g).to_f64().unwrap()
        );
    }

    // rotation of ℤ by an irrational angle: mean |cos| tends to 2/π
    let rotation = RotationRep::new(2.0 * PI * (2f64.sqrt() - 1.0));
    let steps = ProbMeasure::<i64, f64>::uniform([-1, 0, 1])?;
    let e1 = basis_vector(2, 0);
    let ensemble = ensemble_run(&steps, &rotation, &e1, &e1, 2000, 4000, 1)?;
    let mean = ensemble.mean_abs();
    let stderr = ensemble.mean_abs_stderr();
    println!(
        "rotation: mean |c_2000| = {:.4} ± {:.4} (2/π = {:.4})",
        mean[1999],
        stderr[1999],
        2.0 / PI
    );
    Ok(())
}
