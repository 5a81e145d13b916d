//! Exact total-variation distance between μⁿ and Haar measure.
//!
//! cargo run --example kawada_ito

use grwalk::analysis::kawada_ito_curve;
use grwalk::group::FiniteGroup;
use grwalk::measure::ProbMeasure;
use num_rational::BigRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s3 = FiniteGroup::symmetric(3)?;
    let measure = |labels: &[&str]| {
        ProbMeasure::<usize, BigRational>::uniform(
            labels.iter().map(|l| s3.element(l)).collect::<Result<Vec<_>, _>>()?,
        )
        .map_err(Box::<dyn std::error::Error>::from)
    };

    for labels in [&["e", "(12)", "(23)"][..], &["(12)", "(23)"][..]] {
        let mu = measure(labels)?;
        let curve = kawada_ito_curve(&s3, &mu, 60);
        println!(
            "μ = uniform{labels:?}: adapted = {}, strictly aperiodic = {}",
            curve.adapted, curve.strictly_aperiodic
        );
        for (n, tv) in curve.points.iter().filter(|(n, _)| [1, 2, 5, 10, 20, 40, 60].contains(n)) {
            println!("  n = {n:>3}  tv = {tv:.3e}");
        }
    }
    Ok(())
}
