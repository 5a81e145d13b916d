//! Invariant spans, the orthogonality test and exact mean-coefficient curves.
//!
//! cargo run --example invariant_subspaces

use grwalk::analysis::mean_coefficient_curve;
use grwalk::group::FiniteGroup;
use grwalk::measure::ProbMeasure;
use grwalk::rep::{basis_vector, invariant_span, orthogonal_invariant_check, MatrixRep};
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
    let blocks = rho.direct_sum(&MatrixRep::sign(&s3)?)?;

    let e1 = basis_vector(3, 0);
    let e3 = basis_vector(3, 2);
    println!("span of e1 in ρ⊕σ has dimension {}", invariant_span(&blocks, &e1)?.len());
    println!("span of e3 in ρ⊕σ has dimension {}", invariant_span(&blocks, &e3)?.len());

    for (name, rep, u, v) in [
        ("ρ, u = v = e1", &rho, basis_vector(2, 0), basis_vector(2, 0)),
        ("ρ⊕σ, u = e1, v = e3", &blocks, e1.clone(), e3.clone()),
    ] {
        let orthogonal = orthogonal_invariant_check(rep, &u, &v)?;
        let haar = rep.haar_average_abs_coefficient(&u, &v)?;
        let curve = mean_coefficient_curve(&s3, rep, &mu, &u, &v, 100)?;
        println!("{name}: orthogonal = {orthogonal}, Haar average = {haar:.12}");
        for (n, x) in curve.iter().filter(|(n, _)| [1, 5, 20, 100].contains(n)) {
            println!("  n = {n:>3}  Σ μⁿ(g)|⟨π(g)u, v⟩| = {x:.12}");
        }
    }
    Ok(())
}
