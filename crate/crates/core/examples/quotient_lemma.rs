//! Walks that only see a quotient: G and G/N give identical coefficients.
//!
//! cargo run --example quotient_lemma

use std::collections::BTreeSet;

use grwalk::analysis::quotient_equivalence_check;
use grwalk::group::FiniteGroup;
use grwalk::measure::{pushforward, ProbMeasure};
use grwalk::rep::{basis_vector, MatrixRep};
use num_rational::BigRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s3 = FiniteGroup::symmetric(3)?;
    let mu = ProbMeasure::<usize, BigRational>::uniform(
        ["e", "(12)", "(23)"]
            .iter()
            .map(|l| s3.element(l))
            .collect::<Result<Vec<_>, _>>()?,
    )?;
    let a3 = s3.subgroup_generated([s3.element("(123)")?]);
    let (quotient, projection) = s3.quotient(&a3)?;
    let image = pushforward(&mu, &projection)?;
    for (g, w) in image.iter() {
        println!("pushforward weight of {}: {w}", quotient.label(*g));
    }

    let one = basis_vector(1, 0);
    let sign = MatrixRep::sign(&s3)?;
    let equal = quotient_equivalence_check(&s3, &a3, &mu, &sign, &one, &one, 1, 100, 1000)?;
    println!("(S3, A3, sign): path-wise equal = {equal}");

    let c4 = FiniteGroup::cyclic(4)?;
    let nu = ProbMeasure::<usize, BigRational>::uniform([0, 1])?;
    let c2: BTreeSet<usize> = c4.subgroup_generated([2]);
    let chi = MatrixRep::cyclic_character(&c4, 2)?;
    let equal = quotient_equivalence_check(&c4, &c2, &nu, &chi, &one, &one, 1, 100, 1000)?;
    println!("(C4, C2, χ2): path-wise equal = {equal}");

    let rho = MatrixRep::standard(&s3)?;
    let e1 = basis_vector(2, 0);
    match quotient_equivalence_check(&s3, &a3, &mu, &rho, &e1, &e1, 1, 10, 10) {
        Err(e) => println!("(S3, A3, standard): {e}"),
        Ok(v) => println!("(S3, A3, standard): unexpectedly {v}"),
    }
    Ok(())
}
