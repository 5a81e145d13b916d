//! Følner vectors for the induced representation of the p-adic affine group.
//!
//! cargo run --example affine_folner

use grwalk::group::AffineElement;
use grwalk::padic::{PAdicNumber, DEFAULT_PRECISION};
use grwalk::rep::{character_sum_oracle, InducedAffineRep, OverflowPolicy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in [2u64, 3] {
        let rep = InducedAffineRep::new(p, 3, (-40, 4), OverflowPolicy::Strict)?;
        let q = |n: i64, d: i64| PAdicNumber::from_rational(n, d, p, DEFAULT_PRECISION);
        println!("p = {p}: {} unit classes per shell", rep.classes());

        let pi = p as i64;
        for (num, den) in [(1, 1), (1, pi), (1, pi * pi)] {
            let u = q(num, den)?;
            let g = AffineElement::line(q(1, 1)?, u.clone())?;
            print!("  (1, {num}/{den}):");
            for n in [3, 7, 15, 31] {
                let d2 = rep.defect(&g, n)?.powi(2);
                let oracle = character_sum_oracle(p, &u, n);
                print!("  n={n}: {d2:.6} (oracle {oracle:.6})");
            }
            println!();
        }
        let scale = AffineElement::line(q(pi, 1)?, q(0, 1)?)?;
        print!("  ({p}, 0):");
        for n in [3, 7, 15, 31] {
            print!("  n={n}: {:.6} (2/(n+1) = {:.6})", rep.defect(&scale, n)?.powi(2), 2.0 / (n + 1) as f64);
        }
        println!();
    }

    // a window that is too small is reported, not silently truncated
    let tight = InducedAffineRep::new(2, 1, (-3, 0), OverflowPolicy::Strict)?;
    let two = PAdicNumber::from_integer(2, 2, DEFAULT_PRECISION)?;
    let g = AffineElement::line(two, PAdicNumber::zero(2))?;
    println!("tight window: {}", tight.defect(&g, 3).unwrap_err());
    Ok(())
}
