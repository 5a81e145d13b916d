//! Fixed-precision arithmetic in ℚ_p and the additive character.
//!
//! cargo run --example padic_arithmetic

use grwalk::padic::{FieldError, PAdicNumber, DEFAULT_PRECISION};

fn main() -> Result<(), FieldError> {
    let p = 5;
    let q = |n, d| PAdicNumber::from_rational(n, d, p, DEFAULT_PRECISION);

    let three = q(3, 1)?;
    let inv = three.inv()?;
    println!("1/3 in Q_{p}: {inv}");
    println!("  digits (least significant first): {:?}", inv.digits());
    println!("  back to a rational: {}", inv.to_rational().unwrap());

    let x = q(7, 25)?;
    let y = q(-2, 5)?;
    let sum = x.add(&y)?;
    println!("7/25 + (-2/5) = {} (norm {})", sum.to_rational().unwrap(), sum.norm());
    println!("|7/25| = {}, |-2/5| = {}", x.norm(), y.norm());

    // cancellation lowers precision instead of inventing digits
    let a = q(1, 1)?;
    let b = q(1 + 5i64.pow(3), 1)?;
    let diff = b.sub(&a)?;
    println!("(1 + 5^3) - 1 = {diff}");

    for (n, d) in [(1, 5), (2, 5), (1, 25), (3, 1)] {
        let z = q(n, d)?;
        let (num, den) = z.fractional_part()?;
        let chi = z.additive_character()?;
        println!("chi({n}/{d}) = exp(2πi·{num}/{den}) = {:.6} {:+.6}i", chi.re, chi.im);
    }
    Ok(())
}
