//! Fixed-precision arithmetic in the p-adic numbers ℚ_p.
//!
//! A nonzero element is stored as `p^v · unit` where `unit` is a residue
//! modulo `p^r` that is not divisible by `p`, and `r` is the number of
//! known unit digits (the relative precision). Elements are immutable.
//!
//! Addition tracks precision honestly: when leading digits cancel, the
//! result loses the same number of known digits instead of being padded
//! with zeros.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Default number of retained unit digits.
pub const DEFAULT_PRECISION: u32 = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("mismatched primes {0} and {1}")]
    PrimeMismatch(u64, u64),
    #[error("invalid field parameters: {0}")]
    InvalidParameters(String),
}

/// Checks that `p` is prime and `p^precision` fits comfortably in 63 bits.
fn modulus(prime: u64, precision: u32) -> Result<u64, FieldError> {
    if prime < 2 || !is_prime(prime) {
        return Err(FieldError::InvalidParameters(format!("{prime} is not prime")));
    }
    prime
        .checked_pow(precision)
        .filter(|m| *m < (1 << 62))
        .ok_or_else(|| {
            FieldError::InvalidParameters(format!("{prime}^{precision} exceeds 62 bits"))
        })
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow(p: u64, k: u32) -> u64 {
    p.pow(k)
}

/// Inverse of `a` modulo `m`, for `gcd(a, m) = 1`.
pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let egcd = (a as i128).extended_gcd(&(m as i128));
    if egcd.gcd != 1 {
        return None;
    }
    Some(egcd.x.rem_euclid(m as i128) as u64)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Splits off the `p`-part: returns `(v, n / p^v)`.
fn strip_prime(mut n: i128, p: u64) -> (i64, i128) {
    let p = p as i128;
    let mut v = 0;
    while n != 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    (v, n)
}

/// Element of ℚ_p with a bounded number of known unit digits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PAdicNumber {
    prime: u64,
    /// `None` encodes the zero element.
    valuation: Option<i64>,
    unit: u64,
    precision: u32,
}

impl PAdicNumber {
    pub fn zero(prime: u64) -> Self {
        Self {
            prime,
            valuation: None,
            unit: 0,
            precision: 0,
        }
    }

    pub fn one(prime: u64, precision: u32) -> Result<Self, FieldError> {
        Self::from_integer(1, prime, precision)
    }

    /// Builds `p^valuation · unit` from a residue `unit` (reduced modulo
    /// `p^precision`). The residue must not be divisible by `p`.
    pub fn from_unit(
        prime: u64,
        valuation: i64,
        unit: u64,
        precision: u32,
    ) -> Result<Self, FieldError> {
        if precision == 0 {
            return Err(FieldError::InvalidParameters(
                "a nonzero element needs at least one digit".into(),
            ));
        }
        let m = modulus(prime, precision)?;
        let unit = unit % m;
        if unit.is_multiple_of(prime) {
            return Err(FieldError::InvalidParameters(format!(
                "unit residue {unit} is divisible by {prime}"
            )));
        }
        Ok(Self {
            prime,
            valuation: Some(valuation),
            unit,
            precision,
        })
    }

    pub fn from_integer(n: i64, prime: u64, precision: u32) -> Result<Self, FieldError> {
        Self::from_rational(n, 1, prime, precision)
    }

    /// Embeds `num/den` at the given relative precision.
    pub fn from_rational(
        num: i64,
        den: i64,
        prime: u64,
        precision: u32,
    ) -> Result<Self, FieldError> {
        let m = modulus(prime, precision)?;
        if den == 0 {
            return Err(FieldError::InverseOfZero);
        }
        if num == 0 {
            return Ok(Self::zero(prime));
        }
        let (vn, n) = strip_prime(num as i128, prime);
        let (vd, d) = strip_prime(den as i128, prime);
        let n = n.rem_euclid(m as i128) as u64;
        let d = d.rem_euclid(m as i128) as u64;
        let d_inv = mod_inverse(d, m).expect("p-free denominator is a unit");
        Self::from_unit(prime, vn - vd, mul_mod(n, d_inv, m), precision)
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// `None` for zero (valuation +∞).
    pub fn valuation(&self) -> Option<i64> {
        self.valuation
    }

    pub fn is_zero(&self) -> bool {
        self.valuation.is_none()
    }

    /// Number of known unit digits.
    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Unit residue modulo `p^precision`.
    pub fn unit(&self) -> u64 {
        self.unit
    }

    /// Base-p unit digits, least significant first. Empty for zero.
    pub fn digits(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.precision as usize);
        let mut rest = self.unit;
        for _ in 0..self.precision {
            out.push(rest % self.prime);
            rest /= self.prime;
        }
        out
    }

    fn same_prime(&self, other: &Self) -> Result<(), FieldError> {
        if self.prime != other.prime {
            return Err(FieldError::PrimeMismatch(self.prime, other.prime));
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        match self.valuation {
            None => self.clone(),
            Some(_) => {
                let m = pow(self.prime, self.precision);
                Self {
                    unit: m - self.unit,
                    ..self.clone()
                }
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_prime(other)?;
        let (Some(vx), Some(vy)) = (self.valuation, other.valuation) else {
            return Ok(Self::zero(self.prime));
        };
        let r = self.precision.min(other.precision);
        let m = pow(self.prime, r);
        Ok(Self {
            prime: self.prime,
            valuation: Some(vx + vy),
            unit: mul_mod(self.unit % m, other.unit % m, m),
            precision: r,
        })
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        let v = self.valuation.ok_or(FieldError::InverseOfZero)?;
        let m = pow(self.prime, self.precision);
        Ok(Self {
            prime: self.prime,
            valuation: Some(-v),
            unit: mod_inverse(self.unit, m).expect("units are invertible"),
            precision: self.precision,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_prime(other)?;
        let (lo, hi) = match (self.valuation, other.valuation) {
            (None, _) => return Ok(other.clone()),
            (_, None) => return Ok(self.clone()),
            (Some(a), Some(b)) if a <= b => (self, other),
            _ => (other, self),
        };
        let p = self.prime;
        let vlo = lo.valuation.unwrap();
        let vhi = hi.valuation.unwrap();
        let abs_lo = vlo + lo.precision as i64;
        let abs_hi = vhi + hi.precision as i64;
        let abs = abs_lo.min(abs_hi);
        // digits of the sum known relative to p^vlo
        let known = (abs - vlo) as u32;
        let shift = (vhi - vlo) as u32;
        if shift >= known {
            return Ok(lo.clone());
        }
        let m = pow(p, known);
        let shifted = mul_mod(hi.unit % pow(p, known - shift), pow(p, shift), m);
        let sum = (lo.unit % m + shifted) % m;
        if sum == 0 {
            if abs_lo == abs_hi {
                return Ok(Self::zero(p));
            }
            return Err(FieldError::PrecisionExhausted(format!(
                "all {known} known digits cancelled in addition"
            )));
        }
        let mut k = 0;
        let mut s = sum;
        while s.is_multiple_of(p) {
            s /= p;
            k += 1;
        }
        Ok(Self {
            prime: p,
            valuation: Some(vlo + k as i64),
            unit: s,
            precision: known - k,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.add(&other.neg())
    }

    /// Standard absolute value `p^(−v)`, exact.
    pub fn norm(&self) -> BigRational {
        match self.valuation {
            None => BigRational::zero(),
            Some(v) => {
                let pv = BigInt::from(self.prime).pow(v.unsigned_abs() as u32);
                if v >= 0 {
                    BigRational::new(BigInt::one(), pv)
                } else {
                    BigRational::from_integer(pv)
                }
            }
        }
    }

    /// Fractional part as `(numerator, p^k)` with `0 ≤ numerator < p^k`:
    /// the sum of the negative-valuation terms of the expansion.
    pub fn fractional_part(&self) -> Result<(u64, u64), FieldError> {
        let v = match self.valuation {
            Some(v) if v < 0 => v,
            _ => return Ok((0, 1)),
        };
        let k = (-v) as u32;
        if k > self.precision {
            return Err(FieldError::PrecisionExhausted(format!(
                "fractional part needs {k} digits, only {} known",
                self.precision
            )));
        }
        let denom = pow(self.prime, k);
        Ok((self.unit % denom, denom))
    }

    /// The standard additive character `exp(2πi · frac_p(x))`, trivial
    /// exactly on ℤ_p.
    pub fn additive_character(&self) -> Result<Complex64, FieldError> {
        let (num, den) = self.fractional_part()?;
        if num == 0 {
            return Ok(Complex64::new(1.0, 0.0));
        }
        Ok(Complex64::from_polar(1.0, 2.0 * PI * num as f64 / den as f64))
    }

    /// Recovers `a/b` with `|a|, |b| ≤ sqrt(p^r / 2)` congruent to the stored
    /// value, or `None` if no such small fraction exists.
    pub fn to_rational(&self) -> Option<BigRational> {
        let Some(v) = self.valuation else {
            return Some(BigRational::zero());
        };
        let m = pow(self.prime, self.precision) as i128;
        let bound = ((m / 2) as f64).sqrt() as i128;
        // half-extended Euclid on (m, unit), keeping r_i ≡ t_i · unit (mod m)
        let (mut r0, mut r1) = (m, self.unit as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 > bound {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if t1 == 0 || t1.abs() > bound || r1.gcd(&t1) != 1 {
            return None;
        }
        let unit = BigRational::new(BigInt::from(r1), BigInt::from(t1));
        let pv = BigInt::from(self.prime).pow(v.unsigned_abs() as u32);
        Some(if v >= 0 {
            unit * BigRational::from_integer(pv)
        } else {
            unit / BigRational::from_integer(pv)
        })
    }
}

impl fmt::Display for PAdicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.valuation {
            None => write!(f, "0"),
            Some(v) => {
                let digits: Vec<String> = self.digits().iter().map(u64::to_string).collect();
                write!(
                    f,
                    "{}^{} * [{}] + O({}^{})",
                    self.prime,
                    v,
                    digits.join(" "),
                    self.prime,
                    v + self.precision as i64
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(num: i64, den: i64, p: u64) -> PAdicNumber {
        PAdicNumber::from_rational(num, den, p, DEFAULT_PRECISION).unwrap()
    }

    // Independent oracle: brute-force search for the inverse modulo p^k.
    fn brute_inverse(a: u64, m: u64) -> u64 {
        (1..m).find(|x| (a * x) % m == 1).unwrap()
    }

    #[test]
    fn square_of_prime() {
        let p = q(5, 1, 5);
        let sq = p.mul(&p).unwrap();
        assert_eq!(sq.valuation(), Some(2));
        assert_eq!(sq.digits()[0], 1);
        assert_eq!(sq.unit(), 1);
    }

    #[test]
    fn one_plus_minus_one_is_zero() {
        let s = q(1, 1, 5).add(&q(-1, 1, 5)).unwrap();
        assert!(s.is_zero());
        assert_eq!(s, PAdicNumber::zero(5));
    }

    #[test]
    fn inverse_of_three_mod_five_to_the_fourth() {
        let three = PAdicNumber::from_integer(3, 5, 4).unwrap();
        let inv = three.inv().unwrap();
        assert_eq!(brute_inverse(3, 625), 417);
        assert_eq!(inv.unit(), 417);
        assert_eq!(inv.digits(), vec![2, 3, 1, 3]);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(
            PAdicNumber::zero(3).inv(),
            Err(FieldError::InverseOfZero)
        );
    }

    #[test]
    fn norms() {
        assert!(PAdicNumber::zero(5).norm().is_zero());
        assert_eq!(q(5, 1, 5).norm(), BigRational::new(1.into(), 5.into()));
        // 3/10 = 3 / (2 · 5): valuation −1
        assert_eq!(q(3, 10, 5).norm(), BigRational::from_integer(5.into()));
    }

    #[test]
    fn character_values() {
        assert_eq!(q(7, 3, 2).additive_character().unwrap(), Complex64::new(1.0, 0.0));
        let half = q(1, 2, 2).additive_character().unwrap();
        assert!((half - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        let quarter = q(3, 4, 2).additive_character().unwrap();
        assert!((quarter - Complex64::new(0.0, -1.0)).norm() < 1e-12);
    }

    #[test]
    fn partial_cancellation_lowers_precision() {
        // 1 + 4 = 5 in ℚ_5: one digit cancels
        let s = q(1, 1, 5).add(&q(4, 1, 5)).unwrap();
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(s.precision(), DEFAULT_PRECISION - 1);
        assert_eq!(s.to_rational().unwrap(), BigRational::from_integer(5.into()));
    }

    #[test]
    fn cancellation_against_shorter_operand_is_an_error() {
        let short = PAdicNumber::from_integer(1, 3, 2).unwrap();
        let long = PAdicNumber::from_integer(-1, 3, 6).unwrap();
        assert!(matches!(
            short.add(&long),
            Err(FieldError::PrecisionExhausted(_))
        ));
    }

    #[test]
    fn mismatched_primes() {
        assert_eq!(
            q(1, 1, 2).add(&q(1, 1, 3)),
            Err(FieldError::PrimeMismatch(2, 3))
        );
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(PAdicNumber::from_integer(1, 4, 8).is_err());
        assert!(PAdicNumber::from_integer(1, 2, 70).is_err());
        assert!(PAdicNumber::from_rational(1, 0, 2, 8).is_err());
    }

    #[test]
    fn rational_round_trip() {
        for (a, b) in [(3, 10), (-7, 4), (22, 7), (1, 25), (-125, 9)] {
            let x = q(a, b, 5);
            assert_eq!(
                x.to_rational().unwrap(),
                BigRational::new(a.into(), b.into()),
                "{a}/{b}"
            );
        }
    }
}
