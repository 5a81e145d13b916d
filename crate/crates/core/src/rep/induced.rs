//! The representation of the affine group ℚ_p* ⋉ ℚ_p on L²(ℚ_p*) induced
//! from the standard additive character χ:
//!
//! ```text
//! (π(a, u) f)(b) = χ(b⁻¹u) · f(a⁻¹b)
//! ```
//!
//! Functions are discretised on cells `(j, c)`: the valuation shell
//! `{v(b) = j}` inside a finite window, split into the φ(p^d) unit classes
//! modulo `p^d`. Haar measure gives every shell mass 1, so every cell has
//! mass `1/φ(p^d)`. Multiplication by `a` shifts shells by `v(a)` and
//! permutes unit classes, so it acts exactly on cell functions; the phase
//! `χ(b⁻¹u)` is constant on a cell as long as the unit depth covers the
//! digits it depends on.

use num_complex::Complex64;

use super::{HilbertVector, RepError, Representation};
use crate::group::AffineElement;
use crate::padic::{mod_inverse, FieldError, PAdicNumber};

/// Leaked L² mass above which unitarity claims are void.
pub const LEAK_TOLERANCE: f64 = 1e-9;

/// What happens to mass that a shift pushes out of the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OverflowPolicy {
    /// Any nonzero mass leaving the window is an error.
    Strict,
    /// Drop it and accumulate the lost squared norm in the vector.
    ClampWithLeak,
}

/// Square-integrable cell function on a window of valuation shells.
#[derive(Clone, Debug, PartialEq)]
pub struct CellVector {
    prime: u64,
    unit_depth: u32,
    vmin: i64,
    vmax: i64,
    classes: usize,
    coeffs: Vec<Complex64>,
    leaked: f64,
}

impl CellVector {
    pub fn window(&self) -> (i64, i64) {
        (self.vmin, self.vmax)
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    /// Squared norm lost to the window boundary so far.
    pub fn leaked(&self) -> f64 {
        self.leaked
    }

    fn index(&self, shell: i64, class: usize) -> Option<usize> {
        if shell < self.vmin || shell > self.vmax || class >= self.classes {
            return None;
        }
        Some((shell - self.vmin) as usize * self.classes + class)
    }

    /// Coefficient on cell `(shell, class)`; zero outside the window.
    pub fn get(&self, shell: i64, class: usize) -> Complex64 {
        self.index(shell, class)
            .map(|i| self.coeffs[i])
            .unwrap_or_default()
    }

    pub fn set(&mut self, shell: i64, class: usize, value: Complex64) -> Result<(), RepError> {
        let i = self.index(shell, class).ok_or(RepError::WindowOverflow {
            leaked: value.norm_sqr(),
            vmin: self.vmin,
            vmax: self.vmax,
        })?;
        self.coeffs[i] = value;
        Ok(())
    }

    fn shell(&self, shell: i64) -> &[Complex64] {
        let start = (shell - self.vmin) as usize * self.classes;
        &self.coeffs[start..start + self.classes]
    }

    /// Haar mass of the squared modulus on one shell.
    pub fn shell_mass(&self, shell: i64) -> f64 {
        if shell < self.vmin || shell > self.vmax {
            return 0.0;
        }
        self.shell(shell).iter().map(|z| z.norm_sqr()).sum::<f64>() / self.classes as f64
    }

    fn same_layout(&self, other: &Self) -> Result<(), RepError> {
        if (self.prime, self.unit_depth, self.vmin, self.vmax)
            != (other.prime, other.unit_depth, other.vmin, other.vmax)
        {
            return Err(RepError::DimensionMismatch {
                expected: self.coeffs.len(),
                got: other.coeffs.len(),
            });
        }
        Ok(())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, RepError> {
        self.same_layout(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
            leaked: 0.0,
            ..self.clone()
        })
    }
}

impl HilbertVector for CellVector {
    fn inner(&self, other: &Self) -> Result<Complex64, RepError> {
        self.same_layout(other)?;
        let sum: Complex64 = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b.conj())
            .sum();
        Ok(sum / self.classes as f64)
    }
}

/// `B_n = {b : −n ≤ v(b) ≤ 0}`, i.e. `1 ≤ |b| ≤ pⁿ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FolnerSet {
    pub index: usize,
}

impl FolnerSet {
    pub fn new(index: usize) -> Self {
        Self { index }
    }

    pub fn shells(&self) -> std::ops::RangeInclusive<i64> {
        -(self.index as i64)..=0
    }

    pub fn contains_valuation(&self, j: i64) -> bool {
        self.shells().contains(&j)
    }

    /// Haar mass with one unit per shell.
    pub fn mass(&self) -> f64 {
        (self.index + 1) as f64
    }
}

/// Discretised induced representation on a valuation window.
#[derive(Clone, Debug)]
pub struct InducedAffineRep {
    prime: u64,
    unit_depth: u32,
    vmin: i64,
    vmax: i64,
    policy: OverflowPolicy,
    modulus: u64,
    // unit residues mod p^d in increasing order; `class_of` inverts it
    units: Vec<u64>,
    class_of: Vec<usize>,
}

impl InducedAffineRep {
    pub fn new(
        prime: u64,
        unit_depth: u32,
        window: (i64, i64),
        policy: OverflowPolicy,
    ) -> Result<Self, RepError> {
        if unit_depth == 0 {
            return Err(FieldError::InvalidParameters("unit depth must be at least 1".into()).into());
        }
        // validates primality and the size of p^d
        PAdicNumber::one(prime, unit_depth)?;
        let modulus = prime.pow(unit_depth);
        if modulus > 1 << 20 {
            return Err(
                FieldError::InvalidParameters(format!("{modulus} unit classes is too many")).into(),
            );
        }
        let (vmin, vmax) = window;
        if vmin > vmax {
            return Err(RepError::Invalid(format!("empty window [{vmin}, {vmax}]")));
        }
        let units: Vec<u64> = (1..modulus).filter(|r| r % prime != 0).collect();
        let mut class_of = vec![usize::MAX; modulus as usize];
        for (i, &r) in units.iter().enumerate() {
            class_of[r as usize] = i;
        }
        Ok(Self {
            prime,
            unit_depth,
            vmin,
            vmax,
            policy,
            modulus,
            units,
            class_of,
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn unit_depth(&self) -> u32 {
        self.unit_depth
    }

    pub fn window(&self) -> (i64, i64) {
        (self.vmin, self.vmax)
    }

    pub fn policy(&self) -> OverflowPolicy {
        self.policy
    }

    /// φ(p^d).
    pub fn classes(&self) -> usize {
        self.units.len()
    }

    /// Residue mod `p^d` representing a unit class.
    pub fn class_residue(&self, class: usize) -> u64 {
        self.units[class]
    }

    pub fn zero_vector(&self) -> CellVector {
        CellVector {
            prime: self.prime,
            unit_depth: self.unit_depth,
            vmin: self.vmin,
            vmax: self.vmax,
            classes: self.classes(),
            coeffs: vec![Complex64::default(); self.classes() * (self.vmax - self.vmin + 1) as usize],
            leaked: 0.0,
        }
    }

    /// Indicator of the shell `{v(b) = j}` scaled by `value`.
    pub fn shell_indicator(&self, shell: i64, value: f64) -> Result<CellVector, RepError> {
        let mut f = self.zero_vector();
        for class in 0..self.classes() {
            f.set(shell, class, Complex64::new(value, 0.0))?;
        }
        Ok(f)
    }

    /// `fₙ = 1_{Bₙ} / √m(Bₙ)`, a unit vector.
    pub fn folner_vector(&self, n: usize) -> Result<CellVector, RepError> {
        let set = FolnerSet::new(n);
        if *set.shells().start() < self.vmin || *set.shells().end() > self.vmax {
            return Err(RepError::Invalid(format!(
                "window [{}, {}] does not contain B_{n} = [-{n}, 0]",
                self.vmin, self.vmax
            )));
        }
        let value = Complex64::new(1.0 / set.mass().sqrt(), 0.0);
        let mut f = self.zero_vector();
        for shell in set.shells() {
            for class in 0..self.classes() {
                f.set(shell, class, value)?;
            }
        }
        Ok(f)
    }

    /// `‖π(g)fₙ − fₙ‖`.
    pub fn defect(&self, g: &AffineElement, n: usize) -> Result<f64, RepError> {
        let f = self.folner_vector(n)?;
        let moved = self.apply(g, &f)?;
        if moved.leaked > LEAK_TOLERANCE {
            return Err(RepError::WindowOverflow {
                leaked: moved.leaked,
                vmin: self.vmin,
                vmax: self.vmax,
            });
        }
        Ok(moved.sub(&f)?.norm())
    }

    /// `χ(b⁻¹u)` for `b = p^shell · class`, constant on the cell.
    fn phase(&self, shell: i64, class: usize, u: &PAdicNumber) -> Result<Complex64, RepError> {
        let Some(vu) = u.valuation() else {
            return Ok(Complex64::new(1.0, 0.0));
        };
        let needed = shell - vu;
        if needed <= 0 {
            return Ok(Complex64::new(1.0, 0.0));
        }
        if needed > self.unit_depth as i64 {
            return Err(RepError::Resolution {
                depth: self.unit_depth,
                shell,
                needed: needed as u32,
            });
        }
        let b = PAdicNumber::from_unit(self.prime, shell, self.units[class], self.unit_depth)?;
        Ok(b.inv()?.mul(u)?.additive_character()?)
    }

    fn check_layout(&self, f: &CellVector) -> Result<(), RepError> {
        if (f.prime, f.unit_depth, f.vmin, f.vmax)
            != (self.prime, self.unit_depth, self.vmin, self.vmax)
        {
            return Err(RepError::DimensionMismatch {
                expected: self.zero_vector().coeffs.len(),
                got: f.coeffs.len(),
            });
        }
        Ok(())
    }
}

impl Representation for InducedAffineRep {
    type Element = AffineElement;
    type Vector = CellVector;

    fn apply(&self, g: &AffineElement, f: &CellVector) -> Result<CellVector, RepError> {
        self.check_layout(f)?;
        if g.prime() != self.prime || g.dim() != 1 {
            return Err(crate::group::GroupError::FamilyMismatch(format!(
                "element of Q_{}^{} acting on L2(Q_{}*)",
                g.prime(),
                g.dim(),
                self.prime
            ))
            .into());
        }
        let a = g.scale();
        let va = a.valuation().expect("affine scales are nonzero");
        if a.precision() < self.unit_depth {
            return Err(FieldError::PrecisionExhausted(format!(
                "scale known to {} digits, unit depth is {}",
                a.precision(),
                self.unit_depth
            ))
            .into());
        }
        let alpha_inv = mod_inverse(a.unit() % self.modulus, self.modulus)
            .expect("unit residues are invertible");
        let u = &g.translation()[0];

        let mut out = self.zero_vector();
        out.leaked = f.leaked;
        for source in self.vmin..=self.vmax {
            let mass = f.shell_mass(source);
            if mass == 0.0 {
                continue;
            }
            let target = source + va;
            if target < self.vmin || target > self.vmax {
                match self.policy {
                    OverflowPolicy::Strict => {
                        return Err(RepError::WindowOverflow {
                            leaked: mass,
                            vmin: self.vmin,
                            vmax: self.vmax,
                        })
                    }
                    OverflowPolicy::ClampWithLeak => {
                        out.leaked += mass;
                        continue;
                    }
                }
            }
            for class in 0..self.classes() {
                // a⁻¹b lies in shell `source`, class α⁻¹·c
                let residue = (alpha_inv as u128 * self.units[class] as u128
                    % self.modulus as u128) as usize;
                let value = f.get(source, self.class_of[residue]);
                if value == Complex64::default() {
                    continue;
                }
                let phase = self.phase(target, class, u)?;
                out.set(target, class, phase * value)?;
            }
        }
        Ok(out)
    }
}

/// Exact `‖π(1,u)fₙ − fₙ‖²`, computed from root-of-unity averages rather
/// than the cell discretisation.
///
/// On a shell `j` with `k = j − v(u) > 0`, `b⁻¹u` runs uniformly over
/// elements whose character is a primitive `p^k`-th root of unity ζ, and
/// the mean of `|ζ − 1|² = 2 − 2 Re ζ` is `2 − 2 M(p^k)/φ(p^k)` (Ramanujan
/// sum), with `M` the Möbius function. Shells with `k ≤ 0` contribute 0.
pub fn character_sum_oracle(prime: u64, u: &PAdicNumber, n: usize) -> f64 {
    let Some(vu) = u.valuation() else {
        return 0.0;
    };
    let mass = (n + 1) as f64;
    (-(n as i64)..=0)
        .map(|j| j - vu)
        .filter(|&k| k > 0)
        .map(|k| {
            let phi = (prime - 1) as f64 * (prime as f64).powi(k as i32 - 1);
            let mobius = if k == 1 { -1.0 } else { 0.0 };
            (2.0 - 2.0 * mobius / phi) / mass
        })
        .fold(0.0, |acc, x| acc + x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::DEFAULT_PRECISION;

    fn q(num: i64, den: i64, p: u64) -> PAdicNumber {
        PAdicNumber::from_rational(num, den, p, DEFAULT_PRECISION).unwrap()
    }

    fn affine(a: (i64, i64), u: (i64, i64), p: u64) -> AffineElement {
        AffineElement::line(q(a.0, a.1, p), q(u.0, u.1, p)).unwrap()
    }

    fn rep(p: u64, d: u32) -> InducedAffineRep {
        InducedAffineRep::new(p, d, (-20, 20), OverflowPolicy::Strict).unwrap()
    }

    #[test]
    fn identity_acts_trivially() {
        let r = rep(3, 2);
        let f = r.folner_vector(4).unwrap();
        let id = AffineElement::identity(3, DEFAULT_PRECISION, 1).unwrap();
        assert_eq!(r.apply(&id, &f).unwrap(), f);
    }

    #[test]
    fn half_translation_negates_units() {
        let r = rep(2, 3);
        let f = r.shell_indicator(0, 1.0).unwrap();
        let g = affine((1, 1), (1, 2), 2);
        let out = r.apply(&g, &f).unwrap();
        for class in 0..r.classes() {
            assert!((out.get(0, class) + f.get(0, class)).norm() < 1e-12);
        }
    }

    #[test]
    fn scaling_by_p_shifts_shells() {
        let r = rep(3, 2);
        let f = r.shell_indicator(-2, 1.0).unwrap();
        let out = r.apply(&affine((3, 1), (0, 1), 3), &f).unwrap();
        assert_eq!(out, r.shell_indicator(-1, 1.0).unwrap());
    }

    #[test]
    fn folner_vectors() {
        let r = rep(2, 2);
        for n in [0, 1, 5, 12] {
            assert!((r.folner_vector(n).unwrap().norm() - 1.0).abs() < 1e-12);
        }
        let f0 = r.folner_vector(0).unwrap();
        assert_eq!(f0, r.shell_indicator(0, 1.0).unwrap());
        assert_eq!(FolnerSet::new(3).mass(), 4.0);
        assert!(r.folner_vector(25).is_err());
    }

    #[test]
    fn defects_match_closed_forms() {
        let r = rep(2, 3);
        let id = AffineElement::identity(2, DEFAULT_PRECISION, 1).unwrap();
        assert_eq!(r.defect(&id, 5).unwrap(), 0.0);
        for n in [1, 3, 7] {
            let d = r.defect(&affine((2, 1), (0, 1), 2), n).unwrap();
            assert!((d - (2.0 / (n + 1) as f64).sqrt()).abs() < 1e-12);
        }
        let d = r.defect(&affine((1, 1), (1, 2), 2), 3).unwrap();
        assert!((d - 1.0).abs() < 1e-12);
    }

    #[test]
    fn oracle_values() {
        assert_eq!(character_sum_oracle(2, &q(3, 1, 2), 9), 0.0);
        assert!((character_sum_oracle(2, &q(1, 2, 2), 3) - 1.0).abs() < 1e-15);
        assert!((character_sum_oracle(3, &q(1, 3, 3), 8) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn strict_window_overflow() {
        let r = InducedAffineRep::new(2, 1, (-3, 0), OverflowPolicy::Strict).unwrap();
        let f = r.folner_vector(3).unwrap();
        let err = r.apply(&affine((2, 1), (0, 1), 2), &f).unwrap_err();
        assert!(matches!(err, RepError::WindowOverflow { .. }));
    }

    #[test]
    fn clamped_overflow_tracks_leak() {
        let r = InducedAffineRep::new(2, 1, (-3, 0), OverflowPolicy::ClampWithLeak).unwrap();
        let f = r.folner_vector(3).unwrap();
        let out = r.apply(&affine((2, 1), (0, 1), 2), &f).unwrap();
        assert!((out.leaked() - 0.25).abs() < 1e-12);
        assert!((out.norm().powi(2) + out.leaked() - 1.0).abs() < 1e-12);
        assert!(r.defect(&affine((2, 1), (0, 1), 2), 3).is_err());
    }

    #[test]
    fn insufficient_depth_is_a_resolution_error() {
        let r = rep(2, 1);
        let f = r.folner_vector(3).unwrap();
        // u = 1/4 needs two digits on shell 0
        let err = r.apply(&affine((1, 1), (1, 4), 2), &f).unwrap_err();
        assert!(matches!(err, RepError::Resolution { needed: 2, .. }));
    }
}
