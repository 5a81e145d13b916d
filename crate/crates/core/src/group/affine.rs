use std::fmt;

use super::GroupError;
use crate::padic::PAdicNumber;

/// Element `(a, u)` of the affine group K* ⋉ Kⁿ over ℚ_p, acting by
/// `x ↦ a·x + u`. Composition: `(a,u)(b,v) = (ab, u + a·v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineElement {
    scale: PAdicNumber,
    translation: Vec<PAdicNumber>,
}

impl AffineElement {
    pub fn new(scale: PAdicNumber, translation: Vec<PAdicNumber>) -> Result<Self, GroupError> {
        if scale.is_zero() {
            return Err(GroupError::NotAGroup("affine scale must be nonzero".into()));
        }
        if let Some(t) = translation.iter().find(|t| t.prime() != scale.prime()) {
            return Err(GroupError::FamilyMismatch(format!(
                "translation over Q_{} with scale over Q_{}",
                t.prime(),
                scale.prime()
            )));
        }
        Ok(Self { scale, translation })
    }

    /// One-dimensional element `(a, u)`.
    pub fn line(scale: PAdicNumber, translation: PAdicNumber) -> Result<Self, GroupError> {
        Self::new(scale, vec![translation])
    }

    pub fn identity(prime: u64, precision: u32, dim: usize) -> Result<Self, GroupError> {
        Self::new(
            PAdicNumber::one(prime, precision)?,
            vec![PAdicNumber::zero(prime); dim],
        )
    }

    pub fn scale(&self) -> &PAdicNumber {
        &self.scale
    }

    pub fn translation(&self) -> &[PAdicNumber] {
        &self.translation
    }

    pub fn prime(&self) -> u64 {
        self.scale.prime()
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    fn same_family(&self, other: &Self) -> Result<(), GroupError> {
        if self.prime() != other.prime() || self.dim() != other.dim() {
            return Err(GroupError::FamilyMismatch(format!(
                "Q_{}^{} vs Q_{}^{}",
                self.prime(),
                self.dim(),
                other.prime(),
                other.dim()
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GroupError> {
        self.same_family(other)?;
        let translation = self
            .translation
            .iter()
            .zip(&other.translation)
            .map(|(u, v)| u.add(&self.scale.mul(v)?))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            scale: self.scale.mul(&other.scale)?,
            translation,
        })
    }

    /// `(a,u)⁻¹ = (a⁻¹, −a⁻¹u)`.
    pub fn inv(&self) -> Result<Self, GroupError> {
        let inv_scale = self.scale.inv()?;
        let translation = self
            .translation
            .iter()
            .map(|u| inv_scale.mul(u).map(|x| x.neg()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            scale: inv_scale,
            translation,
        })
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; ", self.scale)?;
        for (i, t) in self.translation.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::padic::DEFAULT_PRECISION;

    fn el(a: (i64, i64), u: (i64, i64)) -> AffineElement {
        let q = |(n, d)| PAdicNumber::from_rational(n, d, 5, DEFAULT_PRECISION).unwrap();
        AffineElement::line(q(a), q(u)).unwrap()
    }

    fn as_rational(x: &PAdicNumber) -> BigRational {
        x.to_rational().unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn identity_is_neutral() {
        let id = AffineElement::identity(5, DEFAULT_PRECISION, 1).unwrap();
        let g = el((3, 1), (4, 7));
        assert_eq!(id.mul(&g).unwrap(), g);
        assert_eq!(g.mul(&id).unwrap(), g);
    }

    #[test]
    fn composition_law() {
        // (2,1)(3,4) = (6, 1 + 2·4)
        let gh = el((2, 1), (1, 1)).mul(&el((3, 1), (4, 1))).unwrap();
        assert_eq!(as_rational(gh.scale()), r(6, 1));
        assert_eq!(as_rational(&gh.translation()[0]), r(9, 1));
    }

    #[test]
    fn inverse_formula() {
        let g = el((2, 1), (6, 1));
        let inv = g.inv().unwrap();
        assert_eq!(as_rational(inv.scale()), r(1, 2));
        assert_eq!(as_rational(&inv.translation()[0]), r(-3, 1));
        let id = g.mul(&inv).unwrap();
        assert_eq!(as_rational(id.scale()), r(1, 1));
        assert!(id.translation()[0].is_zero());
    }

    #[test]
    fn family_mismatch() {
        let a = el((1, 1), (0, 1));
        let b = AffineElement::identity(3, 4, 1).unwrap();
        assert!(matches!(a.mul(&b), Err(GroupError::FamilyMismatch(_))));
        let c = AffineElement::identity(5, 4, 2).unwrap();
        assert!(matches!(a.mul(&c), Err(GroupError::FamilyMismatch(_))));
        assert!(AffineElement::line(PAdicNumber::zero(5), PAdicNumber::zero(5)).is_err());
    }
}
