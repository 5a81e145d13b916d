use std::collections::BTreeSet;

use super::{FiniteGroup, Group, GroupError};

/// Homomorphism between finite groups, stored as an image table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    target_order: usize,
    images: Vec<usize>,
}

impl GroupHom {
    /// Verifies `hom(gh) = hom(g)hom(h)` on every pair.
    pub fn new(
        source: &FiniteGroup,
        target: &FiniteGroup,
        images: Vec<usize>,
    ) -> Result<Self, GroupError> {
        if images.len() != source.order() {
            return Err(GroupError::NotAHomomorphism(format!(
                "{} images for a source of order {}",
                images.len(),
                source.order()
            )));
        }
        for &y in &images {
            target.check(y)?;
        }
        for g in source.elements() {
            for h in source.elements() {
                if images[source.mul(&g, &h)] != target.mul(&images[g], &images[h]) {
                    return Err(GroupError::NotAHomomorphism(format!(
                        "fails on ({}, {})",
                        source.label(g),
                        source.label(h)
                    )));
                }
            }
        }
        Ok(Self {
            target_order: target.order(),
            images,
        })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        Self {
            target_order: group.order(),
            images: group.elements().collect(),
        }
    }

    /// The map onto the trivial group.
    pub fn trivial(source: &FiniteGroup) -> Self {
        Self {
            target_order: 1,
            images: vec![0; source.order()],
        }
    }

    pub fn apply(&self, g: usize) -> Result<usize, GroupError> {
        self.images
            .get(g)
            .copied()
            .ok_or(GroupError::OutOfRange(g, self.images.len()))
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn source_order(&self) -> usize {
        self.images.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn kernel(&self, target: &FiniteGroup) -> BTreeSet<usize> {
        let e = target.identity();
        (0..self.images.len()).filter(|&g| self.images[g] == e).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_map_is_a_homomorphism() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let sign: Vec<usize> = s3
            .elements()
            .map(|g| usize::from(s3.label(g).len() == 4))
            .collect();
        let hom = GroupHom::new(&s3, &c2, sign).unwrap();
        assert_eq!(hom.kernel(&c2).len(), 3);
    }

    #[test]
    fn rejects_non_homomorphism() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert!(GroupHom::new(&c4, &c2, vec![0, 1, 1, 0]).is_err());
        assert!(GroupHom::new(&c4, &c2, vec![0, 1, 0, 1]).is_ok());
        assert!(GroupHom::new(&c4, &c2, vec![0, 1, 0]).is_err());
    }
}
