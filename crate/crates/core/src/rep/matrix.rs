use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::{HilbertVector, RepError, Representation, ORTHOGONALITY_TOLERANCE, SPAN_TOLERANCE};
use crate::group::{FiniteGroup, Group, GroupError, GroupHom};

const MATRIX_TOLERANCE: f64 = 1e-10;

type CMatrix = DMatrix<Complex64>;

/// Representation by explicit unitary matrices.
pub trait FiniteDimRep: Representation<Vector = DVector<Complex64>> {
    fn dim(&self) -> usize;
    fn matrix(&self, g: &Self::Element) -> Result<CMatrix, RepError>;
    /// Matrices generating the image group π(G).
    fn generator_matrices(&self) -> Vec<CMatrix>;
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn check_dim(dim: usize, x: &DVector<Complex64>) -> Result<(), RepError> {
    if x.len() != dim {
        return Err(RepError::DimensionMismatch {
            expected: dim,
            got: x.len(),
        });
    }
    Ok(())
}

/// Finite-dimensional unitary representation of a [`FiniteGroup`], one
/// matrix per element.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep {
    name: String,
    dim: usize,
    matrices: Vec<CMatrix>,
}

impl MatrixRep {
    /// Checks unitarity and `π(gh) = π(g)π(h)` on every pair, both within
    /// 1e-10.
    pub fn from_matrices(
        name: impl Into<String>,
        group: &FiniteGroup,
        matrices: Vec<CMatrix>,
    ) -> Result<Self, RepError> {
        let name = name.into();
        if matrices.len() != group.order() {
            return Err(RepError::Invalid(format!(
                "{name}: {} matrices for a group of order {}",
                matrices.len(),
                group.order()
            )));
        }
        let dim = matrices[0].nrows();
        let identity = CMatrix::identity(dim, dim);
        for (g, m) in matrices.iter().enumerate() {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(RepError::Invalid(format!("{name}: matrix {g} is not {dim}x{dim}")));
            }
            if max_abs_diff(&(m.adjoint() * m), &identity) > MATRIX_TOLERANCE {
                return Err(RepError::Invalid(format!(
                    "{name}: matrix for {} is not unitary",
                    group.label(g)
                )));
            }
        }
        for g in group.elements() {
            for h in group.elements() {
                let lhs = &matrices[group.mul(&g, &h)];
                let rhs = &matrices[g] * &matrices[h];
                if max_abs_diff(lhs, &rhs) > MATRIX_TOLERANCE {
                    return Err(RepError::Invalid(format!(
                        "{name}: not multiplicative at ({}, {})",
                        group.label(g),
                        group.label(h)
                    )));
                }
            }
        }
        Ok(Self {
            name,
            dim,
            matrices,
        })
    }

    /// One-dimensional representation from its character values.
    pub fn one_dimensional(
        name: impl Into<String>,
        group: &FiniteGroup,
        values: &[Complex64],
    ) -> Result<Self, RepError> {
        let matrices = values
            .iter()
            .map(|&z| CMatrix::from_element(1, 1, z))
            .collect();
        Self::from_matrices(name, group, matrices)
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Self::one_dimensional("trivial", group, &vec![c(1.0, 0.0); group.order()])
            .expect("trivial character is a representation")
    }

    /// Sign character of a permutation group.
    pub fn sign(group: &FiniteGroup) -> Result<Self, RepError> {
        let values = group
            .elements()
            .map(|g| {
                let (_, perm) = group
                    .permutation(g)
                    .ok_or_else(|| RepError::Invalid("sign needs a permutation group".into()))?;
                Ok(c(parity(perm), 0.0))
            })
            .collect::<Result<Vec<_>, RepError>>()?;
        Self::one_dimensional("sign", group, &values)
    }

    /// The standard (n−1)-dimensional representation of a permutation group
    /// of degree n: the permutation action restricted to the sum-zero
    /// hyperplane, in the Helmert orthonormal basis. For S₃ the basis is
    /// `e₁ = (1,−1,0)/√2`, `e₂ = (1,1,−2)/√6`.
    pub fn standard(group: &FiniteGroup) -> Result<Self, RepError> {
        let (n, _) = group
            .permutation(group.identity())
            .ok_or_else(|| RepError::Invalid("standard rep needs a permutation group".into()))?;
        if n < 2 {
            return Err(RepError::Invalid("degree must be at least 2".into()));
        }
        let mut basis = DMatrix::<f64>::zeros(n, n - 1);
        for k in 1..n {
            let scale = 1.0 / ((k * (k + 1)) as f64).sqrt();
            for i in 0..k {
                basis[(i, k - 1)] = scale;
            }
            basis[(k, k - 1)] = -(k as f64) * scale;
        }
        let matrices = group
            .elements()
            .map(|g| {
                let (_, perm) = group.permutation(g).expect("checked above");
                let mut p = DMatrix::<f64>::zeros(n, n);
                for (i, &image) in perm.iter().enumerate() {
                    p[(image, i)] = 1.0;
                }
                (basis.transpose() * p * &basis).map(|x| c(x, 0.0))
            })
            .collect();
        Self::from_matrices("standard", group, matrices)
    }

    /// χ_k(g) = exp(2πi·k·g/m) on the cyclic group built by
    /// [`FiniteGroup::cyclic`].
    pub fn cyclic_character(group: &FiniteGroup, k: usize) -> Result<Self, RepError> {
        let m = group.order();
        let values: Vec<Complex64> = group
            .elements()
            .map(|g| root_of_unity((k * g) % m, m))
            .collect();
        Self::one_dimensional(format!("chi{k}"), group, &values)
    }

    /// Faithful 2-dimensional representation of Q₈:
    /// `i ↦ diag(i, −i)`, `j ↦ [[0, 1], [−1, 0]]`, `k = ij`.
    pub fn quaternion_standard(group: &FiniteGroup) -> Result<Self, RepError> {
        let zero = c(0.0, 0.0);
        let unit = |label: &str| -> Result<CMatrix, RepError> {
            let (sign, base) = match label.strip_prefix('-') {
                Some(rest) => (-1.0, rest),
                None => (1.0, label),
            };
            let m = match base {
                "1" => CMatrix::identity(2, 2),
                "i" => CMatrix::from_row_slice(2, 2, &[c(0.0, 1.0), zero, zero, c(0.0, -1.0)]),
                "j" => CMatrix::from_row_slice(2, 2, &[zero, c(1.0, 0.0), c(-1.0, 0.0), zero]),
                "k" => CMatrix::from_row_slice(2, 2, &[zero, c(0.0, 1.0), c(0.0, 1.0), zero]),
                _ => return Err(GroupError::UnknownLabel(label.to_string()).into()),
            };
            Ok(m * c(sign, 0.0))
        };
        let matrices = group
            .elements()
            .map(|g| unit(group.label(g)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_matrices("q8-standard", group, matrices)
    }

    /// The four characters of Q₈ trivial on −1, indexed by the signs they
    /// take on `i` and `j`.
    pub fn quaternion_character(
        group: &FiniteGroup,
        on_i: bool,
        on_j: bool,
    ) -> Result<Self, RepError> {
        let s = |neg: bool| if neg { -1.0 } else { 1.0 };
        let values = group
            .elements()
            .map(|g| {
                let label = group.label(g).trim_start_matches('-');
                let v = match label {
                    "1" => 1.0,
                    "i" => s(on_i),
                    "j" => s(on_j),
                    "k" => s(on_i) * s(on_j),
                    other => return Err(GroupError::UnknownLabel(other.to_string()).into()),
                };
                Ok(c(v, 0.0))
            })
            .collect::<Result<Vec<_>, RepError>>()?;
        let name = format!("q8-char{}{}", u8::from(on_i), u8::from(on_j));
        Self::one_dimensional(name, group, &values)
    }

    /// Block-diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, RepError> {
        if self.matrices.len() != other.matrices.len() {
            return Err(RepError::Invalid("direct sum of reps of different groups".into()));
        }
        let dim = self.dim + other.dim;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| {
                let mut m = CMatrix::zeros(dim, dim);
                m.view_mut((0, 0), (self.dim, self.dim)).copy_from(a);
                m.view_mut((self.dim, self.dim), (other.dim, other.dim))
                    .copy_from(b);
                m
            })
            .collect();
        Ok(Self {
            name: format!("{}+{}", self.name, other.name),
            dim,
            matrices,
        })
    }

    /// Elements acting as the identity, within 1e-10.
    pub fn kernel(&self) -> Vec<usize> {
        let identity = CMatrix::identity(self.dim, self.dim);
        (0..self.matrices.len())
            .filter(|&g| max_abs_diff(&self.matrices[g], &identity) <= MATRIX_TOLERANCE)
            .collect()
    }

    /// The factor representation `π̃(gN) = π(g)` on `G/N`, given the
    /// projection `G → G/N`. Requires `N ⊆ ker π`.
    pub fn factor_through(
        &self,
        quotient: &FiniteGroup,
        projection: &GroupHom,
    ) -> Result<Self, RepError> {
        if projection.source_order() != self.matrices.len()
            || projection.target_order() != quotient.order()
        {
            return Err(RepError::Invalid("projection does not match the groups".into()));
        }
        let mut matrices: Vec<Option<CMatrix>> = vec![None; quotient.order()];
        for (g, m) in self.matrices.iter().enumerate() {
            let coset = projection.apply(g)?;
            match &matrices[coset] {
                None => matrices[coset] = Some(m.clone()),
                Some(existing) if max_abs_diff(existing, m) <= MATRIX_TOLERANCE => {}
                Some(_) => {
                    return Err(RepError::Invalid(format!(
                        "{} is not constant on the coset {}",
                        self.name,
                        quotient.label(coset)
                    )))
                }
            }
        }
        let matrices = matrices
            .into_iter()
            .map(|m| m.ok_or_else(|| RepError::Invalid("projection is not onto".into())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_matrices(format!("{}~", self.name), quotient, matrices)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    /// Brute-force average of `|⟨t u, v⟩|` over the finite image group
    /// `K = π(G)` (distinct matrices, each counted once).
    pub fn haar_average_abs_coefficient(
        &self,
        u: &DVector<Complex64>,
        v: &DVector<Complex64>,
    ) -> Result<f64, RepError> {
        check_dim(self.dim, u)?;
        check_dim(self.dim, v)?;
        let mut image: Vec<&CMatrix> = Vec::new();
        for m in &self.matrices {
            if !image.iter().any(|t| max_abs_diff(t, m) <= MATRIX_TOLERANCE) {
                image.push(m);
            }
        }
        let total: f64 = image
            .iter()
            .map(|t| (*t * u).inner(v).map(|z| z.norm()))
            .sum::<Result<f64, _>>()?;
        Ok(total / image.len() as f64)
    }
}

impl Representation for MatrixRep {
    type Element = usize;
    type Vector = DVector<Complex64>;

    fn apply(&self, g: &usize, x: &DVector<Complex64>) -> Result<DVector<Complex64>, RepError> {
        check_dim(self.dim, x)?;
        let m = self
            .matrices
            .get(*g)
            .ok_or(GroupError::OutOfRange(*g, self.matrices.len()))?;
        Ok(m * x)
    }
}

impl FiniteDimRep for MatrixRep {
    fn dim(&self) -> usize {
        self.dim
    }

    fn matrix(&self, g: &usize) -> Result<CMatrix, RepError> {
        self.matrices
            .get(*g)
            .cloned()
            .ok_or_else(|| GroupError::OutOfRange(*g, self.matrices.len()).into())
    }

    fn generator_matrices(&self) -> Vec<CMatrix> {
        self.matrices.clone()
    }
}

/// Representation of ℤ on ℝ² by rotation through `k·angle`. Its image
/// closure is the circle group whenever `angle/2π` is irrational.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RotationRep {
    angle: f64,
}

impl RotationRep {
    pub fn new(angle: f64) -> Self {
        Self { angle }
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    fn rotation(theta: f64) -> CMatrix {
        let (s, co) = theta.sin_cos();
        CMatrix::from_row_slice(2, 2, &[c(co, 0.0), c(-s, 0.0), c(s, 0.0), c(co, 0.0)])
    }
}

impl Representation for RotationRep {
    type Element = i64;
    type Vector = DVector<Complex64>;

    fn apply(&self, k: &i64, x: &DVector<Complex64>) -> Result<DVector<Complex64>, RepError> {
        check_dim(2, x)?;
        Ok(Self::rotation(*k as f64 * self.angle) * x)
    }
}

impl FiniteDimRep for RotationRep {
    fn dim(&self) -> usize {
        2
    }

    fn matrix(&self, k: &i64) -> Result<CMatrix, RepError> {
        Ok(Self::rotation(*k as f64 * self.angle))
    }

    fn generator_matrices(&self) -> Vec<CMatrix> {
        vec![Self::rotation(self.angle)]
    }
}

/// Orthonormal basis of the closed invariant subspace spanned by
/// `{π(g)u}`: generator images of the current basis are orthogonalised
/// against it until no new direction above [`SPAN_TOLERANCE`] appears.
pub fn invariant_span<R: FiniteDimRep>(
    rep: &R,
    u: &DVector<Complex64>,
) -> Result<Vec<DVector<Complex64>>, RepError> {
    check_dim(rep.dim(), u)?;
    let scale = u.norm();
    if scale == 0.0 {
        return Ok(Vec::new());
    }
    let generators = rep.generator_matrices();
    let mut basis = vec![u / Complex64::new(scale, 0.0)];
    let mut next = 0;
    while next < basis.len() {
        for m in &generators {
            let mut w = m * &basis[next];
            // two Gram–Schmidt passes for numerical orthogonality
            for _ in 0..2 {
                for b in &basis {
                    let proj = b.dotc(&w);
                    w -= b * proj;
                }
            }
            let norm = w.norm();
            if norm > SPAN_TOLERANCE {
                basis.push(w / Complex64::new(norm, 0.0));
                if basis.len() > rep.dim() {
                    return Err(RepError::SpanDiverged(rep.dim()));
                }
            }
        }
        next += 1;
    }
    Ok(basis)
}

/// True iff `u` and `v` lie in orthogonal invariant subspaces, i.e. `v` is
/// orthogonal to the invariant span of `u` within 1e-9 (relative to ‖v‖).
pub fn orthogonal_invariant_check<R: FiniteDimRep>(
    rep: &R,
    u: &DVector<Complex64>,
    v: &DVector<Complex64>,
) -> Result<bool, RepError> {
    check_dim(rep.dim(), v)?;
    let span = invariant_span(rep, u)?;
    let projection: f64 = span
        .iter()
        .map(|b| b.dotc(v).norm_sqr())
        .sum::<f64>()
        .sqrt();
    Ok(projection <= ORTHOGONALITY_TOLERANCE * v.norm().max(f64::MIN_POSITIVE))
}

fn root_of_unity(k: usize, m: usize) -> Complex64 {
    // exact values at the quarter turns keep small characters exact
    match (4 * k) % (4 * m) {
        0 => return c(1.0, 0.0),
        x if x == m => return c(0.0, 1.0),
        x if x == 2 * m => return c(-1.0, 0.0),
        x if x == 3 * m => return c(0.0, -1.0),
        _ => {}
    }
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64)
}

fn parity(perm: &[usize]) -> f64 {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if !seen[start] {
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
    }
    if (perm.len() - cycles).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{basis_vector, real_vector};

    fn s3() -> FiniteGroup {
        FiniteGroup::symmetric(3).unwrap()
    }

    #[test]
    fn identity_coefficient_is_inner_product() {
        let g = s3();
        let rho = MatrixRep::standard(&g).unwrap();
        let u = real_vector(&[0.3, -0.4]);
        let v = real_vector(&[1.0, 2.0]);
        let coeff = rho.matrix_coefficient(&g.identity(), &u, &v).unwrap();
        assert!((coeff - u.inner(&v).unwrap()).norm() < 1e-15);
    }

    #[test]
    fn three_cycle_rotates_by_120_degrees() {
        let g = s3();
        let rho = MatrixRep::standard(&g).unwrap();
        let e1 = basis_vector(2, 0);
        for label in ["(123)", "(132)"] {
            let coeff = rho
                .matrix_coefficient(&g.element(label).unwrap(), &e1, &e1)
                .unwrap();
            assert!((coeff - c(-0.5, 0.0)).norm() < 1e-12);
        }
        let swap = rho
            .matrix_coefficient(&g.element("(12)").unwrap(), &e1, &e1)
            .unwrap();
        assert!((swap - c(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn characters_preserve_coefficient_modulus() {
        let g = FiniteGroup::cyclic(6).unwrap();
        let chi = MatrixRep::cyclic_character(&g, 1).unwrap();
        let u = real_vector(&[0.7]);
        let v = real_vector(&[-0.2]);
        for x in g.elements() {
            let coeff = chi.matrix_coefficient(&x, &u, &v).unwrap();
            assert!((coeff.norm() - 0.14).abs() < 1e-12);
        }
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let g = s3();
        let rho = MatrixRep::standard(&g).unwrap();
        assert!(matches!(
            rho.apply(&0, &basis_vector(3, 0)),
            Err(RepError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn builtin_reps_validate() {
        let q8 = FiniteGroup::quaternion().unwrap();
        assert_eq!(MatrixRep::quaternion_standard(&q8).unwrap().kernel(), vec![0]);
        for (a, b) in [(false, false), (true, false), (false, true), (true, true)] {
            let chi = MatrixRep::quaternion_character(&q8, a, b).unwrap();
            assert!(chi.kernel().contains(&q8.element("-1").unwrap()));
        }
        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert_eq!(MatrixRep::standard(&s4).unwrap().dim(), 3);
        assert_eq!(MatrixRep::sign(&s4).unwrap().kernel().len(), 12);
    }

    #[test]
    fn rejects_non_multiplicative_matrices() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let values = [c(1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0)];
        assert!(MatrixRep::one_dimensional("bad", &g, &values).is_err());
        let non_unitary = [c(1.0, 0.0), c(2.0, 0.0), c(4.0, 0.0)];
        assert!(MatrixRep::one_dimensional("bad", &g, &non_unitary).is_err());
    }

    #[test]
    fn spans() {
        let g = s3();
        let rho = MatrixRep::standard(&g).unwrap();
        assert!(invariant_span(&rho, &DVector::zeros(2)).unwrap().is_empty());
        assert_eq!(invariant_span(&rho, &real_vector(&[0.2, 0.9])).unwrap().len(), 2);

        let block = rho.direct_sum(&MatrixRep::sign(&g).unwrap()).unwrap();
        let span = invariant_span(&block, &basis_vector(3, 0)).unwrap();
        assert_eq!(span.len(), 2);
        for b in &span {
            assert!(b[2].norm() < 1e-12);
        }
    }

    #[test]
    fn orthogonality_oracle() {
        let g = s3();
        let rho = MatrixRep::standard(&g).unwrap();
        let block = rho.direct_sum(&MatrixRep::sign(&g).unwrap()).unwrap();
        assert!(orthogonal_invariant_check(&block, &basis_vector(3, 0), &basis_vector(3, 2)).unwrap());
        assert!(!orthogonal_invariant_check(&rho, &basis_vector(2, 0), &basis_vector(2, 1)).unwrap());
        let u = real_vector(&[0.6, 0.8]);
        let v = rho.apply(&g.element("(123)").unwrap(), &u).unwrap();
        assert!(!orthogonal_invariant_check(&rho, &u, &v).unwrap());
    }

    #[test]
    fn rotation_span_is_the_plane() {
        let rot = RotationRep::new(1.0);
        assert_eq!(invariant_span(&rot, &basis_vector(2, 0)).unwrap().len(), 2);
        let half_turn = RotationRep::new(PI);
        // rotation by π keeps every line invariant
        assert_eq!(invariant_span(&half_turn, &basis_vector(2, 0)).unwrap().len(), 1);
    }

    #[test]
    fn factor_representation() {
        let g = s3();
        let sign = MatrixRep::sign(&g).unwrap();
        let a3 = g.subgroup_generated([g.element("(123)").unwrap()]);
        let (q, proj) = g.quotient(&a3).unwrap();
        let factor = sign.factor_through(&q, &proj).unwrap();
        assert_eq!(factor.dim(), 1);
        let standard = MatrixRep::standard(&g).unwrap();
        assert!(standard.factor_through(&q, &proj).is_err());
    }

    #[test]
    fn haar_average_of_standard_rep() {
        let g = s3();
        let rho = MatrixRep::standard(&g).unwrap();
        let e1 = basis_vector(2, 0);
        // |coefficients| over S3: e and (12) give 1, the other four give 1/2
        let avg = rho.haar_average_abs_coefficient(&e1, &e1).unwrap();
        assert!((avg - 2.0 / 3.0).abs() < 1e-12);
    }
}
