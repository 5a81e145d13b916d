//! Finitely supported probability measures on groups: convolution powers,
//! adaptedness and strict aperiodicity verdicts, total variation, Haar
//! measure and pushforwards.
//!
//! Convolution is oriented so that `power(μ, n)` is the law of the random
//! product `wₙ ⋯ w₂ w₁`: each new increment multiplies on the left.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive};
use thiserror::Error;

use crate::group::{FiniteGroup, Group, GroupError, GroupHom};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MeasureError {
    #[error("negative weight on atom {0}")]
    NegativeWeight(String),
    #[error("total mass {0} is not 1")]
    NotNormalized(f64),
    #[error("atom {0} listed twice")]
    DuplicateAtom(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Scalar type for measure weights.
pub trait Weight: Num + Signed + Clone + PartialOrd + ToPrimitive + Debug + Send + Sync {
    fn from_ratio(num: i64, den: i64) -> Self;
    fn is_unit_mass(total: &Self) -> bool;
}

impl Weight for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn is_unit_mass(total: &Self) -> bool {
        (total - 1.0).abs() <= 1e-12
    }
}

impl Weight for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn is_unit_mass(total: &Self) -> bool {
        total.is_one()
    }
}

/// Probability measure with finitely many atoms. Zero-weight atoms are
/// dropped, so `support()` is exactly the set of stored atoms.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbMeasure<A: Ord, W> {
    atoms: BTreeMap<A, W>,
}

impl<A: Ord + Clone + Debug, W: Weight> ProbMeasure<A, W> {
    pub fn new<I: IntoIterator<Item = (A, W)>>(pairs: I) -> Result<Self, MeasureError> {
        let mut atoms = BTreeMap::new();
        let mut total = W::zero();
        for (a, w) in pairs {
            if w.is_negative() {
                return Err(MeasureError::NegativeWeight(format!("{a:?}")));
            }
            total = total + w.clone();
            if atoms.contains_key(&a) {
                return Err(MeasureError::DuplicateAtom(format!("{a:?}")));
            }
            if !w.is_zero() {
                atoms.insert(a, w);
            }
        }
        if !W::is_unit_mass(&total) {
            return Err(MeasureError::NotNormalized(total.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(Self { atoms })
    }

    pub fn point_mass(atom: A) -> Self {
        Self {
            atoms: BTreeMap::from([(atom, W::one())]),
        }
    }

    /// Uniform measure on distinct atoms.
    pub fn uniform<I: IntoIterator<Item = A>>(atoms: I) -> Result<Self, MeasureError> {
        let atoms: Vec<A> = atoms.into_iter().collect();
        let n = atoms.len() as i64;
        Self::new(atoms.into_iter().map(|a| (a, W::from_ratio(1, n))))
    }

    pub fn weight(&self, atom: &A) -> W {
        self.atoms.get(atom).cloned().unwrap_or_else(W::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &A> {
        self.atoms.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&A, &W)> {
        self.atoms.iter()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn total_mass(&self) -> W {
        self.atoms.values().fold(W::zero(), |acc, w| acc + w.clone())
    }

    /// Same measure with `f64` weights.
    pub fn to_f64(&self) -> ProbMeasure<A, f64> {
        ProbMeasure {
            atoms: self
                .atoms
                .iter()
                .map(|(a, w)| (a.clone(), w.to_f64().unwrap_or(f64::NAN)))
                .collect(),
        }
    }
}

impl<W: Weight> ProbMeasure<usize, W> {
    /// Uniform (normalized Haar) measure on a finite group.
    pub fn haar(group: &FiniteGroup) -> Self {
        let w = W::from_ratio(1, group.order() as i64);
        Self {
            atoms: group.elements().map(|g| (g, w.clone())).collect(),
        }
    }

    /// Parses `(label, weight)` pairs against a group's element labels.
    pub fn from_labels<'a, I>(group: &FiniteGroup, pairs: I) -> Result<Self, MeasureError>
    where
        I: IntoIterator<Item = (&'a str, W)>,
    {
        let pairs = pairs
            .into_iter()
            .map(|(l, w)| group.element(l).map(|g| (g, w)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(pairs)
    }
}

/// `(μ * ν)(g) = Σ_x μ(x) ν(x⁻¹g)`: the law of `x·y` with `x ~ μ`, `y ~ ν`.
pub fn convolve<G: Group, W: Weight>(
    group: &G,
    mu: &ProbMeasure<G::Element, W>,
    nu: &ProbMeasure<G::Element, W>,
) -> ProbMeasure<G::Element, W> {
    let mut atoms: BTreeMap<G::Element, W> = BTreeMap::new();
    for (x, wx) in &mu.atoms {
        for (y, wy) in &nu.atoms {
            let w = wx.clone() * wy.clone();
            let entry = atoms.entry(group.mul(x, y)).or_insert_with(W::zero);
            *entry = entry.clone() + w;
        }
    }
    atoms.retain(|_, w| !w.is_zero());
    ProbMeasure { atoms }
}

/// `μⁿ` for `n ≥ 1`; `n = 0` gives the point mass at the identity.
pub fn power<G: Group, W: Weight>(
    group: &G,
    mu: &ProbMeasure<G::Element, W>,
    n: usize,
) -> ProbMeasure<G::Element, W> {
    ConvolutionPowers::new(group, mu)
        .nth(n)
        .expect("power sequence is infinite")
}

/// Iterator over `μ⁰, μ¹, μ², ...` with `μⁿ⁺¹ = μ * μⁿ`.
pub struct ConvolutionPowers<'a, G: Group, W> {
    group: &'a G,
    step: &'a ProbMeasure<G::Element, W>,
    current: Option<ProbMeasure<G::Element, W>>,
}

impl<'a, G: Group, W: Weight> ConvolutionPowers<'a, G, W> {
    pub fn new(group: &'a G, step: &'a ProbMeasure<G::Element, W>) -> Self {
        Self {
            group,
            step,
            current: Some(ProbMeasure::point_mass(group.identity())),
        }
    }
}

impl<G: Group, W: Weight> Iterator for ConvolutionPowers<'_, G, W> {
    type Item = ProbMeasure<G::Element, W>;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.current.take()?;
        self.current = Some(convolve(self.group, self.step, &current));
        Some(current)
    }
}

/// True iff the support generates the whole group.
pub fn is_adapted<W: Weight>(group: &FiniteGroup, mu: &ProbMeasure<usize, W>) -> bool {
    group.subgroup_generated(mu.support().copied()).len() == group.order()
}

/// True iff the support lies in no coset `sN` of a proper normal subgroup:
/// with `s ∈ supp μ` fixed, the normal closure of `{s⁻¹t : t ∈ supp μ}` must
/// be the whole group.
pub fn is_strictly_aperiodic<W: Weight>(group: &FiniteGroup, mu: &ProbMeasure<usize, W>) -> bool {
    let Some(&s) = mu.support().next() else {
        return false;
    };
    let s_inv = group.inv(&s);
    let differences: Vec<usize> = mu.support().map(|t| group.mul(&s_inv, t)).collect();
    group.normal_closure(differences).len() == group.order()
}

/// `(1/2) Σ_g |μ(g) − ν(g)|`.
pub fn tv_distance<A: Ord + Clone + Debug, W: Weight>(
    mu: &ProbMeasure<A, W>,
    nu: &ProbMeasure<A, W>,
) -> f64 {
    let mut sum = W::zero();
    for (a, w) in &mu.atoms {
        sum = sum + (w.clone() - nu.weight(a)).abs();
    }
    for (a, w) in &nu.atoms {
        if !mu.atoms.contains_key(a) {
            sum = sum + w.clone();
        }
    }
    sum.to_f64().unwrap_or(f64::NAN) / 2.0
}

/// Image measure under a homomorphism; weights of equal images add up.
pub fn pushforward<W: Weight>(
    mu: &ProbMeasure<usize, W>,
    hom: &GroupHom,
) -> Result<ProbMeasure<usize, W>, MeasureError> {
    let mut atoms: BTreeMap<usize, W> = BTreeMap::new();
    for (g, w) in &mu.atoms {
        let entry = atoms.entry(hom.apply(*g)?).or_insert_with(W::zero);
        *entry = entry.clone() + w.clone();
    }
    Ok(ProbMeasure { atoms })
}

/// On ℤ: the support generates ℤ iff its gcd is 1.
pub fn is_adapted_on_integers<W: Weight>(mu: &ProbMeasure<i64, W>) -> bool {
    mu.support().fold(0i64, |g, &k| g.gcd(&k)) == 1
}

/// On ℤ: the support lies in no coset `s + mℤ` (m ≥ 2) iff the gcd of the
/// differences is 1.
pub fn is_strictly_aperiodic_on_integers<W: Weight>(mu: &ProbMeasure<i64, W>) -> bool {
    let Some(&s) = mu.support().next() else {
        return false;
    };
    mu.support().fold(0i64, |g, &k| g.gcd(&(k - s))) == 1
}

/// Dense measure on a window of ℤ, used for long convolution-power runs.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeDensity {
    offset: i64,
    weights: Vec<f64>,
}

impl LatticeDensity {
    pub fn from_measure(mu: &ProbMeasure<i64, f64>) -> Self {
        let lo = *mu.support().next().expect("measures have nonempty support");
        let hi = *mu.support().last().expect("measures have nonempty support");
        let mut weights = vec![0.0; (hi - lo + 1) as usize];
        for (k, w) in mu.iter() {
            weights[(k - lo) as usize] = *w;
        }
        Self {
            offset: lo,
            weights,
        }
    }

    pub fn point_mass(k: i64) -> Self {
        Self {
            offset: k,
            weights: vec![1.0],
        }
    }

    pub fn weight(&self, k: i64) -> f64 {
        let i = k - self.offset;
        if i < 0 {
            return 0.0;
        }
        self.weights.get(i as usize).copied().unwrap_or(0.0)
    }

    pub fn support_range(&self) -> (i64, i64) {
        (self.offset, self.offset + self.weights.len() as i64 - 1)
    }

    pub fn convolve(&self, other: &Self) -> Self {
        let mut weights = vec![0.0; self.weights.len() + other.weights.len() - 1];
        for (i, a) in self.weights.iter().enumerate() {
            if *a == 0.0 {
                continue;
            }
            for (j, b) in other.weights.iter().enumerate() {
                weights[i + j] += a * b;
            }
        }
        Self {
            offset: self.offset + other.offset,
            weights,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::IntegerLattice;

    type Exact = ProbMeasure<usize, BigRational>;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    fn s3() -> FiniteGroup {
        FiniteGroup::symmetric(3).unwrap()
    }

    fn uniform(g: &FiniteGroup, labels: &[&str]) -> Exact {
        Exact::uniform(labels.iter().map(|l| g.element(l).unwrap())).unwrap()
    }

    #[test]
    fn point_masses_multiply() {
        let g = s3();
        let a = g.element("(12)").unwrap();
        let b = g.element("(123)").unwrap();
        let c = convolve(&g, &Exact::point_mass(a), &Exact::point_mass(b));
        assert_eq!(c, Exact::point_mass(g.mul(&a, &b)));
    }

    #[test]
    fn lazy_transposition_walk_returns_with_one_third() {
        let g = s3();
        let mu = uniform(&g, &["e", "(12)", "(23)"]);
        let mu2 = power(&g, &mu, 2);
        assert_eq!(mu2.weight(&g.identity()), r(1, 3));
        assert!(mu2.total_mass().is_one());
    }

    #[test]
    fn simple_walk_on_integers() {
        let mu = ProbMeasure::<i64, BigRational>::uniform([-1, 1]).unwrap();
        let mu2 = power(&IntegerLattice, &mu, 2);
        assert_eq!(mu2.weight(&0), r(1, 2));
        assert_eq!(mu2.weight(&2), r(1, 4));
    }

    #[test]
    fn adaptedness() {
        let g = s3();
        assert!(is_adapted(&g, &Exact::haar(&g)));
        assert!(is_adapted(&g, &uniform(&g, &["(12)", "(23)"])));
        assert!(!is_adapted(&g, &uniform(&g, &["(123)"])));
    }

    #[test]
    fn strict_aperiodicity() {
        let g = s3();
        assert!(is_strictly_aperiodic(&g, &Exact::haar(&g)));
        assert!(!is_strictly_aperiodic(&g, &uniform(&g, &["(12)", "(23)"])));
        assert!(is_strictly_aperiodic(&g, &uniform(&g, &["e", "(12)", "(23)"])));
    }

    #[test]
    fn total_variation() {
        let g = s3();
        let haar = Exact::haar(&g);
        assert_eq!(tv_distance(&haar, &haar), 0.0);
        let delta = Exact::point_mass(g.identity());
        assert!((tv_distance(&delta, &haar) - 5.0 / 6.0).abs() < 1e-15);
        let mu = uniform(&g, &["e", "(12)", "(23)"]);
        assert!((tv_distance(&mu, &haar) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn pushforwards() {
        let g = s3();
        let mu = uniform(&g, &["e", "(12)", "(23)"]);
        assert_eq!(pushforward(&mu, &GroupHom::identity(&g)).unwrap(), mu);

        let a3 = g.subgroup_generated([g.element("(123)").unwrap()]);
        let (q, proj) = g.quotient(&a3).unwrap();
        let image = pushforward(&mu, &proj).unwrap();
        assert_eq!(image.weight(&q.identity()), r(1, 3));
        assert_eq!(image.weight(&(1 - q.identity())), r(2, 3));

        let trivial = pushforward(&mu, &GroupHom::trivial(&g)).unwrap();
        assert_eq!(trivial, Exact::point_mass(0));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            ProbMeasure::<usize, f64>::new([(0, 0.5), (1, 0.4)]),
            Err(MeasureError::NotNormalized(_))
        ));
        assert!(matches!(
            ProbMeasure::<usize, f64>::new([(0, 1.5), (1, -0.5)]),
            Err(MeasureError::NegativeWeight(_))
        ));
        assert!(matches!(
            ProbMeasure::<usize, f64>::new([(0, 0.5), (0, 0.5)]),
            Err(MeasureError::DuplicateAtom(_))
        ));
        let g = s3();
        assert!(ProbMeasure::<usize, f64>::from_labels(&g, [("(14)", 1.0)]).is_err());
    }

    #[test]
    fn integer_verdicts() {
        let lazy = ProbMeasure::<i64, f64>::uniform([-1, 0, 1]).unwrap();
        assert!(is_adapted_on_integers(&lazy));
        assert!(is_strictly_aperiodic_on_integers(&lazy));
        let simple = ProbMeasure::<i64, f64>::uniform([-1, 1]).unwrap();
        assert!(is_adapted_on_integers(&simple));
        assert!(!is_strictly_aperiodic_on_integers(&simple));
        let even = ProbMeasure::<i64, f64>::uniform([0, 2]).unwrap();
        assert!(!is_adapted_on_integers(&even));
    }

    #[test]
    fn dense_matches_sparse() {
        let mu = ProbMeasure::<i64, f64>::new([(-1, 0.2), (0, 0.5), (2, 0.3)]).unwrap();
        let dense = LatticeDensity::from_measure(&mu);
        let mut acc = LatticeDensity::point_mass(0);
        for _ in 0..6 {
            acc = dense.convolve(&acc);
        }
        let sparse = power(&IntegerLattice, &mu, 6);
        let (lo, hi) = acc.support_range();
        for k in lo..=hi {
            assert!((acc.weight(k) - sparse.weight(&k)).abs() < 1e-15);
        }
    }
}
