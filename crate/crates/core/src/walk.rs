//! Sample paths of the random walk and coefficient trajectories along them.
//!
//! Path `i` of a run with seed `s` draws its increments from a ChaCha8
//! stream keyed by `(s, i)`, one draw per step, so any path can be
//! regenerated on its own and ensembles give the same results whether the
//! paths run serially or in parallel.

use std::fmt::Debug;

use num_complex::Complex64;
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::group::Group;
use crate::measure::{ProbMeasure, Weight};
use crate::rep::{HilbertVector, RepError, Representation};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WalkError {
    #[error("horizon must be at least 1")]
    EmptyHorizon,
    #[error("path count must be at least 1")]
    NoPaths,
    #[error("cannot sample from measure: {0}")]
    Sampler(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Finite-horizon sample `ω = (w₁, ..., w_N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkPath<A> {
    pub seed: u64,
    pub path_index: u64,
    pub increments: Vec<A>,
}

/// Draws i.i.d. increments from a fixed measure.
#[derive(Clone, Debug)]
pub struct PathSampler<A> {
    atoms: Vec<A>,
    index: WeightedIndex<f64>,
}

impl<A: Ord + Clone + Debug> PathSampler<A> {
    pub fn new<W: Weight>(mu: &ProbMeasure<A, W>) -> Result<Self, WalkError> {
        let (atoms, weights): (Vec<A>, Vec<f64>) = mu
            .iter()
            .map(|(a, w)| (a.clone(), w.to_f64().unwrap_or(f64::NAN)))
            .unzip();
        let index = WeightedIndex::new(weights).map_err(|e| WalkError::Sampler(e.to_string()))?;
        Ok(Self { atoms, index })
    }

    /// The generator for path `path_index` of run `seed`.
    pub fn rng(seed: u64, path_index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(path_index);
        rng
    }

    /// Increment iterator for one path; step `n` always consumes the
    /// `n`-th draw of the path's stream.
    pub fn increments(&self, seed: u64, path_index: u64) -> impl Iterator<Item = &A> + '_ {
        let mut rng = Self::rng(seed, path_index);
        std::iter::repeat_with(move || &self.atoms[self.index.sample(&mut rng)])
    }

    pub fn sample(&self, horizon: usize, seed: u64, path_index: u64) -> WalkPath<A> {
        WalkPath {
            seed,
            path_index,
            increments: self
                .increments(seed, path_index)
                .take(horizon)
                .cloned()
                .collect(),
        }
    }
}

pub fn sample_path<A: Ord + Clone + Debug, W: Weight>(
    mu: &ProbMeasure<A, W>,
    horizon: usize,
    seed: u64,
    path_index: u64,
) -> Result<WalkPath<A>, WalkError> {
    if horizon == 0 {
        return Err(WalkError::EmptyHorizon);
    }
    Ok(PathSampler::new(mu)?.sample(horizon, seed, path_index))
}

/// `g₁ = w₁`, `gₙ = wₙ · gₙ₋₁`.
pub fn random_products<G: Group>(group: &G, path: &WalkPath<G::Element>) -> Vec<G::Element> {
    path.increments
        .iter()
        .scan(group.identity(), |g, w| {
            *g = group.mul(w, g);
            Some(g.clone())
        })
        .collect()
}

/// `cₙ = ⟨π(gₙ)u, v⟩` for `n = 1..=N`; `values[n-1]` holds `cₙ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    pub seed: u64,
    pub path_index: u64,
    pub values: Vec<Complex64>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn moduli(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().map(|z| z.norm())
    }
}

fn stream_coefficients<'a, R, I>(
    rep: &R,
    increments: I,
    u: &R::Vector,
    v: &R::Vector,
) -> Result<Vec<Complex64>, RepError>
where
    R: Representation,
    R::Element: 'a,
    I: Iterator<Item = &'a R::Element>,
{
    let mut state = u.clone();
    increments
        .map(|w| {
            state = rep.apply(w, &state)?;
            state.inner(v)
        })
        .collect()
}

/// Streams `xₙ = π(wₙ)xₙ₋₁` from `x₀ = u`, reading `cₙ = ⟨xₙ, v⟩`; the
/// products `gₙ` are never formed.
pub fn coefficient_trajectory<R: Representation>(
    rep: &R,
    path: &WalkPath<R::Element>,
    u: &R::Vector,
    v: &R::Vector,
) -> Result<Trajectory, RepError> {
    Ok(Trajectory {
        seed: path.seed,
        path_index: path.path_index,
        values: stream_coefficients(rep, path.increments.iter(), u, v)?,
    })
}

/// Trajectories for paths `0..path_count`, in path order.
#[derive(Clone, Debug, PartialEq)]
pub struct Ensemble {
    pub seed: u64,
    pub trajectories: Vec<Trajectory>,
}

impl Ensemble {
    pub fn horizon(&self) -> usize {
        self.trajectories.first().map_or(0, Trajectory::len)
    }

    /// Mean of `|cₙ|` over paths, summed in path order.
    pub fn mean_abs(&self) -> Vec<f64> {
        let count = self.trajectories.len() as f64;
        let mut sums = vec![0.0; self.horizon()];
        for t in &self.trajectories {
            for (s, z) in sums.iter_mut().zip(t.moduli()) {
                *s += z;
            }
        }
        sums.into_iter().map(|s| s / count).collect()
    }

    /// Standard error of [`Ensemble::mean_abs`] at each step.
    pub fn mean_abs_stderr(&self) -> Vec<f64> {
        let count = self.trajectories.len() as f64;
        let means = self.mean_abs();
        let mut squares = vec![0.0; self.horizon()];
        for t in &self.trajectories {
            for ((s, z), m) in squares.iter_mut().zip(t.moduli()).zip(&means) {
                *s += (z - m) * (z - m);
            }
        }
        squares
            .into_iter()
            .map(|s| (s / (count - 1.0).max(1.0) / count).sqrt())
            .collect()
    }

    /// Largest `|cₙ|` over paths at each step.
    pub fn max_abs(&self) -> Vec<f64> {
        let mut out = vec![0.0f64; self.horizon()];
        for t in &self.trajectories {
            for (m, z) in out.iter_mut().zip(t.moduli()) {
                *m = m.max(z);
            }
        }
        out
    }
}

/// Runs `path_count` independent paths, in parallel, and returns their
/// trajectories ordered by path index.
pub fn ensemble_run<R, W>(
    mu: &ProbMeasure<R::Element, W>,
    rep: &R,
    u: &R::Vector,
    v: &R::Vector,
    horizon: usize,
    path_count: usize,
    seed: u64,
) -> Result<Ensemble, WalkError>
where
    R: Representation,
    R::Element: Ord + Clone + Debug + Send + Sync,
    W: Weight,
{
    if horizon == 0 {
        return Err(WalkError::EmptyHorizon);
    }
    if path_count == 0 {
        return Err(WalkError::NoPaths);
    }
    let sampler = PathSampler::new(mu)?;
    let trajectories = (0..path_count as u64)
        .into_par_iter()
        .map(|i| {
            let values =
                stream_coefficients(rep, sampler.increments(seed, i).take(horizon), u, v)?;
            Ok(Trajectory {
                seed,
                path_index: i,
                values,
            })
        })
        .collect::<Result<Vec<_>, RepError>>()?;
    Ok(Ensemble { seed, trajectories })
}
