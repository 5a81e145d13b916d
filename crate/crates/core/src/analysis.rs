//! Verdicts built from exact convolutions and sampled trajectories.
//!
//! A decreasing sequence `aₙ → 0` is a rate of random mixing when
//! `limsup |⟨π(gₙ)u, v⟩| / aₙ < ∞` almost surely. A finite horizon cannot
//! decide a limsup, so [`rate_test`] reports running maxima of that ratio at
//! four checkpoints and turns their growth into a verdict with explicit,
//! configurable thresholds.

use std::collections::BTreeSet;
use std::fmt;

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};
use crate::measure::{
    is_adapted, is_adapted_on_integers, is_strictly_aperiodic, is_strictly_aperiodic_on_integers,
    pushforward, tv_distance, ConvolutionPowers, LatticeDensity, MeasureError, ProbMeasure, Weight,
};
use crate::rep::{MatrixRep, RepError, Representation};
use crate::walk::{coefficient_trajectory, PathSampler, Trajectory, WalkError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("invalid rate candidate: {0}")]
    InvalidRate(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("trajectories need a common horizon of at least 8 steps")]
    Horizon,
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Exact `tv(μⁿ, Haar)` for `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct KawadaItoCurve {
    pub points: Vec<(usize, f64)>,
    pub adapted: bool,
    pub strictly_aperiodic: bool,
}

impl KawadaItoCurve {
    /// Convergence to Haar measure is guaranteed only for adapted, strictly
    /// aperiodic measures.
    pub fn convergence_expected(&self) -> bool {
        self.adapted && self.strictly_aperiodic
    }

    pub fn is_non_increasing(&self) -> bool {
        self.points.windows(2).all(|w| w[1].1 <= w[0].1)
    }

    /// Largest distance over `n ≥ from`.
    pub fn tail_sup(&self, from: usize) -> f64 {
        self.points
            .iter()
            .filter(|(n, _)| *n >= from)
            .map(|(_, d)| *d)
            .fold(0.0, f64::max)
    }

    pub fn last(&self) -> Option<f64> {
        self.points.last().map(|p| p.1)
    }
}

pub fn kawada_ito_curve<W: Weight>(
    group: &FiniteGroup,
    mu: &ProbMeasure<usize, W>,
    n_max: usize,
) -> KawadaItoCurve {
    let haar = ProbMeasure::<usize, W>::haar(group);
    let points = ConvolutionPowers::new(group, mu)
        .enumerate()
        .skip(1)
        .take(n_max)
        .map(|(n, law)| (n, tv_distance(&law, &haar)))
        .collect();
    KawadaItoCurve {
        points,
        adapted: is_adapted(group, mu),
        strictly_aperiodic: is_strictly_aperiodic(group, mu),
    }
}

/// Exact `Σ_g μⁿ(g) |⟨π(g)u, v⟩|` for `n = 1..=n_max`.
pub fn mean_coefficient_curve<W: Weight>(
    group: &FiniteGroup,
    rep: &MatrixRep,
    mu: &ProbMeasure<usize, W>,
    u: &DVector<Complex64>,
    v: &DVector<Complex64>,
    n_max: usize,
) -> Result<Vec<(usize, f64)>, AnalysisError> {
    let moduli = group
        .elements()
        .map(|g| rep.matrix_coefficient(&g, u, v).map(|z| z.norm()))
        .collect::<Result<Vec<f64>, _>>()?;
    Ok(ConvolutionPowers::new(group, mu)
        .enumerate()
        .skip(1)
        .take(n_max)
        .map(|(n, law)| {
            let value = law
                .iter()
                .map(|(g, w)| w.to_f64().unwrap_or(f64::NAN) * moduli[*g])
                .sum();
            (n, value)
        })
        .collect())
}

/// Candidate decay sequence `aₙ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "parameter", rename_all = "lowercase")]
pub enum RateCandidate {
    /// `n^(−α)`
    Power(f64),
    /// `1 / log(n + 2)`
    Logarithmic,
    /// `ρⁿ`
    Geometric(f64),
    /// `table[n − 1]`
    Table(Vec<f64>),
}

impl RateCandidate {
    /// `{n^(−1/4), n^(−1/2), 1/log(n+2), 0.99ⁿ}`.
    pub fn default_battery() -> Vec<Self> {
        vec![
            Self::Power(0.25),
            Self::Power(0.5),
            Self::Logarithmic,
            Self::Geometric(0.99),
        ]
    }

    /// `aₙ` for `n ≥ 1`.
    pub fn eval(&self, n: usize) -> f64 {
        match self {
            Self::Power(alpha) => (n as f64).powf(-alpha),
            Self::Logarithmic => 1.0 / ((n + 2) as f64).ln(),
            Self::Geometric(rho) => rho.powi(n as i32),
            Self::Table(values) => values.get(n - 1).copied().unwrap_or(f64::NAN),
        }
    }

    /// Positive, non-increasing on `1..=horizon`, and strictly smaller at
    /// the horizon than at 1.
    pub fn validate(&self, horizon: usize) -> Result<(), AnalysisError> {
        match self {
            Self::Power(alpha) if alpha.is_nan() || *alpha <= 0.0 => {
                return Err(AnalysisError::InvalidRate(format!("exponent {alpha} must be > 0")))
            }
            Self::Geometric(rho) if rho.is_nan() || *rho <= 0.0 || *rho >= 1.0 => {
                return Err(AnalysisError::InvalidRate(format!("ratio {rho} not in (0, 1)")))
            }
            Self::Table(values) if values.len() < horizon => {
                return Err(AnalysisError::InvalidRate(format!(
                    "table has {} entries, horizon is {horizon}",
                    values.len()
                )))
            }
            _ => {}
        }
        let mut previous = f64::INFINITY;
        for n in 1..=horizon {
            let a = self.eval(n);
            if !a.is_finite() || a <= 0.0 || a > previous {
                return Err(AnalysisError::InvalidRate(format!(
                    "{self}: a_{n} = {a} breaks positivity or monotonicity"
                )));
            }
            previous = a;
        }
        if horizon > 1 && self.eval(horizon) >= self.eval(1) {
            return Err(AnalysisError::InvalidRate(format!("{self} does not decrease")));
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self, AnalysisError> {
        let text = text.trim();
        let (kind, param) = match text.split_once(':') {
            Some((k, p)) => (k.trim(), Some(p.trim())),
            None => (text, None),
        };
        let number = |p: Option<&str>| -> Result<f64, AnalysisError> {
            p.ok_or_else(|| AnalysisError::InvalidRate(format!("{kind} needs a parameter")))?
                .parse()
                .map_err(|_| AnalysisError::InvalidRate(format!("bad parameter in {text:?}")))
        };
        match kind {
            "power" => Ok(Self::Power(number(param)?)),
            "log" => Ok(Self::Logarithmic),
            "geometric" => Ok(Self::Geometric(number(param)?)),
            "table" => param
                .ok_or_else(|| AnalysisError::InvalidRate("table needs values".into()))?
                .split('/')
                .map(|x| x.trim().parse::<f64>())
                .collect::<Result<Vec<_>, _>>()
                .map(Self::Table)
                .map_err(|_| AnalysisError::InvalidRate(format!("bad table {text:?}"))),
            _ => Err(AnalysisError::InvalidRate(format!("unknown rate {text:?}"))),
        }
    }
}

impl fmt::Display for RateCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Power(alpha) => write!(f, "power:{alpha}"),
            Self::Logarithmic => write!(f, "log"),
            Self::Geometric(rho) => write!(f, "geometric:{rho}"),
            Self::Table(values) => write!(f, "table[{}]", values.len()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateThresholds {
    /// Median `M(N)/M(N/4)` at or above this means "diverging".
    pub divergence_growth: f64,
    /// Fraction of paths with `M(N) = M(N/4)` needed for
    /// "consistent-with-rate".
    pub saturation_fraction: f64,
}

impl Default for RateThresholds {
    fn default() -> Self {
        Self {
            divergence_growth: 2.0,
            saturation_fraction: 0.95,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Diverging,
    ConsistentWithRate,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Diverging => "diverging",
            Self::ConsistentWithRate => "consistent-with-rate",
            Self::Inconclusive => "inconclusive",
        })
    }
}

/// Running maxima `M(N') = max_{n ≤ N'} |cₙ|/aₙ` per path.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioStats {
    /// `[N/8, N/4, N/2, N]`
    pub checkpoints: [usize; 4],
    /// One row per path, in path order.
    pub maxima: Vec<[f64; 4]>,
    /// `M(N)/M(N/4)` per path (`1` for 0/0, `∞` for x/0).
    pub growth: Vec<f64>,
    pub median_growth: f64,
    /// 10%, 50% and 90% quantiles of `growth`.
    pub growth_quantiles: [f64; 3],
    pub saturated_fraction: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RateReport {
    pub candidate: RateCandidate,
    pub thresholds: RateThresholds,
    pub stats: RatioStats,
    pub verdict: Verdict,
}

fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let (lo, hi) = (pos.floor() as usize, pos.ceil() as usize);
    if lo == hi || sorted[lo] == sorted[hi] {
        sorted[lo]
    } else {
        sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
    }
}

pub fn rate_test(
    trajectories: &[Trajectory],
    candidate: &RateCandidate,
    thresholds: &RateThresholds,
) -> Result<RateReport, AnalysisError> {
    let horizon = trajectories.first().map_or(0, Trajectory::len);
    if horizon < 8 || trajectories.iter().any(|t| t.len() != horizon) {
        return Err(AnalysisError::Horizon);
    }
    candidate.validate(horizon)?;
    let checkpoints = [horizon / 8, horizon / 4, horizon / 2, horizon];
    let rates: Vec<f64> = (1..=horizon).map(|n| candidate.eval(n)).collect();

    let maxima: Vec<[f64; 4]> = trajectories
        .iter()
        .map(|t| {
            let mut row = [0.0; 4];
            let mut running = 0.0f64;
            let mut next = 0;
            for (n, (z, a)) in t.moduli().zip(&rates).enumerate() {
                running = running.max(z / a);
                while next < 4 && checkpoints[next] == n + 1 {
                    row[next] = running;
                    next += 1;
                }
            }
            row
        })
        .collect();

    let growth: Vec<f64> = maxima
        .iter()
        .map(|row| match (row[3], row[1]) {
            (a, b) if a == b => 1.0,
            (a, b) => a / b,
        })
        .collect();
    let mut sorted = growth.clone();
    sorted.sort_by(f64::total_cmp);
    let median_growth = quantile(&sorted, 0.5);
    let growth_quantiles = [
        quantile(&sorted, 0.1),
        median_growth,
        quantile(&sorted, 0.9),
    ];
    let saturated = maxima.iter().filter(|row| row[3] == row[1]).count();
    let saturated_fraction = saturated as f64 / maxima.len() as f64;

    let verdict = if median_growth >= thresholds.divergence_growth {
        Verdict::Diverging
    } else if saturated_fraction >= thresholds.saturation_fraction {
        Verdict::ConsistentWithRate
    } else {
        Verdict::Inconclusive
    };
    Ok(RateReport {
        candidate: candidate.clone(),
        thresholds: *thresholds,
        stats: RatioStats {
            checkpoints,
            maxima,
            growth,
            median_growth,
            growth_quantiles,
            saturated_fraction,
        },
        verdict,
    })
}

/// Samples paths in `G`, maps each increment through `G → G/N`, and
/// compares the coefficient trajectories of `π` and of the factor
/// representation path by path, bit for bit. `N` must be normal and lie in
/// the kernel of `π`.
#[allow(clippy::too_many_arguments)]
pub fn quotient_equivalence_check<W: Weight>(
    group: &FiniteGroup,
    normal: &BTreeSet<usize>,
    mu: &ProbMeasure<usize, W>,
    rep: &MatrixRep,
    u: &DVector<Complex64>,
    v: &DVector<Complex64>,
    seed: u64,
    path_count: usize,
    horizon: usize,
) -> Result<bool, AnalysisError> {
    if !group.is_normal(normal) {
        return Err(GroupError::NotNormal.into());
    }
    let kernel: BTreeSet<usize> = rep.kernel().into_iter().collect();
    if !normal.is_subset(&kernel) {
        return Err(AnalysisError::Precondition(format!(
            "N is not contained in the kernel of {}",
            rep.name()
        )));
    }
    let (quotient, projection) = group.quotient(normal)?;
    let factor = rep.factor_through(&quotient, &projection)?;
    let projected = pushforward(mu, &projection)?;
    let sampler = PathSampler::new(mu)?;
    for i in 0..path_count as u64 {
        let path = sampler.sample(horizon, seed, i);
        let mut image = path.clone();
        for w in &mut image.increments {
            *w = projection.apply(*w)?;
            debug_assert!(projected.weight(w) > W::zero());
        }
        let upstairs = coefficient_trajectory(rep, &path, u, v)?;
        let downstairs = coefficient_trajectory(&factor, &image, u, v)?;
        if upstairs.values != downstairs.values {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `⟨R(μⁿ)f, f⟩ = Σ_k μⁿ(k) ⟨R(k)f, f⟩` for the left regular representation
/// of ℤ, `(R(k)f)(x) = f(x − k)`. Entry `n` of the result is the value at
/// step `n`, for `n = 0..=n_max`.
pub fn regular_z_decay(
    mu: &ProbMeasure<i64, f64>,
    f: &[(i64, f64)],
    n_max: usize,
) -> Result<Vec<f64>, AnalysisError> {
    if !is_adapted_on_integers(mu) || !is_strictly_aperiodic_on_integers(mu) {
        return Err(AnalysisError::Precondition(
            "measure on Z must be adapted and strictly aperiodic".into(),
        ));
    }
    let autocorrelation: Vec<(i64, f64)> = {
        let mut lags: Vec<i64> = f
            .iter()
            .flat_map(|(x, _)| f.iter().map(move |(y, _)| y - x))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        lags.dedup();
        lags.into_iter()
            .map(|k| {
                let value = f
                    .iter()
                    .map(|(x, fx)| {
                        f.iter()
                            .filter(|(y, _)| *y == x + k)
                            .map(|(_, fy)| fx * fy)
                            .sum::<f64>()
                    })
                    .sum();
                (k, value)
            })
            .collect()
    };
    let step = LatticeDensity::from_measure(mu);
    let mut law = LatticeDensity::point_mass(0);
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n > 0 {
            law = step.convolve(&law);
        }
        out.push(autocorrelation.iter().map(|(k, c)| law.weight(*k) * c).sum());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use num_rational::BigRational;
    use num_traits::ToPrimitive;

    use super::*;
    use crate::group::{Group, IntegerLattice};
    use crate::measure::power;
    use crate::rep::{basis_vector, RotationRep};
    use crate::walk::ensemble_run;

    type Exact = ProbMeasure<usize, BigRational>;

    fn s3() -> FiniteGroup {
        FiniteGroup::symmetric(3).unwrap()
    }

    fn uniform(g: &FiniteGroup, labels: &[&str]) -> Exact {
        Exact::uniform(labels.iter().map(|l| g.element(l).unwrap())).unwrap()
    }

    fn synthetic(values: Vec<f64>, path_index: u64) -> Trajectory {
        Trajectory {
            seed: 0,
            path_index,
            values: values.into_iter().map(|x| Complex64::new(x, 0.0)).collect(),
        }
    }

    #[test]
    fn haar_curve_is_zero() {
        let g = s3();
        let curve = kawada_ito_curve(&g, &Exact::haar(&g), 10);
        assert!(curve.points.iter().all(|(_, d)| *d == 0.0));
    }

    #[test]
    fn lazy_walk_converges() {
        let g = s3();
        let curve = kawada_ito_curve(&g, &uniform(&g, &["e", "(12)", "(23)"]), 100);
        assert!(curve.convergence_expected());
        assert!(curve.is_non_increasing());
        assert!(curve.last().unwrap() < 1e-6);
    }

    #[test]
    fn periodic_walk_oscillates() {
        let g = s3();
        let curve = kawada_ito_curve(&g, &uniform(&g, &["(12)", "(23)"]), 60);
        assert!(!curve.convergence_expected());
        // μⁿ lives on one parity class, so tv ≥ 1/2 for every n
        assert!(curve.tail_sup(30) >= 0.5 - 1e-12);
    }

    #[test]
    fn mean_curve_limits() {
        let g = s3();
        let mu = uniform(&g, &["e", "(12)", "(23)"]);
        let trivial = MatrixRep::trivial(&g);
        let one = basis_vector(1, 0);
        let curve = mean_coefficient_curve(&g, &trivial, &mu, &one, &one, 5).unwrap();
        assert!(curve.iter().all(|(_, x)| (x - 1.0).abs() < 1e-15));

        let rho = MatrixRep::standard(&g).unwrap();
        let e1 = basis_vector(2, 0);
        let curve = mean_coefficient_curve(&g, &rho, &mu, &e1, &e1, 100).unwrap();
        assert!((curve.last().unwrap().1 - 2.0 / 3.0).abs() < 1e-6);
    }

    #[test]
    fn rotation_of_integers_monte_carlo() {
        let rot = RotationRep::new(2.0 * PI * (2f64.sqrt() - 1.0));
        let mu = ProbMeasure::<i64, f64>::uniform([-1, 0, 1]).unwrap();
        let e1 = basis_vector(2, 0);
        let ensemble = ensemble_run(&mu, &rot, &e1, &e1, 1000, 4000, 21).unwrap();
        let mean = *ensemble.mean_abs().last().unwrap();
        assert!((mean - 2.0 / PI).abs() < 0.02, "{mean}");
    }

    #[test]
    fn geometric_trajectory_is_consistent_with_its_rate() {
        let rho: f64 = 0.9;
        let horizon = 400;
        let values: Vec<f64> = (1..=horizon).map(|n| rho.powi(n)).collect();
        let trajectories: Vec<_> = (0..20).map(|i| synthetic(values.clone(), i)).collect();
        let report = rate_test(
            &trajectories,
            &RateCandidate::Geometric(rho),
            &RateThresholds::default(),
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::ConsistentWithRate);
        assert_eq!(report.stats.median_growth, 1.0);
    }

    #[test]
    fn zero_trajectory_is_consistent_with_every_rate() {
        let trajectories = vec![synthetic(vec![0.0; 64], 0)];
        for candidate in RateCandidate::default_battery() {
            let report = rate_test(&trajectories, &candidate, &RateThresholds::default()).unwrap();
            assert_eq!(report.verdict, Verdict::ConsistentWithRate, "{candidate}");
        }
    }

    #[test]
    fn constant_modulus_against_square_root_rate() {
        // |c| ≡ 1 so M(N') = √N' exactly and the growth is √4 = 2
        let trajectories = vec![synthetic(vec![1.0; 10_000], 0)];
        let report = rate_test(
            &trajectories,
            &RateCandidate::Power(0.5),
            &RateThresholds::default(),
        )
        .unwrap();
        assert!((report.stats.median_growth - 2.0).abs() < 1e-12);
        assert_eq!(report.stats.checkpoints, [1250, 2500, 5000, 10_000]);
    }

    #[test]
    fn checkpoint_maxima_are_monotone() {
        let values: Vec<f64> = (0..100).map(|n| ((n * 37) % 11) as f64 / 10.0).collect();
        let report = rate_test(
            &[synthetic(values, 0)],
            &RateCandidate::Logarithmic,
            &RateThresholds::default(),
        )
        .unwrap();
        let row = report.stats.maxima[0];
        assert!(row.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn rate_validation() {
        assert!(RateCandidate::Power(-1.0).validate(10).is_err());
        assert!(RateCandidate::Geometric(1.0).validate(10).is_err());
        assert!(RateCandidate::Table(vec![1.0, 2.0, 0.5]).validate(3).is_err());
        assert!(RateCandidate::Table(vec![1.0; 3]).validate(3).is_err());
        assert!(RateCandidate::Table(vec![1.0, 0.5]).validate(3).is_err());
        assert!(RateCandidate::Table(vec![1.0, 0.5, 0.5]).validate(3).is_ok());
        let t = vec![synthetic(vec![1.0; 16], 0)];
        assert!(rate_test(&t, &RateCandidate::Power(0.0), &RateThresholds::default()).is_err());
        let short = vec![synthetic(vec![1.0; 4], 0)];
        assert!(matches!(
            rate_test(&short, &RateCandidate::Logarithmic, &RateThresholds::default()),
            Err(AnalysisError::Horizon)
        ));
    }

    #[test]
    fn rate_parsing() {
        for text in ["power:0.25", "log", "geometric:0.99"] {
            assert_eq!(RateCandidate::parse(text).unwrap().to_string(), text);
        }
        assert_eq!(
            RateCandidate::parse("table:1/0.5/0.25").unwrap(),
            RateCandidate::Table(vec![1.0, 0.5, 0.25])
        );
        assert!(RateCandidate::parse("power").is_err());
        assert!(RateCandidate::parse("cubic:3").is_err());
    }

    #[test]
    fn quotient_lemma_paths() {
        let g = s3();
        let mu = uniform(&g, &["e", "(12)", "(23)"]);
        let one = basis_vector(1, 0);
        let sign = MatrixRep::sign(&g).unwrap();
        let a3 = g.subgroup_generated([g.element("(123)").unwrap()]);
        assert!(quotient_equivalence_check(&g, &a3, &mu, &sign, &one, &one, 1, 20, 100).unwrap());

        let trivial_n = BTreeSet::from([g.identity()]);
        let rho = MatrixRep::standard(&g).unwrap();
        let e1 = basis_vector(2, 0);
        assert!(
            quotient_equivalence_check(&g, &trivial_n, &mu, &rho, &e1, &e1, 1, 20, 100).unwrap()
        );
        assert!(matches!(
            quotient_equivalence_check(&g, &a3, &mu, &rho, &e1, &e1, 1, 20, 100),
            Err(AnalysisError::Precondition(_))
        ));
    }

    #[test]
    fn regular_decay_on_integers() {
        let mu = ProbMeasure::<i64, f64>::uniform([-1, 0, 1]).unwrap();
        let values = regular_z_decay(&mu, &[(0, 1.0)], 40).unwrap();
        assert_eq!(values[0], 1.0);
        assert!((values[1] - 1.0 / 3.0).abs() < 1e-15);
        assert!((values[2] - 1.0 / 3.0).abs() < 1e-15);
        // exact cross-check with sparse convolution powers
        let exact = ProbMeasure::<i64, BigRational>::uniform([-1, 0, 1]).unwrap();
        let law = power(&IntegerLattice, &exact, 7);
        assert!((values[7] - law.weight(&IntegerLattice.identity()).to_f64().unwrap()).abs() < 1e-15);

        let f = [(0, 0.6), (3, -0.8)];
        let values = regular_z_decay(&mu, &f, 50).unwrap();
        assert!(values.iter().all(|x| (-1.0..=1.0).contains(x)));

        let simple = ProbMeasure::<i64, f64>::uniform([-1, 1]).unwrap();
        assert!(regular_z_decay(&simple, &[(0, 1.0)], 5).is_err());
    }
}
