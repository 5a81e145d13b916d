use std::collections::BTreeSet;

use nalgebra::DVector;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::config::{parse_weight, ExperimentConfig, Scenario, VectorSpec};
use super::{CurveRow, ExperimentError, RatioRow, Report};
use crate::analysis::{
    kawada_ito_curve, mean_coefficient_curve, quotient_equivalence_check, rate_test,
    regular_z_decay,
};
use crate::group::{parse_cayley_table, AffineElement, FiniteGroup};
use crate::measure::{is_adapted, is_strictly_aperiodic, ProbMeasure};
use crate::padic::{PAdicNumber, DEFAULT_PRECISION};
use crate::rep::{
    basis_vector, character_sum_oracle, orthogonal_invariant_check, real_vector, FiniteDimRep,
    InducedAffineRep, MatrixRep, OverflowPolicy,
};
use crate::walk::ensemble_run;

type Exact = ProbMeasure<usize, BigRational>;

pub(super) fn execute(config: &ExperimentConfig) -> Result<Report, ExperimentError> {
    match config.scenario {
        Scenario::RateRejection => rate_rejection(config),
        Scenario::KawadaIto => kawada_ito(config),
        Scenario::CoefficientDichotomy => coefficient_dichotomy(config),
        Scenario::QuotientLemma => quotient_lemma(config),
        Scenario::AffineFolner => affine_folner(config),
        Scenario::RegularZ => regular_z(config),
    }
}

pub fn build_group(config: &ExperimentConfig) -> Result<FiniteGroup, ExperimentError> {
    let spec = config.require(&config.group, "group")?;
    let bad = || ExperimentError::Config(format!("unknown group {spec:?}"));
    let size = |rest: &str| rest.parse::<usize>().map_err(|_| bad());
    let group = if let Some(path) = spec.strip_prefix("table:") {
        let path = config.base_dir.join(path.trim());
        let text = std::fs::read_to_string(&path)
            .map_err(|e| ExperimentError::Config(format!("{}: {e}", path.display())))?;
        parse_cayley_table(&text)?
    } else if spec == "Q8" {
        FiniteGroup::quaternion()?
    } else if let Some(m) = spec.strip_prefix('C') {
        FiniteGroup::cyclic(size(m)?)?
    } else if let Some(m) = spec.strip_prefix('D') {
        FiniteGroup::dihedral(size(m)?)?
    } else if let Some(n) = spec.strip_prefix('S') {
        FiniteGroup::symmetric(size(n)?)?
    } else {
        return Err(bad());
    };
    Ok(group)
}

fn build_measure(config: &ExperimentConfig, group: &FiniteGroup) -> Result<Exact, ExperimentError> {
    if config.measure.is_empty() {
        return Err(ExperimentError::Config("no measure atoms".into()));
    }
    Ok(ProbMeasure::from_labels(
        group,
        config.measure.iter().map(|(l, w)| (l.as_str(), w.clone())),
    )?)
}

fn one_irrep(group: &FiniteGroup, spec: &str) -> Result<MatrixRep, ExperimentError> {
    let rep = match spec {
        "trivial" => MatrixRep::trivial(group),
        "sign" => MatrixRep::sign(group)?,
        "standard" => MatrixRep::standard(group)?,
        "q8" => MatrixRep::quaternion_standard(group)?,
        _ => {
            if let Some(k) = spec.strip_prefix("char:") {
                let k = k
                    .parse()
                    .map_err(|_| ExperimentError::Config(format!("bad character {spec:?}")))?;
                MatrixRep::cyclic_character(group, k)?
            } else if let Some(signs) = spec.strip_prefix("q8char:") {
                let neg = |c: char| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(ExperimentError::Config(format!("bad Q8 character {spec:?}"))),
                };
                let mut chars = signs.chars();
                match (chars.next(), chars.next(), chars.next()) {
                    (Some(i), Some(j), None) => {
                        MatrixRep::quaternion_character(group, neg(i)?, neg(j)?)?
                    }
                    _ => return Err(ExperimentError::Config(format!("bad Q8 character {spec:?}"))),
                }
            } else {
                return Err(ExperimentError::Config(format!("unknown representation {spec:?}")));
            }
        }
    };
    Ok(rep)
}

pub fn build_rep(group: &FiniteGroup, spec: &str) -> Result<MatrixRep, ExperimentError> {
    let mut parts = spec.split('+').map(str::trim);
    let first = parts.next().unwrap_or_default();
    let mut rep = one_irrep(group, first)?;
    for part in parts {
        rep = rep.direct_sum(&one_irrep(group, part)?)?;
    }
    Ok(rep)
}

fn build_vector(
    spec: &Option<VectorSpec>,
    key: &str,
    dim: usize,
) -> Result<DVector<Complex64>, ExperimentError> {
    match spec {
        None => Err(ExperimentError::Config(format!("missing `{key}`"))),
        Some(VectorSpec::Basis(k)) if *k <= dim => Ok(basis_vector(dim, k - 1)),
        Some(VectorSpec::Coords(xs)) if xs.len() == dim => Ok(real_vector(xs)),
        Some(_) => Err(ExperimentError::Config(format!(
            "`{key}` does not fit a {dim}-dimensional representation"
        ))),
    }
}

fn reps_of(config: &ExperimentConfig, group: &FiniteGroup) -> Result<Vec<(String, MatrixRep)>, ExperimentError> {
    if config.reps.is_empty() {
        return Err(ExperimentError::Config("no `rep` given".into()));
    }
    config
        .reps
        .iter()
        .map(|spec| Ok((spec.clone(), build_rep(group, spec)?)))
        .collect()
}

fn expect_flag(config: &ExperimentConfig, key: &str) -> Result<Option<bool>, ExperimentError> {
    config.expectation::<bool>(key)
}

fn rate_rejection(config: &ExperimentConfig) -> Result<Report, ExperimentError> {
    let group = build_group(config)?;
    let mu = build_measure(config, &group)?;
    let horizon = config.require(&config.horizon, "horizon")?;
    let paths = config.require(&config.paths, "paths")?;
    let mut report = Report::default();
    let mut results = Vec::new();
    for (spec, rep) in reps_of(config, &group)? {
        let u = build_vector(&config.u, "u", rep.dim())?;
        let v = build_vector(&config.v, "v", rep.dim())?;
        let ensemble = ensemble_run(&mu, &rep, &u, &v, horizon, paths, config.seed)?;
        let series = format!("{spec}/mean_abs");
        report.curves.extend(
            ensemble
                .mean_abs()
                .into_iter()
                .enumerate()
                .map(|(i, value)| CurveRow::new(&series, i + 1, value)),
        );
        for rate in &config.rates {
            let outcome = rate_test(&ensemble.trajectories, rate, &config.thresholds)?;
            let series = format!("{spec}/{rate}");
            for (path, row) in outcome.stats.maxima.iter().enumerate() {
                for (checkpoint, max_ratio) in outcome.stats.checkpoints.iter().zip(row) {
                    report.ratios.push(RatioRow {
                        series: series.clone(),
                        path: path as u64,
                        checkpoint: *checkpoint,
                        max_ratio: *max_ratio,
                    });
                }
            }
            results.push(json!({
                "series": series,
                "rep": spec,
                "rate": rate.to_string(),
                "verdict": outcome.verdict.to_string(),
                "checkpoints": outcome.stats.checkpoints,
                "median_growth": outcome.stats.median_growth,
                "growth_quantiles": outcome.stats.growth_quantiles,
                "saturated_fraction": outcome.stats.saturated_fraction,
            }));
        }
    }
    if let Some(expected) = config.expect.get("verdict") {
        for r in &results {
            let got = r["verdict"].as_str().unwrap_or_default();
            report.check(
                format!("{} verdict", r["series"].as_str().unwrap_or_default()),
                got == expected,
                format!(
                    "expected {expected}, got {got} (median growth {})",
                    r["median_growth"]
                ),
            );
        }
    }
    report.verdict = json!({
        "group": config.group,
        "horizon": horizon,
        "paths": paths,
        "thresholds": config.thresholds,
        "results": results,
    });
    Ok(report)
}

fn kawada_ito(config: &ExperimentConfig) -> Result<Report, ExperimentError> {
    let group = build_group(config)?;
    let mu = build_measure(config, &group)?;
    let n_max = config.require(&config.n_max, "n_max")?;
    let curve = kawada_ito_curve(&group, &mu, n_max);
    let mut report = Report {
        curves: curve.points.iter().map(|(n, tv)| CurveRow::new("tv", *n, *tv)).collect(),
        ..Report::default()
    };
    let final_tv = curve.last().unwrap_or(f64::NAN);
    let tail_from = n_max / 2;
    let tail_sup = curve.tail_sup(tail_from);
    let monotone = curve.is_non_increasing();

    if let Some(expected) = expect_flag(config, "strictly_aperiodic")? {
        report.check(
            "strict aperiodicity",
            curve.strictly_aperiodic == expected,
            format!("is_strictly_aperiodic = {}", curve.strictly_aperiodic),
        );
    }
    if let Some(expected) = expect_flag(config, "monotone")? {
        report.check("monotone", monotone == expected, format!("non-increasing = {monotone}"));
    }
    if let Some(bound) = config.expectation::<f64>("final_tv_below")? {
        report.check(
            "final tv",
            final_tv < bound,
            format!("tv(μ^{n_max}, Haar) = {final_tv:e}, bound {bound:e}"),
        );
    }
    if let Some(bound) = config.expectation::<f64>("limsup_at_least")? {
        report.check(
            "tail limsup",
            tail_sup >= bound,
            format!("sup over n ≥ {tail_from} = {tail_sup}, bound {bound}"),
        );
    }
    report.verdict = json!({
        "group": config.group,
        "adapted": curve.adapted,
        "strictly_aperiodic": curve.strictly_aperiodic,
        "convergence_expected": curve.convergence_expected(),
        "monotone": monotone,
        "final_tv": final_tv,
        "tail_from": tail_from,
        "tail_sup": tail_sup,
    });
    Ok(report)
}

fn coefficient_dichotomy(config: &ExperimentConfig) -> Result<Report, ExperimentError> {
    let group = build_group(config)?;
    let mu = build_measure(config, &group)?;
    let n_max = config.require(&config.n_max, "n_max")?;
    let mut report = Report::default();
    let mut results = Vec::new();
    for (spec, rep) in reps_of(config, &group)? {
        let u = build_vector(&config.u, "u", rep.dim())?;
        let v = build_vector(&config.v, "v", rep.dim())?;
        let curve = mean_coefficient_curve(&group, &rep, &mu, &u, &v, n_max)?;
        let orthogonal = orthogonal_invariant_check(&rep, &u, &v)?;
        let haar = rep.haar_average_abs_coefficient(&u, &v)?;
        let last = curve.last().map_or(f64::NAN, |p| p.1);
        let identically_zero = curve.iter().all(|(_, x)| *x == 0.0);
        report
            .curves
            .extend(curve.iter().map(|(n, x)| CurveRow::new(&spec, *n, *x)));

        if let Some(expected) = expect_flag(config, "orthogonal")? {
            report.check(
                format!("{spec} orthogonality"),
                orthogonal == expected,
                format!("orthogonal_invariant_check = {orthogonal}"),
            );
            if expected {
                report.check(
                    format!("{spec} zero curve"),
                    identically_zero,
                    format!("curve ≡ 0: {identically_zero}"),
                );
            }
        }
        if let Some(tolerance) = config.expectation::<f64>("tolerance")? {
            report.check(
                format!("{spec} limit"),
                (last - haar).abs() <= tolerance,
                format!("curve({n_max}) = {last}, Haar average {haar}, tolerance {tolerance:e}"),
            );
        }
        if let Some(text) = config.expect.get("limit") {
            let limit = parse_weight(text)
                .and_then(|w| w.to_f64())
                .ok_or_else(|| ExperimentError::Config(format!("expect.limit: bad value {text:?}")))?;
            report.check(
                format!("{spec} Haar average"),
                (haar - limit).abs() <= 1e-12,
                format!("Haar average {haar}, pinned {text}"),
            );
        }
        results.push(json!({
            "rep": spec,
            "adapted": is_adapted(&group, &mu),
            "strictly_aperiodic": is_strictly_aperiodic(&group, &mu),
            "orthogonal": orthogonal,
            "haar_average": haar,
            "final_value": last,
            "identically_zero": identically_zero,
        }));
    }
    report.verdict = json!({ "group": config.group, "n_max": n_max, "results": results });
    Ok(report)
}

fn quotient_lemma(config: &ExperimentConfig) -> Result<Report, ExperimentError> {
    let group = build_group(config)?;
    let mu = build_measure(config, &group)?;
    let horizon = config.require(&config.horizon, "horizon")?;
    let paths = config.require(&config.paths, "paths")?;
    let generators = config
        .normal
        .iter()
        .map(|l| group.element(l))
        .collect::<Result<Vec<_>, _>>()?;
    let normal: BTreeSet<usize> = group.normal_closure(generators);
    let mut report = Report::default();
    let mut results = Vec::new();
    for (spec, rep) in reps_of(config, &group)? {
        let u = build_vector(&config.u, "u", rep.dim())?;
        let v = build_vector(&config.v, "v", rep.dim())?;
        let equal =
            quotient_equivalence_check(&group, &normal, &mu, &rep, &u, &v, config.seed, paths, horizon)?;
        if let Some(expected) = expect_flag(config, "equal")? {
            report.check(
                format!("{spec} path-wise equality"),
                equal == expected,
                format!("trajectories equal = {equal}"),
            );
        }
        results.push(json!({ "rep": spec, "equal": equal }));
    }
    report.verdict = json!({
        "group": config.group,
        "normal_subgroup": normal.iter().map(|g| group.label(*g)).collect::<Vec<_>>(),
        "quotient_order": group.order() / normal.len(),
        "horizon": horizon,
        "paths": paths,
        "results": results,
    });
    Ok(report)
}

fn affine_folner(config: &ExperimentConfig) -> Result<Report, ExperimentError> {
    let p = config.require(&config.prime, "prime")?;
    let depth = config.require(&config.unit_depth, "unit_depth")?;
    let window = config.require(&config.window, "window")?;
    if config.n_list.is_empty() || config.u_list.is_empty() {
        return Err(ExperimentError::Config("affine-folner needs `n_list` and `u_list`".into()));
    }
    let rep = InducedAffineRep::new(p, depth, window, OverflowPolicy::Strict)?;
    let q = |num: i64, den: i64| PAdicNumber::from_rational(num, den, p, DEFAULT_PRECISION);
    let one = q(1, 1)?;

    let mut report = Report::default();
    let mut rows = Vec::new();
    let mut max_oracle_error = 0.0f64;
    let mut max_scale_error = 0.0f64;
    let mut max_ratio = 0.0f64;
    let mut record = |label: String,
                       g: &AffineElement,
                       expected: &dyn Fn(usize) -> f64,
                       report: &mut Report|
     -> Result<(Vec<f64>, f64), ExperimentError> {
        let mut defects = Vec::new();
        let mut worst = 0.0f64;
        for &n in &config.n_list {
            let d2 = rep.defect(g, n)?.powi(2);
            let reference = expected(n);
            worst = worst.max((d2 - reference).abs());
            report.curves.push(CurveRow::new(&format!("defect2:{label}"), n, d2));
            report.curves.push(CurveRow::new(&format!("reference:{label}"), n, reference));
            rows.push(json!({
                "element": label,
                "n": n,
                "defect2": d2,
                "reference": reference,
                "abs_error": (d2 - reference).abs(),
            }));
            defects.push(d2);
        }
        Ok((defects, worst))
    };
    let mut doubling = |defects: &[f64]| {
        for w in defects.windows(2) {
            let ratio = if w[0] == 0.0 { 0.0 } else { w[1] / w[0] };
            max_ratio = max_ratio.max(ratio);
        }
    };

    let mut pinned = Vec::new();
    for &(num, den) in &config.u_list {
        let u = q(num, den)?;
        let g = AffineElement::line(one.clone(), u.clone())?;
        let label = if den == 1 { format!("u={num}") } else { format!("u={num}/{den}") };
        let oracle = |n: usize| character_sum_oracle(p, &u, n);
        let (defects, worst) = record(label, &g, &oracle, &mut report)?;
        max_oracle_error = max_oracle_error.max(worst);
        doubling(&defects);
        pinned.push(((num, den), defects));
    }
    let scale = AffineElement::line(q(p as i64, 1)?, q(0, 1)?)?;
    let closed_form = |n: usize| 2.0 / (n + 1) as f64;
    let (defects, worst) = record(format!("scale={p}"), &scale, &closed_form, &mut report)?;
    max_scale_error = max_scale_error.max(worst);
    doubling(&defects);

    if let Some(tolerance) = config.expectation::<f64>("oracle_tolerance")? {
        report.check(
            "character-sum oracle",
            max_oracle_error <= tolerance,
            format!("max |defect² − oracle| = {max_oracle_error:e}, tolerance {tolerance:e}"),
        );
    }
    if let Some(tolerance) = config.expectation::<f64>("scale_tolerance")? {
        report.check(
            "scaling closed form",
            max_scale_error <= tolerance,
            format!("max |defect² − 2/(n+1)| = {max_scale_error:e}, tolerance {tolerance:e}"),
        );
    }
    if let Some(bound) = config.expectation::<f64>("max_doubling_ratio")? {
        report.check(
            "decay under doubling",
            max_ratio <= bound,
            format!("max defect² ratio between consecutive n = {max_ratio}, bound {bound}"),
        );
    }
    if let Some(text) = config.expect.get("pin") {
        let bad = || ExperimentError::Config(format!("expect.pin: expected `u, n, defect²`, got {text:?}"));
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let [u_text, n_text, value_text] = parts.as_slice() else {
            return Err(bad());
        };
        let u = parse_weight(u_text).ok_or_else(bad)?;
        let key = (
            u.numer().to_i64().ok_or_else(bad)?,
            u.denom().to_i64().ok_or_else(bad)?,
        );
        let n: usize = n_text.parse().map_err(|_| bad())?;
        let value: f64 = value_text.parse().map_err(|_| bad())?;
        let got = pinned
            .iter()
            .find(|(k, _)| *k == key)
            .and_then(|(_, d)| config.n_list.iter().position(|&m| m == n).map(|i| d[i]))
            .ok_or_else(|| ExperimentError::Config(format!("expect.pin: ({u_text}, {n}) not in the run")))?;
        report.check(
            "pinned defect",
            (got - value).abs() <= 1e-12,
            format!("defect²((1, {u_text}), {n}) = {got}, pinned {value}"),
        );
    }
    report.verdict = json!({
        "prime": p,
        "unit_depth": depth,
        "window": [window.0, window.1],
        "rows": rows,
        "max_oracle_error": max_oracle_error,
        "max_scale_error": max_scale_error,
        "max_doubling_ratio": max_ratio,
    });
    Ok(report)
}

fn regular_z(config: &ExperimentConfig) -> Result<Report, ExperimentError> {
    let n_max = config.require(&config.n_max, "n_max")?;
    let atoms = config
        .measure
        .iter()
        .map(|(label, w)| {
            let k: i64 = label
                .parse()
                .map_err(|_| ExperimentError::Config(format!("atom {label:?} is not an integer")))?;
            Ok((k, w.to_f64().unwrap_or(f64::NAN)))
        })
        .collect::<Result<Vec<_>, ExperimentError>>()?;
    let mu = ProbMeasure::<i64, f64>::new(atoms)?;
    let f = if config.f.is_empty() { vec![(0, 1.0)] } else { config.f.clone() };
    let values = regular_z_decay(&mu, &f, n_max)?;

    let mut report = Report {
        curves: values.iter().enumerate().map(|(n, x)| CurveRow::new("value", n, *x)).collect(),
        ..Report::default()
    };
    let positive = values.iter().all(|x| *x > 0.0);
    let mut ratios = Vec::new();
    for &n in &config.n_list {
        if 4 * n > n_max {
            return Err(ExperimentError::Config(format!("n_list entry {n} needs n_max ≥ {}", 4 * n)));
        }
        ratios.push((n, values[4 * n] / values[n]));
    }
    if let Some(expected) = expect_flag(config, "positive")? {
        report.check("positive", positive == expected, format!("all values > 0: {positive}"));
    }
    let decreasing_from = config.expectation::<usize>("decreasing_from")?;
    let decreasing = decreasing_from.map(|from| values.windows(2).skip(from).all(|w| w[1] < w[0]));
    if let (Some(from), Some(ok)) = (decreasing_from, decreasing) {
        report.check("decreasing", ok, format!("strictly decreasing for n ≥ {from}: {ok}"));
    }
    if let (Some(lo), Some(hi)) = (
        config.expectation::<f64>("ratio_min")?,
        config.expectation::<f64>("ratio_max")?,
    ) {
        for (n, r) in &ratios {
            report.check(
                format!("ratio at n = {n}"),
                (lo..=hi).contains(r),
                format!("value(4n)/value(n) = {r}, allowed [{lo}, {hi}]"),
            );
        }
    }
    report.verdict = json!({
        "n_max": n_max,
        "positive": positive,
        "decreasing_from": decreasing_from,
        "decreasing": decreasing,
        "ratios": ratios.iter().map(|(n, r)| json!({ "n": n, "ratio": r })).collect::<Vec<Value>>(),
        "final_value": values.last(),
    });
    Ok(report)
}
