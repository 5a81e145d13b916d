//! Flat `key = value` experiment configs.
//!
//! Blank lines and lines starting with `#` are ignored. `measure.atom` and
//! `rep` may repeat; every other key appears at most once.
//!
//! | key | value |
//! |-----|-------|
//! | `name` | run name, used for the default output directory |
//! | `scenario` | `rate-rejection`, `kawada-ito`, `coefficient-dichotomy`, `quotient-lemma`, `affine-folner`, `regular-z` |
//! | `seed` | unsigned integer, mandatory |
//! | `group` | `C<m>`, `D<m>`, `S<n>`, `Q8`, `table:<path>` |
//! | `measure.atom` | `<label> <weight>`, weight as `a/b`, integer or decimal |
//! | `measure.uniform` | comma-separated labels |
//! | `rep` | irreps joined by `+`: `trivial`, `sign`, `standard`, `char:<k>`, `q8`, `q8char:<i><j>` with `1` marking a generator sent to −1 |
//! | `u`, `v` | `e<k>` or comma-separated real coordinates |
//! | `horizon`, `paths`, `n_max` | positive integers |
//! | `rates` | comma-separated `power:<α>`, `log`, `geometric:<ρ>`, `table:<a1>/<a2>/...` |
//! | `threshold.growth`, `threshold.saturation` | verdict thresholds |
//! | `normal` | comma-separated labels generating the normal subgroup |
//! | `prime`, `unit_depth`, `window` | induced affine representation; window is `<vmin>, <vmax>` |
//! | `n_list` | comma-separated Følner indices or decay checkpoints |
//! | `u_list` | comma-separated rationals |
//! | `f` | comma-separated `<k>:<value>` pairs |
//! | `output` | output directory |
//! | `expect.<name>` | pinned expectation evaluated by `check` |

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ExperimentError;
use crate::analysis::{RateCandidate, RateThresholds};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Scenario {
    RateRejection,
    KawadaIto,
    CoefficientDichotomy,
    QuotientLemma,
    AffineFolner,
    RegularZ,
}

impl Scenario {
    pub const ALL: [Scenario; 6] = [
        Self::RateRejection,
        Self::KawadaIto,
        Self::CoefficientDichotomy,
        Self::QuotientLemma,
        Self::AffineFolner,
        Self::RegularZ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::RateRejection => "rate-rejection",
            Self::KawadaIto => "kawada-ito",
            Self::CoefficientDichotomy => "coefficient-dichotomy",
            Self::QuotientLemma => "quotient-lemma",
            Self::AffineFolner => "affine-folner",
            Self::RegularZ => "regular-z",
        }
    }

    fn parse(text: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == text)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum VectorSpec {
    /// `e<k>`, 1-based
    Basis(usize),
    Coords(Vec<f64>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub name: String,
    pub scenario: Scenario,
    pub seed: u64,
    pub group: Option<String>,
    pub measure: Vec<(String, BigRational)>,
    pub reps: Vec<String>,
    pub u: Option<VectorSpec>,
    pub v: Option<VectorSpec>,
    pub horizon: Option<usize>,
    pub paths: Option<usize>,
    pub n_max: Option<usize>,
    pub rates: Vec<RateCandidate>,
    pub thresholds: RateThresholds,
    pub normal: Vec<String>,
    pub prime: Option<u64>,
    pub unit_depth: Option<u32>,
    pub window: Option<(i64, i64)>,
    pub n_list: Vec<usize>,
    pub u_list: Vec<(i64, i64)>,
    pub f: Vec<(i64, f64)>,
    pub output: Option<PathBuf>,
    pub expect: BTreeMap<String, String>,
    /// Every `key = value` line in file order.
    pub entries: Vec<(String, String)>,
    /// Directory that relative paths (`table:`) resolve against.
    pub base_dir: PathBuf,
}

fn error(line: usize, message: impl std::fmt::Display) -> ExperimentError {
    ExperimentError::Config(format!("line {line}: {message}"))
}

fn number<T: std::str::FromStr>(line: usize, key: &str, text: &str) -> Result<T, ExperimentError> {
    text.trim()
        .parse()
        .map_err(|_| error(line, format!("{key}: cannot parse {text:?}")))
}

fn list<T: std::str::FromStr>(line: usize, key: &str, text: &str) -> Result<Vec<T>, ExperimentError> {
    text.split(',').map(|x| number(line, key, x)).collect()
}

/// `a/b`, `a` or a finite decimal, parsed exactly.
pub fn parse_weight(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        return (!den.is_zero()).then(|| BigRational::new(num, den));
    }
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if !frac.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    Some(BigRational::new(digits, scale))
}

fn parse_rational_pair(line: usize, text: &str) -> Result<(i64, i64), ExperimentError> {
    let text = text.trim();
    let (num, den) = text.split_once('/').unwrap_or((text, "1"));
    let pair = (number(line, "u_list", num)?, number(line, "u_list", den)?);
    if pair.1 == 0 {
        return Err(error(line, "u_list: zero denominator"));
    }
    Ok(pair)
}

fn parse_vector(line: usize, key: &str, text: &str) -> Result<VectorSpec, ExperimentError> {
    let text = text.trim();
    if let Some(k) = text.strip_prefix('e') {
        let k: usize = number(line, key, k)?;
        if k == 0 {
            return Err(error(line, format!("{key}: basis vectors start at e1")));
        }
        return Ok(VectorSpec::Basis(k));
    }
    Ok(VectorSpec::Coords(list(line, key, text)?))
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self, ExperimentError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ExperimentError::Config(format!("{}: {e}", path.display())))?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Self::parse(&text, base)
    }

    pub fn parse(text: &str, base_dir: PathBuf) -> Result<Self, ExperimentError> {
        let mut entries = Vec::new();
        let mut values: BTreeMap<String, (usize, String)> = BTreeMap::new();
        let mut measure = Vec::new();
        let mut reps = Vec::new();
        let mut expect = BTreeMap::new();

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (key, value) = trimmed
                .split_once('=')
                .ok_or_else(|| error(line, "expected `key = value`"))?;
            let (key, value) = (key.trim().to_string(), value.trim().to_string());
            entries.push((key.clone(), value.clone()));
            match key.as_str() {
                "measure.atom" => {
                    let (label, weight) = value
                        .rsplit_once(char::is_whitespace)
                        .ok_or_else(|| error(line, "measure.atom needs `<label> <weight>`"))?;
                    let weight = parse_weight(weight)
                        .ok_or_else(|| error(line, format!("bad weight {weight:?}")))?;
                    measure.push((label.trim().to_string(), weight));
                }
                "measure.uniform" => {
                    let labels: Vec<&str> = value.split(',').map(str::trim).collect();
                    let w = BigRational::new(BigInt::one(), BigInt::from(labels.len()));
                    measure.extend(labels.into_iter().map(|l| (l.to_string(), w.clone())));
                }
                "rep" => reps.push(value),
                k if k.starts_with("expect.") => {
                    expect.insert(k["expect.".len()..].to_string(), value);
                }
                "name" | "scenario" | "seed" | "group" | "u" | "v" | "horizon" | "paths"
                | "n_max" | "rates" | "threshold.growth" | "threshold.saturation" | "normal"
                | "prime" | "unit_depth" | "window" | "n_list" | "u_list" | "f" | "output" => {
                    if values.insert(key.clone(), (line, value)).is_some() {
                        return Err(error(line, format!("duplicate key {key}")));
                    }
                }
                _ => return Err(error(line, format!("unknown key {key}"))),
            }
        }

        let take = |key: &str| values.get(key).map(|(l, v)| (*l, v.as_str()));
        let scenario_text =
            take("scenario").ok_or_else(|| ExperimentError::Config("missing scenario".into()))?;
        let scenario = Scenario::parse(scenario_text.1)
            .ok_or_else(|| error(scenario_text.0, format!("unknown scenario {:?}", scenario_text.1)))?;
        let seed = match take("seed") {
            Some((l, v)) => number(l, "seed", v)?,
            None => return Err(ExperimentError::Config("missing seed".into())),
        };
        let name = take("name").map_or_else(|| scenario.name().to_string(), |(_, v)| v.to_string());
        if name.is_empty() || name.contains(['/', '\\']) {
            return Err(ExperimentError::Config(format!("invalid name {name:?}")));
        }

        let opt = |key: &str| -> Result<Option<usize>, ExperimentError> {
            take(key).map(|(l, v)| number(l, key, v)).transpose()
        };
        let rates = match take("rates") {
            Some((l, v)) => v
                .split(',')
                .map(|r| RateCandidate::parse(r).map_err(|e| error(l, e)))
                .collect::<Result<_, _>>()?,
            None => RateCandidate::default_battery(),
        };
        let mut thresholds = RateThresholds::default();
        if let Some((l, v)) = take("threshold.growth") {
            thresholds.divergence_growth = number(l, "threshold.growth", v)?;
        }
        if let Some((l, v)) = take("threshold.saturation") {
            thresholds.saturation_fraction = number(l, "threshold.saturation", v)?;
        }
        let window = match take("window") {
            Some((l, v)) => match list::<i64>(l, "window", v)?.as_slice() {
                [lo, hi] if lo <= hi => Some((*lo, *hi)),
                _ => return Err(error(l, "window needs `<vmin>, <vmax>` with vmin ≤ vmax")),
            },
            None => None,
        };
        let f = match take("f") {
            Some((l, v)) => v
                .split(',')
                .map(|pair| {
                    let (k, x) = pair
                        .split_once(':')
                        .ok_or_else(|| error(l, format!("f entry {pair:?} needs `<k>:<value>`")))?;
                    Ok((number(l, "f", k)?, number(l, "f", x)?))
                })
                .collect::<Result<_, ExperimentError>>()?,
            None => Vec::new(),
        };

        Ok(Self {
            name,
            scenario,
            seed,
            group: take("group").map(|(_, v)| v.to_string()),
            measure,
            reps,
            u: take("u").map(|(l, v)| parse_vector(l, "u", v)).transpose()?,
            v: take("v").map(|(l, v)| parse_vector(l, "v", v)).transpose()?,
            horizon: opt("horizon")?,
            paths: opt("paths")?,
            n_max: opt("n_max")?,
            rates,
            thresholds,
            normal: take("normal")
                .map(|(_, v)| v.split(',').map(|s| s.trim().to_string()).collect())
                .unwrap_or_default(),
            prime: take("prime").map(|(l, v)| number(l, "prime", v)).transpose()?,
            unit_depth: take("unit_depth")
                .map(|(l, v)| number(l, "unit_depth", v))
                .transpose()?,
            window,
            n_list: take("n_list")
                .map(|(l, v)| list(l, "n_list", v))
                .transpose()?
                .unwrap_or_default(),
            u_list: take("u_list")
                .map(|(l, v)| v.split(',').map(|x| parse_rational_pair(l, x)).collect())
                .transpose()?
                .unwrap_or_default(),
            f,
            output: take("output").map(|(_, v)| PathBuf::from(v)),
            expect,
            entries,
            base_dir,
        })
    }

    pub fn require<T: Clone>(&self, value: &Option<T>, key: &str) -> Result<T, ExperimentError> {
        value.clone().ok_or_else(|| {
            ExperimentError::Config(format!("scenario {} needs `{key}`", self.scenario.name()))
        })
    }

    /// Parsed `expect.<key>`, if present.
    pub fn expectation<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, ExperimentError> {
        self.expect
            .get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| ExperimentError::Config(format!("expect.{key}: cannot parse {v:?}")))
            })
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<ExperimentConfig, ExperimentError> {
        ExperimentConfig::parse(text, PathBuf::new())
    }

    #[test]
    fn weights() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(parse_weight("1/3"), Some(r(1, 3)));
        assert_eq!(parse_weight("0.25"), Some(r(1, 4)));
        assert_eq!(parse_weight("2"), Some(r(2, 1)));
        assert_eq!(parse_weight("1/0"), None);
        assert_eq!(parse_weight("x"), None);
    }

    #[test]
    fn full_config() {
        let c = parse(
            "# comment\nname = demo\nscenario = rate-rejection\nseed = 7\ngroup = S3\n\
             measure.atom = e 1/3\nmeasure.atom = (12) 1/3\nmeasure.atom = (23) 1/3\n\
             rep = standard\nrep = sign\nu = e1\nv = 1, 0\nhorizon = 64\npaths = 3\n\
             rates = power:0.5, log\nthreshold.growth = 3\nexpect.verdict = diverging\n",
        )
        .unwrap();
        assert_eq!(c.name, "demo");
        assert_eq!(c.scenario, Scenario::RateRejection);
        assert_eq!(c.measure.len(), 3);
        assert_eq!(c.measure[1].0, "(12)");
        assert_eq!(c.reps, ["standard", "sign"]);
        assert_eq!(c.u, Some(VectorSpec::Basis(1)));
        assert_eq!(c.v, Some(VectorSpec::Coords(vec![1.0, 0.0])));
        assert_eq!(c.rates, vec![RateCandidate::Power(0.5), RateCandidate::Logarithmic]);
        assert_eq!(c.thresholds.divergence_growth, 3.0);
        assert_eq!(c.thresholds.saturation_fraction, 0.95);
        assert_eq!(c.expectation::<String>("verdict").unwrap().unwrap(), "diverging");
        assert_eq!(c.entries.len(), 16);
    }

    #[test]
    fn defaults_and_lists() {
        let c = parse(
            "scenario = affine-folner\nseed = 0\nwindow = -40, 4\nn_list = 3, 7\nu_list = 1, 1/2\nf = 0:1, -2:0.5",
        )
        .unwrap();
        assert_eq!(c.name, "affine-folner");
        assert_eq!(c.rates, RateCandidate::default_battery());
        assert_eq!(c.window, Some((-40, 4)));
        assert_eq!(c.n_list, [3, 7]);
        assert_eq!(c.u_list, [(1, 1), (1, 2)]);
        assert_eq!(c.f, [(0, 1.0), (-2, 0.5)]);
    }

    #[test]
    fn malformed() {
        for text in [
            "scenario = kawada-ito",
            "seed = 1",
            "scenario = nope\nseed = 1",
            "scenario = kawada-ito\nseed = -1",
            "scenario = kawada-ito\nseed = 1\nseed = 2",
            "scenario = kawada-ito\nseed = 1\ncolour = red",
            "scenario = kawada-ito\nseed = 1\njust text",
            "scenario = kawada-ito\nseed = 1\nmeasure.atom = e",
            "scenario = kawada-ito\nseed = 1\nwindow = 3, 1",
            "scenario = kawada-ito\nseed = 1\nrates = cubic",
            "scenario = kawada-ito\nseed = 1\nu = e0",
            "scenario = kawada-ito\nseed = 1\nname = a/b",
        ] {
            assert!(
                matches!(parse(text), Err(ExperimentError::Config(_))),
                "{text:?}"
            );
        }
    }
}
