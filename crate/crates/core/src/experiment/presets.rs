//! Built-in experiment configs.

use std::path::PathBuf;

use super::{ExperimentConfig, ExperimentError};

pub struct Preset {
    pub name: &'static str,
    pub summary: &'static str,
    pub text: &'static str,
}

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "moore-s3",
        summary: "rate battery against every irrep of S3 (lazy transposition walk)",
        text: "\
name = moore-s3
scenario = rate-rejection
seed = 20240601
group = S3
measure.uniform = e, (12), (23)
rep = trivial
rep = sign
rep = standard
u = e1
v = e1
horizon = 10000
paths = 500
expect.verdict = diverging
",
    },
    Preset {
        name: "moore-q8",
        summary: "rate battery against every irrep of Q8",
        text: "\
name = moore-q8
scenario = rate-rejection
seed = 20240602
group = Q8
measure.uniform = 1, i, j
rep = trivial
rep = q8char:10
rep = q8char:01
rep = q8char:11
rep = q8
u = e1
v = e1
horizon = 10000
paths = 500
expect.verdict = diverging
",
    },
    Preset {
        name: "kawada-ito-s3",
        summary: "exact tv(μⁿ, Haar) on S3, adapted and strictly aperiodic",
        text: "\
name = kawada-ito-s3
scenario = kawada-ito
seed = 0
group = S3
measure.uniform = e, (12), (23)
n_max = 100
expect.strictly_aperiodic = true
expect.monotone = true
expect.final_tv_below = 1e-6
",
    },
    Preset {
        name: "kawada-ito-s3-periodic",
        summary: "exact tv(μⁿ, Haar) on S3 for a measure on the odd coset",
        text: "\
name = kawada-ito-s3-periodic
scenario = kawada-ito
seed = 0
group = S3
measure.uniform = (12), (23)
n_max = 200
expect.strictly_aperiodic = false
expect.limsup_at_least = 0.4
",
    },
    Preset {
        name: "coefficient-s3",
        summary: "mean |coefficient| curve of the S3 standard rep tends to the Haar average",
        text: "\
name = coefficient-s3
scenario = coefficient-dichotomy
seed = 0
group = S3
measure.uniform = e, (12), (23)
rep = standard
u = e1
v = e1
n_max = 100
expect.orthogonal = false
expect.limit = 2/3
expect.tolerance = 1e-6
",
    },
    Preset {
        name: "coefficient-blocks",
        summary: "vectors in orthogonal invariant blocks give an identically zero curve",
        text: "\
name = coefficient-blocks
scenario = coefficient-dichotomy
seed = 0
group = S3
measure.uniform = e, (12), (23)
rep = standard+sign
u = e1
v = e3
n_max = 100
expect.orthogonal = true
",
    },
    Preset {
        name: "quotient-lemma",
        summary: "S3 → S3/A3 with the sign character, path-wise equality",
        text: "\
name = quotient-lemma
scenario = quotient-lemma
seed = 11
group = S3
measure.uniform = e, (12), (23)
normal = (123)
rep = sign
u = e1
v = e1
horizon = 1000
paths = 100
expect.equal = true
",
    },
    Preset {
        name: "quotient-lemma-c4",
        summary: "C4 → C4/C2 with the character factoring through C2",
        text: "\
name = quotient-lemma-c4
scenario = quotient-lemma
seed = 12
group = C4
measure.uniform = 0, 1
normal = 2
rep = char:2
u = e1
v = e1
horizon = 1000
paths = 100
expect.equal = true
",
    },
    Preset {
        name: "affine-folner",
        summary: "Følner defects of the induced affine representation, p = 2",
        text: "\
name = affine-folner
scenario = affine-folner
seed = 0
prime = 2
unit_depth = 3
window = -40, 4
n_list = 3, 7, 15, 31
u_list = 1, 1/2, 1/4
expect.oracle_tolerance = 1e-9
expect.scale_tolerance = 1e-12
expect.max_doubling_ratio = 0.6
expect.pin = 1/2, 3, 1
",
    },
    Preset {
        name: "affine-folner-p3",
        summary: "Følner defects of the induced affine representation, p = 3",
        text: "\
name = affine-folner-p3
scenario = affine-folner
seed = 0
prime = 3
unit_depth = 2
window = -40, 4
n_list = 3, 7, 15, 31
u_list = 1, 1/3, 1/9
expect.oracle_tolerance = 1e-9
expect.scale_tolerance = 1e-12
expect.max_doubling_ratio = 0.6
",
    },
    Preset {
        name: "regular-z",
        summary: "⟨R(μⁿ)δ₀, δ₀⟩ on ℤ for uniform{−1, 0, 1}",
        text: "\
name = regular-z
scenario = regular-z
seed = 0
measure.uniform = -1, 0, 1
f = 0:1
n_max = 8000
n_list = 1000, 2000
expect.positive = true
expect.decreasing_from = 2
expect.ratio_min = 0.45
expect.ratio_max = 0.55
",
    },
];

pub fn find(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}

pub fn load(name: &str) -> Result<ExperimentConfig, ExperimentError> {
    let preset =
        find(name).ok_or_else(|| ExperimentError::Config(format!("unknown preset {name:?}")))?;
    ExperimentConfig::parse(preset.text, PathBuf::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_parse_and_match_their_names() {
        for p in PRESETS {
            let c = load(p.name).unwrap();
            assert_eq!(c.name, p.name);
        }
        assert!(load("nope").is_err());
    }
}
