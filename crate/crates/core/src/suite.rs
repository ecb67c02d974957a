//! Seeded instance suite with cross-checks.
//!
//! Case `i` under suite seed `S` uses the generator seed
//! `splitmix64(S + i·0x9E3779B97F4A7C15)` (first output of a fresh stream)
//! and cycles through a fixed list of templates. Cases run in parallel and
//! are collected in index order, so the summary is byte-stable.

use crate::exactnum::{frac, Rational};
use crate::generators::{generate, random_isometry, BlockSpec, Draw, GeneratorKind, GeneratorSpec};
use crate::holonomy::act_group;
use crate::io::{parse_instance, serialize_instance};
use crate::report::{analyze, invariants, outcome_name, Outcome, Report};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt::Write as _;

type Q = Rational;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// Number of distinct templates; case `i` uses template `i % TEMPLATES`.
pub const TEMPLATES: usize = 10;

pub fn case_seed(suite_seed: u64, index: usize) -> u64 {
    Draw::new(suite_seed.wrapping_add((index as u64).wrapping_mul(GOLDEN))).next_u64()
}

fn lambda(draw: &mut Draw) -> Q {
    draw.nonzero_rational(4)
}

fn distinct(draw: &mut Draw, from: &Q) -> Q {
    loop {
        let l = lambda(draw);
        if l != *from {
            return l;
        }
    }
}

/// The generator spec of case `index`.
pub fn case_spec(suite_seed: u64, index: usize) -> GeneratorSpec {
    let seed = case_seed(suite_seed, index);
    let mut d = Draw::new(seed);
    let l = lambda(&mut d);
    use BlockSpec::*;
    let (kind, blocks) = match index % TEMPLATES {
        0 => (
            GeneratorKind::RandomSemisym,
            vec![
                Flat {
                    positive: 1,
                    negative: 1,
                },
                Constant {
                    positive: 2,
                    negative: 0,
                    lambda: l,
                },
            ],
        ),
        1 => (
            GeneratorKind::RandomSemisym,
            vec![Constant {
                positive: 2,
                negative: 1,
                lambda: l,
            }],
        ),
        2 => {
            let m = 1 + d.int(0, 1) as usize;
            let mut b = vec![Isotropic {
                positive: m + 1,
                negative: 1,
            }];
            if d.int(0, 1) == 1 {
                b.push(Constant {
                    positive: 2,
                    negative: 0,
                    lambda: l,
                });
            }
            (GeneratorKind::RandomSemisym, b)
        }
        3 => {
            let mu = distinct(&mut d, &l);
            (
                GeneratorKind::RandomSemisym,
                vec![
                    Constant {
                        positive: 1,
                        negative: 1,
                        lambda: l,
                    },
                    Constant {
                        positive: 2,
                        negative: 0,
                        lambda: mu,
                    },
                ],
            )
        }
        4 => (
            GeneratorKind::RandomSemisym,
            vec![Constant {
                positive: 3,
                negative: 0,
                lambda: l,
            }],
        ),
        5 => {
            let mu = distinct(&mut d, &l);
            (
                GeneratorKind::RandomSemisym,
                vec![
                    Constant {
                        positive: 2,
                        negative: 0,
                        lambda: l,
                    },
                    Constant {
                        positive: 3,
                        negative: 0,
                        lambda: mu,
                    },
                ],
            )
        }
        6 => (
            GeneratorKind::RandomSemisym,
            vec![Constant {
                positive: 2,
                negative: 2,
                lambda: l,
            }],
        ),
        7 => (
            GeneratorKind::RandomSemisym,
            vec![
                Isotropic {
                    positive: 2,
                    negative: 2,
                },
                Flat {
                    positive: 1,
                    negative: 0,
                },
            ],
        ),
        8 => (
            GeneratorKind::Adversarial,
            vec![Constant {
                positive: 3,
                negative: 1,
                lambda: l,
            }],
        ),
        _ => (
            GeneratorKind::Adversarial,
            vec![
                Flat {
                    positive: 1,
                    negative: 1,
                },
                Constant {
                    positive: 2,
                    negative: 0,
                    lambda: l,
                },
            ],
        ),
    };
    let mut spec = GeneratorSpec::new(seed, kind, blocks);
    spec.conjugate = true;
    spec.change_basis = d.int(0, 1) == 1;
    if kind == GeneratorKind::Adversarial {
        spec.epsilon = Some(frac(1, 2));
    }
    spec
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub index: usize,
    pub seed: u64,
    pub kind: GeneratorKind,
    pub dim: usize,
    pub signature: (usize, usize),
    pub semisymmetric: bool,
    pub lorentzian: bool,
    pub outcome: Option<Outcome>,
    /// Failed cross-checks; empty when the case passed.
    pub failures: Vec<String>,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Generates case `index`, analyses it and cross-checks:
/// serialization round trip, expected semi-symmetry, report outcome, and
/// invariance of the verdicts and `χ` under a further seeded isometry.
pub fn run_case(suite_seed: u64, index: usize) -> (CaseResult, Option<Report>) {
    let spec = case_spec(suite_seed, index);
    let mut res = CaseResult {
        index,
        seed: spec.seed,
        kind: spec.kind,
        dim: 0,
        signature: (0, 0),
        semisymmetric: false,
        lorentzian: false,
        outcome: None,
        failures: Vec::new(),
    };
    let (space, k) = match generate(&spec) {
        Ok(x) => x,
        Err(e) => {
            res.failures.push(format!("generation failed: {e}"));
            return (res, None);
        }
    };
    let sig = space.signature();
    res.dim = space.dim();
    res.signature = (sig.positive, sig.negative);
    res.lorentzian = sig.is_lorentzian();

    match parse_instance(&serialize_instance(&k, None)) {
        Ok(back) if back.tensor == k => {}
        Ok(_) => res.failures.push("round trip changed the tensor".into()),
        Err(e) => res.failures.push(format!("round trip failed to parse: {e}")),
    }

    let report = analyze(&k);
    res.semisymmetric = report.semisymmetric;
    res.outcome = Some(report.outcome);
    let expected = spec.kind != GeneratorKind::Adversarial;
    if report.semisymmetric != expected {
        res.failures.push(format!("expected semi-symmetric = {expected}"));
    }
    match report.outcome {
        Outcome::Certified | Outcome::NotSemisymmetric => {}
        o => res.failures.push(format!(
            "{}: {}",
            outcome_name(o),
            report
                .violations
                .iter()
                .chain(&report.internal_errors)
                .cloned()
                .collect::<Vec<_>>()
                .join("; ")
        )),
    }
    if res.lorentzian && report.semisymmetric && !report.lorentzian.as_ref().is_some_and(|l| l.real_spectrum) {
        res.failures.push("Lorentzian Ricci spectrum not certified real".into());
    }

    let mut d = Draw::new(spec.seed ^ GOLDEN);
    let q = random_isometry(&space, &mut d);
    match act_group(&q, &k) {
        Ok(k2) => {
            if invariants(&analyze(&k2)) != invariants(&report) {
                res.failures.push("verdicts changed under isometry conjugation".into());
            }
        }
        Err(e) => res.failures.push(format!("isometry conjugation failed: {e}")),
    }
    (res, Some(report))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub seed: u64,
    pub count: usize,
    pub passed: usize,
    pub semisymmetric: usize,
    pub lorentzian_semisymmetric: usize,
    pub adversarial: usize,
    pub cases: Vec<CaseResult>,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.count
    }

    /// Whether any failure is an internal disagreement (a bug) rather than
    /// a theorem finding.
    pub fn has_internal(&self) -> bool {
        self.cases.iter().any(|c| c.outcome == Some(Outcome::Internal))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite seed {} count {}", self.seed, self.count);
        for c in &self.cases {
            let status = if c.passed() { "ok" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{:4} {:<14} seed {:016x} dim {} ({},{}) semi-symmetric {} {}",
                c.index,
                format!("{:?}", c.kind),
                c.seed,
                c.dim,
                c.signature.0,
                c.signature.1,
                c.semisymmetric,
                status
            );
            for f in &c.failures {
                let _ = writeln!(out, "     {f}");
            }
        }
        let _ = writeln!(
            out,
            "passed {}/{}; semi-symmetric {} (lorentzian {}); adversarial {}",
            self.passed, self.count, self.semisymmetric, self.lorentzian_semisymmetric, self.adversarial
        );
        out
    }
}

/// Runs cases `0..count` in parallel.
pub fn run_suite(seed: u64, count: usize) -> SuiteSummary {
    let cases: Vec<CaseResult> = (0..count).into_par_iter().map(|i| run_case(seed, i).0).collect();
    SuiteSummary {
        seed,
        count,
        passed: cases.iter().filter(|c| c.passed()).count(),
        semisymmetric: cases.iter().filter(|c| c.semisymmetric).count(),
        lorentzian_semisymmetric: cases.iter().filter(|c| c.semisymmetric && c.lorentzian).count(),
        adversarial: cases.iter().filter(|c| c.kind == GeneratorKind::Adversarial).count(),
        cases,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_are_deterministic() {
        assert_eq!(case_spec(7, 3), case_spec(7, 3));
        assert_ne!(case_seed(7, 3), case_seed(7, 4));
    }

    #[test]
    fn small_suite_passes() {
        let s = run_suite(1, TEMPLATES);
        assert!(s.all_passed(), "{}", s.render_text());
        assert_eq!(s.render_text(), run_suite(1, TEMPLATES).render_text());
        assert_eq!(s.adversarial, 2);
    }
}
