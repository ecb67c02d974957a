//! Machine-readable analysis report and its outcome.

use crate::analysis::{
    is_semisymmetric, jacobi_check_in, lorentzian_report_from, primitive_decomposition_in, ricci_commutes,
    ricci_decomposition_unchecked, Decomposition, HolonomySplit, LorentzianCase, TripleType,
};
use crate::curvature::CurvatureTensor;
use crate::error::{Error, Result};
use crate::exactnum::{sturm_real_root_count, Interval, Mat, Rational};
use crate::holonomy::{h_span, lie_closure};
use crate::io::{parse_instance, Instance};
use crate::space::Signature;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::fmt::Write as _;

type Q = Rational;

pub const TOOL: &str = "curvkit";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// What a report amounts to, in increasing severity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Semi-symmetric and every applicable certificate passed.
    Certified,
    /// Valid tensor that fails semi-symmetry; the witness is in the report.
    NotSemisymmetric,
    /// A theorem certificate failed on a semi-symmetric tensor.
    Violation,
    /// Two computations of the same fact disagree.
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub u: usize,
    pub v: usize,
    pub a: usize,
    pub b: usize,
    pub residual: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub factor: String,
    pub multiplicity: usize,
    pub degree: usize,
    pub real_roots: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RicciReport {
    pub class: String,
    pub operator: Vec<Vec<String>>,
    pub minimal_polynomial: String,
    pub factors: Vec<FactorReport>,
    /// `K(u,v)∘Ric = Ric∘K(u,v)` for all `u, v`.
    pub commutes_with_curvature: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HolonomyReport {
    pub span_dim: usize,
    pub closure_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub kind: String,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiSummary {
    pub holds: bool,
    pub triples: Vec<TripleReport>,
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub tag: String,
    pub dim: usize,
    /// `(positive, negative, zero)` of the restricted metric.
    pub inertia: (usize, usize, usize),
    pub basis: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub einstein: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub blocks: Vec<BlockReport>,
    pub flags: crate::analysis::Flags,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holonomy_split: Option<HolonomySplit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LorentzianSummary {
    /// `diagonalizable` (`ker Ric = ker Ric²`) or `isotropic`.
    pub case: String,
    pub real_spectrum: bool,
    pub non_definite_component: Option<String>,
    pub definite_components: Vec<(String, Option<String>)>,
    pub single_eigenvalue_shape: Option<bool>,
    pub degenerate_case: bool,
    pub k_squared_on_e0: Option<bool>,
    pub k_squared_zero: bool,
    pub k_composition_zero: bool,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    /// SHA-256 of the input file bytes, when analysed from a file.
    pub input_sha256: Option<String>,
    pub name: Option<String>,
    pub dim: usize,
    pub signature: Signature,
    pub symmetries_hold: bool,
    pub semisymmetric: bool,
    pub semisymmetry_witness: Option<WitnessReport>,
    pub ricci: RicciReport,
    pub holonomy: HolonomyReport,
    pub jacobi: JacobiSummary,
    pub ricci_decomposition: Option<DecompositionReport>,
    pub primitive_decomposition: Option<DecompositionReport>,
    pub lorentzian: Option<LorentzianSummary>,
    /// Failed theorem certificates.
    pub violations: Vec<String>,
    /// Internal disagreements; any entry is a bug.
    pub internal_errors: Vec<String>,
    pub outcome: Outcome,
}

fn strings(m: &Mat<Q>) -> Vec<Vec<String>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}

fn decomposition_report(d: &Decomposition<Q>) -> DecompositionReport {
    DecompositionReport {
        blocks: d
            .blocks
            .iter()
            .map(|b| BlockReport {
                tag: b.tag.to_string(),
                dim: b.subspace.dim(),
                inertia: b.subspace.inertia(),
                basis: b
                    .subspace
                    .basis()
                    .iter()
                    .map(|v| v.iter().map(|x| x.to_string()).collect())
                    .collect(),
                factor: b.factor.as_ref().map(|f| f.to_string()),
                einstein: b.einstein.as_ref().map(|l| l.to_string()),
            })
            .collect(),
        flags: d.flags.clone(),
        failures: d.failures.clone(),
        holonomy_split: d.holonomy.clone(),
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// Parses `text` and analyses it, recording the digest of `text`.
pub fn report_for_input(text: &str) -> Result<Report> {
    let inst = parse_instance(text)?;
    let mut r = analyze(&inst.tensor);
    r.input_sha256 = Some(sha256_hex(text.as_bytes()));
    r.name = inst.meta.and_then(|m| m.name);
    Ok(r)
}

pub fn analyze_instance(inst: &Instance) -> Report {
    let mut r = analyze(&inst.tensor);
    r.name = inst.meta.as_ref().and_then(|m| m.name.clone());
    r
}

/// Runs every applicable check on `k`.
pub fn analyze(k: &CurvatureTensor<Q>) -> Report {
    let s = k.space();
    let mut violations = Vec::new();
    let mut internal_errors = Vec::new();

    let symmetries = k.check_symmetries();
    if !symmetries.all_hold() {
        internal_errors.push(format!("validated tensor fails a symmetry: {symmetries:?}"));
    }
    let verdict = is_semisymmetric(k);
    let semisymmetric = verdict.holds;

    let rd = k.ricci();
    let commutes = ricci_commutes(k);
    let factors = rd
        .factors
        .iter()
        .map(|(f, m)| FactorReport {
            factor: f.to_string(),
            multiplicity: *m,
            degree: f.degree().unwrap_or(0),
            real_roots: sturm_real_root_count(f, &Interval::real_line()).unwrap_or(0),
        })
        .collect();

    let span = h_span(k);
    let closure = lie_closure(&span);
    let closure_dim = match &closure {
        Ok(h) => h.dim(),
        Err(e) => {
            internal_errors.push(e.to_string());
            span.dim()
        }
    };

    let jacobi = match closure.clone().map(|h| jacobi_check_in(k, span.dim(), h)) {
        Ok(j) => {
            if j.holds != semisymmetric {
                internal_errors.push(format!(
                    "jacobi check ({}) disagrees with semi-symmetry ({semisymmetric})",
                    j.holds
                ));
            }
            if j.count(TripleType::Xyz).failed > 0 {
                internal_errors.push("(X,Y,Z) Jacobi fails on a Bianchi-valid tensor".into());
            }
            JacobiSummary {
                holds: j.holds,
                triples: TripleType::ALL
                    .iter()
                    .map(|&t| TripleReport {
                        kind: t.label().to_string(),
                        checked: j.count(t).checked,
                        failed: j.count(t).failed,
                    })
                    .collect(),
                first_failure: j
                    .first_failure
                    .map(|(t, a, b, c)| format!("{} at basis indices ({a},{b},{c})", t.label())),
            }
        }
        Err(e) => {
            internal_errors.push(e.to_string());
            JacobiSummary {
                holds: false,
                triples: Vec::new(),
                first_failure: None,
            }
        }
    };

    let mut ricci_dec = None;
    let mut primitive_dec = None;
    let mut lorentzian = None;
    if semisymmetric {
        if !commutes {
            violations.push("Ric does not commute with every K(u,v)".into());
        }
        if closure_dim != span.dim() {
            violations.push(format!(
                "h(K) is not a Lie algebra: span {} grows to {closure_dim} under brackets",
                span.dim()
            ));
        }
        let mut decs = (None, None);
        match ricci_decomposition_unchecked(k) {
            Ok(d) => {
                violations.extend(d.failures.iter().map(|f| format!("ricci decomposition: {f}")));
                ricci_dec = Some(decomposition_report(&d));
                decs.0 = Some(d);
            }
            Err(e @ Error::FactorMultiplicityViolation { .. }) => violations.push(e.to_string()),
            Err(e) => internal_errors.push(e.to_string()),
        }
        match closure.as_ref().map(|h| primitive_decomposition_in(k, h)) {
            Ok(d) => {
                violations.extend(d.failures.iter().map(|f| format!("primitive decomposition: {f}")));
                primitive_dec = Some(decomposition_report(&d));
                decs.1 = Some(d);
            }
            Err(e) => internal_errors.push(e.to_string()),
        }
        if let (true, (Some(rd), Some(pd))) = (s.is_lorentzian(), decs) {
            match lorentzian_report_from(k, rd, pd) {
                Ok(l) => {
                    let own: Vec<String> = l
                        .violations
                        .iter()
                        .filter(|v| !l.ricci.failures.contains(v) && !l.primitive.failures.contains(v))
                        .cloned()
                        .collect();
                    violations.extend(own.iter().map(|v| format!("lorentzian: {v}")));
                    let tag = |i: usize| l.primitive.blocks[i].tag.to_string();
                    lorentzian = Some(LorentzianSummary {
                        case: match l.case {
                            LorentzianCase::Diagonalizable => "diagonalizable".into(),
                            LorentzianCase::IsotropicType => "isotropic".into(),
                        },
                        real_spectrum: l.realness.iter().all(|f| f.all_real()),
                        non_definite_component: l.lorentzian_component.map(tag),
                        definite_components: l
                            .riemannian_components
                            .iter()
                            .map(|(i, lam)| (tag(*i), lam.as_ref().map(|x| x.to_string())))
                            .collect(),
                        single_eigenvalue_shape: l.single_eigenvalue_shape,
                        degenerate_case: l.degenerate_case,
                        k_squared_on_e0: l.k_squared_on_e0,
                        k_squared_zero: l.k_squared_zero,
                        k_composition_zero: l.k_composition_zero,
                        violations: own,
                    });
                }
                Err(e) => internal_errors.push(e.to_string()),
            }
        }
    }

    let outcome = if !internal_errors.is_empty() {
        Outcome::Internal
    } else if !semisymmetric {
        Outcome::NotSemisymmetric
    } else if !violations.is_empty() {
        Outcome::Violation
    } else {
        Outcome::Certified
    };

    Report {
        tool: TOOL.into(),
        version: VERSION.into(),
        input_sha256: None,
        name: None,
        dim: s.dim(),
        signature: s.signature(),
        symmetries_hold: symmetries.all_hold(),
        semisymmetric,
        semisymmetry_witness: verdict.witness.map(|w| WitnessReport {
            u: w.u,
            v: w.v,
            a: w.a,
            b: w.b,
            residual: strings(&w.residual),
        }),
        ricci: RicciReport {
            class: rd.classify().to_string(),
            operator: strings(&rd.operator),
            minimal_polynomial: rd.minpoly.to_string(),
            factors,
            commutes_with_curvature: commutes,
        },
        holonomy: HolonomyReport {
            span_dim: span.dim(),
            closure_dim,
        },
        jacobi,
        ricci_decomposition: ricci_dec,
        primitive_decomposition: primitive_dec,
        lorentzian,
        violations,
        internal_errors,
        outcome,
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable summary.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "{} {}", self.tool, self.version);
        if let Some(d) = &self.input_sha256 {
            let _ = writeln!(w, "input sha256: {d}");
        }
        if let Some(n) = &self.name {
            let _ = writeln!(w, "name: {n}");
        }
        let _ = writeln!(
            w,
            "dimension {} signature ({},{})",
            self.dim, self.signature.positive, self.signature.negative
        );
        let _ = writeln!(w, "semi-symmetric: {}", yes(self.semisymmetric));
        if let Some(x) = &self.semisymmetry_witness {
            let _ = writeln!(
                w,
                "  witness (u,v,a,b) = (e{},e{},e{},e{}), residual {}",
                x.u,
                x.v,
                x.a,
                x.b,
                render_rows(&x.residual)
            );
        }
        let _ = writeln!(
            w,
            "ricci: {} (minimal polynomial {})",
            self.ricci.class, self.ricci.minimal_polynomial
        );
        for f in &self.ricci.factors {
            let _ = writeln!(
                w,
                "  factor {} multiplicity {} real roots {}/{}",
                f.factor, f.multiplicity, f.real_roots, f.degree
            );
        }
        let _ = writeln!(
            w,
            "ricci commutes with K(u,v): {}",
            yes(self.ricci.commutes_with_curvature)
        );
        let _ = writeln!(
            w,
            "holonomy: span {} closure {}",
            self.holonomy.span_dim, self.holonomy.closure_dim
        );
        let _ = writeln!(
            w,
            "jacobi on h + V: {}",
            if self.jacobi.holds { "holds" } else { "fails" }
        );
        for t in &self.jacobi.triples {
            let _ = writeln!(w, "  {} checked {} failed {}", t.kind, t.checked, t.failed);
        }
        for (title, d) in [
            ("ricci decomposition", &self.ricci_decomposition),
            ("primitive decomposition", &self.primitive_decomposition),
        ] {
            let Some(d) = d else { continue };
            let _ = writeln!(w, "{title}:");
            for b in &d.blocks {
                let mut line = format!("  {} dim {} inertia {:?}", b.tag, b.dim, b.inertia);
                if let Some(f) = &b.factor {
                    let _ = write!(line, " factor {f}");
                }
                if let Some(l) = &b.einstein {
                    let _ = write!(line, " einstein {l}");
                }
                let _ = writeln!(w, "{line}");
            }
            let flags = &d.flags;
            let _ = writeln!(
                w,
                "  spans {} direct {} coarse {} heuristic {}",
                yes(flags.spans),
                yes(flags.direct),
                yes(flags.coarse),
                yes(flags.heuristic)
            );
        }
        if let Some(l) = &self.lorentzian {
            let _ = writeln!(w, "lorentzian: case {}, real spectrum {}", l.case, yes(l.real_spectrum));
            if let Some(c) = l.k_squared_on_e0 {
                let _ = writeln!(w, "  degenerate case, K∘K = 0 on Λ²E0: {}", yes(c));
            }
        }
        for v in &self.violations {
            let _ = writeln!(w, "VIOLATION: {v}");
        }
        for v in &self.internal_errors {
            let _ = writeln!(w, "INTERNAL: {v}");
        }
        let _ = writeln!(w, "outcome: {}", outcome_name(self.outcome));
        out
    }
}

pub fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Certified => "certified",
        Outcome::NotSemisymmetric => "not semi-symmetric",
        Outcome::Violation => "theorem violation",
        Outcome::Internal => "internal error",
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_rows(rows: &[Vec<String>]) -> String {
    let r: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(","))).collect();
    format!("[{}]", r.join(","))
}

/// Characteristic data compared under isometry conjugation.
pub fn invariants(r: &Report) -> (bool, String, String, usize, usize, Outcome) {
    (
        r.semisymmetric,
        r.ricci.class.clone(),
        r.ricci.minimal_polynomial.clone(),
        r.holonomy.span_dim,
        r.holonomy.closure_dim,
        r.outcome,
    )
}
