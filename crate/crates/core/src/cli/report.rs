//! Analysis reports. Coordinates are 1-based here; everything else in the crate is 0-based.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::{support, Elem};
use crate::bounds::{
    certify_optimal, BoundReport, CertifyOptions, DualRow, MuRho, PrimalRow, Prop1, Prop2, Verdict,
    Verdicts,
};
use crate::code::LinearCode;
use crate::error::Result;
use crate::ghw::HierarchyOptions;

#[derive(Clone, Debug, Serialize)]
pub struct Params {
    pub q: u32,
    pub modulus: Option<Vec<u32>>,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Locality used by the LRC claims.
    pub r: Option<usize>,
    pub promised_r: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoveringRow {
    pub support: Vec<usize>,
    pub word: Vec<Elem>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalitySection {
    pub r: Option<usize>,
    pub per_coordinate: Vec<usize>,
    pub covering_rows: Vec<CoveringRow>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundValues {
    pub singleton_like: Option<i64>,
    pub generalized_rows: Vec<PrimalRow>,
    pub dual_rows: Vec<DualRow>,
    pub mu: usize,
    pub rho: usize,
    pub gk_dual: usize,
    pub prop1: Prop1,
    pub prop2: Prop2,
}

#[derive(Clone, Debug, Serialize)]
pub struct Checks {
    pub wei_duality: bool,
    pub gk_dual_forms_agree: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessEntry {
    pub i: usize,
    pub support: Vec<usize>,
    pub basis: Vec<Vec<Elem>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witnesses {
    pub primal: Vec<WitnessEntry>,
    pub dual: Vec<WitnessEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timings {
    pub total_ms: f64,
}

/// Full analysis of one code. Every field except `timings` is a function of the input file.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub params: Params,
    pub locality: LocalitySection,
    pub primal_hierarchy: Vec<usize>,
    pub primal_gaps: Vec<usize>,
    pub dual_hierarchy: Vec<usize>,
    pub dual_gaps: Vec<usize>,
    pub bounds: Verdicts,
    pub bound_values: BoundValues,
    pub is_optimal: bool,
    pub checks: Checks,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Witnesses>,
    pub timings: Timings,
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|c| c + 1).collect()
}

fn witness_entries(h: &crate::ghw::WeightHierarchy) -> Vec<WitnessEntry> {
    h.witnesses
        .iter()
        .flatten()
        .enumerate()
        .map(|(i, w)| WitnessEntry {
            i: i + 1,
            support: one_based(&w.support),
            basis: w.basis.clone(),
        })
        .collect()
}

impl AnalysisReport {
    pub fn from_bounds(
        code: &LinearCode,
        b: BoundReport,
        promised_r: Option<usize>,
        started: Instant,
    ) -> Self {
        let locality = match &b.locality {
            Some(p) => LocalitySection {
                r: Some(p.r),
                per_coordinate: p.per_coordinate.clone(),
                covering_rows: p
                    .covering_rows
                    .iter()
                    .map(|w| CoveringRow {
                        support: one_based(&support(w)),
                        word: w.clone(),
                    })
                    .collect(),
                error: None,
            },
            None => LocalitySection {
                r: None,
                per_coordinate: Vec::new(),
                covering_rows: Vec::new(),
                error: b.locality_error.clone(),
            },
        };
        let witnesses = b.primal.witnesses.is_some().then(|| Witnesses {
            primal: witness_entries(&b.primal),
            dual: witness_entries(&b.dual),
        });
        let MuRho { mu, rho } = b.mu_rho;
        AnalysisReport {
            params: Params {
                q: code.q(),
                modulus: code.field().modulus().map(<[u32]>::to_vec),
                n: b.n,
                k: b.k,
                d: b.d,
                r: b.r,
                promised_r,
            },
            locality,
            primal_hierarchy: b.primal.values.clone(),
            primal_gaps: b.primal.gaps.clone(),
            dual_hierarchy: b.dual.values.clone(),
            dual_gaps: b.dual.gaps.clone(),
            is_optimal: b.is_optimal,
            checks: Checks {
                wei_duality: b.wei_duality,
                gk_dual_forms_agree: b.gk_dual_max_form == b.gk_dual_min_form,
                notes: b.notes.clone(),
            },
            bound_values: BoundValues {
                singleton_like: b.singleton_like,
                generalized_rows: b.primal_rows.clone(),
                dual_rows: b.dual_rows.clone(),
                mu,
                rho,
                gk_dual: b.gk_dual_max_form,
                prop1: b.prop1.clone(),
                prop2: b.prop2.clone(),
            },
            bounds: b.verdicts,
            witnesses,
            timings: Timings {
                total_ms: started.elapsed().as_secs_f64() * 1e3,
            },
        }
    }

    /// A claim verdict or an internal identity failed.
    pub fn has_violation(&self) -> bool {
        self.bounds.any_violated() || !self.checks.wei_duality || !self.checks.gk_dual_forms_agree
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON without the `timings` key; identical inputs give identical bytes.
    pub fn comparable_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("timings");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }

    pub fn to_text(&self) -> String {
        let p = &self.params;
        let mut s = String::new();
        let list = |v: &[usize]| {
            v.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        let _ = writeln!(
            s,
            "code      [n = {}, k = {}, d = {}] over GF({})",
            p.n, p.k, p.d, p.q
        );
        match (self.locality.r, &self.locality.error) {
            (Some(r), _) => {
                let _ = writeln!(
                    s,
                    "locality  r = {r}  per coordinate ({})",
                    list(&self.locality.per_coordinate)
                );
                for row in &self.locality.covering_rows {
                    let _ = writeln!(s, "  repair group {{{}}}", list(&row.support));
                }
            }
            (None, Some(e)) => {
                let _ = writeln!(s, "locality  undefined ({e})");
            }
            (None, None) => {}
        }
        if let Some(pr) = p.promised_r {
            let _ = writeln!(s, "promised  r = {pr}");
        }
        let _ = writeln!(
            s,
            "primal    d_i = ({})  gaps ({})",
            list(&self.primal_hierarchy),
            list(&self.primal_gaps)
        );
        let _ = writeln!(
            s,
            "dual      d_i = ({})  gaps ({})",
            list(&self.dual_hierarchy),
            list(&self.dual_gaps)
        );
        let bv = &self.bound_values;
        if let Some(sl) = bv.singleton_like {
            let _ = writeln!(s, "singleton-like bound {sl}, optimal: {}", self.is_optimal);
        }
        let _ = writeln!(
            s,
            "mu = {}, rho = {}, g_k(dual) = {}",
            bv.mu, bv.rho, bv.gk_dual
        );
        let _ = writeln!(
            s,
            "wei duality: {}, g_k forms agree: {}",
            self.checks.wei_duality, self.checks.gk_dual_forms_agree
        );
        let _ = writeln!(s, "claims:");
        for (claim, v) in &self.bounds.0 {
            let status = match v {
                Verdict::Holds => "holds".to_string(),
                Verdict::Violated { index, detail } => match index {
                    Some(i) => format!("VIOLATED at i = {i}: {detail}"),
                    None => format!("VIOLATED: {detail}"),
                },
                Verdict::NotApplicable { reason } => format!("n/a ({reason})"),
            };
            let _ = writeln!(s, "  {claim:<10} {status}");
        }
        for note in &self.checks.notes {
            let _ = writeln!(s, "note: {note}");
        }
        if let Some(w) = &self.witnesses {
            for (label, entries) in [("primal", &w.primal), ("dual", &w.dual)] {
                for e in entries {
                    let _ = writeln!(
                        s,
                        "witness {label} d_{} support {{{}}}",
                        e.i,
                        list(&e.support)
                    );
                }
            }
        }
        let _ = writeln!(s, "time {:.1} ms", self.timings.total_ms);
        s
    }
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub hierarchy: HierarchyOptions,
    pub promised_r: Option<usize>,
}

/// Runs the full analysis pipeline on `code`.
pub fn analyze(code: &LinearCode, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let started = Instant::now();
    let b = certify_optimal(
        code,
        &CertifyOptions {
            hierarchy: opts.hierarchy.clone(),
            promised_r: opts.promised_r,
        },
    )?;
    Ok(AnalysisReport::from_bounds(
        code,
        b,
        opts.promised_r,
        started,
    ))
}
