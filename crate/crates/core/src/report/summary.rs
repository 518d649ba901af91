use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{mean_matrix, spectral_radius_exact, Mat2, Rational, Word};
use crate::average::average_growth_rate;
use crate::error::{Error, Result};
use crate::fastest::{jsr_lower_bound, SearchLimits};
use crate::girth::verify_relation;
use crate::lyapunov::{bounds_report, BoundsReport, LyapunovConfig};

use super::registry::PairSpec;

/// Where a reported fastest growth rate comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SmaxProvenance {
    /// The search landed on a proven maximizing cycle with a closed form.
    ClosedForm,
    /// Exhaustive search only.
    Empirical,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthReport {
    pub pair: String,
    pub a: Mat2,
    pub b: Mat2,
    pub s_max: f64,
    pub s_max_provenance: SmaxProvenance,
    #[serde(serialize_with = "super::ser_word")]
    pub s_max_witness: Word,
    pub s_ave: f64,
    #[serde(serialize_with = "super::ser_opt_rational")]
    pub s_ave_exact: Option<Rational>,
    pub s_gen: f64,
    pub lambda: f64,
    pub lambda_stderr: f64,
    pub bounds: BoundsReport,
}

impl GrowthReport {
    /// Row-level consistency checks; returns the violated ones.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if (self.lambda - self.s_gen.ln()).abs() > 1e-12 * self.lambda.abs().max(1.0) {
            out.push(format!(
                "lambda {} != log s_gen {}",
                self.lambda,
                self.s_gen.ln()
            ));
        }
        if self.s_gen > self.s_max + 1e-6 {
            out.push(format!("s_gen {} exceeds s_max {}", self.s_gen, self.s_max));
        }
        if self.a.is_nonnegative() && self.b.is_nonnegative() {
            let s_gen_stderr = self.s_gen * self.lambda_stderr;
            if self.s_gen > self.s_ave + 3.0 * s_gen_stderr {
                out.push(format!(
                    "s_gen {} exceeds s_ave {} by more than 3 standard errors",
                    self.s_gen, self.s_ave
                ));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SummaryConfig {
    pub mc: LyapunovConfig,
    /// Longest word examined for `s_max`.
    pub search_depth: usize,
    pub limits: SearchLimits,
}

impl Default for SummaryConfig {
    fn default() -> Self {
        SummaryConfig {
            mc: LyapunovConfig::default(),
            search_depth: 12,
            limits: SearchLimits::default(),
        }
    }
}

/// One table row; failures are kept per row.
#[derive(Debug)]
pub struct SummaryRow {
    pub pair: String,
    pub outcome: Result<GrowthReport>,
}

fn provenance(pair: &PairSpec, rate: f64, witness: &Word) -> SmaxProvenance {
    let Some(form) = pair.entry().and_then(|e| e.s_max) else {
        return SmaxProvenance::Empirical;
    };
    let cycle: Word = form.cycle.parse().expect("registry cycles are valid words");
    let same_cycle = witness.is_rotation_of(&cycle);
    let same_value = (rate - (form.value)()).abs() <= 1e-9;
    if form.proven && same_cycle && same_value {
        SmaxProvenance::ClosedForm
    } else {
        SmaxProvenance::Empirical
    }
}

fn growth_report(pair: &PairSpec, config: &SummaryConfig) -> Result<GrowthReport> {
    let (a, b) = (&pair.a, &pair.b);
    let (s_max, witness) = jsr_lower_bound(a, b, config.search_depth, &config.limits)?;
    let non_free = verify_relation(&"AB".parse()?, &"BA".parse()?, a, b);
    let bounds = bounds_report(a, b, &config.mc, non_free)?;
    let report = GrowthReport {
        pair: pair.label(),
        a: a.clone(),
        b: b.clone(),
        s_max,
        s_max_provenance: provenance(pair, s_max, &witness),
        s_max_witness: witness,
        s_ave: average_growth_rate(a, b),
        s_ave_exact: spectral_radius_exact(&mean_matrix(a, b)),
        s_gen: bounds.s_gen,
        lambda: bounds.lambda_mc,
        lambda_stderr: bounds.lambda_stderr,
        bounds,
    };
    match report.invariant_violations().first() {
        Some(v) => Err(Error::Invariant(format!("{}: {v}", report.pair))),
        None => Ok(report),
    }
}

/// Fastest, average and generic growth for each pair, in input order.
pub fn run_summary(pairs: &[PairSpec], config: &SummaryConfig) -> Vec<SummaryRow> {
    pairs
        .par_iter()
        .map(|pair| SummaryRow {
            pair: pair.label(),
            outcome: growth_report(pair, config),
        })
        .collect()
}
