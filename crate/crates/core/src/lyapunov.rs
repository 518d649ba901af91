//! Generic growth: Monte-Carlo estimation of the top Lyapunov exponent
//! `λ = lim (1/n) log ‖M₁ ⋯ Mₙ‖` of a uniform random product, and the
//! analytic upper bounds it is compared against.
//!
//! A product of a million factors overflows any float, so the running product
//! is divided by its norm after every step and the logarithms of those norms
//! are summed. The sum telescopes to `log ‖M₁ ⋯ Mₙ‖` exactly; only rounding
//! separates it from the exact rational value.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Letter, Mat2, Rational, Word};
use crate::average::average_growth_rate;
use crate::error::{Error, Result};
use crate::rng::{trial_stream, LetterStream, RNG_ALGORITHM};

pub const DEFAULT_PRODUCT_LENGTH: usize = 1_000_000;
pub const DEFAULT_TRIALS: usize = 16;

/// Constant in the shear-pair upper bound.
pub const ST_CONSTANT: f64 = 1.0157;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixNorm {
    /// Sum of absolute values of the entries.
    #[default]
    L1,
    /// Largest absolute entry.
    MaxAbs,
}

impl MatrixNorm {
    #[inline]
    pub fn eval(self, m: &[f64; 4]) -> f64 {
        match self {
            MatrixNorm::L1 => m.iter().map(|x| x.abs()).sum(),
            MatrixNorm::MaxAbs => m.iter().fold(0.0, |acc, x| acc.max(x.abs())),
        }
    }
}

impl FromStr for MatrixNorm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "l1" => Ok(MatrixNorm::L1),
            "maxabs" => Ok(MatrixNorm::MaxAbs),
            other => Err(Error::InvalidArgument(format!("unknown norm '{other}'"))),
        }
    }
}

impl fmt::Display for MatrixNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixNorm::L1 => "l1",
            MatrixNorm::MaxAbs => "maxabs",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LyapunovConfig {
    /// Factors per trial.
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub norm: MatrixNorm,
}

impl Default for LyapunovConfig {
    fn default() -> Self {
        LyapunovConfig {
            n: DEFAULT_PRODUCT_LENGTH,
            trials: DEFAULT_TRIALS,
            seed: 0,
            norm: MatrixNorm::L1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LyapunovEstimate {
    /// Mean over trials of `(1/n) log ‖product‖`, in nats.
    pub lambda_mean: f64,
    /// Standard error of `lambda_mean` across trials.
    pub lambda_stderr: f64,
    /// `exp(lambda_mean)`.
    pub s_gen: f64,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub norm: MatrixNorm,
    pub rng_algorithm: String,
}

#[inline]
fn mul(x: &[f64; 4], y: &[f64; 4]) -> [f64; 4] {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

/// Running product kept at unit norm, with the logarithm of the discarded
/// scale accumulated separately.
#[derive(Clone, Debug)]
pub struct Renormalizer {
    product: [f64; 4],
    log_scale: f64,
    norm: MatrixNorm,
}

impl Renormalizer {
    pub fn new(norm: MatrixNorm) -> Self {
        Renormalizer {
            product: [1.0, 0.0, 0.0, 1.0],
            log_scale: 0.0,
            norm,
        }
    }

    /// Multiplies the running product on the right by `factor`.
    #[inline]
    pub fn push(&mut self, factor: &[f64; 4]) -> Result<()> {
        let p = mul(&self.product, factor);
        let scale = self.norm.eval(&p);
        if scale == 0.0 {
            return Err(Error::Singular(
                "running product vanished (singular factor or underflow)".into(),
            ));
        }
        if !scale.is_finite() {
            return Err(Error::Nonfinite(format!("running product norm {scale}")));
        }
        self.log_scale += scale.ln();
        let inv = scale.recip();
        self.product = [p[0] * inv, p[1] * inv, p[2] * inv, p[3] * inv];
        Ok(())
    }

    /// `log ‖product so far‖`.
    pub fn log_norm(&self) -> f64 {
        self.log_scale + self.norm.eval(&self.product).ln()
    }
}

/// `log ‖w(A, B)‖` computed with per-step renormalization.
pub fn log_norm_along(word: &Word, a: &Mat2, b: &Mat2, norm: MatrixNorm) -> Result<f64> {
    let (fa, fb) = (a.to_f64(), b.to_f64());
    let mut acc = Renormalizer::new(norm);
    for letter in word.letters() {
        acc.push(match letter {
            Letter::A => &fa,
            Letter::B => &fb,
        })?;
    }
    Ok(acc.log_norm())
}

fn run_trial(fa: &[f64; 4], fb: &[f64; 4], config: &LyapunovConfig, trial: usize) -> Result<f64> {
    let mut letters = LetterStream::new(trial_stream(config.seed, trial as u64));
    let mut acc = Renormalizer::new(config.norm);
    for _ in 0..config.n {
        acc.push(if letters.next_is_a() { fa } else { fb })?;
    }
    let lambda = acc.log_norm() / config.n as f64;
    if lambda.is_finite() {
        Ok(lambda)
    } else {
        Err(Error::Nonfinite(format!("trial {trial} produced {lambda}")))
    }
}

/// Estimates the Lyapunov exponent from `trials` independent products of
/// `n` uniform factors. Deterministic for fixed inputs.
pub fn lyapunov_mc(a: &Mat2, b: &Mat2, config: &LyapunovConfig) -> Result<LyapunovEstimate> {
    if config.n == 0 || config.trials == 0 {
        return Err(Error::InvalidArgument(
            "n and trials must both be at least 1".into(),
        ));
    }
    for (name, m) in [("A", a), ("B", b)] {
        if m.is_singular() {
            return Err(Error::Singular(format!("{name} = {m} has determinant 0")));
        }
    }
    let (fa, fb) = (a.to_f64(), b.to_f64());
    let lambdas: Vec<f64> = (0..config.trials)
        .into_par_iter()
        .map(|trial| run_trial(&fa, &fb, config, trial))
        .collect::<Result<_>>()?;

    let count = lambdas.len() as f64;
    let mean = lambdas.iter().sum::<f64>() / count;
    let stderr = if lambdas.len() > 1 {
        let var = lambdas.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (count - 1.0);
        (var / count).sqrt()
    } else {
        0.0
    };
    Ok(LyapunovEstimate {
        lambda_mean: mean,
        lambda_stderr: stderr,
        s_gen: mean.exp(),
        n: config.n,
        trials: config.trials,
        seed: config.seed,
        norm: config.norm,
        rng_algorithm: RNG_ALGORITHM.to_string(),
    })
}

/// `log s_ave`, an upper bound on `λ` for matrices with nonnegative entries.
pub fn ave_upper_bound(a: &Mat2, b: &Mat2) -> Result<f64> {
    for m in [a, b] {
        if !m.is_nonnegative() {
            return Err(Error::NegativeEntry(m.to_string()));
        }
    }
    Ok(average_growth_rate(a, b).ln())
}

/// `¼[c + log(√(km) + 1/√(km)) + ½ log(1 + km)]` with `c = 1.0157`, an upper
/// bound on `λ` for the shear pair `A(k)`, `B(m)`.
pub fn sturman_thiffeault_bound(k: f64, m: f64) -> Result<f64> {
    let km = k * m;
    if !km.is_finite() || km <= 0.0 {
        return Err(Error::Domain(format!("need k·m > 0, got k = {k}, m = {m}")));
    }
    let r = km.sqrt();
    Ok(0.25 * (ST_CONSTANT + (r + r.recip()).ln() + 0.5 * (1.0 + km).ln()))
}

/// `(k, m)` if the pair is exactly `(A(k), B(m))`.
pub fn shear_parameters(a: &Mat2, b: &Mat2) -> Option<(Rational, Rational)> {
    let upper = Mat2::upper_shear(a.b.clone());
    let lower = Mat2::lower_shear(b.c.clone());
    (*a == upper && *b == lower).then(|| (a.b.clone(), b.c.clone()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TighterBound {
    Average,
    SturmanThiffeault,
    Equal,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub lambda_mc: f64,
    pub lambda_stderr: f64,
    pub s_gen: f64,
    pub s_ave: f64,
    /// `log s_ave`, present only when all entries are nonnegative.
    pub ave_bound: Option<f64>,
    /// Present only for shear pairs with `k·m > 0`.
    pub st_bound: Option<f64>,
    pub nonnegative: bool,
    pub shear_shape: bool,
    pub tighter: Option<TighterBound>,
    /// `λ ≤ ave_bound + 3·stderr`, when the average bound applies.
    pub ave_bound_respected: Option<bool>,
    pub s_gen_exceeds_s_ave: bool,
    pub notes: Vec<String>,
}

/// Runs the Monte-Carlo estimate and attaches whichever upper bounds apply.
///
/// `known_non_free` marks pairs whose semigroup has relations; the estimate
/// is still computed but the report notes that products may shorten.
pub fn bounds_report(
    a: &Mat2,
    b: &Mat2,
    config: &LyapunovConfig,
    known_non_free: bool,
) -> Result<BoundsReport> {
    let est = lyapunov_mc(a, b, config)?;
    let nonnegative = a.is_nonnegative() && b.is_nonnegative();
    let ave_bound = nonnegative.then(|| ave_upper_bound(a, b)).transpose()?;
    let shear = shear_parameters(a, b);
    let st_bound = shear.as_ref().and_then(|(k, m)| {
        sturman_thiffeault_bound(crate::algebra::to_f64(k), crate::algebra::to_f64(m)).ok()
    });
    let tighter = match (ave_bound, st_bound) {
        (Some(ave), Some(st)) if ave < st => Some(TighterBound::Average),
        (Some(ave), Some(st)) if st < ave => Some(TighterBound::SturmanThiffeault),
        (Some(_), Some(_)) => Some(TighterBound::Equal),
        _ => None,
    };
    let s_ave = average_growth_rate(a, b);

    let mut notes = Vec::new();
    if !nonnegative {
        notes.push("negative entries: log s_ave is not an upper bound for this pair".to_string());
    }
    if known_non_free {
        notes.push(
            "the semigroup is not free: a product of n factors may equal a shorter product"
                .to_string(),
        );
    }
    Ok(BoundsReport {
        ave_bound_respected: ave_bound
            .map(|bound| est.lambda_mean <= bound + 3.0 * est.lambda_stderr),
        s_gen_exceeds_s_ave: est.s_gen > s_ave,
        lambda_mc: est.lambda_mean,
        lambda_stderr: est.lambda_stderr,
        s_gen: est.s_gen,
        s_ave,
        ave_bound,
        st_bound,
        nonnegative,
        shear_shape: shear.is_some(),
        tighter,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{eval_word, int, ln_abs};

    fn shears(k: i64, m: i64) -> (Mat2, Mat2) {
        (Mat2::upper_shear(int(k)), Mat2::lower_shear(int(m)))
    }

    fn quick(n: usize, trials: usize, seed: u64) -> LyapunovConfig {
        LyapunovConfig {
            n,
            trials,
            seed,
            norm: MatrixNorm::L1,
        }
    }

    #[test]
    fn scalar_growth_is_exact() {
        let two = Mat2::from_ints(2, 0, 0, 2);
        let est = lyapunov_mc(&two, &two, &quick(10_000, 4, 1)).unwrap();
        // ‖(2I)^n‖₁ = 2^(n+1)
        let exact = 2f64.ln() * 10_001.0 / 10_000.0;
        assert!((est.lambda_mean - exact).abs() < 1e-12);
        assert!(est.lambda_stderr < 1e-12);
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let (a, b) = shears(2, 2);
        let x = lyapunov_mc(&a, &b, &quick(20_000, 6, 9)).unwrap();
        let y = lyapunov_mc(&a, &b, &quick(20_000, 6, 9)).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.lambda_mean.to_bits(), y.lambda_mean.to_bits());
        let z = lyapunov_mc(&a, &b, &quick(20_000, 6, 10)).unwrap();
        assert_ne!(x.lambda_mean, z.lambda_mean);
    }

    #[test]
    fn renormalization_matches_exact_product() {
        let (a, b) = shears(2, -2);
        let word: Word = "AABBABABBBAAB".parse().unwrap();
        let exact = ln_abs(&eval_word(&word, &a, &b).l1_norm());
        let approx = log_norm_along(&word, &a, &b, MatrixNorm::L1).unwrap();
        assert!((exact - approx).abs() < 1e-12);
        assert!(
            (log_norm_along(&Word::empty(), &a, &b, MatrixNorm::L1).unwrap() - 2f64.ln()).abs()
                < 1e-15
        );
    }

    #[test]
    fn singular_inputs_rejected() {
        let s = Mat2::from_ints(1, 2, 2, 4);
        assert!(matches!(
            lyapunov_mc(&s, &Mat2::identity(), &quick(10, 1, 0)),
            Err(Error::Singular(_))
        ));
        assert!(matches!(
            lyapunov_mc(&Mat2::identity(), &Mat2::identity(), &quick(0, 1, 0)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn tiny_factors_do_not_underflow() {
        // 2000 factors of 2^-40 would underflow without renormalization
        let tiny = Mat2::identity().scale(&crate::algebra::ratio(1, 1 << 40));
        let est = lyapunov_mc(&tiny, &tiny, &quick(2000, 1, 0)).unwrap();
        let exact = (1.0 - 40.0 * 2000.0) * 2f64.ln() / 2000.0;
        assert!((est.lambda_mean - exact).abs() < 1e-9);
    }

    #[test]
    fn average_bounds() {
        let (a, b) = shears(1, 1);
        assert!((ave_upper_bound(&a, &b).unwrap() - 1.5f64.ln()).abs() < 1e-12);
        let (a, b) = shears(2, 2);
        assert!((ave_upper_bound(&a, &b).unwrap() - 2f64.ln()).abs() < 1e-12);
        let a = Mat2::from_ints(3, 1, 1, 3);
        let b = Mat2::from_ints(5, 2, 2, 5);
        assert!((ave_upper_bound(&a, &b).unwrap() - 5.5f64.ln()).abs() < 1e-12);
        let (a, b) = shears(2, -2);
        assert!(matches!(
            ave_upper_bound(&a, &b),
            Err(Error::NegativeEntry(_))
        ));
    }

    #[test]
    fn shear_pair_bound() {
        assert!((sturman_thiffeault_bound(1.0, 1.0).unwrap() - 0.514).abs() < 5e-4);
        assert!((sturman_thiffeault_bound(2.0, 2.0).unwrap() - 0.684).abs() < 5e-4);
        let k = 1e4;
        let ratio = sturman_thiffeault_bound(k, k).unwrap() / k.ln();
        assert!((ratio / 0.5 - 1.0).abs() < 0.1, "{ratio}");
        assert!(matches!(
            sturman_thiffeault_bound(2.0, -2.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            sturman_thiffeault_bound(0.0, 3.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn shear_detection() {
        let (a, b) = shears(3, 5);
        assert_eq!(shear_parameters(&a, &b), Some((int(3), int(5))));
        assert_eq!(shear_parameters(&b, &a), None);
        assert_eq!(shear_parameters(&Mat2::from_ints(2, 1, 1, 1), &b), None);
    }

    #[test]
    fn bound_reports() {
        let cfg = quick(50_000, 4, 3);
        let (a, b) = shears(1, 1);
        let rep = bounds_report(&a, &b, &cfg, false).unwrap();
        assert_eq!(rep.tighter, Some(TighterBound::Average));
        assert_eq!(rep.ave_bound_respected, Some(true));

        let (a, b) = shears(2, 2);
        let rep = bounds_report(&a, &b, &cfg, false).unwrap();
        assert_eq!(rep.tighter, Some(TighterBound::SturmanThiffeault));

        let (a, b) = shears(2, -2);
        let rep = bounds_report(&a, &b, &cfg, true).unwrap();
        assert_eq!(rep.ave_bound, None);
        assert_eq!(rep.st_bound, None);
        assert!(rep.shear_shape);
        assert!(rep.s_gen_exceeds_s_ave);
        assert_eq!(rep.notes.len(), 2);
    }
}
