//! Average growth: entry expectations of a uniform random product.
//!
//! By linearity the expected product of `n` independent factors, each `A` or
//! `B` with probability 1/2, is `M̄ⁿ` with `M̄ = (A + B)/2`. Each entry
//! expectation then obeys the two-term recurrence given by the
//! characteristic polynomial of `M̄`, and its growth rate is the spectral
//! radius of `M̄`.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{int, mean_matrix, spectral_radius, to_f64, Mat2, Rational};
use crate::error::{Error, Result};
use crate::rng::{trial_stream, LetterStream};

/// Default cap on the number of factors for exact expectations.
pub const DEFAULT_EXPECTATION_CAP: usize = 10_000;
/// Longest product kept exact per sample in [`empirical_mean_check`].
pub const EXACT_SAMPLE_CAP: usize = 60;
pub const MIN_TRIALS: usize = 100;

/// `x_n = trace · x_{n−1} − det · x_{n−2}`, satisfied by every entry of
/// `M̄ⁿ` (Cayley–Hamilton).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceSpec {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub trace: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub det: Rational,
}

impl RecurrenceSpec {
    /// Next term from the two previous ones.
    pub fn next(&self, prev: &Rational, prev2: &Rational) -> Rational {
        &self.trace * prev - &self.det * prev2
    }
}

impl std::fmt::Display for RecurrenceSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "x_n = ({})·x_(n-1) - ({})·x_(n-2)", self.trace, self.det)
    }
}

/// Expected product matrices for `0..=n` factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectationSequence {
    pub terms: Vec<Mat2>,
}

impl ExpectationSequence {
    pub fn new(a: &Mat2, b: &Mat2, n: usize) -> Self {
        let mean = mean_matrix(a, b);
        let mut terms = Vec::with_capacity(n + 1);
        terms.push(Mat2::identity());
        for i in 1..=n {
            let next = &mean * &terms[i - 1];
            terms.push(next);
        }
        ExpectationSequence { terms }
    }
}

/// Spectral radius of the mean matrix. For a complex pair this is the common
/// modulus, along which the expectations themselves oscillate in sign.
pub fn average_growth_rate(a: &Mat2, b: &Mat2) -> f64 {
    spectral_radius(&mean_matrix(a, b))
}

pub fn recurrence_spec(a: &Mat2, b: &Mat2) -> RecurrenceSpec {
    let mean = mean_matrix(a, b);
    RecurrenceSpec {
        trace: mean.trace(),
        det: mean.det(),
    }
}

/// Exact expected product of `n` uniform factors, `((A + B)/2)ⁿ`.
pub fn expected_entries(a: &Mat2, b: &Mat2, n: usize) -> Result<Mat2> {
    expected_entries_capped(a, b, n, DEFAULT_EXPECTATION_CAP)
}

pub fn expected_entries_capped(a: &Mat2, b: &Mat2, n: usize, cap: usize) -> Result<Mat2> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "product length",
            requested: n,
            cap,
        });
    }
    Ok(mean_matrix(a, b).pow(n as u64))
}

/// Sample mean of the (1,1) entry over seeded random products, compared with
/// the exact expectation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeanCheckReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub expected: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub sample_mean_exact: Rational,
    pub sample_mean: f64,
    /// Standard error of the sample mean.
    pub stderr: f64,
    /// `sample_mean − expected`.
    pub deviation: f64,
    /// `deviation / |expected|`, absent when the expectation is zero.
    pub relative_deviation: Option<f64>,
    /// `deviation / stderr`, absent when every sample was identical.
    pub z_score: Option<f64>,
    pub exact_match: bool,
}

impl MeanCheckReport {
    /// Whether the sample mean lies within `k` standard errors of the
    /// expectation (exact agreement always passes).
    pub fn within(&self, k: f64) -> bool {
        self.exact_match || self.z_score.is_some_and(|z| z.abs() <= k)
    }
}

/// Draws `trials` exact random products of length `n` and compares the mean
/// of their (1,1) entries with the exact expectation. Trial `i` uses its own
/// stream derived from `(seed, i)`.
pub fn empirical_mean_check(
    a: &Mat2,
    b: &Mat2,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<MeanCheckReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > EXACT_SAMPLE_CAP {
        return Err(Error::CapExceeded {
            what: "exact sample length",
            requested: n,
            cap: EXACT_SAMPLE_CAP,
        });
    }
    if trials < MIN_TRIALS {
        return Err(Error::InvalidArgument(format!(
            "at least {MIN_TRIALS} trials are required, got {trials}"
        )));
    }

    let samples: Vec<Rational> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut letters = LetterStream::new(trial_stream(seed, trial as u64));
            let mut prod = Mat2::identity();
            for _ in 0..n {
                prod = if letters.next_is_a() {
                    &prod * a
                } else {
                    &prod * b
                };
            }
            prod.a
        })
        .collect();

    let expected = expected_entries_capped(a, b, n, EXACT_SAMPLE_CAP)?.a;
    let count = int(trials as i64);
    let sample_mean_exact = samples.iter().fold(Rational::zero(), |acc, x| acc + x) / &count;
    let variance = samples
        .iter()
        .map(|x| {
            let d = to_f64(&(x - &sample_mean_exact));
            d * d
        })
        .sum::<f64>()
        / (trials - 1) as f64;
    let stderr = (variance / trials as f64).sqrt();

    let exact_match = sample_mean_exact == expected;
    let deviation = to_f64(&(&sample_mean_exact - &expected));
    let expected_f = to_f64(&expected);
    Ok(MeanCheckReport {
        n,
        trials,
        seed,
        sample_mean: to_f64(&sample_mean_exact),
        stderr,
        deviation,
        relative_deviation: (expected_f != 0.0).then(|| deviation / expected_f.abs()),
        z_score: (stderr > 0.0).then(|| deviation / stderr),
        exact_match,
        expected,
        sample_mean_exact,
    })
}
