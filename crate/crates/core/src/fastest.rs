//! Fastest growth: the largest entry over all positive words of a given
//! length, and bounds on the joint spectral radius.
//!
//! Everything here is exhaustive and exact. Words are enumerated depth-first
//! so that only the products along the current path are alive; for long
//! searches the tree is split on a fixed-length prefix and the subtrees are
//! walked on the rayon pool. All reductions (maxima, tie sets, minima under a
//! total order) are independent of the schedule.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{eval_word, ln_abs, spectral_radius, Letter, Mat2, Rational, Word};
use crate::error::{Error, Result};

/// Default ceiling on exhaustive word length.
pub const DEFAULT_MAX_LEN: usize = 30;

/// Relative tolerance under which two growth rates count as tied.
pub const RATE_TIE_TOLERANCE: f64 = 1e-12;

const PARALLEL_MIN_LEN: usize = 14;
const PREFIX_LEN: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Longest word length the exhaustive routines accept.
    pub max_len: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_len: DEFAULT_MAX_LEN,
        }
    }
}

impl SearchLimits {
    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "word length must be at least 1".into(),
            ));
        }
        if n > self.max_len {
            return Err(Error::DepthExceeded {
                requested: n,
                cap: self.max_len,
            });
        }
        Ok(())
    }
}

/// Largest absolute entry over all words of one length, with every word
/// attaining it (sorted, `A < B`).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaximizerRecord {
    pub length: usize,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub max_value: Rational,
    #[serde(serialize_with = "crate::report::ser_words")]
    pub witnesses: Vec<Word>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JsrEstimate {
    pub lower: f64,
    pub upper: f64,
    #[serde(serialize_with = "crate::report::ser_word")]
    pub lower_witness: Word,
    pub search_depth: usize,
}

/// Visits every nonempty word of length at most `max_len` together with its
/// product. Each rayon task gets its own accumulator; the accumulators are
/// returned in prefix order.
fn walk<T, I, V>(a: &Mat2, b: &Mat2, max_len: usize, init: I, visit: V) -> Vec<T>
where
    T: Send,
    I: Fn() -> T + Sync,
    V: Fn(&mut T, &[Letter], &Mat2) + Sync,
{
    fn dfs<T>(
        a: &Mat2,
        b: &Mat2,
        max_len: usize,
        letters: &mut Vec<Letter>,
        prod: &Mat2,
        acc: &mut T,
        visit: &(impl Fn(&mut T, &[Letter], &Mat2) + Sync),
    ) {
        if letters.len() == max_len {
            return;
        }
        for (letter, gen) in [(Letter::A, a), (Letter::B, b)] {
            let next = prod * gen;
            letters.push(letter);
            visit(acc, letters, &next);
            dfs(a, b, max_len, letters, &next, acc, visit);
            letters.pop();
        }
    }

    if max_len < PARALLEL_MIN_LEN {
        let mut acc = init();
        dfs(
            a,
            b,
            max_len,
            &mut Vec::with_capacity(max_len),
            &Mat2::identity(),
            &mut acc,
            &visit,
        );
        return vec![acc];
    }

    // Short words sequentially, then one task per prefix of length PREFIX_LEN.
    let mut head = init();
    dfs(
        a,
        b,
        PREFIX_LEN - 1,
        &mut Vec::new(),
        &Mat2::identity(),
        &mut head,
        &visit,
    );
    let tails: Vec<T> = (0..1usize << PREFIX_LEN)
        .into_par_iter()
        .map(|bits| {
            let prefix: Vec<Letter> = (0..PREFIX_LEN)
                .map(|i| {
                    if bits >> (PREFIX_LEN - 1 - i) & 1 == 0 {
                        Letter::A
                    } else {
                        Letter::B
                    }
                })
                .collect();
            let prod = eval_word(&Word::new(prefix.clone()), a, b);
            let mut acc = init();
            visit(&mut acc, &prefix, &prod);
            let mut letters = prefix;
            dfs(a, b, max_len, &mut letters, &prod, &mut acc, &visit);
            acc
        })
        .collect();
    std::iter::once(head).chain(tails).collect()
}

/// Exact maximum of `max_abs_entry(w(A, B))` over all `2^n` words of length `n`.
///
/// The first pass finds the value only; the second collects the words that
/// attain it.
pub fn max_entry_over_length(
    a: &Mat2,
    b: &Mat2,
    n: usize,
    limits: &SearchLimits,
) -> Result<MaximizerRecord> {
    limits.check(n)?;
    let max_value = walk(a, b, n, Rational::zero, |best, letters, prod| {
        if letters.len() == n {
            let v = prod.max_abs_entry();
            if v > *best {
                *best = v;
            }
        }
    })
    .into_iter()
    .max()
    .expect("at least one accumulator");

    let mut witnesses: Vec<Word> =
        walk(a, b, n, Vec::new, |found: &mut Vec<Word>, letters, prod| {
            if letters.len() == n && prod.max_abs_entry() == max_value {
                found.push(Word::new(letters.to_vec()));
            }
        })
        .into_iter()
        .flatten()
        .collect();
    witnesses.sort();

    Ok(MaximizerRecord {
        length: n,
        max_value,
        witnesses,
    })
}

/// `ρ(W)^(1/n)` for a word of length `n` with product `W`.
fn normalized_radius(prod: &Mat2, len: usize) -> f64 {
    let rho = spectral_radius(prod);
    if rho == 0.0 {
        0.0
    } else {
        (rho.ln() / len as f64).exp()
    }
}

/// Lower bound on the joint spectral radius: the best `ρ(w(A,B))^(1/|w|)`
/// over nonempty words with `|w| ≤ max_len`, with the shortest (then
/// lexicographically least) word attaining it.
pub fn jsr_lower_bound(
    a: &Mat2,
    b: &Mat2,
    max_len: usize,
    limits: &SearchLimits,
) -> Result<(f64, Word)> {
    limits.check(max_len)?;
    let best = walk(
        a,
        b,
        max_len,
        || 0.0f64,
        |best, letters, prod| {
            *best = best.max(normalized_radius(prod, letters.len()));
        },
    )
    .into_iter()
    .fold(0.0f64, f64::max);

    let threshold = best * (1.0 - RATE_TIE_TOLERANCE);
    let witness = walk(
        a,
        b,
        max_len,
        || None::<Word>,
        |pick, letters, prod| {
            let shorter_or_less = match pick {
                None => true,
                Some(w) => (letters.len(), letters) < (w.len(), w.letters()),
            };
            if shorter_or_less && normalized_radius(prod, letters.len()) >= threshold {
                *pick = Some(Word::new(letters.to_vec()));
            }
        },
    )
    .into_iter()
    .flatten()
    .min_by(|x, y| (x.len(), x).cmp(&(y.len(), y)))
    .expect("the threshold is attained by the maximizing word");

    Ok((best, witness))
}

/// Upper bound on the joint spectral radius from submultiplicativity:
/// `(max_{|w| = n} ‖w(A,B)‖₁)^(1/n)`.
pub fn jsr_upper_bound(a: &Mat2, b: &Mat2, n: usize, limits: &SearchLimits) -> Result<f64> {
    limits.check(n)?;
    let best = walk(a, b, n, Rational::zero, |best, letters, prod| {
        if letters.len() == n {
            let v = prod.l1_norm();
            if v > *best {
                *best = v;
            }
        }
    })
    .into_iter()
    .max()
    .expect("at least one accumulator");
    Ok((ln_abs(&best) / n as f64).exp())
}

/// Both bounds at the same search depth.
pub fn jsr_estimate(
    a: &Mat2,
    b: &Mat2,
    depth: usize,
    limits: &SearchLimits,
) -> Result<JsrEstimate> {
    let (lower, lower_witness) = jsr_lower_bound(a, b, depth, limits)?;
    let upper = jsr_upper_bound(a, b, depth, limits)?;
    Ok(JsrEstimate {
        lower,
        upper,
        lower_witness,
        search_depth: depth,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlternationRow {
    pub length: usize,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub max_value: Rational,
    /// Largest entry of `(AB)^(n/2)`.
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub ab_value: Rational,
    /// Largest entry of `(BA)^(n/2)`.
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub ba_value: Rational,
    /// An alternating word attains the maximum.
    pub attained: bool,
    /// The maximizers are exactly `{(AB)^(n/2), (BA)^(n/2)}`.
    pub exact_set: bool,
    pub maximizer_count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub length: usize,
    #[serde(serialize_with = "crate::report::ser_word")]
    pub word: Word,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub value: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub alternating_value: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlternationReport {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub k: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub m: Rational,
    /// `false` for forced runs outside `k, m ≥ 2` or `k = m = 1`.
    pub in_scope: bool,
    pub rows: Vec<AlternationRow>,
    pub counterexample: Option<Counterexample>,
    pub verified: bool,
}

/// Whether `(k, m)` satisfies `k, m ≥ 2` or `k = m = 1`.
pub fn alternation_hypothesis(k: &Rational, m: &Rational) -> bool {
    let two = Rational::from_integer(2.into());
    let one = Rational::from_integer(1.into());
    (*k >= two && *m >= two) || (*k == one && *m == one)
}

/// Checks, for every even `n ≤ n_max`, that the alternating words
/// `(A(k)B(m))^(n/2)` and `(B(m)A(k))^(n/2)` attain the largest entry among
/// all words of length `n` in `A(k)`, `B(m)`.
///
/// Outside the hypothesis the check runs only with `force`, and the report
/// is marked `in_scope = false`.
pub fn verify_alternation_optimality(
    k: &Rational,
    m: &Rational,
    n_max: usize,
    force: bool,
    limits: &SearchLimits,
) -> Result<AlternationReport> {
    if n_max < 2 || !n_max.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "n_max must be a positive even integer, got {n_max}"
        )));
    }
    limits.check(n_max)?;
    let in_scope = alternation_hypothesis(k, m);
    if !in_scope && !force {
        return Err(Error::OutsideHypothesis {
            k: k.to_string(),
            m: m.to_string(),
        });
    }

    let a = Mat2::upper_shear(k.clone());
    let b = Mat2::lower_shear(m.clone());
    let ab = Word::new(vec![Letter::A, Letter::B]);
    let ba = Word::new(vec![Letter::B, Letter::A]);

    let mut rows = Vec::new();
    let mut counterexample = None;
    for n in (2..=n_max).step_by(2) {
        let record = max_entry_over_length(&a, &b, n, limits)?;
        let ab_word = ab.power(n / 2);
        let ba_word = ba.power(n / 2);
        let ab_value = eval_word(&ab_word, &a, &b).max_abs_entry();
        let ba_value = eval_word(&ba_word, &a, &b).max_abs_entry();
        let attained = ab_value == record.max_value || ba_value == record.max_value;
        let exact_set = record.witnesses.len() == 2
            && record.witnesses.contains(&ab_word)
            && record.witnesses.contains(&ba_word);
        if !attained && counterexample.is_none() {
            counterexample = Some(Counterexample {
                length: n,
                word: record.witnesses[0].clone(),
                value: record.max_value.clone(),
                alternating_value: ab_value.clone().max(ba_value.clone()),
            });
        }
        rows.push(AlternationRow {
            length: n,
            maximizer_count: record.witnesses.len(),
            max_value: record.max_value,
            ab_value,
            ba_value,
            attained,
            exact_set,
        });
    }

    Ok(AlternationReport {
        k: k.clone(),
        m: m.clone(),
        in_scope,
        verified: counterexample.is_none(),
        rows,
        counterexample,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeRow {
    pub length: usize,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub max_value: Rational,
    #[serde(serialize_with = "crate::report::ser_word")]
    pub least_witness: Word,
    pub witness_count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DetectedPeriod {
    pub period: usize,
    #[serde(serialize_with = "crate::report::ser_word")]
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeriodicityReport {
    pub max_len: usize,
    pub rows: Vec<ProbeRow>,
    /// `None` means no period detected up to `max_len`.
    pub period: Option<DetectedPeriod>,
    /// The word with the best normalized spectral radius up to `max_len`,
    /// i.e. the cycle whose powers grow fastest asymptotically.
    #[serde(serialize_with = "crate::report::ser_word")]
    pub dominant_cycle: Word,
    pub dominant_rate: f64,
}

/// Minimum number of multiples of a period that must fall in range.
pub const MIN_PERIOD_REPETITIONS: usize = 3;

/// Tabulates the maximizers for every length up to `max_len` and looks for a
/// periodic pattern.
///
/// A period `r` with word `v` (one of the maximizers at length `r`) is
/// detected when `v^(n/r)` is a maximizer for every multiple `n` of `r` in
/// range, and there are at least three such multiples. The smallest `r` is
/// reported; among its candidate words the lexicographically least wins.
pub fn periodicity_probe(
    a: &Mat2,
    b: &Mat2,
    max_len: usize,
    limits: &SearchLimits,
) -> Result<PeriodicityReport> {
    limits.check(max_len)?;
    let records = (1..=max_len)
        .map(|n| max_entry_over_length(a, b, n, limits))
        .collect::<Result<Vec<_>>>()?;

    let period = (1..=max_len / MIN_PERIOD_REPETITIONS).find_map(|r| {
        records[r - 1].witnesses.iter().find_map(|v| {
            let holds = (2..=max_len / r).all(|j| {
                let value = eval_word(&v.power(j), a, b).max_abs_entry();
                value == records[j * r - 1].max_value
            });
            holds.then(|| DetectedPeriod {
                period: r,
                word: v.clone(),
            })
        })
    });

    let (dominant_rate, dominant_cycle) = jsr_lower_bound(a, b, max_len, limits)?;
    let rows = records
        .into_iter()
        .map(|rec| ProbeRow {
            length: rec.length,
            least_witness: rec.witnesses[0].clone(),
            witness_count: rec.witnesses.len(),
            max_value: rec.max_value,
        })
        .collect();

    Ok(PeriodicityReport {
        max_len,
        rows,
        period,
        dominant_cycle,
        dominant_rate,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CandidateRate {
    #[serde(serialize_with = "crate::report::ser_word")]
    pub word: Word,
    pub rate: f64,
    /// Both matrices have determinant 1 and nonnegative integer entries.
    pub nonnegative_sl2z: bool,
}

/// Best normalized spectral radius over the candidates `A, B, AB, AAB, ABB`,
/// which are known to contain the fastest-growing cycle for pairs in
/// `SL₂(ℤ)` with nonnegative entries. The hypothesis is reported, not
/// enforced. Ties keep the earlier candidate.
pub fn candidate_set_rate(a: &Mat2, b: &Mat2) -> CandidateRate {
    use Letter::{A, B};
    let candidates = [vec![A], vec![B], vec![A, B], vec![A, A, B], vec![A, B, B]];
    let mut best: Option<(Word, f64)> = None;
    for letters in candidates {
        let word = Word::new(letters);
        let rate = normalized_radius(&eval_word(&word, a, b), word.len());
        if best
            .as_ref()
            .is_none_or(|(_, r)| rate > r * (1.0 + RATE_TIE_TOLERANCE))
        {
            best = Some((word, rate));
        }
    }
    let in_sl2 = |m: &Mat2| {
        m.is_integral() && m.is_nonnegative() && m.det() == Rational::from_integer(1.into())
    };
    let (word, rate) = best.expect("five candidates");
    CandidateRate {
        word,
        rate,
        nonnegative_sl2z: in_sl2(a) && in_sl2(b),
    }
}

/// True when the maximum over words of length `n` is zero, which only
/// happens for degenerate (e.g. nilpotent) pairs.
pub fn is_degenerate(record: &MaximizerRecord) -> bool {
    !record.max_value.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    fn shears(k: i64, m: i64) -> (Mat2, Mat2) {
        (Mat2::upper_shear(int(k)), Mat2::lower_shear(int(m)))
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Independent oracle: builds every word of length n from its bit pattern
    /// and evaluates it from scratch.
    fn brute_force_max(a: &Mat2, b: &Mat2, n: usize) -> (Rational, Vec<Word>) {
        let mut best = int(-1);
        let mut words = Vec::new();
        for bits in 0u32..(1 << n) {
            let word = Word::new(
                (0..n)
                    .map(|i| {
                        if bits >> (n - 1 - i) & 1 == 0 {
                            Letter::A
                        } else {
                            Letter::B
                        }
                    })
                    .collect(),
            );
            let v = eval_word(&word, a, b).max_abs_entry();
            if v > best {
                best = v.clone();
                words.clear();
            }
            if v == best {
                words.push(word);
            }
        }
        (best, words)
    }

    #[test]
    fn maximizers_of_a2_b2() {
        let (a, b) = shears(2, 2);
        let rec = max_entry_over_length(&a, &b, 4, &SearchLimits::default()).unwrap();
        assert_eq!(rec.max_value, int(29));
        assert_eq!(rec.witnesses, vec![w("ABAB"), w("BABA")]);
        assert_eq!(brute_force_max(&a, &b, 4), (int(29), rec.witnesses.clone()));
    }

    #[test]
    fn single_letter_words() {
        let a = Mat2::new(int(3), ratio(-8, 2), int(0), int(1));
        let b = Mat2::from_ints(1, 2, 3, 4);
        let rec = max_entry_over_length(&a, &b, 1, &SearchLimits::default()).unwrap();
        assert_eq!(rec.max_value, int(4));
        assert_eq!(rec.witnesses, vec![w("A"), w("B")]);
    }

    #[test]
    fn maximizers_of_a2_bm2() {
        let (a, b) = shears(2, -2);
        let rec = max_entry_over_length(&a, &b, 4, &SearchLimits::default()).unwrap();
        assert_eq!(rec.max_value, int(15));
        assert!(rec.witnesses.contains(&w("AABB")));
    }

    #[test]
    fn parallel_walk_matches_oracle() {
        let (a, b) = shears(1, -1);
        let n = PARALLEL_MIN_LEN + 1;
        let rec = max_entry_over_length(&a, &b, n, &SearchLimits::default()).unwrap();
        let (value, words) = brute_force_max(&a, &b, n);
        assert_eq!(rec.max_value, value);
        assert_eq!(rec.witnesses, words);
    }

    #[test]
    fn depth_cap() {
        let (a, b) = shears(2, 2);
        let limits = SearchLimits { max_len: 5 };
        assert!(matches!(
            max_entry_over_length(&a, &b, 6, &limits),
            Err(Error::DepthExceeded {
                requested: 6,
                cap: 5
            })
        ));
        assert!(matches!(
            jsr_upper_bound(&a, &b, 0, &limits),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn lower_bounds() {
        let limits = SearchLimits::default();
        let (a, b) = shears(2, 2);
        let (rate, witness) = jsr_lower_bound(&a, &b, 2, &limits).unwrap();
        assert!((rate - (1.0 + 2f64.sqrt())).abs() < 1e-12);
        assert_eq!(witness, w("AB"));

        let id = Mat2::identity();
        let (rate, witness) = jsr_lower_bound(&id, &id, 3, &limits).unwrap();
        assert!((rate - 1.0).abs() < 1e-15);
        assert_eq!(witness, w("A"));

        let a = Mat2::from_ints(1, 1, 0, 1);
        let b = Mat2::from_ints(0, 1, 1, 0);
        let (rate, witness) = jsr_lower_bound(&a, &b, 4, &limits).unwrap();
        assert!((rate - ((3.0 + 13f64.sqrt()) / 2.0).powf(0.25)).abs() < 1e-12);
        assert!((rate - 1.348).abs() < 5e-4);
        assert_eq!(witness, w("AAAB"));
    }

    #[test]
    fn upper_bounds() {
        let limits = SearchLimits::default();
        let id = Mat2::identity();
        for n in 1..=5 {
            let ub = jsr_upper_bound(&id, &id, n, &limits).unwrap();
            assert!((ub - 2f64.powf(1.0 / n as f64)).abs() < 1e-12);
        }
        let (a, b) = shears(2, 2);
        let ub2 = jsr_upper_bound(&a, &b, 2, &limits).unwrap();
        assert!((ub2 - 10f64.sqrt()).abs() < 1e-12);
        assert!(ub2 >= 1.0 + 2f64.sqrt());
        let ub4 = jsr_upper_bound(&a, &b, 4, &limits).unwrap();
        let ub8 = jsr_upper_bound(&a, &b, 8, &limits).unwrap();
        assert!(ub8 <= ub4);
    }

    #[test]
    fn alternation_within_hypothesis() {
        let limits = SearchLimits::default();
        for (k, m) in [(2, 2), (1, 1)] {
            let rep = verify_alternation_optimality(&int(k), &int(m), 8, false, &limits).unwrap();
            assert!(rep.in_scope);
            assert!(rep.verified, "k={k} m={m}: {:?}", rep.counterexample);
            assert_eq!(rep.rows.len(), 4);
        }
        // k = m = 1 has ties, k = m = 2 does not
        let rep = verify_alternation_optimality(&int(2), &int(2), 8, false, &limits).unwrap();
        assert!(rep.rows.iter().all(|r| r.exact_set));
    }

    #[test]
    fn alternation_forced_outside_hypothesis() {
        let limits = SearchLimits::default();
        assert!(matches!(
            verify_alternation_optimality(&int(2), &int(-2), 8, false, &limits),
            Err(Error::OutsideHypothesis { .. })
        ));
        let rep = verify_alternation_optimality(&int(2), &int(-2), 8, true, &limits).unwrap();
        assert!(!rep.in_scope);
        assert!(!rep.verified);
        let ce = rep.counterexample.unwrap();
        assert_eq!(ce.length, 2);
        assert_eq!(ce.word, w("AA"));
        assert_eq!(ce.value, int(4));
        assert_eq!(ce.alternating_value, int(3));
        assert!(matches!(
            verify_alternation_optimality(&int(2), &int(2), 7, false, &limits),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn periods() {
        let limits = SearchLimits::default();
        let (a, b) = shears(2, 2);
        let rep = periodicity_probe(&a, &b, 12, &limits).unwrap();
        assert_eq!(
            rep.period,
            Some(DetectedPeriod {
                period: 2,
                word: w("AB")
            })
        );
        assert_eq!(rep.rows.len(), 12);

        let (a, b) = shears(2, -2);
        let rep = periodicity_probe(&a, &b, 12, &limits).unwrap();
        assert_eq!(
            rep.period,
            Some(DetectedPeriod {
                period: 4,
                word: w("AABB")
            })
        );
        assert_eq!(rep.dominant_cycle, w("AABB"));

        let (a, b) = shears(1, 1);
        let rep = periodicity_probe(&a, &b, 12, &limits).unwrap();
        assert_eq!(rep.period.map(|p| p.word), Some(w("AB")));
    }

    #[test]
    fn binary_pair_maximizers_are_not_strictly_periodic() {
        // At n = 4, 8, 12 the largest entries (4, 13, 43) beat the powers of
        // AAAB (3, 10, 33); only the asymptotic rate is governed by AAAB.
        let a = Mat2::from_ints(1, 1, 0, 1);
        let b = Mat2::from_ints(0, 1, 1, 0);
        let rep = periodicity_probe(&a, &b, 12, &SearchLimits::default()).unwrap();
        let maxima: Vec<i64> = [4, 8, 12]
            .iter()
            .map(|&n| rep.rows[n - 1].max_value.to_integer().try_into().unwrap())
            .collect();
        assert_eq!(maxima, vec![4, 13, 43]);
        assert_eq!(rep.period, None);
        assert_eq!(rep.dominant_cycle, w("AAAB"));
    }

    #[test]
    fn candidates() {
        let (x, y) = shears(1, 1);
        let c = candidate_set_rate(&x, &y);
        assert_eq!(c.word, w("AB"));
        assert!((c.rate - ((3.0 + 5f64.sqrt()) / 2.0).sqrt()).abs() < 1e-12);
        assert!(c.nonnegative_sl2z);

        let id = Mat2::identity();
        let c = candidate_set_rate(&id, &id);
        assert!((c.rate - 1.0).abs() < 1e-15);

        let u = Mat2::from_ints(2, 1, 1, 1);
        let v = Mat2::from_ints(3, 1, 2, 1);
        let c = candidate_set_rate(&u, &v);
        assert_eq!(c.word, w("B"));
        assert!((c.rate - (2.0 + 3f64.sqrt())).abs() < 1e-12);

        let c = candidate_set_rate(&Mat2::from_ints(1, 2, 0, 1), &Mat2::from_ints(1, 0, -2, 1));
        assert!(!c.nonnegative_sl2z);
    }
}
