//! Exact 2×2 matrices over the rationals, positive words in two letters, and
//! the closed-form spectral radius.
//!
//! Every matrix entry is an arbitrary-precision fraction kept in lowest terms,
//! so products of any length are exact and relations between words can be
//! decided by plain equality.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact fraction with a positive denominator, always in lowest terms.
pub type Rational = BigRational;

/// Builds the rational `numer / denom`. Panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Nearest double to an exact rational.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

fn ln_abs_int(value: &BigInt) -> f64 {
    let bits = value.bits();
    if bits <= 1000 {
        value.to_f64().map_or(f64::NAN, |v| v.abs().ln())
    } else {
        let shift = bits - 64;
        let top = (value.abs() >> shift).to_f64().unwrap_or(f64::NAN);
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// `ln |value|`, valid far beyond the range of `f64`. Returns `-inf` for zero.
pub fn ln_abs(value: &Rational) -> f64 {
    if value.is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_abs_int(value.numer()) - ln_abs_int(value.denom())
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn exact_sqrt(value: &Rational) -> Option<Rational> {
    if value.is_negative() {
        return None;
    }
    let n = value.numer().sqrt();
    let d = value.denom().sqrt();
    if &(&n * &n) == value.numer() && &(&d * &d) == value.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// A 2×2 matrix `[[a, b], [c, d]]` with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Mat2 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(int(a), int(b), int(c), int(d))
    }

    pub fn identity() -> Self {
        Mat2::from_ints(1, 0, 0, 1)
    }

    /// The upper shear `A(k) = [[1, k], [0, 1]]`.
    pub fn upper_shear(k: Rational) -> Self {
        Mat2::new(Rational::one(), k, Rational::zero(), Rational::one())
    }

    /// The lower shear `B(m) = [[1, 0], [m, 1]]`.
    pub fn lower_shear(m: Rational) -> Self {
        Mat2::new(Rational::one(), Rational::zero(), m, Rational::one())
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.d
    }

    pub fn det(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_singular(&self) -> bool {
        self.det().is_zero()
    }

    /// Largest absolute value among the four entries.
    pub fn max_abs_entry(&self) -> Rational {
        self.entries()
            .into_iter()
            .map(|e| e.abs())
            .max()
            .expect("four entries")
    }

    /// Sum of the absolute values of the entries.
    pub fn l1_norm(&self) -> Rational {
        self.entries().into_iter().map(|e| e.abs()).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries().into_iter().all(|e| !e.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.entries().into_iter().all(|e| e.is_integer())
    }

    pub fn scale(&self, factor: &Rational) -> Mat2 {
        Mat2::new(
            &self.a * factor,
            &self.b * factor,
            &self.c * factor,
            &self.d * factor,
        )
    }

    /// `self^exponent` by repeated squaring.
    pub fn pow(&self, mut exponent: u64) -> Mat2 {
        let mut result = Mat2::identity();
        let mut base = self.clone();
        while exponent > 0 {
            if exponent & 1 == 1 {
                result = &result * &base;
            }
            exponent >>= 1;
            if exponent > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Nearest doubles, row-major.
    pub fn to_f64(&self) -> [f64; 4] {
        [
            to_f64(&self.a),
            to_f64(&self.b),
            to_f64(&self.c),
            to_f64(&self.d),
        ]
    }
}

impl Mul<&Mat2> for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl Add<&Mat2> for &Mat2 {
    type Output = Mat2;

    fn add(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }
}

/// Renders as `a,b;c,d`, the same text format the parser accepts.
impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}

impl serde::Serialize for Mat2 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Exact product `lhs · rhs`.
pub fn mat_mul(lhs: &Mat2, rhs: &Mat2) -> Mat2 {
    lhs * rhs
}

/// Entrywise average `(A + B) / 2`.
pub fn mean_matrix(a: &Mat2, b: &Mat2) -> Mat2 {
    (a + b).scale(&ratio(1, 2))
}

/// Largest modulus of the two eigenvalues of `m`.
///
/// Uses the characteristic polynomial `x² − t·x + δ`. With a nonnegative
/// discriminant both roots are real and the larger modulus is
/// `(|t| + √(t² − 4δ)) / 2`; otherwise the roots are a conjugate pair whose
/// product is `δ > 0`, so the modulus is `√δ`.
pub fn spectral_radius(m: &Mat2) -> f64 {
    let trace = m.trace();
    let det = m.det();
    let disc = &trace * &trace - &det * int(4);
    if disc.is_negative() {
        to_f64(&det).sqrt()
    } else {
        (to_f64(&trace).abs() + to_f64(&disc).sqrt()) / 2.0
    }
}

/// The spectral radius as an exact rational, when it happens to be one.
pub fn spectral_radius_exact(m: &Mat2) -> Option<Rational> {
    let trace = m.trace();
    let det = m.det();
    let disc = &trace * &trace - &det * int(4);
    if disc.is_negative() {
        exact_sqrt(&det)
    } else {
        exact_sqrt(&disc).map(|root| (trace.abs() + root) / int(2))
    }
}

/// One of the two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
        }
    }
}

/// A positive word over `{A, B}`, first letter leftmost.
///
/// The derived ordering is lexicographic with `A < B`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// `self` repeated `times` times.
    pub fn power(&self, times: usize) -> Word {
        Word {
            letters: self.letters.repeat(times),
        }
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.letters.ends_with(&self.letters)
    }

    /// Whether `other` is a cyclic rotation of `self`.
    pub fn is_rotation_of(&self, other: &Word) -> bool {
        if self.len() != other.len() {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        let doubled = self.power(2);
        doubled
            .letters
            .windows(other.len())
            .any(|w| w == other.letters())
    }

    /// Renders runs of two or more equal letters with exponent shorthand,
    /// e.g. `AB^10A^2`.
    pub fn to_compressed(&self) -> String {
        let mut out = String::new();
        let mut iter = self.letters.iter().peekable();
        while let Some(&letter) = iter.next() {
            let mut run = 1;
            while iter.peek() == Some(&&letter) {
                iter.next();
                run += 1;
            }
            out.push(letter.as_char());
            if run > 1 {
                out.push('^');
                out.push_str(&run.to_string());
            }
        }
        out
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word::new(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in &self.letters {
            write!(f, "{}", letter.as_char())?;
        }
        Ok(())
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Evaluates `w(A, B)` left to right; the empty word gives the identity.
pub fn eval_word(word: &Word, a: &Mat2, b: &Mat2) -> Mat2 {
    word.letters()
        .iter()
        .fold(Mat2::identity(), |acc, letter| match letter {
            Letter::A => &acc * a,
            Letter::B => &acc * b,
        })
}
