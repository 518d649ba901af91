//! Relations in two-generator matrix semigroups: reduction mod p, the
//! shortest relation found by breadth-first search over ℤ_p, exact relation
//! checks over ℚ, and simple freeness criteria.
//!
//! If `A` and `B` generate a free semigroup over ℤ, two distinct words can
//! only agree mod `p` once some entry of one of the products reaches `p`.
//! With entries growing like `sⁿ`, the shortest relation therefore has
//! length at least about `log_s p`.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algebra::{eval_word, int, Letter, Mat2, Rational, Word};
use crate::error::{Error, Result};
use crate::fastest::{max_entry_over_length, SearchLimits};

pub const DEFAULT_DEPTH_MAX: usize = 25;
pub const DEFAULT_STATE_BUDGET: u64 = 1 << 26;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Validates a modulus: prime and below 2^32.
pub fn check_prime(p: u64) -> Result<u64> {
    if p < (1 << 32) && is_prime(p) {
        Ok(p)
    } else {
        Err(Error::NotPrime(p))
    }
}

/// A 2×2 matrix over ℤ_p, entries in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModMat2 {
    entries: [u32; 4],
    p: u64,
}

impl ModMat2 {
    pub fn new(entries: [u64; 4], p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(ModMat2 {
            entries: entries.map(|e| (e % p) as u32),
            p,
        })
    }

    pub fn identity(p: u64) -> Result<Self> {
        ModMat2::new([1, 0, 0, 1], p)
    }

    pub fn entries(&self) -> [u64; 4] {
        self.entries.map(u64::from)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Mul for ModMat2 {
    type Output = ModMat2;

    fn mul(self, rhs: ModMat2) -> ModMat2 {
        debug_assert_eq!(self.p, rhs.p);
        let p = self.p;
        let [a, b, c, d] = self.entries();
        let [e, f, g, h] = rhs.entries();
        let dot = |x: u64, y: u64, z: u64, w: u64| ((x * y % p + z * w % p) % p) as u32;
        ModMat2 {
            entries: [
                dot(a, e, b, g),
                dot(a, f, b, h),
                dot(c, e, d, g),
                dot(c, f, d, h),
            ],
            p,
        }
    }
}

impl fmt::Display for ModMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries;
        write!(f, "{a},{b};{c},{d} (mod {})", self.p)
    }
}

/// Entrywise reduction of an integer matrix into `[0, p)`.
pub fn reduce_mod(m: &Mat2, p: u64) -> Result<ModMat2> {
    check_prime(p)?;
    let modulus = BigInt::from(p);
    let mut out = [0u64; 4];
    for (slot, entry) in out.iter_mut().zip(m.entries()) {
        if !entry.is_integer() {
            return Err(Error::NonIntegerEntry(entry.to_string()));
        }
        *slot = entry
            .numer()
            .mod_floor(&modulus)
            .to_u64()
            .expect("residue below p");
    }
    ModMat2::new(out, p)
}

/// Word length at which entries growing like `sⁿ` first reach `p`:
/// `⌈ln p / ln s⌉`.
pub fn girth_bound(p: u64, s: f64) -> Result<u64> {
    if !(s.is_finite() && s > 1.0) {
        return Err(Error::Domain(format!("growth rate must exceed 1, got {s}")));
    }
    if p < 2 {
        return Err(Error::Domain(format!(
            "modulus must be at least 2, got {p}"
        )));
    }
    Ok(((p as f64).ln() / s.ln()).ceil() as u64)
}

/// Two distinct words with the same product mod `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollisionRecord {
    /// `max(|u|, |v|)`.
    pub depth: usize,
    #[serde(serialize_with = "crate::report::ser_word")]
    pub word_u: Word,
    #[serde(serialize_with = "crate::report::ser_word")]
    pub word_v: Word,
    pub p: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BfsLimits {
    pub depth_max: usize,
    /// Largest number of stored states.
    pub state_budget: u64,
}

impl Default for BfsLimits {
    fn default() -> Self {
        BfsLimits {
            depth_max: DEFAULT_DEPTH_MAX,
            state_budget: DEFAULT_STATE_BUDGET,
        }
    }
}

/// Word of length ≤ 63 packed as bits, first letter most significant, `B = 1`.
/// For a fixed length the numeric order is the lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Packed {
    bits: u64,
    len: u8,
}

impl Packed {
    fn child(self, letter: Letter) -> Packed {
        Packed {
            bits: self.bits << 1 | u64::from(letter == Letter::B),
            len: self.len + 1,
        }
    }

    fn unpack(self) -> Word {
        Word::new(
            (0..self.len)
                .map(|i| {
                    if self.bits >> (self.len - 1 - i) & 1 == 0 {
                        Letter::A
                    } else {
                        Letter::B
                    }
                })
                .collect(),
        )
    }
}

/// Enumerates positive words by increasing length (lexicographically within
/// a length) and stops at the first word whose product mod `p` was already
/// reached. `word_u` is the earliest word with that product, `word_v` the one
/// that repeats it; `None` if no relation exists up to `depth_max`.
pub fn bfs_first_collision(
    a: &Mat2,
    b: &Mat2,
    p: u64,
    limits: &BfsLimits,
) -> Result<Option<CollisionRecord>> {
    if limits.depth_max == 0 || limits.depth_max > 63 {
        return Err(Error::InvalidArgument(format!(
            "depth_max must be in 1..=63, got {}",
            limits.depth_max
        )));
    }
    let gens = [
        (Letter::A, reduce_mod(a, p)?),
        (Letter::B, reduce_mod(b, p)?),
    ];

    let mut seen: HashMap<[u32; 4], Packed> = HashMap::new();
    let mut frontier = vec![(ModMat2::identity(p)?, Packed { bits: 0, len: 0 })];
    let mut stored: u64 = 0;
    for depth in 1..=limits.depth_max {
        let required = stored + (1u64 << depth);
        if required > limits.state_budget {
            return Err(Error::BudgetExceeded {
                required,
                budget: limits.state_budget,
            });
        }
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for (prod, word) in &frontier {
            for (letter, gen) in gens {
                let child = *prod * gen;
                let child_word = word.child(letter);
                if let Some(first) = seen.get(&child.entries) {
                    return Ok(Some(CollisionRecord {
                        depth,
                        word_u: first.unpack(),
                        word_v: child_word.unpack(),
                        p,
                    }));
                }
                seen.insert(child.entries, child_word);
                next.push((child, child_word));
            }
        }
        stored += next.len() as u64;
        frontier = next;
    }
    Ok(None)
}

/// Exact equality of `u(A, B)` and `v(A, B)` over ℚ.
pub fn verify_relation(u: &Word, v: &Word, a: &Mat2, b: &Mat2) -> bool {
    eval_word(u, a, b) == eval_word(v, a, b)
}

/// `k·m ≥ 4`, which guarantees `A(k)`, `B(m)` generate a free semigroup.
/// `false` means unknown, not non-free.
pub fn freeness_sufficient(k: &Rational, m: &Rational) -> bool {
    k * m >= int(4)
}

/// Neither word is a suffix of the other. Substituting two such words in
/// free generators yields free generators again.
pub fn suffix_freeness_check(u: &Word, v: &Word) -> Result<bool> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(!u.is_suffix_of(v) && !v.is_suffix_of(u))
}

/// BFS result together with the entry-size argument that bounds it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GirthReport {
    pub p: u64,
    pub depth_max: usize,
    pub collision: Option<CollisionRecord>,
    /// Largest entry over words of the collision depth.
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub max_entry_at_depth: Option<Rational>,
    /// `max_entry_at_depth ≥ p`; must hold whenever the pair is free over ℤ.
    pub entry_bound_holds: Option<bool>,
    /// `true` when freeness is certified (`k·m ≥ 4` for a shear pair);
    /// otherwise the entry bound is not guaranteed to apply.
    pub free_certified: bool,
}

pub fn girth_report(
    a: &Mat2,
    b: &Mat2,
    p: u64,
    limits: &BfsLimits,
    search: &SearchLimits,
) -> Result<GirthReport> {
    let collision = bfs_first_collision(a, b, p, limits)?;
    let max_entry_at_depth = match &collision {
        Some(c) => Some(max_entry_over_length(a, b, c.depth, search)?.max_value),
        None => None,
    };
    let free_certified =
        crate::lyapunov::shear_parameters(a, b).is_some_and(|(k, m)| freeness_sufficient(&k, &m));
    Ok(GirthReport {
        p,
        depth_max: limits.depth_max,
        entry_bound_holds: max_entry_at_depth.as_ref().map(|v| *v >= int(p as i64)),
        collision,
        max_entry_at_depth,
        free_certified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reductions() {
        let m = reduce_mod(&Mat2::from_ints(-3, 2, -2, 1), 5).unwrap();
        assert_eq!(m.entries(), [2, 2, 3, 1]);
        assert_eq!(
            reduce_mod(&Mat2::identity(), 7).unwrap(),
            ModMat2::identity(7).unwrap()
        );
        assert_eq!(
            reduce_mod(&Mat2::from_ints(5, 2, 2, 1), 5)
                .unwrap()
                .entries(),
            [0, 2, 2, 1]
        );
        assert!(matches!(
            reduce_mod(&Mat2::new(ratio(1, 2), int(0), int(0), int(1)), 5),
            Err(Error::NonIntegerEntry(_))
        ));
        assert!(matches!(
            reduce_mod(&Mat2::identity(), 6),
            Err(Error::NotPrime(6))
        ));
        assert!(matches!(
            reduce_mod(&Mat2::identity(), 1),
            Err(Error::NotPrime(1))
        ));
    }

    #[test]
    fn large_prime_products_do_not_overflow() {
        let p = 4_294_967_291; // largest prime below 2^32
        let m = ModMat2::new([p - 1, p - 2, p - 3, p - 4], p).unwrap();
        let sq = m * m;
        // (-1)(-1) + (-2)(-3) = 7, (-1)(-2) + (-2)(-4) = 10, ...
        assert_eq!(sq.entries(), [7, 10, 15, 22]);
    }

    #[test]
    fn bounds() {
        assert_eq!(girth_bound(2, 2.0).unwrap(), 1);
        assert_eq!(girth_bound(1_000_003, 1.0 + 2f64.sqrt()).unwrap(), 16);
        assert_eq!(girth_bound(101, 1.618).unwrap(), 10);
        assert_eq!(girth_bound(101, 1.0 + 2f64.sqrt()).unwrap(), 6);
        assert!(matches!(girth_bound(101, 1.0), Err(Error::Domain(_))));
        assert!(matches!(girth_bound(101, f64::NAN), Err(Error::Domain(_))));
    }

    #[test]
    fn identical_generators_collide_immediately() {
        let m = Mat2::from_ints(2, 1, 1, 1);
        let c = bfs_first_collision(&m, &m, 7, &BfsLimits::default())
            .unwrap()
            .unwrap();
        assert_eq!(c.depth, 1);
        assert_eq!((c.word_u, c.word_v), (w("A"), w("B")));
    }

    #[test]
    fn shear_collisions() {
        let limits = BfsLimits::default();
        let (a1, b1) = (Mat2::upper_shear(int(1)), Mat2::lower_shear(int(1)));
        let c = bfs_first_collision(&a1, &b1, 2, &limits).unwrap().unwrap();
        assert_eq!((c.depth, c.word_u, c.word_v), (2, w("AA"), w("BB")));

        let (a2, b2) = (Mat2::upper_shear(int(2)), Mat2::lower_shear(int(2)));
        let short = BfsLimits {
            depth_max: 6,
            ..limits
        };
        assert_eq!(bfs_first_collision(&a2, &b2, 101, &short).unwrap(), None);
        let c = bfs_first_collision(&a2, &b2, 101, &limits)
            .unwrap()
            .unwrap();
        assert_eq!(c.depth, 7);
        assert!(!verify_relation(&c.word_u, &c.word_v, &a2, &b2));
        assert_eq!(
            reduce_mod(&eval_word(&c.word_u, &a2, &b2), 101).unwrap(),
            reduce_mod(&eval_word(&c.word_v, &a2, &b2), 101).unwrap()
        );
    }

    #[test]
    fn budget_guard() {
        let (a2, b2) = (Mat2::upper_shear(int(2)), Mat2::lower_shear(int(2)));
        let tight = BfsLimits {
            depth_max: 10,
            state_budget: 100,
        };
        assert!(matches!(
            bfs_first_collision(&a2, &b2, 101, &tight),
            Err(Error::BudgetExceeded {
                required: 126,
                budget: 100
            })
        ));
    }

    #[test]
    fn relations() {
        let c = Mat2::from_ints(1, 1, 0, 1);
        let d = Mat2::from_ints(1, 0, -1, 1);
        assert!(verify_relation(&w("ABA"), &w("BAB"), &c, &d));

        let a = Mat2::from_ints(2, 0, 0, 3);
        let b = Mat2::from_ints(3, 5, 0, 5);
        let u = w("AB^10A^2BA^2BA^10");
        let v = w("B^2A^6B^2A^2BABABA^2B^2A^2BAB^2");
        assert_eq!((u.len(), v.len()), (27, 27));
        assert!(verify_relation(&u, &v, &a, &b));

        let (a2, b2) = (Mat2::upper_shear(int(2)), Mat2::lower_shear(int(2)));
        assert!(!verify_relation(&w("AB"), &w("BA"), &a2, &b2));
    }

    #[test]
    fn freeness_criteria() {
        assert!(freeness_sufficient(&int(2), &int(2)));
        assert!(!freeness_sufficient(&int(1), &int(1)));
        assert!(freeness_sufficient(&ratio(1, 2), &int(8)));

        assert!(suffix_freeness_check(&w("AB"), &w("ABB")).unwrap());
        assert!(!suffix_freeness_check(&w("B"), &w("AB")).unwrap());
        assert!(suffix_freeness_check(&w("AAB"), &w("BAB")).unwrap());
        assert!(matches!(
            suffix_freeness_check(&Word::empty(), &w("A")),
            Err(Error::EmptyWord)
        ));
    }

    #[test]
    fn report_checks_entry_bound() {
        let (a2, b2) = (Mat2::upper_shear(int(2)), Mat2::lower_shear(int(2)));
        let rep = girth_report(
            &a2,
            &b2,
            11,
            &BfsLimits::default(),
            &SearchLimits::default(),
        )
        .unwrap();
        assert_eq!(rep.collision.as_ref().map(|c| c.depth), Some(5));
        assert_eq!(rep.max_entry_at_depth, Some(int(70)));
        assert_eq!(rep.entry_bound_holds, Some(true));
        assert!(rep.free_certified);
    }
}
