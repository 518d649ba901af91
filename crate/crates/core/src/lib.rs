//! Growth of entries in products of two 2×2 matrices.
//!
//! Three growth rates are computed for a pair `(A, B)`:
//!
//! * fastest (`s_max`, the joint spectral radius): exhaustive exact search
//!   over positive words, see [`fastest`];
//! * average (`s_ave`): spectral radius of the mean matrix `(A + B)/2`, see
//!   [`average`];
//! * generic (`s_gen = e^λ`): Monte-Carlo estimate of the Lyapunov exponent
//!   with per-step renormalization, see [`lyapunov`].
//!
//! [`girth`] covers relations between words, both exactly over ℚ and modulo
//! a prime, and [`report`] ties everything into the summary table and its
//! JSON/CSV output.

pub mod algebra;
pub mod average;
pub mod error;
pub mod fastest;
pub mod girth;
pub mod lyapunov;
pub mod report;
pub mod rng;

pub use algebra::{eval_word, mat_mul, mean_matrix, spectral_radius, Letter, Mat2, Rational, Word};
pub use error::{Error, Result};
