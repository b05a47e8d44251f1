//! Exact shuffle algebra over the Hoffman word ring `Q<x, y>` and
//! arbitrary-precision numeric evaluation of multiple zeta values.
//!
//! The crate has two halves that cross-check each other:
//!
//! - **Exact algebra** — words over `{x, y}`, compositions (z-alphabet
//!   words `z_k = x^{k-1} y`), polynomials with big-rational coefficients,
//!   the two shuffle products, and generators/checkers for the classical
//!   shuffle identities behind the evaluations `zeta({2}_m)`,
//!   `zeta({3,1}_n)` and the Bowman–Bradley sum formula.
//! - **Numerics** — a fixed-point big-decimal type, pi via a Machin
//!   arctangent series, multiple polylogarithms at 1/2, and two
//!   independent MZV evaluators (Hoelder convolution and direct series
//!   truncation) used to verify the identities numerically.

pub mod bigfloat;
pub mod composition;
pub mod error;
pub mod identities;
pub mod poly;
pub mod rational;
pub mod shuffle;
pub mod verify;
pub mod word;
pub mod zeta;

pub use composition::{decode_z, encode_z, Composition};
pub use error::{Error, Result};
pub use poly::{decode_zpoly, encode_zpoly, Poly, WordPoly, ZPoly};
pub use rational::Rational;
pub use shuffle::{shuffle_compositions, shuffle_monomials, shuffle_words, shuffle_xy, shuffle_z};
pub use word::{Letter, Word};

#[cfg(test)]
mod thread_safety {
    // every public value type must be freely transferable across threads
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_are_send_and_sync() {
        assert_send_sync::<crate::Word>();
        assert_send_sync::<crate::Composition>();
        assert_send_sync::<crate::Rational>();
        assert_send_sync::<crate::WordPoly>();
        assert_send_sync::<crate::ZPoly>();
        assert_send_sync::<crate::bigfloat::BigFloat>();
    }
}
