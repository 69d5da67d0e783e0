//! Legendre-symbol products over lattice regions, Jacobsthal-type character
//! sums, imaginary-quadratic class numbers, and a sweep engine that checks a
//! catalog of quadratic-residue identities against brute-force enumeration,
//! reporting counterexamples with witnesses.
//!
//! The central objects are products of Legendre symbols (f(i,j)/p) of a
//! binary form taken over the triangle 0 < i < j < p/2 or the square
//! i, j in [1,(p-1)/2], lattice counts of Gauss's-lemma type, the complete
//! character sums F_p(a_1,...,a_r), and class numbers h(D) computed by
//! reduced-form enumeration. The [`registry`] ties them together: each
//! cataloged identity pairs a claimed closed form with an independent
//! enumeration and can be swept over a prime range.
//!
//! ```
//! use legendre_products::{OddPrime, QuadraticForm, product_triangle, SignValue};
//!
//! let p = OddPrime::new(7).unwrap();
//! let f = QuadraticForm::new(1, 0, 1).unwrap(); // i^2 + j^2
//! let r = product_triangle(&f, p);
//! assert_eq!(r.value, SignValue::MINUS);
//! ```
//!
//! Runnable walkthroughs for each capability live in `examples/`; the thin
//! `legprod` binary exposes the same operations as subcommands.

// Parity and case splits are written the way the identities state them
// ((h+1)/2, n % 8 == 0, ...), not via div_ceil/is_multiple_of.
#![allow(clippy::manual_div_ceil, clippy::manual_is_multiple_of)]

pub mod arith;
pub mod charsums;
pub mod chi;
pub mod classnum;
pub mod cli;
pub mod error;
pub mod regions;
pub mod registry;

pub use arith::{
    is_biquadratic_residue, is_prime, least_abs_residue, least_residue, legendre, mod_pow,
    rational_residue, OddPrime, RationalResidue, SignValue,
};
pub use charsums::{
    char_sum, f_transform_check, interval_sum, legendre_product_interval, shift_param_k,
    shift_param_kprime, Fraction, ProperInterval, ShiftList, TransformCheck,
};
pub use classnum::{class_number, h_neg_4p, h_neg_p, mordell_parity, reduced_forms, Discriminant};
pub use error::{Error, Result};
pub use regions::{
    count_double, count_upper_left, gauss_set, l_set_size, m_set_size, nonresidue_count_gauss,
    product_linear_square, product_linear_square_fast, product_square, product_square_grouped,
    product_triangle, product_triangle_grouped, value_product_square, value_product_triangle,
    LinearForm, QuadraticForm, Region, RegionProductResult,
};
pub use registry::{
    catalog, equivalence_audit, list_theorems, primes_in_range, verify, Entry, EntryClass,
    Failure, TheoremId, VerificationReport, VerifyOptions,
};
