//! Exact computational core for legendrian subvarieties of projective space.
//!
//! Polynomials live over ℚ; a handful of eigenvalue computations extend to
//! the Gaussian rationals ℚ(i). The crate is `no_std` and only needs `alloc`.
#![no_std]
#![allow(clippy::needless_range_loop, clippy::type_complexity)]
extern crate alloc;

pub mod arith;
pub mod catalog;
pub mod classify;
pub mod groebner;
pub mod legendrian;
pub mod liealg;
pub mod linalg;
pub mod symplectic;
