//! Exact-arithmetic toolkit for braided vector spaces of diagonal type.
//!
//! A diagonal braiding on a vector space with basis `x_1, …, x_θ` is a matrix
//! `(b_ij)` of roots of unity acting by `c(x_i ⊗ x_j) = b_ij · x_j ⊗ x_i`.
//! This crate classifies such braidings and computes invariants of the
//! associated Nichols algebra `B(V)`:
//!
//! - [`cyclotomic`] — roots of unity as elements of ℚ/ℤ, cyclotomic integers
//!   ℤ\[ζ_N\], and exact (fraction-free) rank computation over ℚ(ζ_N);
//! - [`braiding`] — Cartan-type extraction, connected components, symmetry,
//!   and the FL-type decision procedures;
//! - [`cartan`] — generalized Cartan matrices, symmetrizers, finite-type
//!   recognition by two independent routes, positive-root enumeration, and
//!   the dimension / graded-dimension formulas;
//! - [`twisting`] — 2-cocycles on finite abelian groups, exponent-matrix
//!   twisting, and the symmetrization construction;
//! - [`realization`] — Yetter–Drinfeld realizations over ℤ/(p) and the full
//!   classification machinery for odd primes p;
//! - [`freebraided`] — the free braided algebra T(V), braided coproduct and
//!   adjoint, quantum Serre elements, primitivity checking, and Gaussian
//!   binomial identities;
//! - [`antisym`] — quantum antisymmetrizers S_n and graded dimensions of
//!   `B(V)` computed as rank S_n, the independent oracle for the dimension
//!   formula.
//!
//! Every quantity is exact: roots of unity are rational exponents, linear
//! algebra runs over ℤ\[ζ_N\] with exact zero tests, and dimensions are big
//! integers. No floating point anywhere.
//!
//! The crate is `no_std`-compatible (requires `alloc`). The `std` feature
//! (default) adds a process-wide cache of cyclotomic polynomial tables and
//! `std::error::Error` impls; without it the tables are recomputed per use.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod antisym;
mod arith;
pub mod braiding;
pub mod cartan;
pub mod cyclotomic;
mod error;
pub mod freebraided;
pub mod realization;
pub mod twisting;

pub use braiding::{BraidingMatrix, CartanTypeResult};
pub use cartan::GeneralizedCartanMatrix;
pub use cyclotomic::{CyclotomicInt, RootOfUnity};
pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
