//! Exact-arithmetic workbench for the simultaneous SL(3)-invariants of
//! ternary quadratic forms, built on the Jordan algebra structure of
//! symmetric 3x3 matrices.
//!
//! The crate is organized as a set of labs:
//!
//! - [`jordan`]: the algebra (det, adjugate, cross, trilinear form, group
//!   action, one-parameter subgroups);
//! - [`generators`]: explicit generator invariants for 1..=5 forms,
//!   invariance and multihomogeneity testing, the pencil map;
//! - [`dims`]: exact graded dimensions via sl(3) derivation kernels and the
//!   Poincaré series of the three-forms algebra;
//! - [`relation`]: the cubic relation satisfied by the degree-6 generator
//!   over the ten cubic ones, and the normal-form identities behind it;
//! - [`umbral`]: the symbolic bracket calculus and its evaluation operator;
//! - [`nullcone`]: nilcone equations and constructive one-parameter
//!   subgroup witnesses.

pub mod error;
pub mod scalar;
pub mod jordan;
pub mod poly;
pub mod expr;
pub mod generators;
pub mod dims;
pub mod relation;
pub mod umbral;
pub mod nullcone;
pub mod textio;

pub use error::CoreError;
pub use jordan::{GroupElement, OneParamSubgroup, SymMat3};
pub use scalar::{Field, Fp, Int, PrimeCtx, Rat, Ring, PRIME_A, PRIME_B, PRIME_C};
