//! Exact-arithmetic engine for cluster algebras of finite and infinite rank,
//! specialised to the coordinate ring of the Sato-Segal-Wilson Grassmannian.
//!
//! The crate is organised in layers:
//!
//! * [`registry`] and [`laurent`] provide the arithmetic substrate: a global
//!   variable registry and sparse multivariate Laurent polynomials with exact
//!   rational coefficients.
//! * [`seed`] implements seeds, mutation, admissible sequences, exchangeably
//!   connected components, similarity and melting-morphism verification.
//! * [`grassmann`] holds the partition/Maya/Frobenius combinatorics, weak
//!   separation, rectangle seeds, windows of the infinite quiver, r-maps,
//!   Pluecker relation generators, the minors oracle, square moves and
//!   Laurent expansions of Pluecker variables.
//! * [`indcolimit`] materialises finite windows of ind-seeds from directed
//!   systems of finite seeds, with attainment and sign-alignment
//!   certificates.
//! * [`schurkp`] covers symmetric functions in the power-sum basis, Schur
//!   expansions, tau-function coefficient data, Grassmannian points and the
//!   KP/Giambelli/positivity checks.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod grassmann;
pub mod indcolimit;
pub mod laurent;
pub mod par;
pub mod registry;
pub mod schurkp;
pub mod seed;

pub use laurent::{LaurentError, LaurentPoly, Monomial, Rational};
pub use registry::VarId;
