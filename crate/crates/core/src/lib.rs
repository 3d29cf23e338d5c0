//! Exact-arithmetic toolkit for certifying root bounds of b-functions of
//! invariant systems on semisimple Lie algebras and symmetric pairs.
//!
//! The crate is organized around six concerns:
//!
//! * [`exact`] — rational dense linear algebra (characteristic polynomials,
//!   kernels) used everywhere else. All arithmetic is exact; there is no
//!   floating point anywhere in this crate.
//! * [`weyl`] — the normal-ordered Weyl algebra over the rationals, with
//!   weighted filtration degrees, weighted Euler fields and the algebraic
//!   Fourier transform.
//! * [`quasib`] — quasi-b-function polynomials `b_N` for weighted Euler
//!   fields together with explicit left-ideal membership certificates, and
//!   the tameness predicates on (roots, trace, codimension) data.
//! * [`liealg`] — semisimple Lie algebras from Cartan matrices: root
//!   systems, Chevalley structure constants, adjoint matrices, Killing
//!   form, the discriminant, and sl2-representation combinatorics for
//!   type A nilpotent orbits.
//! * [`strata`] — the stratification of a semisimple algebra by closed
//!   symmetric root subsets and nilpotent orbits, the symmetric-pair
//!   analogue driven by descriptor data, and the per-stratum invariants.
//! * [`certify`] — assembles per-stratum records and global verdicts into
//!   serializable certificate reports.

pub mod certify;
pub mod exact;
pub mod liealg;
pub mod quasib;
pub mod strata;
pub mod weyl;

pub use exact::{QMatrix, Rat};
pub use weyl::{WeightVector, WeylElement};
