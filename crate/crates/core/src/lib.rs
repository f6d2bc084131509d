//! Exact Lie-closure engine for the single-mode skew-hermitian Weyl algebra,
//! with subalgebra enumeration and classification, an Igusa-type infiniteness
//! test, Wei–Norman factor solvers and a truncated Fock-space oracle.

pub mod classify;
pub mod enumerate;
pub mod error;
pub mod fock_oracle;
pub mod igusa;
pub mod lie_engine;
pub mod linalg;
pub mod wei_norman;
pub mod weyl_core;

pub use error::Error;
pub use lie_engine::{lie_closure, Budget, ClosureOutcome, LieSpan};
pub use weyl_core::{
    chi, esign, monomial, named, theta, GaussianRational, MultiIndex, Rational, Sign, SkewKey, SkewPoly, Subspace, WeylPoly,
};
