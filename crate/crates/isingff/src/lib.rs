//! Exact construction and verification of the factorized diagonal Ising form factors
//! `f^(n)_{N,N}(t)` as palindromic-polynomial combinations of `F_N` and `F_(N+1)`.

pub mod arith;
pub mod error;
pub mod diffop;
pub mod formfactor;
pub mod hyper;
pub mod oracle;
pub mod report;
pub mod seq;
pub mod verify;

pub use error::{Error, Result};
