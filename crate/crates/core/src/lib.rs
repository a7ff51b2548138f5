//! Residue-constrained standard Young tableaux and the basic representation
//! of affine `sl_2`, in exact arithmetic.
//!
//! The crate counts tableaux with a prescribed residue word in two
//! independent ways (brute force in [`tableaux`], Fock-space operators in
//! [`fock`]), models the basic representation as polynomials in
//! `p_1, p_3, p_5, ...` ([`polyrep`]), and checks the 2-adic divisibility of
//! `sum_lambda C_2(v, lambda) C_2(w, lambda)` by `2^{n - a(n)}` together with
//! the lattice statements behind it ([`delta`], [`experiments`]).

pub mod arith;
pub mod cli;
pub mod delta;
pub mod error;
pub mod experiments;
pub mod fock;
pub mod gf2;
pub mod partitions;
pub mod polyrep;
pub mod tableaux;
mod traverse;

pub use arith::{Rational, Valuation};
pub use error::{Error, Result};
pub use fock::FockVector;
pub use partitions::{Cell, Partition};
pub use polyrep::OddPoly;
pub use tableaux::{ResidueWord, Tableau};
