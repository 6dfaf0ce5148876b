//! Exact computations in the category of graded matrix factorizations of a
//! quasi-homogeneous polynomial, with the full toolkit for `f = x^h`:
//! Hom spaces, Krull-Schmidt decomposition, Serre duality, the Euler and
//! Cartan lattices, and the stability condition given by phases and the
//! cyclotomic central charge.

pub mod algebra;
pub mod decompose;
pub mod error;
pub mod homalg;
pub mod mfcore;
pub mod quiverlat;
pub mod serial;
pub mod stability;

pub use error::{Error, Result};
