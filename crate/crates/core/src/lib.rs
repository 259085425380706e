//! Exact inverse Kazhdan–Lusztig polynomials `Q_G(t)` and inverse
//! Z-polynomials `Y_G(t)` of graphic matroids.
//!
//! Two families of routes are provided:
//!
//! - [`kls`] solves the defining recursion over compositions of an
//!   arbitrary small loopless multigraph. It is slow and serves as the
//!   oracle.
//! - [`fan`] and [`series`] compute the invariants of fan matroids through
//!   closed forms, linear recurrences, deletion recurrences and generating
//!   functions. These routes agree coefficient by coefficient.
//!
//! All arithmetic is exact ([`num_bigint::BigInt`] and
//! [`num_rational::BigRational`]).

pub mod error;
pub mod fan;
pub mod graph;
pub mod kls;
pub mod poly;
pub mod series;

pub use error::{Error, Result};
pub use graph::{Composition, Multigraph};
pub use poly::{IntPoly, Poly, RatPoly};
pub use series::USeries;
