//! Exact computations in the Kauffman bracket skein algebra of the solid torus.
//!
//! The skein algebra of the annulus (equivalently, the solid torus) over
//! `Z[A, A^{-1}]` is a polynomial ring in the core curve `z`. Its standard
//! basis `e_0, e_1, e_2, ...` consists of the Jones-Wenzl-free "power" basis
//! defined by the Chebyshev-like recurrence `z * e_n = e_{n-1} + e_{n+1}`
//! together with the boundary values `e_0 = 1`, `e_1 = z`.
//!
//! On top of that algebra this crate computes, in exact arithmetic:
//!
//! * closed-form expansions of a `(p, q)` torus knot cabled by a basis
//!   element, as an element of the solid-torus algebra ([`cable`]),
//! * colored Jones polynomials of torus knots and of iterated torus cables
//!   via satellite evaluation ([`cable`]),
//! * brute-force Kauffman bracket state sums over planar and annular link
//!   diagrams, used as an independent oracle for the closed forms
//!   ([`oracle`]),
//! * numeric verification of root-of-unity identities behind the cabling
//!   formulas ([`roots`]).
//!
//! The `skein` binary exposes all of the above on the command line.

pub mod algebra;
pub mod cable;
pub mod cache;
pub mod cli;
pub mod laurent;
pub mod oracle;
pub mod roots;

pub use algebra::{SkeinElement, ZPolynomial};
pub use cable::{CableExpansion, CableParams};
pub use laurent::{ComplexValue, LaurentPoly};
pub use oracle::Diagram;
pub use roots::{CheckResult, RootContext};
