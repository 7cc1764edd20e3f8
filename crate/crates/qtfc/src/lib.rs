//! Exact computation of q,t-Fuss-Catalan polynomials for finite complex
//! reflection groups, together with the combinatorial models (Fuss-Dyck
//! paths, filtered chains in root posets, extended Shi arrangements) that
//! conjecturally share the same generating functions.
//!
//! All arithmetic is exact: arbitrary-precision rationals for real groups
//! and cyclotomic fields `Q(zeta_k)` for the complex monomial groups
//! `G(k, p, l)`.

pub mod catalan;
pub mod coinv;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod groups;
pub mod linalg;
pub mod poly;
pub mod qt;
pub mod shi;
pub mod verify;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use error::{Error, Result};
pub use field::{Coeff, Rational};
pub use groups::{GroupElement, GroupSpec, NamedFamily};
pub use poly::{Monomial, MultiPoly};
pub use qt::{qt_bracket, LaurentQPoly, QTPoly, Specialization};

/// Sparse polynomial with rational coefficients (real groups).
pub type RatPoly = MultiPoly<Rational>;
/// Sparse polynomial with cyclotomic coefficients (complex groups).
pub type CycPoly = MultiPoly<Cyclotomic>;
