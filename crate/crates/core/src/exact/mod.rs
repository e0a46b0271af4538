//! Exact arithmetic: rationals, Q(zeta_9), polynomials and linear algebra.

pub mod cyclo;
pub mod field;
pub mod linalg;
pub mod multipoly;
pub mod poly;
pub mod rat;
pub mod ratfunc;

pub use cyclo::{k_elem, parse_k, CycNum, KView};
pub use field::{Field, Fp};
pub use multipoly::MultiPoly;
pub use poly::{qpoly, rational_roots, resultant, QPoly, UniPoly};
pub use rat::Rat;
pub use ratfunc::RatFunc;
