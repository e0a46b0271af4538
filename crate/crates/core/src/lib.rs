//! Exact computations for a level-9 modular curve: the group G in SL2(Z/9), Siegel-unit
//! q-expansions, the degree-27 cover of the j-line, the auxiliary genus-3 curve, Weierstrass
//! curve tools and the integral-value search.
#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cover;
pub mod curves;
pub mod diophantine;
pub mod error;
pub mod exact;
pub mod modgroup;
pub mod qseries;
pub mod reference;
pub mod units;

pub use error::{Error, Result};
