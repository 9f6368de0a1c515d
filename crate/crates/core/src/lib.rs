//! Exact Groebner bases, Schreyer syzygies, free resolutions and Hilbert
//! series over prime fields and the rationals.

pub mod coefficients;
pub mod division;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod polyring;
pub mod resolution;

pub use coefficients::{Field, PrimeField, PrimeFieldElement, RationalElement, Rationals};
pub use polyring::{Monomial, MonomialOrder, Polynomial, Ring};
