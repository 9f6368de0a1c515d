//! Polynomial rings, free modules and their monomial orders.

mod module;
mod monomial;
mod parse;
mod polynomial;

pub use module::{
    FreeModule, GradedFreeModule, ModuleElement, ModuleError, ModuleMonomial, ModuleOrder,
    PositionRule, SchreyerFrame,
};
pub use monomial::{Exponents, Monomial, MonomialOrder, UnknownOrder};
pub use parse::{format_polynomial_file, parse_polynomial_file, ParseError, PolynomialFile};
pub use polynomial::{Polynomial, Ring, RingError, Term};
