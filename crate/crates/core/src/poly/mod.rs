//! Exact polynomial arithmetic and closed-form product formulas.

pub mod formulas;
mod qpoly;
mod sparse;

pub use formulas::{
    asm_number, carlitz_riordan, catalan_product, closed_form, q_binomial_product, q_factorial_product,
    three_color_product, tspp_number, ClosedForm, Family,
};
pub use qpoly::QPoly;
pub use sparse::{tournament_gf, Monomial, SparsePoly};
