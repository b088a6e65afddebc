//! Monomials, sparse homogeneous polynomials and their text format.

mod monomial;
mod parse;
mod poly;

pub use monomial::{
    binomial, default_var_names, dim_forms, monomial_basis, Monomial, MonomialIndex,
};
pub use parse::{parse_poly, parse_poly_in};
pub use poly::{random_linear_form, HPoly};
