//! Closed forms, functional equations, truncated products and Hankel
//! determinants, each paired with the continued fraction it should reproduce.
//!
//! - [`rhs_touchard`], [`rhs_qsecant`], [`rhs_jtp`], [`mu_rhs`]: ballot-weighted double sums
//! - [`genocchi`], [`genocchi_rhs`]: q-Genocchi numbers and their two closed forms
//! - [`verify_functional_equation`]: residuals of the `f(z) = head + c z f(q^m z)` equations
//! - [`truncated_products`], [`jacobi_cube_limit_check`]: products modulo `q^K`
//! - [`egf_check_cos`], [`egf_check_genocchi`], [`laplace_check`]: checks at `q = 1`
//! - [`hankel_check`]: Hankel determinant product formulas

mod egf;
mod funeq;
mod genocchi;
mod hankel;
mod products;
mod sums;

pub use egf::{
    cos_ratio_moments, egf_check_cos, egf_check_genocchi, genocchi_egf_values, laplace_check,
    laplace_sides,
};
pub use funeq::{
    f_series_with, funeq_series, verify_f_equation_with, verify_functional_equation, FunEq,
};
pub use genocchi::{
    genocchi, genocchi_rhs, genocchi_sequence, p_k, w_k, y_k, y_k_with, GenocchiForm, GenocchiPair,
};
pub use hankel::{
    hankel_check, hankel_det, hankel_product, moments, recover_lambdas, shifted_hankel_product,
    HankelFamily,
};
pub use products::{jacobi_cube_limit_check, truncated_products, Product};
pub use sums::{
    e_ab, e_ab_sequence, gauss_sum, h_series, mu, mu_is_positive_regime, mu_rhs, mu_sequence,
    rhs_jtp, rhs_qsecant, rhs_touchard, t_ab, t_ab_sequence, theta_sum, ThetaSum,
};
