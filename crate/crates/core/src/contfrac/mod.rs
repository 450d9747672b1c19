//! Continued fractions and the transformations between their expansions.
//!
//! - [`Family`]: the named coefficient sequences, behind the [`LambdaSequence`] trait
//! - [`eval_s_fraction`], [`eval_t_fraction`]: bottom-up series evaluation
//! - [`ballot`], [`s_coeffs_from_t`], [`t_coeffs_from_s`]: the moment transform
//! - [`contract_fraction`]: even and odd contractions
//! - [`Mobius2x2`]: matrices acting on series, with the tail recurrences

mod contraction;
mod fraction;
mod lambda;
mod mobius;
mod transform;

pub use contraction::{contract_fraction, Contraction};
pub use fraction::{eval_fraction_kind, eval_s_fraction, eval_t_fraction, fraction_coefficient};
pub use lambda::{
    Family, FnSequence, FractionKind, LambdaSequence, ListSequence, Overridden, Scaled,
};
pub use mobius::{
    lambda_matrix, m_matrix, mobius_apply, n_matrix, omega_matrix, p_matrix, r_matrix, s_matrix,
    verify_lambda_initial, verify_lambda_recurrence, verify_omega_initial, verify_omega_recurrence,
    Mobius2x2, Proportionality,
};
pub use transform::{ballot, s_coeffs_from_t, t_coeffs_from_s, verify_lagrange_identity};
