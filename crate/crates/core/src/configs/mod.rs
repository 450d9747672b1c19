//! Partition-side objects: staircase partitions, overpartitions, half configurations
//! and general configurations of arrows, with their weights, local moves and bijections.
//!
//! - [`DeltaConfig`]: a partition inside a staircase plus row and column arrows
//! - [`psi`], [`phi`]: the bijection built from the closures of [`Move`]
//! - [`involution_f`]: the sign-reversing involution on the local-condition family
//! - [`HalfConfig`], [`psi1`], [`phi1`]: half configurations and overpartitions
//! - [`delta_plus`], [`delta_minus`], [`half_configs`]: enumeration and weight sums

mod config;
mod enumerate;
mod half;
mod miniature;
mod moves;
mod partition;

pub use config::{Arrow, ArrowKind, DeltaConfig, Orientation, WeightScheme};
pub use enumerate::{
    delta_minus, delta_minus_sum, delta_plus, delta_plus_sum, delta_plus_sum_truncated,
    for_each_delta_plus, general_configs, half_configs, half_sum, overpartitions, ConfigFamily,
};
pub use half::{phi1, psi1, HalfConfig};
pub use miniature::{
    fixed_points, involution_f, is_delta_minus, is_embedded_previous, miniatures, toggle_site,
    Miniature, MiniatureClass,
};
pub use moves::{
    apply_once, closure, closure_chain, closure_in_order, phi, phi_trace, psi, psi_trace, Move,
    ScanOrder, PHI_STEPS, PSI_STEPS,
};
pub use partition::{
    overpartition_involution, overpartitions_in_staircase, partitions_in_staircase, transpose,
    Overpartition,
};
