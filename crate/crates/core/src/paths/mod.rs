//! Marked Dyck and Schröder paths.
//!
//! - [`LatticePath`], [`Step`], [`PathKind`]: paths and their families, with a one-letter text encoding
//! - [`enumerate`]: streaming lexicographic enumeration
//! - [`WeightSeq`], [`WeightPair`], [`path_weight`], [`weight_sum`]: height-dependent weights
//! - [`marked_peak_involution`], [`penaud_decompose`]: the sign-reversing involution and the prefix/core split

mod enumerate;
mod involution;
mod path;
mod weights;

pub use enumerate::{enumerate, Paths};
pub use involution::{marked_peak_involution, penaud_decompose, PrefixCore};
pub use path::{LatticePath, PathKind, Step};
pub use weights::{path_weight, weight_sum, WeightPair, WeightSeq, DEFAULT_SIZE_LIMIT};
