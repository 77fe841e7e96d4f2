//! Rényi information measures and partial orders for binary-input
//! symmetric-output (BISO) channels.
//!
//! The crate computes Sibson and Arimoto Rényi mutual information, the
//! α-capacity and its pair-mass statistic d_C, and α-Lorenz curves, and
//! decides the α-more-capable partial order between channels of equal
//! α-capacity — either through the Lorenz-dominance sufficient condition
//! (whose direction depends on α and reverses on 1/3 < α < 1/2) or by
//! exhaustive evaluation on an input grid. Calibration routines produce
//! the capacity-matched BSC and BEC, which are extremal for the order.
//!
//! All values are in nats. Everything is plain, deterministic `f64` math:
//! pure functions over immutable channel values, safe to call from any
//! number of threads.
//!
//! ```
//! use biso_order::{AlphaParam, BisoChannel, alpha_capacity, sibson_mi};
//!
//! let ch = BisoChannel::bsc(0.1).unwrap();
//! let alpha = AlphaParam::new(2.0).unwrap();
//! let cap = alpha_capacity(&ch, &alpha).unwrap();
//! let at_half = sibson_mi(&ch, 0.5, &alpha).unwrap();
//! assert!((cap.c_alpha - at_half.value).abs() < 1e-12);
//! ```

pub mod channel;
pub mod error;
pub mod measures;
pub mod oracle;
pub mod ordering;
pub mod renyi;
pub mod suite;

pub use channel::BisoChannel;
pub use error::{Error, Result};
pub use measures::{
    alpha_capacity, arimoto_conditional_entropy, arimoto_mi, shannon_mi, sibson_mi,
    sibson_mi_general, special_mi, tilt, CapacityValue, MiValue, MiVariant, SpecialAlpha,
};
pub use ordering::{
    calibrate, common_refinement, extremality_report, lorenz_dominates, match_to_capacity,
    more_capable_grid, regime, sufficient_condition, ComparisonReport, Dominance,
    ExtremalityReport, Family, LorenzCurve, Method, OrderDirection, OrderRegime, Verdict,
};
pub use renyi::{
    binary_convolve, binary_entropy, conditional_renyi_divergence, kl_divergence, pow_sum,
    pow_sum_inv, renyi_divergence, AlphaParam, FiniteDist,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
