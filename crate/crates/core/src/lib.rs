//! Characteristic attribute sets of formal contexts and data-complexity
//! measures built on them.
//!
//! Given a binary context, the crate enumerates intents, pseudo-intents,
//! keys, passkeys and proper premises; classifies every attribute subset
//! into a grouped "descriptions" table; computes the linearity and
//! distributivity indices of the concept lattice; and compares the real
//! context against seeded randomizations.
//!
//! Index values and trial statistics are generic over [`Scalar`], which
//! covers `f32`, `f64` and exact rationals; the aliases below fix the
//! common choices.
//!
//! ```
//! use fca_core::{fixtures, charsets, lattice::ConceptLattice, ExactRatio};
//!
//! let ctx = fixtures::nominal_scale(3);
//! assert_eq!(charsets::enumerate_pseudo_intents(&ctx).len(), 3);
//! let lat = ConceptLattice::from_context(&ctx);
//! assert_eq!(lat.linearity::<ExactRatio>(), ExactRatio::new(7, 10));
//! ```

pub mod bitset;
pub mod charsets;
pub mod context;
pub mod descmap;
pub mod error;
pub mod fixtures;
pub mod lattice;
pub mod metrics;
pub mod num;
pub mod randomize;
pub mod report;

pub use bitset::{AttrSet, ObjSet};
pub use charsets::{CharClass, CharFlags, Implication};
pub use context::FormalContext;
pub use error::{Error, Result};
pub use lattice::ConceptLattice;
pub use metrics::Metric;
pub use num::Scalar;
pub use randomize::{Quartiles, RandomizationStrategy, TrialSummary};

/// Exact index values, e.g. `7/10` for the three-element nominal scale.
pub type ExactRatio = num_rational::Ratio<u64>;

pub type Quartiles32 = Quartiles<f32>;
pub type Quartiles64 = Quartiles<f64>;
pub type QuartilesExact = Quartiles<ExactRatio>;

pub type TrialSummary32 = TrialSummary<f32>;
pub type TrialSummary64 = TrialSummary<f64>;
pub type TrialSummaryExact = TrialSummary<ExactRatio>;
