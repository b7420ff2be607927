//! Exact-arithmetic machinery for weighted s-symbol encodings of the unit
//! interval and the Tribin-class continuous nowhere-monotonic functions
//! defined on top of them.
//!
//! The crate has four layers:
//!
//! * [`codes`]: alphabets, cylinder bases, and eventually periodic digit
//!   codes in canonical form, with lexicographic order and boundary-point
//!   duality.
//! * [`numsys`]: weighted representation systems with exact cylinder
//!   geometry, code valuation, greedy digitization, and projections between
//!   systems sharing an alphabet.
//! * [`tribin`]: the digit-transducer functions themselves, with evaluation,
//!   well-definedness sweeps, cylinder images, level sets, non-monotonicity
//!   witnesses, and variation lower bounds (exhaustive and dynamic-program
//!   routes).
//! * [`oracle`]: deliberately naive reference implementations used to
//!   cross-check everything above.
//!
//! Every quantity is an exact `BigRational`; there is no floating point in
//! any computation path, so coincidences at cylinder boundaries are decided
//! by equality rather than tolerance.
//!
//! With the default `parallel` feature the large enumerations (variation
//! sums, well-definedness sweeps) fan out over rayon; disabling the feature
//! falls back to sequential loops with identical results.

pub mod codes;
pub mod error;
pub mod numsys;
pub mod oracle;
pub mod tribin;

pub use codes::{Alphabet, Digit, DigitCode, Prefix};
pub use error::{Error, Result};
pub use numsys::{Cylinder, RepresentationSystem};
pub use tribin::{
    DualMismatch, LevelSetKind, LevelSetReport, MonotonicityWitness, Partition, TransducerRule,
    TribinConfig, VariationMethod, VariationReport, WellDefinedness,
};
