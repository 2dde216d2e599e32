//! Exact decomposition of `(L^{ω_n})^{⊗N}` for the odd orthogonal algebra
//! `so(2n+1)` and the probability measure it induces on dominant weights.
//!
//! The crate is organised around the pipeline
//!
//! * [`lattice`] — weight-lattice geometry of `B_n`: shifted `a`-coordinates,
//!   dominant-support enumeration, Weyl group (signed permutations);
//! * [`oracle`] — two independent multiplicity oracles (Weyl-antisymmetrised
//!   free-walk counts and the weight-diagram convolution recurrence) used to
//!   certify the closed form;
//! * [`exact`] — closed-form multiplicities, Weyl dimensions, the exact
//!   rational probability mass function and full decomposition tables, plus a
//!   log-space evaluation path for large tensor powers;
//! * [`asymptotics`] — the continuous limit density `φ` on the main Weyl
//!   chamber, its normalisation and the Macdonald-integral cross-checks;
//! * [`convergence`] — local ratio errors, orthotope probability gaps and
//!   seeded sampling from the exact measure.
//!
//! All exact arithmetic is arbitrary precision (`num::BigInt` /
//! `num::BigRational`); floating-point paths exist only where the exact path
//! would be wasteful and are tested against the exact one.

pub mod asymptotics;
pub mod convergence;
pub mod error;
pub mod exact;
pub mod lattice;
pub mod oracle;
pub mod quadrature;

pub use error::Error;
pub use lattice::{APoint, DominantWeight, Rank, SignedPermutation};

/// Crate-wide `Result` alias.
pub type Result<T> = std::result::Result<T, Error>;
