//! Hilbert series of graded algebras modulo ideals of generic forms.
//!
//! The crate has three layers:
//!
//! * exact series arithmetic and the closed-form "expected" series for five
//!   algebra families ([`series`], [`bigraded`], [`paths`]),
//! * an empirical engine that computes actual Hilbert series of quotients by
//!   rank computations over a prime field ([`engine`], [`forms`], [`linalg`]),
//!   plus exact monomial-ideal machinery ([`ideals`]),
//! * a harness that replays every desk-scale-checkable claim by comparing the
//!   two ([`harness`]).
//!
//! All computations are exact (big integers for series, modular arithmetic
//! for ranks); there is no floating point anywhere. Every randomized
//! computation is deterministic given its seed.

pub mod bigraded;
pub mod engine;
pub mod error;
pub mod field;
pub mod forms;
pub mod harness;
pub mod ideals;
pub mod linalg;
pub mod monomial;
pub mod paths;
pub mod series;
pub mod speclang;

pub use error::{Error, Result};
pub use field::FieldSpec;
pub use series::{DegreeSequence, TruncatedSeries};
