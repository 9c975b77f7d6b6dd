//! Semistar operations on Dedekind domains with finitely many maximal ideals.
//!
//! Nonzero fractional modules are valuation vectors in `(Z ∪ {inf})^n`
//! ([`extvec`]); a semistar operation is a Moore family on the spectrum
//! ([`moore`], [`semistar`]). [`zadapter`] ties the vector model to the
//! integers localized at a finite set of primes.
//!
//! The `examples/` directory walks through each piece:
//!
//! * `table1_counts`: number of stars for spectra of size 1..5
//! * `valuation_vectors`: ideals of a localization of Z as vectors
//! * `star_algebra`: apply, order, meet, join, classification
//! * `dagger_closure`: the star generated by a set of modules
//! * `finite_type`: finite-type stars and overrings
//! * `lattice_shape_n2`: the seven stars on two points as a DOT diagram
//!
//! The `semistar` binary ([`cli`]) exposes the same operations.

pub mod cli;
pub mod error;
pub mod extvec;
pub mod format;
pub mod moore;
pub mod poset;
pub mod semistar;
pub mod subset;
pub mod verify;
pub mod zadapter;

pub use error::{Error, Result};
pub use extvec::{ExtInt, Spectrum, ValVector};
pub use moore::MooreFamily;
pub use semistar::{Label, Star};
pub use subset::Subset;
pub use zadapter::FracIdealSpec;
