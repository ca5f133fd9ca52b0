//! Root-system combinatorics of ad-nilpotent ideals in parabolic subalgebras.
//!
//! * [`rootsys`]: root systems of types A–G with exact pairings, ε-coordinates
//!   for the classical types and Weyl-group actions on weights.
//! * [`poset`]: the dominance order on positive roots, `J`-antichains and
//!   `J`-ideals, nilpotence, abelian criteria, enumeration and closed-form
//!   counts.
//! * [`irreducible`]: the irreducible ad-nilpotent ideal of a parabolic, the
//!   four characterizations of the root sets that arise this way, and their
//!   classification.
//! * [`suites`]: named verification suites with scale caps, as run by the
//!   command-line tool.
//!
//! Heavy scans take an [`Exec`] so callers can choose between the rayon pool
//! and the current thread.

// Index loops mirror the matrix and coefficient notation they implement.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exec;
pub mod irreducible;
pub mod linalg;
pub mod poset;
pub mod report;
pub mod rootsys;
pub mod suites;

pub use error::{Error, Result};
pub use exec::Exec;
pub use rootsys::{Family, Root, RootId, RootSystem, RootSystemSpec, Weight};
