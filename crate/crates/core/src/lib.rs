//! Tournaments built from total orders by reversing pairings and
//! quasi-pairings.
//!
//! The crate is `no_std` (it needs `alloc`). Vertices are always the
//! integers `0..n` with `n <= 64`, and vertex subsets are 64-bit masks.
//!
//! * [`tournament`]: tournaments, arc reversal, modules, indecomposability,
//!   canonical forms.
//! * [`pairings`]: pair families, pairings, quasi-pairings, irreducibility.
//! * [`comodules`]: co-modules of tournaments, the closed forms for total
//!   orders, transversals.
//! * [`enumeration`]: lexicographic generators for (partial) pairings and
//!   (partial) quasi-pairings, plus the indecomposability census.
//! * [`theorems`]: both sides of each characterization as predicates, and
//!   exhaustive verification over enumerated instances.
//!
//! ```
//! use revtour_core::{PairFamily, QuasiPairing, Tournament};
//! use revtour_core::theorems::{verify_range, TheoremId};
//!
//! let w5 = Tournament::transitive(5)
//!     .reverse_pairs(&PairFamily::new(5, [(0, 2), (1, 4)])?)?;
//! assert!(w5.is_indecomposable());
//!
//! let q = QuasiPairing::try_from(PairFamily::new(5, [(0, 2), (2, 4), (1, 3)])?)?;
//! assert!(q.is_irreducible());
//! assert_eq!(q.v_hat(), 2);
//!
//! let report = verify_range(TheoremId::Theorem3, 5, 8)?;
//! assert!(report.passed());
//! # Ok::<(), revtour_core::Error>(())
//! ```

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod comodules;
pub mod enumeration;
pub mod pairings;
pub mod theorems;
pub mod tournament;
mod vertex_set;

use core::fmt;

pub use comodules::ComoduleFamily;
pub use enumeration::{EnumFilter, EnumKind, EnumSpec};
pub use pairings::{Pair, PairFamily, Pairing, QuasiAnatomy, QuasiPairing};
pub use theorems::{TheoremId, TheoremInstance, VerificationReport};
pub use tournament::{CanonicalForm, Tournament};
pub use vertex_set::VertexSet;

/// Largest vertex count a [`Tournament`] or [`VertexSet`] can hold.
pub const MAX_VERTICES: usize = 64;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex is outside `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// More vertices than [`MAX_VERTICES`].
    TooManyVertices(usize),
    /// A brute-force routine was called above its size guard.
    GuardExceeded {
        what: &'static str,
        n: usize,
        max: usize,
    },
    /// A pair `{x, x}`.
    DegeneratePair(usize),
    /// The same pair listed twice.
    DuplicatePair(Pair),
    /// A family that is not a pairing.
    NotAPairing,
    /// A family that is not a quasi-pairing.
    NotAQuasiPairing,
    /// Blocks that do not partition the given set.
    NotAPartition,
    /// A vertex asked about that is not covered by the family.
    NotInSupport(usize),
    /// A count that must be even was odd.
    OddCount(usize),
    /// A parameter below the minimum its formula allows.
    BelowMinimum {
        what: &'static str,
        n: usize,
        min: usize,
    },
    /// Two objects with different ambient vertex counts were combined.
    AmbientMismatch { expected: usize, found: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} is out of range for n = {n}")
            }
            Error::TooManyVertices(n) => {
                write!(f, "{n} vertices exceeds the maximum of {MAX_VERTICES}")
            }
            Error::GuardExceeded { what, n, max } => {
                write!(f, "{what}: n = {n} exceeds the guard n <= {max}")
            }
            Error::DegeneratePair(x) => write!(f, "pair {x}-{x} has equal endpoints"),
            Error::DuplicatePair(p) => write!(f, "pair {p} is listed twice"),
            Error::NotAPairing => f.write_str("family is not a pairing"),
            Error::NotAQuasiPairing => f.write_str("family is not a quasi-pairing"),
            Error::NotAPartition => f.write_str("blocks do not partition the set"),
            Error::NotInSupport(x) => write!(f, "vertex {x} is not covered by the family"),
            Error::OddCount(m) => write!(f, "m = {m} must be even"),
            Error::BelowMinimum { what, n, min } => {
                write!(f, "{what}: n = {n} is below the minimum {min}")
            }
            Error::AmbientMismatch { expected, found } => {
                write!(f, "ambient size mismatch: expected {expected}, found {found}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn check_guard(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::GuardExceeded { what, n, max })
    } else {
        Ok(())
    }
}
