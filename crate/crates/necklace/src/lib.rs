//! Exact counting and enumeration of necklaces and bracelets with a
//! prescribed number of beads of each color.
//!
//! A *necklace* is a coloring of `N` beads on a circle considered up to
//! rotation; a *bracelet* is additionally considered up to reflection. Given
//! per-color bead counts `(n_1, …, n_m)`, this crate computes the number of
//! distinct necklaces or bracelets three independent ways:
//!
//! - [`closedform`] — constant-size divisor sums over exact big integers;
//!   the production path, comfortable at bead counts in the tens of
//!   thousands.
//! - [`cycleindex`] — full expansion of the relevant cycle-index polynomial
//!   and coefficient extraction; an oracle for small `N`.
//! - [`orbits`] — enumeration of every arrangement with canonical-form
//!   deduplication; a second, independent oracle that can also list one
//!   representative per orbit.
//!
//! ```
//! use necklace::{ColorMultiplicities, count_cyclic, count_dihedral, Mode};
//!
//! let n = ColorMultiplicities::new(&[3, 6]).unwrap();
//! assert_eq!(count_cyclic(&n).unwrap().to_string(), "10");
//! let bracelets = count_dihedral(&n, Mode::Corrected).unwrap();
//! assert_eq!(bracelets.to_string(), "7");
//! ```

pub mod closedform;
pub mod cycleindex;
pub mod numtheory;
pub mod orbits;

mod error;

pub use closedform::{
    classify_dihedral_case, count_cyclic, count_dihedral, reduce_by_divisor, ColorMultiplicities,
    CountValue, DihedralCase, Mode, ReducedTuple,
};
pub use error::{Error, Result};
pub use numtheory::Count;
pub use orbits::{canonical_form, count_orbits, representatives, NecklaceWord, SymmetryGroup};

// The guide's code blocks double as doctests so they can never drift from
// the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/necklaces.md")]
    mod necklaces {}
    #[doc = include_str!("../../../book/src/bracelets.md")]
    mod bracelets {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/performance.md")]
    mod performance {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
