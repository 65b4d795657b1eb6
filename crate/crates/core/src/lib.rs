//! Exact computations for the multispecies partially asymmetric exclusion
//! process on an open segment.
//!
//! - [`polyring`]: Laurent polynomials in `alpha`, `beta`, `q` with rational
//!   coefficients.
//! - [`pasep`]: the process as an explicit Markov chain per sector, with an
//!   exact stationary solver.
//! - [`ansatz`]: the infinite transfer matrices, their sparse products and an
//!   entrywise relation checker.
//! - [`rhombic`]: rhombic diagrams, tilings, fillings and their weights.
//! - [`ratchain`]: a Markov chain on tableau classes that projects onto the
//!   two-species process.
//!
//! ```
//! use kpasep::pasep::{stationary_exact, RateParams, Sector};
//! use kpasep::polyring::{assign_abq, rat};
//! use kpasep::rhombic::{weight, z};
//!
//! let sector = Sector(vec![1]);
//! let params = RateParams::uniform(2, rat(1, 2), rat(1, 3), rat(1, 5));
//! let pi = stationary_exact(3, &sector, &params).unwrap();
//! let at = assign_abq(rat(1, 2), rat(1, 3), rat(1, 5));
//! let zv = z(3, &sector).unwrap().eval(&at).unwrap();
//! for (w, p) in &pi {
//!     assert_eq!(*p, weight(w).eval(&at).unwrap() / &zv);
//! }
//! ```

pub mod ansatz;
pub mod error;
pub mod pasep;
pub mod polyring;
pub mod ratchain;
pub mod rhombic;

pub use error::{Error, Result};

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod book_introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/polynomials.md")]
mod book_polynomials {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/pasep.md")]
mod book_pasep {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/matrix-ansatz.md")]
mod book_matrix_ansatz {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/tableaux.md")]
mod book_tableaux {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/flips.md")]
mod book_flips {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/rat-chain.md")]
mod book_rat_chain {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
