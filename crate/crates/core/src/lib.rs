//! Exact computations around the quintic threefold and its mirror.
//!
//! The crate is organised by subject:
//!
//! - [`exactnum`]: rationals, `Q[a]/(a^N)`, `Q(zeta_5)` and truncated power series
//! - [`linalg`]: exact matrices, Smith normal form, integer kernels
//! - [`picard_fuchs`]: the quintic Picard-Fuchs operator, Frobenius solutions, monodromy
//! - [`enumerative`]: mirror map, Yukawa coupling, instanton numbers, quantum ring
//! - [`toric`]: lattice polytopes, polar duality, lattice points, Gorenstein witnesses
//! - [`glsm`]: exponent matrices, charge factorizations and the transpose mirror
//! - [`kontsevich`]: cohomology of the quintic, Todd class, the twist and spherical matrices
//! - [`syz`]: vertex combinatorics of torus fibrations
//!
//! Built-in data for the quintic pair lives in [`quintic`].

pub mod enumerative;
pub mod exactnum;
pub mod glsm;
pub mod kontsevich;
pub mod linalg;
pub mod picard_fuchs;
pub mod quintic;
pub mod syz;
pub mod toric;

pub use exactnum::{CyclotomicElement, NilpotentElement, Rational, Ring, TruncatedSeries};
pub use linalg::{ExactMatrix, IntMatrix};
