//! Exact computations around the Milnor-Witt motives of Grassmannians and
//! complete flag varieties.
//!
//! The crate is organised bottom-up:
//!
//! * [`tableau`] checkerboard Young tableaux, white-box addition and the
//!   irredundant/full/even classification;
//! * [`schubert`] cycles on the Schubert basis, the combinatorial `Sq^2`,
//!   kernel/image bases and the doubling map;
//! * [`symfunc`] the determinantal Schur basis `x_Λ`, Pieri products and the
//!   `Sq^2` derivation on symmetric polynomials;
//! * [`motive`] summand lists, Witt weights and eta multiplicities;
//! * [`chow_witt`] eta classes and additive Chow-Witt bases;
//! * [`flag`] the mod-2 coinvariant algebra of the complete flag variety;
//! * [`verify`] the invariant suites behind the `verify` CLI command.
//!
//! All arithmetic is exact: integers are arbitrary precision, mod-2 linear
//! algebra uses packed bit matrices ([`gf2`]) and lattice comparisons go
//! through Hermite normal forms ([`lattice`]).

pub mod chow_witt;
pub mod error;
pub mod flag;
pub mod gf2;
pub mod lattice;
pub mod motive;
pub mod schubert;
pub mod symfunc;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use tableau::{Grassmannian, Shape, Tableau, Truncation, Twist};

/// Version string embedded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
