//! Exact computations around Demazure modules, fusion products and Q-systems
//! for current algebras.
//!
//! The crate is organised bottom-up:
//!
//! - [`root_system`]: Cartan data, positive roots and coroot pairings.
//! - [`characters`]: Laurent-polynomial characters, Freudenthal multiplicities,
//!   Weyl dimensions and decomposition into irreducibles.
//! - [`partitions`]: compatible partition tuples, `ξ(ℓ, λ)`, shapes and the
//!   composition sets `S(r, s)`.
//! - [`qsystem`]: the Q-system recursion solved in the character ring.
//! - [`demazure`]: the set `Γ` and Demazure dimensions via Kirillov–Reshetikhin
//!   factorisation.
//! - [`sl2_fusion`]: the monomial index sets and bigraded characters of
//!   `sl_2` fusion products.
//! - [`verify`]: sweep suites shared by the CLI.

pub mod characters;
pub mod demazure;
pub mod error;
pub mod partitions;
pub mod qsystem;
pub mod report;
pub mod root_system;
pub mod sl2_fusion;
pub mod verify;

pub use characters::{decompose_character, irreducible_character, weyl_dimension, LaurentCharacter};
pub use error::{Error, Result};
pub use report::Status;
pub use root_system::{Family, LieType, Root, RootSystem, Weight};
