//! Exact arithmetic for tropical (min-plus) linear algebra over `Z` and
//! `Z ∪ {+∞}`.
//!
//! The crate is organized around a small web of mutually reducible problems:
//!
//! - solvability of one-sided tropical systems ([`TropicalSystem`]) and
//!   two-sided min-plus systems ([`TwoSidedSystem`]),
//! - the max-atom problem ([`maxatom`]), which the tropical solver
//!   ([`reductions::solve_tropical`]) reduces to,
//! - mean payoff games ([`mpgame`]), decided independently by value iteration,
//! - prevariety dimension via star tables and block triangular forms
//!   ([`dimension`]), with NP certificates and Vertex-Cover hard instances,
//! - implication/equivalence of systems as Turing reductions to solvability
//!   ([`reductions::implies`], [`reductions::equivalent`]).
//!
//! Everything is cross-checked against the brute-force references in
//! [`oracles`], which scan bounded solution grids exhaustively.
//!
//! All numeric code is generic over a signed integer scalar (see [`Scalar`]).
//! The canonical instantiation is arbitrary precision ([`Int`]): the reduction
//! constructions scale entries by factors like `300·M·n` and compose, so fixed
//! 32-bit width would overflow on modest inputs. `i64` also implements
//! [`Scalar`] and is convenient when values provably stay small.

pub mod dimension;
mod error;
mod extint;
pub mod maxatom;
pub mod mpgame;
pub mod oracles;
pub mod reductions;
mod scalar;
mod system;

pub use error::{Error, Result};
pub use extint::ExtInt;
pub use scalar::Scalar;
pub use system::{Domain, Relation, StarTable, SystemRef, TropicalSystem, TwoSidedSystem};

/// Canonical exact scalar; the CLI and file formats use this instantiation.
pub type Int = num_bigint::BigInt;

/// Exact rational built on [`Int`] (mean payoff game values).
pub type Rational = num_rational::Ratio<Int>;

/// Entry of a system over the canonical scalar.
pub type Ext = ExtInt<Int>;

/// Budget for exhaustive scans, in candidate evaluations.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
