//! Finite-group computations for left braces and Hopf-Galois structure counts.
//!
//! The crate is organized bottom-up:
//!
//! * [`group`] — immutable finite groups given by full Cayley tables, with
//!   cyclic / direct / semidirect constructors and element-level queries.
//! * [`subgroup`] / [`morphism`] — subgroup lattices, quotients and
//!   homomorphisms between table groups.
//! * [`aut`] / [`iso`] — automorphism groups as faithful permutation
//!   actions, and isomorphism testing for small orders.
//! * [`holomorph`] — Hol(N) = N ⋊ Aut(N) for abelian N, enumeration of its
//!   regular subgroups and their conjugacy classes under Aut(N).
//! * [`brace`] — left braces as a pair of compatible group tables on one
//!   carrier, built from regular subgroups, with products and decomposition.
//! * [`tau`] — morphisms τ: F → Z_p^* and their classification up to
//!   conjugation, including the stabilizer sets S₀.
//! * [`counting`] — brace censuses, automorphism-order formulas, Byott's
//!   formula and the Hopf-Galois structure tables.

pub mod arith;
pub mod aut;
pub mod brace;
pub mod counting;
pub mod error;
pub mod group;
pub mod holomorph;
pub mod iso;
pub mod morphism;
pub mod subgroup;
pub mod tau;

pub use aut::AutomorphismGroup;
pub use brace::{BraceMap, LeftBrace};
pub use counting::{BraceCensus, HgsCensus};
pub use error::Error;
pub use group::FiniteGroup;
pub use holomorph::{HolomorphGroup, RegularClass, SearchLimits};
pub use iso::Order12Type;
pub use morphism::GroupMap;
pub use subgroup::Subgroup;
pub use tau::{TauClass, TauMorphism, UnitsModP};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
