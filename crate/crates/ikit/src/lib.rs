//! Computing with finite posets, complete lattices, Galois adjunctions, and
//! interior operators.
//!
//! The crate verifies and constructs, on finite carriers:
//!
//! - posets, complete lattices, and monotone maps ([`order`]);
//! - adjoint pairs and triples between lattices, including synthesis of
//!   missing adjoints from preservation properties ([`adjunction`]);
//! - the image / inverse-image / universal-image triple of a finite function
//!   acting on powersets ([`subsets`]);
//! - interior operators on arbitrary lattices: the operator lattice,
//!   continuity, initial operators, open elements ([`interior`]);
//! - Kuratowski operators on powersets and their induced topologies,
//!   with exhaustive enumeration ([`kuratowski`]);
//! - sieves on finite categories and Grothendieck-topology extraction from
//!   open sieves ([`sieves`]);
//! - GL-monoids and graded fuzzy interior operators with their induced
//!   graded topologies ([`fuzzy`]).
//!
//! Every structure is validated on construction and immutable afterwards;
//! failed checks carry a minimal witness in the caller's element names.
//! The `ikit` binary drives the same checks from JSON manifest files; see
//! [`manifest`] and [`cli`].

pub mod adjunction;
pub mod catalog;
pub mod cli;
pub mod fuzzy;
pub mod interior;
pub mod kuratowski;
pub mod manifest;
pub mod order;
pub mod sieves;
pub mod subsets;

pub use adjunction::{AdjointPair, AdjointTriple};
pub use fuzzy::{FuzzyInterior, FuzzySpace, FuzzyTopology, GlMonoid};
pub use interior::InteriorOp;
pub use kuratowski::{KuratowskiOp, Topology};
pub use order::{CompleteLattice, FinPoset, Lattice, MonotoneMap};
pub use sieves::{FinCategory, GrothTopology, Sieve, SieveInteriorFamily};
pub use subsets::FinFunction;
