//! Verification kernel for finitely presented double, multiple and weak
//! multiple categories.
//!
//! The crate provides:
//!
//! * finite strict 2-categories with exhaustively checkable axioms
//!   ([`twocat`]);
//! * truncated multiple categories with explicit cell pools, validation,
//!   truncation/coskeleton functors and coskeletal dimension ([`multicat`]);
//! * the multiple category of quintets of a 2-category and its generalised
//!   form over a sequence of 2-functors ([`quintets`], [`genquintets`]);
//! * adjunction chains, mates and the induced multiple categories
//!   ([`adjunctions`]);
//! * chiral (weak) multiple categories, lax/colax morphisms between them
//!   and the comparison cells of projection functors ([`chiral`]);
//! * free double categories on category graphs and pseudo double algebras
//!   ([`pseudoalg`]);
//! * a serde document format for describing all of the above ([`doc`]).
//!
//! Every validator returns a [`report::ValidationReport`] listing each law
//! checked, the number of instances, and counterexample witnesses on
//! failure.  Checks are exact: laws are verified on every instance, either
//! directly or by a finite reduction that is itself checked.

pub mod adjunctions;
pub mod chiral;
pub mod doc;
pub mod error;
pub mod fixtures;
pub mod genquintets;
pub mod index;
pub mod multicat;
pub mod pseudoalg;
pub mod quintets;
pub mod report;
pub mod twocat;

pub use error::{KernelError, Result};
pub use report::{CheckMethod, CheckRecord, CheckStatus, ValidationReport};
