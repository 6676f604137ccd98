//! Finite quandles as operation tables, the Galkin construction over finite
//! abelian groups, and knot colorings from braid closures.
//!
//! The crate is organised around [`QuandleTable`]: every constructor emits one
//! and every predicate, search and coloring count consumes one.
//!
//! - [`abelian`]: finite abelian groups in invariant-factor form, automorphisms
//!   and pointed-isomorphism decisions.
//! - [`quandle`]: axiom checking, property predicates, duals, isomorphism
//!   search, good involutions, standard constructors.
//! - [`galkin`]: the quandles `G(A, c1, c2)` on `Z3 x A`, their normalisation,
//!   classification and closed-form properties.
//! - [`enumeration`]: census of connected quandles of small order.
//! - [`knots`]: braid words, coloring counts, knot determinants.
//! - [`counting`]: closed-form class counts and their cross-check.

pub mod abelian;
pub mod counting;
pub mod enumeration;
mod error;
pub mod galkin;
pub mod knots;
mod limits;
pub mod linalg;
pub mod quandle;

pub use abelian::{Automorphism, GroupElement, InvariantFactors, PointedGroup};
pub use error::{AxiomViolation, Error, Result};
pub use galkin::GalkinSpec;
pub use knots::{BraidWord, KnotDiagram, KnotRecord};
pub use limits::Limits;
pub use quandle::{IsoWitness, PropertyReport, QuandleTable};
