//! An exhaustive engine for finite category theory: pointwise left Kan
//! extensions of set-valued functors, transport of lax monoidal
//! structure along such extensions with certified uniqueness and
//! universal-property checks, and monoid-graded monoids and rings with
//! regrading as the concrete application.
//!
//! Everything is finite, enumerated, and immutable: categories are
//! composition tables, functors and transformations are index tables,
//! and every law the engine relies on is checked by exhaustive
//! enumeration rather than assumed. Colimits are computed by union-find
//! with canonical representatives, so all constructions are
//! bit-reproducible.
//!
//! The flagship pipeline collapses a graded monoid along a grading
//! homomorphism and certifies that the transported multiplication is
//! the only one compatible with the extension's universal cocone:
//!
//! ```
//! use kanext_core::graded::{graded_to_lax_functor, monoidal_functor_from_hom};
//! use kanext_core::monkan::extend_lax_monoidal;
//! use kanext_core::{FiniteMonoid, GradedMonoid, Limits, MonoidHom};
//!
//! // the Z2-graded monoid {e | x} with x * x = e, collapsed to one grade
//! let graded = GradedMonoid {
//!     grading: FiniteMonoid::cyclic(2),
//!     components: vec![kanext_core::SetObj::UNIT; 2],
//!     unit_elem: 0,
//!     mult: vec![vec![0]; 4],
//! };
//! let hom = MonoidHom::collapse(&graded.grading);
//!
//! let f = graded_to_lax_functor(&graded)?;
//! let g = monoidal_functor_from_hom(&hom)?;
//! let mk = extend_lax_monoidal(&f, &g, &Limits::default())?;
//!
//! // the extension carries the full two-element group multiplication
//! assert_eq!(mk.l_lax.mu_at(0, 0).table, vec![0, 1, 1, 0]);
//! assert!(mk.certificates.all_clean());
//! # Ok::<(), kanext_core::Error>(())
//! ```

mod enumerate;
pub mod corpus;
pub mod error;
pub mod fincat;
pub mod graded;
pub mod kan;
pub mod limits;
pub mod monkan;
pub mod monoidal;
pub mod report;
pub mod setskel;

pub use error::{Error, Result};
pub use fincat::{CommaCategory, FinCategory, FunctorData, NatTransData};
pub use graded::{FinAbGroup, FiniteMonoid, GradedMonoid, GradedRing, MonoidHom, Ring};
pub use kan::{ComparisonOutcome, KanResult, KanWitness};
pub use limits::Limits;
pub use monkan::{Certificates, MonoidalKanResult, UniquenessCertificate};
pub use monoidal::{
    LaxMonoidalFunctor, MonoidalFunctor, MonoidalNatTrans, MonoidalStructure,
};
pub use report::{ValidationReport, Violation};
pub use setskel::{ColimitWitness, SetFunctor, SetMap, SetNatTrans, SetObj};
