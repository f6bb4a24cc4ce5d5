//! Executable mathematics for the category of partial bijections between
//! finite sets.
//!
//! Objects are [`FinSet`]s, morphisms are [`PBij`]s. On top of composition
//! and inversion the crate provides the inverse-semigroup machinery
//! ([`inverse_monoid`]), the Baer* annihilator structure together with
//! kernels, cokernels and mono-epi factorizations ([`baer`]), short exact
//! sequences with the 3×3 completion and the Noether isomorphisms
//! ([`exact`]), and an exhaustive law suite ([`laws`]) that checks all of it
//! on small instances.
//!
//! Composition is applicative: `compose(g, f)` applies `f` first.

pub mod baer;
pub mod enumerate;
mod error;
pub mod exact;
mod finset;
pub mod inverse_monoid;
pub mod laws;
mod pbij;
pub mod text;

pub use error::{Error, Result};
pub use finset::FinSet;
pub use pbij::{classify, compose, partial_identity, Classification, PBij};
