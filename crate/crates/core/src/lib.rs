//! Exact arithmetic for generalized power series fields `F ⊠ G`.
//!
//! Elements are finitely supported series `Σ aᵢ x^{eᵢ}` whose exponents live
//! in a structured ordered abelian group (`Z`, `Q`, the trivial group and
//! finite lexicographic sums of these) and whose coefficients are exact
//! rationals or, recursively, series themselves. A series is ordered by the
//! sign of the coefficient carried by its largest exponent.
//!
//! The crate is `no_std` and only needs `alloc`. Parsing, JSON and the
//! command line front end live in the `hahn` companion crate.
//!
//! Module map:
//!
//! * [`groups`]: ordered abelian groups, the lexicographic box sum and its
//!   morphisms, Archimedean classes inside a group.
//! * [`series`]: the box product itself, its order, arithmetic with
//!   truncation contracts, the functorial action and the flattening
//!   isomorphism `F ⊠ (G ⊞ H) ≅ (F ⊠ G) ⊠ H`.
//! * [`levels`]: level equivalence, the level group, generator sets,
//!   class groups and decomposition reports.
//! * [`beta`]: balls, swing values, level sets and partial-sum checks for
//!   the order topology.
//! * [`oracle`]: slow reference implementations used to cross-check
//!   everything above.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod beta;
pub mod error;
pub mod groups;
pub mod levels;
pub mod oracle;
pub mod series;

pub use error::{Error, Result};
pub use groups::{ClassId, GroupDescriptor, GroupElement, GroupMorphism};
pub use levels::{DecompositionReport, FieldDescriptor, LevelClass};
pub use series::{Coefficient, Series, Sign, Term, Truncation};

/// Arbitrary precision rational used for coefficients and `Q` exponents.
pub type Rational = num_rational::BigRational;
