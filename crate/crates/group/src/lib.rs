//! Fundamental groups of curve complements from band representations.
//!
//! * [`vankampen`] turns a band representation into the bidisk presentation
//!   (one generator per strand, the relators of every band) and the
//!   projective one (plus `x_1 ⋯ x_n = 1`).
//! * [`tietze`] simplifies presentations by eliminating generators.
//! * [`smith`] computes abelianizations, [`coset`] enumerates cosets of the
//!   trivial subgroup, and [`homs`] counts homomorphisms into small
//!   symmetric groups.
//! * [`wirtinger`] recognizes Wirtinger presentations and realizes them by
//!   quasipositive band representations.

pub mod coset;
pub mod homs;
pub mod presentation;
pub mod smith;
pub mod tietze;
pub mod vankampen;
pub mod wirtinger;

mod error;

pub use coset::{coset_enumerate, CosetOutcome};
pub use error::GroupError;
pub use homs::{count_homs_to_symmetric, DEFAULT_HOM_CAP};
pub use presentation::{canonical_relator, GroupPresentation};
pub use smith::{abelianization, AbelianInvariants};
pub use tietze::{default_budget, tietze_simplify, TietzeOutcome};
pub use vankampen::{
    band_relators, bidisk_presentation, expand_consequence, flip_is_consequence, projective_presentation,
    relator_consequence, ProjectivePresentation, RelatorConjugate,
};
pub use wirtinger::{is_wirtinger, wirtinger_form, wirtinger_to_bands};
