//! Ordinal decision engine.
//!
//! Compares acts (maps from states to consequences) using only ordinal
//! information: a comparative-uncertainty relation on events and a ranking
//! of consequences. The act relation is obtained by lifting the event
//! relation: `f` is at least as good as `g` when the event "f does at
//! least as well as g" is at least as likely as its mirror image.
//!
//! On top of the lifting rule the crate provides the induced event
//! likelihood relation, the nonmonotonic inference relation it generates,
//! and a [`harness`] that exhaustively verifies (or falsifies) the
//! governing order axioms on small finite models.

pub mod comparison;
pub mod error;
pub mod fixtures;
pub mod harness;
pub mod lifting;
pub mod likelihood;
pub mod nonmonotonic;
pub mod ordinal;
pub mod uncertainty;

pub use comparison::Comparison;
pub use error::{Error, Result};
pub use ordinal::{Act, Event, OutcomeScale, Rank, StateSpace};
pub use uncertainty::{
    EventOrdering, Level, PossibilityProfile, UncertaintyComparator, WeightProfile,
};
