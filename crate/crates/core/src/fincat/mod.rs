//! Finite and truncated small categories used as bases for modules.

pub mod builtins;
pub mod category;
pub mod functor;
pub mod json;
pub mod validate;

pub use builtins::{
    binomial, build_delta_truncated, build_group_category, build_symmetric_groupoid, delta_delta, delta_sigma,
    factorial, group_category, GroupTable,
};
pub use category::{FinCategory, Generator, Morph, Payload};
pub use functor::Functor;
pub use validate::{validate_category, validate_category_within, CategoryViolation, Coverage};

/// The opposite category; `opposite(&opposite(c))` is `c` itself.
pub fn opposite(c: &FinCategory) -> FinCategory {
    c.opposite()
}
