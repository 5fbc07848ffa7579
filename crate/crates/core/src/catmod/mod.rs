//! Modules over finite categories: functors into finite-dimensional vector spaces.

pub mod json;
pub mod module;

pub use module::{
    dual, make_representable, make_trivial, restrict, validate_functoriality, validate_on_generators, Action,
    CatModule, ModuleMap, ModuleViolation, Variance,
};
