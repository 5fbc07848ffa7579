//! Crossed categories `B = C ⋈ D` and the concrete instances built from fiber-ordered maps.

pub mod fiber_ordered;
pub mod instances;
pub mod json;
pub mod laws;
pub mod structure;

pub use fiber_ordered::{compose_payloads, cyclic_operator, delta, family_category, sigma, FiberOrderedMap, Family};
pub use instances::{
    build_delta_c, build_delta_s, build_f_as, build_gamma_as, build_symmetric_crossed, delta_c_category,
    delta_c_op_embedding, delta_op_embedding, image_members,
};
pub use laws::{check_crossed_laws, LawViolation};
pub use structure::{build_crossed, CrossedCategory, Part};
