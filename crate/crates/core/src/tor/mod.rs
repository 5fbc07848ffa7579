//! Tensor and Hom over a category, free resolutions and Tor.

pub mod free;
pub mod resolution;
pub mod tensor;
#[allow(clippy::module_inception)]
pub mod tor;

pub use free::FreeModule;
pub use resolution::{free_cover, CoverStrategy, Level, Resolution};
pub use tensor::{check_hom_tensor_duality, hom_into_constant, hom_over_category, tensor_over_category, HomSpace, DualityReport, TensorProduct};
pub use tor::{stabilized_upto, tensor_with_resolution, tor, tor_with_stabilization, Side, TorReport};
