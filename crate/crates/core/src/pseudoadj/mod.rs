//! The pseudo-free functor `L_D` of a crossed category, the pseudo-adjunction with the
//! forgetful functor, base change for Tor, and the modules of cyclic orders.

pub mod adjunction;
pub mod base_change;
pub mod cyclic_orders;
pub mod pseudo_free;

pub use adjunction::{
    adjunction_check, iso_is_natural, overline_right, pseudo_adjunction_iso, AdjunctionReport, IsoReport,
    PseudoAdjunctionIso,
};
pub use base_change::{base_change_check, BaseChangeReport};
pub use cyclic_orders::{build_b_module, check_cyclic_order_representables, cyclic_orders, CyclicOrderReport, CyclicOrders};
pub use pseudo_free::{forget_to_c, pseudo_free, pseudo_free_layout, pseudo_free_map, PseudoFreeLayout};
