//! Lozenge tilings of flashlight regions and their weights.

mod enumerate;
mod region;

pub use enumerate::*;
pub use region::{anchored_region, FlashlightRegion, Lozenge, LozengeKind, Region, Tri};
