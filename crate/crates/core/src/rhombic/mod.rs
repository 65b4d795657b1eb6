//! Rhombic diagrams, their tilings and fillings (rhombic alternative
//! tableaux), and the generating functions they define.

pub mod diagram;
pub mod filling;
pub mod flip;
pub mod svg;
pub mod tiling;
pub mod transfer;

pub use diagram::{tiles_of, RhombicDiagram};
pub use filling::{
    class_count_formula, closed_form_q1, count_classes, enumerate_fillings, enumerate_fillings_on, weight,
    weight_counts_on, weight_on, z, Exponents, Filling, Symbol, TileKind, TileStatus,
};
pub use flip::{
    canonicalize, conjecture_probe, filling_flip, flip_equivalents, tiling_independence_check, with_corner_tile,
    ProbeReport, TilingReport,
};
pub use svg::render_svg;
pub use tiling::{direction, Hexagon, Orientation, Placement, Tiling};
pub use transfer::{transfer_check, TransferMismatch};
