//! Boolean functions as truth tables: clone-defining properties, Post's
//! lattice, and the dichotomy dispatch.

pub mod base;
pub mod bits;
pub mod clone;
pub mod closure;
pub mod dispatch;
pub mod props;
pub mod table;

pub use base::BaseSet;
pub use bits::{BitVector, N_MAX};
pub use clone::{class_by_name, class_included, clone_identify, CloneClass};
pub use closure::clone_closure;
pub use dispatch::{dispatch, DichotomyVerdict, EasyClass, TVariant};
pub use props::{
    is_affine, property_report, separating_coordinate, LinearForm, PropertyReport, SepDegree,
};
pub use table::{threshold_tt, tt_eval, tt_parse, tt_print, TruthTable};

/// Default cap on separation degrees tested.
pub const DEFAULT_DEGREE_BOUND: u32 = 8;
