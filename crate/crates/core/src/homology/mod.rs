//! Presentations, `Ext`, `Tor₁`, dimension bounds and the explicit
//! resolutions and approximation sequences over Morita rings.

pub mod dims;
pub mod ext;
pub mod horseshoe;
pub mod lambda;
pub mod presentation;

pub use dims::{
    inj_dim_upto, injective_copresentation, is_injective, is_injective_by_ext, is_projective,
    is_projective_by_ext, proj_dim_upto, DimBound, DIM_BOUND,
};
pub use ext::{
    ext, ext1_dim, ext1_dim_with, ext_dim, ext_with, extend_along, factor_through_epi,
    factor_through_mono, lift_through, pushout, solve_in_hom, splits, splitting, tor1, tor1_with,
    ExtGroup, ShortExactSequence,
};
pub use horseshoe::{dual_sequence, horseshoe_left, horseshoe_right, Horseshoe};
pub use lambda::*;
pub use presentation::{
    free_presentation, presentation, projective_cover, syzygy, Presentation, PresentationKind,
};
#[cfg(test)]
mod tests;
