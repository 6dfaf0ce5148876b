//! Morphism complexes between univariate objects: slot bases, `m1`, `m2`,
//! cohomology, Euler characteristics and the residue trace.

mod cdg;
mod hom;
mod morphism;
mod serre;
mod slots;

pub use cdg::{cdg_m0, cdg_m1, cdg_m2, check_cdg_identities, CdgElement};
pub use hom::{
    euler_char, euler_window, hom, hom_dims_range, hom_shifted, is_boundary, is_closed,
    is_nonzero_class, HomReport,
};
pub use morphism::{differential_matrix, m1, m2, Morphism};
pub use serre::{
    serre_pairing, serre_trace, serre_trace_blocks, trace_generator, verify_serre_duality,
    SerreCell, SerreReport,
};
pub use slots::{Block, Slot, SlotBasis};

#[cfg(test)]
mod tests;
