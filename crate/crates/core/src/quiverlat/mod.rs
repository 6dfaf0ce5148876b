//! The quiver side: interval modules of the linearly oriented `A_{h-1}`
//! quiver, Euler matrices, the intersection form and Grothendieck classes.

mod lattice;
mod report;
mod rep;

pub use lattice::{
    cartan_matrix_a, euler_matrix, identity_matrix, k0_class, mat_vec, projectives, EulerData,
    EulerSource, IntMatrix,
};
pub use rep::{euler_form, interval_hom_dim, interval_hom_dim_closed, IntervalModule, QuiverRep};
pub use report::{
    derived_indec_count_mod2, equivalence_report, equivalence_report_perturbed, EquivalenceReport,
};

#[cfg(test)]
mod tests;
