//! Graded objects and matrix factorizations, verification, and the
//! functors and constructions acting on them.

mod cone;
mod functors;
mod label;
mod object;

pub use cone::{assemble_cone, cone};
pub use functors::{
    direct_sum, direct_sum2, from_labels, indecomposable, indecomposable_from, knorrer_double,
    permute_basis, serre, shift, translate, trivial_pair, TrivialKind,
};
pub use label::IndecompLabel;
pub use object::{
    verify_mf, EntryFailure, EntryProblem, GradedMF, GradedObject, QBlock, VerificationReport,
};
