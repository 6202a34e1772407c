//! Graded bases and generator matrices for `V_k`, `M(w)` and their tensor
//! products. Verma modules are infinite-dimensional, so everything here is
//! computed one degree at a time.

mod action;
mod basis;
mod checks;
mod matrix;

pub use action::{
    act_on_vector, irrep_action, tensor_action, tensor_action_with, verma_action, Bracketing,
    Generator,
};
pub use basis::{GradedBasis, ModuleDesc};
pub use checks::{check_coassociativity, check_relations, Relation, RelationViolation};
pub use matrix::BlockMatrix;
