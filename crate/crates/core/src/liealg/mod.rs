//! Lie algebras of derivations, reduced structure and unitary operators on
//! Jordan carriers, with Killing signatures and the two reproduction tables.

pub mod carrier;
pub mod killing;
pub mod operator;
pub mod solve;
pub mod tables;

pub use carrier::{CubicTensor, FiniteAlgebra, JordanCarrier};
pub use killing::{
    killing_character, lie_structure, real_form_label, KillingReport, LieError, LieStructure,
};
pub use operator::Operator;
pub use solve::{
    complex_structure, derivation_basis, linear_derivation_basis, matrix_model_dimension,
    norm_preserving_basis, reduced_structure_basis, solve_nullspace, unitary_real_form,
    MatrixModel, OperatorBasis, SolveCertificate, UnitaryProblem,
};
