//! Exact multivariate polynomials and the determinantal and divided
//! difference machinery used to compute degeneracy loci.

mod determinant;
mod mpoly;
mod symmetric;

pub use determinant::{
    determinant, double_schubert, double_schubert_with, pfaffian, q_beta, q_class,
    schur_determinant, ChernSequence,
};
pub use mpoly::{MPoly, Monomial, Var, ALPHABET};
pub use symmetric::{elementary_symmetric, l_vars, to_elementary, x_vars, y_vars};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division left a remainder")]
    InexactDivision,
    #[error("operator index {i} is invalid for genus {g}")]
    BadOperator { i: usize, g: usize },
    #[error("polynomial is not symmetric in the l variables")]
    NotSymmetric,
    #[error("Chern sequences need a non-empty list starting with 1")]
    BadChernSequence,
    #[error("Pfaffian needs a non-empty antisymmetric matrix of even size")]
    NotAntisymmetric,
    #[error("Pfaffian of an empty matrix")]
    EmptyPfaffian,
    #[error("Q_{{{i},{j}}} needs i > j")]
    BadQIndices { i: usize, j: usize },
}
