//! Dense complex matrices, Hermitian spectral primitives and the Loewner order.
//!
//! Everything here is dense and aimed at small dimensions (n <= 64).

mod linalg;
mod matrix;

pub use linalg::{
    condition_number, eigensystem, eigenvalues, hermitian_eig, hermitian_eigenvalues, hermitian_norm2,
    imag_part, inverse, lambda_max, lambda_min, loewner_leq, operator_norm, pd_power, real_part,
    singular_values, sqrt_pd, Eigensystem, HermitianEig, LoewnerOutcome, SINGULARITY_RCOND,
};
pub use matrix::{ComplexMatrix, HermitianMatrix, TolerancePolicy};
#[cfg(test)]
pub(crate) use matrix::hermitian_deviation;
