//! Modules over `Λ = (A N; M B)` as quadruples, the functors between the
//! corners, and Λ materialized as an ordinary algebra.

pub mod data;
pub mod functors;
pub mod lambda;

pub use data::{MoritaData, Validation};
pub use functors::*;
pub use lambda::{
    adjoint, is_exact_sequence, is_short_exact, lambda_cokernel, lambda_direct_sum, lambda_hom_dim,
    lambda_hom_space, lambda_kernel, unadjoint, LambdaMap, LambdaModule, LambdaSum,
};

#[cfg(test)]
mod tests;
