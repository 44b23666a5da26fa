//! Instance compilers between the game variants.

pub mod abf_to_lazy;
pub mod lazy_to_protected;

pub use abf_to_lazy::{basic_configuration, build_t31, check_claim_structure, Pol, T31Output, T31Role};
pub use lazy_to_protected::{build_t22, check_t22_structure, ReductionOutput, T22Role};
