//! The monoids `NDF_n` of nondecreasing functions and `NDPF_n` of
//! nondecreasing parking functions, and their algebras.

mod commutant;
mod exterior;
mod function;
mod ndfa;
mod ndpf;

pub use commutant::{evaluation_commutant, CommutantReport, CommutantVariant};
pub use exterior::{
    exterior_action, exterior_rep_rank, faithfulness_triangularity, first_preimages, hecke_e_s, hecke_exterior,
    heckesg_exterior, ndf_exterior_generators, ExteriorBasis, HeckeExterior, HeckeExteriorRep, Triangularity,
};
pub use function::{
    binomial, catalan, k_subsets, nd_initial_enumerate, ndf_enumerate, ndpf_enumerate, NdFunction, Subset,
};
pub use ndfa::{
    border_delta, delta_intertwines, delta_sequence_exact, idempotent_e, idempotent_e_single_pass, idempotent_report,
    kernel_of, ndfa_cartan, ndfa_generator_names, ndfa_generators, ndfa_projective, ndfa_simple, quotient_chain,
    simple_dims, temperley_lieb_check, IdempotentReport, NdElement, QuotientChain, TemperleyLieb,
};
pub use ndpf::{
    character_is_consistent, grassmann_join, grassmann_leq, grassmann_meet, grassmann_pairs, incidence_dimension,
    ndpf_cartan, ndpf_projective, ndpfa_generator_names, ndpfa_generators, ndpfa_structure, pi_composition_factors,
    pi_simple, zero_hecke_kernel, KernelReport, NdpfaReport,
};
