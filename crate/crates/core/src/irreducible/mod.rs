//! Irreducible ad-nilpotent ideals of parabolic subalgebras and the sets of
//! roots `S ⊂ R` that arise as their root sets.

mod classify;
mod conditions;
mod parabolic;
mod witness;

pub use classify::{
    classical_families, classify, exhaust_irreducible_sets, f4_fixture, search_irreducible_sets,
    Classification, ClassifiedSet, FamilyMember, COND_III_MAX_ROOTS, SUBSET_CROSS_CHECK_MAX_ROOTS,
};
pub use conditions::{
    bod, check_equivalence, cond_i, cond_ii, cond_iii, cond_iii_with, cond_iv, cond_iv_with,
    max_pairing, s_of_lambda, two_rho_s, Decompositions, EquivalenceRun, SumTable, COND_III_DEPTH,
    EXHAUSTIVE_MAX_ROOTS,
};
pub use parabolic::{
    all_parabolics, corollary_checks, corollary_for_set, i0_checks, irreducible_ideal_of_parabolic,
    parabolic_ideal_checks, Origin, Parabolic, MAX_PARABOLICS,
};
pub use witness::{lemone_checks, lemone_witness, perp_census, perp_checks};
