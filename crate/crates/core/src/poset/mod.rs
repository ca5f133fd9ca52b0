//! The dominance order on `R⁺` and the combinatorics of ad-nilpotent ideals
//! of the parabolic `p_J`: `J`-antichains, `J`-ideals, nilpotence, abelian
//! criteria, enumeration and closed-form counts.

mod checks;
mod enumerate;
pub mod families;
pub mod lemmas;
mod nilpotence;
mod order;
mod sets;

pub use checks::{abelian_checks, bijection_checks, nilpotence_checks, peterson_checks};
pub use enumerate::{
    enumerate_j_antichains, enumerate_j_antichains_with, enumerate_j_ideals,
    enumerate_j_ideals_by_subsets,
};
pub use families::{
    classical_abelian_families, closed_form_count, closed_form_family_counts, closed_form_total,
    LabelledAntichain,
};
pub use lemmas::lemma_checks;
pub use nilpotence::{
    abelian_pair, abelian_single, antichain_sum_criterion, is_abelian_j_antichain,
    nilpotence_of_ideal,
};
pub use order::{
    ideal_from_antichain, is_j_antichain, is_j_ideal, j_admissible, leq, leq_ids, minimal_elements,
    restricted_roots, up_closure,
};
pub use sets::{NodeSet, RootSet};
