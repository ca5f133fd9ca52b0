//! Exhaustive verification of the antichain/ideal bijection, the nilpotence
//! criterion, the abelian criterion and the abelian-antichain counts.

use serde_json::json;

use crate::exec::Exec;
use crate::report::ClaimReport;
use crate::rootsys::{Family, RootSystem};

use super::enumerate::{
    enumerate_j_antichains, enumerate_j_antichains_with, enumerate_j_ideals,
    enumerate_j_ideals_by_subsets,
};
use super::families::{
    classical_abelian_families, closed_form_count, closed_form_family_counts, closed_form_total,
    reconcile_families,
};
use super::nilpotence::{antichain_sum_criterion, is_abelian_j_antichain, nilpotence_of_ideal};
use super::order::{
    ideal_from_antichain, is_j_antichain, is_j_ideal, minimal_elements, up_closure,
};
use super::{NodeSet, RootSet};

/// Subset-filter cross-check of the ideal enumeration is run up to this
/// many positive roots.
const SUBSET_CHECK_MAX_POSITIVE: usize = 12;

fn subsets(rs: &RootSystem) -> Vec<NodeSet> {
    NodeSet::all_subsets(rs.rank()).collect()
}

/// The bijection `A ↦ Φ(A)` between `J`-antichains and `J`-ideals, for
/// every `J`: both round trips, equal cardinalities, and (on small systems)
/// agreement of the two independent ideal enumerations.
pub fn bijection_checks(rs: &RootSystem, exec: Exec) -> Vec<ClaimReport> {
    let parts = exec.map(&subsets(rs), |j| {
        let mut forward = ClaimReport::new("");
        let mut backward = ClaimReport::new("");
        let mut counts = ClaimReport::new("");
        let mut cross = ClaimReport::new("");
        let antichains = enumerate_j_antichains(rs, j, false, None);
        for a in &antichains {
            let phi =
                ideal_from_antichain(rs, a, j).expect("enumerated antichains are J-antichains");
            let ok = is_j_ideal(rs, &phi, j).unwrap_or(false) && minimal_elements(rs, &phi) == *a;
            forward.check(ok, || json!({"J": j, "antichain": a.to_json(rs)}));
        }
        let ideals = enumerate_j_ideals(rs, j);
        for phi in &ideals {
            let a = minimal_elements(rs, phi);
            let ok = is_j_antichain(rs, &a, j).unwrap_or(false) && up_closure(rs, &a) == *phi;
            backward.check(ok, || json!({"J": j, "ideal": phi.to_json(rs)}));
        }
        counts.check(
            antichains.len() == ideals.len(),
            || json!({"J": j, "antichains": antichains.len(), "ideals": ideals.len()}),
        );
        if rs.num_positive() <= SUBSET_CHECK_MAX_POSITIVE {
            let by_subsets = enumerate_j_ideals_by_subsets(rs, j);
            cross.check(
                by_subsets == ideals,
                || json!({"J": j, "up_sets": ideals.len(), "subsets": by_subsets.len()}),
            );
        }
        [forward, backward, counts, cross]
    });
    let names = [
        "A(Φ(A)) = A for every J-antichain",
        "Φ(A(Φ)) = Φ for every J-ideal",
        "#J-antichains = #J-ideals",
        "J-ideals by up-set growth = J-ideals by subset filter",
    ];
    let mut columns: Vec<Vec<ClaimReport>> = vec![Vec::new(); names.len()];
    for row in parts {
        for (k, r) in row.into_iter().enumerate() {
            columns[k].push(r);
        }
    }
    names
        .iter()
        .zip(columns)
        .map(|(name, parts)| ClaimReport::merged(*name, parts))
        .filter(|r| r.instances_checked > 0)
        .collect()
}

/// Nilpotence criterion: for every antichain `A` of `R⁺` and `1 ≤ k ≤
/// max_k`, no `k+1` members of `A` sum to something `≤ θ` iff `Φ(A)` has
/// nilpotence at most `k`.
pub fn nilpotence_checks(rs: &RootSystem, max_k: usize, exec: Exec) -> Vec<ClaimReport> {
    let empty = NodeSet::empty(rs.rank());
    let antichains = enumerate_j_antichains(rs, &empty, false, None);
    let parts = exec.map(&antichains, |a| {
        let mut r = ClaimReport::new("");
        let phi = up_closure(rs, a);
        let nil = nilpotence_of_ideal(rs, &phi).expect("up-sets are positive");
        for k in 1..=max_k {
            let criterion = antichain_sum_criterion(rs, a, k).expect("antichain of positive roots");
            r.check(criterion == (nil <= k), || {
                json!({"antichain": a.to_json(rs), "k": k, "criterion": criterion, "nilpotence": nil})
            });
        }
        r
    });
    vec![ClaimReport::merged(
        "sums of k+1 members ≰ θ ⇔ nilpotence(Φ(A)) ≤ k",
        parts,
    )]
}

/// Abelian criterion: for every `J` and `J`-antichain `A`, the index
/// conditions hold iff `Φ(A)` has nilpotence at most one.
pub fn abelian_checks(rs: &RootSystem, exec: Exec) -> Vec<ClaimReport> {
    let parts = exec.map(&subsets(rs), |j| {
        let mut r = ClaimReport::new("");
        for a in enumerate_j_antichains(rs, j, false, None) {
            let criterion = is_abelian_j_antichain(rs, &a, j).expect("J-antichain");
            let nil = nilpotence_of_ideal(rs, &up_closure(rs, &a)).expect("positive");
            r.check(criterion == (nil <= 1), || {
                json!({"J": j, "antichain": a.to_json(rs), "criterion": criterion, "nilpotence": nil})
            });
        }
        r
    });
    vec![ClaimReport::merged(
        "abelian index conditions ⇔ nilpotence ≤ 1",
        parts,
    )]
}

fn by_size(list: &[RootSet]) -> Vec<u64> {
    let max = list.iter().map(RootSet::len).max().unwrap_or(0);
    let mut counts = vec![0u64; max + 1];
    for a in list {
        counts[a.len()] += 1;
    }
    counts
}

/// Counts of abelian `J`-antichains against every closed form that
/// applies: Peterson's `2^n`, per-size binomials, the parabolic totals
/// `2^{n-#J}` (types A and C), and, for classical types, the explicit
/// families against enumeration for every `J`.
pub fn peterson_checks(rs: &RootSystem, exec: Exec) -> Vec<ClaimReport> {
    let spec = rs.spec();
    let n = rs.rank();
    let empty = NodeSet::empty(n);
    let mut total = ClaimReport::new("Σ_s #ba_s = 2^n");
    let borel = enumerate_j_antichains_with(rs, &empty, true, None, exec);
    total.check(
        borel.len() as u64 == 1 << n,
        || json!({"enumerated": borel.len(), "expected": 1u64 << n}),
    );
    let mut claims = vec![total];
    if !spec.family.is_classical() {
        return claims;
    }

    let mut per_size = ClaimReport::new("#ba_s matches its binomial closed form");
    let mut per_family = ClaimReport::new("family sizes match their binomials");
    let counts = by_size(&borel);
    let families = classical_abelian_families(rs, &empty, None).expect("classical type");
    for s in 1..=n + 1 {
        let actual = counts.get(s).copied().unwrap_or(0);
        let expected = closed_form_count(rs, &empty, s).expect("classical J = ∅");
        per_size.check(
            actual == expected,
            || json!({"s": s, "enumerated": actual, "closed_form": expected}),
        );
        for (label, expected) in closed_form_family_counts(spec, s).expect("classical") {
            let got = families
                .iter()
                .filter(|l| l.antichain.len() == s && l.family.split(',').next() == Some(label))
                .count() as u64;
            per_family.check(
                got == expected,
                || json!({"s": s, "family": label, "expanded": got, "binomial": expected}),
            );
        }
    }
    claims.push(per_size);
    claims.push(per_family);

    let parts = exec.map(&subsets(rs), |j| {
        let mut families = reconcile_families(rs, j).expect("classical type");
        families.claim.clear();
        let mut parabolic = ClaimReport::new("");
        if let Ok(expected) = closed_form_total(spec, j) {
            let got = enumerate_j_antichains(rs, j, true, None);
            parabolic.check(
                got.len() as u64 == expected,
                || json!({"J": j, "enumerated": got.len(), "expected": expected}),
            );
            if spec.family == Family::A {
                let sizes = by_size(&got);
                for s in 1..=n {
                    let actual = sizes.get(s).copied().unwrap_or(0);
                    let expected = closed_form_count(rs, j, s).expect("type A");
                    parabolic.check(
                        actual == expected,
                        || json!({"J": j, "s": s, "enumerated": actual, "closed_form": expected}),
                    );
                }
            }
        }
        (families, parabolic)
    });
    let (fam, par): (Vec<_>, Vec<_>) = parts.into_iter().unzip();
    claims.push(ClaimReport::merged(
        "explicit families = enumeration, every J",
        fam,
    ));
    let par = ClaimReport::merged("parabolic counts match closed forms, every J", par);
    if par.instances_checked > 0 {
        claims.push(par);
    }
    claims
}
