//! Parabolic subalgebras containing `h`, their irreducible ideal `i₀`, and
//! the maximality statement for `p_{ρ_S}`.

use std::collections::{BTreeMap, HashSet};

use num_traits::{Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::poset::{NodeSet, RootSet};
use crate::report::ClaimReport;
use crate::rootsys::{RootSystem, Weight};

use super::conditions::{cond_iv_with, s_of_lambda, two_rho_s, SumTable};

/// How a parabolic was specified.
#[derive(Clone, Debug, PartialEq)]
pub enum Origin {
    /// `p_J ⊇ b`: Levi roots `R(J)`, nilradical `R⁺ ∖ R⁺(J)`.
    Nodes(NodeSet),
    /// `p_λ`: Levi roots `(λ, α) = 0`, nilradical `(λ, α) > 0`.
    Weight(Weight),
}

/// A parabolic subalgebra containing `h`, as a partition of `R`.
#[derive(Clone, Debug, PartialEq)]
pub struct Parabolic {
    pub origin: Origin,
    pub levi: RootSet,
    pub nilradical: RootSet,
    pub excluded: RootSet,
}

impl Parabolic {
    pub fn from_weight(rs: &RootSystem, lambda: &Weight) -> Result<Self> {
        lambda.check_rank(rs.rank())?;
        if lambda.is_zero() {
            return Err(Error::Precondition(
                "λ = 0 does not define a proper parabolic".into(),
            ));
        }
        let (mut levi, mut nil, mut excluded) = (Vec::new(), Vec::new(), Vec::new());
        for a in rs.all_ids() {
            let p = rs.pairing_with_root(lambda, a);
            if p.is_zero() {
                levi.push(a);
            } else if p.is_positive() {
                nil.push(a);
            } else {
                excluded.push(a);
            }
        }
        Ok(Self {
            origin: Origin::Weight(lambda.clone()),
            levi: RootSet::new(levi),
            nilradical: RootSet::new(nil),
            excluded: RootSet::new(excluded),
        })
    }

    pub fn from_j(rs: &RootSystem, j: &NodeSet) -> Result<Self> {
        if j.rank() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: j.rank(),
            });
        }
        if !j.is_proper() {
            return Err(Error::Precondition("J = I gives all of g".into()));
        }
        let (mut levi, mut nil, mut excluded) = (Vec::new(), Vec::new(), Vec::new());
        for a in rs.all_ids() {
            if j.supports(rs.coeffs(a)) {
                levi.push(a);
            } else if rs.is_positive(a) {
                nil.push(a);
            } else {
                excluded.push(a);
            }
        }
        Ok(Self {
            origin: Origin::Nodes(*j),
            levi: RootSet::new(levi),
            nilradical: RootSet::new(nil),
            excluded: RootSet::new(excluded),
        })
    }

    /// Roots of `p` (Levi and nilradical).
    pub fn roots(&self) -> RootSet {
        self.levi.iter().chain(self.nilradical.iter()).collect()
    }

    /// `self ⊆ other` as subalgebras.
    pub fn is_contained_in(&self, other: &Parabolic) -> bool {
        self.roots().is_subset(&other.roots())
    }
}

/// `i₀ = {α ∈ R⁺ : d_j(θ - α) = 0 for all j ∉ J}`.
fn i0_of_j(rs: &RootSystem, j: &NodeSet) -> RootSet {
    let theta = rs.theta_root().coeffs();
    rs.positive_ids()
        .filter(|&a| {
            let c = rs.coeffs(a);
            (0..rs.rank()).all(|k| j.contains(k) || c[k] == theta[k])
        })
        .collect()
}

/// The unique ad-nilpotent ideal of `p` that is irreducible under its Levi
/// factor. For `p_λ`, `λ` is moved into the dominant chamber by a Weyl word
/// `w`, the ideal of `p_J` with `J = {i : (wλ, α_i) = 0}` is computed in the
/// standard positive system and carried back by `w⁻¹`.
pub fn irreducible_ideal_of_parabolic(rs: &RootSystem, p: &Parabolic) -> Result<RootSet> {
    match &p.origin {
        Origin::Nodes(j) => Ok(i0_of_j(rs, j)),
        Origin::Weight(lambda) => {
            let (dominant, word) = rs.dominant_representative(lambda)?;
            let labels = rs.dynkin_labels(&dominant);
            let j: Vec<usize> = (0..rs.rank()).filter(|&i| labels[i].is_zero()).collect();
            let j = NodeSet::from_indices(rs.rank(), &j)?;
            Ok(i0_of_j(rs, &j)
                .iter()
                .map(|a| rs.apply_word_inverse_root(&word, a))
                .collect())
        }
    }
}

/// Caps the number of parabolics [`all_parabolics`] will list.
pub const MAX_PARABOLICS: usize = 250_000;

/// Every parabolic containing `h`, one per nonzero face of the Weyl fan:
/// `p_μ` for `μ` in the orbit of `Σ_{k∈K} ω_k`, `K` nonempty. Ordered by
/// `K` (as a bit mask) and then by discovery order in the orbit search.
pub fn all_parabolics(rs: &RootSystem, exec: Exec) -> Result<Vec<(Weight, Parabolic)>> {
    let n = rs.rank();
    let masks: Vec<u32> = (1..1u32 << n).collect();
    let orbits = exec.map(&masks, |&mask| {
        let seed = rs.sum_of_fundamental((0..n).filter(|i| mask >> i & 1 == 1));
        orbit(rs, seed)
    });
    let total: usize = orbits
        .iter()
        .map(|o| o.as_ref().map_or(usize::MAX, Vec::len))
        .fold(0, usize::saturating_add);
    if total > MAX_PARABOLICS {
        return Err(Error::ScaleCap(format!(
            "{} has more than {MAX_PARABOLICS} parabolic subalgebras containing h",
            rs.spec()
        )));
    }
    let weights: Vec<Weight> = orbits
        .into_iter()
        .flat_map(|o| o.expect("checked"))
        .collect();
    exec.map(&weights, |mu| {
        Ok((mu.clone(), Parabolic::from_weight(rs, mu)?))
    })
    .into_iter()
    .collect()
}

fn orbit(rs: &RootSystem, seed: Weight) -> Option<Vec<Weight>> {
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(seed.clone());
    let mut out = vec![seed];
    let mut k = 0;
    while k < out.len() {
        for i in 0..rs.rank() {
            let next = rs.reflect_weight(&out[k], i);
            if seen.insert(next.clone()) {
                out.push(next);
                if out.len() > MAX_PARABOLICS {
                    return None;
                }
            }
        }
        k += 1;
    }
    Some(out)
}

/// `i₀` of `p_μ` and `S(μ)` agree for every parabolic, and each is a set
/// satisfying condition (iv). Returns the claims and the parabolics grouped
/// by their `i₀`.
pub fn parabolic_ideal_checks(
    rs: &RootSystem,
    parabolics: &[(Weight, Parabolic)],
    exec: Exec,
) -> (Vec<ClaimReport>, BTreeMap<RootSet, Vec<usize>>) {
    let sums = SumTable::new(rs);
    let rows = exec.map(parabolics, |(mu, p)| {
        let i0 = irreducible_ideal_of_parabolic(rs, p).expect("weight origin");
        let s = s_of_lambda(rs, mu).expect("rank matches");
        let iv = cond_iv_with(rs, &sums, &i0);
        (i0, s, iv)
    });
    let mut same = ClaimReport::new("i₀(p_μ) = S(μ) for every parabolic p_μ ⊇ h");
    let mut admissible = ClaimReport::new("i₀(p_μ) satisfies (iv) for every parabolic p_μ ⊇ h");
    let mut groups: BTreeMap<RootSet, Vec<usize>> = BTreeMap::new();
    for (k, (i0, s, iv)) in rows.into_iter().enumerate() {
        let mu = &parabolics[k].0;
        same.check(
            i0 == s,
            || json!({"mu": mu.to_string(), "i0": i0.to_json(rs), "S": s.to_json(rs)}),
        );
        admissible.check(iv, || json!({"mu": mu.to_string(), "i0": i0.to_json(rs)}));
        groups.entry(i0).or_default().push(k);
    }
    (vec![same, admissible], groups)
}

/// The corollary for one set `S` satisfying (iv): `i₀(p_{ρ_S}) = S`,
/// checked both on `p_{ρ_S}` directly and on the standard `p_J` reached by
/// the dominance word, and every parabolic in `others` is contained in
/// `p_{ρ_S}`.
pub fn corollary_for_set(
    rs: &RootSystem,
    s: &RootSet,
    others: &[&Parabolic],
) -> Result<[ClaimReport; 3]> {
    if !cond_iv_with(rs, &SumTable::new(rs), s) {
        return Err(Error::Precondition(format!(
            "{} does not satisfy (iv)",
            s.display(rs)
        )));
    }
    corollary_unchecked(rs, s, others)
}

fn corollary_unchecked(
    rs: &RootSystem,
    s: &RootSet,
    others: &[&Parabolic],
) -> Result<[ClaimReport; 3]> {
    let lambda = Weight::from(&two_rho_s(rs, s));
    let p = Parabolic::from_weight(rs, &lambda)?;
    let mut direct = ClaimReport::new("");
    let i0 = irreducible_ideal_of_parabolic(rs, &p)?;
    direct.check(
        i0 == *s,
        || json!({"S": s.to_json(rs), "i0": i0.to_json(rs)}),
    );

    let mut standard = ClaimReport::new("");
    let (dominant, word) = rs.dominant_representative(&lambda)?;
    let labels = rs.dynkin_labels(&dominant);
    let j: Vec<usize> = (0..rs.rank()).filter(|&i| labels[i].is_zero()).collect();
    let j = NodeSet::from_indices(rs.rank(), &j)?;
    let moved: RootSet = s.iter().map(|a| rs.apply_word_root(&word, a)).collect();
    let i0_j = i0_of_j(rs, &j);
    standard.check(
        moved == i0_j,
        || json!({"S": s.to_json(rs), "J": j, "wS": moved.to_json(rs), "i0": i0_j.to_json(rs)}),
    );

    let mut maximal = ClaimReport::new("");
    for q in others {
        maximal.check(q.is_contained_in(&p), || {
            let mu = match &q.origin {
                Origin::Weight(mu) => mu.to_string(),
                Origin::Nodes(j) => j.to_string(),
            };
            json!({"S": s.to_json(rs), "p": mu})
        });
    }
    Ok([direct, standard, maximal])
}

/// The corollary for every set in `sets` (each must satisfy (iv)), against
/// all parabolics containing `h`.
pub fn corollary_checks(rs: &RootSystem, sets: &[RootSet], exec: Exec) -> Result<Vec<ClaimReport>> {
    let sums = SumTable::new(rs);
    if let Some(bad) = sets.iter().find(|s| !cond_iv_with(rs, &sums, s)) {
        return Err(Error::Precondition(format!(
            "{} does not satisfy (iv)",
            bad.display(rs)
        )));
    }
    let parabolics = all_parabolics(rs, exec)?;
    let (mut claims, groups) = parabolic_ideal_checks(rs, &parabolics, exec);

    let mut coverage =
        ClaimReport::new("every classified S is i₀ of some parabolic, and conversely");
    let listed: HashSet<&RootSet> = sets.iter().collect();
    for s in sets {
        coverage.check(
            groups.contains_key(s),
            || json!({"S": s.to_json(rs), "missing": "parabolic"}),
        );
    }
    for s in groups.keys() {
        coverage.check(
            listed.contains(s),
            || json!({"S": s.to_json(rs), "missing": "classification"}),
        );
    }
    claims.push(coverage);

    let rows = exec.map(sets, |s| {
        let others: Vec<&Parabolic> = groups
            .get(s)
            .map(|ks| ks.iter().map(|&k| &parabolics[k].1).collect())
            .unwrap_or_default();
        corollary_unchecked(rs, s, &others)
    });
    let mut cols: [Vec<ClaimReport>; 3] = Default::default();
    for row in rows {
        for (k, r) in row?.into_iter().enumerate() {
            cols[k].push(r);
        }
    }
    let [a, b, c] = cols;
    claims.push(ClaimReport::merged("i₀(p_{ρ_S}) = S", a));
    claims.push(ClaimReport::merged(
        "i₀(p_J) = w·S for J = {i : (w ρ_S, α_i) = 0}",
        b,
    ));
    claims.push(ClaimReport::merged("p ⊆ p_{ρ_S} whenever i₀(p) = S", c));
    Ok(claims)
}

/// `i₀(p_J)` is a nonzero abelian `J`-ideal contained in every nonzero
/// `J`-ideal, for every proper `J`.
pub fn i0_checks(rs: &RootSystem, exec: Exec) -> Vec<ClaimReport> {
    use crate::poset::{enumerate_j_ideals, is_j_ideal, nilpotence_of_ideal};
    let subsets: Vec<NodeSet> = NodeSet::all_subsets(rs.rank())
        .filter(NodeSet::is_proper)
        .collect();
    let parts = exec.map(&subsets, |j| {
        let i0 = i0_of_j(rs, j);
        let mut ideal = ClaimReport::new("");
        let mut minimal = ClaimReport::new("");
        let ok = !i0.is_empty()
            && is_j_ideal(rs, &i0, j).unwrap_or(false)
            && nilpotence_of_ideal(rs, &i0).is_ok_and(|k| k <= 1);
        ideal.check(ok, || json!({"J": j, "i0": i0.to_json(rs)}));
        for phi in enumerate_j_ideals(rs, j).iter().filter(|p| !p.is_empty()) {
            minimal.check(
                i0.is_subset(phi),
                || json!({"J": j, "ideal": phi.to_json(rs)}),
            );
        }
        (ideal, minimal)
    });
    let (a, b): (Vec<_>, Vec<_>) = parts.into_iter().unzip();
    vec![
        ClaimReport::merged("i₀(p_J) is a nonzero abelian J-ideal", a),
        ClaimReport::merged("i₀(p_J) ⊆ every nonzero J-ideal", b),
    ]
}
