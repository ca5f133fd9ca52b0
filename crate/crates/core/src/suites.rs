//! Named verification suites, each producing one [`SuiteReport`].

use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::irreducible::{
    check_equivalence, classify, corollary_checks, f4_fixture, i0_checks,
    irreducible_ideal_of_parabolic, lemone_checks, perp_checks, two_rho_s, Parabolic,
};
use crate::poset::families::d_printed_count_notes;
use crate::poset::lemmas::lemma_checks_with;
use crate::poset::{
    abelian_checks, bijection_checks, enumerate_j_antichains_with, nilpotence_checks,
    peterson_checks, NodeSet, RootSet,
};
use crate::report::{ClaimReport, SuiteReport};
use crate::rootsys::{Family, RootSystem, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lemmas,
    Bijection,
    Nilpotence,
    Peterson,
    Theorem2,
    Classification,
    Corollary,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Lemmas,
        Suite::Bijection,
        Suite::Nilpotence,
        Suite::Peterson,
        Suite::Theorem2,
        Suite::Classification,
        Suite::Corollary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemmas => "lemmas",
            Suite::Bijection => "bijection",
            Suite::Nilpotence => "nilpotence",
            Suite::Peterson => "peterson",
            Suite::Theorem2 => "theorem2",
            Suite::Classification => "classification",
            Suite::Corollary => "corollary",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite `{s}`")))
    }
}

/// Scale limits. Suites refuse systems beyond them with [`Error::ScaleCap`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Rank limit for suites that walk every `J ⊆ I`.
    pub max_rank: usize,
    /// Root-count limit for the all-subsets equivalence run.
    pub theorem2_max_roots: usize,
    /// Root-count limit for the classification search.
    pub classification_max_roots: usize,
    /// Largest `k` in the nilpotence criterion.
    pub max_k: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_rank: 6,
            theorem2_max_roots: crate::irreducible::EXHAUSTIVE_MAX_ROOTS,
            classification_max_roots: 126,
            max_k: 3,
        }
    }
}

fn cap_rank(rs: &RootSystem, suite: Suite, caps: &Caps) -> Result<()> {
    if rs.rank() > caps.max_rank {
        return Err(Error::ScaleCap(format!(
            "suite {suite} on {} needs rank ≤ {}",
            rs.spec(),
            caps.max_rank
        )));
    }
    Ok(())
}

fn cap_roots(rs: &RootSystem, suite: Suite, max: usize) -> Result<()> {
    if rs.num_roots() > max {
        return Err(Error::ScaleCap(format!(
            "suite {suite} on {} needs at most {max} roots, it has {}",
            rs.spec(),
            rs.num_roots()
        )));
    }
    Ok(())
}

/// Runs one suite on one root system.
pub fn run_suite(rs: &RootSystem, suite: Suite, caps: &Caps, exec: Exec) -> Result<SuiteReport> {
    let system = rs.spec().to_string();
    let mut notes = Vec::new();
    let claims = match suite {
        Suite::Lemmas => {
            cap_rank(rs, suite, caps)?;
            cap_roots(rs, suite, caps.classification_max_roots)?;
            let mut claims = lemma_checks_with(rs, exec);
            claims.push(lemone_checks(rs));
            let sets: Vec<RootSet> = classify(rs, exec)?
                .sets
                .into_iter()
                .map(|x| x.roots)
                .collect();
            claims.push(perp_checks(rs, &sets));
            claims
        }
        Suite::Bijection => {
            cap_rank(rs, suite, caps)?;
            bijection_checks(rs, exec)
        }
        Suite::Nilpotence => {
            cap_rank(rs, suite, caps)?;
            let mut claims = nilpotence_checks(rs, caps.max_k, exec);
            claims.extend(abelian_checks(rs, exec));
            claims
        }
        Suite::Peterson => {
            cap_rank(rs, suite, caps)?;
            let total =
                enumerate_j_antichains_with(rs, &NodeSet::empty(rs.rank()), true, None, exec).len();
            notes.push(format!(
                "abelian ideals of the Borel: {total} (2^{} = {})",
                rs.rank(),
                1u64 << rs.rank()
            ));
            notes.extend(d_printed_count_notes(rs));
            peterson_checks(rs, exec)
        }
        Suite::Theorem2 => {
            cap_roots(rs, suite, caps.theorem2_max_roots)?;
            let run = check_equivalence(rs, exec)?;
            notes.push(format!("{} nonempty subsets checked", run.subsets_checked));
            notes.push(format!("{} satisfy all conditions", run.satisfying));
            run.claims
        }
        Suite::Classification => {
            cap_roots(rs, suite, caps.classification_max_roots)?;
            let c = classify(rs, exec)?;
            notes = c.notes;
            notes.push(format!("{} sets found", c.sets.len()));
            c.claims
        }
        Suite::Corollary => {
            cap_rank(rs, suite, caps)?;
            cap_roots(rs, suite, caps.classification_max_roots)?;
            let sets: Vec<RootSet> = classify(rs, exec)?
                .sets
                .into_iter()
                .map(|x| x.roots)
                .collect();
            notes.push(format!("{} classified sets", sets.len()));
            let mut claims = corollary_checks(rs, &sets, exec)?;
            claims.extend(i0_checks(rs, exec));
            if rs.family() == Family::F {
                claims.push(f4_corollary_fixture(rs)?);
            }
            claims
        }
    };
    Ok(SuiteReport::new(suite.name(), system, claims).with_notes(notes))
}

/// F4: `i₀(p_J)` for `J = {1,2,3}` is `{α : d₄(α) = 2}`, whose root sum is
/// `7ω₄`, and `p_{7ω₄}` is that same `p_J`.
fn f4_corollary_fixture(rs: &RootSystem) -> Result<ClaimReport> {
    let mut r =
        ClaimReport::new("F4: i₀(p_{1,2,3}) = {α : d₄(α) = 2}, Σ_S = 7ω₄, p_{ρ_S} = p_{1,2,3}");
    let s = f4_fixture(rs).expect("type F");
    let j = NodeSet::from_labels(4, &[1, 2, 3])?;
    let p_j = Parabolic::from_j(rs, &j)?;
    let i0 = irreducible_ideal_of_parabolic(rs, &p_j)?;
    let sum = Weight::from(&two_rho_s(rs, &s));
    let seven = rs.fundamental_weight(3).scale(7.into());
    let p_rho = Parabolic::from_weight(rs, &sum)?;
    let ok = i0 == s && sum == seven && p_rho.roots() == p_j.roots();
    r.check(ok, || json!({"i0": i0.to_json(rs), "sum": sum.to_string()}));
    Ok(r)
}
