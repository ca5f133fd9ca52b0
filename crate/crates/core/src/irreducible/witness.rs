//! Witnesses for the two counting facts behind (iv) ⇒ (i) on long roots.

use serde_json::json;

use crate::error::{Error, Result};
use crate::poset::RootSet;
use crate::report::ClaimReport;
use crate::rootsys::{RootId, RootSystem};

use super::conditions::cond_iv;

/// `#α^⊥ = #{γ ∈ S : (α, γ) = 0}` for each `α ∈ S`. `S` must consist of
/// long roots and satisfy (iv).
pub fn perp_census(rs: &RootSystem, s: &RootSet) -> Result<Vec<(RootId, usize)>> {
    if let Some(a) = s.iter().find(|&a| !rs.is_long(a)) {
        return Err(Error::Precondition(format!(
            "{} is not a long root",
            rs.root(a)
        )));
    }
    if !cond_iv(rs, s) {
        return Err(Error::Precondition(format!(
            "{} does not satisfy (iv)",
            s.display(rs)
        )));
    }
    Ok(census(rs, s))
}

fn census(rs: &RootSystem, s: &RootSet) -> Vec<(RootId, usize)> {
    s.iter()
        .map(|a| {
            (
                a,
                s.iter().filter(|&g| rs.pairing_scaled(a, g) == 0).count(),
            )
        })
        .collect()
}

/// For `β` long and `(α, β) = 0`, some `γ, γ' ∈ R` with `γ ∉ {α, β}` and
/// `α + β = γ + γ'`. `None` would contradict the lemma.
pub fn lemone_witness(rs: &RootSystem, a: RootId, b: RootId) -> Result<Option<(RootId, RootId)>> {
    if !rs.is_long(b) {
        return Err(Error::Precondition(format!(
            "{} is not a long root",
            rs.root(b)
        )));
    }
    if rs.pairing_scaled(a, b) != 0 {
        return Err(Error::Precondition(format!(
            "({}, {}) ≠ 0",
            rs.root(a),
            rs.root(b)
        )));
    }
    let sum = rs.root(a) + rs.root(b);
    Ok(rs
        .all_ids()
        .filter(|&g| g != a && g != b)
        .find_map(|g| rs.id_of_root(&(&sum - rs.root(g))).map(|g2| (g, g2))))
}

/// The witness exists for every qualifying ordered pair.
pub fn lemone_checks(rs: &RootSystem) -> ClaimReport {
    let mut report = ClaimReport::new("lemone: β long, (α,β) = 0 ⇒ α+β = γ+γ' with γ ∉ {α,β}");
    for b in rs.all_ids().filter(|&b| rs.is_long(b)) {
        for a in rs.all_ids().filter(|&a| rs.pairing_scaled(a, b) == 0) {
            let w = lemone_witness(rs, a, b).expect("preconditions hold");
            report.check(
                w.is_some(),
                || json!({"alpha": rs.root(a).coeffs(), "beta": rs.root(b).coeffs()}),
            );
        }
    }
    report
}

/// `#α^⊥ = #β^⊥` for all `α, β ∈ S`, on every long-root set in `sets`.
/// Sets containing a short root are skipped.
pub fn perp_checks(rs: &RootSystem, sets: &[RootSet]) -> ClaimReport {
    let mut report = ClaimReport::new("#α^⊥ is constant on S for long-root S satisfying (iv)");
    for s in sets.iter().filter(|s| s.iter().all(|a| rs.is_long(a))) {
        let counts = census(rs, s);
        let ok = counts.windows(2).all(|w| w[0].1 == w[1].1);
        report.check(ok, || {
            json!({"S": s.to_json(rs), "census": counts.iter().map(|c| c.1).collect::<Vec<_>>()})
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn census_of_theta() {
        let rs = sys("B3");
        let theta = RootSet::new(vec![rs.theta()]);
        assert_eq!(perp_census(&rs, &theta).unwrap(), vec![(rs.theta(), 0)]);
        let short = RootSet::new(vec![rs.simple(2)]);
        assert!(perp_census(&rs, &short).is_err());
        let bad = RootSet::new(vec![rs.simple(0), rs.simple(1)]);
        assert!(perp_census(&rs, &bad).is_err());
    }

    #[test]
    fn d4_witness() {
        // α = ε1 - ε2 = α1, β = ε3 + ε4 = α4 in the Bourbaki labelling.
        let rs = sys("D4");
        let a = rs.id_of(&[1, 0, 0, 0]).unwrap();
        let b = rs.id_of(&[0, 0, 0, 1]).unwrap();
        let (g, g2) = lemone_witness(&rs, a, b).unwrap().unwrap();
        assert!(g != a && g != b);
        assert_eq!(&(rs.root(g) + rs.root(g2)), &(rs.root(a) + rs.root(b)));
        assert!(lemone_witness(&rs, a, a).is_err());
    }

    #[test]
    fn lemone_everywhere_small() {
        for s in ["A1", "A3", "B3", "C3", "D4", "G2", "F4"] {
            let r = lemone_checks(&sys(s));
            assert!(r.passed(), "{s}: {:?}", r.failures);
        }
    }
}
