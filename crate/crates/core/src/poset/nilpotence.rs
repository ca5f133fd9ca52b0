//! Nilpotence of ideals and the two abelian/nilpotence criteria on antichains.

use crate::error::{Error, Result};
use crate::rootsys::{RootId, RootSystem};

use super::order::{is_j_antichain, require_positive};
use super::{NodeSet, RootSet};

/// Searches multisets of `size` members of `pool` (repetition allowed) whose
/// running sum stays `≤ θ`, and reports whether `accept` holds for some full
/// sum. Sums of positive roots only grow, so a partial sum above `θ` in any
/// coordinate can be dropped.
fn any_multiset_below_theta(
    rs: &RootSystem,
    pool: &[RootId],
    size: usize,
    accept: &dyn Fn(&[i32]) -> bool,
) -> bool {
    fn go(
        rs: &RootSystem,
        pool: &[RootId],
        start: usize,
        left: usize,
        sum: &mut Vec<i32>,
        theta: &[i32],
        accept: &dyn Fn(&[i32]) -> bool,
    ) -> bool {
        if left == 0 {
            return accept(sum);
        }
        for k in start..pool.len() {
            let c = rs.coeffs(pool[k]);
            for (s, x) in sum.iter_mut().zip(c) {
                *s += x;
            }
            let fits = sum.iter().zip(theta).all(|(s, t)| s <= t);
            let hit = fits && go(rs, pool, k, left - 1, sum, theta, accept);
            for (s, x) in sum.iter_mut().zip(c) {
                *s -= x;
            }
            if hit {
                return true;
            }
        }
        false
    }
    let theta = rs.theta_root().coeffs().to_vec();
    let mut sum = vec![0; rs.rank()];
    go(rs, pool, 0, size, &mut sum, &theta, accept)
}

/// Least `k` such that no `k + 1` members of `Φ` (repetition allowed) sum
/// to a root. Abelian ideals have nilpotence 1; the empty set has 0.
pub fn nilpotence_of_ideal(rs: &RootSystem, phi: &RootSet) -> Result<usize> {
    require_positive(rs, phi)?;
    if phi.is_empty() {
        return Ok(0);
    }
    let is_root = |v: &[i32]| rs.is_root(v);
    // Any k + 1 > Ht(θ) positive roots sum above θ, so k = Ht(θ) always works.
    let cap = rs.height(rs.theta()) as usize;
    for k in 1..=cap {
        if !any_multiset_below_theta(rs, phi.ids(), k + 1, &is_root) {
            return Ok(k);
        }
    }
    Ok(cap)
}

/// True iff every multiset of `k + 1` members of `A` has a sum `≰ θ`.
pub fn antichain_sum_criterion(rs: &RootSystem, a: &RootSet, k: usize) -> Result<bool> {
    require_positive(rs, a)?;
    Ok(!any_multiset_below_theta(rs, a.ids(), k + 1, &|_| true))
}

/// Pairwise abelian condition: some node has `d_i(α) + d_i(β) > d_i(θ)`.
pub fn abelian_pair(rs: &RootSystem, a: RootId, b: RootId) -> bool {
    let t = rs.theta_root().coeffs();
    let (x, y) = (rs.coeffs(a), rs.coeffs(b));
    (0..rs.rank()).any(|i| x[i] + y[i] > t[i])
}

/// Single-root abelian condition: some node has `2 d_i(α) > d_i(θ)`.
pub fn abelian_single(rs: &RootSystem, a: RootId) -> bool {
    abelian_pair(rs, a, a)
}

/// Abelian test for a `J`-antichain through the coefficient conditions
/// against `θ`, without building the ideal.
pub fn is_abelian_j_antichain(rs: &RootSystem, a: &RootSet, j: &NodeSet) -> Result<bool> {
    if !is_j_antichain(rs, a, j)? {
        return Err(Error::Precondition(format!(
            "{} is not a {j}-antichain",
            a.display(rs)
        )));
    }
    let ids = a.ids();
    let pairs = ids
        .iter()
        .enumerate()
        .all(|(k, &x)| ids[k + 1..].iter().all(|&y| abelian_pair(rs, x, y)));
    Ok(pairs && ids.iter().all(|&x| abelian_single(rs, x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::order::ideal_from_antichain;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    /// Oracle: literal definition over all multisets, no pruning.
    fn nilpotence_brute(rs: &RootSystem, phi: &[RootId]) -> usize {
        fn exists(
            rs: &RootSystem,
            phi: &[RootId],
            start: usize,
            left: usize,
            sum: Vec<i32>,
        ) -> bool {
            if left == 0 {
                return rs.is_root(&sum);
            }
            (start..phi.len()).any(|k| {
                let s: Vec<i32> = sum
                    .iter()
                    .zip(rs.coeffs(phi[k]))
                    .map(|(a, b)| a + b)
                    .collect();
                exists(rs, phi, k, left - 1, s)
            })
        }
        if phi.is_empty() {
            return 0;
        }
        (1..)
            .find(|&k| !exists(rs, phi, 0, k + 1, vec![0; rs.rank()]))
            .unwrap()
    }

    #[test]
    fn nilpotence_examples() {
        for s in ["A2", "B2", "G2", "C3"] {
            let rs = sys(s);
            let theta = RootSet::new(vec![rs.theta()]);
            assert_eq!(nilpotence_of_ideal(&rs, &theta).unwrap(), 1);
            assert_eq!(nilpotence_of_ideal(&rs, &RootSet::empty()).unwrap(), 0);
        }
        let a2 = sys("A2");
        let all: RootSet = a2.positive_ids().collect();
        assert_eq!(nilpotence_of_ideal(&a2, &all).unwrap(), 2);
        let b2 = sys("B2");
        let all: RootSet = b2.positive_ids().collect();
        assert_eq!(nilpotence_of_ideal(&b2, &all).unwrap(), 3);
        assert_eq!(nilpotence_brute(&b2, all.ids()), 3);
    }

    #[test]
    fn pruned_search_matches_brute_force_on_full_borel() {
        for s in ["A3", "B3", "C3", "G2", "A4"] {
            let rs = sys(s);
            let all: RootSet = rs.positive_ids().collect();
            assert_eq!(
                nilpotence_of_ideal(&rs, &all).unwrap(),
                nilpotence_brute(&rs, all.ids()),
                "{s}"
            );
        }
    }

    #[test]
    fn sum_criterion_examples() {
        let a2 = sys("A2");
        let theta = RootSet::new(vec![a2.theta()]);
        assert!(antichain_sum_criterion(&a2, &theta, 1).unwrap());
        let a3 = sys("A3");
        let pair = RootSet::from_coeffs(&a3, &[&[1, 1, 0], &[0, 1, 1]]).unwrap();
        // (1,2,1), (2,2,0), (0,2,2) all exceed θ = (1,1,1) in some coordinate.
        assert!(antichain_sum_criterion(&a3, &pair, 1).unwrap());
        let simples = RootSet::from_coeffs(&a3, &[&[1, 0, 0], &[0, 0, 1]]).unwrap();
        assert!(!antichain_sum_criterion(&a3, &simples, 1).unwrap());
    }

    #[test]
    fn abelian_examples() {
        let e = NodeSet::empty(2);
        let a2 = sys("A2");
        let theta = RootSet::new(vec![a2.theta()]);
        assert!(is_abelian_j_antichain(&a2, &theta, &e).unwrap());

        let a1 = RootSet::from_coeffs(&a2, &[&[1, 0]]).unwrap();
        let expected =
            nilpotence_of_ideal(&a2, &ideal_from_antichain(&a2, &a1, &e).unwrap()).unwrap() <= 1;
        assert!(expected);
        assert_eq!(is_abelian_j_antichain(&a2, &a1, &e).unwrap(), expected);

        let b2 = sys("B2");
        let short = RootSet::from_coeffs(&b2, &[&[0, 1]]).unwrap();
        let phi = ideal_from_antichain(&b2, &short, &e).unwrap();
        assert_eq!(nilpotence_of_ideal(&b2, &phi).unwrap(), 2);
        assert!(!is_abelian_j_antichain(&b2, &short, &e).unwrap());

        let bad = RootSet::from_coeffs(&a2, &[&[1, 0], &[1, 1]]).unwrap();
        assert!(is_abelian_j_antichain(&a2, &bad, &e).is_err());
    }
}
