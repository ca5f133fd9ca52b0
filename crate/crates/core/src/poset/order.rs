//! Dominance order, `J`-antichains, `J`-ideals and the bijection between them.

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootId, RootSystem};

use super::{NodeSet, RootSet};

/// `α ≤ β` iff `β - α` is a nonnegative combination of simple roots.
pub fn leq(a: &Root, b: &Root) -> bool {
    a.le(b)
}

pub fn leq_ids(rs: &RootSystem, a: RootId, b: RootId) -> bool {
    rs.root(a).le(rs.root(b))
}

/// `(R(J), R⁺(J))`: the roots supported on `J`.
pub fn restricted_roots(rs: &RootSystem, j: &NodeSet) -> (RootSet, RootSet) {
    let all: RootSet = rs
        .all_ids()
        .filter(|&id| j.supports(rs.coeffs(id)))
        .collect();
    let pos = all.iter().filter(|&id| rs.is_positive(id)).collect();
    (all, pos)
}

pub(crate) fn require_positive(rs: &RootSystem, set: &RootSet) -> Result<()> {
    match set.iter().find(|&id| !rs.is_positive(id)) {
        Some(id) => Err(Error::NotAPositiveRoot(rs.coeffs(id).to_vec())),
        None => Ok(()),
    }
}

/// Whether a single positive root may belong to a `J`-antichain: it lies
/// outside `R⁺(J)` and `α - α_j` is not a root for any `j ∈ J`.
pub fn j_admissible(rs: &RootSystem, id: RootId, j: &NodeSet) -> bool {
    !j.supports(rs.coeffs(id)) && j.iter().all(|n| rs.sub(id, rs.simple(n)).is_none())
}

pub fn is_j_antichain(rs: &RootSystem, a: &RootSet, j: &NodeSet) -> Result<bool> {
    require_positive(rs, a)?;
    if !a.iter().all(|id| j_admissible(rs, id, j)) {
        return Ok(false);
    }
    let ids = a.ids();
    for (k, &x) in ids.iter().enumerate() {
        for &y in &ids[k + 1..] {
            if leq_ids(rs, x, y) || leq_ids(rs, y, x) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_j_ideal(rs: &RootSystem, phi: &RootSet, j: &NodeSet) -> Result<bool> {
    require_positive(rs, phi)?;
    if phi.iter().any(|id| j.supports(rs.coeffs(id))) {
        return Ok(false);
    }
    for a in phi.iter() {
        for b in rs.all_ids() {
            if !rs.is_positive(b) && !j.supports(rs.coeffs(b)) {
                continue;
            }
            if let Some(s) = rs.add(a, b) {
                if !phi.contains(s) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Up-set of a set of positive roots, without any precondition.
pub fn up_closure(rs: &RootSystem, a: &RootSet) -> RootSet {
    rs.positive_ids()
        .filter(|&x| a.iter().any(|b| leq_ids(rs, b, x)))
        .collect()
}

/// `Φ(A) = ⋃_{β∈A} {α ∈ R⁺ : α ≥ β}` for a `J`-antichain `A`.
pub fn ideal_from_antichain(rs: &RootSystem, a: &RootSet, j: &NodeSet) -> Result<RootSet> {
    if !is_j_antichain(rs, a, j)? {
        return Err(Error::Precondition(format!(
            "{} is not a {j}-antichain",
            a.display(rs)
        )));
    }
    Ok(up_closure(rs, a))
}

/// The `≤`-minimal members of `Φ`.
pub fn minimal_elements(rs: &RootSystem, phi: &RootSet) -> RootSet {
    phi.iter()
        .filter(|&x| !phi.iter().any(|y| y != x && leq_ids(rs, y, x)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn set(rs: &RootSystem, roots: &[&[i32]]) -> RootSet {
        RootSet::from_coeffs(rs, roots).unwrap()
    }

    #[test]
    fn leq_examples() {
        let a3 = sys("A3");
        assert!(leq(&Root::new(vec![1, 0, 0]), a3.theta_root()));
        let a2 = sys("A2");
        assert!(!leq(a2.root(a2.simple(0)), a2.root(a2.simple(1))));
        // Brute force over A2's three positive roots.
        let strict = a2
            .positive_ids()
            .flat_map(|x| a2.positive_ids().map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && leq_ids(&a2, x, y))
            .count();
        assert_eq!(strict, 2);
    }

    #[test]
    fn restricted_roots_examples() {
        let a3 = sys("A3");
        let (_, pos) = restricted_roots(&a3, &NodeSet::from_labels(3, &[1, 2]).unwrap());
        assert_eq!(pos, set(&a3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]));
        let (all, pos) = restricted_roots(&a3, &NodeSet::empty(3));
        assert!(all.is_empty() && pos.is_empty());
        let b3 = sys("B3");
        let (all, pos) = restricted_roots(&b3, &NodeSet::from_labels(3, &[2, 3]).unwrap());
        assert_eq!(pos.len(), 4);
        assert_eq!(all.len(), 8);
    }

    #[test]
    fn antichain_examples() {
        for s in ["A3", "B2", "G2", "F4"] {
            let rs = sys(s);
            let theta = RootSet::new(vec![rs.theta()]);
            assert!(is_j_antichain(&rs, &theta, &NodeSet::empty(rs.rank())).unwrap());
        }
        let a2 = sys("A2");
        let comparable = set(&a2, &[&[1, 0], &[1, 1]]);
        assert!(!is_j_antichain(&a2, &comparable, &NodeSet::empty(2)).unwrap());

        let a3 = sys("A3");
        let pair = set(&a3, &[&[1, 1, 0], &[0, 1, 1]]);
        let j = |l: &[usize]| NodeSet::from_labels(3, l).unwrap();
        assert!(is_j_antichain(&a3, &pair, &j(&[])).unwrap());
        // α_{1,2} - α_2 = α_1 and α_{2,3} - α_2 = α_3 are roots.
        assert!(!is_j_antichain(&a3, &pair, &j(&[2])).unwrap());
        // α_{1,2} - α_1 = α_2 is a root.
        assert!(!is_j_antichain(&a3, &pair, &j(&[1])).unwrap());

        let neg = RootSet::new(vec![a3.neg(0)]);
        assert!(matches!(
            is_j_antichain(&a3, &neg, &j(&[])),
            Err(Error::NotAPositiveRoot(_))
        ));
    }

    #[test]
    fn ideal_examples() {
        for s in ["A3", "B3", "G2"] {
            let rs = sys(s);
            let n = rs.rank();
            let theta = RootSet::new(vec![rs.theta()]);
            assert!(is_j_ideal(&rs, &theta, &NodeSet::empty(n)).unwrap());
            let all: RootSet = rs.positive_ids().collect();
            assert!(is_j_ideal(&rs, &all, &NodeSet::empty(n)).unwrap());
            assert!(!is_j_ideal(&rs, &all, &NodeSet::from_labels(n, &[1]).unwrap()).unwrap());
        }
        let a2 = sys("A2");
        assert!(!is_j_ideal(&a2, &set(&a2, &[&[1, 0]]), &NodeSet::empty(2)).unwrap());
    }

    #[test]
    fn bijection_examples() {
        let a2 = sys("A2");
        let e = NodeSet::empty(2);
        let theta = RootSet::new(vec![a2.theta()]);
        assert_eq!(ideal_from_antichain(&a2, &theta, &e).unwrap(), theta);
        assert_eq!(minimal_elements(&a2, &theta), theta);

        let a1 = set(&a2, &[&[1, 0]]);
        let up = ideal_from_antichain(&a2, &a1, &e).unwrap();
        assert_eq!(up, set(&a2, &[&[1, 0], &[1, 1]]));
        assert_eq!(minimal_elements(&a2, &up), a1);

        let bad = set(&a2, &[&[1, 0], &[1, 1]]);
        assert!(matches!(
            ideal_from_antichain(&a2, &bad, &e),
            Err(Error::Precondition(_))
        ));
    }
}
