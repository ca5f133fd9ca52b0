//! `ρ_S`, `S(λ)`, minimal root decompositions, and the four equivalent
//! conditions on a set of roots `S ⊂ R`.

use std::collections::{HashMap, HashSet};

use num_rational::Rational64;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::poset::RootSet;
use crate::report::ClaimReport;
use crate::rootsys::{Root, RootId, RootSystem, Weight};

/// Depth used for the minimal-decomposition condition: every element of
/// `Z₊S` that is a sum of at most this many members of `S` is examined.
pub const COND_III_DEPTH: usize = 3;

/// `2ρ_S = Σ_{α∈S} α`, as an integral vector in the simple-root basis.
pub fn two_rho_s(rs: &RootSystem, s: &RootSet) -> Root {
    rs.sum_of(s.ids())
}

/// `max λ = max_{α∈R} (λ, α)`.
pub fn max_pairing(rs: &RootSystem, lambda: &Weight) -> Result<Rational64> {
    lambda.check_rank(rs.rank())?;
    Ok(rs.max_pairing(lambda))
}

/// `S(λ) = {α ∈ R : (λ, α) = max λ}`.
pub fn s_of_lambda(rs: &RootSystem, lambda: &Weight) -> Result<RootSet> {
    let max = max_pairing(rs, lambda)?;
    Ok(rs
        .all_ids()
        .filter(|&a| rs.pairing_with_root(lambda, a) == max)
        .collect())
}

/// `S(v)` and `max v` for an integral vector `v`, with pairings scaled by
/// the form denominator. Used on the hot paths.
fn s_of_integral(rs: &RootSystem, v: &[i64]) -> (i64, Vec<RootId>) {
    let mut max = i64::MIN;
    let mut arg = Vec::new();
    for a in rs.all_ids() {
        let p = rs.pairing_scaled_vec(v, a);
        if p > max {
            max = p;
            arg.clear();
        }
        if p == max {
            arg.push(a);
        }
    }
    (max, arg)
}

fn as_i64(r: &Root) -> Vec<i64> {
    r.coeffs().iter().map(|&c| c as i64).collect()
}

/// Condition (i): `S = S(ρ_S)` and `max ρ_S > 0`. The argmax is unchanged by
/// the positive factor 2, so `2ρ_S` is used directly.
pub fn cond_i(rs: &RootSystem, s: &RootSet) -> bool {
    if s.is_empty() {
        return false;
    }
    let v = as_i64(&two_rho_s(rs, s));
    let (max, arg) = s_of_integral(rs, &v);
    max > 0 && arg == s.ids()
}

/// Condition (ii) for an explicit witness: `S = S(λ)` and `max λ > 0`.
pub fn cond_ii(rs: &RootSystem, s: &RootSet, lambda: &Weight) -> Result<bool> {
    let max = max_pairing(rs, lambda)?;
    Ok(max > Rational64::from_integer(0) && s_of_lambda(rs, lambda)? == *s)
}

/// For every pair of roots, the set of roots `γ` with `γ + δ = α + β` for
/// some root `δ`. Condition (iv) and the classification search reduce to
/// lookups here.
pub struct SumTable {
    len: usize,
    group_of_pair: Vec<u32>,
    groups: Vec<Vec<RootId>>,
}

impl SumTable {
    pub fn new(rs: &RootSystem) -> Self {
        let len = rs.num_roots();
        let mut by_sum: HashMap<Root, u32> = HashMap::new();
        let mut groups: Vec<Vec<RootId>> = Vec::new();
        let mut group_of_pair = vec![0u32; len * len];
        for a in 0..len {
            for b in 0..len {
                let sum = rs.root(a) + rs.root(b);
                let next = groups.len() as u32;
                let g = *by_sum.entry(sum).or_insert(next);
                if g == next {
                    groups.push(Vec::new());
                }
                group_of_pair[a * len + b] = g;
                groups[g as usize].push(a);
            }
        }
        for g in &mut groups {
            g.sort_unstable();
            g.dedup();
        }
        Self {
            len,
            group_of_pair,
            groups,
        }
    }

    /// Roots `γ` such that `α + β - γ` is a root.
    pub fn decompositions(&self, a: RootId, b: RootId) -> &[RootId] {
        &self.groups[self.group_of_pair[a * self.len + b] as usize]
    }
}

/// Condition (iv) with a membership mask over all root ids.
pub(crate) fn cond_iv_mask(
    rs: &RootSystem,
    table: &SumTable,
    ids: &[RootId],
    member: &[bool],
) -> bool {
    if ids.is_empty() {
        return false;
    }
    for (k, &a) in ids.iter().enumerate() {
        for &b in &ids[k..] {
            if a == rs.neg(b) || rs.add(a, b).is_some() {
                return false;
            }
            if !table.decompositions(a, b).iter().all(|&g| member[g]) {
                return false;
            }
        }
    }
    true
}

fn mask_of(rs: &RootSystem, s: &RootSet) -> Vec<bool> {
    let mut m = vec![false; rs.num_roots()];
    for a in s.iter() {
        m[a] = true;
    }
    m
}

/// Condition (iv): no two members of `S` sum to a root, and every way of
/// writing an element of `S + S` as a sum of two roots uses members of `S`.
///
/// `S` may not contain a pair `±α` either. Without that the only extra set
/// is `S = R` in type A1, where `ρ_S = 0`.
pub fn cond_iv(rs: &RootSystem, s: &RootSet) -> bool {
    cond_iv_with(rs, &SumTable::new(rs), s)
}

pub fn cond_iv_with(rs: &RootSystem, table: &SumTable, s: &RootSet) -> bool {
    cond_iv_mask(rs, table, s.ids(), &mask_of(rs, s))
}

/// Every multiset of at most `depth` roots, grouped by its sum. The
/// minimal decompositions of any `η` with `bod(η) ≤ depth` are among them.
pub struct Decompositions {
    depth: usize,
    by_sum: HashMap<Vec<i32>, Vec<Vec<RootId>>>,
}

impl Decompositions {
    pub fn new(rs: &RootSystem, depth: usize) -> Self {
        let mut by_sum: HashMap<Vec<i32>, Vec<Vec<RootId>>> = HashMap::new();
        let mut stack: Vec<RootId> = Vec::new();
        let mut sum = vec![0i32; rs.rank()];
        fn walk(
            rs: &RootSystem,
            depth: usize,
            start: RootId,
            stack: &mut Vec<RootId>,
            sum: &mut Vec<i32>,
            out: &mut HashMap<Vec<i32>, Vec<Vec<RootId>>>,
        ) {
            out.entry(sum.clone()).or_default().push(stack.clone());
            if stack.len() == depth {
                return;
            }
            for a in start..rs.num_roots() {
                for (x, c) in sum.iter_mut().zip(rs.coeffs(a)) {
                    *x += c;
                }
                stack.push(a);
                walk(rs, depth, a, stack, sum, out);
                stack.pop();
                for (x, c) in sum.iter_mut().zip(rs.coeffs(a)) {
                    *x -= c;
                }
            }
        }
        walk(rs, depth, 0, &mut stack, &mut sum, &mut by_sum);
        Self { depth, by_sum }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `bod(η)` if it is at most the table depth.
    pub fn bod(&self, eta: &[i32]) -> Option<usize> {
        self.by_sum
            .get(eta)
            .and_then(|ms| ms.iter().map(Vec::len).min())
    }

    /// Every decomposition of `η` into at most `depth` roots.
    pub fn of(&self, eta: &[i32]) -> &[Vec<RootId>] {
        self.by_sum.get(eta).map_or(&[], Vec::as_slice)
    }

    /// The sums present in the table.
    pub fn sums(&self) -> impl Iterator<Item = &Vec<i32>> {
        self.by_sum.keys()
    }
}

/// `bod(η)`: the least number of roots (any signs, repetition allowed)
/// summing to `η`, by breadth-first search from 0. `η` must lie in the root
/// lattice; `bod(η)` never exceeds the sum of the absolute values of its
/// coefficients, which bounds the search.
pub fn bod(rs: &RootSystem, eta: &[i32]) -> Result<usize> {
    if eta.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: eta.len(),
        });
    }
    let bound: usize = eta.iter().map(|c| c.unsigned_abs() as usize).sum();
    let target = eta.to_vec();
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut layer = vec![vec![0i32; rs.rank()]];
    seen.insert(layer[0].clone());
    for d in 0..=bound {
        if layer.contains(&target) {
            return Ok(d);
        }
        let mut next = Vec::new();
        for v in &layer {
            for a in rs.all_ids() {
                let w: Vec<i32> = v.iter().zip(rs.coeffs(a)).map(|(x, c)| x + c).collect();
                if seen.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    unreachable!("a lattice vector is a sum of at most its coefficient L1 norm simple roots")
}

/// Condition (iii), checked on every `η ∈ Z₊S` that is a sum of at most
/// `table.depth()` members of `S`: each decomposition of `η` over `S` has
/// length `bod(η)`, and each minimal decomposition over `R` uses only `S`.
pub fn cond_iii_with(rs: &RootSystem, table: &Decompositions, s: &RootSet) -> bool {
    if s.is_empty() {
        return false;
    }
    let member = mask_of(rs, s);
    let ids = s.ids();
    let mut stack = Vec::new();
    let mut sum = vec![0i32; rs.rank()];
    cond_iii_walk(rs, table, ids, &member, 0, &mut stack, &mut sum)
}

fn cond_iii_walk(
    rs: &RootSystem,
    table: &Decompositions,
    ids: &[RootId],
    member: &[bool],
    start: usize,
    stack: &mut Vec<RootId>,
    sum: &mut Vec<i32>,
) -> bool {
    if !stack.is_empty() {
        let bod = table
            .bod(sum)
            .expect("the S-decomposition itself is in the table");
        if bod != stack.len() {
            return false;
        }
        let minimal_ok = table
            .of(sum)
            .iter()
            .filter(|m| m.len() == bod)
            .all(|m| m.iter().all(|&a| member[a]));
        if !minimal_ok {
            return false;
        }
    }
    if stack.len() == table.depth() {
        return true;
    }
    for k in start..ids.len() {
        let a = ids[k];
        for (x, c) in sum.iter_mut().zip(rs.coeffs(a)) {
            *x += c;
        }
        stack.push(a);
        let ok = cond_iii_walk(rs, table, ids, member, k, stack, sum);
        stack.pop();
        for (x, c) in sum.iter_mut().zip(rs.coeffs(a)) {
            *x -= c;
        }
        if !ok {
            return false;
        }
    }
    true
}

pub fn cond_iii(rs: &RootSystem, s: &RootSet) -> bool {
    cond_iii_with(rs, &Decompositions::new(rs, COND_III_DEPTH), s)
}

/// Largest root count for which [`check_equivalence`] walks every subset.
pub const EXHAUSTIVE_MAX_ROOTS: usize = 14;

/// Summary of an exhaustive equivalence run.
pub struct EquivalenceRun {
    pub claims: Vec<ClaimReport>,
    pub subsets_checked: u64,
    pub satisfying: u64,
}

/// Checks (i) ⇔ (iii) ⇔ (iv) and (i) ⇒ (ii) with `λ = 2ρ_S` on every
/// nonempty `S ⊆ R`, plus (ii) ⇒ (iv) on `S(λ)` for every dominant `λ`
/// with Dynkin labels in `{0, 1, 2}` (enough, since all four conditions
/// are `W`-invariant), and agreement of the two `bod` computations.
pub fn check_equivalence(rs: &RootSystem, exec: Exec) -> Result<EquivalenceRun> {
    let len = rs.num_roots();
    if len > EXHAUSTIVE_MAX_ROOTS {
        return Err(Error::ScaleCap(format!(
            "{} has {len} roots; subset exhaustion is capped at {EXHAUSTIVE_MAX_ROOTS}",
            rs.spec()
        )));
    }
    let sums = SumTable::new(rs);
    let decomps = Decompositions::new(rs, COND_III_DEPTH);
    let total: u64 = 1 << len;
    let parts = exec.map_blocks(total, 1 << 10, |range| {
        let mut i_iv = ClaimReport::new("");
        let mut i_iii = ClaimReport::new("");
        let mut i_ii = ClaimReport::new("");
        let mut satisfying = 0u64;
        for mask in range.filter(|&m| m != 0) {
            let s = RootSet::from_mask(mask as u128);
            let member: Vec<bool> = (0..len).map(|a| mask >> a & 1 == 1).collect();
            let c1 = cond_i(rs, &s);
            let c4 = cond_iv_mask(rs, &sums, s.ids(), &member);
            let c3 = cond_iii_with(rs, &decomps, &s);
            let payload = || json!({"S": s.to_json(rs), "i": c1, "iii": c3, "iv": c4});
            i_iv.check(c1 == c4, payload);
            i_iii.check(c1 == c3, payload);
            if c1 {
                satisfying += 1;
                let lambda = Weight::from(&two_rho_s(rs, &s));
                let ok = cond_ii(rs, &s, &lambda).unwrap_or(false);
                i_ii.check(ok, || json!({"S": s.to_json(rs)}));
            }
        }
        (i_iv, i_iii, i_ii, satisfying)
    });
    let mut satisfying = 0;
    let (mut a, mut b, mut c) = (Vec::new(), Vec::new(), Vec::new());
    for (x, y, z, n) in parts {
        a.push(x);
        b.push(y);
        c.push(z);
        satisfying += n;
    }
    let claims = vec![
        ClaimReport::merged("(i) ⇔ (iv) on every nonempty S ⊆ R", a),
        ClaimReport::merged(
            format!("(i) ⇔ (iii) on every nonempty S ⊆ R (Z₊S depth {COND_III_DEPTH})"),
            b,
        ),
        ClaimReport::merged("(i) ⇒ (ii) with λ = 2ρ_S", c),
        dominant_witnesses(rs, &sums),
        bod_agreement(rs, &decomps),
    ];
    Ok(EquivalenceRun {
        claims,
        subsets_checked: total - 1,
        satisfying,
    })
}

/// (ii) ⇒ (iv): `S(λ)` satisfies (iv) for dominant `λ ≠ 0` with small
/// Dynkin labels.
pub fn dominant_witnesses(rs: &RootSystem, sums: &SumTable) -> ClaimReport {
    let mut report = ClaimReport::new("(ii) ⇒ (iv): S(λ) for dominant λ, Dynkin labels in {0,1,2}");
    let n = rs.rank();
    let omegas: Vec<Weight> = (0..n).map(|i| rs.fundamental_weight(i)).collect();
    for code in 1..3usize.pow(n as u32) {
        let mut lambda = Weight::zero(n);
        let mut c = code;
        for w in &omegas {
            lambda = lambda.add(&w.scale(Rational64::from_integer((c % 3) as i64)));
            c /= 3;
        }
        let s = s_of_lambda(rs, &lambda).expect("rank matches");
        report.check(
            cond_iv_with(rs, sums, &s),
            || json!({"lambda": lambda.to_string(), "S": s.to_json(rs)}),
        );
    }
    report
}

/// The multiset table and the breadth-first search give the same `bod`
/// on every sum of at most [`COND_III_DEPTH`] roots.
pub fn bod_agreement(rs: &RootSystem, table: &Decompositions) -> ClaimReport {
    let mut report = ClaimReport::new("bod: multiset table = breadth-first search");
    let mut sums: Vec<&Vec<i32>> = table.sums().collect();
    sums.sort();
    for eta in sums {
        let t = table.bod(eta);
        let b = bod(rs, eta).ok();
        report.check(t == b, || json!({"eta": eta, "table": t, "bfs": b}));
    }
    report
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
    fn two_rho_examples() {
        let a2 = sys("A2");
        let theta = RootSet::new(vec![a2.theta()]);
        assert_eq!(two_rho_s(&a2, &theta), *a2.theta_root());
        assert!(two_rho_s(&a2, &RootSet::empty()).is_zero());
    }

    #[test]
    fn s_of_lambda_examples() {
        let a2 = sys("A2");
        let zero = Weight::zero(2);
        assert_eq!(
            max_pairing(&a2, &zero).unwrap(),
            Rational64::from_integer(0)
        );
        assert_eq!(s_of_lambda(&a2, &zero).unwrap().len(), 6);
        let w1 = a2.fundamental_weight(0);
        assert_eq!(
            s_of_lambda(&a2, &w1).unwrap(),
            set(&a2, &[&[1, 0], &[1, 1]])
        );
        for s in ["A3", "A5", "D4", "D5", "E6"] {
            let rs = sys(s);
            let theta = Weight::from(rs.theta_root());
            assert_eq!(
                s_of_lambda(&rs, &theta).unwrap(),
                RootSet::new(vec![rs.theta()]),
                "{s}"
            );
        }
    }

    #[test]
    fn s_of_lambda_is_scale_invariant() {
        let rs = sys("B3");
        for a in rs.all_ids() {
            let lambda = Weight::from(rs.root(a)).add(&rs.fundamental_weight(1));
            let base = s_of_lambda(&rs, &lambda).unwrap();
            for c in [Rational64::from_integer(2), Rational64::new(1, 3)] {
                assert_eq!(s_of_lambda(&rs, &lambda.scale(c)).unwrap(), base);
            }
        }
    }

    #[test]
    fn bod_examples() {
        let a2 = sys("A2");
        assert_eq!(bod(&a2, &[0, 0]).unwrap(), 0);
        for a in a2.all_ids() {
            assert_eq!(bod(&a2, a2.coeffs(a)).unwrap(), 1);
        }
        assert_eq!(bod(&a2, &[2, 2]).unwrap(), 2);
        assert!(bod(&a2, &[1]).is_err());
    }

    #[test]
    fn theta_alone_satisfies_everything() {
        for s in ["A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"] {
            let rs = sys(s);
            let t = RootSet::new(vec![rs.theta()]);
            assert!(cond_i(&rs, &t), "{s}");
            assert!(cond_iv(&rs, &t), "{s}");
            assert!(
                cond_ii(&rs, &t, &Weight::from(rs.theta_root())).unwrap(),
                "{s}"
            );
        }
        assert!(cond_iii(&sys("B2"), &RootSet::new(vec![sys("B2").theta()])));
    }

    #[test]
    fn a_simple_root_of_a2_is_admissible() {
        // Σ_S = α1 pairs to 2 with α1 and 1 with θ; 2α1 has no other
        // decomposition into two roots.
        let a2 = sys("A2");
        let s = set(&a2, &[&[1, 0]]);
        assert!(cond_i(&a2, &s));
        assert!(cond_iii(&a2, &s));
        assert!(cond_iv(&a2, &s));
    }

    #[test]
    fn g2_short_roots_fail() {
        let g2 = sys("G2");
        let table = SumTable::new(&g2);
        for a in g2.all_ids().filter(|&a| !g2.is_long(a)) {
            assert!(!cond_iv_with(&g2, &table, &RootSet::new(vec![a])));
        }
    }

    #[test]
    fn opposite_pairs_only_matter_in_a1() {
        // Oracle: the statement without the `±α` exclusion, straight from
        // the definition of `S + S`.
        fn literal(rs: &RootSystem, s: &RootSet) -> bool {
            let sums: HashSet<Root> = s
                .iter()
                .flat_map(|a| s.iter().map(move |b| rs.root(a) + rs.root(b)))
                .collect();
            !s.is_empty()
                && s.iter().all(|a| s.iter().all(|b| rs.add(a, b).is_none()))
                && rs.all_ids().filter(|g| !s.contains(*g)).all(|g| {
                    rs.all_ids()
                        .all(|d| !sums.contains(&(rs.root(g) + rs.root(d))))
                })
        }
        let a1 = sys("A1");
        let full = RootSet::from_mask(0b11);
        assert!(literal(&a1, &full) && !cond_iv(&a1, &full));
        for s in ["A2", "B2", "G2"] {
            let rs = sys(s);
            let table = SumTable::new(&rs);
            for mask in 1..1u128 << rs.num_roots() {
                let set = RootSet::from_mask(mask);
                assert_eq!(
                    literal(&rs, &set),
                    cond_iv_with(&rs, &table, &set),
                    "{s} {mask:b}"
                );
            }
        }
    }

    #[test]
    fn equivalence_on_small_systems() {
        for (s, subsets) in [
            ("A1", 3),
            ("A2", 63),
            ("B2", 255),
            ("A3", 4095),
            ("G2", 4095),
        ] {
            let run = check_equivalence(&sys(s), Exec::default()).unwrap();
            assert_eq!(run.subsets_checked, subsets);
            for c in &run.claims {
                assert!(c.passed(), "{s} {}: {:?}", c.claim, c.failures);
            }
            assert!(run.satisfying > 0);
        }
        assert!(matches!(
            check_equivalence(&sys("B3"), Exec::default()),
            Err(Error::ScaleCap(_))
        ));
    }
}
