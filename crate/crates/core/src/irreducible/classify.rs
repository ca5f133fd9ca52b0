//! Every `S ⊂ R` satisfying condition (iv), found by a closure search, and
//! its identification with the explicit families of the classical types.

use std::collections::{HashMap, HashSet};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::poset::RootSet;
use crate::report::ClaimReport;
use crate::rootsys::{format_epsilon, Family, Root, RootId, RootSystem, Weight};

use super::conditions::{
    cond_i, cond_iii_with, cond_iv_mask, two_rho_s, Decompositions, SumTable, COND_III_DEPTH,
};

/// Root count up to which the search is cross-checked against all subsets.
pub const SUBSET_CROSS_CHECK_MAX_ROOTS: usize = 18;

/// Root count up to which condition (iii) is evaluated on every found set.
pub const COND_III_MAX_ROOTS: usize = 72;

const UNKNOWN: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

struct Search<'a> {
    rs: &'a RootSystem,
    table: &'a SumTable,
}

impl Search<'_> {
    /// Adds `a` and everything condition (iv) then forces. Fails if a forced
    /// root was already excluded or two members are incompatible.
    fn include(&self, state: &mut [u8], members: &mut Vec<RootId>, a: RootId) -> bool {
        let mut work = vec![a];
        while let Some(x) = work.pop() {
            match state[x] {
                IN => continue,
                OUT => return false,
                _ => {}
            }
            let neg = self.rs.neg(x);
            if members
                .iter()
                .any(|&y| y == neg || self.rs.add(x, y).is_some())
            {
                return false;
            }
            state[x] = IN;
            members.push(x);
            for &y in members.iter() {
                work.extend(
                    self.table
                        .decompositions(x, y)
                        .iter()
                        .filter(|&&g| state[g] != IN),
                );
            }
        }
        true
    }

    /// Decides every root from `from` on. Each leaf is one set satisfying
    /// (iv): members are closed under the forcing rule and pairwise
    /// compatible, and distinct leaves differ in some decision.
    fn walk(
        &self,
        from: RootId,
        state: &mut Vec<u8>,
        members: &mut Vec<RootId>,
        out: &mut Vec<RootSet>,
    ) {
        let Some(p) = (from..state.len()).find(|&p| state[p] == UNKNOWN) else {
            out.push(RootSet::new(members.clone()));
            return;
        };
        let mut s2 = state.clone();
        let mut m2 = members.clone();
        if self.include(&mut s2, &mut m2, p) {
            self.walk(p + 1, &mut s2, &mut m2, out);
        }
        state[p] = OUT;
        self.walk(p + 1, state, members, out);
        state[p] = UNKNOWN;
    }
}

/// All nonempty `S ⊂ R` satisfying (iv), sorted. The search branches on the
/// smallest member, then includes or excludes each later root in turn.
pub fn search_irreducible_sets(rs: &RootSystem, exec: Exec) -> Vec<RootSet> {
    let table = SumTable::new(rs);
    let search = Search { rs, table: &table };
    let len = rs.num_roots();
    let mut found = exec.flat_map_range(len, |first| {
        let mut state = vec![UNKNOWN; len];
        state[..first].fill(OUT);
        let mut members = Vec::new();
        let mut out = Vec::new();
        if search.include(&mut state, &mut members, first) {
            search.walk(first + 1, &mut state, &mut members, &mut out);
        }
        out
    });
    found.sort();
    found
}

/// The same sets by testing every subset of `R`.
pub fn exhaust_irreducible_sets(rs: &RootSystem, exec: Exec) -> Result<Vec<RootSet>> {
    let len = rs.num_roots();
    if len > SUBSET_CROSS_CHECK_MAX_ROOTS {
        return Err(Error::ScaleCap(format!(
            "{} has {len} roots; subset exhaustion is capped at {SUBSET_CROSS_CHECK_MAX_ROOTS}",
            rs.spec()
        )));
    }
    let table = SumTable::new(rs);
    let mut found: Vec<RootSet> = exec
        .map_blocks(1 << len, 1 << 12, |range| {
            range
                .filter(|&m| m != 0)
                .filter_map(|mask| {
                    let member: Vec<bool> = (0..len).map(|a| mask >> a & 1 == 1).collect();
                    let s = RootSet::from_mask(mask as u128);
                    cond_iv_mask(rs, &table, s.ids(), &member).then_some(s)
                })
                .collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect();
    found.sort();
    Ok(found)
}

/// A member of one of the explicit classical families.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub family: &'static str,
    /// 1-based indices. For the one-index families `I = {i}`; in the
    /// (c) families `J` lists the signed indices `τ_j·j`.
    pub i_set: Vec<i64>,
    pub j_set: Vec<i64>,
    pub roots: RootSet,
    /// `Σ_{α∈S} α` in ε-coordinates, from the closed formula.
    pub two_rho_formula: Vec<i64>,
}

fn unit(dim: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn plus(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// The explicit families of the classical types, in ε-coordinates:
///
/// * A: `{ε_i - ε_j : i ∈ I, j ∈ J}`;
/// * C: that, plus `ε_k + ε_ℓ` over `k, ℓ ∈ I` and `-(ε_k + ε_ℓ)` over
///   `k, ℓ ∈ J`, with `k = ℓ` allowed;
/// * B(a), D(a): as C but with `k ≠ ℓ`;
/// * B(b±): `±({ε_i} ∪ {ε_i ± ε_j : j ≠ i})`; D(b±): `±{ε_i ± ε_j : j ≠ i}`;
/// * B(c±), D(c±): `{±ε_i + τ_j ε_j : j ∈ K}` for a set `K ∌ i` of at least
///   two indices with fixed signs `τ_j`. These are the sets `S(λ)` where
///   `|λ_i|` is the unique largest coordinate and `K` indexes the second
///   largest, nonzero, absolute value.
///
/// `I`, `J` range over disjoint subsets, and only nonempty `S` are listed.
pub fn classical_families(rs: &RootSystem) -> Result<Vec<FamilyMember>> {
    let family = rs.family();
    if !family.is_classical() {
        return Err(Error::Unsupported(format!(
            "{} has no ε-coordinate families",
            rs.spec()
        )));
    }
    let dim = rs.epsilon_dim()?;
    let n = rs.rank();
    let e = |i: usize, c: i64| unit(dim, i, c);
    let mut out = Vec::new();
    let root_set = |vs: &[Vec<i64>]| -> Result<RootSet> {
        let roots = vs
            .iter()
            .map(|v| rs.from_epsilon(v))
            .collect::<Result<Vec<Root>>>()?;
        RootSet::from_roots(rs, &roots)
    };

    for code in 0..3usize.pow(dim as u32) {
        let mut c = code;
        let (mut is, mut js) = (Vec::new(), Vec::new());
        for k in 0..dim {
            match c % 3 {
                1 => is.push(k),
                2 => js.push(k),
                _ => {}
            }
            c /= 3;
        }
        let mut vs = Vec::new();
        for &i in &is {
            for &j in &js {
                vs.push(plus(&e(i, 1), &e(j, -1)));
            }
        }
        let equal_ok = family == Family::C;
        if family != Family::A {
            for (side, sign) in [(&is, 1), (&js, -1)] {
                for (x, &k) in side.iter().enumerate() {
                    for &l in &side[x..] {
                        if k != l || equal_ok {
                            vs.push(plus(&e(k, sign), &e(l, sign)));
                        }
                    }
                }
            }
        }
        if vs.is_empty() {
            continue;
        }
        let (a, b) = (is.len() as i64, js.len() as i64);
        let (label, ci, cj) = match family {
            Family::A => ("A", b, a),
            Family::C => ("C", a + b + 1, a + b + 1),
            Family::B => ("B(a)", a + b - 1, a + b - 1),
            _ => ("D(a)", a + b - 1, a + b - 1),
        };
        let mut formula = vec![0i64; dim];
        is.iter().for_each(|&i| formula[i] = ci);
        js.iter().for_each(|&j| formula[j] = -cj);
        out.push(FamilyMember {
            family: label,
            i_set: is.iter().map(|&i| i as i64 + 1).collect(),
            j_set: js.iter().map(|&j| j as i64 + 1).collect(),
            roots: root_set(&vs)?,
            two_rho_formula: formula,
        });
    }

    if matches!(family, Family::B | Family::D) {
        let (plus_label, minus_label, weight) = if family == Family::B {
            ("B(b+)", "B(b-)", 2 * n as i64 - 1)
        } else {
            ("D(b+)", "D(b-)", 2 * n as i64 - 2)
        };
        for i in 0..n {
            for (label, sign) in [(plus_label, 1), (minus_label, -1)] {
                let mut vs = Vec::new();
                if family == Family::B {
                    vs.push(e(i, sign));
                }
                for j in (0..n).filter(|&j| j != i) {
                    vs.push(plus(&e(i, sign), &e(j, sign)));
                    vs.push(plus(&e(i, sign), &e(j, -sign)));
                }
                out.push(FamilyMember {
                    family: label,
                    i_set: vec![i as i64 + 1],
                    j_set: Vec::new(),
                    roots: root_set(&vs)?,
                    two_rho_formula: e(i, sign * weight),
                });
            }
        }
        let labels = if family == Family::B {
            ["B(c+)", "B(c-)"]
        } else {
            ["D(c+)", "D(c-)"]
        };
        for i in 0..n {
            let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            for code in 0..3usize.pow(others.len() as u32) {
                let mut c = code;
                let mut k: Vec<(usize, i64)> = Vec::new();
                for &j in &others {
                    match c % 3 {
                        1 => k.push((j, 1)),
                        2 => k.push((j, -1)),
                        _ => {}
                    }
                    c /= 3;
                }
                if k.len() < 2 {
                    continue;
                }
                for (label, sign) in labels.iter().zip([1, -1]) {
                    let vs: Vec<Vec<i64>> = k
                        .iter()
                        .map(|&(j, t)| plus(&e(i, sign), &e(j, t)))
                        .collect();
                    let mut formula = e(i, sign * k.len() as i64);
                    k.iter().for_each(|&(j, t)| formula[j] = t);
                    out.push(FamilyMember {
                        family: label,
                        i_set: vec![i as i64 + 1],
                        j_set: k.iter().map(|&(j, t)| t * (j as i64 + 1)).collect(),
                        roots: root_set(&vs)?,
                        two_rho_formula: formula,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// One set found by the search, with its family label.
#[derive(Clone, Debug)]
pub struct ClassifiedSet {
    pub roots: RootSet,
    /// A classical family label, `long`/`short` for exceptional types
    /// (whether `S` contains a short root), or `unlisted`.
    pub family: String,
    pub i_set: Vec<i64>,
    pub j_set: Vec<i64>,
    pub two_rho: Root,
    pub two_rho_epsilon: Option<Vec<i64>>,
    /// Conditions (i), (iii) and (iv) all hold. (iii) is only evaluated up
    /// to [`COND_III_MAX_ROOTS`] roots; above that this reflects (i), (iv).
    pub all_conditions: bool,
}

impl ClassifiedSet {
    pub fn to_json(&self, rs: &RootSystem) -> Value {
        let spec = rs.spec();
        json!({
            "type": spec.family.letter().to_string(),
            "rank": spec.rank,
            "roots": self.roots.to_json(rs),
            "family": self.family,
            "I": self.i_set,
            "J": self.j_set,
            "size": self.roots.len(),
            "two_rho": self.two_rho.coeffs(),
            "two_rho_epsilon": self.two_rho_epsilon.as_ref().map(|v| format_epsilon(v)),
            "all_conditions": self.all_conditions,
        })
    }
}

/// Result of [`classify`]: the labelled sets and the checks run on them.
pub struct Classification {
    pub sets: Vec<ClassifiedSet>,
    pub claims: Vec<ClaimReport>,
    pub notes: Vec<String>,
}

/// Finds every set satisfying (iv), labels it, and checks it against every
/// independent description available for the type.
pub fn classify(rs: &RootSystem, exec: Exec) -> Result<Classification> {
    let found = search_irreducible_sets(rs, exec);
    let mut claims = Vec::new();
    let mut notes = Vec::new();

    if rs.num_roots() <= SUBSET_CROSS_CHECK_MAX_ROOTS {
        let exhaust = exhaust_irreducible_sets(rs, exec)?;
        let mut r = ClaimReport::new("closure search = subset exhaustion");
        r.check(
            exhaust == found,
            || json!({"search": found.len(), "subsets": exhaust.len()}),
        );
        claims.push(r);
    }

    let sums = SumTable::new(rs);
    let decomps =
        (rs.num_roots() <= COND_III_MAX_ROOTS).then(|| Decompositions::new(rs, COND_III_DEPTH));
    if decomps.is_none() {
        notes.push(format!(
            "condition (iii) not evaluated: more than {COND_III_MAX_ROOTS} roots"
        ));
    }
    let conditions = exec.map(&found, |s| {
        let member: Vec<bool> = (0..rs.num_roots()).map(|a| s.contains(a)).collect();
        let iv = cond_iv_mask(rs, &sums, s.ids(), &member);
        let i = cond_i(rs, s);
        let iii = decomps.as_ref().is_none_or(|d| cond_iii_with(rs, d, s));
        let nonneg = s
            .iter()
            .all(|a| s.iter().all(|b| rs.pairing_scaled(a, b) >= 0));
        (i, iii, iv, nonneg)
    });
    let mut c_i = ClaimReport::new("every found S satisfies (i), (iii) and (iv)");
    let mut c_pair = ClaimReport::new("(α, β) ≥ 0 for all α, β ∈ S");
    for (s, &(i, iii, iv, nonneg)) in found.iter().zip(&conditions) {
        c_i.check(
            i && iii && iv,
            || json!({"S": s.to_json(rs), "i": i, "iii": iii, "iv": iv}),
        );
        c_pair.check(nonneg, || json!({"S": s.to_json(rs)}));
    }
    claims.push(c_i);
    claims.push(c_pair);

    let index: HashSet<&RootSet> = found.iter().collect();
    let mut weyl = ClaimReport::new("s_i·S is again a found set");
    for s in &found {
        for i in 0..rs.rank() {
            let moved = s.map(|a| rs.reflect(a, i));
            weyl.check(
                index.contains(&moved),
                || json!({"S": s.to_json(rs), "node": i + 1}),
            );
        }
    }
    claims.push(weyl);

    let families = if rs.family().is_classical() {
        Some(classical_families(rs)?)
    } else {
        None
    };
    let mut by_roots: HashMap<&RootSet, &FamilyMember> = HashMap::new();
    if let Some(families) = &families {
        let mut dup = ClaimReport::new("listed families are pairwise distinct");
        let mut formula = ClaimReport::new("Σ_{α∈S} α equals the listed closed form");
        let mut listed = ClaimReport::new("every listed set is found");
        for m in families {
            let prev = by_roots.insert(&m.roots, m);
            dup.check(prev.is_none(), || {
                json!({"family": m.family, "I": m.i_set, "J": m.j_set, "same_as": prev.map(|p| p.family)})
            });
            let sum = rs.to_epsilon(&two_rho_s(rs, &m.roots))?;
            formula.check(sum == m.two_rho_formula, || {
                json!({"family": m.family, "I": m.i_set, "J": m.j_set, "sum": sum, "formula": m.two_rho_formula})
            });
            listed.check(
                index.contains(&m.roots),
                || json!({"family": m.family, "I": m.i_set, "J": m.j_set}),
            );
        }
        let mut complete = ClaimReport::new("every found set is listed");
        for s in &found {
            complete.check(by_roots.contains_key(s), || json!({"S": s.to_json(rs)}));
        }
        claims.extend([dup, formula, listed, complete]);
    }
    claims.extend(exceptional_fixtures(rs, &found));

    let sets = found
        .iter()
        .zip(&conditions)
        .map(|(s, &(i, iii, iv, _))| {
            let two_rho = two_rho_s(rs, s);
            let two_rho_epsilon = rs
                .family()
                .is_classical()
                .then(|| rs.to_epsilon(&two_rho))
                .transpose()?;
            let (family, i_set, j_set) = match by_roots.get(s) {
                Some(m) => (m.family.to_string(), m.i_set.clone(), m.j_set.clone()),
                None if families.is_some() => ("unlisted".to_string(), Vec::new(), Vec::new()),
                None if s.iter().all(|a| rs.is_long(a)) => {
                    ("long".to_string(), Vec::new(), Vec::new())
                }
                None => ("short".to_string(), Vec::new(), Vec::new()),
            };
            Ok(ClassifiedSet {
                roots: s.clone(),
                family,
                i_set,
                j_set,
                two_rho,
                two_rho_epsilon,
                all_conditions: i && iii && iv,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification {
        sets,
        claims,
        notes,
    })
}

/// `{α ∈ R⁺ : d₄(α) = 2}` in F4.
pub fn f4_fixture(rs: &RootSystem) -> Option<RootSet> {
    (rs.family() == Family::F).then(|| {
        rs.positive_ids()
            .filter(|&a| rs.coeffs(a)[3] == 2)
            .collect()
    })
}

fn exceptional_fixtures(rs: &RootSystem, found: &[RootSet]) -> Vec<ClaimReport> {
    let short = |s: &&RootSet| s.iter().any(|a| !rs.is_long(a));
    match rs.family() {
        Family::G => {
            let mut r = ClaimReport::new("no S contains a short root");
            for s in found {
                r.check(!short(&s), || json!({"S": s.to_json(rs)}));
            }
            vec![r]
        }
        Family::F => {
            let fixture = f4_fixture(rs).expect("type F");
            let mut fix = ClaimReport::new("{α : d₄(α) = 2} is found and Σ_S = 7ω₄");
            let sum = Weight::from(&two_rho_s(rs, &fixture));
            let seven = rs.fundamental_weight(3).scale(7.into());
            fix.check(
                found.contains(&fixture) && sum == seven,
                || json!({"size": fixture.len(), "sum": sum.to_string()}),
            );
            let orbit = set_orbit(rs, &fixture);
            let mut r =
                ClaimReport::new("sets with a short root form the W-orbit of {α : d₄(α) = 2}");
            let with_short: HashSet<&RootSet> = found.iter().filter(short).collect();
            r.check(
                with_short.len() == orbit.len() && orbit.iter().all(|s| with_short.contains(s)),
                || json!({"with_short": with_short.len(), "orbit": orbit.len()}),
            );
            vec![fix, r]
        }
        _ => Vec::new(),
    }
}

fn set_orbit(rs: &RootSystem, seed: &RootSet) -> HashSet<RootSet> {
    let mut seen = HashSet::from([seed.clone()]);
    let mut work = vec![seed.clone()];
    while let Some(s) = work.pop() {
        for i in 0..rs.rank() {
            let t = s.map(|a| rs.reflect(a, i));
            if seen.insert(t.clone()) {
                work.push(t);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn search_matches_exhaustion() {
        for s in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
            let rs = sys(s);
            assert_eq!(
                search_irreducible_sets(&rs, Exec::default()),
                exhaust_irreducible_sets(&rs, Exec::default()).unwrap(),
                "{s}"
            );
        }
    }

    #[test]
    fn type_a_count() {
        // Ordered pairs of disjoint nonempty subsets of {1..n+1}.
        for n in 1..=5u32 {
            let rs = RootSystem::build(Family::A, n as usize).unwrap();
            let m = n + 1;
            let expected = 3usize.pow(m) - 2 * 2usize.pow(m) + 1;
            assert_eq!(
                search_irreducible_sets(&rs, Exec::default()).len(),
                expected,
                "A{n}"
            );
        }
    }

    #[test]
    fn classification_reports_pass() {
        for s in ["A3", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4"] {
            let c = classify(&sys(s), Exec::default()).unwrap();
            for r in &c.claims {
                assert!(
                    r.passed() && r.instances_checked > 0,
                    "{s} {}: {:?}",
                    r.claim,
                    r.failures
                );
            }
            assert!(
                c.sets
                    .iter()
                    .all(|x| x.all_conditions && x.family != "unlisted"),
                "{s}"
            );
        }
    }

    #[test]
    fn c_needs_equal_indices() {
        // {2ε₁} = {θ} is found; it only belongs to the C family when the two
        // indices may coincide.
        let rs = sys("C3");
        let c = classify(&rs, Exec::Sequential).unwrap();
        let theta = c
            .sets
            .iter()
            .find(|x| x.roots == RootSet::new(vec![rs.theta()]))
            .unwrap();
        assert_eq!(
            (theta.family.as_str(), theta.i_set.as_slice()),
            ("C", &[1][..])
        );
        assert_eq!(theta.two_rho_epsilon.as_deref(), Some(&[2, 0, 0][..]));
    }

    #[test]
    fn case_b_values() {
        for (s, w) in [("B3", 5), ("B4", 7), ("D4", 6), ("D5", 8)] {
            let rs = sys(s);
            let c = classify(&rs, Exec::default()).unwrap();
            let b: Vec<_> = c.sets.iter().filter(|x| x.family.contains("(b")).collect();
            assert_eq!(b.len(), 2 * rs.rank(), "{s}");
            for x in b {
                let v = x.two_rho_epsilon.as_ref().unwrap();
                let i = x.i_set[0] as usize - 1;
                assert_eq!(v[i].abs(), w);
                assert_eq!(v.iter().filter(|&&c| c != 0).count(), 1);
            }
        }
    }

    #[test]
    fn c_families_count() {
        // 2n choices of ±ε_i, and signed sets of at least two of the other
        // n - 1 indices.
        for s in ["B3", "B4", "D4", "D5"] {
            let rs = sys(s);
            let n = rs.rank() as u32;
            let expected = 2 * n as usize * (3usize.pow(n - 1) - 2 * n as usize + 1);
            let c = classify(&rs, Exec::default()).unwrap();
            let got = c.sets.iter().filter(|x| x.family.contains("(c")).count();
            assert_eq!(got, expected, "{s}");
        }
        // {ε1 - ε2, ε1 - ε3}: Σ_S = 2ε1 - ε2 - ε3 pairs to 3 with both members
        // and to at most 2 with every other root.
        let rs = sys("B3");
        let s = RootSet::from_coeffs(&rs, &[&[1, 0, 0], &[1, 1, 0]]).unwrap();
        assert!(super::super::cond_i(&rs, &s));
    }

    #[test]
    fn g2_and_f4_fixtures() {
        let g2 = classify(&sys("G2"), Exec::default()).unwrap();
        assert!(g2.sets.iter().all(|x| x.family == "long"));
        let f4 = sys("F4");
        let fixture = f4_fixture(&f4).unwrap();
        assert_eq!(fixture.len(), 7);
        let c = classify(&f4, Exec::default()).unwrap();
        let x = c.sets.iter().find(|x| x.roots == fixture).unwrap();
        assert_eq!(x.family, "short");
        assert_eq!(x.two_rho.coeffs(), &[7, 14, 21, 14]);
    }
}
