//! Enumeration of `J`-antichains and `J`-ideals.

use std::collections::HashSet;

use crate::exec::Exec;
use crate::rootsys::RootSystem;

use super::nilpotence::{abelian_pair, abelian_single};
use super::order::{is_j_ideal, j_admissible, leq_ids};
use super::{NodeSet, RootSet};

/// All `J`-antichains, optionally only abelian ones and optionally of one
/// size, in canonical order (lexicographic on sorted ids, empty set first).
pub fn enumerate_j_antichains(
    rs: &RootSystem,
    j: &NodeSet,
    abelian_only: bool,
    size: Option<usize>,
) -> Vec<RootSet> {
    enumerate_j_antichains_with(rs, j, abelian_only, size, Exec::default())
}

/// [`enumerate_j_antichains`] with an explicit execution strategy. The
/// search splits on the first member; chunks are concatenated in order.
pub fn enumerate_j_antichains_with(
    rs: &RootSystem,
    j: &NodeSet,
    abelian_only: bool,
    size: Option<usize>,
    exec: Exec,
) -> Vec<RootSet> {
    let candidates: Vec<usize> = rs
        .positive_ids()
        .filter(|&id| j_admissible(rs, id, j))
        .filter(|&id| !abelian_only || abelian_single(rs, id))
        .collect();
    let m = candidates.len();
    assert!(m <= 128, "candidate masks are u128");
    // compat[a] has bit b set (b > a) when candidates a and b may coexist.
    let compat: Vec<u128> = (0..m)
        .map(|a| {
            ((a + 1)..m)
                .filter(|&b| {
                    let (x, y) = (candidates[a], candidates[b]);
                    !leq_ids(rs, x, y)
                        && !leq_ids(rs, y, x)
                        && (!abelian_only || abelian_pair(rs, x, y))
                })
                .fold(0u128, |acc, b| acc | 1u128 << b)
        })
        .collect();

    let max_len = size.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    if size.is_none_or(|s| s == 0) {
        out.push(RootSet::empty());
    }
    if max_len == 0 {
        return out;
    }
    let chunks = exec.flat_map_range(m, |first| {
        let mut found = Vec::new();
        let mut stack = vec![first];
        dfs(
            &candidates,
            &compat,
            compat[first],
            &mut stack,
            size,
            max_len,
            &mut found,
        );
        found
    });
    out.extend(chunks);
    out
}

fn dfs(
    candidates: &[usize],
    compat: &[u128],
    allowed: u128,
    stack: &mut Vec<usize>,
    size: Option<usize>,
    max_len: usize,
    out: &mut Vec<RootSet>,
) {
    if size.is_none_or(|s| s == stack.len()) {
        out.push(RootSet::new(stack.iter().map(|&c| candidates[c]).collect()));
    }
    if stack.len() >= max_len {
        return;
    }
    let mut rest = allowed;
    while rest != 0 {
        let next = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        stack.push(next);
        dfs(
            candidates,
            compat,
            allowed & compat[next],
            stack,
            size,
            max_len,
            out,
        );
        stack.pop();
    }
}

/// All `J`-ideals, found by growing up-sets of `R⁺` one minimal element at a
/// time and keeping those that satisfy [`is_j_ideal`]. Independent of the
/// antichain machinery; sorted canonically.
pub fn enumerate_j_ideals(rs: &RootSystem, j: &NodeSet) -> Vec<RootSet> {
    let n = rs.num_positive();
    assert!(n <= 128);
    // above[a]: positive roots strictly greater than a.
    let above: Vec<u128> = rs
        .positive_ids()
        .map(|a| {
            rs.positive_ids()
                .filter(|&b| b != a && leq_ids(rs, a, b))
                .fold(0u128, |m, b| m | 1u128 << b)
        })
        .collect();
    let mut seen: HashSet<u128> = HashSet::new();
    let mut frontier = vec![0u128];
    seen.insert(0);
    while let Some(up) = frontier.pop() {
        for a in 0..n {
            let bit = 1u128 << a;
            if up & bit == 0 && up & above[a] == above[a] {
                let next = up | bit;
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
    }
    let mut ideals: Vec<RootSet> = seen
        .into_iter()
        .map(RootSet::from_mask)
        .filter(|phi| is_j_ideal(rs, phi, j).expect("positive by construction"))
        .collect();
    ideals.sort();
    ideals
}

/// All `J`-ideals by filtering every subset of `R⁺`. Exponential; for
/// cross-checking on small systems only.
pub fn enumerate_j_ideals_by_subsets(rs: &RootSystem, j: &NodeSet) -> Vec<RootSet> {
    let n = rs.num_positive();
    assert!(n <= 20, "2^{n} subsets is too many");
    let mut ideals: Vec<RootSet> = (0..1u128 << n)
        .map(RootSet::from_mask)
        .filter(|phi| is_j_ideal(rs, phi, j).expect("positive by construction"))
        .collect();
    ideals.sort();
    ideals
}
