//! Finite reduced root systems of types A–G.
//!
//! Roots are integer coefficient vectors over the simple roots (Bourbaki
//! numbering). The positive system is generated by root-string closure from
//! the simple roots; nothing is read from tables except the Dynkin diagram.
//! All pairings are exact: long roots have squared length 2.

mod dynkin;
mod epsilon;
mod weight;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::QMatrix;

pub use epsilon::format_epsilon;
pub use weight::Weight;

/// Index of a root inside its [`RootSystem`]. Positive roots come first, in
/// canonical order, followed by their negatives in the same order.
pub type RootId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    fn bounds(self) -> &'static str {
        match self {
            Family::A => "n >= 1",
            Family::B | Family::C => "n >= 2",
            Family::D => "n >= 3",
            Family::E => "n in {6, 7, 8}",
            Family::F => "n = 4",
            Family::G => "n = 2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// A Cartan type such as `B4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.admits_rank(rank) {
            return Err(Error::RankOutOfBounds {
                family: family.letter(),
                rank,
                bounds: family.bounds(),
            });
        }
        Ok(Self { family, rank })
    }

    /// Every valid type of rank at most `max_rank`, ordered by family then rank.
    pub fn catalog(max_rank: usize) -> Vec<Self> {
        Family::ALL
            .iter()
            .flat_map(|&f| (1..=max_rank).filter_map(move |n| Self::new(f, n).ok()))
            .collect()
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    /// Parses strings like `"B4"` or `"e8"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tail) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let family: Family = head.parse()?;
        let rank = tail
            .parse()
            .map_err(|_| Error::UnknownFamily(s.to_string()))?;
        Self::new(family, rank)
    }
}

/// A root (or any element of the root lattice) as its coefficients `d_i`
/// on the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Coefficient of the simple root `α_i` (0-based `i`).
    pub fn d(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// `self <= other` in the dominance order: `other - self` lies in `Q⁺`.
    pub fn le(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scale(&self, c: i32) -> Root {
        Root(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Complete root datum for one Cartan type. Immutable after construction.
#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i32>>,
    gram: QMatrix,
    /// `gram * denom`, integral.
    gram_scaled: Vec<Vec<i64>>,
    denom: i64,
    roots: Vec<Root>,
    n_pos: usize,
    index: HashMap<Root, RootId>,
    /// `sums[a * len + b]` is the id of `roots[a] + roots[b]` when that is a root.
    sums: Vec<Option<RootId>>,
    /// Scaled pairings between roots.
    pair: Vec<i64>,
    /// `reflections[i][a]` is `s_i(roots[a])`.
    reflections: Vec<Vec<RootId>>,
    theta: RootId,
}

impl RootSystem {
    pub fn new(spec: RootSystemSpec) -> Self {
        let n = spec.rank;
        let gram = dynkin::gram_matrix(spec);
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = gram[i][j] * 2 / gram[j][j];
                        *a.numer() as i32
                    })
                    .collect()
            })
            .collect();
        let denom = gram
            .iter()
            .flatten()
            .fold(1i64, |acc, x| lcm(acc, *x.denom()));
        let gram_scaled: Vec<Vec<i64>> = gram
            .iter()
            .map(|row| row.iter().map(|x| (x * denom).to_integer()).collect())
            .collect();

        let positives = generate_positive_roots(n, &cartan);
        let n_pos = positives.len();
        let mut roots = positives.clone();
        roots.extend(positives.iter().map(|r| -r));
        let index: HashMap<Root, RootId> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let len = roots.len();
        let mut sums = vec![None; len * len];
        let mut pair = vec![0i64; len * len];
        for a in 0..len {
            for b in 0..len {
                sums[a * len + b] = index.get(&(&roots[a] + &roots[b])).copied();
                pair[a * len + b] = scaled_form(&gram_scaled, roots[a].coeffs(), roots[b].coeffs());
            }
        }

        let reflections = (0..n)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| {
                        let c: i32 = (0..n).map(|j| r.d(j) * cartan[j][i]).sum();
                        let mut v = r.clone();
                        v.0[i] -= c;
                        index[&v]
                    })
                    .collect()
            })
            .collect();

        let theta = (0..n_pos)
            .max_by_key(|&i| roots[i].height())
            .expect("root systems are nonempty");

        Self {
            spec,
            cartan,
            gram,
            gram_scaled,
            denom,
            roots,
            n_pos,
            index,
            sums,
            pair,
            reflections,
            theta,
        }
    }

    /// Validates the type and builds the system.
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::new(RootSystemSpec::new(family, rank)?))
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    /// Cartan integers `a_ij = 2(α_i, α_j) / (α_j, α_j)`.
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Gram matrix `(α_i, α_j)` of the simple roots.
    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    /// Diagonal `(α_i, α_i) / 2` that symmetrizes the Cartan matrix.
    pub fn symmetrizer(&self) -> Vec<Rational64> {
        (0..self.rank()).map(|i| self.gram[i][i] / 2).collect()
    }

    /// Common denominator of the Gram matrix; `pairing_scaled` values are
    /// exact pairings multiplied by this.
    pub fn form_denominator(&self) -> i64 {
        self.denom
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn positive_ids(&self) -> std::ops::Range<RootId> {
        0..self.n_pos
    }

    pub fn all_ids(&self) -> std::ops::Range<RootId> {
        0..self.roots.len()
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id]
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id < self.n_pos
    }

    pub fn neg(&self, id: RootId) -> RootId {
        if id < self.n_pos {
            id + self.n_pos
        } else {
            id - self.n_pos
        }
    }

    pub fn id_of(&self, coeffs: &[i32]) -> Option<RootId> {
        if coeffs.len() != self.rank() {
            return None;
        }
        // Avoid allocating for the common miss: mixed signs are never roots.
        let pos = coeffs.iter().all(|&c| c >= 0);
        let neg = coeffs.iter().all(|&c| c <= 0);
        if !(pos || neg) {
            return None;
        }
        self.index.get(&Root(coeffs.to_vec())).copied()
    }

    pub fn id_of_root(&self, r: &Root) -> Option<RootId> {
        self.index.get(r).copied()
    }

    /// Positive-root id, or `NotAPositiveRoot`.
    pub fn positive_id(&self, r: &Root) -> Result<RootId> {
        match self.id_of_root(r) {
            Some(id) if self.is_positive(id) => Ok(id),
            _ => Err(Error::NotAPositiveRoot(r.coeffs().to_vec())),
        }
    }

    pub fn is_root(&self, coeffs: &[i32]) -> bool {
        self.id_of(coeffs).is_some()
    }

    pub fn simple(&self, i: usize) -> RootId {
        self.index[&Root::simple(self.rank(), i)]
    }

    /// Highest root.
    pub fn theta(&self) -> RootId {
        self.theta
    }

    pub fn theta_root(&self) -> &Root {
        &self.roots[self.theta]
    }

    pub fn height(&self, id: RootId) -> i32 {
        self.roots[id].height()
    }

    /// `α + β` if it is a root.
    pub fn add(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sums[a * self.roots.len() + b]
    }

    /// `α + β` for roots given by coefficients, if it is a root.
    pub fn add_roots(&self, a: &Root, b: &Root) -> Option<Root> {
        if a.rank() != self.rank() || b.rank() != self.rank() {
            return None;
        }
        let s = a + b;
        self.index.contains_key(&s).then_some(s)
    }

    /// `α - β` if it is a root.
    pub fn sub(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.add(a, self.neg(b))
    }

    /// Pairing of two roots multiplied by [`form_denominator`](Self::form_denominator).
    pub fn pairing_scaled(&self, a: RootId, b: RootId) -> i64 {
        self.pair[a * self.roots.len() + b]
    }

    pub fn pairing_ids(&self, a: RootId, b: RootId) -> Rational64 {
        Rational64::new(self.pairing_scaled(a, b), self.denom)
    }

    /// Scaled pairing of an integral lattice vector with a root.
    pub fn pairing_scaled_vec(&self, v: &[i64], b: RootId) -> i64 {
        let r = self.roots[b].coeffs();
        let mut acc = 0;
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for (j, &rj) in r.iter().enumerate() {
                acc += vi * self.gram_scaled[i][j] * rj as i64;
            }
        }
        acc
    }

    pub fn is_long(&self, id: RootId) -> bool {
        self.pairing_scaled(id, id) == 2 * self.denom
    }

    /// `s_i(α)` for the simple reflection `s_i` (0-based `i`).
    pub fn reflect(&self, id: RootId, i: usize) -> RootId {
        self.reflections[i][id]
    }

    /// Coefficients of a root id as a plain vector.
    pub fn coeffs(&self, id: RootId) -> &[i32] {
        self.roots[id].coeffs()
    }
}

fn scaled_form(g: &[Vec<i64>], a: &[i32], b: &[i32]) -> i64 {
    let mut acc = 0;
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            acc += ai as i64 * g[i][j] * bj as i64;
        }
    }
    acc
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// Breadth-first closure of the simple roots under root strings.
///
/// For a positive root `β` of height `h` and a simple root `α_i`, the
/// `α_i`-string through `β` runs from `β - pα_i` to `β + qα_i` with
/// `p - q = <β, α_i^∨>`. Every root of height below `h` is known when the
/// layer of height `h` is processed, so `p` is exact and `β + α_i` is a root
/// iff `q > 0`.
fn generate_positive_roots(n: usize, cartan: &[Vec<i32>]) -> Vec<Root> {
    let mut known: HashSet<Vec<i32>> = HashSet::new();
    let mut layer: Vec<Vec<i32>> = (0..n).map(|i| Root::simple(n, i).0).collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut v = beta.clone();
                loop {
                    v[i] -= 1;
                    if known.contains(&v) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let coroot: i32 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p - coroot > 0 {
                    let mut w = beta.clone();
                    w[i] += 1;
                    next.insert(w);
                }
            }
        }
        known.extend(layer.iter().cloned());
        all.extend(layer);
        layer = next.into_iter().collect();
    }
    all.sort_by(|a, b| {
        let ha: i32 = a.iter().sum();
        let hb: i32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    all.into_iter().map(Root).collect()
}

impl RootSystem {
    /// Sum of a collection of roots, as coefficients.
    pub fn sum_of<'a>(&self, ids: impl IntoIterator<Item = &'a RootId>) -> Root {
        let mut acc = vec![0; self.rank()];
        for &id in ids {
            for (a, c) in acc.iter_mut().zip(self.coeffs(id)) {
                *a += c;
            }
        }
        Root(acc)
    }

    /// Exact pairing of two roots given by coefficients.
    pub fn pairing_roots(&self, a: &Root, b: &Root) -> Result<Rational64> {
        self.check_dim(a.rank())?;
        self.check_dim(b.rank())?;
        Ok(Rational64::new(
            scaled_form(&self.gram_scaled, a.coeffs(), b.coeffs()),
            self.denom,
        ))
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got,
            });
        }
        Ok(())
    }

    pub(crate) fn zero_q(&self) -> Vec<Rational64> {
        vec![Rational64::zero(); self.rank()]
    }
}

#[cfg(test)]
mod tests;
