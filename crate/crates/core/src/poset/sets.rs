use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootId, RootSystem};

/// A subset `J` of the Dynkin nodes. Indices are 0-based in the API and
/// printed 1-based, matching Bourbaki numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeSet {
    rank: usize,
    bits: u32,
}

impl NodeSet {
    pub fn empty(rank: usize) -> Self {
        Self { rank, bits: 0 }
    }

    pub fn full(rank: usize) -> Self {
        Self {
            rank,
            bits: (1u32 << rank) - 1,
        }
    }

    pub fn from_indices(rank: usize, nodes: &[usize]) -> Result<Self> {
        let mut bits = 0;
        for &i in nodes {
            if i >= rank {
                return Err(Error::NodeOutOfRange { index: i + 1, rank });
            }
            bits |= 1 << i;
        }
        Ok(Self { rank, bits })
    }

    /// From Bourbaki labels `1..=rank`.
    pub fn from_labels(rank: usize, labels: &[usize]) -> Result<Self> {
        let mut idx = Vec::with_capacity(labels.len());
        for &l in labels {
            if l == 0 || l > rank {
                return Err(Error::NodeOutOfRange { index: l, rank });
            }
            idx.push(l - 1);
        }
        Self::from_indices(rank, &idx)
    }

    pub fn from_bits(rank: usize, bits: u32) -> Self {
        Self {
            rank,
            bits: bits & ((1u32 << rank) - 1),
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_proper(&self) -> bool {
        self.len() < self.rank
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(|&i| self.contains(i))
    }

    pub fn complement(&self) -> Self {
        Self::from_bits(self.rank, !self.bits)
    }

    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// All `2^rank` subsets, in increasing bit order.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = NodeSet> {
        (0..1u32 << rank).map(move |bits| NodeSet { rank, bits })
    }

    /// True if every nonzero coefficient of `coeffs` sits on a node of `J`.
    pub fn supports(&self, coeffs: &[i32]) -> bool {
        coeffs
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || self.contains(i))
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, l) in self.labels().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for NodeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

/// A duplicate-free set of roots of one system, kept in canonical order
/// (ascending [`RootId`]).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet {
    ids: Vec<RootId>,
}

impl RootSet {
    pub fn new(mut ids: Vec<RootId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        Self { ids }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_roots(rs: &RootSystem, roots: &[Root]) -> Result<Self> {
        let ids = roots
            .iter()
            .map(|r| {
                rs.id_of_root(r)
                    .ok_or_else(|| Error::NotARoot(r.coeffs().to_vec()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(ids))
    }

    pub fn from_coeffs(rs: &RootSystem, roots: &[&[i32]]) -> Result<Self> {
        let roots: Vec<Root> = roots.iter().map(|c| Root::new(c.to_vec())).collect();
        Self::from_roots(rs, &roots)
    }

    /// Positive roots selected by a bitmask over positive ids.
    pub fn from_mask(mask: u128) -> Self {
        Self {
            ids: (0..128).filter(|&i| mask >> i & 1 == 1).collect(),
        }
    }

    /// Bitmask over positive ids. Only meaningful for sets of positive roots.
    pub fn mask(&self) -> u128 {
        self.ids.iter().fold(0u128, |m, &i| {
            debug_assert!(i < 128);
            m | 1u128 << i
        })
    }

    pub fn ids(&self) -> &[RootId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: RootId) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.ids.iter().all(|&i| other.contains(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = RootId> + '_ {
        self.ids.iter().copied()
    }

    pub fn to_roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.ids.iter().map(|&i| rs.root(i).clone()).collect()
    }

    /// JSON form: an array of coefficient vectors.
    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        serde_json::to_value(self.to_roots(rs)).expect("roots serialize")
    }

    pub fn all_positive(&self, rs: &RootSystem) -> bool {
        self.ids.iter().all(|&i| rs.is_positive(i))
    }

    pub fn map(&self, f: impl Fn(RootId) -> RootId) -> RootSet {
        RootSet::new(self.ids.iter().map(|&i| f(i)).collect())
    }

    pub fn display(&self, rs: &RootSystem) -> String {
        let parts: Vec<String> = self.ids.iter().map(|&i| rs.root(i).to_string()).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl FromIterator<RootId> for RootSet {
    fn from_iter<I: IntoIterator<Item = RootId>>(iter: I) -> Self {
        RootSet::new(iter.into_iter().collect())
    }
}
