use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use super::{Root, RootId, RootSystem};
use crate::error::{Error, Result};
use crate::linalg;

/// A vector of `h*` with exact rational coordinates in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    coords: Vec<Rational64>,
}

impl Weight {
    pub fn new(coords: Vec<Rational64>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![Rational64::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(
            coords
                .iter()
                .map(|&c| Rational64::from_integer(c))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: Rational64) -> Weight {
        Weight::new(self.coords.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Coordinates as integers, when all of them are.
    pub fn to_integral(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl From<&Root> for Weight {
    fn from(r: &Root) -> Self {
        Weight::new(
            r.coeffs()
                .iter()
                .map(|&c| Rational64::from_integer(c as i64))
                .collect(),
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl RootSystem {
    /// The invariant form on `h*`; symmetric, exact, `(θ, θ) = 2`.
    pub fn pairing(&self, x: &Weight, y: &Weight) -> Result<Rational64> {
        self.check_dim(x.rank())?;
        self.check_dim(y.rank())?;
        let g = self.gram();
        let mut acc = Rational64::zero();
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                acc += xi * g[i][j] * yj;
            }
        }
        Ok(acc)
    }

    /// `(λ, α)` for a root id.
    pub fn pairing_with_root(&self, lambda: &Weight, id: RootId) -> Rational64 {
        let g = self.gram();
        let r = self.coeffs(id);
        let mut acc = Rational64::zero();
        for (i, xi) in lambda.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, &rj) in r.iter().enumerate() {
                if rj != 0 {
                    acc += xi * g[i][j] * rj as i64;
                }
            }
        }
        acc
    }

    /// `<λ, α_i^∨> = 2(λ, α_i) / (α_i, α_i)`.
    pub fn coroot_pairing(&self, lambda: &Weight, i: usize) -> Rational64 {
        let g = self.gram();
        let s: Rational64 = lambda
            .coords()
            .iter()
            .enumerate()
            .map(|(j, x)| x * g[j][i])
            .sum();
        s * 2 / g[i][i]
    }

    /// Fundamental weight `ω_i` (0-based `i`) in the simple-root basis.
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        // (ω_i, α_j) = δ_ij (α_j, α_j) / 2, i.e. G c = d_i e_i.
        let n = self.rank();
        let mut rhs = self.zero_q();
        rhs[i] = self.gram()[i][i] / 2;
        let c = linalg::solve(self.gram(), &rhs).expect("Gram matrix is nondegenerate");
        debug_assert_eq!(c.len(), n);
        Weight::new(c)
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        (0..self.rank()).all(|i| !self.coroot_pairing(lambda, i).is_negative())
    }

    /// `s_i(λ) = λ - <λ, α_i^∨> α_i`.
    pub fn reflect_weight(&self, lambda: &Weight, i: usize) -> Weight {
        let c = self.coroot_pairing(lambda, i);
        let mut coords = lambda.coords().to_vec();
        coords[i] -= c;
        Weight::new(coords)
    }

    /// Applies `word` left to right: the first letter acts first.
    pub fn apply_word(&self, word: &[usize], lambda: &Weight) -> Weight {
        word.iter()
            .fold(lambda.clone(), |acc, &i| self.reflect_weight(&acc, i))
    }

    pub fn apply_word_root(&self, word: &[usize], id: RootId) -> RootId {
        word.iter().fold(id, |acc, &i| self.reflect(acc, i))
    }

    /// Applies the inverse of `word` (letters in reverse order).
    pub fn apply_word_inverse_root(&self, word: &[usize], id: RootId) -> RootId {
        word.iter().rev().fold(id, |acc, &i| self.reflect(acc, i))
    }

    /// Moves `λ` into the dominant chamber by simple reflections.
    ///
    /// Returns `(λ', word)` with `λ' = apply_word(word, λ)` dominant. Each step
    /// reflects in a wall with negative pairing, which strictly increases the
    /// pairing with a regular dominant vector, so the loop terminates.
    pub fn dominant_representative(&self, lambda: &Weight) -> Result<(Weight, Vec<usize>)> {
        self.check_dim(lambda.rank())?;
        let mut current = lambda.clone();
        let mut word = Vec::new();
        while let Some(i) =
            (0..self.rank()).find(|&i| self.coroot_pairing(&current, i).is_negative())
        {
            current = self.reflect_weight(&current, i);
            word.push(i);
        }
        Ok((current, word))
    }

    /// The weight `Σ_{i∈K} ω_i`.
    pub fn sum_of_fundamental(&self, nodes: impl IntoIterator<Item = usize>) -> Weight {
        nodes.into_iter().fold(Weight::zero(self.rank()), |acc, i| {
            acc.add(&self.fundamental_weight(i))
        })
    }

    /// Coordinates of `λ` in the fundamental-weight basis (`<λ, α_i^∨>`).
    pub fn dynkin_labels(&self, lambda: &Weight) -> Vec<Rational64> {
        (0..self.rank())
            .map(|i| self.coroot_pairing(lambda, i))
            .collect()
    }

    /// Maximum of `(λ, α)` over all of `R`.
    pub fn max_pairing(&self, lambda: &Weight) -> Rational64 {
        self.all_ids()
            .map(|id| self.pairing_with_root(lambda, id))
            .max()
            .unwrap_or_else(Rational64::zero)
    }
}

impl Weight {
    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                got: self.rank(),
            });
        }
        Ok(())
    }
}
