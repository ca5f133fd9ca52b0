//! Orthonormal ε-coordinates for the classical families.
//!
//! `α_i = ε_i - ε_{i+1}` for `i < n`; the last simple root is `ε_n`, `2ε_n`
//! and `ε_{n-1} + ε_n` for B, C and D. Type A lives in `n + 1` coordinates.

use num_rational::Rational64;

use super::{Family, Root, RootSystem, Weight};
use crate::error::{Error, Result};
use crate::linalg;

impl RootSystem {
    /// Simple roots in ε-coordinates, one row per root.
    pub fn epsilon_basis(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.rank();
        let dim = match self.family() {
            Family::A => n + 1,
            Family::B | Family::C | Family::D => n,
            f => {
                return Err(Error::Unsupported(format!(
                    "ε-coordinates are only defined for classical types, not {f}"
                )))
            }
        };
        let mut rows = vec![vec![0i64; dim]; n];
        for (i, row) in rows.iter_mut().enumerate().take(n - 1) {
            row[i] = 1;
            row[i + 1] = -1;
        }
        let last = &mut rows[n - 1];
        match self.family() {
            Family::A => {
                last[n - 1] = 1;
                last[n] = -1;
            }
            Family::B => last[n - 1] = 1,
            Family::C => last[n - 1] = 2,
            Family::D => {
                last[n - 2] = 1;
                last[n - 1] = 1;
            }
            _ => unreachable!(),
        }
        Ok(rows)
    }

    pub fn epsilon_dim(&self) -> Result<usize> {
        Ok(self.epsilon_basis()?[0].len())
    }

    pub fn to_epsilon(&self, alpha: &Root) -> Result<Vec<i64>> {
        self.check_dim(alpha.rank())?;
        let basis = self.epsilon_basis()?;
        let mut v = vec![0i64; basis[0].len()];
        for (row, &d) in basis.iter().zip(alpha.coeffs()) {
            for (x, &b) in v.iter_mut().zip(row) {
                *x += d as i64 * b;
            }
        }
        Ok(v)
    }

    pub fn weight_to_epsilon(&self, lambda: &Weight) -> Result<Vec<Rational64>> {
        lambda.check_rank(self.rank())?;
        let basis = self.epsilon_basis()?;
        let mut v = vec![Rational64::from_integer(0); basis[0].len()];
        for (row, d) in basis.iter().zip(lambda.coords()) {
            for (x, &b) in v.iter_mut().zip(row) {
                *x += d * b;
            }
        }
        Ok(v)
    }

    /// Inverse of [`weight_to_epsilon`](Self::weight_to_epsilon) on the span
    /// of the roots.
    pub fn weight_from_epsilon(&self, v: &[Rational64]) -> Result<Weight> {
        let basis = self.epsilon_basis()?;
        let dim = basis[0].len();
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
        // Solve Σ_i d_i basis[i] = v, i.e. basisᵀ d = v.
        let a: Vec<Vec<Rational64>> = (0..dim)
            .map(|c| {
                basis
                    .iter()
                    .map(|row| Rational64::from_integer(row[c]))
                    .collect()
            })
            .collect();
        let d = linalg::solve(&a, v)
            .ok_or_else(|| Error::Precondition(format!("{v:?} is not in the span of the roots")))?;
        Ok(Weight::new(d))
    }

    /// The root with the given ε-coordinates.
    pub fn from_epsilon(&self, v: &[i64]) -> Result<Root> {
        let q: Vec<Rational64> = v.iter().map(|&x| Rational64::from_integer(x)).collect();
        let w = self.weight_from_epsilon(&q)?;
        let coeffs = w
            .to_integral()
            .ok_or_else(|| Error::NotARoot(v.iter().map(|&x| x as i32).collect()))?;
        let root = Root::new(coeffs.iter().map(|&c| c as i32).collect());
        if self.id_of_root(&root).is_none() {
            return Err(Error::NotARoot(root.coeffs().to_vec()));
        }
        Ok(root)
    }
}

/// Human-readable ε-expression such as `ε1-ε3` or `2ε1`.
pub fn format_epsilon<T: std::fmt::Display + num_traits::Zero>(v: &[T]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let (sign, mag) = match s.strip_prefix('-') {
            Some(m) => ("-", m.to_string()),
            None => ("+", s),
        };
        if !out.is_empty() || sign == "-" {
            out.push_str(sign);
        }
        if mag != "1" {
            out.push_str(&mag);
        }
        out.push_str(&format!("ε{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
