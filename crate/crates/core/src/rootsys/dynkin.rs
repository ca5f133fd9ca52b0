//! Bourbaki-numbered Dynkin data, expressed as the Gram matrix of the simple
//! roots with long roots normalized to squared length 2.

use num_rational::Rational64;

use super::{Family, RootSystemSpec};
use crate::linalg::QMatrix;

fn q(num: i64, den: i64) -> Rational64 {
    Rational64::new(num, den)
}

/// Gram matrix `(α_i, α_j)` of the simple roots.
pub(crate) fn gram_matrix(spec: RootSystemSpec) -> QMatrix {
    let n = spec.rank;
    let mut g = vec![vec![q(0, 1); n]; n];
    let bond = |g: &mut QMatrix, i: usize, j: usize, v: Rational64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    for i in 0..n {
        g[i][i] = q(2, 1);
    }
    match spec.family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                bond(&mut g, i, i + 1, q(-1, 1));
            }
        }
        Family::B => {
            // α_n = ε_n is short.
            for i in 0..n - 1 {
                bond(&mut g, i, i + 1, q(-1, 1));
            }
            g[n - 1][n - 1] = q(1, 1);
        }
        Family::C => {
            // α_n = 2ε_n is long; the ε-form is halved.
            for i in 0..n - 1 {
                g[i][i] = q(1, 1);
            }
            for i in 0..n - 2 {
                bond(&mut g, i, i + 1, q(-1, 2));
            }
            bond(&mut g, n - 2, n - 1, q(-1, 1));
        }
        Family::D => {
            for i in 0..n - 2 {
                bond(&mut g, i, i + 1, q(-1, 1));
            }
            bond(&mut g, n - 3, n - 1, q(-1, 1));
        }
        Family::E => {
            // 1 - 3 - 4 - 5 - 6 (- 7 - 8), with 2 attached to 4.
            bond(&mut g, 0, 2, q(-1, 1));
            bond(&mut g, 1, 3, q(-1, 1));
            for i in 2..n - 1 {
                bond(&mut g, i, i + 1, q(-1, 1));
            }
        }
        Family::F => {
            g[2][2] = q(1, 1);
            g[3][3] = q(1, 1);
            bond(&mut g, 0, 1, q(-1, 1));
            bond(&mut g, 1, 2, q(-1, 1));
            bond(&mut g, 2, 3, q(-1, 2));
        }
        Family::G => {
            g[1][1] = q(2, 3);
            bond(&mut g, 0, 1, q(-1, 1));
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_entries_are_integral() {
        for spec in RootSystemSpec::catalog(8) {
            let g = gram_matrix(spec);
            for i in 0..spec.rank {
                for j in 0..spec.rank {
                    let a = g[i][j] * 2 / g[j][j];
                    assert!(a.is_integer(), "{spec}: ({i},{j}) -> {a}");
                }
            }
        }
    }
}
