//! Exact elimination: rank over R, C or H, real null-space dimension, and
//! congruence signatures of self-adjoint matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::ExactMatrix;
use super::quaternion::{Quaternion, Rational};
use super::ExactLinError;

/// Rank of `m` over its scalar field.
///
/// Rows are combined by left scalar multiplication, so the result is the rank of
/// the row space as a left module. Over H this equals the rank of the linear map
/// `v ↦ m·v` on right column vectors.
pub fn rank(m: &ExactMatrix) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        let inv = a[r][c].inv().expect("pivot is nonzero");
        let pivot_row = a[r].clone();
        for row in a.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] * &inv;
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        r += 1;
    }
    r
}

/// Dimension of the real solution space of the homogeneous system `system · z = 0`.
///
/// Each row is scaled to a primitive integer vector and the system is reduced by
/// fraction-free elimination, dividing every updated row by its content so the
/// integers stay small.
///
/// # Panics
/// Panics if an entry of `system` is not real.
pub fn nullspace_dim_real(system: &ExactMatrix) -> usize {
    let cols = system.cols();
    let rows: Vec<Vec<BigInt>> = (0..system.rows())
        .filter_map(|r| {
            let row: Vec<Rational> = system
                .row(r)
                .iter()
                .map(|x| {
                    assert!(x.is_real(), "nullspace_dim_real needs a real system, found {x}");
                    x.a.clone()
                })
                .collect();
            integer_row(&row)
        })
        .collect();
    cols - integer_rank(rows, cols)
}

/// Clears denominators and content of a rational row; `None` for the zero row.
fn integer_row(row: &[Rational]) -> Option<Vec<BigInt>> {
    if row.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    make_primitive(&mut out);
    Some(out)
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Rank of an integer matrix by fraction-free row reduction.
fn integer_rank(mut rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let p = &pivot_row[c];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = p.gcd(&row[c]);
            let fp = p / &g;
            let fa = &row[c] / &g;
            for (x, y) in row.iter_mut().zip(pivot_row).skip(c) {
                *x = &fp * &*x - &fa * y;
            }
            make_primitive(row);
        }
        let mut rest = rows.split_off(r + 1);
        rest.retain(|row| row.iter().any(|x| !x.is_zero()));
        rows.extend(rest);
        r += 1;
    }
    r
}

/// Signature `(p, q)` of a symmetric, Hermitian or quaternionic Hermitian matrix.
///
/// Diagonalizes by congruence: the first nonzero diagonal entry in index order is
/// used as a pivot. When the whole remaining diagonal vanishes, the first nonzero
/// off-diagonal pair `(i, j)` spans a hyperbolic plane, which contributes `(1, 1)`
/// and is split off as a 2×2 block. Degenerate directions contribute nothing.
pub fn congruence_signature(g: &ExactMatrix) -> Result<(usize, usize), ExactLinError> {
    if !g.is_square() {
        return Err(ExactLinError::NotSquare { rows: g.rows(), cols: g.cols() });
    }
    if g.sigma_transpose() != *g {
        return Err(ExactLinError::NotSelfAdjoint);
    }
    let mut m = g.to_rows();
    let (mut p, mut q) = (0, 0);
    loop {
        let n = m.len();
        if n == 0 {
            break;
        }
        if let Some(k) = (0..n).find(|&k| !m[k][k].is_zero()) {
            let delta = m[k][k].a.clone();
            if delta.is_positive() {
                p += 1;
            } else {
                q += 1;
            }
            let dinv = Quaternion::from_rational(delta.recip());
            let keep: Vec<usize> = (0..n).filter(|&i| i != k).collect();
            m = keep
                .iter()
                .map(|&i| {
                    let left = &m[i][k] * &dinv;
                    keep.iter().map(|&j| &m[i][j] - &(&left * &m[k][j])).collect()
                })
                .collect();
            continue;
        }
        let pair = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !m[i][j].is_zero());
        let Some((i, j)) = pair else {
            break;
        };
        p += 1;
        q += 1;
        let a_inv = m[i][j].inv().expect("nonzero");
        let sa_inv = m[j][i].inv().expect("nonzero");
        let keep: Vec<usize> = (0..n).filter(|&r| r != i && r != j).collect();
        m = keep
            .iter()
            .map(|&r| {
                let li = &m[r][i] * &sa_inv;
                let lj = &m[r][j] * &a_inv;
                keep.iter()
                    .map(|&s| {
                        let t = &(&li * &m[j][s]) + &(&lj * &m[i][s]);
                        &m[r][s] - &t
                    })
                    .collect()
            })
            .collect();
    }
    Ok((p, q))
}
