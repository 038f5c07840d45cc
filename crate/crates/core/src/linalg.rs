//! Small exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Solves `A x = b` exactly, where `a` is given row by row. Returns one
/// solution (free variables set to zero) or `None` when inconsistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

pub fn rank(a: &[Vec<Rational>]) -> usize {
    let mut m = a.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for j in c..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Inverse of an upper unitriangular integer matrix by back substitution.
pub fn unitriangular_inverse(m: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n || !row[i].is_one() || row[..i].iter().any(|x| !x.is_zero()) {
            return Err(Error::Internal("matrix is not upper unitriangular".into()));
        }
    }
    let mut inv = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        inv[i][i] = BigInt::one();
        for j in (0..i).rev() {
            // (M · inv)[j][i] = 0 for j < i
            let s: BigInt = (j + 1..=i).map(|k| &m[j][k] * &inv[k][i]).sum();
            inv[j][i] = -s;
        }
    }
    Ok(inv)
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn bi(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn inverse_2x2() {
        let inv = unitriangular_inverse(&bi(&[&[1, -1], &[0, 1]])).unwrap();
        assert_eq!(inv, bi(&[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = bi(&[&[1, 2, -3], &[0, 1, 4], &[0, 0, 1]]);
        let inv = unitriangular_inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), bi(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert!(unitriangular_inverse(&bi(&[&[2]])).is_err());
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = vec![vec![int(1), int(1)], vec![int(1), int(-1)], vec![int(2), int(0)]];
        assert_eq!(solve(&a, &[int(3), int(1), int(4)]), Some(vec![int(2), int(1)]));
        assert_eq!(solve(&a, &[int(3), int(1), int(5)]), None);
        assert_eq!(rank(&a), 2);
        assert_eq!(solve(&[vec![], vec![]], &[int(0), int(0)]), Some(vec![]));
        assert_eq!(solve(&[vec![], vec![]], &[int(0), int(1)]), None);
    }
}
