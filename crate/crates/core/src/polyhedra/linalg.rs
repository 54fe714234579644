//! Small exact linear-algebra helpers over `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) fn to_rational(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter().map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..cols {
                    let delta = &f * &m[r][k];
                    m[i][k] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    rref(&mut to_rational(rows)).len()
}

/// Integer basis of `{x : rows · x = 0}` in `dim` coordinates.
pub fn kernel(dim: usize, rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut m = to_rational(rows);
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..dim).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); dim];
        v[free] = BigRational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][free].clone();
        }
        basis.push(primitive_from_rational(&v));
    }
    basis
}

/// Indices of a maximal linearly independent subset of `rows`, greedily in
/// order.
pub fn independent_rows(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let mut chosen: Vec<Vec<BigInt>> = Vec::new();
    let mut idx = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        chosen.push(r.clone());
        if rank(&chosen) == chosen.len() {
            idx.push(i);
        } else {
            chosen.pop();
        }
    }
    idx
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<BigRational>> = to_rational(m)
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn determinant(m: &[Vec<BigInt>]) -> BigRational {
    let n = m.len();
    let mut a = to_rational(m);
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return BigRational::zero() };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                for k in c..n {
                    let delta = &f * &a[c][k];
                    a[i][k] -= delta;
                }
            }
        }
    }
    det
}

/// Divides by the gcd of the entries; zero vectors are returned unchanged.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators with a positive factor, then makes primitive.
pub fn primitive_from_rational(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    primitive(&scaled)
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rational(a: &[BigInt], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| BigRational::from_integer(x.clone()) * y).sum()
}

pub(crate) fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub(crate) fn negate(v: &[BigInt]) -> Vec<BigInt> {
    v.iter().map(|x| -x).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 1, 0], &[2, 2, 0]]);
        assert_eq!(rank(&a), 1);
        let k = kernel(3, &a);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                assert!(dot(row, v).is_zero());
            }
        }
        assert_eq!(kernel(2, &[]).len(), 2);
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(determinant(&a), BigRational::one());
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0][0], BigRational::from_integer(1.into()));
        assert_eq!(inv[0][1], BigRational::from_integer((-1).into()));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
        assert!(determinant(&m(&[&[1, 2], &[2, 4]])).is_zero());
    }

    #[test]
    fn primitive_forms() {
        assert_eq!(primitive(&m(&[&[4, -6, 0]])[0]), m(&[&[2, -3, 0]])[0]);
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new((-1).into(), 3.into());
        assert_eq!(primitive_from_rational(&[half, third]), m(&[&[3, -2]])[0]);
    }
}
