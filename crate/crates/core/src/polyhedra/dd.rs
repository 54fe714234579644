//! Double description: extreme rays of a pointed cone `{x : A x ≥ 0}`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{dot, independent_rows, inverse, primitive, primitive_from_rational, rank};

#[derive(Clone)]
struct Ray {
    v: Vec<BigInt>,
    /// Indices of processed rows that vanish on the ray.
    zeros: Vec<usize>,
}

/// Extreme rays of `{x : rows · x ≥ 0}`, primitive and sorted. The caller
/// guarantees that `rows` has rank `dim` (the cone is pointed).
pub(crate) fn extreme_rays(dim: usize, rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    debug_assert_eq!(rank(rows), dim);
    if dim == 0 {
        return Vec::new();
    }
    let basis = independent_rows(rows);
    let square: Vec<Vec<BigInt>> = basis.iter().map(|&i| rows[i].clone()).collect();
    let inv = inverse(&square).expect("independent rows form an invertible matrix");

    // Columns of the inverse generate the simplicial cone of the basis rows.
    let mut rays: Vec<Ray> = (0..dim)
        .map(|c| {
            let col: Vec<_> = inv.iter().map(|row| row[c].clone()).collect();
            let v = primitive_from_rational(&col);
            let zeros = basis.iter().copied().filter(|&b| b != basis[c]).collect();
            Ray { v, zeros }
        })
        .collect();

    for (h, row) in rows.iter().enumerate() {
        if basis.contains(&h) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.v)).collect();
        let (mut next, mut pos, mut neg) = (Vec::new(), Vec::new(), Vec::new());
        for (i, val) in values.iter().enumerate() {
            if val.is_positive() {
                pos.push(i);
                next.push(rays[i].clone());
            } else if val.is_negative() {
                neg.push(i);
            } else {
                let mut r = rays[i].clone();
                r.zeros.push(h);
                next.push(r);
            }
        }
        for &p in &pos {
            for &n in &neg {
                let common: Vec<usize> =
                    rays[p].zeros.iter().copied().filter(|z| rays[n].zeros.contains(z)).collect();
                if common.len() + 2 < dim || !adjacent(dim, rows, &common) {
                    continue;
                }
                let vp = &values[p];
                let vn = -&values[n];
                let combined: Vec<BigInt> =
                    rays[p].v.iter().zip(&rays[n].v).map(|(a, b)| a * &vn + b * vp).collect();
                let mut zeros = common;
                zeros.push(h);
                next.push(Ray { v: primitive(&combined), zeros });
            }
        }
        rays = next;
    }
    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.v).filter(|v| v.iter().any(|x| !x.is_zero())).collect();
    out.sort();
    out.dedup();
    out
}

/// Two rays are adjacent when the rows tight on both have rank `dim − 2`.
fn adjacent(dim: usize, rows: &[Vec<BigInt>], common: &[usize]) -> bool {
    let sub: Vec<Vec<BigInt>> = common.iter().map(|&i| rows[i].clone()).collect();
    rank(&sub) + 2 == dim
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn orthant_and_wedge() {
        assert_eq!(extreme_rays(3, &m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
        assert_eq!(extreme_rays(2, &m(&[&[1, 0], &[0, 1], &[1, -1]])), m(&[&[1, 0], &[1, 1]]));
    }

    #[test]
    fn square_pyramid() {
        // Cone over a square: x ± y ≥ 0 and x ± z ≥ 0 style facets.
        let rows = m(&[&[1, 1, 0], &[1, -1, 0], &[1, 0, 1], &[1, 0, -1]]);
        let rays = extreme_rays(3, &rows);
        assert_eq!(rays, m(&[&[1, -1, -1], &[1, -1, 1], &[1, 1, -1], &[1, 1, 1]]));
    }
}
