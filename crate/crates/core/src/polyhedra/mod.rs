//! Exact polyhedral cones: H- and V-descriptions, redundancy removal by
//! linear programming and extreme rays by double description.
//!
//! Every object is homogeneous. Normals and rays are stored as primitive
//! integer vectors; an inequality `a` means `a · x ≥ 0`.

mod dd;
pub mod linalg;
pub mod lp;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use linalg::{dot, dot_rational, is_zero_vec, kernel, negate, primitive, primitive_from_rational, rank};

pub(crate) fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(pub Vec<BigRational>);

impl RationalVector {
    pub fn from_integers<I: IntoIterator<Item = i64>>(coords: I) -> Self {
        Self(coords.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
    }

    pub fn from_bigints(coords: &[BigInt]) -> Self {
        Self(coords.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![BigRational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Positive multiple with coprime integer entries.
    pub fn primitive(&self) -> Vec<BigInt> {
        primitive_from_rational(&self.0)
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.0.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        parts.serialize(s)
    }
}

pub(crate) fn big_strings(rows: &[Vec<BigInt>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

/// `{x ∈ ℚ^dim : a · x ≥ 0 for every listed a}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCone {
    dim: usize,
    ineqs: Vec<Vec<BigInt>>,
    irredundant: bool,
}

impl HCone {
    /// Normals are stored primitive; zero rows are dropped.
    pub fn new(dim: usize, ineqs: Vec<Vec<BigInt>>) -> Result<Self> {
        let mut out = Vec::with_capacity(ineqs.len());
        for a in ineqs {
            if a.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: a.len() });
            }
            if !is_zero_vec(&a) {
                out.push(primitive(&a));
            }
        }
        Ok(Self { dim, ineqs: out, irredundant: false })
    }

    pub fn from_rows(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(dim, rows.iter().map(|r| ints(r)).collect())
    }

    /// The whole space.
    pub fn full(dim: usize) -> Self {
        Self { dim, ineqs: Vec::new(), irredundant: true }
    }

    /// `{x : x_i ≥ 0}`.
    pub fn orthant(dim: usize) -> Self {
        let ineqs = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        Self { dim, ineqs, irredundant: true }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ineqs(&self) -> &[Vec<BigInt>] {
        &self.ineqs
    }

    pub fn is_irredundant(&self) -> bool {
        self.irredundant
    }

    /// Number of listed inequalities; the facet count once irredundant.
    pub fn facet_count(&self) -> usize {
        self.ineqs.len()
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.ineqs.iter().all(|a| !dot_rational(a, &x.0).is_negative())
    }

    pub fn contains_integer(&self, x: &[BigInt]) -> bool {
        self.ineqs.iter().all(|a| !dot(a, x).is_negative())
    }

    /// Strictly inside every listed inequality.
    pub fn contains_strictly(&self, x: &RationalVector) -> bool {
        self.ineqs.iter().all(|a| dot_rational(a, &x.0).is_positive())
    }

    /// A point satisfying every inequality, strictly on `strict`.
    pub fn witness(&self, strict: &[usize]) -> Option<RationalVector> {
        let rhs: Vec<BigInt> =
            (0..self.ineqs.len()).map(|i| if strict.contains(&i) { BigInt::one() } else { BigInt::zero() }).collect();
        lp::feasible_point(self.dim, &self.ineqs, &rhs).map(RationalVector)
    }

    /// A point strictly inside every inequality, if the cone is
    /// full-dimensional.
    pub fn interior_point(&self) -> Option<RationalVector> {
        let all: Vec<usize> = (0..self.ineqs.len()).collect();
        self.witness(&all)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.interior_point().is_some()
    }

    /// Whether `a · x ≥ 0` holds on the whole cone.
    pub fn implies(&self, a: &[BigInt]) -> bool {
        implied_by(&self.ineqs, a, self.dim)
    }

    /// Whether `other` contains this cone.
    pub fn is_subset_of(&self, other: &HCone) -> bool {
        other.ineqs.iter().all(|a| self.implies(a))
    }

    /// Largest linear subspace, as a basis; empty for pointed cones.
    pub fn lineality(&self) -> Vec<Vec<BigInt>> {
        kernel(self.dim, &self.ineqs)
    }

    pub fn is_pointed(&self) -> bool {
        rank(&self.ineqs) == self.dim
    }

    pub fn with_ineqs(&self, extra: &[Vec<BigInt>]) -> HCone {
        let mut ineqs = self.ineqs.clone();
        ineqs.extend(extra.iter().filter(|a| !is_zero_vec(a)).map(|a| primitive(a)));
        HCone { dim: self.dim, ineqs, irredundant: false }
    }

    /// Image under the linear substitution `x = M y`, i.e. the cone of `y`
    /// with `M y` in `self`.
    pub fn pull_back(&self, m: &LinearMapMatrix) -> HCone {
        let ineqs = self.ineqs.iter().map(|a| m.transpose_apply(a)).filter(|a| !is_zero_vec(a)).map(|a| primitive(&a)).collect();
        HCone { dim: self.dim, ineqs, irredundant: false }
    }
}

fn implied_by(rows: &[Vec<BigInt>], a: &[BigInt], dim: usize) -> bool {
    let mut sys = rows.to_vec();
    sys.push(negate(a));
    let mut rhs = vec![BigInt::zero(); rows.len()];
    rhs.push(BigInt::one());
    lp::feasible_point(dim, &sys, &rhs).is_none()
}

impl Serialize for HCone {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HCone", 2)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("ineqs", &big_strings(&self.ineqs))?;
        st.end()
    }
}

/// Conic hull of finitely many rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VCone {
    dim: usize,
    rays: Vec<Vec<BigInt>>,
}

impl VCone {
    /// Rays are made primitive; zero and duplicate rays are dropped.
    pub fn new(dim: usize, rays: Vec<Vec<BigInt>>) -> Result<Self> {
        let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(rays.len());
        for r in rays {
            if r.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: r.len() });
            }
            if !is_zero_vec(&r) {
                let p = primitive(&r);
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        Ok(Self { dim, rays: out })
    }

    pub fn from_rows(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(dim, rows.iter().map(|r| ints(r)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim && rank(&self.rays) == self.dim
    }
}

impl Serialize for VCone {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("VCone", 2)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("rays", &big_strings(&self.rays))?;
        st.end()
    }
}

/// Square integer matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearMapMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl LinearMapMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        Ok(Self { rows })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn apply(&self, x: &RationalVector) -> RationalVector {
        RationalVector(self.rows.iter().map(|r| dot_rational(r, &x.0)).collect())
    }

    pub fn apply_integer(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.rows.iter().map(|r| dot(r, x)).collect()
    }

    /// `Mᵀ a`: the normal of `{y : a · (M y) ≥ 0}`.
    pub fn transpose_apply(&self, a: &[BigInt]) -> Vec<BigInt> {
        let n = self.dim();
        (0..n).map(|j| (0..n).map(|i| &a[i] * &self.rows[i][j]).sum()).collect()
    }

    /// `self · other`.
    pub fn compose(&self, other: &LinearMapMatrix) -> LinearMapMatrix {
        let n = self.dim();
        let rows = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| &self.rows[i][k] * &other.rows[k][j]).sum()).collect()).collect();
        LinearMapMatrix { rows }
    }

    pub fn determinant(&self) -> BigRational {
        linalg::determinant(&self.rows)
    }
}

impl Serialize for LinearMapMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        big_strings(&self.rows).serialize(s)
    }
}

/// Feasibility of the cone's system with the inequalities in `strict`
/// required to hold strictly.
pub fn lp_feasible(cone: &HCone, strict: &[usize]) -> bool {
    cone.witness(strict).is_some()
}

/// Minimal sub-list of inequalities defining the same cone. For a
/// full-dimensional cone these are exactly its facets.
pub fn irredundant_h(cone: &HCone) -> Result<HCone> {
    if !cone.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    Ok(remove_redundant(cone))
}

/// Sequential redundancy removal; also valid for lower-dimensional cones,
/// where the result is minimal but not unique.
pub fn remove_redundant(cone: &HCone) -> HCone {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for a in &cone.ineqs {
        if !rows.contains(a) {
            rows.push(a.clone());
        }
    }
    let mut i = 0;
    while i < rows.len() {
        let others: Vec<Vec<BigInt>> =
            rows.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, r)| r.clone()).collect();
        if implied_by(&others, &rows[i], cone.dim) {
            rows.remove(i);
        } else {
            i += 1;
        }
    }
    HCone { dim: cone.dim, ineqs: rows, irredundant: true }
}

/// Extreme rays of a pointed cone.
pub fn extreme_rays(cone: &HCone) -> Result<VCone> {
    if !cone.is_pointed() {
        let line = cone.lineality().into_iter().next().expect("non-pointed cone has a lineality vector");
        return Err(Error::NotPointed { witness: line.iter().map(|x| x.to_string()).collect() });
    }
    Ok(VCone { dim: cone.dim, rays: dd::extreme_rays(cone.dim, &cone.ineqs) })
}

/// H-description of the conic hull of `v`: the facets inside the span of
/// the rays plus a pair of opposite inequalities per missing dimension.
pub fn cone_from_rays(v: &VCone) -> HCone {
    let dim = v.dim;
    if v.rays.is_empty() {
        let mut ineqs = Vec::new();
        for e in HCone::orthant(dim).ineqs {
            ineqs.push(negate(&e));
            ineqs.push(e);
        }
        return HCone { dim, ineqs, irredundant: true };
    }
    let span_idx = linalg::independent_rows(&v.rays);
    let basis: Vec<Vec<BigInt>> = span_idx.iter().map(|&i| v.rays[i].clone()).collect();
    let r = basis.len();

    let mut ineqs = Vec::new();
    for e in kernel(dim, &v.rays) {
        ineqs.push(negate(&e));
        ineqs.push(e);
    }
    // Coordinates B r_i of the rays form a full-dimensional cone in ℚ^r; the
    // extreme rays z of its dual give facet normals Bᵀ z.
    let coords: Vec<Vec<BigInt>> = v.rays.iter().map(|ray| basis.iter().map(|b| dot(b, ray)).collect()).collect();
    for z in dd::extreme_rays(r, &coords) {
        let y: Vec<BigInt> = (0..dim).map(|j| (0..r).map(|i| &z[i] * &basis[i][j]).sum()).collect();
        if !is_zero_vec(&y) {
            ineqs.push(primitive(&y));
        }
    }
    ineqs.sort();
    ineqs.dedup();
    HCone { dim, ineqs, irredundant: true }
}

/// Equality of two cones by mutual containment.
pub fn cone_equal(a: &HCone, b: &HCone) -> bool {
    a.dim == b.dim && a.is_subset_of(b) && b.is_subset_of(a)
}

pub fn intersect(a: &HCone, b: &HCone) -> Result<HCone> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch { expected: a.dim, found: b.dim });
    }
    Ok(a.with_ineqs(&b.ineqs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feasibility_probes() {
        let line = HCone::from_rows(1, &[&[1], &[-1]]).unwrap();
        assert!(!lp_feasible(&line, &[0]));
        assert!(lp_feasible(&line, &[]));
        let half = HCone::from_rows(2, &[&[1, 0]]).unwrap();
        assert!(lp_feasible(&half, &[0]));
        assert!(lp_feasible(&HCone::full(3), &[]));
    }

    #[test]
    fn redundancy_removal() {
        let c = HCone::from_rows(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(irredundant_h(&c).unwrap().facet_count(), 2);
        let dup = HCone::from_rows(2, &[&[2, 0], &[1, 0], &[0, 3]]).unwrap();
        assert_eq!(irredundant_h(&dup).unwrap().ineqs(), &[ints(&[1, 0]), ints(&[0, 1])]);
        let flat = HCone::from_rows(2, &[&[1, 0], &[-1, 0]]).unwrap();
        assert_eq!(irredundant_h(&flat), Err(Error::NotFullDimensional));
    }

    #[test]
    fn rays_and_round_trip() {
        let c = HCone::from_rows(2, &[&[1, 0], &[0, 1], &[1, -1]]).unwrap();
        let v = extreme_rays(&c).unwrap();
        assert_eq!(v.rays(), &[ints(&[1, 0]), ints(&[1, 1])]);
        let back = cone_from_rays(&v);
        assert!(cone_equal(&back, &c));
        assert!(matches!(extreme_rays(&HCone::from_rows(2, &[&[1, 0]]).unwrap()), Err(Error::NotPointed { .. })));
    }

    #[test]
    fn single_ray_hull() {
        let v = VCone::from_rows(2, &[&[1, 1]]).unwrap();
        let h = cone_from_rays(&v);
        let expected = HCone::from_rows(2, &[&[1, -1], &[-1, 1], &[1, 0]]).unwrap();
        assert!(cone_equal(&h, &expected));
        assert!(h.contains(&RationalVector::from_integers([3, 3])));
        assert!(!h.contains(&RationalVector::from_integers([-1, -1])));
    }

    #[test]
    fn orthant_forms_agree() {
        let h = HCone::orthant(3);
        let v = VCone::from_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert!(cone_equal(&h, &cone_from_rays(&v)));
        assert_eq!(extreme_rays(&h).unwrap().rays().len(), 3);
        assert!(cone_equal(&intersect(&h, &h).unwrap(), &h));
        assert!(cone_equal(&intersect(&h, &HCone::full(3)).unwrap(), &h));
    }

    #[test]
    fn linear_maps() {
        let m = LinearMapMatrix::new(vec![ints(&[0, 1]), ints(&[1, 0])]).unwrap();
        assert_eq!(m.determinant(), -BigRational::one());
        assert_eq!(m.compose(&m), LinearMapMatrix::identity(2));
        assert_eq!(m.apply_integer(&ints(&[2, 5])), ints(&[5, 2]));
        let c = HCone::from_rows(2, &[&[1, 0]]).unwrap();
        assert_eq!(c.pull_back(&m).ineqs(), &[ints(&[0, 1])]);
    }

    #[test]
    fn json_uses_decimal_strings() {
        let c = HCone::from_rows(2, &[&[1, -1]]).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"dim":2,"ineqs":[["1","-1"]]}"#);
        let v = VCone::from_rows(2, &[&[1, 1]]).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"dim":2,"rays":[["1","1"]]}"#);
    }
}
