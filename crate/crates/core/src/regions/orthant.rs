//! Regions cut by the nonnegative orthant, and their decompositions into
//! simplicial cones spanned by their own extreme rays.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyhedra::linalg::{dot, rank};
use crate::polyhedra::{cone_from_rays, extreme_rays, intersect, irredundant_h, HCone, VCone};
use crate::regions::RegionAtlas;

/// A region restricted to `x ≥ 0`.
#[derive(Clone, Debug, Serialize)]
pub struct OrthantPart {
    pub region: usize,
    pub region_facets: usize,
    pub cone: HCone,
    #[serde(serialize_with = "ser_rays")]
    pub rays: Vec<Vec<BigInt>>,
    /// Ray index sets of a minimum-size simplicial decomposition.
    pub decomposition: Vec<Vec<usize>>,
}

fn ser_rays<S: serde::Serializer>(rays: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::polyhedra::big_strings(rays).serialize(s)
}

impl OrthantPart {
    pub fn facet_count(&self) -> usize {
        self.cone.facet_count()
    }

    pub fn is_simplicial(&self) -> bool {
        self.facet_count() == self.cone.dim()
    }
}

/// Cuts every region by the orthant and decomposes the result. `budget`
/// caps the number of candidate families examined per region.
pub fn orthant_parts(atlas: &RegionAtlas, budget: usize) -> Result<Vec<OrthantPart>> {
    let dim = atlas.dim();
    let orthant = HCone::orthant(dim);
    atlas
        .regions
        .iter()
        .enumerate()
        .map(|(idx, r)| {
            let cone = irredundant_h(&intersect(&r.cone, &orthant)?)?;
            let rays = extreme_rays(&cone)?.rays().to_vec();
            let decomposition = minimal_simplicial_decomposition(&cone, &rays, budget)?;
            Ok(OrthantPart { region: idx, region_facets: r.facet_count(), cone, rays, decomposition })
        })
        .collect()
}

/// Facet count ↦ number of orthant parts with that many facets.
pub fn orthant_histogram(parts: &[OrthantPart]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for p in parts {
        *h.entry(p.facet_count()).or_insert(0) += 1;
    }
    h
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Smallest family of full-rank `d`-subsets of `rays` whose cones have
/// pairwise disjoint interiors and whose union is `cone`.
///
/// The union is certified combinatorially: inside a convex cone, a family
/// of interior-disjoint simplicial cones covers everything iff each facet is
/// either on the boundary of `cone` or shared by exactly two members.
pub fn minimal_simplicial_decomposition(cone: &HCone, rays: &[Vec<BigInt>], budget: usize) -> Result<Vec<Vec<usize>>> {
    let d = cone.dim();
    let candidates: Vec<Vec<usize>> = subsets(rays.len(), d)
        .into_iter()
        .filter(|s| rank(&s.iter().map(|&i| rays[i].clone()).collect::<Vec<_>>()) == d)
        .collect();
    let hcones: Vec<HCone> = candidates
        .iter()
        .map(|s| VCone::new(d, s.iter().map(|&i| rays[i].clone()).collect()).map(|v| cone_from_rays(&v)))
        .collect::<Result<_>>()?;
    let disjoint = |a: usize, b: usize| -> bool { !hcones[a].with_ineqs(hcones[b].ineqs()).is_full_dimensional() };
    let on_boundary = |face: &[usize]| -> bool {
        cone.ineqs().iter().any(|a| face.iter().all(|&i| dot(a, &rays[i]).is_zero()))
    };
    let covers = |family: &[usize]| -> bool {
        let mut faces: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for &c in family {
            for skip in 0..d {
                let face: Vec<usize> = candidates[c].iter().enumerate().filter(|&(p, _)| p != skip).map(|(_, &i)| i).collect();
                *faces.entry(face).or_insert(0) += 1;
            }
        }
        faces.iter().all(|(f, &n)| if on_boundary(f) { n == 1 } else { n == 2 })
    };

    let mut pair_cache: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    let mut explored = 0usize;
    for size in 1..=candidates.len() {
        let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
        while let Some(family) = stack.pop() {
            explored += 1;
            if explored > budget {
                return Err(Error::SearchBudget { explored });
            }
            if family.len() == size {
                if covers(&family) {
                    return Ok(family.iter().map(|&c| candidates[c].clone()).collect());
                }
                continue;
            }
            let start = family.last().map_or(0, |&l| l + 1);
            for next in start..candidates.len() {
                let ok = family.iter().all(|&f| *pair_cache.entry((f, next)).or_insert_with(|| disjoint(f, next)));
                if ok {
                    let mut ext = family.clone();
                    ext.push(next);
                    stack.push(ext);
                }
            }
        }
    }
    Err(Error::Invalid("no simplicial decomposition from the extreme rays".into()))
}

/// Facet count of each non-simplicial part ↦ sizes of its decompositions.
pub fn decomposition_sizes(parts: &[OrthantPart]) -> BTreeMap<usize, BTreeSet<usize>> {
    let mut out: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for p in parts.iter().filter(|p| !p.is_simplicial()) {
        out.entry(p.facet_count()).or_default().insert(p.decomposition.len());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::standard_atlas;

    #[test]
    fn rank_three() {
        let atlas = standard_atlas(3).unwrap();
        let parts = orthant_parts(&atlas, 1_000_000).unwrap();
        assert_eq!(orthant_histogram(&parts), BTreeMap::from([(6, 8), (8, 1), (9, 1)]));
        for p in parts.iter().filter(|p| p.is_simplicial()) {
            assert_eq!(p.decomposition.len(), 1);
            assert_eq!(p.region_facets, 3);
        }
        let sizes = decomposition_sizes(&parts);
        assert_eq!(sizes, BTreeMap::from([(8, BTreeSet::from([2])), (9, BTreeSet::from([4]))]));
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
    }
}
