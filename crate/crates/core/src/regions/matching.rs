//! Matching commutation classes with regions through the spanning vectors of
//! the rectangle calculus.
//!
//! For a class `i`, the vectors `v_P` (one per partial quiver of `i`) and
//! `v_1, …, v_n` should span exactly the nonnegative part of one region of
//! the standard atlas, and that region should have the minimum facet count.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::polyhedra::linalg::rank;
use crate::polyhedra::{cone_equal, cone_from_rays, intersect, HCone, RationalVector, VCone};
use crate::quivers::{quivers_for_word, PartialQuiver};
use crate::rectangles::{v_generator, v_p};
use crate::regions::{standard_atlas, RegionAtlas};
use crate::weyl::{commutation_classes, ReducedWord};

/// `v_P` for every quiver of `word` followed by `v_1, …, v_n`.
pub fn spanning_vectors(word: &ReducedWord) -> Result<(Vec<PartialQuiver>, Vec<Vec<i64>>)> {
    let quivers = quivers_for_word(word)?;
    let mut vectors = quivers.iter().map(v_p).collect::<Result<Vec<_>>>()?;
    for g in 1..=word.rank() {
        vectors.push(v_generator(g, word.rank())?);
    }
    Ok((quivers, vectors))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassMatch {
    pub representative: ReducedWord,
    pub quivers: Vec<PartialQuiver>,
    pub spanning: Vec<Vec<i64>>,
    /// Spanning vectors are linearly independent.
    pub independent: bool,
    /// Region containing the sum of the spanning vectors.
    pub region: Option<usize>,
    pub region_facets: Option<usize>,
    /// The spanned cone equals the region cut by the nonnegative orthant.
    pub cone_matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatchReport {
    pub rank: usize,
    pub min_facets: usize,
    pub min_facet_regions: usize,
    pub classes: Vec<ClassMatch>,
}

impl MatchReport {
    /// Every class matches a distinct minimal region and every minimal
    /// region is hit.
    pub fn is_bijection(&self) -> bool {
        let hit: BTreeSet<usize> = self.classes.iter().filter_map(|c| c.region).collect();
        self.classes.iter().all(|c| c.cone_matches && c.region_facets == Some(self.min_facets))
            && hit.len() == self.classes.len()
            && hit.len() == self.min_facet_regions
    }

    pub fn failures(&self) -> Vec<&ClassMatch> {
        self.classes.iter().filter(|c| !c.cone_matches || c.region_facets != Some(self.min_facets)).collect()
    }
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Matches one word against an atlas whose source is the standard word.
pub fn match_class(atlas: &RegionAtlas, word: &ReducedWord) -> Result<ClassMatch> {
    let dim = atlas.dim();
    let (quivers, spanning) = spanning_vectors(word)?;
    let rows: Vec<Vec<BigInt>> = spanning.iter().map(|v| to_big(v)).collect();
    let independent = rank(&rows) == rows.len();
    let spanned = cone_from_rays(&VCone::new(dim, rows.clone())?);
    let sum: Vec<i64> = (0..dim).map(|i| spanning.iter().map(|v| v[i]).sum()).collect();
    let orthant = HCone::orthant(dim);
    let mut region = None;
    let mut cone_matches = false;
    for idx in atlas.locate(&RationalVector::from_integers(sum)) {
        let cut = intersect(&atlas.regions[idx].cone, &orthant)?;
        if cone_equal(&cut, &spanned) {
            region = Some(idx);
            cone_matches = true;
            break;
        }
        region.get_or_insert(idx);
    }
    Ok(ClassMatch {
        representative: word.clone(),
        quivers,
        spanning,
        independent,
        region,
        region_facets: region.map(|i| atlas.regions[i].facet_count()),
        cone_matches,
    })
}

/// Matches every commutation class of `rank` against the standard atlas.
pub fn match_classes(rank: usize) -> Result<MatchReport> {
    let atlas = standard_atlas(rank)?;
    match_classes_in(&atlas)
}

pub fn match_classes_in(atlas: &RegionAtlas) -> Result<MatchReport> {
    let classes = commutation_classes(atlas.src.rank())?;
    let matches = classes.par_iter().map(|c| match_class(atlas, &c.representative)).collect::<Result<Vec<_>>>()?;
    let min_facets = atlas.min_facets();
    Ok(MatchReport {
        rank: atlas.src.rank(),
        min_facets,
        min_facet_regions: atlas.regions.iter().filter(|r| r.facet_count() == min_facets).count(),
        classes: matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_two_to_four() {
        for n in [2, 3, 4] {
            let report = match_classes(n).unwrap();
            assert!(report.is_bijection(), "rank {n}: {:?}", report.failures());
        }
    }
}
