//! Facet adjacency between regions, compared with the commutation-class
//! graph.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::polyhedra::linalg::negate;
use crate::regions::matching::MatchReport;
use crate::regions::RegionAtlas;
use crate::weyl::ClassGraph;

/// Regions as vertices (indices into the atlas), facet-sharing pairs as
/// edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionGraph {
    pub vertices: Vec<usize>,
    /// Pairs of positions in `vertices`, `a < b`.
    pub edges: Vec<(usize, usize)>,
}

impl RegionGraph {
    pub fn to_petgraph(&self) -> UnGraph<(), ()> {
        UnGraph::from_edges(self.edges.iter().map(|&(a, b)| (a as u32, b as u32)))
    }
}

/// Whether the closed regions meet in a common facet: some facet normal `a`
/// of one is `−a` for the other and the shared hyperplane carries a point
/// strictly inside every other inequality of both.
pub fn share_facet(atlas: &RegionAtlas, a: usize, b: usize) -> bool {
    let (ca, cb) = (&atlas.regions[a].cone, &atlas.regions[b].cone);
    let other: BTreeSet<&Vec<BigInt>> = cb.ineqs().iter().collect();
    ca.ineqs().iter().any(|h| {
        let opposite = negate(h);
        if !other.contains(&opposite) {
            return false;
        }
        let joint = ca.with_ineqs(cb.ineqs());
        let strict: Vec<usize> =
            (0..joint.ineqs().len()).filter(|&i| joint.ineqs()[i] != *h && joint.ineqs()[i] != opposite).collect();
        joint.witness(&strict).is_some()
    })
}

pub fn region_graph(atlas: &RegionAtlas, minimal_only: bool) -> RegionGraph {
    let min = atlas.min_facets();
    let vertices: Vec<usize> =
        (0..atlas.regions.len()).filter(|&i| !minimal_only || atlas.regions[i].facet_count() == min).collect();
    let pairs: Vec<(usize, usize)> =
        (0..vertices.len()).flat_map(|a| (a + 1..vertices.len()).map(move |b| (a, b))).collect();
    let edges = pairs.into_par_iter().filter(|&(a, b)| share_facet(atlas, vertices[a], vertices[b])).collect();
    RegionGraph { vertices, edges }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsomorphismReport {
    pub class_vertices: usize,
    pub class_edges: usize,
    pub region_vertices: usize,
    pub region_edges: usize,
    pub isomorphic: bool,
    /// Whether the class-to-region matching maps edges exactly onto edges.
    pub matching_is_isomorphism: Option<bool>,
}

/// Compares the class graph with the facet graph of the minimal regions.
pub fn isomorphism_report(classes: &ClassGraph, atlas: &RegionAtlas, matching: Option<&MatchReport>) -> Result<IsomorphismReport> {
    let regions = region_graph(atlas, true);
    let mut cg: UnGraph<(), ()> = UnGraph::from_edges(classes.edges.iter().map(|&(a, b)| (a as u32, b as u32)));
    while cg.node_count() < classes.classes.len() {
        cg.add_node(());
    }
    let mut rg = regions.to_petgraph();
    while rg.node_count() < regions.vertices.len() {
        rg.add_node(());
    }
    let matching_is_isomorphism = matching.map(|m| {
        let position = |region: usize| regions.vertices.iter().position(|&v| v == region);
        let image: Option<Vec<usize>> = classes
            .classes
            .iter()
            .map(|c| {
                m.classes.iter().find(|x| x.representative == c.representative).and_then(|x| x.region).and_then(position)
            })
            .collect();
        let Some(image) = image else { return false };
        let mapped: BTreeSet<(usize, usize)> = classes
            .edges
            .iter()
            .map(|&(a, b)| (image[a].min(image[b]), image[a].max(image[b])))
            .collect();
        let target: BTreeSet<(usize, usize)> = regions.edges.iter().copied().collect();
        mapped == target
    });
    Ok(IsomorphismReport {
        class_vertices: classes.classes.len(),
        class_edges: classes.edges.len(),
        region_vertices: regions.vertices.len(),
        region_edges: regions.edges.len(),
        isomorphic: is_isomorphic(&cg, &rg),
        matching_is_isomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::matching::match_classes_in;
    use crate::regions::standard_atlas;
    use crate::weyl::class_graph;

    #[test]
    fn rank_two() {
        let atlas = standard_atlas(2).unwrap();
        let g = region_graph(&atlas, false);
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges, vec![(0, 1)]);
    }

    #[test]
    fn rank_three_report() {
        let atlas = standard_atlas(3).unwrap();
        let g = region_graph(&atlas, true);
        assert_eq!(g.vertices.len(), 8);
        let m = match_classes_in(&atlas).unwrap();
        let report = isomorphism_report(&class_graph(3).unwrap(), &atlas, Some(&m)).unwrap();
        assert_eq!(report.class_vertices, 8);
        assert_eq!(report.region_vertices, 8);
        assert!(report.isomorphic);
        assert_eq!(report.matching_is_isomorphism, Some(true));
    }
}
