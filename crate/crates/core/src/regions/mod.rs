//! The piecewise-linear map relating the Lusztig coordinates of two reduced
//! words, and its decomposition into maximal cones of linearity.
//!
//! A braid move rewrites the local coordinates `(a, b, c)` as
//! `(b + c − m, m, a + b − m)` with `m = min(a, c)`; a commutation move swaps
//! two coordinates. Composing along a move path gives a piecewise-linear
//! bijection whose pieces are enumerated by branching on every braid move.

pub mod graph;
pub mod matching;
pub mod orthant;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyhedra::linalg::{dot_rational, is_zero_vec, negate, primitive};
use crate::polyhedra::{irredundant_h, HCone, LinearMapMatrix, RationalVector};
use crate::weyl::{detour_move_path, find_move_path, standard_words, Move, MoveKind, ReducedWord};

/// Image of a braid-move triple: `(b + c − m, m, a + b − m)`, `m = min(a, c)`.
pub fn braid_move_map(a: &BigRational, b: &BigRational, c: &BigRational) -> [BigRational; 3] {
    let m = a.min(c).clone();
    [b + c - &m, m.clone(), a + b - &m]
}

/// Which argument of the minimum a braid move resolves to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `a ≤ c`, so `min(a, c) = a`.
    TakeA,
    /// `a ≥ c`, so `min(a, c) = c`.
    TakeC,
}

/// Applies one move to coordinates attached to the word positions.
pub fn apply_move_to_point(x: &mut [BigRational], mv: Move) {
    let t = mv.position;
    match mv.kind {
        MoveKind::Commutation => x.swap(t, t + 1),
        MoveKind::Braid => {
            let [p, q, r] = braid_move_map(&x[t], &x[t + 1], &x[t + 2]);
            x[t] = p;
            x[t + 1] = q;
            x[t + 2] = r;
        }
    }
}

/// Exact evaluation of the map from `src` coordinates to `dst` coordinates.
pub fn evaluate(src: &ReducedWord, dst: &ReducedWord, point: &RationalVector) -> Result<RationalVector> {
    if point.dim() != src.len() {
        return Err(Error::DimensionMismatch { expected: src.len(), found: point.dim() });
    }
    let path = find_move_path(src, dst)?;
    Ok(evaluate_along(&path, point))
}

/// Evaluation along an explicit move path.
pub fn evaluate_along(path: &[Move], point: &RationalVector) -> RationalVector {
    let mut x = point.0.clone();
    for &mv in path {
        apply_move_to_point(&mut x, mv);
    }
    RationalVector(x)
}

/// A maximal cone on which the map is linear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub matrix: LinearMapMatrix,
    /// Irredundant description of the closed region.
    pub cone: HCone,
    /// Number of branch cells merged into the region.
    pub cells: usize,
}

impl Region {
    pub fn facet_count(&self) -> usize {
        self.cone.facet_count()
    }
}

impl Serialize for Region {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Region", 3)?;
        st.serialize_field("matrix", &self.matrix)?;
        st.serialize_field("ineqs", &crate::polyhedra::big_strings(self.cone.ineqs()))?;
        st.serialize_field("facets", &self.facet_count())?;
        st.end()
    }
}

/// The decomposition of the domain into regions of linearity.
#[derive(Clone, Debug)]
pub struct RegionAtlas {
    pub src: ReducedWord,
    pub dst: ReducedWord,
    pub path: Vec<Move>,
    /// Sorted by matrix.
    pub regions: Vec<Region>,
}

impl RegionAtlas {
    pub fn dim(&self) -> usize {
        self.src.len()
    }

    /// Facet count ↦ number of regions with that many facets.
    pub fn facet_histogram(&self) -> BTreeMap<usize, usize> {
        facet_histogram(self)
    }

    /// Indices of regions containing `x` (closed regions, so boundary
    /// points lie in several).
    pub fn locate(&self, x: &RationalVector) -> Vec<usize> {
        (0..self.regions.len()).filter(|&i| self.regions[i].cone.contains(x)).collect()
    }

    pub fn region_of_matrix(&self, m: &LinearMapMatrix) -> Option<usize> {
        self.regions.binary_search_by(|r| r.matrix.cmp(m)).ok()
    }

    /// Smallest facet count over all regions.
    pub fn min_facets(&self) -> usize {
        self.regions.iter().map(Region::facet_count).min().unwrap_or(0)
    }
}

impl Serialize for RegionAtlas {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.regions.serialize(s)
    }
}

pub fn facet_histogram(atlas: &RegionAtlas) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for r in &atlas.regions {
        *h.entry(r.facet_count()).or_insert(0) += 1;
    }
    h
}

/// Atlas of the map between the two standard words of `rank`.
pub fn standard_atlas(rank: usize) -> Result<RegionAtlas> {
    let (j, jp) = standard_words(rank)?;
    transition_atlas(&j, &jp)
}

/// Atlas of the map from `src` to `dst` coordinates along the path found by
/// [`find_move_path`].
pub fn transition_atlas(src: &ReducedWord, dst: &ReducedWord) -> Result<RegionAtlas> {
    let path = find_move_path(src, dst)?;
    atlas_along(src, dst, path)
}

/// Atlas built along [`detour_move_path`]; used to audit independence from
/// the chosen path.
pub fn transition_atlas_alternate(src: &ReducedWord, dst: &ReducedWord) -> Result<RegionAtlas> {
    let path = detour_move_path(src, dst)?;
    atlas_along(src, dst, path)
}

/// Node of the branch tree. Only braid moves that genuinely split create
/// nodes.
struct Node {
    /// Guard added on entering this node (absent at the root).
    guard: Option<Vec<BigInt>>,
    children: Vec<usize>,
    /// Matrix ids of the leaves below this node.
    matrices: BTreeSet<usize>,
}

struct BranchTree {
    nodes: Vec<Node>,
    /// Leaf cells: (matrix id, guards along the branch).
    leaves: Vec<(usize, Vec<Vec<BigInt>>)>,
    matrices: Vec<LinearMapMatrix>,
    matrix_ids: HashMap<LinearMapMatrix, usize>,
}

impl BranchTree {
    fn grow(dim: usize, path: &[Move]) -> Self {
        let mut tree = BranchTree { nodes: Vec::new(), leaves: Vec::new(), matrices: Vec::new(), matrix_ids: HashMap::new() };
        let identity = LinearMapMatrix::identity(dim).rows().to_vec();
        let witness = RationalVector::from_integers(std::iter::repeat(1).take(dim));
        tree.explore(path, identity, None, &mut Vec::new(), witness);
        tree
    }

    fn explore(
        &mut self,
        path: &[Move],
        mut forms: Vec<Vec<BigInt>>,
        guard: Option<Vec<BigInt>>,
        guards: &mut Vec<Vec<BigInt>>,
        witness: RationalVector,
    ) -> usize {
        let id = self.nodes.len();
        self.nodes.push(Node { guard, children: Vec::new(), matrices: BTreeSet::new() });
        let dim = forms.len();
        for (step, &mv) in path.iter().enumerate() {
            let t = mv.position;
            if mv.kind == MoveKind::Commutation {
                forms.swap(t, t + 1);
                continue;
            }
            let diff: Vec<BigInt> = forms[t + 2].iter().zip(&forms[t]).map(|(c, a)| c - a).collect();
            if is_zero_vec(&diff) {
                apply_branch(&mut forms, t, Branch::TakeA);
                continue;
            }
            for branch in [Branch::TakeA, Branch::TakeC] {
                let g = primitive(&match branch {
                    Branch::TakeA => diff.clone(),
                    Branch::TakeC => negate(&diff),
                });
                let child_witness = if dot_rational(&g, &witness.0).is_positive() {
                    Some(witness.clone())
                } else {
                    let mut sys = guards.clone();
                    sys.push(g.clone());
                    let cone = HCone::new(dim, sys).expect("guards share the dimension");
                    cone.interior_point()
                };
                if let Some(w) = child_witness {
                    let mut child_forms = forms.clone();
                    apply_branch(&mut child_forms, t, branch);
                    guards.push(g.clone());
                    let child = self.explore(&path[step + 1..], child_forms, Some(g), guards, w);
                    guards.pop();
                    self.nodes[id].children.push(child);
                }
            }
            let below: BTreeSet<usize> =
                self.nodes[id].children.iter().flat_map(|&c| self.nodes[c].matrices.iter().copied()).collect();
            self.nodes[id].matrices = below;
            return id;
        }
        let matrix = LinearMapMatrix::new(forms).expect("forms are square");
        let next = self.matrices.len();
        let mid = *self.matrix_ids.entry(matrix.clone()).or_insert(next);
        if mid == next {
            self.matrices.push(matrix);
        }
        self.leaves.push((mid, guards.clone()));
        self.nodes[id].matrices.insert(mid);
        id
    }
}

fn apply_branch(forms: &mut [Vec<BigInt>], t: usize, branch: Branch) {
    let (a, b, c) = (forms[t].clone(), forms[t + 1].clone(), forms[t + 2].clone());
    let add = |x: &[BigInt], y: &[BigInt]| -> Vec<BigInt> { x.iter().zip(y).map(|(p, q)| p + q).collect() };
    let sub = |x: &[BigInt], y: &[BigInt]| -> Vec<BigInt> { x.iter().zip(y).map(|(p, q)| p - q).collect() };
    match branch {
        Branch::TakeA => {
            forms[t] = sub(&add(&b, &c), &a);
            forms[t + 1] = a;
            forms[t + 2] = b;
        }
        Branch::TakeC => {
            forms[t] = b.clone();
            forms[t + 1] = c.clone();
            forms[t + 2] = sub(&add(&a, &b), &c);
        }
    }
}

/// Largest rank for which atlases are built; rank 5 branches into far too
/// many cells for exact enumeration.
pub const MAX_ATLAS_RANK: usize = 4;

/// Builds the atlas along an explicit move path.
pub fn atlas_along(src: &ReducedWord, dst: &ReducedWord, path: Vec<Move>) -> Result<RegionAtlas> {
    if src.rank() > MAX_ATLAS_RANK {
        return Err(Error::RankTooLarge { rank: src.rank(), max: MAX_ATLAS_RANK });
    }
    if src.rank() != dst.rank() {
        return Err(Error::RankMismatch { left: src.rank(), right: dst.rank() });
    }
    let dim = src.len();
    let tree = BranchTree::grow(dim, &path);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); tree.matrices.len()];
    for (leaf, (mid, _)) in tree.leaves.iter().enumerate() {
        members[*mid].push(leaf);
    }
    let mut regions: Vec<Region> = (0..tree.matrices.len())
        .into_par_iter()
        .map(|mid| merge_region(&tree, dim, mid, &members[mid]))
        .collect::<Result<_>>()?;
    regions.sort_by(|a, b| a.matrix.cmp(&b.matrix));
    Ok(RegionAtlas { src: src.clone(), dst: dst.clone(), path, regions })
}

/// Merges the cells of one matrix and certifies that their union is the
/// convex cone cut out by the cell inequalities valid on every cell.
fn merge_region(tree: &BranchTree, dim: usize, mid: usize, leaves: &[usize]) -> Result<Region> {
    let cells: Vec<HCone> = leaves
        .iter()
        .map(|&l| HCone::new(dim, tree.leaves[l].1.clone()).expect("guards share the dimension"))
        .collect();
    let witnesses: Vec<RationalVector> =
        cells.iter().map(|c| c.interior_point().expect("retained cells are full-dimensional")).collect();

    let mut candidates: Vec<Vec<BigInt>> = cells.iter().flat_map(|c| c.ineqs().iter().cloned()).collect();
    candidates.sort();
    candidates.dedup();
    let valid: Vec<Vec<BigInt>> = candidates
        .into_iter()
        .filter(|g| {
            cells.iter().zip(&witnesses).all(|(cell, w)| {
                cell.ineqs().contains(g) || (!dot_rational(g, &w.0).is_negative() && cell.implies(g))
            })
        })
        .collect();
    let hull = HCone::new(dim, valid)?;
    certify_convex(tree, mid, &hull)?;
    let cone = irredundant_h(&hull)?;
    Ok(Region { matrix: tree.matrices[mid].clone(), cone, cells: leaves.len() })
}

/// Walks the branch tree and fails if some cell with a different matrix
/// meets `hull` in a full-dimensional set.
fn certify_convex(tree: &BranchTree, mid: usize, hull: &HCone) -> Result<()> {
    let mut stack: Vec<(usize, Vec<Vec<BigInt>>)> = vec![(0, Vec::new())];
    while let Some((node, mut guards)) = stack.pop() {
        let n = &tree.nodes[node];
        if let Some(g) = &n.guard {
            guards.push(g.clone());
        }
        if n.matrices.iter().all(|&m| m == mid) {
            continue;
        }
        if !hull.with_ineqs(&guards).is_full_dimensional() {
            continue;
        }
        if n.children.is_empty() {
            let foreign = *n.matrices.iter().next().expect("leaf carries its matrix");
            let witness = hull.with_ineqs(&guards).interior_point().map(|p| p.to_string()).unwrap_or_default();
            return Err(Error::NonConvexRegion {
                matrix: format!("{:?}", tree.matrices[mid].rows()),
                witness: format!("overlaps the cell of {:?} at {witness}", tree.matrices[foreign].rows()),
            });
        }
        for &c in &n.children {
            stack.push((c, guards.clone()));
        }
    }
    Ok(())
}

/// Integer evaluation of a region's map; handy for spot checks.
pub fn apply_region(region: &Region, x: &[BigInt]) -> Vec<BigInt> {
    region.matrix.apply_integer(x)
}

/// Whether the atlas agrees with exact evaluation at `x`: every region
/// containing `x` maps it to the evaluated image. Returns the number of
/// containing regions.
pub fn check_point(atlas: &RegionAtlas, x: &[BigInt]) -> std::result::Result<usize, String> {
    let point = RationalVector::from_bigints(x);
    let image = evaluate_along(&atlas.path, &point);
    let mut hits = 0;
    for r in &atlas.regions {
        if r.cone.contains_integer(x) {
            hits += 1;
            if RationalVector::from_bigints(&r.matrix.apply_integer(x)) != image {
                return Err(format!("region map disagrees with evaluation at {point}"));
            }
        }
    }
    if hits == 0 {
        return Err(format!("no region contains {point}"));
    }
    Ok(hits)
}
