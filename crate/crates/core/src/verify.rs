//! Golden checks against the published values, property suites and the
//! path-independence audit. Shared by the acceptance test target and the
//! `verify` command.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chambers::{chamber_sets, is_initial, is_terminal};
use crate::error::Result;
use crate::lusztig::lusztig_cone;
use crate::polyhedra::{cone_equal, HCone, RationalVector};
use crate::quivers::{chamber_set_from_quiver, enumerate_partial_quivers, quiver_from_chamber_set, PartialQuiver};
use crate::rectangles::{place_configuration, Rectangle};
use crate::regions::matching::match_classes_in;
use crate::regions::orthant::{decomposition_sizes, orthant_histogram, orthant_parts};
use crate::regions::{check_point, evaluate_along, standard_atlas, transition_atlas, transition_atlas_alternate, RegionAtlas};
use crate::weyl::{commutation_classes, enumerate_reduced_words, standard_words, PositiveRoot, ReducedWord};

/// Outcome of one check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
    pub seconds: f64,
}

impl Check {
    /// One line: `PASS [id] title: expected …; actual … (0.12 s)`.
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {}: expected {}; actual {} ({:.2} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.expected,
            self.actual,
            self.seconds
        )
    }
}

fn timed(id: &str, title: &str, f: impl FnOnce() -> Result<(bool, String, String)>) -> Check {
    let start = Instant::now();
    let (passed, expected, actual) = match f() {
        Ok(v) => v,
        Err(e) => (false, "no error".into(), format!("error: {e}")),
    };
    Check { id: id.into(), title: title.into(), passed, expected, actual, seconds: start.elapsed().as_secs_f64() }
}

fn word(s: &str) -> ReducedWord {
    ReducedWord::parse(s, None).expect("golden word is reduced")
}

fn set_text(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn histogram_text(h: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = h.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn census() -> Check {
    timed("1", "reduced-word census", || {
        let w3 = enumerate_reduced_words(3)?.len();
        let c3 = commutation_classes(3)?.len();
        let c4 = commutation_classes(4)?.len();
        Ok((
            (w3, c3, c4) == (16, 8, 62),
            "rank 3: 16 words, 8 classes; rank 4: 62 classes".into(),
            format!("rank 3: {w3} words, {c3} classes; rank 4: {c4} classes"),
        ))
    })
}

pub fn lusztig_golden() -> Check {
    timed("2", "Lusztig cone of 132132", || {
        let mut got = lusztig_cone(&word("132132")).describe();
        got.sort();
        let want = vec!["c >= a+d", "c >= b+e", "d+e >= c+f"];
        Ok((got == want, format!("{want:?}"), format!("{got:?}")))
    })
}

pub fn chambers_golden() -> Check {
    timed("3", "chamber sets of 2343121324", || {
        let mut got: Vec<Vec<usize>> = chamber_sets(&word("2343121324")).into_iter().map(|c| c.members).collect();
        got.sort();
        let mut want = vec![vec![2, 5], vec![2, 4, 5], vec![2], vec![2, 4], vec![1, 2, 4, 5], vec![1, 2, 4]];
        want.sort();
        let text = |v: &[Vec<usize>]| v.iter().map(|s| set_text(s)).collect::<Vec<_>>().join(" ");
        Ok((got == want, text(&want), text(&got)))
    })
}

/// Every nonempty subset of `{1, …, top}` that is neither initial nor
/// terminal.
fn proper_subsets(top: usize) -> Vec<Vec<usize>> {
    (1u32..1 << top)
        .map(|mask| (1..=top).filter(|&v| mask >> (v - 1) & 1 == 1).collect::<Vec<_>>())
        .filter(|s| !is_initial(s) && !is_terminal(s, top))
        .collect()
}

pub fn quiver_golden() -> Check {
    timed("4", "quiver bijection", || {
        let table: [(&[usize], &str); 6] =
            [(&[2, 5], "RRL"), (&[2], "--L"), (&[2, 4], "LRL"), (&[1, 2, 4, 5], "-R-"), (&[1, 2, 4], "LR-"), (&[2, 4, 5], "-RL")];
        let mut bad = Vec::new();
        for (s, t) in table {
            let q = quiver_from_chamber_set(s, 4)?.to_string();
            if q != t {
                bad.push(format!("{} -> {q}", set_text(s)));
            }
        }
        let rank13 = quiver_from_chamber_set(&[1, 2, 3, 4, 7, 8, 11], 13)?.to_string();
        if rank13 != "--LRRLLRR---" {
            bad.push(format!("rank 13 -> {rank13}"));
        }
        let mut trips = 0;
        for n in 2..=6 {
            for s in proper_subsets(n + 1) {
                let q = quiver_from_chamber_set(&s, n)?;
                if chamber_set_from_quiver(&q) != s {
                    bad.push(format!("rank {n}: {} does not round-trip", set_text(&s)));
                }
                trips += 1;
            }
            for q in enumerate_partial_quivers(n)? {
                if quiver_from_chamber_set(&chamber_set_from_quiver(&q), n)? != q {
                    bad.push(format!("rank {n}: {q} does not round-trip"));
                }
                trips += 1;
            }
        }
        Ok((
            bad.is_empty(),
            "golden table for 2343121324, the rank-13 case, all round trips for ranks 2..6".into(),
            if bad.is_empty() { format!("all match; {trips} round trips") } else { bad.join("; ") },
        ))
    })
}

pub fn rectangles_golden() -> Check {
    timed("5", "rectangle calculus for -LLRRRLRR", || {
        let cfg = place_configuration(&PartialQuiver::parse("-LLRRRLRR", Some(10))?)?;
        let comps: Vec<(usize, usize)> = cfg.components.iter().map(|c| (c.a, c.b)).collect();
        let rects: Vec<Rectangle> = cfg.placed.iter().map(|p| p.rect).collect();
        let sorted = |v: &[usize]| {
            let mut v = v.to_vec();
            v.sort();
            v
        };
        let r = PositiveRoot::new;
        let want_phi: BTreeSet<PositiveRoot> = [
            r(2, 2),
            r(1, 4),
            r(3, 6),
            r(7, 7),
            r(5, 9),
            r(6, 8),
            r(4, 10),
            r(3, 3),
            r(1, 5),
            r(2, 7),
            r(10, 10),
            r(8, 9),
        ]
        .into_iter()
        .collect();
        let phi = cfg.phi_plus();
        let phi_set: BTreeSet<PositiveRoot> = phi.iter().copied().collect();
        let want_rects = [(0, 7, 2, 9), (3, 7, 7, 11), (0, 3, 7, 10), (2, 3, 10, 11)];
        let ok = comps == [(7, 10), (4, 8), (3, 5), (1, 4)]
            && rects.iter().map(|x| (x.i, x.j, x.k, x.l)).eq(want_rects)
            && sorted(&cfg.u_counts) == [1, 2, 3, 4]
            && sorted(&cfg.w_counts) == [1, 2, 3, 4]
            && !cfg.centre.fallback
            && phi.len() == 12
            && phi_set == want_phi;
        let rect_text = rects.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let phi_text = phi.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        Ok((
            ok,
            "components (7,10) (4,8) (3,5) (1,4); rectangles (0,7,2,9) (3,7,7,11) (0,3,7,10) (2,3,10,11); diagonal counts {1,2,3,4} twice with one parity boundary; 12 roots".into(),
            format!(
                "components {comps:?}; rectangles {rect_text}; diagonal counts {:?} {:?}; central line x = {}; Φ⁺(P) = {phi_text}",
                cfg.u_counts, cfg.w_counts, cfg.centre.x
            ),
        ))
    })
}

/// Atlases of the standard map for ranks 2, 3 and 4.
pub struct Atlases {
    pub by_rank: BTreeMap<usize, RegionAtlas>,
}

impl Atlases {
    pub fn build(ranks: &[usize]) -> Result<Self> {
        let mut by_rank = BTreeMap::new();
        for &n in ranks {
            by_rank.insert(n, standard_atlas(n)?);
        }
        Ok(Self { by_rank })
    }
}

pub fn atlas_golden(atlases: &Atlases) -> Check {
    timed("6", "region atlas", || {
        let want: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::from([
            (2, BTreeMap::from([(1, 2)])),
            (3, BTreeMap::from([(3, 8), (4, 2)])),
            (4, BTreeMap::from([(6, 62), (7, 70), (8, 10), (11, 2)])),
        ]);
        let mut got = BTreeMap::new();
        for (&n, a) in &atlases.by_rank {
            got.insert(n, a.facet_histogram());
        }
        let text = |m: &BTreeMap<usize, BTreeMap<usize, usize>>| {
            m.iter()
                .map(|(n, h)| format!("rank {n}: {} regions {}", h.values().sum::<usize>(), histogram_text(h)))
                .collect::<Vec<_>>()
                .join("; ")
        };
        Ok((got == want, text(&want), text(&got)))
    })
}

pub fn matching_golden(atlas: &RegionAtlas) -> Check {
    matching_check("7", atlas, 62, 6)
}

fn matching_check(id: &str, atlas: &RegionAtlas, classes: usize, facets: usize) -> Check {
    timed(id, "class-region bijection", || {
        let report = match_classes_in(atlas)?;
        let distinct: BTreeSet<usize> = report.classes.iter().filter_map(|c| c.region).collect();
        let matched = report.classes.iter().filter(|c| c.cone_matches && c.region_facets == Some(facets)).count();
        let independent = report.classes.iter().filter(|c| c.independent).count();
        let orthant = HCone::orthant(atlas.dim());
        let inside = report.classes.iter().filter(|c| c.region.is_some_and(|r| atlas.regions[r].cone.is_subset_of(&orthant))).count();
        Ok((
            report.is_bijection() && matched == classes && distinct.len() == classes,
            format!("{classes} classes; cone(v_P, v_j) = closure(region) ∩ orthant for pairwise distinct {facets}-facet regions"),
            format!(
                "{} classes, {matched} matched, {} distinct regions, {independent} with independent spanning vectors; regions contained in the orthant: {inside}",
                report.classes.len(),
                distinct.len()
            ),
        ))
    })
}

pub fn orthant_golden(atlas: &RegionAtlas) -> Check {
    timed("8", "orthant restriction, rank 3", || {
        let parts = orthant_parts(atlas, 1_000_000)?;
        let hist = orthant_histogram(&parts);
        let sizes = decomposition_sizes(&parts);
        let class_parts = parts.iter().filter(|p| p.region_facets == 3 && p.facet_count() == 6).count();
        let want_sizes = BTreeMap::from([(8, BTreeSet::from([2])), (9, BTreeSet::from([4]))]);
        Ok((
            hist == BTreeMap::from([(6, 8), (8, 1), (9, 1)]) && class_parts == 8 && sizes == want_sizes,
            "facets {6:8, 8:1, 9:1}; decompositions 8 → 2, 9 → 4".into(),
            format!("facets {}; class regions with 6 facets: {class_parts}; decompositions {sizes:?}", histogram_text(&hist)),
        ))
    })
}

/// Seeded nonnegative integer points.
pub fn random_points(dim: usize, count: usize, max: i64, seed: u64) -> Vec<Vec<BigInt>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..dim).map(|_| BigInt::from(rng.gen_range(0..=max))).collect()).collect()
}

pub fn properties(atlases: &Atlases, points: usize) -> Check {
    timed("9", "property suites", || {
        let mut failures = Vec::new();
        let mut notes = Vec::new();
        for (&n, atlas) in &atlases.by_rank {
            let mut reversed = atlas.path.clone();
            reversed.reverse();
            let mut bad = 0usize;
            for x in random_points(atlas.dim(), points, 20, 0x5eed + n as u64) {
                let p = RationalVector::from_bigints(&x);
                let y = evaluate_along(&atlas.path, &p);
                let nonneg_int = y.to_integers().is_some_and(|v| v.iter().all(|c| c >= &BigInt::from(0)));
                if !nonneg_int || evaluate_along(&reversed, &y) != p || check_point(atlas, &x).is_err() {
                    bad += 1;
                }
            }
            if bad > 0 {
                failures.push(format!("rank {n}: {bad} bad points"));
            }
            notes.push(format!("rank {n}: {points} points"));
        }
        let mut quivers = 0;
        for n in 2..=8 {
            for q in enumerate_partial_quivers(n)? {
                if let Err(e) = place_configuration(&q) {
                    failures.push(format!("{q}: {e}"));
                }
                quivers += 1;
            }
        }
        notes.push(format!("{quivers} quivers disjoint"));
        let mut words = 0;
        for n in 1..=4 {
            for w in enumerate_reduced_words(n)? {
                for c in chamber_sets(&w) {
                    if is_initial(&c.members) || is_terminal(&c.members, n + 1) {
                        failures.push(format!("{w}: {}", set_text(&c.members)));
                    }
                }
                words += 1;
            }
        }
        notes.push(format!("{words} words' chamber sets proper"));
        let certified: usize = atlases.by_rank.values().map(|a| a.regions.len()).sum();
        notes.push(format!("{certified} regions certified convex"));
        Ok((
            failures.is_empty(),
            format!("round trip + atlas agreement on {points} points per rank; Φ⁺ disjoint ranks ≤ 8; chamber sets proper ranks ≤ 4; convexity ranks ≤ 4"),
            if failures.is_empty() { notes.join("; ") } else { failures.join("; ") },
        ))
    })
}

/// Regions agree as matrices and cones.
pub fn atlases_identical(a: &RegionAtlas, b: &RegionAtlas) -> bool {
    a.regions.len() == b.regions.len()
        && a.regions.iter().zip(&b.regions).all(|(x, y)| x.matrix == y.matrix && cone_equal(&x.cone, &y.cone))
}

pub fn path_independence(max_rank: usize) -> Check {
    timed("10", "path independence", || {
        let mut details = Vec::new();
        let mut ok = true;
        for n in 2..=max_rank {
            let (j, jp) = standard_words(n)?;
            let a = transition_atlas(&j, &jp)?;
            let b = transition_atlas_alternate(&j, &jp)?;
            let same = atlases_identical(&a, &b);
            ok &= same && a.path != b.path;
            details.push(format!(
                "rank {n}: paths of {} and {} moves{}, {}",
                a.path.len(),
                b.path.len(),
                if a.path == b.path { " (same path)" } else { "" },
                if same { "identical" } else { "different" }
            ));
        }
        Ok((ok, format!("identical atlases for ranks ≤ {max_rank}"), details.join("; ")))
    })
}

/// The ten acceptance criteria. `points` is the sample size per rank for
/// the property suite.
pub fn acceptance(points: usize) -> Vec<Check> {
    let mut out = vec![census(), lusztig_golden(), chambers_golden(), quiver_golden(), rectangles_golden()];
    let start = Instant::now();
    match Atlases::build(&[2, 3, 4]) {
        Ok(atlases) => {
            let mut c6 = atlas_golden(&atlases);
            c6.seconds += start.elapsed().as_secs_f64();
            out.push(c6);
            out.push(matching_golden(&atlases.by_rank[&4]));
            out.push(orthant_golden(&atlases.by_rank[&3]));
            out.push(properties(&atlases, points));
        }
        Err(e) => {
            for (id, title) in [("6", "region atlas"), ("7", "class-region bijection"), ("8", "orthant restriction, rank 3"), ("9", "property suites")] {
                out.push(Check {
                    id: id.into(),
                    title: title.into(),
                    passed: false,
                    expected: "atlas construction".into(),
                    actual: format!("error: {e}"),
                    seconds: 0.0,
                });
            }
        }
    }
    out.push(path_independence(3));
    out
}

/// Rank-specific golden suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    A2,
    A3,
    A4,
    Properties,
    All,
}

pub fn run_suite(suite: Suite, points: usize) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::All => acceptance(points),
        Suite::Properties => {
            let atlases = Atlases::build(&[2, 3, 4])?;
            vec![properties(&atlases, points), path_independence(3)]
        }
        Suite::A2 | Suite::A3 | Suite::A4 => {
            let n = match suite {
                Suite::A2 => 2,
                Suite::A3 => 3,
                _ => 4,
            };
            rank_suite(n)?
        }
    })
}

fn rank_suite(n: usize) -> Result<Vec<Check>> {
    let (words, classes, regions, hist): (usize, usize, usize, BTreeMap<usize, usize>) = match n {
        2 => (2, 2, 2, BTreeMap::from([(1, 2)])),
        3 => (16, 8, 10, BTreeMap::from([(3, 8), (4, 2)])),
        _ => (768, 62, 144, BTreeMap::from([(6, 62), (7, 70), (8, 10), (11, 2)])),
    };
    let id = |s: &str| format!("a{n}.{s}");
    let mut out = vec![timed(&id("words"), "reduced words and classes", || {
        let w = enumerate_reduced_words(n)?.len();
        let c = commutation_classes(n)?.len();
        Ok(((w, c) == (words, classes), format!("{words} words, {classes} classes"), format!("{w} words, {c} classes")))
    })];
    let start = Instant::now();
    let atlas = standard_atlas(n)?;
    let built = start.elapsed().as_secs_f64();
    let mut c = timed(&id("regions"), "regions of linearity", || {
        let h = atlas.facet_histogram();
        Ok((
            atlas.regions.len() == regions && h == hist,
            format!("{regions} regions {}", histogram_text(&hist)),
            format!("{} regions {}", atlas.regions.len(), histogram_text(&h)),
        ))
    });
    c.seconds += built;
    out.push(c);
    out.push(matching_check(&id("matching"), &atlas, classes, atlas.min_facets()));
    if n == 3 {
        let mut o = orthant_golden(&atlas);
        o.id = id("orthant");
        out.push(o);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_criteria() {
        for c in [census(), lusztig_golden(), chambers_golden(), quiver_golden(), rectangles_golden()] {
            assert!(c.passed, "{}", c.line());
        }
        assert!(path_independence(3).passed);
    }

    #[test]
    fn proper_subset_counts() {
        assert_eq!(proper_subsets(3).len(), 2);
        assert_eq!(proper_subsets(5).len(), 22);
    }

    #[test]
    fn seeded_points() {
        assert_eq!(random_points(3, 4, 5, 1), random_points(3, 4, 5, 1));
    }
}
