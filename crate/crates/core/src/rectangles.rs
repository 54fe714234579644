//! Rectangle calculus for partial quivers.
//!
//! Rectangles have sides of slope ±1 in the plane of columns `x` and levels
//! (level grows downwards). In the rotated frame `u = x − level`,
//! `w = x + level` they become axis-parallel boxes, which keeps every
//! predicate exact. A rectangle whose left corner sits at column `x₀` and
//! level `j` occupies `u ∈ [x₀ − j, x₀ + j − 2i]`, `w ∈ [x₀ + j, x₀ + 2l − j]`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quivers::{Orientation, PartialQuiver};
use crate::weyl::{longest_length, positive_root_order, standard_words, PositiveRoot};

fn half() -> Rational64 {
    Rational64::new(1, 2)
}

fn int(v: i64) -> Rational64 {
    Rational64::from_integer(v)
}

fn ser_rational<S: Serializer>(v: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// A maximal run of equally oriented edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub kind: Orientation,
    /// Edge following the rightmost arrow.
    pub a: usize,
    /// Edge preceding the leftmost arrow.
    pub b: usize,
}

/// Components from left to right (decreasing edge numbers).
pub fn components(q: &PartialQuiver) -> Vec<Component> {
    let mut out = Vec::new();
    let mut e = q.rank();
    while e >= 2 {
        let Some(kind) = q.label(e) else {
            e -= 1;
            continue;
        };
        let hi = e;
        while e >= 2 && q.label(e) == Some(kind) {
            e -= 1;
        }
        // Edges hi..=e+1 carry the run.
        out.push(Component { kind, a: e, b: hi + 1 });
    }
    out
}

/// An `(i, j, k, l)`-rectangle: corners on levels `i` (top), `j` (left),
/// `k` (right) and `l` (bottom).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Rectangle {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub l: i64,
}

impl Rectangle {
    pub fn new(i: i64, j: i64, k: i64, l: i64) -> Result<Self> {
        if i < j && j < l && i < k && k < l && i + l == j + k {
            Ok(Self { i, j, k, l })
        } else {
            Err(Error::BadRectangle { i, j, k, l })
        }
    }
}

impl std::fmt::Display for Rectangle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.i, self.j, self.k, self.l)
    }
}

pub fn rectangle_for_component(c: &Component, rank: usize) -> Result<Rectangle> {
    let (n, a, b) = (rank as i64, c.a as i64, c.b as i64);
    if !(1 <= a && a < b && b <= n + 1) {
        return Err(Error::Configuration(format!("component bounds a={a}, b={b} outside 1 ≤ a < b ≤ {}", n + 1)));
    }
    match c.kind {
        Orientation::L => Rectangle::new(0, a, n + 2 - b, n + a - b + 2),
        Orientation::R => Rectangle::new(b - a - 1, b - 1, n + 1 - a, n + 1),
    }
}

/// Axis-parallel box in the `(u, w)` frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UwBox {
    pub u0: Rational64,
    pub u1: Rational64,
    pub w0: Rational64,
    pub w1: Rational64,
}

impl UwBox {
    fn contains_open(&self, u: Rational64, w: Rational64) -> bool {
        self.u0 < u && u < self.u1 && self.w0 < w && w < self.w1
    }

    /// Rectangle levels and left-corner column of the box.
    pub fn rectangle(&self) -> (Rectangle, Rational64) {
        let lvl = |u: Rational64, w: Rational64| ((w - u) / int(2)).to_integer();
        let rect = Rectangle {
            i: lvl(self.u1, self.w0),
            j: lvl(self.u0, self.w0),
            k: lvl(self.u1, self.w1),
            l: lvl(self.u0, self.w1),
        };
        (rect, (self.u0 + self.w0) / int(2))
    }
}

/// A rectangle with its left corner at column `x0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PlacedRectangle {
    pub rect: Rectangle,
    #[serde(serialize_with = "ser_rational")]
    pub x0: Rational64,
}

impl PlacedRectangle {
    pub fn uw_box(&self) -> UwBox {
        let r = self.rect;
        UwBox {
            u0: self.x0 - int(r.j),
            u1: self.x0 + int(r.j - 2 * r.i),
            w0: self.x0 + int(r.j),
            w1: self.x0 + int(2 * r.l - r.j),
        }
    }

    /// Column of the right corner.
    pub fn right_x(&self) -> Rational64 {
        self.x0 + int(self.rect.l - self.rect.i)
    }

    /// Root columns left to right: `(column, root)`.
    pub fn roots(&self) -> Vec<(Rational64, PositiveRoot)> {
        roots_of_rectangle(&self.rect, self.x0)
    }
}

/// Columns of `rect` anchored with its left corner at column `x0`. The
/// column at offset `d` spans the integer levels strictly between the upper
/// and lower sides; alternate columns are kept, starting with the first
/// iff its single entry `j` is odd.
pub fn roots_of_rectangle(rect: &Rectangle, x0: Rational64) -> Vec<(Rational64, PositiveRoot)> {
    let Rectangle { i, j, l, .. } = *rect;
    let width = l - i;
    let mut out = Vec::new();
    for c in 0..width {
        if (c + j) % 2 == 0 {
            continue;
        }
        // Offsets are measured to the column centre: d = c + 1/2, so the
        // sides sit half a level above and below the extreme entries.
        let upper_top = if c < j - i { j - c } else { i + (c + 1 - (j - i)) };
        let lower_bottom = if c < l - j { j + c } else { l - (c + 1 - (l - j)) };
        let (p, q) = (upper_top, lower_bottom);
        if p >= 1 && p <= q {
            out.push((x0 + int(c) + half(), PositiveRoot::new(p as usize, q as usize)));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A corner point with its maximal rectangle and root set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CornerPoint {
    pub side: Side,
    #[serde(serialize_with = "ser_rational")]
    pub x: Rational64,
    pub level: i64,
    pub maximal: Rectangle,
    #[serde(serialize_with = "ser_rational")]
    pub maximal_x0: Rational64,
    /// Roots of the maximal rectangle strictly on this corner's side of the
    /// central line.
    pub roots: Vec<PositiveRoot>,
    /// Root columns lying exactly on the central line (excluded).
    pub on_central_line: Vec<PositiveRoot>,
}

/// The centre of a configuration and the column of the central line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Centre {
    #[serde(serialize_with = "ser_rational")]
    pub u: Rational64,
    #[serde(serialize_with = "ser_rational")]
    pub w: Rational64,
    #[serde(serialize_with = "ser_rational")]
    pub x: Rational64,
    #[serde(serialize_with = "ser_rational")]
    pub level: Rational64,
    /// Some direction had a single band and used its midpoint.
    pub fallback: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RectangleConfiguration {
    pub rank: usize,
    pub quiver: PartialQuiver,
    pub components: Vec<Component>,
    pub placed: Vec<PlacedRectangle>,
    /// Cell counts per `u`-band (north-west to south-east diagonals), in
    /// increasing `u`.
    pub u_counts: Vec<usize>,
    /// Cell counts per `w`-band (north-east to south-west diagonals), in
    /// increasing `w`.
    pub w_counts: Vec<usize>,
    pub centre: Centre,
    pub corners: Vec<CornerPoint>,
    /// Roots whose column lies on the central line, each listed once.
    pub central: Vec<PositiveRoot>,
}

impl RectangleConfiguration {
    /// `Φ⁺(P)`: the union of the corner root sets and the central roots,
    /// sorted.
    pub fn phi_plus(&self) -> Vec<PositiveRoot> {
        let mut all: Vec<PositiveRoot> = self.corners.iter().flat_map(|c| c.roots.iter().copied()).collect();
        all.extend(self.central.iter().copied());
        all.sort();
        all
    }
}

/// Places the rectangles of consecutive components: an `L` followed by an
/// `R` share left corners; an `R` followed by an `L` share right corners.
/// The first left corner sits at column 1/2.
pub fn place_rectangles(comps: &[Component], rank: usize) -> Result<Vec<PlacedRectangle>> {
    let mut placed: Vec<PlacedRectangle> = Vec::with_capacity(comps.len());
    for (idx, c) in comps.iter().enumerate() {
        let rect = rectangle_for_component(c, rank)?;
        let x0 = match placed.last() {
            None => half(),
            Some(prev) => {
                let prev_kind = comps[idx - 1].kind;
                if prev_kind == c.kind {
                    return Err(Error::Configuration("adjacent components share an orientation".into()));
                }
                match prev_kind {
                    Orientation::L => {
                        if prev.rect.j != rect.j {
                            return Err(Error::Configuration(format!("left corners on levels {} and {}", prev.rect.j, rect.j)));
                        }
                        prev.x0
                    }
                    Orientation::R => {
                        if prev.rect.k != rect.k {
                            return Err(Error::Configuration(format!("right corners on levels {} and {}", prev.rect.k, rect.k)));
                        }
                        prev.right_x() - int(rect.l - rect.i)
                    }
                }
            }
        };
        placed.push(PlacedRectangle { rect, x0 });
    }
    Ok(placed)
}

fn cuts(values: impl Iterator<Item = Rational64>) -> Vec<Rational64> {
    let set: BTreeSet<Rational64> = values.collect();
    set.into_iter().collect()
}

/// Cells are the elementary boxes of the grid formed by every box edge
/// line that lie inside some placed box. Returns per-band counts.
pub fn diagonal_counts(placed: &[PlacedRectangle]) -> (Vec<usize>, Vec<usize>) {
    let (bands_u, bands_w) = band_tables(placed);
    (bands_u.into_iter().map(|(_, _, n)| n).collect(), bands_w.into_iter().map(|(_, _, n)| n).collect())
}

type Bands = Vec<(Rational64, Rational64, usize)>;

fn band_tables(placed: &[PlacedRectangle]) -> (Bands, Bands) {
    let boxes: Vec<UwBox> = placed.iter().map(|p| p.uw_box()).collect();
    let us = cuts(boxes.iter().flat_map(|b| [b.u0, b.u1]));
    let ws = cuts(boxes.iter().flat_map(|b| [b.w0, b.w1]));
    let mut u_bands: Bands = us.windows(2).map(|p| (p[0], p[1], 0)).collect();
    let mut w_bands: Bands = ws.windows(2).map(|p| (p[0], p[1], 0)).collect();
    for ub in u_bands.iter_mut() {
        for wb in w_bands.iter_mut() {
            let (mu, mw) = ((ub.0 + ub.1) / int(2), (wb.0 + wb.1) / int(2));
            if boxes.iter().any(|b| b.contains_open(mu, mw)) {
                ub.2 += 1;
                wb.2 += 1;
            }
        }
    }
    u_bands.retain(|b| b.2 > 0);
    w_bands.retain(|b| b.2 > 0);
    (u_bands, w_bands)
}

/// Coordinate of the odd/even boundary of a band table, or the midpoint of
/// a lone band (second component `true`).
fn parity_boundary(bands: &Bands) -> Result<(Rational64, bool)> {
    let counts: Vec<usize> = bands.iter().map(|b| b.2).collect();
    let changes: Vec<usize> = (0..bands.len().saturating_sub(1)).filter(|&p| counts[p] % 2 != counts[p + 1] % 2).collect();
    match changes.as_slice() {
        [p] => Ok((bands[*p].1, false)),
        [] if bands.len() == 1 => Ok(((bands[0].0 + bands[0].1) / int(2), true)),
        [] => Err(Error::AmbiguousCentre { counts }),
        _ => Err(Error::Configuration(format!("diagonal counts {counts:?} do not split into one odd and one even block"))),
    }
}

pub fn centre_and_central_line(placed: &[PlacedRectangle]) -> Result<Centre> {
    let (u_bands, w_bands) = band_tables(placed);
    let (u, fu) = parity_boundary(&u_bands)?;
    let (w, fw) = parity_boundary(&w_bands)?;
    Ok(Centre { u, w, x: (u + w) / int(2), level: (w - u) / int(2), fallback: fu || fw })
}

/// Maximal interval `[start, end]` reachable from `start` along collinear
/// segments in direction `dir` (±1).
fn extend(start: Rational64, segments: &[(Rational64, Rational64)], dir: i64) -> Rational64 {
    let mut reach = start;
    loop {
        let next = segments
            .iter()
            .filter(|&&(a, b)| if dir > 0 { a <= reach && b > reach } else { b >= reach && a < reach })
            .map(|&(a, b)| if dir > 0 { b } else { a })
            .fold(reach, |acc, v| if dir > 0 { acc.max(v) } else { acc.min(v) });
        if next == reach {
            return reach;
        }
        reach = next;
    }
}

/// Edge segments on the line `w = value` (as `u` intervals) or `u = value`
/// (as `w` intervals).
fn segments_on(boxes: &[UwBox], along_u: bool, value: Rational64) -> Vec<(Rational64, Rational64)> {
    let mut out = Vec::new();
    for b in boxes {
        if along_u {
            if b.w0 == value || b.w1 == value {
                out.push((b.u0, b.u1));
            }
        } else if b.u0 == value || b.u1 == value {
            out.push((b.w0, b.w1));
        }
    }
    out
}

/// Corner points with their maximal rectangles and root sets relative to
/// the central line `x = centre.x`.
pub fn corner_points(placed: &[PlacedRectangle], centre: &Centre) -> Result<Vec<CornerPoint>> {
    let boxes: Vec<UwBox> = placed.iter().map(|p| p.uw_box()).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for side in [Side::Left, Side::Right] {
        for b in &boxes {
            let (u, w) = match side {
                Side::Left => (b.u0, b.w0),
                Side::Right => (b.u1, b.w1),
            };
            if !seen.insert((side, u, w)) {
                continue;
            }
            let maximal = match side {
                Side::Left => UwBox {
                    u0: u,
                    u1: extend(u, &segments_on(&boxes, true, w), 1),
                    w0: w,
                    w1: extend(w, &segments_on(&boxes, false, u), 1),
                },
                Side::Right => UwBox {
                    u0: extend(u, &segments_on(&boxes, true, w), -1),
                    u1: u,
                    w0: extend(w, &segments_on(&boxes, false, u), -1),
                    w1: w,
                },
            };
            let (rect, x0) = maximal.rectangle();
            let rect = Rectangle::new(rect.i, rect.j, rect.k, rect.l)?;
            let x = (u + w) / int(2);
            let level = ((w - u) / int(2)).to_integer();
            let mut roots = Vec::new();
            let mut on_line = Vec::new();
            for (col, root) in roots_of_rectangle(&rect, x0) {
                if col == centre.x {
                    on_line.push(root);
                } else if (col < centre.x) == (side == Side::Left) {
                    roots.push(root);
                }
            }
            out.push(CornerPoint { side, x, level, maximal: rect, maximal_x0: x0, roots, on_central_line: on_line });
        }
    }
    out.sort_by(|a, b| (a.x, a.level).cmp(&(b.x, b.level)));
    Ok(out)
}

/// Builds the full configuration of a partial quiver. Fails if two corner
/// points claim the same root or a root both off and on the central line.
pub fn place_configuration(q: &PartialQuiver) -> Result<RectangleConfiguration> {
    let rank = q.rank();
    let comps = components(q);
    let placed = place_rectangles(&comps, rank)?;
    let (u_counts, w_counts) = diagonal_counts(&placed);
    let centre = centre_and_central_line(&placed)?;
    let corners = corner_points(&placed, &centre)?;
    let central: Vec<PositiveRoot> =
        corners.iter().flat_map(|c| c.on_central_line.iter().copied()).collect::<BTreeSet<_>>().into_iter().collect();
    let mut seen: BTreeSet<PositiveRoot> = central.iter().copied().collect();
    if let Some(r) = corners.iter().flat_map(|c| &c.roots).chain(&central).find(|r| r.q > rank) {
        return Err(Error::Configuration(format!("root {r} exceeds rank {rank}")));
    }
    for c in &corners {
        for r in &c.roots {
            if !seen.insert(*r) {
                return Err(Error::OverlappingRoots { root: r.to_string() });
            }
        }
    }
    Ok(RectangleConfiguration { rank, quiver: q.clone(), components: comps, placed, u_counts, w_counts, centre, corners, central })
}

/// `Φ⁺(P)`, sorted.
pub fn phi_plus(q: &PartialQuiver) -> Result<Vec<PositiveRoot>> {
    Ok(place_configuration(q)?.phi_plus())
}

/// 0/1 vector marking the positions of `Φ⁺(P)` in the root order of the
/// standard word `j`.
pub fn v_p(q: &PartialQuiver) -> Result<Vec<i64>> {
    let roots = phi_plus(q)?;
    let (j, _) = standard_words(q.rank())?;
    Ok(positive_root_order(&j).iter().map(|r| i64::from(roots.contains(r))).collect())
}

/// Indicator of the positions of letter `generator` in the standard word.
pub fn v_generator(generator: usize, rank: usize) -> Result<Vec<i64>> {
    if generator == 0 || generator > rank {
        return Err(Error::LetterOutOfRange { letter: generator, position: 1, rank });
    }
    let (j, _) = standard_words(rank)?;
    Ok(j.letters().iter().map(|&l| i64::from(l as usize == generator)).collect())
}

/// Dimension of the vectors above.
pub fn vector_dim(rank: usize) -> usize {
    longest_length(rank)
}

/// SVG drawing of the placed rectangles, their root columns, the dashed
/// central line and labeled corner points.
pub fn render_configuration_svg(cfg: &RectangleConfiguration) -> String {
    let scale = 24.0;
    let to_f = |r: Rational64| *r.numer() as f64 / *r.denom() as f64;
    let mut xs: Vec<f64> = Vec::new();
    let mut levels: Vec<f64> = Vec::new();
    for p in &cfg.placed {
        xs.push(to_f(p.x0));
        xs.push(to_f(p.right_x()));
        levels.push(p.rect.i as f64);
        levels.push(p.rect.l as f64);
    }
    for c in &cfg.corners {
        xs.push(to_f(c.maximal_x0));
        xs.push(to_f(c.maximal_x0) + (c.maximal.l - c.maximal.i) as f64);
        levels.push(c.maximal.i as f64);
        levels.push(c.maximal.l as f64);
    }
    let (xmin, xmax) = xs.iter().fold((f64::MAX, f64::MIN), |(a, b), &v| (a.min(v), b.max(v)));
    let (lmin, lmax) = levels.iter().fold((f64::MAX, f64::MIN), |(a, b), &v| (a.min(v), b.max(v)));
    let pad = 2.0;
    let px = |x: f64| (x - xmin + pad) * scale;
    let py = |lvl: f64| (lvl - lmin + pad) * scale;
    let width = (xmax - xmin + 2.0 * pad) * scale;
    let height = (lmax - lmin + 2.0 * pad) * scale;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif" font-size="11">"#
    );
    for p in &cfg.placed {
        let r = p.rect;
        let x0 = to_f(p.x0);
        let corners = [
            (x0, r.j as f64),
            (x0 + (r.j - r.i) as f64, r.i as f64),
            (to_f(p.right_x()), r.k as f64),
            (x0 + (r.l - r.j) as f64, r.l as f64),
        ];
        let pts: Vec<String> = corners.iter().map(|&(x, l)| format!("{:.1},{:.1}", px(x), py(l))).collect();
        let _ = writeln!(svg, r#"  <polygon points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#, pts.join(" "));
        for (col, root) in p.roots() {
            for lvl in root.p..=root.q {
                let _ = writeln!(
                    svg,
                    r#"  <text x="{:.1}" y="{:.1}" text-anchor="middle">{lvl}</text>"#,
                    px(to_f(col)),
                    py(lvl as f64) + 4.0
                );
            }
        }
    }
    let cx = px(to_f(cfg.centre.x));
    let _ = writeln!(
        svg,
        r#"  <line x1="{cx:.1}" y1="0" x2="{cx:.1}" y2="{height:.1}" stroke="gray" stroke-dasharray="6,3"/>"#
    );
    let _ = writeln!(svg, r#"  <text x="{:.1}" y="12" text-anchor="start">m</text>"#, cx + 4.0);
    for (idx, c) in cfg.corners.iter().enumerate() {
        let name = char::from(b'A' + (idx % 26) as u8);
        let dx = if c.side == Side::Left { -12.0 } else { 12.0 };
        let _ = writeln!(
            svg,
            r#"  <text x="{:.1}" y="{:.1}" text-anchor="middle" fill="darkred">{name}</text>"#,
            px(to_f(c.x)) + dx,
            py(c.level as f64) + 4.0
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Text drawing on the `(x, level)` lattice: rectangle sides as `/` and
/// `\`, corners as `+`, the central line as `:` and corner points as
/// `A`, `B`, … beside their corners. Levels grow downward.
pub fn render_configuration_ascii(cfg: &RectangleConfiguration) -> String {
    let mut pts: Vec<(Rational64, i64)> = Vec::new();
    let mut edges: Vec<((Rational64, i64), (Rational64, i64))> = Vec::new();
    for p in &cfg.placed {
        let r = p.rect;
        let c = [
            (p.x0, r.j),
            (p.x0 + int(r.j - r.i), r.i),
            (p.right_x(), r.k),
            (p.x0 + int(r.l - r.j), r.l),
        ];
        pts.extend_from_slice(&c);
        for t in 0..4 {
            edges.push((c[t], c[(t + 1) % 4]));
        }
    }
    let xmin = pts.iter().map(|p| p.0).min().unwrap_or_else(|| int(0)) - int(2);
    let xmax = pts.iter().map(|p| p.0).max().unwrap_or_else(|| int(0)) + int(2);
    let lmin = pts.iter().map(|p| p.1).min().unwrap_or(0);
    let lmax = pts.iter().map(|p| p.1).max().unwrap_or(0);
    let col = |x: Rational64| (x - xmin).to_integer() as usize;
    let width = col(xmax) + 1;
    let mut grid = vec![vec![' '; width]; (lmax - lmin + 1) as usize];
    let centre = cfg.centre.x - xmin;
    if centre.is_integer() {
        for row in grid.iter_mut() {
            row[centre.to_integer() as usize] = ':';
        }
    }
    for &((x1, l1), (x2, l2)) in &edges {
        let (a, b) = if x1 < x2 { ((x1, l1), (x2, l2)) } else { ((x2, l2), (x1, l1)) };
        let steps = (b.0 - a.0).to_integer();
        let dir = (b.1 - a.1).signum();
        let glyph = if dir > 0 { '\\' } else { '/' };
        for s in 1..steps {
            grid[(a.1 + dir * s - lmin) as usize][col(a.0) + s as usize] = glyph;
        }
    }
    for &(x, l) in &pts {
        grid[(l - lmin) as usize][col(x)] = '+';
    }
    for (idx, c) in cfg.corners.iter().enumerate() {
        let name = char::from(b'A' + (idx % 26) as u8);
        let at = col(c.x);
        let beside = if c.side == Side::Left { at.saturating_sub(1) } else { (at + 1).min(width - 1) };
        if let Some(row) = grid.get_mut((c.level - lmin) as usize) {
            row[beside] = name;
        }
    }
    let mut out = String::new();
    for (r, row) in grid.iter().enumerate() {
        let line: String = row.iter().collect();
        let _ = writeln!(out, "{:>3} {}", lmin + r as i64, line.trim_end());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiver(s: &str) -> PartialQuiver {
        PartialQuiver::parse(s, None).unwrap()
    }

    fn r(p: usize, q: usize) -> PositiveRoot {
        PositiveRoot::new(p, q)
    }

    fn corner(cfg: &RectangleConfiguration, x: Rational64, level: i64) -> &CornerPoint {
        cfg.corners.iter().find(|c| c.x == x && c.level == level).expect("corner present")
    }

    fn sorted(mut v: Vec<PositiveRoot>) -> Vec<PositiveRoot> {
        v.sort();
        v
    }

    #[test]
    fn ten_edge_configuration() {
        let q = quiver("-LLRRRLRR");
        let comps = components(&q);
        let ab: Vec<(usize, usize)> = comps.iter().map(|c| (c.a, c.b)).collect();
        assert_eq!(ab, vec![(7, 10), (4, 8), (3, 5), (1, 4)]);
        let cfg = place_configuration(&q).unwrap();
        let rects: Vec<Rectangle> = cfg.placed.iter().map(|p| p.rect).collect();
        assert_eq!(
            rects,
            vec![
                Rectangle::new(0, 7, 2, 9).unwrap(),
                Rectangle::new(3, 7, 7, 11).unwrap(),
                Rectangle::new(0, 3, 7, 10).unwrap(),
                Rectangle::new(2, 3, 10, 11).unwrap(),
            ]
        );
        let x0: Vec<Rational64> = cfg.placed.iter().map(|p| p.x0).collect();
        assert_eq!(x0, vec![half(), half(), int(-2) + half(), int(-2) + half()]);
        let mut u = cfg.u_counts.clone();
        u.sort();
        let mut w = cfg.w_counts.clone();
        w.sort();
        assert_eq!(u, vec![1, 2, 3, 4]);
        assert_eq!(w, vec![1, 2, 3, 4]);
        assert_eq!(cfg.centre.x, int(4) + half());
        assert!(!cfg.centre.fallback);
        assert_eq!(cfg.corners.len(), 5);

        let a = corner(&cfg, int(9) + half(), 2);
        assert_eq!(a.maximal, Rectangle::new(0, 7, 2, 9).unwrap());
        assert_eq!(sorted(a.roots.clone()), vec![r(1, 4), r(2, 2), r(3, 6)]);
        let b = corner(&cfg, half(), 7);
        assert_eq!(b.maximal, Rectangle::new(0, 7, 4, 11).unwrap());
        assert_eq!(sorted(b.roots.clone()), vec![r(5, 9), r(7, 7)]);
        let c = corner(&cfg, int(8) + half(), 7);
        assert_eq!(c.maximal, Rectangle::new(0, 4, 7, 11).unwrap());
        assert_eq!(sorted(c.roots.clone()), vec![r(4, 10), r(6, 8)]);
        let d = corner(&cfg, int(-2) + half(), 3);
        assert_eq!(d.maximal, Rectangle::new(0, 3, 8, 11).unwrap());
        assert_eq!(sorted(d.roots.clone()), vec![r(1, 5), r(2, 7), r(3, 3)]);
        let e = corner(&cfg, int(7) + half(), 10);
        assert_eq!(e.maximal, Rectangle::new(2, 3, 10, 11).unwrap());
        assert_eq!(sorted(e.roots.clone()), vec![r(8, 9), r(10, 10)]);

        let phi = cfg.phi_plus();
        assert_eq!(phi.len(), 12);
    }

    #[test]
    fn small_rectangle_roots() {
        let roots: Vec<PositiveRoot> =
            roots_of_rectangle(&Rectangle::new(0, 2, 3, 5).unwrap(), half()).into_iter().map(|(_, r)| r).collect();
        assert_eq!(roots, vec![r(1, 3), r(2, 4)]);
    }

    #[test]
    fn single_component_uses_midpoint() {
        let cfg = place_configuration(&quiver("--L")).unwrap();
        assert!(cfg.centre.fallback);
        assert_eq!(cfg.phi_plus(), vec![r(1, 1), r(2, 3)]);
    }

    #[test]
    fn generator_vectors() {
        assert_eq!(v_generator(1, 4).unwrap(), vec![1, 0, 0, 0, 1, 0, 0, 0, 1, 0]);
        assert!(v_generator(5, 4).is_err());
        assert_eq!(v_p(&quiver("--L")).unwrap().iter().sum::<i64>(), 2);
    }

    #[test]
    fn ascii_drawing() {
        let cfg = place_configuration(&quiver("-LLRRRLRR")).unwrap();
        let text = render_configuration_ascii(&cfg);
        assert_eq!(text.lines().count(), 12);
        assert_eq!(text.matches(|c: char| c.is_ascii_uppercase()).count(), 5);
        println!("{text}");
    }

    #[test]
    fn rectangle_validation() {
        assert!(Rectangle::new(0, 2, 3, 5).is_ok());
        assert!(Rectangle::new(0, 2, 2, 5).is_err());
        let svg = render_configuration_svg(&place_configuration(&quiver("-LLRRRLRR")).unwrap());
        assert_eq!(svg.matches("<polygon").count(), 4);
    }
}
