//! Wiring diagrams of reduced words and their bounded-chamber sets.
//!
//! Strings are numbered `1..=n+1` from the top on the left edge. A letter `g`
//! crosses the strings at positions `g` and `g + 1`. The bounded chambers at
//! gap `g` lie between consecutive crossings of letter `g`; the chamber set
//! lists the strings passing below the chamber.

use std::fmt::Write as _;

use serde::Serialize;

use crate::weyl::ReducedWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ChamberSet {
    /// Gap between positions `gap` and `gap + 1`, counted from the top.
    pub gap: usize,
    /// 0-based word positions of the two bounding crossings.
    pub between: (usize, usize),
    /// Sorted labels of the strings below the chamber.
    pub members: Vec<usize>,
}

/// Whether `s` is `{1, …, i}` for some `i ≥ 0` (the empty set included).
pub fn is_initial(s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &v)| v == i + 1)
}

/// Whether `s` is `{i, …, top}` for some `i` (the empty set included).
pub fn is_terminal(s: &[usize], top: usize) -> bool {
    s.iter().rev().enumerate().all(|(i, &v)| v + i == top)
}

/// String order after each prefix: `orders[t]` is the top-to-bottom order
/// before reading letter `t`.
fn sweep(word: &ReducedWord) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (1..=word.rank() + 1).collect();
    let mut orders = vec![order.clone()];
    for &l in word.letters() {
        order.swap(l as usize - 1, l as usize);
        orders.push(order.clone());
    }
    orders
}

/// The `n(n−1)/2` chamber sets, ordered by the position of the left crossing.
pub fn chamber_sets(word: &ReducedWord) -> Vec<ChamberSet> {
    let letters = word.letters();
    let orders = sweep(word);
    let mut out = Vec::new();
    for t in 0..letters.len() {
        let g = letters[t] as usize;
        let Some(t2) = (t + 1..letters.len()).find(|&p| letters[p] as usize == g) else { continue };
        let below = |o: &Vec<usize>| -> Vec<usize> {
            let mut m = o[g..].to_vec();
            m.sort_unstable();
            m
        };
        let members = below(&orders[t + 1]);
        // The set below gap g only changes at crossings of g itself.
        debug_assert!((t + 1..=t2).all(|p| below(&orders[p]) == members));
        out.push(ChamberSet { gap: g, between: (t, t2), members });
    }
    out
}

/// Drawing style for [`render_wiring`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

pub fn render_wiring(word: &ReducedWord, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(word),
        RenderFormat::Svg => render_svg(word),
    }
}

fn set_label(members: &[usize]) -> String {
    let parts: Vec<String> = members.iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn render_ascii(word: &ReducedWord) -> String {
    let n1 = word.rank() + 1;
    let k = word.len();
    let chambers = chamber_sets(word);
    let longest = chambers.iter().map(|c| set_label(&c.members).len()).max().unwrap_or(0);
    let mut w = (longest / 2 + 2).max(5);
    if w % 2 == 0 {
        w += 1;
    }
    let margin = 4;
    let width = margin + k * w + margin;
    let mut grid = vec![vec![' '; width]; 2 * n1 - 1];
    for s in 0..n1 {
        let row = &mut grid[2 * s];
        for c in margin..margin + k * w {
            row[c] = '-';
        }
        let left = format!("{:>2} ", s + 1);
        let right = format!(" {}", n1 - s);
        for (i, ch) in left.chars().enumerate() {
            row[i] = ch;
        }
        for (i, ch) in right.chars().enumerate() {
            if margin + k * w + i < width {
                row[margin + k * w + i] = ch;
            }
        }
    }
    let mid = w / 2;
    for (t, &l) in word.letters().iter().enumerate() {
        let top = 2 * (l as usize - 1);
        let x0 = margin + t * w;
        grid[top][x0 + mid - 1] = '\\';
        grid[top][x0 + mid] = ' ';
        grid[top][x0 + mid + 1] = '/';
        grid[top + 1][x0 + mid] = 'X';
        grid[top + 2][x0 + mid - 1] = '/';
        grid[top + 2][x0 + mid] = ' ';
        grid[top + 2][x0 + mid + 1] = '\\';
    }
    for c in &chambers {
        let label = set_label(&c.members);
        let lo = margin + c.between.0 * w + mid + 1;
        let hi = margin + c.between.1 * w + mid;
        let start = lo + (hi - lo).saturating_sub(label.len()) / 2;
        let row = 2 * c.gap - 1;
        for (i, ch) in label.chars().enumerate() {
            grid[row][start + i] = ch;
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_svg(word: &ReducedWord) -> String {
    const DX: usize = 48;
    const DY: usize = 36;
    const X0: usize = 40;
    const Y0: usize = 30;
    let n1 = word.rank() + 1;
    let k = word.len();
    let orders = sweep(word);
    let width = 2 * X0 + k * DX;
    let height = 2 * Y0 + (n1 - 1) * DY;
    let y = |pos: usize| Y0 + pos * DY;
    let x = |t: usize| X0 + t * DX;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
    );
    for label in 1..=n1 {
        let mut points = Vec::with_capacity(k + 1);
        for (t, order) in orders.iter().enumerate() {
            let pos = order.iter().position(|&s| s == label).expect("every string is present");
            points.push(format!("{},{}", x(t), y(pos)));
        }
        let _ = writeln!(svg, r#"  <polyline points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#, points.join(" "));
        let _ = writeln!(svg, r#"  <text x="{}" y="{}" text-anchor="end">{label}</text>"#, X0 - 8, y(label - 1) + 4);
    }
    for c in chamber_sets(word) {
        let cx = (x(c.between.0) + x(c.between.0 + 1) + x(c.between.1) + x(c.between.1 + 1)) / 4;
        let cy = (y(c.gap - 1) + y(c.gap)) / 2 + 4;
        let _ = writeln!(svg, r#"  <text x="{cx}" y="{cy}" text-anchor="middle" fill="darkblue">{}</text>"#, set_label(&c.members));
    }
    svg.push_str("</svg>\n");
    svg
}
