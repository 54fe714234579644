//! Partial quivers of type `A_n` and their bijection with chamber sets.
//!
//! Edges are numbered `2..=n` from right to left; the text form lists them
//! left to right (edge `n` first) using `L`, `R` and `-` for an unlabeled
//! edge.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::chambers::{chamber_sets, is_initial, is_terminal};
use crate::error::{Error, Result};
use crate::weyl::ReducedWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Orientation {
    L,
    R,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialQuiver {
    rank: usize,
    /// `labels[e - 2]` is the label of edge `e`.
    labels: Vec<Option<Orientation>>,
}

impl PartialQuiver {
    /// Validates that the labeled edges form a nonempty consecutive run.
    pub fn new(rank: usize, labels: Vec<Option<Orientation>>) -> Result<Self> {
        if rank < 2 {
            return Err(Error::RankTooSmall { rank, min: 2 });
        }
        if labels.len() != rank - 1 {
            return Err(Error::MalformedQuiver {
                input: format!("{labels:?}"),
                reason: format!("expected {} edges for rank {rank}", rank - 1),
            });
        }
        let q = Self { rank, labels };
        let labeled: Vec<usize> = q.labeled_edges();
        let consecutive = labeled.windows(2).all(|w| w[1] == w[0] + 1);
        if labeled.is_empty() || !consecutive {
            return Err(Error::MalformedQuiver {
                input: q.to_string(),
                reason: "labeled edges must be nonempty and consecutive".into(),
            });
        }
        Ok(q)
    }

    /// Parses the text form; the rank is one more than the number of
    /// edges. Accepts `-` or `−` for unlabeled edges.
    pub fn parse(input: &str, rank: Option<usize>) -> Result<Self> {
        let chars: Vec<char> = input.trim().chars().filter(|c| !c.is_whitespace()).collect();
        let mut labels = Vec::with_capacity(chars.len());
        for (pos, c) in chars.iter().enumerate() {
            labels.push(match c {
                'L' | 'l' => Some(Orientation::L),
                'R' | 'r' => Some(Orientation::R),
                '-' | '−' | '_' => None,
                other => {
                    return Err(Error::MalformedQuiver {
                        input: input.to_string(),
                        reason: format!("bad character {other:?} at position {}", pos + 1),
                    })
                }
            });
        }
        let inferred = labels.len() + 1;
        if let Some(r) = rank.filter(|&r| r != inferred) {
            return Err(Error::MalformedQuiver {
                input: input.to_string(),
                reason: format!("{} edges do not fit rank {r}", labels.len()),
            });
        }
        // Text runs from edge n down to edge 2.
        labels.reverse();
        Self::new(inferred, labels)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self, edge: usize) -> Option<Orientation> {
        if (2..=self.rank).contains(&edge) {
            self.labels[edge - 2]
        } else {
            None
        }
    }

    /// Labeled edge numbers in increasing order.
    pub fn labeled_edges(&self) -> Vec<usize> {
        (2..=self.rank).filter(|&e| self.labels[e - 2].is_some()).collect()
    }
}

impl fmt::Display for PartialQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.labels.iter().rev() {
            f.write_str(match l {
                Some(Orientation::L) => "L",
                Some(Orientation::R) => "R",
                None => "-",
            })?;
        }
        Ok(())
    }
}

impl Serialize for PartialQuiver {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn normalize_subset(subset: &[usize], top: usize) -> Result<Vec<usize>> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&bad) = s.iter().find(|&&v| v == 0 || v > top) {
        return Err(Error::Invalid(format!("element {bad} outside 1..={top}")));
    }
    Ok(s)
}

/// The partial quiver of a subset of `{1, …, rank+1}` that is neither an
/// initial nor a terminal segment.
pub fn quiver_from_chamber_set(subset: &[usize], rank: usize) -> Result<PartialQuiver> {
    if rank < 2 {
        return Err(Error::RankTooSmall { rank, min: 2 });
    }
    let top = rank + 1;
    let s = normalize_subset(subset, top)?;
    for (which, bad) in [("initial", is_initial(&s)), ("terminal", is_terminal(&s, top))] {
        if bad {
            return Err(Error::InitialOrTerminal { subset: s, which, top });
        }
    }
    let initial = s.iter().enumerate().take_while(|&(i, &v)| v == i + 1).count();
    let terminal = s.iter().rev().enumerate().take_while(|&(i, &v)| v + i == top).count();
    let mut labels = vec![None; rank - 1];
    for &e in &s[initial..s.len() - terminal] {
        labels[e - 2] = Some(Orientation::L);
    }
    if initial > 0 {
        labels[initial + 1 - 2] = Some(Orientation::R);
    }
    if terminal > 0 {
        labels[top - terminal - 2] = Some(Orientation::R);
    }
    let labeled: Vec<usize> = (0..labels.len()).filter(|&i| labels[i].is_some()).collect();
    let (lo, hi) = (labeled[0], *labeled.last().expect("nonempty"));
    for l in &mut labels[lo..=hi] {
        l.get_or_insert(Orientation::R);
    }
    PartialQuiver::new(rank, labels)
}

/// Inverse of [`quiver_from_chamber_set`].
pub fn chamber_set_from_quiver(q: &PartialQuiver) -> Vec<usize> {
    let labeled = q.labeled_edges();
    let (lo, hi) = (labeled[0], *labeled.last().expect("validated nonempty"));
    let mut s = Vec::new();
    if q.label(lo) == Some(Orientation::R) {
        s.extend(1..lo);
    }
    s.extend(labeled.iter().copied().filter(|&e| q.label(e) == Some(Orientation::L)));
    if q.label(hi) == Some(Orientation::R) {
        s.extend(hi + 1..=q.rank + 1);
    }
    s
}

/// The quivers of the chamber sets of `word`, in chamber order.
pub fn quivers_for_word(word: &ReducedWord) -> Result<Vec<PartialQuiver>> {
    Ok(quiver_pairs(word)?.into_iter().map(|(_, q)| q).collect())
}

/// Each chamber set with its quiver.
pub fn quiver_pairs(word: &ReducedWord) -> Result<Vec<(Vec<usize>, PartialQuiver)>> {
    chamber_sets(word)
        .into_iter()
        .map(|c| quiver_from_chamber_set(&c.members, word.rank()).map(|q| (c.members, q)))
        .collect()
}

/// Every partial quiver of the given rank, in text order.
pub fn enumerate_partial_quivers(rank: usize) -> Result<Vec<PartialQuiver>> {
    if rank < 2 {
        return Err(Error::RankTooSmall { rank, min: 2 });
    }
    let edges = rank - 1;
    let mut out = Vec::new();
    for start in 0..edges {
        for end in start..edges {
            let len = end - start + 1;
            for mask in 0..(1u64 << len) {
                let mut labels = vec![None; edges];
                for (i, l) in labels[start..=end].iter_mut().enumerate() {
                    *l = Some(if mask >> i & 1 == 1 { Orientation::R } else { Orientation::L });
                }
                out.push(PartialQuiver::new(rank, labels)?);
            }
        }
    }
    out.sort_by_key(|q| q.to_string());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(s: &[usize], rank: usize) -> String {
        quiver_from_chamber_set(s, rank).unwrap().to_string()
    }

    #[test]
    fn rank_thirteen_quiver() {
        assert_eq!(text(&[1, 2, 3, 4, 7, 8, 11], 13), "--LRRLLRR---");
        let q = PartialQuiver::parse("−−LRRLLRR−−−", None).unwrap();
        assert_eq!(chamber_set_from_quiver(&q), vec![1, 2, 3, 4, 7, 8, 11]);
    }

    #[test]
    fn chamber_set_table() {
        for (s, t) in [
            (&[2, 5][..], "RRL"),
            (&[2], "--L"),
            (&[2, 4], "LRL"),
            (&[1, 2, 4, 5], "-R-"),
            (&[1, 2, 4], "LR-"),
            (&[2, 4, 5], "-RL"),
        ] {
            assert_eq!(text(s, 4), t, "{s:?}");
        }
        assert_eq!(text(&[1, 3], 2), "R");
    }

    #[test]
    fn rejects_segments() {
        assert!(matches!(quiver_from_chamber_set(&[1, 2], 3), Err(Error::InitialOrTerminal { which: "initial", .. })));
        assert!(matches!(quiver_from_chamber_set(&[3, 4], 3), Err(Error::InitialOrTerminal { which: "terminal", .. })));
        assert!(quiver_from_chamber_set(&[], 3).is_err());
        assert!(PartialQuiver::parse("L-L", None).is_err());
        assert!(PartialQuiver::parse("---", None).is_err());
        assert!(PartialQuiver::parse("LXL", None).is_err());
        assert!(PartialQuiver::parse("LRL", Some(5)).is_err());
    }

    #[test]
    fn single_l_edge() {
        for e in 2..=6 {
            let mut labels = vec![None; 5];
            labels[e - 2] = Some(Orientation::L);
            assert_eq!(chamber_set_from_quiver(&PartialQuiver::new(6, labels).unwrap()), vec![e]);
        }
    }

    #[test]
    fn counts_by_generation() {
        assert_eq!(enumerate_partial_quivers(2).unwrap().len(), 2);
        assert_eq!(enumerate_partial_quivers(3).unwrap().len(), 8);
        assert_eq!(enumerate_partial_quivers(4).unwrap().len(), 22);
    }
}
