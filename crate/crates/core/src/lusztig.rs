//! The Lusztig cone of a reduced word.
//!
//! Coordinates are indexed by word positions. For consecutive occurrences
//! `t < t′` of a letter, the cone requires the intervening coordinates whose
//! letters are Dynkin-adjacent to dominate `a_t + a_{t′}`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyhedra::{extreme_rays, intersect, HCone, VCone};
use crate::weyl::{Move, MoveKind, ReducedWord};

/// `C_i` for a reduced word, with one inequality per pair of consecutive
/// equal letters. The coordinates are nonnegative by definition; `cone`
/// lists only the pair inequalities and [`LusztigCone::nonnegative`] adds
/// the orthant.
#[derive(Clone, Debug, Serialize)]
pub struct LusztigCone {
    pub word: ReducedWord,
    pub cone: HCone,
}

impl LusztigCone {
    pub fn dim(&self) -> usize {
        self.word.len()
    }

    /// The pair inequalities together with `x ≥ 0`.
    pub fn nonnegative(&self) -> HCone {
        intersect(&self.cone, &HCone::orthant(self.dim())).expect("same dimension")
    }

    /// Human-readable inequalities such as `c >= a+d`, using letters when
    /// there are at most 26 coordinates and `x1, x2, …` otherwise.
    pub fn describe(&self) -> Vec<String> {
        self.cone.ineqs().iter().map(|a| describe_inequality(a)).collect()
    }
}

fn coordinate_name(i: usize, dim: usize) -> String {
    if dim <= 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("x{}", i + 1)
    }
}

fn describe_inequality(a: &[BigInt]) -> String {
    let side = |positive: bool| -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| if positive { *c > &BigInt::from(0) } else { *c < &BigInt::from(0) })
            .map(|(i, c)| {
                let mag = if positive { c.clone() } else { -c };
                let name = coordinate_name(i, a.len());
                if mag == BigInt::from(1) { name } else { format!("{mag}{name}") }
            })
            .collect();
        if terms.is_empty() { "0".to_string() } else { terms.join("+") }
    };
    format!("{} >= {}", side(true), side(false))
}

pub fn lusztig_cone(word: &ReducedWord) -> LusztigCone {
    let letters = word.letters();
    let k = letters.len();
    let mut ineqs = Vec::with_capacity(k - word.rank());
    for t in 0..k {
        let Some(t2) = (t + 1..k).find(|&p| letters[p] == letters[t]) else { continue };
        let mut row = vec![BigInt::from(0); k];
        row[t] = BigInt::from(-1);
        row[t2] = BigInt::from(-1);
        for (p, coeff) in row.iter_mut().enumerate().take(t2).skip(t + 1) {
            if letters[p].abs_diff(letters[t]) == 1 {
                *coeff = BigInt::from(1);
            }
        }
        ineqs.push(row);
    }
    let cone = HCone::new(k, ineqs).expect("rows have the word length");
    LusztigCone { word: word.clone(), cone }
}

/// Extreme rays of the Lusztig cone inside the nonnegative orthant.
pub fn spanning_rays(word: &ReducedWord) -> Result<VCone> {
    extreme_rays(&lusztig_cone(word).nonnegative())
}

/// The coordinate permutation induced by a commutation move: position `p`
/// of the new word carries the coordinate of position `perm[p]` of the old.
pub fn transport_under_commutation(word: &ReducedWord, mv: Move) -> Result<Vec<usize>> {
    if mv.kind != MoveKind::Commutation {
        return Err(Error::IllegalMove { kind: "braid", position: mv.position + 1, word: word.to_string() });
    }
    crate::weyl::apply_move(word, mv)?;
    let mut perm: Vec<usize> = (0..word.len()).collect();
    perm.swap(mv.position, mv.position + 1);
    Ok(perm)
}

/// Renames coordinates: the result has `y_p = x_{perm[p]}`.
pub fn permute_cone(cone: &HCone, perm: &[usize]) -> HCone {
    let ineqs = cone.ineqs().iter().map(|a| perm.iter().map(|&q| a[q].clone()).collect()).collect();
    HCone::new(cone.dim(), ineqs).expect("permutation keeps the dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::{cone_equal, RationalVector};
    use crate::weyl::apply_move;

    fn word(s: &str) -> ReducedWord {
        ReducedWord::parse(s, None).unwrap()
    }

    #[test]
    fn rank_three_example() {
        let c = lusztig_cone(&word("132132"));
        let mut d = c.describe();
        d.sort();
        assert_eq!(d, vec!["c >= a+d", "c >= b+e", "d+e >= c+f"]);
        assert!(c.cone.contains(&RationalVector::from_integers([0, 0, 1, 1, 0, 0])));
        assert!(!c.cone.contains(&RationalVector::from_integers([1, 0, 0, 0, 0, 0])));
        assert!(c.cone.is_full_dimensional());
    }

    #[test]
    fn rank_one_and_two() {
        assert_eq!(lusztig_cone(&word("1")).cone.facet_count(), 0);
        let rays = spanning_rays(&word("1")).unwrap();
        assert_eq!(rays.rays().len(), 1);
        let rays = spanning_rays(&word("121")).unwrap();
        let expected: Vec<Vec<BigInt>> =
            [[0, 1, 0], [0, 1, 1], [1, 1, 0]].iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        assert_eq!(rays.rays(), expected.as_slice());
    }

    #[test]
    fn commutation_transport() {
        let w = word("132132");
        let mv = Move::commutation(0);
        let perm = transport_under_commutation(&w, mv).unwrap();
        assert_eq!(perm, vec![1, 0, 2, 3, 4, 5]);
        let moved = apply_move(&w, mv).unwrap();
        assert!(cone_equal(&lusztig_cone(&moved).cone, &permute_cone(&lusztig_cone(&w).cone, &perm)));
        assert!(transport_under_commutation(&word("121"), Move::braid(0)).is_err());
    }
}
