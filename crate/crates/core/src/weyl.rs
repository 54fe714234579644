//! Reduced words for the longest element of the symmetric group `S_{n+1}`.
//!
//! Generators are numbered `1..=n`; `s_i` swaps the entries at positions `i`
//! and `i + 1` of a permutation written in one-line notation. A word acts on
//! the identity by right multiplication, so after reading a prefix the array
//! holds `w(1), …, w(n+1)` for the prefix product `w`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank accepted by the exhaustive enumerators.
pub const MAX_ENUMERATION_RANK: usize = 5;

/// Number of positive roots in type `A_n`, i.e. the length of `w₀`.
pub fn longest_length(rank: usize) -> usize {
    rank * (rank + 1) / 2
}

/// A reduced word for `w₀` in type `A_rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    rank: usize,
    letters: Vec<u8>,
}

impl ReducedWord {
    /// Validates `letters` as a reduced word for `w₀`.
    pub fn new(rank: usize, letters: Vec<u8>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::RankTooSmall { rank, min: 1 });
        }
        let check = is_reduced(&letters, rank)?;
        let word = Self { rank, letters };
        if !check.reduced {
            return Err(Error::NotReduced { word: word.to_string() });
        }
        if !check.is_longest {
            return Err(Error::NotLongest { word: word.to_string() });
        }
        Ok(word)
    }

    /// Parses `"1324132413"` or `"1,3,2,4"`. Without an explicit rank the
    /// rank is inferred from the word length `n(n+1)/2`.
    pub fn parse(input: &str, rank: Option<usize>) -> Result<Self> {
        let letters = parse_letters(input)?;
        let rank = match rank {
            Some(r) => r,
            None => rank_from_length(letters.len()).ok_or_else(|| Error::MalformedWord {
                input: input.to_string(),
                reason: format!("length {} is not n(n+1)/2 for any n", letters.len()),
            })?,
        };
        Self::new(rank, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters, self.rank))
    }
}

impl Serialize for ReducedWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Serializes letters without separators when every letter is a single
/// digit (rank ≤ 9) and comma-separated otherwise.
pub fn format_letters(letters: &[u8], rank: usize) -> String {
    if rank <= 9 {
        letters.iter().map(|l| char::from(b'0' + l)).collect()
    } else {
        letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Parses digit strings (`"121"`) or comma/space separated integers.
pub fn parse_letters(input: &str) -> Result<Vec<u8>> {
    let trimmed = input.trim();
    let malformed = |reason: String| Error::MalformedWord { input: input.to_string(), reason };
    if trimmed.is_empty() {
        return Err(malformed("empty word".into()));
    }
    if trimmed.contains(',') || trimmed.contains(' ') {
        trimmed
            .split(|c| c == ',' || c == ' ')
            .filter(|t| !t.is_empty())
            .enumerate()
            .map(|(pos, tok)| {
                tok.parse::<u8>()
                    .map_err(|_| malformed(format!("bad letter {tok:?} at position {}", pos + 1)))
            })
            .collect()
    } else {
        trimmed
            .chars()
            .enumerate()
            .map(|(pos, c)| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| malformed(format!("bad character {c:?} at position {}", pos + 1)))
            })
            .collect()
    }
}

fn rank_from_length(len: usize) -> Option<usize> {
    (1..=64).find(|&n| longest_length(n) == len)
}

/// Outcome of [`is_reduced`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Reducedness {
    pub reduced: bool,
    /// The word's permutation is the order-reversing permutation. Only
    /// meaningful together with `reduced`.
    pub is_longest: bool,
}

/// Checks that every letter lies in `[1, rank]`, then whether the word is
/// reduced (length equals the inversion count of its product) and whether
/// the product is `w₀`.
pub fn is_reduced(letters: &[u8], rank: usize) -> Result<Reducedness> {
    for (position, &l) in letters.iter().enumerate() {
        if l == 0 || l as usize > rank {
            return Err(Error::LetterOutOfRange { letter: l as usize, position: position + 1, rank });
        }
    }
    let perm = permutation_of(letters, rank);
    let reduced = inversions(&perm) == letters.len();
    let is_longest = perm.iter().enumerate().all(|(p, &v)| v as usize == rank + 1 - p);
    Ok(Reducedness { reduced, is_longest })
}

/// One-line notation of the product of `letters` (values `1..=rank+1`).
pub fn permutation_of(letters: &[u8], rank: usize) -> Vec<u8> {
    let mut perm: Vec<u8> = (1..=rank as u8 + 1).collect();
    for &l in letters {
        perm.swap(l as usize - 1, l as usize);
    }
    perm
}

fn inversions(perm: &[u8]) -> usize {
    let mut count = 0;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                count += 1;
            }
        }
    }
    count
}

/// All reduced words for `w₀`, sorted lexicographically.
pub fn enumerate_reduced_words(rank: usize) -> Result<Vec<ReducedWord>> {
    check_enumeration_rank(rank)?;
    let k = longest_length(rank);
    let mut out = Vec::new();
    let mut perm: Vec<u8> = (1..=rank as u8 + 1).collect();
    let mut prefix = Vec::with_capacity(k);
    extend_reduced(rank, k, &mut perm, &mut prefix, &mut out);
    Ok(out)
}

fn extend_reduced(rank: usize, k: usize, perm: &mut Vec<u8>, prefix: &mut Vec<u8>, out: &mut Vec<ReducedWord>) {
    if prefix.len() == k {
        out.push(ReducedWord { rank, letters: prefix.clone() });
        return;
    }
    for g in 1..=rank {
        // Right multiplication by s_g lengthens iff w(g) < w(g+1).
        if perm[g - 1] < perm[g] {
            perm.swap(g - 1, g);
            prefix.push(g as u8);
            extend_reduced(rank, k, perm, prefix, out);
            prefix.pop();
            perm.swap(g - 1, g);
        }
    }
}

fn check_enumeration_rank(rank: usize) -> Result<()> {
    if rank == 0 {
        return Err(Error::RankTooSmall { rank, min: 1 });
    }
    if rank > MAX_ENUMERATION_RANK {
        return Err(Error::RankTooLarge { rank, max: MAX_ENUMERATION_RANK });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Commutation,
    Braid,
}

impl MoveKind {
    fn name(self) -> &'static str {
        match self {
            MoveKind::Commutation => "commutation",
            MoveKind::Braid => "braid",
        }
    }

    /// Number of letters the move rewrites.
    pub fn width(self) -> usize {
        match self {
            MoveKind::Commutation => 2,
            MoveKind::Braid => 3,
        }
    }
}

/// An elementary rewrite at a 0-based `position` of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub position: usize,
}

impl Move {
    pub fn commutation(position: usize) -> Self {
        Self { kind: MoveKind::Commutation, position }
    }

    pub fn braid(position: usize) -> Self {
        Self { kind: MoveKind::Braid, position }
    }

    /// Whether the move may be applied to `letters`.
    pub fn is_legal(&self, letters: &[u8]) -> bool {
        let t = self.position;
        match self.kind {
            MoveKind::Commutation => {
                t + 1 < letters.len() && letters[t].abs_diff(letters[t + 1]) >= 2
            }
            MoveKind::Braid => {
                t + 2 < letters.len()
                    && letters[t] == letters[t + 2]
                    && letters[t].abs_diff(letters[t + 1]) == 1
            }
        }
    }

    fn apply_in_place(&self, letters: &mut [u8]) {
        let t = self.position;
        match self.kind {
            MoveKind::Commutation => letters.swap(t, t + 1),
            MoveKind::Braid => {
                let (a, b) = (letters[t], letters[t + 1]);
                letters[t] = b;
                letters[t + 1] = a;
                letters[t + 2] = b;
            }
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind.name(), self.position + 1)
    }
}

/// Applies a commutation or braid move; the result again represents `w₀`.
pub fn apply_move(word: &ReducedWord, mv: Move) -> Result<ReducedWord> {
    if !mv.is_legal(&word.letters) {
        return Err(Error::IllegalMove { kind: mv.kind.name(), position: mv.position + 1, word: word.to_string() });
    }
    let mut letters = word.letters.clone();
    mv.apply_in_place(&mut letters);
    Ok(ReducedWord { rank: word.rank, letters })
}

/// Every move that is legal on `letters`, in increasing position order.
pub fn legal_moves(letters: &[u8]) -> Vec<Move> {
    let mut out = Vec::new();
    for t in 0..letters.len() {
        for mv in [Move::commutation(t), Move::braid(t)] {
            if mv.is_legal(letters) {
                out.push(mv);
            }
        }
    }
    out
}

/// A sequence of moves turning `src` into `dst`.
///
/// Works by surfacing the first letter of `dst` to the front of `src` and
/// recursing on suffixes; a reduced word that starts with the alternating
/// product of both leading letters bridges the two via a single move. No
/// enumeration of reduced words is needed, so any rank is accepted.
pub fn find_move_path(src: &ReducedWord, dst: &ReducedWord) -> Result<Vec<Move>> {
    if src.rank != dst.rank {
        return Err(Error::RankMismatch { left: src.rank, right: dst.rank });
    }
    let mut moves = Vec::new();
    let reached = transform(&src.letters, &dst.letters, 0, src.rank, &mut moves);
    debug_assert_eq!(reached, dst.letters);
    Ok(moves)
}

/// Rewrites `s` into `t` (reduced words for the same element), pushing moves
/// offset by `offset`. Returns `t`.
fn transform(s: &[u8], t: &[u8], offset: usize, rank: usize, moves: &mut Vec<Move>) -> Vec<u8> {
    if s.is_empty() {
        return Vec::new();
    }
    let lead = if s[0] == t[0] { s.to_vec() } else { surface(s, t[0], offset, rank, moves) };
    let mut out = vec![lead[0]];
    out.extend(transform(&lead[1..], &t[1..], offset + 1, rank, moves));
    out
}

/// Rewrites `s` into a reduced word for the same element starting with `b`,
/// which must be a left descent. Returns the new word.
fn surface(s: &[u8], b: u8, offset: usize, rank: usize, moves: &mut Vec<Move>) -> Vec<u8> {
    let a = s[0];
    let kind = if a.abs_diff(b) == 1 { MoveKind::Braid } else { MoveKind::Commutation };
    let alternating: Vec<u8> = (0..kind.width()).map(|i| if i % 2 == 0 { a } else { b }).collect();

    // w' = u⁻¹ w: left multiplication by s_g swaps the values g and g+1.
    let mut perm = permutation_of(s, rank);
    for &g in &alternating {
        for v in perm.iter_mut() {
            if *v == g {
                *v = g + 1;
            } else if *v == g + 1 {
                *v = g;
            }
        }
    }
    let mut bridge = alternating;
    bridge.extend(reduced_word_of(&perm));

    let mut current = vec![a];
    current.extend(transform(&s[1..], &bridge[1..], offset + 1, rank, moves));
    Move { kind, position: 0 }.apply_in_place(&mut current);
    moves.push(Move { kind, position: offset });
    current
}

/// Some reduced word for the permutation in one-line notation.
pub fn reduced_word_of(perm: &[u8]) -> Vec<u8> {
    let mut p = perm.to_vec();
    let mut rev = Vec::new();
    while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
        p.swap(i, i + 1);
        rev.push(i as u8 + 1);
    }
    rev.reverse();
    rev
}

/// A move path from `src` to `dst` that detours through the reversal of
/// `src` (also a reduced word for `w₀`). When the reversal is an endpoint it
/// goes `src → dst → src → dst` instead. Either way it differs from
/// [`find_move_path`] whenever `src ≠ dst`.
pub fn detour_move_path(src: &ReducedWord, dst: &ReducedWord) -> Result<Vec<Move>> {
    if src.rank != dst.rank {
        return Err(Error::RankMismatch { left: src.rank, right: dst.rank });
    }
    let mut reversed = src.letters.clone();
    reversed.reverse();
    let mid = ReducedWord::new(src.rank, reversed)?;
    let legs: Vec<(&ReducedWord, &ReducedWord)> = if mid != *src && mid != *dst {
        vec![(src, &mid), (&mid, dst)]
    } else {
        vec![(src, dst), (dst, src), (src, dst)]
    };
    let mut path = Vec::new();
    for (a, b) in legs {
        path.extend(find_move_path(a, b)?);
    }
    Ok(path)
}

/// A shortest move path found by breadth-first search over all reduced
/// words, trying moves from the right end first. Used as an independent
/// second route when auditing path independence.
pub fn shortest_move_path(src: &ReducedWord, dst: &ReducedWord) -> Result<Vec<Move>> {
    if src.rank != dst.rank {
        return Err(Error::RankMismatch { left: src.rank, right: dst.rank });
    }
    check_enumeration_rank(src.rank)?;
    let mut parent: HashMap<Vec<u8>, Option<(Vec<u8>, Move)>> = HashMap::new();
    parent.insert(src.letters.clone(), None);
    let mut queue = VecDeque::from([src.letters.clone()]);
    while let Some(cur) = queue.pop_front() {
        if cur == dst.letters {
            break;
        }
        for mv in legal_moves(&cur).into_iter().rev() {
            let mut next = cur.clone();
            mv.apply_in_place(&mut next);
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((cur.clone(), mv)));
                queue.push_back(next);
            }
        }
    }
    let mut path = Vec::new();
    let mut at = dst.letters.clone();
    while let Some(Some((prev, mv))) = parent.get(&at) {
        path.push(*mv);
        at = prev.clone();
    }
    path.reverse();
    Ok(path)
}

/// The positive root `α_p + … + α_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PositiveRoot {
    pub p: usize,
    pub q: usize,
}

impl PositiveRoot {
    pub fn new(p: usize, q: usize) -> Self {
        assert!(1 <= p && p <= q, "invalid root interval [{p}, {q}]");
        Self { p, q }
    }

    pub fn simple(i: usize) -> Self {
        Self::new(i, i)
    }

    pub fn height(&self) -> usize {
        self.q - self.p + 1
    }

    /// Orthogonality of `e_p − e_{q+1}` and `e_{p′} − e_{q′+1}`: the four
    /// indices are distinct.
    pub fn is_orthogonal_to(&self, other: &PositiveRoot) -> bool {
        let (a, b) = ([self.p, self.q + 1], [other.p, other.q + 1]);
        a.iter().all(|x| !b.contains(x))
    }

    /// All `n(n+1)/2` positive roots ordered by `(p, q)`.
    pub fn all(rank: usize) -> Vec<PositiveRoot> {
        (1..=rank).flat_map(|p| (p..=rank).map(move |q| PositiveRoot { p, q })).collect()
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = (self.p..=self.q).map(|i| format!("a{i}")).collect();
        f.write_str(&terms.join("+"))
    }
}

/// The convex order `α¹, …, α^k` on positive roots read off a reduced word:
/// `α^t = s_{i₁} ⋯ s_{i_{t−1}}(α_{i_t})`.
pub fn positive_root_order(word: &ReducedWord) -> Vec<PositiveRoot> {
    let mut perm: Vec<usize> = (1..=word.rank + 1).collect();
    word.letters
        .iter()
        .map(|&l| {
            let g = l as usize;
            // w(α_g) = e_{w(g)} − e_{w(g+1)} with w(g) < w(g+1) for reduced words.
            let root = PositiveRoot::new(perm[g - 1], perm[g] - 1);
            perm.swap(g - 1, g);
            root
        })
        .collect()
}

/// The words `j = 135⋯246⋯135⋯` and `j′ = 246⋯135⋯246⋯`, each truncated to
/// `n(n+1)/2` letters.
pub fn standard_words(rank: usize) -> Result<(ReducedWord, ReducedWord)> {
    if rank == 0 {
        return Err(Error::RankTooSmall { rank, min: 1 });
    }
    let odds: Vec<u8> = (1..=rank as u8).filter(|g| g % 2 == 1).collect();
    let evens: Vec<u8> = (1..=rank as u8).filter(|g| g % 2 == 0).collect();
    let k = longest_length(rank);
    let build = |first: &[u8], second: &[u8]| -> Vec<u8> {
        first.iter().chain(second).copied().cycle().take(k).collect()
    };
    let j = ReducedWord::new(rank, build(&odds, &evens))?;
    let j_prime = ReducedWord::new(rank, build(&evens, &odds))?;
    Ok((j, j_prime))
}

/// A commutation class, keyed by its lexicographically least member.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CommutationClass {
    pub rank: usize,
    pub representative: ReducedWord,
    pub size: usize,
}

/// Lexicographically least word reachable from `word` by commutation moves.
pub fn class_representative(word: &ReducedWord) -> ReducedWord {
    let members = commutation_orbit(&word.letters);
    let least = members.into_iter().next().expect("orbit contains the word itself");
    ReducedWord { rank: word.rank, letters: least }
}

/// All words reachable from `letters` by commutation moves, sorted.
pub fn commutation_orbit(letters: &[u8]) -> BTreeSet<Vec<u8>> {
    let mut seen = BTreeSet::from([letters.to_vec()]);
    let mut stack = vec![letters.to_vec()];
    while let Some(cur) = stack.pop() {
        for t in 0..cur.len().saturating_sub(1) {
            let mv = Move::commutation(t);
            if mv.is_legal(&cur) {
                let mut next = cur.clone();
                mv.apply_in_place(&mut next);
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    seen
}

struct WordIndex {
    words: Vec<ReducedWord>,
    index: HashMap<Vec<u8>, usize>,
    /// Class id per word; class ids are ordered by representative.
    class_of: Vec<usize>,
    classes: Vec<CommutationClass>,
}

fn index_words(rank: usize) -> Result<WordIndex> {
    let words = enumerate_reduced_words(rank)?;
    let index: HashMap<Vec<u8>, usize> =
        words.iter().enumerate().map(|(i, w)| (w.letters.clone(), i)).collect();
    let mut uf = UnionFind::new(words.len());
    for (i, w) in words.iter().enumerate() {
        for t in 0..w.len().saturating_sub(1) {
            let mv = Move::commutation(t);
            if mv.is_legal(&w.letters) {
                let mut next = w.letters.clone();
                mv.apply_in_place(&mut next);
                uf.union(i, index[&next]);
            }
        }
    }
    // Words are sorted, so the first member met for each root is the least.
    let mut class_by_root: HashMap<usize, usize> = HashMap::new();
    let mut classes = Vec::new();
    let mut class_of = vec![0; words.len()];
    for i in 0..words.len() {
        let root = uf.find(i);
        let id = *class_by_root.entry(root).or_insert_with(|| {
            classes.push(CommutationClass { rank, representative: words[i].clone(), size: 0 });
            classes.len() - 1
        });
        classes[id].size += 1;
        class_of[i] = id;
    }
    Ok(WordIndex { words, index, class_of, classes })
}

/// Partition of all reduced words into commutation classes, ordered by
/// representative.
pub fn commutation_classes(rank: usize) -> Result<Vec<CommutationClass>> {
    Ok(index_words(rank)?.classes)
}

/// Graph on commutation classes: two classes are adjacent when some member
/// of one becomes a member of the other after a single braid move.
#[derive(Clone, Debug, Serialize)]
pub struct ClassGraph {
    pub classes: Vec<CommutationClass>,
    /// Sorted pairs of class indices, `a < b`.
    pub edges: Vec<(usize, usize)>,
}

impl ClassGraph {
    pub fn is_connected(&self) -> bool {
        connected(self.classes.len(), &self.edges)
    }
}

pub fn class_graph(rank: usize) -> Result<ClassGraph> {
    let idx = index_words(rank)?;
    let mut edges = BTreeSet::new();
    for (i, w) in idx.words.iter().enumerate() {
        for t in 0..w.len().saturating_sub(2) {
            let mv = Move::braid(t);
            if mv.is_legal(&w.letters) {
                let mut next = w.letters.clone();
                mv.apply_in_place(&mut next);
                let (a, b) = (idx.class_of[i], idx.class_of[idx.index[&next]]);
                if a != b {
                    edges.insert((a.min(b), a.max(b)));
                }
            }
        }
    }
    Ok(ClassGraph { classes: idx.classes, edges: edges.into_iter().collect() })
}

pub(crate) fn connected(vertices: usize, edges: &[(usize, usize)]) -> bool {
    if vertices == 0 {
        return true;
    }
    let mut uf = UnionFind::new(vertices);
    for &(a, b) in edges {
        uf.union(a, b);
    }
    let root = uf.find(0);
    (1..vertices).all(|v| uf.find(v) == root)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(rank: usize, s: &str) -> ReducedWord {
        ReducedWord::parse(s, Some(rank)).unwrap()
    }

    #[test]
    fn reducedness_examples() {
        assert_eq!(is_reduced(&[1, 2, 1], 2).unwrap(), Reducedness { reduced: true, is_longest: true });
        assert!(!is_reduced(&[1, 1], 2).unwrap().reduced);
        let check = is_reduced(&[2, 3, 4, 3, 1, 2, 1, 3, 2, 4], 4).unwrap();
        assert!(check.reduced && check.is_longest);
        // Reduced but not the longest element.
        let short = is_reduced(&[1, 2], 2).unwrap();
        assert!(short.reduced && !short.is_longest);
    }

    #[test]
    fn letter_out_of_range_is_reported() {
        assert_eq!(
            is_reduced(&[1, 3], 2),
            Err(Error::LetterOutOfRange { letter: 3, position: 2, rank: 2 })
        );
        assert!(is_reduced(&[0], 2).is_err());
    }

    #[test]
    fn parse_infers_rank_and_formats_back() {
        let w = ReducedWord::parse("1324132413", None).unwrap();
        assert_eq!(w.rank(), 4);
        assert_eq!(w.to_string(), "1324132413");
        assert_eq!(ReducedWord::parse("1,2,1", None).unwrap().to_string(), "121");
        assert!(matches!(ReducedWord::parse("12a", None), Err(Error::MalformedWord { .. })));
        assert!(matches!(ReducedWord::parse("1212", None), Err(Error::MalformedWord { .. })));
        assert!(matches!(ReducedWord::parse("112", None), Err(Error::NotReduced { .. })));
    }

    #[test]
    fn long_ranks_use_commas() {
        let (j, _) = standard_words(10).unwrap();
        assert!(j.to_string().starts_with("1,3,5,7,9,2,4"));
        assert_eq!(ReducedWord::parse(&j.to_string(), None).unwrap(), j);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_reduced_words(1).unwrap().len(), 1);
        assert_eq!(enumerate_reduced_words(2).unwrap().len(), 2);
        assert_eq!(enumerate_reduced_words(3).unwrap().len(), 16);
        assert_eq!(enumerate_reduced_words(4).unwrap().len(), 768);
        assert!(matches!(enumerate_reduced_words(6), Err(Error::RankTooLarge { .. })));
    }

    /// Hook-length count of standard tableaux of staircase shape
    /// (n, n−1, …, 1): the number of reduced words for w₀.
    fn staircase_tableaux(rank: usize) -> u128 {
        let k = longest_length(rank) as u128;
        let mut hooks: u128 = 1;
        for row in 0..rank {
            let len = rank - row;
            for col in 0..len {
                let arm = len - col - 1;
                let leg = (row + 1..rank).filter(|&r| rank - r > col).count();
                hooks *= (arm + leg + 1) as u128;
            }
        }
        (1..=k).product::<u128>() / hooks
    }

    #[test]
    fn enumeration_matches_hook_length_formula() {
        for rank in 1..=5 {
            assert_eq!(enumerate_reduced_words(rank).unwrap().len() as u128, staircase_tableaux(rank));
        }
    }

    #[test]
    fn class_counts() {
        assert_eq!(commutation_classes(2).unwrap().len(), 2);
        assert_eq!(commutation_classes(3).unwrap().len(), 8);
        assert_eq!(commutation_classes(4).unwrap().len(), 62);
        let total: usize = commutation_classes(3).unwrap().iter().map(|c| c.size).sum();
        assert_eq!(total, 16);
    }

    #[test]
    fn class_representative_is_least_member() {
        let w = word(3, "312312");
        assert_eq!(class_representative(&w).to_string(), "132132");
        let a = word(3, "132132");
        let b = word(3, "312312");
        assert_eq!(class_representative(&a), class_representative(&b));
    }

    #[test]
    fn moves_examples() {
        let w = word(3, "132132");
        let swapped = apply_move(&w, Move::commutation(0)).unwrap();
        assert_eq!(swapped.to_string(), "312132");
        assert_eq!(apply_move(&swapped, Move::commutation(0)).unwrap(), w);

        let b = apply_move(&word(2, "121"), Move::braid(0)).unwrap();
        assert_eq!(b.to_string(), "212");
        assert_eq!(apply_move(&b, Move::braid(0)).unwrap().to_string(), "121");

        assert!(matches!(apply_move(&w, Move::commutation(1)), Err(Error::IllegalMove { .. })));
        assert!(matches!(apply_move(&w, Move::braid(0)), Err(Error::IllegalMove { .. })));
    }

    fn replay(src: &ReducedWord, path: &[Move]) -> ReducedWord {
        path.iter().fold(src.clone(), |w, &mv| apply_move(&w, mv).unwrap())
    }

    #[test]
    fn move_paths_replay() {
        let w = word(2, "121");
        assert!(find_move_path(&w, &w).unwrap().is_empty());
        let path = find_move_path(&w, &word(2, "212")).unwrap();
        assert_eq!(path, vec![Move::braid(0)]);

        let (j, jp) = standard_words(4).unwrap();
        let path = find_move_path(&j, &jp).unwrap();
        assert_eq!(replay(&j, &path), jp);
        let bfs = shortest_move_path(&j, &jp).unwrap();
        assert_eq!(replay(&j, &bfs), jp);
        assert!(bfs.len() <= path.len());
    }

    #[test]
    fn move_paths_between_all_rank3_pairs() {
        let words = enumerate_reduced_words(3).unwrap();
        for a in &words {
            for b in &words {
                assert_eq!(&replay(a, &find_move_path(a, b).unwrap()), b);
            }
        }
    }

    #[test]
    fn move_path_rank_mismatch() {
        assert!(matches!(
            find_move_path(&word(2, "121"), &word(1, "1")),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn root_order_examples() {
        assert_eq!(positive_root_order(&word(1, "1")), vec![PositiveRoot::simple(1)]);
        assert_eq!(
            positive_root_order(&word(2, "121")),
            vec![PositiveRoot::new(1, 1), PositiveRoot::new(1, 2), PositiveRoot::new(2, 2)]
        );
        for w in enumerate_reduced_words(4).unwrap() {
            let mut order = positive_root_order(&w);
            order.sort();
            assert_eq!(order, PositiveRoot::all(4));
        }
    }

    #[test]
    fn standard_and_opposite_orders() {
        let (j, jp) = standard_words(2).unwrap();
        assert_eq!((j.to_string().as_str(), jp.to_string().as_str()), ("121", "212"));
        let (j, jp) = standard_words(4).unwrap();
        assert_eq!(j.to_string(), "1324132413");
        assert_eq!(jp.to_string(), "2413241324");
        let (j1, jp1) = standard_words(1).unwrap();
        assert_eq!((j1.to_string(), jp1.to_string()), ("1".to_string(), "1".to_string()));
        // j and j′ induce opposite orders on the positive roots.
        for rank in 2..=6 {
            let (j, jp) = standard_words(rank).unwrap();
            let mut rev = positive_root_order(&jp);
            rev.reverse();
            assert_eq!(positive_root_order(&j), rev, "rank {rank}");
        }
    }

    #[test]
    fn commuting_words_swap_orthogonal_roots() {
        for w in enumerate_reduced_words(4).unwrap() {
            let base = positive_root_order(&w);
            for t in 0..w.len() - 1 {
                let mv = Move::commutation(t);
                if mv.is_legal(w.letters()) {
                    let other = positive_root_order(&apply_move(&w, mv).unwrap());
                    assert!(base[t].is_orthogonal_to(&base[t + 1]));
                    assert_eq!((other[t], other[t + 1]), (base[t + 1], base[t]));
                }
            }
        }
    }

    #[test]
    fn class_graph_shapes() {
        let g2 = class_graph(2).unwrap();
        assert_eq!((g2.classes.len(), g2.edges.len()), (2, 1));
        let g3 = class_graph(3).unwrap();
        assert_eq!(g3.classes.len(), 8);
        assert!(g3.is_connected());
        let g4 = class_graph(4).unwrap();
        assert_eq!(g4.classes.len(), 62);
        assert!(g4.is_connected());
    }
}
