//! Words in graph products of cyclic groups: geodesic reduction, canonical
//! forms, the normal form relative to one vertex, and excursions.
//!
//! A reduced element is kept as a sequence of syllables (maximal powers of one
//! vertex generator). Two syllables are dependent when their vertices are
//! equal or not adjacent; the canonical form is the lexicographic normal form
//! of that partial order with respect to vertex order.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::graph::{Clique, DefiningGraph, VertexGroupSpec};

/// Largest reduced length accepted by the brute-force enumerations.
pub const BRUTE_FORCE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("malformed letter {0:?}")]
    Malformed(String),
    #[error("vertex {0:?} has no generator (explicit vertex group)")]
    NotCyclic(String),
    #[error("reduced length {len} exceeds the enumeration limit {limit}")]
    TooLong { len: usize, limit: usize },
    #[error("clique must be nonempty")]
    EmptyClique,
}

/// A generator `v` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub vertex: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(vertex: usize, inverse: bool) -> Self {
        Self { vertex, inverse }
    }

    pub fn inv(self) -> Self {
        Self {
            vertex: self.vertex,
            inverse: !self.inverse,
        }
    }
}

/// A word over the generators, not necessarily reduced.
#[derive(Clone, PartialEq, Eq)]
pub struct Word<'g> {
    graph: &'g DefiningGraph,
    letters: Vec<Letter>,
}

impl<'g> Word<'g> {
    pub fn new(graph: &'g DefiningGraph, letters: Vec<Letter>) -> Result<Self, WordError> {
        for l in &letters {
            if l.vertex >= graph.len() {
                return Err(WordError::UnknownGenerator(format!("#{}", l.vertex)));
            }
            if !graph.group(l.vertex).is_cyclic() {
                return Err(WordError::NotCyclic(graph.name(l.vertex).to_string()));
            }
        }
        Ok(Self { graph, letters })
    }

    pub fn identity(graph: &'g DefiningGraph) -> Self {
        Self {
            graph,
            letters: Vec::new(),
        }
    }

    /// Whitespace-separated letters `a`, `a^-1`, `a^3`; powers are expanded.
    pub fn parse(graph: &'g DefiningGraph, text: &str) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (name, power) = match token.split_once('^') {
                Some((name, p)) => {
                    let p: i64 = p.parse().map_err(|_| WordError::Malformed(token.to_string()))?;
                    (name, p)
                }
                None => (token, 1),
            };
            let v = graph
                .vertex(name)
                .map_err(|_| WordError::UnknownGenerator(name.to_string()))?;
            let letter = Letter::new(v, power < 0);
            letters.extend(std::iter::repeat_n(letter, power.unsigned_abs() as usize));
        }
        Self::new(graph, letters)
    }

    pub fn graph(&self) -> &'g DefiningGraph {
        self.graph
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word<'g>) -> Word<'g> {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            graph: self.graph,
            letters,
        }
    }

    pub fn inverse(&self) -> Word<'g> {
        Word {
            graph: self.graph,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }
}

impl fmt::Display for Word<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.graph, &self.letters)
    }
}

impl fmt::Debug for Word<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, g: &DefiningGraph, letters: &[Letter]) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str("1");
    }
    let mut i = 0;
    let mut first = true;
    while i < letters.len() {
        let mut j = i;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        let run = (j - i) as i64;
        let power = if letters[i].inverse { -run } else { run };
        f.write_str(g.name(letters[i].vertex))?;
        if power != 1 {
            write!(f, "^{power}")?;
        }
        i = j;
    }
    Ok(())
}

/// A nontrivial power of one vertex generator. For `Z/m` the exponent is the
/// signed spelling: `k > 0` for residue `k` with `2k <= m`, else `-(m - k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub vertex: usize,
    pub exponent: i64,
}

impl Syllable {
    /// Word length of the syllable.
    pub fn len(&self) -> usize {
        self.exponent.unsigned_abs() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.exponent == 0
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        std::iter::repeat_n(Letter::new(self.vertex, self.exponent < 0), self.len())
    }
}

/// Geodesic spelling of `exponent` in the vertex group, `0` for the identity.
fn normalize_exponent(spec: &VertexGroupSpec, exponent: i64) -> i64 {
    match spec {
        VertexGroupSpec::FiniteCyclic(m) => {
            let m = *m as i64;
            let k = exponent.rem_euclid(m);
            if 2 * k <= m {
                k
            } else {
                k - m
            }
        }
        _ => exponent,
    }
}

/// The canonical geodesic representative of an element.
#[derive(Clone, PartialEq, Eq)]
pub struct ReducedWord<'g> {
    graph: &'g DefiningGraph,
    syllables: Vec<Syllable>,
}

impl<'g> ReducedWord<'g> {
    pub fn graph(&self) -> &'g DefiningGraph {
        self.graph
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn letters(&self) -> Vec<Letter> {
        self.syllables.iter().flat_map(|s| s.letters()).collect()
    }

    /// Word length of the element.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(Syllable::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Always `true`: reduction returns the lexicographic normal form.
    pub fn is_canonical(&self) -> bool {
        true
    }

    pub fn to_word(&self) -> Word<'g> {
        Word {
            graph: self.graph,
            letters: self.letters(),
        }
    }
}

impl fmt::Display for ReducedWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.graph, &self.letters())
    }
}

impl fmt::Debug for ReducedWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedWord({self})")
    }
}

fn dependent(g: &DefiningGraph, u: usize, v: usize) -> bool {
    u == v || !g.adjacent(u, v)
}

/// Geodesic reduction followed by canonical reordering.
pub fn reduce_word<'g>(w: &Word<'g>) -> ReducedWord<'g> {
    let g = w.graph;
    let mut syllables: Vec<Syllable> = Vec::with_capacity(w.len());
    for l in &w.letters {
        let e = if l.inverse { -1 } else { 1 };
        // walk left over syllables commuting with this letter
        let mut target = None;
        for j in (0..syllables.len()).rev() {
            let u = syllables[j].vertex;
            if u == l.vertex {
                target = Some(j);
                break;
            }
            if !g.adjacent(u, l.vertex) {
                break;
            }
        }
        match target {
            Some(j) => {
                let exponent = normalize_exponent(g.group(l.vertex), syllables[j].exponent + e);
                if exponent == 0 {
                    syllables.remove(j);
                } else {
                    syllables[j].exponent = exponent;
                }
            }
            None => syllables.push(Syllable {
                vertex: l.vertex,
                exponent: normalize_exponent(g.group(l.vertex), e),
            }),
        }
    }
    ReducedWord {
        graph: g,
        syllables: canonical_order(g, &syllables),
    }
}

/// `pred[j]` has bit `i` set iff syllable `i` must come before syllable `j`.
fn precedence(g: &DefiningGraph, s: &[Syllable]) -> Vec<u128> {
    let mut pred = vec![0u128; s.len()];
    for j in 0..s.len() {
        for i in 0..j {
            if dependent(g, s[i].vertex, s[j].vertex) {
                pred[j] |= pred[i] | 1 << i;
            }
        }
    }
    pred
}

/// Lexicographic normal form: repeatedly emit the smallest-vertex syllable
/// with no pending predecessor.
fn canonical_order(g: &DefiningGraph, s: &[Syllable]) -> Vec<Syllable> {
    if s.len() > 128 {
        return canonical_order_long(g, s);
    }
    let pred = precedence(g, s);
    let mut done = 0u128;
    let mut out = Vec::with_capacity(s.len());
    while out.len() < s.len() {
        let next = (0..s.len())
            .filter(|&i| done >> i & 1 == 0 && pred[i] & !done == 0)
            .min_by_key(|&i| s[i].vertex)
            .expect("a minimal syllable exists");
        done |= 1 << next;
        out.push(s[next]);
    }
    out
}

fn canonical_order_long(g: &DefiningGraph, s: &[Syllable]) -> Vec<Syllable> {
    let mut remaining: Vec<Syllable> = s.to_vec();
    let mut out = Vec::with_capacity(s.len());
    while !remaining.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..remaining.len() {
            let free = remaining[..i]
                .iter()
                .all(|p| !dependent(g, p.vertex, remaining[i].vertex));
            if free && best.is_none_or(|b| remaining[i].vertex < remaining[b].vertex) {
                best = Some(i);
            }
        }
        out.push(remaining.remove(best.expect("a minimal syllable exists")));
    }
    out
}

/// `g = b a_1 t_1 a_2 t_2 ... a_k t_k` relative to the vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyllableDecomposition {
    pub vertex: usize,
    /// Syllables over the link of `v`.
    pub prefix: Vec<Syllable>,
    /// `(a_i, t_i)`; `a_i` is the signed power of `v`, only `a_1` may be `0`.
    pub blocks: Vec<(i64, Vec<Syllable>)>,
}

impl SyllableDecomposition {
    /// Largest `|a_i|`.
    pub fn excursion(&self) -> usize {
        self.blocks.iter().map(|b| b.0.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Total word length of all pieces.
    pub fn len(&self) -> usize {
        let body: usize = self
            .blocks
            .iter()
            .map(|(a, t)| a.unsigned_abs() as usize + t.iter().map(Syllable::len).sum::<usize>())
            .sum();
        body + self.prefix.iter().map(Syllable::len).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The pieces concatenated in order, as letters.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = self.prefix.iter().flat_map(|s| s.letters()).collect();
        for (a, t) in &self.blocks {
            let s = Syllable {
                vertex: self.vertex,
                exponent: *a,
            };
            out.extend(s.letters());
            out.extend(t.iter().flat_map(|s| s.letters()));
        }
        out
    }
}

/// Split off the longest prefix over `link(v)`, then alternately peel the
/// next power of `v` and everything not yet blocked by a later power of `v`.
pub fn normal_form_rel_vertex(w: &ReducedWord<'_>, v: usize) -> SyllableDecomposition {
    let g = w.graph;
    let s = &w.syllables;
    let in_link = |u: usize| u != v && g.adjacent(u, v);
    let n = s.len();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    for j in 0..n {
        for i in 0..j {
            if dependent(g, s[i].vertex, s[j].vertex) {
                preds[j].push(i);
            }
        }
    }
    // prefix: link syllables all of whose predecessors are link syllables
    let mut in_prefix = vec![false; n];
    for j in 0..n {
        in_prefix[j] = in_link(s[j].vertex) && preds[j].iter().all(|&i| in_prefix[i]);
    }
    let prefix: Vec<Syllable> = (0..n).filter(|&j| in_prefix[j]).map(|j| s[j]).collect();
    let mut taken = in_prefix.clone();

    let v_positions: Vec<usize> = (0..n).filter(|&j| s[j].vertex == v).collect();
    let mut blocks: Vec<(i64, Vec<Syllable>)> = Vec::new();
    let mut next_v = 0;
    loop {
        let mut a = 0;
        if let Some(&p) = v_positions.get(next_v) {
            if preds[p].iter().all(|&i| taken[i]) {
                a = s[p].exponent;
                taken[p] = true;
                next_v += 1;
            }
        }
        // t_i: remaining syllables with no remaining power of v below them
        let mut blocked = vec![false; n];
        let mut t = Vec::new();
        for j in 0..n {
            if taken[j] {
                continue;
            }
            blocked[j] = s[j].vertex == v || preds[j].iter().any(|&i| !taken[i] && blocked[i]);
            if !blocked[j] {
                t.push(j);
            }
        }
        for &j in &t {
            taken[j] = true;
        }
        blocks.push((a, t.into_iter().map(|j| s[j]).collect()));
        if taken.iter().all(|&x| x) {
            break;
        }
    }
    if blocks.len() == 1 && blocks[0].0 == 0 && blocks[0].1.is_empty() {
        blocks.clear();
    }
    SyllableDecomposition {
        vertex: v,
        prefix,
        blocks,
    }
}

/// Largest power of `v` in the normal form.
pub fn vertex_excursion(w: &Word<'_>, v: usize) -> usize {
    normal_form_rel_vertex(&reduce_word(w), v).excursion()
}

/// Excursion read off a reduced word: the longest syllable of `v`.
pub fn reduced_vertex_excursion(w: &ReducedWord<'_>, v: usize) -> usize {
    w.syllables
        .iter()
        .filter(|s| s.vertex == v)
        .map(Syllable::len)
        .max()
        .unwrap_or(0)
}

/// Every geodesic spelling reachable from the canonical one by swapping
/// adjacent commuting letters.
pub fn commutation_class(w: &ReducedWord<'_>) -> Result<Vec<Vec<Letter>>, WordError> {
    let start = w.letters();
    if start.len() > BRUTE_FORCE_LIMIT {
        return Err(WordError::TooLong {
            len: start.len(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let g = w.graph;
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    let mut out = Vec::new();
    while let Some(word) = queue.pop_front() {
        for i in 0..word.len().saturating_sub(1) {
            let (x, y) = (word[i], word[i + 1]);
            if x.vertex != y.vertex && g.adjacent(x.vertex, y.vertex) {
                let mut next = word.clone();
                next.swap(i, i + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        out.push(word);
    }
    Ok(out)
}

fn longest_run(letters: &[Letter], keep: impl Fn(&Letter) -> bool) -> usize {
    let mut best = 0;
    let mut run = 0;
    for l in letters {
        if keep(l) {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best
}

/// Longest run of `v`-letters over all geodesic spellings.
pub fn brute_force_vertex_excursion(w: &Word<'_>, v: usize) -> Result<usize, WordError> {
    let class = commutation_class(&reduce_word(w))?;
    Ok(class
        .iter()
        .map(|word| longest_run(word, |l| l.vertex == v))
        .max()
        .unwrap_or(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlatMode {
    Exact,
    Bounds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlatExcursion {
    Exact(usize),
    Bounds { lower: usize, upper: usize },
}

/// Excursion in the coset flats of the abelian subgroup spanned by `clique`.
///
/// Exact mode maximizes the longest block of clique letters over all
/// geodesic spellings. Bounds mode returns `(m, d m)` with `m` the largest
/// vertex excursion over the clique and `d` its size.
pub fn flat_excursion(w: &Word<'_>, clique: &Clique, mode: FlatMode) -> Result<FlatExcursion, WordError> {
    if clique.is_empty() {
        return Err(WordError::EmptyClique);
    }
    let reduced = reduce_word(w);
    match mode {
        FlatMode::Exact => {
            let class = commutation_class(&reduced)?;
            let best = class
                .iter()
                .map(|word| longest_run(word, |l| clique.contains(l.vertex)))
                .max()
                .unwrap_or(0);
            Ok(FlatExcursion::Exact(best))
        }
        FlatMode::Bounds => {
            let m = clique
                .vertices()
                .iter()
                .map(|&v| reduced_vertex_excursion(&reduced, v))
                .max()
                .unwrap_or(0);
            Ok(FlatExcursion::Bounds {
                lower: m,
                upper: clique.size() * m,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zxz2() -> DefiningGraph {
        DefiningGraph::raag(["a", "b", "c"], &[(1, 2)]).unwrap()
    }

    fn reduce<'g>(g: &'g DefiningGraph, s: &str) -> ReducedWord<'g> {
        reduce_word(&Word::parse(g, s).unwrap())
    }

    #[test]
    fn parse_and_display() {
        let g = zxz2();
        let w = Word::parse(&g, "a^3 b^-2 c").unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.to_string(), "a^3 b^-2 c");
        assert!(Word::parse(&g, "d").is_err());
        assert!(Word::parse(&g, "a^x").is_err());
        assert!(Word::parse(&g, "").unwrap().is_empty());
        assert_eq!(Word::parse(&g, "a^0").unwrap().len(), 0);
    }

    #[test]
    fn reduction_examples() {
        let g = zxz2();
        assert!(reduce(&g, "a a^-1").is_empty());
        assert_eq!(reduce(&g, "b c b^-1").to_string(), "c");
        let r = reduce(&g, "a b a^-1");
        assert_eq!(r.len(), 3);
        assert_eq!(r.to_string(), "a b a^-1");
        assert_eq!(reduce(&g, "b c b c").to_string(), "b^2 c^2");
        assert_eq!(reduce(&g, "c b").to_string(), "b c");
        assert_eq!(reduce(&g, "b a a b a").to_string(), "b a^2 b a");
    }

    #[test]
    fn reduction_is_idempotent() {
        let g = zxz2();
        let r = reduce(&g, "c a b^-1 c b a^-1 c^-1");
        assert_eq!(reduce_word(&r.to_word()), r);
    }

    #[test]
    fn finite_cyclic_reduction() {
        let g = DefiningGraph::new(
            ["x", "y"],
            &[],
            vec![VertexGroupSpec::FiniteCyclic(2), VertexGroupSpec::FiniteCyclic(5)],
        )
        .unwrap();
        assert!(reduce(&g, "x x").is_empty());
        assert_eq!(reduce(&g, "x^-1").to_string(), "x");
        assert_eq!(reduce(&g, "y^3").to_string(), "y^-2");
        assert_eq!(reduce(&g, "y^-3").to_string(), "y^2");
        assert!(reduce(&g, "y^5").is_empty());
        assert_eq!(reduce(&g, "x y x y^4 x").to_string(), "x y x y^-1 x");
    }

    #[test]
    fn normal_form_examples() {
        let g = zxz2();
        let d = normal_form_rel_vertex(&reduce(&g, "b a b a"), 0);
        assert!(d.prefix.is_empty());
        let powers: Vec<i64> = d.blocks.iter().map(|b| b.0).collect();
        assert_eq!(powers, vec![0, 1, 1]);
        assert_eq!(d.excursion(), 1);

        let d = normal_form_rel_vertex(&reduce(&g, "a c a"), 0);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.blocks[0].0, 1);
        assert_eq!(d.blocks[0].1, vec![Syllable { vertex: 2, exponent: 1 }]);
        assert_eq!(d.blocks[1], (1, vec![]));

        let d = normal_form_rel_vertex(&reduce(&g, "b c b c"), 1);
        assert_eq!(d.prefix, vec![Syllable { vertex: 2, exponent: 2 }]);
        assert_eq!(d.blocks, vec![(2, vec![])]);
        assert_eq!(d.excursion(), 2);

        let id = normal_form_rel_vertex(&reduce(&g, ""), 0);
        assert!(id.prefix.is_empty() && id.blocks.is_empty());
    }

    #[test]
    fn decomposition_concatenates_to_the_element() {
        let g = DefiningGraph::raag(["a", "b", "c", "d", "e"], &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let r = reduce(&g, "b c^2 a d b^-1 e a^2 c d^-1 b");
        for v in 0..5 {
            let d = normal_form_rel_vertex(&r, v);
            assert_eq!(d.len(), r.len());
            let back = reduce_word(&Word::new(&g, d.letters()).unwrap());
            assert_eq!(back, r);
            for (i, (a, _)) in d.blocks.iter().enumerate() {
                assert!(i == 0 || *a != 0);
            }
        }
    }

    #[test]
    fn excursion_examples() {
        let g = zxz2();
        let w = Word::parse(&g, "b^2 c^2").unwrap();
        assert_eq!(vertex_excursion(&w, 1), 2);
        assert_eq!(brute_force_vertex_excursion(&w, 1).unwrap(), 2);
        let aba = Word::parse(&g, "a b a").unwrap();
        assert_eq!(vertex_excursion(&aba, 0), 1);
        assert_eq!(brute_force_vertex_excursion(&aba, 0).unwrap(), 1);
        assert_eq!(vertex_excursion(&Word::identity(&g), 2), 0);
        let cbcb = Word::parse(&g, "c b c b").unwrap();
        assert_eq!(brute_force_vertex_excursion(&cbcb, 2).unwrap(), 2);
        let long = Word::parse(&g, "a^13").unwrap();
        assert!(matches!(brute_force_vertex_excursion(&long, 0), Err(WordError::TooLong { .. })));
    }

    #[test]
    fn commutation_class_sizes() {
        let g = zxz2();
        assert_eq!(commutation_class(&reduce(&g, "b^2 c^2")).unwrap().len(), 6);
        assert_eq!(commutation_class(&reduce(&g, "a b a")).unwrap().len(), 1);
    }

    #[test]
    fn flat_examples() {
        let g = zxz2();
        let bc = Clique::new(&g, vec![1, 2]).unwrap();
        let b = Clique::new(&g, vec![1]).unwrap();
        let w = Word::parse(&g, "b^2 c^2").unwrap();
        assert_eq!(flat_excursion(&w, &bc, FlatMode::Exact).unwrap(), FlatExcursion::Exact(4));
        assert_eq!(
            flat_excursion(&w, &bc, FlatMode::Bounds).unwrap(),
            FlatExcursion::Bounds { lower: 2, upper: 4 }
        );
        let aba = Word::parse(&g, "a b a").unwrap();
        assert_eq!(flat_excursion(&aba, &b, FlatMode::Exact).unwrap(), FlatExcursion::Exact(1));
        let abca = Word::parse(&g, "a b c a").unwrap();
        assert_eq!(flat_excursion(&abca, &bc, FlatMode::Exact).unwrap(), FlatExcursion::Exact(2));
        assert_eq!(
            flat_excursion(&abca, &bc, FlatMode::Bounds).unwrap(),
            FlatExcursion::Bounds { lower: 1, upper: 2 }
        );
        let empty = Clique::new(&g, vec![]).unwrap();
        assert_eq!(flat_excursion(&aba, &empty, FlatMode::Bounds), Err(WordError::EmptyClique));
    }
}
