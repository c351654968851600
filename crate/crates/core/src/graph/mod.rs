//! Triangulated polygons and sphere triangulations glued from two of them.
//!
//! Vertices are `0..n` in cyclic order around the Hamiltonian (outer) cycle. The
//! cycle edges `{i, i+1 mod n}` are implicit; only chords are stored, each
//! normalized so that the smaller endpoint comes first.

mod dual;
mod surgery;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dual::WeakDualTree;
pub use surgery::{
    cut_along_chord, glue, merge_on_edge, short_chord_decomposition, Merged, Piece,
    ShortChordDecomposition,
};

/// An unordered vertex pair stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Chord(pub usize, pub usize);

impl Chord {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Chord(a, b)
        } else {
            Chord(b, a)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    pub fn other(&self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// Number of steps going forward around an `n`-cycle from `from` to `to`.
#[inline]
pub fn cyclic_offset(n: usize, from: usize, to: usize) -> usize {
    (to + n - from) % n
}

/// Plain adjacency lists. Every graph type converts into this for verification
/// and brute-force search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjacency {
    lists: Vec<Vec<usize>>,
}

impl Adjacency {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut lists = vec![Vec::new(); n];
        for (a, b) in edges {
            lists[a].push(b);
            lists[b].push(a);
        }
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        Adjacency { lists }
    }

    pub fn order(&self) -> usize {
        self.lists.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.lists[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.lists[a].binary_search(&b).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.lists.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Copy of this graph with one extra edge.
    pub fn with_edge(&self, a: usize, b: usize) -> Self {
        let mut out = self.clone();
        if a != b && !out.has_edge(a, b) {
            for (u, w) in [(a, b), (b, a)] {
                let pos = out.lists[u].binary_search(&w).unwrap_err();
                out.lists[u].insert(pos, w);
            }
        }
        out
    }
}

/// Anything that exposes an adjacency structure.
pub trait AsAdjacency {
    fn adjacency(&self) -> Adjacency;
}

impl AsAdjacency for Adjacency {
    fn adjacency(&self) -> Adjacency {
        self.clone()
    }
}

/// A triangulation of the `n`-gon: the cycle plus `n - 3` pairwise non-crossing chords.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OuterplanarTriangulation {
    n: usize,
    chords: Vec<Chord>,
}

impl OuterplanarTriangulation {
    /// Validates and builds a triangulation. Reports the first violated invariant.
    pub fn new(n: usize, chords: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 3 {
            return Err(Error::OrderTooSmall { n, min: 3 });
        }
        let mut list = Vec::new();
        for (a, b) in chords {
            for idx in [a, b] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, n });
                }
            }
            let c = Chord::new(a, b);
            if c.0 == c.1 || c.1 - c.0 == 1 || (c.0 == 0 && c.1 == n - 1) {
                return Err(Error::DegenerateChord(a, b));
            }
            list.push(c);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateChord(w[0]));
        }
        if list.len() != n - 3 {
            return Err(Error::WrongChordCount {
                expected: n - 3,
                got: list.len(),
            });
        }
        if let Some((c, d)) = first_crossing(&list) {
            return Err(Error::CrossingChords(c, d));
        }
        Ok(OuterplanarTriangulation { n, chords: list })
    }

    /// Builds from chords the caller has already validated and sorted.
    pub(crate) fn from_sorted_unchecked(n: usize, chords: Vec<Chord>) -> Self {
        debug_assert!(chords.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(chords.len() + 3, n);
        debug_assert!(first_crossing(&chords).is_none());
        OuterplanarTriangulation { n, chords }
    }

    pub(crate) fn from_unsorted_unchecked(n: usize, mut chords: Vec<Chord>) -> Self {
        chords.sort_unstable();
        Self::from_sorted_unchecked(n, chords)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Chords in sorted order.
    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn has_chord(&self, a: usize, b: usize) -> bool {
        self.chords.binary_search(&Chord::new(a, b)).is_ok()
    }

    /// True for cycle edges and chords.
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        is_cycle_edge(self.n, a, b) || self.has_chord(a, b)
    }

    /// All `2n - 3` edges, cycle edges first.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n)
            .map(move |i| {
                let j = (i + 1) % n;
                (i.min(j), i.max(j))
            })
            .chain(self.chords.iter().map(|c| (c.0, c.1)))
    }

    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![2; self.n];
        for c in &self.chords {
            deg[c.0] += 1;
            deg[c.1] += 1;
        }
        deg
    }

    /// The two arc lengths of a chord: `(hi - lo, n - hi + lo)`.
    pub fn chord_lengths(&self, chord: Chord) -> Result<ChordLengths> {
        let chord = Chord::new(chord.0, chord.1);
        if !self.has_chord(chord.0, chord.1) {
            return Err(Error::NotAChord(chord));
        }
        let inner = chord.1 - chord.0;
        Ok(ChordLengths {
            chord,
            side_lengths: (inner, self.n - inner),
        })
    }

    pub fn weak_dual(&self) -> WeakDualTree {
        WeakDualTree::of(self)
    }

    /// Copy with every label shifted by `shift` around the cycle.
    pub fn rotated(&self, shift: usize) -> Self {
        let n = self.n;
        Self::from_unsorted_unchecked(
            n,
            self.chords
                .iter()
                .map(|c| Chord::new((c.0 + shift) % n, (c.1 + shift) % n))
                .collect(),
        )
    }
}

impl AsAdjacency for OuterplanarTriangulation {
    fn adjacency(&self) -> Adjacency {
        Adjacency::from_edges(self.n, self.edges())
    }
}

/// Arc lengths on either side of a chord; they sum to `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChordLengths {
    pub chord: Chord,
    pub side_lengths: (usize, usize),
}

impl ChordLengths {
    pub fn has_side(&self, len: usize) -> bool {
        self.side_lengths.0 == len || self.side_lengths.1 == len
    }
}

pub fn is_cycle_edge(n: usize, a: usize, b: usize) -> bool {
    a != b && ((a + 1) % n == b || (b + 1) % n == a)
}

/// Chords must form a laminar family of intervals; returns the first interleaving pair.
fn first_crossing(sorted: &[Chord]) -> Option<(Chord, Chord)> {
    let mut order: Vec<Chord> = sorted.to_vec();
    order.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    let mut stack: Vec<Chord> = Vec::new();
    for c in order {
        while let Some(top) = stack.last() {
            if top.1 <= c.0 {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&top) = stack.last() {
            if top.0 < c.0 && c.1 > top.1 {
                return Some((top, c));
            }
        }
        stack.push(c);
    }
    None
}

/// A maximal planar graph given as two chord-disjoint triangulations of the same cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HamiltonianTriangulation {
    n: usize,
    inner: OuterplanarTriangulation,
    outer: OuterplanarTriangulation,
}

impl HamiltonianTriangulation {
    pub(crate) fn from_parts_unchecked(
        inner: OuterplanarTriangulation,
        outer: OuterplanarTriangulation,
    ) -> Self {
        HamiltonianTriangulation {
            n: inner.order(),
            inner,
            outer,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn inner(&self) -> &OuterplanarTriangulation {
        &self.inner
    }

    pub fn outer(&self) -> &OuterplanarTriangulation {
        &self.outer
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.inner
            .edges()
            .chain(self.outer.chords().iter().map(|c| (c.0, c.1)))
    }

    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = self.inner.vertex_degrees();
        for c in self.outer.chords() {
            deg[c.0] += 1;
            deg[c.1] += 1;
        }
        deg
    }
}

impl AsAdjacency for HamiltonianTriangulation {
    fn adjacency(&self) -> Adjacency {
        Adjacency::from_edges(self.n, self.edges())
    }
}

/// Neighbors of `v` sorted by forward offset from `v`, so consecutive entries
/// bound the triangles at `v` in order around the polygon.
pub(crate) fn rotation(adj: &Adjacency, v: usize) -> Vec<usize> {
    let l = adj.neighbors(v);
    let split = l.partition_point(|&u| u < v);
    l[split..].iter().chain(&l[..split]).copied().collect()
}

/// Apexes of the two triangles on edge `{a, b}`: first the one inside the forward
/// arc `a -> b`, then the one inside the arc `b -> a`. `None` for the outer side of a
/// cycle edge.
pub(crate) fn face_apexes(
    adj: &Adjacency,
    n: usize,
    a: usize,
    b: usize,
) -> (Option<usize>, Option<usize>) {
    let off_b = cyclic_offset(n, a, b);
    let mut before = None;
    let mut after = None;
    for &u in adj.neighbors(a) {
        let off = cyclic_offset(n, a, u);
        if off < off_b && before.is_none_or(|p: usize| off > cyclic_offset(n, a, p)) {
            before = Some(u);
        }
        if off > off_b && after.is_none_or(|p: usize| off < cyclic_offset(n, a, p)) {
            after = Some(u);
        }
    }
    (before, after)
}
