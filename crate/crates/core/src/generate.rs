//! Named families (fans, sun graphs, parasols), exhaustive enumeration of labeled
//! polygon triangulations, and seeded uniform sampling.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{
    cyclic_offset, glue, Chord, HamiltonianTriangulation, OuterplanarTriangulation,
};

/// Default largest order accepted by [`enumerate_triangulations`].
pub const DEFAULT_MAX_N: usize = 16;

/// Largest order whose triangulation count fits a `u64` rank.
const MAX_RANKED_N: usize = 37;

pub fn fan(n: usize) -> Result<OuterplanarTriangulation> {
    if n < 3 {
        return Err(Error::OrderTooSmall { n, min: 3 });
    }
    Ok(OuterplanarTriangulation::from_sorted_unchecked(
        n,
        (2..n - 1).map(|i| Chord(0, i)).collect(),
    ))
}

/// The sun graph: an ear on every boundary edge. Original vertex `i` becomes `2i`,
/// the ear on edge `{i, i+1}` becomes `2i + 1`.
pub fn sun_of(h: &OuterplanarTriangulation) -> OuterplanarTriangulation {
    let m = h.order();
    let n = 2 * m;
    let chords = (0..m)
        .map(|i| Chord::new(2 * i, (2 * i + 2) % n))
        .chain(h.chords().iter().map(|c| Chord(2 * c.0, 2 * c.1)))
        .collect();
    OuterplanarTriangulation::from_unsorted_unchecked(n, chords)
}

/// The parasol of order `4k + 2`: a `k`-fan centered at vertex 0 with a pentagon on
/// the outer edge of each fan triangle. Copy `i` occupies positions `4i-3 ..= 4i+1`
/// with its degree-4 vertex at `4i-1`.
pub fn parasol(k: usize) -> Result<OuterplanarTriangulation> {
    if k == 0 {
        return Err(Error::OrderTooSmall { n: 2, min: 6 });
    }
    let n = 4 * k + 2;
    let mut chords = Vec::with_capacity(n - 3);
    chords.extend((1..k).map(|i| Chord(0, 4 * i + 1)));
    for i in 1..=k {
        chords.push(Chord(4 * i - 3, 4 * i + 1));
        chords.push(Chord(4 * i - 3, 4 * i - 1));
        chords.push(Chord(4 * i - 1, 4 * i + 1));
    }
    Ok(OuterplanarTriangulation::from_unsorted_unchecked(n, chords))
}

/// Catalan numbers `C(0) ..= C(MAX_RANKED_N - 2)`.
fn catalan_table() -> Vec<u64> {
    let mut c = vec![1u64; MAX_RANKED_N - 1];
    for i in 1..c.len() {
        c[i] = (c[i - 1] as u128 * (4 * i as u128 - 2) / (i as u128 + 1)) as u64;
    }
    c
}

/// Number of triangulations of the `n`-gon, `Catalan(n - 2)`.
pub fn triangulation_count(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(Error::OrderTooSmall { n, min: 3 });
    }
    if n > MAX_RANKED_N {
        return Err(Error::CapExceeded {
            n,
            cap: MAX_RANKED_N,
        });
    }
    Ok(catalan_table()[n - 2])
}

/// Enumeration cap, overridable through `SUNCHASER_MAX_N`.
pub fn enumeration_cap() -> usize {
    std::env::var("SUNCHASER_MAX_N")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .map(|c: usize| c.min(MAX_RANKED_N))
        .unwrap_or(DEFAULT_MAX_N)
}

/// Resumable stream over every labeled triangulation of the `n`-gon.
///
/// Triangulations are ranked by the apex chosen over base edge `{n-1, 0}`, then
/// recursively on the two sub-polygons; the cursor walks a contiguous rank range, so
/// a range can be split into independent shards.
#[derive(Debug, Clone)]
pub struct EnumerationCursor {
    n: usize,
    next: u64,
    end: u64,
    catalan: Vec<u64>,
}

impl EnumerationCursor {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Rank of the next triangulation to be produced.
    pub fn position(&self) -> u64 {
        self.next
    }

    pub fn remaining(&self) -> u64 {
        self.end - self.next
    }

    /// Restricts the cursor to shard `index` of `count` (0-based) of its remaining range.
    pub fn shard(&self, index: usize, count: usize) -> Self {
        assert!(count > 0 && index < count, "shard {index} of {count}");
        let len = self.remaining() as u128;
        let lo = self.next + (len * index as u128 / count as u128) as u64;
        let hi = self.next + (len * (index as u128 + 1) / count as u128) as u64;
        EnumerationCursor {
            next: lo,
            end: hi,
            ..self.clone()
        }
    }

    /// Splits the remaining range into `count` consecutive shards.
    pub fn split(&self, count: usize) -> Vec<Self> {
        (0..count).map(|i| self.shard(i, count)).collect()
    }

    /// The triangulation with the given rank.
    pub fn unrank(&self, rank: u64) -> OuterplanarTriangulation {
        let mut chords = Vec::with_capacity(self.n - 3);
        let mut stack = vec![(0usize, self.n - 1, rank)];
        while let Some((lo, hi, mut r)) = stack.pop() {
            if hi - lo < 2 {
                continue;
            }
            for a in lo + 1..hi {
                let right = self.catalan[hi - a - 1];
                let block = self.catalan[a - lo - 1] * right;
                if r < block {
                    if a - lo >= 2 {
                        chords.push(Chord(lo, a));
                    }
                    if hi - a >= 2 {
                        chords.push(Chord(a, hi));
                    }
                    stack.push((a, hi, r % right));
                    stack.push((lo, a, r / right));
                    break;
                }
                r -= block;
            }
        }
        OuterplanarTriangulation::from_unsorted_unchecked(self.n, chords)
    }
}

impl Iterator for EnumerationCursor {
    type Item = OuterplanarTriangulation;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let g = self.unrank(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining() as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for EnumerationCursor {}

/// Streams every labeled triangulation of the `n`-gon exactly once.
pub fn enumerate_triangulations(n: usize) -> Result<EnumerationCursor> {
    enumerate_with_cap(n, enumeration_cap())
}

pub fn enumerate_with_cap(n: usize, cap: usize) -> Result<EnumerationCursor> {
    if n < 3 {
        return Err(Error::OrderTooSmall { n, min: 3 });
    }
    if n > cap.min(MAX_RANKED_N) {
        return Err(Error::CapExceeded { n, cap });
    }
    let catalan = catalan_table();
    Ok(EnumerationCursor {
        n,
        next: 0,
        end: catalan[n - 2],
        catalan,
    })
}

/// Uniform random triangulation of the `n`-gon, deterministic per seed.
pub fn random_triangulation(n: usize, seed: u64) -> Result<OuterplanarTriangulation> {
    if n < 3 {
        return Err(Error::OrderTooSmall { n, min: 3 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sample_triangulation(n, &mut rng))
}

/// Samples a uniform binary tree with `n - 2` internal nodes via the cycle lemma and
/// reads it as a triangulation: the root is the triangle on edge `{n-1, 0}`, and each
/// internal node splits its polygon at `lo + (leaves of its left subtree)`.
pub(crate) fn sample_triangulation<R: Rng>(n: usize, rng: &mut R) -> OuterplanarTriangulation {
    let internal = n - 2;
    let len = 2 * internal + 1;
    let mut word: Vec<bool> = (0..len).map(|i| i < internal).collect();
    word.shuffle(rng);

    // Rotate to start just after the first minimum of the prefix sums.
    let (mut sum, mut min, mut at) = (0i64, i64::MAX, 0);
    for (i, &internal_node) in word.iter().enumerate() {
        sum += if internal_node { 1 } else { -1 };
        if sum < min {
            min = sum;
            at = i;
        }
    }
    word.rotate_left((at + 1) % len);

    // Leaves per subtree, rooted at each preorder position.
    let mut leaves = vec![0usize; len];
    let mut stack: Vec<usize> = Vec::with_capacity(len);
    for i in (0..len).rev() {
        leaves[i] = if word[i] {
            let l = stack.pop().expect("left subtree");
            let r = stack.pop().expect("right subtree");
            l + r
        } else {
            1
        };
        stack.push(leaves[i]);
    }
    // Subtree sizes in symbols, to find each node's right child.
    let size = |i: usize| 2 * leaves[i] - 1;

    let mut chords = Vec::with_capacity(n - 3);
    let mut todo = vec![(0usize, 0usize, n - 1)];
    while let Some((pos, lo, hi)) = todo.pop() {
        if !word[pos] {
            debug_assert_eq!(hi - lo, 1);
            continue;
        }
        let left = pos + 1;
        let right = left + size(left);
        let apex = lo + leaves[left];
        if apex - lo >= 2 {
            chords.push(Chord(lo, apex));
        }
        if hi - apex >= 2 {
            chords.push(Chord(apex, hi));
        }
        todo.push((right, apex, hi));
        todo.push((left, lo, apex));
    }
    OuterplanarTriangulation::from_unsorted_unchecked(n, chords)
}

/// A random Hamiltonian triangulation: two independent uniform triangulations of the
/// same cycle, glued after removing shared chords from the outer one.
///
/// A handful of rejection rounds are tried first; the pair is then uniform over
/// chord-disjoint pairs. Past that (large `n`, where disjointness is rare) every
/// shared chord of the outer half is flipped inside its quadrilateral. The flipped
/// diagonal crosses the shared chord, so it can never be an inner chord.
pub fn random_hamiltonian(n: usize, seed: u64) -> Result<HamiltonianTriangulation> {
    const REJECTION_ROUNDS: usize = 32;
    if n < 4 {
        return Err(Error::OrderTooSmall { n, min: 4 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inner = sample_triangulation(n, &mut rng);
    let mut outer = sample_triangulation(n, &mut rng);
    for _ in 0..REJECTION_ROUNDS {
        if let Ok(ht) = glue(&inner, &outer) {
            return Ok(ht);
        }
        outer = sample_triangulation(n, &mut rng);
    }
    let outer = flip_shared(&inner, &outer);
    glue(&inner, &outer)
}

fn flip_shared(
    inner: &OuterplanarTriangulation,
    outer: &OuterplanarTriangulation,
) -> OuterplanarTriangulation {
    let n = outer.order();
    let mut chords: BTreeSet<Chord> = outer.chords().iter().copied().collect();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| [(v + 1) % n, (v + n - 1) % n].into_iter().collect())
        .collect();
    for c in &chords {
        adj[c.0].insert(c.1);
        adj[c.1].insert(c.0);
    }
    let shared: Vec<Chord> = inner
        .chords()
        .iter()
        .filter(|c| chords.contains(c))
        .copied()
        .collect();
    for c in shared {
        let Chord(a, b) = c;
        let off_b = cyclic_offset(n, a, b);
        let apex = |inside: bool| {
            adj[a]
                .intersection(&adj[b])
                .copied()
                .filter(|&u| (cyclic_offset(n, a, u) < off_b) == inside)
                .min_by_key(|&u| {
                    let o = cyclic_offset(n, a, u);
                    if inside {
                        off_b - o
                    } else {
                        o - off_b
                    }
                })
                .expect("chord has a triangle on each side")
        };
        let (p, q) = (apex(true), apex(false));
        chords.remove(&c);
        adj[a].remove(&b);
        adj[b].remove(&a);
        chords.insert(Chord::new(p, q));
        adj[p].insert(q);
        adj[q].insert(p);
    }
    OuterplanarTriangulation::from_sorted_unchecked(n, chords.into_iter().collect())
}
