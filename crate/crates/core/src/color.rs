//! Coupon-colorings: every color class is a total dominating set, i.e. every vertex
//! sees every color among its neighbors.
//!
//! [`color_outerplanar`] either returns a verified 2-class coloring or certifies that
//! the graph is a generalized sun, which admits none. The `n = 2 (mod 4)` case runs
//! the pentagon-contraction recursion iteratively, keeping everything in the original
//! labels so the lift back is a constant amount of work per level.
//!
//! Colors are `0` (white) and `1` (black).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    cut_along_chord, cyclic_offset, face_apexes, short_chord_decomposition, Adjacency,
    AsAdjacency, Chord, HamiltonianTriangulation, OuterplanarTriangulation,
    ShortChordDecomposition,
};
use crate::recognize::{classify_adjacency, classify_generalized_sun, find_short_chord, SunVerdict};

pub const WHITE: u8 = 0;
pub const BLACK: u8 = 1;
const UNSET: u8 = u8::MAX;

/// A vertex coloring with `k` classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub k: usize,
    pub colors: Vec<u8>,
}

impl Coloring {
    pub fn two(colors: Vec<u8>) -> Self {
        Coloring { k: 2, colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

/// Either a verified 2-class coupon-coloring or the generalized sun certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringOutcome {
    Colored(Coloring),
    GeneralizedSun(SunVerdict),
}

impl ColoringOutcome {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            ColoringOutcome::Colored(c) => Some(c),
            ColoringOutcome::GeneralizedSun(_) => None,
        }
    }

    pub fn is_colored(&self) -> bool {
        matches!(self, ColoringOutcome::Colored(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: usize,
    pub missing: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CouponVerdict {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

pub fn verify_coupon<G: AsAdjacency + ?Sized>(graph: &G, c: &Coloring) -> Result<CouponVerdict> {
    verify_adjacency(&graph.adjacency(), c)
}

/// Checks that every vertex has a neighbor in each of the `k` classes and lists every
/// vertex that does not, with the classes it is missing.
pub fn verify_adjacency(adj: &Adjacency, c: &Coloring) -> Result<CouponVerdict> {
    if c.colors.len() != adj.order() {
        return Err(Error::LengthMismatch {
            expected: adj.order(),
            got: c.colors.len(),
        });
    }
    if c.k > 64 {
        return Err(Error::BadFormat(format!("k = {} exceeds 64", c.k)));
    }
    if let Some(&bad) = c.colors.iter().find(|&&x| x as usize >= c.k) {
        return Err(Error::BadFormat(format!("color {bad} out of range for k = {}", c.k)));
    }
    let full: u64 = if c.k == 64 { u64::MAX } else { (1u64 << c.k) - 1 };
    let violations: Vec<Violation> = (0..adj.order())
        .filter_map(|v| {
            let seen = adj
                .neighbors(v)
                .iter()
                .fold(0u64, |m, &u| m | 1 << c.colors[u]);
            (seen != full).then(|| Violation {
                vertex: v,
                missing: (0..c.k as u8).filter(|&j| seen & (1 << j) == 0).collect(),
            })
        })
        .collect();
    Ok(CouponVerdict {
        valid: violations.is_empty(),
        violations,
    })
}

/// Pairs of equal colors along the cycle: `0` when `(v + phase) mod 4` is 0 or 1.
pub fn wwbb_pattern(n: usize, phase: usize) -> Result<Coloring> {
    if !n.is_multiple_of(4) {
        return Err(Error::WrongResidue { n });
    }
    if phase >= 4 {
        return Err(Error::InvalidPhase(phase));
    }
    Ok(Coloring::two((0..n).map(|v| pair_color(v + phase)).collect()))
}

#[inline]
fn pair_color(pos: usize) -> u8 {
    if pos % 4 < 2 {
        WHITE
    } else {
        BLACK
    }
}

/// Colors a maximal outerplanar graph with two classes, or returns the generalized
/// sun certificate when no such coloring exists.
pub fn color_outerplanar(g: &OuterplanarTriangulation) -> Result<ColoringOutcome> {
    let n = g.order();
    if n < 4 {
        return Err(Error::OrderTooSmall { n, min: 4 });
    }
    let adj = g.adjacency();
    let verdict = classify_adjacency(&adj);
    if verdict.is_generalized_sun {
        return Ok(ColoringOutcome::GeneralizedSun(verdict));
    }
    let colors = match n % 4 {
        0 => wwbb_pattern(n, 0)?.colors,
        1 => color_residue_one(g),
        3 => color_residue_three(g)?,
        _ => color_residue_two(g)?,
    };
    certify(&adj, colors).map(ColoringOutcome::Colored)
}

fn certify(adj: &Adjacency, colors: Vec<u8>) -> Result<Coloring> {
    let c = Coloring::two(colors);
    let verdict = verify_adjacency(adj, &c).map_err(|e| {
        Error::InternalContradiction(format!("constructed coloring is malformed: {e}"))
    })?;
    if !verdict.valid {
        let bad: Vec<usize> = verdict.violations.iter().map(|v| v.vertex).collect();
        return Err(Error::InternalContradiction(format!(
            "constructed coloring fails at vertices {bad:?}"
        )));
    }
    Ok(c)
}

/// `n = 1 (mod 4)`: drop the first ear, pair-color the rest with a phase that puts a
/// pair boundary between the ear's two neighbors, and give the ear any color.
fn color_residue_one(g: &OuterplanarTriangulation) -> Vec<u8> {
    let n = g.order();
    let ear = g
        .vertex_degrees()
        .iter()
        .position(|&d| d == 2)
        .expect("a triangulated polygon has an ear");
    let reduced = |u: usize| if u < ear { u } else { u - 1 };
    let before = reduced((ear + n - 1) % n);
    let phase = (5 - before % 4) % 4;
    (0..n)
        .map(|u| if u == ear { WHITE } else { pair_color(reduced(u) + phase) })
        .collect()
}

/// `n = 3 (mod 4)`: a chord with a side of length 3 or 4 splits the polygon into pieces
/// of orders `1` and `0 (mod 4)`. Both are colorable, and the pair pattern on the second
/// can match whatever the first does on the shared chord.
fn color_residue_three(g: &OuterplanarTriangulation) -> Result<Vec<u8>> {
    let short = find_short_chord(g)?;
    let (a, b) = cut_along_chord(g, short.chord)?;
    let (odd, even) = if a.graph.order() % 4 == 1 {
        (a, b)
    } else {
        (b, a)
    };
    debug_assert_eq!(even.graph.order() % 4, 0);
    let odd_colors = color_residue_one(&odd.graph);
    let last_odd = odd.graph.order() - 1;
    let same = odd_colors[0] == odd_colors[last_odd];

    let m = even.graph.order();
    let phase = (0..4)
        .find(|&ph| (pair_color(ph) == pair_color(m - 1 + ph)) == same)
        .expect("some phase matches");
    let mut even_colors: Vec<u8> = (0..m).map(|v| pair_color(v + phase)).collect();
    // The chord's endpoints sit at local 0 and last in both pieces, in opposite order.
    if even_colors[m - 1] != odd_colors[0] {
        even_colors.iter_mut().for_each(|c| *c ^= 1);
    }

    let mut colors = vec![UNSET; g.order()];
    for (i, &c) in odd_colors.iter().enumerate() {
        colors[odd.labels[i]] = c;
    }
    for (i, &c) in even_colors.iter().enumerate() {
        let v = even.labels[i];
        if colors[v] != UNSET && colors[v] != c {
            return Err(Error::InternalContradiction(format!(
                "pieces disagree on chord endpoint {v}"
            )));
        }
        colors[v] = c;
    }
    Ok(colors)
}

/// The pentagon `x p q r y` removed at one contraction level.
#[derive(Debug, Clone, Copy)]
struct Frame {
    x: usize,
    p: usize,
    q: usize,
    r: usize,
    y: usize,
}

/// `n = 2 (mod 4)`, not a generalized sun.
///
/// While no chord has a side of length 3, pick the distance-4 chord `xy` whose triangle
/// `xyz` leaves the smallest piece `G'` on `zx`, delete the pentagon interior `p q r`
/// and contract `x` into `y`. The contracted graph has order `n - 4`. Its coloring lifts
/// by giving `x` the color of `y` and `p, q, r` the other color: `x` and `y` each see
/// both colors through each other and `q`, and every other neighborhood keeps its set
/// of colors.
///
/// The loop stops at order 6, at a chord with a side of length 3 (cut off the
/// quadrilateral, pair-color the rest), or when the contraction is a generalized sun,
/// which only happens with `zx` a cycle edge and `y` a special vertex of the contraction.
fn color_residue_two(g: &OuterplanarTriangulation) -> Result<Vec<u8>> {
    let n = g.order();
    let mut colors = vec![UNSET; n];
    let mut cur = g.clone();
    let mut labels: Vec<usize> = (0..n).collect();
    let mut frames: Vec<Frame> = Vec::with_capacity(n / 4);

    loop {
        let m = cur.order();
        let adj = cur.adjacency();
        if m == 6 {
            let local = exhaustive_small(&adj).ok_or_else(|| {
                Error::InternalContradiction("order-6 base case has no coloring".into())
            })?;
            for (v, &c) in local.iter().enumerate() {
                colors[labels[v]] = c;
            }
            break;
        }
        if let Some(&chord) = cur
            .chords()
            .iter()
            .find(|c| c.1 - c.0 == 3 || m - (c.1 - c.0) == 3)
        {
            let local = color_across_distance_three(&cur, &adj, chord)?;
            for (v, &c) in local.iter().enumerate() {
                colors[labels[v]] = c;
            }
            break;
        }

        let d = best_decomposition(&cur, &adj)?;
        let g_prime = d.g_prime.order();
        if !matches!(g_prime, 2 | 3 | 5) {
            return Err(Error::InternalContradiction(format!(
                "minimal piece on zx has order {g_prime}"
            )));
        }
        let [x, p, q, r, y] = d.g5;
        let (h, kept) = contract(&cur, &d)?;
        let hadj = h.adjacency();
        let hv = classify_adjacency(&hadj);
        let frame = Frame {
            x: labels[x],
            p: labels[p],
            q: labels[q],
            r: labels[r],
            y: labels[y],
        };
        labels = kept.iter().map(|&v| labels[v]).collect();

        if hv.is_generalized_sun {
            if g_prime != 2 {
                return Err(Error::InternalContradiction(format!(
                    "contraction with |G'| = {g_prime} is a generalized sun"
                )));
            }
            let yh = kept.binary_search(&y).expect("y survives contraction");
            let zh = kept.binary_search(&d.z).expect("z survives contraction");
            if !hv.is_special(yh) {
                return Err(Error::InternalContradiction(
                    "z is special in the contraction, so the graph was a generalized sun".into(),
                ));
            }
            let hn = h.order();
            let forward = (yh + 1) % hn == zh;
            colors[labels[yh]] = BLACK;
            for t in 1..hn {
                let v = if forward {
                    (yh + t) % hn
                } else {
                    (yh + hn - t) % hn
                };
                colors[labels[v]] = if ((t - 1) / 2) % 2 == 0 { WHITE } else { BLACK };
            }
            frames.push(frame);
            break;
        }
        frames.push(frame);
        cur = h;
    }

    for f in frames.iter().rev() {
        let c = colors[f.y];
        debug_assert_ne!(c, UNSET);
        colors[f.x] = c;
        colors[f.p] = c ^ 1;
        colors[f.q] = c ^ 1;
        colors[f.r] = c ^ 1;
    }
    Ok(colors)
}

/// Among chords with a side of length 4, the decomposition with the smallest piece on
/// `zx`, ties broken by lowest `x` then `y`.
fn best_decomposition(
    g: &OuterplanarTriangulation,
    adj: &Adjacency,
) -> Result<ShortChordDecomposition> {
    let n = g.order();
    let mut best: Option<((usize, usize, usize), Chord)> = None;
    for &c in g.chords() {
        let inner = c.1 - c.0;
        let (s, e) = if inner == 4 {
            (c.0, c.1)
        } else if n - inner == 4 {
            (c.1, c.0)
        } else {
            continue;
        };
        let Some(z) = face_apexes(adj, n, s, e).1 else {
            continue;
        };
        let s_side = cyclic_offset(n, z, s) + 1;
        let e_side = cyclic_offset(n, e, z) + 1;
        let (size, x, y) = match s_side.cmp(&e_side) {
            std::cmp::Ordering::Less => (s_side, s, e),
            std::cmp::Ordering::Greater => (e_side, e, s),
            std::cmp::Ordering::Equal => (s_side, s.min(e), s.max(e)),
        };
        let key = (size, x, y);
        if best.is_none_or(|(k, _)| key < k) {
            best = Some((key, c));
        }
    }
    let (_, chord) = best.ok_or_else(|| {
        Error::InternalContradiction(format!("no chord with a side of length 3 or 4 in order {n}"))
    })?;
    short_chord_decomposition(g, chord)
}

/// Deletes the pentagon interior and contracts `x` into `y`. Returns the contracted
/// graph and, for each of its vertices, the vertex of `g` it came from (increasing).
fn contract(
    g: &OuterplanarTriangulation,
    d: &ShortChordDecomposition,
) -> Result<(OuterplanarTriangulation, Vec<usize>)> {
    let n = g.order();
    let [x, p, q, r, y] = d.g5;
    let gone = |v: usize| v == x || v == p || v == q || v == r;
    let kept: Vec<usize> = (0..n).filter(|&v| !gone(v)).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    index[x] = index[y];
    let hn = kept.len();
    let mut chords: Vec<(usize, usize)> = g
        .chords()
        .iter()
        .filter(|c| ![p, q, r].iter().any(|&v| c.contains(v)))
        .map(|c| (index[c.0], index[c.1]))
        .filter(|&(a, b)| a != b && !crate::graph::is_cycle_edge(hn, a, b))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    chords.sort_unstable();
    chords.dedup();
    let h = OuterplanarTriangulation::new(hn, chords)
        .map_err(|e| Error::InternalContradiction(format!("contraction is invalid: {e}")))?;
    Ok((h, kept))
}

/// A chord with a side of length 3 cuts off a quadrilateral; the rest has order
/// `0 (mod 4)` and takes the pair pattern. The quadrilateral has valid colorings for
/// either relation between the chord endpoints, so its two interior vertices are
/// filled by trying all four options.
fn color_across_distance_three(
    g: &OuterplanarTriangulation,
    adj: &Adjacency,
    chord: Chord,
) -> Result<Vec<u8>> {
    let n = g.order();
    let start = if chord.1 - chord.0 == 3 {
        chord.0
    } else {
        chord.1
    };
    let interior = [(start + 1) % n, (start + 2) % n];
    let mut colors = vec![UNSET; n];
    let mut pos = 0;
    for k in 0..n {
        let v = (start + 3 + k) % n;
        if interior.contains(&v) {
            continue;
        }
        colors[v] = pair_color(pos);
        pos += 1;
    }
    debug_assert_eq!(pos % 4, 0);
    let check = [start, interior[0], interior[1], (start + 3) % n];
    if !fill_local(adj, &mut colors, &interior, &check) {
        return Err(Error::InternalContradiction(format!(
            "quadrilateral cut off by {chord} cannot be filled"
        )));
    }
    Ok(colors)
}

fn sees_both(adj: &Adjacency, colors: &[u8], v: usize) -> bool {
    let mut seen = 0u8;
    for &u in adj.neighbors(v) {
        if colors[u] != UNSET {
            seen |= 1 << colors[u];
        }
    }
    seen == 0b11
}

/// Tries every assignment of the `free` vertices and keeps the first under which all
/// `check` vertices see both colors.
fn fill_local(adj: &Adjacency, colors: &mut [u8], free: &[usize], check: &[usize]) -> bool {
    for mask in 0u32..1 << free.len() {
        for (i, &v) in free.iter().enumerate() {
            colors[v] = ((mask >> i) & 1) as u8;
        }
        if check.iter().all(|&v| sees_both(adj, colors, v)) {
            return true;
        }
    }
    for &v in free {
        colors[v] = UNSET;
    }
    false
}

/// Exhaustive search for the small base cases, vertex 0 fixed white.
fn exhaustive_small(adj: &Adjacency) -> Option<Vec<u8>> {
    let n = adj.order();
    debug_assert!(n <= 16);
    (0u32..1 << (n - 1))
        .map(|mask| {
            (0..n)
                .map(|v| if v == 0 { WHITE } else { ((mask >> (v - 1)) & 1) as u8 })
                .collect::<Vec<u8>>()
        })
        .find(|colors| (0..n).all(|v| sees_both(adj, colors, v)))
}

/// Colors a Hamiltonian triangulation with two classes.
///
/// A half that is not a generalized sun colors the whole graph, since adding edges
/// never hurts a coupon-coloring. When both halves are generalized suns there are
/// vertices `v_i`, `v_{i+3}` that are ears of different halves; indexing from `v_i`
/// as 1, vertices `5, 6, 9, 10, ...` are white and the rest black. Every vertex but
/// 2 and 3 sees both colors along the cycle, and the two ear chords `{n, 2}` and
/// `{3, 5}` cover those.
pub fn color_hamiltonian(ht: &HamiltonianTriangulation) -> Result<Coloring> {
    let n = ht.order();
    if n < 4 {
        return Err(Error::OrderTooSmall { n, min: 4 });
    }
    let adj = ht.adjacency();
    for half in [ht.inner(), ht.outer()] {
        if let ColoringOutcome::Colored(c) = color_outerplanar(half)? {
            return certify(&adj, c.colors);
        }
    }
    let ears_in = crate::recognize::degree_two_vertices(ht.inner());
    let ears_out = crate::recognize::degree_two_vertices(ht.outer());
    let start = ears_in
        .iter()
        .find(|&&i| ears_out.binary_search(&((i + 3) % n)).is_ok())
        .or_else(|| {
            ears_out
                .iter()
                .find(|&&i| ears_in.binary_search(&((i + 3) % n)).is_ok())
        })
        .copied()
        .ok_or_else(|| {
            Error::InternalContradiction("no ears at distance 3 in opposite halves".into())
        })?;
    let mut colors = vec![BLACK; n];
    for t in 5..=n {
        if t % 4 == 1 || t % 4 == 2 {
            colors[(start + t - 1) % n] = WHITE;
        }
    }
    certify(&adj, colors)
}

/// The one-edge repair of a generalized sun.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmentation {
    /// The edge `{w, v}` joining the first ear `v` to the far apex `w` over its chord.
    pub added_edge: Chord,
    /// The chord removed to keep the graph outerplanar.
    pub removed_chord: Chord,
    /// `G - removed + added`: maximal outerplanar and not a generalized sun.
    pub exchanged: OuterplanarTriangulation,
    /// Valid for both the exchanged graph and `G + added`.
    pub coloring: Coloring,
}

impl Augmentation {
    /// Adjacency of `G` with the added edge.
    pub fn augmented(&self, g: &OuterplanarTriangulation) -> Adjacency {
        g.adjacency().with_edge(self.added_edge.0, self.added_edge.1)
    }
}

/// Repairs a generalized sun by exchanging the chord under an ear `v` for the edge from
/// `v` to the far apex over that chord.
///
/// Ears are tried in index order. For some ears the exchange turns `v` itself into a
/// central vertex and the result is again a generalized sun; the first ear whose
/// exchange escapes the class is used.
pub fn augment_generalized_sun(g: &OuterplanarTriangulation) -> Result<Augmentation> {
    let verdict = classify_generalized_sun(g);
    if !verdict.is_generalized_sun {
        return Err(Error::NotGeneralizedSun);
    }
    let n = g.order();
    let adj = g.adjacency();
    for &v in &verdict.degree_two {
        let (a, b) = ((v + n - 1) % n, (v + 1) % n);
        let (inside, outside) = face_apexes(&adj, n, a, b);
        let w = if inside == Some(v) { outside } else { inside }.ok_or_else(|| {
            Error::InternalContradiction(format!("no second face on the chord under ear {v}"))
        })?;
        let removed_chord = Chord::new(a, b);
        let added_edge = Chord::new(w, v);
        let exchanged = OuterplanarTriangulation::new(
            n,
            g.chords()
                .iter()
                .filter(|&&c| c != removed_chord)
                .map(|c| (c.0, c.1))
                .chain([(added_edge.0, added_edge.1)]),
        )
        .map_err(|e| Error::InternalContradiction(format!("exchanged graph is invalid: {e}")))?;
        if let ColoringOutcome::Colored(coloring) = color_outerplanar(&exchanged)? {
            return Ok(Augmentation {
                added_edge,
                removed_chord,
                exchanged,
                coloring,
            });
        }
    }
    Err(Error::InternalContradiction(
        "every ear exchange leaves a generalized sun".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{fan, parasol, sun_of};

    fn sun_k3() -> OuterplanarTriangulation {
        OuterplanarTriangulation::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn verify_examples() {
        let f4 = fan(4).unwrap();
        assert!(verify_coupon(&f4, &Coloring::two(vec![0, 0, 1, 1])).unwrap().valid);
        let tri = OuterplanarTriangulation::new(3, []).unwrap();
        let v = verify_coupon(&tri, &Coloring::two(vec![0, 0, 0])).unwrap();
        assert!(!v.valid);
        assert_eq!(v.violations.len(), 3);
        assert!(v.violations.iter().all(|x| x.missing == vec![1]));
        assert_eq!(
            verify_coupon(&tri, &Coloring::two(vec![0, 1])).unwrap_err(),
            Error::LengthMismatch {
                expected: 3,
                got: 2
            }
        );
    }

    #[test]
    fn sun_k3_has_no_valid_two_coloring() {
        let g = sun_k3();
        for mask in 0u32..64 {
            let c = Coloring::two((0..6).map(|v| ((mask >> v) & 1) as u8).collect());
            assert!(!verify_coupon(&g, &c).unwrap().valid);
        }
    }

    #[test]
    fn wwbb_examples() {
        assert_eq!(wwbb_pattern(8, 0).unwrap().colors, vec![0, 0, 1, 1, 0, 0, 1, 1]);
        assert_eq!(wwbb_pattern(8, 2).unwrap().colors, vec![1, 1, 0, 0, 1, 1, 0, 0]);
        assert_eq!(wwbb_pattern(6, 0).unwrap_err(), Error::WrongResidue { n: 6 });
        assert_eq!(wwbb_pattern(8, 4).unwrap_err(), Error::InvalidPhase(4));
    }

    #[test]
    fn fan_eight_gets_pairs() {
        let out = color_outerplanar(&fan(8).unwrap()).unwrap();
        assert_eq!(out.coloring().unwrap().colors, wwbb_pattern(8, 0).unwrap().colors);
    }

    #[test]
    fn witnesses_for_suns_and_parasols() {
        assert!(!color_outerplanar(&sun_k3()).unwrap().is_colored());
        assert!(!color_outerplanar(&sun_of(&fan(5).unwrap())).unwrap().is_colored());
        for k in 1..=10 {
            assert!(!color_outerplanar(&parasol(k).unwrap()).unwrap().is_colored());
        }
    }

    #[test]
    fn residues_one_and_three() {
        for n in [5, 7, 9, 11, 13, 15, 101, 103] {
            let g = fan(n).unwrap();
            let c = color_outerplanar(&g).unwrap();
            assert!(verify_coupon(&g, c.coloring().unwrap()).unwrap().valid, "n = {n}");
        }
    }

    #[test]
    fn order_too_small() {
        let tri = OuterplanarTriangulation::new(3, []).unwrap();
        assert_eq!(
            color_outerplanar(&tri).unwrap_err(),
            Error::OrderTooSmall { n: 3, min: 4 }
        );
    }

    #[test]
    fn hamiltonian_both_suns() {
        let odd = OuterplanarTriangulation::new(6, [(1, 3), (3, 5), (1, 5)]).unwrap();
        let ht = crate::graph::glue(&sun_k3(), &odd).unwrap();
        let c = color_hamiltonian(&ht).unwrap();
        assert!(verify_coupon(&ht, &c).unwrap().valid);
    }

    #[test]
    fn augment_sun_k3() {
        let a = augment_generalized_sun(&sun_k3()).unwrap();
        assert_eq!(a.added_edge, Chord(1, 4));
        assert_eq!(a.removed_chord, Chord(0, 2));
        assert_eq!(a.exchanged.chords(), &[Chord(0, 4), Chord(1, 4), Chord(2, 4)]);
        assert!(verify_coupon(&a.exchanged, &a.coloring).unwrap().valid);
        assert!(verify_adjacency(&a.augmented(&sun_k3()), &a.coloring).unwrap().valid);
        assert_eq!(
            augment_generalized_sun(&fan(6).unwrap()).unwrap_err(),
            Error::NotGeneralizedSun
        );
    }

    #[test]
    fn augment_skips_ear_that_becomes_central() {
        let g = OuterplanarTriangulation::new(
            10,
            [(0, 2), (0, 6), (0, 8), (2, 4), (2, 6), (4, 6), (6, 8)],
        )
        .unwrap();
        // Exchanging under ear 1 makes vertex 1 central.
        let first = OuterplanarTriangulation::new(
            10,
            [(0, 6), (0, 8), (1, 6), (2, 4), (2, 6), (4, 6), (6, 8)],
        )
        .unwrap();
        assert!(classify_generalized_sun(&first).is_generalized_sun);
        let a = augment_generalized_sun(&g).unwrap();
        assert_eq!(a.removed_chord, Chord(2, 4));
        assert!(!classify_generalized_sun(&a.exchanged).is_generalized_sun);
        assert!(verify_adjacency(&a.augmented(&g), &a.coloring).unwrap().valid);
    }
}
