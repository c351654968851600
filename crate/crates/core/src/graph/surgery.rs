//! Cutting a triangulation along a chord, gluing two back together along boundary
//! edges, gluing two triangulations of one cycle into a sphere triangulation, and the
//! pentagon-plus-triangle decomposition used by the coloring recursion.

use super::{
    cyclic_offset, face_apexes, is_cycle_edge, AsAdjacency, Chord, HamiltonianTriangulation,
    OuterplanarTriangulation,
};
use crate::error::{Error, Result};

/// A sub-triangulation together with `labels[i]` = label of its vertex `i` in the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub graph: OuterplanarTriangulation,
    pub labels: Vec<usize>,
}

/// Splits `g` along `chord` into the piece on the arc `lo..=hi` and the piece on the
/// arc `hi..=lo` (wrapping). The chord becomes the closing cycle edge of both.
pub fn cut_along_chord(g: &OuterplanarTriangulation, chord: Chord) -> Result<(Piece, Piece)> {
    let chord = Chord::new(chord.0, chord.1);
    if !g.has_chord(chord.0, chord.1) {
        return Err(Error::NotAChord(chord));
    }
    let Chord(i, j) = chord;
    let n = g.order();
    let na = j - i + 1;
    let nb = n - (j - i) + 1;
    let mut ca = Vec::with_capacity(na.saturating_sub(3));
    let mut cb = Vec::with_capacity(nb.saturating_sub(3));
    for &c in g.chords() {
        if c == chord {
            continue;
        }
        if i <= c.0 && c.1 <= j {
            ca.push(Chord(c.0 - i, c.1 - i));
        } else {
            cb.push(Chord::new(cyclic_offset(n, j, c.0), cyclic_offset(n, j, c.1)));
        }
    }
    let a = Piece {
        graph: OuterplanarTriangulation::from_unsorted_unchecked(na, ca),
        labels: (i..=j).collect(),
    };
    let b = Piece {
        graph: OuterplanarTriangulation::from_unsorted_unchecked(nb, cb),
        labels: (0..nb).map(|t| (j + t) % n).collect(),
    };
    Ok((a, b))
}

/// Result of identifying a boundary edge of one triangulation with one of another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Merged {
    pub graph: OuterplanarTriangulation,
    /// `first[v]` is the merged label of vertex `v` of the first graph.
    pub first: Vec<usize>,
    /// `second[v]` is the merged label of vertex `v` of the second graph.
    pub second: Vec<usize>,
}

/// Identifies boundary edge `e1 = (a1, b1)` of `g1` with `e2 = (a2, b2)` of `g2`,
/// mapping `a1` to `a2` and `b1` to `b2`. The identified edge becomes a chord. The
/// first graph keeps its orientation and vertex 0 of `g1` becomes vertex 0.
pub fn merge_on_edge(
    g1: &OuterplanarTriangulation,
    e1: (usize, usize),
    g2: &OuterplanarTriangulation,
    e2: (usize, usize),
) -> Result<Merged> {
    let (n1, n2) = (g1.order(), g2.order());
    let (a1, b1) = e1;
    let (a2, b2) = e2;
    if a1 >= n1 || b1 >= n1 || !is_cycle_edge(n1, a1, b1) {
        return Err(Error::NotABoundaryEdge(a1, b1));
    }
    if a2 >= n2 || b2 >= n2 || !is_cycle_edge(n2, a2, b2) {
        return Err(Error::NotABoundaryEdge(a2, b2));
    }
    // Orient so that t follows s on g1's cycle.
    let (s, t, s2, t2) = if (a1 + 1) % n1 == b1 {
        (a1, b1, a2, b2)
    } else {
        (b1, a1, b2, a2)
    };
    let total = n1 + n2 - 2;
    let rot = cyclic_offset(n1, t, 0);
    let place = |seq: usize| (seq + total - rot) % total;

    let mut first = vec![0; n1];
    for (k, slot) in (0..n1).map(|k| (k, (t + k) % n1)) {
        first[slot] = place(k);
    }
    let mut second = vec![0; n2];
    second[s2] = first[s];
    second[t2] = first[t];
    let step_back = (s2 + 1) % n2 == t2;
    for k in 1..n2 - 1 {
        let v = if step_back {
            (s2 + n2 - k) % n2
        } else {
            (s2 + k) % n2
        };
        second[v] = place(n1 - 1 + k);
    }

    let mut chords = Vec::with_capacity(total - 3);
    chords.extend(g1.chords().iter().map(|c| Chord::new(first[c.0], first[c.1])));
    chords.extend(g2.chords().iter().map(|c| Chord::new(second[c.0], second[c.1])));
    chords.push(Chord::new(first[s], first[t]));
    Ok(Merged {
        graph: OuterplanarTriangulation::from_unsorted_unchecked(total, chords),
        first,
        second,
    })
}

/// Glues two triangulations of the same cycle, one inside and one outside.
pub fn glue(
    inner: &OuterplanarTriangulation,
    outer: &OuterplanarTriangulation,
) -> Result<HamiltonianTriangulation> {
    if inner.order() != outer.order() {
        return Err(Error::SizeMismatch(inner.order(), outer.order()));
    }
    if inner.order() < 4 {
        return Err(Error::OrderTooSmall {
            n: inner.order(),
            min: 4,
        });
    }
    let (mut i, mut j) = (0, 0);
    let (ci, co) = (inner.chords(), outer.chords());
    while i < ci.len() && j < co.len() {
        match ci[i].cmp(&co[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return Err(Error::SharedChord(ci[i])),
        }
    }
    let ht = HamiltonianTriangulation::from_parts_unchecked(inner.clone(), outer.clone());
    debug_assert!(ht.vertex_degrees().iter().all(|&d| d >= 3));
    Ok(ht)
}

/// One side of the triangle `xyz`: the polygon on the arc between `z` and `x` (or `y`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Side {
    /// Vertices of the arc in forward cyclic order, endpoints included.
    pub vertices: Vec<usize>,
    /// The sub-triangulation on those vertices, absent for a single edge.
    pub graph: Option<OuterplanarTriangulation>,
}

impl Side {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// A chord `xy` cutting off a pentagon, the triangle `xyz` on its other side, and the
/// two pieces hanging off `zx` and `zy`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortChordDecomposition {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    /// Pentagon vertices `[x, p, q, r, y]` along the arc; `q` is adjacent to both `x` and `y`.
    pub g5: [usize; 5],
    pub g_prime: Side,
    pub g_double_prime: Side,
}

impl ShortChordDecomposition {
    pub fn orders(&self) -> (usize, usize) {
        (self.g_prime.order(), self.g_double_prime.order())
    }
}

/// Decomposes `g` around a chord with a side of length 4.
///
/// Requires that no chord of `g` has a side of length 3; under that condition the
/// pentagon is a fan from its middle vertex and both chord endpoints have degree 3 in it.
pub fn short_chord_decomposition(
    g: &OuterplanarTriangulation,
    xy: Chord,
) -> Result<ShortChordDecomposition> {
    let lengths = g.chord_lengths(xy)?;
    let chord = lengths.chord;
    let n = g.order();
    if let Some(&c) = g
        .chords()
        .iter()
        .find(|c| c.1 - c.0 == 3 || n - (c.1 - c.0) == 3)
    {
        return Err(Error::Distance3ChordExists(c));
    }
    let (s, e) = if lengths.side_lengths.0 == 4 {
        (chord.0, chord.1)
    } else if lengths.side_lengths.1 == 4 {
        (chord.1, chord.0)
    } else {
        return Err(Error::NotDistance4(chord));
    };
    let at = |k: usize| (s + k) % n;
    if !(g.has_chord(s, at(2)) && g.has_chord(at(2), e)) {
        return Err(Error::G5ShapeViolation(chord));
    }
    let adj = g.adjacency();
    let z = face_apexes(&adj, n, s, e)
        .1
        .ok_or_else(|| Error::InternalContradiction(format!("no outer face on {chord}")))?;
    let e_side = arc_side(g, e, z);
    let s_side = arc_side(g, z, s);
    let s_is_x = match s_side.order().cmp(&e_side.order()) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => s < e,
    };
    Ok(if s_is_x {
        ShortChordDecomposition {
            x: s,
            y: e,
            z,
            g5: [s, at(1), at(2), at(3), e],
            g_prime: s_side,
            g_double_prime: e_side,
        }
    } else {
        ShortChordDecomposition {
            x: e,
            y: s,
            z,
            g5: [e, at(3), at(2), at(1), s],
            g_prime: e_side,
            g_double_prime: s_side,
        }
    })
}

/// The polygon on the forward arc `from -> to`.
fn arc_side(g: &OuterplanarTriangulation, from: usize, to: usize) -> Side {
    let n = g.order();
    let len = cyclic_offset(n, from, to);
    let vertices: Vec<usize> = (0..=len).map(|k| (from + k) % n).collect();
    let graph = (vertices.len() >= 3).then(|| {
        let closing = Chord::new(from, to);
        let chords = g
            .chords()
            .iter()
            .filter(|&&c| c != closing)
            .filter_map(|c| {
                let (a, b) = (cyclic_offset(n, from, c.0), cyclic_offset(n, from, c.1));
                (a <= len && b <= len).then(|| Chord::new(a, b))
            })
            .collect();
        OuterplanarTriangulation::from_unsorted_unchecked(vertices.len(), chords)
    });
    Side { vertices, graph }
}
