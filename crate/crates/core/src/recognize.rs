//! Degree-2 and central vertices, generalized sun recognition, and the searches for
//! the short chord and reduction face that every large enough triangulation has.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cyclic_offset, Adjacency, AsAdjacency, Chord, OuterplanarTriangulation};

/// Recognizer output with the witnessing vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SunVerdict {
    pub is_generalized_sun: bool,
    pub degree_two: Vec<usize>,
    pub central: Vec<usize>,
    pub n_mod_4: usize,
    /// Cycle parity class (0 = even labels, 1 = odd) holding every degree-2 and
    /// central vertex; set only for generalized suns.
    pub parity: Option<usize>,
}

impl SunVerdict {
    pub fn special_count(&self) -> usize {
        self.degree_two.len() + self.central.len()
    }

    pub fn is_special(&self, v: usize) -> bool {
        self.degree_two.binary_search(&v).is_ok() || self.central.binary_search(&v).is_ok()
    }
}

pub fn degree_two_vertices(g: &OuterplanarTriangulation) -> Vec<usize> {
    g.vertex_degrees()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 2)
        .map(|(v, _)| v)
        .collect()
}

/// Vertices with no degree-2 vertex in their closed neighborhood whose neighbors all
/// sit at positions congruent to 1 mod 4 when the cycle is indexed from them.
///
/// Empty unless `n = 2 (mod 4)`: the two cycle neighbors sit at positions 1 and `n - 1`.
pub fn central_vertices(g: &OuterplanarTriangulation) -> Vec<usize> {
    if g.order() % 4 != 2 {
        return Vec::new();
    }
    central_in(&g.adjacency())
}

pub(crate) fn central_in(adj: &Adjacency) -> Vec<usize> {
    let n = adj.order();
    if n % 4 != 2 {
        return Vec::new();
    }
    (0..n)
        .filter(|&v| {
            adj.degree(v) != 2
                && adj.neighbors(v).iter().all(|&u| {
                    adj.degree(u) != 2 && cyclic_offset(n, v, u) % 4 == 1
                })
        })
        .collect()
}

pub fn classify_generalized_sun(g: &OuterplanarTriangulation) -> SunVerdict {
    classify_adjacency(&g.adjacency())
}

/// Same as [`classify_generalized_sun`] for a caller that already holds the adjacency
/// of a triangulated polygon.
pub(crate) fn classify_adjacency(adj: &Adjacency) -> SunVerdict {
    let n = adj.order();
    let degree_two: Vec<usize> = (0..n).filter(|&v| adj.degree(v) == 2).collect();
    let central = central_in(adj);
    let is_generalized_sun = n % 4 == 2 && 2 * (degree_two.len() + central.len()) == n;
    let parity = if is_generalized_sun {
        let p = degree_two.first().copied().unwrap_or(0) % 2;
        let one_class = degree_two.iter().chain(&central).all(|v| v % 2 == p);
        debug_assert!(one_class, "special vertices of a generalized sun span both parities");
        one_class.then_some(p)
    } else {
        None
    };
    SunVerdict {
        is_generalized_sun,
        degree_two,
        central,
        n_mod_4: n % 4,
        parity,
    }
}

/// A chord with one side of length 3 or 4, together with that side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortChord {
    pub chord: Chord,
    /// Length of the qualifying side.
    pub length: usize,
    /// The side runs forward from this endpoint to the other one.
    pub arc_start: usize,
}

/// Finds a chord with a side of length 3 or 4, preferring length 3, then the
/// lexicographically smallest chord.
pub fn find_short_chord(g: &OuterplanarTriangulation) -> Result<ShortChord> {
    let n = g.order();
    if n < 6 {
        return Err(Error::OrderTooSmall { n, min: 6 });
    }
    for want in [3, 4] {
        for &c in g.chords() {
            let inner = c.1 - c.0;
            if inner == want {
                return Ok(ShortChord {
                    chord: c,
                    length: want,
                    arc_start: c.0,
                });
            }
            if n - inner == want {
                return Ok(ShortChord {
                    chord: c,
                    length: want,
                    arc_start: c.1,
                });
            }
        }
    }
    Err(Error::InternalContradiction(format!(
        "no chord with a side of length 3 or 4 in a triangulation of order {n}"
    )))
}

/// Finds the lexicographically smallest face whose deletion from the weak dual leaves
/// at most one component larger than 3 and at least one of size 2 or 3.
pub fn find_reduction_face(g: &OuterplanarTriangulation) -> Result<[usize; 3]> {
    let n = g.order();
    if n < 5 {
        return Err(Error::OrderTooSmall { n, min: 5 });
    }
    let dual = g.weak_dual();
    dual.removal_components()
        .iter()
        .position(|comps| {
            comps.iter().filter(|&&s| s > 3).count() <= 1
                && comps.iter().any(|&s| s == 2 || s == 3)
        })
        .map(|f| dual.faces()[f])
        .ok_or_else(|| {
            Error::InternalContradiction(format!("no reduction face in order {n}"))
        })
}

/// Number of chords with an endpoint at a central vertex of a generalized sun.
pub fn central_chord_count(g: &OuterplanarTriangulation) -> Result<usize> {
    let verdict = classify_generalized_sun(g);
    if !verdict.is_generalized_sun {
        return Err(Error::NotGeneralizedSun);
    }
    Ok(g
        .chords()
        .iter()
        .filter(|c| {
            verdict.central.binary_search(&c.0).is_ok()
                || verdict.central.binary_search(&c.1).is_ok()
        })
        .count())
}
