//! JSON documents for graphs and colorings, and Graphviz DOT export.
//!
//! Graph JSON keeps a fixed key order and sorted chords, so parsing and re-emitting a
//! document reproduces it byte for byte:
//!
//! ```text
//! {"kind":"outerplanar","n":5,"chords":[[0,2],[0,3]]}
//! {"kind":"hamiltonian","n":6,"inner":[[0,2],[0,4],[2,4]],"outer":[[1,3],[1,5],[3,5]]}
//! ```

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::color::Coloring;
use crate::error::{Error, Result};
use crate::graph::{
    glue, is_cycle_edge, Adjacency, AsAdjacency, Chord, HamiltonianTriangulation,
    OuterplanarTriangulation,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum Document {
    Outerplanar {
        n: usize,
        chords: Vec<[usize; 2]>,
    },
    Hamiltonian {
        n: usize,
        inner: Vec<[usize; 2]>,
        outer: Vec<[usize; 2]>,
    },
}

/// Either kind of graph a document can hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Outerplanar(OuterplanarTriangulation),
    Hamiltonian(HamiltonianTriangulation),
}

impl AnyGraph {
    pub fn order(&self) -> usize {
        match self {
            AnyGraph::Outerplanar(g) => g.order(),
            AnyGraph::Hamiltonian(h) => h.order(),
        }
    }

    /// Edges as `(lo, hi, is_chord)`, sorted.
    fn sorted_edges(&self) -> Vec<(usize, usize, bool)> {
        let n = self.order();
        let raw: Vec<(usize, usize)> = match self {
            AnyGraph::Outerplanar(g) => g.edges().collect(),
            AnyGraph::Hamiltonian(h) => h.edges().collect(),
        };
        let mut edges: Vec<(usize, usize, bool)> = raw
            .into_iter()
        .map(|(a, b)| (a, b, !is_cycle_edge(n, a, b)))
        .collect();
        edges.sort_unstable();
        edges
    }
}

impl AsAdjacency for AnyGraph {
    fn adjacency(&self) -> Adjacency {
        match self {
            AnyGraph::Outerplanar(g) => g.adjacency(),
            AnyGraph::Hamiltonian(h) => h.adjacency(),
        }
    }
}

impl From<OuterplanarTriangulation> for AnyGraph {
    fn from(g: OuterplanarTriangulation) -> Self {
        AnyGraph::Outerplanar(g)
    }
}

impl From<HamiltonianTriangulation> for AnyGraph {
    fn from(h: HamiltonianTriangulation) -> Self {
        AnyGraph::Hamiltonian(h)
    }
}

fn pairs(chords: &[Chord]) -> Vec<[usize; 2]> {
    chords.iter().map(|c| [c.0, c.1]).collect()
}

fn bad(e: serde_json::Error) -> Error {
    Error::BadFormat(e.to_string())
}

pub fn graph_to_json(g: &AnyGraph) -> String {
    let doc = match g {
        AnyGraph::Outerplanar(g) => Document::Outerplanar {
            n: g.order(),
            chords: pairs(g.chords()),
        },
        AnyGraph::Hamiltonian(h) => Document::Hamiltonian {
            n: h.order(),
            inner: pairs(h.inner().chords()),
            outer: pairs(h.outer().chords()),
        },
    };
    serde_json::to_string(&doc).expect("graph documents always serialize")
}

pub fn outerplanar_to_json(g: &OuterplanarTriangulation) -> String {
    graph_to_json(&AnyGraph::Outerplanar(g.clone()))
}

/// Parses and fully validates a graph document.
pub fn graph_from_json(text: &str) -> Result<AnyGraph> {
    let doc: Document = serde_json::from_str(text).map_err(bad)?;
    let tuples = |v: Vec<[usize; 2]>| v.into_iter().map(|[a, b]| (a, b));
    Ok(match doc {
        Document::Outerplanar { n, chords } => {
            AnyGraph::Outerplanar(OuterplanarTriangulation::new(n, tuples(chords))?)
        }
        Document::Hamiltonian { n, inner, outer } => {
            let inner = OuterplanarTriangulation::new(n, tuples(inner))?;
            let outer = OuterplanarTriangulation::new(n, tuples(outer))?;
            AnyGraph::Hamiltonian(glue(&inner, &outer)?)
        }
    })
}

pub fn coloring_to_json(c: &Coloring) -> String {
    serde_json::to_string(c).expect("colorings always serialize")
}

pub fn coloring_from_json(text: &str) -> Result<Coloring> {
    serde_json::from_str(text).map_err(bad)
}

/// Deterministic DOT: sorted nodes and edges, cycle edges solid, chords dashed, and
/// node fill white/black by class when a 2-class coloring is given.
pub fn to_dot(g: &AnyGraph, coloring: Option<&Coloring>) -> Result<String> {
    let n = g.order();
    if let Some(c) = coloring {
        if c.colors.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: c.colors.len(),
            });
        }
    }
    let mut out = String::new();
    out.push_str("graph G {\n");
    out.push_str("  layout=circo;\n");
    out.push_str("  node [shape=circle, style=filled];\n");
    for v in 0..n {
        match coloring.map(|c| c.colors[v]) {
            None => writeln!(out, "  {v};").unwrap(),
            Some(0) => writeln!(out, "  {v} [fillcolor=white, fontcolor=black];").unwrap(),
            Some(1) => writeln!(out, "  {v} [fillcolor=black, fontcolor=white];").unwrap(),
            Some(k) => writeln!(out, "  {v} [fillcolor=\"/set19/{}\"];", k as usize % 9 + 1).unwrap(),
        }
    }
    for (a, b, chord) in g.sorted_edges() {
        if chord {
            writeln!(out, "  {a} -- {b} [style=dashed];").unwrap();
        } else {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}
