use std::collections::HashMap;

use super::{rotation, AsAdjacency, Chord, OuterplanarTriangulation};

/// The tree of bounded triangular faces; two faces are adjacent when they share a chord.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakDualTree {
    faces: Vec<[usize; 3]>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize, Chord)>,
}

impl WeakDualTree {
    pub(super) fn of(g: &OuterplanarTriangulation) -> Self {
        let n = g.order();
        let adj = g.adjacency();
        let mut faces = Vec::with_capacity(n - 2);
        for v in 0..n {
            let rot = rotation(&adj, v);
            for w in rot.windows(2) {
                if v < w[0] && v < w[1] {
                    let mut f = [v, w[0], w[1]];
                    f.sort_unstable();
                    faces.push(f);
                }
            }
        }
        faces.sort_unstable();

        let mut by_chord: HashMap<Chord, Vec<usize>> = HashMap::with_capacity(n);
        for (i, f) in faces.iter().enumerate() {
            for (a, b) in [(f[0], f[1]), (f[1], f[2]), (f[0], f[2])] {
                if g.has_chord(a, b) {
                    by_chord.entry(Chord(a, b)).or_default().push(i);
                }
            }
        }
        let mut adjacency = vec![Vec::new(); faces.len()];
        let mut edges = Vec::with_capacity(g.chords().len());
        for &c in g.chords() {
            let fs = &by_chord[&c];
            debug_assert_eq!(fs.len(), 2);
            let (a, b) = (fs[0].min(fs[1]), fs[0].max(fs[1]));
            adjacency[a].push(b);
            adjacency[b].push(a);
            edges.push((a, b, c));
        }
        for l in &mut adjacency {
            l.sort_unstable();
        }
        edges.sort_unstable();
        WeakDualTree {
            faces,
            adjacency,
            edges,
        }
    }

    /// Faces as sorted vertex triples, in lexicographic order.
    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn neighbors(&self, f: usize) -> &[usize] {
        &self.adjacency[f]
    }

    /// Dual edges `(face, face, shared chord)` with `face < face`.
    pub fn edges(&self) -> &[(usize, usize, Chord)] {
        &self.edges
    }

    pub fn chord_between(&self, f: usize, h: usize) -> Option<Chord> {
        let (a, b) = (f.min(h), f.max(h));
        self.edges
            .iter()
            .find(|e| e.0 == a && e.1 == b)
            .map(|e| e.2)
    }

    pub fn face_index(&self, face: [usize; 3]) -> Option<usize> {
        let mut f = face;
        f.sort_unstable();
        self.faces.binary_search(&f).ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn leaf_count(&self) -> usize {
        if self.faces.len() == 1 {
            return 1;
        }
        self.adjacency.iter().filter(|l| l.len() == 1).count()
    }

    /// Connected with `len - 1` edges.
    pub fn is_tree(&self) -> bool {
        if self.faces.is_empty() || self.edges.len() + 1 != self.faces.len() {
            return false;
        }
        let mut seen = vec![false; self.faces.len()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(f) = stack.pop() {
            for &h in &self.adjacency[f] {
                if !seen[h] {
                    seen[h] = true;
                    count += 1;
                    stack.push(h);
                }
            }
        }
        count == self.faces.len()
    }

    /// For every face, the sizes of the components left after deleting it.
    pub fn removal_components(&self) -> Vec<Vec<usize>> {
        let m = self.faces.len();
        let mut parent = vec![usize::MAX; m];
        let mut order = Vec::with_capacity(m);
        let mut stack = vec![0];
        parent[0] = 0;
        while let Some(f) = stack.pop() {
            order.push(f);
            for &h in &self.adjacency[f] {
                if parent[h] == usize::MAX {
                    parent[h] = f;
                    stack.push(h);
                }
            }
        }
        let mut size = vec![1usize; m];
        for &f in order.iter().rev().filter(|&&f| f != 0) {
            size[parent[f]] += size[f];
        }
        (0..m)
            .map(|f| {
                let mut comps: Vec<usize> = self.adjacency[f]
                    .iter()
                    .filter(|&&h| f == 0 || h != parent[f])
                    .map(|&h| size[h])
                    .collect();
                if f != 0 {
                    comps.push(m - size[f]);
                }
                comps.sort_unstable();
                comps
            })
            .collect()
    }

    /// Sizes of the two subtrees separated by the dual edge through `chord`.
    pub fn split_sizes(&self, chord: Chord) -> Option<(usize, usize)> {
        let &(a, b, _) = self.edges.iter().find(|e| e.2 == chord)?;
        let mut seen = vec![false; self.faces.len()];
        seen[a] = true;
        seen[b] = true;
        let mut stack = vec![a];
        let mut count = 1;
        while let Some(f) = stack.pop() {
            for &h in &self.adjacency[f] {
                if !seen[h] {
                    seen[h] = true;
                    count += 1;
                    stack.push(h);
                }
            }
        }
        Some((count, self.faces.len() - count))
    }
}
