use std::collections::HashSet;

use proptest::prelude::*;

use sunchaser_core::format::{graph_from_json, graph_to_json, AnyGraph};
use sunchaser_core::generate::{
    enumerate_triangulations, random_hamiltonian, random_triangulation, triangulation_count,
};
use sunchaser_core::graph::{
    cut_along_chord, glue, merge_on_edge, short_chord_decomposition, AsAdjacency, Chord,
    OuterplanarTriangulation,
};
use sunchaser_core::recognize::find_short_chord;
use sunchaser_core::Error;

fn triangulation(max_n: usize) -> impl Strategy<Value = OuterplanarTriangulation> {
    (3..=max_n, any::<u64>()).prop_map(|(n, seed)| random_triangulation(n, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sampled_triangulations_are_valid(g in triangulation(60)) {
        let n = g.order();
        let again = OuterplanarTriangulation::new(n, g.chords().iter().map(|c| (c.0, c.1)));
        prop_assert_eq!(again.as_ref(), Ok(&g));
        prop_assert_eq!(g.edges().count(), 2 * n - 3);
        prop_assert_eq!(g.vertex_degrees().iter().sum::<usize>(), 4 * n - 6);
        prop_assert_eq!(g.adjacency().edge_count(), 2 * n - 3);
        for &c in g.chords() {
            let l = g.chord_lengths(c).unwrap();
            prop_assert_eq!(l.side_lengths.0 + l.side_lengths.1, n);
            prop_assert!(l.side_lengths.0 >= 2 && l.side_lengths.1 >= 2);
        }
    }

    #[test]
    fn weak_dual_shape(g in triangulation(60)) {
        let n = g.order();
        let t = g.weak_dual();
        prop_assert_eq!(t.len(), n - 2);
        prop_assert!(t.is_tree());
        prop_assert!(t.max_degree() <= 3);
        prop_assert!(t.leaf_count() <= n / 2 || n == 3);
        for f in t.faces() {
            prop_assert!(g.has_edge(f[0], f[1]) && g.has_edge(f[1], f[2]) && g.has_edge(f[0], f[2]));
        }
        for &(a, b, c) in t.edges() {
            let (fa, fb) = (t.faces()[a], t.faces()[b]);
            prop_assert!(fa.contains(&c.0) && fa.contains(&c.1));
            prop_assert!(fb.contains(&c.0) && fb.contains(&c.1));
        }
    }

    #[test]
    fn cutting_splits_order_and_faces(g in triangulation(40), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.order() >= 4);
        let c = *pick.get(g.chords());
        let (a, b) = cut_along_chord(&g, c).unwrap();
        prop_assert_eq!(a.graph.order() + b.graph.order(), g.order() + 2);
        let (fa, fb) = g.weak_dual().split_sizes(c).unwrap();
        let mut sizes = [fa, fb];
        sizes.sort_unstable();
        let mut pieces = [a.graph.order() - 2, b.graph.order() - 2];
        pieces.sort_unstable();
        prop_assert_eq!(sizes, pieces);
        for piece in [&a, &b] {
            for &pc in piece.graph.chords() {
                prop_assert!(g.has_chord(piece.labels[pc.0], piece.labels[pc.1]));
            }
        }
    }

    #[test]
    fn rotation_preserves_structure(g in triangulation(40), shift in 0usize..40) {
        let r = g.rotated(shift);
        let mut d = g.vertex_degrees();
        d.rotate_right(shift % g.order());
        prop_assert_eq!(r.vertex_degrees(), d);
        prop_assert!(OuterplanarTriangulation::new(r.order(), r.chords().iter().map(|c| (c.0, c.1))).is_ok());
    }

    #[test]
    fn json_round_trip(g in triangulation(30), seed in any::<u64>()) {
        let doc = graph_to_json(&AnyGraph::Outerplanar(g.clone()));
        prop_assert_eq!(graph_from_json(&doc).unwrap(), AnyGraph::Outerplanar(g.clone()));
        let n = g.order().max(4);
        let ht = AnyGraph::Hamiltonian(random_hamiltonian(n, seed).unwrap());
        let doc = graph_to_json(&ht);
        prop_assert_eq!(graph_to_json(&graph_from_json(&doc).unwrap()), doc);
    }

    #[test]
    fn random_hamiltonian_is_simple(n in 4usize..300, seed in any::<u64>()) {
        let ht = random_hamiltonian(n, seed).unwrap();
        let inner: HashSet<Chord> = ht.inner().chords().iter().copied().collect();
        prop_assert!(ht.outer().chords().iter().all(|c| !inner.contains(c)));
        prop_assert!(ht.vertex_degrees().iter().all(|&d| d >= 3));
        prop_assert_eq!(ht.adjacency().edge_count(), 3 * n - 6);
    }

    #[test]
    fn short_chord_decomposition_shape(g in triangulation(40)) {
        prop_assume!(g.order() >= 6);
        let s = find_short_chord(&g).unwrap();
        prop_assert!(s.length == 3 || s.length == 4);
        if s.length == 3 {
            prop_assert!(matches!(
                short_chord_decomposition(&g, s.chord),
                Err(Error::Distance3ChordExists(_))
            ));
            return Ok(());
        }
        let d = short_chord_decomposition(&g, s.chord).unwrap();
        let (a, b) = d.orders();
        prop_assert!(a <= b);
        prop_assert_eq!(a + b, g.order() - 2);
        let adj = g.adjacency();
        let [x, p, q, r, y] = d.g5;
        prop_assert!(adj.has_edge(q, x) && adj.has_edge(q, y));
        let inside = |v: usize| d.g5.iter().filter(|&&u| u != v && adj.has_edge(u, v)).count();
        prop_assert_eq!((inside(x), inside(y), inside(p), inside(r), inside(q)), (3, 3, 2, 2, 4));
        prop_assert!(adj.has_edge(d.z, x) && adj.has_edge(d.z, y));
    }
}

#[test]
fn merge_inverts_cut() {
    for n in 4..=12 {
        for g in enumerate_triangulations(n).unwrap() {
            for &c in g.chords() {
                let (a, b) = cut_along_chord(&g, c).unwrap();
                let (la, lb) = (a.graph.order(), b.graph.order());
                let m = merge_on_edge(&a.graph, (0, la - 1), &b.graph, (lb - 1, 0)).unwrap();
                let mut back = vec![usize::MAX; n];
                for (v, &mv) in m.first.iter().enumerate() {
                    back[mv] = a.labels[v];
                }
                for (v, &mv) in m.second.iter().enumerate() {
                    back[mv] = b.labels[v];
                }
                let mut chords: Vec<Chord> = m
                    .graph
                    .chords()
                    .iter()
                    .map(|c| Chord::new(back[c.0], back[c.1]))
                    .collect();
                chords.sort_unstable();
                assert_eq!(chords, g.chords(), "n={n} chord {c}");
                for v in 0..m.graph.order() {
                    let (u, w) = (back[v], back[(v + 1) % m.graph.order()]);
                    assert!(g.has_edge(u, w) && !g.has_chord(u, w));
                }
            }
        }
    }
}

#[test]
fn glue_succeeds_exactly_on_disjoint_pairs() {
    for n in 4..=8 {
        let all: Vec<_> = enumerate_triangulations(n).unwrap().collect();
        for a in &all {
            for b in &all {
                let shared = a.chords().iter().find(|c| b.has_chord(c.0, c.1)).copied();
                match (glue(a, b), shared) {
                    (Ok(_), None) => {}
                    (Err(Error::SharedChord(c)), Some(s)) => assert_eq!(c, s),
                    (r, s) => panic!("glue {r:?} with shared chord {s:?}"),
                }
            }
        }
    }
}

#[test]
fn enumeration_is_complete_and_distinct() {
    for n in 3..=11 {
        let all: Vec<_> = enumerate_triangulations(n).unwrap().collect();
        assert_eq!(all.len() as u64, triangulation_count(n).unwrap());
        let set: HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
    }
}

#[test]
fn shards_partition_the_enumeration() {
    let n = 10;
    let whole: Vec<_> = enumerate_triangulations(n).unwrap().collect();
    for m in [1, 3, 7, 64] {
        let cursor = enumerate_triangulations(n).unwrap();
        let joined: Vec<_> = cursor.split(m).into_iter().flatten().collect();
        assert_eq!(joined, whole, "{m} shards");
    }
}

#[test]
fn sampler_is_deterministic_per_seed() {
    for seed in 0..20 {
        assert_eq!(
            random_triangulation(50, seed).unwrap(),
            random_triangulation(50, seed).unwrap()
        );
        assert_eq!(
            random_hamiltonian(50, seed).unwrap(),
            random_hamiltonian(50, seed).unwrap()
        );
    }
}
