mod common;

use common::*;
use ftsurf::classify::{classify_graph, ClassifyOptions};
use ftsurf::graph::{self, families::*, CubicGraph};
use ftsurf::perm::PermGroup;
use proptest::prelude::*;

fn graph6(g: &CubicGraph) -> String {
    let n = g.order();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i as u32, j as u32));
        }
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for c in bits.chunks(6) {
        let mut x = 0u8;
        for k in 0..6 {
            x = x << 1 | u8::from(*c.get(k).unwrap_or(&false));
        }
        s.push((x + 63) as char);
    }
    s
}

fn two_triangles() -> CubicGraph {
    let e = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 7), (3, 8), (5, 7), (6, 8), (7, 8)];
    CubicGraph::from_edges(8, &e.map(|(a, b)| (a - 1, b - 1))).unwrap()
}

#[test]
fn automorphism_orders_match_brute_force() {
    let mut graphs = vec![complete4(), k33(), prism(3), prism(4), mobius_ladder(8), two_triangles()];
    // the remaining cubic graphs on 8 nodes
    graphs.push(
        CubicGraph::from_edges(
            8,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 6), (3, 7), (4, 6), (4, 7), (5, 6), (5, 7)],
        )
        .unwrap(),
    );
    graphs.push(
        CubicGraph::from_edges(
            8,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
        )
        .unwrap(),
    );
    let mut r = rng(7);
    for g in graphs {
        let h = g.relabel(&random_perm(g.order(), &mut r));
        let want = brute_force_aut_order(&g) as u128;
        assert_eq!(graph::automorphism_group(&g).order(), want);
        assert_eq!(graph::automorphism_group(&h).order(), want);
    }
}

#[test]
fn node_transitivity() {
    assert!(!graph::is_node_transitive(&two_triangles()));
    for (name, g) in small_corpus() {
        assert!(graph::is_node_transitive(&g), "{name}");
    }
}

#[test]
fn petersen_graph6_round_trip() {
    let text = graph6(&petersen());
    let g = CubicGraph::parse(&text).unwrap();
    assert_eq!(g.order(), 10);
    assert_eq!(g.edges().len(), 15);
    assert_eq!(g, petersen());
    assert_eq!(petersen().to_graph6(), text);
}

#[test]
fn prism_arc_orbits() {
    let g = prism(3);
    let aut = graph::automorphism_group(&g);
    assert_eq!(graph::arc_orbit_colouring(&g, &aut).unwrap().sizes(), &[6, 3]);
}

#[test]
fn mgon_graphs_give_no_surfaces() {
    let opts = ClassifyOptions { mgon_shortcut: false, ..ClassifyOptions::default() };
    for (m, k) in [(4, 2), (5, 2), (6, 2), (8, 2)] {
        let g = graph::generalized_mgon(m, k).unwrap();
        assert_eq!(graph::detect_generalized_mgon(&g, &graph::automorphism_group(&g)), Some((m, k)));
        assert!(classify_graph(&g, &opts).results().is_empty(), "G_({m},{k})");
    }
    for g in [complete4(), petersen()] {
        assert_eq!(graph::detect_generalized_mgon(&g, &graph::automorphism_group(&g)), None);
    }
}

fn corpus_and_seed() -> impl Strategy<Value = (usize, u64)> {
    (0..small_corpus().len(), any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonical_form_ignores_labels((i, seed) in corpus_and_seed()) {
        let (_, g) = &small_corpus()[i];
        let mut r = rng(seed);
        let h = g.relabel(&random_perm(g.order(), &mut r));
        prop_assert_eq!(graph::canonical_form(g), graph::canonical_form(&h));
        prop_assert!(graph::is_isomorphic(g, &h));
    }

    #[test]
    fn arc_orbits_partition_edges((i, seed) in corpus_and_seed()) {
        let (_, g) = &small_corpus()[i];
        let aut = graph::automorphism_group(g);
        let elems = aut.elements(1_000_000).unwrap();
        let mut r = rng(seed);
        let gens: Vec<_> = (0..2).map(|_| elems[rand::Rng::gen_range(&mut r, 0..elems.len())].clone()).collect();
        let h = PermGroup::new(g.order(), gens).unwrap();
        let k = graph::arc_orbit_colouring(g, &h).unwrap();
        prop_assert_eq!(k.sizes().iter().sum::<usize>(), 3 * g.order() / 2);
        let mut counts = vec![0usize; k.num_colours()];
        for (u, v) in g.edges() {
            let c = k.colour(u, v);
            counts[c as usize - 1] += 1;
            for p in h.generators() {
                prop_assert_eq!(k.colour(p.apply(u), p.apply(v)), c);
            }
        }
        prop_assert_eq!(counts, k.sizes().to_vec());
    }
}
