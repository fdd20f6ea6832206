mod common;

use std::collections::BTreeSet;

use common::*;
use ftsurf::cdc;
use ftsurf::classify::{self, classify_graph, Classification, ClassifyOptions, SkipReason, Subtype};
use ftsurf::graph::{self, families::*, CubicGraph};
use ftsurf::perm;
use ftsurf::surface::SurfaceForm;
use proptest::prelude::*;

fn expected(name: &str) -> Subtype {
    match name {
        "x31" => Subtype::T31,
        "x22" => Subtype::T22,
        "x16" => Subtype::T16,
        "x21" => Subtype::T21(1),
        "y21" => Subtype::T21(2),
        "z21" => Subtype::T21(3),
        "x12" => Subtype::T12,
        "x13" => Subtype::T13(1),
        "y13" => Subtype::T13(2),
        "x11" => Subtype::T11(1),
        "y11" => Subtype::T11(2),
        "xbar11" => Subtype::T11(3),
        "ybar11" => Subtype::T11(4),
        _ => unreachable!(),
    }
}

fn forms(g: &CubicGraph, opts: &ClassifyOptions) -> BTreeSet<SurfaceForm> {
    classify_graph(g, opts).results().iter().map(|r| r.form.clone()).collect()
}

fn check_results(g: &CubicGraph, c: &Classification) {
    for r in c.results() {
        let x = &r.surface;
        assert!(x.is_face_transitive());
        assert!(x.lambda_image().same_group(&r.group));
        let (v, s) = r.subtype.vs();
        let vf = x.vertex_face_type().unwrap();
        assert_eq!((vf.v, vf.s), (v, s));
        assert_eq!(r.group.order(), s as u128 * x.num_faces() as u128);
        assert_eq!(classify::subtype_of(x).unwrap(), r.subtype);
        assert!(graph::is_isomorphic(&x.face_graph(), g));
    }
}

#[test]
fn fixtures_have_their_subtypes() {
    for name in FIXTURES {
        let x = fixture(name);
        assert_eq!(classify::subtype_of(&x).unwrap(), expected(name), "{name}");
        let g = x.face_graph();
        assert!(classify::verify_construction(&g, &x.lambda_image(), &x.vertex_defining_cdc(), &x, expected(name)));
    }
}

#[test]
fn fixtures_are_reconstructed() {
    for name in FIXTURES {
        let x = fixture(name);
        let g = x.face_graph();
        let opts = ClassifyOptions { mgon_shortcut: false, ..ClassifyOptions::default() };
        let c = classify_graph(&g, &opts);
        check_results(&g, &c);
        let form = x.canonical_form();
        let hit: Vec<_> = c.results().iter().filter(|r| r.form == form).collect();
        assert_eq!(hit.len(), 1, "{name}");
        assert_eq!(hit[0].subtype, expected(name), "{name}");
        let wide = ClassifyOptions { wide_pi_search: true, wide_sigma: true, ..opts };
        assert_eq!(forms(&g, &wide), c.results().iter().map(|r| r.form.clone()).collect(), "{name}");
    }
}

#[test]
fn agrees_with_exhaustive_search() {
    let mut corpus = small_corpus();
    corpus.push(("GP(8,3)".into(), generalized_petersen(8, 3)));
    corpus.push(("truncated tetrahedron".into(), lcf(12, &[2, 6, -2])));
    corpus.push(("Pappus".into(), lcf(18, &[5, 7, -7, 7, -7, -5])));
    for (name, g) in corpus {
        let c = classify_graph(&g, &ClassifyOptions::default());
        check_results(&g, &c);
        let oracle = classify::brute_force_surfaces(&g, cdc::DEFAULT_CYCLE_CAP).unwrap();
        let want: BTreeSet<SurfaceForm> = oracle.surfaces.iter().map(|(f, _)| f.clone()).collect();
        assert_eq!(forms(&g, &ClassifyOptions::default()), want, "{name}");
    }
}

#[test]
fn petersen_has_one_surface() {
    let oracle = classify::brute_force_surfaces(&petersen(), cdc::DEFAULT_CYCLE_CAP).unwrap();
    assert_eq!(oracle.surfaces.len(), 1);
    let x = &oracle.surfaces[0].1;
    assert_eq!((x.num_vertices(), x.euler_characteristic()), (6, 1));
    let c = classify_graph(&petersen(), &ClassifyOptions::default());
    assert_eq!(c.results().len(), 1);
    assert_eq!(c.results()[0].subtype, Subtype::T16);
}

#[test]
fn dyck_graph_gives_two_surfaces_for_one_group() {
    let g = lcf(32, &[5, -5, 13, -13]);
    let aut = graph::automorphism_group(&g);
    let hs = perm::transitive_subgroups(&aut, 6, 100_000).unwrap();
    assert_eq!(hs.len(), 1);
    assert_eq!(hs[0].order(), 192);
    let found = classify::construct_16(&g, &hs[0], &ClassifyOptions::default());
    assert_eq!(found.len(), 2);
    assert!(!found[0].surface.is_isomorphic(&found[1].surface));
    let mut shapes: Vec<_> =
        found.iter().map(|r| (r.surface.num_vertices(), r.surface.euler_characteristic())).collect();
    shapes.sort();
    // the 16-vertex torus and the 12-vertex genus-3 surface
    assert_eq!(shapes, vec![(12, -4), (16, 0)]);
}

#[test]
fn conjugate_groups_give_isomorphic_surfaces() {
    let opts = ClassifyOptions::default();
    for (g, s) in [(heawood(), 3u128), (lcf(32, &[5, -5, 13, -13]), 6), (fixture("z21").face_graph(), 1)] {
        let aut = graph::automorphism_group(&g);
        let elems = aut.elements(100_000).unwrap();
        for h in perm::transitive_subgroups(&aut, s, 100_000).unwrap() {
            let x = elems
                .iter()
                .find(|x| !h.same_group(&h.conjugate(x)))
                .cloned()
                .unwrap_or_else(|| elems[elems.len() / 2].clone());
            let k = h.conjugate(&x);
            assert!(perm::are_conjugate(&aut, &h, &k, 100_000).unwrap());
            let a: BTreeSet<_> = classify::construct_all(&g, &h, &aut, &opts).into_iter().map(|r| r.form).collect();
            let b: BTreeSet<_> = classify::construct_all(&g, &k, &aut, &opts).into_iter().map(|r| r.form).collect();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn g93_has_no_surfaces() {
    let g = generalized_petersen(9, 3);
    let c = classify_graph(&g, &ClassifyOptions::default());
    assert!(c.results().is_empty());
    assert!(matches!(c, Classification::Skipped(SkipReason::NotNodeTransitive)));
}

#[test]
fn group_cap_skips() {
    let c = classify_graph(&heawood(), &ClassifyOptions { max_aut: 100, ..ClassifyOptions::default() });
    assert_eq!(c.results().len(), 0);
    assert!(matches!(c, Classification::Skipped(SkipReason::GroupTooLarge { order: 336, cap: 100 })));
    let g = graph::generalized_mgon(8, 2).unwrap();
    assert!(matches!(
        classify_graph(&g, &ClassifyOptions::default()),
        Classification::Skipped(SkipReason::GeneralizedMgon { m: 8, k: 2 })
    ));
}

#[test]
fn subtype_filter() {
    let g = fixture("y13").face_graph();
    let opts = ClassifyOptions { subtypes: Some(vec![Subtype::T13(2)]), ..ClassifyOptions::default() };
    let c = classify_graph(&g, &opts);
    assert_eq!(c.results().len(), 1);
    assert_eq!(c.results()[0].subtype, Subtype::T13(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relabelling_does_not_change_output(i in 0..FIXTURES.len(), seed in any::<u64>()) {
        let g = fixture(FIXTURES[i]).face_graph();
        let mut r = rng(seed);
        let h = g.relabel(&random_perm(g.order(), &mut r));
        let opts = ClassifyOptions::default();
        prop_assert_eq!(forms(&g, &opts), forms(&h, &opts));
    }
}
