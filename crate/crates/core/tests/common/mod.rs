#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::path::PathBuf;

use ftsurf::graph::families::*;
use ftsurf::graph::CubicGraph;
use ftsurf::perm::Perm;
use ftsurf::surface::SimplicialSurface;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const FIXTURES: [&str; 13] =
    ["x31", "x22", "x16", "x21", "y21", "z21", "x12", "x13", "y13", "x11", "y11", "xbar11", "ybar11"];

pub fn fixture_path(name: &str) -> PathBuf {
    // also compiled into the verify package, which sits next to core
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let dir = if root.join("fixtures").is_dir() { root.join("fixtures") } else { root.join("../core/fixtures") };
    dir.join(format!("{name}.txt"))
}

pub fn fixture(name: &str) -> SimplicialSurface {
    SimplicialSurface::parse(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

/// Node-transitive cubic graphs with at most 14 nodes.
pub fn small_corpus() -> Vec<(String, CubicGraph)> {
    let mut c = vec![
        ("K4".to_string(), complete4()),
        ("K33".into(), k33()),
        ("Petersen".into(), petersen()),
        ("Heawood".into(), heawood()),
    ];
    for k in 3..=7 {
        c.push((format!("prism{k}"), prism(k)));
    }
    for n in (8..=14).step_by(2) {
        c.push((format!("mobius{n}"), mobius_ladder(n)));
    }
    for n in (4..=14).step_by(2) {
        for (i, g) in cubic_circulants(n).into_iter().enumerate() {
            c.push((format!("circulant{n}.{i}"), g));
        }
    }
    c
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Perm {
    let mut v: Vec<u32> = (0..n as u32).collect();
    v.shuffle(rng);
    Perm::from_images(v).unwrap()
}

/// All elements generated by `gens`, by breadth-first closure.
pub fn closure(n: usize, gens: &[Perm]) -> HashSet<Vec<u32>> {
    let id: Vec<u32> = (0..n as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<u32> = x.iter().map(|&i| g.images()[i as usize]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Lexicographically least element set in the conjugacy class of `h` inside `g`.
pub fn class_key(g: &HashSet<Vec<u32>>, h: &HashSet<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut best: Option<Vec<Vec<u32>>> = None;
    for x in g {
        let mut inv = vec![0u32; x.len()];
        for (i, &xi) in x.iter().enumerate() {
            inv[xi as usize] = i as u32;
        }
        let mut conj: Vec<Vec<u32>> =
            h.iter().map(|e| (0..x.len()).map(|i| x[e[inv[i] as usize] as usize]).collect()).collect();
        conj.sort();
        if best.as_ref().is_none_or(|b| conj < *b) {
            best = Some(conj);
        }
    }
    best.unwrap()
}

/// Brute-force count of adjacency-preserving permutations.
pub fn brute_force_aut_order(g: &CubicGraph) -> usize {
    let n = g.order();
    let edges: BTreeSet<(u32, u32)> = g.edges().into_iter().collect();
    let mut count = 0;
    let mut p: Vec<u32> = (0..n as u32).collect();
    permute(&mut p, 0, &mut |p| {
        if edges.iter().all(|&(u, v)| {
            let (a, b) = (p[u as usize], p[v as usize]);
            edges.contains(&(a.min(b), a.max(b)))
        }) {
            count += 1;
        }
    });
    count
}

fn permute(p: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}
