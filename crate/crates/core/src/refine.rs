//! Individualization-refinement search on vertex-coloured simple graphs.
//!
//! Used for automorphism groups and canonical labellings. Partitions are
//! ordered: `cells[v]` is the index of the cell holding `v`, and indices are
//! assigned from sorted, labelling-independent keys so that the whole search
//! tree commutes with relabelling.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::perm::{Perm, PermGroup};

pub(crate) struct Graph<'a> {
    pub adj: &'a [Vec<u32>],
    pub colours: &'a [u32],
}

#[derive(Clone)]
struct Part {
    cells: Vec<u32>,
    count: usize,
    trace: u64,
}

impl Part {
    fn is_discrete(&self) -> bool {
        self.count == self.cells.len()
    }

    fn cell_members(&self, c: u32) -> Vec<u32> {
        (0..self.cells.len() as u32).filter(|&v| self.cells[v as usize] == c).collect()
    }

    fn target_cell(&self) -> Option<u32> {
        let mut sizes = vec![0usize; self.count];
        for &c in &self.cells {
            sizes[c as usize] += 1;
        }
        sizes.iter().position(|&s| s > 1).map(|c| c as u32)
    }
}

fn renumber<K: Ord + Clone>(keys: &[K]) -> (Vec<u32>, usize) {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let cells = keys.iter().map(|k| sorted.binary_search(k).unwrap() as u32).collect();
    (cells, sorted.len())
}

impl Graph<'_> {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn initial(&self) -> Part {
        let (cells, count) = renumber(self.colours);
        self.refine(cells, count)
    }

    fn refine(&self, mut cells: Vec<u32>, mut count: usize) -> Part {
        let n = self.n();
        let mut sigs: Vec<(u32, Vec<u32>)>;
        loop {
            sigs = (0..n)
                .map(|v| {
                    let mut nb: Vec<u32> = self.adj[v].iter().map(|&u| cells[u as usize]).collect();
                    nb.sort_unstable();
                    (cells[v], nb)
                })
                .collect();
            let (next, k) = renumber(&sigs);
            cells = next;
            if k == count {
                break;
            }
            count = k;
        }
        let mut h = DefaultHasher::new();
        let mut s = sigs;
        s.sort();
        s.dedup();
        s.hash(&mut h);
        Part { cells, count, trace: h.finish() }
    }

    fn individualize(&self, p: &Part, v: u32) -> Part {
        let c = p.cells[v as usize];
        let keys: Vec<(u32, u8)> = (0..self.n())
            .map(|u| {
                let cu = p.cells[u];
                (cu, u8::from(cu == c && u as u32 != v))
            })
            .collect();
        let (cells, count) = renumber(&keys);
        self.refine(cells, count)
    }

    fn is_automorphism(&self, map: &[u32]) -> bool {
        (0..self.n()).all(|v| {
            if self.colours[v] != self.colours[map[v] as usize] {
                return false;
            }
            let mut a: Vec<u32> = self.adj[v].iter().map(|&u| map[u as usize]).collect();
            let mut b = self.adj[map[v] as usize].clone();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        })
    }
}

struct PathNode {
    part: Part,
    target: Vec<u32>,
    chosen: u32,
}

/// Automorphism group of a coloured graph, with the search base used.
pub(crate) fn automorphisms(g: &Graph) -> PermGroup {
    let n = g.n();
    let mut path: Vec<PathNode> = Vec::new();
    let mut part = g.initial();
    while let Some(t) = part.target_cell() {
        let target = part.cell_members(t);
        let chosen = target[0];
        let next = g.individualize(&part, chosen);
        path.push(PathNode { part, target, chosen });
        part = next;
    }
    let leaf = part;
    // position -> vertex on the first leaf
    let mut leaf_vertex = vec![0u32; n];
    for v in 0..n {
        leaf_vertex[leaf.cells[v] as usize] = v as u32;
    }
    let traces: Vec<u64> = path.iter().map(|p| p.part.trace).chain(std::iter::once(leaf.trace)).collect();

    let mut gens: Vec<Perm> = Vec::new();
    for i in (0..path.len()).rev() {
        let b = path[i].chosen;
        let mut orbit = orbit_under(&gens, b, n);
        for &c in &path[i].target {
            if orbit[c as usize] {
                continue;
            }
            let start = g.individualize(&path[i].part, c);
            if start.trace != traces[i + 1] {
                continue;
            }
            if let Some(map) = descend(g, &path, &traces, &leaf_vertex, start, i + 1) {
                gens.push(Perm::from_images(map).expect("leaf map is a bijection"));
                orbit = orbit_under(&gens, b, n);
            }
        }
    }
    let base: Vec<u32> = path.iter().map(|p| p.chosen).collect();
    PermGroup::with_base(n, gens, &base).expect("degrees agree")
}

fn orbit_under(gens: &[Perm], p: u32, n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[p as usize] = true;
    let mut stack = vec![p];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                stack.push(y);
            }
        }
    }
    seen
}

fn descend(
    g: &Graph,
    path: &[PathNode],
    traces: &[u64],
    leaf_vertex: &[u32],
    part: Part,
    depth: usize,
) -> Option<Vec<u32>> {
    if part.is_discrete() {
        if depth != path.len() {
            return None;
        }
        // first-leaf vertex at position k maps to this leaf's vertex at position k
        let n = g.n();
        let mut here = vec![0u32; n];
        for v in 0..n {
            here[part.cells[v] as usize] = v as u32;
        }
        let mut map = vec![0u32; n];
        for k in 0..n {
            map[leaf_vertex[k] as usize] = here[k];
        }
        return g.is_automorphism(&map).then_some(map);
    }
    if depth >= path.len() {
        return None;
    }
    let t = path[depth].part.cells[path[depth].chosen as usize];
    for c in part.cell_members(t) {
        let next = g.individualize(&part, c);
        if next.trace != traces[depth + 1] {
            continue;
        }
        if let Some(m) = descend(g, path, traces, leaf_vertex, next, depth + 1) {
            return Some(m);
        }
    }
    None
}

/// A canonical relabelling: `labels[v]` is the new name of `v`.
///
/// Each leaf yields a certificate (colours in label order, then the sorted
/// relabelled edges) and the least one wins. Children of a search node that
/// lie in one orbit of the pointwise stabilizer of the node's prefix give
/// identical certificate sets, so only one per orbit is explored.
pub(crate) fn canonical_labelling(g: &Graph, aut: &PermGroup) -> (Vec<u32>, Vec<u32>) {
    let mut best: Option<(Vec<u32>, Vec<u32>)> = None;
    let mut prefix = Vec::new();
    explore(g, aut, g.initial(), &mut prefix, &mut best);
    let (cert, labels) = best.expect("search tree has a leaf");
    (labels, cert)
}

fn explore(g: &Graph, aut: &PermGroup, part: Part, prefix: &mut Vec<u32>, best: &mut Option<(Vec<u32>, Vec<u32>)>) {
    let Some(t) = part.target_cell() else {
        let labels = part.cells.clone();
        let cert = certificate(g, &labels);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, labels));
        }
        return;
    };
    let stab = aut.pointwise_stabilizer(prefix);
    let mut done = vec![false; g.n()];
    for c in part.cell_members(t) {
        if done[c as usize] {
            continue;
        }
        for x in stab.orbit_of(c) {
            done[x as usize] = true;
        }
        let next = g.individualize(&part, c);
        prefix.push(c);
        explore(g, aut, next, prefix, best);
        prefix.pop();
    }
}

fn certificate(g: &Graph, labels: &[u32]) -> Vec<u32> {
    let n = g.n();
    let mut colours = vec![0u32; n];
    for v in 0..n {
        colours[labels[v] as usize] = g.colours[v];
    }
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for v in 0..n {
        for &u in &g.adj[v] {
            let (a, b) = (labels[v], labels[u as usize]);
            if a < b {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    let mut cert = colours;
    cert.push(u32::MAX);
    for (a, b) in edges {
        cert.push(a);
        cert.push(b);
    }
    cert
}
