//! Cycles and cycle double covers of cubic graphs.

use std::collections::{BTreeSet, HashMap, HashSet};

use thiserror::Error;

use crate::graph::{ArcColouring, CubicGraph};
use crate::perm::{Perm, PermGroup};
use crate::refine;
use crate::surface::{SimplicialSurface, SurfaceError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CdcError {
    #[error("invalid cycle {0:?}")]
    InvalidCycle(Vec<u32>),
    #[error("cycles do not form a cycle double cover")]
    NotACdc,
    #[error("cycle double cover is not vertex-faithful")]
    NotVertexFaithful,
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    #[error("search cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// A cycle stored as its least rotation over both directions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<u32>);

impl Cycle {
    /// Canonicalizes a sequence of distinct nodes of length at least 3.
    pub fn new(nodes: Vec<u32>) -> Result<Self, CdcError> {
        let distinct: HashSet<u32> = nodes.iter().copied().collect();
        if nodes.len() < 3 || distinct.len() != nodes.len() {
            return Err(CdcError::InvalidCycle(nodes));
        }
        Ok(Cycle(canonical_rotation(&nodes)))
    }

    /// Like [`Cycle::new`], also checking adjacency in `g`.
    pub fn in_graph(g: &CubicGraph, nodes: Vec<u32>) -> Result<Self, CdcError> {
        let n = nodes.len();
        let ok =
            nodes.iter().all(|&x| (x as usize) < g.order()) && (0..n).all(|i| g.has_edge(nodes[i], nodes[(i + 1) % n]));
        if !ok {
            return Err(CdcError::InvalidCycle(nodes));
        }
        Cycle::new(nodes)
    }

    pub fn nodes(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Arcs as `(min, max)` pairs in traversal order.
    pub fn arcs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| {
            let (a, b) = (self.0[i], self.0[(i + 1) % n]);
            (a.min(b), a.max(b))
        })
    }

    pub fn image(&self, p: &Perm) -> Cycle {
        Cycle(canonical_rotation(&self.0.iter().map(|&x| p.apply(x)).collect::<Vec<_>>()))
    }
}

fn canonical_rotation(nodes: &[u32]) -> Vec<u32> {
    let n = nodes.len();
    let start = (0..n).min_by_key(|&i| nodes[i]).unwrap();
    let fwd: Vec<u32> = (0..n).map(|k| nodes[(start + k) % n]).collect();
    let bwd: Vec<u32> = (0..n).map(|k| nodes[(start + n - k) % n]).collect();
    fwd.min(bwd)
}

/// A set of cycles covering every arc exactly twice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleDoubleCover(Vec<Cycle>);

impl CycleDoubleCover {
    pub fn new(g: &CubicGraph, cycles: impl IntoIterator<Item = Cycle>) -> Result<Self, CdcError> {
        let set: BTreeSet<Cycle> = cycles.into_iter().collect();
        let cycles: Vec<Cycle> = set.into_iter().collect();
        if !is_cycle_double_cover(g, &cycles)? {
            return Err(CdcError::NotACdc);
        }
        Ok(CycleDoubleCover(cycles))
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, p: &Perm) -> CycleDoubleCover {
        let mut c: Vec<Cycle> = self.0.iter().map(|c| c.image(p)).collect();
        c.sort();
        CycleDoubleCover(c)
    }

    /// One cycle per line, comma-separated 1-based node ids.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.0 {
            let ids: Vec<String> = c.nodes().iter().map(|x| (x + 1).to_string()).collect();
            s.push_str(&ids.join(","));
            s.push('\n');
        }
        s
    }

    pub fn parse(g: &CubicGraph, text: &str) -> Result<Self, CdcError> {
        let mut cycles = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let nodes = line
                .split(',')
                .map(|t| match t.trim().parse::<u32>() {
                    Ok(x) if x > 0 => Ok(x - 1),
                    _ => Err(CdcError::Parse(format!("bad node id {t:?}"))),
                })
                .collect::<Result<Vec<u32>, _>>()?;
            cycles.push(Cycle::in_graph(g, nodes)?);
        }
        CycleDoubleCover::new(g, cycles)
    }
}

pub fn is_cycle_double_cover(g: &CubicGraph, cycles: &[Cycle]) -> Result<bool, CdcError> {
    let mut count: HashMap<(u32, u32), usize> = HashMap::new();
    for c in cycles {
        let nodes = c.nodes();
        let n = nodes.len();
        if !nodes.iter().all(|&x| (x as usize) < g.order()) || !(0..n).all(|i| g.has_edge(nodes[i], nodes[(i + 1) % n]))
        {
            return Err(CdcError::InvalidCycle(nodes.to_vec()));
        }
        for a in c.arcs() {
            *count.entry(a).or_default() += 1;
        }
    }
    let distinct: HashSet<&Cycle> = cycles.iter().collect();
    Ok(distinct.len() == cycles.len() && g.edges().iter().all(|e| count.get(e) == Some(&2)))
}

/// Which of the four vertex-faithfulness conditions hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Faithfulness {
    pub chordless: bool,
    pub share_at_most_one_arc: bool,
    pub node_cycles_distinct: bool,
    pub node_triples_distinct: bool,
}

impl Faithfulness {
    pub fn holds(&self) -> bool {
        self.chordless && self.share_at_most_one_arc && self.node_cycles_distinct && self.node_triples_distinct
    }
}

pub fn faithfulness(g: &CubicGraph, cdc: &CycleDoubleCover) -> Faithfulness {
    let cycles = cdc.cycles();
    let chordless = cycles.iter().all(|c| {
        let on: HashSet<u32> = c.nodes().iter().copied().collect();
        c.nodes().iter().all(|&x| g.neighbours(x).iter().filter(|y| on.contains(y)).count() == 2)
    });
    let mut arc_cycles: HashMap<(u32, u32), Vec<usize>> = HashMap::new();
    for (i, c) in cycles.iter().enumerate() {
        for a in c.arcs() {
            arc_cycles.entry(a).or_default().push(i);
        }
    }
    let mut pairs: HashSet<(usize, usize)> = HashSet::new();
    let mut share_at_most_one_arc = true;
    for v in arc_cycles.values() {
        if v.len() == 2 && !pairs.insert((v[0].min(v[1]), v[0].max(v[1]))) {
            share_at_most_one_arc = false;
        }
    }
    let mut node_cycles: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (i, c) in cycles.iter().enumerate() {
        for &x in c.nodes() {
            node_cycles[x as usize].push(i);
        }
    }
    let node_cycles_distinct = node_cycles.iter().all(|v| v.len() == 3 && v[0] != v[1] && v[1] != v[2] && v[0] != v[2]);
    let triples: HashSet<Vec<usize>> = node_cycles
        .iter()
        .map(|v| {
            let mut t = v.clone();
            t.sort_unstable();
            t
        })
        .collect();
    Faithfulness {
        chordless,
        share_at_most_one_arc,
        node_cycles_distinct,
        node_triples_distinct: triples.len() == g.order(),
    }
}

pub fn is_vertex_faithful(g: &CubicGraph, cdc: &CycleDoubleCover) -> bool {
    faithfulness(g, cdc).holds()
}

/// The surface whose vertices are the cycles and whose face `i` is node `i`.
pub fn surface_from_cdc(g: &CubicGraph, cdc: &CycleDoubleCover) -> Result<SimplicialSurface, CdcError> {
    if !is_vertex_faithful(g, cdc) {
        return Err(CdcError::NotVertexFaithful);
    }
    let mut faces = vec![Vec::with_capacity(3); g.order()];
    for (i, c) in cdc.cycles().iter().enumerate() {
        for &x in c.nodes() {
            faces[x as usize].push(i as u32 + 1);
        }
    }
    let faces: Vec<[u32; 3]> = faces.into_iter().map(|f| [f[0], f[1], f[2]]).collect();
    Ok(SimplicialSurface::new(faces)?)
}

/// The cycle `(σ(F1)..σ(F_{n-1}), …, σ^ℓ(F1)..σ^ℓ(F_{n-1}))` where `ℓ` is the
/// order of `σ`, or `None` when the images overlap or the result is shorter
/// than 3.
pub fn alpha_cycle(g: &CubicGraph, sigma: &Perm, seed: &[u32]) -> Result<Option<Cycle>, CdcError> {
    let n = seed.len();
    if n < 2 {
        return Err(CdcError::Precondition("seed needs at least two nodes"));
    }
    if seed.iter().any(|&x| x as usize >= g.order()) || !seed.windows(2).all(|w| g.has_edge(w[0], w[1])) {
        return Err(CdcError::Precondition("seed is not a walk in the graph"));
    }
    if !g.is_automorphism(sigma) {
        return Err(CdcError::Precondition("sigma is not an automorphism"));
    }
    if sigma.apply(seed[0]) != seed[n - 1] {
        return Err(CdcError::Precondition("sigma(F1) differs from Fn"));
    }
    let ell = sigma.order() as usize;
    let head = &seed[..n - 1];
    let mut seq = Vec::with_capacity(ell * head.len());
    let mut cur: Vec<u32> = head.to_vec();
    let mut seen = HashSet::new();
    for _ in 0..ell {
        cur = cur.iter().map(|&x| sigma.apply(x)).collect();
        for &x in &cur {
            if !seen.insert(x) {
                return Ok(None);
            }
        }
        seq.extend_from_slice(&cur);
    }
    if seq.len() < 3 {
        return Ok(None);
    }
    Ok(Some(Cycle::new(seq)?))
}

/// A colour template for [`pattern_cycles`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// Cycles left after deleting every arc of another colour.
    Mono(u8),
    /// Cycles whose colour word repeats this word.
    Word(Vec<u8>),
}

impl std::str::FromStr for Pattern {
    type Err = CdcError;

    fn from_str(s: &str) -> Result<Self, CdcError> {
        let t = s.trim();
        let bad = || CdcError::Parse(format!("bad pattern {s:?}"));
        if let Some(rest) = t.strip_prefix("mono(").and_then(|r| r.strip_suffix(')')) {
            return rest.trim().parse().map(Pattern::Mono).map_err(|_| bad());
        }
        let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let word =
            inner.split(',').map(|x| x.trim().parse::<u8>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
        if word.is_empty() {
            return Err(bad());
        }
        Ok(Pattern::Word(word))
    }
}

pub fn pattern_cycles(g: &CubicGraph, kappa: &ArcColouring, pattern: &Pattern) -> BTreeSet<Cycle> {
    match pattern {
        Pattern::Mono(c) => mono_cycles(g, kappa, *c),
        Pattern::Word(w) => word_cycles(g, kappa, w),
    }
}

fn mono_cycles(g: &CubicGraph, kappa: &ArcColouring, c: u8) -> BTreeSet<Cycle> {
    let n = g.order();
    let nb: Vec<Vec<u32>> =
        (0..n as u32).map(|v| g.neighbours(v).into_iter().filter(|&u| kappa.colour(v, u) == c).collect()).collect();
    if nb.iter().any(|l| l.len() != 2) {
        return BTreeSet::new();
    }
    let mut seen = vec![false; n];
    let mut out = BTreeSet::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut cyc = vec![s as u32];
        seen[s] = true;
        let (mut prev, mut cur) = (s as u32, nb[s][0]);
        while cur as usize != s {
            seen[cur as usize] = true;
            cyc.push(cur);
            let next = if nb[cur as usize][0] == prev { nb[cur as usize][1] } else { nb[cur as usize][0] };
            prev = cur;
            cur = next;
        }
        if let Ok(c) = Cycle::new(cyc) {
            out.insert(c);
        }
    }
    out
}

fn word_cycles(g: &CubicGraph, kappa: &ArcColouring, word: &[u8]) -> BTreeSet<Cycle> {
    let p = word.len();
    let mut words: Vec<Vec<u8>> = Vec::new();
    let rev: Vec<u8> = word.iter().rev().copied().collect();
    for w in [word.to_vec(), rev] {
        for r in 0..p {
            let rot: Vec<u8> = (0..p).map(|i| w[(r + i) % p]).collect();
            if !words.contains(&rot) {
                words.push(rot);
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut on_path = vec![false; g.order()];
    for s in 0..g.order() as u32 {
        for w in &words {
            let mut path = vec![s];
            on_path[s as usize] = true;
            walk(g, kappa, w, &mut path, &mut on_path, &mut out);
            on_path[s as usize] = false;
        }
    }
    out
}

fn walk(
    g: &CubicGraph,
    kappa: &ArcColouring,
    w: &[u8],
    path: &mut Vec<u32>,
    on_path: &mut [bool],
    out: &mut BTreeSet<Cycle>,
) {
    let cur = *path.last().unwrap();
    let want = w[(path.len() - 1) % w.len()];
    for u in g.neighbours(cur) {
        if kappa.colour(cur, u) != want {
            continue;
        }
        if u == path[0] {
            if path.len() >= 3 && path.len().is_multiple_of(w.len()) {
                out.insert(Cycle::new(path.clone()).expect("path nodes are distinct"));
            }
            continue;
        }
        // only extend from the least node so each cycle is walked from its minimum
        if on_path[u as usize] || u < path[0] {
            continue;
        }
        on_path[u as usize] = true;
        path.push(u);
        walk(g, kappa, w, path, on_path, out);
        path.pop();
        on_path[u as usize] = false;
    }
}

pub fn cycle_image(sigma: &Perm, c: &Cycle) -> Cycle {
    c.image(sigma)
}

pub fn cycle_orbit(h: &PermGroup, c: &Cycle) -> BTreeSet<Cycle> {
    let mut out = BTreeSet::new();
    out.insert(c.clone());
    let mut stack = vec![c.clone()];
    while let Some(x) = stack.pop() {
        for g in h.generators() {
            let y = x.image(g);
            if out.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    out
}

/// Nodes, then arcs, then cycles; arcs join their endpoints, cycles join
/// their arcs. Automorphisms of this coloured graph are exactly the graph
/// automorphisms that permute the cycles.
fn incidence(g: &CubicGraph, cdc: &CycleDoubleCover) -> (Vec<Vec<u32>>, Vec<u32>) {
    let n = g.order();
    let edges = g.edges();
    let m = edges.len();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n + m + cdc.len()];
    let index: HashMap<(u32, u32), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    for (i, &(u, v)) in edges.iter().enumerate() {
        let a = (n + i) as u32;
        adj[u as usize].push(a);
        adj[v as usize].push(a);
        adj[n + i].extend([u, v]);
    }
    for (k, c) in cdc.cycles().iter().enumerate() {
        let cn = (n + m + k) as u32;
        for arc in c.arcs() {
            let a = n + index[&arc];
            adj[a].push(cn);
            adj[cn as usize].push(a as u32);
        }
    }
    let mut colours = vec![0u32; n];
    colours.extend(std::iter::repeat_n(1, m));
    colours.extend(std::iter::repeat_n(2, cdc.len()));
    (adj, colours)
}

fn restrict(gens: &[Perm], n: usize) -> Vec<Perm> {
    gens.iter().map(|p| Perm::from_images(p.images()[..n].to_vec()).expect("nodes map to nodes")).collect()
}

/// Setwise stabilizer of `cdc` inside Aut(g).
pub fn stabilizer(g: &CubicGraph, cdc: &CycleDoubleCover) -> PermGroup {
    let (adj, colours) = incidence(g, cdc);
    let full = refine::automorphisms(&refine::Graph { adj: &adj, colours: &colours });
    PermGroup::new(g.order(), restrict(full.generators(), g.order())).expect("degree n")
}

/// Canonical node relabelling of the pair `(g, cdc)` and the relabelled cover.
pub fn canonical_labelling(g: &CubicGraph, cdc: &CycleDoubleCover) -> (Perm, Vec<Vec<u32>>) {
    let (adj, colours) = incidence(g, cdc);
    let graph = refine::Graph { adj: &adj, colours: &colours };
    let aut = refine::automorphisms(&graph);
    let (labels, _) = refine::canonical_labelling(&graph, &aut);
    let n = g.order();
    let relabel = Perm::from_images(labels[..n].to_vec()).expect("nodes take the first labels");
    let base = (n + g.edges().len()) as u32;
    // cycle node labels follow the arcs
    let mut cycles: Vec<(u32, Vec<u32>)> = cdc
        .cycles()
        .iter()
        .enumerate()
        .map(|(k, c)| (labels[base as usize + k] - base, c.image(&relabel).nodes().to_vec()))
        .collect();
    cycles.sort();
    (relabel, cycles.into_iter().map(|(_, c)| c).collect())
}

/// Every cycle of `g`, sorted by length then canonical form.
pub fn all_cycles(g: &CubicGraph, cap: usize) -> Result<Vec<Cycle>, CdcError> {
    let n = g.order();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n as u32 {
        let mut path = vec![s];
        on_path[s as usize] = true;
        dfs_cycles(g, &mut path, &mut on_path, &mut out, cap)?;
        on_path[s as usize] = false;
    }
    out.sort_by(|a: &Cycle, b: &Cycle| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out)
}

fn dfs_cycles(
    g: &CubicGraph,
    path: &mut Vec<u32>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
    cap: usize,
) -> Result<(), CdcError> {
    let cur = *path.last().unwrap();
    for u in g.neighbours(cur) {
        if u == path[0] && path.len() >= 3 && path[1] < cur {
            out.push(Cycle::new(path.clone())?);
            if out.len() > cap {
                return Err(CdcError::CapExceeded(cap));
            }
        }
        if u <= path[0] || on_path[u as usize] {
            continue;
        }
        on_path[u as usize] = true;
        path.push(u);
        dfs_cycles(g, path, on_path, out, cap)?;
        path.pop();
        on_path[u as usize] = false;
    }
    Ok(())
}

/// Default cycle-catalogue cap for the brute-force search.
pub const DEFAULT_CYCLE_CAP: usize = 2_000_000;

/// Every cycle double cover of `g`, by exact cover with each arc covered twice.
///
/// Cycles are ordered by (length, canonical form); each step branches on the
/// arc with the fewest usable cycles left.
pub fn brute_force_cdcs(g: &CubicGraph, cycle_cap: usize) -> Result<Vec<CycleDoubleCover>, CdcError> {
    let cycles = all_cycles(g, cycle_cap)?;
    let edges = g.edges();
    let index: HashMap<(u32, u32), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let cyc_arcs: Vec<Vec<usize>> = cycles.iter().map(|c| c.arcs().map(|a| index[&a]).collect()).collect();
    let mut arc_cycles: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for (i, arcs) in cyc_arcs.iter().enumerate() {
        for &a in arcs {
            arc_cycles[a].push(i);
        }
    }
    let mut st = Search {
        cyc_arcs: &cyc_arcs,
        arc_cycles: &arc_cycles,
        count: vec![0; edges.len()],
        blocked: vec![0; cycles.len()],
        chosen: Vec::new(),
        found: Vec::new(),
    };
    st.run();
    let found = std::mem::take(&mut st.found);
    Ok(found
        .into_iter()
        .map(|sel| {
            CycleDoubleCover(sel.into_iter().map(|i| cycles[i].clone()).collect::<BTreeSet<_>>().into_iter().collect())
        })
        .collect())
}

struct Search<'a> {
    cyc_arcs: &'a [Vec<usize>],
    arc_cycles: &'a [Vec<usize>],
    count: Vec<u8>,
    blocked: Vec<u32>,
    chosen: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn usable(&self, c: usize) -> bool {
        self.blocked[c] == 0 && self.cyc_arcs[c].iter().all(|&a| self.count[a] < 2)
    }

    fn run(&mut self) {
        let mut best: Option<(usize, usize)> = None;
        for a in 0..self.count.len() {
            if self.count[a] == 2 {
                continue;
            }
            let options = self.arc_cycles[a].iter().filter(|&&c| self.usable(c)).count();
            let need = 2 - self.count[a] as usize;
            if options < need {
                return;
            }
            if best.is_none_or(|(_, o)| options < o) {
                best = Some((a, options));
            }
        }
        let Some((arc, _)) = best else {
            self.found.push(self.chosen.clone());
            return;
        };
        let options: Vec<usize> = self.arc_cycles[arc].iter().copied().filter(|&c| self.usable(c)).collect();
        for &c in &options {
            for &a in &self.cyc_arcs[c] {
                self.count[a] += 1;
            }
            self.blocked[c] += 1;
            self.chosen.push(c);
            self.run();
            self.chosen.pop();
            for &a in &self.cyc_arcs[c] {
                self.count[a] -= 1;
            }
            // c stays blocked for the remaining siblings
        }
        for &c in &options {
            self.blocked[c] -= 1;
        }
    }
}

/// One representative per Aut(g)-orbit of the given covers.
pub fn up_to_isomorphism(aut: &PermGroup, covers: &[CycleDoubleCover]) -> Vec<CycleDoubleCover> {
    let mut seen: HashSet<CycleDoubleCover> = HashSet::new();
    let mut reps = Vec::new();
    for c in covers {
        if seen.contains(c) {
            continue;
        }
        reps.push(c.clone());
        seen.insert(c.clone());
        let mut stack = vec![c.clone()];
        while let Some(x) = stack.pop() {
            for p in aut.generators() {
                let y = x.image(p);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::{arc_orbit_colouring, automorphism_group};

    fn cyc(v: &[u32]) -> Cycle {
        Cycle::new(v.to_vec()).unwrap()
    }

    fn k4_c1() -> Vec<Cycle> {
        vec![cyc(&[0, 1, 2]), cyc(&[0, 2, 3]), cyc(&[0, 1, 3]), cyc(&[1, 2, 3])]
    }

    fn k4_c2() -> Vec<Cycle> {
        vec![cyc(&[0, 1, 2, 3]), cyc(&[0, 2, 1, 3]), cyc(&[0, 1, 3, 2])]
    }

    #[test]
    fn canonical_cycles() {
        assert_eq!(cyc(&[3, 1, 2]).nodes(), &[1, 2, 3]);
        assert_eq!(cyc(&[2, 1, 3]).nodes(), &[1, 2, 3]);
        assert_eq!(cyc(&[4, 2, 7, 5]).nodes(), &[2, 4, 5, 7]);
        assert!(Cycle::new(vec![1, 2]).is_err());
        assert!(Cycle::new(vec![1, 2, 1]).is_err());
    }

    #[test]
    fn k4_covers() {
        let g = complete4();
        assert!(is_cycle_double_cover(&g, &k4_c1()).unwrap());
        assert!(is_cycle_double_cover(&g, &k4_c2()).unwrap());
        assert!(!is_cycle_double_cover(&g, &k4_c1()[..3]).unwrap());
        let c1 = CycleDoubleCover::new(&g, k4_c1()).unwrap();
        let c2 = CycleDoubleCover::new(&g, k4_c2()).unwrap();
        assert!(is_vertex_faithful(&g, &c1));
        let f2 = faithfulness(&g, &c2);
        assert!(!f2.chordless && !f2.share_at_most_one_arc);
        let s = surface_from_cdc(&g, &c1).unwrap();
        assert_eq!((s.num_vertices(), s.num_edges(), s.num_faces()), (4, 6, 4));
        assert_eq!(surface_from_cdc(&g, &c2), Err(CdcError::NotVertexFaithful));
    }

    #[test]
    fn cdc_text_round_trip() {
        let g = complete4();
        let c1 = CycleDoubleCover::new(&g, k4_c1()).unwrap();
        assert_eq!(CycleDoubleCover::parse(&g, &c1.to_text()).unwrap(), c1);
        assert!(CycleDoubleCover::parse(&g, "1,2,3\n").is_err());
    }

    #[test]
    fn alpha_examples() {
        let g = complete4();
        let s = Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(alpha_cycle(&g, &s, &[0, 1]).unwrap(), Some(cyc(&[0, 1, 2])));
        let id = Perm::identity(4);
        assert_eq!(alpha_cycle(&g, &id, &[0, 1, 0]).unwrap(), None);
        // images overlap: (0 1)(2 3) has order 2 but seed 0,1,2,0 ... sigma(0)=1
        let t = Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(alpha_cycle(&g, &t, &[0, 2, 1]).unwrap(), Some(cyc(&[0, 2, 1, 3])));
        assert_eq!(alpha_cycle(&g, &t, &[0, 1]).unwrap(), None);
        assert!(alpha_cycle(&g, &s, &[0, 2]).is_err());
    }

    #[test]
    fn prism_patterns() {
        let g = prism(3);
        let kappa = arc_orbit_colouring(&g, &automorphism_group(&g)).unwrap();
        let tri = pattern_cycles(&g, &kappa, &"mono(1)".parse().unwrap());
        assert_eq!(tri.into_iter().collect::<Vec<_>>(), vec![cyc(&[0, 1, 2]), cyc(&[3, 4, 5])]);
        let sq = pattern_cycles(&g, &kappa, &"(1,2)".parse().unwrap());
        assert_eq!(sq.len(), 3);
        assert!(sq.iter().all(|c| c.len() == 4));
        let k4 = complete4();
        let one = ArcColouring::from_colours(&k4, |_, _| 1);
        assert!(pattern_cycles(&k4, &one, &"(1,2)".parse().unwrap()).is_empty());
    }

    #[test]
    fn orbit_of_triangle() {
        let g = complete4();
        let aut = automorphism_group(&g);
        let orb = cycle_orbit(&aut, &cyc(&[0, 1, 2]));
        assert_eq!(orb.into_iter().collect::<Vec<_>>(), {
            let mut v = k4_c1();
            v.sort();
            v
        });
    }

    #[test]
    fn k4_brute_force() {
        let g = complete4();
        let all = brute_force_cdcs(&g, DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(all.len(), 2);
        let reps = up_to_isomorphism(&automorphism_group(&g), &all);
        assert_eq!(reps.len(), 2);
        assert_eq!(all.iter().filter(|c| is_vertex_faithful(&g, c)).count(), 1);
    }

    #[test]
    fn stabilizer_of_umbrellas() {
        let g = complete4();
        let c1 = CycleDoubleCover::new(&g, k4_c1()).unwrap();
        assert_eq!(stabilizer(&g, &c1).order(), 24);
    }
}
