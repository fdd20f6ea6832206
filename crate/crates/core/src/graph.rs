//! Connected simple cubic graphs, their automorphisms and arc colourings.
//!
//! Nodes are `0..n` internally. Text formats use 1-based ids for the edge
//! list and the usual 0-based packing for graph6 and sparse6.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::perm::{Perm, PermGroup};
use crate::refine;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("node {node} has degree {degree}, expected 3")]
    NotCubic { node: u32, degree: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("loop at node {0}")]
    Loop(u32),
    #[error("repeated edge {0}-{1}")]
    MultiEdge(u32, u32),
    #[error("node {0} out of range")]
    NodeOutOfRange(u32),
    #[error("empty graph")]
    Empty,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("group does not act as automorphisms of the graph")]
    NotSubgroup,
}

/// A connected simple 3-regular graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicGraph {
    adj: Vec<[u32; 3]>,
}

impl CubicGraph {
    /// Builds a graph from 0-based edges.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n {
                return Err(GraphError::NodeOutOfRange(u));
            }
            if v as usize >= n {
                return Err(GraphError::NodeOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if lists[u as usize].contains(&v) {
                return Err(GraphError::MultiEdge(u.min(v), u.max(v)));
            }
            lists[u as usize].push(v);
            lists[v as usize].push(u);
        }
        let mut adj = Vec::with_capacity(n);
        for (i, mut l) in lists.into_iter().enumerate() {
            if l.len() != 3 {
                return Err(GraphError::NotCubic { node: i as u32, degree: l.len() });
            }
            l.sort_unstable();
            adj.push([l[0], l[1], l[2]]);
        }
        let g = CubicGraph { adj };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.adj.len()];
        seen[0] = true;
        let mut stack = vec![0u32];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v as usize] {
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.adj.len()
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbours(&self, v: u32) -> [u32; 3] {
        self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(&v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.adj.len() * 3 / 2);
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    /// Image of the graph under a node relabelling.
    pub fn relabel(&self, p: &Perm) -> CubicGraph {
        let edges: Vec<(u32, u32)> = self.edges().iter().map(|&(u, v)| (p.apply(u), p.apply(v))).collect();
        CubicGraph::from_edges(self.order(), &edges).expect("relabelling preserves validity")
    }

    pub fn is_automorphism(&self, p: &Perm) -> bool {
        p.degree() == self.order() && self.edges().iter().all(|&(u, v)| self.has_edge(p.apply(u), p.apply(v)))
    }

    fn lists(&self) -> Vec<Vec<u32>> {
        self.adj.iter().map(|a| a.to_vec()).collect()
    }

    /// Parses the `n m` edge-list format with 1-based node ids.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut nums = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<u64>().map_err(|_| GraphError::Parse(format!("bad integer {s:?}"))));
        let mut next = || nums.next().unwrap_or_else(|| Err(GraphError::Parse("truncated edge list".into())));
        let n = next()? as usize;
        let m = next()? as usize;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (u, v) = (next()?, next()?);
            if u == 0 || v == 0 || u > n as u64 || v > n as u64 {
                return Err(GraphError::NodeOutOfRange(u.max(v).min(u32::MAX as u64) as u32));
            }
            edges.push((u as u32 - 1, v as u32 - 1));
        }
        CubicGraph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.order(), edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }

    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = Vec::new();
        if n < 63 {
            out.push(n as u8 + 63);
        } else if n < 258_048 {
            out.push(126);
            out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        } else {
            out.extend([126, 126]);
            out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        }
        let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 1..n {
            for i in 0..j {
                bits.push(self.has_edge(i as u32, j as u32));
            }
        }
        for chunk in bits.chunks(6) {
            let mut x = 0u8;
            for k in 0..6 {
                x = (x << 1) | u8::from(chunk.get(k).copied().unwrap_or(false));
            }
            out.push(x + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }

    pub fn parse_graph6(text: &str) -> Result<Self, GraphError> {
        let s = text.trim();
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let bytes = s.as_bytes();
        let (n, rest) = parse_size(bytes)?;
        let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
        if rest.len() != needed {
            return Err(GraphError::Parse(format!("graph6 body has {} bytes, expected {needed}", rest.len())));
        }
        let bits = six_bits(rest)?;
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] {
                    edges.push((i as u32, j as u32));
                }
                k += 1;
            }
        }
        CubicGraph::from_edges(n, &edges)
    }

    pub fn parse_sparse6(text: &str) -> Result<Self, GraphError> {
        let s = text.trim();
        let s = s.strip_prefix(">>sparse6<<").unwrap_or(s);
        let s = s.strip_prefix(':').ok_or_else(|| GraphError::Parse("sparse6 must start with ':'".into()))?;
        let (n, rest) = parse_size(s.as_bytes())?;
        let bits = six_bits(rest)?;
        let mut kbits = 0;
        while (1usize << kbits) < n {
            kbits += 1;
        }
        let mut edges = Vec::new();
        let mut v = 0usize;
        let mut pos = 0;
        let read = |pos: &mut usize, width: usize| -> Option<usize> {
            if *pos + width > bits.len() {
                return None;
            }
            let mut x = 0;
            for _ in 0..width {
                x = (x << 1) | usize::from(bits[*pos]);
                *pos += 1;
            }
            Some(x)
        };
        while let (Some(b), Some(x)) = (read(&mut pos, 1), read(&mut pos, kbits)) {
            if b == 1 {
                v += 1;
            }
            if v >= n {
                break;
            }
            if x > v {
                v = x;
            } else {
                edges.push((x as u32, v as u32));
            }
        }
        CubicGraph::from_edges(n, &edges)
    }

    /// Parses graph6, sparse6 or the edge-list format.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let t = text.trim();
        if t.starts_with(':') || t.starts_with(">>sparse6<<") {
            CubicGraph::parse_sparse6(t)
        } else if t.starts_with(">>graph6<<") || (!t.is_empty() && t.bytes().all(|b| (63..=126).contains(&b))) {
            CubicGraph::parse_graph6(t)
        } else {
            CubicGraph::parse_edge_list(t)
        }
    }
}

fn parse_size(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let bad = || GraphError::Parse("truncated size field".into());
    let first = *bytes.first().ok_or_else(bad)?;
    if !(63..=126).contains(&first) {
        return Err(GraphError::Parse(format!("invalid byte {first}")));
    }
    if first != 126 {
        return Ok(((first - 63) as usize, &bytes[1..]));
    }
    let width = if bytes.get(1) == Some(&126) { 6 } else { 3 };
    let start = if width == 6 { 2 } else { 1 };
    let field = bytes.get(start..start + width).ok_or_else(bad)?;
    let mut n = 0usize;
    for &b in field {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Parse(format!("invalid byte {b}")));
        }
        n = (n << 6) | (b - 63) as usize;
    }
    Ok((n, &bytes[start + width..]))
}

fn six_bits(bytes: &[u8]) -> Result<Vec<bool>, GraphError> {
    let mut bits = Vec::with_capacity(bytes.len() * 6);
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Parse(format!("invalid byte {b}")));
        }
        let x = b - 63;
        for k in (0..6).rev() {
            bits.push(x >> k & 1 == 1);
        }
    }
    Ok(bits)
}

pub fn automorphism_group(g: &CubicGraph) -> PermGroup {
    let adj = g.lists();
    let colours = vec![0u32; g.order()];
    refine::automorphisms(&refine::Graph { adj: &adj, colours: &colours })
}

pub fn is_node_transitive(g: &CubicGraph) -> bool {
    automorphism_group(g).is_transitive()
}

/// Canonical form: the sorted edge list under a canonical relabelling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphForm(Vec<(u32, u32)>);

impl GraphForm {
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.0
    }

    /// Short stable identifier, invariant under relabelling of the input graph.
    pub fn id(&self) -> String {
        let text: Vec<String> = self.0.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        crate::fnv_hex(text.join(",").as_bytes())
    }
}

pub fn canonical_form(g: &CubicGraph) -> GraphForm {
    canonical_form_with(g, &automorphism_group(g))
}

pub fn canonical_form_with(g: &CubicGraph, aut: &PermGroup) -> GraphForm {
    let adj = g.lists();
    let colours = vec![0u32; g.order()];
    let (labels, _) = refine::canonical_labelling(&refine::Graph { adj: &adj, colours: &colours }, aut);
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (labels[u as usize], labels[v as usize]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    GraphForm(edges)
}

pub fn is_isomorphic(a: &CubicGraph, b: &CubicGraph) -> bool {
    a.order() == b.order() && canonical_form(a) == canonical_form(b)
}

/// Colouring of the arcs by the orbits of a group of automorphisms.
///
/// Colours run from 1 in order of decreasing orbit size; equal sizes are
/// ordered by their least arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcColouring {
    edges: Vec<(u32, u32)>,
    colours: Vec<u8>,
    sizes: Vec<usize>,
}

impl ArcColouring {
    /// Builds a colouring from explicit colours, one per sorted edge.
    pub fn from_colours(g: &CubicGraph, colour: impl Fn(u32, u32) -> u8) -> Self {
        let edges = g.edges();
        let colours: Vec<u8> = edges.iter().map(|&(u, v)| colour(u, v)).collect();
        let k = colours.iter().copied().max().unwrap_or(0) as usize;
        let mut sizes = vec![0; k];
        for &c in &colours {
            sizes[c as usize - 1] += 1;
        }
        ArcColouring { edges, colours, sizes }
    }

    pub fn colour(&self, u: u32, v: u32) -> u8 {
        let key = (u.min(v), u.max(v));
        self.colours[self.edges.binary_search(&key).expect("not an arc")]
    }

    pub fn num_colours(&self) -> usize {
        self.sizes.len()
    }

    /// Orbit sizes indexed by colour - 1.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Recolours with `map[c - 1]` as the new colour of `c`.
    pub fn permuted(&self, map: &[u8]) -> ArcColouring {
        let colours: Vec<u8> = self.colours.iter().map(|&c| map[c as usize - 1]).collect();
        let mut sizes = vec![0; self.sizes.len()];
        for (c, &s) in self.sizes.iter().enumerate() {
            sizes[map[c] as usize - 1] = s;
        }
        ArcColouring { edges: self.edges.clone(), colours, sizes }
    }
}

pub fn arc_orbit_colouring(g: &CubicGraph, h: &PermGroup) -> Result<ArcColouring, GraphError> {
    if h.degree() != g.order() || !h.generators().iter().all(|p| g.is_automorphism(p)) {
        return Err(GraphError::NotSubgroup);
    }
    let edges = g.edges();
    let index: HashMap<(u32, u32), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut orbit_of = vec![usize::MAX; edges.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for s in 0..edges.len() {
        if orbit_of[s] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[s] = id;
        let mut orb = vec![s];
        let mut i = 0;
        while i < orb.len() {
            let (u, v) = edges[orb[i]];
            for p in h.generators() {
                let (a, b) = (p.apply(u), p.apply(v));
                let j = index[&(a.min(b), a.max(b))];
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    orb.push(j);
                }
            }
            i += 1;
        }
        orbits.push(orb);
    }
    // orbits are discovered by least arc, so a stable sort by size suffices
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    order.sort_by_key(|&o| std::cmp::Reverse(orbits[o].len()));
    let mut colour_of_orbit = vec![0u8; orbits.len()];
    for (rank, &o) in order.iter().enumerate() {
        colour_of_orbit[o] = rank as u8 + 1;
    }
    let colours = orbit_of.iter().map(|&o| colour_of_orbit[o]).collect();
    let sizes = order.iter().map(|&o| orbits[o].len()).collect();
    Ok(ArcColouring { edges, colours, sizes })
}

/// Recognizes a generalized m-gon graph and returns `(m, k)`.
///
/// The arcs must split into two automorphism orbits of sizes `n` and `n/2`,
/// the large one a union of 4-cycles. Contracting the 4-cycles, the matching
/// arcs of each 4-cycle leave alternately towards the previous and the next
/// collection; the finest circular layering compatible with that is found by
/// propagating layer offsets, and its period is `m`.
pub fn detect_generalized_mgon(g: &CubicGraph, aut: &PermGroup) -> Option<(usize, usize)> {
    let n = g.order();
    if !n.is_multiple_of(4) {
        return None;
    }
    let col = arc_orbit_colouring(g, aut).ok()?;
    if col.sizes() != [n, n / 2] {
        return None;
    }
    // 4-cycles of colour 1
    let mut quad = vec![usize::MAX; n];
    let mut quads: Vec<[u32; 4]> = Vec::new();
    for s in 0..n as u32 {
        if quad[s as usize] != usize::MAX {
            continue;
        }
        let mut cyc = vec![s];
        let mut prev = u32::MAX;
        let mut cur = s;
        loop {
            let next = g.neighbours(cur).into_iter().find(|&x| col.colour(cur, x) == 1 && x != prev)?;
            if next == s {
                break;
            }
            cyc.push(next);
            if cyc.len() > 4 {
                return None;
            }
            prev = cur;
            cur = next;
        }
        if cyc.len() != 4 {
            return None;
        }
        for &x in &cyc {
            quad[x as usize] = quads.len();
        }
        quads.push([cyc[0], cyc[1], cyc[2], cyc[3]]);
    }
    let q = quads.len();
    // port of node: 0 for positions 0,2 and 1 for positions 1,3
    let mut port = vec![0u8; n];
    for c in &quads {
        for (i, &x) in c.iter().enumerate() {
            port[x as usize] = (i % 2) as u8;
        }
    }
    let partner = |x: u32| g.neighbours(x).into_iter().find(|&y| col.colour(x, y) == 2).unwrap();
    // layer offset and which port faces "next"
    let mut layer: Vec<Option<(i64, u8)>> = vec![None; q];
    layer[0] = Some((0, 1));
    let mut stack = vec![0usize];
    let mut period: i64 = 0;
    while let Some(a) = stack.pop() {
        let (la, next_a) = layer[a].unwrap();
        for &x in &quads[a] {
            let y = partner(x);
            let b = quad[y as usize];
            let step = if port[x as usize] == next_a { 1 } else { -1 };
            // y's port faces back towards a
            let next_b = if step == 1 { 1 - port[y as usize] } else { port[y as usize] };
            match layer[b] {
                None => {
                    layer[b] = Some((la + step, next_b));
                    stack.push(b);
                }
                Some((lb, nb)) => {
                    if nb != next_b {
                        return None;
                    }
                    period = gcd(period, (lb - la - step).abs());
                }
            }
        }
    }
    if period < 2 {
        return None;
    }
    let m = period as usize;
    let mut counts = vec![0usize; m];
    for l in &layer {
        counts[l.unwrap().0.rem_euclid(period) as usize] += 1;
    }
    let per = counts[0];
    if per == 0 || !per.is_power_of_two() || counts.iter().any(|&c| c != per) || per * m != q {
        return None;
    }
    let k = per.trailing_zeros() as usize + 2;
    (n == (1 << k) * m).then_some((m, k))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The generalized m-gon graph `G_{m,k}`: `m` collections of `2^(k-2)`
/// 4-cycles on a circle, with matching arcs between neighbouring collections.
pub fn generalized_mgon(m: usize, k: usize) -> Result<CubicGraph, GraphError> {
    if m < 2 || k < 2 {
        return Err(GraphError::Parse("need m >= 2 and k >= 2".into()));
    }
    let per = 1usize << (k - 2);
    let id = |i: usize, j: usize, t: usize| ((i % m) * per + j % per) * 4 + t;
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..per {
            for t in 0..4 {
                edges.push((id(i, j, t) as u32, id(i, j, (t + 1) % 4) as u32));
            }
            edges.push((id(i, j, 1) as u32, id(i + 1, j, 0) as u32));
            edges.push((id(i, j, 3) as u32, id(i + 1, j + 1, 2) as u32));
        }
    }
    CubicGraph::from_edges(m * per * 4, &edges)
}

/// Small named graphs and families used by tests and the census tools.
pub mod families {
    use super::*;

    pub fn complete4() -> CubicGraph {
        CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    pub fn k33() -> CubicGraph {
        let e: Vec<(u32, u32)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        CubicGraph::from_edges(6, &e).unwrap()
    }

    /// Prism over the `k`-gon: nodes `0..k` and `k..2k`.
    pub fn prism(k: usize) -> CubicGraph {
        let k32 = k as u32;
        let mut e = Vec::new();
        for i in 0..k32 {
            e.push((i, (i + 1) % k32));
            e.push((k32 + i, k32 + (i + 1) % k32));
            e.push((i, k32 + i));
        }
        CubicGraph::from_edges(2 * k, &e).unwrap()
    }

    /// Möbius ladder on `n` nodes (`n` even, at least 6).
    pub fn mobius_ladder(n: usize) -> CubicGraph {
        circulant(n, 1)
    }

    /// Cubic circulant with connection set `{±a, n/2}`.
    pub fn circulant(n: usize, a: usize) -> CubicGraph {
        let mut e = Vec::new();
        for i in 0..n {
            e.push((i as u32, ((i + a) % n) as u32));
            if i < n / 2 {
                e.push((i as u32, (i + n / 2) as u32));
            }
        }
        CubicGraph::from_edges(n, &e).unwrap()
    }

    pub fn generalized_petersen(n: usize, k: usize) -> CubicGraph {
        let mut e = Vec::new();
        for i in 0..n {
            e.push((i as u32, ((i + 1) % n) as u32));
            e.push(((n + i) as u32, (n + (i + k) % n) as u32));
            e.push((i as u32, (n + i) as u32));
        }
        CubicGraph::from_edges(2 * n, &e).unwrap()
    }

    pub fn petersen() -> CubicGraph {
        generalized_petersen(5, 2)
    }

    pub fn heawood() -> CubicGraph {
        lcf(14, &[5, -5])
    }

    /// Graph from LCF notation: a Hamiltonian cycle plus chords.
    pub fn lcf(n: usize, jumps: &[i64]) -> CubicGraph {
        let mut set = std::collections::BTreeSet::new();
        for i in 0..n {
            set.insert((i.min((i + 1) % n) as u32, i.max((i + 1) % n) as u32));
            let j = (i as i64 + jumps[i % jumps.len()]).rem_euclid(n as i64) as usize;
            set.insert((i.min(j) as u32, i.max(j) as u32));
        }
        let e: Vec<(u32, u32)> = set.into_iter().collect();
        CubicGraph::from_edges(n, &e).unwrap()
    }

    /// Distinct connected cubic circulants on `n` nodes, one per isomorphism class.
    pub fn cubic_circulants(n: usize) -> Vec<CubicGraph> {
        let mut forms = BTreeMap::new();
        if n % 2 == 1 || n < 4 {
            return Vec::new();
        }
        for a in 1..n / 2 {
            let mut e = Vec::new();
            for i in 0..n {
                e.push((i as u32, ((i + a) % n) as u32));
                if i < n / 2 {
                    e.push((i as u32, (i + n / 2) as u32));
                }
            }
            if let Ok(g) = CubicGraph::from_edges(n, &e) {
                forms.entry(canonical_form(&g)).or_insert(g);
            }
        }
        forms.into_values().collect()
    }
}
