//! Simplicial surfaces given by their faces.
//!
//! Face `i` of a surface is node `i` of its face graph, so face ids are
//! 0-based positions in the face list. Vertex labels are the positive
//! integers of the input.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cdc::{self, Cycle, CycleDoubleCover};
use crate::graph::{ArcColouring, CubicGraph};
use crate::perm::{Perm, PermGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no faces")]
    Empty,
    #[error("face {0:?} does not have three distinct positive vertices")]
    BadFace(Vec<u32>),
    #[error("duplicate face {0:?}")]
    DuplicateFace([u32; 3]),
    #[error("edge {{{0}, {1}}} lies in {2} faces")]
    EdgeDegree(u32, u32, usize),
    #[error("link of vertex {0} is not a single cycle")]
    LinkNotCycle(u32),
    #[error("surface is not strongly connected")]
    Disconnected,
    #[error("surface is not face-transitive")]
    NotFaceTransitive,
    #[error("not a Grünbaum colouring")]
    InvalidColouring,
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(u32, u32),
    #[error("Euler characteristic {0} exceeds 2")]
    ChiTooLarge(i64),
}

/// A closed, strongly connected simplicial surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSurface {
    faces: Vec<[u32; 3]>,
    vertices: Vec<u32>,
    edges: Vec<(u32, u32)>,
    edge_faces: Vec<[u32; 2]>,
    umbrellas: Vec<Cycle>,
}

impl SimplicialSurface {
    pub fn new(faces: Vec<[u32; 3]>) -> Result<Self, SurfaceError> {
        if faces.is_empty() {
            return Err(SurfaceError::Empty);
        }
        let mut sorted = Vec::with_capacity(faces.len());
        let mut seen = HashSet::new();
        for f in faces {
            let mut s = f;
            s.sort_unstable();
            if s[0] == 0 || s[0] == s[1] || s[1] == s[2] {
                return Err(SurfaceError::BadFace(f.to_vec()));
            }
            if !seen.insert(s) {
                return Err(SurfaceError::DuplicateFace(s));
            }
            sorted.push(s);
        }
        let faces = sorted;

        let mut by_edge: BTreeMap<(u32, u32), Vec<u32>> = BTreeMap::new();
        for (i, f) in faces.iter().enumerate() {
            for (a, b) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
                by_edge.entry((a, b)).or_default().push(i as u32);
            }
        }
        let mut edges = Vec::with_capacity(by_edge.len());
        let mut edge_faces = Vec::with_capacity(by_edge.len());
        for ((a, b), fs) in by_edge {
            if fs.len() != 2 {
                return Err(SurfaceError::EdgeDegree(a, b, fs.len()));
            }
            edges.push((a, b));
            edge_faces.push([fs[0], fs[1]]);
        }

        let mut vertices: Vec<u32> = faces.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        let mut at: HashMap<u32, Vec<u32>> = HashMap::new();
        for (i, f) in faces.iter().enumerate() {
            for &v in f {
                at.entry(v).or_default().push(i as u32);
            }
        }
        let mut umbrellas = Vec::with_capacity(vertices.len());
        for &v in &vertices {
            umbrellas.push(umbrella(&faces, v, &at[&v])?);
        }

        let s = SimplicialSurface { faces, vertices, edges, edge_faces, umbrellas };
        if !s.strongly_connected() {
            return Err(SurfaceError::Disconnected);
        }
        Ok(s)
    }

    fn strongly_connected(&self) -> bool {
        let mut nb: Vec<Vec<u32>> = vec![Vec::new(); self.faces.len()];
        for &[a, b] in &self.edge_faces {
            nb[a as usize].push(b);
            nb[b as usize].push(a);
        }
        let mut seen = vec![false; self.faces.len()];
        seen[0] = true;
        let mut stack = vec![0u32];
        let mut count = 1;
        while let Some(f) = stack.pop() {
            for &g in &nb[f as usize] {
                if !seen[g as usize] {
                    seen[g as usize] = true;
                    count += 1;
                    stack.push(g);
                }
            }
        }
        count == self.faces.len()
    }

    /// Faces as sorted vertex triples, in input order.
    pub fn faces(&self) -> &[[u32; 3]] {
        &self.faces
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Umbrella of the `i`-th vertex as a cycle of face ids.
    pub fn umbrella(&self, i: usize) -> &Cycle {
        &self.umbrellas[i]
    }

    pub fn degree(&self, v: u32) -> Option<usize> {
        self.vertices.binary_search(&v).ok().map(|i| self.umbrellas[i].len())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn is_orientable(&self) -> bool {
        let edge_index: HashMap<(u32, u32), usize> = self.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut orient: Vec<Option<[u32; 3]>> = vec![None; self.faces.len()];
        orient[0] = Some(self.faces[0]);
        let mut stack = vec![0usize];
        while let Some(f) = stack.pop() {
            let o = orient[f].unwrap();
            for k in 0..3 {
                let (p, q) = (o[k], o[(k + 1) % 3]);
                let e = edge_index[&(p.min(q), p.max(q))];
                let [a, b] = self.edge_faces[e];
                let g = if a as usize == f { b } else { a } as usize;
                let r = self.faces[g].iter().copied().find(|&x| x != p && x != q).unwrap();
                let want = [q, p, r];
                match orient[g] {
                    None => {
                        orient[g] = Some(want);
                        stack.push(g);
                    }
                    Some(h) => {
                        if !same_rotation(h, want) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Face graph with node `i` for face `i`.
    pub fn face_graph(&self) -> CubicGraph {
        let pairs: Vec<(u32, u32)> = self.edge_faces.iter().map(|&[a, b]| (a, b)).collect();
        CubicGraph::from_edges(self.faces.len(), &pairs).expect("face graph of a surface is cubic and connected")
    }

    /// Umbrellas as cycles of the face graph, one per vertex.
    pub fn vertex_defining_cdc(&self) -> CycleDoubleCover {
        CycleDoubleCover::new(&self.face_graph(), self.umbrellas.iter().cloned())
            .expect("umbrellas cover every arc twice")
    }

    /// Aut(X) acting on face ids, found as the stabilizer of the umbrella
    /// cover inside the automorphism group of the face graph.
    pub fn lambda_image(&self) -> PermGroup {
        cdc::stabilizer(&self.face_graph(), &self.vertex_defining_cdc())
    }

    pub fn automorphism_order(&self) -> u128 {
        self.lambda_image().order()
    }

    pub fn is_face_transitive(&self) -> bool {
        self.lambda_image().is_transitive()
    }

    /// Action of a face permutation on vertex positions.
    pub fn vertex_action(&self, p: &Perm) -> Perm {
        let index: HashMap<Vec<u32>, usize> = self
            .umbrellas
            .iter()
            .enumerate()
            .map(|(i, u)| {
                let mut s = u.nodes().to_vec();
                s.sort_unstable();
                (s, i)
            })
            .collect();
        let images = self
            .umbrellas
            .iter()
            .map(|u| {
                let mut s: Vec<u32> = u.nodes().iter().map(|&f| p.apply(f)).collect();
                s.sort_unstable();
                index[&s] as u32
            })
            .collect();
        Perm::from_images(images).expect("automorphisms permute umbrellas")
    }

    pub fn vertex_face_type(&self) -> Result<VertexFaceType, SurfaceError> {
        self.vertex_face_type_with(&self.lambda_image())
    }

    pub fn vertex_face_type_with(&self, h: &PermGroup) -> Result<VertexFaceType, SurfaceError> {
        if !h.is_transitive() {
            return Err(SurfaceError::NotFaceTransitive);
        }
        let gens: Vec<Perm> = h.generators().iter().map(|p| self.vertex_action(p)).collect();
        let on_vertices = PermGroup::new(self.vertices.len(), gens).expect("degree matches");
        let v = on_vertices.orbits().len() as u8;
        let s = (h.order() / self.faces.len() as u128) as u8;
        Ok(VertexFaceType { v, s, subtype: None })
    }

    /// Canonical face list: faces in canonical order, vertices renumbered
    /// 1.. by first appearance.
    pub fn canonical_form(&self) -> SurfaceForm {
        let g = self.face_graph();
        let (relabel, _) = cdc::canonical_labelling(&g, &self.vertex_defining_cdc());
        let mut ordered = vec![[0u32; 3]; self.faces.len()];
        for (i, f) in self.faces.iter().enumerate() {
            ordered[relabel.apply(i as u32) as usize] = *f;
        }
        // order each face's vertices by their canonical umbrella, then renumber
        let umb_key: HashMap<u32, Vec<u32>> = self
            .vertices
            .iter()
            .zip(&self.umbrellas)
            .map(|(&v, u)| {
                let mut s: Vec<u32> = u.nodes().iter().map(|&f| relabel.apply(f)).collect();
                s.sort_unstable();
                (v, s)
            })
            .collect();
        let mut names: HashMap<u32, u32> = HashMap::new();
        let mut out = Vec::with_capacity(ordered.len());
        for f in ordered {
            let mut vs = f.to_vec();
            vs.sort_by(|a, b| umb_key[a].cmp(&umb_key[b]));
            let mut t = [0u32; 3];
            for (k, v) in vs.into_iter().enumerate() {
                let next = names.len() as u32 + 1;
                t[k] = *names.entry(v).or_insert(next);
            }
            t.sort_unstable();
            out.push(t);
        }
        SurfaceForm(out)
    }

    pub fn is_isomorphic(&self, other: &SimplicialSurface) -> bool {
        self.num_faces() == other.num_faces()
            && self.num_vertices() == other.num_vertices()
            && self.canonical_form() == other.canonical_form()
    }

    pub fn relabel_vertices(&self, f: impl Fn(u32) -> u32) -> Result<SimplicialSurface, SurfaceError> {
        SimplicialSurface::new(self.faces.iter().map(|t| [f(t[0]), f(t[1]), f(t[2])]).collect())
    }

    /// JSON text `{"faces":[[a,b,c],...]}` with sorted faces.
    pub fn to_json(&self) -> String {
        let mut faces = self.faces.clone();
        faces.sort_unstable();
        serde_json::to_string(&SurfaceFile { faces: faces.iter().map(|f| f.to_vec()).collect() })
            .expect("plain integers serialize")
    }

    /// Reads JSON `{"faces": ...}` or a brace list such as `{{1,2,3},{1,2,4}}`.
    pub fn parse(text: &str) -> Result<Self, SurfaceError> {
        let t = text.trim();
        let raw: Vec<Vec<u32>> = if t.starts_with('{') && t.contains("\"faces\"") {
            let file: SurfaceFile = serde_json::from_str(t).map_err(|e| SurfaceError::Parse(e.to_string()))?;
            file.faces
        } else if t.starts_with('[') {
            serde_json::from_str(t).map_err(|e| SurfaceError::Parse(e.to_string()))?
        } else {
            parse_braces(t)?
        };
        let mut faces = Vec::with_capacity(raw.len());
        for f in raw {
            if f.len() != 3 {
                return Err(SurfaceError::Parse(format!("face {f:?} does not have 3 vertices")));
            }
            faces.push([f[0], f[1], f[2]]);
        }
        SimplicialSurface::new(faces)
    }
}

#[derive(Serialize, Deserialize)]
struct SurfaceFile {
    faces: Vec<Vec<u32>>,
}

fn parse_braces(t: &str) -> Result<Vec<Vec<u32>>, SurfaceError> {
    let mut faces = Vec::new();
    let mut depth = 0i32;
    let mut cur: Option<Vec<u32>> = None;
    let mut num = String::new();
    let flush = |num: &mut String, cur: &mut Option<Vec<u32>>| -> Result<(), SurfaceError> {
        if !num.is_empty() {
            let x = num.parse::<u32>().map_err(|_| SurfaceError::Parse(format!("bad integer {num}")))?;
            match cur {
                Some(c) => c.push(x),
                None => return Err(SurfaceError::Parse("number outside a face".into())),
            }
            num.clear();
        }
        Ok(())
    };
    for ch in t.chars() {
        match ch {
            '{' => {
                flush(&mut num, &mut cur)?;
                depth += 1;
                cur = Some(Vec::new());
            }
            '}' => {
                flush(&mut num, &mut cur)?;
                depth -= 1;
                if depth < 0 {
                    return Err(SurfaceError::Parse("unbalanced braces".into()));
                }
                if let Some(c) = cur.take() {
                    if !c.is_empty() {
                        faces.push(c);
                    }
                }
            }
            '0'..='9' => num.push(ch),
            ',' => flush(&mut num, &mut cur)?,
            c if c.is_whitespace() || c == '\\' || c == '&' => flush(&mut num, &mut cur)?,
            c => return Err(SurfaceError::Parse(format!("unexpected character {c:?}"))),
        }
    }
    if depth != 0 {
        return Err(SurfaceError::Parse("unbalanced braces".into()));
    }
    if faces.is_empty() {
        return Err(SurfaceError::Parse("no faces".into()));
    }
    Ok(faces)
}

fn same_rotation(a: [u32; 3], b: [u32; 3]) -> bool {
    (0..3).any(|r| (0..3).all(|k| a[k] == b[(k + r) % 3]))
}

fn umbrella(faces: &[[u32; 3]], v: u32, at: &[u32]) -> Result<Cycle, SurfaceError> {
    // link edges: for each face at v, the opposite edge
    let mut link: HashMap<u32, Vec<u32>> = HashMap::new();
    for &f in at {
        let others: Vec<u32> = faces[f as usize].iter().copied().filter(|&x| x != v).collect();
        link.entry(others[0]).or_default().push(f);
        link.entry(others[1]).or_default().push(f);
    }
    if link.values().any(|fs| fs.len() != 2) {
        return Err(SurfaceError::LinkNotCycle(v));
    }
    let mut order = vec![at[0]];
    let start = at[0];
    let mut prev = u32::MAX;
    let mut cur = start;
    loop {
        // step to the other face sharing an edge {v, x} with cur
        let next = faces[cur as usize]
            .iter()
            .filter(|&&x| x != v)
            .map(|x| link[x].iter().copied().find(|&g| g != cur).unwrap())
            .find(|&g| g != prev)
            .unwrap();
        if next == start {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
        if order.len() > at.len() {
            return Err(SurfaceError::LinkNotCycle(v));
        }
    }
    if order.len() != at.len() || order.len() < 3 {
        return Err(SurfaceError::LinkNotCycle(v));
    }
    Cycle::new(order).map_err(|_| SurfaceError::LinkNotCycle(v))
}

/// Canonical face list of a surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceForm(Vec<[u32; 3]>);

impl SurfaceForm {
    pub fn faces(&self) -> &[[u32; 3]] {
        &self.0
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        self.to_string().into_bytes()
    }

    /// Short stable identifier: 64-bit FNV-1a of the text form, in hex.
    pub fn id(&self) -> String {
        crate::fnv_hex(&self.to_bytes())
    }

    pub fn surface(&self) -> SimplicialSurface {
        SimplicialSurface::new(self.0.clone()).expect("canonical form of a valid surface")
    }
}

impl std::fmt::Display for SurfaceForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut s = String::new();
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                s.push(';');
            }
            let _ = write!(s, "{},{},{}", t[0], t[1], t[2]);
        }
        f.write_str(&s)
    }
}

/// Vertex-orbit count and face-stabilizer order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexFaceType {
    pub v: u8,
    pub s: u8,
    pub subtype: Option<u8>,
}

/// Smallest vertex count allowed by the Heawood bound for Euler characteristic `chi`.
pub fn min_vertex_bound(chi: i64) -> Result<u64, SurfaceError> {
    if chi > 2 {
        return Err(SurfaceError::ChiTooLarge(chi));
    }
    let d = (49 - 24 * chi) as u64;
    let s = d.isqrt();
    Ok(if s * s == d { (8 + s) / 2 } else { (7 + s) / 2 + 1 })
}

pub fn is_minimal(x: &SimplicialSurface) -> bool {
    min_vertex_bound(x.euler_characteristic()).is_ok_and(|b| b == x.num_vertices() as u64)
}

/// An edge colouring that is bijective on every face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GruenbaumColouring {
    colours: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Mirror,
    Rotational,
}

impl GruenbaumColouring {
    pub fn new(x: &SimplicialSurface, colour: impl Fn(u32, u32) -> u8) -> Result<Self, SurfaceError> {
        let colours: Vec<u8> = x.edges.iter().map(|&(a, b)| colour(a, b)).collect();
        let c = GruenbaumColouring { colours };
        for f in &x.faces {
            let mut cs = [c.get(x, f[0], f[1]), c.get(x, f[0], f[2]), c.get(x, f[1], f[2])];
            cs.sort_unstable();
            if cs != [1, 2, 3] {
                return Err(SurfaceError::InvalidColouring);
            }
        }
        Ok(c)
    }

    /// Colours edges by the colour of the dual arc of the face graph.
    pub fn from_arc_colouring(x: &SimplicialSurface, kappa: &ArcColouring) -> Result<Self, SurfaceError> {
        let index: HashMap<(u32, u32), usize> = x.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        GruenbaumColouring::new(x, |a, b| {
            let [f, g] = x.edge_faces[index[&(a, b)]];
            kappa.colour(f, g)
        })
    }

    fn get(&self, x: &SimplicialSurface, a: u32, b: u32) -> u8 {
        let i = x.edges.binary_search(&(a.min(b), a.max(b))).expect("edge of the surface");
        self.colours[i]
    }

    pub fn colour(&self, x: &SimplicialSurface, a: u32, b: u32) -> Result<u8, SurfaceError> {
        x.edges.binary_search(&(a.min(b), a.max(b))).map(|i| self.colours[i]).map_err(|_| SurfaceError::NotAnEdge(a, b))
    }
}

/// Mirror if the two edges flanking `{a, b}` at a shared vertex have equal
/// colours, rotational otherwise.
pub fn classify_edge(x: &SimplicialSurface, w: &GruenbaumColouring, a: u32, b: u32) -> Result<EdgeKind, SurfaceError> {
    let i = x.edges.binary_search(&(a.min(b), a.max(b))).map_err(|_| SurfaceError::NotAnEdge(a, b))?;
    let [f, g] = x.edge_faces[i];
    let apex = |h: u32| x.faces[h as usize].iter().copied().find(|&y| y != a && y != b).unwrap();
    let (c, d) = (apex(f), apex(g));
    let at_a = w.get(x, a, c) == w.get(x, a, d);
    let at_b = w.get(x, b, c) == w.get(x, b, d);
    assert_eq!(at_a, at_b, "Grünbaum colouring gives the same verdict at both ends");
    Ok(if at_a { EdgeKind::Mirror } else { EdgeKind::Rotational })
}

/// Suspension of the `n`-cycle: the bipyramid with apexes `n+1`, `n+2`.
pub fn suspension(n: u32) -> SimplicialSurface {
    let mut faces = Vec::new();
    for i in 1..=n {
        let j = i % n + 1;
        faces.push([i, j, n + 1]);
        faces.push([i, j, n + 2]);
    }
    SimplicialSurface::new(faces).expect("suspension is a sphere")
}

pub fn tetrahedron() -> SimplicialSurface {
    SimplicialSurface::new(vec![[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap()
}
