//! Face-transitive surfaces with a given face graph.
//!
//! For each conjugacy class of node-transitive subgroups `H` of order
//! `s·|V|` the constructors build candidate cycle double covers from the arc
//! orbits of `H`, turn the vertex-faithful ones into surfaces, and keep a
//! surface only if its full automorphism group acts on faces exactly as `H`
//! and its subtype is the one constructed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cdc::{self, Cycle, CycleDoubleCover, Pattern};
use crate::graph::{self, ArcColouring, CubicGraph};
use crate::perm::{self, Perm, PermError, PermGroup};
use crate::surface::{SimplicialSurface, SurfaceError, SurfaceForm};

/// The thirteen subtypes, in census column order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Subtype {
    T31,
    T22,
    T21(u8),
    T11(u8),
    T12,
    T13(u8),
    T16,
}

impl Subtype {
    pub const ALL: [Subtype; 13] = [
        Subtype::T31,
        Subtype::T22,
        Subtype::T21(1),
        Subtype::T21(2),
        Subtype::T21(3),
        Subtype::T11(1),
        Subtype::T11(2),
        Subtype::T11(3),
        Subtype::T11(4),
        Subtype::T12,
        Subtype::T13(1),
        Subtype::T13(2),
        Subtype::T16,
    ];

    /// Vertex-orbit count and face-stabilizer order.
    pub fn vs(self) -> (u8, u8) {
        match self {
            Subtype::T31 => (3, 1),
            Subtype::T22 => (2, 2),
            Subtype::T21(_) => (2, 1),
            Subtype::T11(_) => (1, 1),
            Subtype::T12 => (1, 2),
            Subtype::T13(_) => (1, 3),
            Subtype::T16 => (1, 6),
        }
    }

    pub fn column(self) -> usize {
        Subtype::ALL.iter().position(|&t| t == self).unwrap()
    }
}

impl fmt::Display for Subtype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (v, s) = self.vs();
        match self {
            Subtype::T21(i) | Subtype::T11(i) | Subtype::T13(i) => write!(f, "({v},{s}).{i}"),
            _ => write!(f, "({v},{s})"),
        }
    }
}

impl FromStr for Subtype {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim();
        Subtype::ALL.into_iter().find(|x| x.to_string() == t).ok_or_else(|| format!("unknown subtype {s:?}"))
    }
}

impl From<Subtype> for String {
    fn from(t: Subtype) -> String {
        t.to_string()
    }
}

impl TryFrom<String> for Subtype {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Largest automorphism group of the graph to enumerate subgroups in.
    pub max_aut: u128,
    /// Search π over all of Aut(g) instead of the cover's stabilizer.
    pub wide_pi_search: bool,
    /// Let σ range over Aut(g) where the definitions allow it.
    pub wide_sigma: bool,
    /// Skip generalized m-gon graphs with `m >= 2^k`.
    pub mgon_shortcut: bool,
    /// Restrict to these subtypes.
    pub subtypes: Option<Vec<Subtype>>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            max_aut: 100_000,
            wide_pi_search: false,
            wide_sigma: false,
            mgon_shortcut: true,
            subtypes: None,
        }
    }
}

impl ClassifyOptions {
    fn wants(&self, t: Subtype) -> bool {
        self.subtypes.as_ref().is_none_or(|s| s.contains(&t))
    }
}

/// A verified surface together with the group and cover it came from.
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub group: PermGroup,
    pub subtype: Subtype,
    pub cdc: CycleDoubleCover,
    pub surface: SimplicialSurface,
    pub form: SurfaceForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkipReason {
    NotNodeTransitive,
    GeneralizedMgon { m: usize, k: usize },
    GroupTooLarge { order: u128, cap: u128 },
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkipReason::NotNodeTransitive => write!(f, "not node-transitive"),
            SkipReason::GeneralizedMgon { m, k } => write!(f, "generalized m-gon obstruction (m={m}, k={k})"),
            SkipReason::GroupTooLarge { order, cap } => write!(f, "group too large ({order} > {cap})"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Classification {
    Done(Vec<ConstructionResult>),
    Skipped(SkipReason),
}

impl Classification {
    pub fn results(&self) -> &[ConstructionResult] {
        match self {
            Classification::Done(r) => r,
            Classification::Skipped(_) => &[],
        }
    }
}

/// All face-transitive surfaces with face graph `g`, one per isomorphism class.
pub fn classify_graph(g: &CubicGraph, opts: &ClassifyOptions) -> Classification {
    let aut = graph::automorphism_group(g);
    if !aut.is_transitive() {
        return Classification::Skipped(SkipReason::NotNodeTransitive);
    }
    if opts.mgon_shortcut {
        if let Some((m, k)) = graph::detect_generalized_mgon(g, &aut) {
            if m >= 1 << k {
                return Classification::Skipped(SkipReason::GeneralizedMgon { m, k });
            }
        }
    }
    let order = match aut.checked_order() {
        Ok(o) if o <= opts.max_aut => o,
        Ok(o) => return Classification::Skipped(SkipReason::GroupTooLarge { order: o, cap: opts.max_aut }),
        Err(_) => return Classification::Skipped(SkipReason::GroupTooLarge { order: u128::MAX, cap: opts.max_aut }),
    };
    let n = g.order() as u128;
    let mut found: BTreeMap<SurfaceForm, ConstructionResult> = BTreeMap::new();
    for s in [1u128, 2, 3, 6] {
        if order % (s * n) != 0 {
            continue;
        }
        let subs = match perm::transitive_subgroups(&aut, s, opts.max_aut) {
            Ok(v) => v,
            Err(PermError::CapExceeded { order, cap }) => {
                return Classification::Skipped(SkipReason::GroupTooLarge { order, cap })
            }
            Err(_) => return Classification::Skipped(SkipReason::GroupTooLarge { order, cap: opts.max_aut }),
        };
        for h in subs {
            for r in construct_all(g, &h, &aut, opts) {
                found.entry(r.form.clone()).or_insert(r);
            }
        }
    }
    Classification::Done(found.into_values().collect())
}

/// Runs every constructor that matches the order of `h`.
pub fn construct_all(
    g: &CubicGraph,
    h: &PermGroup,
    aut: &PermGroup,
    opts: &ClassifyOptions,
) -> Vec<ConstructionResult> {
    let n = g.order() as u128;
    let ctx = Ctx { g, h, aut, opts };
    let mut out = match h.order() / n {
        1 => {
            let mut v = ctx.construct_31();
            v.extend(ctx.construct_21());
            v.extend(ctx.construct_11());
            v
        }
        2 => {
            let mut v = ctx.construct_22();
            v.extend(ctx.construct_12());
            v
        }
        3 => ctx.construct_13(),
        6 => ctx.construct_16(),
        _ => Vec::new(),
    };
    out.retain(|r| opts.wants(r.subtype));
    out
}

pub fn construct_31(g: &CubicGraph, h: &PermGroup, opts: &ClassifyOptions) -> Vec<ConstructionResult> {
    with_ctx(g, h, opts, |c| c.construct_31())
}

pub fn construct_22(g: &CubicGraph, h: &PermGroup, opts: &ClassifyOptions) -> Vec<ConstructionResult> {
    with_ctx(g, h, opts, |c| c.construct_22())
}

pub fn construct_21(g: &CubicGraph, h: &PermGroup, opts: &ClassifyOptions) -> Vec<ConstructionResult> {
    with_ctx(g, h, opts, |c| c.construct_21())
}

pub fn construct_11(g: &CubicGraph, h: &PermGroup, opts: &ClassifyOptions) -> Vec<ConstructionResult> {
    with_ctx(g, h, opts, |c| c.construct_11())
}

pub fn construct_12(g: &CubicGraph, h: &PermGroup, opts: &ClassifyOptions) -> Vec<ConstructionResult> {
    with_ctx(g, h, opts, |c| c.construct_12())
}

pub fn construct_13(g: &CubicGraph, h: &PermGroup, opts: &ClassifyOptions) -> Vec<ConstructionResult> {
    with_ctx(g, h, opts, |c| c.construct_13())
}

pub fn construct_16(g: &CubicGraph, h: &PermGroup, opts: &ClassifyOptions) -> Vec<ConstructionResult> {
    with_ctx(g, h, opts, |c| c.construct_16())
}

fn with_ctx(
    g: &CubicGraph,
    h: &PermGroup,
    opts: &ClassifyOptions,
    f: impl FnOnce(&Ctx) -> Vec<ConstructionResult>,
) -> Vec<ConstructionResult> {
    let n = g.order() as u128;
    if h.degree() != g.order() || !h.is_transitive() || !h.order().is_multiple_of(n) {
        return Vec::new();
    }
    if !h.generators().iter().all(|p| g.is_automorphism(p)) {
        return Vec::new();
    }
    let aut = graph::automorphism_group(g);
    f(&Ctx { g, h, aut: &aut, opts })
}

/// How the subtype index of a candidate is decided.
#[derive(Clone, Copy)]
enum Claim {
    Fixed(Subtype),
    /// Shift test: index `yes` if some π with π(F1) = F_len and
    /// α(π, F1..F_len) equal to the generated cycle exists, else `no`.
    Shift {
        len: usize,
        yes: Subtype,
        no: Subtype,
    },
}

struct Candidate {
    cycles: BTreeSet<Cycle>,
    claim: Claim,
    seed: Vec<u32>,
    alpha: Option<Cycle>,
}

struct Ctx<'a> {
    g: &'a CubicGraph,
    h: &'a PermGroup,
    aut: &'a PermGroup,
    opts: &'a ClassifyOptions,
}

impl Ctx<'_> {
    fn n(&self) -> usize {
        self.g.order()
    }

    fn kappa(&self) -> ArcColouring {
        graph::arc_orbit_colouring(self.g, self.h).expect("H acts on g")
    }

    fn two_orbits(&self, k: &ArcColouring) -> bool {
        k.sizes() == [self.n(), self.n() / 2]
    }

    fn three_orbits(&self, k: &ArcColouring) -> bool {
        self.n().is_multiple_of(2) && k.sizes() == [self.n() / 2; 3]
    }

    fn sigmas(&self, from: u32, to: u32, wide: bool) -> Vec<Perm> {
        let grp = if wide { self.aut } else { self.h };
        grp.elements_mapping(from, to, self.opts.max_aut).unwrap_or_default()
    }

    /// Paths from node 0 whose arc colours follow `word`.
    fn seed_paths(&self, k: &ArcColouring, word: &[u8]) -> Vec<Vec<u32>> {
        let mut paths = vec![vec![0u32]];
        for &c in word {
            let mut next = Vec::new();
            for p in paths {
                let last = *p.last().unwrap();
                for u in self.g.neighbours(last) {
                    if k.colour(last, u) == c && !p.contains(&u) {
                        let mut q = p.clone();
                        q.push(u);
                        next.push(q);
                    }
                }
            }
            paths = next;
        }
        paths
    }

    fn alpha_candidates(
        &self,
        k: &ArcColouring,
        word: &[u8],
        wide_sigma: bool,
        base: &BTreeSet<Cycle>,
        claim: Claim,
    ) -> Vec<Candidate> {
        let mut out = Vec::new();
        for seed in self.seed_paths(k, word) {
            let last = *seed.last().unwrap();
            for sigma in self.sigmas(seed[0], last, wide_sigma) {
                let Ok(Some(c)) = cdc::alpha_cycle(self.g, &sigma, &seed) else { continue };
                let mut cycles = base.clone();
                cycles.extend(cdc::cycle_orbit(self.h, &c));
                out.push(Candidate { cycles, claim, seed: seed.clone(), alpha: Some(c) });
            }
        }
        out
    }

    fn finish(&self, cands: Vec<Candidate>) -> Vec<ConstructionResult> {
        let mut seen: BTreeSet<Vec<Cycle>> = BTreeSet::new();
        let mut out = Vec::new();
        for cand in cands {
            let key: Vec<Cycle> = cand.cycles.iter().cloned().collect();
            if !seen.insert(key.clone()) {
                continue;
            }
            if !cdc::is_cycle_double_cover(self.g, &key).unwrap_or(false) {
                continue;
            }
            let cover = CycleDoubleCover::new(self.g, key).expect("checked above");
            let Ok(x) = cdc::surface_from_cdc(self.g, &cover) else { continue };
            let lambda = x.lambda_image();
            if lambda.order() != self.h.order() || !lambda.contains_group(self.h) {
                continue;
            }
            let claimed = match cand.claim {
                Claim::Fixed(t) => t,
                Claim::Shift { len, yes, no } => {
                    let c = cand.alpha.as_ref().expect("shift claims come from an alpha cycle");
                    let space = if self.opts.wide_pi_search { self.aut } else { &lambda };
                    if shift_exists(self.g, space, &cand.seed[..len], c, self.opts.max_aut) {
                        yes
                    } else {
                        no
                    }
                }
            };
            if !verify_construction_with(&x, &lambda, claimed, self.aut, self.opts) {
                continue;
            }
            let form = x.canonical_form();
            out.push(ConstructionResult { group: self.h.clone(), subtype: claimed, cdc: cover, surface: x, form });
        }
        out
    }

    fn construct_31(&self) -> Vec<ConstructionResult> {
        let k = self.kappa();
        if self.h.order() != self.n() as u128 || !self.three_orbits(&k) {
            return Vec::new();
        }
        let mut cycles = BTreeSet::new();
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            cycles.extend(cdc::pattern_cycles(self.g, &k, &Pattern::Word(vec![a, b])));
        }
        self.finish(vec![Candidate { cycles, claim: Claim::Fixed(Subtype::T31), seed: Vec::new(), alpha: None }])
    }

    fn construct_22(&self) -> Vec<ConstructionResult> {
        let k = self.kappa();
        if self.h.order() != 2 * self.n() as u128 || !self.two_orbits(&k) {
            return Vec::new();
        }
        let mono = cdc::pattern_cycles(self.g, &k, &Pattern::Mono(1));
        // seed (F_m', F_1', F_2') with F_1' = node 0
        let mut cands = Vec::new();
        let f1 = 0u32;
        let fm = self.g.neighbours(f1).into_iter().find(|&u| k.colour(f1, u) == 2).unwrap();
        for f2 in self.g.neighbours(f1).into_iter().filter(|&u| k.colour(f1, u) == 1) {
            let seed = vec![fm, f1, f2];
            for sigma in self.sigmas(fm, f2, false) {
                let Ok(Some(c)) = cdc::alpha_cycle(self.g, &sigma, &seed) else { continue };
                let mut cycles = mono.clone();
                cycles.extend(cdc::cycle_orbit(self.h, &c));
                cands.push(Candidate { cycles, claim: Claim::Fixed(Subtype::T22), seed: seed.clone(), alpha: Some(c) });
            }
        }
        self.finish(cands)
    }

    fn construct_21(&self) -> Vec<ConstructionResult> {
        let k = self.kappa();
        if self.h.order() != self.n() as u128 {
            return Vec::new();
        }
        if self.two_orbits(&k) {
            let mono = cdc::pattern_cycles(self.g, &k, &Pattern::Mono(1));
            let claim = Claim::Shift { len: 3, yes: Subtype::T21(1), no: Subtype::T21(2) };
            let cands = self.alpha_candidates(&k, &[2, 1, 2, 1], self.opts.wide_sigma, &mono, claim);
            self.finish(cands)
        } else if self.three_orbits(&k) {
            let mut cands = Vec::new();
            for c in 1..=3u8 {
                let (a, b) = others(c);
                let mut cycles = cdc::pattern_cycles(self.g, &k, &Pattern::Word(vec![a, b]));
                cycles.extend(cdc::pattern_cycles(self.g, &k, &Pattern::Word(vec![c, a, c, b])));
                cands.push(Candidate { cycles, claim: Claim::Fixed(Subtype::T21(3)), seed: Vec::new(), alpha: None });
            }
            self.finish(cands)
        } else {
            Vec::new()
        }
    }

    fn construct_11(&self) -> Vec<ConstructionResult> {
        let k = self.kappa();
        if self.h.order() != self.n() as u128 {
            return Vec::new();
        }
        if self.three_orbits(&k) {
            let mut cands = Vec::new();
            let cycles = cdc::pattern_cycles(self.g, &k, &Pattern::Word(vec![1, 2, 3]));
            cands.push(Candidate { cycles, claim: Claim::Fixed(Subtype::T11(1)), seed: Vec::new(), alpha: None });
            for a in 1..=3u8 {
                let (b, c) = others(a);
                let cycles = cdc::pattern_cycles(self.g, &k, &Pattern::Word(vec![a, b, c, a, c, b]));
                cands.push(Candidate { cycles, claim: Claim::Fixed(Subtype::T11(2)), seed: Vec::new(), alpha: None });
            }
            self.finish(cands)
        } else if self.two_orbits(&k) {
            // every umbrella is a (2,1,1)-cycle, so no mono-coloured cycles join the cover
            let claim = Claim::Shift { len: 4, yes: Subtype::T11(3), no: Subtype::T11(4) };
            let cands = self.alpha_candidates(&k, &[2, 1, 1, 2, 1, 1], self.opts.wide_sigma, &BTreeSet::new(), claim);
            self.finish(cands)
        } else {
            Vec::new()
        }
    }

    fn construct_12(&self) -> Vec<ConstructionResult> {
        let k = self.kappa();
        if self.h.order() != 2 * self.n() as u128 || !self.two_orbits(&k) {
            return Vec::new();
        }
        let cands =
            self.alpha_candidates(&k, &[2, 1, 1], self.opts.wide_sigma, &BTreeSet::new(), Claim::Fixed(Subtype::T12));
        self.finish(cands)
    }

    fn construct_13(&self) -> Vec<ConstructionResult> {
        if self.h.order() != 3 * self.n() as u128 {
            return Vec::new();
        }
        let any = ArcColouring::from_colours(self.g, |_, _| 1);
        let claim = Claim::Shift { len: 2, yes: Subtype::T13(1), no: Subtype::T13(2) };
        let cands = self.alpha_candidates(&any, &[1, 1], false, &BTreeSet::new(), claim);
        self.finish(cands)
    }

    fn construct_16(&self) -> Vec<ConstructionResult> {
        if self.h.order() != 6 * self.n() as u128 {
            return Vec::new();
        }
        let any = ArcColouring::from_colours(self.g, |_, _| 1);
        let cands = self.alpha_candidates(&any, &[1], false, &BTreeSet::new(), Claim::Fixed(Subtype::T16));
        self.finish(cands)
    }
}

fn others(c: u8) -> (u8, u8) {
    match c {
        1 => (2, 3),
        2 => (1, 3),
        _ => (1, 2),
    }
}

/// Whether some π in `space` with π(seed[0]) = seed[last] has
/// α(π, seed) equal to `target`.
fn shift_exists(g: &CubicGraph, space: &PermGroup, seed: &[u32], target: &Cycle, cap: u128) -> bool {
    let last = *seed.last().unwrap();
    let Ok(pis) = space.elements_mapping(seed[0], last, cap) else { return false };
    pis.iter().any(|pi| matches!(cdc::alpha_cycle(g, pi, seed), Ok(Some(c)) if &c == target))
}

/// Subtype of a face-transitive surface, derived from its umbrellas.
pub fn subtype_of(x: &SimplicialSurface) -> Result<Subtype, SurfaceError> {
    subtype_of_with(x, &x.lambda_image(), None, &ClassifyOptions::default())
}

fn subtype_of_with(
    x: &SimplicialSurface,
    h: &PermGroup,
    aut_g: Option<&PermGroup>,
    opts: &ClassifyOptions,
) -> Result<Subtype, SurfaceError> {
    let vf = x.vertex_face_type_with(h)?;
    let g = x.face_graph();
    let wide;
    let space = if opts.wide_pi_search {
        wide = match aut_g {
            Some(a) => a.clone(),
            None => graph::automorphism_group(&g),
        };
        &wide
    } else {
        h
    };
    let k = graph::arc_orbit_colouring(&g, h).expect("λ-image acts on the face graph");
    let umbrella = |pred: &dyn Fn(&[u8]) -> bool| -> Option<(Vec<u32>, Vec<u8>)> {
        (0..x.num_vertices()).find_map(|i| {
            let c = x.umbrella(i).nodes().to_vec();
            let w: Vec<u8> = (0..c.len()).map(|j| k.colour(c[j], c[(j + 1) % c.len()])).collect();
            pred(&w).then_some((c, w))
        })
    };
    // rotate so that the arc c0-c1 has colour 2
    let starting_at_2 = |(c, w): (Vec<u32>, Vec<u8>)| -> Vec<u32> {
        let r = w.iter().position(|&x| x == 2).unwrap();
        (0..c.len()).map(|j| c[(j + r) % c.len()]).collect()
    };
    let shift = |c: &[u32], len: usize| -> bool {
        let target = Cycle::new(c.to_vec()).expect("umbrella is a cycle");
        shift_exists(&g, space, &c[..len], &target, opts.max_aut)
    };
    Ok(match (vf.v, vf.s) {
        (3, 1) => Subtype::T31,
        (2, 2) => Subtype::T22,
        (1, 2) => Subtype::T12,
        (1, 6) => Subtype::T16,
        (1, 3) => {
            let c = x.umbrella(0).nodes().to_vec();
            if shift(&c, 2) {
                Subtype::T13(1)
            } else {
                Subtype::T13(2)
            }
        }
        (2, 1) => {
            if k.num_colours() == 3 {
                Subtype::T21(3)
            } else {
                let u = umbrella(&|w| w.contains(&2)).expect("some umbrella meets the short orbit");
                if shift(&starting_at_2(u), 3) {
                    Subtype::T21(1)
                } else {
                    Subtype::T21(2)
                }
            }
        }
        (1, 1) => {
            if k.num_colours() == 3 {
                let (_, w) = umbrella(&|_| true).unwrap();
                if (0..w.len()).all(|i| w[i] == w[(i + 3) % w.len()]) {
                    Subtype::T11(1)
                } else {
                    Subtype::T11(2)
                }
            } else {
                let u = umbrella(&|w| w.contains(&2)).expect("umbrellas meet the short orbit");
                if shift(&starting_at_2(u), 4) {
                    Subtype::T11(3)
                } else {
                    Subtype::T11(4)
                }
            }
        }
        _ => unreachable!("vertex-face type outside the admissible list"),
    })
}

/// True iff the λ-image of `x` is exactly `h` and `x` has subtype `claimed`.
pub fn verify_construction(
    g: &CubicGraph,
    h: &PermGroup,
    cdc: &CycleDoubleCover,
    x: &SimplicialSurface,
    claimed: Subtype,
) -> bool {
    if x.face_graph() != *g || x.vertex_defining_cdc() != *cdc {
        return false;
    }
    let lambda = x.lambda_image();
    lambda.same_group(h)
        && verify_construction_with(x, &lambda, claimed, &graph::automorphism_group(g), &ClassifyOptions::default())
}

fn verify_construction_with(
    x: &SimplicialSurface,
    lambda: &PermGroup,
    claimed: Subtype,
    aut: &PermGroup,
    opts: &ClassifyOptions,
) -> bool {
    subtype_of_with(x, lambda, Some(aut), opts).is_ok_and(|t| t == claimed)
}

/// Counts from the exhaustive pipeline, used as an oracle for [`classify_graph`].
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub cdcs: usize,
    pub cdcs_up_to_iso: usize,
    pub vertex_faithful: usize,
    /// Covers that are chordless with pairwise arc overlap at most one but
    /// still fail one of the node conditions.
    pub node_condition_failures: usize,
    /// Face-transitive surfaces, one per isomorphism class, sorted by canonical form.
    pub surfaces: Vec<(SurfaceForm, SimplicialSurface)>,
}

/// Enumerates every cycle double cover of `g` and keeps the face-transitive surfaces.
pub fn brute_force_surfaces(g: &CubicGraph, cycle_cap: usize) -> Result<OracleReport, cdc::CdcError> {
    let all = cdc::brute_force_cdcs(g, cycle_cap)?;
    let aut = graph::automorphism_group(g);
    let iso = cdc::up_to_isomorphism(&aut, &all);
    let (mut vertex_faithful, mut node_condition_failures) = (0, 0);
    let mut surfaces = BTreeMap::new();
    for c in &all {
        let f = cdc::faithfulness(g, c);
        if !f.holds() {
            if f.chordless && f.share_at_most_one_arc {
                node_condition_failures += 1;
            }
            continue;
        }
        vertex_faithful += 1;
        let Ok(x) = cdc::surface_from_cdc(g, c) else { continue };
        if x.is_face_transitive() {
            surfaces.entry(x.canonical_form()).or_insert(x);
        }
    }
    Ok(OracleReport {
        cdcs: all.len(),
        cdcs_up_to_iso: iso.len(),
        vertex_faithful,
        node_condition_failures,
        surfaces: surfaces.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::surface::tetrahedron;

    fn sym4_on_k4() -> PermGroup {
        graph::automorphism_group(&complete4())
    }

    #[test]
    fn subtype_tags() {
        for t in Subtype::ALL {
            assert_eq!(t.to_string().parse::<Subtype>().unwrap(), t);
        }
        assert_eq!(Subtype::T21(3).to_string(), "(2,1).3");
        assert_eq!(Subtype::T16.column(), 12);
    }

    #[test]
    fn k4_gives_tetrahedron() {
        let res = classify_graph(&complete4(), &ClassifyOptions::default());
        let r = res.results();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].subtype, Subtype::T16);
        assert!(r[0].surface.is_isomorphic(&tetrahedron()));
    }

    #[test]
    fn a4_on_k4_is_rejected() {
        let g = complete4();
        let a4 = perm::subgroups_of_order(&sym4_on_k4(), 12, 1000).unwrap().remove(0);
        assert!(construct_13(&g, &a4, &ClassifyOptions::default()).is_empty());
        let t = tetrahedron();
        let c1 = t.vertex_defining_cdc();
        assert!(!verify_construction(&g, &a4, &c1, &t, Subtype::T13(1)));
        assert!(verify_construction(&g, &sym4_on_k4(), &c1, &t, Subtype::T16));
    }

    #[test]
    fn k4_order_four_and_eight_subgroups_give_nothing() {
        let g = complete4();
        let opts = ClassifyOptions::default();
        for h in perm::subgroups_of_order(&sym4_on_k4(), 4, 1000).unwrap() {
            assert!(construct_31(&g, &h, &opts).is_empty());
        }
        for h in perm::subgroups_of_order(&sym4_on_k4(), 8, 1000).unwrap() {
            assert!(construct_12(&g, &h, &opts).is_empty());
        }
    }

    #[test]
    fn heawood_gives_seven_vertex_torus() {
        let res = classify_graph(&heawood(), &ClassifyOptions::default());
        let t13: Vec<_> = res.results().iter().filter(|r| r.subtype == Subtype::T13(1)).collect();
        assert_eq!(t13.len(), 1);
        assert_eq!(t13[0].surface.num_vertices(), 7);
        assert_eq!(t13[0].surface.euler_characteristic(), 0);
    }

    #[test]
    fn petersen_gives_projective_plane() {
        let res = classify_graph(&petersen(), &ClassifyOptions::default());
        let r = res.results();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].subtype, Subtype::T16);
        assert_eq!(r[0].surface.num_vertices(), 6);
    }

    #[test]
    fn non_transitive_is_skipped() {
        // K4 with one vertex truncated to a triangle
        let h = CubicGraph::from_edges(
            8,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 6), (3, 7), (4, 6), (4, 7), (5, 6), (5, 7)],
        )
        .unwrap();
        assert!(matches!(
            classify_graph(&h, &ClassifyOptions::default()),
            Classification::Skipped(SkipReason::NotNodeTransitive)
        ));
    }
}
