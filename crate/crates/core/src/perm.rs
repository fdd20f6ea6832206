//! Permutations and permutation groups.
//!
//! Points are `0..degree`. Groups are stored as a stabilizer chain built by the
//! deterministic Schreier-Sims algorithm, which gives exact orders, membership
//! tests, point stabilizers and element enumeration.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image list is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("generator of degree {got} in a group of degree {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error("group order overflows 128 bits")]
    OrderOverflow,
}

/// A permutation stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(PermError::NotAPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Self, PermError> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        for c in cycles {
            for (k, &p) in c.iter().enumerate() {
                if p as usize >= n {
                    return Err(PermError::NotAPermutation(n));
                }
                img[p as usize] = c[(k + 1) % c.len()];
            }
        }
        Perm::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, p: u32) -> u32 {
        self.0[p as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `self` followed by `other`: `x -> other(self(x))`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn pow(&self, mut k: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn first_moved(&self) -> Option<u32> {
        self.0.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i as u32)
    }

    /// Non-trivial cycles, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut c = vec![s as u32];
            seen[s] = true;
            let mut x = self.0[s];
            while x as usize != s {
                seen[x as usize] = true;
                c.push(x);
                x = self.0[x as usize];
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Sorted list of all cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.0[x] as usize;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().into_iter().fold(1u64, |a, l| lcm(a, l as u64))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    // transversal[p] maps `base` to `p`
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base as usize] = Some(Perm::identity(degree));
        Level { base, gens: Vec::new(), orbit: vec![base], transversal }
    }

    fn rebuild_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for g in &self.gens {
                let q = g.apply(p);
                if self.transversal[q as usize].is_none() {
                    let t = self.transversal[p as usize].as_ref().unwrap().then(g);
                    self.transversal[q as usize] = Some(t);
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }
}

/// A permutation group with a stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    levels: Vec<Level>,
    prefix: Vec<u32>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, gens: Vec::new(), levels: Vec::new(), prefix: Vec::new() }
    }

    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self, PermError> {
        Self::with_base(degree, gens, &[])
    }

    /// Builds the chain so that the base starts with `prefix`.
    pub fn with_base(degree: usize, gens: Vec<Perm>, prefix: &[u32]) -> Result<Self, PermError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch { expected: degree, got: g.degree() });
            }
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let mut grp = PermGroup { degree, gens: gens.clone(), levels: Vec::new(), prefix: prefix.to_vec() };
        for (i, &b) in prefix.iter().enumerate() {
            let _ = i;
            grp.levels.push(Level::new(b, degree));
        }
        for g in gens {
            grp.extend(0, g);
        }
        Ok(grp)
    }

    fn sift_from(&self, start: usize, g: &Perm) -> (Perm, usize) {
        let mut h = g.clone();
        for j in start..self.levels.len() {
            let lv = &self.levels[j];
            let p = h.apply(lv.base);
            match &lv.transversal[p as usize] {
                Some(t) => h = h.then(&t.inverse()),
                None => return (h, j),
            }
        }
        let n = self.levels.len();
        (h, n)
    }

    fn extend(&mut self, i: usize, g: Perm) {
        let (res, _) = self.sift_from(i, &g);
        if res.is_identity() {
            return;
        }
        if i == self.levels.len() {
            let b = if i < self.prefix.len() { self.prefix[i] } else { g.first_moved().unwrap() };
            self.levels.push(Level::new(b, self.degree));
        }
        self.levels[i].gens.push(g);
        self.levels[i].rebuild_orbit();
        let lv = &self.levels[i];
        let mut schreier = Vec::new();
        for &p in &lv.orbit {
            let tp = lv.transversal[p as usize].as_ref().unwrap();
            for s in &lv.gens {
                let q = s.apply(p);
                let tq = lv.transversal[q as usize].as_ref().unwrap();
                let h = tp.then(s).then(&tq.inverse());
                if !h.is_identity() {
                    schreier.push(h);
                }
            }
        }
        for h in schreier {
            self.extend(i + 1, h);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    /// The base points of the stabilizer chain.
    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u128 {
        self.checked_order().expect("group order overflows u128")
    }

    pub fn checked_order(&self) -> Result<u128, PermError> {
        let mut o: u128 = 1;
        for l in &self.levels {
            o = o.checked_mul(l.orbit.len() as u128).ok_or(PermError::OrderOverflow)?;
        }
        Ok(o)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift_from(0, g).0.is_identity()
    }

    /// Orbits on points, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let n = self.degree;
        let mut comp = vec![u32::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != u32::MAX {
                continue;
            }
            let id = out.len() as u32;
            let mut orb = vec![s as u32];
            comp[s] = id;
            let mut i = 0;
            while i < orb.len() {
                let p = orb[i];
                for g in &self.gens {
                    let q = g.apply(p);
                    if comp[q as usize] == u32::MAX {
                        comp[q as usize] = id;
                        orb.push(q);
                    }
                }
                i += 1;
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }

    pub fn orbit_of(&self, p: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[p as usize] = true;
        let mut orb = vec![p];
        let mut i = 0;
        while i < orb.len() {
            let x = orb[i];
            for g in &self.gens {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orb.push(y);
                }
            }
            i += 1;
        }
        orb.sort_unstable();
        orb
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit_of(0).len() == self.degree
    }

    /// Pointwise stabilizer of `points`.
    pub fn pointwise_stabilizer(&self, points: &[u32]) -> PermGroup {
        let full = PermGroup::with_base(self.degree, self.gens.clone(), points).expect("degrees already checked");
        let k = points.len();
        let mut gens = Vec::new();
        for l in &full.levels[k.min(full.levels.len())..] {
            gens.extend(l.gens.iter().cloned());
        }
        PermGroup {
            degree: self.degree,
            gens,
            levels: full.levels[k.min(full.levels.len())..].to_vec(),
            prefix: Vec::new(),
        }
    }

    pub fn stabilizer(&self, p: u32) -> PermGroup {
        self.pointwise_stabilizer(&[p])
    }

    /// Some element mapping `from` to `to`, if the two points share an orbit.
    pub fn transporter(&self, from: u32, to: u32) -> Option<Perm> {
        let g = PermGroup::with_base(self.degree, self.gens.clone(), &[from]).ok()?;
        g.levels
            .first()
            .and_then(|l| l.transversal[to as usize].clone())
            .or_else(|| (from == to).then(|| Perm::identity(self.degree)))
    }

    /// All elements mapping `from` to `to`.
    pub fn elements_mapping(&self, from: u32, to: u32, cap: u128) -> Result<Vec<Perm>, PermError> {
        let Some(t) = self.transporter(from, to) else { return Ok(Vec::new()) };
        let stab = self.stabilizer(from);
        Ok(stab.elements(cap)?.into_iter().map(|s| s.then(&t)).collect())
    }

    /// Every element, failing if the order exceeds `cap`.
    pub fn elements(&self, cap: u128) -> Result<Vec<Perm>, PermError> {
        let order = self.checked_order()?;
        if order > cap {
            return Err(PermError::CapExceeded { order, cap });
        }
        let mut acc = vec![Perm::identity(self.degree)];
        for lv in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * lv.orbit.len());
            for s in &acc {
                for &p in &lv.orbit {
                    next.push(s.then(lv.transversal[p as usize].as_ref().unwrap()));
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// True if every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.contains_group(other)
    }

    /// Image group `g^-1 H g`.
    pub fn conjugate(&self, g: &Perm) -> PermGroup {
        let gi = g.inverse();
        let gens = self.gens.iter().map(|h| gi.then(h).then(g)).collect();
        PermGroup::new(self.degree, gens).expect("same degree")
    }
}

/// Element table of a finite group, used for subgroup enumeration.
struct ElementTable {
    base: Vec<u32>,
    elems: Vec<Perm>,
    inv: Vec<usize>,
    index: HashMap<Vec<u32>, usize>,
    order: Vec<u64>,
    cycle_type_id: Vec<usize>,
}

impl ElementTable {
    fn new(g: &PermGroup, cap: u128) -> Result<Self, PermError> {
        let elems = g.elements(cap)?;
        let base = g.base();
        let key = |p: &Perm| base.iter().map(|&b| p.apply(b)).collect::<Vec<u32>>();
        let index: HashMap<Vec<u32>, usize> = elems.iter().enumerate().map(|(i, p)| (key(p), i)).collect();
        let inv = elems.iter().map(|p| index[&key(&p.inverse())]).collect();
        let mut ct_ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut cycle_type_id = Vec::with_capacity(elems.len());
        let mut order = Vec::with_capacity(elems.len());
        for p in &elems {
            let ct = p.cycle_type();
            order.push(ct.iter().fold(1u64, |a, &l| lcm(a, l as u64)));
            let n = ct_ids.len();
            cycle_type_id.push(*ct_ids.entry(ct).or_insert(n));
        }
        Ok(ElementTable { base, elems, inv, index, order, cycle_type_id })
    }

    fn identity(&self) -> usize {
        let key: Vec<u32> = self.base.clone();
        self.index[&key]
    }

    /// Index of `a` followed by `b`.
    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        let (pa, pb) = (&self.elems[a], &self.elems[b]);
        let key: Vec<u32> = self.base.iter().map(|&x| pb.apply(pa.apply(x))).collect();
        self.index[&key]
    }

    /// Index of `g^-1 u g`.
    #[inline]
    fn conj(&self, u: usize, g: usize) -> usize {
        let (pu, pg, pgi) = (&self.elems[u], &self.elems[g], &self.elems[self.inv[g]]);
        let key: Vec<u32> = self.base.iter().map(|&x| pg.apply(pu.apply(pgi.apply(x)))).collect();
        self.index[&key]
    }
}

#[derive(Clone)]
struct Sub {
    gens: Vec<usize>,
    members: Vec<u64>,
    size: usize,
}

impl Sub {
    fn has(&self, i: usize) -> bool {
        self.members[i / 64] >> (i % 64) & 1 == 1
    }
}

fn closure(t: &ElementTable, gens: &[usize], limit: usize) -> Option<Sub> {
    let n = t.elems.len();
    let mut members = vec![0u64; n.div_ceil(64)];
    let id = t.identity();
    members[id / 64] |= 1 << (id % 64);
    let mut list = vec![id];
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for &g in gens {
            let y = t.mul(x, g);
            if members[y / 64] >> (y % 64) & 1 == 0 {
                members[y / 64] |= 1 << (y % 64);
                list.push(y);
                if list.len() > limit {
                    return None;
                }
            }
        }
        i += 1;
    }
    Some(Sub { gens: gens.to_vec(), size: list.len(), members })
}

/// Order, orbit lengths and cycle-type histogram of a subgroup.
type Invariant = (usize, Vec<usize>, Vec<(usize, usize)>);

fn invariant(t: &ElementTable, s: &Sub, degree: usize) -> Invariant {
    let mut hist: HashMap<usize, usize> = HashMap::new();
    for i in 0..t.elems.len() {
        if s.has(i) {
            *hist.entry(t.cycle_type_id[i]).or_default() += 1;
        }
    }
    let mut hist: Vec<(usize, usize)> = hist.into_iter().collect();
    hist.sort_unstable();
    let perms: Vec<Perm> = s.gens.iter().map(|&g| t.elems[g].clone()).collect();
    let grp = PermGroup { degree, gens: perms, levels: Vec::new(), prefix: Vec::new() };
    let mut orbit_lengths: Vec<usize> = grp.orbits().iter().map(|o| o.len()).collect();
    orbit_lengths.sort_unstable();
    (s.size, orbit_lengths, hist)
}

fn conjugate_in(t: &ElementTable, a: &Sub, b: &Sub) -> bool {
    (0..t.elems.len()).any(|g| a.gens.iter().all(|&u| b.has(t.conj(u, g))))
}

/// Representatives of the conjugacy classes of subgroups of `g` of order
/// `target`.
///
/// Subgroups are grown from the trivial group by adjoining one cyclic
/// subgroup of prime-power order at a time, keeping only groups whose order
/// divides `target` and one representative per conjugacy class at every step.
/// Every group is generated by its elements of prime-power order, so each
/// target subgroup has a conjugate reachable this way.
pub fn subgroups_of_order(g: &PermGroup, target: u128, cap: u128) -> Result<Vec<PermGroup>, PermError> {
    let order = g.checked_order()?;
    if order > cap {
        return Err(PermError::CapExceeded { order, cap });
    }
    if target == 0 || order % target != 0 {
        return Ok(Vec::new());
    }
    let t = ElementTable::new(g, cap)?;
    let target = target as usize;

    // one generator per cyclic subgroup of prime-power order > 1
    let mut cyc_gens = Vec::new();
    let mut seen_cyclic = vec![false; t.elems.len()];
    for i in 0..t.elems.len() {
        let o = t.order[i];
        if o == 1 || seen_cyclic[i] || !is_prime_power(o) || !(target as u64).is_multiple_of(o) {
            continue;
        }
        // mark all generators of <i>
        let mut x = i;
        for k in 1..=o {
            if gcd(k, o) == 1 {
                seen_cyclic[x] = true;
            }
            x = t.mul(x, i);
        }
        cyc_gens.push(i);
    }

    let trivial = closure(&t, &[], 1).unwrap();
    let mut reps: Vec<Sub> = vec![trivial];
    let mut buckets: HashMap<Invariant, Vec<usize>> = HashMap::new();
    buckets.insert(invariant(&t, &reps[0], g.degree), vec![0]);
    let mut qi = 0;
    while qi < reps.len() {
        let u = reps[qi].clone();
        qi += 1;
        if u.size == target {
            continue;
        }
        for &z in &cyc_gens {
            if u.has(z) {
                continue;
            }
            let mut gens = u.gens.clone();
            gens.push(z);
            let Some(v) = closure(&t, &gens, target) else { continue };
            if !target.is_multiple_of(v.size) {
                continue;
            }
            let key = invariant(&t, &v, g.degree);
            let bucket = buckets.entry(key).or_default();
            if bucket.iter().any(|&j| conjugate_in(&t, &v, &reps[j])) {
                continue;
            }
            bucket.push(reps.len());
            reps.push(v);
        }
    }

    Ok(reps
        .into_iter()
        .filter(|s| s.size == target)
        .map(|s| {
            let gens = s.gens.iter().map(|&i| t.elems[i].clone()).collect();
            PermGroup::new(g.degree, gens).expect("same degree")
        })
        .collect())
}

/// Order-independent fingerprint of a set of permutations.
type Elements = Vec<Vec<u32>>;

fn set_key<'a>(elems: impl Iterator<Item = &'a [u32]>) -> (usize, u64, u64) {
    let (mut n, mut a, mut b) = (0usize, 0u64, 0u64);
    for e in elems {
        let mut h = DefaultHasher::new();
        e.hash(&mut h);
        let x = h.finish();
        n += 1;
        a = a.wrapping_add(x);
        b ^= x.rotate_left(17).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    }
    (n, a, b)
}

/// Elements generated by `gens`, or `None` once there are more than `limit`.
fn close(degree: usize, gens: &[&[u32]], limit: usize) -> Option<Vec<Vec<u32>>> {
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.clone()]);
    let mut list = vec![id];
    let mut i = 0;
    while i < list.len() {
        for g in gens {
            let y: Vec<u32> = list[i].iter().map(|&p| g[p as usize]).collect();
            if !seen.contains(&y) {
                if list.len() == limit {
                    return None;
                }
                seen.insert(y.clone());
                list.push(y);
            }
        }
        i += 1;
    }
    Some(list)
}

/// Representatives of the conjugacy classes of transitive subgroups of `g`
/// whose point stabilizers have order `s`.
///
/// Such a subgroup `H` is grown from its stabilizer `K` of point 0 by adjoining,
/// one at a time, an element that carries 0 to the least point not yet reached;
/// every intermediate group must still have `K` as its stabilizer. `K` only
/// needs to run over classes of subgroups of the stabilizer of 0, since
/// conjugating by that stabilizer moves any `H` to one with a representative
/// stabilizer.
pub fn transitive_subgroups(g: &PermGroup, s: u128, cap: u128) -> Result<Vec<PermGroup>, PermError> {
    let order = g.checked_order()?;
    if order > cap {
        return Err(PermError::CapExceeded { order, cap });
    }
    let n = g.degree();
    if n == 0 || !g.is_transitive() || order % (s * n as u128) != 0 {
        return Ok(Vec::new());
    }
    let limit = s as usize * n;
    let all = g.elements(cap)?;
    let mut mapping: Vec<Option<Vec<Perm>>> = vec![None; n];
    let mut conj_seen: HashSet<(usize, u64, u64)> = HashSet::new();
    let mut out = Vec::new();
    for k in subgroups_of_order(&g.stabilizer(0), s, cap)? {
        let kgens: Vec<Vec<u32>> = k.generators().iter().map(|p| p.0.clone()).collect();
        let mut visited: HashSet<(usize, u64, u64)> = HashSet::new();
        // generators and elements of each partial subgroup
        let mut stack: Vec<(Vec<Vec<u32>>, Elements)> = Vec::new();
        let start = close(n, &kgens.iter().map(Vec::as_slice).collect::<Vec<_>>(), limit).expect("|K| = s");
        stack.push((kgens, start));
        while let Some((gens, elems)) = stack.pop() {
            let mut reached = vec![false; n];
            for e in &elems {
                reached[e[0] as usize] = true;
            }
            let Some(v) = reached.iter().position(|&r| !r) else {
                let key = set_key(elems.iter().map(Vec::as_slice));
                if conj_seen.contains(&key) {
                    continue;
                }
                for x in &all {
                    let xi = x.inverse();
                    // x^-1 h x as images
                    let conj =
                        elems.iter().map(|h| (0..n).map(|p| x.0[h[xi.0[p] as usize] as usize]).collect::<Vec<u32>>());
                    let conj: Vec<Vec<u32>> = conj.collect();
                    conj_seen.insert(set_key(conj.iter().map(Vec::as_slice)));
                }
                let perms = gens.iter().map(|p| Perm(p.clone())).collect();
                out.push(PermGroup::new(n, perms)?);
                continue;
            };
            let cands = mapping[v].get_or_insert_with(|| g.elements_mapping(0, v as u32, cap).unwrap_or_default());
            for x in cands.iter() {
                let mut more: Vec<&[u32]> = gens.iter().map(Vec::as_slice).collect();
                more.push(&x.0);
                let Some(c) = close(n, &more, limit) else { continue };
                let orbit = {
                    let mut r = vec![false; n];
                    c.iter().filter(|e| !std::mem::replace(&mut r[e[0] as usize], true)).count()
                };
                if c.len() != s as usize * orbit {
                    continue;
                }
                if !visited.insert(set_key(c.iter().map(Vec::as_slice))) {
                    continue;
                }
                let mut next = gens.clone();
                next.push(x.0.clone());
                stack.push((next, c));
            }
        }
    }
    Ok(out)
}

/// Whether `a` and `b` are conjugate inside `g`.
pub fn are_conjugate(g: &PermGroup, a: &PermGroup, b: &PermGroup, cap: u128) -> Result<bool, PermError> {
    if a.order() != b.order() {
        return Ok(false);
    }
    let mut la: Vec<usize> = a.orbits().iter().map(|o| o.len()).collect();
    let mut lb: Vec<usize> = b.orbits().iter().map(|o| o.len()).collect();
    la.sort_unstable();
    lb.sort_unstable();
    if la != lb {
        return Ok(false);
    }
    for x in g.elements(cap)? {
        let xi = x.inverse();
        if a.gens.iter().all(|h| b.contains(&xi.then(h).then(&x))) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn is_prime_power(mut n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            return n == 1;
        }
        p += 1;
    }
    true
}
