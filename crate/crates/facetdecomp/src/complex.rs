//! Simplicial complexes as antichains of bitset facets, plus the local
//! constructions everything else is built from: link, deletion, skeleton,
//! minimal nonfaces, f-vectors and Alexander duality.
//!
//! Vertices are labelled `1..=n` and a face is a `u64` bitmask (bit `i-1`
//! set means vertex `i` is present), so subset tests are single machine
//! instructions. The facet list is kept deduplicated, inclusion-free and
//! sorted colexicographically (numeric order on the masks), which makes
//! complex equality a plain `Vec` comparison.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Hard cap on the vertex count so faces fit in one machine word.
pub const MAX_VERTICES: usize = 63;

/// A face: a subset of `{1..n}` stored as a bitmask. The empty set is a
/// valid face of dimension -1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub fn from_vertices(vertices: &[usize]) -> Result<Face> {
        let mut bits = 0u64;
        for &v in vertices {
            if v == 0 {
                return Err(Error::NonPositiveLabel);
            }
            if v > MAX_VERTICES {
                return Err(Error::TooManyVertices { got: v, max: MAX_VERTICES });
            }
            bits |= 1 << (v - 1);
        }
        Ok(Face(bits))
    }

    /// The full face `{1..n}`.
    pub fn full(n: usize) -> Face {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            Face(0)
        } else {
            Face(u64::MAX >> (64 - n))
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn vertices(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.card());
        let mut b = self.0;
        while b != 0 {
            let v = b.trailing_zeros() as usize + 1;
            out.push(v);
            b &= b - 1;
        }
        out
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Dimension is cardinality minus one; the empty face has dimension -1.
    pub fn dim(self) -> i64 {
        self.card() as i64 - 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= MAX_VERTICES && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersect(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        debug_assert!(v >= 1 && v <= MAX_VERTICES);
        Face(self.0 | (1 << (v - 1)))
    }

    pub fn without(self, v: usize) -> Face {
        debug_assert!(v >= 1 && v <= MAX_VERTICES);
        Face(self.0 & !(1 << (v - 1)))
    }

    /// Complement within `{1..n}`.
    pub fn complement(self, n: usize) -> Face {
        Face(Face::full(n).0 & !self.0)
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All `k`-element subsets of `{1..n}` in colex (numeric) order, via
/// Gosper's hack.
pub fn k_subsets(n: usize, k: usize) -> Vec<Face> {
    assert!(n <= MAX_VERTICES);
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![Face::EMPTY];
    }
    let limit = Face::full(n).0;
    let mut out = Vec::new();
    let mut x: u64 = (1 << k) - 1;
    while x <= limit {
        out.push(Face(x));
        // Gosper's hack; n <= 63 keeps x + c inside u64
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

/// Exact binomial coefficient with overflow checking.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow)?;
        acc /= (i + 1) as u128;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow)
}

/// Face counts per dimension, `f_0..f_d`. The empty complex has an empty
/// vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<u64>);

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A simplicial complex on vertex set `{1..n}`, represented by its facets.
///
/// Two distinguished values: the *void* complex has no facets at all, and
/// the *empty* complex `{∅}` has the single facet `∅`. They behave
/// differently under most operations and are never conflated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Complex {
    n: usize,
    facets: Vec<Face>,
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets=[", self.n)?;
        for (i, fc) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{fc}")?;
        }
        write!(f, "])")
    }
}

/// Reduce a face family to its inclusion-maximal antichain, deduplicated
/// and in colex order.
fn maximalize(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable();
    faces.dedup();
    // larger-cardinality faces can never be dominated by smaller ones
    let mut keep: Vec<Face> = Vec::with_capacity(faces.len());
    for (i, &f) in faces.iter().enumerate() {
        let dominated = faces
            .iter()
            .enumerate()
            .any(|(j, &g)| j != i && f != g && f.is_subset_of(g));
        if !dominated {
            keep.push(f);
        }
    }
    keep
}

impl Complex {
    /// Build a complex from arbitrary vertex-subset lists. Dominated and
    /// duplicate inputs are absorbed; the result is the canonical antichain.
    /// With no declared vertex count, `n` is the largest label occurring.
    pub fn from_facets(facet_list: &[Vec<usize>], declared_n: Option<usize>) -> Result<Complex> {
        if let Some(n) = declared_n {
            if n > MAX_VERTICES {
                return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
            }
        }
        let mut faces = Vec::with_capacity(facet_list.len());
        let mut max_label = 0usize;
        for fl in facet_list {
            let f = Face::from_vertices(fl)?;
            if let Some(n) = declared_n {
                for &v in fl {
                    if v > n {
                        return Err(Error::LabelTooLarge { label: v, n });
                    }
                }
            }
            max_label = max_label.max(fl.iter().copied().max().unwrap_or(0));
            faces.push(f);
        }
        let n = declared_n.unwrap_or(max_label);
        Ok(Complex { n, facets: maximalize(faces) })
    }

    /// Build from bitset faces directly; callers must keep labels within `n`.
    pub fn from_faces(n: usize, faces: Vec<Face>) -> Complex {
        debug_assert!(n <= MAX_VERTICES);
        debug_assert!(faces.iter().all(|f| f.is_subset_of(Face::full(n))));
        Complex { n, facets: maximalize(faces) }
    }

    /// The void complex (no faces at all, not even `∅`).
    pub fn void(n: usize) -> Complex {
        Complex { n, facets: Vec::new() }
    }

    /// The empty complex `{∅}`.
    pub fn empty(n: usize) -> Complex {
        Complex { n, facets: vec![Face::EMPTY] }
    }

    /// The full simplex on `{1..n}`.
    pub fn simplex(n: usize) -> Complex {
        Complex { n, facets: vec![Face::full(n)] }
    }

    /// The `d`-dimensional skeleton of the simplex on `{1..n}`: all
    /// `(d+1)`-subsets as facets. `d = -1` yields the empty complex.
    pub fn simplex_skeleton(n: usize, d: i64) -> Result<Complex> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        if d < -1 || d >= n as i64 {
            return Err(Error::DimOutOfRange(d));
        }
        Ok(Complex { n, facets: k_subsets(n, (d + 1) as usize) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for `{∅}` exactly.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dimension(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    /// `c = n - dim - 1`. Undefined for the void complex.
    pub fn codimension(&self) -> Result<usize> {
        let d = self.dimension().ok_or(Error::VoidComplex)?;
        Ok((self.n as i64 - d - 1) as usize)
    }

    /// Union of all facets.
    pub fn covered_vertices(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |a, &f| a.union(f))
    }

    /// Pure: all facets share one cardinality *and* every label `1..=n` is
    /// covered by some facet (the standing convention that each `{i}` is a
    /// face; `is_pure_with(false)` drops the coverage requirement).
    pub fn is_pure(&self) -> bool {
        self.is_pure_with(true)
    }

    /// Purity with the coverage requirement optionally disabled.
    pub fn is_pure_with(&self, require_cover: bool) -> bool {
        let equicardinal = match self.facets.first() {
            None => true,
            Some(f0) => self.facets.iter().all(|f| f.card() == f0.card()),
        };
        if !equicardinal {
            return false;
        }
        !require_cover || self.covered_vertices() == Face::full(self.n)
    }

    /// Whether `f` is a face, i.e. contained in some facet.
    pub fn contains_face(&self, f: Face) -> bool {
        self.facets.iter().any(|&g| f.is_subset_of(g))
    }

    /// The `(dim+1)`-subsets of `{1..n}` that are *not* faces. Defined only
    /// for pure complexes.
    pub fn antifacets(&self) -> Result<Vec<Face>> {
        let d = self.dimension().ok_or(Error::VoidComplex)?;
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(k_subsets(self.n, (d + 1) as usize)
            .into_iter()
            .filter(|&s| !self.contains_face(s))
            .collect())
    }

    /// `ē(Δ) = C(n,c) - e(Δ)`, the number of antifacets.
    pub fn antifacet_count(&self) -> Result<usize> {
        Ok(self.antifacets()?.len())
    }

    /// Re-house a face family on compacted labels `1..n'` where `n'` is the
    /// number of covered vertices. Returns the compacted complex together
    /// with the injection back to original labels (`map[i]` is the original
    /// label of new vertex `i+1`).
    fn compactify(n: usize, facets: Vec<Face>) -> (Complex, Vec<usize>) {
        let _ = n;
        let covered = facets.iter().fold(Face::EMPTY, |a, &f| a.union(f));
        let map = covered.vertices();
        let mut new_facets = Vec::with_capacity(facets.len());
        for f in facets {
            let mut bits = 0u64;
            for (new_idx, &old) in map.iter().enumerate() {
                if f.contains(old) {
                    bits |= 1 << new_idx;
                }
            }
            new_facets.push(Face(bits));
        }
        new_facets.sort_unstable();
        (Complex { n: map.len(), facets: new_facets }, map)
    }

    /// Link of a face `F ∈ Δ`, re-housed on compacted labels. The second
    /// component maps new labels back to original ones.
    pub fn link(&self, f: Face) -> Result<(Complex, Vec<usize>)> {
        if !self.contains_face(f) {
            return Err(Error::NotAFace(format!("{f}")));
        }
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|&&g| f.is_subset_of(g))
            .map(|&g| g.difference(f))
            .collect();
        Ok(Self::compactify(self.n, facets))
    }

    /// Link of a single vertex.
    pub fn vertex_link(&self, v: usize) -> Result<(Complex, Vec<usize>)> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        self.link(Face::EMPTY.with(v))
    }

    /// Deletion of a vertex: the maximal faces avoiding `v`, re-housed on
    /// compacted labels as for `link`.
    pub fn deletion(&self, v: usize) -> Result<(Complex, Vec<usize>)> {
        Ok(Self::compactify(self.n, self.deletion_facets(v)?))
    }

    /// Deletion facets on the *original* labels (no compaction). Used by
    /// the shedding-vertex test, which compares against `self.facets`.
    pub fn deletion_facets(&self, v: usize) -> Result<Vec<Face>> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(maximalize(
            self.facets.iter().map(|&f| f.without(v)).collect(),
        ))
    }

    /// The `k`-skeleton: all faces of dimension `k` as facets. `k = -1`
    /// yields `{∅}` (on the same vertex set).
    pub fn skeleton(&self, k: i64) -> Result<Complex> {
        let d = self.dimension().ok_or(Error::VoidComplex)?;
        if k < -1 || k > d {
            return Err(Error::DimOutOfRange(k));
        }
        Ok(Complex { n: self.n, facets: self.faces_of_dim(k) })
    }

    /// All faces of dimension `k`, in colex order.
    pub fn faces_of_dim(&self, k: i64) -> Vec<Face> {
        if k < -1 {
            return Vec::new();
        }
        if k == -1 {
            return if self.is_void() { Vec::new() } else { vec![Face::EMPTY] };
        }
        let size = (k + 1) as usize;
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for &f in &self.facets {
            for s in sub_faces(f, size) {
                if seen.insert(s) {
                    out.push(s);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Every face of the complex, `∅` included, in colex order.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut seen = std::collections::HashSet::new();
        for &f in &self.facets {
            let mut sub = f.bits();
            loop {
                seen.insert(Face(sub));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f.bits();
            }
        }
        let mut out: Vec<Face> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// A vertex contained in every facet (smallest label on ties).
    pub fn cone_apex(&self) -> Option<usize> {
        if self.is_void() {
            return None;
        }
        let common = self
            .facets
            .iter()
            .fold(Face::full(self.n), |a, &f| a.intersect(f));
        common.vertices().into_iter().next()
    }

    /// All inclusion-minimal subsets of `{1..n}` that are not faces.
    pub fn minimal_nonfaces(&self) -> Result<Vec<Face>> {
        if self.n > 24 {
            return Err(Error::EnumerationTooLarge(self.n));
        }
        let mut out = Vec::new();
        for mask in 0..(1u64 << self.n) {
            let s = Face(mask);
            if self.contains_face(s) {
                continue;
            }
            let minimal = s
                .vertices()
                .into_iter()
                .all(|v| self.contains_face(s.without(v)));
            if minimal {
                out.push(s);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Face counts per dimension. Errors on the void complex; `{∅}` yields
    /// the empty vector.
    pub fn f_vector(&self) -> Result<FVector> {
        let d = self.dimension().ok_or(Error::VoidComplex)?;
        let mut counts = vec![0u64; (d + 1).max(0) as usize];
        for face in self.all_faces() {
            if !face.is_empty() {
                counts[face.dim() as usize] += 1;
            }
        }
        Ok(FVector(counts))
    }

    /// Alexander dual: `{F ⊆ [n] : [n]∖F ∉ Δ}`; its facets are the
    /// complements of the minimal nonfaces. An involution over fixed `n`;
    /// the dual of the full simplex is the void complex and vice versa.
    pub fn alexander_dual(&self) -> Result<Complex> {
        if self.is_void() {
            // every complement is a nonface, so the dual is the full simplex
            return Ok(Complex::simplex(self.n));
        }
        let facets: Vec<Face> = self
            .minimal_nonfaces()?
            .into_iter()
            .map(|f| f.complement(self.n))
            .collect();
        Ok(Complex { n: self.n, facets: maximalize(facets) })
    }

    /// Shrink the vertex set to the covered labels (constructor-flag form
    /// of the coverage convention). Returns the re-housed complex and the
    /// injection back to original labels.
    pub fn shrink_to_cover(&self) -> (Complex, Vec<usize>) {
        Self::compactify(self.n, self.facets.clone())
    }

    /// Canonical form under vertex relabelling: the lexicographically
    /// smallest facet list over all permutations of `{1..n}` compatible
    /// with the per-vertex facet-degree invariant. Brute force, intended
    /// for small `n` only.
    pub fn canonical_form(&self) -> Complex {
        if self.n <= 1 {
            return self.clone();
        }
        // group vertices by an invariant so only class-preserving
        // permutations are tried
        let mut inv: Vec<(Vec<usize>, usize)> = (1..=self.n)
            .map(|v| {
                let mut per_card = vec![0usize; MAX_VERTICES + 1];
                for &f in &self.facets {
                    if f.contains(v) {
                        per_card[f.card()] += 1;
                    }
                }
                (per_card, v)
            })
            .collect();
        inv.sort();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut last: Option<&Vec<usize>> = None;
        for (key, v) in &inv {
            if last == Some(key) {
                groups.last_mut().unwrap().push(*v);
            } else {
                groups.push(vec![*v]);
                last = Some(key);
            }
        }
        // flatten: slot i (new label i+1) draws from group slot_group[i]
        let mut slot_group = Vec::with_capacity(self.n);
        for (gi, g) in groups.iter().enumerate() {
            for _ in g {
                slot_group.push(gi);
            }
        }
        let mut best: Option<Vec<Face>> = None;
        let mut assigned = vec![0usize; self.n]; // slot -> old label
        let mut used = vec![false; self.n + 1];
        assign_slots(
            &groups,
            &slot_group,
            0,
            &mut assigned,
            &mut used,
            &mut |assigned| {
                let mut new_label = vec![0usize; self.n + 1];
                for (slot, &old) in assigned.iter().enumerate() {
                    new_label[old] = slot + 1;
                }
                let mut relabeled: Vec<Face> = self
                    .facets
                    .iter()
                    .map(|&f| {
                        let mut bits = 0u64;
                        for v in f.vertices() {
                            bits |= 1 << (new_label[v] - 1);
                        }
                        Face(bits)
                    })
                    .collect();
                relabeled.sort_unstable();
                if best.as_ref().map_or(true, |b| relabeled < *b) {
                    best = Some(relabeled);
                }
            },
        );
        Complex { n: self.n, facets: best.unwrap() }
    }
}

fn assign_slots(
    groups: &[Vec<usize>],
    slot_group: &[usize],
    slot: usize,
    assigned: &mut Vec<usize>,
    used: &mut Vec<bool>,
    visit: &mut impl FnMut(&[usize]),
) {
    if slot == slot_group.len() {
        visit(assigned);
        return;
    }
    for &old in &groups[slot_group[slot]] {
        if !used[old] {
            used[old] = true;
            assigned[slot] = old;
            assign_slots(groups, slot_group, slot + 1, assigned, used, visit);
            used[old] = false;
        }
    }
}

/// All `size`-subsets of the face `f`.
fn sub_faces(f: Face, size: usize) -> Vec<Face> {
    let vs = f.vertices();
    if size > vs.len() {
        return Vec::new();
    }
    k_subsets(vs.len(), size)
        .into_iter()
        .map(|idx| {
            let mut bits = 0u64;
            for i in idx.vertices() {
                bits |= 1 << (vs[i - 1] - 1);
            }
            Face(bits)
        })
        .collect()
}
