//! Decision procedures with certificates: shedding vertices, vertex
//! decomposability, shellability, and shelling completability inside the
//! ambient skeleton.
//!
//! All searches are worst-case exponential, so every entry point takes an
//! optional node budget and reports `Undecided` instead of guessing when it
//! runs out.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Face};
use crate::{Error, Result};

/// Three-valued search outcome. `Yes` carries the witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision<W> {
    Yes(W),
    No,
    Undecided,
}

impl<W> Decision<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Decision::Yes(w) => Some(w),
            _ => None,
        }
    }
}

/// Decrementing node counter; `None` means unlimited.
#[derive(Clone, Debug)]
pub struct Budget {
    remaining: Option<u64>,
}

impl Budget {
    pub fn new(limit: Option<u64>) -> Budget {
        Budget { remaining: limit }
    }

    pub fn unlimited() -> Budget {
        Budget { remaining: None }
    }

    /// Consume one node; false when exhausted.
    fn tick(&mut self) -> bool {
        match &mut self.remaining {
            None => true,
            Some(0) => false,
            Some(r) => {
                *r -= 1;
                true
            }
        }
    }
}

/// Recursion tree witnessing vertex decomposability. Vertex labels at each
/// internal node refer to the (compacted) complex at that node of the
/// replay, not to the original labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Certificate {
    Leaf { leaf: LeafKind },
    Shed { vertex: usize, link: Box<Certificate>, del: Box<Certificate> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LeafKind {
    Simplex,
    Empty,
}

/// A facet permutation witnessing shellability; for completability the
/// `extension` lists the remaining skeleton facets in shelling order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingOrder {
    pub order: Vec<Face>,
    pub extension: Vec<Face>,
}

impl ShellingOrder {
    pub fn to_json(&self) -> serde_json::Value {
        let arr = |fs: &[Face]| {
            fs.iter()
                .map(|f| serde_json::json!(f.vertices()))
                .collect::<Vec<_>>()
        };
        serde_json::json!({ "order": arr(&self.order), "extension": arr(&self.extension) })
    }
}

/// Deletion-facet form: `v` is shedding iff every facet of `del(Δ,v)` is a
/// facet of `Δ`. Errors if `v` is not covered by any facet.
pub fn is_shedding(c: &Complex, v: usize) -> Result<bool> {
    if v == 0 || v > c.n() {
        return Err(Error::VertexOutOfRange { v, n: c.n() });
    }
    if !c.covered_vertices().contains(v) {
        return Err(Error::UncoveredVertex(v));
    }
    let del_facets = c.deletion_facets(v)?;
    Ok(del_facets.iter().all(|f| c.facets().contains(f)))
}

/// Exchange form: for every facet `F ∋ v` there is `y ∉ F` with
/// `(F∖{v})∪{y}` a face. Kept as an independent route for cross-checking.
pub fn is_shedding_exchange(c: &Complex, v: usize) -> Result<bool> {
    if v == 0 || v > c.n() {
        return Err(Error::VertexOutOfRange { v, n: c.n() });
    }
    if !c.covered_vertices().contains(v) {
        return Err(Error::UncoveredVertex(v));
    }
    for &f in c.facets() {
        if !f.contains(v) {
            continue;
        }
        let base = f.without(v);
        let found = (1..=c.n())
            .filter(|&y| !f.contains(y))
            .any(|y| c.contains_face(base.with(y)));
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All shedding vertices among the covered ones, ascending.
pub fn shedding_vertices(c: &Complex) -> Vec<usize> {
    c.covered_vertices()
        .vertices()
        .into_iter()
        .filter(|&v| is_shedding(c, v).unwrap_or(false))
        .collect()
}

/// Candidate exploration order for the VD search: descending count of
/// antifacets containing the vertex (when the complex is pure), ties by
/// label. Vertices in many antifacets are guaranteed shedding once the
/// comultiplicity is small, so they are tried first.
fn candidate_order(c: &Complex) -> Vec<usize> {
    let covered = c.covered_vertices().vertices();
    if let Ok(antifacets) = c.antifacets() {
        let mut scored: Vec<(usize, usize)> = covered
            .into_iter()
            .map(|v| {
                let count = antifacets.iter().filter(|a| a.contains(v)).count();
                (v, count)
            })
            .collect();
        scored.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        scored.into_iter().map(|(v, _)| v).collect()
    } else {
        covered
    }
}

/// Decide vertex decomposability, returning a replayable certificate on
/// success. Handles non-pure input per the Björner–Wachs form of the
/// definition. The void complex is treated as vertex decomposable, matching
/// the shellability convention.
pub fn is_vertex_decomposable(c: &Complex, budget: Option<u64>) -> Decision<Certificate> {
    let mut memo: HashMap<Complex, Option<Certificate>> = HashMap::new();
    let mut bud = Budget::new(budget);
    vd_search(c, &mut memo, &mut bud)
}

fn vd_search(
    c: &Complex,
    memo: &mut HashMap<Complex, Option<Certificate>>,
    budget: &mut Budget,
) -> Decision<Certificate> {
    if c.is_void() || c.is_empty_complex() {
        return Decision::Yes(Certificate::Leaf { leaf: LeafKind::Empty });
    }
    if c.facet_count() == 1 {
        return Decision::Yes(Certificate::Leaf { leaf: LeafKind::Simplex });
    }
    if let Some(cached) = memo.get(c) {
        return match cached {
            Some(cert) => Decision::Yes(cert.clone()),
            None => Decision::No,
        };
    }
    if !budget.tick() {
        return Decision::Undecided;
    }
    let mut saw_undecided = false;
    for v in candidate_order(c) {
        if !is_shedding(c, v).unwrap_or(false) {
            continue;
        }
        let (link, _) = c.vertex_link(v).expect("covered vertex");
        let (del, _) = c.deletion(v).expect("covered vertex");
        let lres = vd_search(&link, memo, budget);
        let dres = match &lres {
            Decision::No => Decision::No, // no need to search the deletion
            _ => vd_search(&del, memo, budget),
        };
        match (lres, dres) {
            (Decision::Yes(lc), Decision::Yes(dc)) => {
                let cert = Certificate::Shed { vertex: v, link: Box::new(lc), del: Box::new(dc) };
                memo.insert(c.clone(), Some(cert.clone()));
                return Decision::Yes(cert);
            }
            (Decision::Undecided, _) | (_, Decision::Undecided) => saw_undecided = true,
            _ => {}
        }
    }
    if saw_undecided {
        Decision::Undecided
    } else {
        memo.insert(c.clone(), None);
        Decision::No
    }
}

/// Independent replay of a decomposition certificate: no search, just the
/// base cases and shedding checks of the recursive definition.
pub fn verify_certificate(c: &Complex, cert: &Certificate) -> Result<bool> {
    match cert {
        Certificate::Leaf { leaf: LeafKind::Empty } => {
            Ok(c.is_void() || c.is_empty_complex())
        }
        Certificate::Leaf { leaf: LeafKind::Simplex } => Ok(c.facet_count() == 1),
        Certificate::Shed { vertex, link, del } => {
            let v = *vertex;
            if v == 0 {
                return Err(Error::BadCertificate("vertex label 0".into()));
            }
            if v > c.n() || !c.covered_vertices().contains(v) {
                return Ok(false);
            }
            if !is_shedding(c, v)? {
                return Ok(false);
            }
            let (l, _) = c.vertex_link(v)?;
            let (d, _) = c.deletion(v)?;
            Ok(verify_certificate(&l, link)? && verify_certificate(&d, del)?)
        }
    }
}

/// Shelling-order search over a fixed facet list.
///
/// `required`: the first `required` entries of `facets` must all be placed
/// before any of the rest (used for completability, where the complex's own
/// facets come first). The transposition table records prefix facet *sets*
/// that cannot be extended; feasibility of a prefix depends only on its set.
struct ShellingSearch<'a> {
    facets: &'a [Face],
    required: usize,
    inter: Vec<Vec<Face>>,
    dead: HashSet<u128>,
}

impl<'a> ShellingSearch<'a> {
    fn new(facets: &'a [Face], required: usize) -> ShellingSearch<'a> {
        let m = facets.len();
        let mut inter = vec![vec![Face::EMPTY; m]; m];
        for i in 0..m {
            for j in 0..m {
                inter[i][j] = facets[i].intersect(facets[j]);
            }
        }
        ShellingSearch { facets, required, inter, dead: HashSet::new() }
    }

    /// The standard prefix condition: for every placed facet `i`, the
    /// intersection with the candidate must be dominated by some placed
    /// intersection of cardinality `|candidate| - 1`.
    fn admissible(&self, cand: usize, used: u128) -> bool {
        let want = self.facets[cand].card() - 1;
        let mut i_mask = used;
        while i_mask != 0 {
            let i = i_mask.trailing_zeros() as usize;
            i_mask &= i_mask - 1;
            let fi = self.inter[i][cand];
            let mut ok = false;
            let mut j_mask = used;
            while j_mask != 0 {
                let j = j_mask.trailing_zeros() as usize;
                j_mask &= j_mask - 1;
                let fj = self.inter[j][cand];
                if fj.card() == want && fi.is_subset_of(fj) {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return false;
            }
        }
        true
    }

    fn run(&mut self, used: u128, count: usize, order: &mut Vec<usize>, budget: &mut Budget) -> Decision<()> {
        if count == self.facets.len() {
            return Decision::Yes(());
        }
        if !budget.tick() {
            return Decision::Undecided;
        }
        if self.dead.contains(&used) {
            return Decision::No;
        }
        let range = if count < self.required { 0..self.required } else { 0..self.facets.len() };
        let mut saw_undecided = false;
        for cand in range {
            if used & (1u128 << cand) != 0 {
                continue;
            }
            if count > 0 && !self.admissible(cand, used) {
                continue;
            }
            order.push(cand);
            match self.run(used | (1u128 << cand), count + 1, order, budget) {
                Decision::Yes(()) => return Decision::Yes(()),
                Decision::Undecided => saw_undecided = true,
                Decision::No => {}
            }
            order.pop();
        }
        if saw_undecided {
            Decision::Undecided
        } else {
            self.dead.insert(used);
            Decision::No
        }
    }
}

fn search_order(facets: &[Face], required: usize, budget: Option<u64>) -> Decision<Vec<usize>> {
    if facets.len() > 127 {
        return Decision::Undecided;
    }
    let mut s = ShellingSearch::new(facets, required);
    let mut order = Vec::with_capacity(facets.len());
    let mut bud = Budget::new(budget);
    match s.run(0, 0, &mut order, &mut bud) {
        Decision::Yes(()) => Decision::Yes(order),
        Decision::No => Decision::No,
        Decision::Undecided => Decision::Undecided,
    }
}

/// Decide shellability of a pure complex via pruned backtracking over facet
/// orders. The void and empty complexes are shellable by convention.
pub fn is_shellable(c: &Complex, budget: Option<u64>) -> Result<Decision<ShellingOrder>> {
    if c.is_void() || c.is_empty_complex() {
        return Ok(Decision::Yes(ShellingOrder {
            order: c.facets().to_vec(),
            extension: Vec::new(),
        }));
    }
    if !c.is_pure_with(false) {
        return Err(Error::NotPure);
    }
    Ok(match search_order(c.facets(), c.facet_count(), budget) {
        Decision::Yes(order) => Decision::Yes(ShellingOrder {
            order: order.into_iter().map(|i| c.facets()[i]).collect(),
            extension: Vec::new(),
        }),
        Decision::No => Decision::No,
        Decision::Undecided => Decision::Undecided,
    })
}

/// Decide whether some shelling of `Δ` extends to a shelling of the full
/// `d`-skeleton of the simplex on `{1..n}` (joint backtracking over the
/// shelling of `Δ` and the ordering of the remaining skeleton facets).
pub fn is_shelling_completable(c: &Complex, budget: Option<u64>) -> Result<Decision<ShellingOrder>> {
    if c.is_void() || c.is_empty_complex() {
        return Ok(Decision::Yes(ShellingOrder {
            order: c.facets().to_vec(),
            extension: Vec::new(),
        }));
    }
    if !c.is_pure_with(false) {
        return Err(Error::NotPure);
    }
    let d = c.dimension().expect("non-void");
    let skeleton = Complex::simplex_skeleton(c.n(), d)?;
    let own: Vec<Face> = c.facets().to_vec();
    let mut all = own.clone();
    for &f in skeleton.facets() {
        if !own.contains(&f) {
            all.push(f);
        }
    }
    let m = own.len();
    Ok(match search_order(&all, m, budget) {
        Decision::Yes(order) => {
            let placed: Vec<Face> = order.into_iter().map(|i| all[i]).collect();
            Decision::Yes(ShellingOrder {
                order: placed[..m].to_vec(),
                extension: placed[m..].to_vec(),
            })
        }
        Decision::No => Decision::No,
        Decision::Undecided => Decision::Undecided,
    })
}

/// Check that a facet sequence satisfies the shelling condition. Used by
/// tests as the independent oracle for the search.
pub fn is_valid_shelling(order: &[Face]) -> bool {
    for k in 1..order.len() {
        let want = order[k].card().wrapping_sub(1);
        for i in 0..k {
            let fi = order[i].intersect(order[k]);
            let dominated = (0..k).any(|j| {
                let fj = order[j].intersect(order[k]);
                fj.card() == want && fi.is_subset_of(fj)
            });
            if !dominated {
                return false;
            }
        }
    }
    true
}
