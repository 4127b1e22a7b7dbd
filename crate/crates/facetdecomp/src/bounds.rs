//! The quantitative results as executable predicates and generators: the
//! facet-count threshold, the purity threshold, the tight construction, the
//! linear-resolution predicate for equigenerated squarefree ideals, and the
//! exhaustive small-n verification harness.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{binomial, k_subsets, Complex, Face};
use crate::decomp::{self, Decision};
use crate::homology;
use crate::{Error, Result};

/// `C(n,c) - 2c + 1`: a pure codimension-`c` complex with at least this
/// many facets is vertex decomposable.
pub fn vd_threshold(n: usize, c: usize) -> Result<i64> {
    check_codim(n, c)?;
    Ok(binomial(n as u64, c as u64)? as i64 - 2 * c as i64 + 1)
}

/// `C(n,c) - c`: this many top-dimensional facets force purity.
pub fn purity_threshold(n: usize, c: usize) -> Result<i64> {
    check_codim(n, c)?;
    Ok(binomial(n as u64, c as u64)? as i64 - c as i64)
}

fn check_codim(n: usize, c: usize) -> Result<()> {
    if n == 0 || c > n - 1 {
        return Err(Error::BadParameters(format!("need 0 <= c <= n-1, got n={n} c={c}")));
    }
    Ok(())
}

/// Hypothesis test only (no search): pure with at least `C(n,c) - 2c + 1`
/// facets.
pub fn meets_main_theorem(c: &Complex) -> bool {
    if c.is_void() || !c.is_pure() {
        return false;
    }
    let codim = c.codimension().expect("non-void");
    match vd_threshold(c.n(), codim) {
        Ok(t) => c.facet_count() as i64 >= t,
        Err(_) => false,
    }
}

/// The tight family: the full `(n-c-1)`-skeleton of the simplex on `{1..n}`
/// minus the `2c` facets `{1..n-c-2} ∪ {a} ∪ {b}` for `a ∈ {n-c-1, n-c}`
/// and `b ∈ {n-c+1..n}`. Pure of codimension `c` with exactly
/// `C(n,c) - 2c` facets, and not Cohen-Macaulay.
pub fn generate_tight_example(n: usize, c: usize) -> Result<Complex> {
    if !(2..=n.saturating_sub(2)).contains(&c) {
        return Err(Error::BadParameters(format!("need 2 <= c <= n-2, got n={n} c={c}")));
    }
    let core = Face::from_vertices(&(1..=n - c - 2).collect::<Vec<_>>())?;
    let mut removed = Vec::with_capacity(2 * c);
    for a in [n - c - 1, n - c] {
        for b in n - c + 1..=n {
            removed.push(core.with(a).with(b));
        }
    }
    let facets: Vec<Face> = k_subsets(n, n - c)
        .into_iter()
        .filter(|f| !removed.contains(f))
        .collect();
    Ok(Complex::from_faces(n, facets))
}

/// A squarefree monomial ideal given by generator supports. Kept as the
/// inclusion-minimal antichain (a superset of another support is redundant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub n: usize,
    pub generators: Vec<Face>,
}

impl MonomialIdeal {
    pub fn new(n: usize, supports: &[Vec<usize>]) -> Result<MonomialIdeal> {
        let mut gens = Vec::with_capacity(supports.len());
        for s in supports {
            let f = Face::from_vertices(s)?;
            for &v in s {
                if v > n {
                    return Err(Error::LabelTooLarge { label: v, n });
                }
            }
            gens.push(f);
        }
        gens.sort_unstable();
        gens.dedup();
        let minimal: Vec<Face> = gens
            .iter()
            .filter(|&&f| !gens.iter().any(|&g| g != f && g.is_subset_of(f)))
            .copied()
            .collect();
        Ok(MonomialIdeal { n, generators: minimal })
    }

    pub fn from_faces(n: usize, mut gens: Vec<Face>) -> MonomialIdeal {
        gens.sort_unstable();
        gens.dedup();
        let minimal: Vec<Face> = gens
            .iter()
            .filter(|&&f| !gens.iter().any(|&g| g != f && g.is_subset_of(f)))
            .copied()
            .collect();
        MonomialIdeal { n, generators: minimal }
    }

    /// Common generator degree; errors when degrees are mixed or the ideal
    /// has no generators.
    pub fn degree(&self) -> Result<usize> {
        let first = self
            .generators
            .first()
            .ok_or_else(|| Error::BadParameters("ideal has no generators".into()))?;
        if self.generators.iter().any(|g| g.card() != first.card()) {
            return Err(Error::MixedDegrees);
        }
        Ok(first.card())
    }

    /// The Stanley-Reisner complex: faces are the subsets containing no
    /// generator support.
    pub fn stanley_reisner_complex(&self) -> Result<Complex> {
        if self.n > 20 {
            return Err(Error::EnumerationTooLarge(self.n));
        }
        let is_face = |s: Face| !self.generators.iter().any(|g| g.is_subset_of(s));
        let mut facets = Vec::new();
        for mask in 0..(1u64 << self.n) {
            let s = Face::from_bits(mask);
            if !is_face(s) {
                continue;
            }
            let maximal = (1..=self.n)
                .filter(|&v| !s.contains(v))
                .all(|v| !is_face(s.with(v)));
            if maximal {
                facets.push(s);
            }
        }
        Ok(Complex::from_faces(self.n, facets))
    }
}

/// The Stanley-Reisner ideal of a complex: generated by the minimal
/// nonfaces.
pub fn sr_ideal(c: &Complex) -> Result<MonomialIdeal> {
    Ok(MonomialIdeal::from_faces(c.n(), c.minimal_nonfaces()?))
}

/// Eagon-Reiner route: an equigenerated squarefree ideal has a linear
/// resolution over `F_p` iff the complex spanned by the generator
/// complements is Cohen-Macaulay over `F_p`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, p: u64) -> Result<bool> {
    ideal.degree()?;
    let facets: Vec<Face> = ideal
        .generators
        .iter()
        .map(|g| g.complement(ideal.n))
        .collect();
    let delta = Complex::from_faces(ideal.n, facets);
    homology::is_cohen_macaulay(&delta, p)
}

fn monomial(f: Face) -> String {
    if f.is_empty() {
        return "1".into();
    }
    f.vertices()
        .into_iter()
        .map(|v| format!("x{v}"))
        .collect::<Vec<_>>()
        .join("*")
}

/// Deterministic listing of the Stanley-Reisner generators of a complex
/// (its minimal nonfaces), one monomial per line.
pub fn sr_export(c: &Complex) -> Result<String> {
    let mut out = String::new();
    for f in c.minimal_nonfaces()? {
        out.push_str(&monomial(f));
        out.push('\n');
    }
    Ok(out)
}

/// The same listing for an ideal's own generators.
pub fn sr_export_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = String::new();
    for &f in &ideal.generators {
        out.push_str(&monomial(f));
        out.push('\n');
    }
    out
}

/// Stream all pure codimension-`c` complexes on `{1..n}` with at least
/// `min_facets` facets whose facets cover every vertex, in canonical order
/// (facet-count ascending, then colex on the chosen facet sets). With
/// `iso_dedup` only the first member of each isomorphism class is yielded.
pub fn enumerate_pure(
    n: usize,
    c: usize,
    min_facets: usize,
    iso_dedup: bool,
) -> Result<impl Iterator<Item = Complex>> {
    check_codim(n, c)?;
    let candidates = k_subsets(n, n - c);
    let total = candidates.len();
    let full = Face::full(n);
    let mut seen = std::collections::HashSet::new();
    let sizes = min_facets.max(1)..=total;
    let iter = sizes
        .flat_map(move |k| {
            let cands = candidates.clone();
            combination_indices(total, k).into_iter().map(move |idx| {
                idx.into_iter().map(|i| cands[i]).collect::<Vec<Face>>()
            })
        })
        .filter(move |facets| facets.iter().fold(Face::EMPTY, |a, &f| a.union(f)) == full)
        .map(move |facets| Complex::from_faces(n, facets))
        .filter(move |cpx| !iso_dedup || seen.insert(cpx.canonical_form()));
    Ok(iter)
}

/// All `k`-element index subsets of `0..total` in colex order.
fn combination_indices(total: usize, k: usize) -> Vec<Vec<usize>> {
    if k > total {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // colex successor
        let mut i = 0;
        while i < k {
            let limit = if i + 1 < k { cur[i + 1] } else { total };
            if cur[i] + 1 < limit {
                cur[i] += 1;
                for j in 0..i {
                    cur[j] = j;
                }
                break;
            }
            i += 1;
        }
        if i == k {
            break;
        }
    }
    out
}

/// Which threshold claim the harness checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremId {
    /// Pure, `e >= C(n,c)-2c+1` implies vertex decomposable.
    Theorem1_1,
    /// `dim >= 1`, `c >= 2`, `ē <= 2c-1`: at least two vertices each avoid
    /// at most `2c-3` antifacets.
    Lemma3_1,
    /// `ē <= 2c`: no nonface smaller than `dim`, and at most one minimal
    /// nonface of exactly `dim` vertices.
    Lemma3_3,
    /// `ē <= 2c-1`: every vertex link satisfies `ē(link) <= 2b-1` (with
    /// `ē(link) = 0` accepted when the link is a simplex).
    Corollary3_4,
    /// `ē <= 2c-1`: vertices in at least `c` antifacets are shedding, and
    /// the vertices of a non-shedding witness facet lie in at least `c`
    /// antifacets and are shedding.
    Lemma3_6,
    /// At least `C(n,c)-c` top-dimensional facets force purity.
    Lemma4_5,
    /// At least `C(n,c)-c` top-dimensional facets force purity *and* vertex
    /// decomposability.
    Corollary4_6,
}

impl TheoremId {
    pub fn parse(s: &str) -> Option<TheoremId> {
        match s.to_ascii_lowercase().replace(['-', '_'], ".").as_str() {
            "thm1.1" | "theorem1.1" | "1.1" => Some(TheoremId::Theorem1_1),
            "lemma3.1" | "3.1" => Some(TheoremId::Lemma3_1),
            "lemma3.3" | "3.3" => Some(TheoremId::Lemma3_3),
            "cor3.4" | "corollary3.4" | "3.4" => Some(TheoremId::Corollary3_4),
            "lemma3.6" | "3.6" => Some(TheoremId::Lemma3_6),
            "lemma4.5" | "4.5" => Some(TheoremId::Lemma4_5),
            "cor4.6" | "corollary4.6" | "4.6" => Some(TheoremId::Corollary4_6),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::Theorem1_1 => "thm1.1",
            TheoremId::Lemma3_1 => "lemma3.1",
            TheoremId::Lemma3_3 => "lemma3.3",
            TheoremId::Corollary3_4 => "cor3.4",
            TheoremId::Lemma3_6 => "lemma3.6",
            TheoremId::Lemma4_5 => "lemma4.5",
            TheoremId::Corollary4_6 => "cor4.6",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportParams {
    pub n: usize,
    pub c: usize,
    pub theorem: String,
    /// Exact hypothesis filter applied, for bit-reproducible reruns.
    pub filter: String,
}

/// Outcome of one exhaustive run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub params: ReportParams,
    pub enumerated: u64,
    pub passes: u64,
    pub failures: u64,
    pub counterexamples: Vec<ComplexRecord>,
    pub elapsed_ms: u64,
    pub complete: bool,
}

/// Facet-list serialization of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexRecord {
    pub fn of(c: &Complex) -> ComplexRecord {
        ComplexRecord {
            n: c.n(),
            facets: c.facets().iter().map(|f| f.vertices()).collect(),
        }
    }

    pub fn to_complex(&self) -> Result<Complex> {
        Complex::from_facets(&self.facets, Some(self.n))
    }
}

enum CheckResult {
    Pass,
    Fail(Complex),
    Undecided,
}

/// Exhaustively check one claim for fixed `(n, c)`. `vd_budget` bounds each
/// individual vertex-decomposability search; exhausting it marks the report
/// incomplete rather than guessing. Runs on the ambient rayon pool, with
/// deterministic output regardless of worker count.
pub fn verify(n: usize, c: usize, id: TheoremId, vd_budget: Option<u64>) -> Result<VerificationReport> {
    check_codim(n, c)?;
    let start = Instant::now();
    let (filter, items): (String, Vec<Complex>) = match id {
        TheoremId::Theorem1_1 | TheoremId::Lemma3_1 | TheoremId::Lemma3_3
        | TheoremId::Corollary3_4 | TheoremId::Lemma3_6 => {
            let slack = match id {
                TheoremId::Lemma3_3 => 2 * c as i64,
                _ => 2 * c as i64 - 1,
            };
            let min = (binomial(n as u64, c as u64)? as i64 - slack).max(1) as usize;
            let filter = format!(
                "pure covering complexes of codimension {c} on {{1..{n}}} with >= {min} facets"
            );
            let mut items: Vec<Complex> = enumerate_pure(n, c, min, false)?.collect();
            if id == TheoremId::Lemma3_1 {
                items.retain(|_| c >= 2 && n >= c + 2);
            }
            (filter, items)
        }
        TheoremId::Lemma4_5 | TheoremId::Corollary4_6 => {
            let min = purity_threshold(n, c)?.max(1) as usize;
            let filter = format!(
                "families of >= {min} many ({})-subsets of {{1..{n}}} as top-dimensional facets",
                n - c
            );
            let candidates = k_subsets(n, n - c);
            let total = candidates.len();
            let mut items = Vec::new();
            for k in min..=total {
                for idx in combination_indices(total, k) {
                    let facets: Vec<Face> = idx.into_iter().map(|i| candidates[i]).collect();
                    items.push(Complex::from_faces(n, facets));
                }
            }
            (filter, items)
        }
    };

    let results: Vec<CheckResult> = items
        .par_iter()
        .map(|cpx| check_claim(cpx, n, c, id, vd_budget))
        .collect();

    let mut passes = 0u64;
    let mut counterexamples = Vec::new();
    let mut complete = true;
    for r in &results {
        match r {
            CheckResult::Pass => passes += 1,
            CheckResult::Fail(c) => counterexamples.push(ComplexRecord::of(c)),
            CheckResult::Undecided => complete = false,
        }
    }
    Ok(VerificationReport {
        params: ReportParams { n, c, theorem: id.name().into(), filter },
        enumerated: items.len() as u64,
        passes,
        failures: counterexamples.len() as u64,
        counterexamples,
        elapsed_ms: start.elapsed().as_millis() as u64,
        complete,
    })
}

fn check_claim(cpx: &Complex, n: usize, c: usize, id: TheoremId, vd_budget: Option<u64>) -> CheckResult {
    match id {
        TheoremId::Theorem1_1 => match decomp::is_vertex_decomposable(cpx, vd_budget) {
            Decision::Yes(cert) => {
                if decomp::verify_certificate(cpx, &cert).unwrap_or(false) {
                    CheckResult::Pass
                } else {
                    CheckResult::Fail(cpx.clone())
                }
            }
            Decision::No => CheckResult::Fail(cpx.clone()),
            Decision::Undecided => CheckResult::Undecided,
        },
        TheoremId::Lemma3_1 => {
            let antifacets = cpx.antifacets().expect("enumerated complexes are pure");
            let good = (1..=n)
                .filter(|&v| {
                    antifacets.iter().filter(|a| !a.contains(v)).count() <= 2 * c - 3
                })
                .count();
            if good >= 2 {
                CheckResult::Pass
            } else {
                CheckResult::Fail(cpx.clone())
            }
        }
        TheoremId::Lemma3_3 => {
            let d = cpx.dimension().expect("non-void");
            let nonfaces = cpx.minimal_nonfaces().expect("small n");
            let small = nonfaces.iter().any(|f| f.dim() + 1 < d);
            let at_dim = nonfaces.iter().filter(|f| f.dim() + 1 == d).count();
            if !small && at_dim <= 1 {
                CheckResult::Pass
            } else {
                CheckResult::Fail(cpx.clone())
            }
        }
        TheoremId::Corollary3_4 => {
            for v in 1..=n {
                let (link, _) = cpx.vertex_link(v).expect("covered");
                let b = link.codimension().expect("non-void") as i64;
                let ebar = link.antifacet_count().expect("links of pure are pure") as i64;
                // ē(link) = 0 covers the b = 0 simplex case, where the
                // literal bound 2b-1 = -1 is unsatisfiable
                if ebar != 0 && ebar > 2 * b - 1 {
                    return CheckResult::Fail(cpx.clone());
                }
            }
            CheckResult::Pass
        }
        TheoremId::Lemma3_6 => {
            let antifacets = cpx.antifacets().expect("pure");
            let contained = |v: usize| antifacets.iter().filter(|a| a.contains(v)).count();
            for v in 1..=n {
                if contained(v) >= c && !decomp::is_shedding(cpx, v).unwrap_or(false) {
                    return CheckResult::Fail(cpx.clone());
                }
            }
            // part 2: witness facets of non-shedding vertices
            for w in 1..=n {
                if decomp::is_shedding(cpx, w).unwrap_or(true) {
                    continue;
                }
                for &f in cpx.facets() {
                    if !f.contains(w) {
                        continue;
                    }
                    let base = f.without(w);
                    let witness = (1..=n)
                        .filter(|&u| !f.contains(u))
                        .all(|u| antifacets.contains(&base.with(u)));
                    if !witness {
                        continue;
                    }
                    // each such vertex lies in the `c` antifacets built from
                    // `base` (possibly more), hence is shedding by part 1
                    for v in base.vertices() {
                        if contained(v) < c || !decomp::is_shedding(cpx, v).unwrap_or(false) {
                            return CheckResult::Fail(cpx.clone());
                        }
                    }
                }
            }
            CheckResult::Pass
        }
        TheoremId::Lemma4_5 | TheoremId::Corollary4_6 => {
            // purity: every nonempty subset smaller than the facet size must
            // be dominated by some facet, otherwise it spawns a lower facet
            let facet_size = n - c;
            if facet_size >= 1 {
                for s in k_subsets(n, facet_size.saturating_sub(1)) {
                    if s.is_empty() {
                        continue;
                    }
                    if !cpx.contains_face(s) {
                        let mut facets = cpx.facets().to_vec();
                        facets.push(s);
                        return CheckResult::Fail(Complex::from_faces(n, facets));
                    }
                }
            }
            if id == TheoremId::Lemma4_5 {
                return CheckResult::Pass;
            }
            match decomp::is_vertex_decomposable(cpx, vd_budget) {
                Decision::Yes(cert) => {
                    if decomp::verify_certificate(cpx, &cert).unwrap_or(false) {
                        CheckResult::Pass
                    } else {
                        CheckResult::Fail(cpx.clone())
                    }
                }
                Decision::No => CheckResult::Fail(cpx.clone()),
                Decision::Undecided => CheckResult::Undecided,
            }
        }
    }
}
