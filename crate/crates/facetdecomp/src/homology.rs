//! Reduced simplicial homology over prime fields, connectivity, and
//! Reisner's criterion for Cohen-Macaulayness.
//!
//! Matrices are dense with word-sized residues; Gaussian elimination is
//! plenty at the face counts this crate ever sees.

use crate::complex::{Complex, Face};
use crate::{Error, Result};

/// Reduced homology ranks over `F_p`. `ranks[0]` is dimension -1, `ranks[k+1]`
/// is dimension `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub p: u64,
    pub ranks: Vec<u64>,
}

impl HomologyProfile {
    /// Rank in dimension `d` (0 outside the stored range).
    pub fn rank(&self, d: i64) -> u64 {
        let idx = d + 1;
        if idx < 0 || idx as usize >= self.ranks.len() {
            0
        } else {
            self.ranks[idx as usize]
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Rank of a dense matrix over `F_p` by Gaussian elimination. Rows are
/// mutated in place.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..nrows).find(|&r| rows[r][col] % p != 0);
        let Some(pivot) = pivot else { continue };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col] % p, p - 2, p);
        for c in col..ncols {
            rows[rank][c] = rows[rank][c] % p * inv % p;
        }
        for r in 0..nrows {
            if r != rank && rows[r][col] % p != 0 {
                let factor = rows[r][col] % p;
                for c in col..ncols {
                    let sub = factor * rows[rank][c] % p;
                    rows[r][c] = (rows[r][c] % p + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// The boundary map from `k`-faces to `(k-1)`-faces with alternating signs
/// reduced mod `p`; rows are `(k-1)`-faces, columns `k`-faces, both in colex
/// order. `k = 0` maps vertices to the augmentation row for `∅`.
pub fn boundary_matrix(c: &Complex, k: i64, p: u64) -> Result<Vec<Vec<u64>>> {
    check_prime(p)?;
    let d = c.dimension().ok_or(Error::VoidComplex)?;
    if k < 0 || k > d {
        return Err(Error::DimOutOfRange(k));
    }
    let rows_faces = c.faces_of_dim(k - 1);
    let cols_faces = c.faces_of_dim(k);
    let row_index: std::collections::HashMap<Face, usize> =
        rows_faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = vec![vec![0u64; cols_faces.len()]; rows_faces.len()];
    for (j, &f) in cols_faces.iter().enumerate() {
        for (i, v) in f.vertices().into_iter().enumerate() {
            let row = row_index[&f.without(v)];
            m[row][j] = if i % 2 == 0 { 1 } else { p - 1 };
        }
    }
    Ok(m)
}

/// Reduced homology ranks of the augmented chain complex over `F_p`, for
/// dimensions `-1..=dim Δ`.
pub fn reduced_homology_ranks(c: &Complex, p: u64) -> Result<HomologyProfile> {
    check_prime(p)?;
    let d = c.dimension().ok_or(Error::VoidComplex)?;
    // boundary ranks, indexed by k for ∂_k : C_k -> C_{k-1}
    let mut bd_rank = vec![0usize; (d + 2) as usize]; // entry k for k in 0..=d, plus slot for d+1
    for k in 0..=d {
        bd_rank[k as usize] = rank_mod_p(boundary_matrix(c, k, p)?, p);
    }
    let mut ranks = Vec::with_capacity((d + 2) as usize);
    for dim in -1..=d {
        let chain_dim = if dim == -1 {
            1
        } else {
            c.faces_of_dim(dim).len()
        };
        let below = if dim == -1 { 0 } else { bd_rank[dim as usize] };
        let above = if dim == d { 0 } else { bd_rank[(dim + 1) as usize] };
        ranks.push((chain_dim - below - above) as u64);
    }
    Ok(HomologyProfile { p, ranks })
}

/// Connectivity of the 1-skeleton (isolated vertices included). Complexes
/// with no vertices at all are vacuously connected.
pub fn is_connected(c: &Complex) -> bool {
    let verts = c.covered_vertices().vertices();
    if verts.len() <= 1 {
        return true;
    }
    let idx: std::collections::HashMap<usize, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &f in c.facets() {
        let vs = f.vertices();
        for w in vs.windows(2) {
            let (a, b) = (find(&mut parent, idx[&w[0]]), find(&mut parent, idx[&w[1]]));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    (1..verts.len()).all(|i| find(&mut parent, i) == root)
}

/// Reisner's criterion over `F_p`: for every face `F` (the empty face
/// included) the reduced homology of `link(F)` vanishes below its
/// dimension. Faces are visited in decreasing dimension and the check
/// short-circuits on the first failure.
pub fn is_cohen_macaulay(c: &Complex, p: u64) -> Result<bool> {
    check_prime(p)?;
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut faces = c.all_faces();
    faces.sort_by(|a, b| b.card().cmp(&a.card()).then(a.cmp(b)));
    for f in faces {
        let (link, _) = c.link(f)?;
        let ld = link.dimension().expect("links of faces are non-void");
        if ld <= 0 {
            // only connectivity in dimension 0 can fail below dimension 1
            continue;
        }
        let profile = reduced_homology_ranks(&link, p)?;
        for dim in -1..ld {
            if profile.rank(dim) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::k_subsets;

    fn cpx(facets: &[&[usize]], n: Option<usize>) -> Complex {
        let lists: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
        Complex::from_facets(&lists, n).unwrap()
    }

    #[test]
    fn triangle_boundary_map() {
        let c = Complex::simplex(3);
        let m = boundary_matrix(&c, 1, 5).unwrap();
        // rows: {1},{2},{3}; cols: {1,2},{1,3},{2,3}; the boundary of an
        // edge is head minus tail, so each column is (-1, 1) = (4, 1) mod 5
        assert_eq!(m, vec![vec![4, 4, 0], vec![1, 0, 4], vec![0, 1, 1]]);
        let m2 = boundary_matrix(&c, 1, 2).unwrap();
        assert!(m2.iter().flatten().all(|&x| x <= 1));
    }

    #[test]
    fn boundary_squared_is_zero() {
        let c = Complex::simplex(5);
        for p in [2u64, 3, 5] {
            for k in 1..=4i64 {
                let a = boundary_matrix(&c, k - 1, p).unwrap();
                let b = boundary_matrix(&c, k, p).unwrap();
                // multiply a * b mod p and check zero
                let rows = a.len();
                let mid = b.len();
                let cols = b[0].len();
                for i in 0..rows {
                    for j in 0..cols {
                        let mut acc = 0u64;
                        for t in 0..mid {
                            acc = (acc + a[i][t] * b[t][j]) % p;
                        }
                        assert_eq!(acc, 0, "p={p} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn sphere_homology() {
        // hollow tetrahedron is S^2
        let c = Complex::from_faces(4, k_subsets(4, 3));
        let h = reduced_homology_ranks(&c, 2).unwrap();
        assert_eq!(h.rank(2), 1);
        assert_eq!(h.rank(0), 0);
        assert_eq!(h.rank(1), 0);
        assert_eq!(h.rank(-1), 0);
    }

    #[test]
    fn two_components_and_circle() {
        let two = cpx(&[&[1, 2], &[3, 4]], None);
        assert_eq!(reduced_homology_ranks(&two, 2).unwrap().rank(0), 1);
        let cycle = cpx(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4]], None);
        let h = reduced_homology_ranks(&cycle, 3).unwrap();
        assert_eq!(h.rank(1), 1);
        assert_eq!(h.rank(0), 0);
    }

    #[test]
    fn empty_complex_homology() {
        let h = reduced_homology_ranks(&Complex::empty(0), 2).unwrap();
        assert_eq!(h.rank(-1), 1);
    }

    #[test]
    fn connectivity() {
        let k4 = Complex::from_faces(4, k_subsets(4, 2));
        assert!(is_connected(&k4));
        assert!(!is_connected(&cpx(&[&[1, 2], &[3, 4]], None)));
        assert!(is_connected(&cpx(&[&[1]], None)));
    }

    #[test]
    fn cohen_macaulay_examples() {
        assert!(is_cohen_macaulay(&Complex::simplex(4), 2).unwrap());
        // two disjoint edges: disconnected, not CM
        assert!(!is_cohen_macaulay(&cpx(&[&[1, 2], &[3, 4]], None), 2).unwrap());
        // triangle + isolated vertex: link of ∅ fine but the complex is
        // impure with bad links
        assert!(!is_cohen_macaulay(&cpx(&[&[1, 2, 3], &[4]], Some(4)), 2).unwrap());
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(
            reduced_homology_ranks(&Complex::simplex(3), 4),
            Err(Error::NotPrime(4))
        );
    }

    #[test]
    fn euler_characteristic_cross_check() {
        // alternating sum of f-vector equals alternating sum of reduced
        // ranks plus 1, for a few complexes and fields
        let samples = [
            Complex::from_faces(5, k_subsets(5, 3)),
            cpx(&[&[1, 2, 3], &[2, 3, 4], &[4, 5]], Some(5)),
            cpx(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4]], None),
        ];
        for c in samples {
            let f = c.f_vector().unwrap();
            let chi: i64 = f
                .0
                .iter()
                .enumerate()
                .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
                .sum();
            for p in [2u64, 3] {
                let h = reduced_homology_ranks(&c, p).unwrap();
                let reduced_chi: i64 = (-1..=c.dimension().unwrap())
                    .map(|d| {
                        let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
                        sign * h.rank(d) as i64
                    })
                    .sum();
                // chi(reduced, with dim -1 term) = chi - 1 ... both sides:
                assert_eq!(chi - 1, reduced_chi, "complex {c:?} p={p}");
            }
        }
    }
}
