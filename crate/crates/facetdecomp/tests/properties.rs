//! Property-based invariants over randomly generated complexes.

use proptest::prelude::*;

use facetdecomp::{binomial, io, k_subsets, Complex, Face};

fn arb_complex(max_n: usize) -> impl Strategy<Value = Complex> {
    (2..=max_n).prop_flat_map(|n| {
        let face = proptest::collection::vec(1..=n, 1..=n).prop_map(move |mut verts| {
            verts.sort_unstable();
            verts.dedup();
            Face::from_vertices(&verts).unwrap()
        });
        proptest::collection::vec(face, 1..=8)
            .prop_map(move |faces| Complex::from_faces(n, faces))
    })
}

fn arb_pure_complex(max_n: usize) -> impl Strategy<Value = Complex> {
    (2..=max_n).prop_flat_map(|n| {
        (1..n).prop_flat_map(move |size| {
            let pool = k_subsets(n, size);
            let len = pool.len();
            proptest::collection::btree_set(0..len, 1..=len).prop_map(move |idx| {
                let facets: Vec<Face> = idx.into_iter().map(|i| pool[i]).collect();
                Complex::from_faces(n, facets)
            })
        })
    })
}

proptest! {
    #[test]
    fn facets_form_an_antichain(c in arb_complex(7)) {
        let facets = c.facets();
        for (i, &f) in facets.iter().enumerate() {
            for (j, &g) in facets.iter().enumerate() {
                prop_assert!(i == j || !f.is_subset_of(g));
            }
        }
    }

    #[test]
    fn alexander_dual_is_an_involution(c in arb_complex(7)) {
        let dual = c.alexander_dual().unwrap();
        prop_assert_eq!(dual.alexander_dual().unwrap(), c);
    }

    #[test]
    fn facets_plus_antifacets_count_everything(c in arb_pure_complex(7)) {
        if c.is_pure() {
            let n = c.n() as u64;
            let cod = c.codimension().unwrap() as u64;
            let e = c.facet_count() as u64;
            let anti = c.antifacet_count().unwrap() as u64;
            prop_assert_eq!(e + anti, binomial(n, cod).unwrap());
        }
    }

    // `skeleton(k)` keeps exactly the dimension-k faces as facets, so on
    // pure complexes (where every low face extends to the top) its f-vector
    // is a prefix of the original
    #[test]
    fn skeleton_truncates_the_f_vector(c in arb_pure_complex(6)) {
        let dim = c.dimension().unwrap();
        let full = c.f_vector().unwrap().0;
        for k in 0..=dim {
            let skel = c.skeleton(k).unwrap();
            let truncated = skel.f_vector().unwrap().0;
            prop_assert_eq!(&truncated[..], &full[..(k + 1) as usize]);
        }
    }

    #[test]
    fn text_round_trip_preserves_the_complex(c in arb_complex(7)) {
        let text = io::write_text(&c);
        prop_assert_eq!(io::parse_complex(&text).unwrap(), c.clone());
        let json = io::write_json(&c);
        prop_assert_eq!(io::parse_complex(&json).unwrap(), c);
    }

    #[test]
    fn link_facets_lift_back_into_the_complex(c in arb_complex(6), vraw in 1usize..=6) {
        let v = ((vraw - 1) % c.n()) + 1;
        if let Ok((link, map)) = c.vertex_link(v) {
            for &f in link.facets() {
                let mut verts: Vec<usize> =
                    f.vertices().into_iter().map(|w| map[w - 1]).collect();
                verts.push(v);
                verts.sort_unstable();
                let lifted = Face::from_vertices(&verts).unwrap();
                prop_assert!(c.contains_face(lifted));
            }
        }
    }

    #[test]
    fn vd_certificates_replay(c in arb_pure_complex(5)) {
        use facetdecomp::decomp::{self, Decision};
        match decomp::is_vertex_decomposable(&c, None) {
            Decision::Yes(cert) => {
                prop_assert!(decomp::verify_certificate(&c, &cert).unwrap());
                // certificates survive a JSON round trip
                let json = serde_json::to_string(&cert).unwrap();
                let back: decomp::Certificate = serde_json::from_str(&json).unwrap();
                prop_assert!(decomp::verify_certificate(&c, &back).unwrap());
            }
            Decision::No => {
                // single-facet complexes are simplices after compaction and
                // always decompose, so a refusal needs at least two facets
                prop_assert!(c.facet_count() >= 2);
            }
            Decision::Undecided => prop_assert!(false, "unbudgeted search cannot be undecided"),
        }
    }
}
