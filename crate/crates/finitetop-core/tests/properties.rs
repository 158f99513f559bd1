//! Randomized invariants across the core modules.

use std::collections::BTreeSet;

use proptest::prelude::*;

use finitetop_core::poset::FinitePreorder;
use finitetop_core::{
    embed_weak, face_poset, functor_y, homology, mccord_stage, order_complex, rho_embedding,
    singleton_map_continuity, u_epsilon_f, vietoris_rips, AbstractComplex, FiniteMetricSpace,
    SimplicialNeighborhood,
};

fn vertex_pool(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// A complex on up to 6 vertices from random generating faces.
fn arb_complex() -> impl Strategy<Value = AbstractComplex> {
    (2usize..=6, proptest::collection::vec(proptest::collection::vec(0usize..6, 1..=4), 0..6))
        .prop_map(|(n, raw_faces)| {
            let pool = vertex_pool(n);
            let faces: Vec<Vec<String>> = raw_faces
                .into_iter()
                .map(|f| {
                    f.into_iter()
                        .map(|i| pool[i % n].clone())
                        .collect::<BTreeSet<_>>()
                        .into_iter()
                        .collect()
                })
                .collect();
            AbstractComplex::from_maximal(&pool, &faces).expect("valid faces")
        })
}

/// A T0 poset on up to 8 points: random upward edges i -> j (i < j)
/// keep the closure antisymmetric.
fn arb_t0_poset() -> impl Strategy<Value = FinitePreorder> {
    (2usize..=8, proptest::collection::vec((0usize..8, 0usize..8), 0..12)).prop_map(
        |(n, raw)| {
            let pool = vertex_pool(n);
            let pairs: Vec<(String, String)> = raw
                .into_iter()
                .filter_map(|(a, b)| {
                    let (a, b) = (a % n, b % n);
                    (a < b).then(|| (pool[a].clone(), pool[b].clone()))
                })
                .collect();
            FinitePreorder::from_relation(&pool, &pairs).expect("acyclic relation")
        },
    )
}

/// Points in the unit square with pairwise-distinct coordinates.
fn arb_metric() -> impl Strategy<Value = FiniteMetricSpace> {
    (2usize..=6, proptest::collection::vec((0u32..1000, 0u32..1000), 6)).prop_map(
        |(n, raw)| {
            // spread by index so points never coincide
            let pts: Vec<(f64, f64)> = raw
                .into_iter()
                .take(n)
                .enumerate()
                .map(|(i, (x, y))| (x as f64 / 1000.0 + 2.0 * i as f64, y as f64 / 1000.0))
                .collect();
            let ids = vertex_pool(n);
            let d: Vec<Vec<f64>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let dx = pts[i].0 - pts[j].0;
                            let dy = pts[i].1 - pts[j].1;
                            (dx * dx + dy * dy).sqrt()
                        })
                        .collect()
                })
                .collect();
            FiniteMetricSpace::new(&ids, &d).expect("valid metric")
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn y_after_x_recovers_the_complex(k in arb_complex()) {
        let members: Vec<Vec<String>> = k
            .faces()
            .unwrap()
            .iter()
            .map(|f| f.iter().map(|&i| k.vertices()[i].clone()).collect())
            .collect();
        let image = SimplicialNeighborhood::new_strict(&k.vertices().to_vec(), &members).unwrap();
        prop_assert!(functor_y(&image).is_isomorphic(&k).unwrap());
    }

    #[test]
    fn k_after_x_is_barycentric_subdivision(k in arb_complex()) {
        let kx = order_complex(&face_poset(&k).unwrap()).unwrap();
        prop_assert_eq!(kx, k.barycentric_subdivision().unwrap());
    }

    #[test]
    fn face_poset_of_y_matches_the_neighborhood(k in arb_complex()) {
        let members: Vec<Vec<String>> = k
            .faces()
            .unwrap()
            .iter()
            .map(|f| f.iter().map(|&i| k.vertices()[i].clone()).collect())
            .collect();
        let u = SimplicialNeighborhood::new_strict(&k.vertices().to_vec(), &members).unwrap();
        let fp = face_poset(&functor_y(&u)).unwrap();
        prop_assert!(fp.is_isomorphic_to(&u.to_preorder()));
    }

    #[test]
    fn subdivision_preserves_homology(k in arb_complex()) {
        let sd = k.barycentric_subdivision().unwrap();
        prop_assert_eq!(homology(&k).unwrap(), homology(&sd).unwrap());
    }

    #[test]
    fn rho_is_an_order_embedding(p in arb_t0_poset()) {
        let rho = rho_embedding(&p).unwrap();
        prop_assert!(rho.is_order_embedding(&p));
        prop_assert_eq!(rho.image_is_open(), p.is_antichain());
    }

    #[test]
    fn singleton_map_continuity_iff_antichain(p in arb_t0_poset()) {
        prop_assert_eq!(singleton_map_continuity(&p), p.is_antichain());
    }

    #[test]
    fn embed_weak_members_are_chains(p in arb_t0_poset()) {
        let u = embed_weak(&p).unwrap();
        for member in u.members() {
            let ids: Vec<usize> = member.iter().copied().collect();
            let chain = ids.iter().all(|&i| {
                ids.iter().all(|&j| p.leq_idx(i, j) || p.leq_idx(j, i))
            });
            prop_assert!(chain);
        }
    }

    #[test]
    fn rips_grows_with_scale(m in arb_metric(), lo in 1u32..40, gap in 0u32..40) {
        let eps_lo = lo as f64 / 10.0;
        let eps_hi = eps_lo + gap as f64 / 10.0;
        let small = vietoris_rips(&m, eps_lo).unwrap();
        let large = vietoris_rips(&m, eps_hi).unwrap();
        for face in small.faces().unwrap() {
            prop_assert!(large.contains(&face));
        }
    }

    #[test]
    fn u_epsilon_family_is_the_rips_simplex_set(m in arb_metric(), e in 1u32..40) {
        let eps = e as f64 / 10.0;
        let u = u_epsilon_f(&m, eps).unwrap();
        let rips = vietoris_rips(&m, eps).unwrap();
        let faces = rips.faces().unwrap();
        prop_assert_eq!(u.members().len(), faces.len());
        for f in &faces {
            prop_assert!(u.contains(f));
        }
    }

    #[test]
    fn stage_is_subdivided_rips(m in arb_metric(), e in 1u32..30) {
        let eps = e as f64 / 10.0;
        let stage = mccord_stage(&m, eps).unwrap();
        let sd = vietoris_rips(&m, eps).unwrap().barycentric_subdivision().unwrap();
        prop_assert_eq!(stage, sd);
    }

    #[test]
    fn betti_zero_counts_at_least_one_component(k in arb_complex()) {
        let h = homology(&k).unwrap();
        prop_assert!(h.betti[0] >= 1);
        for layer in &h.torsion {
            prop_assert!(layer.iter().all(|&f| f >= 2));
        }
    }
}
