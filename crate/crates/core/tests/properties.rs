mod common;

use common::{named, random_connected, random_corona, random_graph, rng};
use coronawalk::corona::corona;
use coronawalk::corona_spectrum::{corona_eigenprojectors, corona_spectrum, lambda_pm};
use coronawalk::graph::{Family, Graph};
use coronawalk::numtheory::{squarefree_split, support_gcd_and_valuation};
use coronawalk::spectral::{eigendecompose, strongly_cospectral};
use coronawalk::transfer::{check_pst, pgst_search, PgstFamily};
use coronawalk::walk::{corona_transition_element, evolve_element};
use proptest::prelude::*;

fn lap(g: &Graph) -> coronawalk::spectral::SpectralDecomposition {
    eigendecompose(&g.laplacian(), None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_form_hub_element_matches_full_walk(seed in any::<u64>(), t in 0.0f64..100.0) {
        let mut r = rng(seed);
        let (g, hs) = random_corona(&mut r, 1..=5, 4);
        let c = corona(&g, &hs).unwrap();
        let cs = corona_spectrum(&g, &hs).unwrap();
        let base = lap(&g);
        let full = lap(c.flat());
        for u in 0..g.n() {
            for v in 0..g.n() {
                let a = corona_transition_element(&cs, &base, u, v, t).unwrap();
                let b = evolve_element(&full, c.hub(u), c.hub(v), t).unwrap();
                prop_assert!((a.value - b.value).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn closed_form_projectors_reconstruct_laplacian(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (g, hs) = random_corona(&mut r, 1..=5, 4);
        let d = corona_eigenprojectors(&g, &hs).unwrap();
        let l = corona(&g, &hs).unwrap().flat().laplacian().into_matrix();
        prop_assert!((d.reconstruct() - l).amax() < 1e-9);
    }

    #[test]
    fn fidelity_is_symmetric(seed in any::<u64>(), n in 2usize..8, t in 0.0f64..30.0) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.5);
        let d = lap(&g);
        for u in 0..n {
            for v in 0..n {
                let a = evolve_element(&d, u, v, t).unwrap().fidelity;
                let b = evolve_element(&d, v, u, t).unwrap().fidelity;
                prop_assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn regular_graphs_share_laplacian_and_adjacency_fidelity(k in 3usize..9, t in 0.0f64..20.0) {
        for g in [named(Family::Cycle, k), named(Family::Complete, k)] {
            let dl = lap(&g);
            let da = eigendecompose(&g.adjacency(), None).unwrap();
            for v in 0..k {
                let a = evolve_element(&dl, 0, v, t).unwrap().fidelity;
                let b = evolve_element(&da, 0, v, t).unwrap().fidelity;
                prop_assert!((a - b).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn pair_identities(lambda in 0.0f64..40.0, m in 1usize..50) {
        let (p, q) = lambda_pm(lambda, m);
        let mf = m as f64;
        let scale = mf + lambda + 1.0;
        prop_assert!((p + q - scale).abs() <= 1e-12 * scale);
        prop_assert!((p * q - lambda).abs() <= 1e-12 * scale * scale);
        prop_assert!(((1.0 - p) * (1.0 - q) + mf).abs() <= 1e-12 * scale * scale);
        prop_assert!(q <= p && q < 1.0 + 1e-12);
    }

    #[test]
    fn squarefree_part_reconstructs(n in 1u64..u64::MAX / 4) {
        let s = squarefree_split(n).unwrap();
        prop_assert_eq!(s.s as u128 * s.s as u128 * s.c as u128, n as u128);
    }

    #[test]
    fn gcd_ignores_zero(xs in prop::collection::vec(0i64..500, 1..8)) {
        let mut with_zero = xs.clone();
        with_zero.push(0);
        if xs.iter().any(|&x| x != 0) {
            prop_assert_eq!(support_gcd_and_valuation(&xs).unwrap(), support_gcd_and_valuation(&with_zero).unwrap());
        }
    }

    #[test]
    fn pst_implies_strong_cospectrality_and_unit_fidelity(seed in any::<u64>(), n in 2usize..7) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n);
        let d = lap(&g);
        for u in 0..n {
            for v in u + 1..n {
                if let Ok(verdict) = check_pst(&d, u, v) {
                    if verdict.pst {
                        prop_assert!(strongly_cospectral(&d, u, v).unwrap().strongly_cospectral);
                        let f = evolve_element(&d, u, v, verdict.t0.unwrap()).unwrap().fidelity;
                        prop_assert!(f >= 1.0 - 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn pgst_history_is_monotone(m in 1usize..7, ell_max in 1u64..400, target in 0.5f64..0.9999) {
        let g = named(Family::Complete, 2);
        let hs = vec![named(Family::Empty, m); 2];
        let cs = corona_spectrum(&g, &hs).unwrap();
        let s = pgst_search(&cs, &lap(&g), 0, 1, PgstFamily::FourPiEll, ell_max, target).unwrap();
        prop_assert!(s.history.windows(2).all(|w| w[0].fidelity < w[1].fidelity && w[0].ell < w[1].ell));
        prop_assert_eq!(s.best.ell, s.history.last().unwrap().ell);
        prop_assert!(s.evaluated <= ell_max);
        prop_assert_eq!(s.reached, s.best.fidelity >= target);
    }
}

#[test]
fn pgst_target_zero_stops_at_first_ell() {
    let g = named(Family::Complete, 2);
    let hs = vec![named(Family::Empty, 1); 2];
    let s = pgst_search(
        &corona_spectrum(&g, &hs).unwrap(),
        &lap(&g),
        0,
        1,
        PgstFamily::FourPiEll,
        50,
        0.0,
    )
    .unwrap();
    assert!(s.reached);
    assert_eq!(s.evaluated, 1);
    assert_eq!(s.best.ell, 1);
}
