use num_complex::Complex;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tgain::gain::{cycle_gain, is_antibalanced, is_balanced, pure_imaginary_cycle_gains, random_gains, switch, SwitchingFunction};
use tgain::graph::{double_star, maximum_matching, random_graph, stats};
use tgain::polynomials::{
    char_poly_eigen, char_poly_faddeev, char_poly_from_matchings, char_poly_subgraph, matching_counts,
    matching_number_from_counts, matching_poly,
};
use tgain::spectral::{adjacency, eigensystem, energy, graph_spectrum};
use tgain::theorems::harness::{disjoint_cycle_fixtures, random_unicyclic};
use tgain::theorems::{decompose_by_matching, verify_decomposition};
use tgain::{coulson_energy, GainGraphF64};

fn gain_graph(max_n: usize) -> impl Strategy<Value = GainGraphF64> {
    (1..=max_n, 0.1f64..0.7, any::<u64>()).prop_map(|(n, p, seed)| random_gains(&random_graph(n, p, seed), seed))
}

fn spectrum(phi: &GainGraphF64) -> Vec<f64> {
    eigensystem(&adjacency(phi)).unwrap().eigenvalues
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn switching_preserves_spectrum(phi in gain_graph(10), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let zeta = SwitchingFunction::new(
            (0..phi.n()).map(|_| Complex::cis(rng.random_range(0.0..std::f64::consts::TAU))).collect(),
        ).unwrap();
        let switched = switch(&phi, &zeta).unwrap();
        prop_assert!(max_diff(&spectrum(&phi), &spectrum(&switched)) <= 1e-8);
    }

    #[test]
    fn balance_certificate_switches_to_ones(n in 1usize..10, p in 0.1f64..0.9, seed in any::<u64>()) {
        // switching the all-ones graph gives a balanced graph with a known answer
        let g = random_graph(n, p, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let zeta = SwitchingFunction::new((0..n).map(|_| Complex::cis(rng.random_range(-3.0..3.0))).collect()).unwrap();
        let phi = switch(&GainGraphF64::all_ones(g), &zeta).unwrap();
        let verdict = is_balanced(&phi);
        prop_assert!(verdict.balanced);
        let back = switch(&phi, &verdict.certificate.unwrap()).unwrap();
        prop_assert!(back.gains().iter().all(|z| (z - Complex::new(1.0, 0.0)).norm() <= 1e-9));
    }

    #[test]
    fn balanced_iff_underlying_spectrum(phi in gain_graph(10), flip in any::<bool>()) {
        let phi = if flip { GainGraphF64::all_ones(phi.graph().clone()) } else { phi };
        let same = max_diff(&spectrum(&phi), &graph_spectrum::<f64>(phi.graph()).unwrap().eigenvalues) <= 1e-7;
        prop_assert_eq!(is_balanced(&phi).balanced, same);
    }

    #[test]
    fn cycle_gain_rotation_and_reversal(phi in gain_graph(7)) {
        for cycle in phi.graph().simple_cycles(100_000).unwrap() {
            let g = cycle_gain(&phi, &cycle).unwrap().gain;
            let mut rotated = cycle.clone();
            rotated.rotate_left(1);
            prop_assert!((cycle_gain(&phi, &rotated).unwrap().gain - g).norm() <= 1e-12);
            let reversed: Vec<usize> = cycle.iter().rev().copied().collect();
            prop_assert!((cycle_gain(&phi, &reversed).unwrap().gain - g.conj()).norm() <= 1e-12);
        }
    }

    #[test]
    fn trace_identities(phi in gain_graph(10)) {
        let eigs = spectrum(&phi);
        prop_assert!(eigs.iter().sum::<f64>().abs() <= 1e-9);
        prop_assert!((eigs.iter().map(|l| l * l).sum::<f64>() - 2.0 * phi.m() as f64).abs() <= 1e-7);
    }

    #[test]
    fn vertex_energies_sum_to_energy(phi in gain_graph(10)) {
        let r = energy(&phi).unwrap();
        prop_assert!((r.vertex_energies.iter().sum::<f64>() - r.energy).abs() <= 1e-8);
        prop_assert!((r.energy - spectrum(&phi).iter().map(|l| l.abs()).sum::<f64>()).abs() <= 1e-9);
    }

    #[test]
    fn radius_domination_with_equality_case(phi in gain_graph(10), sign in prop_oneof![Just(0u8), Just(1), Just(2)]) {
        prop_assume!(phi.graph().is_connected() && phi.m() > 0);
        let phi = match sign {
            0 => phi,
            1 => GainGraphF64::all_ones(phi.graph().clone()),
            _ => GainGraphF64::all_ones(phi.graph().clone()).negated(),
        };
        let rho = energy(&phi).unwrap().spectral_radius;
        let base = graph_spectrum::<f64>(phi.graph()).unwrap().spectral_radius();
        prop_assert!(rho <= base + 1e-8);
        prop_assert_eq!((rho - base).abs() <= 1e-7, is_balanced(&phi).balanced || is_antibalanced(&phi));
    }

    #[test]
    fn bipartite_spectrum_is_symmetric(phi in gain_graph(10)) {
        prop_assume!(phi.graph().bipartition().is_some());
        let eigs = spectrum(&phi);
        let n = eigs.len();
        prop_assert!((0..n).all(|j| (eigs[j] + eigs[n - 1 - j]).abs() <= 1e-8));
    }

    #[test]
    fn triangle_free_graphs_obey_mantel(n in 1usize..14, p in 0.05f64..0.6, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        if stats(&g).unwrap().triangle_free {
            prop_assert!(g.m() <= n * n / 4);
        }
    }

    #[test]
    fn double_stars_are_trees(p in 0usize..8, q in 0usize..8) {
        let g = double_star(p, q);
        prop_assert_eq!(g.m() + 1, g.n());
        prop_assert!(g.is_connected());
    }

    #[test]
    fn char_poly_three_ways(phi in gain_graph(10)) {
        let sub = char_poly_subgraph(&phi).unwrap();
        let fad = char_poly_faddeev(&adjacency(&phi)).unwrap();
        let eig = char_poly_eigen(&spectrum(&phi));
        prop_assert!(sub.max_abs_diff(&fad).unwrap() <= 1e-6);
        prop_assert!(sub.max_abs_diff(&eig).unwrap() <= 1e-6);
        prop_assert!(char_poly_from_matchings(&phi).unwrap().max_abs_diff(&sub).unwrap() <= 1e-9);
        if phi.n() >= 2 {
            prop_assert_eq!(sub.b(1), 0.0);
            prop_assert!((sub.b(2) + phi.m() as f64).abs() <= 1e-12);
        }
    }

    #[test]
    fn bipartite_coefficient_signs(phi in gain_graph(10)) {
        prop_assume!(phi.graph().bipartition().is_some());
        let p = char_poly_subgraph(&phi).unwrap();
        for k in 1..=p.degree() {
            if k % 2 == 1 {
                prop_assert!(p.b(k).abs() <= 1e-9);
            } else {
                let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
                prop_assert!(sign * p.b(k) >= -1e-9);
            }
        }
    }

    #[test]
    fn matching_number_from_polynomial(n in 1usize..13, p in 0.1f64..0.8, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let counts = matching_counts(&g).unwrap();
        prop_assert_eq!(matching_number_from_counts(&counts), maximum_matching(&g).size());
    }

    #[test]
    fn decomposition_invariants(n in 2usize..13, p in 0.1f64..0.8, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        prop_assume!(g.m() <= 40);
        let matching = maximum_matching(&g);
        let d = decompose_by_matching(&g, &matching).unwrap();
        prop_assert_eq!(verify_decomposition(&g, &d, matching.size()), Ok(()));
    }

    #[test]
    fn pure_imaginary_gains_give_matching_polynomial(k in 0usize..11, signs in prop::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], 3)) {
        let (_, g) = disjoint_cycle_fixtures().swap_remove(k);
        let cycles = g.m() + g.components().len() - g.n();
        let phi: GainGraphF64 = pure_imaginary_cycle_gains(&g, &signs[..cycles]).unwrap();
        let char_ints = char_poly_subgraph(&phi).unwrap().to_integers(1e-9).unwrap();
        let match_ints = matching_poly::<f64>(&g).unwrap().to_integers(0.0).unwrap();
        prop_assert_eq!(char_ints, match_ints);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn coulson_integral_matches_eigenvalues(phi in gain_graph(10)) {
        let p = char_poly_faddeev(&adjacency(&phi)).unwrap();
        let q = coulson_energy(&p, 1e-6).unwrap();
        prop_assert!((q.value - energy(&phi).unwrap().energy).abs() <= 1e-4);
    }

    #[test]
    fn unicyclic_conjugate_gains_share_energy(n in 3usize..11, seed in any::<u64>(), theta in 0.0f64..6.3) {
        let g = random_unicyclic(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let e = |t: f64| energy(&tgain::gain::with_cycle_gain(&g, Complex::cis(t)).unwrap()).unwrap().energy;
        prop_assert!((e(theta) - e(-theta)).abs() <= 1e-8);
    }
}
