use std::sync::Arc;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use voltlift::random::{builtin_families, random_builtin_group, random_voltage_digraph};
use voltlift::spectra::{charsum_well_conditioned, lift_eigenvalues_repr, rho_matrix, DEFAULT_TOL};
use voltlift::*;

fn instance(seed: u64, max_order: usize) -> (VoltageDigraph, IrrepSet) {
    let mut rng = StdRng::seed_from_u64(seed);
    let g = random_builtin_group(&mut rng, max_order);
    let d = random_voltage_digraph(&mut rng, g.clone(), 6, 20);
    (d, builtin_irreps(g).unwrap())
}

fn random_element<R: Rng>(rng: &mut R, n: usize) -> GroupAlgebraElement {
    GroupAlgebraElement::from_coeffs((0..n).map(|_| rng.gen_range(-3..=3)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn builtin_groups_are_groups(idx in 0usize..10_000) {
        let families = builtin_families(24);
        let g = families[idx % families.len()].build().unwrap();
        let n = g.order();
        for a in 0..n {
            prop_assert_eq!(g.mul(a, g.inverse(a)), g.identity());
            for b in 0..n {
                for c in 0..n {
                    prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        prop_assert_eq!(sizes.iter().sum::<usize>(), n);
        prop_assert!(sizes.iter().all(|s| n % s == 0));
        prop_assert_eq!(sizes[0], 1);
    }

    #[test]
    fn builtin_irreps_are_complete(idx in 0usize..10_000) {
        let families = builtin_families(24);
        let g = Arc::new(families[idx % families.len()].build().unwrap());
        let s = builtin_irreps(g.clone()).unwrap();
        prop_assert_eq!(s.len(), g.num_classes());
        prop_assert_eq!(s.dims().iter().map(|d| d * d).sum::<usize>(), g.order());
        prop_assert!(character_table(&s).column_orthogonality_defect() < 1e-9);
    }

    #[test]
    fn group_algebra_is_associative(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_builtin_group(&mut rng, 24);
        let n = g.order();
        let (a, b, c) = (random_element(&mut rng, n), random_element(&mut rng, n), random_element(&mut rng, n));
        let left = algebra_mul(&algebra_mul(&a, &b, &g).unwrap(), &c, &g).unwrap();
        let right = algebra_mul(&a, &algebra_mul(&b, &c, &g).unwrap(), &g).unwrap();
        prop_assert_eq!(left, right);
        let one = GroupAlgebraElement::identity(&g);
        prop_assert_eq!(algebra_mul(&a, &one, &g).unwrap(), a);
    }

    #[test]
    fn representations_respect_powers(seed in any::<u64>()) {
        let (d, s) = instance(seed, 24);
        let b = associated_matrix(&d);
        for l in 1..=4u32 {
            let bl = algebra_matrix_power(&b, l).unwrap();
            for irrep in s.irreps() {
                let lhs = rho_matrix(&bl, irrep);
                let rhs = rho_matrix(&b, irrep).pow(l);
                prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-9 * (1.0 + rhs.norm_frobenius()), "l = {}", l);
            }
        }
    }

    #[test]
    fn trace_bookkeeping(seed in any::<u64>()) {
        let (d, s) = instance(seed, 24);
        let b = associated_matrix(&d);
        let n = d.group().order() as f64;
        for l in 1..=4u32 {
            let bl = algebra_matrix_power(&b, l).unwrap();
            let weighted: Complex64 = s.irreps().iter().map(|i| rho_matrix(&bl, i).trace() * i.dim() as f64).sum();
            let identity: i64 = (0..d.order()).map(|u| bl.entry(u, u).coeff(d.group().identity())).sum();
            prop_assert!((weighted - Complex64::new(n * identity as f64, 0.0)).norm() <= 1e-8 * (1.0 + weighted.norm()));
        }
    }

    #[test]
    fn eigenvalue_count_is_lift_order(seed in any::<u64>()) {
        let (d, s) = instance(seed, 24);
        let rn = d.order() * d.group().order();
        prop_assert_eq!(lift_eigenvalues_repr(&d, &s).unwrap().len(), rn);
        prop_assert_eq!(lift_spectrum_repr(&d, &s, DEFAULT_TOL).unwrap().total(), rn);
    }

    #[test]
    fn character_route_matches_representation_route(seed in any::<u64>()) {
        let (d, s) = instance(seed, 24);
        let t = character_table(&s);
        prop_assume!(charsum_well_conditioned(&d, &t));
        let repr = lift_spectrum_repr(&d, &s, DEFAULT_TOL).unwrap();
        let chars = lift_spectrum_charsum(&d, &t, DEFAULT_TOL).unwrap();
        let m = spectra_equal(&repr, &chars, 1e-6);
        prop_assert!(m.matched, "{}", m);
    }

    #[test]
    fn abelian_groups_agree_everywhere(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = rng.gen_range(1..=12usize);
        let g = Arc::new(build_builtin_group(&format!("product:cyclic:{m},cyclic:2")).unwrap());
        let d = random_voltage_digraph(&mut rng, g.clone(), 4, 12);
        let s = builtin_irreps(g).unwrap();
        let repr = lift_spectrum_repr(&d, &s, DEFAULT_TOL).unwrap();
        let chars = lift_spectrum_charsum(&d, &character_table(&s), DEFAULT_TOL).unwrap();
        prop_assert!(spectra_equal(&repr, &chars, 1e-6).matched);
    }

    #[test]
    fn spectra_equal_is_order_free(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut values: Vec<Complex64> = (0..rng.gen_range(1..20)).map(|_| Complex64::new(rng.gen_range(-5..5) as f64, rng.gen_range(-2..2) as f64)).collect();
        let a = SpectrumMultiset::from_values(&values, 1e-9);
        values.reverse();
        let b = SpectrumMultiset::from_values(&values, 1e-9);
        prop_assert_eq!(&a, &b);
        let r = spectra_equal(&a, &b, 1e-12);
        prop_assert!(r.matched && r.worst == 0.0);
    }
}
