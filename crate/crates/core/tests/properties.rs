use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use charvar::algebra::{poly_equal, smith_normal_form_with_transforms, Matrix, Polynomial, Rational};
use charvar::compact::random::{random_configuration, random_conjugate, random_eigen, random_p1p1};
use charvar::compact::{matrix_to_p1p1, p1p1_to_matrix, Configuration};
use charvar::complex::{homology, random_complex};
use charvar::invariants::{fk_coordinates, fk_cubic};
use charvar::sampling::{random_unimodular, sample_rng};
use charvar::stability::{classify_stability, hm_mu, hm_mu_max_form, one_ps_limit, stability_oracle};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Rational::frac(p, q))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0u32..3, 0u32..3), rational()), 0..5).prop_map(|terms| {
        Polynomial::from_terms(&["x", "y"], terms.into_iter().map(|((i, j), c)| (vec![i, j], c))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert!(poly_equal(&(&(&p + &q) * &r), &(&(&p * &r) + &(&q * &r))));
        prop_assert!(poly_equal(&(&p * &q), &(&q * &p)));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), x in rational(), y in rational()) {
        let at = |f: &Polynomial| f.eval_pairs(&[("x", x.clone()), ("y", y.clone())]).unwrap();
        prop_assert_eq!(at(&(&p * &q)), at(&p) * at(&q));
        prop_assert_eq!(at(&(&p + &q)), at(&p) + at(&q));
    }

    #[test]
    fn smith_form_is_a_factorization(entries in prop::collection::vec(-6i64..=6, 12)) {
        let m = Matrix::from_i64(3, 4, &entries).unwrap();
        let f = smith_normal_form_with_transforms(&m);
        prop_assert_eq!(&(&f.u * &m) * &f.v, f.d.clone());
        for w in f.diagonal.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(f.diagonal.iter().all(|d| d > &BigInt::from(0)));
        let rational = Matrix::from_ints(3, 4, &entries).unwrap();
        prop_assert_eq!(f.rank, rational.rank());
    }

    #[test]
    fn fricke_klein_vanishes(seed in any::<u64>()) {
        let mut rng = sample_rng(seed, 0);
        let (a, b, c) = (random_unimodular(&mut rng), random_unimodular(&mut rng), random_unimodular(&mut rng));
        let t = fk_coordinates(&a, &b, &c).unwrap();
        prop_assert!(fk_cubic(&t.x(), &t.a()).is_zero());
    }

    #[test]
    fn p1p1_round_trip(seed in any::<u64>()) {
        let mut rng = sample_rng(seed, 0);
        let alpha = charvar::compact::random::random_alpha(&mut rng);
        let p = random_p1p1(&mut rng);
        let m = p1p1_to_matrix(&p, &alpha);
        prop_assert!(m.in_closure(&charvar::compact::trace_of(&alpha)));
        prop_assert_eq!(matrix_to_p1p1(&m, &alpha).unwrap(), p);
    }

    #[test]
    fn stability_is_conjugation_invariant(seed in any::<u64>(), n in 3usize..=6) {
        let mut rng = sample_rng(seed, 0);
        let eigen = random_eigen(n, true, &mut rng);
        let cfg = random_configuration(&eigen, &mut rng);
        let (conj, _) = random_conjugate(&cfg, &mut rng);
        prop_assert!(conj.trace_condition());
        let (a, b) = (classify_stability(&cfg), classify_stability(&conj));
        prop_assert_eq!((a.m1, a.m2, a.verdict), (b.m1, b.m2, b.verdict));
        prop_assert_eq!(stability_oracle(&cfg).mu_min, stability_oracle(&conj).mu_min);
        prop_assert_eq!(a.verdict, stability_oracle(&cfg).verdict);
    }

    #[test]
    fn weight_forms_agree(seed in any::<u64>(), r in 1i64..=4) {
        let mut rng = sample_rng(seed, 0);
        let eigen = random_eigen(5, true, &mut rng);
        let cfg = random_configuration(&eigen, &mut rng);
        prop_assert_eq!(hm_mu_max_form(&cfg, r), r * hm_mu(&cfg));
    }

    #[test]
    fn limits_are_fixed_points(seed in any::<u64>(), dir in prop::sample::select(vec![1, -1])) {
        let mut rng = sample_rng(seed, 0);
        let eigen = random_eigen(5, true, &mut rng);
        let cfg = random_configuration(&eigen, &mut rng);
        if let Ok(lim) = one_ps_limit(&cfg, dir) {
            prop_assert_eq!(one_ps_limit(&lim, dir).unwrap(), lim);
        }
    }

    #[test]
    fn configuration_json_round_trip(seed in any::<u64>()) {
        let mut rng = sample_rng(seed, 0);
        let eigen = random_eigen(4, false, &mut rng);
        let cfg = random_configuration(&eigen, &mut rng);
        prop_assert_eq!(Configuration::from_json(&cfg.to_json()).unwrap(), cfg);
    }

    #[test]
    fn euler_characteristic_matches_betti(seed in any::<u64>()) {
        let mut rng = sample_rng(seed, 0);
        let c = random_complex(&mut rng, 7, 3);
        let h = homology(&c);
        let alt: i64 = h.reduced_betti.iter().enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        prop_assert_eq!(c.euler_characteristic(), 1 + alt);
    }

    #[test]
    fn suspension_shifts_betti(seed in any::<u64>()) {
        let mut rng = sample_rng(seed, 0);
        let c = random_complex(&mut rng, 6, 2);
        let h = homology(&c);
        let hs = homology(&c.suspension("north", "south").unwrap());
        prop_assert_eq!(hs.reduced_betti[0], 0);
        prop_assert_eq!(&hs.reduced_betti[1..], &h.reduced_betti[..]);
        prop_assert_eq!(&hs.torsion[1..], &h.torsion[..]);
    }
}
