use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use schottky::builders::random_siegel_seeded;
use schottky::cubic::{act_gl, aronhold_s, aronhold_t, scale_free, CubicForm, Invariant};
use schottky::io::{from_json, to_json, CubicJson, PeriodMatrixJson};
use schottky::jet::{odd_jet, restrict_cubic, Extension};
use schottky::modular::{evaluate_h, ModularSettings};
use schottky::siegel::{
    enumerate_characteristics, in_gamma_4_8, random_gamma_4_8_word, sp_action_omega, CMatrix, CVector, ParityFilter,
    ThetaCharacteristic,
};
use schottky::theta::{theta, ThetaSettings};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn cubic3() -> impl Strategy<Value = CubicForm> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 10)
        .prop_map(|v| CubicForm::from_coeffs(3, v.into_iter().map(|(r, i)| c(r, i)).collect()).unwrap())
}

fn matrix3() -> impl Strategy<Value = CMatrix> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 9)
        .prop_map(|v| CMatrix::from_iterator(3, 3, v.into_iter().map(|(r, i)| c(r, i))))
        .prop_filter("well conditioned", |m| {
            let sv = m.clone().svd(false, false).singular_values;
            sv.max() / sv.min() < 20.0
        })
}

fn characteristic(g: usize) -> impl Strategy<Value = ThetaCharacteristic> {
    (prop::collection::vec(0u8..2, g), prop::collection::vec(0u8..2, g))
        .prop_map(|(a, b)| ThetaCharacteristic::new(a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn s_and_t_are_sl3_invariant(f in cubic3(), m in matrix3()) {
        let det = m.determinant();
        let unimodular = m.map(|x| x / det.powf(1.0 / 3.0));
        let g = act_gl(&unimodular, &f).unwrap();
        let (s0, s1) = (aronhold_s(&f).unwrap(), aronhold_s(&g).unwrap());
        let (t0, t1) = (aronhold_t(&f).unwrap(), aronhold_t(&g).unwrap());
        let norm = f.bombieri_norm();
        prop_assert!((s0 - s1).norm() <= 1e-8 * norm.powi(4));
        prop_assert!((t0 - t1).norm() <= 1e-8 * norm.powi(6));
    }

    #[test]
    fn gl3_relative_invariance(f in cubic3(), m in matrix3()) {
        let det = m.determinant();
        let g = act_gl(&m, &f).unwrap();
        for (inv, w) in [(Invariant::S, 4), (Invariant::T, 6)] {
            let lhs = inv.evaluate(&g).unwrap() * det.powi(w);
            let rhs = inv.evaluate(&f).unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-8 * f.bombieri_norm().powi(w));
        }
    }

    #[test]
    fn scale_free_ignores_scaling(f in cubic3(), re in -3.0..3.0f64, im in -3.0..3.0f64) {
        let lambda = c(re, im);
        prop_assume!(lambda.norm() > 0.05);
        let g = f.scaled(lambda);
        let a = scale_free(aronhold_s(&f).unwrap(), &f, 4);
        let b = scale_free(aronhold_s(&g).unwrap(), &g, 4);
        prop_assert!((a - b).abs() <= 1e-12 * a.max(1e-300) + 1e-15);
    }

    #[test]
    fn theta_parity(xi in characteristic(3), seed in 0u64..1000, zs in prop::collection::vec((-0.7..0.7f64, -0.7..0.7f64), 3)) {
        let omega = random_siegel_seeded(3, seed, 0.8);
        let z = CVector::from_iterator(3, zs.into_iter().map(|(r, i)| c(r, i)));
        let s = ThetaSettings::default();
        let plus = theta(&xi, &z, &omega, &s).unwrap();
        let minus = theta(&xi, &(-&z), &omega, &s).unwrap();
        let sign = if xi.is_odd() { -1.0 } else { 1.0 };
        prop_assert!((minus - plus * sign).norm() <= 1e-12 * (1.0 + plus.norm()));
    }

    #[test]
    fn theta_integer_period(xi in characteristic(2), seed in 0u64..1000, k in 0usize..2, zr in -0.5..0.5f64) {
        let omega = random_siegel_seeded(2, seed, 0.8);
        let z = CVector::from_vec(vec![c(zr, 0.1), c(-0.2, zr)]);
        let mut shifted = z.clone();
        shifted[k] += 1.0;
        let s = ThetaSettings::default();
        let base = theta(&xi, &z, &omega, &s).unwrap();
        let moved = theta(&xi, &shifted, &omega, &s).unwrap();
        let sign = if xi.a[k] == 1 { -1.0 } else { 1.0 };
        prop_assert!((moved - base * sign).norm() <= 1e-11 * (1.0 + base.norm()));
    }

    #[test]
    fn gamma_4_8_words_act_as_a_group(seed in 0u64..10_000, len1 in 1usize..3, len2 in 1usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g1 = random_gamma_4_8_word(3, len1, &mut rng);
        let g2 = random_gamma_4_8_word(3, len2, &mut rng);
        prop_assert!(in_gamma_4_8(&g1.compose(&g2)));
        let omega = random_siegel_seeded(3, seed, 0.5);
        let direct = sp_action_omega(&g1.compose(&g2), &omega).unwrap();
        let stepwise = sp_action_omega(&g1, &sp_action_omega(&g2, &omega).unwrap()).unwrap();
        let diff = (direct.omega() - stepwise.omega()).norm();
        prop_assert!(diff <= 1e-9 * (1.0 + direct.omega().norm()));
        // automorphy cocycle
        let j12 = g1.compose(&g2).automorphy(&omega).determinant();
        let j = g1.automorphy(&sp_action_omega(&g2, &omega).unwrap()).determinant() * g2.automorphy(&omega).determinant();
        prop_assert!((j12 - j).norm() <= 1e-9 * j.norm());
    }

    #[test]
    fn period_matrix_json_round_trip(g in 1usize..5, seed in 0u64..1000) {
        let omega = random_siegel_seeded(g, seed, 1.5);
        let back = from_json::<PeriodMatrixJson>(&to_json(&PeriodMatrixJson::from_point(&omega))).unwrap().to_point().unwrap();
        prop_assert_eq!(back, omega);
    }

    #[test]
    fn cubic_json_round_trip(f in cubic3()) {
        let back = from_json::<CubicJson>(&to_json(&CubicJson::from_form(&f))).unwrap().to_form().unwrap();
        prop_assert_eq!(back, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn restricted_cubic_changes_by_gl2_on_hyperplane(seed in 0u64..1000, idx in 0usize..120, ext in 0u64..1000) {
        let omega = random_siegel_seeded(4, seed, 1.0);
        let xi = &enumerate_characteristics(4, ParityFilter::Odd)[idx];
        let jet = odd_jet(xi, &omega, &ThetaSettings::default()).unwrap();
        let a = restrict_cubic(&jet, Extension::Unitary).unwrap();
        let b = restrict_cubic(&jet, Extension::Random(ext)).unwrap();
        // both column sets span ell = 0; b's columns are a's times some alpha
        let va = a.dual_basis.columns(1, 3).into_owned();
        let vb = b.dual_basis.columns(1, 3).into_owned();
        let alpha = a.basis_covectors.rows(1, 3) * &vb;
        prop_assert!((&va * &alpha - &vb).norm() <= 1e-10 * vb.norm());
        let moved = a.m_bar.substitute(&alpha).unwrap();
        for (x, y) in moved.coeffs().iter().zip(b.m_bar.coeffs()) {
            prop_assert!((x - y).norm() <= 1e-10 * (1.0 + a.m_bar.max_coeff()) * alpha.norm().powi(3));
        }
    }

    #[test]
    fn odd_theta_has_no_even_part(seed in 0u64..1000, idx in 0usize..120) {
        let omega = random_siegel_seeded(4, seed, 1.0);
        let xi = &enumerate_characteristics(4, ParityFilter::Odd)[idx];
        let jet = odd_jet(xi, &omega, &ThetaSettings::default()).unwrap();
        prop_assert!(jet.residual_even < 1e-12);
    }

    #[test]
    fn h_delta_is_t_squared_plus_64_s_cubed(seed in 0u64..1000, idx in 0usize..120) {
        let omega = random_siegel_seeded(4, seed, 1.0);
        let xi = &enumerate_characteristics(4, ParityFilter::Odd)[idx];
        let s = ModularSettings::default();
        let hs = evaluate_h(xi, &omega, Invariant::S, &s).unwrap().raw;
        let ht = evaluate_h(xi, &omega, Invariant::T, &s).unwrap().raw;
        let hd = evaluate_h(xi, &omega, Invariant::Delta, &s).unwrap().raw;
        let expected = ht * ht + hs * hs * hs * 64.0;
        prop_assert!((hd - expected).norm() <= 1e-9 * hd.norm().max(expected.norm()));
    }
}
