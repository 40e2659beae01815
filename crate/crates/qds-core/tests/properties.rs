//! Property tests for the model invariants: compact support, wall matching,
//! identity recovery, time-formula ranges, quantization round trips, and
//! reference-oracle unitarity.

use proptest::prelude::*;
use std::f64::consts::PI;

use qds_core::{
    analytic_transmission, de_broglie_wavelength, lossless_condition, min_transmitted_distance,
    quantize_loop, resonance_energies, solve_regions, transfer_matrix_coefficients,
    transmitted_number_density, traversal_time, tunneling_time, uncertainty_product, Barrier64,
    JunctionState64, ParticleState64, PhysicalContext64, Regime, ScatteringSetup64, Soliton64,
};

fn ctx() -> PhysicalContext64 {
    PhysicalContext64::natural()
}

fn setup(energy: f64, v0: f64, a: f64, speed: f64) -> ScatteringSetup64 {
    let particle = ParticleState64::new(energy, speed, 0.0, 0.0).unwrap();
    ScatteringSetup64::new(particle, Barrier64::new(a, v0).unwrap(), ctx())
}

/// Setup with prescribed dimensionless wall phases k1 a and k2 a.
fn setup_from_phases(k1a: f64, k2a: f64, a: f64, speed: f64) -> ScatteringSetup64 {
    let k1 = k1a / a;
    let k2 = k2a / a;
    let energy = k1 * k1 / 2.0;
    let v0 = energy - k2 * k2 / 2.0;
    setup(energy, v0, a, speed)
}

proptest! {
    #[test]
    fn density_is_exactly_zero_outside_the_support(
        mu in 0.1f64..5.0,
        rho0 in 0.0f64..3.0,
        c in -2.0f64..2.0,
        x0 in -3.0f64..3.0,
        t in -4.0f64..4.0,
        margin in 1e-6f64..10.0,
        left in proptest::bool::ANY,
    ) {
        let s = Soliton64::new(rho0, mu, c, x0, 0.0).unwrap();
        let center = x0 + c * t;
        let offset = (PI / 2.0 + margin) / mu;
        let x = if left { center - offset } else { center + offset };
        prop_assert_eq!(s.density_at(x, t), 0.0);
    }

    #[test]
    fn density_is_invariant_along_the_ray(
        mu in 0.1f64..5.0,
        c in -2.0f64..2.0,
        x in -2.0f64..2.0,
        t in -2.0f64..2.0,
        shift in -5.0f64..5.0,
    ) {
        let s = Soliton64::new(1.0, mu, c, 0.0, 0.0).unwrap();
        let before = s.density_at(x, t);
        let after = s.density_at(x + c * shift, t + shift);
        prop_assert!((before - after).abs() < 1e-12);
    }

    #[test]
    fn support_is_half_the_de_broglie_wavelength(
        v in 0.0f64..2.0,
        gap in 0.01f64..10.0,
    ) {
        let e = v + gap;
        let s = Soliton64::from_energy(e, v, &ctx(), 1.0, None, 0.0, 0.0).unwrap();
        let lambda = de_broglie_wavelength(e, v, &ctx()).unwrap();
        let rel = (2.0 * s.support_width() / lambda - 1.0).abs();
        prop_assert!(rel < 1e-12);
    }

    #[test]
    fn wall_continuity_is_unconditional(
        e in 0.05f64..5.0,
        v0 in 0.0f64..3.0,
        a in 0.1f64..4.0,
        rho1 in 0.0f64..10.0,
    ) {
        let s = setup(e, v0, a, 1.0);
        if let Ok(sol) = solve_regions(&s, rho1, 1e-12) {
            prop_assert_eq!(sol.rho2, rho1);
        }
    }

    #[test]
    fn below_barrier_transmission_amplifies(
        e in 0.05f64..2.0,
        extra in 0.01f64..3.0,
        a in 0.1f64..4.0,
        rho1 in 0.01f64..10.0,
    ) {
        let s = setup(e, e + extra, a, 1.0);
        prop_assert_eq!(s.regime(), Regime::Below);
        if let Ok(sol) = solve_regions(&s, rho1, 1e-12) {
            prop_assert!(sol.rho3 >= sol.rho2);
        }
    }

    #[test]
    fn pi_multiple_phase_gap_recovers_the_incident_density(
        k1a in 0.3f64..10.0,
        a in 0.5f64..4.0,
        n_pick in 0u32..6,
        rho1 in 0.1f64..5.0,
    ) {
        prop_assume!(k1a.cos().abs() > 0.05);
        let n_max = (k1a / PI).floor() as u32;
        let n = n_pick.min(n_max);
        let k2a = k1a - n as f64 * PI;
        let s = setup_from_phases(k1a, k2a, a, 1.0);
        let sol = solve_regions(&s, rho1, 1e-6).unwrap();
        prop_assert!(
            (sol.rho3 - rho1).abs() <= 1e-12 * rho1,
            "k1a={} n={} rho3={}", k1a, n, sol.rho3
        );
    }

    #[test]
    fn lossless_above_regime_has_unit_prefactor(
        k1a in 0.3f64..10.0,
        a in 0.5f64..4.0,
        n_pick in 1u32..6,
    ) {
        prop_assume!(k1a.cos().abs() > 0.05);
        let n_max = (k1a / PI).floor() as u32;
        prop_assume!(n_max >= 1);
        let n = n_pick.min(n_max);
        let k2a = k1a - n as f64 * PI;
        prop_assume!(k2a > 1e-9);
        let s = setup_from_phases(k1a, k2a, a, 1.0);
        let j = JunctionState64::new(s);
        let check = lossless_condition(&j, 1e-6);
        prop_assert!(check.lossless);
        // Peak of the traveling factor is 1, so the value at x = t = 0 is the
        // wall prefactor itself.
        let prefactor = transmitted_number_density(&j, 0.0, 0.0).unwrap();
        prop_assert!((prefactor - 1.0).abs() <= 1e-12, "prefactor {}", prefactor);
    }

    #[test]
    fn tunneling_time_stays_on_the_principal_branch(
        e in 0.05f64..5.0,
        v0 in 0.0f64..3.0,
        a in 0.1f64..5.0,
        c in 0.2f64..3.0,
    ) {
        let s = setup(e, v0, a, c);
        match traversal_time(&s) {
            Ok(report) if report.in_domain => {
                let tau = report.tunneling_time.unwrap();
                prop_assert!(tau >= 0.0);
                prop_assert!(tau <= PI / (s.k3() * c) * (1.0 + 1e-12));
                let t3 = report.total_time.unwrap();
                prop_assert!((report.classical_time - t3 - tau).abs() <= 1e-12 * (1.0 + tau));
            }
            Ok(report) => {
                prop_assert!(report.tunneling_time.is_none());
                prop_assert!(report.total_time.is_none());
                prop_assert!(report.arccos_argument.abs() > 1.0);
            }
            Err(_) => {}
        }
    }

    #[test]
    fn below_regime_times_are_always_in_domain(
        e in 0.05f64..2.0,
        extra in 0.01f64..3.0,
        a in 0.1f64..5.0,
        c in 0.2f64..3.0,
    ) {
        let s = setup(e, e + extra, a, c);
        let report = traversal_time(&s).unwrap();
        prop_assert!(report.in_domain);
        prop_assert!(report.arccos_argument.abs() <= 1.0);
        prop_assert!(tunneling_time(&s).is_ok());
    }

    #[test]
    fn transmitted_distance_bound_caps_at_pi_over_k3(
        e in 0.05f64..5.0,
        v0 in 0.0f64..3.0,
        a in 0.1f64..5.0,
        x1 in -5.0f64..0.0,
        t1 in -2.0f64..2.0,
    ) {
        let s = setup(e, v0, a, 1.0);
        if let Ok(bound) = min_transmitted_distance(&s, x1, t1) {
            prop_assert!(bound >= 0.0);
            prop_assert!(bound <= PI / s.k3() * (1.0 + 1e-12));
        }
    }

    #[test]
    fn uncertainty_product_never_dips_below_half_h(
        delta_k in 0.05f64..20.0,
        slack in 0.0f64..3.0,
    ) {
        let delta_x = PI / delta_k * (1.0 + slack);
        let rec = uncertainty_product(delta_k, delta_x, &ctx()).unwrap();
        prop_assert!(rec.product >= PI * (1.0 - 1e-12));
        prop_assert!((rec.delta_p - delta_k).abs() < 1e-15);
    }

    #[test]
    fn loop_quantization_round_trip(
        n in -20i64..=20,
        loop_length in 0.1f64..10.0,
    ) {
        let p_gap = n as f64 * PI / loop_length;
        let rec = quantize_loop(p_gap, 0.0, loop_length, &ctx()).unwrap();
        prop_assert_eq!(rec.n, n);
        prop_assert!(rec.residual < 1e-12);
    }

    #[test]
    fn transfer_matrix_is_unitary(
        e in 0.05f64..5.0,
        v0 in 0.1f64..3.0,
        a in 0.2f64..3.0,
    ) {
        prop_assume!((e - v0).abs() > 1e-3);
        let barrier = Barrier64::new(a, v0).unwrap();
        let (t, r) = transfer_matrix_coefficients(e, &barrier, &ctx()).unwrap();
        prop_assert!((t.norm_sqr() + r.norm_sqr() - 1.0).abs() < 1e-10);
        let analytic = analytic_transmission(e, &barrier, &ctx()).unwrap();
        prop_assert!((t.norm_sqr() - analytic).abs() < 1e-10);
    }

    #[test]
    fn root_finder_zeros_check_out(
        v0 in 0.4f64..2.0,
        a in 2.0f64..8.0,
    ) {
        let barrier = Barrier64::new(a, v0).unwrap();
        let sup = (2.0 * v0).sqrt() * a;
        let mut n = 1u32;
        while (n as f64) * PI < 0.8 * sup {
            let e = resonance_energies(&barrier, n, &ctx(), 1e-14).unwrap();
            let gap = ((2.0 * e).sqrt() - (2.0 * (e - v0)).sqrt()) * a;
            prop_assert!((gap - n as f64 * PI).abs() < 1e-10);
            n += 1;
        }
    }
}

#[test]
fn tunneling_time_oscillates_in_barrier_width() {
    // Fixed k1 = 1, k2 = 0.5; tau(a) shows interior maxima and minima.
    let mut values = Vec::new();
    for i in 0..2000 {
        let a = 0.05 + i as f64 * 0.005;
        let s = setup(0.5, 0.375, a, 1.0);
        if let Ok(tau) = tunneling_time(&s) {
            values.push(tau);
        }
    }
    let mut saw_max = false;
    let mut saw_min = false;
    for w in values.windows(3) {
        if w[1] > w[0] && w[1] > w[2] {
            saw_max = true;
        }
        if w[1] < w[0] && w[1] < w[2] {
            saw_min = true;
        }
    }
    assert!(saw_max && saw_min, "no interior extrema found");
}

#[test]
fn tunneling_time_vanishes_only_at_infinite_outgoing_frequency() {
    // Scale (E, V0, a) jointly so the wall phases, and hence the arccos
    // value, stay fixed while k3 grows; tau then decreases like 1/k3.
    let base = setup(0.5, 0.375, std::f64::consts::FRAC_PI_3, 1.0);
    let arccos_value = tunneling_time(&base).unwrap() * base.k3();
    let mut previous = f64::INFINITY;
    for exp in 0..12 {
        let lambda = 2.0f64.powi(exp);
        let s = setup(
            0.5 * lambda * lambda,
            0.375 * lambda * lambda,
            std::f64::consts::FRAC_PI_3 / lambda,
            1.0,
        );
        let tau = tunneling_time(&s).unwrap();
        assert!((tau * s.k3() - arccos_value).abs() < 1e-9);
        assert!(tau > 0.0, "finite k3 must give strictly positive delay");
        assert!(tau < previous);
        previous = tau;
    }
    assert!(previous < 1e-3);
}

#[test]
fn below_barrier_lossless_equality_has_no_positive_solution() {
    // Dense (k1 a, k2 a) grid: cos^2 never meets cosh^2 within 1e-9 once
    // k2 a is measurably positive.
    for i in 0..200 {
        let k1a = 0.05 + i as f64 * (3.1 - 0.05) / 199.0;
        let lhs = k1a.cos().powi(2);
        for j in 0..200 {
            let k2a = 1e-6 + j as f64 * (5.0 - 1e-6) / 199.0;
            let rhs = k2a.cosh().powi(2);
            assert!(
                (lhs - rhs).abs() > 1e-9,
                "k1a={k1a} k2a={k2a} lhs={lhs} rhs={rhs}"
            );
        }
    }
}
