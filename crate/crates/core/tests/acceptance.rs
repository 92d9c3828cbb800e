//! End-to-end acceptance checks: the exact identity suites at full trial
//! counts, the torus integral identities, the brute-force heat-trace
//! validations, and the integrated coefficient cross-check.  Each check
//! prints a single pass line with its runtime and asserts a budget.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use chirality::scalar::{C64, GRat};
use chirality::spectral::{hplus_coeffs, hplus_generic};
use chirality::tensor::{basis_covector, Tensor};
use chirality::torsion::theta123;
use chirality::torus::{
    gilkey_integrated_check, heat_trace_fit, integral_identity_suite, sphere_benchmark,
    PeriodicField, TorusSpec,
};
use chirality::verify::{
    coefficient_trial, curvature_trial, decomposition_trial, fiber_trial,
    random_constant_flat_jet, random_twist, twist_trial, IdentityCheck,
};

fn seeded(trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xACCE5500 + trial)
}

fn assert_all_pass(trial: usize, checks: &[IdentityCheck]) {
    for c in checks {
        assert!(c.pass, "trial {trial}: {}/{} failed", c.suite, c.name);
    }
}

fn report(name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("acceptance {name}: pass ({elapsed:.1?})");
    assert!(
        elapsed < budget,
        "{name} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

#[test]
fn exact_tensor_decomposition_suite() {
    let start = Instant::now();
    for trial in 0..200 {
        let mut rng = seeded(trial);
        let checks = decomposition_trial::<GRat>(&mut rng, true).unwrap();
        assert_all_pass(trial as usize, &checks);
    }
    report("tensor decomposition (200 exact trials)", start, Duration::from_secs(30));
}

#[test]
fn torsion_curvature_suite() {
    let start = Instant::now();
    for trial in 0..200 {
        let mut rng = seeded(1000 + trial);
        let checks = curvature_trial::<GRat>(&mut rng, true).unwrap();
        assert_all_pass(trial as usize, &checks);
    }
    report("torsion curvature identities (200 exact trials)", start, Duration::from_secs(60));
}

#[test]
fn fiber_trace_suite() {
    let start = Instant::now();
    for trial in 0..200 {
        let mut rng = seeded(2000 + trial);
        let checks = fiber_trial::<GRat>(&mut rng, true).unwrap();
        assert_all_pass(trial as usize, &checks);
    }
    report("spinor-fiber traces (200 exact trials)", start, Duration::from_secs(60));
}

#[test]
fn twisted_trace_suite() {
    let start = Instant::now();
    let ranks = [1usize, 2, 3, 5];
    for trial in 0..100 {
        let mut rng = seeded(3000 + trial);
        let m = ranks[trial as usize % ranks.len()];
        let checks = twist_trial::<GRat>(&mut rng, true, m).unwrap();
        assert_all_pass(trial as usize, &checks);
    }
    report("twisted traces (100 exact trials, ranks 1/2/3/5)", start, Duration::from_secs(120));
}

#[test]
fn torus_integral_suite() {
    let start = Instant::now();
    let e1 = basis_covector::<f64>(4, 0);
    let e2 = basis_covector::<f64>(4, 1);
    let th = theta123::<f64>(4);
    let th2 = {
        // a second alternating coefficient: theta^1 ^ theta^2 ^ theta^4
        let t = chirality::tensor::wedge(
            &chirality::tensor::wedge(&e1, &e2).unwrap(),
            &basis_covector::<f64>(4, 3),
        )
        .unwrap();
        t
    };
    // single-mode fields
    let t_single = PeriodicField::zero(3)
        .with_mode([0, 0, 0, 1], th.clone(), Tensor::zeros(4, 3))
        .unwrap();
    let v_single = PeriodicField::zero(1)
        .with_mode([0, 1, 0, 0], Tensor::zeros(4, 1), e1.clone())
        .unwrap();
    // two-mode fields with distinct frequencies and both phases
    let t_two = PeriodicField::zero(3)
        .with_mode([0, 0, 0, 1], th.scale(&0.7), th2.scale(&0.3))
        .unwrap()
        .with_mode([1, 1, 0, 0], th2.scale(&-0.4), th.scale(&0.2))
        .unwrap();
    let v_two = PeriodicField::zero(1)
        .with_mode([0, 1, 0, 0], e2.scale(&0.5), e1.clone())
        .unwrap()
        .with_mode([0, 0, 2, 0], e1.scale(&0.3), e2.scale(&-0.6))
        .unwrap();
    for (label, v, t) in [("single-mode", &v_single, &t_single), ("two-mode", &v_two, &t_two)] {
        let rep = integral_identity_suite(v, t, None).unwrap();
        for (name, res) in rep.rel_residuals() {
            let tol = if name == "divergence_terms" { 1e-12 } else { 1e-9 };
            assert!(res < tol, "{label} {name}: residual {res}");
        }
    }
    report("torus integral identities (single- and two-mode)", start, Duration::from_secs(300));
}

#[test]
fn heat_trace_validation() {
    let start = Instant::now();
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;

    // constant T = theta^123, V = 0: a2 = 18 pi^2
    let spec = TorusSpec::new(
        theta123::<f64>(4),
        Tensor::zeros(4, 1),
        30,
        chirality::torus::default_times(),
    )
    .unwrap();
    let fit = heat_trace_fit(&spec).unwrap();
    assert!(fit.rel_errors[0] < 1e-4, "torsion case a0: {:?}", fit.a_hat);
    assert!(
        (fit.a_hat[1] - 18.0 * pi2).abs() / (18.0 * pi2) < 1e-2,
        "torsion case a2: {:?}",
        fit.a_hat
    );
    assert!(fit.a_hat[2].abs() < 1e-2 * fit.a_hat[1].abs(), "torsion case a4: {:?}", fit.a_hat);

    // V = (0.5, 0, 0, 0), T = 0: a2 = 4.5 pi^2
    let spec_v = TorusSpec::new(
        Tensor::zeros(4, 3),
        basis_covector::<f64>(4, 0).scale(&0.5),
        30,
        chirality::torus::default_times(),
    )
    .unwrap();
    let fit_v = heat_trace_fit(&spec_v).unwrap();
    assert!(fit_v.rel_errors[0] < 1e-4, "vector case a0: {:?}", fit_v.a_hat);
    assert!(
        (fit_v.a_hat[1] - 4.5 * pi2).abs() / (4.5 * pi2) < 1e-2,
        "vector case a2: {:?}",
        fit_v.a_hat
    );
    assert!(fit_v.a_hat[2].abs() < 1e-2 * fit_v.a_hat[1].abs(), "vector case a4: {:?}", fit_v.a_hat);
    report("heat-trace fits (torsion and vector backgrounds)", start, Duration::from_secs(300));
}

#[test]
fn sphere_spectrum_benchmark() {
    let start = Instant::now();
    let fit = sphere_benchmark(None).unwrap();
    assert!(fit.rel_errors[0] < 1e-5, "sphere a0: {:?}", fit.a_hat);
    assert!(fit.rel_errors[1] < 1e-3, "sphere a2: {:?}", fit.a_hat);
    report("sphere spectrum benchmark", start, Duration::from_secs(30));
}

#[test]
fn coefficient_cross_check() {
    let start = Instant::now();
    // pointwise: generic weighted traces equal the closed-form term table
    // exactly at constant fields, for several twist ranks
    for trial in 0..30 {
        let mut rng = seeded(4000 + trial);
        let checks = coefficient_trial::<GRat>(&mut rng, true).unwrap();
        assert_all_pass(trial as usize, &checks);
        let m = [1, 2, 3][trial as usize % 3];
        let jet = random_constant_flat_jet::<GRat>(&mut rng);
        let twist = random_twist::<GRat>(&mut rng, m);
        let closed = hplus_coeffs(&jet, &twist).unwrap();
        let (g0, g2, g4) = hplus_generic(&jet, &twist).unwrap();
        assert_eq!(g0, closed.a0_total(), "a0 at rank {m}");
        assert_eq!(g2, closed.a2_total(), "a2 at rank {m}");
        assert_eq!(g4, closed.a4_total(), "a4 at rank {m}");
    }
    // integrated: periodic fields, quadrature comparison at 1e-9
    let t = PeriodicField::zero(3)
        .with_mode([0, 0, 0, 1], theta123::<f64>(4), Tensor::zeros(4, 3))
        .unwrap();
    let v = PeriodicField::zero(1)
        .with_mode([0, 1, 0, 0], Tensor::zeros(4, 1), basis_covector::<f64>(4, 0))
        .unwrap();
    let mut rng = seeded(4999);
    let twist = random_twist::<C64>(&mut rng, 2);
    let rep = gilkey_integrated_check(&v, &t, &twist, None).unwrap();
    assert!(rep.max_rel_residual() < 1e-9, "{:?}", rep.entries);
    report("coefficient cross-check (pointwise exact + integrated)", start, Duration::from_secs(300));
}
