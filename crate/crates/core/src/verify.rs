//! Seeded random generators for jets, curvature tensors and twists, and the
//! named identity suites run by the `verify` command and the test batteries.
//!
//! Generated components are small rationals (numerators in [-9, 9],
//! denominators in {1, 2, 3, 4}) so the exact-arithmetic suites stay fast.

use rand::Rng;

use crate::clifford::trace_suite;
use crate::curvature::{
    bianchi, decompose6, hodge_pair, pair_antisymmetric_part, swap_pairs, trace_rep,
};
use crate::scalar::{CScalar, GRat, Scalar};
use crate::spectral::{
    chiral_coeffs, dstar_d_coeffs, dstar_d_generic, hplus_coeffs, hplus_generic,
    twist_trace_suite, TwistData,
};
use crate::tensor::{antisymmetrize, antisymmetrize_slots, norm_sq, tensor_inner, Tensor};
use crate::torsion::{
    constant_flat_jet, norm_identities, pontryagin_densities, ricci_closed_forms, TorsionJet,
};
use crate::Error;

// ---------------------------------------------------------------------------
// Generators.
// ---------------------------------------------------------------------------

pub fn random_scalar<S: Scalar>(rng: &mut impl Rng) -> S {
    S::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn random_grat(rng: &mut impl Rng) -> GRat {
    random_cscalar(rng)
}

pub fn random_cscalar<S: CScalar>(rng: &mut impl Rng) -> S {
    random_scalar::<S>(rng) + S::i() * random_scalar::<S>(rng)
}

pub fn random_tensor<S: Scalar>(rng: &mut impl Rng, dim: usize, rank: usize) -> Tensor<S> {
    let mut t = Tensor::zeros(dim, rank);
    let idxs: Vec<Vec<usize>> = crate::tensor::multi_indices(dim, rank).collect();
    for idx in idxs {
        t.set(&idx, random_scalar(rng));
    }
    t
}

/// Random alternating k-tensor.
pub fn random_form<S: Scalar>(rng: &mut impl Rng, dim: usize, rank: usize) -> Tensor<S> {
    antisymmetrize(&random_tensor(rng, dim, rank))
}

/// Random algebraic curvature tensor: pair-antisymmetric, pair-symmetric,
/// first Bianchi identity.
pub fn random_curvature<S: Scalar>(rng: &mut impl Rng, dim: usize) -> Tensor<S> {
    let a = pair_antisymmetric_part(&random_tensor(rng, dim, 4)).expect("rank 4");
    let s = a.add(&swap_pairs(&a)).scale(&S::from_ratio(1, 2));
    s.sub(&bianchi(&s).expect("rank 4"))
}

/// Random torsion jet with all first-derivative data populated.
pub fn random_jet<S: Scalar>(rng: &mut impl Rng, n: usize) -> TorsionJet<S> {
    let v = random_tensor(rng, n, 1);
    let grad_v = random_tensor(rng, n, 2);
    let t = random_form(rng, n, 3);
    let grad_t = antisymmetrize_slots(&random_tensor(rng, n, 4), &[1, 2, 3]);
    let riem_g = random_curvature(rng, n);
    let lap_rg = random_scalar(rng);
    TorsionJet::new(n, v, grad_v, t, grad_t, riem_g, lap_rg).expect("generated jet is valid")
}

/// Random flat jet with constant T and V (all derivatives and riem_g zero).
pub fn random_constant_flat_jet<S: Scalar>(rng: &mut impl Rng) -> TorsionJet<S> {
    constant_flat_jet(random_form(rng, 4, 3), random_tensor(rng, 4, 1))
        .expect("flat jet is valid")
}

/// Random unitary twist of rank m: +-1 grading, Hermitian Phi and grad Phi,
/// anti-Hermitian curvature commuting with the grading.
pub fn random_twist<S: CScalar>(rng: &mut impl Rng, m: usize) -> TwistData<S> {
    let gamma_diag: Vec<i64> = (0..m).map(|_| if rng.gen() { 1 } else { -1 }).collect();
    fn hermitian<S: CScalar>(rng: &mut impl Rng, m: usize) -> crate::clifford::CMat<S> {
        let mut b = crate::clifford::CMat::<S>::zeros(m);
        for i in 0..m {
            for j in 0..m {
                b.set(i, j, random_cscalar(rng));
            }
        }
        b.add(&b.dagger())
    }
    let phi = hermitian::<S>(rng, m);
    let grad_phi: Vec<_> = (0..4).map(|_| hermitian::<S>(rng, m)).collect();
    let mut omega_h = vec![vec![crate::clifford::CMat::<S>::zeros(m); 4]; 4];
    for i in 0..4 {
        for j in (i + 1)..4 {
            let mut b = crate::clifford::CMat::<S>::zeros(m);
            for p in 0..m {
                for q in 0..m {
                    if gamma_diag[p] == gamma_diag[q] {
                        b.set(p, q, random_cscalar(rng));
                    }
                }
            }
            let o = b.sub(&b.dagger());
            omega_h[i][j] = o.clone();
            omega_h[j][i] = o.neg();
        }
    }
    TwistData::new(gamma_diag, phi, grad_phi, omega_h).expect("generated twist is valid")
}

// ---------------------------------------------------------------------------
// Identity suites.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub suite: &'static str,
    pub name: &'static str,
    pub pass: bool,
}

const FLOAT_TOL: f64 = 1e-9;

fn eq_scalar<S: Scalar>(a: &S, b: &S, exact: bool) -> bool {
    if exact {
        a == b
    } else {
        let (x, y) = (a.to_c64(), b.to_c64());
        (x - y).norm() <= FLOAT_TOL * (1.0 + x.norm() + y.norm())
    }
}

fn eq_tensor<S: Scalar>(a: &Tensor<S>, b: &Tensor<S>, exact: bool) -> bool {
    if exact {
        a == b
    } else {
        let d = norm_sq(&a.sub(b)).to_c64().norm();
        let scale = 1.0 + norm_sq(a).to_c64().norm() + norm_sq(b).to_c64().norm();
        d <= FLOAT_TOL * FLOAT_TOL * scale
    }
}

fn is_zero_scalar<S: Scalar>(a: &S, exact: bool) -> bool {
    eq_scalar(a, &S::zero(), exact)
}

/// Curvature decomposition suite: six-way split, orthogonality, star blocks.
pub fn decomposition_trial<S: CScalar>(
    rng: &mut impl Rng,
    exact: bool,
) -> Result<Vec<IdentityCheck>, Error> {
    let mut out = Vec::new();
    let mut push = |suite, name, pass| out.push(IdentityCheck { suite, name, pass });
    {
        let q: Tensor<S> = random_curvature(rng, 4);
        let dec = decompose6(&q)?;
        let sum = dec
            .s
            .add(&dec.hs)
            .add(&dec.ws)
            .add(&dec.l4)
            .add(&dec.ha)
            .add(&dec.wa);
        push("decomposition", "six_part_reconstruction", eq_tensor(&q, &sum, exact));
        let parts = [&dec.s, &dec.hs, &dec.ws, &dec.l4, &dec.ha, &dec.wa];
        let mut ortho = true;
        for i in 0..6 {
            for j in (i + 1)..6 {
                ortho &= is_zero_scalar(&tensor_inner(parts[i], parts[j])?, exact);
            }
        }
        push("decomposition", "six_part_orthogonality", ortho);
        push(
            "decomposition",
            "star_swaps_scalar_and_volume_blocks",
            star_block_check(&dec.s, &dec.l4, exact)?,
        );
        push("decomposition", "pairwise_star_squares_to_four", trace_rep_check(&q, exact)?);
    }

    Ok(out)
}

/// Torsion-curvature suite: norm identities, closed Ricci forms, and the
/// pointwise signature-density identities.
pub fn curvature_trial<S: CScalar>(
    rng: &mut impl Rng,
    exact: bool,
) -> Result<Vec<IdentityCheck>, Error> {
    let mut out = Vec::new();
    let mut push = |suite, name, pass| out.push(IdentityCheck { suite, name, pass });
    {
        let jet: TorsionJet<S> = random_jet(rng, 4);
        let ids = norm_identities(&jet)?;
        push("norms", "bianchi_kernel_norm", eq_scalar(&ids.ker_norm.0, &ids.ker_norm.1, exact));
        push("norms", "bianchi_image_norm", eq_scalar(&ids.im_norm.0, &ids.im_norm.1, exact));
        push("norms", "weyl_part_transfer", is_zero_scalar(&ids.weyl_diff, exact));
        push("norms", "wedge_norm", eq_scalar(&ids.wedge_norm.0, &ids.wedge_norm.1, exact));
        push("norms", "torsion_derivative_pairing", eq_scalar(&ids.dt_pair.0, &ids.dt_pair.1, exact));
        let closed = ricci_closed_forms(&jet)?;
        let pack = crate::torsion::curvature_pack(&jet)?;
        push("norms", "symmetric_ricci_closed_form", eq_tensor(&pack.ric_s, &closed.ric_s, exact));
        push("norms", "antisymmetric_ricci_closed_form", eq_tensor(&pack.ric_a, &closed.ric_a, exact));
        push("norms", "scalar_curvature_closed_form", eq_scalar(&pack.r, &closed.r, exact));
        push("norms", "rescaled_scalar_curvature", eq_scalar(&pack.r_tilde, &closed.r_tilde, exact));
    }
    signature_checks::<S>(rng, exact, &mut out)?;

    Ok(out)
}

/// Spinor-fiber trace suite: direct matrix traces vs both closed forms.
pub fn fiber_trial<S: CScalar>(
    rng: &mut impl Rng,
    exact: bool,
) -> Result<Vec<IdentityCheck>, Error> {
    let mut out = Vec::new();
    let mut push = |suite, name, pass| out.push(IdentityCheck { suite, name, pass });
    {
        let jet: TorsionJet<S> = random_jet(rng, 4);
        let ts = trace_suite(&jet)?;
        for (name, trio) in [
            ("potential_trace", &ts.tr_e),
            ("potential_square_trace", &ts.tr_e2),
            ("chiral_potential_trace", &ts.tr_e_omega),
            ("chiral_potential_square_trace", &ts.tr_e2_omega),
        ] {
            let ok = eq_scalar(&trio.0, &trio.1, exact) && eq_scalar(&trio.0, &trio.2, exact);
            push("fiber_traces", name, ok);
        }
    }

    Ok(out)
}

/// Twisted trace suite at bundle rank `m`, plus the trivial-twist reduction
/// of the projected coefficients and the chirality-ratio bound.
pub fn twist_trial<S: CScalar>(
    rng: &mut impl Rng,
    exact: bool,
    m: usize,
) -> Result<Vec<IdentityCheck>, Error> {
    let mut out = Vec::new();
    let mut push = |suite, name, pass| out.push(IdentityCheck { suite, name, pass });
    {
        let jet: TorsionJet<S> = random_jet(rng, 4);
        let twist: TwistData<S> = random_twist(rng, m);
        let ts = twist_trace_suite(&jet, &twist)?;
        push("twist_traces", "twisted_potential_trace", eq_scalar(&ts.tr.0, &ts.tr.1, exact));
        push("twist_traces", "twisted_chiral_trace", eq_scalar(&ts.tr_chiral.0, &ts.tr_chiral.1, exact));
        push("twist_traces", "twisted_square_trace", eq_scalar(&ts.tr_sq.0, &ts.tr_sq.1, exact));
        push(
            "twist_traces",
            "twisted_chiral_square_trace",
            eq_scalar(&ts.tr_sq_chiral.0, &ts.tr_sq_chiral.1, exact),
        );

        // projected coefficients of the trivial rank-m twist are m copies
        // of the untwisted chiral ones
        let trivial: TwistData<S> = TwistData::trivial(m);
        let hp = crate::spectral::hplus_coeffs(&jet, &trivial)?;
        let ch = crate::spectral::chiral_coeffs(&jet)?;
        let mm = S::from_int(m as i64);
        let ok = eq_scalar(&hp.a0_total(), &(ch.a0_total() * mm.clone()), exact)
            && eq_scalar(&hp.a2_total(), &(ch.a2_total() * mm.clone()), exact)
            && eq_scalar(&hp.a4_total(), &(ch.a4_total() * mm), exact);
        push("twist_traces", "trivial_twist_reduction", ok);

        // |-m / tr(gamma)| >= 1 whenever tr(gamma) != 0
        let ratio_ok = match crate::spectral::barbero_immirzi(&twist) {
            Ok(b) => b.to_c64().norm() + 1e-12 >= 1.0,
            Err(_) => true,
        };
        push("twist_traces", "chirality_ratio_bound", ratio_ok);
    }

    Ok(out)
}

/// The pointwise signature-density identities on a random jet.
fn signature_checks<S: CScalar>(
    rng: &mut impl Rng,
    exact: bool,
    out: &mut Vec<IdentityCheck>,
) -> Result<(), Error> {
    let mut push = |suite, name, pass| out.push(IdentityCheck { suite, name, pass });
    {
        let jet: TorsionJet<S> = random_jet(rng, 4);
        let d = pontryagin_densities(&jet)?;
        let sum = d.weyl_term.clone()
            + d.ric_a_term.clone()
            + d.scalar_term.clone()
            + d.mixed_term.clone();
        push("signature", "four_term_split", eq_scalar(&d.full, &sum, exact));
        push("signature", "scalar_term_pointwise", eq_scalar(&d.b3_lhs, &d.b3_rhs, exact));
    }
    Ok(())
}

/// Heat-coefficient cross-checks: generic weighted traces vs closed forms.
pub fn coefficient_trial<S: CScalar>(
    rng: &mut impl Rng,
    exact: bool,
) -> Result<Vec<IdentityCheck>, Error> {
    let mut out = Vec::new();
    let mut push = |suite, name, pass| out.push(IdentityCheck { suite, name, pass });
    {
        let jet: TorsionJet<S> = random_jet(rng, 4);
        let closed = dstar_d_coeffs(&jet)?;
        let (ga0, ga2, _) = dstar_d_generic(&jet)?;
        push("coefficients", "a0_generic", eq_scalar(&ga0, &closed.a0_total(), exact));
        push("coefficients", "a2_generic", eq_scalar(&ga2, &closed.a2_total(), exact));
        let flat: TorsionJet<S> = random_constant_flat_jet(rng);
        let closed_flat = dstar_d_coeffs(&flat)?;
        let (_, _, fa4) = dstar_d_generic(&flat)?;
        push(
            "coefficients",
            "a4_generic_constant_flat",
            eq_scalar(&fa4, &closed_flat.a4_total(), exact),
        );
        let twist: TwistData<S> = random_twist(rng, 2);
        let hp_closed = hplus_coeffs(&flat, &twist)?;
        let (ha0, ha2, ha4) = hplus_generic(&flat, &twist)?;
        let ok = eq_scalar(&ha0, &hp_closed.a0_total(), exact)
            && eq_scalar(&ha2, &hp_closed.a2_total(), exact)
            && eq_scalar(&ha4, &hp_closed.a4_total(), exact);
        push("coefficients", "twisted_generic_constant_flat", ok);
        // Phi = 0 twist reduces a2 to the chiral density weighted by m, tr(gamma)
        let mut twist0 = twist.clone();
        twist0.phi = crate::clifford::CMat::zeros(twist0.m);
        twist0.grad_phi = vec![crate::clifford::CMat::zeros(twist0.m); 4];
        let jet2: TorsionJet<S> = random_jet(rng, 4);
        let hp = hplus_coeffs(&jet2, &twist0)?;
        let ch = chiral_coeffs(&jet2)?;
        let m = S::from_int(twist0.m as i64);
        let tg = S::from_int(twist0.tr_gamma());
        let expected = find_term(&ch.a2, "einstein") * m
            + find_term(&ch.a2, "holst") * tg;
        push("coefficients", "phi_zero_a2_reduction", eq_scalar(&hp.a2_total(), &expected, exact));
    }

    Ok(out)
}

/// One verification trial: draws random jets and twists and runs every named
/// identity.  `exact` selects exact comparison (rational arithmetic) versus a
/// relative float tolerance.
pub fn run_trial<S: CScalar>(rng: &mut impl Rng, exact: bool) -> Result<Vec<IdentityCheck>, Error> {
    let mut out = decomposition_trial::<S>(rng, exact)?;
    out.extend(curvature_trial::<S>(rng, exact)?);
    out.extend(fiber_trial::<S>(rng, exact)?);
    out.extend(twist_trial::<S>(rng, exact, 2)?);
    out.extend(coefficient_trial::<S>(rng, exact)?);
    Ok(out)
}

fn find_term<S: Scalar>(terms: &[(&'static str, S)], name: &str) -> S {
    terms
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, x)| x.clone())
        .unwrap_or_else(S::zero)
}

// The star-block checks below verify the mapping of the six-part
// decomposition under the pairwise star: star(S-block) lands in the
// volume block and vice versa, star(HS) lands in WA and vice versa,
// star(WS) stays in WS and star(HA) stays in HA.
fn star_block_check<S: Scalar>(s: &Tensor<S>, l4: &Tensor<S>, exact: bool) -> Result<bool, Error> {
    let ds = decompose6(&hodge_pair(s)?)?;
    let dl = decompose6(&hodge_pair(l4)?)?;
    let s_maps = eq_tensor(&ds.s.add(&ds.hs).add(&ds.ws).add(&ds.ha).add(&ds.wa), &Tensor::zeros(4, 4), exact);
    let l_maps = eq_tensor(&dl.l4.add(&dl.hs).add(&dl.ws).add(&dl.ha).add(&dl.wa), &Tensor::zeros(4, 4), exact);
    Ok(s_maps && l_maps)
}

fn trace_rep_check<S: Scalar>(q: &Tensor<S>, exact: bool) -> Result<bool, Error> {
    // trace_rep inverts the pairwise star on the trace part:
    // the trace representative of star(Q) recovers -(1/2) c(star Q)
    // consistently with the decomposition blocks.
    let t = trace_rep(q)?;
    let t2 = trace_rep(&hodge_pair(&hodge_pair(q)?)?)?;
    // star is 2x an isometry pairwise: star(star Q) = 4 Q
    Ok(eq_tensor(&t2, &t.scale(&S::from_int(4)), exact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{C64, GRat};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exact_suite_passes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..2 {
            let checks = run_trial::<GRat>(&mut rng, true).unwrap();
            for c in &checks {
                assert!(c.pass, "{}/{} failed", c.suite, c.name);
            }
        }
    }

    #[test]
    fn float_suite_passes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2025);
        let checks = run_trial::<C64>(&mut rng, false).unwrap();
        for c in &checks {
            assert!(c.pass, "{}/{} failed", c.suite, c.name);
        }
    }

    #[test]
    fn generated_curvature_is_algebraic() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 3..=5 {
            let q: Tensor<crate::scalar::Rat> = random_curvature(&mut rng, n);
            assert!(crate::curvature::is_algebraic_curvature(&q));
        }
    }
}
