//! Heat-coefficient densities for the torsion Dirac Laplacian `D*D`, its
//! chiral projection `P+ D*D` and the unitarily twisted version, plus the
//! Holst density, the Barbero-Immirzi parameter and the cut-off action.
//!
//! All exact densities are returned as rational multiples of pi^{-2}: a
//! report entry `x` means the pointwise density `x / pi^2`.

use crate::clifford::{act_form, gamma_basis, omega, potential_e, spinor_curvature, CMat};
use crate::curvature::{hodge_pair, ricci_decompose};
use crate::scalar::{CScalar, Scalar};
use crate::tensor::{epsilon, norm_sq, tensor_inner, vol_form, Tensor};
use crate::torsion::{curvature_pack, TorsionJet};
use crate::Error;

/// Named density contributions to a heat coefficient; `total` sums them.
#[derive(Clone, Debug)]
pub struct CoeffReport<S: Scalar> {
    pub method: &'static str,
    pub a0: Vec<(&'static str, S)>,
    pub a2: Vec<(&'static str, S)>,
    pub a4: Vec<(&'static str, S)>,
}

impl<S: Scalar> CoeffReport<S> {
    pub fn total(terms: &[(&'static str, S)]) -> S {
        let mut acc = S::zero();
        for (_, x) in terms {
            acc = acc + x.clone();
        }
        acc
    }

    pub fn a0_total(&self) -> S {
        Self::total(&self.a0)
    }
    pub fn a2_total(&self) -> S {
        Self::total(&self.a2)
    }
    pub fn a4_total(&self) -> S {
        Self::total(&self.a4)
    }
}

// ---------------------------------------------------------------------------
// Generic heat-kernel densities for a Laplace-type operator Delta - E.
// ---------------------------------------------------------------------------

/// Inputs to the generic (Gilkey-type) density formulas on a 4-manifold.
/// `weight` multiplies inside every trace (identity when `None`), which is
/// how chiral projections enter.  `lap_tr_e_weighted` is the trace of the
/// Laplacian of E against the weight; it defaults to zero (it is a total
/// derivative and vanishes for the constant-field cross-checks).
pub struct GilkeyInput<'a, S: CScalar> {
    pub e: &'a CMat<S>,
    pub omega: &'a [Vec<CMat<S>>],
    pub weight: Option<&'a CMat<S>>,
    pub r_g: S,
    pub ric_g_sq: S,
    pub riem_g_sq: S,
    pub lap_rg: S,
    pub lap_tr_e_weighted: S,
}

/// Generic densities (units of pi^{-2}):
/// a0 = (1/16) tr W,
/// a2 = (1/16) tr(W (E + R/6)),
/// a4 = (1/16)(1/360) tr(W (60 lap E + 60 R E + 180 E^2 + 30 sum Omega^2
///        + (12 lap R + 5 R^2 - 2||ric||^2 + 2||riem||^2) id)).
pub fn gilkey_densities<S: CScalar>(input: &GilkeyInput<S>) -> (S, S, S) {
    let n = input.e.n;
    let id = CMat::identity(n);
    let w = input.weight.cloned().unwrap_or_else(|| id.clone());
    let tr_w = w.trace();
    let sixteenth = S::from_ratio(1, 16);
    let a0 = tr_w.clone() * sixteenth.clone();
    let tr_we = w.mul(input.e).trace();
    let a2 = (tr_we.clone() + input.r_g.clone() * S::from_ratio(1, 6) * tr_w.clone())
        * sixteenth.clone();
    let tr_we2 = w.mul(input.e).mul(input.e).trace();
    let mut tr_womom = S::zero();
    for row in input.omega {
        for o in row {
            tr_womom = tr_womom + w.mul(o).mul(o).trace();
        }
    }
    let curv_scalar = S::from_int(12) * input.lap_rg.clone()
        + S::from_int(5) * input.r_g.clone() * input.r_g.clone()
        - S::from_int(2) * input.ric_g_sq.clone()
        + S::from_int(2) * input.riem_g_sq.clone();
    let bracket = S::from_int(60) * input.lap_tr_e_weighted.clone()
        + S::from_int(60) * input.r_g.clone() * tr_we
        + S::from_int(180) * tr_we2
        + S::from_int(30) * tr_womom
        + curv_scalar * tr_w;
    let a4 = bracket * S::from_ratio(1, 360) * sixteenth;
    (a0, a2, a4)
}

// ---------------------------------------------------------------------------
// Holst density.
// ---------------------------------------------------------------------------

/// The rescaled Holst 4-form C_H = 18 (dT - <T, *V-flat> omega) and its
/// density <C_H, omega>/24.
pub fn holst_term<S: Scalar>(jet: &TorsionJet<S>) -> Result<(Tensor<S>, S), Error> {
    if jet.n != 4 {
        return Err(Error::UnsupportedDim(jet.n));
    }
    let om = vol_form::<S>();
    let tsv = jet.t_pair_star_v()?;
    let c_h = jet.d_t.sub(&om.scale(&tsv)).scale(&S::from_int(18));
    let density = tensor_inner(&c_h, &om)? * S::from_ratio(1, 24);
    Ok((c_h, density))
}

/// <C_H, omega> (24 times the Holst density), used in the grouped closed forms.
fn holst_pairing<S: Scalar>(jet: &TorsionJet<S>) -> Result<S, Error> {
    let (c_h, _) = holst_term(jet)?;
    tensor_inner(&c_h, &vol_form::<S>())
}

// ---------------------------------------------------------------------------
// Closed-form coefficient reports.
// ---------------------------------------------------------------------------

/// Scalars shared by the closed-form reports.
struct JetScalars<S: Scalar> {
    r_g: S,
    r_tilde: S,
    weyl_sq: S,
    delta_t_sq: S,
    d_vflat_sq: S,
    euler_lc: S,
    /// <riem~, hodge_pair(riem~)> of the rescaled connection (signature integrand)
    p1_pairing: S,
    holst_om: S,
}

fn jet_scalars<S: Scalar>(jet: &TorsionJet<S>) -> Result<JetScalars<S>, Error> {
    let (_, _, weyl) = ricci_decompose(&jet.riem_g)?;
    let modified = jet.modified();
    let pack_m = curvature_pack(&modified)?;
    let p1_pairing = tensor_inner(&pack_m.riem, &hodge_pair(&pack_m.riem)?)?;
    let euler_lc = jet.r_g.clone() * jet.r_g.clone()
        - S::from_int(4) * norm_sq(&jet.ric_g)
        + norm_sq(&jet.riem_g);
    Ok(JetScalars {
        r_g: jet.r_g.clone(),
        r_tilde: pack_m.r,
        weyl_sq: norm_sq(&weyl),
        delta_t_sq: norm_sq(&jet.delta_t),
        d_vflat_sq: norm_sq(&jet.d_vflat),
        euler_lc,
        p1_pairing,
        holst_om: holst_pairing(jet)?,
    })
}

/// Closed-form densities of the heat coefficients of D*D.
pub fn dstar_d_coeffs<S: Scalar>(jet: &TorsionJet<S>) -> Result<CoeffReport<S>, Error> {
    if jet.n != 4 {
        return Err(Error::UnsupportedDim(jet.n));
    }
    let s = jet_scalars(jet)?;
    Ok(CoeffReport {
        method: "closed",
        a0: vec![("volume", S::from_ratio(1, 4))],
        a2: vec![("einstein", -(s.r_tilde.clone() * S::from_ratio(1, 48)))],
        a4: vec![
            ("gauss_bonnet", s.euler_lc.clone() * S::from_ratio(11, 5760)),
            ("weyl", -(s.weyl_sq.clone() * S::from_ratio(1, 320))),
            (
                "torsion_kinetic",
                -((s.delta_t_sq.clone() + s.d_vflat_sq.clone()) * S::from_ratio(3, 32)),
            ),
        ],
    })
}

/// Generic-route densities of D*D (agrees with the closed form pointwise on
/// constant-field flat jets and after integration over a closed manifold).
pub fn dstar_d_generic<S: CScalar>(jet: &TorsionJet<S>) -> Result<(S, S, S), Error> {
    let e = potential_e(jet)?;
    let pack_m = curvature_pack(&jet.modified())?;
    let om = spinor_curvature(&pack_m.riem)?;
    let input = GilkeyInput {
        e: &e,
        omega: &om,
        weight: None,
        r_g: jet.r_g.clone(),
        ric_g_sq: norm_sq(&jet.ric_g),
        riem_g_sq: norm_sq(&jet.riem_g),
        lap_rg: jet.lap_rg.clone(),
        lap_tr_e_weighted: S::zero(),
    };
    Ok(gilkey_densities(&input))
}

/// Closed-form densities of the chirally projected operator P+ D*D.
pub fn chiral_coeffs<S: Scalar>(jet: &TorsionJet<S>) -> Result<CoeffReport<S>, Error> {
    if jet.n != 4 {
        return Err(Error::UnsupportedDim(jet.n));
    }
    let s = jet_scalars(jet)?;
    Ok(CoeffReport {
        method: "closed",
        a0: vec![("volume", S::from_ratio(1, 8))],
        a2: vec![
            ("einstein", -(s.r_tilde.clone() * S::from_ratio(1, 96))),
            ("holst", -(s.holst_om.clone() * S::from_ratio(1, 2304))),
        ],
        a4: vec![
            ("gauss_bonnet", s.euler_lc.clone() * S::from_ratio(11, 11520)),
            ("signature", s.p1_pairing.clone() * S::from_ratio(1, 1536)),
            ("weyl", -(s.weyl_sq.clone() * S::from_ratio(1, 640))),
            (
                "torsion_kinetic",
                -((s.delta_t_sq.clone() + s.d_vflat_sq.clone()) * S::from_ratio(3, 64)),
            ),
            (
                "holst_scalar",
                s.r_tilde.clone() * s.holst_om.clone() * S::from_ratio(1, 27648),
            ),
        ],
    })
}

// ---------------------------------------------------------------------------
// Unitary twists.
// ---------------------------------------------------------------------------

/// Pointwise data of a unitary twist of rank m: a grading gamma (diagonal,
/// entries +-1), a Hermitian field Phi with its covariant derivatives, and
/// the anti-Hermitian curvature Omega_ij of the twist connection (required
/// to commute with gamma).
#[derive(Clone, Debug)]
pub struct TwistData<S: CScalar> {
    pub m: usize,
    pub gamma_diag: Vec<i64>,
    pub phi: CMat<S>,
    pub grad_phi: Vec<CMat<S>>,
    pub omega_h: Vec<Vec<CMat<S>>>,
}

impl<S: CScalar> TwistData<S> {
    pub fn new(
        gamma_diag: Vec<i64>,
        phi: CMat<S>,
        grad_phi: Vec<CMat<S>>,
        omega_h: Vec<Vec<CMat<S>>>,
    ) -> Result<Self, Error> {
        let m = gamma_diag.len();
        if m == 0 {
            return Err(Error::Precondition("twist rank must be positive".into()));
        }
        if gamma_diag.iter().any(|&g| g != 1 && g != -1) {
            return Err(Error::Precondition("twist grading entries must be +-1".into()));
        }
        if phi.n != m || !phi.sub(&phi.dagger()).is_negligible() {
            return Err(Error::Precondition("Phi must be an m x m Hermitian matrix".into()));
        }
        if grad_phi.len() != 4
            || grad_phi.iter().any(|p| p.n != m || !p.sub(&p.dagger()).is_negligible())
        {
            return Err(Error::Precondition("grad Phi must be four Hermitian matrices".into()));
        }
        if omega_h.len() != 4 || omega_h.iter().any(|row| row.len() != 4) {
            return Err(Error::Precondition("Omega must be a 4 x 4 array".into()));
        }
        for i in 0..4 {
            for j in 0..4 {
                let o = &omega_h[i][j];
                if o.n != m {
                    return Err(Error::Precondition("Omega entries must be m x m".into()));
                }
                if !o.add(&o.dagger()).is_negligible() {
                    return Err(Error::Precondition("Omega entries must be anti-Hermitian".into()));
                }
                if !o.add(&omega_h[j][i]).is_negligible() {
                    return Err(Error::Precondition("Omega must be antisymmetric in ij".into()));
                }
                // gamma-compatibility: Omega must be block diagonal
                for p in 0..m {
                    for q in 0..m {
                        if gamma_diag[p] != gamma_diag[q] && !o.get(p, q).is_negligible() {
                            return Err(Error::Precondition(
                                "Omega must commute with the grading".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(TwistData { m, gamma_diag, phi, grad_phi, omega_h })
    }

    pub fn trivial(m: usize) -> Self {
        TwistData {
            m,
            gamma_diag: vec![1; m],
            phi: CMat::zeros(m),
            grad_phi: vec![CMat::zeros(m); 4],
            omega_h: vec![vec![CMat::zeros(m); 4]; 4],
        }
    }

    pub fn tr_gamma(&self) -> i64 {
        self.gamma_diag.iter().sum()
    }

    pub fn gamma_matrix(&self) -> CMat<S> {
        let mut g = CMat::zeros(self.m);
        for (i, &s) in self.gamma_diag.iter().enumerate() {
            g.set(i, i, S::from_int(s));
        }
        g
    }

    /// directional derivative of tr Phi^2 along V, from the jet's V field
    pub fn dv_phi2(&self, jet: &TorsionJet<S>) -> S {
        let mut acc = S::zero();
        for i in 0..4 {
            acc = acc
                + jet.v.get(&[i]).clone()
                    * self.grad_phi[i].mul(&self.phi).trace()
                    * S::from_int(2);
        }
        acc
    }
}

/// Bochner potential of the twisted operator on the 4m-dimensional fiber:
/// E_Phi = E (x) id + (1/2) sum_{i != j} e_i e_j (x) Omega_ij
///         + sum_i (omega e_i) (x) grad_i Phi - id (x) Phi^2
///         - 3 (V . omega) (x) Phi.
pub fn twist_potential<S: CScalar>(
    jet: &TorsionJet<S>,
    twist: &TwistData<S>,
) -> Result<CMat<S>, Error> {
    let e = potential_e(jet)?;
    let g = gamma_basis::<S>();
    let om = omega::<S>();
    let id_m = CMat::identity(twist.m);
    let mut total = e.kron(&id_m);
    let half = S::from_ratio(1, 2);
    for i in 0..4 {
        for j in 0..4 {
            if i == j {
                continue;
            }
            let gij = g[i].mul(&g[j]);
            total = total.add(&gij.kron(&twist.omega_h[i][j]).scale(&half));
        }
    }
    for i in 0..4 {
        total = total.add(&om.mul(&g[i]).kron(&twist.grad_phi[i]));
    }
    let phi2 = twist.phi.mul(&twist.phi);
    total = total.sub(&CMat::identity(4).kron(&phi2));
    let act_v = act_form(&jet.v)?;
    total = total.sub(&act_v.mul(&om).kron(&twist.phi).scale(&S::from_int(3)));
    Ok(total)
}

/// Full curvature of the twisted connection on the 4m fiber:
/// Omega-bar_ij = Omega^spinor_ij (x) id + id (x) Omega^twist_ij,
/// with the spinor part built from the rescaled connection.
pub fn twist_curvature<S: CScalar>(
    jet: &TorsionJet<S>,
    twist: &TwistData<S>,
) -> Result<Vec<Vec<CMat<S>>>, Error> {
    let pack_m = curvature_pack(&jet.modified())?;
    let om_spin = spinor_curvature(&pack_m.riem)?;
    let id4 = CMat::identity(4);
    let id_m = CMat::identity(twist.m);
    let mut out = vec![vec![CMat::zeros(4 * twist.m); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = om_spin[i][j]
                .kron(&id_m)
                .add(&id4.kron(&twist.omega_h[i][j]));
        }
    }
    Ok(out)
}

/// The chiral projector P = (1/2)(id + omega (x) gamma).
pub fn chiral_projector<S: CScalar>(twist: &TwistData<S>) -> CMat<S> {
    let om = omega::<S>();
    let w = om.kron(&twist.gamma_matrix());
    CMat::identity(4 * twist.m).add(&w).scale(&S::from_ratio(1, 2))
}

/// Direct vs closed values of the four fiber traces of E_Phi.
pub struct TwistTraceSuite<S: CScalar> {
    pub tr: (S, S),
    pub tr_chiral: (S, S),
    pub tr_sq: (S, S),
    pub tr_sq_chiral: (S, S),
}

pub fn twist_trace_suite<S: CScalar>(
    jet: &TorsionJet<S>,
    twist: &TwistData<S>,
) -> Result<TwistTraceSuite<S>, Error> {
    let e_phi = twist_potential(jet, twist)?;
    let om_gamma = omega::<S>().kron(&twist.gamma_matrix());
    let e_phi_sq = e_phi.mul(&e_phi);
    let direct = (
        e_phi.trace(),
        e_phi.mul(&om_gamma).trace(),
        e_phi_sq.trace(),
        e_phi_sq.mul(&om_gamma).trace(),
    );
    let base = crate::clifford::trace_suite(jet)?;
    let m = S::from_int(twist.m as i64);
    let tr_gamma = S::from_int(twist.tr_gamma());
    let phi2 = twist.phi.mul(&twist.phi);
    let tr_phi2 = phi2.trace();
    let tr_phi4 = phi2.mul(&phi2).trace();
    let tr_phi2_gamma = phi2.mul(&twist.gamma_matrix()).trace();
    let mut tr_grad_sq = S::zero();
    for p in &twist.grad_phi {
        tr_grad_sq = tr_grad_sq + p.mul(p).trace();
    }
    let mut tr_omom = S::zero();
    for row in &twist.omega_h {
        for o in row {
            tr_omom = tr_omom + o.mul(o).trace();
        }
    }
    // theta pairing: sum_{ijkl} eps_{ijkl} tr(Omega_ij Omega_kl gamma)
    let mut theta = S::zero();
    let gm = twist.gamma_matrix();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let e = epsilon(&[i, j, k, l]);
                    if e != 0 {
                        theta = theta
                            + twist.omega_h[i][j]
                                .mul(&twist.omega_h[k][l])
                                .mul(&gm)
                                .trace()
                                * S::from_int(e);
                    }
                }
            }
        }
    }
    let v2 = jet.v_norm_sq();
    let dv_phi2 = twist.dv_phi2(jet);
    // tr E_Phi = m tr E - 4 tr Phi^2
    let closed_tr = m.clone() * base.tr_e.0.clone() - S::from_int(4) * tr_phi2.clone();
    // tr(E_Phi (omega x gamma)) = tr(gamma) tr(E omega)
    let closed_tr_chiral = tr_gamma.clone() * base.tr_e_omega.0.clone();
    // tr E_Phi^2 = m tr E^2 - 2 sum tr(Omega^2) + 4 sum tr((grad Phi)^2)
    //              + 4 tr Phi^4 - 2 tr E tr Phi^2 + 36 |V|^2 tr Phi^2
    //              + 12 dV tr Phi^2
    let closed_tr_sq = m.clone() * base.tr_e2.0.clone()
        - S::from_int(2) * tr_omom
        + S::from_int(4) * tr_grad_sq
        + S::from_int(4) * tr_phi4
        - S::from_int(2) * base.tr_e.0.clone() * tr_phi2.clone()
        + S::from_int(36) * v2 * tr_phi2.clone()
        + S::from_int(12) * dv_phi2;
    // tr(E_Phi^2 (omega x gamma)) = tr gamma tr(E^2 omega)
    //   + sum_{ijkl} eps tr(Omega_ij Omega_kl gamma) - 2 tr(E omega) tr(Phi^2 gamma)
    let closed_tr_sq_chiral = tr_gamma * base.tr_e2_omega.0.clone() + theta
        - S::from_int(2) * base.tr_e_omega.0.clone() * tr_phi2_gamma;
    Ok(TwistTraceSuite {
        tr: (direct.0, closed_tr),
        tr_chiral: (direct.1, closed_tr_chiral),
        tr_sq: (direct.2, closed_tr_sq),
        tr_sq_chiral: (direct.3, closed_tr_sq_chiral),
    })
}

/// Closed-form densities of the twisted chiral operator P+ D_Phi* D_Phi.
pub fn hplus_coeffs<S: CScalar>(
    jet: &TorsionJet<S>,
    twist: &TwistData<S>,
) -> Result<CoeffReport<S>, Error> {
    if jet.n != 4 {
        return Err(Error::UnsupportedDim(jet.n));
    }
    let s = jet_scalars(jet)?;
    let m = S::from_int(twist.m as i64);
    let tr_gamma = S::from_int(twist.tr_gamma());
    let phi2 = twist.phi.mul(&twist.phi);
    let tr_phi2 = phi2.trace();
    let tr_phi4 = phi2.mul(&phi2).trace();
    let tr_phi2_gamma = phi2.mul(&twist.gamma_matrix()).trace();
    let mut tr_grad_sq = S::zero();
    for p in &twist.grad_phi {
        tr_grad_sq = tr_grad_sq + p.mul(p).trace();
    }
    let mut tr_omom = S::zero();
    for row in &twist.omega_h {
        for o in row {
            tr_omom = tr_omom + o.mul(o).trace();
        }
    }
    let gm = twist.gamma_matrix();
    let mut theta = S::zero();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let e = epsilon(&[i, j, k, l]);
                    if e != 0 {
                        theta = theta
                            + twist.omega_h[i][j]
                                .mul(&twist.omega_h[k][l])
                                .mul(&gm)
                                .trace()
                                * S::from_int(e);
                    }
                }
            }
        }
    }
    let t2 = jet.t_norm_sq();
    let dv_phi2 = twist.dv_phi2(jet);
    let a0 = vec![("volume", m.clone() * S::from_ratio(1, 8))];
    let a2 = vec![
        ("einstein", -(m.clone() * s.r_tilde.clone() * S::from_ratio(1, 96))),
        ("holst", -(tr_gamma.clone() * s.holst_om.clone() * S::from_ratio(1, 2304))),
        ("higgs_mass", -(tr_phi2.clone() * S::from_ratio(1, 8))),
    ];
    // Higgs-curvature coupling, pointwise (the divergence terms integrate
    // away against the dV tr Phi^2 term on a closed manifold):
    // (1/16)((1/6) R_g - (3/2)||T||^2 + 3 div V) tr Phi^2 + (3/16) dV tr Phi^2
    let higgs_curv = (s.r_g.clone() * S::from_ratio(1, 6) - t2 * S::from_ratio(3, 2)
        + jet.div_v.clone() * S::from_int(3))
        * tr_phi2.clone()
        * S::from_ratio(1, 16)
        + dv_phi2 * S::from_ratio(3, 16);
    let a4 = vec![
        ("gauss_bonnet", m.clone() * s.euler_lc.clone() * S::from_ratio(11, 11520)),
        ("signature", tr_gamma.clone() * s.p1_pairing.clone() * S::from_ratio(1, 1536)),
        ("weyl", -(m.clone() * s.weyl_sq.clone() * S::from_ratio(1, 640))),
        (
            "torsion_kinetic",
            -(m.clone()
                * (s.delta_t_sq.clone() + s.d_vflat_sq.clone())
                * S::from_ratio(3, 64)),
        ),
        (
            "holst_scalar",
            tr_gamma * s.r_tilde.clone() * s.holst_om.clone() * S::from_ratio(1, 27648),
        ),
        ("higgs_kinetic", tr_grad_sq * S::from_ratio(1, 16)),
        ("higgs_quartic", tr_phi4 * S::from_ratio(1, 16)),
        ("higgs_curvature", higgs_curv),
        ("holst_higgs", s.holst_om.clone() * tr_phi2_gamma * S::from_ratio(1, 2304)),
        ("yang_mills", -(tr_omom * S::from_ratio(1, 48))),
        ("theta", theta * S::from_ratio(1, 64)),
    ];
    Ok(CoeffReport { method: "closed", a0, a2, a4 })
}

/// Generic-route densities of P+ D_Phi* D_Phi via the weighted heat-kernel
/// formula.  Pointwise equal to `hplus_coeffs` on constant-field flat jets;
/// equal after integration on closed manifolds.
pub fn hplus_generic<S: CScalar>(
    jet: &TorsionJet<S>,
    twist: &TwistData<S>,
) -> Result<(S, S, S), Error> {
    let e_phi = twist_potential(jet, twist)?;
    let om_bar = twist_curvature(jet, twist)?;
    let p = chiral_projector(twist);
    let input = GilkeyInput {
        e: &e_phi,
        omega: &om_bar,
        weight: Some(&p),
        r_g: jet.r_g.clone(),
        ric_g_sq: norm_sq(&jet.ric_g),
        riem_g_sq: norm_sq(&jet.riem_g),
        lap_rg: jet.lap_rg.clone(),
        lap_tr_e_weighted: S::zero(),
    };
    Ok(gilkey_densities(&input))
}

/// Barbero-Immirzi parameter of a twist: beta = -m / tr(gamma); fails when
/// the grading is trace-free.
pub fn barbero_immirzi<S: CScalar>(twist: &TwistData<S>) -> Result<S, Error> {
    let tg = twist.tr_gamma();
    if tg == 0 {
        return Err(Error::Precondition(
            "Barbero-Immirzi parameter undefined: the grading is trace-free".into(),
        ));
    }
    Ok(-S::from_ratio(twist.m as i64, tg))
}

/// Cut-off action I = Lambda^4 F4 a0 + Lambda^2 F2 a2 + F0 a4 from the
/// integrated coefficients (plain numbers).
pub fn cc_action(a: (f64, f64, f64), moments: (f64, f64, f64), lambda: f64) -> f64 {
    let (a0, a2, a4) = a;
    let (f4, f2, f0) = moments;
    lambda.powi(4) * f4 * a0 + lambda.powi(2) * f2 * a2 + f0 * a4
}
