//! Pointwise jets of an orthogonal connection with vectorial and totally
//! antisymmetric torsion, and the curvature tensors they generate.
//!
//! A jet carries the torsion 3-form T, the vector field V, their first
//! derivatives, the Riemann tensor of the underlying metric and the
//! Laplacian of its scalar curvature.  Everything downstream (curvature
//! packs, heat-coefficient densities, integral identities) is a pointwise
//! function of such a jet.

use crate::curvature::{
    bianchi, g_trace, hodge_pair, is_algebraic_curvature, kn_product, ricci_contraction,
    ricci_decompose,
};
use crate::scalar::Scalar;
use crate::tensor::{
    antisymmetrize_slots, basis_covector, exterior_derivative, hodge_star, interior, metric,
    norm_sq, tensor_inner, vol_form, Tensor,
};
use crate::Error;

#[derive(Clone, Debug)]
pub struct TorsionJet<S: Scalar> {
    pub n: usize,
    /// vectorial torsion component (rank 1)
    pub v: Tensor<S>,
    /// grad_v[i, j] = nabla_i V_j (first slot is the direction)
    pub grad_v: Tensor<S>,
    /// totally antisymmetric torsion 3-form
    pub t: Tensor<S>,
    /// grad_t[i, x, y, z] = (nabla_i T)(x, y, z)
    pub grad_t: Tensor<S>,
    /// Riemann tensor of the Levi-Civita connection (algebraic curvature)
    pub riem_g: Tensor<S>,
    /// Laplacian of the metric scalar curvature
    pub lap_rg: S,
    // derived fields
    pub d_t: Tensor<S>,
    pub delta_t: Tensor<S>,
    pub div_v: S,
    pub d_vflat: Tensor<S>,
    pub ric_g: Tensor<S>,
    pub r_g: S,
    /// d(*T) (dimension 4 only; zero tensor otherwise unused)
    pub d_star_t: Option<Tensor<S>>,
}

impl<S: Scalar> TorsionJet<S> {
    pub fn new(
        n: usize,
        v: Tensor<S>,
        grad_v: Tensor<S>,
        t: Tensor<S>,
        grad_t: Tensor<S>,
        riem_g: Tensor<S>,
        lap_rg: S,
    ) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::Precondition("torsion jet needs dim >= 3".into()));
        }
        for (tensor, rank, what) in [
            (&v, 1usize, "V"),
            (&grad_v, 2, "grad V"),
            (&t, 3, "T"),
            (&grad_t, 4, "grad T"),
            (&riem_g, 4, "riem_g"),
        ] {
            if tensor.dim() != n || tensor.rank() != rank {
                return Err(Error::Shape(format!(
                    "{what} must have dim {n} rank {rank}, got dim {} rank {}",
                    tensor.dim(),
                    tensor.rank()
                )));
            }
        }
        if !t.is_alternating() {
            return Err(Error::Precondition("T must be a 3-form".into()));
        }
        if !antisymmetrize_slots(&grad_t, &[1, 2, 3]).sub(&grad_t).is_negligible() {
            return Err(Error::Precondition("grad T must be a 3-form in its last slots".into()));
        }
        if !is_algebraic_curvature(&riem_g) {
            return Err(Error::Precondition("riem_g must be an algebraic curvature tensor".into()));
        }
        let d_t = exterior_derivative(&grad_t);
        // delta T (Y,Z) = -sum_i (nabla_{e_i} T)(e_i, Y, Z)
        let delta_t = Tensor::from_fn(n, 2, |idx| {
            let mut acc = S::zero();
            for i in 0..n {
                acc = acc - grad_t.get(&[i, i, idx[0], idx[1]]).clone();
            }
            acc
        });
        let mut div_v = S::zero();
        for i in 0..n {
            div_v = div_v + grad_v.get(&[i, i]).clone();
        }
        let d_vflat = exterior_derivative(&grad_v);
        let ric_g = ricci_contraction(&riem_g)?;
        let r_g = g_trace(&ric_g)?;
        let d_star_t = if n == 4 {
            // nabla commutes with the star, so d(*T) comes from grad T
            let grad_star_t = Tensor::from_fn(4, 2, |idx| {
                let slice = Tensor::from_fn(4, 3, |jdx| {
                    grad_t.get(&[idx[0], jdx[0], jdx[1], jdx[2]]).clone()
                });
                hodge_star(&slice).expect("3-form star").get(&[idx[1]]).clone()
            });
            Some(exterior_derivative(&grad_star_t))
        } else {
            None
        };
        Ok(TorsionJet {
            n,
            v,
            grad_v,
            t,
            grad_t,
            riem_g,
            lap_rg,
            d_t,
            delta_t,
            div_v,
            d_vflat,
            ric_g,
            r_g,
            d_star_t,
        })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> TorsionJet<T> {
        TorsionJet::new(
            self.n,
            self.v.map(f),
            self.grad_v.map(f),
            self.t.map(f),
            self.grad_t.map(f),
            self.riem_g.map(f),
            f(&self.lap_rg),
        )
        .expect("mapped jet stays valid")
    }

    pub fn v_norm_sq(&self) -> S {
        norm_sq(&self.v)
    }

    pub fn t_norm_sq(&self) -> S {
        norm_sq(&self.t)
    }

    pub fn v_hook_t(&self) -> Tensor<S> {
        interior(&self.v, &self.t).expect("vector and 3-form")
    }

    pub fn v_hook_dt(&self) -> Tensor<S> {
        interior(&self.v, &self.d_t).expect("vector and 4-form")
    }

    /// <T, *V-flat> (dimension 4).
    pub fn t_pair_star_v(&self) -> Result<S, Error> {
        if self.n != 4 {
            return Err(Error::UnsupportedDim(self.n));
        }
        let star_v = hodge_star(&self.v)?;
        tensor_inner(&self.t, &star_v)
    }

    /// Jet of the rescaled connection whose Bochner potential is computed:
    /// T -> 3T, V -> (n-1) V (first derivatives scale along).
    pub fn modified(&self) -> TorsionJet<S> {
        let three = S::from_int(3);
        let nm1 = S::from_int(self.n as i64 - 1);
        TorsionJet::new(
            self.n,
            self.v.scale(&nm1),
            self.grad_v.scale(&nm1),
            self.t.scale(&three),
            self.grad_t.scale(&three),
            self.riem_g.clone(),
            self.lap_rg.clone(),
        )
        .expect("scaling preserves jet invariants")
    }
}

/// The rank-2 tensors quadratic in the torsion data.
#[derive(Clone, Debug)]
pub struct QuadraticTensors<S: Scalar> {
    /// g^T(X,Y) = <X hook T, Y hook T>
    pub g_t: Tensor<S>,
    /// g^V = V-flat (x) V-flat
    pub g_v: Tensor<S>,
    /// g^{nabla V}(X,Y) = grad V(X,Y) + grad V(Y,X)
    pub g_nv: Tensor<S>,
    /// d(V-flat)
    pub d_vflat: Tensor<S>,
}

pub fn quadratic_tensors<S: Scalar>(jet: &TorsionJet<S>) -> QuadraticTensors<S> {
    let n = jet.n;
    let g_t = Tensor::from_fn(n, 2, |idx| {
        let mut acc = S::zero();
        for a in 0..n {
            for b in 0..n {
                acc = acc
                    + jet.t.get(&[idx[0], a, b]).clone() * jet.t.get(&[idx[1], a, b]).clone();
            }
        }
        acc
    });
    let g_v = jet.v.tensor_product(&jet.v).expect("same dim");
    let g_nv = jet.grad_v.add(&jet.grad_v.permute(&[1, 0]));
    QuadraticTensors { g_t, g_v, g_nv, d_vflat: jet.d_vflat.clone() }
}

/// The rank-4 tensors quadratic/derivative in the torsion data.
#[derive(Clone, Debug)]
pub struct QuarticTensors<S: Scalar> {
    /// G^T_{xyzw} = sum_m (T_{yzm} T_{xwm} - T_{xzm} T_{ywm})
    pub g_t4: Tensor<S>,
    /// K^{nabla T}(X,Y,Z,W) = antisymmetrised first derivative of T
    pub k_nt: Tensor<S>,
    /// K^{VT}(X,Y,Z,W) = V ^ T with the same symmetrization
    pub k_vt: Tensor<S>,
}

pub fn quartic_tensors<S: Scalar>(jet: &TorsionJet<S>) -> QuarticTensors<S> {
    let n = jet.n;
    let g_t4 = Tensor::from_fn(n, 4, |i| {
        let (x, y, z, w) = (i[0], i[1], i[2], i[3]);
        let mut acc = S::zero();
        for m in 0..n {
            acc = acc + jet.t.get(&[y, z, m]).clone() * jet.t.get(&[x, w, m]).clone()
                - jet.t.get(&[x, z, m]).clone() * jet.t.get(&[y, w, m]).clone();
        }
        acc
    });
    let k_nt = Tensor::from_fn(n, 4, |i| {
        let (x, y, z, w) = (i[0], i[1], i[2], i[3]);
        jet.grad_t.get(&[x, y, z, w]).clone() - jet.grad_t.get(&[y, x, z, w]).clone()
            - jet.grad_t.get(&[z, x, y, w]).clone()
            + jet.grad_t.get(&[w, x, y, z]).clone()
    });
    let k_vt = Tensor::from_fn(n, 4, |i| {
        let (x, y, z, w) = (i[0], i[1], i[2], i[3]);
        jet.v.get(&[x]).clone() * jet.t.get(&[y, z, w]).clone()
            - jet.v.get(&[y]).clone() * jet.t.get(&[x, z, w]).clone()
            - jet.v.get(&[z]).clone() * jet.t.get(&[x, y, w]).clone()
            + jet.v.get(&[w]).clone() * jet.t.get(&[x, y, z]).clone()
    });
    QuarticTensors { g_t4, k_nt, k_vt }
}

/// Curvature tensors of the torsion connection.
#[derive(Clone, Debug)]
pub struct CurvaturePack<S: Scalar> {
    /// pair-symmetric part of the curvature
    pub riem_s: Tensor<S>,
    /// pair-antisymmetric part of the curvature
    pub riem_a: Tensor<S>,
    /// full curvature riem_s + riem_a
    pub riem: Tensor<S>,
    /// Bianchi kernel (algebraic curvature) part of riem_s
    pub riem_s_ker: Tensor<S>,
    /// totally antisymmetric part of riem_s
    pub riem_s_im: Tensor<S>,
    /// symmetric Ricci tensor c(riem_s)
    pub ric_s: Tensor<S>,
    /// antisymmetric Ricci tensor c(riem_a)
    pub ric_a: Tensor<S>,
    /// scalar curvature of the torsion connection
    pub r: S,
    /// scalar curvature of the rescaled connection (T -> 3T, V -> (n-1)V)
    pub r_tilde: S,
}

pub fn curvature_pack<S: Scalar>(jet: &TorsionJet<S>) -> Result<CurvaturePack<S>, Error> {
    let n = jet.n;
    let g = metric::<S>(n);
    let gg = kn_product(&g, &g)?;
    let quad = quadratic_tensors(jet);
    let quart = quartic_tensors(jet);
    let half = S::from_ratio(1, 2);
    let v2 = jet.v_norm_sq();
    let v_wedge_t = crate::tensor::wedge(&jet.v, &jet.t)?;

    // riem_s = riem_g - (1/2) g_nv ^ g + (1/2)|V|^2 g^g - g_v ^ g
    //          + (1/2) dT - V^T - G^T
    let riem_s = jet
        .riem_g
        .sub(&kn_product(&quad.g_nv, &g)?.scale(&half))
        .add(&gg.scale(&(v2.clone() * half.clone())))
        .sub(&kn_product(&quad.g_v, &g)?)
        .add(&jet.d_t.scale(&half))
        .sub(&v_wedge_t)
        .sub(&quart.g_t4);
    // riem_a = (1/2) K^{nabla T} - (1/2) dV ^ g + (V hook T) ^ g + K^{VT}
    let riem_a = quart
        .k_nt
        .scale(&half)
        .sub(&kn_product(&jet.d_vflat, &g)?.scale(&half))
        .add(&kn_product(&jet.v_hook_t(), &g)?)
        .add(&quart.k_vt);
    let riem = riem_s.add(&riem_a);
    let riem_s_im = bianchi(&riem_s)?;
    let riem_s_ker = riem_s.sub(&riem_s_im);
    let ric_s = ricci_contraction(&riem_s)?;
    let ric_a = ricci_contraction(&riem_a)?;
    let r = g_trace(&ric_s)?;
    let modified = jet.modified();
    let quad_m = quadratic_tensors(&modified);
    let quart_m = quartic_tensors(&modified);
    let v2_m = modified.v_norm_sq();
    let riem_s_m = modified
        .riem_g
        .sub(&kn_product(&quad_m.g_nv, &g)?.scale(&half))
        .add(&gg.scale(&(v2_m * half.clone())))
        .sub(&kn_product(&quad_m.g_v, &g)?)
        .add(&modified.d_t.scale(&half))
        .sub(&crate::tensor::wedge(&modified.v, &modified.t)?)
        .sub(&quart_m.g_t4);
    let r_tilde = g_trace(&ricci_contraction(&riem_s_m)?)?;
    Ok(CurvaturePack {
        riem_s,
        riem_a,
        riem,
        riem_s_ker,
        riem_s_im,
        ric_s,
        ric_a,
        r,
        r_tilde,
    })
}

/// Closed forms of the Ricci tensors and scalar curvatures.
pub struct RicciClosedForms<S: Scalar> {
    pub ric_s: Tensor<S>,
    pub ric_a: Tensor<S>,
    pub r: S,
    pub r_tilde: S,
}

pub fn ricci_closed_forms<S: Scalar>(jet: &TorsionJet<S>) -> Result<RicciClosedForms<S>, Error> {
    let n = jet.n as i64;
    let g = metric::<S>(jet.n);
    let quad = quadratic_tensors(jet);
    let v2 = jet.v_norm_sq();
    // ric_s = ric_g + (div V - (n-2)|V|^2) g + (n-2) g_v + (n-2)/2 g_nv - g_t
    let ric_s = jet
        .ric_g
        .add(&g.scale(&(jet.div_v.clone() - S::from_int(n - 2) * v2.clone())))
        .add(&quad.g_v.scale(&S::from_int(n - 2)))
        .add(&quad.g_nv.scale(&S::from_ratio(n - 2, 2)))
        .sub(&quad.g_t);
    // ric_a = -delta T + (n-2)/2 dV + (4-n) (V hook T)
    let ric_a = jet
        .delta_t
        .neg()
        .add(&jet.d_vflat.scale(&S::from_ratio(n - 2, 2)))
        .add(&jet.v_hook_t().scale(&S::from_int(4 - n)));
    // R = R_g + 2(n-1) div V - (n-1)(n-2)|V|^2 - ||T||^2
    let r = jet.r_g.clone() + S::from_int(2 * (n - 1)) * jet.div_v.clone()
        - S::from_int((n - 1) * (n - 2)) * v2.clone()
        - jet.t_norm_sq();
    // same formula for the rescaled connection
    let r_tilde = jet.r_g.clone()
        + S::from_int(2 * (n - 1) * (n - 1)) * jet.div_v.clone()
        - S::from_int((n - 1) * (n - 2) * (n - 1) * (n - 1)) * v2
        - S::from_int(9) * jet.t_norm_sq();
    Ok(RicciClosedForms { ric_s, ric_a, r, r_tilde })
}

/// Exact norm identities for the two parts of the pair-symmetric curvature
/// (dimension 4).  Each field holds (lhs, rhs) of one identity.
pub struct NormIdentities<S: Scalar> {
    /// ||riem_s_ker||^2 = ||C^g||^2 + 2||ric_s||^2 - R^2/3
    pub ker_norm: (S, S),
    /// ||riem_s_im||^2 = 1/4||dT||^2 + 4|V|^2||T||^2 - 12||V hook T||^2 - 4<V hook dT, T>
    pub im_norm: (S, S),
    /// weyl(riem_s_ker) = weyl(riem_g) componentwise (returned as norms of the difference)
    pub weyl_diff: S,
    /// ||V^T||^2 = 4|V|^2||T||^2 - 12||V hook T||^2
    pub wedge_norm: (S, S),
    /// <dT, V^T> = 4 <V hook dT, T>
    pub dt_pair: (S, S),
}

pub fn norm_identities<S: Scalar>(jet: &TorsionJet<S>) -> Result<NormIdentities<S>, Error> {
    if jet.n != 4 {
        return Err(Error::UnsupportedDim(jet.n));
    }
    let pack = curvature_pack(jet)?;
    let (_, _, weyl_g) = ricci_decompose(&jet.riem_g)?;
    let (_, _, weyl_ker) = ricci_decompose(&pack.riem_s_ker)?;
    let v2 = jet.v_norm_sq();
    let t2 = jet.t_norm_sq();
    let vt = jet.v_hook_t();
    let vdt_t = tensor_inner(&jet.v_hook_dt(), &jet.t)?;
    let ker_norm = (
        norm_sq(&pack.riem_s_ker),
        norm_sq(&weyl_g) + S::from_int(2) * norm_sq(&pack.ric_s)
            - pack.r.clone() * pack.r.clone() * S::from_ratio(1, 3),
    );
    let im_norm = (
        norm_sq(&pack.riem_s_im),
        S::from_ratio(1, 4) * norm_sq(&jet.d_t) + S::from_int(4) * v2.clone() * t2.clone()
            - S::from_int(12) * norm_sq(&vt)
            - S::from_int(4) * vdt_t.clone(),
    );
    let weyl_diff = norm_sq(&weyl_ker.sub(&weyl_g));
    let v_wedge_t = crate::tensor::wedge(&jet.v, &jet.t)?;
    let wedge_norm = (
        norm_sq(&v_wedge_t),
        S::from_int(4) * v2 * t2 - S::from_int(12) * norm_sq(&vt),
    );
    let dt_pair = (
        tensor_inner(&jet.d_t, &v_wedge_t)?,
        S::from_int(4) * vdt_t,
    );
    Ok(NormIdentities { ker_norm, im_norm, weyl_diff, wedge_norm, dt_pair })
}

/// Pointwise densities entering the signature/Pontryagin bookkeeping
/// (dimension 4).  `full` is <riem, hodge_pair(riem)>; the four summands
/// decompose it exactly; `b*_{lhs,rhs}` are the integrands of the two
/// integral identities used on the torus (the `d*T` pairing constant is 8
/// under the full-contraction pairwise star).
pub struct PontryaginDensities<S: Scalar> {
    pub full: S,
    pub weyl_term: S,
    pub ric_a_term: S,
    pub scalar_term: S,
    pub mixed_term: S,
    pub b3_lhs: S,
    pub b3_rhs: S,
    pub b2_lhs: S,
    pub b2_rhs: S,
    pub b4_lhs: S,
    pub b4_rhs: S,
}

pub fn pontryagin_densities<S: Scalar>(jet: &TorsionJet<S>) -> Result<PontryaginDensities<S>, Error> {
    if jet.n != 4 {
        return Err(Error::UnsupportedDim(jet.n));
    }
    let g = metric::<S>(4);
    let pack = curvature_pack(jet)?;
    let (_, _, weyl_g) = ricci_decompose(&jet.riem_g)?;
    // The curvature 2-form carries the first index pair of riem, so the
    // Chern-Weil density pairs the volume form against that pair.
    let riem_sw = crate::curvature::swap_pairs(&pack.riem);
    let full = tensor_inner(&riem_sw, &hodge_pair(&riem_sw)?)?;
    let weyl_term = tensor_inner(&weyl_g, &hodge_pair(&weyl_g)?)?;
    let ric_a_g = kn_product(&pack.ric_a, &g)?;
    let ric_a_term =
        S::from_ratio(1, 4) * tensor_inner(&ric_a_g, &hodge_pair(&ric_a_g)?)?;
    let gg = kn_product(&g, &g)?;
    let scalar_term = -(pack.r.clone() * S::from_ratio(1, 12))
        * tensor_inner(&pack.riem_s_im, &hodge_pair(&gg)?)?;
    // h_s = ric_s - (R/4) g ; mixed term couples riem_a to it
    let h_s = pack.ric_s.sub(&g.scale(&(pack.r.clone() * S::from_ratio(1, 4))));
    let mixed_arg = pack.riem_a.add(&ric_a_g.scale(&S::from_ratio(1, 2)));
    let h_s_g = kn_product(&h_s, &g)?;
    // pair-swapping flips the sign of the symmetric/antisymmetric cross term
    let mixed_term = tensor_inner(&mixed_arg, &hodge_pair(&h_s_g)?)?;
    let om = vol_form::<S>();
    let dt_om = tensor_inner(&jet.d_t, &om)?;
    let t_star_v = jet.t_pair_star_v()?;
    let b3_rhs = -(pack.r.clone() * S::from_ratio(1, 6)) * dt_om.clone()
        + pack.r.clone() * S::from_ratio(4, 3) * t_star_v.clone();
    let d_star_t = jet.d_star_t.clone().expect("dim 4 jet");
    let dst_dv = tensor_inner(&d_star_t, &jet.d_vflat)?;
    let b2_rhs = S::from_int(8) * dst_dv.clone();
    let b4_rhs = S::from_int(8) * dst_dv
        + pack.r.clone() * S::from_ratio(4, 3) * t_star_v
        - pack.r.clone() * S::from_ratio(1, 6) * dt_om;
    Ok(PontryaginDensities {
        full,
        weyl_term,
        ric_a_term: ric_a_term.clone(),
        scalar_term: scalar_term.clone(),
        mixed_term: mixed_term.clone(),
        b3_lhs: scalar_term,
        b3_rhs,
        b2_lhs: ric_a_term,
        b2_rhs,
        b4_lhs: -mixed_term,
        b4_rhs,
    })
}

/// Euler-type integrands for the torsion connection and the Levi-Civita one.
pub struct EulerDensities<S: Scalar> {
    /// R^2 - 4||ric_s||^2 + 4||ric_a||^2 + ||riem_s||^2 - ||riem_a||^2
    pub torsion: S,
    /// R_g^2 - 4||ric_g||^2 + ||riem_g||^2
    pub levi_civita: S,
}

pub fn euler_densities<S: Scalar>(jet: &TorsionJet<S>) -> Result<EulerDensities<S>, Error> {
    let pack = curvature_pack(jet)?;
    let four = S::from_int(4);
    let torsion = pack.r.clone() * pack.r.clone() - four.clone() * norm_sq(&pack.ric_s)
        + four.clone() * norm_sq(&pack.ric_a)
        + norm_sq(&pack.riem_s)
        - norm_sq(&pack.riem_a);
    let levi_civita = jet.r_g.clone() * jet.r_g.clone() - four * norm_sq(&jet.ric_g)
        + norm_sq(&jet.riem_g);
    Ok(EulerDensities { torsion, levi_civita })
}

/// A convenient flat jet: zero metric curvature, constant T and V.
pub fn constant_flat_jet<S: Scalar>(
    t: Tensor<S>,
    v: Tensor<S>,
) -> Result<TorsionJet<S>, Error> {
    let n = v.dim();
    TorsionJet::new(
        n,
        v,
        Tensor::zeros(n, 2),
        t,
        Tensor::zeros(n, 4),
        Tensor::zeros(n, 4),
        S::zero(),
    )
}

/// The unit 3-form theta^1 ^ theta^2 ^ theta^3 in dimension n >= 3.
pub fn theta123<S: Scalar>(n: usize) -> Tensor<S> {
    let th: Vec<Tensor<S>> = (0..3).map(|i| basis_covector(n, i)).collect();
    crate::tensor::wedge(&crate::tensor::wedge(&th[0], &th[1]).unwrap(), &th[2]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use crate::verify::random_jet;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn ricci_closed_forms_match_contractions() {
        for n in 3..=6 {
            let mut rng = ChaCha8Rng::seed_from_u64(7 + n as u64);
            let jet: TorsionJet<Rat> = random_jet(&mut rng, n);
            let pack = curvature_pack(&jet).unwrap();
            let closed = ricci_closed_forms(&jet).unwrap();
            assert_eq!(pack.ric_s, closed.ric_s, "ric_s at n={n}");
            assert_eq!(pack.ric_a, closed.ric_a, "ric_a at n={n}");
            assert_eq!(pack.r, closed.r, "R at n={n}");
            assert_eq!(pack.r_tilde, closed.r_tilde, "R-tilde at n={n}");
        }
    }

    #[test]
    fn curvature_parts_have_expected_symmetries() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let jet: TorsionJet<Rat> = random_jet(&mut rng, 4);
        let pack = curvature_pack(&jet).unwrap();
        use crate::curvature::{is_pair_antisymmetric, swap_pairs};
        assert!(is_pair_antisymmetric(&pack.riem_s));
        assert!(is_pair_antisymmetric(&pack.riem_a));
        assert_eq!(swap_pairs(&pack.riem_s), pack.riem_s);
        assert_eq!(swap_pairs(&pack.riem_a), pack.riem_a.neg());
        assert!(is_algebraic_curvature(&pack.riem_s_ker));
        assert!(pack.riem_s_im.is_alternating());
        // the pair-antisymmetric part contributes no scalar curvature
        assert!(g_trace(&pack.ric_a).unwrap().is_zero());
    }

    #[test]
    fn norm_identities_hold_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..5 {
            let jet: TorsionJet<Rat> = random_jet(&mut rng, 4);
            let ids = norm_identities(&jet).unwrap();
            assert_eq!(ids.ker_norm.0, ids.ker_norm.1);
            assert_eq!(ids.im_norm.0, ids.im_norm.1);
            assert!(ids.weyl_diff.is_zero());
            assert_eq!(ids.wedge_norm.0, ids.wedge_norm.1);
            assert_eq!(ids.dt_pair.0, ids.dt_pair.1);
        }
    }

    #[test]
    fn pontryagin_summands_add_up() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..5 {
            let jet: TorsionJet<Rat> = random_jet(&mut rng, 4);
            let d = pontryagin_densities(&jet).unwrap();
            let sum = d.weyl_term.clone()
                + d.ric_a_term.clone()
                + d.scalar_term.clone()
                + d.mixed_term.clone();
            assert_eq!(d.full, sum);
            assert_eq!(d.b3_lhs, d.b3_rhs);
        }
    }

    #[test]
    fn ricci_norm_identity_for_metric_curvature() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let jet: TorsionJet<Rat> = random_jet(&mut rng, 4);
        let (_, _, weyl) = ricci_decompose(&jet.riem_g).unwrap();
        let lhs = norm_sq(&jet.riem_g);
        let rhs = norm_sq(&weyl) + Rat::from_int(2) * norm_sq(&jet.ric_g)
            - jet.r_g.clone() * jet.r_g.clone() * Rat::from_ratio(1, 3);
        assert_eq!(lhs, rhs);
    }
}
