//! Clifford algebra of the oriented Euclidean 4-space in two models:
//! 4x4 matrices over the Gaussian rationals (a chiral gamma basis with
//! entries in {0, +-1, +-i}) and abstract multivectors with 16 blade
//! coefficients.  The generators satisfy e_i e_j + e_j e_i = -2 delta_ij.

use crate::scalar::{CScalar, Scalar};
use crate::tensor::{multi_indices, norm_sq, tensor_inner, Tensor};
use crate::torsion::TorsionJet;
use crate::Error;

/// Dense square matrix over a complex-capable scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct CMat<S: CScalar> {
    pub n: usize,
    pub a: Vec<S>,
}

impl<S: CScalar> CMat<S> {
    pub fn zeros(n: usize) -> Self {
        CMat { n, a: vec![S::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n);
        for i in 0..n {
            m.a[i * n + i] = S::one();
        }
        m
    }

    pub fn from_rows(rows: &[&[S]]) -> Self {
        let n = rows.len();
        let mut m = CMat::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n);
            for (j, x) in row.iter().enumerate() {
                m.a[i * n + j] = x.clone();
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: S) {
        self.a[i * self.n + j] = x;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        CMat {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x.clone() + y.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        CMat {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x.clone() - y.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CMat { n: self.n, a: self.a.iter().map(|x| -x.clone()).collect() }
    }

    pub fn scale(&self, c: &S) -> Self {
        CMat { n: self.n, a: self.a.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CMat::<S>::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + x.clone() * other.get(k, j).clone());
                }
            }
        }
        out
    }

    pub fn trace(&self) -> S {
        let mut acc = S::zero();
        for i in 0..self.n {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    pub fn dagger(&self) -> Self {
        let n = self.n;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, CScalar::conj(self.get(j, i)));
            }
        }
        out
    }

    pub fn is_negligible(&self) -> bool {
        self.a.iter().all(|x| x.is_negligible())
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (self.n, other.n);
        let mut out = CMat::zeros(p * q);
        for i in 0..p {
            for j in 0..p {
                let x = self.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for k in 0..q {
                    for l in 0..q {
                        out.set(i * q + k, j * q + l, x.clone() * other.get(k, l).clone());
                    }
                }
            }
        }
        out
    }
}

/// The four gamma matrices in a chiral basis; each is skew-adjoint, squares
/// to -id, and entries lie in {0, +-1, +-i}.
pub fn gamma_basis<S: CScalar>() -> [CMat<S>; 4] {
    let o = S::zero;
    let l = S::one;
    let i = S::i;
    let m = || -S::one();
    let mi = || -S::i();
    // gamma_k = offdiag(i sigma_k, i sigma_k) for k = 1..3, gamma_4 = offdiag(I, -I)
    let g1 = CMat::from_rows(&[
        &[o(), o(), o(), i()],
        &[o(), o(), i(), o()],
        &[o(), i(), o(), o()],
        &[i(), o(), o(), o()],
    ]);
    let g2 = CMat::from_rows(&[
        &[o(), o(), o(), l()],
        &[o(), o(), m(), o()],
        &[o(), l(), o(), o()],
        &[m(), o(), o(), o()],
    ]);
    let g3 = CMat::from_rows(&[
        &[o(), o(), i(), o()],
        &[o(), o(), o(), mi()],
        &[i(), o(), o(), o()],
        &[o(), mi(), o(), o()],
    ]);
    let g4 = CMat::from_rows(&[
        &[o(), o(), l(), o()],
        &[o(), o(), o(), l()],
        &[m(), o(), o(), o()],
        &[o(), m(), o(), o()],
    ]);
    [g1, g2, g3, g4]
}

/// Chirality element omega = e1 e2 e3 e4; omega^2 = id, tr omega = 0.
pub fn omega<S: CScalar>() -> CMat<S> {
    let g = gamma_basis::<S>();
    g[0].mul(&g[1]).mul(&g[2]).mul(&g[3])
}

/// Clifford action of a k-form:
/// alpha . = (1/k!) sum alpha_{i1..ik} e_{i1} ... e_{ik}.
pub fn act_form<S: CScalar>(alpha: &Tensor<S>) -> Result<CMat<S>, Error> {
    if alpha.dim() != 4 {
        return Err(Error::UnsupportedDim(alpha.dim()));
    }
    if !alpha.is_alternating() {
        return Err(Error::Precondition("act_form input must be alternating".into()));
    }
    let k = alpha.rank();
    if k == 0 {
        return Ok(CMat::identity(4).scale(alpha.get(&[])));
    }
    let g = gamma_basis::<S>();
    let mut fact = 1i64;
    for a in 2..=k {
        fact *= a as i64;
    }
    let mut out = CMat::zeros(4);
    for idx in multi_indices(4, k) {
        let c = alpha.get(&idx);
        if c.is_zero() {
            continue;
        }
        let mut prod = CMat::identity(4);
        for &i in &idx {
            prod = prod.mul(&g[i]);
        }
        out = out.add(&prod.scale(c));
    }
    Ok(out.scale(&S::from_ratio(1, fact)))
}

/// Bochner potential of `D*D` acting on spinors:
/// E = (-(1/4) R_g + (3/4)||T||^2 - (3/2) div V + (9/2)|V|^2) id
///     - (3/2) dT . - 9 T . V . - 9 (V hook T) .
pub fn potential_e<S: CScalar>(jet: &TorsionJet<S>) -> Result<CMat<S>, Error> {
    if jet.n != 4 {
        return Err(Error::UnsupportedDim(jet.n));
    }
    let s = scalar_part(jet);
    let act_dt = act_form(&jet.d_t)?;
    let act_t = act_form(&jet.t)?;
    let act_v = act_form(&jet.v)?;
    let act_vt = act_form(&jet.v_hook_t())?;
    let nine = S::from_int(9);
    Ok(CMat::identity(4)
        .scale(&s)
        .sub(&act_dt.scale(&S::from_ratio(3, 2)))
        .sub(&act_t.mul(&act_v).scale(&nine))
        .sub(&act_vt.scale(&nine)))
}

fn scalar_part<S: Scalar>(jet: &TorsionJet<S>) -> S {
    -(jet.r_g.clone() * S::from_ratio(1, 4)) + jet.t_norm_sq() * S::from_ratio(3, 4)
        - jet.div_v.clone() * S::from_ratio(3, 2)
        + jet.v_norm_sq() * S::from_ratio(9, 2)
}

/// Direct and closed-form values of the four spinor traces of the Bochner
/// potential.  Each pair is (direct matrix trace, closed form); the two
/// closed forms are the raw torsion expression and the regrouped one in
/// terms of R-tilde and the Holst 4-form.
pub struct TraceSuite<S: CScalar> {
    pub tr_e: (S, S, S),
    pub tr_e2: (S, S, S),
    pub tr_e_omega: (S, S, S),
    pub tr_e2_omega: (S, S, S),
}

pub fn trace_suite<S: CScalar>(jet: &TorsionJet<S>) -> Result<TraceSuite<S>, Error> {
    let e = potential_e(jet)?;
    let om = omega::<S>();
    let e2 = e.mul(&e);
    let direct = (
        e.trace(),
        e2.trace(),
        e.mul(&om).trace(),
        e2.mul(&om).trace(),
    );
    let om_t = crate::tensor::vol_form::<S>();
    let v2 = jet.v_norm_sq();
    let t2 = jet.t_norm_sq();
    let dt_om = tensor_inner(&jet.d_t, &om_t)?;
    let t_star_v = jet.t_pair_star_v()?;
    let vt = norm_sq(&jet.v_hook_t());
    let vdt_t = tensor_inner(&jet.v_hook_dt(), &jet.t)?;
    let s = scalar_part(jet);
    let pack = crate::torsion::ricci_closed_forms(jet)?;
    let r_tilde = pack.r_tilde;
    let rg = jet.r_g.clone();
    // raw closed forms
    let tr_e_raw = -rg.clone() + S::from_int(3) * t2.clone()
        - S::from_int(6) * jet.div_v.clone()
        + S::from_int(18) * v2.clone();
    let tail = S::from_ratio(3, 8) * norm_sq(&jet.d_t) - S::from_int(162) * vt
        + S::from_int(54) * v2 * t2
        - S::from_int(18) * vdt_t;
    let tr_e2_raw = S::from_int(4) * s.clone() * s.clone() + tail.clone();
    let tr_e_om_raw =
        -(dt_om.clone() * S::from_ratio(1, 4)) + S::from_int(6) * t_star_v.clone();
    let tr_e2_om_raw =
        (-s) * (dt_om.clone() * S::from_ratio(1, 2) - S::from_int(12) * t_star_v.clone());
    // regrouped closed forms through R-tilde and the Holst pairing
    let holst_om = S::from_int(18) * (dt_om - S::from_int(24) * t_star_v);
    let two_rg_plus = S::from_int(2) * rg + r_tilde;
    let tr_e_grp = -(two_rg_plus.clone() * S::from_ratio(1, 3));
    let tr_e2_grp =
        two_rg_plus.clone() * two_rg_plus.clone() * S::from_ratio(1, 36) + tail;
    let tr_e_om_grp = -(holst_om.clone() * S::from_ratio(1, 72));
    let tr_e2_om_grp = two_rg_plus * holst_om * S::from_ratio(1, 432);
    Ok(TraceSuite {
        tr_e: (direct.0, tr_e_raw, tr_e_grp),
        tr_e2: (direct.1, tr_e2_raw, tr_e2_grp),
        tr_e_omega: (direct.2, tr_e_om_raw, tr_e_om_grp),
        tr_e2_omega: (direct.3, tr_e2_om_raw, tr_e2_om_grp),
    })
}

/// Spinor curvature endomorphisms of a pair-antisymmetric rank-4 tensor:
/// Omega_ij = (1/4) sum_{kl} Q_{ijkl} e_k e_l.
pub fn spinor_curvature<S: CScalar>(q: &Tensor<S>) -> Result<Vec<Vec<CMat<S>>>, Error> {
    if q.dim() != 4 || q.rank() != 4 {
        return Err(Error::Shape("spinor curvature needs a rank-4 tensor in dim 4".into()));
    }
    let g = gamma_basis::<S>();
    let quarter = S::from_ratio(1, 4);
    let mut out = vec![vec![CMat::zeros(4); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = CMat::zeros(4);
            for k in 0..4 {
                for l in 0..4 {
                    let c = q.get(&[i, j, k, l]);
                    if !c.is_zero() {
                        acc = acc.add(&g[k].mul(&g[l]).scale(c));
                    }
                }
            }
            out[i][j] = acc.scale(&quarter);
        }
    }
    Ok(out)
}

/// sum_ij tr(Omega_ij Omega_ij); equals -(1/2) ||Q||^2.
pub fn sum_tr_omega_sq<S: CScalar>(om: &[Vec<CMat<S>>]) -> S {
    let mut acc = S::zero();
    for row in om {
        for o in row {
            acc = acc + o.mul(o).trace();
        }
    }
    acc
}

/// sum_ij tr(Omega_ij Omega_ij omega); equals (1/4) <Q, hodge_pair(Q)>.
pub fn sum_tr_omega_sq_chiral<S: CScalar>(om: &[Vec<CMat<S>>]) -> S {
    let w = omega::<S>();
    let mut acc = S::zero();
    for row in om {
        for o in row {
            acc = acc + o.mul(o).mul(&w).trace();
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// Abstract multivector model (16 blade coefficients) for cross-checking.
// ---------------------------------------------------------------------------

/// Multivector in the basis of canonical blades e_S, S subset of {1,2,3,4}
/// (bitmask index, ascending factor order).
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<S: CScalar> {
    pub c: Vec<S>,
}

/// Product of canonical blades: e_A e_B = sign * e_{A xor B}.
pub fn blade_mul(a: u8, b: u8) -> (i64, u8) {
    let mut sign = 1i64;
    let mut res = a;
    for i in 0..4u8 {
        if b & (1 << i) != 0 {
            let higher = (res >> (i + 1)).count_ones();
            if higher % 2 == 1 {
                sign = -sign;
            }
            if res & (1 << i) != 0 {
                sign = -sign; // e_i e_i = -1
                res &= !(1 << i);
            } else {
                res |= 1 << i;
            }
        }
    }
    (sign, res)
}

impl<S: CScalar> Multivector<S> {
    pub fn zero() -> Self {
        Multivector { c: vec![S::zero(); 16] }
    }

    pub fn scalar(x: S) -> Self {
        let mut m = Self::zero();
        m.c[0] = x;
        m
    }

    pub fn generator(i: usize) -> Self {
        let mut m = Self::zero();
        m.c[1 << i] = S::one();
        m
    }

    pub fn add(&self, other: &Self) -> Self {
        Multivector {
            c: self.c.iter().zip(&other.c).map(|(x, y)| x.clone() + y.clone()).collect(),
        }
    }

    pub fn scale(&self, k: &S) -> Self {
        Multivector { c: self.c.iter().map(|x| x.clone() * k.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for a in 0..16usize {
            if self.c[a].is_zero() {
                continue;
            }
            for b in 0..16usize {
                if other.c[b].is_zero() {
                    continue;
                }
                let (sign, res) = blade_mul(a as u8, b as u8);
                let term = self.c[a].clone() * other.c[b].clone() * S::from_int(sign);
                out.c[res as usize] = out.c[res as usize].clone() + term;
            }
        }
        out
    }

    /// Normalized trace: tr in the spinor representation is 4 x scalar part.
    pub fn trace(&self) -> S {
        self.c[0].clone() * S::from_int(4)
    }

    /// Matrix of this multivector in the gamma representation.
    pub fn to_matrix(&self) -> CMat<S> {
        let g = gamma_basis::<S>();
        let mut out = CMat::zeros(4);
        for mask in 0..16usize {
            if self.c[mask].is_zero() {
                continue;
            }
            let mut prod = CMat::identity(4);
            for i in 0..4 {
                if mask & (1 << i) != 0 {
                    prod = prod.mul(&g[i]);
                }
            }
            out = out.add(&prod.scale(&self.c[mask]));
        }
        out
    }

    /// Inverse of `to_matrix`: blade coefficients from trace pairings.
    pub fn from_matrix(m: &CMat<S>) -> Self {
        let g = gamma_basis::<S>();
        let mut out = Self::zero();
        for mask in 0..16usize {
            let mut blade = CMat::identity(4);
            for i in 0..4 {
                if mask & (1 << i) != 0 {
                    blade = blade.mul(&g[i]);
                }
            }
            // blades are trace-orthogonal: tr(blade^dagger blade') = 4 delta
            let coeff = blade.dagger().mul(m).trace() * S::from_ratio(1, 4);
            out.c[mask] = coeff;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::{hodge_pair, pair_antisymmetric_part};
    use crate::scalar::{GRat, Rat};
    use crate::tensor::{basis_covector, hodge_star, interior, vol_form, wedge};
    use crate::torsion::{constant_flat_jet, theta123};
    use crate::verify::{random_form, random_jet};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn delta(i: usize, j: usize) -> GRat {
        if i == j {
            GRat::from_int(1)
        } else {
            GRat::from_int(0)
        }
    }

    #[test]
    fn gamma_relations() {
        let g = gamma_basis::<GRat>();
        for i in 0..4 {
            assert_eq!(g[i].dagger(), g[i].neg(), "gamma_{} skew-adjoint", i + 1);
            for j in 0..4 {
                let anti = g[i].mul(&g[j]).add(&g[j].mul(&g[i]));
                let want = CMat::identity(4).scale(&(-GRat::from_int(2) * delta(i, j)));
                assert_eq!(anti, want, "anticommutator {} {}", i + 1, j + 1);
            }
        }
        let w = omega::<GRat>();
        assert_eq!(w.mul(&w), CMat::identity(4));
        assert!(w.trace().is_zero());
        // omega anticommutes with the generators
        for gi in &g {
            assert_eq!(w.mul(gi), gi.mul(&w).neg());
        }
    }

    #[test]
    fn traces_of_short_products_vanish() {
        let g = gamma_basis::<GRat>();
        let w = omega::<GRat>();
        for k in 1..=3usize {
            for idx in multi_indices(4, k) {
                let mut distinct = true;
                for a in 0..k {
                    for b in a + 1..k {
                        distinct &= idx[a] != idx[b];
                    }
                }
                if !distinct {
                    continue;
                }
                let mut prod = CMat::identity(4);
                for &i in &idx {
                    prod = prod.mul(&g[i]);
                }
                assert!(prod.trace().is_zero());
                assert!(prod.mul(&w).trace().is_zero());
            }
        }
    }

    #[test]
    fn form_action_trace_pairing() {
        // tr(alpha . beta .) = (4/k!) (-1)^{k(k+1)/2} <alpha, beta>
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in 1..=4usize {
            let a: Tensor<GRat> = random_form(&mut rng, 4, k);
            let b: Tensor<GRat> = random_form(&mut rng, 4, k);
            let lhs = act_form(&a).unwrap().mul(&act_form(&b).unwrap()).trace();
            let mut fact = 1i64;
            for x in 2..=k {
                fact *= x as i64;
            }
            let sign = if (k * (k + 1) / 2) % 2 == 0 { 1 } else { -1 };
            let rhs = tensor_inner(&a, &b).unwrap()
                * GRat::from_ratio(4 * sign, fact);
            assert_eq!(lhs, rhs, "trace pairing at k={k}");
        }
    }

    #[test]
    fn volume_and_interior_identities() {
        let v: Tensor<GRat> = basis_covector(4, 3);
        // V . omega = - (*V-flat) .
        let lhs = act_form(&v).unwrap().mul(&omega());
        let rhs = act_form(&hodge_star(&v).unwrap()).unwrap().neg();
        assert_eq!(lhs, rhs);
        // V . alpha = -(V hook alpha) . for a 4-form alpha
        let alpha = vol_form::<GRat>().scale(&GRat::from_ratio(5, 3));
        let lhs = act_form(&v).unwrap().mul(&act_form(&alpha).unwrap());
        let rhs = act_form(&interior(&v, &alpha).unwrap()).unwrap().neg();
        assert_eq!(lhs, rhs);
        // Clifford relation V . alpha + (-1)^{k+1} alpha . V = -2 (V hook alpha)
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for k in 1..=4usize {
            let alpha: Tensor<GRat> = random_form(&mut rng, 4, k);
            let va = act_form(&v).unwrap().mul(&act_form(&alpha).unwrap());
            let av = act_form(&alpha).unwrap().mul(&act_form(&v).unwrap());
            let sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
            let lhs = va.add(&av.scale(&GRat::from_int(sign)));
            let rhs = act_form(&interior(&v, &alpha).unwrap())
                .unwrap()
                .scale(&GRat::from_int(-2));
            assert_eq!(lhs, rhs, "k={k}");
        }
    }

    #[test]
    fn trace_suite_on_axis_example() {
        // V = e4, T = theta^123: E is scalar + 4-form, traces close exactly
        let t: Tensor<GRat> = theta123(4);
        let v: Tensor<GRat> = basis_covector(4, 3);
        let jet = constant_flat_jet(t, v).unwrap();
        let s = trace_suite(&jet).unwrap();
        assert_eq!(s.tr_e.0, s.tr_e.1);
        assert_eq!(s.tr_e.0, s.tr_e.2);
        assert_eq!(s.tr_e2.0, s.tr_e2.1);
        assert_eq!(s.tr_e2.0, s.tr_e2.2);
        assert_eq!(s.tr_e_omega.0, s.tr_e_omega.1);
        assert_eq!(s.tr_e_omega.0, s.tr_e_omega.2);
        assert_eq!(s.tr_e2_omega.0, s.tr_e2_omega.1);
        assert_eq!(s.tr_e2_omega.0, s.tr_e2_omega.2);
        // tr E = 3||T||^2 + 18|V|^2 = 18 + 18 = 36 on this jet
        assert_eq!(s.tr_e.0, GRat::from_int(36));
        // <T, *V-flat> = -6 with this orientation
        assert_eq!(jet.t_pair_star_v().unwrap(), GRat::from_int(-6));
    }

    #[test]
    fn trace_suite_on_random_jets() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..3 {
            let jet: TorsionJet<GRat> = random_jet(&mut rng, 4);
            let s = trace_suite(&jet).unwrap();
            for (name, t) in [
                ("trE", &s.tr_e),
                ("trE2", &s.tr_e2),
                ("trEw", &s.tr_e_omega),
                ("trE2w", &s.tr_e2_omega),
            ] {
                assert_eq!(t.0, t.1, "{name} raw");
                assert_eq!(t.0, t.2, "{name} grouped");
            }
        }
    }

    #[test]
    fn spinor_curvature_pairings() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let q: Tensor<GRat> = pair_antisymmetric_part(&crate::verify::random_tensor(
            &mut rng, 4, 4,
        ))
        .unwrap();
        let om = spinor_curvature(&q).unwrap();
        assert_eq!(
            sum_tr_omega_sq(&om),
            norm_sq(&q) * GRat::from_ratio(-1, 2)
        );
        assert_eq!(
            sum_tr_omega_sq_chiral(&om),
            tensor_inner(&q, &hodge_pair(&q).unwrap()).unwrap() * GRat::from_ratio(1, 4)
        );
    }

    #[test]
    fn multivector_model_is_isomorphic() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        // random multivectors: products and traces agree with the matrix model
        for _ in 0..5 {
            let mut a = Multivector::<GRat>::zero();
            let mut b = Multivector::<GRat>::zero();
            for mask in 0..16usize {
                a.c[mask] = crate::verify::random_grat(&mut rng);
                b.c[mask] = crate::verify::random_grat(&mut rng);
            }
            let prod_mv = a.mul(&b).to_matrix();
            let prod_mat = a.to_matrix().mul(&b.to_matrix());
            assert_eq!(prod_mv, prod_mat);
            assert_eq!(a.mul(&b).trace(), prod_mat.trace());
            // round trip
            assert_eq!(Multivector::from_matrix(&a.to_matrix()), a);
        }
        // generators map to the gamma basis
        let g = gamma_basis::<GRat>();
        for i in 0..4 {
            assert_eq!(Multivector::<GRat>::generator(i).to_matrix(), g[i]);
        }
    }

    #[test]
    fn rational_volume_pairing_example() {
        // <omega_form, omega_form> = 24 pins the (4/k!)(-1)^... trace constant:
        // tr((omega.)^2) = tr(id) = 4 = (4/24)(+1) * 24
        let om_form: Tensor<GRat> = vol_form();
        let act = act_form(&om_form).unwrap();
        assert_eq!(act, omega());
        let _ = wedge::<Rat>(&basis_covector(4, 0), &basis_covector(4, 1)).unwrap();
    }
}
