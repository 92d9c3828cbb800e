//! Flat four-torus laboratory: exact trigonometric-polynomial torsion
//! fields for the integral identities, and the Dirac-spectrum heat-trace
//! validator (plus the round-sphere benchmark for the same fit pipeline).

use nalgebra::{Complex, Matrix4, SymmetricEigen};
use rayon::prelude::*;

use crate::clifford::{act_form, gamma_basis, CMat};
use crate::scalar::C64;
use crate::tensor::{norm_sq, tensor_inner, Tensor};
use crate::torsion::{euler_densities, pontryagin_densities, TorsionJet};
use crate::Error;

// ---------------------------------------------------------------------------
// Periodic tensor fields on [0, 2 pi)^4.
// ---------------------------------------------------------------------------

/// One Fourier mode: coefficient tensors for cos(k.x) and sin(k.x).
#[derive(Clone, Debug)]
struct Mode {
    k: [i64; 4],
    cos: Tensor<f64>,
    sin: Tensor<f64>,
}

/// Real tensor-valued trigonometric polynomial on the torus.  Derivatives
/// are exact (frequency-domain differentiation).
#[derive(Clone, Debug)]
pub struct PeriodicField {
    rank: usize,
    modes: Vec<Mode>,
}

impl PeriodicField {
    pub fn zero(rank: usize) -> Self {
        PeriodicField { rank, modes: Vec::new() }
    }

    pub fn constant(coeff: Tensor<f64>) -> Self {
        let rank = coeff.rank();
        PeriodicField { rank, modes: vec![Mode { k: [0; 4], cos: coeff, sin: Tensor::zeros(4, rank) }] }
    }

    /// Add the mode `cos_coeff cos(k.x) + sin_coeff sin(k.x)`.
    pub fn with_mode(
        mut self,
        k: [i64; 4],
        cos_coeff: Tensor<f64>,
        sin_coeff: Tensor<f64>,
    ) -> Result<Self, Error> {
        if cos_coeff.rank() != self.rank || sin_coeff.rank() != self.rank {
            return Err(Error::Shape("mode coefficient rank mismatch".into()));
        }
        if cos_coeff.dim() != 4 || sin_coeff.dim() != 4 {
            return Err(Error::UnsupportedDim(cos_coeff.dim()));
        }
        self.modes.push(Mode { k, cos: cos_coeff, sin: sin_coeff });
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Largest per-axis frequency.
    pub fn degree(&self) -> i64 {
        self.modes
            .iter()
            .flat_map(|m| m.k.iter().map(|k| k.abs()))
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, x: &[f64; 4]) -> Tensor<f64> {
        let mut out = Tensor::zeros(4, self.rank);
        for m in &self.modes {
            let phase: f64 = (0..4).map(|j| m.k[j] as f64 * x[j]).sum();
            let (s, c) = phase.sin_cos();
            out = out.add(&m.cos.scale(&c)).add(&m.sin.scale(&s));
        }
        out
    }

    /// Exact partial derivative along axis j.
    pub fn partial(&self, j: usize) -> Self {
        let modes = self
            .modes
            .iter()
            .map(|m| {
                let kj = m.k[j] as f64;
                Mode { k: m.k, cos: m.sin.scale(&kj), sin: m.cos.scale(&-kj) }
            })
            .collect();
        PeriodicField { rank: self.rank, modes }
    }

    /// Gradient field: rank grows by one, first slot is the direction.
    pub fn grad(&self) -> Self {
        let partials: Vec<PeriodicField> = (0..4).map(|j| self.partial(j)).collect();
        let mut out = PeriodicField::zero(self.rank + 1);
        // merge mode-by-mode: every source mode contributes one output mode
        for (idx, m) in self.modes.iter().enumerate() {
            let mut cos = Tensor::zeros(4, self.rank + 1);
            let mut sin = Tensor::zeros(4, self.rank + 1);
            for j in 0..4 {
                let pm = &partials[j].modes[idx];
                for sub in crate::tensor::multi_indices(4, self.rank) {
                    let mut full = vec![j];
                    full.extend_from_slice(&sub);
                    cos.set(&full, *pm.cos.get(&sub));
                    sin.set(&full, *pm.sin.get(&sub));
                }
            }
            out.modes.push(Mode { k: m.k, cos, sin });
        }
        out
    }

    /// (2 pi)^4 times the mean value; exact for trig polynomials.
    pub fn exact_integral(&self) -> Result<f64, Error> {
        if self.rank != 0 {
            return Err(Error::Shape("exact_integral needs a scalar field".into()));
        }
        let mut acc = 0.0;
        for m in &self.modes {
            if m.k == [0; 4] {
                acc += *m.cos.get(&[]);
            }
        }
        Ok(acc * (2.0 * std::f64::consts::PI).powi(4))
    }
}

// ---------------------------------------------------------------------------
// Integral identity suite.
// ---------------------------------------------------------------------------

/// Both sides of each integral identity evaluated by exact-grid quadrature.
#[derive(Clone, Debug)]
pub struct IntegralReport {
    /// (identity name, lhs, rhs)
    pub entries: Vec<(&'static str, f64, f64)>,
    /// overall scale (the curvature-norm integral) for residual normalization
    pub scale: f64,
    /// grid points per axis actually used
    pub grid: usize,
}

impl IntegralReport {
    /// |lhs - rhs| / max(1, scale, |lhs|, |rhs|) per entry.
    pub fn rel_residuals(&self) -> Vec<(&'static str, f64)> {
        self.entries
            .iter()
            .map(|(name, l, r)| {
                let denom = 1.0_f64.max(self.scale.abs()).max(l.abs()).max(r.abs());
                (*name, (l - r).abs() / denom)
            })
            .collect()
    }

    pub fn max_rel_residual(&self) -> f64 {
        self.rel_residuals().iter().map(|(_, r)| *r).fold(0.0, f64::max)
    }
}

struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    fn new() -> Self {
        Kahan { sum: 0.0, c: 0.0 }
    }
    fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Evaluate the flat-torus integral identities for periodic torsion fields
/// `v_field` (rank 1) and `t_field` (rank 3, alternating coefficients).
/// `grid` overrides the per-axis point count; it must satisfy the exactness
/// bound N >= 4 dmax + 1 (quartic products of degree-dmax fields).
pub fn integral_identity_suite(
    v_field: &PeriodicField,
    t_field: &PeriodicField,
    grid: Option<usize>,
) -> Result<IntegralReport, Error> {
    if v_field.rank() != 1 || t_field.rank() != 3 {
        return Err(Error::Shape("need a rank-1 V field and a rank-3 T field".into()));
    }
    for m in &t_field.modes {
        if !m.cos.is_alternating() || !m.sin.is_alternating() {
            return Err(Error::Precondition("T field coefficients must be alternating".into()));
        }
    }
    let dmax = v_field.degree().max(t_field.degree());
    let required = (4 * dmax + 1) as usize;
    let n = grid.unwrap_or(required);
    if n < required {
        return Err(Error::Precondition(format!(
            "grid too coarse for exact quadrature: need at least {required} points per axis"
        )));
    }
    let grad_v = v_field.grad();
    let grad_t = t_field.grad();

    // accumulators, fixed order: one Kahan sum per integrand
    const N_ACC: usize = 13;
    let mut acc: Vec<Kahan> = (0..N_ACC).map(|_| Kahan::new()).collect();
    let h = 2.0 * std::f64::consts::PI / n as f64;
    let riem_g = Tensor::zeros(4, 4);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let x = [a as f64 * h, b as f64 * h, c as f64 * h, d as f64 * h];
                    let jet = TorsionJet::new(
                        4,
                        v_field.eval(&x),
                        grad_v.eval(&x),
                        t_field.eval(&x),
                        grad_t.eval(&x),
                        riem_g.clone(),
                        0.0,
                    )?;
                    let vals = pointwise_integrands(&jet)?;
                    for (k, v) in vals.iter().enumerate() {
                        acc[k].add(*v);
                    }
                }
            }
        }
    }
    let cell = h.powi(4);
    let ints: Vec<f64> = acc.iter().map(|k| k.sum * cell).collect();
    let [riem_sq, b1_rhs, euler, p1_full, b2_lhs, b2_rhs, b4_lhs, b4_rhs, div_term, b3_lhs, b3_rhs, dstar_dv, _spare] =
        <[f64; N_ACC]>::try_from(ints).expect("fixed accumulator count");
    let _ = dstar_dv;
    Ok(IntegralReport {
        entries: vec![
            ("curvature_norm_split", riem_sq, b1_rhs),
            ("euler_combination", euler, 0.0),
            ("pontryagin_integral", p1_full, 0.0),
            ("antisymmetric_ricci_pairing", b2_lhs, b2_rhs),
            ("mixed_pairing", b4_lhs, b4_rhs),
            ("scalar_pairing", b3_lhs, b3_rhs),
            ("divergence_terms", div_term, 0.0),
        ],
        scale: riem_sq,
        grid: n,
    })
}

/// All pointwise integrands of the suite, in a fixed order.
fn pointwise_integrands(jet: &TorsionJet<f64>) -> Result<[f64; 13], Error> {
    let pack = crate::torsion::curvature_pack(jet)?;
    let pont = pontryagin_densities(jet)?;
    let euler = euler_densities(jet)?;
    let riem_sq = norm_sq(&pack.riem);
    let v2 = jet.v_norm_sq();
    let t2 = jet.t_norm_sq();
    let vt2 = norm_sq(&jet.v_hook_t());
    let vdt_t = tensor_inner(&jet.v_hook_dt(), &jet.t)?;
    // flat-metric form of the curvature-norm integral identity
    let b1_rhs = pack.r * pack.r / 3.0
        + 4.0 * norm_sq(&jet.delta_t)
        + 4.0 * norm_sq(&jet.d_vflat)
        + 0.5 * norm_sq(&jet.d_t)
        + 8.0 * v2 * t2
        - 24.0 * vt2
        - 8.0 * vdt_t;
    // divergence-type integrand: directional derivative plus divergence
    // weight of ||T||^2; integrates to zero on the torus
    let mut dv_t2 = 0.0;
    for i in 0..4 {
        let slice = Tensor::from_fn(4, 3, |j| *jet.grad_t.get(&[i, j[0], j[1], j[2]]));
        dv_t2 += jet.v.get(&[i]) * 2.0 * tensor_inner(&slice, &jet.t)?;
    }
    let div_term = dv_t2 + jet.div_v * t2;
    let d_star_t = jet.d_star_t.clone().expect("dim 4");
    let dst_dv = tensor_inner(&d_star_t, &jet.d_vflat)?;
    Ok([
        riem_sq,
        b1_rhs,
        euler.torsion,
        pont.full,
        pont.b2_lhs,
        pont.b2_rhs,
        pont.b4_lhs,
        pont.b4_rhs,
        div_term,
        pont.b3_lhs,
        pont.b3_rhs,
        dst_dv,
        0.0,
    ])
}

// ---------------------------------------------------------------------------
// Integrated coefficient cross-check.
// ---------------------------------------------------------------------------

/// Integrated cross-check of the projected twisted heat coefficients for
/// periodic fields on the flat torus: closed-form term table vs generic
/// weighted-trace densities, both integrated by the exact trig quadrature.
/// The generic a4 omits the fiber-Laplacian term (a total derivative), so
/// the two densities agree only after integration.
pub fn gilkey_integrated_check(
    v_field: &PeriodicField,
    t_field: &PeriodicField,
    twist: &crate::spectral::TwistData<C64>,
    grid: Option<usize>,
) -> Result<IntegralReport, Error> {
    if v_field.rank() != 1 || t_field.rank() != 3 {
        return Err(Error::Shape("need a rank-1 V field and a rank-3 T field".into()));
    }
    let dmax = v_field.degree().max(t_field.degree());
    let required = (4 * dmax + 1) as usize;
    let n = grid.unwrap_or(required);
    if n < required {
        return Err(Error::Precondition(format!(
            "grid too coarse for exact quadrature: need at least {required} points per axis"
        )));
    }
    let grad_v = v_field.grad();
    let grad_t = t_field.grad();
    let riem_g = Tensor::zeros(4, 4);
    let mut acc: Vec<Kahan> = (0..6).map(|_| Kahan::new()).collect();
    let h = 2.0 * std::f64::consts::PI / n as f64;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let x = [a as f64 * h, b as f64 * h, c as f64 * h, d as f64 * h];
                    let jet = TorsionJet::new(
                        4,
                        v_field.eval(&x),
                        grad_v.eval(&x),
                        t_field.eval(&x),
                        grad_t.eval(&x),
                        riem_g.clone(),
                        0.0,
                    )?;
                    let jet_c = jet.map(|v| C64::new(*v, 0.0));
                    let closed = crate::spectral::hplus_coeffs(&jet_c, twist)?;
                    let (g0, g2, g4) = crate::spectral::hplus_generic(&jet_c, twist)?;
                    for (k, v) in [
                        closed.a0_total(),
                        closed.a2_total(),
                        closed.a4_total(),
                        g0,
                        g2,
                        g4,
                    ]
                    .iter()
                    .enumerate()
                    {
                        acc[k].add(v.re);
                    }
                }
            }
        }
    }
    let cell = h.powi(4);
    let vals: Vec<f64> = acc.iter().map(|k| k.sum * cell).collect();
    Ok(IntegralReport {
        entries: vec![
            ("volume_coefficient", vals[0], vals[3]),
            ("einstein_coefficient", vals[1], vals[4]),
            ("quartic_coefficient", vals[2], vals[5]),
        ],
        scale: vals[2].abs().max(vals[1].abs()),
        grid: n,
    })
}

// ---------------------------------------------------------------------------
// Heat-trace validation on the torus.
// ---------------------------------------------------------------------------

/// Constant-torsion flat-torus spectral problem.
#[derive(Clone, Debug)]
pub struct TorusSpec {
    pub t: Tensor<f64>,
    pub v: Tensor<f64>,
    pub cutoff: usize,
    pub times: Vec<f64>,
}

impl TorusSpec {
    pub fn new(t: Tensor<f64>, v: Tensor<f64>, cutoff: usize, times: Vec<f64>) -> Result<Self, Error> {
        if t.dim() != 4 || t.rank() != 3 || !t.is_alternating() {
            return Err(Error::Precondition("T must be an alternating rank-3 tensor in dim 4".into()));
        }
        if v.dim() != 4 || v.rank() != 1 {
            return Err(Error::Shape("V must be a rank-1 tensor in dim 4".into()));
        }
        if cutoff < 1 {
            return Err(Error::Precondition("cutoff must be >= 1".into()));
        }
        if times.len() < 3 {
            return Err(Error::Precondition("need at least 3 time points".into()));
        }
        if times.iter().any(|&t| !(t > 0.0)) || times.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition("times must be positive and strictly ascending".into()));
        }
        Ok(TorusSpec { t, v, cutoff, times })
    }
}

/// Default fit grid: 10 log-spaced times in [0.02, 0.2].
pub fn default_times() -> Vec<f64> {
    let (lo, hi) = (0.02_f64, 0.2_f64);
    (0..10)
        .map(|i| lo * (hi / lo).powf(i as f64 / 9.0))
        .collect()
}

/// Fourier symbol of the Dirac operator at lattice momentum k, and the
/// Hermitian mode matrix H_k = A_k^dagger A_k.
pub fn dirac_mode_matrix(spec: &TorusSpec, k: [i64; 4]) -> Result<(CMat<C64>, CMat<C64>), Error> {
    let g = gamma_basis::<C64>();
    let mut a = act_form(&spec.t.map(|x| C64::new(*x, 0.0)))?.scale(&C64::new(1.5, 0.0));
    a = a.sub(&act_form(&spec.v.map(|x| C64::new(*x, 0.0)))?.scale(&C64::new(1.5, 0.0)));
    for j in 0..4 {
        a = a.add(&g[j].scale(&C64::new(0.0, k[j] as f64)));
    }
    let h = a.dagger().mul(&a);
    Ok((a, h))
}

/// Heat-trace fit output.
#[derive(Clone, Debug)]
pub struct FitResult {
    pub a_hat: [f64; 3],
    pub a_analytic: [f64; 3],
    pub rel_errors: [f64; 3],
    pub residual: f64,
    pub k_eff: usize,
    pub times: Vec<f64>,
    pub trace: Vec<f64>,
}

fn to_na(m: &CMat<C64>) -> Matrix4<Complex<f64>> {
    Matrix4::from_fn(|i, j| *m.get(i, j))
}

/// Eigenvalues of the 4x4 Hermitian mode matrix; asserts positive
/// semidefiniteness up to roundoff.
pub fn mode_eigenvalues(h: &CMat<C64>) -> Result<[f64; 4], Error> {
    mode_eigenvalues_na(&to_na(h))
}

fn mode_eigenvalues_na(h: &Matrix4<Complex<f64>>) -> Result<[f64; 4], Error> {
    let eig = SymmetricEigen::new(*h);
    let mut out = [0.0; 4];
    let top = eig.eigenvalues.iter().fold(0.0_f64, |a, &b| a.max(b.abs()));
    for (i, &l) in eig.eigenvalues.iter().enumerate() {
        if l < -1e-9 * (1.0 + top) {
            return Err(Error::Precondition(format!("mode matrix not PSD: eigenvalue {l}")));
        }
        out[i] = l.max(0.0);
    }
    Ok(out)
}

/// Effective cutoff: the requested one, raised so the Gaussian tail at the
/// smallest time stays far below the fit tolerances (exp(-32) rule, plus a
/// margin of 2 because order-one torsion shifts eigenvalues below |k|^2).
pub fn effective_cutoff(cutoff: usize, t_min: f64) -> usize {
    let needed = (32.0 / t_min).sqrt().ceil() as usize + 2;
    cutoff.max(needed)
}

/// f(t) = sum_{|k| <= K} tr exp(-t H_k), per time, deterministically:
/// parallel over the first momentum component with per-slice compensated
/// sums in fixed lattice order, then an ordered reduction.  The mode
/// matrices at k and -k are isospectral (checked by a unit test), so only
/// one representative of each pair is visited, with weight 2.
pub fn heat_trace(spec: &TorusSpec, k_eff: usize) -> Result<Vec<f64>, Error> {
    let kk = k_eff as i64;
    let r2 = kk * kk;
    // constant part of the symbol and the gamma matrices, once
    let g = gamma_basis::<C64>();
    let base = act_form(&spec.t.map(|x| C64::new(*x, 0.0)))?
        .scale(&C64::new(1.5, 0.0))
        .sub(&act_form(&spec.v.map(|x| C64::new(*x, 0.0)))?.scale(&C64::new(1.5, 0.0)));
    let base_na = to_na(&base);
    let g_na: Vec<Matrix4<Complex<f64>>> = g.iter().map(to_na).collect();
    let slices: Result<Vec<Vec<f64>>, Error> = (0..=kk)
        .into_par_iter()
        .map(|k0| {
            let mut acc: Vec<Kahan> = spec.times.iter().map(|_| Kahan::new()).collect();
            // first nonzero component positive: one representative per +-k pair
            let lo1 = if k0 > 0 { -kk } else { 0 };
            for k1 in lo1..=kk {
                let lo2 = if k0 > 0 || k1 > 0 { -kk } else { 0 };
                for k2 in lo2..=kk {
                    let partial = k0 * k0 + k1 * k1 + k2 * k2;
                    if partial > r2 {
                        continue;
                    }
                    let lo3 = if k0 > 0 || k1 > 0 || k2 > 0 { -kk } else { 0 };
                    for k3 in lo3..=kk {
                        if partial + k3 * k3 > r2 {
                            continue;
                        }
                        let weight =
                            if k0 == 0 && k1 == 0 && k2 == 0 && k3 == 0 { 1.0 } else { 2.0 };
                        let mut a = base_na;
                        for (j, &kj) in [k0, k1, k2, k3].iter().enumerate() {
                            if kj != 0 {
                                a += g_na[j] * Complex::new(0.0, kj as f64);
                            }
                        }
                        let h = a.adjoint() * a;
                        let lam = mode_eigenvalues_na(&h)?;
                        for (ti, &t) in spec.times.iter().enumerate() {
                            let mut tr = 0.0;
                            for &l in &lam {
                                tr += (-t * l).exp();
                            }
                            acc[ti].add(weight * tr);
                        }
                    }
                }
            }
            Ok(acc.into_iter().map(|k| k.sum).collect())
        })
        .collect();
    let slices = slices?;
    let mut total: Vec<Kahan> = spec.times.iter().map(|_| Kahan::new()).collect();
    for slice in &slices {
        for (ti, v) in slice.iter().enumerate() {
            total[ti].add(*v);
        }
    }
    Ok(total.into_iter().map(|k| k.sum).collect())
}

/// Weighted least squares of t^2 f(t) = a0 + a2 t + a4 t^2 (weights 1/t).
fn fit_quadratic(times: &[f64], f: &[f64]) -> Result<([f64; 3], f64), Error> {
    let mut m = [[0.0_f64; 3]; 3];
    let mut rhs = [0.0_f64; 3];
    for (&t, &ft) in times.iter().zip(f) {
        let y = t * t * ft;
        let w = 1.0 / t;
        let basis = [1.0, t, t * t];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] += w * basis[i] * basis[j];
            }
            rhs[i] += w * basis[i] * y;
        }
    }
    let sol = solve3(m, rhs)?;
    let mut res = 0.0;
    for (&t, &ft) in times.iter().zip(f) {
        let y = t * t * ft;
        let pred = sol[0] + sol[1] * t + sol[2] * t * t;
        res += (y - pred) * (y - pred) / t;
    }
    Ok((sol, res.sqrt()))
}

fn solve3(mut m: [[f64; 3]; 3], mut b: [f64; 3]) -> Result<[f64; 3], Error> {
    // Gaussian elimination with partial pivoting; the conditioning guard
    // rejects degenerate time grids.
    let scale = m.iter().flatten().fold(0.0_f64, |a, &x| a.max(x.abs()));
    for col in 0..3 {
        let piv = (col..3).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs())).unwrap();
        if m[piv][col].abs() < 1e-12 * (1.0 + scale) {
            return Err(Error::Precondition(
                "ill-conditioned fit; choose a different time grid".into(),
            ));
        }
        m.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            for j in col..3 {
                m[row][j] -= f * m[col][j];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; 3];
    for col in (0..3).rev() {
        let mut acc = b[col];
        for j in col + 1..3 {
            acc -= m[col][j] * x[j];
        }
        x[col] = acc / m[col][col];
    }
    Ok(x)
}

/// Analytic heat coefficients of the constant-torsion flat torus:
/// a0 = 4 pi^2, a2 = (2 pi)^4 (54 |V|^2 + 9 ||T||^2) / (48 pi^2), a4 = 0.
pub fn torus_analytic(spec: &TorusSpec) -> [f64; 3] {
    let pi = std::f64::consts::PI;
    let vol = (2.0 * pi).powi(4);
    let a0 = vol / (16.0 * pi * pi) * 4.0;
    let v2 = norm_sq(&spec.v);
    let t2 = norm_sq(&spec.t);
    let a2 = vol * (54.0 * v2 + 9.0 * t2) / (48.0 * pi * pi);
    [a0, a2, 0.0]
}

fn build_fit(times: &[f64], f: &[f64], analytic: [f64; 3], k_eff: usize) -> Result<FitResult, Error> {
    let (a_hat, residual) = fit_quadratic(times, f)?;
    let mut rel = [0.0; 3];
    for i in 0..3 {
        let denom = if analytic[i].abs() > 1e-300 { analytic[i].abs() } else { 1.0 };
        rel[i] = (a_hat[i] - analytic[i]).abs() / denom;
    }
    Ok(FitResult {
        a_hat,
        a_analytic: analytic,
        rel_errors: rel,
        residual,
        k_eff,
        times: times.to_vec(),
        trace: f.to_vec(),
    })
}

/// Full torus validation: deterministic lattice sum, quadratic fit, analytic
/// comparison.
pub fn heat_trace_fit(spec: &TorusSpec) -> Result<FitResult, Error> {
    let k_eff = effective_cutoff(spec.cutoff, spec.times[0]);
    let f = heat_trace(spec, k_eff)?;
    build_fit(&spec.times, &f, torus_analytic(spec), k_eff)
}

// ---------------------------------------------------------------------------
// Round-sphere benchmark.
// ---------------------------------------------------------------------------

/// Dirac spectrum of the unit round 4-sphere: eigenvalues +-(2 + j) with
/// multiplicity (2/3)(j+1)(j+2)(j+3) each.  The multiplicity table is
/// external data; `sphere_benchmark` gates it behind the volume (a0) oracle.
pub fn sphere_spectrum(j_max: usize) -> Vec<(f64, f64)> {
    (0..=j_max)
        .map(|j| {
            let jf = j as f64;
            let mult = 2.0 / 3.0 * (jf + 1.0) * (jf + 2.0) * (jf + 3.0);
            ((2.0 + jf) * (2.0 + jf), 2.0 * mult)
        })
        .collect()
}

/// Heat trace from the sphere spectrum, same fit pipeline, targets
/// a0 = 2/3 and a2 = -2/3.  Errors out when the multiplicity data fails
/// the a0 (volume) oracle at 1e-4 relative.
pub fn sphere_benchmark(times: Option<Vec<f64>>) -> Result<FitResult, Error> {
    // spectral sums are cheap here, so the default grid sits at much
    // smaller times than the lattice one to suppress higher-order terms
    let times = times.unwrap_or_else(|| {
        let (lo, hi) = (0.002_f64, 0.02_f64);
        (0..10).map(|i| lo * (hi / lo).powf(i as f64 / 9.0)).collect()
    });
    if times.len() < 3 || times.iter().any(|&t| !(t > 0.0)) {
        return Err(Error::Precondition("need at least 3 positive times".into()));
    }
    let t_min = times.iter().cloned().fold(f64::INFINITY, f64::min);
    let j_max = ((40.0 / t_min).sqrt().ceil() as usize).max(8);
    let spectrum = sphere_spectrum(j_max);
    let f: Vec<f64> = times
        .iter()
        .map(|&t| {
            let mut acc = Kahan::new();
            for &(l, mult) in &spectrum {
                acc.add(mult * (-t * l).exp());
            }
            acc.sum
        })
        .collect();
    let fit = build_fit(&times, &f, [2.0 / 3.0, -2.0 / 3.0, 0.0], j_max)?;
    if fit.rel_errors[0] > 1e-4 {
        return Err(Error::Precondition(format!(
            "sphere multiplicity table fails the volume oracle: a0_hat = {}",
            fit.a_hat[0]
        )));
    }
    Ok(fit)
}
