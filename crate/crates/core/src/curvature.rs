//! Algebra of curvature-type rank-4 tensors: Kulkarni-Nomizu products,
//! contractions, the first-Bianchi projector, the pairwise Hodge operator
//! and the orthogonal six-way decomposition of pair-antisymmetric tensors.

use crate::scalar::Scalar;
use crate::tensor::{epsilon, metric, multi_indices, norm_sq, tensor_inner, Tensor};
use crate::Error;

fn check_rank(t: &Tensor<impl Scalar>, rank: usize, what: &str) -> Result<(), Error> {
    if t.rank() != rank {
        return Err(Error::Shape(format!("{what} needs rank {rank}, got {}", t.rank())));
    }
    Ok(())
}

/// Kulkarni-Nomizu product of two (not necessarily symmetric) rank-2 tensors:
/// (h ^ k)(X,Y,Z,W) = h(X,Z)k(Y,W) + h(Y,W)k(X,Z) - h(X,W)k(Y,Z) - h(Y,Z)k(X,W).
pub fn kn_product<S: Scalar>(h: &Tensor<S>, k: &Tensor<S>) -> Result<Tensor<S>, Error> {
    check_rank(h, 2, "kn_product")?;
    check_rank(k, 2, "kn_product")?;
    if h.dim() != k.dim() {
        return Err(Error::Shape("kn_product dim mismatch".into()));
    }
    Ok(Tensor::from_fn(h.dim(), 4, |i| {
        let (x, y, z, w) = (i[0], i[1], i[2], i[3]);
        h.get(&[x, z]).clone() * k.get(&[y, w]).clone()
            + h.get(&[y, w]).clone() * k.get(&[x, z]).clone()
            - h.get(&[x, w]).clone() * k.get(&[y, z]).clone()
            - h.get(&[y, z]).clone() * k.get(&[x, w]).clone()
    }))
}

/// Ricci-type contraction c(Q)(X,Y) = sum_i Q(e_i, X, Y, e_i).
pub fn ricci_contraction<S: Scalar>(q: &Tensor<S>) -> Result<Tensor<S>, Error> {
    check_rank(q, 4, "ricci_contraction")?;
    let n = q.dim();
    Ok(Tensor::from_fn(n, 2, |idx| {
        let mut acc = S::zero();
        for i in 0..n {
            acc = acc + q.get(&[i, idx[0], idx[1], i]).clone();
        }
        acc
    }))
}

/// Metric trace of a rank-2 tensor.
pub fn g_trace<S: Scalar>(k: &Tensor<S>) -> Result<S, Error> {
    check_rank(k, 2, "g_trace")?;
    let mut acc = S::zero();
    for i in 0..k.dim() {
        acc = acc + k.get(&[i, i]).clone();
    }
    Ok(acc)
}

/// First-Bianchi projector
/// b(Q)(X,Y,Z,W) = (1/3)(Q(X,Y,Z,W) + Q(Y,Z,X,W) + Q(Z,X,Y,W)).
pub fn bianchi<S: Scalar>(q: &Tensor<S>) -> Result<Tensor<S>, Error> {
    check_rank(q, 4, "bianchi")?;
    let third = S::from_ratio(1, 3);
    Ok(Tensor::from_fn(q.dim(), 4, |i| {
        let (x, y, z, w) = (i[0], i[1], i[2], i[3]);
        (q.get(&[x, y, z, w]).clone() + q.get(&[y, z, x, w]).clone() + q.get(&[z, x, y, w]).clone())
            * third.clone()
    }))
}

/// Hodge star acting on the last index pair (dimension 4 only):
/// (id (x) *Q)_{ijlm} = sum_{ab} Q_{ijab} eps_{ablm}.
///
/// The full (unhalved) contraction is used; it is the normalization under
/// which `hodge_pair(g^g) = 4 omega` and the spinor-curvature pairing
/// `sum tr(Omega Omega omega) = (1/4) <Q, hodge_pair(Q)>` hold.  It squares
/// to 4 times the identity on pair-antisymmetric tensors.
pub fn hodge_pair<S: Scalar>(q: &Tensor<S>) -> Result<Tensor<S>, Error> {
    check_rank(q, 4, "hodge_pair")?;
    if q.dim() != 4 {
        return Err(Error::UnsupportedDim(q.dim()));
    }
    let mut out = Tensor::zeros(4, 4);
    for idx in multi_indices(4, 2) {
        let (i, j) = (idx[0], idx[1]);
        for ldx in multi_indices(4, 2) {
            let (l, m) = (ldx[0], ldx[1]);
            let mut acc = S::zero();
            for a in 0..4 {
                for b in 0..4 {
                    let e = epsilon(&[a, b, l, m]);
                    if e != 0 {
                        acc = acc + q.get(&[i, j, a, b]).clone() * S::from_int(e);
                    }
                }
            }
            out.set(&[i, j, l, m], acc);
        }
    }
    Ok(out)
}

/// Swap the two index pairs: Q_{ijlm} -> Q_{lmij}.
pub fn swap_pairs<S: Scalar>(q: &Tensor<S>) -> Tensor<S> {
    q.permute(&[2, 3, 0, 1])
}

/// Antisymmetry in both index pairs (the ambient space of the decomposition).
pub fn is_pair_antisymmetric<S: Scalar>(q: &Tensor<S>) -> bool {
    q.rank() == 4
        && q.permute(&[1, 0, 2, 3]).add(q).is_negligible()
        && q.permute(&[0, 1, 3, 2]).add(q).is_negligible()
}

/// Algebraic curvature tensor: pair-antisymmetric, pair-symmetric, first Bianchi.
pub fn is_algebraic_curvature<S: Scalar>(q: &Tensor<S>) -> bool {
    is_pair_antisymmetric(q)
        && swap_pairs(q).sub(q).is_negligible()
        && bianchi(q).expect("rank 4").is_negligible()
}

/// Project an arbitrary rank-4 tensor onto the pair-antisymmetric space.
pub fn pair_antisymmetric_part<S: Scalar>(q: &Tensor<S>) -> Result<Tensor<S>, Error> {
    check_rank(q, 4, "pair_antisymmetric_part")?;
    let a = q.sub(&q.permute(&[1, 0, 2, 3]));
    let b = a.sub(&a.permute(&[0, 1, 3, 2]));
    Ok(b.scale(&S::from_ratio(1, 4)))
}

/// Scalar, trace-free Ricci and Weyl parts of an algebraic curvature tensor:
/// Q = -s/(2n(n-1)) g^g - 1/(n-2) h^g + weyl with h trace-free and weyl
/// Ricci-flat.  Returns (s, h, weyl).
pub fn ricci_decompose<S: Scalar>(q: &Tensor<S>) -> Result<(S, Tensor<S>, Tensor<S>), Error> {
    check_rank(q, 4, "ricci_decompose")?;
    let n = q.dim() as i64;
    if n < 3 {
        return Err(Error::Precondition("ricci_decompose needs dim >= 3".into()));
    }
    let g = metric::<S>(q.dim());
    let c = ricci_contraction(q)?;
    let s = g_trace(&c)?;
    let h = c.sub(&g.scale(&(s.clone() / S::from_int(n))));
    let gg = kn_product(&g, &g)?;
    let hg = kn_product(&h, &g)?;
    let weyl = q
        .add(&hg.scale(&S::from_ratio(1, n - 2)))
        .add(&gg.scale(&(s.clone() / S::from_int(2 * n * (n - 1)))));
    Ok((s, h, weyl))
}

/// The six orthogonal components of a pair-antisymmetric rank-4 tensor in
/// dimension 4.  Dimensions over the rationals: s 1, hs 9, ws 10, l4 1,
/// ha 6, wa 9 (total 36).
#[derive(Clone, Debug)]
pub struct Decompose6<S: Scalar> {
    /// scalar part -s/(2n(n-1)) g^g of the pair-symmetric Bianchi kernel
    pub s: Tensor<S>,
    /// trace-free symmetric Ricci part -1/(n-2) h^g
    pub hs: Tensor<S>,
    /// Weyl part (pair-symmetric, Bianchi, Ricci-flat)
    pub ws: Tensor<S>,
    /// totally antisymmetric part (image of the Bianchi projector)
    pub l4: Tensor<S>,
    /// antisymmetric-Ricci part -1/(n-2) c(QA)^g
    pub ha: Tensor<S>,
    /// trace-free pair-antisymmetric remainder
    pub wa: Tensor<S>,
}

impl<S: Scalar> Decompose6<S> {
    pub fn parts(&self) -> [(&'static str, &Tensor<S>); 6] {
        [
            ("S", &self.s),
            ("HS", &self.hs),
            ("WS", &self.ws),
            ("L4", &self.l4),
            ("HA", &self.ha),
            ("WA", &self.wa),
        ]
    }

    pub fn sum(&self) -> Tensor<S> {
        self.s.add(&self.hs).add(&self.ws).add(&self.l4).add(&self.ha).add(&self.wa)
    }
}

/// Constructive orthogonal projection onto the six components.
pub fn decompose6<S: Scalar>(q: &Tensor<S>) -> Result<Decompose6<S>, Error> {
    check_rank(q, 4, "decompose6")?;
    if q.dim() != 4 {
        return Err(Error::UnsupportedDim(q.dim()));
    }
    if !is_pair_antisymmetric(q) {
        return Err(Error::Precondition("decompose6 input must be pair-antisymmetric".into()));
    }
    let n = 4i64;
    let half = S::from_ratio(1, 2);
    let qs = q.add(&swap_pairs(q)).scale(&half);
    let qa = q.sub(&swap_pairs(q)).scale(&half);
    // pair-symmetric side: split off the 4-form, Ricci-decompose the rest
    let l4 = bianchi(&qs)?;
    let kernel = qs.sub(&l4);
    let (s, h, ws) = ricci_decompose(&kernel)?;
    let g = metric::<S>(4);
    let gg = kn_product(&g, &g)?;
    let s_part = gg.scale(&-(s / S::from_int(2 * n * (n - 1))));
    let hs = kn_product(&h, &g)?.scale(&S::from_ratio(-1, n - 2));
    // pair-antisymmetric side: Ricci trace and remainder
    let ca = ricci_contraction(&qa)?;
    let ha = kn_product(&ca, &g)?.scale(&S::from_ratio(-1, n - 2));
    let wa = qa.sub(&ha);
    Ok(Decompose6 { s: s_part, hs, ws, l4, ha, wa })
}

/// Rank-2 representative of a tensor whose pairwise Hodge dual has the form
/// q ^ g: returns q = -(1/2) c(hodge_pair(Q)), which is trace-free and
/// satisfies hodge_pair(Q) = q ^ g whenever Q lies in WA + HA.
pub fn trace_rep<S: Scalar>(q: &Tensor<S>) -> Result<Tensor<S>, Error> {
    let star = hodge_pair(q)?;
    let c = ricci_contraction(&star)?;
    Ok(c.scale(&S::from_ratio(-1, 2)))
}

/// Gram matrix entry helper for orthogonality tests.
pub fn inner4<S: Scalar>(a: &Tensor<S>, b: &Tensor<S>) -> S {
    tensor_inner(a, b).expect("rank-4 inner")
}

/// ||Q||^2 shorthand.
pub fn nsq<S: Scalar>(a: &Tensor<S>) -> S {
    norm_sq(a)
}
