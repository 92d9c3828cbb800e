//! Dense rank-k tensors over an n-dimensional oriented Euclidean space.
//!
//! Components are stored row-major against the standard orthonormal frame,
//! so raising/lowering indices is the identity and the full-index scalar
//! product `<P,Q> = sum over all index tuples` is the canonical pairing.
//! Orientation is fixed by `vol(e1,...,en) = +1`.

use crate::scalar::Scalar;
use crate::Error;

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<S: Scalar> {
    dim: usize,
    rank: usize,
    data: Vec<S>,
}

/// Iterate all multi-indices of the given rank (row-major order).
pub fn multi_indices(dim: usize, rank: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(rank as u32);
    (0..total).map(move |mut flat| {
        let mut idx = vec![0usize; rank];
        for a in (0..rank).rev() {
            idx[a] = flat % dim;
            flat /= dim;
        }
        idx
    })
}

/// All permutations of 0..k together with their signs.
pub fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    heap_permute(&mut perm, k, &mut out);
    out
}

fn heap_permute(perm: &mut Vec<usize>, k: usize, out: &mut Vec<(Vec<usize>, i64)>) {
    if k <= 1 {
        out.push((perm.clone(), perm_sign(perm)));
        return;
    }
    for i in 0..k {
        heap_permute(perm, k - 1, out);
        if k % 2 == 0 {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
}

pub fn perm_sign(perm: &[usize]) -> i64 {
    let mut sign = 1i64;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Sign of (i1..ik) as a permutation; 0 on repeated entries.
pub fn epsilon(idx: &[usize]) -> i64 {
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if idx[a] == idx[b] {
                return 0;
            }
        }
    }
    perm_sign(idx)
}

impl<S: Scalar> Tensor<S> {
    pub fn zeros(dim: usize, rank: usize) -> Self {
        Tensor { dim, rank, data: vec![S::zero(); dim.pow(rank as u32)] }
    }

    pub fn scalar(dim: usize, value: S) -> Self {
        Tensor { dim, rank: 0, data: vec![value] }
    }

    pub fn from_fn(dim: usize, rank: usize, mut f: impl FnMut(&[usize]) -> S) -> Self {
        let mut t = Tensor::zeros(dim, rank);
        for idx in multi_indices(dim, rank) {
            let flat = t.flat(&idx);
            t.data[flat] = f(&idx);
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.rank);
        let mut flat = 0usize;
        for &i in idx {
            debug_assert!(i < self.dim);
            flat = flat * self.dim + i;
        }
        flat
    }

    pub fn get(&self, idx: &[usize]) -> &S {
        &self.data[self.flat(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: S) {
        let flat = self.flat(idx);
        self.data[flat] = value;
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Tensor<T> {
        Tensor { dim: self.dim, rank: self.rank, data: self.data.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), Error> {
        if self.dim != other.dim || self.rank != other.rank {
            return Err(Error::Shape(format!(
                "shape mismatch: ({},{}) vs ({},{})",
                self.dim, self.rank, other.dim, other.rank
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_shape(other).expect("tensor add");
        Tensor {
            dim: self.dim,
            rank: self.rank,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// Components permuted: out[i_0..i_{k-1}] = self[i_{perm[0]},...,i_{perm[k-1]}].
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rank);
        Tensor::from_fn(self.dim, self.rank, |idx| {
            let src: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            self.get(&src).clone()
        })
    }

    /// Full tensor product (rank adds).
    pub fn tensor_product(&self, other: &Self) -> Result<Self, Error> {
        if self.dim != other.dim {
            return Err(Error::Shape(format!("dim mismatch {} vs {}", self.dim, other.dim)));
        }
        let rank = self.rank + other.rank;
        let mut out = Tensor::zeros(self.dim, rank);
        let block = other.data.len();
        for (a, x) in self.data.iter().enumerate() {
            for (b, y) in other.data.iter().enumerate() {
                out.data[a * block + b] = x.clone() * y.clone();
            }
        }
        Ok(out)
    }

    /// Zero up to arithmetic noise in every component (see
    /// `Scalar::is_negligible`).
    pub fn is_negligible(&self) -> bool {
        self.data.iter().all(|x| x.is_negligible())
    }

    /// Check full antisymmetry in all slots (up to arithmetic noise for
    /// floating-point scalars).
    pub fn is_alternating(&self) -> bool {
        if self.rank <= 1 {
            return true;
        }
        // Swapping two adjacent slots must flip the sign; adjacent
        // transpositions generate the symmetric group.
        for a in 0..self.rank - 1 {
            let mut perm: Vec<usize> = (0..self.rank).collect();
            perm.swap(a, a + 1);
            if !self.permute(&perm).add(self).is_negligible() {
                return false;
            }
        }
        true
    }
}

/// Full-index scalar product `<P,Q>` (sum over all index tuples).
pub fn tensor_inner<S: Scalar>(p: &Tensor<S>, q: &Tensor<S>) -> Result<S, Error> {
    if p.dim() != q.dim() || p.rank() != q.rank() {
        return Err(Error::Shape(format!(
            "inner product shape mismatch: ({},{}) vs ({},{})",
            p.dim(),
            p.rank(),
            q.dim(),
            q.rank()
        )));
    }
    let mut acc = S::zero();
    for (a, b) in p.data().iter().zip(q.data().iter()) {
        acc = acc + a.clone() * b.clone();
    }
    Ok(acc)
}

pub fn norm_sq<S: Scalar>(p: &Tensor<S>) -> S {
    tensor_inner(p, p).expect("same shape")
}

/// Alternation projector: (Alt P)(X1..Xk) = (1/k!) sum_sigma sign(sigma) P(X_sigma).
pub fn antisymmetrize<S: Scalar>(p: &Tensor<S>) -> Tensor<S> {
    let k = p.rank();
    if k <= 1 {
        return p.clone();
    }
    let perms = signed_permutations(k);
    let factorial = perms.len() as i64;
    let inv = S::from_ratio(1, factorial);
    let mut out = Tensor::zeros(p.dim(), k);
    for (perm, sign) in &perms {
        let term = p.permute(perm);
        let signed = if *sign > 0 { term } else { term.neg() };
        out = out.add(&signed);
    }
    out.scale(&inv)
}

/// Antisymmetrize only the listed slots (for derived 3-form gradients etc.).
pub fn antisymmetrize_slots<S: Scalar>(p: &Tensor<S>, slots: &[usize]) -> Tensor<S> {
    let k = slots.len();
    if k <= 1 {
        return p.clone();
    }
    let perms = signed_permutations(k);
    let inv = S::from_ratio(1, perms.len() as i64);
    let mut out = Tensor::zeros(p.dim(), p.rank());
    for (perm, sign) in &perms {
        let mut full: Vec<usize> = (0..p.rank()).collect();
        for (a, &s) in slots.iter().enumerate() {
            full[s] = slots[perm[a]];
        }
        let term = p.permute(&full);
        let signed = if *sign > 0 { term } else { term.neg() };
        out = out.add(&signed);
    }
    out.scale(&inv)
}

/// Exterior product of a p-form and a q-form:
/// alpha ^ beta = (p+q)!/(p! q!) Alt(alpha (x) beta).
pub fn wedge<S: Scalar>(alpha: &Tensor<S>, beta: &Tensor<S>) -> Result<Tensor<S>, Error> {
    let (p, q) = (alpha.rank(), beta.rank());
    let prod = alpha.tensor_product(beta)?;
    let alt = antisymmetrize(&prod);
    Ok(alt.scale(&S::from_int(binomial(p + q, p))))
}

/// binomial(n, k) = (p+q)!/(p!q!); exact for the small ranks used here.
fn binomial(n: usize, k: usize) -> i64 {
    let k = k.min(n - k);
    let mut num = 1i64;
    for a in 0..k {
        num = num * (n - a) as i64 / (a as i64 + 1);
    }
    num
}

/// Interior product: (V ⌟ alpha)(X2..Xk) = sum_i V_i alpha(e_i, X2..Xk).
pub fn interior<S: Scalar>(v: &Tensor<S>, alpha: &Tensor<S>) -> Result<Tensor<S>, Error> {
    if v.rank() != 1 {
        return Err(Error::Shape(format!("interior product needs a vector, got rank {}", v.rank())));
    }
    if v.dim() != alpha.dim() {
        return Err(Error::Shape("interior product dim mismatch".into()));
    }
    if alpha.rank() == 0 {
        return Err(Error::Shape("interior product of a scalar".into()));
    }
    let n = alpha.dim();
    let k = alpha.rank();
    let mut out = Tensor::zeros(n, k - 1);
    for idx in multi_indices(n, k - 1) {
        let mut acc = S::zero();
        let mut full = vec![0usize; k];
        full[1..].copy_from_slice(&idx);
        for i in 0..n {
            full[0] = i;
            acc = acc + v.get(&[i]).clone() * alpha.get(&full).clone();
        }
        out.set(&idx, acc);
    }
    Ok(out)
}

/// Euclidean metric tensor (identity matrix as a rank-2 tensor).
pub fn metric<S: Scalar>(dim: usize) -> Tensor<S> {
    Tensor::from_fn(dim, 2, |idx| if idx[0] == idx[1] { S::one() } else { S::zero() })
}

/// Volume form on the oriented 4-space, components epsilon_{ijkl}.
pub fn vol_form<S: Scalar>() -> Tensor<S> {
    Tensor::from_fn(4, 4, |idx| S::from_int(epsilon(idx)))
}

/// i-th coordinate covector / basis vector.
pub fn basis_covector<S: Scalar>(dim: usize, i: usize) -> Tensor<S> {
    Tensor::from_fn(dim, 1, |idx| if idx[0] == i { S::one() } else { S::zero() })
}

/// Hodge star of a k-form in dimension 4:
/// (*alpha)_{j_{k+1}..j_4} = (1/k!) sum alpha_{i_1..i_k} eps_{i_1..i_k j_{k+1}..j_4}.
/// On 2-forms this is the involutive star.
pub fn hodge_star<S: Scalar>(alpha: &Tensor<S>) -> Result<Tensor<S>, Error> {
    if alpha.dim() != 4 {
        return Err(Error::UnsupportedDim(alpha.dim()));
    }
    let k = alpha.rank();
    if k > 4 {
        return Err(Error::Shape(format!("hodge star of rank {k}")));
    }
    let mut fact = 1i64;
    for a in 2..=k {
        fact *= a as i64;
    }
    let inv = S::from_ratio(1, fact);
    let mut out = Tensor::zeros(4, 4 - k);
    for jdx in multi_indices(4, 4 - k) {
        let mut acc = S::zero();
        for idx in multi_indices(4, k) {
            let mut full = idx.clone();
            full.extend_from_slice(&jdx);
            let e = epsilon(&full);
            if e != 0 {
                let term = alpha.get(&idx).clone() * S::from_int(e);
                acc = acc + term;
            }
        }
        out.set(&jdx, acc);
    }
    Ok(out.scale(&inv))
}

/// Exterior derivative from a supplied gradient: grad[i, ...] = (d/dx_i) alpha[...].
/// d(alpha) = (k+1) Alt(grad) for a k-form alpha.
pub fn exterior_derivative<S: Scalar>(grad: &Tensor<S>) -> Tensor<S> {
    let k = grad.rank();
    antisymmetrize(grad).scale(&S::from_int(k as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    fn theta123() -> Tensor<Rat> {
        // the unit 3-form theta^1 ^ theta^2 ^ theta^3
        Tensor::from_fn(4, 3, |idx| Rat::from_int(epsilon_3(idx)))
    }

    fn epsilon_3(idx: &[usize]) -> i64 {
        if idx.iter().any(|&i| i == 3) {
            0
        } else {
            epsilon(idx)
        }
    }

    #[test]
    fn vol_form_normalization() {
        let om: Tensor<Rat> = vol_form();
        assert_eq!(*om.get(&[0, 1, 2, 3]), Rat::from_int(1));
        // <omega, omega> = 4! = 24 under the full-index product
        assert_eq!(norm_sq(&om), Rat::from_int(24));
        assert!(om.is_alternating());
    }

    #[test]
    fn wedge_of_covectors_is_unit_volume() {
        let th: Vec<Tensor<Rat>> = (0..4).map(|i| basis_covector(4, i)).collect();
        let w = wedge(&wedge(&wedge(&th[0], &th[1]).unwrap(), &th[2]).unwrap(), &th[3]).unwrap();
        assert_eq!(w, vol_form());
    }

    #[test]
    fn wedge_graded_commutativity() {
        let a: Tensor<Rat> = Tensor::from_fn(4, 1, |i| rat(i[0] as i64 + 1, 2));
        let b = antisymmetrize(&Tensor::from_fn(4, 2, |i| rat(i[0] as i64 - 2 * i[1] as i64, 3)));
        let ab = wedge(&a, &b).unwrap();
        let ba = wedge(&b, &a).unwrap();
        // deg 1 * deg 2: alpha^beta = (-1)^{pq} beta^alpha = beta^alpha
        assert_eq!(ab, ba);
        let c: Tensor<Rat> = basis_covector(4, 2);
        let ac = wedge(&a, &c).unwrap();
        let ca = wedge(&c, &a).unwrap();
        assert_eq!(ac, ca.neg());
    }

    #[test]
    fn interior_of_volume_form() {
        // V = e4: V ⌟ omega = -theta^1 ^ theta^2 ^ theta^3 with this orientation
        let v: Tensor<Rat> = basis_covector(4, 3);
        let got = interior(&v, &vol_form()).unwrap();
        assert_eq!(got, theta123().neg());
    }

    #[test]
    fn wedge_with_volume_pairing() {
        // V = e4, T = theta^123: V-flat ^ T = -omega, so <V^T, omega> = -24
        // and the star identity <V^T, omega> = 4 <T, *V-flat> holds.
        let v: Tensor<Rat> = basis_covector(4, 3);
        let t = theta123();
        let vt = wedge(&v, &t).unwrap();
        assert_eq!(vt, vol_form().neg());
        let pairing = tensor_inner(&vt, &vol_form()).unwrap();
        assert_eq!(pairing, Rat::from_int(-24));
        let star_v = hodge_star(&v).unwrap();
        let rhs = tensor_inner(&t, &star_v).unwrap() * Rat::from_int(4);
        assert_eq!(pairing, rhs);
        assert_eq!(tensor_inner(&t, &star_v).unwrap(), Rat::from_int(-6));
    }

    #[test]
    fn cartan_identity() {
        // V ⌟ (V-flat ^ T) + V-flat ^ (V ⌟ T) = |V|^2 T for any vector and 3-form
        let v: Tensor<Rat> = Tensor::from_fn(4, 1, |i| rat(2 * i[0] as i64 - 1, 3));
        let t = antisymmetrize(&Tensor::from_fn(4, 3, |i| {
            rat(i[0] as i64 + 2 * i[1] as i64 - i[2] as i64, 2)
        }))
        .scale(&Rat::from_int(6));
        let lhs = interior(&v, &wedge(&v, &t).unwrap())
            .unwrap()
            .add(&wedge(&v, &interior(&v, &t).unwrap()).unwrap());
        let v2 = norm_sq(&v);
        assert_eq!(lhs, t.scale(&v2));
    }

    #[test]
    fn hodge_star_basics() {
        // involutive on 2-forms
        let b = antisymmetrize(&Tensor::from_fn(4, 2, |i| rat(3 * i[0] as i64 + i[1] as i64, 4)));
        let ss = hodge_star(&hodge_star(&b).unwrap()).unwrap();
        assert_eq!(ss, b);
        // *theta^1^theta^2 = theta^3^theta^4
        let th12 = wedge(&basis_covector::<Rat>(4, 0), &basis_covector(4, 1)).unwrap();
        let th34 = wedge(&basis_covector::<Rat>(4, 2), &basis_covector(4, 3)).unwrap();
        assert_eq!(hodge_star(&th12).unwrap(), th34);
    }

    #[test]
    fn alternation_is_projection() {
        let p: Tensor<Rat> = Tensor::from_fn(4, 3, |i| rat(i[0] as i64 * 7 - i[1] as i64 + 3 * i[2] as i64, 5));
        let a = antisymmetrize(&p);
        assert!(a.is_alternating());
        assert_eq!(antisymmetrize(&a), a);
        // contraction property: <Alt P, Q> = <P, Alt Q>
        let q: Tensor<Rat> = Tensor::from_fn(4, 3, |i| rat(2 * i[0] as i64 + i[2] as i64, 3));
        assert_eq!(
            tensor_inner(&a, &q).unwrap(),
            tensor_inner(&p, &antisymmetrize(&q)).unwrap()
        );
    }

    #[test]
    fn shape_errors_are_reported() {
        let a: Tensor<Rat> = Tensor::zeros(4, 2);
        let b: Tensor<Rat> = Tensor::zeros(4, 3);
        assert!(tensor_inner(&a, &b).is_err());
        let v: Tensor<Rat> = Tensor::zeros(3, 1);
        assert!(interior(&v, &a).is_err());
        assert!(interior(&a, &b).is_err());
    }
}
