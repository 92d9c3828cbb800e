//! Property tests for the exact tensor layer: projector algebra, pairing
//! symmetries, and the exterior operations, over random rational tensors.

use proptest::prelude::*;

use chirality::curvature::{bianchi, hodge_pair, swap_pairs};
use chirality::scalar::{Rat, Scalar};
use chirality::tensor::{antisymmetrize, antisymmetrize_slots, norm_sq, tensor_inner, wedge, Tensor};

fn rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| Rat::from_ratio(p, q))
}

fn tensor(rank: usize) -> impl Strategy<Value = Tensor<Rat>> {
    let count = 4usize.pow(rank as u32);
    prop::collection::vec(rat(), count).prop_map(move |vals| {
        let mut t = Tensor::zeros(4, rank);
        for (flat, v) in vals.into_iter().enumerate() {
            let mut idx = vec![0usize; rank];
            let mut rest = flat;
            for slot in (0..rank).rev() {
                idx[slot] = rest % 4;
                rest /= 4;
            }
            t.set(&idx, v);
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn alternation_is_idempotent(t in tensor(3)) {
        let a = antisymmetrize(&t);
        prop_assert_eq!(antisymmetrize(&a), a.clone());
        prop_assert!(a.is_alternating());
    }

    #[test]
    fn bianchi_is_idempotent_and_self_adjoint(q in tensor(4), p in tensor(4)) {
        let bq = bianchi(&q).unwrap();
        prop_assert_eq!(bianchi(&bq).unwrap(), bq.clone());
        let lhs = tensor_inner(&bq, &p).unwrap();
        let rhs = tensor_inner(&q, &bianchi(&p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pair_swap_is_an_inner_product_isometry(q in tensor(4), p in tensor(4)) {
        let lhs = tensor_inner(&swap_pairs(&q), &swap_pairs(&p)).unwrap();
        prop_assert_eq!(lhs, tensor_inner(&q, &p).unwrap());
    }

    #[test]
    fn pairwise_star_squares_to_four(q in tensor(4)) {
        // The epsilon contraction only sees the part antisymmetric in the
        // contracted pair, so the involution property holds on that part.
        let q = antisymmetrize_slots(&q, &[2, 3]);
        let twice = hodge_pair(&hodge_pair(&q).unwrap()).unwrap();
        prop_assert_eq!(twice, q.scale(&Rat::from_int(4)));
    }

    #[test]
    fn wedge_of_one_forms_antisymmetrizes(a in tensor(1), b in tensor(1)) {
        let ab = wedge(&a, &b).unwrap();
        prop_assert_eq!(ab.clone(), wedge(&b, &a).unwrap().neg());
        prop_assert!(ab.is_alternating());
        // |a ^ b|^2 = 2 (|a|^2 |b|^2 - <a,b>^2)
        let inner = tensor_inner(&a, &b).unwrap();
        let expected = (norm_sq(&a) * norm_sq(&b) - inner.clone() * inner)
            * Rat::from_int(2);
        prop_assert_eq!(norm_sq(&ab), expected);
    }

    #[test]
    fn inner_product_is_positive_definite(t in tensor(2)) {
        let n = norm_sq(&t);
        prop_assert!(n >= Rat::zero());
        prop_assert_eq!(n == Rat::zero(), t.is_zero());
    }
}
