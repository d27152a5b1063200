use std::sync::Arc;

use hesse_core::ellaw::{add, neg, scalar_mul, CurveContext};
use hesse_core::field::{q_eps, rat, FieldTower};
use hesse_core::groups::named::{g216, hessian_generators};
use hesse_core::groups::{generate_matrix_closure, invariance_factor_matrix, mat_inv, mat_mul};
use hesse_core::hesse::{hesse_data, PencilParameter};
use hesse_core::lattice::{embeds_finite_index, smith_normal_form, vectors_of_norm, IntLattice};
use hesse_core::poly::{MultiPoly, Poly};
use hesse_core::{Field, FieldElement, Ring};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

fn tower() -> Arc<FieldTower> {
    q_eps()
}

fn elem() -> impl Strategy<Value = FieldElement> {
    (-6i64..7, 1i64..4, -6i64..7, 1i64..4)
        .prop_map(|(a, da, b, db)| tower().from_coords(vec![rat(a, da), rat(b, db)]).unwrap())
}

fn cubic() -> impl Strategy<Value = Poly> {
    prop::collection::vec(elem(), 10).prop_map(|cs| {
        let t = tower();
        let monos: Vec<Vec<u32>> = (0..=3u32).flat_map(|a| (0..=3 - a).map(move |b| vec![a, b, 3 - a - b])).collect();
        MultiPoly::from_terms(&t, 3, monos.into_iter().zip(cs))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a.clone());
        }
    }

    #[test]
    fn embedding_is_a_homomorphism(a in elem(), b in elem()) {
        let ea = a.embed_complex(128).unwrap().value;
        let eb = b.embed_complex(128).unwrap().value;
        let eab = a.mul(&b).embed_complex(128).unwrap().value;
        let d = rug::Complex::with_val(128, &ea * &eb) - eab;
        prop_assert!(rug::Float::with_val(64, d.abs_ref()).to_f64() < 1e-30);
    }

    #[test]
    fn polynomial_ring_laws(f in cubic(), g in cubic(), h in cubic()) {
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        if !g.is_zero() {
            prop_assert_eq!(f.mul(&g).div_exact(&g), Some(f.clone()));
        }
        let text = f.to_text();
        prop_assert_eq!(Poly::parse(&text, &tower(), 3).unwrap(), f);
    }

    #[test]
    fn g216_group_axioms(i in 0usize..216, j in 0usize..216, k in 0usize..216) {
        let g = g216();
        let e = g.elements();
        let (a, b, c) = (&e[i], &e[j], &e[k]);
        prop_assert!(g.contains(&g.mul(a, b)));
        prop_assert_eq!(g.mul(&g.mul(a, b), c), g.mul(a, &g.mul(b, c)));
        let inv = mat_inv(a).unwrap();
        prop_assert!(g.contains(&inv));
        prop_assert!(g.mul(a, &inv) == g.mul(&inv, a));
    }

    #[test]
    fn invariance_factors_multiply(i in 0usize..5, j in 0usize..5) {
        // Φ∘(AB) = (Φ∘A)∘B, so factors of linear maps multiply
        let t = tower();
        let gens = hessian_generators(&t).unwrap();
        let d = hesse_data();
        for f in [&d.phi6, &d.phi9, &d.phi12] {
            let (a, b) = (gens[i].linear(), gens[j].linear());
            let ca = invariance_factor_matrix(f, a).unwrap();
            let cb = invariance_factor_matrix(f, b).unwrap();
            let cab = invariance_factor_matrix(f, &mat_mul(a, b)).unwrap();
            prop_assert_eq!(cab, ca.mul(&cb));
        }
    }

    #[test]
    fn three_torsion_law(i in 0usize..9, j in 0usize..9, k in 0usize..9, lam in 1i64..20) {
        let ctx = CurveContext::new(&PencilParameter::affine(tower().from_int(lam)), 0).unwrap();
        let (p, q, r) = (ctx.base_point(i), ctx.base_point(j), ctx.base_point(k));
        let pq = add(&ctx, &p, &q).unwrap();
        prop_assert_eq!(&pq, &add(&ctx, &q, &p).unwrap());
        prop_assert_eq!(add(&ctx, &pq, &r).unwrap(), add(&ctx, &p, &add(&ctx, &q, &r).unwrap()).unwrap());
        prop_assert_eq!(add(&ctx, &p, &neg(&ctx, &p).unwrap()).unwrap(), ctx.base_point(0));
        prop_assert_eq!(scalar_mul(&ctx, 3, &p).unwrap(), ctx.base_point(0));
        prop_assert!(ctx.index_of_base_point(&pq).is_some());
    }

    #[test]
    fn snf_product_is_abs_det(entries in prop::collection::vec(-6i64..7, 10)) {
        let mut g = vec![vec![0i64; 4]; 4];
        let mut it = entries.into_iter();
        for i in 0..4 {
            for j in i..4 {
                let v = it.next().unwrap();
                g[i][j] = v;
                g[j][i] = v;
            }
        }
        let l = IntLattice::new("r", g.clone()).unwrap();
        let snf = smith_normal_form(&g);
        let prod: BigInt = snf.iter().product();
        prop_assert_eq!(prod, l.det().abs());
        for w in snf.windows(2) {
            prop_assert!(w[0] == BigInt::from(0) && w[1] == BigInt::from(0) || (w[0] != BigInt::from(0) && (&w[1] % &w[0]) == BigInt::from(0)));
        }
        if l.det() != BigInt::from(0) {
            let order: BigInt = l.discriminant_group().unwrap().iter().product();
            prop_assert_eq!(order, l.det().abs());
        }
    }

    #[test]
    fn binary_forms(a in 1i64..6, b in -5i64..6, c in 1i64..6) {
        // positive definite binary forms: enumeration is exhaustive and embeddings are exact
        prop_assume!(4 * a * c - b * b > 0 && b % 2 == 0);
        let l = IntLattice::new("q", vec![vec![2 * a, b], vec![b, 2 * c]]).unwrap();
        for n in [2, 4, 6, 8] {
            let v = vectors_of_norm(&l, n, None).unwrap();
            let bound = v.iter().flat_map(|x| x.iter().map(|c| c.abs())).max().unwrap_or(0);
            let doubled = vectors_of_norm(&l, n, Some(2 * bound.max(4) + 4)).unwrap();
            prop_assert_eq!(v.len(), doubled.len());
        }
        let sub = IntLattice::new("9q", vec![vec![18 * a, 9 * b], vec![9 * b, 18 * c]]).unwrap();
        let e = embeds_finite_index(&sub, &l).unwrap().unwrap();
        let m = &e.matrix;
        for i in 0..2 {
            for j in 0..2 {
                let col_i = [m[0][i], m[1][i]];
                let col_j = [m[0][j], m[1][j]];
                prop_assert_eq!(l.inner(&col_i, &col_j), sub.gram[i][j]);
            }
        }
        let ratio = sub.det() / l.det();
        prop_assert_eq!(BigInt::from(e.index * e.index), ratio);
    }
}

#[test]
fn closure_is_idempotent() {
    let g = g216();
    let again = generate_matrix_closure(g.elements(), true, 2000).unwrap();
    assert_eq!(again.order(), g.order());
    assert!(g.is_subgroup(&again) && again.is_subgroup(&g));
}
