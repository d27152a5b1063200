//! Dense univariate polynomials over a field, coefficients from the constant term up.

use crate::ring::{Field, Ring};

pub fn trim<F: Ring>(mut a: Vec<F>) -> Vec<F> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub fn degree<F: Ring>(a: &[F]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

pub fn eval<F: Ring>(a: &[F], x: &F, ctx: &F::Ctx) -> F {
    a.iter().rev().fold(F::zero_in(ctx), |acc, c| acc.mul(x).add(c))
}

pub fn derivative<F: Ring>(a: &[F], ctx: &F::Ctx) -> Vec<F> {
    trim(a.iter().enumerate().skip(1).map(|(k, c)| c.mul(&F::from_i64_in(ctx, k as i64))).collect())
}

/// Quotient and remainder; panics on a zero divisor.
pub fn divrem<F: Field>(a: &[F], b: &[F], ctx: &F::Ctx) -> (Vec<F>, Vec<F>) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = b[db].inv().unwrap();
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![F::zero_in(ctx); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].mul(&lead_inv);
        for (i, bc) in b[..=db].iter().enumerate() {
            r[dr - db + i] = r[dr - db + i].sub(&c.mul(bc));
        }
        q[dr - db] = c;
        r = trim(r);
    }
    (trim(q), r)
}

/// Monic greatest common divisor (empty for gcd(0, 0)).
pub fn gcd<F: Field>(a: &[F], b: &[F], ctx: &F::Ctx) -> Vec<F> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b, ctx);
        a = b;
        b = r;
    }
    match degree(&a) {
        Some(d) => {
            let inv = a[d].inv().unwrap();
            a.iter().map(|c| c.mul(&inv)).collect()
        }
        None => a,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;

    #[test]
    fn gcd_of_products() {
        let t = q();
        let p = |v: &[i64]| v.iter().map(|&c| t.from_int(c)).collect::<Vec<_>>();
        // (x-1)(x+2) and (x-1)(x-3)
        let g = gcd(&p(&[-2, 1, 1]), &p(&[3, -4, 1]), &t);
        assert_eq!(g, p(&[-1, 1]));
        let (q_, r) = divrem(&p(&[-2, 1, 1]), &p(&[-1, 1]), &t);
        assert_eq!(q_, p(&[2, 1]));
        assert!(r.is_empty());
    }
}
