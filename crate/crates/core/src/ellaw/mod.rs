//! Chord-tangent group law on smooth members of the pencil.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldTower;
use crate::groups::{named::hessian_generators, point_permutation};
use crate::hesse::{hesse_data, pencil_member, weierstrass_data, PencilParameter};
use crate::plane::{restrict_to_line, tangent_line, PlaneCurve, ProjPoint};
use crate::poly::{MultiPoly, Poly};
use crate::ring::Ring;

pub mod numeric;

/// A smooth member with a chosen base point as origin.
#[derive(Clone, Debug)]
pub struct CurveContext {
    pub lambda: PencilParameter,
    pub curve: PlaneCurve,
    pub origin_index: usize,
    pub origin: ProjPoint,
    /// The nine base points in the context's tower.
    pub base_points: Vec<ProjPoint>,
}

impl CurveContext {
    pub fn new(lambda: &PencilParameter, origin_index: usize) -> Result<Self> {
        let d = hesse_data();
        if origin_index >= 9 {
            return Err(Error::Invalid(format!("origin index {origin_index} out of range")));
        }
        let (lambda, base_points) = match lambda.lift_to(&d.tower) {
            Ok(l) => (l, d.base_points.clone()),
            Err(_) => (lambda.clone(), d.base_points.iter().map(|p| p.lift_to(lambda.tower())).collect::<Result<Vec<_>>>()?),
        };
        if weierstrass_data(&lambda).j_value.is_none() {
            return Err(Error::SingularMember);
        }
        Ok(CurveContext { curve: pencil_member(&lambda), origin: base_points[origin_index].clone(), origin_index, base_points, lambda })
    }

    /// Affine parameter λ (member S + λT).
    pub fn affine(lambda: crate::field::FieldElement, origin_index: usize) -> Result<Self> {
        CurveContext::new(&PencilParameter::affine(lambda), origin_index)
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        self.lambda.tower()
    }

    pub fn point(&self, p: &ProjPoint) -> Result<CurvePoint> {
        let p = p.lift_to(self.tower())?;
        if !self.curve.contains(&p) {
            return Err(Error::NotOnCurve);
        }
        Ok(CurvePoint { point: p })
    }

    pub fn base_point(&self, i: usize) -> CurvePoint {
        CurvePoint { point: self.base_points[i].clone() }
    }

    pub fn index_of_base_point(&self, p: &CurvePoint) -> Option<usize> {
        self.base_points.iter().position(|q| *q == p.point)
    }
}

/// A point of the member, checked on construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvePoint {
    pub point: ProjPoint,
}

fn linear_factor(u0: &crate::field::FieldElement, v0: &crate::field::FieldElement) -> Poly {
    let uv = MultiPoly::vars(u0.tower(), 2);
    uv[0].scale(v0).sub(&uv[1].scale(u0))
}

/// Third point of the member on the chord pq (tangent at p when p = q).
pub fn third_intersection(ctx: &CurveContext, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
    let c = &ctx.curve;
    let (line, known) = if p == q {
        (tangent_line(c, &p.point)?, vec![&p.point, &p.point])
    } else {
        if !c.is_smooth_at(&p.point) || !c.is_smooth_at(&q.point) {
            return Err(Error::SingularPoint);
        }
        (p.point.join(&q.point)?, vec![&p.point, &q.point])
    };
    let r = restrict_to_line(c, &line)?;
    let mut form = r.form.clone();
    for k in known {
        let [u, v] = r.parameter_of(k).ok_or(Error::NotOnCurve)?;
        form = form.div_exact(&linear_factor(&u, &v)).ok_or(Error::NotOnCurve)?;
    }
    // remaining linear factor a·u + b·v vanishes at (b : −a)
    let a = form.coeff(&[1, 0]);
    let b = form.coeff(&[0, 1]);
    Ok(CurvePoint { point: r.point_at(&b, &a.neg())? })
}

pub fn add(ctx: &CurveContext, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
    let r = third_intersection(ctx, p, q)?;
    third_intersection(ctx, &CurvePoint { point: ctx.origin.clone() }, &r)
}

pub fn neg(ctx: &CurveContext, p: &CurvePoint) -> Result<CurvePoint> {
    let o = CurvePoint { point: ctx.origin.clone() };
    let oo = third_intersection(ctx, &o, &o)?;
    third_intersection(ctx, p, &oo)
}

pub fn scalar_mul(ctx: &CurveContext, n: i64, p: &CurvePoint) -> Result<CurvePoint> {
    let mut base = if n < 0 { neg(ctx, p)? } else { p.clone() };
    let mut k = n.unsigned_abs();
    let mut acc = CurvePoint { point: ctx.origin.clone() };
    while k > 0 {
        if k & 1 == 1 {
            acc = add(ctx, &acc, &base)?;
        }
        k >>= 1;
        if k > 0 {
            base = add(ctx, &base, &base)?;
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionTable {
    pub lambda: PencilParameter,
    /// table[i][j] = index of p_i ⊕ p_j (origin p0).
    pub table: Vec<Vec<usize>>,
    /// table agrees with addition of the (Z/3)² labels.
    pub matches_labels: bool,
    /// 3·p_i = p0 for every i.
    pub all_three_torsion: bool,
}

/// Addition table of the nine base points with origin p0.
pub fn three_torsion_table(lambda: &PencilParameter) -> Result<TorsionTable> {
    let ctx = CurveContext::new(lambda, 0)?;
    let labels = &hesse_data().labels;
    let mut table = vec![vec![0; 9]; 9];
    for i in 0..9 {
        for j in 0..9 {
            let s = add(&ctx, &ctx.base_point(i), &ctx.base_point(j))?;
            table[i][j] = ctx.index_of_base_point(&s).ok_or_else(|| Error::Invalid("sum of base points is not a base point".into()))?;
        }
    }
    let lab_add = |a: (u8, u8), b: (u8, u8)| ((a.0 + b.0) % 3, (a.1 + b.1) % 3);
    let matches_labels = (0..9).all(|i| (0..9).all(|j| labels[table[i][j]] == lab_add(labels[i], labels[j])));
    let all_three_torsion = (0..9).map(|i| scalar_mul(&ctx, 3, &ctx.base_point(i))).all(|r| r.is_ok_and(|r| r.point == ctx.origin));
    Ok(TorsionTable { lambda: ctx.lambda.clone(), table, matches_labels, all_three_torsion })
}

#[derive(Clone, Debug, Serialize)]
pub struct TranslationCheck {
    /// Permutation of base points induced by g1 and g2 acting on points.
    pub g1: Vec<usize>,
    pub g2: Vec<usize>,
    /// k with g = translation by p_k, if g acts as a translation.
    pub g1_translation: Option<usize>,
    pub g2_translation: Option<usize>,
    /// Literal reading: g1 ↦ p3 and g2 ↦ p1.
    pub matches_printed: bool,
    /// g1 ↦ ±p3 and g2 ↦ ±p1 (the same translation subgroups).
    pub matches_up_to_sign: bool,
}

/// g1 and g2 act on base points as translations by p3 and p1 in the group law with origin p0.
pub fn translation_compatibility(lambda: &PencilParameter) -> Result<TranslationCheck> {
    let ctx = CurveContext::new(lambda, 0)?;
    let g = hessian_generators(&hesse_data().tower)?;
    let d = hesse_data();
    let g1 = point_permutation(&g[1], &d.base_points)?;
    let g2 = point_permutation(&g[2], &d.base_points)?;
    let translation = |k: usize| -> Result<Vec<usize>> {
        (0..9).map(|i| add(&ctx, &ctx.base_point(i), &ctx.base_point(k)).map(|s| ctx.index_of_base_point(&s).unwrap())).collect()
    };
    // a translation is determined by the image of the origin
    let as_translation = |perm: &Vec<usize>| -> Result<Option<usize>> { Ok((translation(perm[0])? == *perm).then_some(perm[0])) };
    let (t1, t2) = (as_translation(&g1)?, as_translation(&g2)?);
    Ok(TranslationCheck {
        matches_printed: t1 == Some(3) && t2 == Some(1),
        matches_up_to_sign: matches!(t1, Some(3 | 6)) && matches!(t2, Some(1 | 2)),
        g1_translation: t1,
        g2_translation: t2,
        g1,
        g2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, q_eps};

    fn ctx(l: i64) -> CurveContext {
        CurveContext::affine(q().from_int(l), 0).unwrap()
    }

    #[test]
    fn chords_and_flexes() {
        let c = ctx(1);
        let p = |i| c.base_point(i);
        assert_eq!(third_intersection(&c, &p(0), &p(1)).unwrap(), p(2));
        for i in 0..9 {
            assert_eq!(third_intersection(&c, &p(i), &p(i)).unwrap(), p(i));
        }
        assert_eq!(add(&c, &p(1), &p(3)).unwrap(), p(4));
        assert_eq!(add(&c, &p(5), &p(0)).unwrap(), p(5));
    }

    #[test]
    fn tables() {
        for l in [1, 2] {
            let t = three_torsion_table(&PencilParameter::affine(q().from_int(l))).unwrap();
            assert!(t.matches_labels && t.all_three_torsion);
        }
        assert!(matches!(three_torsion_table(&PencilParameter::affine(q().from_int(-3))), Err(Error::SingularMember)));
    }

    #[test]
    fn translations() {
        let r = translation_compatibility(&PencilParameter::affine(q().from_int(1))).unwrap();
        assert_eq!((r.g1_translation, r.g2_translation), (Some(6), Some(1)));
        assert!(r.matches_up_to_sign && !r.matches_printed);
    }

    #[test]
    fn generic_points() {
        // (1 : 2 : 3) lies on S − 6T = 0: S = 36, T = 6
        let t = q_eps();
        let c = CurveContext::affine(t.from_int(-6), 0).unwrap();
        let a = c.point(&ProjPoint::parse(&t, ["1", "2", "3"]).unwrap()).unwrap();
        let b = third_intersection(&c, &a, &c.base_point(0)).unwrap();
        assert!(c.curve.contains(&b.point) && b != a);
        let d = add(&c, &a, &a).unwrap();
        assert!(c.curve.contains(&d.point));
        // associativity with a base point
        let p1 = c.base_point(1);
        let l = add(&c, &add(&c, &a, &b).unwrap(), &p1).unwrap();
        let r = add(&c, &a, &add(&c, &b, &p1).unwrap()).unwrap();
        assert_eq!(l, r);
        assert_eq!(add(&c, &a, &neg(&c, &a).unwrap()).unwrap().point, c.origin);
        assert_eq!(scalar_mul(&c, -2, &a).unwrap(), neg(&c, &d).unwrap());
    }
}
