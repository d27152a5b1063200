//! Critical points and values of parameter self-maps.

use std::sync::Arc;

use rug::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldTower, Rational};
use crate::numeric::roots::poly_roots;
use crate::poly::uni;
use crate::ring::Ring;

use super::{binary_to_uni, equianharmonic_parameters, triangle_parameters, PencilParameter, RationalSelfMap};

#[derive(Clone, Debug, Serialize)]
pub struct CriticalPoint {
    pub point: PencilParameter,
    pub multiplicity: u32,
    pub value: PencilParameter,
}

#[derive(Clone, Debug, Serialize)]
pub struct DynamicsReport {
    pub map: String,
    pub wronskian: String,
    pub critical_points: Vec<CriticalPoint>,
    /// Distinct critical values, in order of first appearance.
    pub critical_values: Vec<PencilParameter>,
    /// Critical points (with multiplicity) that could not be located in the coefficient field.
    pub unresolved: u32,
}

impl DynamicsReport {
    pub fn points(&self) -> Vec<PencilParameter> {
        self.critical_points.iter().map(|c| c.point.clone()).collect()
    }

    /// Critical points form exactly the set `s`.
    pub fn points_equal(&self, s: &[PencilParameter]) -> bool {
        self.unresolved == 0 && same_set(&self.points(), s)
    }

    /// Every critical value lies in `s`.
    pub fn values_within(&self, s: &[PencilParameter]) -> bool {
        self.critical_values.iter().all(|v| s.contains(v))
    }

    /// The critical-value set equals `s`.
    pub fn values_equal(&self, s: &[PencilParameter]) -> bool {
        same_set(&self.critical_values, s)
    }
}

fn same_set(a: &[PencilParameter], b: &[PencilParameter]) -> bool {
    a.iter().all(|x| b.contains(x)) && b.iter().all(|x| a.contains(x))
}

/// Multiplicity of `r` as a root of `a` (low-to-high coefficients).
fn multiplicity(a: &[FieldElement], r: &FieldElement, t: &Arc<FieldTower>) -> u32 {
    let lin = vec![r.neg(), t.one()];
    let mut a = a.to_vec();
    let mut m = 0;
    loop {
        let (q, rem) = uni::divrem(&a, &lin, t);
        if !uni::trim(rem).is_empty() || uni::degree(&a).unwrap_or(0) == 0 {
            return m;
        }
        a = q;
        m += 1;
    }
}

/// Continued-fraction approximation with denominator at most 10⁶ and error below 1e-9.
fn approx_rational(x: f64) -> Option<Rational> {
    let (mut h0, mut h1, mut k0, mut k1) = (0i64, 1i64, 1i64, 0i64);
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        if a.abs() > 1e12 {
            return None;
        }
        let a = a as i64;
        (h0, h1) = (h1, a.checked_mul(h1)?.checked_add(h0)?);
        (k0, k1) = (k1, a.checked_mul(k1)?.checked_add(k0)?);
        if k1 > 1_000_000 {
            return None;
        }
        if (x - h1 as f64 / k1 as f64).abs() < 1e-9 {
            return Some(Rational::new(h1.into(), k1.into()));
        }
        let frac = y - a as f64;
        if frac.abs() < 1e-15 {
            return None;
        }
        y = 1.0 / frac;
    }
    None
}

/// Reads a + bε off a complex approximation (b = 0 when the tower has no ε).
fn recognize(z: &Complex, t: &Arc<FieldTower>) -> Option<FieldElement> {
    let (re, im) = (z.real().to_f64(), z.imag().to_f64());
    match t.eps() {
        Some(e) => {
            let b = approx_rational(im / (3f64.sqrt() / 2.0))?;
            let a = approx_rational(re + im / 3f64.sqrt())?;
            Some(t.from_rational(&a).add(&e.scale(&b)))
        }
        None if im.abs() < 1e-9 => Some(t.from_rational(&approx_rational(re)?)),
        None => None,
    }
}

/// Roots of a univariate polynomial lying in the rational span of 1, ε, with multiplicities.
pub fn field_roots(a: &[FieldElement], t: &Arc<FieldTower>) -> Result<(Vec<(FieldElement, u32)>, u32)> {
    let a = uni::trim(a.to_vec());
    let deg = uni::degree(&a).unwrap_or(0) as u32;
    if deg == 0 {
        return Ok((vec![], 0));
    }
    let g = uni::gcd(&a, &uni::derivative(&a, t), t);
    let (sqfree, _) = uni::divrem(&a, &g, t);
    let prec = 256;
    let coeffs: Vec<Complex> = sqfree.iter().map(|c| c.embed_complex(prec).map(|e| e.value)).collect::<Result<_>>()?;
    let mut out: Vec<(FieldElement, u32)> = vec![];
    for z in poly_roots(&coeffs, prec)? {
        if let Some(r) = recognize(&z, t) {
            if uni::eval(&a, &r, t).is_zero() && !out.iter().any(|(s, _)| *s == r) {
                let m = multiplicity(&a, &r, t);
                out.push((r, m));
            }
        }
    }
    let found: u32 = out.iter().map(|(_, m)| m).sum();
    Ok((out, deg - found))
}

/// Critical points (zeros of the Wronskian) and their images.
pub fn dynamics_report(map: &RationalSelfMap) -> Result<DynamicsReport> {
    let t = map.tower().clone();
    let w = map.wronskian();
    let mut pts: Vec<(PencilParameter, u32)> = vec![];
    let mut unresolved = 0;
    if !w.is_zero() {
        let d = w.homogeneous_degree().ok_or_else(|| Error::Invalid("wronskian is not a form".into()))?;
        let a = binary_to_uni(&w);
        let affine_deg = uni::degree(&a).unwrap_or(0) as u32;
        if affine_deg < d {
            pts.push((PencilParameter::infinity(&t), d - affine_deg));
        }
        let (roots, missing) = field_roots(&a, &t)?;
        unresolved = missing;
        pts.extend(roots.into_iter().map(|(r, m)| (PencilParameter::affine(r), m)));
    }
    let mut critical_points = vec![];
    let mut critical_values: Vec<PencilParameter> = vec![];
    for (p, m) in pts {
        let v = map.apply(&p)?;
        if !critical_values.contains(&v) {
            critical_values.push(v.clone());
        }
        critical_points.push(CriticalPoint { point: p, multiplicity: m, value: v });
    }
    let names = vec!["t0".to_string(), "t1".to_string()];
    Ok(DynamicsReport { map: map.to_text(), wronskian: w.to_text_with(&names), critical_points, critical_values, unresolved })
}

/// The two facts about 𝔥 and 𝔠: crit(𝔥) is the equianharmonic set with values among the
/// triangles, and crit(𝔠) equals its own critical-value set, the triangle set.
pub fn remark_checks(t: &Arc<FieldTower>) -> Result<(DynamicsReport, DynamicsReport, bool, bool)> {
    let h = dynamics_report(&super::hessian_map(t))?;
    let c = dynamics_report(&super::cayleyan_map(t))?;
    let eq = equianharmonic_parameters(t);
    let tri = triangle_parameters(t);
    let h_ok = h.points_equal(&eq) && h.values_within(&tri);
    let c_ok = c.points_equal(&tri) && c.values_equal(&tri);
    Ok((h, c, h_ok, c_ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q_eps;

    #[test]
    fn hessian_and_cayleyan() {
        let t = q_eps();
        let (h, c, h_ok, c_ok) = remark_checks(&t).unwrap();
        assert!(h_ok, "{h:?}");
        assert!(c_ok, "{c:?}");
        assert!(h.critical_points.iter().all(|p| p.multiplicity == 1));
        assert_eq!(c.critical_points.len(), 4);
    }

    #[test]
    fn identity_has_no_critical_points() {
        let r = dynamics_report(&RationalSelfMap::identity(&q_eps())).unwrap();
        assert!(r.critical_points.is_empty() && r.unresolved == 0);
    }

    #[test]
    fn repeated_roots() {
        let t = q_eps();
        let a: Vec<FieldElement> = [-2, 5, -4, 1].iter().map(|&n| t.from_int(n)).collect(); // (x-1)^2 (x-2)
        let (r, missing) = field_roots(&a, &t).unwrap();
        assert_eq!(missing, 0);
        assert!(r.contains(&(t.from_int(1), 2)) && r.contains(&(t.from_int(2), 1)));
    }
}
