//! The Hesse pencil `t0·S + t1·T`, S = x³+y³+z³, T = xyz, its named curves,
//! parameter maps and identity checks.

mod data;
pub mod dual;
pub mod dynamics;
pub mod halphen;
pub mod identities;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldTower};
use crate::plane::PlaneCurve;
use crate::poly::uni;
use crate::poly::{MultiPoly, Poly};
use crate::ring::{Field, Ring};

pub use data::{hesse_data, HesseData, Triangle};

/// Point (t0 : t1) of the parameter line, first nonzero entry scaled to 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PencilParameter {
    t: [FieldElement; 2],
}

impl PencilParameter {
    pub fn new(t0: FieldElement, t1: FieldElement) -> Result<Self> {
        if t0.is_zero() {
            if t1.is_zero() {
                return Err(Error::ZeroInput("pencil parameter"));
            }
            let one = t1.tower().one();
            let zero = t1.tower().zero();
            return Ok(PencilParameter { t: [zero, one] });
        }
        let l = t1.div(&t0).unwrap();
        Ok(PencilParameter { t: [t0.tower().one(), l] })
    }

    /// The affine parameter λ = t1/t0.
    pub fn affine(lambda: FieldElement) -> Self {
        PencilParameter { t: [lambda.tower().one(), lambda] }
    }

    pub fn infinity(t: &Arc<FieldTower>) -> Self {
        PencilParameter { t: [t.zero(), t.one()] }
    }

    pub fn parse(t: &Arc<FieldTower>, s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "oo" | "∞" => Ok(PencilParameter::infinity(t)),
            v => Ok(PencilParameter::affine(t.parse(v)?)),
        }
    }

    pub fn t0(&self) -> &FieldElement {
        &self.t[0]
    }

    pub fn t1(&self) -> &FieldElement {
        &self.t[1]
    }

    pub fn coords(&self) -> &[FieldElement; 2] {
        &self.t
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        self.t[0].tower()
    }

    pub fn lambda(&self) -> Option<&FieldElement> {
        (!self.t[0].is_zero()).then_some(&self.t[1])
    }

    pub fn is_infinity(&self) -> bool {
        self.t[0].is_zero()
    }

    pub fn lift_to(&self, t: &Arc<FieldTower>) -> Result<Self> {
        Ok(PencilParameter { t: [self.t[0].lift_to(t)?, self.t[1].lift_to(t)?] })
    }

    pub fn to_text(&self) -> String {
        match self.lambda() {
            Some(l) => l.to_text(),
            None => "inf".into(),
        }
    }
}

impl fmt::Debug for PencilParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for PencilParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for PencilParameter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_text().serialize(s)
    }
}

/// S = x³+y³+z³ and T = xyz over a tower.
pub fn s_t(t: &Arc<FieldTower>) -> (Poly, Poly) {
    (Poly::parse("x^3+y^3+z^3", t, 3).unwrap(), Poly::parse("x*y*z", t, 3).unwrap())
}

/// The member t0·S + t1·T.
pub fn pencil_member(p: &PencilParameter) -> PlaneCurve {
    let (s, t) = s_t(p.tower());
    PlaneCurve::new(s.scale(p.t0()).add(&t.scale(p.t1()))).expect("pencil members are nonzero cubics")
}

/// f(1, λ) as coefficients of λ^0, λ^1, …
pub fn binary_to_uni(f: &Poly) -> Vec<FieldElement> {
    let d = f.homogeneous_degree().unwrap_or(0);
    let mut out = vec![f.coeff_ctx().zero(); d as usize + 1];
    for (m, c) in f.terms() {
        out[m.0[1] as usize] = c.clone();
    }
    uni::trim(out)
}

/// Homogenizes Σ a_i λ^i to degree d in (t0, t1).
pub fn uni_to_binary(a: &[FieldElement], d: u32, t: &Arc<FieldTower>) -> Poly {
    MultiPoly::from_terms(t, 2, a.iter().enumerate().map(|(i, c)| (vec![d - i as u32, i as u32], c.clone())))
}

/// λ ↦ N(t0,t1)/D(t0,t1); acts on parameters by (t0, t1) ↦ (D, N).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalSelfMap {
    num: Poly,
    den: Poly,
}

impl RationalSelfMap {
    /// Builds the map, cancelling common factors of numerator and denominator.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if num.nvars() != 2 || den.nvars() != 2 {
            return Err(Error::Arity { expected: 2, got: num.nvars().max(den.nvars()) });
        }
        if num.is_zero() && den.is_zero() {
            return Err(Error::ZeroInput("rational map"));
        }
        let dn = num.homogeneous_degree();
        let dd = den.homogeneous_degree();
        match (dn, dd) {
            (Some(a), Some(b)) if a == b => {}
            (Some(_), None) if den.is_zero() => {}
            (None, Some(_)) if num.is_zero() => {}
            _ => return Err(Error::Invalid("numerator and denominator must be forms of equal degree".into())),
        }
        let t = num.coeff_ctx().clone();
        // common power of t0
        let k = [&num, &den]
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| f.terms().map(|(m, _)| m.0[0]).min().unwrap())
            .min()
            .unwrap();
        let t0k = Poly::monomial(t.one(), vec![k, 0]);
        let (num, den) = (num.div_exact(&t0k).unwrap_or(num.clone()), den.div_exact(&t0k).unwrap_or(den.clone()));
        let g = uni::gcd(&binary_to_uni(&num), &binary_to_uni(&den), &t);
        let dg = uni::degree(&g).unwrap_or(0) as u32;
        if dg == 0 {
            return Ok(RationalSelfMap { num, den });
        }
        let gb = uni_to_binary(&g, dg, &t);
        Ok(RationalSelfMap { num: num.div_exact(&gb).unwrap(), den: den.div_exact(&gb).unwrap() })
    }

    /// Map given by its action (t0, t1) ↦ (a, b) on pairs.
    pub fn from_pair(t0_image: Poly, t1_image: Poly) -> Result<Self> {
        RationalSelfMap::new(t1_image, t0_image)
    }

    pub fn identity(t: &Arc<FieldTower>) -> Self {
        let v = MultiPoly::vars(t, 2);
        RationalSelfMap { num: v[1].clone(), den: v[0].clone() }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn degree(&self) -> u32 {
        self.num.homogeneous_degree().or(self.den.homogeneous_degree()).unwrap_or(0)
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        self.num.coeff_ctx()
    }

    pub fn apply(&self, p: &PencilParameter) -> Result<PencilParameter> {
        let t = self.tower();
        let q = p.lift_to(t)?;
        PencilParameter::new(self.den.eval(q.coords()), self.num.eval(q.coords()))
    }

    /// self ∘ other.
    pub fn compose(&self, other: &RationalSelfMap) -> Result<RationalSelfMap> {
        let imgs = [other.den.clone(), other.num.clone()];
        RationalSelfMap::new(self.num.substitute(&imgs)?, self.den.substitute(&imgs)?)
    }

    /// Equality as maps of P¹ (pairs proportional by a constant).
    pub fn same_map(&self, o: &RationalSelfMap) -> bool {
        self.num.mul(&o.den) == self.den.mul(&o.num)
    }

    /// W = ∂N/∂t0·∂D/∂t1 − ∂N/∂t1·∂D/∂t0, vanishing at the critical points.
    pub fn wronskian(&self) -> Poly {
        let n = self.num.gradient();
        let d = self.den.gradient();
        n[0].mul(&d[1]).sub(&n[1].mul(&d[0]))
    }

    pub fn to_text(&self) -> String {
        let names = vec!["t0".to_string(), "t1".to_string()];
        format!("({}) / ({})", self.num.to_text_with(&names), self.den.to_text_with(&names))
    }
}

/// 𝔥(λ) = −(108+λ³)/(3λ²), the parameter of the Hessian curve.
pub fn hessian_map(t: &Arc<FieldTower>) -> RationalSelfMap {
    let n = Poly::parse("-(108*u^3+v^3)", t, 2).unwrap();
    let d = Poly::parse("3*u*v^2", t, 2).unwrap();
    RationalSelfMap::new(n, d).unwrap()
}

/// 𝔠(λ) = (54−λ³)/(9λ), the parameter of the Cayleyan curve.
pub fn cayleyan_map(t: &Arc<FieldTower>) -> RationalSelfMap {
    let n = Poly::parse("54*u^3-v^3", t, 2).unwrap();
    let d = Poly::parse("9*u^2*v", t, 2).unwrap();
    RationalSelfMap::new(n, d).unwrap()
}

pub fn hessian_parameter(p: &PencilParameter) -> PencilParameter {
    hessian_map(p.tower()).apply(p).expect("total projective formula")
}

pub fn cayleyan_parameter(p: &PencilParameter) -> PencilParameter {
    cayleyan_map(p.tower()).apply(p).expect("total projective formula")
}

/// Binary forms A, B in (u0, u1) over Q(ε).
pub fn weierstrass_forms(t: &Arc<FieldTower>) -> (Poly, Poly) {
    (
        Poly::parse("12*v*(u^3-v^3)", t, 2).unwrap(),
        Poly::parse("2*(u^6-20*u^3*v^3-8*v^6)", t, 2).unwrap(),
    )
}

/// Weierstrass invariants of a member at (u0, u1) = (t0, t1/6).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeierstrassData {
    pub a: String,
    pub b: String,
    pub delta: String,
    /// None for singular members.
    pub j: Option<String>,
    #[serde(skip)]
    pub values: [FieldElement; 3],
    #[serde(skip)]
    pub j_value: Option<FieldElement>,
}

pub fn weierstrass_data(p: &PencilParameter) -> WeierstrassData {
    let t = p.tower();
    let (fa, fb) = weierstrass_forms(t);
    let u = [p.t0().clone(), p.t1().mul(&t.from_int(6).inv().unwrap())];
    let a = fa.eval(&u);
    let b = fb.eval(&u);
    let a3 = a.pow(3).mul(&t.from_int(4));
    let delta = a3.add(&b.mul(&b).mul(&t.from_int(27)));
    let j = (!delta.is_zero()).then(|| a3.mul(&t.from_int(1728)).div(&delta).unwrap());
    WeierstrassData {
        a: a.to_text(),
        b: b.to_text(),
        delta: delta.to_text(),
        j: j.as_ref().map(|x| x.to_text()),
        values: [a, b, delta],
        j_value: j,
    }
}

/// Parameters of the equianharmonic members: 0, 6, 6ε, 6ε².
pub fn equianharmonic_parameters(t: &Arc<FieldTower>) -> Vec<PencilParameter> {
    ["0", "6", "6*eps", "6*eps^2"].iter().map(|s| PencilParameter::parse(t, s).unwrap()).collect()
}

/// Parameters of the triangles T1..T4: ∞, −3, −3ε, −3ε².
pub fn triangle_parameters(t: &Arc<FieldTower>) -> Vec<PencilParameter> {
    ["inf", "-3", "-3*eps", "-3*eps^2"].iter().map(|s| PencilParameter::parse(t, s).unwrap()).collect()
}

/// Parameters of the six harmonic members, in a tower containing ε and i:
/// 3(√3−1)ε^k and −3(1+√3)ε^k.
pub fn harmonic_parameters(t: &Arc<FieldTower>) -> Result<Vec<PencilParameter>> {
    let r3 = crate::field::sqrt3(t).ok_or(Error::TowerMismatch)?;
    let e = t.eps().ok_or(Error::TowerMismatch)?;
    let a = r3.sub(&t.one()).mul(&t.from_int(3));
    let b = r3.add(&t.one()).mul(&t.from_int(-3));
    let mut out = Vec::new();
    for base in [a, b] {
        for k in 0..3 {
            out.push(PencilParameter::affine(base.mul(&e.pow(k))));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q_eps, q_eps_i};

    fn par(s: &str) -> PencilParameter {
        PencilParameter::parse(&q_eps(), s).unwrap()
    }

    #[test]
    fn members() {
        assert_eq!(pencil_member(&par("inf")).equation(), &Poly::xyz("x*y*z"));
        assert_eq!(pencil_member(&par("0")).equation(), &Poly::xyz("x^3+y^3+z^3"));
        let t2 = Poly::xyz("(x+y+z)*(x+eps*y+eps^2*z)*(x+eps^2*y+eps*z)");
        assert_eq!(pencil_member(&par("-3")).equation(), &t2);
    }

    #[test]
    fn parameter_maps() {
        assert_eq!(hessian_parameter(&par("0")), par("inf"));
        assert_eq!(hessian_parameter(&par("inf")), par("inf"));
        assert_eq!(hessian_parameter(&par("-3")), par("-3"));
        assert_eq!(hessian_parameter(&par("6")), par("-3"));
        assert_eq!(cayleyan_parameter(&par("3")), par("1"));
        assert_eq!(cayleyan_parameter(&par("-3")), par("-3"));
        assert_eq!(hessian_parameter(&par("-6")), par("1"));
    }

    #[test]
    fn weierstrass_examples() {
        let w = weierstrass_data(&par("0"));
        assert_eq!((w.a.as_str(), w.b.as_str(), w.delta.as_str()), ("0", "2", "108"));
        let w = weierstrass_data(&par("6"));
        assert_eq!((w.a.as_str(), w.b.as_str(), w.delta.as_str()), ("0", "-54", "78732"));
        assert_eq!(w.j.as_deref(), Some("0"));
        let w = weierstrass_data(&par("inf"));
        assert_eq!(w.delta, "0");
        assert!(w.j.is_none());
    }

    #[test]
    fn harmonic_members_have_j_1728() {
        let t = q_eps_i();
        for p in harmonic_parameters(&t).unwrap() {
            assert_eq!(weierstrass_data(&p).j.as_deref(), Some("1728"), "{p}");
        }
    }

    #[test]
    fn self_map_cancels() {
        let t = q_eps();
        let m = RationalSelfMap::new(Poly::parse("u*v^2-u^2*v", &t, 2).unwrap(), Poly::parse("u^2*v-u^3", &t, 2).unwrap()).unwrap();
        assert_eq!(m.degree(), 1);
        assert!(m.same_map(&RationalSelfMap::identity(&t)));
        assert_eq!(RationalSelfMap::identity(&t).wronskian().total_degree(), Some(0));
    }
}
