//! Points, lines and curves in the projective plane over a number field.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldTower};
use crate::poly::{MultiPoly, Poly};
use crate::ring::{Field, Ring};

fn canonical(mut v: [FieldElement; 3]) -> Result<[FieldElement; 3]> {
    let k = v.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroInput("projective coordinates"))?;
    let inv = v[k].inv().unwrap();
    for c in v.iter_mut() {
        *c = c.mul(&inv);
    }
    Ok(v)
}

fn cross(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> [FieldElement; 3] {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

fn dot(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> FieldElement {
    a[0].mul(&b[0]).add(&a[1].mul(&b[1])).add(&a[2].mul(&b[2]))
}

fn coords_text(v: &[FieldElement; 3], sep: &str) -> String {
    v.iter().map(|c| c.to_text()).collect::<Vec<_>>().join(sep)
}

/// Point of P², first nonzero coordinate scaled to 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [FieldElement; 3],
}

impl ProjPoint {
    pub fn new(coords: [FieldElement; 3]) -> Result<Self> {
        Ok(ProjPoint { coords: canonical(coords)? })
    }

    /// Point from element text, e.g. `["0", "1", "-eps"]`.
    pub fn parse(t: &Arc<FieldTower>, c: [&str; 3]) -> Result<Self> {
        ProjPoint::new([t.parse(c[0])?, t.parse(c[1])?, t.parse(c[2])?])
    }

    pub fn coords(&self) -> &[FieldElement; 3] {
        &self.coords
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        self.coords[0].tower()
    }

    pub fn lift_to(&self, t: &Arc<FieldTower>) -> Result<Self> {
        Ok(ProjPoint { coords: [self.coords[0].lift_to(t)?, self.coords[1].lift_to(t)?, self.coords[2].lift_to(t)?] })
    }

    /// Line through two distinct points.
    pub fn join(&self, o: &ProjPoint) -> Result<ProjLine> {
        ProjLine::new(cross(&self.coords, &o.coords))
    }

    pub fn to_text(&self) -> String {
        format!("({})", coords_text(&self.coords, " : "))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords.iter().map(|c| c.to_text()).collect();
        v.serialize(s)
    }
}

/// Line ax + by + cz = 0, canonicalized like points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjLine {
    coeffs: [FieldElement; 3],
}

impl ProjLine {
    pub fn new(coeffs: [FieldElement; 3]) -> Result<Self> {
        Ok(ProjLine { coeffs: canonical(coeffs)? })
    }

    pub fn parse(t: &Arc<FieldTower>, c: [&str; 3]) -> Result<Self> {
        ProjLine::new([t.parse(c[0])?, t.parse(c[1])?, t.parse(c[2])?])
    }

    /// Line from a linear form in x, y, z.
    pub fn from_form(f: &Poly) -> Result<Self> {
        if f.nvars() != 3 || f.homogeneous_degree() != Some(1) {
            return Err(Error::Invalid("not a linear form".into()));
        }
        ProjLine::new([f.coeff(&[1, 0, 0]), f.coeff(&[0, 1, 0]), f.coeff(&[0, 0, 1])])
    }

    pub fn coeffs(&self) -> &[FieldElement; 3] {
        &self.coeffs
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        dot(&self.coeffs, &p.coords).is_zero()
    }

    pub fn meet(&self, o: &ProjLine) -> Result<ProjPoint> {
        ProjPoint::new(cross(&self.coeffs, &o.coeffs))
    }

    pub fn form(&self) -> Poly {
        let t = self.coeffs[0].tower();
        let v = MultiPoly::vars(t, 3);
        v[0].scale(&self.coeffs[0]).add(&v[1].scale(&self.coeffs[1])).add(&v[2].scale(&self.coeffs[2]))
    }

    /// Two points spanning the line: for pivot k (first nonzero coefficient)
    /// and each other index j, the point e_j − (c_j/c_k)·e_k.
    pub fn basis(&self) -> [ProjPoint; 2] {
        let t = self.coeffs[0].tower().clone();
        let k = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let mut out = Vec::with_capacity(2);
        for j in (0..3).filter(|&j| j != k) {
            let mut c = [t.zero(), t.zero(), t.zero()];
            c[j] = t.one();
            c[k] = self.coeffs[j].div(&self.coeffs[k]).unwrap().neg();
            out.push(ProjPoint::new(c).unwrap());
        }
        [out[0].clone(), out[1].clone()]
    }

    pub fn to_text(&self) -> String {
        self.form().to_text()
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", coords_text(&self.coeffs, " : "))
    }
}

impl Serialize for ProjLine {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_text().serialize(s)
    }
}

/// Plane curve given by a nonzero homogeneous form in x, y, z.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneCurve {
    equation: Poly,
    degree: u32,
}

impl PlaneCurve {
    pub fn new(equation: Poly) -> Result<Self> {
        if equation.nvars() != 3 {
            return Err(Error::Arity { expected: 3, got: equation.nvars() });
        }
        if equation.is_zero() {
            return Err(Error::ZeroInput("curve equation"));
        }
        let degree = equation.homogeneous_degree().ok_or(Error::Invalid("curve equation is not homogeneous".into()))?;
        Ok(PlaneCurve { equation, degree })
    }

    pub fn equation(&self) -> &Poly {
        &self.equation
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn eval(&self, p: &ProjPoint) -> FieldElement {
        self.equation.eval(p.coords())
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }

    pub fn gradient_at(&self, p: &ProjPoint) -> [FieldElement; 3] {
        let g = self.equation.gradient();
        [g[0].eval(p.coords()), g[1].eval(p.coords()), g[2].eval(p.coords())]
    }

    pub fn is_smooth_at(&self, p: &ProjPoint) -> bool {
        self.gradient_at(p).iter().any(|c| !c.is_zero())
    }
}

/// Local type of a point on a plane curve.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SingularityClass {
    Smooth,
    Node,
    Cusp,
    Higher,
}

/// Tangent line of C at a smooth point p: the gradient of the equation at p.
pub fn tangent_line(c: &PlaneCurve, p: &ProjPoint) -> Result<ProjLine> {
    if !c.contains(p) {
        return Err(Error::NotOnCurve);
    }
    ProjLine::new(c.gradient_at(p)).map_err(|_| Error::SingularPoint)
}

/// Local expansion of C at p in the affine chart of p's first nonzero
/// coordinate, p moved to the origin; variables (u, v) are the two other coordinates.
pub fn local_expansion(c: &PlaneCurve, p: &ProjPoint) -> Poly {
    let t = p.tower();
    let k = p.coords().iter().position(|x| !x.is_zero()).unwrap();
    let uv = MultiPoly::vars(t, 2);
    let mut imgs = Vec::with_capacity(3);
    let mut next = 0;
    for j in 0..3 {
        if j == k {
            imgs.push(MultiPoly::constant(t.one(), 2));
        } else {
            imgs.push(uv[next].add(&MultiPoly::constant(p.coords()[j].clone(), 2)));
            next += 1;
        }
    }
    c.equation().substitute(&imgs).expect("three images")
}

fn graded_part(f: &Poly, d: u32) -> Poly {
    let t = f.coeff_ctx();
    MultiPoly::from_terms(t, f.nvars(), f.terms().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.0.clone(), c.clone())))
}

/// Smooth / node / cusp / higher from the quadratic and cubic parts of the local expansion.
pub fn classify_point(c: &PlaneCurve, p: &ProjPoint) -> Result<SingularityClass> {
    if !c.contains(p) {
        return Err(Error::NotOnCurve);
    }
    if c.is_smooth_at(p) {
        return Ok(SingularityClass::Smooth);
    }
    let f = local_expansion(c, p);
    let q = graded_part(&f, 2);
    if q.is_zero() {
        return Ok(SingularityClass::Higher);
    }
    let a = q.coeff(&[2, 0]);
    let b = q.coeff(&[1, 1]);
    let cc = q.coeff(&[0, 2]);
    let four = FieldElement::from_i64_in(a.tower(), 4);
    if !b.mul(&b).sub(&four.mul(&a).mul(&cc)).is_zero() {
        return Ok(SingularityClass::Node);
    }
    // q is a nonzero square ℓ²; ℓ vanishes at `root`
    let root = if a.is_zero() {
        [a.tower().one(), a.tower().zero()]
    } else {
        let two = a.add(&a);
        [b.div(&two).unwrap().neg(), a.tower().one()]
    };
    let f3 = graded_part(&f, 3);
    Ok(if f3.eval(&root).is_zero() { SingularityClass::Higher } else { SingularityClass::Cusp })
}

/// Exact point-line incidences; rows are points, columns lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceTable {
    pub matrix: Vec<Vec<bool>>,
    /// Number of lines through each point.
    pub point_counts: Vec<usize>,
    /// Number of points on each line.
    pub line_counts: Vec<usize>,
}

impl IncidenceTable {
    /// (p_k, ℓ_k) type if uniform: every line has p points and every point lies on ℓ lines.
    pub fn configuration_type(&self) -> Option<(usize, usize)> {
        let p = *self.line_counts.first()?;
        let l = *self.point_counts.first()?;
        (self.line_counts.iter().all(|&c| c == p) && self.point_counts.iter().all(|&c| c == l)).then_some((p, l))
    }
}

pub fn incidence_table(points: &[ProjPoint], lines: &[ProjLine]) -> IncidenceTable {
    let matrix: Vec<Vec<bool>> = points.iter().map(|p| lines.iter().map(|l| l.contains(p)).collect()).collect();
    let point_counts = matrix.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    let line_counts = (0..lines.len()).map(|j| matrix.iter().filter(|r| r[j]).count()).collect();
    IncidenceTable { matrix, point_counts, line_counts }
}

/// A curve restricted to a line: binary form in (u, v) for the point u·b0 + v·b1.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub form: Poly,
    pub basis: [ProjPoint; 2],
}

impl Restriction {
    /// Coordinates (u : v) of a point of the line in the basis, if it lies on it.
    pub fn parameter_of(&self, p: &ProjPoint) -> Option<[FieldElement; 2]> {
        let (b0, b1) = (self.basis[0].coords(), self.basis[1].coords());
        // p = u b0 + v b1; solve with the 2×2 minor having nonzero determinant
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let d = b0[i].mul(&b1[j]).sub(&b0[j].mul(&b1[i]));
            if d.is_zero() {
                continue;
            }
            let pc = p.coords();
            let u = pc[i].mul(&b1[j]).sub(&pc[j].mul(&b1[i])).div(&d).unwrap();
            let v = b0[i].mul(&pc[j]).sub(&b0[j].mul(&pc[i])).div(&d).unwrap();
            let k = 3 - i - j;
            let expect = u.mul(&b0[k]).add(&v.mul(&b1[k]));
            return (expect == pc[k]).then_some([u, v]);
        }
        None
    }

    /// Multiplicity of the point as a root of the restricted form.
    pub fn multiplicity_at(&self, p: &ProjPoint) -> Option<u32> {
        let [u, v] = self.parameter_of(p)?;
        Some(root_multiplicity(&self.form, &u, &v))
    }

    /// Point of the line with parameter (u : v).
    pub fn point_at(&self, u: &FieldElement, v: &FieldElement) -> Result<ProjPoint> {
        let (b0, b1) = (self.basis[0].coords(), self.basis[1].coords());
        ProjPoint::new([0, 1, 2].map(|k| u.mul(&b0[k]).add(&v.mul(&b1[k]))))
    }
}

/// Largest k with (v0·u − u0·v)^k dividing the binary form f.
pub fn root_multiplicity(f: &Poly, u0: &FieldElement, v0: &FieldElement) -> u32 {
    let t = u0.tower();
    let uv = MultiPoly::vars(t, 2);
    let lin = uv[0].scale(v0).sub(&uv[1].scale(u0));
    let mut g = f.clone();
    let mut k = 0;
    while !g.is_zero() {
        match g.div_exact(&lin) {
            Some(q) => {
                g = q;
                k += 1;
            }
            None => break,
        }
    }
    k
}

/// Restriction of C to L, parametrized by `L.basis()`.
pub fn restrict_to_line(c: &PlaneCurve, l: &ProjLine) -> Result<Restriction> {
    let t = l.coeffs()[0].tower().clone();
    let basis = l.basis();
    let uv = MultiPoly::vars(&t, 2);
    let imgs: Vec<Poly> = (0..3)
        .map(|k| uv[0].scale(&basis[0].coords()[k]).add(&uv[1].scale(&basis[1].coords()[k])))
        .collect();
    let form = c.equation().substitute(&imgs)?;
    if form.is_zero() {
        return Err(Error::LineIsComponent);
    }
    Ok(Restriction { form, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q_eps;

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::new(Poly::xyz(s)).unwrap()
    }

    fn pt(c: [&str; 3]) -> ProjPoint {
        ProjPoint::parse(&q_eps(), c).unwrap()
    }

    #[test]
    fn canonical_points() {
        assert_eq!(pt(["0", "2", "-2"]), pt(["0", "1", "-1"]));
        assert!(ProjPoint::parse(&q_eps(), ["0", "0", "0"]).is_err());
        assert_eq!(pt(["eps", "eps", "1"]).coords()[2], q_eps().parse("eps^2").unwrap());
    }

    #[test]
    fn tangents() {
        let fermat = curve("x^3+y^3+z^3");
        let l = tangent_line(&fermat, &pt(["1", "0", "-1"])).unwrap();
        assert_eq!(l, ProjLine::parse(&q_eps(), ["1", "0", "1"]).unwrap());
        let conic = curve("x*y-z^2");
        assert_eq!(tangent_line(&conic, &pt(["1", "0", "0"])).unwrap(), ProjLine::parse(&q_eps(), ["0", "1", "0"]).unwrap());
        assert_eq!(tangent_line(&fermat, &pt(["1", "0", "0"])).unwrap_err(), Error::NotOnCurve);
        assert_eq!(tangent_line(&curve("x*y*z"), &pt(["1", "0", "0"])).unwrap_err(), Error::SingularPoint);
    }

    #[test]
    fn classification() {
        assert_eq!(classify_point(&curve("x*y*z"), &pt(["1", "0", "0"])).unwrap(), SingularityClass::Node);
        assert_eq!(classify_point(&curve("y^2*z-x^3"), &pt(["0", "0", "1"])).unwrap(), SingularityClass::Cusp);
        assert_eq!(classify_point(&curve("x^3+y^3"), &pt(["0", "0", "1"])).unwrap(), SingularityClass::Higher);
        assert_eq!(classify_point(&curve("y^2*z^2-x^4"), &pt(["0", "0", "1"])).unwrap(), SingularityClass::Higher);
        assert_eq!(classify_point(&curve("x^3+y^3+z^3"), &pt(["0", "1", "-1"])).unwrap(), SingularityClass::Smooth);
    }

    #[test]
    fn restriction() {
        let r = restrict_to_line(&curve("x^3+y^3+z^3"), &ProjLine::parse(&q_eps(), ["1", "0", "0"]).unwrap()).unwrap();
        assert_eq!(r.form, Poly::parse("u^3+v^3", &q_eps(), 2).unwrap());
        let r = restrict_to_line(&curve("x*y*z"), &ProjLine::parse(&q_eps(), ["0", "1", "-1"]).unwrap()).unwrap();
        assert_eq!(r.form, Poly::parse("u*v^2", &q_eps(), 2).unwrap());
        assert_eq!(r.multiplicity_at(&pt(["0", "1", "1"])), Some(1));
        assert_eq!(r.multiplicity_at(&pt(["1", "0", "0"])), Some(2));
        assert_eq!(r.multiplicity_at(&pt(["1", "1", "0"])), None);
        let e = restrict_to_line(&curve("x*y*z"), &ProjLine::parse(&q_eps(), ["1", "0", "0"]).unwrap());
        assert_eq!(e.unwrap_err(), Error::LineIsComponent);
    }

    #[test]
    fn empty_incidence() {
        let t = incidence_table(&[], &[]);
        assert!(t.matrix.is_empty() && t.configuration_type().is_none());
    }
}
