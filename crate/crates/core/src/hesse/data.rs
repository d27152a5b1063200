use std::sync::{Arc, OnceLock};

use crate::field::{q_eps, FieldTower};
use crate::plane::{ProjLine, ProjPoint};
use crate::poly::{MultiPoly, Poly};
use crate::ring::Ring;

use super::{equianharmonic_parameters, triangle_parameters, PencilParameter};

/// A singular member: three inflection lines and their pairwise meets (sorted by vertex index).
#[derive(Clone, Debug)]
pub struct Triangle {
    pub lines: [ProjLine; 3],
    pub vertices: [ProjPoint; 3],
    pub parameter: PencilParameter,
}

/// Named constants of the Hesse configuration over Q(ε).
#[derive(Debug)]
pub struct HesseData {
    pub tower: Arc<FieldTower>,
    pub s: Poly,
    pub t: Poly,
    /// p0..p8.
    pub base_points: Vec<ProjPoint>,
    /// Label of p_{3r+c} in (Z/3)², as (c, r).
    pub labels: Vec<(u8, u8)>,
    /// Lines of T1, T2, T3, T4 in order.
    pub inflection_lines: Vec<ProjLine>,
    pub triangles: Vec<Triangle>,
    /// v0..v11.
    pub vertices: Vec<ProjPoint>,
    /// L0..L8, L_i: ax+by+cz = 0 for p_i = (a, b, c).
    pub harmonic_polars: Vec<ProjLine>,
    /// B1..B8 (B_{i+4} = B_i′).
    pub halphen: Vec<Poly>,
    pub equianharmonic: Vec<PencilParameter>,
    /// F1..F4 = S + α_i T, α = (0, 6, 6ε², 6ε).
    pub f: Vec<Poly>,
    pub phi6: Poly,
    pub phi9: Poly,
    pub phi12: Poly,
    /// Product of the 12 inflection lines in the order above.
    pub phi12p: Poly,
    pub phi18: Poly,
    pub phi6p: Poly,
    /// A1..A4.
    pub a: Vec<Poly>,
    /// yz(y−z)·A4.
    pub p9: Poly,
}

const BASE_POINTS: [[&str; 3]; 9] = [
    ["0", "1", "-1"],
    ["0", "1", "-eps"],
    ["0", "1", "-eps^2"],
    ["1", "0", "-1"],
    ["1", "0", "-eps^2"],
    ["1", "0", "-eps"],
    ["1", "-1", "0"],
    ["1", "-eps", "0"],
    ["1", "-eps^2", "0"],
];

const VERTICES: [[&str; 3]; 12] = [
    ["1", "0", "0"],
    ["0", "1", "0"],
    ["0", "0", "1"],
    ["1", "1", "1"],
    ["1", "eps", "eps^2"],
    ["1", "eps^2", "eps"],
    ["eps", "1", "1"],
    ["1", "eps", "1"],
    ["1", "1", "eps"],
    ["eps^2", "1", "1"],
    ["1", "eps^2", "1"],
    ["1", "1", "eps^2"],
];

const LINES: [&str; 12] = [
    "x",
    "y",
    "z",
    "x+y+z",
    "x+eps*y+eps^2*z",
    "x+eps^2*y+eps*z",
    "x+eps*y+z",
    "x+eps^2*y+eps^2*z",
    "x+y+eps*z",
    "x+eps^2*y+z",
    "x+eps*y+eps*z",
    "x+y+eps^2*z",
];

const HALPHEN: [&str; 8] = [
    "x^3+eps*y^3+eps^2*z^3",
    "x^2*y+y^2*z+z^2*x",
    "x^2*y+eps^2*y^2*z+eps*z^2*x",
    "x^2*y+eps*y^2*z+eps^2*z^2*x",
    "x^3+eps^2*y^3+eps*z^3",
    "x^2*z+y^2*x+z^2*y",
    "x^2*z+eps*y^2*x+eps^2*z^2*y",
    "x^2*z+eps^2*y^2*x+eps*z^2*y",
];

const A_FORMS: [&str; 4] = [
    "y*z*(x+eps*y+z)*(x+y+eps*z)*(x+eps^2*y+z)*(x+y+eps^2*z)",
    "y*z*(x+eps*y+eps^2*z)*(x+eps^2*y+eps*z)*(x+y+eps*z)*(x+eps*y+z)",
    "y*z*(x+eps^2*y+z)*(x+y+eps^2*z)*(x+eps*y+eps^2*z)*(x+eps^2*y+eps*z)",
    "(x+eps*y+eps^2*z)*(x+eps^2*y+eps*z)*(x+y+eps*z)*(x+eps*y+z)*(x+eps^2*y+z)*(x+y+eps^2*z)",
];

fn build() -> HesseData {
    let t = q_eps();
    let p = |s: &str| Poly::parse(s, &t, 3).unwrap();
    let pt = |c: &[&str; 3]| ProjPoint::parse(&t, *c).unwrap();
    let base_points: Vec<ProjPoint> = BASE_POINTS.iter().map(pt).collect();
    let labels = (0..9u8).map(|k| (k % 3, k / 3)).collect();
    let inflection_lines: Vec<ProjLine> = LINES.iter().map(|s| ProjLine::from_form(&p(s)).unwrap()).collect();
    let vertices: Vec<ProjPoint> = VERTICES.iter().map(pt).collect();
    let params = triangle_parameters(&t);
    let triangles = (0..4)
        .map(|k| {
            let lines = [0, 1, 2].map(|j| inflection_lines[3 * k + j].clone());
            let mut idx: Vec<usize> = [(0, 1), (0, 2), (1, 2)]
                .iter()
                .map(|&(a, b)| {
                    let v = lines[a].meet(&lines[b]).unwrap();
                    vertices.iter().position(|w| *w == v).expect("vertex listed")
                })
                .collect();
            idx.sort();
            Triangle { lines, vertices: [0, 1, 2].map(|j| vertices[idx[j]].clone()), parameter: params[k].clone() }
        })
        .collect();
    let s = p("x^3+y^3+z^3");
    let tt = p("x*y*z");
    // the polar of T at p_i is x_j times the harmonic polar, x_j the vanishing coordinate
    let harmonic_polars = base_points
        .iter()
        .map(|q| {
            let grad = tt.gradient();
            let polar = (0..3).fold(MultiPoly::zero(&t, 3), |acc, k| acc.add(&grad[k].scale(&q.coords()[k])));
            let j = q.coords().iter().position(|c| c.is_zero()).unwrap();
            ProjLine::from_form(&polar.div_exact(&MultiPoly::var(&t, 3, j)).unwrap()).unwrap()
        })
        .collect();
    let f = ["0", "6", "6*eps^2", "6*eps"].iter().map(|a| s.add(&tt.scale(&t.parse(a).unwrap()))).collect();
    let phi12p = MultiPoly::product(&t, 3, &inflection_lines.iter().map(|l| l.form()).collect::<Vec<_>>());
    let a: Vec<Poly> = A_FORMS.iter().map(|s| p(s)).collect();
    let p9 = p("y*z*(y-z)").mul(&a[3]);
    HesseData {
        base_points,
        labels,
        inflection_lines,
        triangles,
        vertices,
        harmonic_polars,
        halphen: HALPHEN.iter().map(|s| p(s)).collect(),
        equianharmonic: equianharmonic_parameters(&t),
        f,
        phi6: p("x^6+y^6+z^6-10*(x^3*y^3+x^3*z^3+y^3*z^3)"),
        phi9: p("(x^3-y^3)*(x^3-z^3)*(y^3-z^3)"),
        phi12: p("(x^3+y^3+z^3)*((x^3+y^3+z^3)^3+216*x^3*y^3*z^3)"),
        phi12p,
        phi18: p("(x^3+y^3+z^3)^6-540*x^3*y^3*z^3*(x^3+y^3+z^3)^3-5832*x^6*y^6*z^6"),
        phi6p: p("(x^3+y^3+z^3)^2-36*y^3*z^3+24*(z^4*y^2+z^2*y^4)-12*(z^5*y+z*y^5)-12*x^3*(z^2*y+z*y^2)"),
        a,
        p9,
        s,
        t: tt,
        tower: t,
    }
}

/// Shared immutable instance.
pub fn hesse_data() -> &'static HesseData {
    static D: OnceLock<HesseData> = OnceLock::new();
    D.get_or_init(build)
}

impl HesseData {
    /// Index of a base point, if the point is one.
    pub fn base_index(&self, p: &ProjPoint) -> Option<usize> {
        self.base_points.iter().position(|q| q == p)
    }

    /// Base point with label (c, r) = p_{3r+c}.
    pub fn point_with_label(&self, c: u8, r: u8) -> &ProjPoint {
        &self.base_points[3 * (r as usize % 3) + c as usize % 3]
    }

    /// The 12 collinear triples read off the label matrix: rows, columns and
    /// the six terms of its determinant expansion.
    pub fn matrix_triples(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for r in 0..3 {
            out.push([3 * r, 3 * r + 1, 3 * r + 2]);
        }
        for c in 0..3 {
            out.push([c, c + 3, c + 6]);
        }
        for perm in [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]] {
            let mut tr = [3 * 0 + perm[0], 3 + perm[1], 6 + perm[2]];
            tr.sort();
            out.push(tr);
        }
        out
    }

    /// Member equation's parameter helper over this tower.
    pub fn param(&self, s: &str) -> PencilParameter {
        PencilParameter::parse(&self.tower, s).unwrap()
    }

    /// Polynomial in x, y, z over Q(ε).
    pub fn poly(&self, s: &str) -> Poly {
        Poly::parse(s, &self.tower, 3).unwrap()
    }

    pub fn zero_poly(&self) -> Poly {
        Poly::zero(&self.tower, 3)
    }

    pub fn is_zero_poly(p: &Poly) -> bool {
        p.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hesse::pencil_member;
    use crate::plane::{classify_point, incidence_table, SingularityClass};

    #[test]
    fn triangles_are_members() {
        let d = hesse_data();
        for tri in &d.triangles {
            let prod = MultiPoly::product(&d.tower, 3, &tri.lines.iter().map(|l| l.form()).collect::<Vec<_>>());
            let member = pencil_member(&tri.parameter);
            assert!(prod.proportionality(member.equation()).scalar().is_some(), "{:?}", tri.parameter);
            for v in &tri.vertices {
                assert_eq!(tri.lines.iter().filter(|l| l.contains(v)).count(), 2);
                assert_eq!(classify_point(&member, v).unwrap(), SingularityClass::Node);
            }
        }
    }

    #[test]
    fn configuration() {
        let d = hesse_data();
        let tab = incidence_table(&d.base_points, &d.inflection_lines);
        assert_eq!(tab.configuration_type(), Some((3, 4)));
        let mut from_lines: Vec<Vec<usize>> =
            (0..12).map(|j| (0..9).filter(|&i| tab.matrix[i][j]).collect()).collect();
        let mut from_matrix: Vec<Vec<usize>> = d.matrix_triples().iter().map(|t| t.to_vec()).collect();
        from_lines.sort();
        from_matrix.sort();
        assert_eq!(from_lines, from_matrix);
    }

    #[test]
    fn harmonic_polars() {
        let d = hesse_data();
        assert_eq!(d.harmonic_polars[0], ProjLine::from_form(&d.poly("y-z")).unwrap());
        let lam = d.tower.parse("2/7").unwrap();
        let f = d.s.add(&d.t.scale(&lam));
        let g = f.gradient();
        for (p, l) in d.base_points.iter().zip(&d.harmonic_polars) {
            assert!(!l.contains(p));
            let polar = (0..3).fold(Poly::zero(&d.tower, 3), |acc, k| acc.add(&g[k].scale(&p.coords()[k])));
            assert!(polar.div_exact(&l.form()).is_some());
        }
    }
}
