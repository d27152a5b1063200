//! The Halphen cubics: their pairwise intersections and Halphen's map of the plane.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::plane::{restrict_to_line, tangent_line, PlaneCurve};
use crate::poly::{MultiPoly, Poly};

use super::{hesse_data, triangle_parameters, RationalSelfMap};

/// Halphen cubic name: B1..B4 as `1`..`4`, B5..B8 as `1′`..`4′`.
pub fn halphen_name(i: usize) -> String {
    if i < 4 {
        format!("{}", i + 1)
    } else {
        format!("{}′", i - 3)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairIntersection {
    pub pair: (String, String),
    /// Triangles (1-based) whose vertices are transversal intersection points.
    pub transversal: Vec<usize>,
    /// Triangles whose vertices are points of tangency.
    pub tangent: Vec<usize>,
    /// Vertex indices on both curves.
    pub vertices: Vec<usize>,
    /// transversal + 2·tangent reaches 9, so by Bezout there are no further intersections.
    pub complete: bool,
}

fn triangle_of(v: usize) -> usize {
    let d = hesse_data();
    d.triangles.iter().position(|t| t.vertices.contains(&d.vertices[v])).expect("every vertex lies on a triangle") + 1
}

/// Intersection of B_a and B_b (0-based) accounted for by the 12 triangle vertices.
pub fn pair_intersection(a: usize, b: usize) -> Result<PairIntersection> {
    let d = hesse_data();
    let (ca, cb) = (PlaneCurve::new(d.halphen[a].clone())?, PlaneCurve::new(d.halphen[b].clone())?);
    let mut transversal = vec![];
    let mut tangent = vec![];
    let mut vertices = vec![];
    let mut lower = 0;
    for (k, v) in d.vertices.iter().enumerate() {
        if !(ca.contains(v) && cb.contains(v)) {
            continue;
        }
        vertices.push(k);
        let same = tangent_line(&ca, v)? == tangent_line(&cb, v)?;
        let tri = triangle_of(k);
        if same {
            lower += 2;
            tangent.push(tri);
        } else {
            lower += 1;
            transversal.push(tri);
        }
    }
    for s in [&mut transversal, &mut tangent] {
        s.sort();
        s.dedup();
    }
    Ok(PairIntersection { pair: (halphen_name(a), halphen_name(b)), transversal, tangent, vertices, complete: lower == 9 })
}

/// Each side of triangle `tri` meets B_i in three distinct flexes of B_i.
pub fn is_inflection_triangle(i: usize, tri: usize) -> Result<bool> {
    let d = hesse_data();
    let c = PlaneCurve::new(d.halphen[i].clone())?;
    let he = d.halphen[i].hessian_determinant();
    for l in &d.triangles[tri].lines {
        let f = restrict_to_line(&c, l)?.form;
        let squarefree = crate::poly::uni::degree(&crate::poly::uni::gcd(
            &super::binary_to_uni(&f),
            &super::binary_to_uni(&f.partial_derivative(1)),
            &d.tower,
        )) == Some(0);
        // the Hessian vanishes at every point of the side on B_i
        let h = match restrict_to_line(&PlaneCurve::new(he.clone())?, l) {
            Err(Error::LineIsComponent) => true,
            Ok(r) => r.form.proportionality(&f).scalar().is_some(),
            Err(e) => return Err(e),
        };
        if !(squarefree && h) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct HalphenMapReport {
    /// φ*(S) and φ*(T) lie in Q(ε)[S, T] without removing a common factor.
    pub pullbacks_in_subring: bool,
    /// G with φ*(S) = G·P(S, T) and φ*(T) = G·Q(S, T).
    pub common_factor_degree: u32,
    /// G equals the product of the eight Halphen cubics.
    pub common_factor_is_halphen_product: bool,
    /// P and Q.
    pub pullback_s: String,
    pub pullback_t: String,
    /// Induced map on the pencil parameter.
    pub parameter_map: String,
    pub parameter_degree: u32,
    /// Image of each triangle parameter (∞, −3, −3ε, −3ε²).
    pub triangle_images: Vec<String>,
    pub triangles_preserved: bool,
    #[serde(skip)]
    pub map: RationalSelfMap,
}

fn subring_poly(e: &crate::poly::SubringExpression<crate::field::FieldElement>) -> Poly {
    MultiPoly::from_terms(&hesse_data().tower, 2, e.terms.clone())
}

/// φ = (P2′P3′P4′, P2P3P4, xyz·P1P1′) pulled back to the pencil.
pub fn halphen_map_check() -> Result<HalphenMapReport> {
    let d = hesse_data();
    let b = &d.halphen;
    let phi = [b[5].mul(&b[6]).mul(&b[7]), b[1].mul(&b[2]).mul(&b[3]), d.t.mul(&b[0]).mul(&b[4])];
    let ps = phi.iter().fold(Poly::zero(&d.tower, 3), |acc, p| acc.add(&p.pow(3)));
    let pt = MultiPoly::product(&d.tower, 3, &phi);
    let gens = [d.s.clone(), d.t.clone()];
    let direct = ps.express_in_subring(&gens).is_some() && pt.express_in_subring(&gens).is_some();
    // the third coordinate carries xyz, so φ*(T) = T·G; G is then divided out of both pullbacks
    let g = pt.div_exact(&d.t).ok_or_else(|| Error::NotProportional("φ*(T) is not divisible by xyz".into()))?;
    let (ps_red, pt_red) = match (ps.div_exact(&g), pt.div_exact(&g)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::NotProportional("φ*(S) and φ*(T) have no common factor of degree 24".into())),
    };
    let es = ps_red.express_in_subring(&gens).ok_or_else(|| Error::NotProportional("φ*(S)/G is not a polynomial in S, T".into()))?;
    let et = pt_red.express_in_subring(&gens).ok_or_else(|| Error::NotProportional("φ*(T)/G is not a polynomial in S, T".into()))?;
    let (p, q) = (subring_poly(&es), subring_poly(&et));
    // E_μ maps into E_t iff t0·P + t1·Q vanishes at (S, T) = (−μ1, μ0)
    let mu = MultiPoly::vars(&d.tower, 2);
    let at = [mu[1].neg(), mu[0].clone()];
    let map = RationalSelfMap::from_pair(q.substitute(&at)?, p.substitute(&at)?.neg())?;
    let tri = triangle_parameters(&d.tower);
    let images: Vec<_> = tri.iter().map(|t| map.apply(t)).collect::<Result<_>>()?;
    Ok(HalphenMapReport {
        pullbacks_in_subring: direct,
        common_factor_degree: g.total_degree().unwrap_or(0),
        common_factor_is_halphen_product: g.proportionality(&MultiPoly::product(&d.tower, 3, b)).scalar().is_some(),
        pullback_s: es.to_text(&["S", "T"]),
        pullback_t: et.to_text(&["S", "T"]),
        parameter_map: map.to_text(),
        parameter_degree: map.degree(),
        triangles_preserved: images.iter().all(|i| tri.contains(i)),
        triangle_images: images.iter().map(|i| i.to_text()).collect(),
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn opposite_pairs_meet_in_nine_vertices() {
        let mut common = vec![];
        for i in 0..4 {
            let r = pair_intersection(i, i + 4).unwrap();
            assert!(r.tangent.is_empty() && r.complete && r.transversal.len() == 3, "{r:?}");
            let k = (1..=4).find(|k| !r.transversal.contains(k)).unwrap();
            assert!(is_inflection_triangle(i, k - 1).unwrap() && is_inflection_triangle(i + 4, k - 1).unwrap());
            common.push(k);
        }
        // the triangles at −3ε and −3ε² are swapped relative to the index of the pair
        assert_eq!(common, vec![1, 2, 4, 3]);
    }

    #[test]
    fn printed_examples() {
        let r = pair_intersection(0, 1).unwrap();
        assert_eq!((r.transversal.clone(), r.tangent.clone(), r.complete), (vec![3], vec![4], true));
        let r = pair_intersection(0, 5).unwrap();
        assert_eq!((r.transversal.clone(), r.tangent.clone(), r.complete), (vec![4], vec![3], true));
    }

    #[test]
    fn halphen_map() {
        let r = halphen_map_check().unwrap();
        assert!(r.triangles_preserved, "{r:?}");
        assert!(!r.pullbacks_in_subring && r.common_factor_is_halphen_product);
        assert_eq!((r.pullback_s.as_str(), r.pullback_t.as_str()), ("S", "T"));
        assert!(r.map.same_map(&RationalSelfMap::identity(&hesse_data().tower)));
    }
}

