//! The Hessian group and its named subgroups and extensions.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{q_eps, q_zeta9, FieldElement, FieldTower};
use crate::hesse::hesse_data;
use crate::ring::{Field, Ring};

use super::{action_on_curves, action_on_points, generate_closure, parameter_image, parse_cycles, Matrix, MatrixGroup, PermImage, ProjTransform, DEFAULT_CAP};

fn eps_of(t: &Arc<FieldTower>) -> Result<FieldElement> {
    t.eps().ok_or_else(|| Error::Invalid("tower has no primitive cube root of unity".into()))
}

fn mat(rows: [[FieldElement; 3]; 3]) -> Matrix {
    rows.into_iter().map(|r| r.to_vec()).collect()
}

/// g0..g4 as printed, with the printed matrices as lifts.
pub fn hessian_generators(t: &Arc<FieldTower>) -> Result<[ProjTransform; 5]> {
    let e = eps_of(t)?;
    let e2 = e.mul(&e);
    let (o, z) = (t.one(), t.zero());
    let g0 = mat([[o.clone(), z.clone(), z.clone()], [z.clone(), z.clone(), o.clone()], [z.clone(), o.clone(), z.clone()]]);
    let g1 = mat([[z.clone(), o.clone(), z.clone()], [z.clone(), z.clone(), o.clone()], [o.clone(), z.clone(), z.clone()]]);
    let g2 = mat([[o.clone(), z.clone(), z.clone()], [z.clone(), e.clone(), z.clone()], [z.clone(), z.clone(), e2.clone()]]);
    let g3 = mat([[o.clone(), o.clone(), o.clone()], [o.clone(), e.clone(), e2.clone()], [o.clone(), e2.clone(), e.clone()]]);
    let g4 = mat([[o.clone(), z.clone(), z.clone()], [z.clone(), e.clone(), z.clone()], [z.clone(), z.clone(), e.clone()]]);
    Ok([g0, g1, g2, g3, g4].map(|m| ProjTransform::new(m).unwrap()))
}

/// (ε − ε²)⁻¹·g3, of determinant 1.
pub fn normalized_g3(t: &Arc<FieldTower>) -> Result<ProjTransform> {
    let e = eps_of(t)?;
    let s = e.sub(&e.mul(&e)).inv().unwrap();
    let g3 = hessian_generators(t)?[3].clone();
    g3.with_lift(super::mat_scale(g3.linear(), &s))
}

pub fn gamma() -> MatrixGroup {
    let g = hessian_generators(&q_eps()).unwrap();
    generate_closure(&[g[1].clone(), g[2].clone()], true, DEFAULT_CAP).unwrap()
}

/// K = ⟨g0, g1, g2⟩, the kernel of the parameter action.
pub fn kernel_k() -> MatrixGroup {
    let g = hessian_generators(&q_eps()).unwrap();
    generate_closure(&[g[0].clone(), g[1].clone(), g[2].clone()], true, DEFAULT_CAP).unwrap()
}

pub fn g216() -> MatrixGroup {
    let g = hessian_generators(&q_eps()).unwrap();
    generate_closure(&g[1..], true, DEFAULT_CAP).unwrap()
}

/// ⟨g3, g4⟩, the stabilizer of p0.
pub fn binary_tetrahedral() -> MatrixGroup {
    let g = hessian_generators(&q_eps()).unwrap();
    generate_closure(&[g[3].clone(), g[4].clone()], true, DEFAULT_CAP).unwrap()
}

/// Generators of H72: g1, g2, g3 and g4·g3·g4⁻¹.
pub fn h72_generators(t: &Arc<FieldTower>) -> Result<Vec<ProjTransform>> {
    let g = hessian_generators(t)?;
    Ok(vec![g[1].clone(), g[2].clone(), g[3].clone(), g[4].compose(&g[3]).compose(&g[4].inverse())])
}

pub fn h72() -> MatrixGroup {
    generate_closure(&h72_generators(&q_eps()).unwrap(), true, DEFAULT_CAP).unwrap()
}

/// Linear group generated by g1 and g2 (determinant one).
pub fn heisenberg() -> MatrixGroup {
    let g = hessian_generators(&q_eps()).unwrap();
    generate_closure(&[g[1].clone(), g[2].clone()], false, DEFAULT_CAP).unwrap()
}

/// Determinant-one lifts g1, g2, (ε−ε²)⁻¹g3, ζ9·g4 over Q(ζ9).
pub fn g216_prime_generators() -> Vec<ProjTransform> {
    let t = q_zeta9();
    let g = hessian_generators(&t).unwrap();
    let z = t.gen("zeta9").unwrap();
    let g4 = g[4].with_lift(super::mat_scale(g[4].linear(), &z)).unwrap();
    vec![g[1].clone(), g[2].clone(), normalized_g3(&t).unwrap(), g4]
}

pub fn g216_prime() -> MatrixGroup {
    generate_closure(&g216_prime_generators(), false, DEFAULT_CAP).unwrap()
}

pub fn base_point_labels() -> Vec<String> {
    (0..9).map(|i| i.to_string()).collect()
}

pub fn halphen_labels() -> Vec<String> {
    (0..8).map(crate::hesse::halphen::halphen_name).collect()
}

/// Facts about the Hessian group's action on the base points.
#[derive(Clone, Debug, Serialize)]
pub struct BasePointAction {
    pub image: PermImage,
    pub contains_t: bool,
    pub contains_u: bool,
    /// ⟨T, U⟩ equals the image.
    pub generated_by_t_u: bool,
    /// Elements of G216 fixing all nine base points.
    pub pointwise_stabilizer: usize,
}

pub fn base_point_action() -> Result<BasePointAction> {
    let g = g216();
    let d = hesse_data();
    let labels = base_point_labels();
    let image = action_on_points(&g, &d.base_points, labels.clone())?;
    let t = parse_cycles("(031)(475)(682)", &labels)?;
    let u = parse_cycles("(147)(285)", &labels)?;
    let tu = super::permutation_closure(&[t.clone(), u.clone()], 100_000)?;
    let same = tu.len() == image.order && tu.iter().all(|p| image.contains(p));
    let stab = g
        .transforms()
        .iter()
        .filter(|h| d.base_points.iter().all(|p| h.apply(p).is_ok_and(|q| q == *p)))
        .count();
    Ok(BasePointAction { contains_t: image.contains(&t), contains_u: image.contains(&u), generated_by_t_u: same, pointwise_stabilizer: stab, image })
}

/// Cycles of g3 and g4 on the Halphen cubics.
pub fn halphen_permutations() -> Result<(String, String)> {
    let t = q_eps();
    let g = hessian_generators(&t)?;
    let d = hesse_data();
    let labels = halphen_labels();
    let p3 = super::curve_permutation(&g[3], &d.halphen)?;
    let p4 = super::curve_permutation(&g[4], &d.halphen)?;
    Ok((super::cycle_text(&p3, &labels), super::cycle_text(&p4, &labels)))
}

/// Permutation image of G216 on the Halphen cubics.
pub fn halphen_action() -> Result<PermImage> {
    action_on_curves(&g216(), &hesse_data().halphen, halphen_labels())
}

/// Image of G216 in Aut(P¹).
pub fn g216_parameter_image() -> Result<MatrixGroup> {
    parameter_image(&g216())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{invariance_factor, parameter_action};
    use crate::hesse::triangle_parameters;

    #[test]
    fn orders() {
        assert_eq!(gamma().order(), 9);
        assert_eq!(kernel_k().order(), 18);
        assert_eq!(g216().order(), 216);
        let bt = binary_tetrahedral().facts();
        assert_eq!((bt.order, bt.involutions, bt.center_order), (24, 1, 2));
        let h = heisenberg().facts();
        assert_eq!((h.order, h.abelian, h.center_order), (27, false, 3));
        assert_eq!(h72().order(), 72);
        assert!(gamma().is_abelian());
    }

    #[test]
    fn g216_prime_order() {
        let g = g216_prime();
        assert_eq!(g.order(), 648);
        assert_eq!(g.center_order(), 3);
    }

    #[test]
    fn phi12_prime_is_relative() {
        let t = q_eps();
        let d = hesse_data();
        let factors: Vec<FieldElement> = hessian_generators(&t).unwrap().iter().map(|g| invariance_factor(&d.phi12p, g, true).unwrap()).collect();
        assert!(factors.iter().any(|c| !c.is_one()));
    }

    #[test]
    fn normal_subgroups() {
        let g = g216();
        assert!(g.is_normal(&gamma()).unwrap());
        assert!(g.is_normal(&kernel_k()).unwrap());
        assert!(g.is_normal(&h72()).unwrap());
        assert!(!g.is_normal(&binary_tetrahedral()).unwrap());
        assert!(matches!(gamma().is_normal(&g), Err(Error::NotSubgroup)));
    }

    #[test]
    fn base_points() {
        let a = base_point_action().unwrap();
        assert_eq!(a.image.order, 216);
        assert!(a.image.two_transitive && a.image.faithful && a.image.homomorphism_checked);
        assert!(a.contains_t && a.contains_u && a.generated_by_t_u);
        assert_eq!(a.pointwise_stabilizer, 1);
    }

    #[test]
    fn vertices_under_gamma() {
        let d = hesse_data();
        let labels: Vec<String> = (0..12).map(|i| format!("v{i}")).collect();
        let img = action_on_points(&gamma(), &d.vertices, labels).unwrap();
        assert_eq!(img.orbits.len(), 4);
        assert!(img.orbits.iter().all(|o| o.len() == 3));
    }

    #[test]
    fn halphen_cycles() {
        let (c3, c4) = halphen_permutations().unwrap();
        let l = halphen_labels();
        let same = |a: &str, b: &str| parse_cycles(a, &l).unwrap() == parse_cycles(b, &l).unwrap();
        assert!(same(&c3, "(121′2′)(434′3′)"), "{c3}");
        assert!(same(&c4, "(243)(2′4′3′)"), "{c4}");
        assert!(!same(&c3, "(2′1′21)(3′4′34)"));
    }

    #[test]
    fn parameter_actions() {
        let t = q_eps();
        let g = hessian_generators(&t).unwrap();
        for k in 0..3 {
            assert!(parameter_action(&g[k]).unwrap().is_identity());
        }
        let tri = triangle_parameters(&t);
        for k in 3..5 {
            let a = parameter_action(&g[k]).unwrap();
            assert!(tri.iter().all(|p| tri.contains(&a.apply(p).unwrap())));
        }
        assert_eq!(g216_parameter_image().unwrap().order(), 12);
    }

    #[test]
    fn invariance_factors() {
        let t = q_eps();
        let d = hesse_data();
        let g = hessian_generators(&t).unwrap();
        for k in [1, 2, 4] {
            assert!(invariance_factor(&d.phi6, &g[k], true).unwrap().is_one());
        }
        assert_eq!(invariance_factor(&d.phi6, &g[3], true).unwrap(), t.from_int(-27));
        assert!(invariance_factor(&d.phi6, &normalized_g3(&t).unwrap(), true).unwrap().is_one());
        assert_eq!(invariance_factor(&d.phi9, &g[0], true).unwrap(), t.from_int(-1));
    }
}
