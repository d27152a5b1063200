//! Dual curves of pencil members by elimination.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{resultant_binary, MultiPoly, Poly, PolyCtx, Proportionality};
use crate::ring::Ring;

use super::{pencil_member, weierstrass_data, PencilParameter};

/// The printed sextic in the dual coordinates X0, X1, X2 for (m0, m1).
pub fn dual_formula(m: &PencilParameter) -> Poly {
    let t = m.tower();
    let names: Vec<String> = ["m0", "m1", "x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let general = Poly::parse_with(
        "m0^4*(x^6+y^6+z^6) - m0*(2*m0^3+32*m1^3)*(x^3*y^3+x^3*z^3+z^3*y^3) \
         - 24*m0^2*m1^2*x*y*z*(x^3+y^3+z^3) - (24*m0^3*m1+48*m1^4)*x^2*y^2*z^2",
        t,
        &names,
    )
    .unwrap();
    let xs = MultiPoly::vars(t, 3);
    let imgs = [Poly::constant(m.t0().clone(), 3), Poly::constant(m.t1().clone(), 3), xs[0].clone(), xs[1].clone(), xs[2].clone()];
    general.substitute(&imgs).unwrap()
}

/// Dual curve of the cubic F: the tangent lines X0x + X1y + X2z = 0, as a form in X.
pub fn dual_curve(f: &Poly) -> Result<Poly> {
    let t = f.coeff_ctx();
    let outer = PolyCtx { coeff: t.clone(), nvars: 3 };
    let lifted = f.map_coeffs(&outer, |c| Poly::constant(c.clone(), 3));
    let xs = MultiPoly::vars(t, 3);
    for k in 0..3 {
        // the line through X meets P² in span{X_k e_j − X_j e_k : j ≠ k}
        let others: Vec<usize> = (0..3).filter(|&j| j != k).collect();
        let st: Vec<MultiPoly<Poly>> = MultiPoly::vars(&outer, 2);
        let imgs: Vec<MultiPoly<Poly>> = (0..3)
            .map(|i| {
                if i == k {
                    st[0].scale(&xs[others[0]].neg()).add(&st[1].scale(&xs[others[1]].neg()))
                } else {
                    let slot = others.iter().position(|&j| j == i).unwrap();
                    st[slot].scale(&xs[k])
                }
            })
            .collect();
        let g = lifted.substitute(&imgs)?;
        let (ds, dt) = (g.partial_derivative(0), g.partial_derivative(1));
        if ds.is_zero() || dt.is_zero() {
            continue;
        }
        let r = resultant_binary(&ds, &dt)?;
        if r.is_zero() {
            continue;
        }
        let (_, rest) = r.split_monomial_content();
        return Ok(rest);
    }
    Err(Error::EliminationDegenerate)
}

#[derive(Clone, Debug, Serialize)]
pub struct DualCurveReport {
    pub m: PencilParameter,
    /// Member whose dual matches the printed sextic: m0·S + 6m1·T.
    pub member: PencilParameter,
    pub dual: String,
    pub formula: String,
    /// dual = scalar · formula, when proportional.
    pub scalar: Option<String>,
    pub holds: bool,
    /// The labelling m0·S + 3m1·T: proportional or not (None when that member is singular).
    pub labelling_3m1: Option<bool>,
}

fn proportional(a: &Poly, b: &Poly) -> Option<FieldElement> {
    match a.proportionality(b) {
        Proportionality::Scalar(c) if !c.is_zero() => Some(c),
        _ => None,
    }
}

fn scaled_member(m: &PencilParameter, k: i64) -> Result<PencilParameter> {
    PencilParameter::new(m.t0().clone(), m.t1().scale(&crate::field::rat_int(k)))
}

/// Computes the dual of m0·S + 6m1·T by elimination and compares with the printed sextic.
pub fn dual_curve_check(m: &PencilParameter) -> Result<DualCurveReport> {
    let member = scaled_member(m, 6)?;
    if weierstrass_data(&member).j_value.is_none() {
        return Err(Error::SingularMember);
    }
    let dual = dual_curve(pencil_member(&member).equation())?;
    let formula = dual_formula(m);
    let scalar = proportional(&dual, &formula);
    let alt = scaled_member(m, 3)?;
    let labelling_3m1 = if weierstrass_data(&alt).j_value.is_none() {
        None
    } else {
        Some(proportional(&dual_curve(pencil_member(&alt).equation())?, &formula).is_some())
    };
    let upper: Vec<String> = ["X0", "X1", "X2"].iter().map(|s| s.to_string()).collect();
    Ok(DualCurveReport {
        m: m.clone(),
        member,
        dual: dual.to_text_with(&upper),
        formula: formula.to_text_with(&upper),
        holds: scalar.is_some(),
        scalar: scalar.map(|c| c.to_text()),
        labelling_3m1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q_eps;

    fn pp(a: i64, b: i64) -> PencilParameter {
        let t = q_eps();
        PencilParameter::new(t.from_int(a), t.from_int(b)).unwrap()
    }

    #[test]
    fn fermat_dual() {
        let r = dual_curve_check(&pp(1, 0)).unwrap();
        assert!(r.holds);
        assert_eq!(r.labelling_3m1, Some(true));
    }

    #[test]
    fn generic_member() {
        let r = dual_curve_check(&pp(1, 1)).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.labelling_3m1, Some(false));
        assert!(dual_curve_check(&pp(1, 2)).unwrap().holds);
        // the 3m1 member is the triangle at −3 here
        let r = dual_curve_check(&pp(1, -1)).unwrap();
        assert!(r.holds && r.labelling_3m1.is_none());
    }

    #[test]
    fn triangles_rejected() {
        assert!(matches!(dual_curve_check(&pp(0, 1)), Err(Error::SingularMember)));
        assert!(matches!(dual_curve_check(&pp(2, -1)), Err(Error::SingularMember)));
    }
}
