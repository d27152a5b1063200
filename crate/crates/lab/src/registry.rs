//! The check registry. Order here is the order of every report.

use std::sync::{Arc, OnceLock};

use hesse_core::ellaw::numeric::{nine_torsion_check, prop62_check, tolerance, two_torsion_polar_check};
use hesse_core::ellaw::{three_torsion_table, translation_compatibility};
use hesse_core::field::{q, q_eps, q_eps_i};
use hesse_core::groups::named::{
    base_point_action, binary_tetrahedral, g216, g216_parameter_image, g216_prime, gamma, halphen_labels, halphen_permutations, heisenberg,
    hessian_generators, h72, kernel_k, normalized_g3,
};
use hesse_core::groups::symplectic::{default_samples, h72_symplectic_lifts, symplectic_ratio};
use hesse_core::groups::{action_on_points, invariance_factor, invariance_factor_matrix, mat_mul, parse_cycles, MatrixGroup};
use hesse_core::hesse::dual::dual_curve_check;
use hesse_core::hesse::dynamics::remark_checks;
use hesse_core::hesse::halphen::{halphen_map_check, pair_intersection, HalphenMapReport};
use hesse_core::hesse::identities::{identity, relation_fits};
use hesse_core::hesse::{equianharmonic_parameters, harmonic_parameters, hesse_data, weierstrass_data, weierstrass_forms, PencilParameter};
use hesse_core::lattice::{
    a2_printed, embeds_finite_index, shioda_tate_rank, standard_lattice, vectors_of_norm, FibrationCombinatorics, IntLattice, SectionConfiguration,
};
use hesse_core::plane::{classify_point, incidence_table, PlaneCurve, SingularityClass};
use hesse_core::poly::resultant_binary;
use hesse_core::{FieldElement, Ring};
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{LabError, Result};
use crate::report::Status;

type CheckFn = dyn Fn(u32) -> hesse_core::Result<(bool, Value)> + Send + Sync;

pub struct Check {
    pub id: String,
    pub paper_ref: String,
    run: Arc<CheckFn>,
}

impl Check {
    fn new(id: impl Into<String>, paper_ref: &str, run: impl Fn(u32) -> hesse_core::Result<(bool, Value)> + Send + Sync + 'static) -> Self {
        Check { id: id.into(), paper_ref: paper_ref.into(), run: Arc::new(run) }
    }

    /// Runs at the given precision; errors become failures carrying the message.
    pub fn execute(&self, precision: u32) -> (Status, Value) {
        match (self.run)(precision) {
            Ok((true, w)) => (Status::Pass, w),
            Ok((false, w)) => (Status::Fail, if w.is_null() { json!({ "failed": true }) } else { w }),
            Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// λ text over Q, or over Q(ε) when it mentions ε.
pub fn parse_lambda(s: &str) -> Result<PencilParameter> {
    PencilParameter::parse(&q(), s)
        .or_else(|_| PencilParameter::parse(&q_eps(), s))
        .map_err(|e| LabError::Config(format!("λ `{s}`: {e}")))
}

/// Check-id fragment for a λ: `1/2` → `1_2`, `-3` → `m3`.
pub fn lambda_label(s: &str) -> String {
    s.trim()
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '-' => 'm',
            c if c.is_ascii_alphanumeric() => c,
            _ => '_',
        })
        .collect()
}

fn identity_check(id: &str, name: &'static str, paper_ref: &str) -> Check {
    Check::new(id, paper_ref, move |_| {
        let r = identity(name)?;
        Ok((r.holds, to_value(&r)))
    })
}

fn order_check(id: &str, paper_ref: &str, group: fn() -> MatrixGroup, pass: fn(&hesse_core::groups::GroupFacts) -> bool) -> Check {
    Check::new(id, paper_ref, move |_| {
        let f = group().facts();
        Ok((pass(&f), to_value(&f)))
    })
}

fn halphen_map() -> hesse_core::Result<&'static HalphenMapReport> {
    static CELL: OnceLock<std::result::Result<HalphenMapReport, hesse_core::Error>> = OnceLock::new();
    CELL.get_or_init(halphen_map_check).as_ref().map_err(|e| e.clone())
}

fn hesse_checks() -> Vec<Check> {
    let mut v = vec![Check::new(
        "hesse.configuration.incidence",
        "Hesse configuration of nine inflection points and twelve lines",
        |_| {
            let d = hesse_data();
            let t = incidence_table(&d.base_points, &d.inflection_lines);
            let mut triples: Vec<Vec<usize>> = (0..d.inflection_lines.len()).map(|j| (0..9).filter(|&i| t.matrix[i][j]).collect()).collect();
            let mut expected: Vec<Vec<usize>> = d.matrix_triples().iter().map(|t| t.to_vec()).collect();
            triples.sort();
            expected.sort();
            let ty = t.configuration_type();
            let pass = ty == Some((3, 4)) && t.line_counts.len() == 12 && t.point_counts.len() == 9 && triples == expected;
            Ok((pass, json!({ "type": ty.map(|(p, l)| format!("({}_{p}, {}_{l})", t.line_counts.len(), t.point_counts.len())), "triples": triples })))
        },
    )];
    let ids: [(&str, &str, &str); 11] = [
        ("a", "a", "Hessian of a pencil member is the member at the Hessian parameter"),
        ("duality", "duality", "Hessian and Cayleyan parameter maps are related by the involution λ ↦ −18/λ"),
        ("b", "b", "discriminant of the Weierstrass form in the pencil coordinates"),
        ("c", "c", "sextic invariant as a combination of the equianharmonic members and Halphen cubics"),
        ("d", "d", "factorization of the degree 12 invariant"),
        ("e", "e", "degree 18 invariant as a product over the triangle lines"),
        ("f", "f", "tangency identity defining the first Halphen cubic"),
        ("g", "g", "closure of the pencil under the Hessian map"),
        ("l", "l", "cubic surface identity in characteristic three"),
        ("n", "n", "sextic through the eight cusps in the span of the A forms"),
        ("base_points", "base_points", "nine base points of the pencil"),
    ];
    for (suffix, name, r) in ids {
        v.push(identity_check(&format!("hesse.identity.{suffix}"), name, r));
    }
    v.push(Check::new("hesse.j_values", "j-invariant of pencil members from the Weierstrass coefficients", |_| {
        let t = q_eps();
        let eq: Vec<(String, Option<String>)> = equianharmonic_parameters(&t).iter().map(|p| (p.to_text(), weierstrass_data(p).j)).collect();
        let eq_ok = eq.iter().all(|(_, j)| j.as_deref() == Some("0"));
        // j = 1728·4A³/(4A³ + 27B²) is 1728 wherever B = 0 and A ≠ 0
        let (a, b) = weierstrass_forms(&t);
        let res = resultant_binary(&a, &b)?;
        let ti = q_eps_i();
        let harmonic: Vec<(String, Option<String>)> = harmonic_parameters(&ti)?.iter().map(|p| (p.to_text(), weierstrass_data(p).j)).collect();
        let h_ok = harmonic.len() == 6 && harmonic.iter().all(|(_, j)| j.as_deref() == Some("1728"));
        Ok((
            eq_ok && !res.is_zero() && h_ok,
            json!({ "equianharmonic": eq, "resultant_a_b": res.to_text(), "roots_of_b": harmonic }),
        ))
    }));
    for (suffix, m) in [("m_1_0", "0"), ("m_1_1", "1")] {
        v.push(Check::new(format!("hesse.dual_curve.{suffix}"), "dual curve of a pencil member", move |_| {
            let r = dual_curve_check(&PencilParameter::parse(&q_eps(), m)?)?;
            Ok((r.holds, to_value(&r)))
        }));
    }
    v.push(Check::new("hesse.dynamics.hessian", "critical points of the Hessian map are the equianharmonic members", |_| {
        let (h, _, ok, _) = remark_checks(&q_eps())?;
        Ok((ok, to_value(&h)))
    }));
    v.push(Check::new("hesse.dynamics.cayleyan", "critical points of the Cayleyan map coincide with its critical values", |_| {
        let (_, c, _, ok) = remark_checks(&q_eps())?;
        Ok((ok, to_value(&c)))
    }));
    v.push(Check::new("hesse.halphen.pairs", "Halphen cubics B_i and B_i′ meet in the vertices of three triangles", |_| {
        let pairs = (0..4).map(|i| pair_intersection(i, i + 4)).collect::<hesse_core::Result<Vec<_>>>()?;
        let ok = pairs.iter().all(|p| p.complete && p.tangent.is_empty() && p.transversal.len() == 3 && p.vertices.len() == 9);
        Ok((ok, to_value(&pairs)))
    }));
    v.push(Check::new("hesse.halphen.map", "multiplication map given by products of Halphen cubics", |_| {
        let r = halphen_map()?;
        let ok = r.common_factor_is_halphen_product && r.triangles_preserved;
        Ok((ok, to_value(r)))
    }));
    v.push(Check::new("hesse.sextic.cusps", "sextic with cusps at eight inflection points", |_| {
        let d = hesse_data();
        let c = PlaneCurve::new(d.phi6p.clone())?;
        let classes: Vec<String> = (1..9).map(|i| classify_point(&c, &d.base_points[i]).map(|k| format!("{k:?}").to_lowercase())).collect::<hesse_core::Result<_>>()?;
        let p0 = d.phi6p.eval(d.base_points[0].coords());
        let ok = classes.iter().all(|k| k == "cusp") && !p0.is_zero() && classes.len() == 8;
        debug_assert_eq!(format!("{:?}", SingularityClass::Cusp).to_lowercase(), "cusp");
        Ok((ok, json!({ "p1..p8": classes, "value_at_p0": p0.to_text() })))
    }));
    v.push(Check::new("hesse.sextic.relative_invariance", "cuspidal sextic is a relative invariant of the binary tetrahedral group", |_| {
        let t = q_eps();
        let d = hesse_data();
        let g = hessian_generators(&t)?;
        let f3 = invariance_factor(&d.phi6p, &g[3], true)?;
        let f4 = invariance_factor(&d.phi6p, &g[4], true)?;
        Ok((!f3.is_zero() && !f4.is_zero(), json!({ "g3": f3.to_text(), "g4": f4.to_text() })))
    }));
    v.push(Check::new("hesse.relation.fits", "relation among the invariants of degrees 3, 3, 6 and 9", |_| {
        let r = relation_fits()?;
        let ok = r.unprimed.verified && r.primed.verified && r.p9_homogeneous && r.p9_candidate.is_some();
        Ok((ok, to_value(&r)))
    }));
    v
}

fn surface_checks() -> Vec<Check> {
    vec![
        identity_check("surface.identity.h", "h", "cube map carries the conic to the pencil"),
        identity_check("surface.identity.i", "i", "expansion of the elliptic fibration equation"),
        identity_check("surface.identity.j", "j", "factorization of u⁶ + v⁶ over the sextic field"),
        identity_check("surface.identity.k", "k", "printed section of the elliptic fibration"),
        identity_check("surface.identity.k_corrected", "k_corrected", "section of the elliptic fibration recomputed from the fiber data"),
    ]
}

fn symplectic_check(id: &str, paper_ref: &str, lifts: fn() -> hesse_core::Result<Vec<(String, Vec<Vec<FieldElement>>)>>, target: fn() -> FieldElement) -> Check {
    Check::new(id, paper_ref, move |prec| {
        let tol = tolerance(prec);
        let z = target();
        let mut out = vec![];
        let mut ok = true;
        for (name, m) in lifts()? {
            let r = symplectic_ratio(&m, 1, &default_samples(), prec)?;
            let close = r.is_close(&z, tol)?;
            ok &= close;
            out.push(json!({ "lift": name, "re": r.re, "im": r.im, "error": r.error, "close": close }));
        }
        Ok((ok, json!({ "target": z.to_text(), "precision": prec, "tolerance": tol, "ratios": out })))
    })
}

fn group_checks() -> Vec<Check> {
    let mut v = vec![
        order_check("groups.order.gamma", "translation group of the base points", gamma, |f| f.order == 9),
        order_check("groups.order.kernel", "subgroup acting trivially on the pencil parameter", kernel_k, |f| f.order == 18),
        order_check("groups.order.g216", "Hessian group of order 216", g216, |f| f.order == 216),
        order_check("groups.order.binary_tetrahedral", "subgroup generated by g3 and g4", binary_tetrahedral, |f| f.order == 24 && f.involutions == 1),
        order_check("groups.order.heisenberg", "Heisenberg lift of the translation group", heisenberg, |f| f.order == 27 && !f.abelian),
        order_check("groups.order.g216_prime", "linear lift of the Hessian group over the ninth cyclotomic field", g216_prime, |f| f.order == 648),
        order_check("groups.order.h72", "index three subgroup of the Hessian group", h72, |f| f.order == 72),
        Check::new("groups.parameter_image", "action of the Hessian group on the pencil parameter", |_| {
            let g = g216_parameter_image()?;
            Ok((g.order() == 12, json!({ "order": g.order() })))
        }),
        Check::new("groups.base_points", "Hessian group acts doubly transitively on the inflection points", |_| {
            let a = base_point_action()?;
            let ok = a.image.order == 216 && a.image.two_transitive && a.contains_t && a.contains_u;
            Ok((ok, to_value(&a)))
        }),
        Check::new("groups.vertices.gamma_orbits", "translations permute the vertices of each triangle", |_| {
            let d = hesse_data();
            let labels: Vec<String> = (0..d.vertices.len()).map(|i| format!("v{i}")).collect();
            let img = action_on_points(&gamma(), &d.vertices, labels)?;
            let ok = img.orbits.len() == 4 && img.orbits.iter().all(|o| o.len() == 3);
            Ok((ok, json!({ "orbits": img.orbits })))
        }),
        Check::new("groups.invariance.phi6", "sextic invariant of the Hessian group", |_| {
            let t = q_eps();
            let d = hesse_data();
            let g = hessian_generators(&t)?;
            let mut factors = vec![];
            for (name, h) in [("g1", g[1].clone()), ("g2", g[2].clone()), ("g4", g[4].clone()), ("g3_normalized", normalized_g3(&t)?)] {
                factors.push((name, invariance_factor(&d.phi6, &h, true)?));
            }
            let ok = factors.iter().all(|(_, c)| c.is_one());
            Ok((ok, json!(factors.iter().map(|(n, c)| (n.to_string(), c.to_text())).collect::<Vec<_>>())))
        }),
        Check::new("groups.invariance.multiplicative", "invariants of degrees 9 and 12 are relative invariants", |_| {
            let t = q_eps();
            let d = hesse_data();
            let g = hessian_generators(&t)?;
            let mut ok = true;
            let mut recorded = serde_json::Map::new();
            for (name, f) in [("phi9", &d.phi9), ("phi12", &d.phi12)] {
                let mut row = vec![];
                for a in &g {
                    let ca = invariance_factor_matrix(f, a.linear())?;
                    row.push(ca.to_text());
                    for b in &g {
                        let cb = invariance_factor_matrix(f, b.linear())?;
                        let cab = invariance_factor_matrix(f, &mat_mul(a.linear(), b.linear()))?;
                        ok &= cab == ca.mul(&cb);
                    }
                }
                recorded.insert(name.into(), json!(row));
            }
            Ok((ok, Value::Object(recorded)))
        }),
        Check::new("groups.invariance.phi12p_relative", "product of the inflection lines is a strictly relative invariant", |_| {
            let t = q_eps();
            let d = hesse_data();
            let f: Vec<FieldElement> = hessian_generators(&t)?.iter().map(|g| invariance_factor(&d.phi12p, g, true)).collect::<hesse_core::Result<_>>()?;
            Ok((f.iter().any(|c| !c.is_one()), json!(f.iter().map(|c| c.to_text()).collect::<Vec<_>>())))
        }),
        Check::new("groups.halphen.permutations", "action of g3 and g4 on the Halphen cubics", |_| {
            let (c3, c4) = halphen_permutations()?;
            let l = halphen_labels();
            let ok = parse_cycles(&c3, &l)? == parse_cycles("(121′2′)(434′3′)", &l)? && parse_cycles(&c4, &l)? == parse_cycles("(243)(2′4′3′)", &l)?;
            Ok((ok, json!({ "g3": c3, "g4": c4 })))
        }),
    ];
    v.push(symplectic_check(
        "groups.symplectic.h72",
        "index three subgroup acts symplectically on the double sextic",
        || {
            let names = ["g1", "g2", "g3_normalized", "g4 g3 g4^-1"];
            Ok(names.iter().map(|s| s.to_string()).zip(h72_symplectic_lifts(&q_eps())?).collect())
        },
        || q_eps().one(),
    ));
    v.push(symplectic_check(
        "groups.symplectic.g4",
        "g4 multiplies the holomorphic two-form by a cube root of unity",
        || Ok(vec![("g4".to_string(), hessian_generators(&q_eps())?[4].linear().clone())]),
        || q_eps().eps().expect("ε"),
    ));
    v
}

fn ellaw_checks(lambdas: &[String]) -> Vec<Check> {
    let mut v = vec![];
    for l in ["1", "2"] {
        v.push(Check::new(format!("ellaw.three_torsion.l_{l}"), "addition of inflection points follows the label matrix", move |_| {
            let t = three_torsion_table(&parse_lambda(l).map_err(core_err)?)?;
            Ok((t.matches_labels && t.all_three_torsion, to_value(&t)))
        }));
    }
    v.push(Check::new("ellaw.translations", "g1 and g2 act as translations by inflection points", |_| {
        let t = translation_compatibility(&parse_lambda("1").map_err(core_err)?)?;
        Ok((t.matches_up_to_sign, to_value(&t)))
    }));
    for l in lambdas {
        let label = lambda_label(l);
        for i in 0..9 {
            let l = l.clone();
            v.push(Check::new(format!("ellaw.two_torsion.l_{label}.p{i}"), "harmonic polar cuts the two-torsion points", move |prec| {
                let r = two_torsion_polar_check(&parse_lambda(&l).map_err(core_err)?, i, prec)?;
                Ok((r.passed, to_value(&r)))
            }));
        }
    }
    for l in lambdas {
        let label = lambda_label(l);
        for k in 1..=8 {
            let l = l.clone();
            v.push(Check::new(format!("ellaw.nine_torsion.l_{label}.b{k}"), "Halphen cubics cut the points of order nine", move |prec| {
                let r = nine_torsion_check(&parse_lambda(&l).map_err(core_err)?, k, prec)?;
                Ok((r.passed, to_value(&r)))
            }));
        }
    }
    let mut prop: Vec<String> = vec!["0".into(), "1".into()];
    for l in lambdas {
        if !prop.iter().any(|p| lambda_label(p) == lambda_label(l)) {
            prop.push(l.clone());
        }
    }
    for l in prop {
        v.push(Check::new(format!("ellaw.tangent_sextic.l_{}", lambda_label(&l)), "tangent to the Hessian member meets the cuspidal sextic", move |prec| {
            let r = prop62_check(&parse_lambda(&l).map_err(core_err)?, prec)?;
            Ok((r.passed, to_value(&r)))
        }));
    }
    v
}

fn core_err(e: LabError) -> hesse_core::Error {
    hesse_core::Error::Invalid(e.to_string())
}

fn big(v: &[num_bigint::BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().unwrap_or(i64::MAX)).collect()
}

fn lattice_checks() -> Vec<Check> {
    vec![
        Check::new("lattice.y.det", "transcendental lattice candidate U ⊕ E8(−1)² ⊕ A2(−1)", |_| {
            let parts = [standard_lattice("U", 1)?, standard_lattice("E8", -1)?, standard_lattice("E8", -1)?, standard_lattice("A2", -1)?];
            let l = IntLattice::sum_of(&parts);
            let d = l.det();
            Ok((d == (-3).into(), json!({ "rank": l.rank(), "det": d.to_string() })))
        }),
        Check::new("lattice.a2m6.snf", "discriminant group of A2(−6)", |_| {
            let s = big(&a2_printed(6).smith_normal_form());
            Ok((s == [6, 18], json!({ "snf": s })))
        }),
        Check::new("lattice.a2m3.norm12", "A2(−3) represents no vector of norm 12", |_| {
            let v = vectors_of_norm(&a2_printed(3), 12, None)?;
            Ok((v.is_empty(), json!({ "vectors": v })))
        }),
        Check::new("lattice.a2m2.norm12", "A2(−2) represents norm 12", |_| {
            let v = vectors_of_norm(&a2_printed(2), 12, None)?;
            Ok((v.contains(&vec![1, 1]), json!({ "vectors": v })))
        }),
        Check::new("lattice.a2m6.embed_a2m2", "A2(−6) is a sublattice of index three in A2(−2)", |_| {
            let e = embeds_finite_index(&a2_printed(6), &a2_printed(2))?;
            Ok((e.as_ref().is_some_and(|e| e.index == 3), to_value(&e)))
        }),
        Check::new("lattice.a2m6.embed_a2m3", "A2(−6) does not embed in A2(−3)", |_| {
            let e = embeds_finite_index(&a2_printed(6), &a2_printed(3))?;
            Ok((e.is_none(), json!({ "embedding": e })))
        }),
        Check::new("lattice.shioda_tate.y", "fibration with fibers II*, II*, IV", |_| {
            let f = FibrationCombinatorics::parse(&["II*", "II*", "IV"], 0, 1)?;
            let r = shioda_tate_rank(&f);
            Ok((r == 20, json!({ "fibers": ["II*", "II*", "IV"], "mw_rank": 0, "rank": r })))
        }),
        Check::new("lattice.shioda_tate.x", "fibration with three I6 fibers, one I3 fiber and a section of infinite order", |_| {
            let f = FibrationCombinatorics::parse(&["I6", "I6", "I6", "I3"], 1, 2)?;
            let r = shioda_tate_rank(&f);
            Ok((r == 20, json!({ "fibers": ["I6", "I6", "I6", "I3"], "mw_rank": 1, "rank": r })))
        }),
        Check::new("lattice.m.det", "lattice spanned by two sections and fiber components", |_| {
            let c = SectionConfiguration::shipped();
            let l = c.lattice();
            let d = l.det();
            let g = big(&l.discriminant_group()?);
            Ok((d == (-972).into() && g == [3, 3, 3, 6, 6], json!({ "configuration": to_value(&c), "det": d.to_string(), "discriminant_group": g })))
        }),
        Check::new("lattice.a2m.discriminant", "discriminant groups of A2(−m)", |_| {
            let mut ok = true;
            let mut rows = vec![];
            for m in 1..=6i64 {
                let l = a2_printed(m);
                let snf = big(&l.smith_normal_form());
                let group = big(&l.discriminant_group()?);
                let expected: Vec<i64> = [m, 3 * m].into_iter().filter(|&x| x != 1).collect();
                ok &= snf == [m, 3 * m] && group == expected;
                rows.push(json!({
                    "m": m,
                    "snf": snf,
                    "order": 3 * m * m,
                    "printed": format!("Z/3 + Z/{}", 3 * m),
                    "printed_order": 9 * m,
                    "printed_agrees": 9 * m == 3 * m * m,
                }));
            }
            Ok((ok, json!(rows)))
        }),
    ]
}

fn literal_checks() -> Vec<Check> {
    vec![Check::new("literal.halphen_map.subring", "pullbacks of S and T under the Halphen map, read without removing a common factor", |_| {
        let r = halphen_map()?;
        Ok((
            r.pullbacks_in_subring,
            json!({
                "pullbacks_in_subring": r.pullbacks_in_subring,
                "common_factor_degree": r.common_factor_degree,
                "common_factor_is_halphen_product": r.common_factor_is_halphen_product,
            }),
        ))
    })]
}

/// All checks in registry order for the given λ samples.
pub fn registry(lambdas: &[String]) -> Vec<Check> {
    let mut v = hesse_checks();
    v.extend(surface_checks());
    v.extend(group_checks());
    v.extend(ellaw_checks(lambdas));
    v.extend(lattice_checks());
    v.extend(literal_checks());
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(lambda_label("1/2"), "1_2");
        assert_eq!(lambda_label("-3"), "m3");
        assert_eq!(lambda_label("6*eps"), "6_eps");
    }

    #[test]
    fn ids_are_unique() {
        let r = registry(&["1".into(), "2".into(), "1/2".into()]);
        let mut ids: Vec<&str> = r.iter().map(|c| c.id.as_str()).collect();
        ids.sort();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn lambda_parsing() {
        assert!(parse_lambda("1/2").is_ok());
        assert!(parse_lambda("6*eps").is_ok());
        assert!(parse_lambda("inf").is_ok());
        assert!(parse_lambda("x+").is_err());
    }
}
