use hesse_core::field::{q, q_eps, FieldTower};
use hesse_core::groups::named::hessian_generators;
use hesse_core::groups::GroupSpec;
use hesse_core::hesse::{hessian_parameter, pencil_member, PencilParameter};
use hesse_core::lattice::{standard_lattice, IntLattice};
use hesse_core::poly::Poly;
use hesse_core::Ring;

#[test]
fn hessian_of_a_member_by_hand() {
    // F = S + T: the Hessian matrix is [[6x, z, y], [z, 6y, x], [y, x, 6z]], det = 218xyz − 6S
    let t = q();
    let f = Poly::parse("x^3+y^3+z^3+x*y*z", &t, 3).unwrap();
    assert_eq!(f.hessian_determinant(), Poly::parse("-6*x^3-6*y^3-6*z^3+218*x*y*z", &t, 3).unwrap());
    let h = hessian_parameter(&PencilParameter::parse(&t, "1").unwrap());
    let member = pencil_member(&h);
    assert!(member.equation().proportionality(&f.hessian_determinant()).scalar().is_some());
    assert_eq!(h, PencilParameter::parse(&t, "-109/3").unwrap());
}

#[test]
fn tower_json_round_trip() {
    let t = q_eps();
    let back = FieldTower::from_json(&t.to_json()).unwrap();
    let a = back.parse("1/2 + 3*eps").unwrap();
    assert_eq!(a.to_text(), t.parse("1/2 + 3*eps").unwrap().to_text());
    // ε² + ε + 1 = 0
    assert!(back.parse("eps^2 + eps + 1").unwrap().is_zero());
}

#[test]
fn group_spec_round_trip() {
    let t = q_eps();
    let g = hessian_generators(&t).unwrap();
    let spec = GroupSpec::from_transforms("gamma", &g[1..3], true);
    let back = GroupSpec::from_json(&spec.to_json()).unwrap();
    // ⟨g1, g2⟩ ≅ (Z/3)² acting on P²
    assert_eq!(back.generate().unwrap().order(), 9);
}

#[test]
fn lattice_json_round_trip() {
    let l = IntLattice::sum_of(&[standard_lattice("U", 1).unwrap(), standard_lattice("E8", -1).unwrap()]);
    let back = IntLattice::from_json(&l.to_json()).unwrap();
    assert_eq!(back, l);
    // det U = −1 and E8 is unimodular
    assert_eq!(back.det(), (-1).into());
}
