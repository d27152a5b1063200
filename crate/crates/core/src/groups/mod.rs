//! Finite matrix groups over a number-field tower: closure, orders, orbits and the
//! action of the Hessian group on points, curves and pencil parameters.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldTower, TowerSpec};
use crate::hesse::PencilParameter;
use crate::plane::ProjPoint;
use crate::poly::{linalg, MultiPoly, Poly};
use crate::ring::{Field, Ring};

pub mod named;
pub mod symplectic;

/// Square matrix, row-major.
pub type Matrix = Vec<Vec<FieldElement>>;

pub fn identity(n: usize, t: &Arc<FieldTower>) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { t.one() } else { t.zero() }).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let t = a[0][0].tower();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(t.zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j])))).collect())
        .collect()
}

pub fn mat_scale(a: &Matrix, c: &FieldElement) -> Matrix {
    a.iter().map(|r| r.iter().map(|x| x.mul(c)).collect()).collect()
}

pub fn mat_det(a: &Matrix) -> FieldElement {
    linalg::det_field(a, a[0][0].tower())
}

/// Inverse by solving against the identity columns.
pub fn mat_inv(a: &Matrix) -> Result<Matrix> {
    let n = a.len();
    let t = a[0][0].tower().clone();
    let id = identity(n, &t);
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let b: Vec<FieldElement> = (0..n).map(|i| id[i][j].clone()).collect();
        cols.push(linalg::solve(a, &b, &t).ok_or(Error::Singular)?);
    }
    Ok((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Scales so that the first nonzero entry (row-major) is 1.
pub fn canonical(a: &Matrix) -> Matrix {
    let lead = a.iter().flatten().find(|x| !x.is_zero()).expect("nonzero matrix");
    mat_scale(a, &lead.inv().unwrap())
}

pub fn mat_text(a: &Matrix) -> String {
    let rows: Vec<String> = a.iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_text()).collect::<Vec<_>>().join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

/// f(M·x): substitutes x_i ↦ Σ_j M_ij x_j.
pub fn pullback(f: &Poly, m: &Matrix) -> Poly {
    let t = f.coeff_ctx();
    let n = m.len();
    let xs = MultiPoly::vars(t, n);
    let imgs: Vec<Poly> = m.iter().map(|row| row.iter().zip(&xs).fold(Poly::zero(t, n), |acc, (c, x)| acc.add(&x.scale(c)))).collect();
    f.substitute(&imgs).expect("arity checked by caller")
}

/// A projective transformation of P², stored canonically, with an optional linear lift.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjTransform {
    matrix: Matrix,
    lift: Option<Matrix>,
}

impl ProjTransform {
    /// The class of `m` in PGL(3); `m` itself is kept as the linear lift.
    pub fn new(m: Matrix) -> Result<Self> {
        if m.len() != 3 || m.iter().any(|r| r.len() != 3) {
            return Err(Error::Arity { expected: 3, got: m.len() });
        }
        if mat_det(&m).is_zero() {
            return Err(Error::Singular);
        }
        Ok(ProjTransform { matrix: canonical(&m), lift: Some(m) })
    }

    /// A class with no distinguished lift.
    pub fn projective(m: Matrix) -> Result<Self> {
        let mut g = ProjTransform::new(m)?;
        g.lift = None;
        Ok(g)
    }

    pub fn parse(t: &Arc<FieldTower>, rows: [[&str; 3]; 3]) -> Result<Self> {
        let m = rows.iter().map(|r| r.iter().map(|s| t.parse(s)).collect::<Result<Vec<_>>>()).collect::<Result<Matrix>>()?;
        ProjTransform::new(m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn lift(&self) -> Option<&Matrix> {
        self.lift.as_ref()
    }

    /// The lift if present, else the canonical matrix.
    pub fn linear(&self) -> &Matrix {
        self.lift.as_ref().unwrap_or(&self.matrix)
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        self.matrix[0][0].tower()
    }

    pub fn with_lift(&self, lift: Matrix) -> Result<Self> {
        let g = ProjTransform::new(lift)?;
        if g.matrix != self.matrix {
            return Err(Error::Invalid("lift is not a representative of the class".into()));
        }
        Ok(g)
    }

    /// self ∘ other; lifts compose when both are present.
    pub fn compose(&self, other: &ProjTransform) -> ProjTransform {
        match (&self.lift, &other.lift) {
            (Some(a), Some(b)) => ProjTransform::new(mat_mul(a, b)).unwrap(),
            _ => ProjTransform::projective(mat_mul(&self.matrix, &other.matrix)).unwrap(),
        }
    }

    pub fn inverse(&self) -> ProjTransform {
        match &self.lift {
            Some(a) => ProjTransform::new(mat_inv(a).unwrap()).unwrap(),
            None => ProjTransform::projective(mat_inv(&self.matrix).unwrap()).unwrap(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity(3, self.tower())
    }

    pub fn apply(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let q = p.lift_to(self.tower())?;
        let c = q.coords();
        ProjPoint::new([0, 1, 2].map(|i| (0..3).fold(self.tower().zero(), |acc, j| acc.add(&self.matrix[i][j].mul(&c[j])))))
    }

    /// f ∘ g using the lift (or the canonical matrix).
    pub fn pullback(&self, f: &Poly) -> Poly {
        pullback(f, self.linear())
    }

    /// Equation of the image curve g(C) = {f ∘ g⁻¹ = 0}.
    pub fn push_curve(&self, f: &Poly) -> Poly {
        self.inverse().pullback(f)
    }

    pub fn lift_to(&self, t: &Arc<FieldTower>) -> Result<Self> {
        let up = |m: &Matrix| m.iter().map(|r| r.iter().map(|x| x.lift_to(t)).collect::<Result<Vec<_>>>()).collect::<Result<Matrix>>();
        Ok(ProjTransform { matrix: up(&self.matrix)?, lift: self.lift.as_ref().map(up).transpose()? })
    }

    pub fn to_text(&self) -> String {
        mat_text(self.linear())
    }
}

impl fmt::Debug for ProjTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// A finite group of n×n matrices, linear or projective (canonical representatives).
#[derive(Clone)]
pub struct MatrixGroup {
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
    generators: Vec<Matrix>,
    projective: bool,
}

pub const DEFAULT_CAP: usize = 2000;

/// Breadth-first closure of the generators.
pub fn generate_closure(gens: &[ProjTransform], projective: bool, cap: usize) -> Result<MatrixGroup> {
    let mats: Vec<Matrix> = gens.iter().map(|g| if projective { g.matrix.clone() } else { g.linear().clone() }).collect();
    generate_matrix_closure(&mats, projective, cap)
}

/// Closure of arbitrary square matrices of a common size.
pub fn generate_matrix_closure(gens: &[Matrix], projective: bool, cap: usize) -> Result<MatrixGroup> {
    let first = gens.first().ok_or(Error::ZeroInput("generate_closure"))?;
    let n = first.len();
    let t = first[0][0].tower().clone();
    let norm = |m: Matrix| if projective { canonical(&m) } else { m };
    let generators: Vec<Matrix> = gens.iter().cloned().map(norm).collect();
    let id = identity(n, &t);
    let mut g = MatrixGroup { elements: vec![id.clone()], index: HashMap::from([(id, 0)]), generators: generators.clone(), projective };
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for s in &generators {
            let p = norm(mat_mul(&g.elements[i], s));
            if !g.index.contains_key(&p) {
                if g.elements.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                g.index.insert(p.clone(), g.elements.len());
                queue.push_back(g.elements.len());
                g.elements.push(p);
            }
        }
    }
    Ok(g)
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }

    fn norm(&self, m: Matrix) -> Matrix {
        if self.projective {
            canonical(&m)
        } else {
            m
        }
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.index.contains_key(&self.norm(m.clone()))
    }

    pub fn mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        self.norm(mat_mul(a, b))
    }

    pub fn element_order(&self, m: &Matrix) -> usize {
        let id = &self.elements[0];
        let mut p = self.norm(m.clone());
        let mut k = 1;
        while p != *id {
            p = self.mul(&p, m);
            k += 1;
        }
        k
    }

    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for m in &self.elements {
            *h.entry(self.element_order(m)).or_insert(0) += 1;
        }
        h
    }

    fn commutes(&self, a: &Matrix, b: &Matrix) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn center_order(&self) -> usize {
        self.elements.iter().filter(|z| self.generators.iter().all(|g| self.commutes(z, g))).count()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| self.generators.iter().all(|b| self.commutes(a, b)))
    }

    pub fn is_subgroup(&self, h: &MatrixGroup) -> bool {
        h.projective == self.projective && h.elements.iter().all(|m| self.index.contains_key(m))
    }

    /// g·h·g⁻¹ ∈ H for all generators g of G and h of H.
    pub fn is_normal(&self, h: &MatrixGroup) -> Result<bool> {
        if !self.is_subgroup(h) {
            return Err(Error::NotSubgroup);
        }
        for g in &self.generators {
            let gi = self.norm(mat_inv(g)?);
            for x in &h.generators {
                if !h.index.contains_key(&self.mul(&self.mul(g, x), &gi)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn facts(&self) -> GroupFacts {
        let hist = self.order_histogram();
        GroupFacts {
            order: self.order(),
            center_order: self.center_order(),
            abelian: self.is_abelian(),
            involutions: hist.get(&2).copied().unwrap_or(0),
            element_orders: hist,
        }
    }

    pub fn transforms(&self) -> Vec<ProjTransform> {
        self.elements.iter().map(|m| ProjTransform::new(m.clone()).unwrap()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupFacts {
    pub order: usize,
    pub center_order: usize,
    pub abelian: bool,
    pub involutions: usize,
    /// element order ↦ number of elements
    pub element_orders: BTreeMap<usize, usize>,
}

pub fn group_facts(g: &MatrixGroup) -> GroupFacts {
    g.facts()
}

/// Permutation (as image list) induced on a list; `None` if not a permutation.
fn induced(list_len: usize, image_of: impl Fn(usize) -> Option<usize>) -> Option<Vec<usize>> {
    let mut seen = vec![false; list_len];
    let mut perm = Vec::with_capacity(list_len);
    for i in 0..list_len {
        let j = image_of(i)?;
        if seen[j] {
            return None;
        }
        seen[j] = true;
        perm.push(j);
    }
    Some(perm)
}

pub fn point_permutation(g: &ProjTransform, pts: &[ProjPoint]) -> Result<Vec<usize>> {
    induced(pts.len(), |i| g.apply(&pts[i]).ok().and_then(|q| pts.iter().position(|p| *p == q))).ok_or(Error::NotPermuting)
}

/// Permutation of curves by g(C) = {f∘g⁻¹ = 0}, matched up to scalar.
pub fn curve_permutation(g: &ProjTransform, curves: &[Poly]) -> Result<Vec<usize>> {
    let gi = g.inverse();
    let images: Vec<Poly> = curves.iter().map(|f| gi.pullback(f)).collect();
    induced(curves.len(), |i| curves.iter().position(|c| images[i].proportionality(c).scalar().is_some_and(|s| !s.is_zero())))
        .ok_or(Error::NotPermuting)
}

/// Cycle notation with the given labels, fixed points omitted; "()" for the identity.
pub fn cycle_text(perm: &[usize], labels: &[String]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for s in 0..perm.len() {
        if seen[s] || perm[s] == s {
            continue;
        }
        out.push('(');
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&labels[i]);
            i = perm[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Parses cycle notation such as "(031)(475)(682)" with single-character labels.
pub fn parse_cycles(s: &str, labels: &[String]) -> Result<Vec<usize>> {
    let n = labels.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let bad = || Error::Invalid(format!("bad cycle notation `{s}`"));
    for cyc in s.split(')').map(|c| c.trim().trim_start_matches('(')).filter(|c| !c.is_empty()) {
        let mut idx = vec![];
        let chars: Vec<char> = cyc.chars().collect();
        let mut k = 0;
        while k < chars.len() {
            // labels may carry a trailing prime
            let mut tok = chars[k].to_string();
            if k + 1 < chars.len() && (chars[k + 1] == '′' || chars[k + 1] == '\'') {
                tok.push('′');
                k += 1;
            }
            idx.push(labels.iter().position(|l| *l == tok).ok_or_else(bad)?);
            k += 1;
        }
        for w in 0..idx.len() {
            perm[idx[w]] = idx[(w + 1) % idx.len()];
        }
    }
    Ok(perm)
}

fn compose_perm(a: &[usize], b: &[usize]) -> Vec<usize> {
    // apply b then a
    b.iter().map(|&i| a[i]).collect()
}

/// Closure of permutations under composition.
pub fn permutation_closure(gens: &[Vec<usize>], cap: usize) -> Result<Vec<Vec<usize>>> {
    let n = gens.first().map_or(0, |g| g.len());
    let id: Vec<usize> = (0..n).collect();
    let mut all = vec![id.clone()];
    let mut seen = std::collections::HashSet::from([id]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let p = compose_perm(g, &all[i]);
            if seen.insert(p.clone()) {
                if all.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                queue.push_back(all.len());
                all.push(p);
            }
        }
    }
    Ok(all)
}

#[derive(Clone, Debug, Serialize)]
pub struct PermImage {
    pub labels: Vec<String>,
    /// Image of each generator.
    pub generators: Vec<Vec<usize>>,
    pub generator_cycles: Vec<String>,
    pub order: usize,
    /// The image has the same order as the group.
    pub faithful: bool,
    pub transitive: bool,
    pub two_transitive: bool,
    pub orbits: Vec<Vec<usize>>,
    /// Homomorphism spot check on products of consecutive generators.
    pub homomorphism_checked: bool,
    #[serde(skip)]
    pub elements: Vec<Vec<usize>>,
}

impl PermImage {
    pub fn contains(&self, perm: &[usize]) -> bool {
        self.elements.iter().any(|p| p == perm)
    }
}

fn orbits_of(elements: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = vec![];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut orb: Vec<usize> = elements.iter().map(|p| p[s]).collect();
        orb.sort();
        orb.dedup();
        for &o in &orb {
            seen[o] = true;
        }
        out.push(orb);
    }
    out
}

fn perm_image(labels: Vec<String>, group_order: usize, gens: Vec<Vec<usize>>, check: impl Fn(usize, usize) -> Result<Vec<usize>>) -> Result<PermImage> {
    let n = labels.len();
    let elements = permutation_closure(&gens, 100_000)?;
    let orbits = orbits_of(&elements, n);
    let pairs: Vec<Vec<usize>> = elements.iter().map(|p| (0..n * n).map(|k| p[k / n] * n + p[k % n]).collect()).collect();
    let pair_orbits = orbits_of(&pairs, n * n);
    let mut hom = true;
    for i in 0..gens.len().saturating_sub(1) {
        hom &= check(i, i + 1)? == compose_perm(&gens[i], &gens[i + 1]);
    }
    Ok(PermImage {
        generator_cycles: gens.iter().map(|g| cycle_text(g, &labels)).collect(),
        order: elements.len(),
        faithful: elements.len() == group_order,
        transitive: orbits.len() == 1,
        two_transitive: n > 1 && pair_orbits.len() == 2,
        orbits,
        homomorphism_checked: hom,
        generators: gens,
        labels,
        elements,
    })
}

/// Permutation image of a projective group on a labeled point list.
pub fn action_on_points(g: &MatrixGroup, pts: &[ProjPoint], labels: Vec<String>) -> Result<PermImage> {
    let gens: Vec<ProjTransform> = g.generators.iter().map(|m| ProjTransform::projective(m.clone())).collect::<Result<_>>()?;
    let perms = gens.iter().map(|h| point_permutation(h, pts)).collect::<Result<Vec<_>>>()?;
    perm_image(labels, g.order(), perms, |i, j| point_permutation(&gens[i].compose(&gens[j]), pts))
}

/// Permutation image on curves (matched up to scalar).
pub fn action_on_curves(g: &MatrixGroup, curves: &[Poly], labels: Vec<String>) -> Result<PermImage> {
    let gens: Vec<ProjTransform> = g.generators.iter().map(|m| ProjTransform::projective(m.clone())).collect::<Result<_>>()?;
    let perms = gens.iter().map(|h| curve_permutation(h, curves)).collect::<Result<Vec<_>>>()?;
    perm_image(labels, g.order(), perms, |i, j| curve_permutation(&gens[i].compose(&gens[j]), curves))
}

/// Möbius action on the pencil parameter: g(E_t) = E_{N·t}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParameterAction {
    /// (t0, t1) ↦ (m00·t0 + m01·t1, m10·t0 + m11·t1).
    pub matrix: Matrix,
}

impl ParameterAction {
    pub fn apply(&self, p: &PencilParameter) -> Result<PencilParameter> {
        let q = p.lift_to(self.matrix[0][0].tower())?;
        let [t0, t1] = q.coords();
        let m = &self.matrix;
        PencilParameter::new(m[0][0].mul(t0).add(&m[0][1].mul(t1)), m[1][0].mul(t0).add(&m[1][1].mul(t1)))
    }

    pub fn is_identity(&self) -> bool {
        canonical(&self.matrix) == identity(2, self.matrix[0][0].tower())
    }
}

/// Coordinates (a, b) of f = a·S + b·T, if f lies in the span.
fn in_pencil(f: &Poly, s: &Poly, t: &Poly) -> Option<(FieldElement, FieldElement)> {
    let a = f.coeff(&[3, 0, 0]);
    let b = f.coeff(&[1, 1, 1]);
    (s.scale(&a).add(&t.scale(&b)) == *f).then_some((a, b))
}

/// The induced action of g on the parameter line.
pub fn parameter_action(g: &ProjTransform) -> Result<ParameterAction> {
    let tw = g.tower();
    let (s, t) = crate::hesse::s_t(tw);
    let gi = g.inverse();
    let (a, b) = in_pencil(&gi.pullback(&s), &s, &t).ok_or(Error::NotPencilPreserving)?;
    let (c, d) = in_pencil(&gi.pullback(&t), &s, &t).ok_or(Error::NotPencilPreserving)?;
    // t0·S∘g⁻¹ + t1·T∘g⁻¹ = (a t0 + c t1) S + (b t0 + d t1) T
    Ok(ParameterAction { matrix: vec![vec![a, c], vec![b, d]] })
}

/// Image of the group in Aut(P¹).
pub fn parameter_image(g: &MatrixGroup) -> Result<MatrixGroup> {
    let acts = g
        .generators
        .iter()
        .map(|m| parameter_action(&ProjTransform::projective(m.clone())?).map(|a| a.matrix))
        .collect::<Result<Vec<_>>>()?;
    generate_matrix_closure(&acts, true, DEFAULT_CAP)
}

/// c with f∘M = c·f for the matrix M.
pub fn invariance_factor_matrix(f: &Poly, m: &Matrix) -> Result<FieldElement> {
    let tw = m[0][0].tower();
    let f = f.lift_to(tw)?;
    let img = pullback(&f, m);
    match img.proportionality(&f) {
        crate::poly::Proportionality::Scalar(c) if !c.is_zero() => Ok(c),
        crate::poly::Proportionality::Scalar(_) => Err(Error::NotProportional("image vanishes".into())),
        crate::poly::Proportionality::Mismatch { monomial, .. } => Err(Error::NotProportional(monomial.to_text(&crate::poly::default_names(3)))),
    }
}

/// c with f∘g = c·f, using the linear lift when `use_lift` and one is stored.
pub fn invariance_factor(f: &Poly, g: &ProjTransform, use_lift: bool) -> Result<FieldElement> {
    invariance_factor_matrix(f, if use_lift { g.linear() } else { g.matrix() })
}

/// JSON description of a group: tower plus generator matrices in the element grammar.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    pub tower: TowerSpec,
    pub projective: bool,
    #[serde(default = "default_cap")]
    pub cap: usize,
    pub generators: Vec<[[String; 3]; 3]>,
}

fn default_cap() -> usize {
    DEFAULT_CAP
}

impl GroupSpec {
    pub fn from_transforms(name: &str, gens: &[ProjTransform], projective: bool) -> Self {
        GroupSpec {
            name: name.into(),
            tower: gens[0].tower().spec(),
            projective,
            cap: DEFAULT_CAP,
            generators: gens.iter().map(|g| { let m = g.linear(); [0, 1, 2].map(|i| [0, 1, 2].map(|j| m[i][j].to_text())) }).collect(),
        }
    }

    pub fn transforms(&self) -> Result<Vec<ProjTransform>> {
        let t = FieldTower::create(&self.tower.levels)?;
        self.generators.iter().map(|g| ProjTransform::parse(&t, g.each_ref().map(|r| r.each_ref().map(|s| s.as_str())))).collect()
    }

    pub fn generate(&self) -> Result<MatrixGroup> {
        generate_closure(&self.transforms()?, self.projective, self.cap)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Invalid(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }
}
