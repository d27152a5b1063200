//! Exact rationals and number-field towers Q = K0 ⊂ K1 ⊂ … ⊂ Kn.
//!
//! An element of the tower is stored by its coordinates in the lexicographic
//! power basis, with the lowest level varying fastest: the coordinate index of
//! `a0^e0 * a1^e1 * …` is `e0 + d0*(e1 + d1*(e2 + …))`.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rug::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::ball::Ball;
use crate::numeric::roots::certified_roots;
use crate::ring::{Field, Ring};
use crate::text::{parse_expr, Evaluator};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational_text(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `a`, `-a`, `a/b`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::Parse { pos: 0, msg: format!("not a rational: `{s}`") };
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| err())?)),
    }
}

/// Serialized description of one extension level.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtensionSpec {
    pub symbol: String,
    /// Coefficients in ascending degree, in the text grammar of the previous level.
    pub minpoly_coeffs: Vec<String>,
    pub hint_re: f64,
    pub hint_im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TowerSpec {
    pub levels: Vec<ExtensionSpec>,
}

#[derive(Clone, Debug, PartialEq)]
struct Level {
    symbol: String,
    degree: usize,
    /// Monic minimal polynomial, ascending, coefficients as coordinates of the previous level.
    minpoly: Vec<Vec<Rational>>,
    hint: (f64, f64),
}

/// A tower of simple extensions. Immutable after creation.
pub struct FieldTower {
    levels: Vec<Level>,
    dims: Vec<usize>,
    gen_cache: Mutex<BTreeMap<u32, Arc<Vec<Ball>>>>,
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.levels.iter().map(|l| l.symbol.as_str()).collect();
        write!(f, "Q({})", names.join(","))
    }
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        self.levels == other.levels
    }
}

pub const HINT_TOLERANCE: f64 = 1e-3;
const CREATE_PREC: u32 = 128;

impl FieldTower {
    /// The rationals, as a tower with no levels.
    pub fn rationals() -> Arc<FieldTower> {
        Arc::new(FieldTower { levels: vec![], dims: vec![1], gen_cache: Mutex::new(BTreeMap::new()) })
    }

    /// Builds a tower from serialized level specs.
    pub fn create(specs: &[ExtensionSpec]) -> Result<Arc<FieldTower>> {
        let mut t = FieldTower::rationals();
        for s in specs {
            let coeffs = s
                .minpoly_coeffs
                .iter()
                .map(|c| t.parse(c))
                .collect::<Result<Vec<_>>>()?;
            t = t.extend(&s.symbol, &coeffs, (s.hint_re, s.hint_im))?;
        }
        Ok(t)
    }

    pub fn from_json(json: &str) -> Result<Arc<FieldTower>> {
        let spec: TowerSpec = serde_json::from_str(json).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
        FieldTower::create(&spec.levels)
    }

    pub fn spec(&self) -> TowerSpec {
        let mut levels = Vec::new();
        for (l, lev) in self.levels.iter().enumerate() {
            let below = self.truncated(l);
            let coeffs = lev
                .minpoly
                .iter()
                .map(|c| FieldElement { tower: below.clone(), coords: c.clone() }.to_text())
                .collect();
            levels.push(ExtensionSpec { symbol: lev.symbol.clone(), minpoly_coeffs: coeffs, hint_re: lev.hint.0, hint_im: lev.hint.1 });
        }
        TowerSpec { levels }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.spec()).unwrap()
    }

    /// The sub-tower made of the first `n` levels.
    pub fn truncated(&self, n: usize) -> Arc<FieldTower> {
        Arc::new(FieldTower {
            levels: self.levels[..n].to_vec(),
            dims: self.dims[..=n].to_vec(),
            gen_cache: Mutex::new(BTreeMap::new()),
        })
    }

    /// Adjoins a root of `minpoly` (ascending coefficients in this tower, monic).
    pub fn extend(self: &Arc<Self>, symbol: &str, minpoly: &[FieldElement], hint: (f64, f64)) -> Result<Arc<FieldTower>> {
        if minpoly.len() < 3 {
            return Err(Error::DegreeTooSmall(symbol.to_string()));
        }
        for c in minpoly {
            if !same_tower(&c.tower, self) {
                return Err(Error::TowerMismatch);
            }
        }
        if !minpoly.last().unwrap().is_one() {
            return Err(Error::NonMonic(symbol.to_string()));
        }
        if !symbol.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            || !symbol.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            || self.levels.iter().any(|l| l.symbol == symbol)
        {
            return Err(Error::Invalid(format!("bad symbol `{symbol}`")));
        }
        let degree = minpoly.len() - 1;
        let mut levels = self.levels.clone();
        levels.push(Level {
            symbol: symbol.to_string(),
            degree,
            minpoly: minpoly.iter().map(|c| c.coords.clone()).collect(),
            hint,
        });
        let mut dims = self.dims.clone();
        dims.push(self.total_degree() * degree);
        let t = Arc::new(FieldTower { levels, dims, gen_cache: Mutex::new(BTreeMap::new()) });
        t.generator_balls(CREATE_PREC)?;
        Ok(t)
    }

    pub fn total_degree(&self) -> usize {
        *self.dims.last().unwrap()
    }

    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn level_degrees(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.degree).collect()
    }

    pub fn symbols(&self) -> Vec<String> {
        self.levels.iter().map(|l| l.symbol.clone()).collect()
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement { tower: self.clone(), coords: vec![Rational::zero(); self.total_degree()] }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_rational(&Rational::one())
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> FieldElement {
        self.from_rational(&rat_int(n))
    }

    pub fn from_rational(self: &Arc<Self>, q: &Rational) -> FieldElement {
        let mut e = self.zero();
        e.coords[0] = q.clone();
        e
    }

    pub fn from_coords(self: &Arc<Self>, coords: Vec<Rational>) -> Result<FieldElement> {
        if coords.len() != self.total_degree() {
            return Err(Error::Arity { expected: self.total_degree(), got: coords.len() });
        }
        Ok(FieldElement { tower: self.clone(), coords })
    }

    /// Generator of level `l`.
    pub fn gen_at(self: &Arc<Self>, l: usize) -> FieldElement {
        let mut e = self.zero();
        e.coords[self.dims[l]] = Rational::one();
        e
    }

    pub fn gen(self: &Arc<Self>, symbol: &str) -> Option<FieldElement> {
        self.levels.iter().position(|l| l.symbol == symbol).map(|l| self.gen_at(l))
    }

    pub fn parse(self: &Arc<Self>, s: &str) -> Result<FieldElement> {
        let e = parse_expr(s)?;
        ElemEval { tower: self.clone() }.eval(&e)
    }

    /// A primitive cube root of unity e^{2πi/3}, if the tower has one named by convention.
    pub fn eps(self: &Arc<Self>) -> Option<FieldElement> {
        if let Some(e) = self.gen("eps") {
            return Some(e);
        }
        self.gen("zeta9").map(|z| z.pow(3))
    }

    /// Complex embeddings of the generators at `prec` bits (cached per precision).
    pub fn generator_balls(&self, prec: u32) -> Result<Arc<Vec<Ball>>> {
        if let Some(g) = self.gen_cache.lock().unwrap().get(&prec) {
            return Ok(g.clone());
        }
        let mut gens: Vec<Ball> = Vec::new();
        for (l, lev) in self.levels.iter().enumerate() {
            let coeffs: Vec<Ball> = lev.minpoly.iter().map(|c| self.embed_depth(l, c, &gens, prec + 16)).collect();
            let roots = certified_roots(&coeffs, prec + 16).map_err(|_| Error::EmbeddingFailed(lev.symbol.clone()))?;
            let hint = Complex::with_val(prec + 16, lev.hint);
            let mut near: Vec<(f64, Ball)> = roots
                .into_iter()
                .map(|b| {
                    let d = Complex::with_val(prec + 16, &b.mid - &hint);
                    (d.abs().real().to_f64(), b)
                })
                .collect();
            near.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
            let count = near.iter().filter(|(d, _)| *d < HINT_TOLERANCE).count();
            if count > 1 {
                return Err(Error::AmbiguousHint { symbol: lev.symbol.clone(), count });
            }
            if count == 0 {
                return Err(Error::EmbeddingFailed(lev.symbol.clone()));
            }
            gens.push(near.swap_remove(0).1);
        }
        let gens = Arc::new(gens);
        self.gen_cache.lock().unwrap().insert(prec, gens.clone());
        Ok(gens)
    }

    fn embed_depth(&self, depth: usize, a: &[Rational], gens: &[Ball], prec: u32) -> Ball {
        if depth == 0 {
            return Ball::from_rational(&a[0], prec);
        }
        let d = self.levels[depth - 1].degree;
        let block = self.dims[depth - 1];
        let g = &gens[depth - 1];
        let mut acc = Ball::zero(prec);
        for e in (0..d).rev() {
            acc = acc.mul(g);
            let part = &a[e * block..(e + 1) * block];
            if part.iter().any(|q| !q.is_zero()) {
                acc = acc.add(&self.embed_depth(depth - 1, part, gens, prec));
            }
        }
        acc
    }

    // ---- arithmetic on coordinate slices of a given depth ----

    fn mul_depth(&self, depth: usize, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if depth == 0 {
            return vec![&a[0] * &b[0]];
        }
        let lev = &self.levels[depth - 1];
        let d = lev.degree;
        let block = self.dims[depth - 1];
        let ab: Vec<&[Rational]> = (0..d).map(|i| &a[i * block..(i + 1) * block]).collect();
        let bb: Vec<&[Rational]> = (0..d).map(|i| &b[i * block..(i + 1) * block]).collect();
        let nz = |s: &[Rational]| s.iter().any(|q| !q.is_zero());
        let mut prod: Vec<Vec<Rational>> = vec![vec![Rational::zero(); block]; 2 * d - 1];
        for i in 0..d {
            if !nz(ab[i]) {
                continue;
            }
            for j in 0..d {
                if !nz(bb[j]) {
                    continue;
                }
                let t = self.mul_depth(depth - 1, ab[i], bb[j]);
                add_assign(&mut prod[i + j], &t);
            }
        }
        self.reduce_poly(depth, &mut prod);
        prod.truncate(d);
        prod.concat()
    }

    /// Reduces a polynomial over depth-1 coordinates modulo the level's monic minpoly, in place.
    fn reduce_poly(&self, depth: usize, p: &mut Vec<Vec<Rational>>) {
        let lev = &self.levels[depth - 1];
        let d = lev.degree;
        while p.len() > d {
            let top = p.pop().unwrap();
            if top.iter().all(|q| q.is_zero()) {
                continue;
            }
            let m = p.len(); // degree of removed term
            for j in 0..d {
                let c = &lev.minpoly[j];
                if c.iter().all(|q| q.is_zero()) {
                    continue;
                }
                let t = self.mul_depth(depth - 1, &top, c);
                sub_assign(&mut p[m - d + j], &t);
            }
        }
        while p.len() < d {
            p.push(vec![Rational::zero(); self.dims[depth - 1]]);
        }
    }

    fn inv_depth(&self, depth: usize, a: &[Rational]) -> Option<Vec<Rational>> {
        if a.iter().all(|q| q.is_zero()) {
            return None;
        }
        if depth == 0 {
            return Some(vec![a[0].recip()]);
        }
        let lev = &self.levels[depth - 1];
        let d = lev.degree;
        let block = self.dims[depth - 1];
        let k = UniOps { t: self, depth: depth - 1 };
        let av: Vec<Vec<Rational>> = (0..d).map(|i| a[i * block..(i + 1) * block].to_vec()).collect();
        let (mut r0, mut r1) = (k.trim(lev.minpoly.clone()), k.trim(av));
        let (mut s0, mut s1) = (vec![], vec![k.one()]);
        while !r1.is_empty() {
            let (q, r) = k.divrem(&r0, &r1)?;
            let s2 = k.sub(&s0, &k.mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            // gcd of positive degree: minimal polynomial is reducible
            return None;
        }
        let c = self.inv_depth(depth - 1, &r0[0])?;
        let mut s: Vec<Vec<Rational>> = s0.iter().map(|x| self.mul_depth(depth - 1, x, &c)).collect();
        self.reduce_poly(depth, &mut s);
        s.truncate(d);
        Some(s.concat())
    }
}

fn add_assign(a: &mut [Rational], b: &[Rational]) {
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += y;
        }
    }
}

fn sub_assign(a: &mut [Rational], b: &[Rational]) {
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x -= y;
        }
    }
}

/// Dense univariate polynomials over a fixed depth of a tower, no trailing zeros.
struct UniOps<'a> {
    t: &'a FieldTower,
    depth: usize,
}

impl UniOps<'_> {
    fn is_zero(&self, c: &[Rational]) -> bool {
        c.iter().all(|q| q.is_zero())
    }
    fn one(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.t.dims[self.depth]];
        v[0] = Rational::one();
        v
    }
    fn trim(&self, mut p: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
        while p.last().is_some_and(|c| self.is_zero(c)) {
            p.pop();
        }
        p
    }
    fn sub(&self, a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        let n = a.len().max(b.len());
        let z = vec![Rational::zero(); self.t.dims[self.depth]];
        let out = (0..n)
            .map(|i| {
                let mut x = a.get(i).unwrap_or(&z).clone();
                sub_assign(&mut x, b.get(i).unwrap_or(&z));
                x
            })
            .collect();
        self.trim(out)
    }
    fn mul(&self, a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![vec![Rational::zero(); self.t.dims[self.depth]]; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let t = self.t.mul_depth(self.depth, x, y);
                add_assign(&mut out[i + j], &t);
            }
        }
        self.trim(out)
    }
    fn divrem(&self, a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Option<(Vec<Vec<Rational>>, Vec<Vec<Rational>>)> {
        let lead_inv = self.t.inv_depth(self.depth, b.last()?)?;
        let mut r = a.to_vec();
        let z = vec![Rational::zero(); self.t.dims[self.depth]];
        let mut q = vec![z.clone(); a.len().saturating_sub(b.len()) + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = self.t.mul_depth(self.depth, r.last().unwrap(), &lead_inv);
            for (j, bj) in b.iter().enumerate() {
                let t = self.t.mul_depth(self.depth, &c, bj);
                sub_assign(&mut r[shift + j], &t);
            }
            q[shift] = c;
            r.pop();
            r = self.trim(r);
        }
        Some((self.trim(q), r))
    }
}

fn same_tower(a: &Arc<FieldTower>, b: &Arc<FieldTower>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Element of a [`FieldTower`], canonical by construction.
#[derive(Clone)]
pub struct FieldElement {
    tower: Arc<FieldTower>,
    coords: Vec<Rational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && same_tower(&self.tower, &other.tower)
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact arithmetic with tower and zero-division checks.
pub fn field_arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    if !same_tower(&a.tower, &b.tower) {
        return Err(Error::TowerMismatch);
    }
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b).ok_or(Error::DivisionByZero)?,
    })
}

/// A complex value with a guaranteed absolute error bound.
#[derive(Clone, Debug)]
pub struct Embedded {
    pub value: Complex,
    pub error: rug::Float,
}

impl Embedded {
    pub fn error_f64(&self) -> f64 {
        self.error.to_f64()
    }
    pub fn re_f64(&self) -> f64 {
        self.value.real().to_f64()
    }
    pub fn im_f64(&self) -> f64 {
        self.value.imag().to_f64()
    }
}

impl FieldElement {
    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|q| q.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    /// Same element viewed in a tower that extends this one.
    pub fn lift_to(&self, tower: &Arc<FieldTower>) -> Result<FieldElement> {
        let n = self.tower.levels.len();
        if tower.levels.len() < n || tower.levels[..n] != self.tower.levels[..] {
            return Err(Error::TowerMismatch);
        }
        let mut coords = self.coords.clone();
        coords.resize(tower.total_degree(), Rational::zero());
        Ok(FieldElement { tower: tower.clone(), coords })
    }

    pub fn scale(&self, q: &Rational) -> FieldElement {
        FieldElement { tower: self.tower.clone(), coords: self.coords.iter().map(|c| c * q).collect() }
    }

    pub fn embed(&self, prec: u32) -> Result<Ball> {
        let gens = self.tower.generator_balls(prec)?;
        Ok(self.tower.embed_depth(self.tower.levels.len(), &self.coords, &gens, prec))
    }

    /// Complex approximation with a guaranteed error bound.
    pub fn embed_complex(&self, precision_bits: u32) -> Result<Embedded> {
        let precision_bits = precision_bits.max(64);
        let b = self.embed(precision_bits)?;
        Ok(Embedded { value: Complex::with_val(precision_bits, &b.mid), error: b.rad })
    }

    fn check(&self, o: &FieldElement) {
        assert!(same_tower(&self.tower, &o.tower), "tower mismatch: {:?} vs {:?}", self.tower, o.tower);
    }
}

impl Ring for FieldElement {
    type Ctx = Arc<FieldTower>;

    fn ctx(&self) -> Arc<FieldTower> {
        self.tower.clone()
    }
    fn zero_in(t: &Arc<FieldTower>) -> Self {
        t.zero()
    }
    fn one_in(t: &Arc<FieldTower>) -> Self {
        t.one()
    }
    fn from_i64_in(t: &Arc<FieldTower>, n: i64) -> Self {
        t.from_int(n)
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|q| q.is_zero())
    }
    fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|q| q.is_zero())
    }
    fn add(&self, o: &Self) -> Self {
        self.check(o);
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect();
        FieldElement { tower: self.tower.clone(), coords }
    }
    fn sub(&self, o: &Self) -> Self {
        self.check(o);
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect();
        FieldElement { tower: self.tower.clone(), coords }
    }
    fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let n = self.tower.levels.len();
        FieldElement { tower: self.tower.clone(), coords: self.tower.mul_depth(n, &self.coords, &o.coords) }
    }
    fn neg(&self) -> Self {
        FieldElement { tower: self.tower.clone(), coords: self.coords.iter().map(|q| -q).collect() }
    }

    fn to_text(&self) -> String {
        let t = &self.tower;
        let mut out = String::new();
        for (idx, q) in self.coords.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let mut mono = Vec::new();
            for (l, lev) in t.levels.iter().enumerate() {
                let e = (idx / t.dims[l]) % lev.degree;
                match e {
                    0 => {}
                    1 => mono.push(lev.symbol.clone()),
                    _ => mono.push(format!("{}^{}", lev.symbol, e)),
                }
            }
            let neg = q.is_negative();
            let a = q.abs();
            let body = if mono.is_empty() {
                rational_text(&a)
            } else if a.is_one() {
                mono.join("*")
            } else {
                format!("{}*{}", rational_text(&a), mono.join("*"))
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    fn is_atomic_text(&self) -> bool {
        let nz: Vec<usize> = (0..self.coords.len()).filter(|&i| !self.coords[i].is_zero()).collect();
        nz.is_empty() || (nz == [0] && self.coords[0].is_integer() && !self.coords[0].is_negative())
    }
}

impl Field for FieldElement {
    fn inv(&self) -> Option<Self> {
        let n = self.tower.levels.len();
        self.tower
            .inv_depth(n, &self.coords)
            .map(|coords| FieldElement { tower: self.tower.clone(), coords })
    }
}

struct ElemEval {
    tower: Arc<FieldTower>,
}

impl Evaluator for ElemEval {
    type Value = FieldElement;
    fn int(&self, n: &BigInt) -> Result<FieldElement> {
        Ok(self.tower.from_rational(&Rational::from_integer(n.clone())))
    }
    fn ident(&self, name: &str) -> Result<FieldElement> {
        self.tower
            .gen(name)
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown symbol `{name}`") })
    }
    fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(Ring::add(&a, &b))
    }
    fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(Ring::sub(&a, &b))
    }
    fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(Ring::mul(&a, &b))
    }
    fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        a.div(&b).ok_or(Error::DivisionByZero)
    }
    fn neg(&self, a: FieldElement) -> Result<FieldElement> {
        Ok(Ring::neg(&a))
    }
    fn pow(&self, a: FieldElement, e: u32) -> Result<FieldElement> {
        Ok(a.pow(e))
    }
}

/// Exact n-th root of a rational number, if it is rational (sign kept for odd n).
pub fn rational_root(q: &Rational, n: u32) -> Option<Rational> {
    if q.is_negative() {
        if n % 2 == 0 {
            return None;
        }
        return rational_root(&-q, n).map(|r| -r);
    }
    let a = q.numer().nth_root(n);
    let b = q.denom().nth_root(n);
    (num_traits::pow(a.clone(), n as usize) == *q.numer() && num_traits::pow(b.clone(), n as usize) == *q.denom())
        .then(|| Rational::new(a, b))
}

// ---- convenience towers ----

fn cached(cell: &'static OnceLock<Arc<FieldTower>>, build: impl FnOnce() -> Arc<FieldTower>) -> Arc<FieldTower> {
    cell.get_or_init(build).clone()
}

fn lvl(symbol: &str, coeffs: &[&str], hint: (f64, f64)) -> ExtensionSpec {
    ExtensionSpec {
        symbol: symbol.into(),
        minpoly_coeffs: coeffs.iter().map(|s| s.to_string()).collect(),
        hint_re: hint.0,
        hint_im: hint.1,
    }
}

const EPS_HINT: (f64, f64) = (-0.5, 0.866_025_403_784_438_6);

pub fn eps_spec() -> ExtensionSpec {
    lvl("eps", &["1", "1", "1"], EPS_HINT)
}

pub fn i_spec() -> ExtensionSpec {
    lvl("i", &["1", "0", "1"], (0.0, 1.0))
}

pub fn cbrt2_spec() -> ExtensionSpec {
    lvl("cbrt2", &["-2", "0", "0", "1"], (1.259_921_049_894_873, 0.0))
}

pub fn zeta9_spec() -> ExtensionSpec {
    let a = 2.0 * std::f64::consts::PI / 9.0;
    lvl("zeta9", &["1", "0", "0", "1", "0", "0", "1"], (a.cos(), a.sin()))
}

pub fn sqrt_m6_spec() -> ExtensionSpec {
    lvl("s6", &["6", "0", "1"], (0.0, 6f64.sqrt()))
}

/// Q.
pub fn q() -> Arc<FieldTower> {
    static C: OnceLock<Arc<FieldTower>> = OnceLock::new();
    cached(&C, FieldTower::rationals)
}

/// Q(ε), ε² + ε + 1 = 0, ε = e^{2πi/3}.
pub fn q_eps() -> Arc<FieldTower> {
    static C: OnceLock<Arc<FieldTower>> = OnceLock::new();
    cached(&C, || FieldTower::create(&[eps_spec()]).unwrap())
}

/// Q(ε, i).
pub fn q_eps_i() -> Arc<FieldTower> {
    static C: OnceLock<Arc<FieldTower>> = OnceLock::new();
    cached(&C, || FieldTower::create(&[eps_spec(), i_spec()]).unwrap())
}

/// Q(ε, i, ∛2), degree 12.
pub fn q_eps_i_cbrt2() -> Arc<FieldTower> {
    static C: OnceLock<Arc<FieldTower>> = OnceLock::new();
    cached(&C, || FieldTower::create(&[eps_spec(), i_spec(), cbrt2_spec()]).unwrap())
}

/// Q(ζ9), ζ9 = e^{2πi/9}; ε = ζ9³.
pub fn q_zeta9() -> Arc<FieldTower> {
    static C: OnceLock<Arc<FieldTower>> = OnceLock::new();
    cached(&C, || FieldTower::create(&[zeta9_spec()]).unwrap())
}

/// Q(√−6), generator `s6` = i·√6.
pub fn q_sqrt_m6() -> Arc<FieldTower> {
    static C: OnceLock<Arc<FieldTower>> = OnceLock::new();
    cached(&C, || FieldTower::create(&[sqrt_m6_spec()]).unwrap())
}

/// √3 = −i(ε − ε²) in a tower containing ε and i.
pub fn sqrt3(t: &Arc<FieldTower>) -> Option<FieldElement> {
    let e = t.gen("eps")?;
    let i = t.gen("i")?;
    Some(i.mul(&e.sub(&e.mul(&e))).neg())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_reduction() {
        let t = q_eps();
        let e = t.gen("eps").unwrap();
        assert!(e.mul(&e).add(&e).add(&t.one()).is_zero());
        let d = e.sub(&e.mul(&e));
        assert_eq!(d.mul(&d), t.from_int(-3));
        assert_eq!(e.mul(&e.mul(&e)), t.one());
    }

    #[test]
    fn inverse_of_one_minus_eps() {
        let t = q_eps();
        let e = t.gen("eps").unwrap();
        let a = t.one().sub(&e);
        let want = t.one().sub(&e.mul(&e)).scale(&rat(1, 3));
        assert_eq!(a.inv().unwrap(), want);
        assert!(t.zero().inv().is_none());
    }

    #[test]
    fn degree_twelve() {
        assert_eq!(q_eps_i_cbrt2().total_degree(), 12);
        assert_eq!(q_zeta9().total_degree(), 6);
    }

    #[test]
    fn sqrt3_squares_to_three() {
        let t = q_eps_i();
        let s = sqrt3(&t).unwrap();
        assert_eq!(s.mul(&s), t.from_int(3));
        let v = s.embed_complex(128).unwrap();
        assert!((v.re_f64() - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn errors() {
        let t = q();
        let bad = t.extend("a", &[t.from_int(1), t.from_int(0), t.from_int(2)], (0.0, 0.7));
        assert_eq!(bad.unwrap_err(), Error::NonMonic("a".into()));
        let amb = t.extend("a", &[t.from_int(-1), t.from_int(0), t.from_int(1)], (0.0, 0.0));
        assert!(matches!(amb, Err(Error::EmbeddingFailed(_))));
        // x^2 - 1e-8: roots ±1e-4 both within 1e-3 of 0
        let c = t.from_rational(&rat(-1, 100_000_000));
        let amb = t.extend("a", &[c, t.from_int(0), t.from_int(1)], (0.0, 0.0));
        assert!(matches!(amb, Err(Error::AmbiguousHint { count: 2, .. })));
        let a = q_eps().one();
        let b = q_eps_i().one();
        assert_eq!(field_arith(&a, &b, ArithOp::Add).unwrap_err(), Error::TowerMismatch);
        assert_eq!(field_arith(&a, &q_eps().zero(), ArithOp::Div).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn text_round_trip() {
        let t = q_eps_i_cbrt2();
        let x = t.parse("(1-eps)/3 + 2*i*cbrt2^2 - eps*i/7").unwrap();
        let s = x.to_text();
        assert_eq!(t.parse(&s).unwrap(), x);
    }

    #[test]
    fn json_round_trip() {
        let t = q_eps_i_cbrt2();
        let u = FieldTower::from_json(&t.to_json()).unwrap();
        assert!(*u == *t);
    }
}
