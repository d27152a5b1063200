//! Sparse multivariate polynomials in graded-lexicographic order.

pub mod linalg;
pub mod uni;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{rational_text, FieldElement, FieldTower, Rational};
use crate::ring::{Field, Fp, Ring};
use crate::text::{parse_expr, Evaluator};

/// Exponent vector, ordered graded-lexicographically (x > y > z).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn to_text(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    let v: &[&str] = match n {
        1 => &["t"],
        2 => &["u", "v"],
        3 => &["x", "y", "z"],
        4 => &["x", "y", "z", "w"],
        _ => &[],
    };
    if v.is_empty() {
        (0..n).map(|i| format!("x{i}")).collect()
    } else {
        v.iter().map(|s| s.to_string()).collect()
    }
}

/// Coefficient context of a polynomial ring, itself usable as a ring context.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyCtx<R: Ring> {
    pub coeff: R::Ctx,
    pub nvars: usize,
}

/// Exact multivariate polynomial; no zero coefficients are stored.
#[derive(Clone)]
pub struct MultiPoly<R: Ring> {
    ctx: R::Ctx,
    nvars: usize,
    terms: BTreeMap<Monomial, R>,
}

pub type Poly = MultiPoly<FieldElement>;

impl<R: Ring> PartialEq for MultiPoly<R> {
    fn eq(&self, o: &Self) -> bool {
        self.nvars == o.nvars && self.terms == o.terms && (self.terms.len() > 0 || self.ctx == o.ctx)
    }
}

impl<R: Ring> Eq for MultiPoly<R> {}

impl<R: Ring> Hash for MultiPoly<R> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nvars.hash(state);
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl<R: Ring> fmt::Debug for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(ctx: &R::Ctx, nvars: usize) -> Self {
        MultiPoly { ctx: ctx.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(c: R, nvars: usize) -> Self {
        let mut p = MultiPoly::zero(&c.ctx(), nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn from_i64(ctx: &R::Ctx, nvars: usize, n: i64) -> Self {
        MultiPoly::constant(R::from_i64_in(ctx, n), nvars)
    }

    pub fn var(ctx: &R::Ctx, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MultiPoly::monomial(R::one_in(ctx), e)
    }

    /// All variables of the ring, in order.
    pub fn vars(ctx: &R::Ctx, nvars: usize) -> Vec<Self> {
        (0..nvars).map(|i| MultiPoly::var(ctx, nvars, i)).collect()
    }

    pub fn monomial(c: R, exps: Vec<u32>) -> Self {
        let n = exps.len();
        let mut p = MultiPoly::zero(&c.ctx(), n);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    pub fn from_terms(ctx: &R::Ctx, nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, R)>) -> Self {
        let mut p = MultiPoly::zero(ctx, nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                let s = x.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn coeff_ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn poly_ctx(&self) -> PolyCtx<R> {
        PolyCtx { coeff: self.ctx.clone(), nvars: self.nvars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the leading (largest) monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> R {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(|| R::zero_in(&self.ctx))
    }

    pub fn lead(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Degree if every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.total_degree()?;
        self.terms.keys().all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.nvars != o.nvars {
            return Err(Error::Arity { expected: self.nvars, got: o.nvars });
        }
        if self.ctx != o.ctx {
            return Err(Error::DomainMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(self.add(o))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(self.sub(o))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(self.mul(o))
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "arity mismatch");
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "arity mismatch");
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c.neg());
        }
        p
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            ctx: self.ctx.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "arity mismatch");
        let mut acc: HashMap<Monomial, R> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m = m1.mul(m2);
                let t = c1.mul(c2);
                match acc.get_mut(&m) {
                    Some(x) => *x = x.add(&t),
                    None => {
                        acc.insert(m, t);
                    }
                }
            }
        }
        MultiPoly {
            ctx: self.ctx.clone(),
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut p = MultiPoly::zero(&self.ctx, self.nvars);
        for (m, x) in &self.terms {
            p.add_term(m.clone(), x.mul(c));
        }
        p
    }

    pub fn scale_i64(&self, n: i64) -> Self {
        self.scale(&R::from_i64_in(&self.ctx, n))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = MultiPoly::constant(R::one_in(&self.ctx), self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn product(ctx: &R::Ctx, nvars: usize, factors: &[Self]) -> Self {
        factors.iter().fold(MultiPoly::constant(R::one_in(ctx), nvars), |a, f| a.mul(f))
    }

    /// Formal partial derivative.
    pub fn partial_derivative(&self, var: usize) -> Self {
        let mut p = MultiPoly::zero(&self.ctx, self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            p.add_term(m2, c.mul(&R::from_i64_in(&self.ctx, e as i64)));
        }
        p
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars).map(|i| self.partial_derivative(i)).collect()
    }

    /// Determinant of the matrix of second partial derivatives.
    pub fn hessian_determinant(&self) -> Self {
        let g = self.gradient();
        let m: Vec<Vec<Self>> = g.iter().map(|gi| gi.gradient()).collect();
        linalg::det(&m, &self.poly_ctx())
    }

    /// `f(images)`; images all live in a common ring (possibly with another arity).
    pub fn substitute(&self, images: &[Self]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::Arity { expected: self.nvars, got: images.len() });
        }
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        let n = first.nvars;
        if images.iter().any(|g| g.nvars != n) {
            return Err(Error::Arity { expected: n, got: images.iter().map(|g| g.nvars).find(|&k| k != n).unwrap() });
        }
        let mut powers: Vec<Vec<Self>> = images.iter().map(|g| vec![MultiPoly::constant(R::one_in(&self.ctx), n), g.clone()]).collect();
        let mut out = MultiPoly::zero(&self.ctx, n);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone(), n);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Substitution that insists on homogeneous images of one common degree.
    pub fn substitute_homogeneous(&self, images: &[Self]) -> Result<Self> {
        let degs: Vec<Option<u32>> = images.iter().map(|g| g.homogeneous_degree()).collect();
        if degs.iter().any(|d| d.is_none()) || degs.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::NonHomogeneousImages);
        }
        self.substitute(images)
    }

    /// Substitution by a linear map: variable i ↦ Σ_j m[i][j]·x_j.
    pub fn linear_substitute(&self, m: &[Vec<R>]) -> Self {
        let n = m[0].len();
        let imgs: Vec<Self> = m
            .iter()
            .map(|row| MultiPoly::from_terms(&self.ctx, n, row.iter().enumerate().map(|(j, c)| {
                let mut e = vec![0; n];
                e[j] = 1;
                (e, c.clone())
            })))
            .collect();
        self.substitute(&imgs).expect("arity checked by caller")
    }

    pub fn eval(&self, point: &[R]) -> R {
        assert_eq!(point.len(), self.nvars);
        let mut acc = R::zero_in(&self.ctx);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t.mul(&x.pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn map_coeffs<S: Ring>(&self, ctx: &S::Ctx, f: impl Fn(&R) -> S) -> MultiPoly<S> {
        let mut p = MultiPoly::zero(ctx, self.nvars);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c));
        }
        p
    }

    /// Coefficients as polynomials in `var`: entry k is the coefficient of var^k (var exponent zeroed).
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let d = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(&self.ctx, self.nvars); d + 1];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut m2 = m.clone();
            m2.0[var] = 0;
            out[k].add_term(m2, c.clone());
        }
        out
    }

    /// Splits off the coefficients over the last `k` variables:
    /// returns a polynomial in the first `nvars-k` variables whose coefficients
    /// are polynomials in the last `k`.
    pub fn split_outer(&self, k: usize) -> MultiPoly<MultiPoly<R>> {
        let outer = self.nvars - k;
        let inner_ctx = PolyCtx::<R> { coeff: self.ctx.clone(), nvars: k };
        let mut groups: BTreeMap<Monomial, MultiPoly<R>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mo = Monomial(m.0[..outer].to_vec());
            let mi = m.0[outer..].to_vec();
            groups
                .entry(mo)
                .or_insert_with(|| MultiPoly::zero(&self.ctx, k))
                .add_term(Monomial(mi), c.clone());
        }
        let mut p = MultiPoly::zero(&inner_ctx, outer);
        for (m, c) in groups {
            p.add_term(m, c);
        }
        p
    }

    /// Drops variable `var`, which must not occur.
    pub fn drop_var(&self, var: usize) -> Self {
        let mut p = MultiPoly::zero(&self.ctx, self.nvars - 1);
        for (m, c) in &self.terms {
            assert_eq!(m.0[var], 0, "variable still occurs");
            let mut e = m.0.clone();
            e.remove(var);
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    /// Inserts a new variable at `pos` and homogenizes to the total degree with it.
    pub fn homogenize(&self, pos: usize) -> Self {
        let d = self.total_degree().unwrap_or(0);
        let mut p = MultiPoly::zero(&self.ctx, self.nvars + 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.insert(pos, d - m.degree());
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    /// Largest monomial dividing every term, and the cofactor.
    pub fn split_monomial_content(&self) -> (Monomial, Self) {
        let mut g = vec![u32::MAX; self.nvars];
        for m in self.terms.keys() {
            for (a, b) in g.iter_mut().zip(&m.0) {
                *a = (*a).min(*b);
            }
        }
        if self.is_zero() {
            g = vec![0; self.nvars];
        }
        let gm = Monomial(g);
        let mut p = MultiPoly::zero(&self.ctx, self.nvars);
        for (m, c) in &self.terms {
            p.add_term(m.div(&gm), c.clone());
        }
        (gm, p)
    }

    pub fn to_text(&self) -> String {
        self.to_text_with(&default_names(self.nvars))
    }

    pub fn to_text_with(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (m, c) in self.terms() {
            let mono = m.to_text(names);
            let is_const = m.degree() == 0;
            let (neg, body) = match c.signed_text() {
                Some((neg, a)) => {
                    if is_const {
                        (neg, a)
                    } else if a == "1" {
                        (neg, mono)
                    } else {
                        (neg, format!("{a}*{mono}"))
                    }
                }
                None => {
                    let ct = format!("({})", c.to_text());
                    (false, if is_const { ct } else { format!("{ct}*{mono}") })
                }
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
}

/// Extra hook for printing coefficients with a leading sign.
pub trait SignedText {
    /// `(negative, text of |c|)` when c prints as a plain rational.
    fn signed_text(&self) -> Option<(bool, String)>;
}

impl<R: Ring> SignedText for R {
    fn signed_text(&self) -> Option<(bool, String)> {
        let any: &dyn std::any::Any = self;
        if let Some(e) = any.downcast_ref::<FieldElement>() {
            return e.to_rational().map(|q| (q.is_negative(), rational_text(&q.abs())));
        }
        if let Some(f) = any.downcast_ref::<Fp>() {
            return Some((false, f.v.to_string()));
        }
        None
    }
}

impl<R: Ring> Ring for MultiPoly<R> {
    type Ctx = PolyCtx<R>;

    fn ctx(&self) -> PolyCtx<R> {
        self.poly_ctx()
    }
    fn zero_in(c: &PolyCtx<R>) -> Self {
        MultiPoly::zero(&c.coeff, c.nvars)
    }
    fn one_in(c: &PolyCtx<R>) -> Self {
        MultiPoly::constant(R::one_in(&c.coeff), c.nvars)
    }
    fn from_i64_in(c: &PolyCtx<R>, n: i64) -> Self {
        MultiPoly::from_i64(&c.coeff, c.nvars, n)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        MultiPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        MultiPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        MultiPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn to_text(&self) -> String {
        MultiPoly::to_text(self)
    }
}

/// Outcome of a proportionality test.
#[derive(Clone, Debug, PartialEq)]
pub enum Proportionality<R: Ring> {
    /// f = c·g
    Scalar(R),
    /// First monomial (in descending order) where f and c·g disagree.
    Mismatch { monomial: Monomial, f: R, g: R },
}

impl<R: Ring> Proportionality<R> {
    pub fn scalar(&self) -> Option<&R> {
        match self {
            Proportionality::Scalar(c) => Some(c),
            _ => None,
        }
    }
}

/// Structured result of expressing a polynomial in a set of generators.
#[derive(Clone, Debug, PartialEq)]
pub struct SubringExpression<F: Ring> {
    /// (exponent of each generator, coefficient), nonzero coefficients only.
    pub terms: Vec<(Vec<u32>, F)>,
}

impl<F: Ring> SubringExpression<F> {
    pub fn to_text(&self, gen_names: &[&str]) -> String {
        let names: Vec<String> = gen_names.iter().map(|s| s.to_string()).collect();
        let ctx = self.terms.first().map(|t| t.1.ctx());
        match ctx {
            None => "0".into(),
            Some(ctx) => MultiPoly::from_terms(&ctx, names.len(), self.terms.clone()).to_text_with(&names),
        }
    }
}

impl<F: Field> MultiPoly<F> {
    /// Returns c with f = c·g, or the first mismatching monomial.
    pub fn proportionality(&self, g: &Self) -> Proportionality<F> {
        let ctx = &self.ctx;
        let Some((gm, gc)) = g.lead() else {
            return match self.lead() {
                None => Proportionality::Scalar(F::zero_in(ctx)),
                Some((m, c)) => Proportionality::Mismatch { monomial: m.clone(), f: c.clone(), g: F::zero_in(ctx) },
            };
        };
        let c = self.coeff(&gm.0).div(gc).unwrap();
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(g.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for m in keys.into_iter().rev() {
            let fv = self.coeff(&m.0);
            let gv = g.coeff(&m.0);
            if fv != c.mul(&gv) {
                return Proportionality::Mismatch { monomial: m.clone(), f: fv, g: gv };
            }
        }
        Proportionality::Scalar(c)
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.lead() {
            Some((_, c)) => self.scale(&c.inv().unwrap()),
            None => self.clone(),
        }
    }

    /// Exact quotient f / g, or `None` if g does not divide f.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        let (gm, gc) = g.lead()?;
        let gc_inv = gc.inv()?;
        let mut r = self.clone();
        let mut q = MultiPoly::zero(&self.ctx, self.nvars);
        while let Some((m, c)) = r.lead() {
            if !gm.divides(m) {
                return None;
            }
            let tm = m.div(gm);
            let tc = c.mul(&gc_inv);
            let t = MultiPoly::monomial(tc.clone(), tm.0.clone());
            r = r.sub(&g.mul(&t));
            q.add_term(tm, tc);
        }
        Some(q)
    }

    /// Exact square root up to sign, if f is a perfect square with a square leading coefficient.
    pub fn sqrt_exact(&self, lead_sqrt: &F) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let (lm, lc) = self.lead().unwrap();
        if lead_sqrt.mul(lead_sqrt) != *lc || lm.0.iter().any(|e| e % 2 == 1) {
            return None;
        }
        let root_m = Monomial(lm.0.iter().map(|e| e / 2).collect());
        let mut r = MultiPoly::monomial(lead_sqrt.clone(), root_m.0.clone());
        let two_lead = lead_sqrt.add(lead_sqrt);
        let inv = two_lead.inv()?;
        for _ in 0..=self.len() * 4 + 4 {
            let rem = self.sub(&r.mul(&r));
            let Some((m, c)) = rem.lead() else { return Some(r) };
            if !root_m.divides(m) {
                return None;
            }
            let tm = m.div(&root_m);
            if tm >= root_m {
                return None;
            }
            r = r.add(&MultiPoly::monomial(c.mul(&inv), tm.0));
        }
        None
    }

    /// Writes f as a polynomial in homogeneous generators by a linear solve on monomials.
    pub fn express_in_subring(&self, gens: &[Self]) -> Option<SubringExpression<F>> {
        let ctx = self.ctx.clone();
        if self.is_zero() {
            return Some(SubringExpression { terms: vec![] });
        }
        let d = self.homogeneous_degree()?;
        let gdeg: Vec<u32> = gens.iter().map(|g| g.homogeneous_degree()).collect::<Option<_>>()?;
        if gdeg.contains(&0) {
            return None;
        }
        let mut exps = Vec::new();
        enumerate_weighted(&gdeg, d, &mut vec![], &mut exps);
        if exps.is_empty() {
            return None;
        }
        let mut powers: Vec<Vec<Self>> = gens.iter().map(|g| vec![MultiPoly::constant(F::one_in(&ctx), self.nvars), g.clone()]).collect();
        let mut cols: Vec<Self> = Vec::new();
        for e in &exps {
            let mut p = MultiPoly::constant(F::one_in(&ctx), self.nvars);
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let nx = powers[i].last().unwrap().mul(&gens[i]);
                    powers[i].push(nx);
                }
                if k > 0 {
                    p = p.mul(&powers[i][k as usize]);
                }
            }
            cols.push(p);
        }
        let mut monos: Vec<Monomial> = cols.iter().flat_map(|c| c.terms.keys().cloned()).chain(self.terms.keys().cloned()).collect();
        monos.sort();
        monos.dedup();
        let a: Vec<Vec<F>> = monos.iter().map(|m| cols.iter().map(|c| c.coeff(&m.0)).collect()).collect();
        let b: Vec<F> = monos.iter().map(|m| self.coeff(&m.0)).collect();
        let x = linalg::solve(&a, &b, &ctx)?;
        Some(SubringExpression {
            terms: exps.into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect(),
        })
    }
}

fn enumerate_weighted(w: &[u32], d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == w.len() {
        if d == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let wi = w[cur.len()];
    for k in 0..=d / wi {
        cur.push(k);
        enumerate_weighted(w, d - k * wi, cur, out);
        cur.pop();
    }
}

/// All exponent vectors with weighted degree `d`.
pub fn weighted_monomials(weights: &[u32], d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    enumerate_weighted(weights, d, &mut vec![], &mut out);
    out
}

// ---- resultants ----

fn sylvester<R: Ring>(a: &[R], b: &[R], ctx: &R::Ctx) -> Vec<Vec<R>> {
    // a, b: coefficients from the leading one down
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for k in 0..n {
        let mut r = vec![R::zero_in(ctx); size];
        for (i, c) in a.iter().enumerate() {
            r[k + i] = c.clone();
        }
        rows.push(r);
    }
    for k in 0..m {
        let mut r = vec![R::zero_in(ctx); size];
        for (i, c) in b.iter().enumerate() {
            r[k + i] = c.clone();
        }
        rows.push(r);
    }
    rows
}

/// Resultant of two binary forms by the Sylvester determinant, rows of `f` on top.
pub fn resultant_binary<R: Ring>(f: &MultiPoly<R>, g: &MultiPoly<R>) -> Result<R> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput("resultant_binary"));
    }
    if f.nvars != 2 || g.nvars != 2 {
        return Err(Error::Arity { expected: 2, got: if f.nvars != 2 { f.nvars } else { g.nvars } });
    }
    let m = f.homogeneous_degree().ok_or(Error::NonHomogeneousImages)?;
    let n = g.homogeneous_degree().ok_or(Error::NonHomogeneousImages)?;
    let a: Vec<R> = (0..=m).map(|i| f.coeff(&[m - i, i])).collect();
    let b: Vec<R> = (0..=n).map(|i| g.coeff(&[n - i, i])).collect();
    if m + n == 0 {
        return Ok(R::one_in(&f.ctx));
    }
    Ok(linalg::det(&sylvester(&a, &b, &f.ctx), &f.ctx))
}

/// Resultant with respect to one variable; the result no longer involves it.
pub fn resultant_in<R: Ring>(f: &MultiPoly<R>, g: &MultiPoly<R>, var: usize) -> Result<MultiPoly<R>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput("resultant_in"));
    }
    let mut a = f.coefficients_in(var);
    let mut b = g.coefficients_in(var);
    a.reverse();
    b.reverse();
    let ctx = f.poly_ctx();
    if a.len() + b.len() == 2 {
        return Ok(MultiPoly::one_in(&ctx));
    }
    Ok(linalg::det(&sylvester(&a, &b, &ctx), &ctx))
}

// ---- text ----

/// Coefficient rings whose literals can be read by the polynomial grammar.
pub trait TextCoeff: Field {
    fn from_bigint(ctx: &Self::Ctx, n: &BigInt) -> Self;
    fn symbol(ctx: &Self::Ctx, name: &str) -> Option<Self>;
}

impl TextCoeff for FieldElement {
    fn from_bigint(t: &Arc<FieldTower>, n: &BigInt) -> Self {
        t.from_rational(&Rational::from_integer(n.clone()))
    }
    fn symbol(t: &Arc<FieldTower>, name: &str) -> Option<Self> {
        t.gen(name)
    }
}

impl TextCoeff for Fp {
    fn from_bigint(p: &u64, n: &BigInt) -> Self {
        let r = n % BigInt::from(*p);
        let v: i64 = r.try_into().unwrap();
        Fp::new(*p, v)
    }
    fn symbol(_: &u64, _: &str) -> Option<Self> {
        None
    }
}

struct PolyEval<'a, F: TextCoeff> {
    ctx: F::Ctx,
    names: &'a [String],
}

impl<F: TextCoeff> Evaluator for PolyEval<'_, F> {
    type Value = MultiPoly<F>;
    fn int(&self, n: &BigInt) -> Result<Self::Value> {
        Ok(MultiPoly::constant(F::from_bigint(&self.ctx, n), self.names.len()))
    }
    fn ident(&self, name: &str) -> Result<Self::Value> {
        if let Some(i) = self.names.iter().position(|v| v == name) {
            return Ok(MultiPoly::var(&self.ctx, self.names.len(), i));
        }
        F::symbol(&self.ctx, name)
            .map(|c| MultiPoly::constant(c, self.names.len()))
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown identifier `{name}`") })
    }
    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        Ok(MultiPoly::add(&a, &b))
    }
    fn sub(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        Ok(MultiPoly::sub(&a, &b))
    }
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        Ok(MultiPoly::mul(&a, &b))
    }
    fn div(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if b.total_degree() != Some(0) {
            return Err(Error::Parse { pos: 0, msg: "division by a non-constant".into() });
        }
        let c = b.coeff(&vec![0; b.nvars]);
        Ok(a.scale(&c.inv().ok_or(Error::DivisionByZero)?))
    }
    fn neg(&self, a: Self::Value) -> Result<Self::Value> {
        Ok(MultiPoly::neg(&a))
    }
    fn pow(&self, a: Self::Value, e: u32) -> Result<Self::Value> {
        Ok(MultiPoly::pow(&a, e))
    }
}

impl<F: TextCoeff> MultiPoly<F> {
    /// Parses the polynomial grammar with the given variable names.
    pub fn parse_with(src: &str, ctx: &F::Ctx, names: &[String]) -> Result<Self> {
        let e = parse_expr(src)?;
        PolyEval::<F> { ctx: ctx.clone(), names }.eval(&e)
    }

    /// Parses with default variable names for `nvars` variables.
    pub fn parse(src: &str, ctx: &F::Ctx, nvars: usize) -> Result<Self> {
        MultiPoly::parse_with(src, ctx, &default_names(nvars))
    }
}

impl Poly {
    /// Polynomial over Q(ε) in x, y, z.
    pub fn xyz(src: &str) -> Poly {
        Poly::parse(src, &crate::field::q_eps(), 3).expect("valid literal")
    }

    /// Shorthand for integer-coefficient checks.
    pub fn is_integral(&self) -> bool {
        self.terms().all(|(_, c)| c.to_rational().is_some_and(|q| q.is_integer()))
    }

    /// Moves the coefficients into a larger tower.
    pub fn lift_to(&self, t: &Arc<FieldTower>) -> Result<Poly> {
        let mut p = MultiPoly::zero(t, self.nvars);
        for (m, c) in self.terms() {
            p.add_term(m.clone(), c.lift_to(t)?);
        }
        Ok(p)
    }

    /// Moves the coefficients into another tower: by lifting when `t` extends
    /// this tower, otherwise only if every coefficient is rational.
    pub fn to_tower(&self, t: &Arc<FieldTower>) -> Result<Poly> {
        if let Ok(p) = self.lift_to(t) {
            return Ok(p);
        }
        let mut p = MultiPoly::zero(t, self.nvars);
        for (m, c) in self.terms() {
            let q = c.to_rational().ok_or(Error::TowerMismatch)?;
            p.add_term(m.clone(), t.from_rational(&q));
        }
        Ok(p)
    }

    /// Reduction modulo p of a polynomial with rational coefficients.
    pub fn reduce_mod(&self, p: u64) -> Option<MultiPoly<Fp>> {
        let mut out = MultiPoly::zero(&p, self.nvars);
        for (m, c) in self.terms() {
            let q = c.to_rational()?;
            let pb = BigInt::from(p);
            let d = (q.denom() % &pb + &pb) % &pb;
            if d.is_zero() {
                return None;
            }
            let n: i64 = ((q.numer() % &pb + &pb) % &pb).try_into().ok()?;
            let dv: i64 = d.try_into().ok()?;
            out.add_term(m.clone(), Fp::new(p, n).mul(&Fp::new(p, dv).inv()?));
        }
        Some(out)
    }
}

impl<R: Ring> MultiPoly<R> {
    /// Proportionality over a coefficient ring: checks f·lc(g) = g·lc(f).
    /// Returns `(lc(f), lc(g))`, or the first monomial where the cross products differ.
    pub fn proportional_cross(&self, g: &Self) -> std::result::Result<(R, R), Monomial> {
        let zero = R::zero_in(&self.ctx);
        let lf = self.lead().map(|(_, c)| c.clone()).unwrap_or_else(|| zero.clone());
        let lg = g.lead().map(|(_, c)| c.clone()).unwrap_or_else(|| zero.clone());
        let lhs = self.scale(&lg);
        let rhs = g.scale(&lf);
        if g.is_zero() && !self.is_zero() {
            return Err(self.lead().unwrap().0.clone());
        }
        let diff = lhs.sub(&rhs);
        match diff.lead() {
            None => Ok((lf, lg)),
            Some((m, _)) => Err(m.clone()),
        }
    }
}

impl<R: Ring> MultiPoly<R> {
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.lead().is_some_and(|(m, c)| m.degree() == 0 && c.is_one())
    }
}

pub fn one<R: Ring>(ctx: &R::Ctx) -> R {
    R::one_in(ctx)
}

#[allow(dead_code)]
fn is_unit_rational(q: &Rational) -> bool {
    q.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, q_eps};

    fn p(s: &str) -> Poly {
        Poly::xyz(s)
    }

    #[test]
    fn products_and_zero() {
        let f = p("(x^3+y^3+z^3)*x*y*z");
        assert_eq!(f.len(), 3);
        assert_eq!(f.homogeneous_degree(), Some(6));
        assert!(p("x^3+y").mul(&Poly::zero(&q_eps(), 3)).is_zero());
        let phi6 = p("x^6+y^6+z^6-10*(x^3*y^3+x^3*z^3+y^3*z^3)");
        let rhs = p("(x^3+y^3+z^3)^2 - 12*(x^3*y^3+x^3*z^3+y^3*z^3)");
        assert_eq!(phi6, rhs);
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x^3+y^3+z^3").partial_derivative(0), p("3*x^2"));
        assert_eq!(p("x*y*z").partial_derivative(1), p("x*z"));
        let f = p("x^3+y^3+z^3+5*x*y*z");
        let g = f.gradient();
        let euler = p("x").mul(&g[0]).add(&p("y").mul(&g[1])).add(&p("z").mul(&g[2]));
        assert_eq!(euler, f.scale_i64(3));
    }

    #[test]
    fn hessians() {
        assert_eq!(p("x^3+y^3+z^3").hessian_determinant(), p("216*x*y*z"));
        assert_eq!(p("x*y*z").hessian_determinant(), p("2*x*y*z"));
        assert_eq!(p("x*y - z^2 + 3*x^2").hessian_determinant().total_degree(), Some(0));
    }

    #[test]
    fn substitution() {
        let phi6 = p("x^6+y^6+z^6-10*(x^3*y^3+x^3*z^3+y^3*z^3)");
        let swap = vec![p("x"), p("z"), p("y")];
        assert_eq!(phi6.substitute(&swap).unwrap(), phi6);
        let phi9 = p("(x^3-y^3)*(x^3-z^3)*(y^3-z^3)");
        assert_eq!(phi9.substitute(&swap).unwrap(), phi9.neg());
        assert_eq!(phi9.substitute(&MultiPoly::vars(&q_eps(), 3)).unwrap(), phi9);
        assert!(phi9.substitute(&[p("x")]).is_err());
        assert_eq!(phi9.substitute_homogeneous(&[p("x"), p("y^2"), p("z")]).unwrap_err(), Error::NonHomogeneousImages);
    }

    #[test]
    fn resultants() {
        let t = q();
        let bin = |s: &str| Poly::parse(s, &t, 2).unwrap();
        assert_eq!(resultant_binary(&bin("u"), &bin("v")).unwrap(), t.one());
        assert!(resultant_binary(&bin("u^2-v^2"), &bin("u-v")).unwrap().is_zero());
        assert!(resultant_binary(&bin("0"), &bin("u")).is_err());
        // Res(A, B) for the Weierstrass forms is nonzero
        let a = bin("12*v*(u^3-v^3)");
        let b = bin("2*(u^6-20*u^3*v^3-8*v^6)");
        assert!(!resultant_binary(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn proportionality_cases() {
        assert_eq!(p("2*x^3").proportionality(&p("x^3")), Proportionality::Scalar(q_eps().from_int(2)));
        assert!(matches!(p("x^3").proportionality(&p("y^3")), Proportionality::Mismatch { .. }));
    }

    #[test]
    fn subring() {
        let s = p("x^3+y^3+z^3");
        let t = p("x*y*z");
        let e = p("x^3*y^3*z^3").express_in_subring(&[s.clone(), t.clone()]).unwrap();
        assert_eq!(e.terms, vec![(vec![0, 3], q_eps().one())]);
        let phi6 = p("x^6+y^6+z^6-10*(x^3*y^3+x^3*z^3+y^3*z^3)");
        assert!(phi6.express_in_subring(&[s.clone(), t.clone()]).is_none());
        let phi12 = p("(x^3+y^3+z^3)*((x^3+y^3+z^3)^3+216*x^3*y^3*z^3)");
        let e = phi12.express_in_subring(&[s, t]).unwrap();
        assert_eq!(e.to_text(&["S", "T"]), "S^4 + 216*S*T^3");
    }

    #[test]
    fn text_round_trip() {
        let f = p("(1-eps)/3*x^2*y - 7/2*z^3 + eps*x*y*z - 1");
        let s = f.to_text();
        assert_eq!(Poly::parse(&s, &q_eps(), 3).unwrap(), f);
        assert_eq!(p("-x + 2").to_text(), "-x + 2");
    }

    #[test]
    fn exact_division_and_sqrt() {
        let a = p("x^2 - eps*y*z + 3*z^2");
        let b = p("x + y - z");
        assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
        assert!(a.div_exact(&b).is_none());
        let sq = a.mul(&a);
        let r = sq.sqrt_exact(&q_eps().one()).unwrap();
        assert_eq!(r, a);
    }
}
