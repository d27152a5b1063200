//! Coefficient rings used by [`crate::poly::MultiPoly`].

use std::fmt::Debug;
use std::hash::Hash;

/// A commutative ring whose values carry enough context to build zero and one.
pub trait Ring: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn from_i64_in(ctx: &Self::Ctx, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one_in(&self.ctx())
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_in(&self.ctx());
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

    /// Text form readable back by the polynomial grammar.
    fn to_text(&self) -> String;

    /// True if `to_text` yields a single atom that needs no parentheses as a factor.
    fn is_atomic_text(&self) -> bool {
        false
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}

/// Element of the prime field F_p (p < 2^31).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    pub p: u64,
    pub v: u64,
}

impl Fp {
    pub fn new(p: u64, v: i64) -> Self {
        Fp { p, v: v.rem_euclid(p as i64) as u64 }
    }
}

impl Ring for Fp {
    type Ctx = u64;

    fn ctx(&self) -> u64 {
        self.p
    }
    fn zero_in(p: &u64) -> Self {
        Fp { p: *p, v: 0 }
    }
    fn one_in(p: &u64) -> Self {
        Fp { p: *p, v: 1 % *p }
    }
    fn from_i64_in(p: &u64, n: i64) -> Self {
        Fp::new(*p, n)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp { p: self.p, v: (self.v + o.v) % self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        Fp { p: self.p, v: (self.v + self.p - o.v) % self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        Fp { p: self.p, v: (self.v * o.v) % self.p }
    }
    fn neg(&self) -> Self {
        Fp { p: self.p, v: (self.p - self.v) % self.p }
    }
    fn to_text(&self) -> String {
        self.v.to_string()
    }
    fn is_atomic_text(&self) -> bool {
        true
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        // Fermat: v^(p-2)
        Some(self.pow((self.p - 2) as u32))
    }
}
