//! Midpoint-radius complex balls over `rug`.

use rug::float::Round;
use rug::{Complex, Float};

pub const RAD_PREC: u32 = 64;

/// Upper bound for |c|.
pub fn abs_up(c: &Complex) -> Float {
    Float::with_val_round(RAD_PREC, c.abs_ref(), Round::Up).0
}

/// Lower bound for |c|.
pub fn abs_down(c: &Complex) -> Float {
    Float::with_val_round(RAD_PREC, c.abs_ref(), Round::Down).0
}

pub fn rad_zero() -> Float {
    Float::with_val(RAD_PREC, 0)
}

pub fn rad(x: f64) -> Float {
    Float::with_val(RAD_PREC, x)
}

/// 2^e as a radius.
pub fn rad_pow2(e: i32) -> Float {
    Float::with_val(RAD_PREC, 1) << e
}

fn up(x: Float) -> Float {
    // absorb rounding of the radius computation itself
    let k = Float::with_val(RAD_PREC, 1) + rad_pow2(-60);
    Float::with_val_round(RAD_PREC, x * k, Round::Up).0
}

/// A complex number known to lie in the closed disk `mid ± rad`.
#[derive(Clone, Debug)]
pub struct Ball {
    pub mid: Complex,
    pub rad: Float,
}

impl Ball {
    pub fn exact(mid: Complex) -> Self {
        Ball { mid, rad: rad_zero() }
    }

    pub fn zero(prec: u32) -> Self {
        Ball::exact(Complex::with_val(prec, 0))
    }

    pub fn prec(&self) -> u32 {
        self.mid.prec().0
    }

    /// Error introduced by rounding a result of magnitude |mid| at this precision.
    fn rounding(&self, ulps: i32) -> Float {
        abs_up(&self.mid) * rad_pow2(ulps - self.prec() as i32)
    }

    pub fn from_rational(q: &num_rational::BigRational, prec: u32) -> Self {
        let n = rug::Integer::from_str_radix(&q.numer().to_str_radix(16), 16).unwrap();
        let d = rug::Integer::from_str_radix(&q.denom().to_str_radix(16), 16).unwrap();
        let r = rug::Rational::from((n, d));
        let f = Float::with_val(prec, &r);
        let mid = Complex::with_val(prec, (f, 0));
        let mut b = Ball::exact(mid);
        if !num_traits::One::is_one(q.denom()) || q.numer().bits() > prec as u64 {
            b.rad = up(b.rounding(1));
        }
        b
    }

    pub fn add(&self, o: &Ball) -> Ball {
        let mut b = Ball { mid: Complex::with_val(self.prec(), &self.mid + &o.mid), rad: rad_zero() };
        b.rad = up(Float::with_val(RAD_PREC, &self.rad + &o.rad) + b.rounding(1));
        b
    }

    pub fn sub(&self, o: &Ball) -> Ball {
        let mut b = Ball { mid: Complex::with_val(self.prec(), &self.mid - &o.mid), rad: rad_zero() };
        b.rad = up(Float::with_val(RAD_PREC, &self.rad + &o.rad) + b.rounding(1));
        b
    }

    pub fn mul(&self, o: &Ball) -> Ball {
        let mut b = Ball { mid: Complex::with_val(self.prec(), &self.mid * &o.mid), rad: rad_zero() };
        let r = abs_up(&self.mid) * &o.rad + abs_up(&o.mid) * &self.rad + Float::with_val(RAD_PREC, &self.rad * &o.rad);
        b.rad = up(r + b.rounding(2));
        b
    }

    pub fn neg(&self) -> Ball {
        Ball { mid: Complex::with_val(self.prec(), -&self.mid), rad: self.rad.clone() }
    }

    pub fn contains_zero(&self) -> bool {
        abs_down(&self.mid) <= self.rad
    }

    pub fn rad_f64(&self) -> f64 {
        self.rad.to_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn third_is_enclosed() {
        let q = BigRational::new(1.into(), 3.into());
        let b = Ball::from_rational(&q, 128);
        let three = Ball::from_rational(&BigRational::from_integer(3.into()), 128);
        let p = b.mul(&three);
        let one = Ball::from_rational(&BigRational::from_integer(1.into()), 128);
        assert!(p.sub(&one).contains_zero());
        assert!(p.rad_f64() < 1e-36);
    }
}
