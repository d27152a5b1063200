//! Univariate complex root finding: companion-matrix eigenvalues in f64,
//! then Newton refinement at the working precision.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rug::ops::Pow;
use rug::{Complex, Float};

use super::ball::{abs_down, abs_up, rad_pow2, rad_zero, Ball, RAD_PREC};
use crate::error::{Error, Result};

fn to_c64(c: &Complex) -> Complex64 {
    Complex64::new(c.real().to_f64(), c.imag().to_f64())
}

pub fn horner(coeffs: &[Complex], z: &Complex) -> (Complex, Complex) {
    let prec = z.prec().0;
    let mut p = Complex::with_val(prec, 0);
    let mut dp = Complex::with_val(prec, 0);
    for c in coeffs.iter().rev() {
        dp = dp * z + &p;
        p = p * z + c;
    }
    (p, dp)
}

fn companion_guess(coeffs: &[Complex]) -> Option<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let lead = to_c64(&coeffs[n]);
    if lead.norm() == 0.0 || !lead.norm().is_finite() {
        return None;
    }
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for j in 0..n {
        m[(j, n - 1)] = -to_c64(&coeffs[j]) / lead;
    }
    let ev = m.schur().eigenvalues()?;
    let v: Vec<Complex64> = ev.iter().copied().collect();
    if v.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Some(v)
    } else {
        None
    }
}

fn newton(coeffs: &[Complex], mut z: Complex, prec: u32) -> Option<Complex> {
    let tol_exp = -(prec as i32) + 6;
    for _ in 0..400 {
        let (p, dp) = horner(coeffs, &z);
        if p.is_zero() {
            return Some(z);
        }
        if dp.is_zero() {
            return None;
        }
        let step = Complex::with_val(prec, &p / &dp);
        z -= &step;
        let scale = abs_up(&z).max(&Float::with_val(RAD_PREC, 1));
        if abs_up(&step) <= scale * rad_pow2(tol_exp) {
            // one more step to settle the last bits
            let (p, dp) = horner(coeffs, &z);
            if !dp.is_zero() {
                z -= Complex::with_val(prec, &p / &dp);
            }
            return Some(z);
        }
    }
    None
}

fn durand_kerner(coeffs: &[Complex], prec: u32) -> Option<Vec<Complex>> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n].clone();
    let monic: Vec<Complex> = coeffs.iter().map(|c| Complex::with_val(prec, c / &lead)).collect();
    let seed = Complex::with_val(prec, (0.4, 0.9));
    let mut zs: Vec<Complex> = (0..n).map(|k| Complex::with_val(prec, seed.clone().pow(k as u32))).collect();
    for _ in 0..2000 {
        let mut delta_max = Float::with_val(RAD_PREC, 0);
        for i in 0..n {
            let (p, _) = horner(&monic, &zs[i]);
            let mut den = Complex::with_val(prec, 1);
            for j in 0..n {
                if i != j {
                    den *= Complex::with_val(prec, &zs[i] - &zs[j]);
                }
            }
            if den.is_zero() {
                return None;
            }
            let d = Complex::with_val(prec, &p / &den);
            let a = abs_up(&d);
            if a > delta_max {
                delta_max = a;
            }
            zs[i] -= d;
        }
        if delta_max < rad_pow2(-(prec as i32) + 8) {
            return Some(zs);
        }
    }
    None
}

/// All complex roots of `sum coeffs[j] z^j` (leading coefficient nonzero), refined to `prec` bits.
pub fn poly_roots(coeffs: &[Complex], prec: u32) -> Result<Vec<Complex>> {
    let mut coeffs: Vec<Complex> = coeffs.to_vec();
    while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
        coeffs.pop();
    }
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(vec![]);
    }
    let wp = prec + 32;
    let coeffs: Vec<Complex> = coeffs.iter().map(|c| Complex::with_val(wp, c)).collect();
    if n == 1 {
        return Ok(vec![-Complex::with_val(wp, &coeffs[0] / &coeffs[1])]);
    }
    if let Some(guess) = companion_guess(&coeffs) {
        let mut out = Vec::with_capacity(n);
        let mut ok = true;
        for g in guess {
            match newton(&coeffs, Complex::with_val(wp, (g.re, g.im)), wp) {
                Some(z) => out.push(z),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && pairwise_distinct(&out, wp) {
            return Ok(out);
        }
    }
    durand_kerner(&coeffs, wp)
        .and_then(|zs| zs.into_iter().map(|z| newton(&coeffs, z, wp)).collect::<Option<Vec<_>>>())
        .ok_or_else(|| Error::Precision("root iteration did not converge".into()))
}

fn pairwise_distinct(zs: &[Complex], prec: u32) -> bool {
    let tol = rad_pow2(-(prec as i32) / 2);
    for i in 0..zs.len() {
        for j in i + 1..zs.len() {
            let d = Complex::with_val(prec, &zs[i] - &zs[j]);
            if abs_up(&d) < tol {
                return false;
            }
        }
    }
    true
}

/// Roots of a polynomial with ball coefficients, each with a certified inclusion radius.
///
/// Every returned disk contains a root of every polynomial inside the coefficient
/// balls; the disks are pairwise disjoint, so each contains exactly one root.
pub fn certified_roots(coeffs: &[Ball], prec: u32) -> Result<Vec<Ball>> {
    let n = coeffs.len() - 1;
    if coeffs[n].contains_zero() {
        return Err(Error::Precision("leading coefficient not separated from zero".into()));
    }
    let mids: Vec<Complex> = coeffs.iter().map(|b| b.mid.clone()).collect();
    let zs = poly_roots(&mids, prec)?;
    let mut out = Vec::with_capacity(n);
    for z in zs {
        let (p, dp) = horner(&mids, &z);
        let za = abs_up(&z);
        let mut pert = rad_zero();
        let mut dpert = rad_zero();
        let mut zpow = Float::with_val(RAD_PREC, 1);
        for (j, c) in coeffs.iter().enumerate() {
            pert += Float::with_val(RAD_PREC, &c.rad * &zpow);
            if j + 1 < coeffs.len() {
                dpert += Float::with_val(RAD_PREC, &coeffs[j + 1].rad * &zpow) * (j as u32 + 1);
            }
            zpow *= &za;
        }
        // evaluation rounding at working precision
        let eval_err = Float::with_val(RAD_PREC, abs_up(&p) + Float::with_val(RAD_PREC, 1)) * rad_pow2(-(z.prec().0 as i32) + 4)
            * Float::with_val(RAD_PREC, n as u32 + 1)
            * zpow.clone().max(&Float::with_val(RAD_PREC, 1));
        let num = abs_up(&p) + pert + eval_err;
        let den = abs_down(&dp) - dpert;
        if den <= 0 {
            return Err(Error::Precision("derivative not separated from zero".into()));
        }
        let r = Float::with_val(RAD_PREC, num / den) * (n as u32);
        out.push(Ball { mid: Complex::with_val(prec, &z), rad: r });
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            let d = Complex::with_val(prec, &out[i].mid - &out[j].mid);
            if abs_down(&d) <= Float::with_val(RAD_PREC, &out[i].rad + &out[j].rad) {
                return Err(Error::Precision("root disks overlap".into()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::with_val(200, (re, im))
    }

    #[test]
    fn cube_roots_of_two() {
        let roots = poly_roots(&[c(-2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], 200).unwrap();
        assert_eq!(roots.len(), 3);
        for z in &roots {
            let cube = Complex::with_val(232, z.clone().pow(3u32)) - 2u32;
            assert!(abs_up(&Complex::with_val(232, cube)) < rad_pow2(-190));
        }
    }

    #[test]
    fn certified_disks_for_eps() {
        let bs: Vec<Ball> = [1.0, 1.0, 1.0].iter().map(|&x| Ball::exact(c(x, 0.0))).collect();
        let r = certified_roots(&bs, 128).unwrap();
        assert_eq!(r.len(), 2);
        for b in r {
            assert!(b.rad_f64() < 1e-30);
            assert!((b.mid.real().to_f64() + 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn clustered_roots_fall_back_cleanly() {
        // (z-1)(z-1-1e-20)
        let d = Complex::with_val(200, 1e-20);
        let r1 = Complex::with_val(200, 1);
        let r2 = Complex::with_val(200, &r1 + &d);
        let c0 = Complex::with_val(200, &r1 * &r2);
        let c1 = Complex::with_val(200, -(Complex::with_val(200, &r1 + &r2)));
        let roots = poly_roots(&[c0, c1, Complex::with_val(200, 1)], 200).unwrap();
        assert_eq!(roots.len(), 2);
    }
}
