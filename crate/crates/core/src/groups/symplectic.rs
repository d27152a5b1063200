//! Action of lifted transformations on the 2-form of the double sextic w² + Φ6 = 0.

use rug::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::hesse::hesse_data;
use crate::poly::Poly;

use super::{invariance_factor_matrix, Matrix};

#[derive(Clone, Debug, Serialize)]
pub struct SymplecticRatio {
    pub re: f64,
    pub im: f64,
    /// Largest distance between per-sample ratios and their first value, plus rounding slack.
    pub error: f64,
    pub samples: usize,
    pub precision: u32,
    #[serde(skip)]
    pub value: Complex,
}

impl SymplecticRatio {
    /// |ratio − z| within `tol`.
    pub fn is_close(&self, z: &FieldElement, tol: f64) -> Result<bool> {
        let e = z.embed_complex(self.precision)?;
        let d = Complex::with_val(self.precision, &self.value - &e.value);
        Ok(d.abs().real().to_f64() + self.error + e.error_f64() < tol)
    }
}

/// Sample points (x, y) in the chart z = 1, away from the branch curve Φ6 = 0.
pub fn default_samples() -> Vec<[(f64, f64); 2]> {
    vec![[(0.31, 0.17), (-0.52, 0.44)], [(1.13, -0.29), (0.27, 0.61)], [(-0.77, -0.38), (0.91, -0.12)], [(0.05, 0.93), (-1.21, 0.33)]]
}

fn embed(x: &FieldElement, prec: u32) -> Result<Complex> {
    Ok(x.embed_complex(prec)?.value)
}

fn eval_poly(f: &Poly, pt: &[Complex; 3], prec: u32) -> Result<Complex> {
    let mut acc = Complex::with_val(prec, 0);
    for (m, c) in f.terms() {
        let mut term = embed(c, prec)?;
        for k in 0..3 {
            for _ in 0..m.0[k] {
                term *= &pt[k];
            }
        }
        acc += term;
    }
    Ok(acc)
}

/// Eigenvalue of the lift (x, y, z, w) ↦ (M·(x,y,z), c·w), c = sign·√κ with Φ6∘M = κΦ6, on
/// ω = dx∧dy/(2w). The value is g·ω/ω for the left action g·ω = (g⁻¹)*ω, evaluated per sample.
pub fn symplectic_ratio(m: &Matrix, w_sign: i32, samples: &[[(f64, f64); 2]], prec: u32) -> Result<SymplecticRatio> {
    let d = hesse_data();
    let kappa = invariance_factor_matrix(&d.phi6, m)?;
    let phi6 = d.phi6.lift_to(m[0][0].tower())?;
    let mut c = embed(&kappa, prec)?.sqrt();
    if w_sign < 0 {
        c = -c;
    }
    let mc: Vec<Vec<Complex>> = m.iter().map(|r| r.iter().map(|x| embed(x, prec)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    let tiny = rug::Float::with_val(prec, rug::Float::i_exp(1, -(prec as i32) / 4));
    let mut ratios: Vec<Complex> = vec![];
    for s in samples {
        let (x, y) = (Complex::with_val(prec, s[0]), Complex::with_val(prec, s[1]));
        let one = Complex::with_val(prec, 1);
        let pt = [x, y, one];
        let w2 = -eval_poly(&phi6, &pt, prec)?;
        if w2.clone().abs().real() < &tiny {
            return Err(Error::BadSample);
        }
        let w = w2.sqrt();
        let img: Vec<Complex> = (0..3).map(|i| (0..3).fold(Complex::with_val(prec, 0), |acc, j| acc + Complex::with_val(prec, &mc[i][j] * &pt[j]))).collect();
        if img[2].clone().abs().real() < &tiny {
            return Err(Error::BadSample);
        }
        let z2 = Complex::with_val(prec, img[2].clone().square());
        // ∂(X_i/X_2)/∂x_j in the chart
        let dpart = |i: usize, j: usize| Complex::with_val(prec, &mc[i][j] * &img[2] - Complex::with_val(prec, &img[i] * &mc[2][j])) / &z2;
        let jac = dpart(0, 0) * dpart(1, 1) - dpart(0, 1) * dpart(1, 0);
        let z3 = Complex::with_val(prec, &z2 * &img[2]);
        let w_img = Complex::with_val(prec, &c * &w) / &z3;
        // the image point must lie on the cover
        let on = Complex::with_val(prec, w_img.clone().square()) + eval_poly(&phi6, &[img[0].clone() / &img[2], img[1].clone() / &img[2], Complex::with_val(prec, 1)], prec)?;
        if on.abs().real().to_f64() > 1e-20 {
            return Err(Error::NotProportional("lift does not preserve w² + Φ6".into()));
        }
        // pullback multiplies ω by jac·w/w_img; the left action is its inverse
        let pull = Complex::with_val(prec, &jac * &w) / &w_img;
        ratios.push(Complex::with_val(prec, 1) / pull);
    }
    let first = ratios.first().ok_or(Error::BadSample)?.clone();
    let spread = ratios.iter().map(|r| Complex::with_val(prec, r - &first).abs().real().to_f64()).fold(0.0, f64::max);
    let slack = 2f64.powi(-(prec as i32) + 16);
    if spread > 1e-20_f64.max(slack * 1e6) {
        return Err(Error::NonConstantRatio);
    }
    Ok(SymplecticRatio { re: first.real().to_f64(), im: first.imag().to_f64(), error: spread + slack, samples: ratios.len(), precision: prec, value: first })
}

/// Φ6-preserving linear lifts of the H72 generators: g1, g2, the normalized g3
/// and its conjugate by g4.
pub fn h72_symplectic_lifts(t: &std::sync::Arc<crate::field::FieldTower>) -> Result<Vec<Matrix>> {
    use super::named::{hessian_generators, normalized_g3};
    use super::{mat_inv, mat_mul};
    let g = hessian_generators(t)?;
    let n3 = normalized_g3(t)?;
    let g4 = g[4].linear();
    let conj = mat_mul(&mat_mul(g4, n3.linear()), &mat_inv(g4)?);
    Ok(vec![g[1].linear().clone(), g[2].linear().clone(), n3.linear().clone(), conj])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q_eps;
    use crate::groups::named::hessian_generators;

    #[test]
    fn h72_is_symplectic() {
        let t = q_eps();
        for m in h72_symplectic_lifts(&t).unwrap() {
            let r = symplectic_ratio(&m, 1, &default_samples(), 128).unwrap();
            assert!(r.is_close(&t.one(), 1e-25).unwrap(), "{r:?}");
        }
    }

    #[test]
    fn g4_and_g0() {
        let t = q_eps();
        let g = hessian_generators(&t).unwrap();
        let r = symplectic_ratio(g[4].linear(), 1, &default_samples(), 128).unwrap();
        assert!(r.is_close(&t.eps().unwrap(), 1e-25).unwrap(), "{r:?}");
        let r = symplectic_ratio(g[0].linear(), 1, &default_samples(), 128).unwrap();
        assert!(r.is_close(&t.from_int(-1), 1e-25).unwrap());
        let id = crate::groups::identity(3, &t);
        assert!(symplectic_ratio(&id, 1, &default_samples(), 128).unwrap().is_close(&t.one(), 1e-25).unwrap());
    }

    #[test]
    fn unnormalized_g3_is_not_a_lift() {
        let t = q_eps();
        let g = hessian_generators(&t).unwrap();
        // Φ6∘g3 = −27Φ6, so c = √−27 and the ratio is c/det = √−27/(ε−ε²)³ = ±1
        let r = symplectic_ratio(g[3].linear(), 1, &default_samples(), 128).unwrap();
        assert!((r.re.abs() - 1.0).abs() < 1e-20 && r.im.abs() < 1e-20);
    }
}
