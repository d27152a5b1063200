//! Exact polynomials embedded into C at a working precision.

use rug::{Complex, Float};

use crate::error::Result;
use crate::poly::Poly;

#[derive(Clone, Debug)]
pub struct CPoly {
    pub nvars: usize,
    pub terms: Vec<(Vec<u32>, Complex)>,
    pub prec: u32,
    /// Sum of coefficient moduli; bounds |f| on the unit polydisk.
    pub weight: f64,
}

impl CPoly {
    pub fn from_poly(f: &Poly, prec: u32) -> Result<Self> {
        let mut terms = Vec::with_capacity(f.len());
        let mut weight = 0.0;
        for (m, c) in f.terms() {
            let z = c.embed_complex(prec)?.value;
            weight += Float::with_val(64, z.abs_ref()).to_f64();
            terms.push((m.0.clone(), z));
        }
        Ok(CPoly { nvars: f.nvars(), terms, prec, weight })
    }

    pub fn eval(&self, x: &[Complex]) -> Complex {
        let mut pows: Vec<Vec<Complex>> = Vec::with_capacity(self.nvars);
        for (v, xv) in x.iter().enumerate() {
            let d = self.terms.iter().map(|(m, _)| m[v]).max().unwrap_or(0) as usize;
            let mut p = vec![Complex::with_val(self.prec, 1)];
            for k in 1..=d {
                let next = Complex::with_val(self.prec, &p[k - 1] * xv);
                p.push(next);
            }
            pows.push(p);
        }
        let mut acc = Complex::with_val(self.prec, 0);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in 0..self.nvars {
                if m[v] > 0 {
                    t *= &pows[v][m[v] as usize];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

pub fn cabs(z: &Complex) -> f64 {
    Float::with_val(64, z.abs_ref()).to_f64()
}

/// Short decimal rendering of a complex number.
pub fn complex_text(z: &Complex, digits: usize) -> String {
    let re = z.real().to_string_radix(10, Some(digits));
    let im = z.imag().to_string_radix(10, Some(digits));
    if z.imag().is_zero() {
        re
    } else if z.real().is_zero() {
        format!("{im}i")
    } else if z.imag().is_sign_negative() {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}
