//! Determinants over rings and linear solves over fields.

use crate::ring::{Field, Ring};

/// Division-free determinant by dynamic programming over column subsets.
///
/// Cost is O(2^n · n) ring operations, fine for the small Sylvester and
/// Hessian matrices used here.
pub fn det<R: Ring>(m: &[Vec<R>], ctx: &R::Ctx) -> R {
    let n = m.len();
    if n == 0 {
        return R::one_in(ctx);
    }
    assert!(n <= 20, "determinant too large for subset expansion");
    let mut dp: Vec<Option<R>> = vec![None; 1 << n];
    dp[0] = Some(R::one_in(ctx));
    for mask in 0usize..(1 << n) {
        let Some(cur) = dp[mask].take() else { continue };
        let r = mask.count_ones() as usize;
        if r == n {
            dp[mask] = Some(cur);
            continue;
        }
        for j in 0..n {
            if mask & (1 << j) != 0 || m[r][j].is_zero() {
                continue;
            }
            let above = (mask >> (j + 1)).count_ones();
            let mut t = cur.mul(&m[r][j]);
            if above % 2 == 1 {
                t = t.neg();
            }
            let slot = &mut dp[mask | (1 << j)];
            *slot = Some(match slot.take() {
                Some(s) => s.add(&t),
                None => t,
            });
        }
    }
    dp[(1 << n) - 1].take().unwrap_or_else(|| R::zero_in(ctx))
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    if !m[r][j].is_zero() {
                        let t = f.mul(&m[r][j]);
                        m[i][j] = m[i][j].sub(&t);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A particular solution of `a·x = b`, free variables set to zero.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F], ctx: &F::Ctx) -> Option<Vec<F>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.contains(&cols) {
        return None;
    }
    let mut x = vec![F::zero_in(ctx); cols];
    for (i, &c) in piv.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// Basis of the right nullspace of `a`.
pub fn nullspace<F: Field>(a: &[Vec<F>], cols: usize, ctx: &F::Ctx) -> Vec<Vec<F>> {
    let mut m = a.to_vec();
    let piv = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero_in(ctx); cols];
            v[f] = F::one_in(ctx);
            for (i, &c) in piv.iter().enumerate() {
                v[c] = m[i][f].neg();
            }
            v
        })
        .collect()
}

/// Determinant over a field by elimination.
pub fn det_field<F: Field>(m: &[Vec<F>], ctx: &F::Ctx) -> F {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = F::one_in(ctx);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return F::zero_in(ctx) };
        if p != c {
            a.swap(p, c);
            d = d.neg();
        }
        d = d.mul(&a[c][c]);
        let inv = a[c][c].inv().unwrap();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].mul(&inv);
            for j in c..n {
                let t = f.mul(&a[c][j]);
                a[i][j] = a[i][j].sub(&t);
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;

    #[test]
    fn det_agrees_with_elimination() {
        let t = q();
        let v = [[2, -1, 3, 0], [1, 4, -2, 5], [0, 3, 1, -1], [7, 0, 2, 2]];
        let m: Vec<Vec<_>> = v.iter().map(|r| r.iter().map(|&x| t.from_int(x)).collect()).collect();
        assert_eq!(det(&m, &t), det_field(&m, &t));
    }
}
