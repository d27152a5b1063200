//! Integer quadratic lattices: Gram determinants, Smith normal form, discriminant
//! groups, short-vector enumeration, finite-index embeddings and Shioda–Tate bookkeeping.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A lattice given by its symmetric Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntLattice {
    pub name: String,
    pub gram: Vec<Vec<i64>>,
    /// Integer twist relative to the named root lattice, kept as metadata.
    pub twist: i64,
    /// True when the Gram is stored with positive sign although the twist is negative,
    /// as printed for transcendental lattices.
    #[serde(default)]
    pub printed_positive: bool,
}

fn a_gram(n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0; n]; n];
    for i in 0..n {
        g[i][i] = 2;
        if i + 1 < n {
            g[i][i + 1] = 1;
            g[i + 1][i] = 1;
        }
    }
    g
}

/// Cartan-type Gram from a tree of simple roots.
fn tree_gram(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in edges {
        g[a][b] = -1;
        g[b][a] = -1;
    }
    g
}

fn root_gram(name: &str) -> Option<Vec<Vec<i64>>> {
    let name = name.replace('_', "");
    if name == "U" {
        return Some(vec![vec![0, 1], vec![1, 0]]);
    }
    let (kind, n) = name.split_at(1);
    let n: usize = n.parse().ok()?;
    match kind {
        "A" if n >= 1 => Some(a_gram(n)),
        "D" if n >= 4 => {
            let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((n - 3, n - 1));
            Some(tree_gram(n, &e))
        }
        "E" if (6..=8).contains(&n) => {
            // chain 0..n-2 with the extra node n-1 attached at node 2
            let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((2, n - 1));
            Some(tree_gram(n, &e))
        }
        _ => None,
    }
}

/// Named lattice (U, A_n, D_n, E_6..E_8) with its Gram multiplied by `twist`.
pub fn standard_lattice(name: &str, twist: i64) -> Result<IntLattice> {
    if twist == 0 {
        return Err(Error::Invalid("twist must be nonzero".into()));
    }
    let g = root_gram(name).ok_or_else(|| Error::InvalidLattice(name.into()))?;
    let label = if twist == 1 { name.to_string() } else { format!("{name}({twist})") };
    Ok(IntLattice { name: label, gram: g.iter().map(|r| r.iter().map(|x| x * twist).collect()).collect(), twist, printed_positive: false })
}

/// A2(−m) as printed: Gram [[2m, m], [m, 2m]], twist −m recorded as metadata.
pub fn a2_printed(m: i64) -> IntLattice {
    IntLattice { name: format!("A2(-{m})"), gram: vec![vec![2 * m, m], vec![m, 2 * m]], twist: -m, printed_positive: true }
}

impl IntLattice {
    pub fn new(name: &str, gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("Gram matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Invalid("Gram matrix is not symmetric".into()));
                }
            }
        }
        Ok(IntLattice { name: name.into(), gram, twist: 1, printed_positive: false })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn direct_sum(&self, o: &IntLattice) -> IntLattice {
        let (a, b) = (self.rank(), o.rank());
        let mut g = vec![vec![0; a + b]; a + b];
        for i in 0..a {
            g[i][..a].copy_from_slice(&self.gram[i]);
        }
        for i in 0..b {
            g[a + i][a..].copy_from_slice(&o.gram[i]);
        }
        IntLattice { name: format!("{}+{}", self.name, o.name), gram: g, twist: 1, printed_positive: false }
    }

    pub fn sum_of(parts: &[IntLattice]) -> IntLattice {
        let mut it = parts.iter();
        let first = it.next().expect("at least one summand").clone();
        it.fold(first, |acc, l| acc.direct_sum(l))
    }

    pub fn det(&self) -> BigInt {
        det(&self.gram)
    }

    /// Full Smith normal form diagonal, nonnegative, each entry dividing the next.
    pub fn smith_normal_form(&self) -> Vec<BigInt> {
        smith_normal_form(&self.gram)
    }

    /// Invariant factors of the discriminant group Gram⁻¹L/L (nontrivial ones only).
    pub fn discriminant_group(&self) -> Result<Vec<BigInt>> {
        let snf = self.smith_normal_form();
        if snf.iter().any(|d| d.is_zero()) {
            return Err(Error::DegenerateGram);
        }
        Ok(snf.into_iter().filter(|d| !d.is_one()).collect())
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// +1 for positive definite, −1 for negative definite, Indefinite otherwise.
    pub fn definiteness(&self) -> Result<i64> {
        let n = self.rank();
        let mut signs = vec![];
        for k in 1..=n {
            let minor: Vec<Vec<i64>> = self.gram[..k].iter().map(|r| r[..k].to_vec()).collect();
            signs.push(det(&minor));
        }
        if signs.iter().all(|d| d.is_positive()) {
            Ok(1)
        } else if signs.iter().enumerate().all(|(k, d)| if k % 2 == 0 { d.is_negative() } else { d.is_positive() }) {
            Ok(-1)
        } else {
            Err(Error::Indefinite)
        }
    }

    /// The Gram scaled by `s`.
    fn scaled(&self, s: i64) -> Vec<Vec<i64>> {
        self.gram.iter().map(|r| r.iter().map(|x| x * s).collect()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("lattice serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let l: IntLattice = serde_json::from_str(s).map_err(|e| Error::Invalid(e.to_string()))?;
        IntLattice::new(&l.name, l.gram.clone())?;
        Ok(l)
    }
}

impl fmt::Display for IntLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.gram.iter().map(|r| format!("{r:?}")).collect();
        write!(f, "{} [{}]", self.name, rows.join(", "))
    }
}

/// Fraction-free (Bareiss) determinant.
pub fn det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

pub fn smith_normal_form(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let steps = n.min(cols);
    for k in 0..steps {
        loop {
            // smallest nonzero entry of the trailing block as pivot
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..cols {
                    if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            let mut clean = true;
            for i in k + 1..n {
                let q = a[i][k].div_floor(&a[k][k]);
                if !q.is_zero() {
                    for j in k..cols {
                        let v = &q * &a[k][j];
                        a[i][j] -= v;
                    }
                }
                clean &= a[i][k].is_zero();
            }
            for j in k + 1..cols {
                let q = a[k][j].div_floor(&a[k][k]);
                if !q.is_zero() {
                    for i in k..n {
                        let v = &q * &a[i][k];
                        a[i][j] -= v;
                    }
                }
                clean &= a[k][j].is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole trailing block
            let bad = (k + 1..n).flat_map(|i| (k + 1..cols).map(move |j| (i, j))).find(|&(i, j)| !(&a[i][j] % &a[k][k]).is_zero());
            match bad {
                Some((i, _)) => {
                    for j in k..cols {
                        let v = a[i][j].clone();
                        a[k][j] += v;
                    }
                }
                None => break,
            }
        }
    }
    (0..steps).map(|k| a[k][k].abs()).collect()
}

/// Exact inverse of a nonsingular integer matrix.
fn inverse(m: &[Vec<i64>]) -> Result<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> = r.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::DegenerateGram)?;
        a.swap(c, p);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &piv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..2 * n {
                    let v = &f * &a[c][j];
                    a[r][j] -= v;
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Coefficient bounds guaranteeing exhaustiveness for norm ≤ n: |x_i| ≤ √(n·(G⁻¹)_ii).
pub fn exhaustive_bounds(l: &IntLattice, n: i64) -> Result<Vec<i64>> {
    let s = l.definiteness()?;
    let inv = inverse(&l.scaled(s))?;
    Ok((0..l.rank())
        .map(|i| {
            let b = &inv[i][i] * BigRational::from_integer(n.into());
            let fl = b.floor().to_integer();
            fl.sqrt().to_i64().expect("bound fits")
        })
        .collect())
}

/// All vectors with |x·x| = n in a definite lattice. Without `coeff_bound` the box is the
/// exhaustive one; with it, each coordinate is limited to ±bound.
pub fn vectors_of_norm(l: &IntLattice, n: i64, coeff_bound: Option<i64>) -> Result<Vec<Vec<i64>>> {
    let s = l.definiteness()?;
    let bounds = match coeff_bound {
        Some(b) => vec![b; l.rank()],
        None => exhaustive_bounds(l, n.abs())?,
    };
    let size: f64 = bounds.iter().map(|&b| (2 * b + 1) as f64).product();
    if size > 5e7 {
        return Err(Error::Invalid(format!("enumeration box too large ({size:.0} vectors)")));
    }
    let mut out = vec![];
    let mut x = vec![0i64; l.rank()];
    enumerate(l, s, n.abs(), &bounds, 0, &mut x, &mut out);
    Ok(out)
}

fn enumerate(l: &IntLattice, s: i64, n: i64, bounds: &[i64], k: usize, x: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if k == x.len() {
        if s * l.inner(x, x) == n {
            out.push(x.clone());
        }
        return;
    }
    for v in -bounds[k]..=bounds[k] {
        x[k] = v;
        enumerate(l, s, n, bounds, k + 1, x, out);
    }
    x[k] = 0;
}

/// A Gram-preserving integer map from a sublattice basis into a bigger lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    /// Column j is the image of the j-th basis vector of the sublattice.
    pub matrix: Vec<Vec<i64>>,
    pub index: u64,
}

/// Searches for an embedding of `sub` into `big` as a sublattice of finite index.
///
/// Both lattices must be definite of the same sign (after the printed-sign metadata).
pub fn embeds_finite_index(sub: &IntLattice, big: &IntLattice) -> Result<Option<Embedding>> {
    let r = sub.rank();
    if r != big.rank() {
        return Err(Error::RankMismatch(r, big.rank()));
    }
    let (ds, db) = (sub.det(), big.det());
    if db.is_zero() || ds.is_zero() {
        return Err(Error::DegenerateGram);
    }
    let (q, rem) = ds.abs().div_rem(&db.abs());
    if !rem.is_zero() || q.sqrt().pow(2) != q {
        return Ok(None);
    }
    let ss = sub.definiteness()?;
    let sb = big.definiteness()?;
    if ss != sb {
        return Ok(None);
    }
    let target = sub.scaled(ss);
    let candidates: Vec<Vec<Vec<i64>>> =
        (0..r).map(|j| vectors_of_norm(big, target[j][j], None)).collect::<Result<_>>()?;
    let mut chosen: Vec<Vec<i64>> = vec![];
    if search(big, sb, &target, &candidates, &mut chosen) {
        let m: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| chosen[j][i]).collect()).collect();
        let index = det(&m).abs().to_u64().expect("index fits");
        return Ok(Some(Embedding { matrix: m, index }));
    }
    Ok(None)
}

fn search(big: &IntLattice, s: i64, target: &[Vec<i64>], cands: &[Vec<Vec<i64>>], chosen: &mut Vec<Vec<i64>>) -> bool {
    let k = chosen.len();
    if k == target.len() {
        let m: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| chosen[j][i]).collect()).collect();
        return !det(&m).is_zero();
    }
    for v in &cands[k] {
        if (0..k).all(|i| s * big.inner(&chosen[i], v) == target[i][k]) {
            chosen.push(v.clone());
            if search(big, s, target, cands, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Kodaira fiber types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FiberType {
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
}

impl FiberType {
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().replace(['_', ' '], "");
        let bad = || Error::InvalidFiber(s.into());
        Ok(match t.as_str() {
            "II" => FiberType::II,
            "III" => FiberType::III,
            "IV" => FiberType::IV,
            "II*" => FiberType::IIStar,
            "III*" => FiberType::IIIStar,
            "IV*" => FiberType::IVStar,
            _ => {
                let (body, star) = match t.strip_suffix('*') {
                    Some(b) => (b, true),
                    None => (t.as_str(), false),
                };
                let n: u32 = body.strip_prefix('I').ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if star {
                    FiberType::IStar(n)
                } else if n >= 1 {
                    FiberType::I(n)
                } else {
                    return Err(bad());
                }
            }
        })
    }

    pub fn components(&self) -> u32 {
        match self {
            FiberType::I(n) => *n,
            FiberType::IStar(n) => n + 5,
            FiberType::II => 1,
            FiberType::III => 2,
            FiberType::IV => 3,
            FiberType::IVStar => 7,
            FiberType::IIIStar => 8,
            FiberType::IIStar => 9,
        }
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberType::I(n) => write!(f, "I{n}"),
            FiberType::IStar(n) => write!(f, "I{n}*"),
            FiberType::II => write!(f, "II"),
            FiberType::III => write!(f, "III"),
            FiberType::IV => write!(f, "IV"),
            FiberType::IIStar => write!(f, "II*"),
            FiberType::IIIStar => write!(f, "III*"),
            FiberType::IVStar => write!(f, "IV*"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationCombinatorics {
    pub fibers: Vec<FiberType>,
    pub mw_rank: u32,
    /// Number of sections in the configuration (informational).
    pub sections: u32,
}

impl FibrationCombinatorics {
    pub fn parse(fibers: &[&str], mw_rank: u32, sections: u32) -> Result<Self> {
        Ok(FibrationCombinatorics { fibers: fibers.iter().map(|s| FiberType::parse(s)).collect::<Result<_>>()?, mw_rank, sections })
    }
}

/// ρ = 2 + Σ(components − 1) + MW rank.
pub fn shioda_tate_rank(fc: &FibrationCombinatorics) -> u32 {
    2 + fc.fibers.iter().map(|f| f.components() - 1).sum::<u32>() + fc.mw_rank
}

/// Incidence data for the rank-20 lattice spanned by two sections, the components of
/// three I6 fibers not meeting the second section, and the three components of an I3 fiber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionConfiguration {
    /// e1·e2.
    pub e1_e2: i64,
    /// For each I6 fiber, the chain component C1..C5 met by e1 (None: e1 meets C0).
    pub e1_i6: [Option<usize>; 3],
    /// I3 component (0..3) met by e1 and by e2.
    pub e1_i3: usize,
    pub e2_i3: usize,
}

impl SectionConfiguration {
    /// The configuration shipped as regression value.
    pub fn shipped() -> Self {
        SectionConfiguration { e1_e2: 1, e1_i6: [Some(3); 3], e1_i3: 0, e2_i3: 0 }
    }

    /// Basis order: e1, e2, then C1..C5 of each I6 fiber, then D0, D1, D2.
    pub fn lattice(&self) -> IntLattice {
        let n = 20;
        let mut g = vec![vec![0i64; n]; n];
        g[0][0] = -2;
        g[1][1] = -2;
        g[0][1] = self.e1_e2;
        g[1][0] = self.e1_e2;
        for (f, hit) in self.e1_i6.iter().enumerate() {
            let base = 2 + 5 * f;
            for a in 0..5 {
                g[base + a][base + a] = -2;
                if a + 1 < 5 {
                    g[base + a][base + a + 1] = 1;
                    g[base + a + 1][base + a] = 1;
                }
            }
            if let Some(c) = hit {
                g[0][base + c - 1] = 1;
                g[base + c - 1][0] = 1;
            }
        }
        let d = 17;
        for a in 0..3 {
            g[d + a][d + a] = -2;
            for b in 0..3 {
                if a != b {
                    g[d + a][d + b] = 1;
                }
            }
        }
        g[0][d + self.e1_i3] += 1;
        g[d + self.e1_i3][0] += 1;
        g[1][d + self.e2_i3] += 1;
        g[d + self.e2_i3][1] += 1;
        IntLattice { name: "M".into(), gram: g, twist: 1, printed_positive: false }
    }

    /// All configurations with e1·e2 ∈ {0, 1, 2} whose lattice has the given determinant
    /// and discriminant invariants.
    pub fn search(det_target: i64, invariants: &[i64]) -> Vec<SectionConfiguration> {
        let hits = [None, Some(1), Some(2), Some(3), Some(4), Some(5)];
        let want: Vec<BigInt> = invariants.iter().map(|&x| BigInt::from(x)).collect();
        let mut out = vec![];
        for e1_e2 in 0..=2 {
            for a in hits {
                for b in hits {
                    for c in hits {
                        for e1_i3 in 0..3 {
                            for e2_i3 in 0..3 {
                                let cfg = SectionConfiguration { e1_e2, e1_i6: [a, b, c], e1_i3, e2_i3 };
                                let l = cfg.lattice();
                                if l.det() == BigInt::from(det_target) && l.discriminant_group().ok().as_deref() == Some(&want[..]) {
                                    out.push(cfg);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn named_grams() {
        assert_eq!(standard_lattice("E8", 1).unwrap().det(), BigInt::from(1));
        assert_eq!(standard_lattice("E6", 1).unwrap().det(), BigInt::from(3));
        assert_eq!(standard_lattice("E7", 1).unwrap().det(), BigInt::from(2));
        assert_eq!(standard_lattice("D4", 1).unwrap().det(), BigInt::from(4));
        assert_eq!(standard_lattice("A_4", 1).unwrap().det(), BigInt::from(5));
        assert_eq!(standard_lattice("U", 1).unwrap().det(), BigInt::from(-1));
        assert_eq!(standard_lattice("A2", -2).unwrap().gram, vec![vec![-4, -2], vec![-2, -4]]);
        assert_eq!(a2_printed(2).gram, vec![vec![4, 2], vec![2, 4]]);
        assert_eq!(a2_printed(2).det(), BigInt::from(12));
        assert!(standard_lattice("E9", 1).is_err());
        assert!(standard_lattice("A2", 0).is_err());
        let y = IntLattice::sum_of(&[
            standard_lattice("U", 1).unwrap(),
            standard_lattice("E8", -1).unwrap(),
            standard_lattice("E8", -1).unwrap(),
            standard_lattice("A2", -1).unwrap(),
        ]);
        assert_eq!(y.rank(), 20);
        assert_eq!(y.det(), BigInt::from(-3));
    }

    #[test]
    fn smith_forms() {
        assert_eq!(a2_printed(6).smith_normal_form(), big(&[6, 18]));
        let l = IntLattice::new("d", vec![vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(l.smith_normal_form(), big(&[1, 6]));
        assert_eq!(l.discriminant_group().unwrap(), big(&[6]));
        for m in 1..8 {
            // invariants (m, 3m), order 3m²
            assert_eq!(a2_printed(m).smith_normal_form(), big(&[m, 3 * m]));
        }
        assert!(IntLattice::new("z", vec![vec![1, 1], vec![1, 1]]).unwrap().discriminant_group().is_err());
    }

    #[test]
    fn norms() {
        assert!(vectors_of_norm(&a2_printed(3), 12, None).unwrap().is_empty());
        let v = vectors_of_norm(&a2_printed(2), 12, None).unwrap();
        assert!(v.contains(&vec![1, 1]));
        assert_eq!(vectors_of_norm(&standard_lattice("A2", -1).unwrap(), 2, None).unwrap().len(), 6);
        assert_eq!(vectors_of_norm(&standard_lattice("D4", 1).unwrap(), 2, None).unwrap().len(), 24);
        assert_eq!(vectors_of_norm(&standard_lattice("A3", -1).unwrap(), 2, None).unwrap().len(), 12);
        assert_eq!(vectors_of_norm(&standard_lattice("U", 1).unwrap(), 2, None), Err(Error::Indefinite));
    }

    #[test]
    fn embeddings() {
        let e = embeds_finite_index(&a2_printed(6), &a2_printed(2)).unwrap().unwrap();
        assert_eq!(e.index, 3);
        assert!(embeds_finite_index(&a2_printed(6), &a2_printed(3)).unwrap().is_none());
        let id = embeds_finite_index(&a2_printed(5), &a2_printed(5)).unwrap().unwrap();
        assert_eq!(id.index, 1);
        assert!(matches!(embeds_finite_index(&a2_printed(1), &standard_lattice("E8", 1).unwrap()), Err(Error::RankMismatch(2, 8))));
    }

    #[test]
    fn fibrations() {
        let y = FibrationCombinatorics::parse(&["II*", "II*", "IV"], 0, 1).unwrap();
        assert_eq!(shioda_tate_rank(&y), 20);
        let x = FibrationCombinatorics::parse(&["I6", "I6", "I6", "I3"], 1, 2).unwrap();
        assert_eq!(shioda_tate_rank(&x), 20);
        assert_eq!(shioda_tate_rank(&FibrationCombinatorics::parse(&[], 0, 1).unwrap()), 2);
        assert_eq!(FiberType::parse("I_0*").unwrap().components(), 5);
        assert!(FiberType::parse("I0").is_err());
        assert!(FiberType::parse("V").is_err());
    }

    #[test]
    fn lattice_m() {
        let m = SectionConfiguration::shipped().lattice();
        assert_eq!(m.det(), BigInt::from(-972));
        assert_eq!(m.discriminant_group().unwrap(), big(&[3, 3, 3, 6, 6]));
        let found = SectionConfiguration::search(-972, &[3, 3, 3, 6, 6]);
        assert!(found.contains(&SectionConfiguration::shipped()));
    }

    #[test]
    fn json_round_trip() {
        let l = a2_printed(6);
        assert_eq!(IntLattice::from_json(&l.to_json()).unwrap(), l);
        assert!(IntLattice::from_json(r#"{"name":"x","gram":[[1,2],[3,4]],"twist":1}"#).is_err());
    }
}
