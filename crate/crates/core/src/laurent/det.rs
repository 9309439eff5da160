use rustc_hash::FxHashMap;

use super::gaussian::GaussianRational;
use super::poly::LaurentPoly;

/// Largest side handled by minor expansion; larger matrices use Bareiss.
pub const MINOR_EXPANSION_MAX: usize = 5;

/// Exact determinant of a square matrix of Laurent polynomials.
///
/// Panics if the matrix is not square.
pub fn determinant(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix is not square");
    if n == 0 {
        return LaurentPoly::one();
    }
    if n <= MINOR_EXPANSION_MAX {
        minor_expansion(m)
    } else {
        bareiss(m)
    }
}

/// Laplace expansion along successive rows, sharing minors by column subset.
pub fn minor_expansion(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    // minors[S] = det of rows 0..|S| restricted to the columns in S.
    let mut minors: FxHashMap<u32, LaurentPoly> = FxHashMap::default();
    minors.insert(0, LaurentPoly::one());
    for row in 0..n {
        let mut next: FxHashMap<u32, LaurentPoly> = FxHashMap::default();
        for (&set, minor) in &minors {
            if minor.is_zero() {
                continue;
            }
            for col in 0..n {
                if set & (1 << col) != 0 || m[row][col].is_zero() {
                    continue;
                }
                // Sign from the number of chosen columns to the right of `col`.
                let after = (set >> col).count_ones();
                let term = &m[row][col] * minor;
                let term = if after % 2 == 1 { -term } else { term };
                let key = set | (1 << col);
                let slot = next.entry(key).or_default();
                *slot = &*slot + &term;
            }
        }
        minors = next;
    }
    minors.remove(&((1u32 << n) - 1)).unwrap_or_default()
}

/// Fraction-free Bareiss elimination with exact Laurent division.
pub fn bareiss(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut sign = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step must divide exactly");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant over the Gaussian rationals by Gaussian elimination.
pub fn determinant_numeric(m: &[Vec<GaussianRational>]) -> GaussianRational {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix is not square");
    let mut a: Vec<Vec<GaussianRational>> = m.to_vec();
    let mut det = GaussianRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return GaussianRational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det = &det * &pivot;
        let inv = pivot.recip();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &inv;
            for j in k + 1..n {
                let sub = &f * &a[k][j];
                a[i][j] = &a[i][j] - &sub;
            }
        }
    }
    det
}
