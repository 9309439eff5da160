//! Partitions, Frobenius classes, and symmetric polynomials evaluated at
//! lists of Laurent polynomial values.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::var::{x, y, z0};
use crate::laurent::{determinant, LaurentPoly, Monomial};

/// A partition with weakly decreasing parts, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts, "parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Whether the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn frobenius(&self) -> FrobeniusForm {
        let conj = self.conjugate();
        let r = (0..self.len()).take_while(|&i| self.0[i] as usize > i).count();
        FrobeniusForm {
            arms: (0..r).map(|i| self.0[i] - i as u32 - 1).collect(),
            legs: (0..r).map(|i| conj.0[i] - i as u32 - 1).collect(),
        }
    }

    /// All partitions of `weight` with at most `max_len` parts, in reverse
    /// lexicographic order.
    pub fn all_of_weight(weight: u32, max_len: usize) -> Vec<Partition> {
        fn go(rest: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=rest.min(max_part)).rev() {
                cur.push(p);
                go(rest - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(weight, weight, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with weight at most `max_weight` and at most `max_len`
    /// parts, by increasing weight.
    pub fn all_up_to(max_weight: u32, max_len: usize) -> Vec<Partition> {
        (0..=max_weight).flat_map(|w| Partition::all_of_weight(w, max_len)).collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Frobenius coordinates `(arms | legs)`, both strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusForm {
    pub arms: Vec<u32>,
    pub legs: Vec<u32>,
}

impl FrobeniusForm {
    pub fn to_partition(&self) -> Result<Partition> {
        let r = self.arms.len();
        let strict = |v: &[u32]| v.windows(2).all(|w| w[0] > w[1]);
        if self.legs.len() != r || !strict(&self.arms) || !strict(&self.legs) {
            return Err(Error::InvalidPartition(self.arms.clone(), "invalid Frobenius coordinates"));
        }
        let rows = r + self.legs.first().copied().unwrap_or(0) as usize;
        let parts = (0..rows)
            .map(|i| {
                if i < r {
                    self.arms[i] + i as u32 + 1
                } else {
                    self.legs.iter().enumerate().filter(|&(j, &b)| j + b as usize >= i).count() as u32
                }
            })
            .collect();
        Partition::new(parts)
    }

    /// Whether every arm minus the corresponding leg equals `t`.
    pub fn has_offset(&self, t: i64) -> bool {
        self.arms.iter().zip(&self.legs).all(|(&a, &b)| a as i64 - b as i64 == t)
    }
}

fn offset_class(max_weight: u32, arm_minus_leg: i64) -> Vec<Partition> {
    // Diagonal hook i has size arm + leg + 1 = 2 * leg + 2 for offset +1 and
    // 2 * arm + 2 for offset -1; both reduce to 2 * (shorter side) + 2.
    fn go(next_max: i64, rest: u32, sides: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(sides.clone());
        for s in (0..=next_max).rev() {
            let size = 2 * s as u32 + 2;
            if size <= rest {
                sides.push(s as u32);
                go(s - 1, rest - size, sides, out);
                sides.pop();
            }
        }
    }
    let mut raw = Vec::new();
    go(max_weight as i64 / 2, max_weight, &mut Vec::new(), &mut raw);
    let mut out: Vec<Partition> = raw
        .into_iter()
        .map(|short| {
            let long: Vec<u32> = short.iter().map(|s| s + 1).collect();
            let f = if arm_minus_leg > 0 {
                FrobeniusForm { arms: long, legs: short }
            } else {
                FrobeniusForm { arms: short, legs: long }
            };
            f.to_partition().expect("valid Frobenius form")
        })
        .collect();
    out.sort_by(|a, b| a.weight().cmp(&b.weight()).then(b.cmp(a)));
    out
}

/// Partitions with every arm one longer than its leg, of weight at most `max_weight`.
pub fn class_c(max_weight: u32) -> Vec<Partition> {
    offset_class(max_weight, 1)
}

/// Partitions with every leg one longer than its arm, of weight at most `max_weight`.
pub fn class_a(max_weight: u32) -> Vec<Partition> {
    offset_class(max_weight, -1)
}

/// `h_0, ..., h_r` of the given values.
pub fn complete_all(r: usize, vars: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let mut h = vec![LaurentPoly::zero(); r + 1];
    h[0] = LaurentPoly::one();
    // Adding one variable v: h'_k = sum_j v^j h_{k-j} = h_k + v h'_{k-1}.
    for v in vars {
        for k in 1..=r {
            let add = v * &h[k - 1];
            h[k] = &h[k] + &add;
        }
    }
    h
}

/// Complete homogeneous symmetric polynomial `h_r`; zero for `r < 0`.
pub fn complete(r: i64, vars: &[LaurentPoly]) -> LaurentPoly {
    if r < 0 {
        return LaurentPoly::zero();
    }
    complete_all(r as usize, vars).pop().unwrap()
}

/// `e_0, ..., e_{#vars}` of the given values.
pub fn elementary_all(vars: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let mut e = vec![LaurentPoly::one()];
    for v in vars {
        let mut next = e.clone();
        next.push(LaurentPoly::zero());
        for k in 1..next.len() {
            next[k] = &next[k] + &(v * &e[k - 1]);
        }
        e = next;
    }
    e
}

/// Elementary symmetric polynomial `e_m`; zero outside `0..=#vars`.
pub fn elementary(m: i64, vars: &[LaurentPoly]) -> LaurentPoly {
    if m < 0 || m as usize > vars.len() {
        return LaurentPoly::zero();
    }
    elementary_all(vars).swap_remove(m as usize)
}

/// Skew Schur polynomial by the Jacobi-Trudi determinant
/// `det(h_{mu_i - gamma_j - i + j})`; zero unless `gamma` fits in `mu`.
pub fn skew_schur(mu: &Partition, gamma: &Partition, vars: &[LaurentPoly]) -> LaurentPoly {
    if !mu.contains(gamma) {
        return LaurentPoly::zero();
    }
    let l = mu.len();
    if l == 0 {
        return LaurentPoly::one();
    }
    let h = complete_all(mu.part(0) as usize + l, vars);
    let hk = |k: i64| if k < 0 { LaurentPoly::zero() } else { h[k as usize].clone() };
    let m: Vec<Vec<LaurentPoly>> = (0..l)
        .map(|i| (0..l).map(|j| hk(mu.part(i) as i64 - gamma.part(j) as i64 - i as i64 + j as i64)).collect())
        .collect();
    determinant(&m)
}

pub fn schur(mu: &Partition, vars: &[LaurentPoly]) -> LaurentPoly {
    skew_schur(mu, &Partition::empty(), vars)
}

/// The alternant `det(v_i^{alpha_j})` for monomial values `v`.
pub fn alternant(alpha: &[u32], vars: &[LaurentPoly]) -> LaurentPoly {
    let m: Vec<Vec<LaurentPoly>> =
        vars.iter().map(|v| alpha.iter().map(|&a| v.pow(a as i32).expect("non-negative power")).collect()).collect();
    determinant(&m)
}

/// Schur polynomial as the alternant ratio `a_{mu+delta} / a_delta`. Values
/// must be distinct monomials.
pub fn schur_alternant(mu: &Partition, vars: &[LaurentPoly]) -> Option<LaurentPoly> {
    let n = vars.len();
    if mu.len() > n {
        return Some(LaurentPoly::zero());
    }
    let delta: Vec<u32> = (0..n as u32).rev().collect();
    let shifted: Vec<u32> = (0..n).map(|i| mu.part(i) + delta[i]).collect();
    alternant(&shifted, vars).div_exact(&alternant(&delta, vars))
}

/// Littlewood-Richardson coefficient `c^lambda_{mu nu}` by enumerating skew
/// fillings of `lambda / mu` with content `nu` whose reverse reading word is a
/// lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.contains(mu) || lambda.weight() != mu.weight() + nu.weight() {
        return 0;
    }
    // Cells in reverse reading order: rows top to bottom, right to left.
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|i| (mu.part(i) as usize..lambda.part(i) as usize).rev().map(move |j| (i, j)))
        .collect();
    let mut fill: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut used = vec![0u32; nu.len()];
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        nu: &Partition,
        fill: &mut BTreeMap<(usize, usize), usize>,
        used: &mut Vec<u32>,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let mut total = 0;
        for v in 0..nu.len() {
            if used[v] == nu.part(v) || (v > 0 && used[v] + 1 > used[v - 1]) {
                continue;
            }
            // Rows weakly increase to the right; the cell to the right is already filled.
            if fill.get(&(i, j + 1)).is_some_and(|&r| r < v) {
                continue;
            }
            if i > 0 && fill.get(&(i - 1, j)).is_some_and(|&a| a >= v) {
                continue;
            }
            fill.insert((i, j), v);
            used[v] += 1;
            total += go(k + 1, cells, nu, fill, used);
            used[v] -= 1;
            fill.remove(&(i, j));
        }
        total
    }
    go(0, &cells, nu, &mut fill, &mut used)
}

/// Skew Schur polynomial via `sum_nu c^mu_{gamma nu} s_nu`; test oracle.
pub fn skew_schur_lr(mu: &Partition, gamma: &Partition, vars: &[LaurentPoly]) -> LaurentPoly {
    if !mu.contains(gamma) {
        return LaurentPoly::zero();
    }
    let w = mu.weight() - gamma.weight();
    Partition::all_of_weight(w, usize::MAX)
        .iter()
        .map(|nu| {
            let c = lr_coefficient(mu, gamma, nu);
            if c == 0 {
                LaurentPoly::zero()
            } else {
                schur(nu, vars).scale(&(c as i64).into())
            }
        })
        .sum()
}

/// `sum_{gamma in C, gamma ⊆ mu} sign(gamma) s_{mu/gamma}(z)` with
/// `sign = (-1)^{|gamma|/2}` when `signed`.
fn class_c_sum(mu: &Partition, z: &[LaurentPoly], signed: bool) -> LaurentPoly {
    class_c(mu.weight())
        .iter()
        .filter(|g| mu.contains(g))
        .map(|g| {
            let s = skew_schur(mu, g, z);
            if signed && (g.weight() / 2) % 2 == 1 {
                -s
            } else {
                s
            }
        })
        .sum()
}

/// Universal orthogonal character `so_mu(z)`.
pub fn so_universal(mu: &Partition, z: &[LaurentPoly]) -> LaurentPoly {
    class_c_sum(mu, z, true)
}

/// `sum_{gamma in C} s_{mu/gamma}(z)`.
pub fn phi_b_prime(mu: &Partition, z: &[LaurentPoly]) -> LaurentPoly {
    class_c_sum(mu, z, false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LittlewoodVariant {
    /// `prod_{i<j} (1 + z_i z_j) = sum_{alpha in A} s_alpha(z)`.
    Strict,
    /// `prod_{i<=j} (1 + z_i z_j) = sum_{gamma in C} s_gamma(z)`.
    Weak,
}

/// Both sides of a Littlewood product identity in `z_1..z_n`, with the Schur
/// sum restricted to partitions of length at most `n`.
pub fn littlewood_products(vars: &[LaurentPoly], variant: LittlewoodVariant) -> (LaurentPoly, LaurentPoly) {
    let n = vars.len();
    let mut prod = LaurentPoly::one();
    for i in 0..n {
        for j in i..n {
            if i == j && variant == LittlewoodVariant::Strict {
                continue;
            }
            prod = &prod * &(LaurentPoly::one() + &vars[i] * &vars[j]);
        }
    }
    let max = (n * (n + 1)) as u32;
    let class = match variant {
        LittlewoodVariant::Strict => class_a(max),
        LittlewoodVariant::Weak => class_c(max),
    };
    let sum = class.iter().filter(|p| p.len() <= n).map(|p| schur(p, vars)).sum();
    (prod, sum)
}

pub fn var_values(vars: &[crate::laurent::VarId]) -> Vec<LaurentPoly> {
    vars.iter().map(|&v| LaurentPoly::var(v)).collect()
}

/// `(x_1, ..., x_n, z0, ȳ_n, ..., ȳ_1)`.
pub fn z_alphabet(n: usize) -> Vec<LaurentPoly> {
    let mut z: Vec<LaurentPoly> = (1..=n).map(|i| LaurentPoly::var(x(i))).collect();
    z.push(LaurentPoly::var(z0()));
    z.extend((1..=n).rev().map(|i| LaurentPoly::term(Monomial::var_pow(y(i), -1), 1.into())));
    z
}
