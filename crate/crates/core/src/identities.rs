//! Weighting schemes for half-turn matrices, weighted sums and the
//! factorization verifier.
//!
//! Every scheme is a table of compass-point weights indexed by row class
//! (upper, central, lower), optionally by column class (first column or the
//! rest), plus a prefactor depending on the first-column statistics `L_i`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::asm::{self, AsmKind, Compass, HalfTurnAsm, StrictPartition};
use crate::error::{Error, Result};
use crate::laurent::var::{a0, a1, a2, b0, b1, b2, eps, s, t, u0, x, y, z0};
use crate::laurent::{GaussianRational, LaurentPoly, Monomial, PolyAccumulator, Substitution, VarId};
use crate::limits::Limits;
use crate::symfunc::{phi_b_prime, so_universal, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightScheme {
    /// Generic odd weights in `x_i`, `y_i`, `z0`.
    Generic,
    /// Odd weights in `x_i, y_i, z0, s_i, t_i`, rewritten form.
    Result1,
    /// The same family in its raw form, with the central NE weight `u0`.
    Result1Raw,
    /// Even weights in `x_i` and a single `t`; delta shape only.
    Okada,
    /// Odd weights in `x_i` and a single `t`; delta shape only.
    Simpson,
    /// Even weights in `x_i` and `t_1..t_n`.
    Tabony,
    /// Even weights in `x_i`, `y_i`.
    BnCorollary,
    /// Odd free-fermion ratio weights in `a0, b0, a1_i, a2_i, b1_i, b2_i`.
    BrubakerSchultz,
}

impl WeightScheme {
    pub const ALL: [WeightScheme; 8] = [
        WeightScheme::Generic,
        WeightScheme::Result1,
        WeightScheme::Result1Raw,
        WeightScheme::Okada,
        WeightScheme::Simpson,
        WeightScheme::Tabony,
        WeightScheme::BnCorollary,
        WeightScheme::BrubakerSchultz,
    ];

    pub fn kind(self) -> AsmKind {
        match self {
            WeightScheme::Okada | WeightScheme::Tabony | WeightScheme::BnCorollary => AsmKind::EvenB,
            _ => AsmKind::OddBPrime,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WeightScheme::Generic => "Generic",
            WeightScheme::Result1 => "Result1",
            WeightScheme::Result1Raw => "Result1Raw",
            WeightScheme::Okada => "Okada",
            WeightScheme::Simpson => "Simpson",
            WeightScheme::Tabony => "Tabony",
            WeightScheme::BnCorollary => "BnCorollary",
            WeightScheme::BrubakerSchultz => "BrubakerSchultz",
        }
    }

    /// Whether the upper-row weights depend on the column class.
    fn splits_columns(self) -> bool {
        self == WeightScheme::Simpson
    }
}

impl fmt::Display for WeightScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightScheme {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        WeightScheme::ALL
            .into_iter()
            .find(|w| w.name().to_ascii_lowercase() == key)
            .or(match key.as_str() {
                "bs" => Some(WeightScheme::BrubakerSchultz),
                "bn" => Some(WeightScheme::BnCorollary),
                _ => None,
            })
            .ok_or_else(|| format!("unknown weight scheme {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RowClass {
    Upper,
    Central,
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ColClass {
    First,
    Rest,
}

/// One cell of a published weight table. `col` is `None` when the table does
/// not distinguish the first column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableEntry {
    pub row: RowClass,
    pub col: Option<ColClass>,
    pub label: Compass,
}

impl TableEntry {
    /// Every entry of the scheme's table.
    pub fn all(scheme: WeightScheme) -> Vec<TableEntry> {
        let rows: &[RowClass] = match scheme.kind() {
            AsmKind::OddBPrime => &[RowClass::Upper, RowClass::Central, RowClass::Lower],
            AsmKind::EvenB => &[RowClass::Upper, RowClass::Lower],
        };
        let mut out = Vec::new();
        for &row in rows {
            let cols: &[Option<ColClass>] = if scheme.splits_columns() && row == RowClass::Upper {
                &[Some(ColClass::First), Some(ColClass::Rest)]
            } else {
                &[None]
            };
            for &col in cols {
                for label in Compass::ALL {
                    out.push(TableEntry { row, col, label });
                }
            }
        }
        out
    }

    fn covers(&self, row: RowClass, col: ColClass, label: Compass) -> bool {
        self.row == row && self.label == label && self.col.is_none_or(|c| c == col)
    }
}

impl fmt::Display for TableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = match self.row {
            RowClass::Upper => "upper",
            RowClass::Central => "central",
            RowClass::Lower => "lower",
        };
        match self.col {
            None => write!(f, "{row}/{}", self.label),
            Some(ColClass::First) => write!(f, "{row}-first/{}", self.label),
            Some(ColClass::Rest) => write!(f, "{row}-rest/{}", self.label),
        }
    }
}

/// Row class and table index `k` of 0-based row `r`: `k = i` in the upper
/// half and `k = N + 1 - i` in the lower half (1-based `i`).
fn row_class(kind: AsmKind, n: usize, r: usize) -> (RowClass, usize) {
    let rows = kind.rows(n);
    if r < n {
        (RowClass::Upper, r + 1)
    } else if kind.central_row(n) == Some(r) {
        (RowClass::Central, 0)
    } else {
        (RowClass::Lower, rows - r)
    }
}

fn v(id: VarId) -> LaurentPoly {
    LaurentPoly::var(id)
}

fn mono(pairs: &[(VarId, i32)]) -> LaurentPoly {
    LaurentPoly::term(Monomial::from_pairs(pairs.iter().copied()), GaussianRational::one())
}

fn ci(k: i64) -> LaurentPoly {
    LaurentPoly::constant(GaussianRational::new(0.into(), k.into()))
}

fn one() -> LaurentPoly {
    LaurentPoly::one()
}

/// Published weight of one table cell. `k` is the row parameter.
fn entry_weight(scheme: WeightScheme, row: RowClass, col: ColClass, label: Compass, k: usize, u0w: &LaurentPoly) -> LaurentPoly {
    use Compass::*;
    use RowClass::*;
    let xk = || v(x(k));
    let xb = || mono(&[(x(k), -1)]);
    let yk = || v(y(k));
    let yb = || mono(&[(y(k), -1)]);
    let tt = || v(t(0));
    match scheme {
        WeightScheme::Generic => match (row, label) {
            (Upper, NS) => xk() + yk(),
            (Upper, NW) => yk(),
            (Upper, SW) => xk(),
            (Central, NS) => v(z0()) + mono(&[(z0(), -1)]),
            (Central, NW) => mono(&[(z0(), -1)]),
            (Central, SW) => v(z0()),
            (Lower, NS) => yb() + xb(),
            (Lower, NW) => xb(),
            (Lower, SW) => yb(),
            _ => one(),
        },
        WeightScheme::Result1 => match (row, label) {
            (Upper, NS) => mono(&[(s(k), 1), (x(k), 1)]) + mono(&[(t(k), -1), (y(k), 1)]),
            (Upper, NW) => mono(&[(t(k), -1), (y(k), 1)]),
            (Upper, SW) => mono(&[(s(k), 1), (x(k), 1)]),
            (Central, _) => entry_weight(WeightScheme::Generic, row, col, label, k, u0w),
            (Lower, NS) => mono(&[(s(k), -1), (x(k), -1)]) + mono(&[(t(k), 1), (y(k), -1)]),
            (Lower, NW) => mono(&[(s(k), -1), (x(k), -1)]),
            (Lower, SW) => mono(&[(t(k), 1), (y(k), -1)]),
            _ => one(),
        },
        WeightScheme::Result1Raw => {
            let ns = || one() + mono(&[(s(k), 1), (x(k), 1), (t(k), 1), (y(k), -1)]);
            match (row, label) {
                (Upper, WE) | (Upper, NW) => yk(),
                (Upper, NS) | (Lower, NS) => ns(),
                (Upper, NE) | (Lower, SW) => v(t(k)),
                (Upper, SW) | (Lower, NE) => mono(&[(s(k), 1), (x(k), 1)]),
                (Central, NS) => one() + mono(&[(z0(), 2)]),
                (Central, NE) => u0w.clone(),
                (Central, SW) => v(z0()),
                (Lower, WE) | (Lower, SE) => yk(),
                _ => one(),
            }
        }
        WeightScheme::Simpson => {
            let t1t2 = || tt() * (one() + mono(&[(t(0), 2)]));
            match (row, col, label) {
                (Upper, ColClass::First, WE) => xk(),
                (Upper, ColClass::First, NW) => mono(&[(t(0), 1), (x(k), 1)]),
                (Upper, ColClass::First, SW) => mono(&[(t(0), 2), (x(k), 1)]),
                (Upper, ColClass::Rest, WE) => mono(&[(t(0), -1), (x(k), 1)]),
                (Upper, ColClass::Rest, NW) => xk(),
                (Upper, ColClass::Rest, SW) => mono(&[(t(0), 1), (x(k), 1)]),
                (Upper, _, NS) => t1t2(),
                (Upper, _, NE) => tt(),
                (Central, _, NS) | (Lower, _, NS) => one() + mono(&[(t(0), 2)]),
                (Central, _, NE) | (Central, _, SW) | (Lower, _, SW) => tt(),
                (Lower, _, WE) | (Lower, _, SE) => xk(),
                (Lower, _, NE) => mono(&[(t(0), 1), (x(k), 1)]),
                _ => one(),
            }
        }
        WeightScheme::Okada | WeightScheme::Tabony => {
            let tv = if scheme == WeightScheme::Okada { t(0) } else { t(k) };
            let tk = || v(tv);
            let omt2 = || one() - mono(&[(tv, 2)]);
            match (row, label) {
                (Upper, WE) => ci(1) * xk(),
                (Upper, NS) => ci(-1) * omt2(),
                (Upper, NE) => ci(1) * tk(),
                (Upper, NW) => xk(),
                (Upper, SW) => ci(1) * mono(&[(tv, 1), (x(k), 1)]),
                (Lower, WE) | (Lower, SE) => xk(),
                (Lower, NS) => omt2(),
                (Lower, NE) => ci(1) * mono(&[(tv, 1), (x(k), 1)]),
                (Lower, SW) => ci(1) * tk(),
                _ => one(),
            }
        }
        WeightScheme::BnCorollary => match (row, label) {
            (Upper, NS) => xk() - yk(),
            (Upper, NW) => -yk(),
            (Upper, SW) => xk(),
            (Lower, NS) => yb() - xb(),
            (Lower, NW) => -xb(),
            (Lower, SW) => yb(),
            _ => one(),
        },
        WeightScheme::BrubakerSchultz => {
            let b1a2 = || mono(&[(b1(k), 1), (a2(k), -1)]);
            let a1b2 = || mono(&[(a1(k), 1), (b2(k), -1)]);
            let b2a1 = || mono(&[(b2(k), 1), (a1(k), -1)]);
            let a2b1 = || mono(&[(a2(k), 1), (b1(k), -1)]);
            let b0a0 = || mono(&[(b0(), 1), (a0(), -1)]);
            let a0b0 = || mono(&[(a0(), 1), (b0(), -1)]);
            match (row, label) {
                (Upper, NS) => b1a2() + a1b2(),
                (Upper, NW) => a1b2(),
                (Upper, SW) => b1a2(),
                (Central, NS) => b0a0() + a0b0(),
                (Central, NW) => a0b0(),
                (Central, SW) => b0a0(),
                (Lower, NS) => b2a1() + a2b1(),
                (Lower, NW) => a2b1(),
                (Lower, SW) => b2a1(),
                _ => one(),
            }
        }
    }
}

/// Weights of every cell class for a fixed `n`, ready for evaluation.
#[derive(Clone, Debug)]
pub struct WeightTable {
    scheme: WeightScheme,
    n: usize,
    /// `cells[r][col class][label]` for 0-based row `r`.
    cells: Vec<[[LaurentPoly; 6]; 2]>,
    perturbed: Vec<TableEntry>,
}

impl WeightTable {
    /// The scheme's published table. The raw `Result1Raw` table uses `u0 = z0`.
    pub fn new(scheme: WeightScheme, n: usize) -> Self {
        Self::with_u0(scheme, n, v(z0()))
    }

    /// As [`WeightTable::new`], with an explicit value for the central NE
    /// weight of the raw `Result1Raw` table. Ignored by other schemes.
    pub fn with_u0(scheme: WeightScheme, n: usize, u0w: LaurentPoly) -> Self {
        let kind = scheme.kind();
        let cells = (0..kind.rows(n))
            .map(|r| {
                let (row, k) = row_class(kind, n, r);
                [ColClass::First, ColClass::Rest]
                    .map(|col| Compass::ALL.map(|label| entry_weight(scheme, row, col, label, k, &u0w)))
            })
            .collect();
        WeightTable { scheme, n, cells, perturbed: Vec::new() }
    }

    /// `Result1Raw` with a free symbol `u0` in the central NE cell.
    pub fn raw_with_symbolic_u0(n: usize) -> Self {
        Self::with_u0(WeightScheme::Result1Raw, n, v(u0()))
    }

    pub fn scheme(&self) -> WeightScheme {
        self.scheme
    }

    pub fn kind(&self) -> AsmKind {
        self.scheme.kind()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn perturbations(&self) -> &[TableEntry] {
        &self.perturbed
    }

    /// Multiplies the weight of `entry` by `1 + eps`.
    pub fn perturb(&mut self, entry: TableEntry) {
        let factor = one() + v(eps());
        let kind = self.kind();
        for (r, row) in self.cells.iter_mut().enumerate() {
            let (rc, _) = row_class(kind, self.n, r);
            for (ci, col) in [ColClass::First, ColClass::Rest].into_iter().enumerate() {
                for label in Compass::ALL {
                    if entry.covers(rc, col, label) {
                        let w = &mut row[ci][label.index()];
                        *w = &*w * &factor;
                    }
                }
            }
        }
        self.perturbed.push(entry);
    }

    pub fn cell(&self, r: usize, col: ColClass, label: Compass) -> &LaurentPoly {
        let ci = usize::from(col == ColClass::Rest);
        &self.cells[r][ci][label.index()]
    }

    /// The prefactor, from `big_l[i - 1] = L_i` (length at least `n + 1`)
    /// and the number of columns `m`.
    pub fn prefactor(&self, big_l: &[i64], m: usize) -> LaurentPoly {
        let n = self.n;
        let ni = n as i32;
        let mi = m as i32;
        let l = |i: usize| big_l[i - 1] as i32;
        let mut out = one();
        let mut pairs: Vec<(VarId, i32)> = Vec::new();
        match self.scheme {
            WeightScheme::Generic => {
                for i in 1..=n {
                    let (li, lj) = (l(i), l(i + 1));
                    pairs.extend([(x(i), ni - i as i32 + li + lj - li), (y(i), -li), (z0(), lj - li)]);
                }
            }
            WeightScheme::Result1 => {
                for i in 1..=n {
                    let (li, lj) = (l(i), l(i + 1));
                    let sx = ni - i as i32 + lj;
                    pairs.extend([(x(i), sx), (s(i), sx), (t(i), li), (y(i), -li), (z0(), lj - li)]);
                }
            }
            WeightScheme::Result1Raw => {
                for i in 1..=n {
                    pairs.push((y(i), ni - mi - i as i32));
                }
            }
            WeightScheme::Okada | WeightScheme::Simpson => {
                for i in 1..=n {
                    pairs.push((x(i), -(i as i32)));
                }
            }
            WeightScheme::Tabony => {
                for i in 1..=n {
                    pairs.push((x(i), ni - mi - i as i32));
                }
            }
            WeightScheme::BnCorollary => {
                let mut sign = n * (n - 1) / 2;
                for i in 1..=n {
                    let (li, lj) = (l(i), l(i + 1));
                    sign += lj as usize;
                    pairs.extend([(x(i), ni - i as i32 + lj), (y(i), -li)]);
                }
                if sign % 2 == 1 {
                    out = -out;
                }
            }
            WeightScheme::BrubakerSchultz => {
                let w = mi - ni;
                pairs.push((a0(), w + ni));
                for i in 1..=n {
                    let ii = i as i32;
                    let (li, lj) = (l(i), l(i + 1));
                    pairs.extend([
                        (a1(i), w + ii - 1 - li),
                        (a2(i), w + 2 * ni - ii - (ni - ii) - (lj - li) - li),
                        (b1(i), (ni - ii) + (lj - li) + li),
                        (b2(i), li),
                        (b0(), lj - li),
                        (a0(), -(lj - li)),
                    ]);
                }
            }
        }
        out * mono(&pairs)
    }

    fn check_kind(&self, kind: AsmKind) -> Result<()> {
        if kind != self.kind() {
            return Err(Error::SchemeKindMismatch { scheme: self.scheme.to_string(), kind: kind.to_string() });
        }
        Ok(())
    }

    /// Weight of one matrix.
    pub fn weigh(&self, a: &HalfTurnAsm) -> Result<LaurentPoly> {
        self.check_kind(a.kind())?;
        if a.n() != self.n {
            return Err(Error::Unsupported(format!("table built for n = {}, matrix has n = {}", self.n, a.n())));
        }
        let compass = a.to_compass();
        let stats = a.stats();
        let mut acc = self.prefactor(&stats.big_l, a.cols());
        for (r, row) in compass.rows.iter().enumerate() {
            for (j, &label) in row.iter().enumerate() {
                let col = if j == 0 { ColClass::First } else { ColClass::Rest };
                acc = acc * self.cell(r, col, label);
            }
        }
        Ok(acc)
    }

    /// Product of cell weights for one column given its entries and the
    /// right-sum state after it.
    fn column_weight(&self, column: &[i8], state: u64, col: ColClass) -> LaurentPoly {
        let mut c = 0i8;
        let mut w = one();
        for (r, &a) in column.iter().enumerate() {
            let b = ((state >> r) & 1) as i8;
            let cell = self.cell(r, col, Compass::classify(a, b, c));
            if !cell.is_one() {
                w = w * cell;
            }
            c += a;
        }
        w
    }
}

fn check_shape(table: &WeightTable, lambda: &StrictPartition, limits: &Limits) -> Result<()> {
    if lambda.len() != table.n {
        return Err(Error::Unsupported(format!(
            "partition {lambda} has {} parts, table built for n = {}",
            lambda.len(),
            table.n
        )));
    }
    limits.check(table.n, table.kind().rows(table.n), lambda.first())
}

/// Weighted sum over all matrices with top-row shape `lambda`.
///
/// Transfer-matrix evaluation over columns `m, ..., 1` on the right-sum
/// state; the prefactor is applied per final state, since `L_i` only depends
/// on the first column.
pub fn sum_wgt(table: &WeightTable, lambda: &StrictPartition, limits: &Limits) -> Result<LaurentPoly> {
    check_shape(table, lambda, limits)?;
    let kind = table.kind();
    let n = table.n;
    let rows = kind.rows(n);
    let m = lambda.first();
    let mut layer: Vec<(u64, LaurentPoly)> = vec![(0, one())];
    for j in (1..=m).rev() {
        let target = i8::from(lambda.contains(j));
        let col = if j == 1 { ColClass::First } else { ColClass::Rest };
        let merged = layer
            .par_iter()
            .fold(FxHashMap::<u64, PolyAccumulator>::default, |mut acc, (state, p)| {
                for step in asm::column_steps(*state, rows, target) {
                    if j == 1 && !asm::final_state_ok(step.state, kind, n) {
                        continue;
                    }
                    let w = table.column_weight(&step.column, step.state, col);
                    acc.entry(step.state).or_default().add_product(p, &w);
                }
                acc
            })
            .reduce(FxHashMap::default, |mut a, b| {
                for (k, v) in b {
                    match a.get_mut(&k) {
                        Some(e) => e.merge(v),
                        None => {
                            a.insert(k, v);
                        }
                    }
                }
                a
            });
        layer = merged.into_iter().map(|(k, acc)| (k, acc.finish())).collect();
        layer.sort_by_key(|(k, _)| *k);
    }
    let mut total = PolyAccumulator::new();
    for (state, p) in &layer {
        let mut big_l = vec![0i64; rows + 1];
        for r in 0..rows {
            big_l[r + 1] = big_l[r] + ((state >> r) & 1) as i64;
        }
        total.add_product(p, &table.prefactor(&big_l, m));
    }
    Ok(total.finish())
}

/// Oracle for [`sum_wgt`]: enumerates the class and weighs each matrix.
pub fn sum_wgt_enumerated(table: &WeightTable, lambda: &StrictPartition, limits: &Limits) -> Result<LaurentPoly> {
    check_shape(table, lambda, limits)?;
    let all = asm::enumerate(table.kind(), lambda, limits)?;
    let parts: Vec<LaurentPoly> = all.par_iter().map(|a| table.weigh(a)).collect::<Result<_>>()?;
    Ok(parts.iter().sum())
}

fn product(factors: impl IntoIterator<Item = LaurentPoly>) -> LaurentPoly {
    factors.into_iter().fold(one(), |acc, f| acc * f)
}

/// `prod_i (1 + c u_i) prod_{i<j} (1 + c2 v_ij)(1 + c2 w_ij)`, the common
/// shape of all delta products.
fn delta_shape(
    n: usize,
    c: &LaurentPoly,
    c2: &LaurentPoly,
    u: impl Fn(usize) -> LaurentPoly,
    v_: impl Fn(usize, usize) -> LaurentPoly,
    w: impl Fn(usize, usize) -> LaurentPoly,
) -> LaurentPoly {
    let mut f = Vec::new();
    for i in 1..=n {
        f.push(one() + c * &u(i));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            f.push(one() + c2 * &v_(i, j));
            f.push(one() + c2 * &w(i, j));
        }
    }
    product(f)
}

/// Closed-form weighted sum over the delta shape, expanded.
pub fn delta_product(scheme: WeightScheme, n: usize) -> LaurentPoly {
    let p = one();
    let m1 = LaurentPoly::int(-1);
    let xx = |i: usize, j: usize| mono(&[(x(i), 1), (x(j), 1)]);
    let xxb = |i: usize, j: usize| mono(&[(x(i), 1), (x(j), -1)]);
    let xyb = |i: usize, j: usize| mono(&[(x(i), 1), (y(j), -1)]);
    match scheme {
        WeightScheme::Generic => delta_shape(n, &p, &p, |i| mono(&[(z0(), 1), (x(i), 1)]), xx, xyb),
        WeightScheme::Result1 | WeightScheme::Result1Raw => delta_shape(
            n,
            &p,
            &p,
            |i| mono(&[(z0(), 1), (s(i), 1), (x(i), 1)]),
            |i, j| mono(&[(s(i), 1), (s(j), 1), (x(i), 1), (x(j), 1)]),
            |i, j| mono(&[(s(i), 1), (t(j), 1), (x(i), 1), (y(j), -1)]),
        ),
        WeightScheme::Simpson => {
            let t2 = mono(&[(t(0), 2)]);
            delta_shape(n, &t2, &t2, |i| v(x(i)), xx, xxb)
        }
        WeightScheme::Okada => {
            let t2 = -mono(&[(t(0), 2)]);
            delta_shape(n, &-v(t(0)), &t2, |i| v(x(i)), xx, xxb)
        }
        WeightScheme::Tabony => delta_shape(
            n,
            &m1,
            &m1,
            |i| mono(&[(t(i), 1), (x(i), 1)]),
            |i, j| mono(&[(t(i), 1), (t(j), 1), (x(i), 1), (x(j), 1)]),
            |i, j| mono(&[(t(i), 1), (t(j), 1), (x(i), 1), (x(j), -1)]),
        ),
        WeightScheme::BnCorollary => delta_shape(n, &m1, &m1, |i| v(x(i)), xx, xyb),
        WeightScheme::BrubakerSchultz => {
            let mut f = Vec::new();
            for i in 1..=n {
                f.push(mono(&[(a0(), 1), (a2(i), 1)]) + mono(&[(b0(), 1), (b1(i), 1)]));
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    f.push(mono(&[(a2(i), 1), (a1(j), 1)]) + mono(&[(b1(i), 1), (b2(j), 1)]));
                    f.push(mono(&[(a2(i), 1), (a2(j), 1)]) + mono(&[(b1(i), 1), (b1(j), 1)]));
                }
            }
            product(f)
        }
    }
}

/// Spectral alphabet `z` of the scheme: `(u_1..u_n, centre, w_n..w_1)`.
pub fn scheme_alphabet(scheme: WeightScheme, n: usize) -> Vec<LaurentPoly> {
    let (upper, centre, lower): (Box<dyn Fn(usize) -> LaurentPoly>, LaurentPoly, Box<dyn Fn(usize) -> LaurentPoly>) =
        match scheme {
            WeightScheme::Generic => (Box::new(|i| v(x(i))), v(z0()), Box::new(|i| mono(&[(y(i), -1)]))),
            WeightScheme::Result1 | WeightScheme::Result1Raw => (
                Box::new(|i| mono(&[(s(i), 1), (x(i), 1)])),
                v(z0()),
                Box::new(|i| mono(&[(t(i), 1), (y(i), -1)])),
            ),
            WeightScheme::Simpson => (
                Box::new(|i| mono(&[(t(0), 1), (x(i), 1)])),
                v(t(0)),
                Box::new(|i| mono(&[(t(0), 1), (x(i), -1)])),
            ),
            WeightScheme::Okada => (
                Box::new(|i| mono(&[(t(0), 1), (x(i), 1)])),
                one(),
                Box::new(|i| mono(&[(t(0), 1), (x(i), -1)])),
            ),
            WeightScheme::Tabony => (
                Box::new(|i| mono(&[(t(i), 1), (x(i), 1)])),
                one(),
                Box::new(|i| mono(&[(t(i), 1), (x(i), -1)])),
            ),
            WeightScheme::BnCorollary => (Box::new(|i| v(x(i))), one(), Box::new(|i| mono(&[(y(i), -1)]))),
            WeightScheme::BrubakerSchultz => (
                Box::new(|i| mono(&[(b1(i), 1), (a2(i), -1)])),
                mono(&[(b0(), 1), (a0(), -1)]),
                Box::new(|i| mono(&[(b2(i), 1), (a1(i), -1)])),
            ),
        };
    let mut z: Vec<LaurentPoly> = (1..=n).map(&upper).collect();
    z.push(centre);
    z.extend((1..=n).rev().map(&lower));
    z
}

/// Character factor `Sum_lambda / Sum_delta` predicted for `mu`.
///
/// Odd schemes give `sum_{gamma in C} s_{mu/gamma}(z)`; even schemes give an
/// orthogonal character `so_mu(z)`, times `i^{|mu|}` for the two schemes whose
/// alphabet arises from `z0 = i`. The free-fermion scheme carries the extra
/// `w0 = (a0 prod a1_i a2_i)^{mu_1}`. The Okada and Simpson tables are only
/// stated for the delta shape and their prefactor omits the `x_i^{n-m}` that
/// the Tabony prefactor has, hence the `prod x_i^{mu_1}` there.
pub fn phi(scheme: WeightScheme, n: usize, mu: &Partition) -> LaurentPoly {
    let z = scheme_alphabet(scheme, n);
    let i_mu = || LaurentPoly::constant(GaussianRational::i_pow(mu.weight() as i64));
    let x_mu1 = || mono(&(1..=n).map(|i| (x(i), mu.part(0) as i32)).collect::<Vec<_>>());
    match scheme {
        WeightScheme::BnCorollary => so_universal(mu, &z),
        WeightScheme::Tabony => i_mu() * so_universal(mu, &z),
        WeightScheme::Okada => i_mu() * x_mu1() * so_universal(mu, &z),
        WeightScheme::Simpson => x_mu1() * phi_b_prime(mu, &z),
        WeightScheme::BrubakerSchultz => {
            let w = mu.part(0) as i32;
            let mut pairs = vec![(a0(), w)];
            for i in 1..=n {
                pairs.extend([(a1(i), w), (a2(i), w)]);
            }
            mono(&pairs) * phi_b_prime(mu, &z)
        }
        _ => phi_b_prime(mu, &z),
    }
}

/// Both sides of a factorization `Sum_{mu + delta} = delta_product * phi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub scheme: WeightScheme,
    pub kind: AsmKind,
    pub n: usize,
    pub mu: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub perturbed: Vec<TableEntry>,
    pub lhs: LaurentPoly,
    pub rhs_delta: LaurentPoly,
    pub rhs_phi: LaurentPoly,
    pub equal: bool,
    pub counterexample_diff: Option<LaurentPoly>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mu: Vec<String> = self.mu.iter().map(u32::to_string).collect();
        write!(f, "{} n={} mu=({}): ", self.scheme, self.n, mu.join(","))?;
        if self.equal {
            write!(f, "equal")
        } else {
            write!(f, "NOT equal, lhs - rhs has {} terms", self.counterexample_diff.as_ref().map_or(0, |d| d.len()))
        }
    }
}

/// Checks the factorization for `table` at `lambda = mu + delta`.
pub fn verify_with_table(table: &WeightTable, mu: &Partition, limits: &Limits) -> Result<VerificationReport> {
    let n = table.n;
    let lambda = StrictPartition::from_mu(mu.parts(), n)?;
    let lhs = sum_wgt(table, &lambda, limits)?;
    let rhs_delta = delta_product(table.scheme, n);
    let rhs_phi = phi(table.scheme, n, mu);
    let diff = &lhs - &(&rhs_delta * &rhs_phi);
    let equal = diff.is_zero();
    Ok(VerificationReport {
        scheme: table.scheme,
        kind: table.kind(),
        n,
        mu: mu.parts().to_vec(),
        perturbed: table.perturbed.clone(),
        lhs,
        rhs_delta,
        rhs_phi,
        equal,
        counterexample_diff: (!equal).then_some(diff),
    })
}

pub fn verify_factorization(scheme: WeightScheme, n: usize, mu: &Partition, limits: &Limits) -> Result<VerificationReport> {
    verify_with_table(&WeightTable::new(scheme, n), mu, limits)
}

/// The free-fermion factorization at `(n, mu)`.
pub fn bs_verify(n: usize, mu: &Partition, limits: &Limits) -> Result<VerificationReport> {
    verify_factorization(WeightScheme::BrubakerSchultz, n, mu, limits)
}

/// Maps the generic variables onto the free-fermion ratios:
/// `x_i = b1_i/a2_i`, `y_i = a1_i/b2_i`, `z0 = b0/a0`.
pub fn bs_identification(n: usize) -> Substitution {
    let mut sub = Substitution::new();
    for i in 1..=n {
        sub.insert(x(i), mono(&[(b1(i), 1), (a2(i), -1)]));
        sub.insert(y(i), mono(&[(a1(i), 1), (b2(i), -1)]));
    }
    sub.insert(z0(), mono(&[(b0(), 1), (a0(), -1)]));
    sub
}

/// `w0 w1` at `n` columns beyond `m`: the factor relating the free-fermion
/// weights to the generic weights under [`bs_identification`].
pub fn bs_normalization(n: usize, m: usize) -> LaurentPoly {
    let w = m as i32 - n as i32;
    let ni = n as i32;
    let mut pairs = vec![(a0(), w + ni)];
    for i in 1..=n {
        let ii = i as i32;
        pairs.extend([(a1(i), w + ii - 1), (a2(i), w + 2 * ni - ii)]);
    }
    mono(&pairs)
}

/// Substitution taking the generic weights to those of `target`.
///
/// The substitution is on `y_i`; the specializations are stated on
/// `ybar_i = 1/y_i`. For the even targets `z0 = i` kills every matrix with a
/// non-zero central row, leaving the even matrices.
pub fn specialize_scheme(target: WeightScheme, n: usize) -> Result<Substitution> {
    let mut sub = Substitution::new();
    let c = |k: i64| LaurentPoly::constant(GaussianRational::new(0.into(), k.into()));
    match target {
        WeightScheme::Result1 => {
            for i in 1..=n {
                sub.insert(x(i), mono(&[(s(i), 1), (x(i), 1)]));
                sub.insert(y(i), mono(&[(t(i), -1), (y(i), 1)]));
            }
        }
        WeightScheme::Simpson => {
            for i in 1..=n {
                sub.insert(x(i), mono(&[(t(0), 1), (x(i), 1)]));
                sub.insert(y(i), mono(&[(t(0), -1), (x(i), 1)]));
            }
            sub.insert(z0(), v(t(0)));
        }
        WeightScheme::Okada | WeightScheme::Tabony => {
            for i in 1..=n {
                let ti = if target == WeightScheme::Okada { t(0) } else { t(i) };
                sub.insert(x(i), c(1) * mono(&[(ti, 1), (x(i), 1)]));
                sub.insert(y(i), c(-1) * mono(&[(ti, -1), (x(i), 1)]));
            }
            sub.insert(z0(), c(1));
        }
        other => return Err(Error::Unsupported(format!("{other} is not a specialization of the generic weights"))),
    }
    Ok(sub)
}

/// The Okada specialization with `z0 = i t`, exactly as it is usually
/// tabulated. It does not reproduce the Okada delta product; see tests.
pub fn okada_substitution_as_printed(n: usize) -> Substitution {
    let mut sub = specialize_scheme(WeightScheme::Okada, n).expect("Okada is a specialization");
    sub.insert(z0(), ci(1) * v(t(0)));
    sub
}

/// `prod (1 - x_i) prod_{i<j} (1 - x_i x_j)(1 - x_i / x_j)`.
pub fn weyl_denominator(n: usize) -> LaurentPoly {
    let m1 = LaurentPoly::int(-1);
    delta_shape(
        n,
        &m1,
        &m1,
        |i| v(x(i)),
        |i, j| mono(&[(x(i), 1), (x(j), 1)]),
        |i, j| mono(&[(x(i), 1), (x(j), -1)]),
    )
}

/// Outcome of specializing the generic delta product to the Weyl denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylCheck {
    pub n: usize,
    pub target: LaurentPoly,
    /// Image under `z0 -> -1`, `y_j -> -x_j`.
    pub sign_flip: LaurentPoly,
    /// Image under `z0 -> i`, `x_j -> i x_j`, `y_j -> -i x_j`.
    pub quarter_turn: LaurentPoly,
}

impl WeylCheck {
    pub fn sign_flip_ok(&self) -> bool {
        self.sign_flip == self.target
    }

    pub fn quarter_turn_ok(&self) -> bool {
        self.quarter_turn == self.target
    }
}

pub fn weyl_specialization(n: usize) -> WeylCheck {
    let delta = delta_product(WeightScheme::Generic, n);
    let mut flip = Substitution::new();
    flip.insert(z0(), LaurentPoly::int(-1));
    let mut quarter = Substitution::new();
    quarter.insert(z0(), ci(1));
    for j in 1..=n {
        flip.insert(y(j), -v(x(j)));
        quarter.insert(x(j), ci(1) * v(x(j)));
        quarter.insert(y(j), ci(-1) * v(x(j)));
    }
    WeylCheck {
        n,
        target: weyl_denominator(n),
        sign_flip: delta.substitute(&flip).expect("monomial images"),
        quarter_turn: delta.substitute(&quarter).expect("monomial images"),
    }
}
