//! Half-turn symmetric alternating sign matrices, stored as their right-hand
//! halves, together with compass point matrices and row statistics.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// A partition with strictly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(parts, "parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(parts, "parts must be strictly decreasing"));
        }
        Ok(StrictPartition(parts))
    }

    /// The staircase `(n, n-1, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        StrictPartition((1..=n as u32).rev().collect())
    }

    /// `mu + (n, n-1, ..., 1)`; `mu` must be a partition with at most `n` parts.
    pub fn from_mu(mu: &[u32], n: usize) -> Result<Self> {
        if mu.len() > n || mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(mu.to_vec(), "mu must be a partition of length at most n"));
        }
        Ok(StrictPartition(
            (0..n).map(|i| mu.get(i).copied().unwrap_or(0) + (n - i) as u32).collect(),
        ))
    }

    /// `lambda - (n, n-1, ..., 1)`, trailing zeros dropped.
    pub fn mu(&self) -> Vec<u32> {
        let n = self.len();
        let mut mu: Vec<u32> = self.0.iter().enumerate().map(|(i, &p)| p - (n - i) as u32).collect();
        while mu.last() == Some(&0) {
            mu.pop();
        }
        mu
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
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

    /// Largest part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }

    pub fn contains(&self, part: usize) -> bool {
        self.0.iter().any(|&p| p as usize == part)
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        StrictPartition::new(v)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AsmKind {
    /// Even-sided: `2n` rows.
    #[serde(rename = "B")]
    EvenB,
    /// Odd-sided with a special central column: `2n+1` rows.
    #[serde(rename = "Bprime")]
    OddBPrime,
}

impl AsmKind {
    pub fn rows(self, n: usize) -> usize {
        match self {
            AsmKind::EvenB => 2 * n,
            AsmKind::OddBPrime => 2 * n + 1,
        }
    }

    /// 0-based index of the central row, if any.
    pub fn central_row(self, n: usize) -> Option<usize> {
        match self {
            AsmKind::EvenB => None,
            AsmKind::OddBPrime => Some(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AsmKind::EvenB => "B",
            AsmKind::OddBPrime => "Bprime",
        }
    }
}

impl fmt::Display for AsmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for AsmKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "B" | "b" | "even" => Ok(AsmKind::EvenB),
            "Bprime" | "bprime" | "B'" | "odd" => Ok(AsmKind::OddBPrime),
            _ => Err(format!("unknown kind {s:?} (expected B or Bprime)")),
        }
    }
}

/// Which defining condition a matrix violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Condition {
    EntryRange,
    RightPartialSum,
    WrapSum,
    ColumnPartialSum,
    PairedRowSum,
    CentralRowSum,
    ColumnTotal,
}

/// A violated condition; `row` and `col` are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    pub row: Option<usize>,
    pub col: Option<usize>,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ValidationReport {
    Valid,
    Invalid(Vec<Violation>),
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, ValidationReport::Valid)
    }
}

/// Checks every defining condition of a half matrix. Rows are indexed
/// top to bottom and columns left to right starting next to the centre.
///
/// The paired row-sum condition applies to rows `1..=n`. The central row of an
/// odd-sided matrix must instead have row sum 0; the wrap condition is not
/// imposed on it since the special central column absorbs its left half.
pub fn validate(entries: &[Vec<i64>], kind: AsmKind, n: usize, lambda: &StrictPartition) -> Result<ValidationReport> {
    if lambda.len() != n {
        return Err(Error::InvalidPartition(lambda.parts().to_vec(), "length must equal n"));
    }
    let rows = kind.rows(n);
    let m = lambda.first();
    let cols = entries.first().map_or(0, |r| r.len());
    if entries.len() != rows || entries.iter().any(|r| r.len() != m) {
        return Err(Error::DimensionMismatch { expected_rows: rows, expected_cols: m, rows: entries.len(), cols });
    }
    let mut bad = Vec::new();
    let mut push = |condition, row: Option<usize>, col: Option<usize>, value| {
        bad.push(Violation { condition, row: row.map(|r| r + 1), col: col.map(|c| c + 1), value })
    };
    for (i, row) in entries.iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            if !(-1..=1).contains(&a) {
                push(Condition::EntryRange, Some(i), Some(j), a);
            }
        }
    }
    let row_sum = |i: usize| entries[i].iter().sum::<i64>();
    for i in 0..rows {
        let mut s = 0;
        for j in (0..m).rev() {
            s += entries[i][j];
            if !(0..=1).contains(&s) {
                push(Condition::RightPartialSum, Some(i), Some(j), s);
            }
        }
        if Some(i) == kind.central_row(n) {
            continue;
        }
        let partner = rows - 1 - i;
        let mut s = row_sum(i);
        for j in 0..m {
            s += entries[partner][j];
            if !(0..=1).contains(&s) {
                push(Condition::WrapSum, Some(i), Some(j), s);
            }
        }
    }
    for j in 0..m {
        let mut s = 0;
        for i in 0..rows {
            s += entries[i][j];
            if !(0..=1).contains(&s) {
                push(Condition::ColumnPartialSum, Some(i), Some(j), s);
            }
        }
        let want = i64::from(lambda.contains(j + 1));
        if s != want {
            push(Condition::ColumnTotal, None, Some(j), s);
        }
    }
    for i in 0..n {
        let s = row_sum(i) + row_sum(rows - 1 - i);
        if s != 1 {
            push(Condition::PairedRowSum, Some(i), None, s);
        }
    }
    if let Some(c) = kind.central_row(n) {
        let s = row_sum(c);
        if s != 0 {
            push(Condition::CentralRowSum, Some(c), None, s);
        }
    }
    Ok(if bad.is_empty() { ValidationReport::Valid } else { ValidationReport::Invalid(bad) })
}

/// A validated half-turn symmetric ASM in half form (`N x m`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AsmJson", into = "AsmJson")]
pub struct HalfTurnAsm {
    kind: AsmKind,
    n: usize,
    lambda: StrictPartition,
    entries: Vec<Vec<i8>>,
}

#[derive(Serialize, Deserialize)]
struct AsmJson {
    kind: AsmKind,
    n: usize,
    lambda: StrictPartition,
    entries: Vec<Vec<i64>>,
}

impl TryFrom<AsmJson> for HalfTurnAsm {
    type Error = Error;
    fn try_from(j: AsmJson) -> Result<Self> {
        HalfTurnAsm::from_i64(j.kind, j.n, j.lambda, &j.entries)
    }
}

impl From<HalfTurnAsm> for AsmJson {
    fn from(a: HalfTurnAsm) -> Self {
        AsmJson {
            kind: a.kind,
            n: a.n,
            lambda: a.lambda,
            entries: a.entries.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect(),
        }
    }
}

impl HalfTurnAsm {
    pub fn new(kind: AsmKind, lambda: StrictPartition, entries: Vec<Vec<i8>>) -> Result<Self> {
        let wide: Vec<Vec<i64>> = entries.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
        Self::from_i64(kind, lambda.len(), lambda, &wide)
    }

    pub fn from_i64(kind: AsmKind, n: usize, lambda: StrictPartition, entries: &[Vec<i64>]) -> Result<Self> {
        match validate(entries, kind, n, &lambda)? {
            ValidationReport::Valid => Ok(HalfTurnAsm {
                kind,
                n,
                lambda,
                entries: entries.iter().map(|r| r.iter().map(|&v| v as i8).collect()).collect(),
            }),
            ValidationReport::Invalid(v) => {
                let first = &v[0];
                Err(Error::InvalidMatrix(format!(
                    "{} violation(s), first {:?} at row {:?} col {:?} (value {})",
                    v.len(),
                    first.condition,
                    first.row,
                    first.col,
                    first.value
                )))
            }
        }
    }

    pub fn kind(&self) -> AsmKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &StrictPartition {
        &self.lambda
    }

    pub fn entries(&self) -> &[Vec<i8>] {
        &self.entries
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.lambda.first()
    }

    /// Right-accumulated row sums `b_ij = sum_{k >= j} a_ik` (0-based).
    pub fn right_sums(&self) -> Vec<Vec<i8>> {
        self.entries
            .iter()
            .map(|row| {
                let mut out = vec![0i8; row.len()];
                let mut s = 0;
                for j in (0..row.len()).rev() {
                    s += row[j];
                    out[j] = s;
                }
                out
            })
            .collect()
    }

    pub fn neg_count(&self) -> usize {
        self.entries.iter().flatten().filter(|&&v| v == -1).count()
    }

    pub fn to_compass(&self) -> CompassMatrix {
        let b = self.right_sums();
        let m = self.cols();
        let mut above = vec![0i8; m];
        let rows = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let out = (0..m)
                    .map(|j| Compass::classify(row[j], b[i][j], above[j]))
                    .collect();
                for j in 0..m {
                    above[j] += row[j];
                }
                out
            })
            .collect();
        CompassMatrix { rows }
    }

    pub fn stats(&self) -> AsmStats {
        AsmStats::of(&self.to_compass())
    }

    /// Removes the central row of an odd-sided matrix when that row is zero.
    pub fn strip_central(&self) -> Reduction {
        let Some(c) = self.kind.central_row(self.n) else {
            return Reduction::NotReducible;
        };
        if self.entries[c].iter().any(|&v| v != 0) {
            return Reduction::NotReducible;
        }
        let mut entries = self.entries.clone();
        entries.remove(c);
        Reduction::Reduced(HalfTurnAsm { kind: AsmKind::EvenB, n: self.n, lambda: self.lambda.clone(), entries })
    }

    /// Inserts a zero central row into an even-sided matrix.
    pub fn embed_central(&self) -> Result<HalfTurnAsm> {
        if self.kind != AsmKind::EvenB {
            return Err(Error::Unsupported("embed_central needs an even-sided matrix".into()));
        }
        let mut entries = self.entries.clone();
        entries.insert(self.n, vec![0; self.cols()]);
        Ok(HalfTurnAsm { kind: AsmKind::OddBPrime, n: self.n, lambda: self.lambda.clone(), entries })
    }
}

impl fmt::Display for HalfTurnAsm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Outcome of [`HalfTurnAsm::strip_central`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    Reduced(HalfTurnAsm),
    NotReducible,
}

/// Compass point label of a matrix entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Compass {
    WE,
    NS,
    NE,
    SE,
    NW,
    SW,
}

impl Compass {
    pub const ALL: [Compass; 6] = [Compass::WE, Compass::NS, Compass::NE, Compass::SE, Compass::NW, Compass::SW];

    /// Label from the entry `a`, its right-accumulated row sum `b` and the
    /// column sum `c` strictly above it.
    pub fn classify(a: i8, b: i8, c: i8) -> Compass {
        match (a, b, c) {
            (1, _, _) => Compass::WE,
            (-1, _, _) => Compass::NS,
            (_, 0, 0) => Compass::SE,
            (_, 0, _) => Compass::NE,
            (_, _, 0) => Compass::SW,
            _ => Compass::NW,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Compass::WE => "WE",
            Compass::NS => "NS",
            Compass::NE => "NE",
            Compass::SE => "SE",
            Compass::NW => "NW",
            Compass::SW => "SW",
        }
    }

    pub fn asm_entry(self) -> i8 {
        match self {
            Compass::WE => 1,
            Compass::NS => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for Compass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Compass {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Compass::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown compass label {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompassMatrix {
    pub rows: Vec<Vec<Compass>>,
}

impl CompassMatrix {
    pub fn get(&self, i: usize, j: usize) -> Compass {
        self.rows[i][j]
    }

    /// Recovers the ASM entries (WE to 1, NS to -1, else 0).
    pub fn to_entries(&self) -> Vec<Vec<i8>> {
        self.rows.iter().map(|r| r.iter().map(|c| c.asm_entry()).collect()).collect()
    }

    pub fn count(&self, label: Compass) -> usize {
        self.rows.iter().flatten().filter(|&&c| c == label).count()
    }
}

impl fmt::Display for CompassMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<&str> = row.iter().map(|c| c.name()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Row statistics of a compass point matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsmStats {
    /// `big_l[k]` is `L_{k+1}`: the number of WE, NW or SW labels in the first
    /// column strictly above row `k+1`. Has `N + 1` entries.
    pub big_l: Vec<i64>,
    pub neg: usize,
    /// Per-row label counts indexed by [`Compass::index`].
    pub counts: Vec<[usize; 6]>,
    pub cols: usize,
}

impl AsmStats {
    pub fn of(c: &CompassMatrix) -> Self {
        let mut big_l = vec![0i64];
        let mut counts = Vec::with_capacity(c.rows.len());
        for row in &c.rows {
            let mut k = [0usize; 6];
            for &lab in row {
                k[lab.index()] += 1;
            }
            counts.push(k);
            let first = row.first().copied();
            let add = matches!(first, Some(Compass::WE | Compass::NW | Compass::SW));
            big_l.push(big_l.last().unwrap() + i64::from(add));
        }
        AsmStats { big_l, neg: c.count(Compass::NS), counts, cols: c.rows.first().map_or(0, |r| r.len()) }
    }

    /// `L_i` for 1-based `i` in `1..=N+1`.
    pub fn l(&self, i: usize) -> i64 {
        self.big_l[i - 1]
    }

    /// Count of `label` in 1-based row `i`.
    pub fn count(&self, i: usize, label: Compass) -> i64 {
        self.counts[i - 1][label.index()] as i64
    }

    /// Rows (1-based) where one of the per-row count identities fails:
    /// `#WE = #NS + L_{i+1} - L_i`, `#NE = L_i - #NS - #NW`,
    /// `#SE = m - L_{i+1} - #NS - #SW`.
    pub fn row_identity_failures(&self) -> Vec<usize> {
        let m = self.cols as i64;
        (1..=self.counts.len())
            .filter(|&i| {
                let c = |l| self.count(i, l);
                let (li, lj) = (self.l(i), self.l(i + 1));
                c(Compass::WE) != c(Compass::NS) + lj - li
                    || c(Compass::NE) != li - c(Compass::NS) - c(Compass::NW)
                    || c(Compass::SE) != m - lj - c(Compass::NS) - c(Compass::SW)
            })
            .collect()
    }

    /// Values of `i` in `1..=n` where `L_{N+1-i} = n - i + L_{i+1}` fails.
    pub fn symmetry_failures(&self, n: usize) -> Vec<usize> {
        let rows = self.counts.len();
        (1..=n).filter(|&i| self.l(rows + 1 - i) != (n - i) as i64 + self.l(i + 1)).collect()
    }
}

pub(crate) struct ColumnStep {
    pub(crate) state: u64,
    pub(crate) column: Vec<i8>,
}

/// All columns compatible with the right-sum state `state` (bit `i` set when
/// row `i` already has right sum 1), with column total `target`.
pub(crate) fn column_steps(state: u64, rows: usize, target: i8) -> Vec<ColumnStep> {
    fn go(i: usize, rows: usize, state: u64, c: i8, target: i8, col: &mut Vec<i8>, next: u64, out: &mut Vec<ColumnStep>) {
        if i == rows {
            if c == target {
                out.push(ColumnStep { state: next, column: col.clone() });
            }
            return;
        }
        let bit = 1u64 << i;
        let b = state & bit != 0;
        col.push(0);
        go(i + 1, rows, state, c, target, col, next, out);
        col.pop();
        if !b && c == 0 {
            col.push(1);
            go(i + 1, rows, state, 1, target, col, next | bit, out);
            col.pop();
        }
        if b && c == 1 {
            col.push(-1);
            go(i + 1, rows, state, 0, target, col, next & !bit, out);
            col.pop();
        }
    }
    let mut out = Vec::new();
    go(0, rows, state, 0, target, &mut Vec::with_capacity(rows), state, &mut out);
    out
}

pub(crate) fn final_state_ok(state: u64, kind: AsmKind, n: usize) -> bool {
    let rows = kind.rows(n);
    let bit = |i: usize| (state >> i) & 1;
    (0..n).all(|i| bit(i) + bit(rows - 1 - i) == 1) && kind.central_row(n).is_none_or(|c| bit(c) == 0)
}

struct Enumerator<'a> {
    kind: AsmKind,
    n: usize,
    rows: usize,
    targets: Vec<i8>,
    sink: &'a mut dyn FnMut(&[Vec<i8>]),
}

impl Enumerator<'_> {
    /// `cols` holds columns `m, m-1, ...` already placed; `j` is the next
    /// (0-based) column to fill, counting down.
    fn run(&mut self, state: u64, j: usize, cols: &mut Vec<Vec<i8>>) {
        if j == 0 {
            if final_state_ok(state, self.kind, self.n) {
                (self.sink)(cols);
            }
            return;
        }
        for step in column_steps(state, self.rows, self.targets[j - 1]) {
            cols.push(step.column);
            self.run(step.state, j - 1, cols);
            cols.pop();
        }
    }
}

fn transpose_rev(cols: &[Vec<i8>], rows: usize) -> Vec<Vec<i8>> {
    (0..rows).map(|i| cols.iter().rev().map(|c| c[i]).collect()).collect()
}

/// Calls `f` with the row-major entries of every matrix in the class, in a
/// deterministic order. No size checks.
pub fn for_each_entries(kind: AsmKind, lambda: &StrictPartition, mut f: impl FnMut(Vec<Vec<i8>>)) {
    let n = lambda.len();
    let rows = kind.rows(n);
    let m = lambda.first();
    let targets: Vec<i8> = (1..=m).map(|j| i8::from(lambda.contains(j))).collect();
    let mut sink = |cols: &[Vec<i8>]| f(transpose_rev(cols, rows));
    let mut e = Enumerator { kind, n, rows, targets, sink: &mut sink };
    e.run(0, m, &mut Vec::with_capacity(m));
}

fn check_enumeration(kind: AsmKind, lambda: &StrictPartition, limits: &Limits) -> Result<()> {
    let n = lambda.len();
    if n == 0 {
        return Err(Error::InvalidPartition(vec![], "need at least one part"));
    }
    if kind.rows(n) > 63 {
        return Err(Error::SizeLimitExceeded("more than 63 rows".into()));
    }
    limits.check(n, kind.rows(n), lambda.first())
}

/// Every matrix in the class, by column-by-column backtracking on the
/// right-sum state. The first column's choices are explored in parallel.
pub fn enumerate(kind: AsmKind, lambda: &StrictPartition, limits: &Limits) -> Result<Vec<HalfTurnAsm>> {
    check_enumeration(kind, lambda, limits)?;
    let n = lambda.len();
    let rows = kind.rows(n);
    let m = lambda.first();
    let targets: Vec<i8> = (1..=m).map(|j| i8::from(lambda.contains(j))).collect();
    let first = column_steps(0, rows, targets[m - 1]);
    let parts: Vec<Vec<Vec<Vec<i8>>>> = first
        .into_par_iter()
        .map(|step| {
            let mut found = Vec::new();
            let mut sink = |cols: &[Vec<i8>]| found.push(transpose_rev(cols, rows));
            let mut e = Enumerator { kind, n, rows, targets: targets.clone(), sink: &mut sink };
            let mut cols = vec![step.column];
            e.run(step.state, m - 1, &mut cols);
            found
        })
        .collect();
    Ok(parts
        .into_iter()
        .flatten()
        .map(|entries| HalfTurnAsm { kind, n, lambda: lambda.clone(), entries })
        .collect())
}

/// Number of matrices in the class, without materialising them.
pub fn count(kind: AsmKind, lambda: &StrictPartition, limits: &Limits) -> Result<u64> {
    check_enumeration(kind, lambda, limits)?;
    let mut k = 0u64;
    for_each_entries(kind, lambda, |_| k += 1);
    Ok(k)
}

/// Independent oracle: filters all `3^(N m)` matrices through [`validate`].
pub fn enumerate_brute_force(kind: AsmKind, lambda: &StrictPartition) -> Vec<Vec<Vec<i8>>> {
    let n = lambda.len();
    let rows = kind.rows(n);
    let m = lambda.first();
    let cells = rows * m;
    assert!(cells <= 14, "brute force limited to 14 cells");
    let mut out = Vec::new();
    let mut digits = vec![-1i64; cells];
    loop {
        let mat: Vec<Vec<i64>> = digits.chunks(m).map(|c| c.to_vec()).collect();
        if validate(&mat, kind, n, lambda).map(|r| r.is_valid()).unwrap_or(false) {
            out.push(mat.iter().map(|r| r.iter().map(|&v| v as i8).collect()).collect());
        }
        let mut k = 0;
        loop {
            if k == cells {
                return out;
            }
            if digits[k] < 1 {
                digits[k] += 1;
                break;
            }
            digits[k] = -1;
            k += 1;
        }
    }
}

/// Matrices printed in the literature, in half form.
pub mod fixtures {
    use super::*;

    fn build(kind: AsmKind, lambda: &[u32], rows: &[&[i8]]) -> HalfTurnAsm {
        HalfTurnAsm::new(kind, StrictPartition::new(lambda.to_vec()).unwrap(), rows.iter().map(|r| r.to_vec()).collect())
            .expect("fixture must be valid")
    }

    /// Odd-sided, `n = 4`, staircase shape.
    pub fn odd_staircase_n4() -> HalfTurnAsm {
        build(
            AsmKind::OddBPrime,
            &[4, 3, 2, 1],
            &[&[0, 0, 0, 0], &[1, 0, 0, 0], &[-1, 0, 1, 0], &[1, 0, 0, 0], &[0, 0, 0, 0], &[-1, 0, 0, 1], &[1, 0, 0, 0], &[-1, 1, 0, 0], &[1, 0, 0, 0]],
        )
    }

    /// Odd-sided, `n = 3`, `lambda = (8,6,3)`.
    pub fn odd_863() -> HalfTurnAsm {
        build(
            AsmKind::OddBPrime,
            &[8, 6, 3],
            &[
                &[0, 1, 0, 0, 0, 0, 0, 0],
                &[0, -1, 0, 1, 0, 0, 0, 0],
                &[1, 0, 0, 0, 0, 0, 0, 0],
                &[-1, 0, 1, -1, 0, 0, 1, 0],
                &[0, 0, -1, 0, 1, 0, -1, 1],
                &[0, 1, 0, 0, -1, 1, 0, 0],
                &[0, -1, 1, 0, 0, 0, 0, 0],
            ],
        )
    }

    /// Even-sided, `n = 3`, staircase shape.
    pub fn even_staircase_n3() -> HalfTurnAsm {
        build(AsmKind::EvenB, &[3, 2, 1], &[&[1, 0, 0], &[-1, 0, 1], &[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 0]])
    }

    /// Odd-sided, `n = 2`, staircase shape, with a `-1` in the central row.
    pub fn odd_staircase_n2() -> HalfTurnAsm {
        build(AsmKind::OddBPrime, &[2, 1], &[&[0, 0], &[1, 0], &[-1, 1], &[0, 0], &[1, 0]])
    }

    /// Odd-sided counterpart of [`even_staircase_n3`] with a zero central row.
    pub fn odd_staircase_n3_reducible() -> HalfTurnAsm {
        build(
            AsmKind::OddBPrime,
            &[3, 2, 1],
            &[&[1, 0, 0], &[-1, 0, 1], &[0, 0, 0], &[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 0]],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::Compass::*;
    use super::*;
    use std::collections::BTreeSet;

    fn sp(p: &[u32]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn validate_small_examples() {
        let v = |e: Vec<Vec<i64>>| validate(&e, AsmKind::OddBPrime, 1, &sp(&[1])).unwrap();
        assert!(v(vec![vec![1], vec![0], vec![0]]).is_valid());
        let ValidationReport::Invalid(bad) = v(vec![vec![1], vec![1], vec![-1]]) else { panic!() };
        assert!(bad.iter().any(|b| b.condition == Condition::ColumnPartialSum && b.row == Some(2)));
        assert!(matches!(
            validate(&[vec![1, 0]], AsmKind::OddBPrime, 1, &sp(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn printed_matrices_are_valid() {
        for a in [odd_staircase_n4(), odd_863(), even_staircase_n3(), odd_staircase_n2(), odd_staircase_n3_reducible()] {
            assert_eq!(a.stats().row_identity_failures(), Vec::<usize>::new());
        }
    }

    #[test]
    fn compass_matches_printed() {
        let c = even_staircase_n3().to_compass();
        let want = [[WE, SE, SE], [NS, SW, WE], [SE, SE, NE], [WE, SE, NE], [NW, WE, NE], [NE, NE, NE]];
        for (row, w) in c.rows.iter().zip(want) {
            assert_eq!(row, &w.to_vec());
        }
        let c = odd_staircase_n2().to_compass();
        let want = [[SE, SE], [WE, SE], [NS, WE], [SE, NE], [WE, NE]];
        for (row, w) in c.rows.iter().zip(want) {
            assert_eq!(row, &w.to_vec());
        }
        let c = odd_863().to_compass();
        let want = [
            [SW, WE, SE, SE, SE, SE, SE, SE],
            [SE, NS, SW, WE, SE, SE, SE, SE],
            [WE, SE, SE, NE, SE, SE, SE, SE],
            [NS, SW, WE, NS, SW, SW, WE, SE],
            [SE, SE, NS, SW, WE, SE, NS, WE],
            [SW, WE, SE, SE, NS, WE, SE, NE],
            [SE, NS, WE, SE, SE, NE, SE, NE],
        ];
        for (row, w) in c.rows.iter().zip(want) {
            assert_eq!(row, &w.to_vec());
        }
        let c = odd_staircase_n4().to_compass();
        assert_eq!(c.rows[5], vec![NS, SW, NW, WE]);
        assert_eq!(c.rows[8], vec![WE, NE, NE, NE]);
    }

    #[test]
    fn stats_examples() {
        let a = HalfTurnAsm::new(AsmKind::OddBPrime, sp(&[1]), vec![vec![1], vec![0], vec![0]]).unwrap();
        let s = a.stats();
        assert_eq!((s.l(1), s.l(2), s.neg), (0, 1, 0));
        let s = odd_863().stats();
        assert_eq!(s.neg, 7);
        assert_eq!(s.big_l, vec![0, 1, 1, 2, 2, 2, 3, 3]);
        assert!(s.symmetry_failures(3).is_empty());
        // The relation does not extend to the central row.
        assert_ne!(s.l(4), -1 + s.l(5));
    }

    #[test]
    fn small_counts() {
        let all = enumerate(AsmKind::OddBPrime, &sp(&[1]), &Limits::default()).unwrap();
        let got: Vec<_> = all.iter().map(|a| a.entries().to_vec()).collect();
        assert_eq!(got.len(), 2);
        assert!(got.contains(&vec![vec![1], vec![0], vec![0]]));
        assert!(got.contains(&vec![vec![0], vec![0], vec![1]]));
        assert_eq!(count(AsmKind::OddBPrime, &sp(&[2]), &Limits::default()).unwrap(), 4);
        let b3 = enumerate(AsmKind::EvenB, &sp(&[3, 2, 1]), &Limits::default()).unwrap();
        assert!(b3.contains(&even_staircase_n3()));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let cases: &[(AsmKind, &[u32])] = &[
            (AsmKind::OddBPrime, &[1]),
            (AsmKind::OddBPrime, &[2]),
            (AsmKind::OddBPrime, &[3]),
            (AsmKind::OddBPrime, &[4]),
            (AsmKind::EvenB, &[1]),
            (AsmKind::EvenB, &[2]),
            (AsmKind::EvenB, &[3]),
            (AsmKind::EvenB, &[4]),
            (AsmKind::EvenB, &[5]),
            (AsmKind::EvenB, &[6]),
            (AsmKind::EvenB, &[2, 1]),
            (AsmKind::EvenB, &[3, 1]),
            (AsmKind::EvenB, &[3, 2]),
            (AsmKind::OddBPrime, &[2, 1]),
        ];
        for &(kind, lam) in cases {
            let lam = sp(lam);
            let fast: BTreeSet<_> =
                enumerate(kind, &lam, &Limits::default()).unwrap().into_iter().map(|a| a.entries).collect();
            let slow: BTreeSet<_> = enumerate_brute_force(kind, &lam).into_iter().collect();
            assert_eq!(fast, slow, "{kind} {lam}");
        }
    }

    #[test]
    fn enumerated_matrices_satisfy_invariants() {
        for (kind, lam) in [(AsmKind::OddBPrime, sp(&[3, 2, 1])), (AsmKind::OddBPrime, sp(&[5, 3, 1])), (AsmKind::EvenB, sp(&[4, 2, 1]))] {
            let all = enumerate(kind, &lam, &Limits::default()).unwrap();
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            let compass: BTreeSet<_> = all.iter().map(|a| a.to_compass()).map(|c| format!("{c}")).collect();
            assert_eq!(compass.len(), all.len());
            for a in &all {
                let wide: Vec<Vec<i64>> = a.entries.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
                assert!(validate(&wide, kind, 3, &lam).unwrap().is_valid());
                let c = a.to_compass();
                assert_eq!(&c.to_entries(), a.entries());
                let s = a.stats();
                assert_eq!(s.neg, a.neg_count());
                assert!(s.row_identity_failures().is_empty());
                assert!(s.symmetry_failures(3).is_empty(), "{a}");
            }
        }
    }

    #[test]
    fn strip_and_embed() {
        assert_eq!(odd_staircase_n3_reducible().strip_central(), Reduction::Reduced(even_staircase_n3()));
        assert_eq!(even_staircase_n3().embed_central().unwrap(), odd_staircase_n3_reducible());
        assert_eq!(odd_staircase_n2().strip_central(), Reduction::NotReducible);
        let one = HalfTurnAsm::new(AsmKind::OddBPrime, sp(&[1]), vec![vec![1], vec![0], vec![0]]).unwrap();
        let Reduction::Reduced(e) = one.strip_central() else { panic!() };
        assert_eq!(e.entries(), &[vec![1], vec![0]]);
        for lam in [sp(&[1]), sp(&[2, 1]), sp(&[3, 2, 1]), sp(&[4, 2, 1])] {
            let evens = enumerate(AsmKind::EvenB, &lam, &Limits::default()).unwrap();
            let odds = enumerate(AsmKind::OddBPrime, &lam, &Limits::default()).unwrap();
            for e in &evens {
                let o = e.embed_central().unwrap();
                assert!(odds.contains(&o));
                assert_eq!(o.strip_central(), Reduction::Reduced(e.clone()));
            }
            let reducible = odds.iter().filter(|o| o.strip_central() != Reduction::NotReducible).count();
            assert_eq!(reducible, evens.len());
            for o in &odds {
                let has_neg = o.entries()[lam.len()].contains(&-1);
                assert_eq!(has_neg, o.strip_central() == Reduction::NotReducible);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let a = odd_863();
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.contains("\"kind\":\"Bprime\""));
        let back: HalfTurnAsm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        let bad = r#"{"kind":"B","n":1,"lambda":[1],"entries":[[1],[1]]}"#;
        assert!(serde_json::from_str::<HalfTurnAsm>(bad).is_err());
    }

    #[test]
    fn size_limit() {
        let lam = sp(&[5, 4, 3, 2, 1]);
        assert!(matches!(enumerate(AsmKind::EvenB, &lam, &Limits::default()), Err(Error::SizeLimitExceeded(_))));
        let wide = sp(&[40]);
        assert!(matches!(count(AsmKind::EvenB, &wide, &Limits::default()), Err(Error::SizeLimitExceeded(_))));
    }
}
