//! Unprimed and primed shifted tableaux over the alphabet
//! `1' < 1 < ... < n' < n < 0' < 0 < n̄' < n̄ < ... < 1̄' < 1̄`, their bijection with
//! half-turn ASMs, and weighted sums over them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::asm::{AsmKind, Compass, HalfTurnAsm, StrictPartition};
use crate::error::{Error, Result};
use crate::laurent::var::{x, y, z0};
use crate::laurent::{GaussianRational, LaurentPoly, Monomial};
use crate::limits::Limits;

/// One tableau entry. `letter` is `1..=n`, or 0 for the central letter
/// (never barred).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TabEntry {
    #[serde(rename = "l")]
    pub letter: u8,
    pub bar: bool,
    pub prime: bool,
}

impl TabEntry {
    pub const fn plain(letter: u8) -> Self {
        TabEntry { letter, bar: false, prime: false }
    }

    pub const fn barred(letter: u8) -> Self {
        TabEntry { letter, bar: true, prime: false }
    }

    pub const fn zero() -> Self {
        TabEntry { letter: 0, bar: false, prime: false }
    }

    pub const fn primed(self) -> Self {
        TabEntry { prime: true, ..self }
    }

    pub const fn unprimed(self) -> Self {
        TabEntry { prime: false, ..self }
    }

    pub fn is_zero(self) -> bool {
        self.letter == 0
    }

    fn key(self) -> (u8, i16, u8) {
        let (class, v) = if self.letter == 0 {
            (1, 0)
        } else if self.bar {
            (2, -(self.letter as i16))
        } else {
            (0, self.letter as i16)
        };
        (class, v, u8::from(!self.prime))
    }

    /// Alphabet position ignoring primes.
    fn rank(self) -> (u8, i16) {
        let (c, v, _) = self.key();
        (c, v)
    }

    /// 0-based row of the half matrix whose accumulated sums produce this letter.
    pub fn asm_row(self, kind: AsmKind, n: usize) -> Option<usize> {
        let rows = kind.rows(n);
        let k = self.letter as usize;
        match (self.letter, self.bar, kind) {
            (0, _, AsmKind::OddBPrime) => Some(n),
            (0, _, AsmKind::EvenB) => None,
            (_, false, _) if k <= n => Some(k - 1),
            (_, true, _) if k <= n => Some(rows - k),
            _ => None,
        }
    }

    /// Inverse of [`TabEntry::asm_row`].
    pub fn for_asm_row(row: usize, kind: AsmKind, n: usize) -> TabEntry {
        let rows = kind.rows(n);
        if row < n {
            TabEntry::plain(row as u8 + 1)
        } else if Some(row) == kind.central_row(n) {
            TabEntry::zero()
        } else {
            TabEntry::barred((rows - row) as u8)
        }
    }
}

impl PartialOrd for TabEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TabEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for TabEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bar {
            f.write_str("-")?;
        }
        write!(f, "{}", self.letter)?;
        if self.prime {
            f.write_str("'")?;
        }
        Ok(())
    }
}

impl FromStr for TabEntry {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let (bar, rest) = match s.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, s),
        };
        let (prime, digits) = match rest.strip_suffix('\'') {
            Some(d) => (true, d),
            None => (false, rest),
        };
        let letter: u8 = digits.parse().map_err(|_| format!("bad tableau entry {s:?}"))?;
        if letter == 0 && bar {
            return Err("letter 0 cannot be barred".into());
        }
        Ok(TabEntry { letter, bar, prime })
    }
}

/// Which letters may appear: `Odd` includes 0 and 0', `Even` excludes them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Alphabet {
    Odd,
    Even,
}

impl Alphabet {
    pub fn for_kind(kind: AsmKind) -> Self {
        match kind {
            AsmKind::OddBPrime => Alphabet::Odd,
            AsmKind::EvenB => Alphabet::Even,
        }
    }

    /// All unprimed letters in increasing order.
    pub fn letters(self, n: usize) -> Vec<TabEntry> {
        let mut v: Vec<TabEntry> = (1..=n as u8).map(TabEntry::plain).collect();
        if self == Alphabet::Odd {
            v.push(TabEntry::zero());
        }
        v.extend((1..=n as u8).rev().map(TabEntry::barred));
        v
    }

    /// All letters, primed and unprimed, in increasing order.
    pub fn primed_letters(self, n: usize) -> Vec<TabEntry> {
        self.letters(n).into_iter().flat_map(|e| [e.primed(), e]).collect()
    }
}

/// The main diagonal word `d`, with `d_k` in `{k, k̄}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Profile(pub Vec<TabEntry>);

/// A shifted tableau: row `r` holds `lambda[r]` entries starting on the main
/// diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftedTableau {
    pub lambda: StrictPartition,
    pub rows: Vec<Vec<TabEntry>>,
}

impl ShiftedTableau {
    pub fn new(lambda: StrictPartition, rows: Vec<Vec<TabEntry>>) -> Result<Self> {
        if rows.len() != lambda.len() || rows.iter().zip(lambda.parts()).any(|(r, &p)| r.len() != p as usize) {
            return Err(Error::InvalidTableau(format!("row lengths do not match shape {lambda}")));
        }
        Ok(ShiftedTableau { lambda, rows })
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    /// Entry in row `r` at offset `j` from the main diagonal (both 0-based).
    pub fn get(&self, r: usize, j: usize) -> Option<TabEntry> {
        self.rows.get(r).and_then(|row| row.get(j)).copied()
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, TabEntry)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().enumerate().map(move |(j, &e)| (r, j, e)))
    }

    pub fn profile(&self) -> Profile {
        Profile(self.rows.iter().map(|r| r[0]).collect())
    }

    pub fn is_primed(&self) -> bool {
        self.cells().any(|(_, _, e)| e.prime)
    }

    pub fn unprimed(&self) -> ShiftedTableau {
        ShiftedTableau {
            lambda: self.lambda.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|e| e.unprimed()).collect()).collect(),
        }
    }

    fn check_letters(&self, alphabet: Alphabet) -> std::result::Result<(), String> {
        let n = self.n() as u8;
        for (r, j, e) in self.cells() {
            if e.letter > n || (e.letter == 0 && (e.bar || alphabet == Alphabet::Even)) {
                return Err(format!("entry {e} at ({}, {}) is outside the alphabet", r + 1, j + 1));
            }
        }
        Ok(())
    }

    /// Checks the unprimed tableau rules; primes are rejected.
    pub fn validate_unprimed(&self, alphabet: Alphabet) -> std::result::Result<(), String> {
        self.check_letters(alphabet)?;
        let mut partial: Vec<Vec<TabEntry>> = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            partial.push(Vec::new());
            for (j, &e) in row.iter().enumerate() {
                if e.prime {
                    return Err(format!("primed entry {e} in an unprimed tableau"));
                }
                if !local_ok(&partial, r, j, e, false) {
                    return Err(format!("entry {e} at ({}, {}) breaks the ordering rules", r + 1, j + 1));
                }
                partial[r].push(e);
            }
        }
        Ok(())
    }

    /// Checks the primed tableau rules.
    pub fn validate_primed(&self, alphabet: Alphabet) -> std::result::Result<(), String> {
        self.check_letters(alphabet)?;
        let mut partial: Vec<Vec<TabEntry>> = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            partial.push(Vec::new());
            for (j, &e) in row.iter().enumerate() {
                if !local_ok(&partial, r, j, e, true) {
                    return Err(format!("entry {e} at ({}, {}) breaks the primed tableau rules", r + 1, j + 1));
                }
                partial[r].push(e);
            }
        }
        Ok(())
    }

    /// Reads diagonal `j` of the tableau from column `j` of the accumulated
    /// row-sum matrix of `a`.
    pub fn from_asm(a: &HalfTurnAsm) -> ShiftedTableau {
        let b = a.right_sums();
        let (kind, n) = (a.kind(), a.n());
        let mut rows: Vec<Vec<TabEntry>> = a.lambda().parts().iter().map(|&p| Vec::with_capacity(p as usize)).collect();
        for j in 0..a.cols() {
            let mut depth = 0;
            for (i, brow) in b.iter().enumerate() {
                if brow[j] == 1 {
                    rows[depth].push(TabEntry::for_asm_row(i, kind, n));
                    depth += 1;
                }
            }
        }
        ShiftedTableau { lambda: a.lambda().clone(), rows }
    }

    /// Inverse of [`ShiftedTableau::from_asm`]; primes are ignored.
    pub fn to_asm(&self, kind: AsmKind) -> Result<HalfTurnAsm> {
        let n = self.n();
        self.unprimed()
            .validate_unprimed(Alphabet::for_kind(kind))
            .map_err(Error::InvalidTableau)?;
        let m = self.lambda.first();
        let mut b = vec![vec![0i8; m + 1]; kind.rows(n)];
        for (_, j, e) in self.cells() {
            let i = e.asm_row(kind, n).ok_or_else(|| Error::InvalidTableau(format!("letter {e} has no row")))?;
            b[i][j] = 1;
        }
        let entries = b.iter().map(|row| (0..m).map(|j| row[j] - row[j + 1]).collect()).collect();
        HalfTurnAsm::new(kind, self.lambda.clone(), entries).map_err(|e| Error::InvalidTableau(e.to_string()))
    }

    /// All primed tableaux arising from `self = from_asm(a)`: the entry fed by
    /// an NS label is free, NW forces a prime, SW forbids one, and the main
    /// diagonal stays unprimed.
    pub fn primings(&self, a: &HalfTurnAsm) -> Vec<ShiftedTableau> {
        let c = a.to_compass();
        let (kind, n) = (a.kind(), a.n());
        let mut base = self.unprimed();
        let mut free = Vec::new();
        for (r, j, e) in self.cells() {
            if j == 0 {
                continue;
            }
            let i = e.asm_row(kind, n).expect("tableau letter matches the matrix");
            match c.get(i, j - 1) {
                Compass::NS => free.push((r, j)),
                Compass::NW => base.rows[r][j].prime = true,
                _ => {}
            }
        }
        (0u64..1 << free.len())
            .map(|mask| {
                let mut t = base.clone();
                for (k, &(r, j)) in free.iter().enumerate() {
                    t.rows[r][j].prime = mask >> k & 1 == 1;
                }
                t
            })
            .collect()
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&rows.join(" / "))
    }
}

impl FromStr for ShiftedTableau {
    type Err = Error;
    /// Parses the `Display` form, e.g. `1 1 -3' / -2`.
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<Vec<TabEntry>> = s
            .split('/')
            .map(|row| row.split_whitespace().map(|t| t.parse().map_err(Error::InvalidTableau)).collect())
            .collect::<Result<_>>()?;
        let lambda = StrictPartition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        ShiftedTableau::new(lambda, rows)
    }
}

/// Ordering rules for placing `e` at row `r`, offset `j`, given the rows
/// filled so far (row `r` filled up to offset `j - 1`).
fn local_ok(t: &[Vec<TabEntry>], r: usize, j: usize, e: TabEntry, primed: bool) -> bool {
    if j == 0 {
        if e.prime || e.letter == 0 {
            return false;
        }
        // One of k, k̄ per diagonal position, each index once.
        if t[..r].iter().any(|row| row[0].letter == e.letter) {
            return false;
        }
    } else {
        let left = t[r][j - 1];
        if left > e || (primed && left.prime && left == e) {
            return false;
        }
    }
    if r > 0 {
        let above = t[r - 1][j + 1];
        if above > e || (primed && !e.prime && above == e) {
            return false;
        }
        if t[r - 1][j].rank() >= e.rank() {
            return false;
        }
    }
    true
}

fn check_size(lambda: &StrictPartition, limits: &Limits) -> Result<()> {
    let n = lambda.len();
    if n == 0 {
        return Err(Error::InvalidPartition(vec![], "need at least one part"));
    }
    limits.check(n, 2 * n + 1, lambda.first())
}

fn backtrack(lambda: &StrictPartition, candidates: &[TabEntry], primed: bool, out: &mut Vec<ShiftedTableau>) {
    fn go(
        lambda: &StrictPartition,
        cand: &[TabEntry],
        primed: bool,
        t: &mut Vec<Vec<TabEntry>>,
        r: usize,
        j: usize,
        out: &mut Vec<ShiftedTableau>,
    ) {
        let parts = lambda.parts();
        if j == parts[r] as usize {
            if r + 1 == parts.len() {
                out.push(ShiftedTableau { lambda: lambda.clone(), rows: t.clone() });
                return;
            }
            t.push(Vec::with_capacity(parts.get(r + 1).copied().unwrap_or(0) as usize));
            go(lambda, cand, primed, t, r + 1, 0, out);
            t.pop();
            return;
        }
        for &e in cand {
            if local_ok(t, r, j, e, primed) {
                t[r].push(e);
                go(lambda, cand, primed, t, r, j + 1, out);
                t[r].pop();
            }
        }
    }
    let mut t = vec![Vec::with_capacity(lambda.first())];
    go(lambda, candidates, primed, &mut t, 0, 0, out);
}

/// All unprimed shifted tableaux of shape `lambda`, in lexicographic order.
pub fn enumerate_unprimed(lambda: &StrictPartition, alphabet: Alphabet, limits: &Limits) -> Result<Vec<ShiftedTableau>> {
    check_size(lambda, limits)?;
    let mut out = Vec::new();
    backtrack(lambda, &alphabet.letters(lambda.len()), false, &mut out);
    Ok(out)
}

/// All primed shifted tableaux of shape `lambda`, generated directly from the
/// primed ordering rules.
pub fn enumerate_primed(lambda: &StrictPartition, alphabet: Alphabet, limits: &Limits) -> Result<Vec<ShiftedTableau>> {
    check_size(lambda, limits)?;
    let mut out = Vec::new();
    backtrack(lambda, &alphabet.primed_letters(lambda.len()), true, &mut out);
    Ok(out)
}

/// Entry weights for primed tableaux.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableauScheme {
    /// Odd alphabet in `x`, `y`, `z0`.
    Odd,
    /// Even alphabet: the odd weights at `z0 = i`, `x -> i x`, `ȳ -> i ȳ`.
    Even,
}

impl TableauScheme {
    pub fn alphabet(self) -> Alphabet {
        match self {
            TableauScheme::Odd => Alphabet::Odd,
            TableauScheme::Even => Alphabet::Even,
        }
    }

    /// Weight of entry `e` in a tableau with `n` rows.
    pub fn entry_weight(self, e: TabEntry, diagonal: bool, n: usize) -> Result<LaurentPoly> {
        let k = e.letter as usize;
        let mono = |pairs: Vec<(crate::laurent::VarId, i32)>| Monomial::from_pairs(pairs);
        let i = GaussianRational::i();
        let (coeff, m) = if diagonal {
            if e.bar {
                return Ok(LaurentPoly::one());
            }
            let mut pairs = vec![(x(k), 1)];
            for jj in (k + 1)..=n {
                pairs.push((x(jj), 1));
                pairs.push((y(jj), -1));
            }
            match self {
                TableauScheme::Odd => {
                    pairs.push((z0(), 1));
                    (GaussianRational::one(), mono(pairs))
                }
                TableauScheme::Even => {
                    let sign = if (n - k + 1).is_multiple_of(2) { 1 } else { -1 };
                    (GaussianRational::from_int(sign), mono(pairs))
                }
            }
        } else {
            let odd: (i32, Monomial) = match (e.letter, e.bar, e.prime) {
                (0, _, false) => (0, Monomial::var(z0())),
                (0, _, true) => (0, Monomial::var_pow(z0(), -1)),
                (_, false, false) => (1, Monomial::var(x(k))),
                (_, false, true) => (-1, Monomial::var(y(k))),
                (_, true, false) => (1, Monomial::var_pow(y(k), -1)),
                (_, true, true) => (-1, Monomial::var_pow(x(k), -1)),
            };
            match self {
                TableauScheme::Odd => (GaussianRational::one(), odd.1),
                TableauScheme::Even => {
                    if e.letter == 0 {
                        return Err(Error::AlphabetMismatch);
                    }
                    let c = if odd.0 == 1 { i.clone() } else { -&i };
                    (c, odd.1)
                }
            }
        };
        Ok(LaurentPoly::term(m, coeff))
    }

    pub fn weight(self, p: &ShiftedTableau) -> Result<LaurentPoly> {
        let n = p.n();
        let mut w = LaurentPoly::one();
        for (_, j, e) in p.cells() {
            w = &w * &self.entry_weight(e, j == 0, n)?;
        }
        Ok(w)
    }
}

/// Weight of a primed tableau.
pub fn weight(p: &ShiftedTableau, scheme: TableauScheme) -> Result<LaurentPoly> {
    if scheme == TableauScheme::Even && p.cells().any(|(_, _, e)| e.is_zero()) {
        return Err(Error::AlphabetMismatch);
    }
    scheme.weight(p)
}

/// Sum of `weight(e, diagonal)` products over all primed (or unprimed)
/// tableaux of shape `lambda`, computed column by column over the shifted
/// diagram. The state is the previous column together with the set of
/// indices already used on the main diagonal.
pub fn weighted_sum<W>(lambda: &StrictPartition, alphabet: Alphabet, primed: bool, weight: W) -> Result<LaurentPoly>
where
    W: Fn(TabEntry, bool) -> Result<LaurentPoly>,
{
    let n = lambda.len();
    let parts = lambda.parts();
    let m = lambda.first();
    let letters = if primed { alphabet.primed_letters(n) } else { alphabet.letters(n) };
    let mut wt: FxHashMap<(TabEntry, bool), LaurentPoly> = FxHashMap::default();
    for &e in &letters {
        wt.insert((e, false), weight(e, false)?);
        if !e.prime && e.letter != 0 {
            wt.insert((e, true), weight(e, true)?);
        }
    }
    // Rows (0-based) present in shifted column c (0-based): r <= c and c < r + lambda_r.
    let col_len = |c: usize| (0..n).take_while(|&r| r <= c && c < r + parts[r] as usize).count();

    type State = (Vec<TabEntry>, u32);
    let mut states: FxHashMap<State, LaurentPoly> = FxHashMap::default();
    states.insert((Vec::new(), 0), LaurentPoly::one());
    for c in 0..m {
        let len = col_len(c);
        let mut next: FxHashMap<State, LaurentPoly> = FxHashMap::default();
        for ((prev, mask), val) in states {
            let mut col = Vec::with_capacity(len);
            extend_column(&letters, primed, &prev, mask, c, len, &mut col, &mut |col, new_mask| {
                let mut w = val.clone();
                for (r, &e) in col.iter().enumerate() {
                    w = &w * &wt[&(e, r == c)];
                }
                let slot = next.entry((col.to_vec(), new_mask)).or_insert_with(LaurentPoly::zero);
                *slot = &*slot + &w;
            });
        }
        states = next;
    }
    Ok(states.into_values().sum())
}

#[allow(clippy::too_many_arguments)]
fn extend_column(
    letters: &[TabEntry],
    primed: bool,
    prev: &[TabEntry],
    mask: u32,
    c: usize,
    len: usize,
    col: &mut Vec<TabEntry>,
    emit: &mut dyn FnMut(&[TabEntry], u32),
) {
    let r = col.len();
    if r == len {
        emit(col, mask);
        return;
    }
    for &e in letters {
        let mut new_mask = mask;
        if r == c {
            if e.prime || e.letter == 0 || mask >> e.letter & 1 == 1 {
                continue;
            }
            new_mask |= 1 << e.letter;
        } else {
            let left = prev[r];
            if left > e || (primed && left.prime && left == e) {
                continue;
            }
        }
        if r > 0 {
            let above = col[r - 1];
            if above > e || (primed && !e.prime && above == e) {
                continue;
            }
            if prev[r - 1].rank() >= e.rank() {
                continue;
            }
        }
        col.push(e);
        extend_column(letters, primed, prev, new_mask, c, len, col, emit);
        col.pop();
    }
}

/// Sum of [`TableauScheme::weight`] over all primed tableaux of shape `lambda`
/// in the scheme's alphabet.
pub fn primed_weight_sum(lambda: &StrictPartition, scheme: TableauScheme) -> Result<LaurentPoly> {
    let n = lambda.len();
    weighted_sum(lambda, scheme.alphabet(), true, |e, d| scheme.entry_weight(e, d, n))
}

/// Number of primed (or unprimed) tableaux of shape `lambda`.
pub fn count_tableaux(lambda: &StrictPartition, alphabet: Alphabet, primed: bool) -> Result<u64> {
    let s = weighted_sum(lambda, alphabet, primed, |_, _| Ok(LaurentPoly::one()))?;
    let c = s.constant_term();
    c.re.to_string().parse().map_err(|_| Error::Unsupported("count overflow".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::{enumerate, fixtures};
    use crate::laurent::poly;
    use std::collections::BTreeSet;

    fn sp(p: &[u32]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    fn tab(s: &str) -> ShiftedTableau {
        s.parse().unwrap()
    }

    #[test]
    fn alphabet_order() {
        let v = Alphabet::Odd.primed_letters(2);
        let s: Vec<String> = v.iter().map(|e| e.to_string()).collect();
        assert_eq!(s, ["1'", "1", "2'", "2", "0'", "0", "-2'", "-2", "-1'", "-1"]);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn printed_pair() {
        let a = fixtures::odd_863();
        let t = ShiftedTableau::from_asm(&a);
        assert_eq!(t.to_string(), "1 1 2 2 0 0 0 -3 / 3 0 0 -3 -3 -2 / -2 -2 -1");
        assert_eq!(t.to_asm(AsmKind::OddBPrime).unwrap(), a);
        let t = tab("1 2 2 / -3 -2 / -2");
        assert_eq!(t.to_asm(AsmKind::OddBPrime).unwrap(), fixtures::odd_staircase_n3_reducible());
        assert_eq!(t.to_asm(AsmKind::EvenB).unwrap(), fixtures::even_staircase_n3());
        assert_eq!(ShiftedTableau::from_asm(&fixtures::even_staircase_n3()), t);
    }

    #[test]
    fn single_boxes() {
        let up = HalfTurnAsm::new(AsmKind::OddBPrime, sp(&[1]), vec![vec![1], vec![0], vec![0]]).unwrap();
        let down = HalfTurnAsm::new(AsmKind::OddBPrime, sp(&[1]), vec![vec![0], vec![0], vec![1]]).unwrap();
        assert_eq!(ShiftedTableau::from_asm(&up).to_string(), "1");
        assert_eq!(ShiftedTableau::from_asm(&down).to_string(), "-1");
        assert_eq!(tab("1").to_asm(AsmKind::OddBPrime).unwrap(), up);
        assert!(tab("0").to_asm(AsmKind::OddBPrime).is_err());
    }

    #[test]
    fn small_enumerations() {
        let l = Limits::default();
        let got: Vec<String> =
            enumerate_unprimed(&sp(&[1]), Alphabet::Odd, &l).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(got, ["1", "-1"]);
        let got: Vec<String> =
            enumerate_unprimed(&sp(&[2]), Alphabet::Odd, &l).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(got, ["1 1", "1 0", "1 -1", "-1 -1"]);
        let got: Vec<String> =
            enumerate_primed(&sp(&[2]), Alphabet::Odd, &l).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(got, ["1 1", "1 0'", "1 0", "1 -1'", "1 -1", "-1 -1"]);
        assert_eq!(enumerate_primed(&sp(&[1]), Alphabet::Odd, &l).unwrap().len(), 2);
        assert_eq!(enumerate_primed(&sp(&[2]), Alphabet::Even, &l).unwrap().len(), 4);
    }

    #[test]
    fn primings_examples() {
        let a = HalfTurnAsm::new(AsmKind::OddBPrime, sp(&[2]), vec![vec![-1, 1], vec![1, 0], vec![0, 0]]);
        assert!(a.is_err());
        for a in enumerate(AsmKind::OddBPrime, &sp(&[2]), &Limits::default()).unwrap() {
            let t = ShiftedTableau::from_asm(&a);
            let ps: Vec<String> = t.primings(&a).iter().map(|p| p.to_string()).collect();
            match t.to_string().as_str() {
                "1 0" => assert_eq!(ps, ["1 0", "1 0'"]),
                "1 1" => assert_eq!(ps, ["1 1"]),
                _ => {}
            }
        }
        let a = fixtures::odd_863();
        assert_eq!(ShiftedTableau::from_asm(&a).primings(&a).len(), 128);
    }

    #[test]
    fn single_box_weights() {
        assert_eq!(weight(&tab("1"), TableauScheme::Odd).unwrap(), poly("z0*x1"));
        assert_eq!(weight(&tab("-1"), TableauScheme::Odd).unwrap(), poly("1"));
        assert_eq!(weight(&tab("1 0"), TableauScheme::Even), Err(Error::AlphabetMismatch));
        let all = enumerate_primed(&sp(&[2]), Alphabet::Odd, &Limits::default()).unwrap();
        let s: LaurentPoly = all.iter().map(|p| weight(p, TableauScheme::Odd).unwrap()).sum();
        assert_eq!(s, poly("z0*x1^2 + x1 + z0^2*x1 + z0 + z0*x1*y1^-1 + y1^-1"));
        assert_eq!(s, &poly("1 + z0*x1") * &poly("x1 + z0 + y1^-1"));
        assert_eq!(primed_weight_sum(&sp(&[2]), TableauScheme::Odd).unwrap(), s);
    }

    #[test]
    fn bijection_and_priming_union() {
        let l = Limits::default();
        for lam in [sp(&[1]), sp(&[3]), sp(&[2, 1]), sp(&[3, 1]), sp(&[4, 2]), sp(&[3, 2, 1]), sp(&[4, 3, 1]), sp(&[5, 3, 1])] {
            for kind in [AsmKind::OddBPrime, AsmKind::EvenB] {
                let alpha = Alphabet::for_kind(kind);
                let asms = enumerate(kind, &lam, &l).unwrap();
                let tabs = enumerate_unprimed(&lam, alpha, &l).unwrap();
                assert_eq!(asms.len(), tabs.len(), "{lam} {kind}");
                assert_eq!(count_tableaux(&lam, alpha, false).unwrap() as usize, tabs.len());
                let mut from_priming = BTreeSet::new();
                for a in &asms {
                    let t = ShiftedTableau::from_asm(a);
                    t.validate_unprimed(alpha).unwrap();
                    assert_eq!(&t.to_asm(kind).unwrap(), a);
                    let ps = t.primings(a);
                    assert_eq!(ps.len(), 1 << a.neg_count());
                    from_priming.extend(ps);
                }
                for t in &tabs {
                    assert_eq!(&ShiftedTableau::from_asm(&t.to_asm(kind).unwrap()), t);
                }
                let direct: BTreeSet<_> = enumerate_primed(&lam, alpha, &l).unwrap().into_iter().collect();
                assert_eq!(direct, from_priming, "{lam} {kind}");
                assert_eq!(count_tableaux(&lam, alpha, true).unwrap() as usize, direct.len());
            }
        }
    }

    #[test]
    fn dp_sum_matches_enumeration() {
        for lam in [sp(&[3, 1]), sp(&[3, 2, 1]), sp(&[4, 2, 1])] {
            for scheme in [TableauScheme::Odd, TableauScheme::Even] {
                let all = enumerate_primed(&lam, scheme.alphabet(), &Limits::default()).unwrap();
                let s: LaurentPoly = all.iter().map(|p| weight(p, scheme).unwrap()).sum();
                assert_eq!(primed_weight_sum(&lam, scheme).unwrap(), s);
            }
        }
    }

    #[test]
    fn json_shape() {
        let t = tab("1 0' / -1");
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            r#"{"lambda":[2,1],"rows":[[{"l":1,"bar":false,"prime":false},{"l":0,"bar":false,"prime":true}],[{"l":1,"bar":true,"prime":false}]]}"#
        );
        let back: ShiftedTableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
