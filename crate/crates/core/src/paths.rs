//! Lattice paths for primed shifted tableaux and the determinant evaluation
//! of their weighted count.
//!
//! Grid heights are numbered top to bottom: `1..=n` for the letters `1..n`,
//! `n + 1` for `0`, `2n + 2 - k` for `k̄`, and `2n + 2` for the bottom row
//! `0̄`. Path `k` starts on a spur at column `k - n` of the `0` level and
//! enters the grid at column 1 by a curved edge.

use std::fmt::Write as _;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::asm::StrictPartition;
use crate::error::{Error, Result};
use crate::laurent::var::{q, x, y, z0};
use crate::laurent::{determinant, GaussianRational, LaurentPoly, Monomial, RationalSeriesSpec, VarId};
use crate::tableaux::{primed_weight_sum, ShiftedTableau, TabEntry, TableauScheme};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridPoint {
    pub col: i32,
    pub height: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Curve,
    Horizontal,
    Vertical,
    Diagonal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub kind: EdgeKind,
    pub from: GridPoint,
    pub to: GridPoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePath {
    /// Letter `k` of the diagonal entry (`k` or `k̄`) fixing the start point.
    pub start: u8,
    pub edges: Vec<Edge>,
}

impl LatticePath {
    /// Every lattice point on the path, in order.
    pub fn points(&self) -> Vec<GridPoint> {
        let mut out = Vec::with_capacity(self.edges.len() + 1);
        if let Some(e) = self.edges.first() {
            out.push(e.from);
        }
        out.extend(self.edges.iter().map(|e| e.to));
        out
    }

    pub fn end(&self) -> Option<GridPoint> {
        self.edges.last().map(|e| e.to)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePathConfig {
    pub n: usize,
    pub paths: Vec<LatticePath>,
}

/// Height of an entry's letter.
pub fn height(e: TabEntry, n: usize) -> u32 {
    let n = n as u32;
    let k = u32::from(e.letter);
    if e.letter == 0 {
        n + 1
    } else if e.bar {
        2 * n + 2 - k
    } else {
        k
    }
}

pub fn bottom(n: usize) -> u32 {
    2 * n as u32 + 2
}

fn path_for_row(row: &[TabEntry], n: usize) -> Result<LatticePath> {
    let first = *row.first().ok_or_else(|| Error::InvalidTableau("empty row".into()))?;
    if first.letter == 0 || first.prime {
        return Err(Error::InvalidTableau(format!("diagonal entry {first} has no start point")));
    }
    let start = GridPoint { col: i32::from(first.letter) - n as i32, height: n as u32 + 1 };
    let mut cur = GridPoint { col: 1, height: height(first, n) };
    let mut edges = vec![Edge { kind: EdgeKind::Curve, from: start, to: cur }];
    let descend = |edges: &mut Vec<Edge>, cur: &mut GridPoint, to: u32| -> Result<()> {
        if to < cur.height {
            return Err(Error::InvalidTableau(format!("path would rise at column {}", cur.col)));
        }
        while cur.height < to {
            let next = GridPoint { col: cur.col, height: cur.height + 1 };
            edges.push(Edge { kind: EdgeKind::Vertical, from: *cur, to: next });
            *cur = next;
        }
        Ok(())
    };
    for &e in &row[1..] {
        let h = height(e, n);
        let (kind, pre) = if e.prime { (EdgeKind::Diagonal, h - 1) } else { (EdgeKind::Horizontal, h) };
        descend(&mut edges, &mut cur, pre)?;
        let next = GridPoint { col: cur.col + 1, height: h };
        edges.push(Edge { kind, from: cur, to: next });
        cur = next;
    }
    descend(&mut edges, &mut cur, bottom(n))?;
    Ok(LatticePath { start: first.letter, edges })
}

impl LatticePathConfig {
    /// Paths for arbitrary filled rows, with no tableau conditions checked,
    /// so that non-standard fillings can be drawn. `n` is the number of rows
    /// of the alphabet's unbarred letters.
    pub fn from_rows(n: usize, rows: &[Vec<TabEntry>]) -> Result<Self> {
        let paths = rows.iter().map(|r| path_for_row(r, n)).collect::<Result<_>>()?;
        Ok(LatticePathConfig { n, paths })
    }

    /// True iff no two paths share a lattice point.
    pub fn is_non_intersecting(&self) -> bool {
        let mut seen: FxHashSet<GridPoint> = FxHashSet::default();
        for p in &self.paths {
            let mine: FxHashSet<GridPoint> = p.points().into_iter().collect();
            if mine.iter().any(|pt| seen.contains(pt)) {
                return false;
            }
            seen.extend(mine);
        }
        true
    }

    /// Points shared by two or more paths.
    pub fn intersections(&self) -> Vec<GridPoint> {
        let mut count: rustc_hash::FxHashMap<GridPoint, usize> = Default::default();
        for p in &self.paths {
            let mine: FxHashSet<GridPoint> = p.points().into_iter().collect();
            for pt in mine {
                *count.entry(pt).or_default() += 1;
            }
        }
        let mut out: Vec<GridPoint> = count.into_iter().filter(|&(_, c)| c > 1).map(|(p, _)| p).collect();
        out.sort();
        out
    }

    /// All edges, sorted, forgetting which path they belong to.
    pub fn edge_set(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self.paths.iter().flat_map(|p| p.edges.iter().copied()).collect();
        out.sort_by_key(|e| (e.from, e.to));
        out
    }

    /// Product of edge weights: curves `u_k` (unbarred) or 1 (barred),
    /// horizontal `x_i`, `z0`, `ȳ_i`, diagonal `y_i`, `z̄0`, `x̄_i`,
    /// vertical 1.
    pub fn weight(&self) -> LaurentPoly {
        let n = self.n as u32;
        let mut pairs: Vec<(VarId, i32)> = Vec::new();
        for p in &self.paths {
            for e in &p.edges {
                let h = e.to.height;
                match e.kind {
                    EdgeKind::Vertical => {}
                    EdgeKind::Curve => {
                        if h <= n {
                            pairs.extend(u_pairs(h as usize, self.n));
                        }
                    }
                    EdgeKind::Horizontal | EdgeKind::Diagonal => {
                        let diag = e.kind == EdgeKind::Diagonal;
                        let pair = if h <= n {
                            if diag { (y(h as usize), 1) } else { (x(h as usize), 1) }
                        } else if h == n + 1 {
                            (z0(), if diag { -1 } else { 1 })
                        } else {
                            let k = (2 * n + 2 - h) as usize;
                            if diag { (x(k), -1) } else { (y(k), -1) }
                        };
                        pairs.push(pair);
                    }
                }
            }
        }
        LaurentPoly::term(Monomial::from_pairs(pairs), GaussianRational::one())
    }

    /// Standalone SVG drawing of the grid and the paths; points shared by two
    /// paths are circled.
    pub fn to_svg(&self) -> String {
        const STEP: f64 = 32.0;
        let n = self.n as i32;
        let max_col = self.paths.iter().filter_map(|p| p.end()).map(|e| e.col).max().unwrap_or(1).max(1);
        let min_col = 1 - n;
        let px = |c: i32| (f64::from(c - min_col) + 1.5) * STEP;
        let py = |h: u32| (f64::from(h) + 0.5) * STEP;
        let width = px(max_col) + STEP;
        let height_px = py(bottom(self.n)) + STEP;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height_px}" viewBox="0 0 {width} {height_px}">"#
        );
        for h in 1..=bottom(self.n) {
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-size="12" text-anchor="end">{}</text>"#,
                STEP * 0.8,
                py(h) + 4.0,
                height_label(h, self.n)
            );
            let cols: Vec<i32> = if h == bottom(self.n) {
                self.paths.iter().filter_map(|p| p.end()).map(|e| e.col).collect()
            } else {
                (1..=max_col).collect()
            };
            for c in cols {
                let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="2.5"/>"#, px(c), py(h));
            }
        }
        for k in 1..=n {
            let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="2.5"/>"#, px(k - n), py(self.n as u32 + 1));
        }
        for p in &self.paths {
            let mut d = String::new();
            for (i, e) in p.edges.iter().enumerate() {
                if i == 0 {
                    let _ = write!(d, "M {} {} ", px(e.from.col), py(e.from.height));
                }
                match e.kind {
                    EdgeKind::Curve => {
                        let _ = write!(d, "Q {} {} {} {} ", px(e.from.col), py(e.to.height), px(e.to.col), py(e.to.height));
                    }
                    _ => {
                        let _ = write!(d, "L {} {} ", px(e.to.col), py(e.to.height));
                    }
                }
            }
            let _ = writeln!(s, r#"<path d="{}" fill="none" stroke="black" stroke-width="2"/>"#, d.trim_end());
        }
        for p in self.intersections() {
            let _ = writeln!(
                s,
                r#"<circle class="meet" cx="{}" cy="{}" r="6" fill="none" stroke="red" stroke-width="2"/>"#,
                px(p.col),
                py(p.height)
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

fn height_label(h: u32, n: usize) -> String {
    let n = n as u32;
    if h <= n {
        h.to_string()
    } else if h == n + 1 {
        "0".into()
    } else {
        format!("-{}", 2 * n + 2 - h)
    }
}

/// The lattice paths of a primed shifted tableau: row `i` becomes path `i`.
pub fn to_paths(p: &ShiftedTableau) -> Result<LatticePathConfig> {
    LatticePathConfig::from_rows(p.n(), &p.rows)
}

fn u_pairs(k: usize, n: usize) -> Vec<(VarId, i32)> {
    let mut pairs = vec![(z0(), 1), (x(k), 1)];
    for i in k + 1..=n {
        pairs.extend([(x(i), 1), (y(i), -1)]);
    }
    pairs
}

/// Curve weight `u_k = z0 x_k prod_{i>k} x_i ȳ_i` into an unbarred start.
pub fn u_weight(k: usize, n: usize) -> LaurentPoly {
    LaurentPoly::term(Monomial::from_pairs(u_pairs(k, n)), GaussianRational::one())
}

/// Curve weight `v̄_k` into a barred start.
pub fn v_bar_weight(_k: usize) -> LaurentPoly {
    LaurentPoly::one()
}

fn lin(c: LaurentPoly, qv: VarId, sign: i64) -> LaurentPoly {
    LaurentPoly::one() + LaurentPoly::int(sign) * c * LaurentPoly::var(qv)
}

fn m(pairs: &[(VarId, i32)]) -> LaurentPoly {
    LaurentPoly::term(Monomial::from_pairs(pairs.iter().copied()), GaussianRational::one())
}

/// Generating function of single paths starting at unbarred `k`, in `q_l`.
pub fn gen_f(k: usize, l: usize, n: usize) -> RationalSeriesSpec {
    let qv = q(l);
    let mut s = RationalSeriesSpec::new(qv).shift(1).times(u_weight(k, n)).over(lin(m(&[(x(k), 1)]), qv, -1));
    for i in k + 1..=n {
        s = s.times(lin(m(&[(y(i), 1)]), qv, 1)).over(lin(m(&[(x(i), 1)]), qv, -1));
    }
    s = s.times(lin(m(&[(z0(), -1)]), qv, 1)).over(lin(m(&[(z0(), 1)]), qv, -1));
    for i in 1..=n {
        s = s.times(lin(m(&[(x(i), -1)]), qv, 1)).over(lin(m(&[(y(i), -1)]), qv, -1));
    }
    s
}

/// Generating function of single paths starting at barred `k̄`, in `q_l`.
pub fn gen_g(k: usize, l: usize) -> RationalSeriesSpec {
    let qv = q(l);
    let mut s = RationalSeriesSpec::new(qv).shift(1).times(v_bar_weight(k)).over(lin(m(&[(y(k), -1)]), qv, -1));
    for i in 1..k {
        s = s.times(lin(m(&[(x(i), -1)]), qv, 1)).over(lin(m(&[(y(i), -1)]), qv, -1));
    }
    s
}

/// `[q_l^d] h_{k,l}` with `h = f + (-1)^{n-k} g`.
pub fn gen_h_coeff(k: usize, l: usize, n: usize, d: u32) -> Result<LaurentPoly> {
    let f = gen_f(k, l, n).coeff(d as i32)?;
    let g = gen_g(k, l).coeff(d as i32)?;
    Ok(if (n - k).is_multiple_of(2) { f + g } else { f - g })
}

/// `n x n` matrix with entries `[q_l^{lambda_l}] h_{k,l}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenFunMatrix {
    pub lambda: StrictPartition,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl GenFunMatrix {
    pub fn new(lambda: &StrictPartition) -> Result<Self> {
        let n = lambda.len();
        let entries = (1..=n)
            .map(|k| (1..=n).map(|l| gen_h_coeff(k, l, n, lambda.parts()[l - 1])).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(GenFunMatrix { lambda: lambda.clone(), entries })
    }

    pub fn determinant(&self) -> LaurentPoly {
        determinant(&self.entries)
    }
}

/// `[q^lambda] det(h_{k,l}(q_l))` computed without moving the coefficient
/// extraction inside: each `h_{k,l}` is truncated to a polynomial in `q_l`.
pub fn det_then_extract(lambda: &StrictPartition) -> Result<LaurentPoly> {
    let n = lambda.len();
    let mut mat = Vec::with_capacity(n);
    for k in 1..=n {
        let mut row = Vec::with_capacity(n);
        for l in 1..=n {
            let top = lambda.parts()[l - 1];
            let mut h = LaurentPoly::zero();
            for d in 1..=top {
                let c = gen_h_coeff(k, l, n, d)?;
                h = h + c * LaurentPoly::var_pow(q(l), d as i32);
            }
            row.push(h);
        }
        mat.push(row);
    }
    let det = determinant(&mat);
    let mono = Monomial::from_pairs((1..=n).map(|l| (q(l), lambda.parts()[l - 1] as i32)));
    let mut acc = LaurentPoly::zero();
    for (mm, c) in det.terms() {
        let (qpart, rest): (Vec<_>, Vec<_>) = mm.exponents().iter().copied().partition(|(v, _)| v.family == q(1).family);
        if Monomial::from_pairs(qpart) == mono {
            acc = acc + LaurentPoly::term(Monomial::from_pairs(rest), c.clone());
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdetReport {
    pub lambda: StrictPartition,
    pub tableau_sum: LaurentPoly,
    pub determinant: LaurentPoly,
    pub equal: bool,
}

/// Compares the weighted count of primed tableaux with the determinant.
pub fn verify_pdet(lambda: &StrictPartition) -> Result<PdetReport> {
    let tableau_sum = primed_weight_sum(lambda, TableauScheme::Odd)?;
    let determinant = GenFunMatrix::new(lambda)?.determinant();
    let equal = tableau_sum == determinant;
    Ok(PdetReport { lambda: lambda.clone(), tableau_sum, determinant, equal })
}

/// Tableaux drawn in the lattice path figures.
pub mod fixtures {
    use super::*;

    fn rows(text: &str) -> Vec<Vec<TabEntry>> {
        text.split('/')
            .map(|r| r.split_whitespace().map(|e| e.parse().expect("fixture entry")).collect())
            .collect()
    }

    fn tableau(text: &str) -> ShiftedTableau {
        let r = rows(text);
        let lambda = StrictPartition::new(r.iter().map(|x| x.len() as u32).collect()).expect("strict shape");
        ShiftedTableau::new(lambda, r).expect("fixture shape")
    }

    /// Primed tableau of shape (8,6,3) with non-intersecting paths.
    pub fn first_example() -> ShiftedTableau {
        tableau("1 1 2' 2 0 0 0 -3' / 3 0' 0 -3 -3 -2' / -2 -2 -1'")
    }

    /// The same tableau with its leftmost `3̄` primed.
    pub fn second_example() -> ShiftedTableau {
        tableau("1 1 2' 2 0 0 0 -3' / 3 0' 0 -3' -3 -2' / -2 -2 -1'")
    }

    /// The leftmost `3̄` of [`first_example`] replaced by `0`: not a valid
    /// tableau, and its paths meet.
    pub fn intersecting_example() -> Vec<Vec<TabEntry>> {
        rows("1 1 2' 2 0 0 0 -3' / 3 0' 0 0 -3 -2' / -2 -2 -1'")
    }

    /// The partner filling with the same edges and swapped end points.
    pub fn intersecting_partner() -> Vec<Vec<TabEntry>> {
        rows("1 1 2' 2 -3 -2' / 3 0' 0 0 0 0 0 -3' / -2 -2 -1'")
    }
}
