//! Independent checks of the determinant evaluations behind the tableau
//! generating function, and of the symmetric function identities they use.
//!
//! Every check returns a [`LemmaReport`]. Symbolic mode compares exact
//! Laurent polynomials; random mode evaluates both sides at seeded random
//! rational points, one ChaCha stream per trial.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::asm::StrictPartition;
use crate::error::{Error, Result};
use crate::laurent::var::{a, b, c, q, x, y, z0};
use crate::laurent::{determinant, determinant_numeric, GaussianRational, LaurentPoly, Point, RationalSeriesSpec, VarId};
use crate::paths::{gen_f, gen_g};
use crate::symfunc::{class_a, class_c, complete, elementary_all, schur, Partition};
use crate::tableaux::{primed_weight_sum, TableauScheme};

/// Largest `n` accepted by symbolic determinant checks.
pub const SYMBOLIC_DET_MAX: usize = 3;
/// Largest `n` accepted by the symbolic e-determinant check.
pub const SYMBOLIC_EDET_MAX: usize = 4;
/// Largest `n` accepted by random-point checks.
pub const RANDOM_MAX: usize = 8;
/// Largest number of extra variables in the `h_r` difference check.
pub const HR_VARS_MAX: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckMode {
    Symbolic,
    RandomEval { count: usize, seed: u64 },
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckMode::Symbolic => f.write_str("symbolic"),
            CheckMode::RandomEval { .. } => f.write_str("random"),
        }
    }
}

/// Which identity to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    /// `det(h_{k,l}(q_l)) = Z K Q`.
    Deth,
    /// `det(g(q_l) - g(-1/q_l))` as a product.
    Detm,
    /// `h_r(p,-1/p,y) - h_r(q,-1/q,y) = (p-q)(1+1/(pq)) h_{r-1}(p,-1/p,q,-1/q,y)`.
    Hr { r: u32 },
    /// `det(e_{k-l}(c) + (-1)^{l-1} e_{k+l}(c)) = prod_{i<j} (1 + c_i c_j)`.
    Edet,
    /// The e-determinant against its Schur expansions over the two offset classes.
    EdetClasses,
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lemma::Deth => f.write_str("deth"),
            Lemma::Detm => f.write_str("detm"),
            Lemma::Hr { r } => write!(f, "hr:{r}"),
            Lemma::Edet => f.write_str("edet"),
            Lemma::EdetClasses => f.write_str("edet-classes"),
        }
    }
}

impl FromStr for Lemma {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "deth" => return Ok(Lemma::Deth),
            "detm" => return Ok(Lemma::Detm),
            "edet" => return Ok(Lemma::Edet),
            "edet-classes" | "edet_classes" => return Ok(Lemma::EdetClasses),
            _ => {}
        }
        if let Some(r) = s.strip_prefix("hr:").or_else(|| s.strip_prefix("hr")) {
            if let Ok(r) = r.trim().parse() {
                return Ok(Lemma::Hr { r });
            }
        }
        Err(Error::Unsupported(format!("unknown lemma '{s}' (deth, detm, hr:R, edet, edet-classes)")))
    }
}

/// For [`Lemma::Hr`], `n` is the number of extra `y` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheckConfig {
    pub n: usize,
    pub mode: CheckMode,
    pub lemma: Lemma,
}

impl LemmaCheckConfig {
    pub fn symbolic(lemma: Lemma, n: usize) -> Self {
        LemmaCheckConfig { n, mode: CheckMode::Symbolic, lemma }
    }

    pub fn random(lemma: Lemma, n: usize, count: usize, seed: u64) -> Self {
        LemmaCheckConfig { n, mode: CheckMode::RandomEval { count, seed }, lemma }
    }

    pub fn validate(&self) -> Result<()> {
        let too_big = |what: &str, max: usize| {
            Err(Error::SizeLimitExceeded(format!("{what} check at n = {} (limit {max})", self.n)))
        };
        match (self.lemma, self.mode) {
            (Lemma::Hr { .. }, _) if self.n > HR_VARS_MAX => too_big("h_r difference", HR_VARS_MAX),
            (Lemma::Hr { .. }, _) => Ok(()),
            (Lemma::Deth | Lemma::Detm, CheckMode::Symbolic) if self.n > SYMBOLIC_DET_MAX => {
                too_big("symbolic determinant", SYMBOLIC_DET_MAX)
            }
            (Lemma::Edet, CheckMode::Symbolic) if self.n > SYMBOLIC_EDET_MAX => {
                too_big("symbolic e-determinant", SYMBOLIC_EDET_MAX)
            }
            (Lemma::EdetClasses, CheckMode::Symbolic) if self.n > SYMBOLIC_DET_MAX => {
                too_big("class expansion", SYMBOLIC_DET_MAX)
            }
            (Lemma::EdetClasses, CheckMode::RandomEval { .. }) => {
                Err(Error::Unsupported("the class expansion check is symbolic only".into()))
            }
            (_, CheckMode::RandomEval { .. }) if self.n > RANDOM_MAX => too_big("random-point", RANDOM_MAX),
            _ if self.n == 0 => Err(Error::Unsupported("determinant checks need n >= 1".into())),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub n: usize,
    pub mode: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub trials: usize,
    pub failures: Vec<String>,
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} {}", self.lemma, self.n, self.mode)?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed} points={}", self.trials)?;
        }
        if self.ok {
            f.write_str(": ok")
        } else {
            write!(f, ": FAILED ({} failures)", self.failures.len())
        }
    }
}

/// Runs the check described by `cfg`.
pub fn check(cfg: &LemmaCheckConfig) -> Result<LemmaReport> {
    cfg.validate()?;
    match cfg.lemma {
        Lemma::Deth => check_deth(cfg),
        Lemma::Detm => check_detm(cfg),
        Lemma::Hr { r } => check_hr(r, cfg.n, cfg.mode),
        Lemma::Edet => check_edet(cfg),
        Lemma::EdetClasses => check_edet_classes(cfg.n),
    }
}

fn symbolic_report(cfg: &LemmaCheckConfig, diff: &LaurentPoly) -> LemmaReport {
    let failures = if diff.is_zero() { Vec::new() } else { vec![format!("lhs - rhs has {} terms", diff.len())] };
    LemmaReport {
        lemma: cfg.lemma.to_string(),
        n: cfg.n,
        mode: cfg.mode.to_string(),
        ok: failures.is_empty(),
        seed: None,
        trials: 1,
        failures,
    }
}

// ---------------------------------------------------------------------------
// Random points

fn random_value(rng: &mut ChaCha8Rng) -> GaussianRational {
    let num = rng.gen_range(2..=97i64);
    let den = rng.gen_range(2..=97i64);
    let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
    GaussianRational::from_ratio(sign * num, den)
}

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// A random point on `vars`. Deterministic in `(seed, trial)`.
pub fn random_point(vars: &[VarId], seed: u64, trial: usize) -> Point {
    let mut rng = trial_rng(seed, trial);
    vars.iter().map(|&v| (v, random_value(&mut rng))).collect()
}

fn format_point(p: &Point) -> String {
    p.iter().map(|(v, c)| format!("{v}={c}")).collect::<Vec<_>>().join(", ")
}

/// Outcome of a single random trial.
enum Trial {
    Equal,
    Differ(String),
}

fn random_report<F>(cfg: &LemmaCheckConfig, count: usize, seed: u64, trial: F) -> LemmaReport
where
    F: Fn(usize) -> Trial + Sync,
{
    let mut failures: Vec<(usize, String)> = (0..count)
        .into_par_iter()
        .filter_map(|t| match trial(t) {
            Trial::Equal => None,
            Trial::Differ(msg) => Some((t, msg)),
        })
        .collect();
    failures.sort_by_key(|f| f.0);
    LemmaReport {
        lemma: cfg.lemma.to_string(),
        n: cfg.n,
        mode: cfg.mode.to_string(),
        ok: failures.is_empty(),
        seed: Some(seed),
        trials: count,
        failures: failures.into_iter().map(|(t, m)| format!("trial {t}: {m}")).collect(),
    }
}

/// Draws points until `accept` holds; gives up after a fixed number of redraws.
fn accepted_point(vars: &[VarId], seed: u64, trial: usize, accept: impl Fn(&Point) -> bool) -> Option<Point> {
    const REDRAWS: usize = 64;
    let mut rng = trial_rng(seed, trial);
    (0..REDRAWS).find_map(|_| {
        let p: Point = vars.iter().map(|&v| (v, random_value(&mut rng))).collect();
        accept(&p).then_some(p)
    })
}

fn ev(p: &LaurentPoly, point: &Point) -> GaussianRational {
    p.eval(point).expect("random points are nonzero")
}

fn eval_spec(spec: &RationalSeriesSpec, point: &Point) -> Option<GaussianRational> {
    let mut num = point[&spec.var].pow(spec.leading_power);
    for f in &spec.numerator {
        num = &num * &ev(f, point);
    }
    let mut den = GaussianRational::one();
    for f in &spec.denominator {
        den = &den * &ev(f, point);
    }
    (!den.is_zero()).then(|| &num / &den)
}

// ---------------------------------------------------------------------------
// det(h) = Z K Q

fn one_plus(p: LaurentPoly) -> LaurentPoly {
    LaurentPoly::one() + p
}

fn one_minus(p: LaurentPoly) -> LaurentPoly {
    LaurentPoly::one() - p
}

fn v(id: VarId) -> LaurentPoly {
    LaurentPoly::var(id)
}

fn inv(id: VarId) -> LaurentPoly {
    LaurentPoly::var_pow(id, -1)
}

/// Factors of `D_l = (1 - q_l z0) prod_i (1 - q_l x_i)(1 - q_l ȳ_i)`.
pub fn column_denominator_factors(l: usize, n: usize) -> Vec<LaurentPoly> {
    let ql = v(q(l));
    let mut out = vec![one_minus(&ql * &v(z0()))];
    for i in 1..=n {
        out.push(one_minus(&ql * &v(x(i))));
        out.push(one_minus(&ql * &inv(y(i))));
    }
    out
}

/// Factors of `Z = prod_i x_i^{-(n-i)} (1 + z0 x_i) prod_{i<j} (1 + x_i x_j)(1 + x_i ȳ_j)`.
pub fn z_factors(n: usize) -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    for i in 1..=n {
        if i < n {
            out.push(LaurentPoly::var_pow(x(i), -((n - i) as i32)));
        }
        out.push(one_plus(&v(z0()) * &v(x(i))));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(one_plus(&v(x(i)) * &v(x(j))));
            out.push(one_plus(&v(x(i)) * &inv(y(j))));
        }
    }
    out
}

/// Factors of `Q = prod_i q_i prod_{i<j} (q_i - q_j) prod_{i<=j} (1 + q_i q_j)`.
pub fn q_factors(n: usize) -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(v(q(i)));
        for j in i..=n {
            out.push(one_plus(&v(q(i)) * &v(q(j))));
            if j > i {
                out.push(&v(q(i)) - &v(q(j)));
            }
        }
    }
    out
}

/// `spec * prod(extra)` as a polynomial, cancelling each denominator of `spec`
/// against an equal factor of `extra`. `None` if some denominator is left over.
fn clear_denominators(spec: &RationalSeriesSpec, extra: &[LaurentPoly]) -> Option<LaurentPoly> {
    let mut rest: Vec<&LaurentPoly> = extra.iter().collect();
    for d in &spec.denominator {
        let pos = rest.iter().position(|f| *f == d)?;
        rest.swap_remove(pos);
    }
    let mut out = LaurentPoly::var_pow(spec.var, spec.leading_power);
    for f in spec.numerator.iter().chain(rest) {
        out = &out * f;
    }
    Some(out)
}

fn h_sign(k: usize, n: usize) -> i64 {
    if (n - k).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `D_l h_{k,l}` as a polynomial in `q_l`.
pub fn cleared_h(k: usize, l: usize, n: usize) -> LaurentPoly {
    let d = column_denominator_factors(l, n);
    let f = clear_denominators(&gen_f(k, l, n), &d).expect("D_l contains every denominator of f");
    let g = clear_denominators(&gen_g(k, l), &d).expect("D_l contains every denominator of g");
    f + LaurentPoly::int(h_sign(k, n)) * g
}

/// `[D_l h_{k,l}]` for `k, l = 1..=n`.
pub fn cleared_h_matrix(n: usize) -> Vec<Vec<LaurentPoly>> {
    (1..=n).map(|k| (1..=n).map(|l| cleared_h(k, l, n)).collect()).collect()
}

/// `h_{k,l}` at a point, from its closed rational form.
pub fn h_value(k: usize, l: usize, n: usize, point: &Point) -> Option<GaussianRational> {
    let f = eval_spec(&gen_f(k, l, n), point)?;
    let g = eval_spec(&gen_g(k, l), point)?;
    Some(if h_sign(k, n) > 0 { &f + &g } else { &f - &g })
}

fn deth_vars(n: usize) -> Vec<VarId> {
    let mut vars = vec![z0()];
    vars.extend((1..=n).flat_map(|i| [x(i), y(i), q(i)]));
    vars
}

fn product_value(factors: &[LaurentPoly], point: &Point) -> GaussianRational {
    factors.iter().fold(GaussianRational::one(), |acc, f| &acc * &ev(f, point))
}

fn deth_trial(n: usize, point: &Point) -> Trial {
    let mut m = Vec::with_capacity(n);
    for k in 1..=n {
        let mut row = Vec::with_capacity(n);
        for l in 1..=n {
            match h_value(k, l, n, point) {
                Some(h) => row.push(h),
                None => return Trial::Differ(format!("pole at {}", format_point(point))),
            }
        }
        m.push(row);
    }
    let lhs = determinant_numeric(&m);
    let d: Vec<LaurentPoly> = (1..=n).flat_map(|l| column_denominator_factors(l, n)).collect();
    let rhs = &(&product_value(&z_factors(n), point) * &product_value(&q_factors(n), point))
        / &product_value(&d, point);
    if lhs == rhs {
        Trial::Equal
    } else {
        Trial::Differ(format!("det(h) = {lhs}, ZKQ = {rhs} at {}", format_point(point)))
    }
}

fn no_pole(n: usize) -> impl Fn(&Point) -> bool {
    move |p| {
        (1..=n).all(|l| {
            column_denominator_factors(l, n).iter().all(|f| !ev(f, p).is_zero())
        })
    }
}

fn check_deth(cfg: &LemmaCheckConfig) -> Result<LemmaReport> {
    let n = cfg.n;
    match cfg.mode {
        CheckMode::Symbolic => {
            let lhs = determinant(&cleared_h_matrix(n));
            let rhs = LaurentPoly::product(z_factors(n).iter().chain(q_factors(n).iter()));
            Ok(symbolic_report(cfg, &(lhs - rhs)))
        }
        CheckMode::RandomEval { count, seed } => {
            let vars = deth_vars(n);
            Ok(random_report(cfg, count, seed, |t| match accepted_point(&vars, seed, t, no_pole(n)) {
                Some(p) => deth_trial(n, &p),
                None => Trial::Differ("no admissible point".into()),
            }))
        }
    }
}

/// `[q^lambda]` of `Z K Q`, expanding each `1/D_l` as a series in `q_l`.
pub fn zkq_coefficient(lambda: &StrictPartition) -> Result<LaurentPoly> {
    let n = lambda.len();
    let parts = lambda.parts();
    let top = parts.iter().copied().max().unwrap_or(0) as usize;
    let inverse_d: Vec<Vec<LaurentPoly>> = (1..=n)
        .map(|l| {
            let spec = column_denominator_factors(l, n).into_iter().fold(RationalSeriesSpec::new(q(l)), |s, f| s.over(f));
            spec.expand(top)
        })
        .collect::<std::result::Result<_, _>>()?;
    let zq = LaurentPoly::product(q_factors(n).iter());
    let mut acc = LaurentPoly::zero();
    for (mono, coeff) in zq.terms() {
        let mut term = LaurentPoly::constant(coeff.clone());
        for l in 1..=n {
            let need = parts[l - 1] as i32 - mono.exponent(q(l));
            if need < 0 {
                term = LaurentPoly::zero();
                break;
            }
            term = &term * &inverse_d[l - 1][need as usize];
        }
        acc = acc + term;
    }
    Ok(LaurentPoly::product(z_factors(n).iter()) * acc)
}

/// Compares [`zkq_coefficient`] with the primed tableau sum.
pub fn zkq_matches_tableaux(lambda: &StrictPartition) -> Result<bool> {
    Ok(zkq_coefficient(lambda)? == primed_weight_sum(lambda, TableauScheme::Odd)?)
}

// ---------------------------------------------------------------------------
// det(m) product formula

/// `g(q) = q^{-n} prod_{i<=n+1} (1 + c_i q) prod_{i<k} (1 - b_i q) prod_{i>k} (1 + a_i q)`,
/// with `q` given as a polynomial.
fn g_tilde(k: usize, n: usize, qv: &LaurentPoly, q_inv_n: &LaurentPoly) -> LaurentPoly {
    let mut out = q_inv_n.clone();
    for i in 1..=n + 1 {
        out = out * one_plus(&v(c(i)) * qv);
    }
    for i in 1..k {
        out = out * one_minus(&v(b(i)) * qv);
    }
    for i in k + 1..=n {
        out = out * one_plus(&v(a(i)) * qv);
    }
    out
}

/// `m_{k,l} = g(q_l) - g(-1/q_l)`.
pub fn m_entry(k: usize, l: usize, n: usize) -> LaurentPoly {
    let ql = v(q(l));
    let neg_inv = -inv(q(l));
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    // (-1/q)^{-n} = (-1)^n q^n
    let plus = g_tilde(k, n, &ql, &LaurentPoly::var_pow(q(l), -(n as i32)));
    let minus = g_tilde(k, n, &neg_inv, &(LaurentPoly::int(sign) * LaurentPoly::var_pow(q(l), n as i32)));
    plus - minus
}

fn g_tilde_value(k: usize, n: usize, t: &GaussianRational, p: &Point) -> GaussianRational {
    let one = GaussianRational::one();
    let mut out = t.pow(-(n as i32));
    for i in 1..=n + 1 {
        out = &out * &(&one + &(&p[&c(i)] * t));
    }
    for i in 1..k {
        out = &out * &(&one - &(&p[&b(i)] * t));
    }
    for i in k + 1..=n {
        out = &out * &(&one + &(&p[&a(i)] * t));
    }
    out
}

/// `[m_{k,l}]` evaluated at a point.
pub fn m_values(n: usize, p: &Point) -> Vec<Vec<GaussianRational>> {
    (1..=n)
        .map(|k| {
            (1..=n)
                .map(|l| {
                    let t = &p[&q(l)];
                    &g_tilde_value(k, n, t, p) - &g_tilde_value(k, n, &-t.recip(), p)
                })
                .collect()
        })
        .collect()
}

/// Factors of `prod_{i<j<=n+1} (1 + c_i c_j) prod_{i<j} (b_i + a_j) prod_i q_i^{-n} (1 + q_i^2) prod_{i<j} (q_i - q_j)(1 + q_i q_j)`.
pub fn detm_factors(n: usize) -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            out.push(one_plus(&v(c(i)) * &v(c(j))));
        }
    }
    for i in 1..=n {
        out.push(LaurentPoly::var_pow(q(i), -(n as i32)));
        out.push(one_plus(LaurentPoly::var_pow(q(i), 2)));
        for j in i + 1..=n {
            out.push(&v(b(i)) + &v(a(j)));
            out.push(&v(q(i)) - &v(q(j)));
            out.push(one_plus(&v(q(i)) * &v(q(j))));
        }
    }
    out
}

fn detm_vars(n: usize) -> Vec<VarId> {
    let mut vars: Vec<VarId> = (1..=n + 1).map(c).collect();
    vars.extend((1..=n).flat_map(|i| [a(i), b(i), q(i)]));
    vars
}

fn check_detm(cfg: &LemmaCheckConfig) -> Result<LemmaReport> {
    let n = cfg.n;
    match cfg.mode {
        CheckMode::Symbolic => {
            let m: Vec<Vec<LaurentPoly>> = (1..=n).map(|k| (1..=n).map(|l| m_entry(k, l, n)).collect()).collect();
            let lhs = determinant(&m);
            let rhs = LaurentPoly::product(detm_factors(n).iter());
            Ok(symbolic_report(cfg, &(lhs - rhs)))
        }
        CheckMode::RandomEval { count, seed } => {
            let vars = detm_vars(n);
            let rhs = detm_factors(n);
            Ok(random_report(cfg, count, seed, |t| {
                let p = random_point(&vars, seed, t);
                let lhs = determinant_numeric(&m_values(n, &p));
                let rhs = product_value(&rhs, &p);
                if lhs == rhs {
                    Trial::Equal
                } else {
                    Trial::Differ(format!("det(m) = {lhs}, product = {rhs} at {}", format_point(&p)))
                }
            }))
        }
    }
}

// ---------------------------------------------------------------------------
// h_r difference

/// Both sides of the `h_r` difference identity over the given `p`, `q` and extra values.
pub fn hr_sides(r: u32, p: &LaurentPoly, qq: &LaurentPoly, ys: &[LaurentPoly]) -> (LaurentPoly, LaurentPoly) {
    let neg_inv = |t: &LaurentPoly| -> LaurentPoly {
        let (m, c) = t.as_monomial().expect("monomial argument");
        -LaurentPoly::term(m.inv(), c.recip())
    };
    let with = |front: Vec<LaurentPoly>| -> Vec<LaurentPoly> { front.into_iter().chain(ys.iter().cloned()).collect() };
    let lhs = complete(r as i64, &with(vec![p.clone(), neg_inv(p)]))
        - complete(r as i64, &with(vec![qq.clone(), neg_inv(qq)]));
    let pq_inv = {
        let pq = p * qq;
        -neg_inv(&pq)
    };
    let rhs = (p - qq)
        * one_plus(pq_inv)
        * complete(r as i64 - 1, &with(vec![p.clone(), neg_inv(p), qq.clone(), neg_inv(qq)]));
    (lhs, rhs)
}

fn check_hr(r: u32, nvars: usize, mode: CheckMode) -> Result<LemmaReport> {
    let cfg = LemmaCheckConfig { n: nvars, mode, lemma: Lemma::Hr { r } };
    let mut vars = vec![q(1), q(2)];
    vars.extend((1..=nvars).map(y));
    match mode {
        CheckMode::Symbolic => {
            let ys: Vec<LaurentPoly> = vars[2..].iter().map(|&u| v(u)).collect();
            let (lhs, rhs) = hr_sides(r, &v(q(1)), &v(q(2)), &ys);
            Ok(symbolic_report(&cfg, &(lhs - rhs)))
        }
        CheckMode::RandomEval { count, seed } => Ok(random_report(&cfg, count, seed, |t| {
            let point = random_point(&vars, seed, t);
            let vals: Vec<LaurentPoly> = vars.iter().map(|u| LaurentPoly::constant(point[u].clone())).collect();
            let (lhs, rhs) = hr_sides(r, &vals[0], &vals[1], &vals[2..]);
            if lhs == rhs {
                Trial::Equal
            } else {
                Trial::Differ(format!("lhs = {lhs}, rhs = {rhs} at {}", format_point(&point)))
            }
        })),
    }
}

// ---------------------------------------------------------------------------
// e-determinant

/// `[e_{k-l}(c) + (-1)^{l-1} e_{k+l}(c)]` for `k, l = 1..=n` over the given values.
pub fn edet_matrix(n: usize, cs: &[LaurentPoly]) -> Vec<Vec<LaurentPoly>> {
    let e = elementary_all(cs);
    let ek = |k: i64| if k < 0 || k as usize >= e.len() { LaurentPoly::zero() } else { e[k as usize].clone() };
    (1..=n as i64)
        .map(|k| {
            (1..=n as i64)
                .map(|l| {
                    let sign = if l % 2 == 1 { 1 } else { -1 };
                    ek(k - l) + LaurentPoly::int(sign) * ek(k + l)
                })
                .collect()
        })
        .collect()
}

/// `prod_{i<j} (1 + c_i c_j)` over the given values.
pub fn edet_product(cs: &[LaurentPoly]) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            out = out * one_plus(&cs[i] * &cs[j]);
        }
    }
    out
}

fn c_values(n: usize) -> Vec<LaurentPoly> {
    (1..=n + 1).map(|i| v(c(i))).collect()
}

fn check_edet(cfg: &LemmaCheckConfig) -> Result<LemmaReport> {
    let n = cfg.n;
    match cfg.mode {
        CheckMode::Symbolic => {
            let cs = c_values(n);
            let lhs = determinant(&edet_matrix(n, &cs));
            Ok(symbolic_report(cfg, &(lhs - edet_product(&cs))))
        }
        CheckMode::RandomEval { count, seed } => {
            let vars: Vec<VarId> = (1..=n + 1).map(c).collect();
            Ok(random_report(cfg, count, seed, |t| {
                let point = random_point(&vars, seed, t);
                let cs: Vec<LaurentPoly> = vars.iter().map(|u| LaurentPoly::constant(point[u].clone())).collect();
                let m: Vec<Vec<GaussianRational>> = edet_matrix(n, &cs)
                    .iter()
                    .map(|row| row.iter().map(|e| e.constant_term()).collect())
                    .collect();
                let lhs = determinant_numeric(&m);
                let rhs = edet_product(&cs).constant_term();
                if lhs == rhs {
                    Trial::Equal
                } else {
                    Trial::Differ(format!("det = {lhs}, product = {rhs} at {}", format_point(&point)))
                }
            }))
        }
    }
}

/// `sum s_alpha(c)` over leg-heavy offset partitions with at most `n+1` rows.
pub fn class_a_expansion(n: usize) -> LaurentPoly {
    let cs = c_values(n);
    class_a((n * (n + 1)) as u32).iter().filter(|al| al.len() <= n + 1).map(|al| schur(al, &cs)).sum()
}

/// `sum s_{gamma'}(c)` over arm-heavy offset partitions with first part at most `n+1`.
pub fn class_c_expansion(n: usize) -> LaurentPoly {
    let cs = c_values(n);
    class_c((n * (n + 1)) as u32)
        .iter()
        .filter(|g| g.part(0) as usize <= n + 1)
        .map(|g: &Partition| schur(&g.conjugate(), &cs))
        .sum()
}

fn check_edet_classes(n: usize) -> Result<LemmaReport> {
    let cfg = LemmaCheckConfig::symbolic(Lemma::EdetClasses, n);
    let cs = c_values(n);
    let det = determinant(&edet_matrix(n, &cs));
    let mut failures = Vec::new();
    let by_a = class_a_expansion(n);
    if by_a != det {
        failures.push(format!("leg-heavy expansion differs in {} terms", (&by_a - &det).len()));
    }
    let by_c = class_c_expansion(n);
    if by_c != det {
        failures.push(format!("arm-heavy expansion differs in {} terms", (&by_c - &det).len()));
    }
    Ok(LemmaReport {
        lemma: cfg.lemma.to_string(),
        n,
        mode: cfg.mode.to_string(),
        ok: failures.is_empty(),
        seed: None,
        trials: 1,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::poly;

    #[test]
    fn deth_n1_by_hand() {
        // det = h_{1,1} = q(1+q^2)(1+z0 x)/((1-q z0)(1-q x)(1-q/y))
        let lhs = cleared_h(1, 1, 1);
        assert_eq!(lhs, poly("q1+q1^3") * poly("1+z0*x1"));
    }

    #[test]
    fn deth_symbolic_small() {
        for n in 1..=2 {
            let r = check(&LemmaCheckConfig::symbolic(Lemma::Deth, n)).unwrap();
            assert!(r.ok, "{r}");
        }
    }

    #[test]
    fn deth_random_n5() {
        let r = check(&LemmaCheckConfig::random(Lemma::Deth, 5, 20, 7)).unwrap();
        assert!(r.ok, "{r} {:?}", r.failures);
        assert_eq!(r.seed, Some(7));
    }

    #[test]
    fn cleared_h_has_bounded_degree() {
        let n = 2;
        for k in 1..=n {
            for l in 1..=n {
                let (lo, hi) = cleared_h(k, l, n).degree_range(q(l)).unwrap();
                assert!(lo >= 1 && hi <= 2 * n as i32 + 2, "k={k} l={l}: {lo}..{hi}");
            }
        }
    }

    /// `D_l h = u_k q^{n+1} (f(q) - f(-1/q))` with the symmetric numerator `f`.
    #[test]
    fn column_factorization() {
        use crate::paths::u_weight;
        let n = 2;
        for k in 1..=n {
            for l in 1..=n {
                let ql = v(q(l));
                let f_at = |t: &LaurentPoly, t_pow: LaurentPoly| {
                    let mut out = t_pow * one_plus(&inv(z0()) * t);
                    for i in 1..=n {
                        out = out * one_plus(&inv(x(i)) * t);
                    }
                    for i in 1..k {
                        out = out * one_minus(&v(x(i)) * t);
                    }
                    for i in k + 1..=n {
                        out = out * one_plus(&v(y(i)) * t);
                    }
                    out
                };
                let neg_inv = -inv(q(l));
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let plus = f_at(&ql, LaurentPoly::var_pow(q(l), -(n as i32)));
                let minus = f_at(&neg_inv, LaurentPoly::int(sign) * LaurentPoly::var_pow(q(l), n as i32));
                let expected = u_weight(k, n) * LaurentPoly::var_pow(q(l), n as i32 + 1) * (plus - minus);
                assert_eq!(cleared_h(k, l, n), expected, "k={k} l={l}");
            }
        }
    }

    fn vanishing_det(n: usize, point: &Point) -> GaussianRational {
        let m: Vec<Vec<GaussianRational>> =
            (1..=n).map(|k| (1..=n).map(|l| h_value(k, l, n, point).unwrap()).collect()).collect();
        determinant_numeric(&m)
    }

    #[test]
    fn det_vanishes_on_paired_columns() {
        let n = 3;
        let vars = deth_vars(n);
        for trial in 0..5 {
            let base = accepted_point(&vars, 11, trial, no_pole(n)).unwrap();
            let mut equal = base.clone();
            equal.insert(q(2), base[&q(1)].clone());
            if no_pole(n)(&equal) {
                assert!(vanishing_det(n, &equal).is_zero());
            }
            let mut reflected = base.clone();
            reflected.insert(q(3), -base[&q(1)].recip());
            if no_pole(n)(&reflected) {
                assert!(vanishing_det(n, &reflected).is_zero());
            }
        }
    }

    #[test]
    fn zkq_coefficient_is_the_tableau_sum() {
        for parts in [vec![1], vec![2], vec![3], vec![2, 1], vec![3, 1], vec![3, 2], vec![4, 1]] {
            let lambda = StrictPartition::new(parts.clone()).unwrap();
            assert!(zkq_matches_tableaux(&lambda).unwrap(), "{parts:?}");
        }
    }

    #[test]
    fn detm_numeric_entries_match_symbolic() {
        let n = 3;
        let p = random_point(&detm_vars(n), 4, 0);
        let vals = m_values(n, &p);
        for k in 1..=n {
            for l in 1..=n {
                assert_eq!(ev(&m_entry(k, l, n), &p), vals[k - 1][l - 1]);
            }
        }
    }

    #[test]
    fn detm_n1_by_hand() {
        assert_eq!(m_entry(1, 1, 1), poly("1+c1*c2") * poly("q1^-1+q1"));
    }

    #[test]
    fn detm_symbolic_and_random() {
        for n in 1..=2 {
            assert!(check(&LemmaCheckConfig::symbolic(Lemma::Detm, n)).unwrap().ok);
        }
        let r = check(&LemmaCheckConfig::random(Lemma::Detm, 4, 20, 3)).unwrap();
        assert!(r.ok, "{:?}", r.failures);
    }

    #[test]
    fn hr_small_cases() {
        let (l, r) = hr_sides(0, &v(q(1)), &v(q(2)), &[]);
        assert!(l.is_zero() && r.is_zero());
        let (l, r) = hr_sides(1, &v(q(1)), &v(q(2)), &[]);
        assert_eq!(l, poly("q1-q1^-1-q2+q2^-1"));
        assert_eq!(r, l);
        assert!(check(&LemmaCheckConfig::symbolic(Lemma::Hr { r: 3 }, 2)).unwrap().ok);
        assert!(check(&LemmaCheckConfig::random(Lemma::Hr { r: 4 }, 3, 10, 5)).unwrap().ok);
    }

    #[test]
    fn edet_small_cases() {
        let cs = c_values(1);
        assert_eq!(determinant(&edet_matrix(1, &cs)), poly("1+c1*c2"));
        for n in 2..=3 {
            assert!(check(&LemmaCheckConfig::symbolic(Lemma::Edet, n)).unwrap().ok);
        }
        assert!(check(&LemmaCheckConfig::random(Lemma::Edet, 5, 10, 1)).unwrap().ok);
    }

    #[test]
    fn edet_class_expansions() {
        for n in 1..=2 {
            let r = check(&LemmaCheckConfig::symbolic(Lemma::EdetClasses, n)).unwrap();
            assert!(r.ok, "{r} {:?}", r.failures);
        }
    }

    #[test]
    fn size_limits() {
        assert!(matches!(
            check(&LemmaCheckConfig::symbolic(Lemma::Deth, 4)),
            Err(Error::SizeLimitExceeded(_))
        ));
        assert!(LemmaCheckConfig::symbolic(Lemma::Edet, 4).validate().is_ok());
        assert!(LemmaCheckConfig::symbolic(Lemma::Edet, 5).validate().is_err());
    }

    #[test]
    fn random_points_are_reproducible() {
        let vars = deth_vars(2);
        assert_eq!(random_point(&vars, 9, 3), random_point(&vars, 9, 3));
        assert_ne!(random_point(&vars, 9, 3), random_point(&vars, 9, 4));
    }

    #[test]
    fn lemma_names_round_trip() {
        for l in [Lemma::Deth, Lemma::Detm, Lemma::Hr { r: 3 }, Lemma::Edet, Lemma::EdetClasses] {
            assert_eq!(l.to_string().parse::<Lemma>().unwrap(), l);
        }
    }

    #[test]
    fn report_json_shape() {
        let r = check(&LemmaCheckConfig::random(Lemma::Edet, 2, 3, 42)).unwrap();
        let j: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(j["lemma"], "edet");
        assert_eq!(j["seed"], 42);
        assert_eq!(j["ok"], true);
        let s = check(&LemmaCheckConfig::symbolic(Lemma::Edet, 2)).unwrap();
        assert!(serde_json::to_value(&s).unwrap().get("seed").is_none());
    }
}
