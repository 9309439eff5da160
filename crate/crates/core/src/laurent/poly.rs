use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use super::gaussian::GaussianRational;
use super::monomial::Monomial;
use super::rational::Rational;
use super::var::VarId;
use super::LaurentError;

/// Sparse Laurent polynomial with Gaussian-rational coefficients.
///
/// Terms are kept sorted by the canonical monomial order with no zero
/// coefficients, so `==` is exact equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, GaussianRational)>,
}

/// Substitution map used by [`LaurentPoly::substitute`].
pub type Substitution = BTreeMap<VarId, LaurentPoly>;

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v), GaussianRational::one())
    }

    /// `v^e`, negative exponents allowed.
    pub fn var_pow(v: VarId, e: i32) -> Self {
        Self::term(Monomial::var_pow(v, e), GaussianRational::one())
    }

    pub fn term(m: Monomial, c: GaussianRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    pub fn from_map(map: FxHashMap<Monomial, GaussianRational>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, GaussianRational)>>(it: I) -> Self {
        let mut acc = PolyAccumulator::new();
        for (m, c) in it {
            acc.add_term(m, &c);
        }
        acc.finish()
    }

    pub fn terms(&self) -> &[(Monomial, GaussianRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Single-term polynomial (a scaled monomial)?
    pub fn as_monomial(&self) -> Option<(&Monomial, &GaussianRational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => GaussianRational::zero(),
        }
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&Monomial::one())
    }

    /// All coefficients have zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_real())
    }

    pub fn vars(&self) -> Vec<VarId> {
        let mut v: Vec<VarId> = self.terms.iter().flat_map(|t| t.0.vars()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Smallest and largest exponent of `v`, or `None` for the zero polynomial.
    pub fn degree_range(&self, v: VarId) -> Option<(i32, i32)> {
        let mut it = self.terms.iter().map(|t| t.0.exponent(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Coefficient of `v^k`, as a polynomial free of `v`.
    pub fn coeff_of(&self, v: VarId, k: i32) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let (e, rest) = m.split_off(v);
                (e == k).then(|| (rest, c.clone()))
            })
            .collect::<Vec<_>>();
        // Removing one variable from distinct monomials keeps them distinct.
        let mut terms = terms;
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        LaurentPoly { terms }
    }

    pub fn scale(&self, c: &GaussianRational) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &GaussianRational) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero();
        }
        let mut terms: Vec<_> = self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect();
        // Multiplying by a monomial shifts degree uniformly but may reorder
        // within a degree, so re-sort.
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        LaurentPoly { terms }
    }

    pub fn pow(&self, e: i32) -> Result<LaurentPoly, LaurentError> {
        if e < 0 {
            let (m, c) = self.as_monomial().ok_or(LaurentError::NonInvertibleImage)?;
            return Ok(LaurentPoly::term(m.pow(e), c.pow(e)));
        }
        if let Some((m, c)) = self.as_monomial() {
            return Ok(LaurentPoly::term(m.pow(e), c.pow(e)));
        }
        let mut acc = LaurentPoly::one();
        let mut sq = self.clone();
        let mut e = e as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse of a single term.
    pub fn inv_monomial(&self) -> Result<LaurentPoly, LaurentError> {
        self.pow(-1)
    }

    /// Homomorphic image under `sigma`; unmapped variables are fixed.
    pub fn substitute(&self, sigma: &Substitution) -> Result<LaurentPoly, LaurentError> {
        let mut cache: FxHashMap<(VarId, i32), LaurentPoly> = FxHashMap::default();
        let mut acc = PolyAccumulator::new();
        for (m, c) in &self.terms {
            let mut kept: Vec<(VarId, i32)> = Vec::new();
            let mut img = LaurentPoly::constant(c.clone());
            for &(v, e) in m.exponents() {
                match sigma.get(&v) {
                    None => kept.push((v, e)),
                    Some(p) => {
                        let pe = match cache.get(&(v, e)) {
                            Some(pe) => pe.clone(),
                            None => {
                                let pe = p.pow(e)?;
                                cache.insert((v, e), pe.clone());
                                pe
                            }
                        };
                        img = &img * &pe;
                    }
                }
            }
            let fixed = Monomial::from_pairs(kept);
            for (n, d) in img.terms {
                acc.add_term(n.mul(&fixed), &d);
            }
        }
        Ok(acc.finish())
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    ///
    /// Uses division by leading terms in the lex order. The search is bounded
    /// by the exponent box any true quotient must live in, so non-divisibility
    /// is always detected.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = d.as_monomial() {
            return Some(self.mul_monomial(&m.inv(), &c.recip()));
        }
        let vars: Vec<VarId> = {
            let mut v = self.vars();
            v.extend(d.vars());
            v.sort();
            v.dedup();
            v
        };
        let bounds: Vec<(i32, i32)> = vars
            .iter()
            .map(|&v| {
                let (plo, phi) = self.degree_range(v).unwrap();
                let (dlo, dhi) = d.degree_range(v).unwrap();
                (plo - dlo, phi - dhi)
            })
            .collect();
        if bounds.iter().any(|(lo, hi)| lo > hi) {
            return None;
        }
        let lead = |p: &LaurentPoly| -> (Monomial, GaussianRational) {
            p.terms.iter().max_by(|a, b| a.0.lex_cmp(&b.0)).cloned().unwrap()
        };
        let (dm, dc) = lead(d);
        let dc_inv = dc.recip();
        let mut rem = self.clone();
        let mut quot = PolyAccumulator::new();
        while !rem.is_zero() {
            let (rm, rc) = lead(&rem);
            let qm = rm.div(&dm);
            for (k, &v) in vars.iter().enumerate() {
                let e = qm.exponent(v);
                if e < bounds[k].0 || e > bounds[k].1 {
                    return None;
                }
            }
            let qc = &rc * &dc_inv;
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quot.add_term(qm, &qc);
        }
        Some(quot.finish())
    }

    /// Keeps only the terms satisfying `pred`.
    pub fn filter_terms<F: Fn(&Monomial) -> bool>(&self, pred: F) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().filter(|t| pred(&t.0)).cloned().collect() }
    }

    pub fn map_coeffs<F: Fn(&GaussianRational) -> GaussianRational>(&self, f: F) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Real part of every coefficient.
    pub fn real_part(&self) -> LaurentPoly {
        self.map_coeffs(|c| GaussianRational::new(c.re.clone(), Rational::zero()))
    }

    pub fn product<'a, I: IntoIterator<Item = &'a LaurentPoly>>(it: I) -> LaurentPoly {
        it.into_iter().fold(LaurentPoly::one(), |acc, p| &acc * p)
    }
}

/// Hash-map accumulator for summing many polynomials without repeated merges.
#[derive(Default)]
pub struct PolyAccumulator {
    map: FxHashMap<Monomial, GaussianRational>,
}

impl PolyAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        PolyAccumulator { map: FxHashMap::with_capacity_and_hasher(n, Default::default()) }
    }

    pub fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&m) {
            Some(d) => *d += c,
            None => {
                self.map.insert(m, c.clone());
            }
        }
    }

    pub fn add_poly(&mut self, p: &LaurentPoly) {
        for (m, c) in &p.terms {
            self.add_term(m.clone(), c);
        }
    }

    /// Adds `p * q` without materialising the product.
    pub fn add_product(&mut self, p: &LaurentPoly, q: &LaurentPoly) {
        for (m, c) in &p.terms {
            for (n, d) in &q.terms {
                self.add_term(m.mul(n), &(c * d));
            }
        }
    }

    pub fn merge(&mut self, other: PolyAccumulator) {
        for (m, c) in other.map {
            self.add_term(m, &c);
        }
    }

    pub fn finish(self) -> LaurentPoly {
        LaurentPoly::from_map(self.map)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LaurentPoly { terms: out }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((m, c)) = self.as_monomial() {
            return rhs.mul_monomial(m, c);
        }
        if let Some((m, c)) = rhs.as_monomial() {
            return self.mul_monomial(m, c);
        }
        let mut acc = PolyAccumulator::with_capacity(self.len() * rhs.len());
        acc.add_product(self, rhs);
        acc.finish()
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        let mut acc = PolyAccumulator::new();
        for p in iter {
            acc.add_poly(&p);
        }
        acc.finish()
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> LaurentPoly {
        let mut acc = PolyAccumulator::new();
        for p in iter {
            acc.add_poly(p);
        }
        acc.finish()
    }
}

impl From<VarId> for LaurentPoly {
    fn from(v: VarId) -> Self {
        LaurentPoly::var(v)
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::int(n)
    }
}

impl From<GaussianRational> for LaurentPoly {
    fn from(c: GaussianRational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
