use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::var::VarId;

/// A Laurent monomial: variables with nonzero integer exponents, sorted by
/// variable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[(VarId, i32); 6]>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: i32) -> Self {
        let mut m = Monomial::one();
        if e != 0 {
            m.exps.push((v, e));
        }
        m
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) pairs.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, i32)>>(pairs: I) -> Self {
        let mut v: SmallVec<[(VarId, i32); 6]> = pairs.into_iter().collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(VarId, i32); 6]> = SmallVec::new();
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Monomial { exps: out }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(VarId, i32)] {
        &self.exps
    }

    pub fn exponent(&self, v: VarId) -> i32 {
        match self.exps.binary_search_by_key(&v, |p| p.0) {
            Ok(k) => self.exps[k].1,
            Err(_) => 0,
        }
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|p| p.1 as i64).sum()
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|p| p.0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.exps.is_empty() {
            return other.clone();
        }
        if other.exps.is_empty() {
            return self.clone();
        }
        let (a, b) = (&self.exps, &other.exps);
        let mut out: SmallVec<[(VarId, i32); 6]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { exps: out }
    }

    pub fn inv(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect() }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial { exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect() }
    }

    /// `self / other`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    /// Drops the given variable, returning its exponent.
    pub fn split_off(&self, v: VarId) -> (i32, Monomial) {
        let e = self.exponent(v);
        let rest = Monomial { exps: self.exps.iter().copied().filter(|p| p.0 != v).collect() };
        (e, rest)
    }

    /// Lexicographic comparison on exponent vectors with variables in
    /// increasing order. This is a group order on `Z^k`, so leading terms are
    /// multiplicative; exact division relies on that.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(u, e)), Some(&(v, f))) => match u.cmp(&v) {
                    Ordering::Less => return e.cmp(&0),
                    Ordering::Greater => return 0.cmp(&f),
                    Ordering::Equal => {
                        if e != f {
                            return e.cmp(&f);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    /// Canonical print order: total degree ascending, then reverse lex so
    /// that earlier variables come first among equal degrees.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.lex_cmp(self))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::var::{x, y, z0};

    #[test]
    fn mul_cancels() {
        let m = Monomial::var(x(1));
        assert!(m.mul(&m.inv()).is_one());
        let p = Monomial::from_pairs([(y(1), -1), (x(1), 2), (x(1), -1)]);
        assert_eq!(p.to_string(), "x1*y1^-1");
    }

    #[test]
    fn lex_is_multiplicative() {
        let a = Monomial::from_pairs([(x(1), 1), (y(1), -2)]);
        let b = Monomial::from_pairs([(x(1), 1), (z0(), 3)]);
        let c = Monomial::from_pairs([(y(1), 5), (z0(), -1)]);
        assert_eq!(a.lex_cmp(&b), a.mul(&c).lex_cmp(&b.mul(&c)));
    }
}
