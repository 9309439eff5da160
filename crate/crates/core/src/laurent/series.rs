use super::poly::LaurentPoly;
use super::var::VarId;
use super::LaurentError;

/// A product `var^leading * prod(numerators) / prod(denominators)` expanded
/// as a power series in `var`.
///
/// Numerator factors are polynomials in `var` with nonnegative exponents;
/// denominator factors have the shape `1 - c*var` with `c` free of `var`.
#[derive(Clone, Debug)]
pub struct RationalSeriesSpec {
    pub var: VarId,
    pub numerator: Vec<LaurentPoly>,
    pub denominator: Vec<LaurentPoly>,
    pub leading_power: i32,
}

impl RationalSeriesSpec {
    pub fn new(var: VarId) -> Self {
        RationalSeriesSpec { var, numerator: Vec::new(), denominator: Vec::new(), leading_power: 0 }
    }

    pub fn times(mut self, p: LaurentPoly) -> Self {
        self.numerator.push(p);
        self
    }

    pub fn over(mut self, p: LaurentPoly) -> Self {
        self.denominator.push(p);
        self
    }

    pub fn shift(mut self, k: i32) -> Self {
        self.leading_power += k;
        self
    }

    pub fn product(&self, other: &RationalSeriesSpec) -> RationalSeriesSpec {
        assert_eq!(self.var, other.var, "series in different variables");
        let mut out = self.clone();
        out.numerator.extend(other.numerator.iter().cloned());
        out.denominator.extend(other.denominator.iter().cloned());
        out.leading_power += other.leading_power;
        out
    }

    pub fn validate(&self) -> Result<(), LaurentError> {
        for p in &self.numerator {
            if let Some((lo, _)) = p.degree_range(self.var) {
                if lo < 0 {
                    return Err(LaurentError::InvalidSeriesFactor(format!(
                        "numerator {p} has a negative power of {}",
                        self.var
                    )));
                }
            }
        }
        for p in &self.denominator {
            let ok = p.constant_term_in(self.var).is_one()
                && p.degree_range(self.var).is_some_and(|(lo, hi)| lo >= 0 && hi <= 1);
            if !ok {
                return Err(LaurentError::InvalidSeriesFactor(format!(
                    "denominator {p} is not of the form 1 - c*{}",
                    self.var
                )));
            }
        }
        Ok(())
    }

    /// Coefficients of `var^(leading_power + d)` for `d = 0..=order`.
    pub fn expand(&self, order: usize) -> Result<Vec<LaurentPoly>, LaurentError> {
        self.validate()?;
        let mut series = vec![LaurentPoly::zero(); order + 1];
        series[0] = LaurentPoly::one();
        for p in &self.numerator {
            let (_, hi) = match p.degree_range(self.var) {
                Some(r) => r,
                None => return Ok(vec![LaurentPoly::zero(); order + 1]),
            };
            let parts: Vec<LaurentPoly> = (0..=hi.min(order as i32)).map(|d| p.coeff_of(self.var, d)).collect();
            let mut next = vec![LaurentPoly::zero(); order + 1];
            for (i, s) in series.iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                for (d, part) in parts.iter().enumerate() {
                    if i + d > order || part.is_zero() {
                        continue;
                    }
                    next[i + d] = &next[i + d] + &(s * part);
                }
            }
            series = next;
        }
        for p in &self.denominator {
            // 1/(1 - c q): s_new[i] = s[i] + c * s_new[i-1]
            let c = -&p.coeff_of(self.var, 1);
            for i in 1..=order {
                let carry = &series[i - 1] * &c;
                series[i] = &series[i] + &carry;
            }
        }
        Ok(series)
    }

    /// Coefficient of `var^k` in the expansion.
    pub fn coeff(&self, k: i32) -> Result<LaurentPoly, LaurentError> {
        let d = k - self.leading_power;
        if d < 0 {
            self.validate()?;
            return Ok(LaurentPoly::zero());
        }
        let s = self.expand(d as usize)?;
        Ok(s[d as usize].clone())
    }
}

/// `[var^k] spec`.
pub fn series_coeff(spec: &RationalSeriesSpec, k: i32) -> Result<LaurentPoly, LaurentError> {
    spec.coeff(k)
}

impl LaurentPoly {
    /// Part of `self` free of `v`, as a polynomial.
    pub fn constant_term_in(&self, v: VarId) -> LaurentPoly {
        self.coeff_of(v, 0)
    }
}
