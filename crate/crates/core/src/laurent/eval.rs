use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use super::gaussian::GaussianRational;
use super::poly::LaurentPoly;
use super::var::VarId;
use super::LaurentError;

/// An assignment of values to variables.
pub type Point = BTreeMap<VarId, GaussianRational>;

/// Exact value of `p` at `point`.
pub fn eval_rational(p: &LaurentPoly, point: &Point) -> Result<GaussianRational, LaurentError> {
    let mut powers: FxHashMap<(VarId, i32), GaussianRational> = FxHashMap::default();
    let mut total = GaussianRational::zero();
    for (m, c) in p.terms() {
        let mut v = c.clone();
        for &(var, e) in m.exponents() {
            let val = point.get(&var).ok_or(LaurentError::Unassigned(var))?;
            if e < 0 && val.is_zero() {
                return Err(LaurentError::ZeroAssignment(var));
            }
            let pw = powers.entry((var, e)).or_insert_with(|| val.pow(e));
            v = &v * pw;
        }
        total += &v;
    }
    Ok(total)
}

impl LaurentPoly {
    pub fn eval(&self, point: &Point) -> Result<GaussianRational, LaurentError> {
        eval_rational(self, point)
    }
}
