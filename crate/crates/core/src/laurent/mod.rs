//! Exact sparse multivariate Laurent polynomials over the Gaussian rationals,
//! with truncated power-series expansion and determinants.

mod det;
mod eval;
mod gaussian;
mod monomial;
mod poly;
mod rational;
mod series;
mod text;
pub mod var;

pub use det::{bareiss, determinant, determinant_numeric, minor_expansion, MINOR_EXPANSION_MAX};
pub use eval::{eval_rational, Point};
pub use gaussian::GaussianRational;
pub use monomial::Monomial;
pub use poly::{LaurentPoly, PolyAccumulator, Substitution};
pub use rational::Rational;
pub use series::{series_coeff, RationalSeriesSpec};
pub use var::{Family, VarId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("negative power of a variable mapped to a non-monomial")]
    NonInvertibleImage,
    #[error("variable {0} assigned zero but appears with a negative exponent")]
    ZeroAssignment(VarId),
    #[error("variable {0} has no assigned value")]
    Unassigned(VarId),
    #[error("invalid series factor: {0}")]
    InvalidSeriesFactor(String),
}

/// Parses a polynomial literal; panics on malformed input. Intended for
/// constants in code and tests.
pub fn poly(s: &str) -> LaurentPoly {
    s.parse().unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}

#[cfg(test)]
mod props {
    use super::var::{x, y, z0};
    use super::*;
    use proptest::prelude::*;

    fn small_coeff() -> impl Strategy<Value = GaussianRational> {
        (-4i64..=4, 1i64..=3, -2i64..=2).prop_map(|(a, b, c)| {
            GaussianRational::new(Rational::new(a, b), Rational::from_int(c))
        })
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        let vars = [x(1), x(2), y(1), z0()];
        prop::collection::vec((small_coeff(), prop::collection::vec((0usize..4, -2i32..=2), 0..3)), 0..5)
            .prop_map(move |terms| {
                LaurentPoly::from_terms(terms.into_iter().map(|(c, es)| {
                    (Monomial::from_pairs(es.into_iter().map(|(k, e)| (vars[k], e))), c)
                }))
            })
    }

    fn point() -> impl Strategy<Value = Point> {
        let nz = (1i64..=9, 1i64..=5, prop::bool::ANY).prop_map(|(a, b, neg)| {
            GaussianRational::from_ratio(if neg { -a } else { a }, b)
        });
        prop::collection::vec(nz, 4).prop_map(|v| {
            [x(1), x(2), y(1), z0()].into_iter().zip(v).collect()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn eval_is_a_homomorphism(p in small_poly(), q in small_poly(), pt in point()) {
            let lhs = (&p * &q).eval(&pt).unwrap();
            let rhs = &p.eval(&pt).unwrap() * &q.eval(&pt).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = (&p + &q).eval(&pt).unwrap();
            let rhs = &p.eval(&pt).unwrap() + &q.eval(&pt).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn print_parse_round_trip(p in small_poly()) {
            let s = p.to_string();
            let back: LaurentPoly = s.parse().unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn exact_division_recovers_factor(p in small_poly(), q in small_poly()) {
            prop_assume!(!q.is_zero());
            let prod = &p * &q;
            prop_assert_eq!(prod.div_exact(&q), Some(p));
        }

        #[test]
        fn identity_substitution(p in small_poly()) {
            let sigma: Substitution = [x(1), y(1), z0()].into_iter().map(|v| (v, LaurentPoly::var(v))).collect();
            prop_assert_eq!(p.substitute(&sigma).unwrap(), p);
        }

        #[test]
        fn det_multiplicative(a in prop::collection::vec(-5i64..=5, 9), b in prop::collection::vec(-5i64..=5, 9), n in 2usize..=3) {
            let mk = |v: &[i64]| -> Vec<Vec<LaurentPoly>> {
                (0..n).map(|i| (0..n).map(|j| LaurentPoly::int(v[i * 3 + j])).collect()).collect()
            };
            let (ma, mb) = (mk(&a), mk(&b));
            let mut prod = vec![vec![LaurentPoly::zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        prod[i][j] = &prod[i][j] + &(&ma[i][k] * &mb[k][j]);
                    }
                }
            }
            prop_assert_eq!(determinant(&prod), &determinant(&ma) * &determinant(&mb));
            prop_assert_eq!(bareiss(&prod), minor_expansion(&prod));
        }

        #[test]
        fn series_product_is_convolution(c1 in small_coeff(), c2 in small_coeff(), k in 0i32..5) {
            let v = var::q(1);
            let a = RationalSeriesSpec::new(v).times(poly("1 + x1*q1")).over(
                LaurentPoly::one() - LaurentPoly::constant(c1.clone()) * LaurentPoly::var(v));
            let b = RationalSeriesSpec::new(v).times(poly("1 - y1*q1")).over(
                LaurentPoly::one() - LaurentPoly::constant(c2.clone()) * LaurentPoly::var(v));
            let ab = a.product(&b).coeff(k).unwrap();
            let conv: LaurentPoly = (0..=k).map(|j| &a.coeff(j).unwrap() * &b.coeff(k - j).unwrap()).sum();
            prop_assert_eq!(ab, conv);
        }
    }

    #[test]
    fn spec_examples() {
        assert!((&poly("x1") + &poly("-x1")).is_zero());
        assert_eq!(&poly("z0*x1") + &poly("1"), poly("z0*x1 + 1"));
        assert_eq!(&poly("i*t1") + &poly("i*t1"), poly("2*i*t1"));
        assert_eq!(&poly("x1") * &poly("x1^-1"), poly("1"));
        assert_eq!(
            &poly("1 + z0*x1") * &poly("x1 + z0 + y1^-1"),
            poly("x1 + z0 + y1^-1 + z0*x1^2 + z0^2*x1 + z0*x1*y1^-1")
        );
        assert_eq!(&poly("i") * &poly("i"), poly("-1"));
    }

    #[test]
    fn substitution_examples() {
        let sigma: Substitution = [(x(1), poly("s1*x1"))].into_iter().collect();
        assert_eq!(poly("z0*x1").substitute(&sigma).unwrap(), poly("z0*s1*x1"));
        let sigma: Substitution = [
            (x(1), poly("i*t*x1")),
            (z0(), poly("i*t")),
            (y(1), poly("i*t*x1^-1").inv_monomial().unwrap()),
        ]
        .into_iter()
        .collect();
        assert_eq!(poly("1 + z0*x1").substitute(&sigma).unwrap(), poly("1 - t^2*x1"));
        let bad: Substitution = [(x(1), poly("1 + y1"))].into_iter().collect();
        assert_eq!(poly("x1^-1").substitute(&bad), Err(LaurentError::NonInvertibleImage));
    }
}
