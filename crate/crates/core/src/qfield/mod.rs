//! Exact arithmetic: big rationals, Laurent polynomials in `q` and the
//! rational function field `Q(q)`.

mod laurent;
mod parse;
mod ratfunc;
mod upoly;

use thiserror::Error;

pub use laurent::LaurentPoly;
pub use parse::parse_bigrat;
pub use ratfunc::RatFunc;


/// Arbitrary-precision rational, always stored in lowest terms.
pub type BigRat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot specialize at q = 0")]
    ZeroPoint,
    #[error("denominator vanishes at q = {0}")]
    PoleAt(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-3i64..=3, -4i64..=4), 0..4).prop_map(|v| {
            LaurentPoly::from_terms(v.into_iter().map(|(e, c)| (e, BigRat::from_integer(c.into()))))
        })
    }

    fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
        small_laurent().prop_filter("nonzero", |p| !p.is_zero())
    }

    fn ratfunc() -> impl Strategy<Value = RatFunc> {
        (small_laurent(), nonzero_laurent()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
    }

    fn admissible_point() -> impl Strategy<Value = BigRat> {
        (1i64..=9, 1i64..=5, any::<bool>())
            .prop_map(|(n, d, neg)| BigRat::new((if neg { -n } else { n }).into(), d.into()))
    }

    proptest! {
        // Multiplying num and den by a common factor must not change the canonical value.
        #[test]
        fn canonical_form_is_representation_independent(
            n in small_laurent(), d in nonzero_laurent(), k in nonzero_laurent(),
            b in ratfunc(),
        ) {
            let a1 = RatFunc::new(n.clone(), d.clone()).unwrap();
            let a2 = RatFunc::new(&n * &k, &d * &k).unwrap();
            prop_assert_eq!(&a1, &a2);
            prop_assert_eq!(&a1 + &b, &a2 + &b);
            prop_assert_eq!(&a1 * &b, &a2 * &b);
            prop_assert_eq!(&(&a1 - &b) + &b, a1.clone());
            if !b.is_zero() {
                prop_assert_eq!(a1.checked_div(&b).unwrap(), a2.checked_div(&b).unwrap());
                prop_assert_eq!(&a1.checked_div(&b).unwrap() * &b, a1);
            }
        }

        #[test]
        fn specialization_is_multiplicative(a in ratfunc(), b in ratfunc(), t in admissible_point()) {
            if let (Ok(x), Ok(y)) = (a.specialize(&t), b.specialize(&t)) {
                prop_assert_eq!((&a * &b).specialize(&t).unwrap(), &x * &y);
                prop_assert_eq!((&a + &b).specialize(&t).unwrap(), &x + &y);
            }
        }

        #[test]
        fn laurent_embeds_unchanged(p in small_laurent()) {
            let f = RatFunc::new(p.clone(), LaurentPoly::one()).unwrap();
            prop_assert_eq!(f.numer(), &p);
            prop_assert!(f.denom().is_one());
        }

        #[test]
        fn display_parse_roundtrip(a in ratfunc()) {
            let back: RatFunc = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
