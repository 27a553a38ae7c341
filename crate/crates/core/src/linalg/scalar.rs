use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::qfield::{BigRat, LaurentPoly, RatFunc};

/// Commutative ring element usable as a matrix entry.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

pub trait Field: Scalar {
    /// Multiplicative inverse; the caller guarantees `self != 0`.
    fn inv(&self) -> Self;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }
}

pub type SparseRow<T> = Vec<(usize, T)>;

/// Integral domain in which rows are eliminated.
///
/// Elimination never divides by a non-unit: a row entry `a` under pivot `p`
/// is cleared by `s * row - t * pivot_row` with `s * a = t * p`.
pub trait Pivot: Scalar {
    type Frac: Field;

    /// Pivot cost; lower is preferred.
    fn weight(&self) -> usize;

    /// `(s, t)` with `s * entry == t * pivot`; `None` stands for `s = 1`.
    fn cofactors(entry: &Self, pivot: &Self) -> (Option<Self>, Self);

    /// Rescales a freshly accepted pivot row whose pivot sits at `pos`.
    fn normalize(row: &mut SparseRow<Self>, pos: usize);

    fn to_frac(&self) -> Self::Frac;
}

/// Field whose matrices are reduced through an elimination domain.
pub trait ExactField: Field {
    type Elim: Pivot<Frac = Self>;

    /// A nonzero multiple of `row` with entries in the elimination domain.
    fn clear_row(row: SparseRow<Self>) -> SparseRow<Self::Elim>;
}

macro_rules! scalar_via_ops {
    ($t:ty, $zero:expr, $one:expr) => {
        impl Scalar for $t {
            fn zero() -> Self {
                $zero
            }
            fn one() -> Self {
                $one
            }
            fn is_zero(&self) -> bool {
                Zero::is_zero(self)
            }
            fn is_one(&self) -> bool {
                *self == $one
            }
            fn add(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn sub(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn mul(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn neg(&self) -> Self {
                -self
            }
        }
    };
}

scalar_via_ops!(BigRat, <BigRat as Zero>::zero(), <BigRat as One>::one());
scalar_via_ops!(RatFunc, RatFunc::zero(), RatFunc::one());

impl Scalar for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        LaurentPoly::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for BigRat {
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Self {
        RatFunc::inv(self).expect("inverse of zero")
    }

    fn div(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("division by zero")
    }
}

fn scale_row<T: Scalar>(row: &mut SparseRow<T>, c: &T) {
    for (_, x) in row.iter_mut() {
        *x = x.mul(c);
    }
}

impl Pivot for BigRat {
    type Frac = BigRat;

    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }

    fn cofactors(entry: &Self, pivot: &Self) -> (Option<Self>, Self) {
        if One::is_one(pivot) {
            (None, entry.clone())
        } else {
            (None, entry / pivot)
        }
    }

    fn normalize(row: &mut SparseRow<Self>, pos: usize) {
        let inv = row[pos].1.recip();
        scale_row(row, &inv);
    }

    fn to_frac(&self) -> BigRat {
        self.clone()
    }
}

impl Pivot for LaurentPoly {
    type Frac = RatFunc;

    fn weight(&self) -> usize {
        self.len()
    }

    fn cofactors(entry: &Self, pivot: &Self) -> (Option<Self>, Self) {
        if pivot.is_one() {
            return (None, entry.clone());
        }
        if pivot.is_monomial() {
            return (None, entry.div_exact(pivot).unwrap());
        }
        let g = entry.gcd(pivot);
        if g.is_one() {
            return (Some(pivot.clone()), entry.clone());
        }
        (
            Some(pivot.div_exact(&g).unwrap()),
            entry.div_exact(&g).unwrap(),
        )
    }

    fn normalize(row: &mut SparseRow<Self>, pos: usize) {
        let pivot = row[pos].1.clone();
        if pivot.is_monomial() {
            // Units are divided out so that later eliminations need no gcd.
            for (_, x) in row.iter_mut() {
                *x = x.div_exact(&pivot).unwrap();
            }
            return;
        }
        let mut g = pivot.normalized_associate();
        for (_, x) in row.iter() {
            if g.is_one() {
                break;
            }
            g = g.gcd(x);
        }
        if !g.is_one() {
            for (_, x) in row.iter_mut() {
                *x = x.div_exact(&g).unwrap();
            }
        }
        // Strip the rational content and any power of q shared by the row.
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        let mut min_exp = i64::MAX;
        for (_, x) in row.iter() {
            for (e, c) in x.terms() {
                num = num.gcd(c.numer());
                den = den.lcm(c.denom());
                min_exp = min_exp.min(*e);
            }
        }
        let mut c = BigRat::new(num, den);
        if row[pos].1.leading_coeff().map_or(false, |l| l.is_negative()) {
            c = -c;
        }
        let cinv = c.recip();
        for (_, x) in row.iter_mut() {
            *x = x.scale(&cinv).shift(-min_exp);
        }
    }

    fn to_frac(&self) -> RatFunc {
        RatFunc::from_laurent(self.clone())
    }
}

impl ExactField for BigRat {
    type Elim = BigRat;

    fn clear_row(row: SparseRow<Self>) -> SparseRow<Self> {
        row
    }
}

impl ExactField for RatFunc {
    type Elim = LaurentPoly;

    fn clear_row(row: SparseRow<Self>) -> SparseRow<LaurentPoly> {
        let mut lcm = LaurentPoly::one();
        for (_, x) in &row {
            let d = x.denom();
            if d.is_one() || lcm.div_exact(d).is_some() {
                continue;
            }
            let g = lcm.gcd(d);
            lcm = &lcm * &d.div_exact(&g).unwrap();
        }
        row.into_iter()
            .map(|(c, x)| {
                let factor = lcm.div_exact(x.denom()).unwrap();
                (c, x.numer() * &factor)
            })
            .collect()
    }
}
