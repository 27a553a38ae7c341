use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{BigRat, LaurentPoly, QError};

/// Element of the rational function field `Q(q)`.
///
/// Canonical form: the denominator is an ordinary monic polynomial with a
/// nonzero constant term, every power of `q` lives in the numerator, and
/// numerator and denominator are coprime. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(c))
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(k))
    }

    /// `q - q^-1`, the recurring quadratic coefficient.
    pub fn q_minus_q_inv() -> Self {
        Self::from_laurent(&LaurentPoly::q_pow(1) - &LaurentPoly::q_pow(-1))
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }

    /// `num / den` in canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (sn, n) = num.split_unit_power();
        let (sd, d) = den.split_unit_power();
        if d.is_constant() {
            let c = d.coeff(0).recip();
            return Self::from_laurent(n.scale(&c).shift(sn - sd));
        }
        let g = n.gcd(&d);
        let (n, d) = if g.is_one() {
            (n, d)
        } else {
            (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
        };
        let lc = d.leading_coeff().unwrap().recip();
        Self {
            num: n.scale(&lc).shift(sn - sd),
            den: d.scale(&lc),
        }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `Q[q, q^-1]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Total number of stored terms; used as a pivot-cost measure.
    pub fn complexity(&self) -> usize {
        self.num.len() + self.den.len() - 1
    }

    pub fn inv(&self) -> Result<Self, QError> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, QError> {
        if rhs.is_zero() {
            return Err(QError::DivisionByZero);
        }
        if rhs.is_laurent() && rhs.num.is_monomial() {
            let (e, c) = &rhs.num.terms()[0];
            return Ok(Self {
                num: self.num.scale(&c.recip()).shift(-e),
                den: self.den.clone(),
            });
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Evaluation `f(t)` at a nonzero rational point.
    pub fn specialize(&self, t: &BigRat) -> Result<BigRat, QError> {
        if t.is_zero() {
            return Err(QError::ZeroPoint);
        }
        let d = self.den.eval(t)?;
        if d.is_zero() {
            return Err(QError::PoleAt(t.to_string()));
        }
        Ok(self.num.eval(t)? / d)
    }

    fn add_impl(&self, rhs: &RatFunc, negate: bool) -> RatFunc {
        let rnum = if negate { -&rhs.num } else { rhs.num.clone() };
        if self.den == rhs.den {
            let num = &self.num + &rnum;
            if self.den.is_one() {
                return Self::from_laurent(num);
            }
            return Self::canonical(num, self.den.clone());
        }
        // gcd(a + b d, d) = gcd(a, d) = 1, so these stay canonical.
        if rhs.den.is_one() {
            return Self {
                num: &self.num + &(&rnum * &self.den),
                den: self.den.clone(),
            };
        }
        if self.den.is_one() {
            return Self {
                num: &(&self.num * &rhs.den) + &rnum,
                den: rhs.den.clone(),
            };
        }
        let g = self.den.gcd(&rhs.den);
        let a_co = self.den.div_exact(&g).unwrap();
        let b_co = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &b_co) + &(&rnum * &a_co);
        Self::canonical(num, &self.den * &b_co)
    }

    fn mul_impl(&self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_laurent(&self.num * &rhs.num);
        }
        Self::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        self.mul_impl(rhs)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self.add_impl(&rhs, false)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self.add_impl(&rhs, true)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self.mul_impl(&rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPoly| {
            if p.len() > 1 {
                format!("({})", p)
            } else {
                p.to_string()
            }
        };
        write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self)
    }
}
