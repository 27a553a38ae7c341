use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{upoly, BigRat, QError};

/// Element of `Q[q, q^-1]`.
///
/// Terms are kept sorted by ascending exponent and no stored coefficient is
/// zero, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigRat)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRat::from_integer(c.into()))
    }

    /// `c * q^exp`.
    pub fn monomial(c: BigRat, exp: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(exp, c)] }
        }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigRat::one(), exp)
    }

    /// Builds a polynomial from arbitrary (exponent, coefficient) pairs,
    /// merging repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRat)>>(terms: I) -> Self {
        let mut v: Vec<(i64, BigRat)> = terms.into_iter().collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, BigRat)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(i64, BigRat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// A single term `c q^k`; these are exactly the units of the ring.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant polynomial (including zero).
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == 0)
    }

    /// True when no exponent is negative.
    pub fn is_ordinary(&self) -> bool {
        self.terms.first().map_or(true, |(e, _)| *e >= 0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&BigRat> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn coeff(&self, exp: i64) -> BigRat {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRat::zero(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Splits `self = q^s * p` with `p` ordinary and `p(0) != 0`.
    pub fn split_unit_power(&self) -> (i64, LaurentPoly) {
        match self.min_exp() {
            None => (0, Self::zero()),
            Some(s) => (s, self.shift(-s)),
        }
    }

    /// Evaluation at a rational point.
    pub fn eval(&self, t: &BigRat) -> Result<BigRat, QError> {
        if t.is_zero() && self.min_exp().map_or(false, |e| e < 0) {
            return Err(QError::ZeroPoint);
        }
        let mut acc = BigRat::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rat(t, *e);
        }
        Ok(acc)
    }

    /// Exact quotient in the Laurent ring, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let (e, c) = &d.terms[0];
            return Some(self.scale(&c.recip()).shift(-e));
        }
        let (sa, a) = self.split_unit_power();
        let (sd, dd) = d.split_unit_power();
        let (quo, rem) = upoly::divrem(&to_dense(&a), &to_dense(&dd));
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(from_dense(&quo).shift(sa - sd))
    }

    /// Greatest common divisor up to units of `Q[q, q^-1]`.
    ///
    /// The result is an ordinary polynomial with nonzero constant term,
    /// integer coefficients of content one and positive leading coefficient.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.normalized_associate();
        }
        if other.is_zero() {
            return self.normalized_associate();
        }
        if self.is_monomial() || other.is_monomial() {
            return Self::one();
        }
        let a = self.split_unit_power().1;
        let b = other.split_unit_power().1;
        let g = upoly::gcd(&primitive_int(&a), &primitive_int(&b));
        from_int_dense(&g)
    }

    /// The associate of `self` with units stripped: ordinary, nonzero
    /// constant term, integer coefficients of content one, positive leading
    /// coefficient.
    pub fn normalized_associate(&self) -> LaurentPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let (_, p) = self.split_unit_power();
        from_int_dense(&primitive_int(&p))
    }

    /// Rational number `c` such that `self / c` has coprime integer
    /// coefficients with a positive leading coefficient.
    pub fn rational_content(&self) -> BigRat {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return BigRat::one();
        }
        let mut content = BigRat::new(num, den);
        if self.leading_coeff().map_or(false, |c| c.is_negative()) {
            content = -content;
        }
        content
    }

    fn add_impl(&self, other: &LaurentPoly, negate: bool) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some((ea, _)), Some((eb, _))) => ea.cmp(eb),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (e, c) = &b[j];
                    out.push((*e, if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentPoly { terms: out }
    }

    fn mul_impl(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return other.scale(c).shift(*e);
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return self.scale(c).shift(*e);
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.max_exp().unwrap() + other.max_exp().unwrap();
        let mut acc: Vec<Option<BigRat>> = vec![None; (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let slot = &mut acc[(ea + eb - lo) as usize];
                let prod = ca * cb;
                match slot {
                    Some(x) => *x += prod,
                    None => *slot = Some(prod),
                }
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter_map(|(k, c)| c.filter(|c| !c.is_zero()).map(|c| (lo + k as i64, c)))
            .collect();
        LaurentPoly { terms }
    }
}

pub(crate) fn pow_rat(t: &BigRat, e: i64) -> BigRat {
    let base = if e < 0 { t.recip() } else { t.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// Dense ascending coefficients of an ordinary polynomial.
fn to_dense(p: &LaurentPoly) -> Vec<BigRat> {
    debug_assert!(p.is_ordinary());
    let deg = p.max_exp().unwrap_or(0) as usize;
    let mut v = vec![BigRat::zero(); deg + 1];
    for (e, c) in &p.terms {
        v[*e as usize] = c.clone();
    }
    v
}

fn from_dense(v: &[BigRat]) -> LaurentPoly {
    LaurentPoly::from_terms(v.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
}

fn from_int_dense(v: &[BigInt]) -> LaurentPoly {
    LaurentPoly::from_terms(
        v.iter()
            .enumerate()
            .map(|(i, c)| (i as i64, BigRat::from_integer(c.clone()))),
    )
}

/// Primitive integer polynomial proportional to an ordinary `p`.
fn primitive_int(p: &LaurentPoly) -> Vec<BigInt> {
    let content = p.rational_content();
    let deg = p.max_exp().unwrap_or(0) as usize;
    let mut v = vec![BigInt::zero(); deg + 1];
    for (e, c) in &p.terms {
        let x = c / &content;
        debug_assert!(x.is_integer());
        v[*e as usize] = x.to_integer();
    }
    v
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                let f: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly = $body;
                f(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::from_int(c)
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending exponent order, e.g. `q - q^-1` or `3/2*q^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let qpart = match *e {
                0 => None,
                1 => Some("q".to_string()),
                k => Some(format!("q^{}", k)),
            };
            match qpart {
                None => write!(f, "{}", mag)?,
                Some(qs) if mag.is_one() => write!(f, "{}", qs)?,
                Some(qs) => write!(f, "{}*{}", mag, qs)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}
