//! Dense univariate helpers: long division over Q and a primitive
//! pseudo-remainder gcd over Z. Coefficients are in ascending order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::BigRat;

fn degree<T: Zero>(p: &[T]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// `(quotient, remainder)` of `a / b` over Q. `b` must be nonzero.
pub(crate) fn divrem(a: &[BigRat], b: &[BigRat]) -> (Vec<BigRat>, Vec<BigRat>) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut rem = a.to_vec();
    let da = match degree(&rem) {
        Some(d) if d >= db => d,
        _ => return (vec![BigRat::zero()], rem),
    };
    let lead_inv = b[db].recip();
    let mut quo = vec![BigRat::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate().take(db + 1) {
            if !bi.is_zero() {
                rem[k + i] -= &c * bi;
            }
        }
        quo[k] = c;
    }
    rem.truncate(db.max(1));
    (quo, rem)
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let mut v = p.to_vec();
    if let Some(d) = degree(&v) {
        v.truncate(d + 1);
        let mut c = content(&v);
        if v[d].is_negative() {
            c = -c;
        }
        for x in v.iter_mut() {
            *x = &*x / &c;
        }
    } else {
        v.clear();
    }
    v
}

/// Pseudo-remainder `lc(b)^(da-db+1) a mod b` over Z.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = degree(b).unwrap();
    let mut r = a.to_vec();
    let lb = b[db].clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (i, bi) in b.iter().enumerate().take(db + 1) {
            if !bi.is_zero() {
                r[shift + i] -= &lr * bi;
            }
        }
        debug_assert!(r[dr].is_zero());
        r.truncate(dr);
    }
    r
}

/// Primitive gcd of two integer polynomials (positive leading coefficient).
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.is_empty() {
        return y;
    }
    if y.is_empty() {
        return x;
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![BigInt::from(1)];
        }
        let r = primitive(&prem(&x, &y));
        x = y;
        y = r;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_of_products() {
        // (q+1)(q-2) and (q+1)(2q+3)
        let a = ints(&[-2, -1, 1]);
        let b = ints(&[3, 5, 2]);
        assert_eq!(gcd(&a, &b), ints(&[1, 1]));
    }

    #[test]
    fn coprime_gives_one() {
        assert_eq!(gcd(&ints(&[1, 0, 1]), &ints(&[-1, 1])), ints(&[1]));
    }

    #[test]
    fn divrem_roundtrip() {
        let r = |x: i64| BigRat::from_integer(x.into());
        let a = vec![r(-1), r(0), r(1)];
        let b = vec![r(-1), r(1)];
        let (q, rem) = divrem(&a, &b);
        assert_eq!(q, vec![r(1), r(1)]);
        assert!(rem.iter().all(|c| c.is_zero()));
    }
}
