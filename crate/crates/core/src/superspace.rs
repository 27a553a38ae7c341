//! The graded space `V = V_even + V_odd`, the word basis of `V^{(x) r}` and
//! lifting of two-site operators to tensor positions.
//!
//! Basis vectors are numbered `1..=m+n`; the first `m` are even. A basis
//! tensor `v_{k_1} (x) ... (x) v_{k_r}` is encoded base `m+n` with position 1
//! most significant.

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{Mat, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuperspaceError {
    #[error("graded space must have m + n >= 1")]
    Empty,
    #[error("basis index {k} outside 1..={max}")]
    IndexOutOfRange { k: usize, max: usize },
    #[error("word {0:?} is not a valid multi-index")]
    BadWord(Vec<usize>),
    #[error("linear index {idx} outside 0..{len}")]
    LinearIndexOutOfRange { idx: usize, len: usize },
    #[error("position {i} invalid for tensor power {r}")]
    PositionOutOfRange { i: usize, r: usize },
    #[error("two-site operator must be {expected}x{expected}")]
    BadLocalOperator { expected: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SuperDims {
    m: usize,
    n: usize,
}

impl SuperDims {
    pub fn new(m: usize, n: usize) -> Result<Self, SuperspaceError> {
        if m + n == 0 {
            return Err(SuperspaceError::Empty);
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `m + n`.
    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// `(m + n)^r`.
    pub fn tensor_dim(&self, r: usize) -> usize {
        self.dim().pow(r as u32)
    }

    /// Parity `|v_k|` of basis vector `k` (1-based).
    pub fn degree(&self, k: usize) -> Result<u8, SuperspaceError> {
        if k == 0 || k > self.dim() {
            return Err(SuperspaceError::IndexOutOfRange { k, max: self.dim() });
        }
        Ok(self.parity(k))
    }

    /// Unchecked parity; `k` must be in range.
    pub(crate) fn parity(&self, k: usize) -> u8 {
        u8::from(k > self.m)
    }

    /// `(-1)^{|v_k| |v_l|}`.
    pub(crate) fn swap_sign(&self, k: usize, l: usize) -> i64 {
        if self.parity(k) * self.parity(l) == 1 {
            -1
        } else {
            1
        }
    }
}

/// Word `(k_1, ..., k_r)` naming a basis tensor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(word: Vec<usize>, dims: SuperDims) -> Result<Self, SuperspaceError> {
        if word.iter().any(|&k| k == 0 || k > dims.dim()) {
            return Err(SuperspaceError::BadWord(word));
        }
        Ok(Self(word))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn encode(w: &MultiIndex, dims: SuperDims) -> Result<usize, SuperspaceError> {
    let d = dims.dim();
    w.0.iter().try_fold(0usize, |acc, &k| {
        if k == 0 || k > d {
            Err(SuperspaceError::BadWord(w.0.clone()))
        } else {
            Ok(acc * d + (k - 1))
        }
    })
}

pub fn decode(idx: usize, r: usize, dims: SuperDims) -> Result<MultiIndex, SuperspaceError> {
    let d = dims.dim();
    let len = dims.tensor_dim(r);
    if idx >= len {
        return Err(SuperspaceError::LinearIndexOutOfRange { idx, len });
    }
    let mut word = vec![0; r];
    let mut x = idx;
    for slot in word.iter_mut().rev() {
        *slot = x % d + 1;
        x /= d;
    }
    Ok(MultiIndex(word))
}

/// `Id^{(x) i-1} (x) op2 (x) Id^{(x) r-i-1}`: `op2` acting on positions
/// `i, i+1` (1-based) of `V^{(x) r}`.
pub fn lift_at<T: Scalar>(
    op2: &Mat<T>,
    i: usize,
    r: usize,
    dims: SuperDims,
) -> Result<Mat<T>, SuperspaceError> {
    let d = dims.dim();
    if op2.rows() != d * d || op2.cols() != d * d {
        return Err(SuperspaceError::BadLocalOperator { expected: d * d });
    }
    if i == 0 || i + 1 > r {
        return Err(SuperspaceError::PositionOutOfRange { i, r });
    }
    let inner = d.pow((r - i - 1) as u32);
    let outer = d.pow((i - 1) as u32);
    let local: Vec<Vec<(usize, &T)>> = (0..d * d)
        .map(|x| {
            (0..d * d)
                .filter(|&y| !op2.get(x, y).is_zero())
                .map(|y| (y, op2.get(x, y)))
                .collect()
        })
        .collect();
    let total = dims.tensor_dim(r);
    let mut out = Mat::zeros(total, total);
    for a in 0..outer {
        for (x, row) in local.iter().enumerate() {
            for b in 0..inner {
                let src = (a * d * d + x) * inner + b;
                for &(y, v) in row {
                    out.set(src, (a * d * d + y) * inner + b, v.clone());
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::RatFunc;
    use proptest::prelude::*;

    fn dims(m: usize, n: usize) -> SuperDims {
        SuperDims::new(m, n).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(dims(2, 1).degree(2).unwrap(), 0);
        assert_eq!(dims(2, 1).degree(3).unwrap(), 1);
        for k in 1..=3 {
            assert_eq!(dims(0, 3).degree(k).unwrap(), 1);
        }
        assert!(dims(2, 1).degree(0).is_err());
        assert!(dims(2, 1).degree(4).is_err());
        assert!(SuperDims::new(0, 0).is_err());
    }

    #[test]
    fn degree_splits_at_m() {
        for (m, n) in [(0, 2), (1, 1), (2, 1), (2, 2), (3, 0)] {
            let ds = dims(m, n);
            for k in 1..=m + n {
                assert_eq!(ds.degree(k).unwrap(), u8::from(k > m));
            }
        }
    }

    #[test]
    fn positional_code() {
        let ds = dims(1, 1);
        let enc = |w: Vec<usize>| encode(&MultiIndex::new(w, ds).unwrap(), ds).unwrap();
        assert_eq!(enc(vec![1, 1]), 0);
        assert_eq!(enc(vec![1, 2]), 1);
        assert_eq!(enc(vec![2, 1]), 2);
        assert_eq!(enc(vec![2, 2]), 3);
        assert_eq!(decode(3, 2, ds).unwrap().letters(), &[2, 2]);
        assert!(decode(4, 2, ds).is_err());
        assert!(MultiIndex::new(vec![3], ds).is_err());
    }

    #[test]
    fn encode_decode_bijection() {
        for (m, n) in [(1, 1), (2, 1), (0, 3)] {
            let ds = dims(m, n);
            for r in 0..=4 {
                for idx in 0..ds.tensor_dim(r) {
                    let w = decode(idx, r, ds).unwrap();
                    assert_eq!(encode(&w, ds).unwrap(), idx);
                }
            }
        }
    }

    #[test]
    fn lift_identity_and_r2() {
        let ds = dims(1, 1);
        let id4 = Mat::<RatFunc>::identity(4);
        for (i, r) in [(1, 2), (1, 3), (2, 3), (3, 4)] {
            assert!(lift_at(&id4, i, r, ds).unwrap().is_identity());
        }
        let op = Mat::from_fn(4, 4, |a, b| RatFunc::from_int((a * 4 + b) as i64));
        assert_eq!(lift_at(&op, 1, 2, ds).unwrap(), op);
        assert!(lift_at(&op, 0, 3, ds).is_err());
        assert!(lift_at(&op, 3, 3, ds).is_err());
        assert!(lift_at(&Mat::<RatFunc>::identity(3), 1, 2, ds).is_err());
    }

    #[test]
    fn lift_matches_kronecker() {
        let ds = dims(2, 1);
        let op = Mat::from_fn(9, 9, |a, b| RatFunc::from_int(((a * 7 + b * 3) % 5) as i64 - 2));
        let id3 = Mat::<RatFunc>::identity(3);
        let expect = id3.kron(&op).kron(&id3);
        assert_eq!(lift_at(&op, 2, 4, ds).unwrap(), expect);
    }

    fn small_op() -> impl Strategy<Value = Mat<RatFunc>> {
        prop::collection::vec(-2i64..=2, 16)
            .prop_map(|v| Mat::from_flat(4, 4, v.into_iter().map(RatFunc::from_int).collect()))
    }

    proptest! {
        #[test]
        fn distant_lifts_commute(a in small_op(), b in small_op()) {
            let ds = dims(1, 1);
            let la = lift_at(&a, 1, 4, ds).unwrap();
            let lb = lift_at(&b, 3, 4, ds).unwrap();
            prop_assert!(la.commutator(&lb).unwrap().is_zero());
        }
    }
}
