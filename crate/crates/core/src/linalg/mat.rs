use std::fmt;

use rayon::prelude::*;

use super::{ExactField, LinalgError, Scalar, SparseRow};
use crate::qfield::{BigRat, LaurentPoly, QError, RatFunc};

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zeros(d, d);
        for i in 0..d {
            m.data[i * d + i] = T::one();
        }
        m
    }

    /// Matrix unit with a one at `(i, j)`.
    pub fn unit(d: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(d, d);
        m.set(i, j, T::one());
        m
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let d = entries.len();
        let mut m = Self::zeros(d, d);
        for (i, x) in entries.into_iter().enumerate() {
            m.data[i * d + i] = x;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(LinalgError::Ragged);
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Rebuilds a `rows x cols` matrix from its row-major flattening.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: T) {
        self.data[i * self.cols + j] = x;
    }

    pub fn as_flat(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Nonzero entries of the row-major flattening.
    pub fn flat_sparse(&self) -> SparseRow<T> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k, x.clone()))
            .collect()
    }

    fn row_supports(&self) -> Vec<Vec<usize>> {
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| !self.get(i, j).is_zero()).collect())
            .collect()
    }

    pub fn mul(&self, rhs: &Mat<T>) -> Result<Mat<T>, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let support = rhs.row_supports();
        let n = rhs.cols;
        let rows: Vec<Vec<T>> = (0..self.rows)
            .into_par_iter()
            .map(|i| {
                let mut acc = vec![T::zero(); n];
                for (k, a) in self.row(i).iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for &j in &support[k] {
                        let p = a.mul(rhs.get(k, j));
                        acc[j] = if acc[j].is_zero() { p } else { acc[j].add(&p) };
                    }
                }
                acc
            })
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Product of a non-empty chain of matrices.
    pub fn chain(mats: &[&Mat<T>]) -> Result<Mat<T>, LinalgError> {
        let (first, rest) = mats.split_first().expect("empty product");
        rest.iter().try_fold((*first).clone(), |acc, m| acc.mul(m))
    }

    fn check_same_shape(&self, rhs: &Mat<T>) -> Result<(), LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Mat<T>) -> Result<Mat<T>, LinalgError> {
        self.check_same_shape(rhs)?;
        Ok(self.zip(rhs, |a, b| a.add(b)))
    }

    pub fn sub(&self, rhs: &Mat<T>) -> Result<Mat<T>, LinalgError> {
        self.check_same_shape(rhs)?;
        Ok(self.zip(rhs, |a, b| a.sub(b)))
    }

    fn zip(&self, rhs: &Mat<T>, f: impl Fn(&T, &T) -> T) -> Mat<T> {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Mat<T> {
        self.map(|x| x.mul(c))
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<Mat<U>, E> {
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn transpose(&self) -> Mat<T> {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(k, x)| {
                if k / self.cols == k % self.cols {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &T)> {
        self.data
            .iter()
            .position(|x| !x.is_zero())
            .map(|k| (k / self.cols, k % self.cols, &self.data[k]))
    }

    /// `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Mat<T>) -> Result<Mat<T>, LinalgError> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    /// Kronecker product with `self` as the slow (leading) factor.
    pub fn kron(&self, rhs: &Mat<T>) -> Mat<T> {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    /// `n`-fold Kronecker power; the empty power is the 1x1 identity.
    pub fn kron_pow(&self, n: usize) -> Mat<T> {
        (0..n).fold(Self::identity(1), |acc, _| acc.kron(self))
    }
}

impl Mat<RatFunc> {
    /// Entrywise evaluation at `q = t`.
    pub fn specialize(&self, t: &BigRat) -> Result<Mat<BigRat>, QError> {
        self.try_map(|x| x.specialize(t))
    }

    /// Evaluation at `q = t` of the primitive Laurent multiple of `self`:
    /// denominators are cleared and the gcd of all entries divided out, so
    /// a nonzero matrix never specializes to zero.
    pub fn specialize_primitive(&self, t: &BigRat) -> Result<Mat<BigRat>, QError> {
        if num_traits::Zero::is_zero(t) {
            return Err(QError::ZeroPoint);
        }
        let cleared = RatFunc::clear_row(self.flat_sparse());
        let g = cleared
            .iter()
            .fold(LaurentPoly::zero(), |g, (_, x)| if g.is_zero() { x.normalized_associate() } else { g.gcd(x) });
        let mut out = Mat::zeros(self.rows, self.cols);
        for (k, x) in cleared {
            let x = if g.is_one() { x } else { x.div_exact(&g).unwrap() };
            out.data[k] = x.eval(t)?;
        }
        Ok(out)
    }

    /// Parses the fixture format: a JSON array of rows of entry strings.
    pub fn from_json(s: &str) -> Result<Self, LinalgError> {
        let rows: Vec<Vec<String>> =
            serde_json::from_str(s).map_err(|e| LinalgError::Fixture(e.to_string()))?;
        let parsed = rows
            .into_iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.parse::<RatFunc>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| LinalgError::Fixture(e.to_string()))?;
        Self::from_rows(parsed)
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        serde_json::to_string(&rows).unwrap()
    }
}

impl<T: Scalar> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
