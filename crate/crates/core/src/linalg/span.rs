use std::collections::VecDeque;

use super::{Echelon, ExactField, LinalgError, Mat, Scalar, SparseRow};

/// Linearly independent family of `d x d` matrices.
#[derive(Clone, Debug)]
pub struct SpanBasis<T: Scalar> {
    pub dim: usize,
    pub basis: Vec<Mat<T>>,
}

impl<T: Scalar> SpanBasis<T> {
    fn from_basis(basis: Vec<Mat<T>>) -> Self {
        Self {
            dim: basis.len(),
            basis,
        }
    }
}

fn check_square<T: Scalar>(gens: &[Mat<T>], d: usize) -> Result<(), LinalgError> {
    for g in gens {
        if g.rows() != d || g.cols() != d {
            return Err(LinalgError::DimensionMismatch {
                left: (d, d),
                right: (g.rows(), g.cols()),
            });
        }
    }
    Ok(())
}

fn flat_row<T: ExactField>(m: &Mat<T>) -> SparseRow<T::Elim> {
    T::clear_row(m.flat_sparse())
}

/// Rank over the field, by sparse fraction-free elimination.
pub fn rank<T: ExactField>(a: &Mat<T>) -> usize {
    let mut ech = Echelon::<T::Elim>::new(a.cols());
    let mut rows: Vec<SparseRow<T::Elim>> = (0..a.rows())
        .map(|i| {
            let r: SparseRow<T> = a
                .row(i)
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (j, x.clone()))
                .collect();
            T::clear_row(r)
        })
        .filter(|r| !r.is_empty())
        .collect();
    rows.sort_by_key(|r| r.len());
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Dimension of the linear span of a family of equally shaped matrices.
pub fn span_dim<T: ExactField>(mats: &[Mat<T>]) -> usize {
    let Some(first) = mats.first() else {
        return 0;
    };
    let mut ech = Echelon::<T::Elim>::new(first.rows() * first.cols());
    mats.iter().filter(|m| ech.insert(flat_row(m))).count()
}

/// Smallest unital subalgebra of `d x d` matrices containing `gens`.
///
/// Seeds the span with the identity and the generators, then multiplies
/// each newly accepted basis element on the right by every generator until
/// nothing new appears.
pub fn algebra_closure<T: ExactField>(
    gens: &[Mat<T>],
    d: usize,
) -> Result<SpanBasis<T>, LinalgError> {
    check_square(gens, d)?;
    let mut ech = Echelon::<T::Elim>::new(d * d);
    let mut basis = Vec::new();
    let mut frontier = VecDeque::new();
    for m in std::iter::once(Mat::identity(d)).chain(gens.iter().cloned()) {
        if ech.insert(flat_row(&m)) {
            basis.push(m.clone());
            frontier.push_back(m);
        }
    }
    while let Some(b) = frontier.pop_front() {
        for g in gens {
            let p = b.mul(g)?;
            if ech.insert(flat_row(&p)) {
                basis.push(p.clone());
                frontier.push_back(p);
            }
        }
    }
    Ok(SpanBasis::from_basis(basis))
}

/// Rows of the homogeneous system `X G - G X = 0`, unknowns `X[a][c]` at
/// index `a * d + c`.
fn commutant_equations<T: ExactField>(gens: &[Mat<T>], d: usize) -> Vec<SparseRow<T::Elim>> {
    let mut out = Vec::new();
    for g in gens {
        let row_support: Vec<Vec<(usize, &T)>> = (0..d)
            .map(|i| {
                (0..d)
                    .filter(|&j| !g.get(i, j).is_zero())
                    .map(|j| (j, g.get(i, j)))
                    .collect()
            })
            .collect();
        let col_support: Vec<Vec<(usize, &T)>> = (0..d)
            .map(|j| {
                (0..d)
                    .filter(|&i| !g.get(i, j).is_zero())
                    .map(|i| (i, g.get(i, j)))
                    .collect()
            })
            .collect();
        for a in 0..d {
            for b in 0..d {
                // sum_c X[a][c] G[c][b] - sum_c G[a][c] X[c][b]
                let mut terms: Vec<(usize, T)> = Vec::new();
                for &(c, x) in &col_support[b] {
                    terms.push((a * d + c, x.clone()));
                }
                for &(c, x) in &row_support[a] {
                    terms.push((c * d + b, x.neg()));
                }
                terms.sort_by_key(|(k, _)| *k);
                let mut merged: SparseRow<T> = Vec::with_capacity(terms.len());
                for (k, x) in terms {
                    match merged.last_mut() {
                        Some((lk, lx)) if *lk == k => *lx = lx.add(&x),
                        _ => merged.push((k, x)),
                    }
                }
                merged.retain(|(_, x)| !x.is_zero());
                if !merged.is_empty() {
                    out.push(T::clear_row(merged));
                }
            }
        }
    }
    out
}

/// Echelon form of the commutant system; its kernel is the commutant.
fn commutant_echelon<T: ExactField>(gens: &[Mat<T>], d: usize) -> Echelon<T::Elim> {
    let mut rows = commutant_equations(gens, d);
    rows.sort_by_key(|r| r.len());
    let mut ech = Echelon::new(d * d);
    for r in rows {
        ech.insert(r);
    }
    ech
}

/// Dimension of `{X : X G = G X for all G in gens}` without building a basis.
pub fn commutant_dim<T: ExactField>(gens: &[Mat<T>], d: usize) -> Result<usize, LinalgError> {
    check_square(gens, d)?;
    Ok(d * d - commutant_echelon(gens, d).rank())
}

/// Basis of `{X : X G = G X for all G in gens}`.
pub fn commutant<T: ExactField>(gens: &[Mat<T>], d: usize) -> Result<SpanBasis<T>, LinalgError> {
    check_square(gens, d)?;
    let ech = commutant_echelon(gens, d);
    let basis = ech
        .kernel()
        .into_iter()
        .map(|v| Mat::from_flat(d, d, v))
        .collect();
    Ok(SpanBasis::from_basis(basis))
}

/// True when every matrix of `a` commutes with every matrix of `b`.
pub fn all_commute<T: Scalar>(a: &[Mat<T>], b: &[Mat<T>]) -> Result<bool, LinalgError> {
    for x in a {
        for y in b {
            if !x.commutator(y)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True when span(`inner`) is contained in span(`outer`).
pub fn span_contains<T: ExactField>(outer: &[Mat<T>], inner: &[Mat<T>]) -> bool {
    let base = span_dim(outer);
    let mut all: Vec<Mat<T>> = outer.to_vec();
    all.extend_from_slice(inner);
    span_dim(&all) == base
}
