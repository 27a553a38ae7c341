//! Incremental sparse row echelon form.
//!
//! Pivot rows are kept in creation order. A row inserted after pivot `k`
//! has already been cleared at the pivot columns of rows `0..k`, so the
//! stored system is triangular in that order and back-substitution runs in
//! reverse creation order.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{Field, Pivot, Scalar, SparseRow};

const NO_PIVOT: usize = usize::MAX;

struct PivotRow<T> {
    col: usize,
    pos: usize,
    entries: SparseRow<T>,
}

impl<T> PivotRow<T> {
    fn pivot(&self) -> &T {
        &self.entries[self.pos].1
    }
}

pub struct Echelon<T: Pivot> {
    ncols: usize,
    rank_of_col: Vec<usize>,
    rows: Vec<PivotRow<T>>,
}

/// `s * a - t * b` over sorted sparse rows, dropping zeros.
fn combine<T: Scalar>(a: &SparseRow<T>, s: Option<&T>, b: &SparseRow<T>, t: &T) -> SparseRow<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let sa = |x: &T| match s {
        Some(s) => s.mul(x),
        None => x.clone(),
    };
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, sa(&a[i].1)));
            i += 1;
        } else if take_b {
            out.push((b[j].0, t.mul(&b[j].1).neg()));
            j += 1;
        } else {
            let v = sa(&a[i].1).sub(&t.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<T: Pivot> Echelon<T> {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rank_of_col: vec![NO_PIVOT; ncols],
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_cols(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.col)
    }

    /// Residual of `row` after clearing every pivot column; returns whether
    /// a non-unit multiplier was applied.
    fn reduce_inner(&self, mut row: SparseRow<T>) -> (SparseRow<T>, bool) {
        let mut heap: BinaryHeap<Reverse<usize>> = row
            .iter()
            .map(|(c, _)| self.rank_of_col[*c])
            .filter(|&k| k != NO_PIVOT)
            .map(Reverse)
            .collect();
        let mut last = None;
        let mut scaled = false;
        while let Some(Reverse(k)) = heap.pop() {
            if last == Some(k) {
                continue;
            }
            last = Some(k);
            let prow = &self.rows[k];
            let Ok(idx) = row.binary_search_by_key(&prow.col, |(c, _)| *c) else {
                continue;
            };
            let (s, t) = T::cofactors(&row[idx].1, prow.pivot());
            scaled |= s.is_some();
            row = combine(&row, s.as_ref(), &prow.entries, &t);
            for (c, _) in &prow.entries {
                let r = self.rank_of_col[*c];
                if r != NO_PIVOT && r > k {
                    heap.push(Reverse(r));
                }
            }
        }
        (row, scaled)
    }

    /// The row with every pivot column cleared (zero iff `row` lies in the
    /// span of the inserted rows).
    pub fn reduce(&self, row: SparseRow<T>) -> SparseRow<T> {
        self.reduce_inner(row).0
    }

    pub fn contains(&self, row: SparseRow<T>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Inserts `row` (sorted by column, no zeros); returns `true` when it
    /// increased the rank.
    pub fn insert(&mut self, row: SparseRow<T>) -> bool {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        let (mut row, _) = self.reduce_inner(row);
        if row.is_empty() {
            return false;
        }
        let pos = row
            .iter()
            .enumerate()
            .min_by_key(|(_, (c, x))| (x.weight(), *c))
            .map(|(p, _)| p)
            .unwrap();
        T::normalize(&mut row, pos);
        let col = row[pos].0;
        self.rank_of_col[col] = self.rows.len();
        self.rows.push(PivotRow {
            col,
            pos,
            entries: row,
        });
        true
    }

    /// Basis of the right kernel `{x : row . x = 0 for every inserted row}`,
    /// one dense vector per free column.
    pub fn kernel(&self) -> Vec<Vec<T::Frac>> {
        let pivots: Vec<(T::Frac, Vec<(usize, T::Frac)>)> = self
            .rows
            .iter()
            .map(|r| {
                let rest = r
                    .entries
                    .iter()
                    .filter(|(c, _)| *c != r.col)
                    .map(|(c, x)| (*c, x.to_frac()))
                    .collect();
                (r.pivot().to_frac(), rest)
            })
            .collect();
        let free: Vec<usize> = (0..self.ncols)
            .filter(|&c| self.rank_of_col[c] == NO_PIVOT)
            .collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![<T::Frac as Scalar>::zero(); self.ncols];
                x[f] = <T::Frac as Scalar>::one();
                for (k, r) in self.rows.iter().enumerate().rev() {
                    let (p, rest) = &pivots[k];
                    let mut acc = <T::Frac as Scalar>::zero();
                    for (c, a) in rest {
                        if !x[*c].is_zero() {
                            acc = acc.add(&a.mul(&x[*c]));
                        }
                    }
                    if !acc.is_zero() {
                        x[r.col] = acc.neg().div(p);
                    }
                }
                x
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::{BigRat, LaurentPoly};

    fn r(x: i64) -> BigRat {
        BigRat::from_integer(x.into())
    }

    fn row(v: &[i64]) -> SparseRow<BigRat> {
        v.iter()
            .enumerate()
            .filter(|(_, x)| **x != 0)
            .map(|(c, x)| (c, r(*x)))
            .collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert(row(&[1, 2, 3])));
        assert!(e.insert(row(&[0, 1, 1])));
        assert!(!e.insert(row(&[2, 5, 7])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(row(&[1, 3, 4])));
        assert!(!e.contains(row(&[0, 0, 1])));
    }

    #[test]
    fn kernel_vectors_annihilate_rows() {
        let rows = [row(&[1, 2, 3, 4]), row(&[2, 4, 7, 9])];
        let mut e = Echelon::new(4);
        for r0 in &rows {
            e.insert(r0.clone());
        }
        let k = e.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            for r0 in &rows {
                let dot: BigRat = r0.iter().map(|(c, a)| a * &v[*c]).sum();
                assert_eq!(dot, r(0));
            }
        }
    }

    #[test]
    fn laurent_elimination_with_non_unit_pivots() {
        let lp = |t: &[(i64, i64)]| {
            LaurentPoly::from_terms(t.iter().map(|&(e, c)| (e, r(c))))
        };
        // [q+1, q^2-1] and [q-1, q^2-2q+1]: second row is (q-1)/(q+1) * first
        let a = vec![(0, lp(&[(1, 1), (0, 1)])), (1, lp(&[(2, 1), (0, -1)]))];
        let b = vec![(0, lp(&[(1, 1), (0, -1)])), (1, lp(&[(2, 1), (1, -2), (0, 1)]))];
        let mut e = Echelon::new(2);
        assert!(e.insert(a));
        assert!(!e.insert(b));
        assert!(e.insert(vec![(1, lp(&[(0, 1)]))]));
        assert_eq!(e.rank(), 2);
    }
}
