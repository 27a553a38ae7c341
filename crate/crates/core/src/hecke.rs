//! The sign q-permutation representation of the type-A Hecke algebra.
//!
//! `T` is a right operator on `V (x) V`: its matrix has rows indexed by the
//! input basis tensor, so `(row vector) * T` applies it and a word
//! `T_{i_1} ... T_{i_k}` is the matrix product in the same order.

use std::collections::{HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use thiserror::Error;

use crate::linalg::{LinalgError, Mat};
use crate::qfield::{BigRat, RatFunc};
use crate::report::{RelationCheck, RelationReport};
use crate::superspace::{lift_at, SuperDims, SuperspaceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("tensor power must be at least 1")]
    ZeroPower,
    #[error("generator index {i} outside 1..{r} (r = {r})")]
    GeneratorOutOfRange { i: usize, r: usize },
    #[error(transparent)]
    Superspace(#[from] SuperspaceError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeckeParams {
    pub dims: SuperDims,
    pub r: usize,
}

impl HeckeParams {
    pub fn new(dims: SuperDims, r: usize) -> Result<Self, HeckeError> {
        if r == 0 {
            return Err(HeckeError::ZeroPower);
        }
        Ok(Self { dims, r })
    }

    pub fn tensor_dim(&self) -> usize {
        self.dims.tensor_dim(self.r)
    }

    fn check_generator(&self, i: usize) -> Result<(), HeckeError> {
        if i == 0 || i >= self.r {
            Err(HeckeError::GeneratorOutOfRange { i, r: self.r })
        } else {
            Ok(())
        }
    }
}

/// Matrix of `T` on `V (x) V`.
///
/// On `v_k (x) v_l`:
/// - `k = l`: `((-1)^{|v_k|} (q + q^-1) + q - q^-1) / 2` times itself,
/// - `k < l`: `(-1)^{|v_k||v_l|} v_l (x) v_k + (q - q^-1) v_k (x) v_l`,
/// - `k > l`: `(-1)^{|v_k||v_l|} v_l (x) v_k`.
pub fn build_t(dims: SuperDims) -> Mat<RatFunc> {
    let d = dims.dim();
    let q = RatFunc::q_pow(1);
    let q_inv = RatFunc::q_pow(-1);
    let q_plus = &q + &q_inv;
    let q_minus = &q - &q_inv;
    let half = RatFunc::from_rat(BigRat::new(1.into(), 2.into()));
    let mut t = Mat::zeros(d * d, d * d);
    let idx = |k: usize, l: usize| (k - 1) * d + (l - 1);
    for k in 1..=d {
        for l in 1..=d {
            let src = idx(k, l);
            if k == l {
                let signed = if dims.parity(k) == 1 { -&q_plus } else { q_plus.clone() };
                t.set(src, src, &(&signed + &q_minus) * &half);
                continue;
            }
            t.set(src, idx(l, k), RatFunc::from_int(dims.swap_sign(k, l)));
            if k < l {
                t.set(src, src, q_minus.clone());
            }
        }
    }
    t
}

/// `pi_r(T_i)` for `1 <= i <= r - 1`.
pub fn pi_t(i: usize, p: &HeckeParams) -> Result<Mat<RatFunc>, HeckeError> {
    p.check_generator(i)?;
    Ok(lift_at(&build_t(p.dims), i, p.r, p.dims)?)
}

/// All generator images `pi_r(T_1), ..., pi_r(T_{r-1})`.
pub fn generators(p: &HeckeParams) -> Result<Vec<Mat<RatFunc>>, HeckeError> {
    let t = build_t(p.dims);
    (1..p.r)
        .map(|i| Ok(lift_at(&t, i, p.r, p.dims)?))
        .collect()
}

/// `q pi_r(T_i)`, the generators of the presentation with parameter `q^2`.
pub fn bar_presentation(i: usize, p: &HeckeParams) -> Result<Mat<RatFunc>, HeckeError> {
    Ok(pi_t(i, p)?.scale(&RatFunc::q_pow(1)))
}

/// `pi_r(T_{i_1}) ... pi_r(T_{i_k})`; the empty word gives the identity.
pub fn t_element(word: &[usize], p: &HeckeParams) -> Result<Mat<RatFunc>, HeckeError> {
    let gens = generators(p)?;
    let mut acc = Mat::identity(p.tensor_dim());
    for &i in word {
        p.check_generator(i)?;
        acc = acc.mul(&gens[i - 1])?;
    }
    Ok(acc)
}

/// Residuals of the quadratic, braid and far-commutation relations with
/// generic quadratic coefficient `a`, constant `b` and generator list.
fn relation_suite(
    gens: &[Mat<RatFunc>],
    a: &RatFunc,
    b: &RatFunc,
) -> Result<RelationReport, LinalgError> {
    let d = gens.first().map_or(0, Mat::rows);
    let id = Mat::identity(d);
    let n = gens.len();
    let mut jobs: Vec<(&str, Vec<usize>)> = (1..=n).map(|i| ("quadratic", vec![i])).collect();
    jobs.extend((1..n).map(|i| ("braid", vec![i, i + 1])));
    for i in 1..=n {
        for j in i + 2..=n {
            jobs.push(("far_commutation", vec![i, j]));
        }
    }
    let checks = jobs
        .into_par_iter()
        .map(|(name, idx)| {
            let g = |k: usize| &gens[idx[k] - 1];
            let residual = match name {
                "quadratic" => {
                    let sq = g(0).mul(g(0))?;
                    sq.sub(&g(0).scale(a))?.sub(&id.scale(b))?
                }
                "braid" => {
                    let lhs = Mat::chain(&[g(0), g(1), g(0)])?;
                    let rhs = Mat::chain(&[g(1), g(0), g(1)])?;
                    lhs.sub(&rhs)?
                }
                _ => g(0).commutator(g(1))?,
            };
            Ok(RelationCheck::from_residual(name, idx, &residual))
        })
        .collect::<Result<Vec<_>, LinalgError>>()?;
    Ok(RelationReport { checks })
}

/// Exact residuals of `T_i^2 = (q - q^-1) T_i + 1`, the braid relation and
/// far commutation on `V^{(x) r}`.
pub fn check_hecke_relations(p: &HeckeParams) -> Result<RelationReport, HeckeError> {
    let gens = generators(p)?;
    Ok(relation_suite(&gens, &RatFunc::q_minus_q_inv(), &RatFunc::one())?)
}

/// Same suite for `q T_i`, whose quadratic relation reads
/// `X^2 = (q^2 - 1) X + q^2`.
pub fn check_bar_relations(p: &HeckeParams) -> Result<RelationReport, HeckeError> {
    let gens = (1..p.r)
        .map(|i| bar_presentation(i, p))
        .collect::<Result<Vec<_>, _>>()?;
    let q2 = RatFunc::q_pow(2);
    Ok(relation_suite(&gens, &(&q2 - &RatFunc::one()), &q2)?)
}

/// A permutation of `0..r` in one-line notation.
pub type Perm = Vec<usize>;

/// One-line notation of `s_{i_1} ... s_{i_k}` acting by position swaps.
pub fn word_to_perm(word: &[usize], r: usize) -> Perm {
    let mut p: Perm = (0..r).collect();
    for &i in word {
        p.swap(i - 1, i);
    }
    p
}

pub fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

/// Words reachable from `word` by one braid move `i,i+1,i <-> i+1,i,i+1`
/// or one commutation `i,j <-> j,i` with `|i - j| > 1`.
fn moves(word: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[k], word[k + 1]);
        if a.abs_diff(b) > 1 {
            let mut w = word.to_vec();
            w.swap(k, k + 1);
            out.push(w);
        }
        if k + 2 < word.len() && word[k + 2] == a && a.abs_diff(b) == 1 {
            let mut w = word.to_vec();
            w[k] = b;
            w[k + 1] = a;
            w[k + 2] = b;
            out.push(w);
        }
    }
    out
}

/// Every permutation of `r` letters with all of its reduced words.
///
/// One reduced word per permutation comes from breadth-first search on the
/// Cayley graph; the rest are found by closing under braid and commutation
/// moves, which connect all reduced words of an element.
pub fn reduced_words(r: usize) -> Vec<(Perm, Vec<Vec<usize>>)> {
    let id: Perm = (0..r).collect();
    let mut first: HashMap<Perm, Vec<usize>> = HashMap::from([(id.clone(), vec![])]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        let w = first[&p].clone();
        for i in 1..r {
            let mut np = p.clone();
            np.swap(i - 1, i);
            if !first.contains_key(&np) {
                let mut nw = w.clone();
                nw.push(i);
                first.insert(np.clone(), nw);
                order.push(np.clone());
                queue.push_back(np);
            }
        }
    }
    order
        .into_iter()
        .map(|p| {
            let start = first[&p].clone();
            let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
            let mut q = VecDeque::from([start]);
            while let Some(w) = q.pop_front() {
                for nw in moves(&w) {
                    if seen.insert(nw.clone()) {
                        q.push_back(nw);
                    }
                }
            }
            let mut words: Vec<Vec<usize>> = seen.into_iter().collect();
            words.sort();
            (p, words)
        })
        .collect()
}
