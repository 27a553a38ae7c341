//! Root datum of `gl(m,n)`, the vector representation of the quantum
//! superalgebra with the involution `sigma`, and its tensor powers.
//!
//! Superalgebra operators act on the left, so their matrices use the column
//! convention: entry `(out, in)` is the coefficient of basis tensor `out` in
//! the image of basis tensor `in`.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{LinalgError, Mat};
use crate::qfield::RatFunc;
use crate::report::{RelationCheck, RelationReport};
use crate::superspace::{SuperDims, SuperspaceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QsuperError {
    #[error("simple root index {i} outside 1..={max}")]
    RootIndex { i: usize, max: usize },
    #[error("dual weight has {got} coordinates, expected {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("tensor power must be at least 1")]
    ZeroPower,
    #[error(transparent)]
    Superspace(#[from] SuperspaceError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Element of the dual weight lattice, written in the basis `eps_b^*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DualWeight(Vec<i64>);

impl DualWeight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(len: usize) -> Self {
        Self(vec![0; len])
    }

    /// `sign * eps_b^*` (1-based `b`).
    pub fn basis(len: usize, b: usize, sign: i64) -> Self {
        let mut c = vec![0; len];
        c[b - 1] = sign;
        Self(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `eps_j(h)` for 1-based `j`.
    pub fn eps(&self, j: usize) -> i64 {
        self.0[j - 1]
    }

    /// `<h, alpha_i>` with `alpha_i = eps_i - eps_{i+1}`.
    pub fn on_simple_root(&self, i: usize) -> i64 {
        self.eps(i) - self.eps(i + 1)
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    pub fn plus(&self, other: &DualWeight) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootDatum {
    dims: SuperDims,
    parity: Vec<u8>,
    ell: Vec<i64>,
    coroots: Vec<DualWeight>,
}

/// Root datum for `gl(m,n)`. The odd simple root is `alpha_m` when both
/// `m` and `n` are positive; otherwise every simple root is even.
pub fn build_root_datum(dims: SuperDims) -> RootDatum {
    let (m, len) = (dims.m(), dims.dim());
    let rank = len - 1;
    let mut parity = Vec::with_capacity(rank);
    let mut ell = Vec::with_capacity(rank);
    let mut coroots = Vec::with_capacity(rank);
    for i in 1..=rank {
        let odd = i == m;
        parity.push(u8::from(odd));
        ell.push(if i <= m { 1 } else { -1 });
        let mut h = DualWeight::basis(len, i, 1);
        h.0[i] = if odd { 1 } else { -1 };
        coroots.push(h);
    }
    RootDatum {
        dims,
        parity,
        ell,
        coroots,
    }
}

impl RootDatum {
    pub fn dims(&self) -> SuperDims {
        self.dims
    }

    /// Size of the index set `I = {1, ..., m+n-1}`.
    pub fn rank(&self) -> usize {
        self.parity.len()
    }

    fn check(&self, i: usize) -> Result<(), QsuperError> {
        if i == 0 || i > self.rank() {
            Err(QsuperError::RootIndex { i, max: self.rank() })
        } else {
            Ok(())
        }
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i - 1]
    }

    pub fn ell(&self, i: usize) -> i64 {
        self.ell[i - 1]
    }

    pub fn coroot(&self, i: usize) -> &DualWeight {
        &self.coroots[i - 1]
    }

    /// `<h_i, alpha_j>`.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.coroot(i).on_simple_root(j)
    }

    /// `(alpha_i, alpha_j)` for the form with `(eps_a, eps_a) = +1` on even
    /// `a` and `-1` on odd `a`.
    pub fn form(&self, i: usize, j: usize) -> i64 {
        let sign = |a: usize| if self.dims.parity(a) == 0 { 1 } else { -1 };
        let eps_dot = |a: usize, b: usize| if a == b { sign(a) } else { 0 };
        eps_dot(i, j) - eps_dot(i, j + 1) - eps_dot(i + 1, j) + eps_dot(i + 1, j + 1)
    }

    /// `l_i h_i`.
    pub fn scaled_coroot(&self, i: usize) -> DualWeight {
        self.coroot(i).scaled(self.ell(i))
    }
}

/// Generators whose images are built; `QPow(h)` stands for `q^h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuperGen {
    Sigma,
    QPow(DualWeight),
    E(usize),
    F(usize),
}

/// `q^{±eps_b^*}` for `b = 1..=m+n`, in the order `+eps_1, -eps_1, +eps_2, ...`.
pub fn generating_weights(dims: SuperDims) -> Vec<DualWeight> {
    let len = dims.dim();
    (1..=len)
        .flat_map(|b| [DualWeight::basis(len, b, 1), DualWeight::basis(len, b, -1)])
        .collect()
}

fn signed_q_pow(sign: i64, exp: i64) -> RatFunc {
    let x = RatFunc::q_pow(exp);
    if sign < 0 {
        -x
    } else {
        x
    }
}

fn check_gen(g: &SuperGen, datum: &RootDatum) -> Result<(), QsuperError> {
    match g {
        SuperGen::Sigma => Ok(()),
        SuperGen::QPow(h) if h.0.len() != datum.dims.dim() => Err(QsuperError::WeightLength {
            expected: datum.dims.dim(),
            got: h.0.len(),
        }),
        SuperGen::QPow(_) => Ok(()),
        SuperGen::E(i) | SuperGen::F(i) => datum.check(*i),
    }
}

/// Image of a generator on `V` itself.
pub fn rho_gen(g: &SuperGen, dims: SuperDims) -> Result<Mat<RatFunc>, QsuperError> {
    rho_r(g, 1, dims)
}

/// Image of a generator on `V^{(x) r}`.
///
/// `sigma` and `q^h` act diagonally by the product of their one-site
/// eigenvalues. `e_i` is summed over the position `k` it acts at, with
/// `sigma^{p(i)}` on positions before `k` and `q^{-l_i h_i}` after; `f_i`
/// has `sigma^{p(i)} q^{l_i h_i}` before `k` and the identity after.
pub fn rho_r(g: &SuperGen, r: usize, dims: SuperDims) -> Result<Mat<RatFunc>, QsuperError> {
    if r == 0 {
        return Err(QsuperError::ZeroPower);
    }
    let datum = build_root_datum(dims);
    check_gen(g, &datum)?;
    let d = dims.dim();
    let total = dims.tensor_dim(r);
    let words: Vec<Vec<usize>> = (0..total)
        .map(|idx| {
            let mut w = vec![0; r];
            let mut x = idx;
            for slot in w.iter_mut().rev() {
                *slot = x % d + 1;
                x /= d;
            }
            w
        })
        .collect();
    let place = |k: usize| d.pow((r - 1 - k) as u32);
    let odd = |letter: usize| dims.parity(letter) == 1;
    let mut out = Mat::zeros(total, total);
    match g {
        SuperGen::Sigma => {
            for (idx, w) in words.iter().enumerate() {
                let odd_count = w.iter().filter(|&&a| odd(a)).count() as i64;
                out.set(idx, idx, RatFunc::from_int(if odd_count % 2 == 0 { 1 } else { -1 }));
            }
        }
        SuperGen::QPow(h) => {
            for (idx, w) in words.iter().enumerate() {
                let exp: i64 = w.iter().map(|&a| h.eps(a)).sum();
                out.set(idx, idx, RatFunc::q_pow(exp));
            }
        }
        SuperGen::E(i) | SuperGen::F(i) => {
            let i = *i;
            let raising = matches!(g, SuperGen::E(_));
            let p = datum.parity(i);
            let lh = datum.scaled_coroot(i);
            let (from, to) = if raising { (i + 1, i) } else { (i, i + 1) };
            for (idx, w) in words.iter().enumerate() {
                for k in 0..r {
                    if w[k] != from {
                        continue;
                    }
                    let mut sign = 1;
                    let mut exp = 0;
                    for &a in &w[..k] {
                        if p == 1 && odd(a) {
                            sign = -sign;
                        }
                        if !raising {
                            exp += lh.eps(a);
                        }
                    }
                    if raising {
                        exp -= w[k + 1..].iter().map(|&a| lh.eps(a)).sum::<i64>();
                    }
                    let target = idx - (from - 1) * place(k) + (to - 1) * place(k);
                    out.set(target, idx, signed_q_pow(sign, exp));
                }
            }
        }
    }
    Ok(out)
}

/// Residuals of the defining relations of the quantum superalgebra on
/// `V^{(x) r}`:
///
/// - `q_zero`: `q^0` acts as the identity;
/// - `q_additive`: `q^{h} q^{h'} = q^{h+h'}` on pairs of generating weights;
/// - `q_conj_e` / `q_conj_f`: `q^h e_i q^{-h} = q^{±<h, alpha_i>} e_i`;
/// - `ef_supercommutator`: `e_i f_j - (-1)^{p(i)p(j)} f_j e_i`
///   equals `delta_ij (q^{l_i h_i} - q^{-l_i h_i}) / (q^{l_i} - q^{-l_i})`;
/// - `sigma_square`, `sigma_conj_e`, `sigma_conj_f`: `sigma^2 = 1` and
///   `sigma x sigma = (-1)^{p(x)} x`.
///
/// Indices for weight relations refer to positions (1-based) in
/// [`generating_weights`].
pub fn check_qsuper_relations(dims: SuperDims, r: usize) -> Result<RelationReport, QsuperError> {
    let datum = build_root_datum(dims);
    let rank = datum.rank();
    let len = dims.dim();
    let total = dims.tensor_dim(r);
    let weights = generating_weights(dims);
    let img = |g: SuperGen| rho_r(&g, r, dims);
    let sigma = img(SuperGen::Sigma)?;
    let qw = weights
        .iter()
        .map(|h| img(SuperGen::QPow(h.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let es = (1..=rank).map(|i| img(SuperGen::E(i))).collect::<Result<Vec<_>, _>>()?;
    let fs = (1..=rank).map(|i| img(SuperGen::F(i))).collect::<Result<Vec<_>, _>>()?;
    let id = Mat::identity(total);

    #[derive(Clone, Copy)]
    enum Job {
        Zero,
        Additive(usize, usize),
        ConjE(usize, usize),
        ConjF(usize, usize),
        Ef(usize, usize),
        SigmaSq,
        SigmaE(usize),
        SigmaF(usize),
    }
    let mut jobs = vec![Job::Zero];
    for a in 0..weights.len() {
        for b in 0..weights.len() {
            jobs.push(Job::Additive(a, b));
        }
    }
    for w in 0..weights.len() {
        for i in 0..rank {
            jobs.push(Job::ConjE(w, i));
            jobs.push(Job::ConjF(w, i));
        }
    }
    for i in 0..rank {
        for j in 0..rank {
            jobs.push(Job::Ef(i, j));
        }
    }
    jobs.push(Job::SigmaSq);
    for i in 0..rank {
        jobs.push(Job::SigmaE(i));
        jobs.push(Job::SigmaF(i));
    }

    let run = |job: Job| -> Result<RelationCheck, QsuperError> {
        let check = |name: &str, idx: Vec<usize>, res: Mat<RatFunc>| {
            RelationCheck::from_residual(name, idx, &res)
        };
        Ok(match job {
            Job::Zero => check("q_zero", vec![], img(SuperGen::QPow(DualWeight::zero(len)))?.sub(&id)?),
            Job::Additive(a, b) => {
                let sum = img(SuperGen::QPow(weights[a].plus(&weights[b])))?;
                check("q_additive", vec![a + 1, b + 1], qw[a].mul(&qw[b])?.sub(&sum)?)
            }
            Job::ConjE(w, i) | Job::ConjF(w, i) => {
                let raising = matches!(job, Job::ConjE(..));
                let (x, name, s) = if raising {
                    (&es[i], "q_conj_e", 1)
                } else {
                    (&fs[i], "q_conj_f", -1)
                };
                let factor = RatFunc::q_pow(s * weights[w].on_simple_root(i + 1));
                let lhs = qw[w].mul(x)?;
                let rhs = x.mul(&qw[w])?.scale(&factor);
                check(name, vec![w + 1, i + 1], lhs.sub(&rhs)?)
            }
            Job::Ef(i, j) => {
                let sign = if datum.parity(i + 1) * datum.parity(j + 1) == 1 {
                    RatFunc::from_int(-1)
                } else {
                    RatFunc::one()
                };
                let lhs = es[i].mul(&fs[j])?.sub(&fs[j].mul(&es[i])?.scale(&sign))?;
                let rhs = if i == j {
                    let lh = datum.scaled_coroot(i + 1);
                    let plus = img(SuperGen::QPow(lh.clone()))?;
                    let minus = img(SuperGen::QPow(lh.scaled(-1)))?;
                    let l = datum.ell(i + 1);
                    let den = &RatFunc::q_pow(l) - &RatFunc::q_pow(-l);
                    let inv = den.inv().expect("q^l - q^-l is nonzero");
                    plus.sub(&minus)?.scale(&inv)
                } else {
                    Mat::zeros(total, total)
                };
                check("ef_supercommutator", vec![i + 1, j + 1], lhs.sub(&rhs)?)
            }
            Job::SigmaSq => check("sigma_square", vec![], sigma.mul(&sigma)?.sub(&id)?),
            Job::SigmaE(i) | Job::SigmaF(i) => {
                let (x, name) = if matches!(job, Job::SigmaE(_)) {
                    (&es[i], "sigma_conj_e")
                } else {
                    (&fs[i], "sigma_conj_f")
                };
                let sign = RatFunc::from_int(if datum.parity(i + 1) == 1 { -1 } else { 1 });
                let lhs = Mat::chain(&[&sigma, x, &sigma])?;
                check(name, vec![i + 1], lhs.sub(&x.scale(&sign))?)
            }
        })
    };
    let checks = jobs
        .into_par_iter()
        .map(run)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RelationReport { checks })
}

/// Case tables for `rho_2(e_k)` and `rho_2(f_k)` on `v_i (x) v_j`, written
/// out independently of the tensor construction.
pub fn rho2_table(raising: bool, k: usize, dims: SuperDims) -> Mat<RatFunc> {
    let d = dims.dim();
    let m = dims.m();
    let idx = |i: usize, j: usize| (i - 1) * d + (j - 1);
    let deg = |i: usize| dims.parity(i) as i64;
    let delta = i64::from(k == m);
    let sgn = |e: i64| if e % 2 == 0 { 1 } else { -1 };
    // q^{±(-1)^{|v|}}
    let flip = |s: i64, v: usize| RatFunc::q_pow(s * sgn(deg(v)));
    let mut out: Mat<RatFunc> = Mat::zeros(d * d, d * d);
    let mut put = |target: usize, src: usize, c: RatFunc| {
        let cur = out.get(target, src).clone();
        out.set(target, src, &cur + &c);
    };
    for i in 1..=d {
        for j in 1..=d {
            let src = idx(i, j);
            let odd_sign = RatFunc::from_int(sgn(deg(i) * delta));
            if raising {
                if i == k + 1 {
                    let c = if j == k {
                        flip(-1, j)
                    } else if j == k + 1 {
                        flip(1, j)
                    } else {
                        RatFunc::one()
                    };
                    put(idx(i - 1, j), src, c);
                }
                if j == k + 1 {
                    put(idx(i, j - 1), src, odd_sign);
                }
            } else {
                if i == k {
                    put(idx(i + 1, j), src, RatFunc::one());
                }
                if j == k {
                    let c = if i == k {
                        flip(1, i)
                    } else if i == k + 1 {
                        flip(-1, i)
                    } else {
                        RatFunc::one()
                    };
                    put(idx(i, j + 1), src, &odd_sign * &c);
                }
            }
        }
    }
    out
}

/// Compares `rho_2(e_k)`, `rho_2(f_k)` with [`rho2_table`] for every `k`.
pub fn check_rho2_table(dims: SuperDims) -> Result<RelationReport, QsuperError> {
    let mut checks = Vec::new();
    for k in 1..dims.dim() {
        for (raising, name) in [(true, "rho2_e_table"), (false, "rho2_f_table")] {
            let g = if raising { SuperGen::E(k) } else { SuperGen::F(k) };
            let built = rho_r(&g, 2, dims)?;
            let res = built.sub(&rho2_table(raising, k, dims))?;
            checks.push(RelationCheck::from_residual(name, vec![k], &res));
        }
    }
    Ok(RelationReport { checks })
}
