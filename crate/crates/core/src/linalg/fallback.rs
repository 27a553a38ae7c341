//! Dimension computation with a size cap on exact `Q(q)` elimination.
//!
//! Above the cap, ranks are taken at a few pseudo-random rational values of
//! `q` drawn from a seeded stream. A specialized rank never exceeds the rank
//! over `Q(q)`, so the maximum over the probes is a lower bound that is
//! attained for all but finitely many points; results from this path are
//! flagged as probabilistic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{algebra_closure, commutant_dim, LinalgError, Mat};
use crate::qfield::{BigRat, RatFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPolicy {
    /// Largest matrix size `d` handled by exact `Q(q)` elimination.
    pub exact_threshold: usize,
    /// Number of specialization points used above the threshold.
    pub probes: usize,
    pub seed: u64,
    pub allow_fallback: bool,
}

impl Default for ExactPolicy {
    fn default() -> Self {
        Self {
            exact_threshold: 32,
            probes: 3,
            seed: 0,
            allow_fallback: true,
        }
    }
}

impl ExactPolicy {
    /// Whether matrices of size `d` go through exact elimination; errors
    /// when they may not and fallback is disabled.
    pub fn use_exact(&self, d: usize) -> Result<bool, LinalgError> {
        if d <= self.exact_threshold {
            Ok(true)
        } else if self.allow_fallback {
            Ok(false)
        } else {
            Err(LinalgError::ResourceLimit {
                d,
                threshold: self.exact_threshold,
            })
        }
    }

    pub fn points(&self) -> Vec<BigRat> {
        probe_points(self.seed, self.probes)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dimension {
    pub value: usize,
    pub probabilistic: bool,
}

/// `k` distinct rationals outside `{0, 1, -1}`, deterministic in `seed`.
pub fn probe_points(seed: u64, k: usize) -> Vec<BigRat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<BigRat> = Vec::with_capacity(k);
    while out.len() < k {
        let num: i64 = rng.gen_range(2..=60);
        let den: i64 = rng.gen_range(1..=17);
        let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
        let t = BigRat::new((sign * num).into(), den.into());
        let one = BigRat::from_integer(1.into());
        if t == one || t == -one.clone() || out.contains(&t) {
            continue;
        }
        out.push(t);
    }
    out
}

fn specialize_all(gens: &[Mat<RatFunc>], t: &BigRat) -> Option<Vec<Mat<BigRat>>> {
    gens.iter().map(|g| g.specialize(t).ok()).collect()
}

/// Dimension of the unital algebra generated by `gens`.
pub fn closure_dim(
    gens: &[Mat<RatFunc>],
    d: usize,
    policy: &ExactPolicy,
) -> Result<Dimension, LinalgError> {
    if policy.use_exact(d)? {
        return Ok(Dimension {
            value: algebra_closure(gens, d)?.dim,
            probabilistic: false,
        });
    }
    let mut best = 0;
    for t in policy.points() {
        if let Some(sg) = specialize_all(gens, &t) {
            best = best.max(algebra_closure(&sg, d)?.dim);
        }
    }
    Ok(Dimension {
        value: best,
        probabilistic: true,
    })
}

/// Dimension of the commutant of `gens`.
pub fn commutant_dimension(
    gens: &[Mat<RatFunc>],
    d: usize,
    policy: &ExactPolicy,
) -> Result<Dimension, LinalgError> {
    if policy.use_exact(d)? {
        return Ok(Dimension {
            value: commutant_dim(gens, d)?,
            probabilistic: false,
        });
    }
    let mut best = d * d;
    for t in policy.points() {
        if let Some(sg) = specialize_all(gens, &t) {
            best = best.min(commutant_dim(&sg, d)?);
        }
    }
    Ok(Dimension {
        value: best,
        probabilistic: true,
    })
}
