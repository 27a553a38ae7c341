//! Commutation of the Hecke and superalgebra actions on `V^{(x) r}`, the
//! double centralizer dimensions, hook sums and specialization probes.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::{dimension_identity, DimensionIdentity, ShapeCount};
use crate::hecke::{self, HeckeError, HeckeParams};
use crate::linalg::{
    algebra_closure, all_commute, commutant, commutant_dim, span_dim, ExactField, ExactPolicy,
    LinalgError, Mat,
};
use crate::qfield::{BigRat, QError, RatFunc};
use crate::qsuper::{generating_weights, rho_r, QsuperError, SuperGen};
use crate::report::{RelationCheck, RelationReport};
use crate::superspace::SuperDims;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CentralizerError {
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Qsuper(#[from] QsuperError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Field(#[from] QError),
}

impl CentralizerError {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Self::Linalg(LinalgError::ResourceLimit { .. }))
    }
}

/// `pi_r(T_1), ..., pi_r(T_{r-1})`.
pub fn hecke_generators(dims: SuperDims, r: usize) -> Result<Vec<Mat<RatFunc>>, CentralizerError> {
    Ok(hecke::generators(&HeckeParams::new(dims, r)?)?)
}

/// `rho_r` of `sigma`, `q^{±eps_b^*}` for every `b`, then every `e_i` and `f_i`.
pub fn super_generator_list(dims: SuperDims) -> Vec<SuperGen> {
    let rank = dims.dim() - 1;
    let mut g = vec![SuperGen::Sigma];
    g.extend(generating_weights(dims).into_iter().map(SuperGen::QPow));
    g.extend((1..=rank).map(SuperGen::E));
    g.extend((1..=rank).map(SuperGen::F));
    g
}

pub fn super_generators(dims: SuperDims, r: usize) -> Result<Vec<Mat<RatFunc>>, CentralizerError> {
    super_generator_list(dims)
        .iter()
        .map(|g| Ok(rho_r(g, r, dims)?))
        .collect()
}

/// Commutator of every Hecke generator with every superalgebra generator.
///
/// The Hecke side acts on the right and the superalgebra on the left; every
/// `pi_r(T_i)` is a symmetric matrix, so the plain matrix commutator decides
/// commutation of the two actions. Indices are `[i, k]` with `k` the 1-based
/// position in [`super_generator_list`].
pub fn verify_commutation(dims: SuperDims, r: usize) -> Result<RelationReport, CentralizerError> {
    let hs = hecke_generators(dims, r)?;
    let ss = super_generators(dims, r)?;
    let pairs: Vec<(usize, usize)> = (0..hs.len())
        .flat_map(|i| (0..ss.len()).map(move |k| (i, k)))
        .collect();
    let checks = pairs
        .into_par_iter()
        .map(|(i, k)| {
            let c = hs[i].commutator(&ss[k])?;
            Ok(RelationCheck::from_residual("commutation", vec![i + 1, k + 1], &c))
        })
        .collect::<Result<Vec<_>, LinalgError>>()?;
    Ok(RelationReport { checks })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    /// Each image equals the commutant of the other.
    pub double_centralizer: bool,
    /// The Hecke image has dimension `sum (f^lambda)^2` over hook shapes.
    pub hook_decomposition: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub schema: u32,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub tensor_dim: usize,
    pub dim_hecke_image: usize,
    pub dim_super_image: usize,
    pub dim_commutant_of_hecke: usize,
    pub dim_commutant_of_super: usize,
    pub hook_sum_f2: u128,
    pub hook_sum_d2: u128,
    pub hook_sum_fd: u128,
    /// Each closure basis commutes with the other side's generators.
    pub containment: bool,
    pub probabilistic: bool,
    pub verdicts: Verdicts,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.containment && self.verdicts.double_centralizer && self.verdicts.hook_decomposition
    }
}

/// The four dimensions together with the containment check, over one field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FourDims {
    pub hecke_image: usize,
    pub super_image: usize,
    pub commutant_of_hecke: usize,
    pub commutant_of_super: usize,
}

struct Measured<T: ExactField> {
    dims: FourDims,
    containment: bool,
    commutant_of_hecke: Vec<Mat<T>>,
    commutant_of_super: Vec<Mat<T>>,
}

fn measure<T: ExactField>(
    hs: &[Mat<T>],
    ss: &[Mat<T>],
    d: usize,
    with_bases: bool,
) -> Result<Measured<T>, LinalgError> {
    let (closures, commutants) = rayon::join(
        || -> Result<_, LinalgError> {
            let (s, g) = rayon::join(|| algebra_closure(hs, d), || algebra_closure(ss, d));
            let (s, g) = (s?, g?);
            let containment = all_commute(&s.basis, ss)? && all_commute(&g.basis, hs)?;
            Ok((s.dim, g.dim, containment))
        },
        || -> Result<_, LinalgError> {
            if with_bases {
                let (ch, cs) = rayon::join(|| commutant(hs, d), || commutant(ss, d));
                let (ch, cs) = (ch?, cs?);
                Ok((ch.dim, cs.dim, ch.basis, cs.basis))
            } else {
                let (ch, cs) = rayon::join(|| commutant_dim(hs, d), || commutant_dim(ss, d));
                Ok((ch?, cs?, Vec::new(), Vec::new()))
            }
        },
    );
    let (s, g, containment) = closures?;
    let (ch, cs, bh, bs) = commutants?;
    Ok(Measured {
        dims: FourDims {
            hecke_image: s,
            super_image: g,
            commutant_of_hecke: ch,
            commutant_of_super: cs,
        },
        containment,
        commutant_of_hecke: bh,
        commutant_of_super: bs,
    })
}

fn specialize_all(gens: &[Mat<RatFunc>], t: &BigRat) -> Result<Vec<Mat<BigRat>>, QError> {
    gens.iter().map(|g| g.specialize(t)).collect()
}

/// Exact (or probabilistic) data for one `(m, n, r)`, reusable across
/// reports and specialization points.
pub struct Analysis {
    pub dims: SuperDims,
    pub r: usize,
    pub report: DualityReport,
    pub identity: DimensionIdentity,
    hecke_gens: Vec<Mat<RatFunc>>,
    super_gens: Vec<Mat<RatFunc>>,
    /// Commutant bases over `Q(q)`; present only on the exact path.
    commutant_bases: Option<(Vec<Mat<RatFunc>>, Vec<Mat<RatFunc>>)>,
}

/// Computes closures and commutants of both generator sets.
///
/// At most `policy.exact_threshold` the computation is exact over `Q(q)`.
/// Above it, each quantity is computed at `policy.probes` rational points
/// and combined (largest image, smallest commutant), and the report is
/// flagged probabilistic.
pub fn analyse(dims: SuperDims, r: usize, policy: &ExactPolicy) -> Result<Analysis, CentralizerError> {
    let d = dims.tensor_dim(r);
    let hs = hecke_generators(dims, r)?;
    let ss = super_generators(dims, r)?;
    let exact = policy.use_exact(d)?;
    let (four, containment, bases) = if exact {
        let m = measure(&hs, &ss, d, true)?;
        (m.dims, m.containment, Some((m.commutant_of_hecke, m.commutant_of_super)))
    } else {
        let mut acc: Option<(FourDims, bool)> = None;
        for t in policy.points() {
            let m = measure(&specialize_all(&hs, &t)?, &specialize_all(&ss, &t)?, d, false)?;
            acc = Some(match acc {
                None => (m.dims, m.containment),
                Some((a, c)) => (
                    FourDims {
                        hecke_image: a.hecke_image.max(m.dims.hecke_image),
                        super_image: a.super_image.max(m.dims.super_image),
                        commutant_of_hecke: a.commutant_of_hecke.min(m.dims.commutant_of_hecke),
                        commutant_of_super: a.commutant_of_super.min(m.dims.commutant_of_super),
                    },
                    c && m.containment,
                ),
            });
        }
        let (four, c) = acc.ok_or(LinalgError::ResourceLimit {
            d,
            threshold: policy.exact_threshold,
        })?;
        (four, c, None)
    };
    let identity = dimension_identity(dims.m(), dims.n(), r);
    let report = DualityReport {
        schema: SCHEMA,
        m: dims.m(),
        n: dims.n(),
        r,
        tensor_dim: d,
        dim_hecke_image: four.hecke_image,
        dim_super_image: four.super_image,
        dim_commutant_of_hecke: four.commutant_of_hecke,
        dim_commutant_of_super: four.commutant_of_super,
        hook_sum_f2: identity.sum_f2(),
        hook_sum_d2: identity.sum_d2(),
        hook_sum_fd: identity.sum_fd,
        containment,
        probabilistic: !exact,
        verdicts: Verdicts {
            double_centralizer: four.hecke_image == four.commutant_of_super
                && four.super_image == four.commutant_of_hecke,
            hook_decomposition: four.hecke_image as u128 == identity.sum_f2(),
        },
    };
    Ok(Analysis {
        dims,
        r,
        report,
        identity,
        hecke_gens: hs,
        super_gens: ss,
        commutant_bases: bases,
    })
}

pub fn verify_double_centralizer(
    dims: SuperDims,
    r: usize,
    policy: &ExactPolicy,
) -> Result<DualityReport, CentralizerError> {
    Ok(analyse(dims, r, policy)?.report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookReport {
    pub schema: u32,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub shapes: Vec<ShapeCount>,
    pub hook_sum_f2: u128,
    pub hook_sum_d2: u128,
    pub hook_sum_fd: u128,
    pub tensor_dim: usize,
    pub dim_hecke_image: usize,
    pub dim_super_image: usize,
    pub probabilistic: bool,
    pub hecke_image_matches: bool,
    pub super_image_matches: bool,
    pub tensor_dim_matches: bool,
}

impl HookReport {
    pub fn passed(&self) -> bool {
        self.hecke_image_matches && self.super_image_matches && self.tensor_dim_matches
    }
}

impl Analysis {
    /// Image dimensions against the sums over hook shapes.
    pub fn hook_report(&self) -> HookReport {
        let rep = &self.report;
        HookReport {
            schema: SCHEMA,
            m: rep.m,
            n: rep.n,
            r: rep.r,
            shapes: self.identity.shapes.clone(),
            hook_sum_f2: rep.hook_sum_f2,
            hook_sum_d2: rep.hook_sum_d2,
            hook_sum_fd: rep.hook_sum_fd,
            tensor_dim: rep.tensor_dim,
            dim_hecke_image: rep.dim_hecke_image,
            dim_super_image: rep.dim_super_image,
            probabilistic: rep.probabilistic,
            hecke_image_matches: rep.dim_hecke_image as u128 == rep.hook_sum_f2,
            super_image_matches: rep.dim_super_image as u128 == rep.hook_sum_d2,
            tensor_dim_matches: rep.hook_sum_fd == rep.tensor_dim as u128,
        }
    }

    /// Dimensions after evaluating at `q = t`.
    ///
    /// Images are the algebras generated by the specialized generators.
    /// Specialized commutants are spans of the exact commutant bases, each
    /// element scaled to a primitive Laurent matrix before evaluation; they
    /// need the exact path and are `None` otherwise. The commutants of the
    /// specialized generators are reported as well; these can only grow
    /// under specialization.
    pub fn probe(&self, t: &BigRat) -> Result<SpecializationReport, CentralizerError> {
        if num_traits::Zero::is_zero(t) {
            return Err(QError::ZeroPoint.into());
        }
        let d = self.report.tensor_dim;
        let hs = specialize_all(&self.hecke_gens, t)?;
        let ss = specialize_all(&self.super_gens, t)?;
        let m = measure(&hs, &ss, d, false)?;
        let specialized_commutants = match &self.commutant_bases {
            Some((ch, cs)) => {
                let spec = |b: &[Mat<RatFunc>]| -> Result<usize, QError> {
                    let mats = b
                        .iter()
                        .map(|x| x.specialize_primitive(t))
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(span_dim(&mats))
                };
                Some((spec(ch)?, spec(cs)?))
            }
            None => None,
        };
        let rep = &self.report;
        let exact = FourDims {
            hecke_image: rep.dim_hecke_image,
            super_image: rep.dim_super_image,
            commutant_of_hecke: rep.dim_commutant_of_hecke,
            commutant_of_super: rep.dim_commutant_of_super,
        };
        let specialized = SpecializedDims {
            hecke_image: m.dims.hecke_image,
            super_image: m.dims.super_image,
            commutant_of_hecke: specialized_commutants.map(|c| c.0),
            commutant_of_super: specialized_commutants.map(|c| c.1),
            commutant_of_specialized_hecke: m.dims.commutant_of_hecke,
            commutant_of_specialized_super: m.dims.commutant_of_super,
        };
        let bounded = specialized.hecke_image <= exact.hecke_image
            && specialized.super_image <= exact.super_image
            && specialized
                .commutant_of_hecke
                .map_or(true, |c| c <= exact.commutant_of_hecke)
            && specialized
                .commutant_of_super
                .map_or(true, |c| c <= exact.commutant_of_super)
            && specialized.commutant_of_specialized_hecke >= exact.commutant_of_hecke
            && specialized.commutant_of_specialized_super >= exact.commutant_of_super;
        let generic = specialized.hecke_image == exact.hecke_image
            && specialized.super_image == exact.super_image
            && specialized.commutant_of_hecke.map_or(true, |c| c == exact.commutant_of_hecke)
            && specialized.commutant_of_super.map_or(true, |c| c == exact.commutant_of_super)
            && specialized.commutant_of_specialized_hecke == exact.commutant_of_hecke
            && specialized.commutant_of_specialized_super == exact.commutant_of_super;
        Ok(SpecializationReport {
            schema: SCHEMA,
            m: rep.m,
            n: rep.n,
            r: rep.r,
            t: t.to_string(),
            exact,
            exact_probabilistic: rep.probabilistic,
            specialized,
            bounded,
            generic,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpecializedDims {
    pub hecke_image: usize,
    pub super_image: usize,
    pub commutant_of_hecke: Option<usize>,
    pub commutant_of_super: Option<usize>,
    pub commutant_of_specialized_hecke: usize,
    pub commutant_of_specialized_super: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecializationReport {
    pub schema: u32,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub t: String,
    pub exact: FourDims,
    pub exact_probabilistic: bool,
    pub specialized: SpecializedDims,
    /// Specialized images and specialized commutants are at most the exact
    /// dimensions; commutants of specialized generators are at least them.
    pub bounded: bool,
    /// Every specialized dimension equals its exact counterpart.
    pub generic: bool,
}

pub fn verify_hook_decomposition(
    dims: SuperDims,
    r: usize,
    policy: &ExactPolicy,
) -> Result<HookReport, CentralizerError> {
    Ok(analyse(dims, r, policy)?.hook_report())
}

pub fn specialization_probe(
    dims: SuperDims,
    r: usize,
    t: &BigRat,
    policy: &ExactPolicy,
) -> Result<SpecializationReport, CentralizerError> {
    if num_traits::Zero::is_zero(t) {
        return Err(QError::ZeroPoint.into());
    }
    analyse(dims, r, policy)?.probe(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(m: usize, n: usize) -> SuperDims {
        SuperDims::new(m, n).unwrap()
    }

    fn quad(rep: &DualityReport) -> (usize, usize, usize, usize) {
        (
            rep.dim_hecke_image,
            rep.dim_super_image,
            rep.dim_commutant_of_super,
            rep.dim_commutant_of_hecke,
        )
    }

    fn rat(p: i64, q: i64) -> BigRat {
        BigRat::new(p.into(), q.into())
    }

    #[test]
    fn generator_counts() {
        assert_eq!(hecke_generators(dims(1, 1), 2).unwrap().len(), 1);
        assert_eq!(super_generators(dims(1, 1), 2).unwrap().len(), 7);
        assert!(hecke_generators(dims(1, 1), 1).unwrap().is_empty());
        let g = super_generators(dims(2, 1), 2).unwrap();
        assert_eq!(g.len(), 1 + 6 + 2 + 2);
        assert!(g.iter().all(|x| x.rows() == 9));
    }

    #[test]
    fn commutation_small() {
        assert!(verify_commutation(dims(1, 1), 2).unwrap().passed());
        assert!(verify_commutation(dims(2, 1), 3).unwrap().passed());
    }

    #[test]
    fn commutation_detects_broken_sign() {
        // dropping the odd sign from T breaks commutation with e_1
        let ds = dims(1, 1);
        let mut t = hecke::build_t(ds);
        t.set(3, 3, RatFunc::q_pow(1));
        let e = rho_r(&SuperGen::E(1), 2, ds).unwrap();
        assert!(!t.commutator(&e).unwrap().is_zero());
    }

    #[test]
    fn gl11_duality() {
        let p = ExactPolicy::default();
        let r2 = verify_double_centralizer(dims(1, 1), 2, &p).unwrap();
        assert_eq!(quad(&r2), (2, 8, 2, 8));
        assert!(r2.passed() && !r2.probabilistic);
        let r3 = verify_double_centralizer(dims(1, 1), 3, &p).unwrap();
        assert_eq!(quad(&r3), (6, 12, 6, 12));
        assert!(r3.passed());
    }

    #[test]
    fn r1_images_are_scalars_and_everything() {
        let rep = verify_double_centralizer(dims(1, 1), 1, &ExactPolicy::default()).unwrap();
        assert_eq!(quad(&rep), (1, 4, 1, 4));
        assert!(rep.passed());
    }

    #[test]
    fn classical_degeneration() {
        let rep = verify_double_centralizer(dims(2, 0), 3, &ExactPolicy::default()).unwrap();
        assert_eq!(rep.dim_hecke_image, 5);
        assert_eq!(rep.hook_sum_f2, 5);
        assert!(rep.passed());
        let odd = verify_double_centralizer(dims(0, 1), 2, &ExactPolicy::default()).unwrap();
        assert_eq!(odd.dim_hecke_image, 1);
    }

    #[test]
    fn hook_report() {
        let rep = verify_hook_decomposition(dims(1, 1), 2, &ExactPolicy::default()).unwrap();
        assert_eq!((rep.hook_sum_f2, rep.hook_sum_d2, rep.hook_sum_fd), (2, 8, 4));
        assert!(rep.passed());
    }

    #[test]
    fn fallback_flag_and_limit() {
        let forced = ExactPolicy {
            exact_threshold: 4,
            ..ExactPolicy::default()
        };
        let rep = verify_double_centralizer(dims(1, 1), 3, &forced).unwrap();
        assert!(rep.probabilistic);
        assert_eq!(quad(&rep), (6, 12, 6, 12));
        let strict = ExactPolicy {
            allow_fallback: false,
            ..forced
        };
        let err = verify_double_centralizer(dims(1, 1), 3, &strict).unwrap_err();
        assert!(err.is_resource_limit());
    }

    #[test]
    fn probes() {
        let p = ExactPolicy::default();
        let a = analyse(dims(1, 1), 2, &p).unwrap();
        let at1 = a.probe(&rat(1, 1)).unwrap();
        assert!(at1.bounded);
        assert_eq!(at1.specialized.hecke_image, 2);
        let at2 = a.probe(&rat(2, 1)).unwrap();
        assert!(at2.generic && at2.bounded);
        assert!(a.probe(&rat(0, 1)).is_err());
        let b = analyse(dims(2, 1), 2, &p).unwrap();
        assert!(b.probe(&rat(3, 2)).unwrap().generic);
    }

    #[test]
    fn q_equal_one_loses_cartan_part() {
        // at q = 1 the weight operators become the identity
        let a = analyse(dims(1, 1), 3, &ExactPolicy::default()).unwrap();
        let rep = a.probe(&rat(1, 1)).unwrap();
        assert!(rep.bounded);
        assert!(!rep.generic);
        assert!(rep.specialized.super_image < 12);
        assert!(rep.specialized.commutant_of_specialized_super > 6);
    }

    #[test]
    fn commutant_of_closure_equals_commutant_of_generators() {
        let ds = dims(1, 1);
        let hs = hecke_generators(ds, 3).unwrap();
        let s = algebra_closure(&hs, 8).unwrap();
        assert_eq!(commutant_dim(&s.basis, 8).unwrap(), commutant_dim(&hs, 8).unwrap());
    }

    #[test]
    fn json_fields() {
        let rep = verify_double_centralizer(dims(1, 1), 2, &ExactPolicy::default()).unwrap();
        let v = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["dim_super_image"], 8);
        assert_eq!(v["verdicts"]["double_centralizer"], true);
    }
}
