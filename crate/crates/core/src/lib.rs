//! Exact verification of the Schur-Weyl duality between the quantum
//! superalgebra `U_q^sigma(gl(m,n))` and the type-A Hecke algebra acting on
//! `V^{(x) r}` for a graded space `V` of dimension `m + n`.
//!
//! All operators are matrices over `Q(q)` ([`qfield::RatFunc`]); ranks,
//! algebra closures and commutants are computed by exact elimination
//! ([`linalg`]). The Hecke action is built in [`hecke`], the superalgebra
//! action in [`qsuper`], the combinatorial oracles in [`combinatorics`], and
//! [`centralizer`] ties them together.

pub mod centralizer;
pub mod cli;
pub mod combinatorics;
pub mod hecke;
pub mod linalg;
pub mod qfield;
pub mod qsuper;
pub mod report;
pub mod superspace;

pub use centralizer::{DualityReport, HookReport, SpecializationReport};
pub use linalg::{ExactPolicy, Mat};
pub use qfield::{BigRat, LaurentPoly, RatFunc};
pub use superspace::SuperDims;
