//! Exact computational geometry of smooth plane curves over quadratic
//! extension fields `F_{q²}`.
//!
//! The crate builds everything from first principles on top of one field
//! representation (`field`): generic polynomial and power-series kernels
//! (`poly`, `series`, `ratfunc`, `quot`, `factor`), bivariate/trivariate
//! polynomials and curve geometry (`bivar`, `curve`, `smooth`), order
//! sequences and Frobenius orders of the embedded function field
//! (`funcfield`), local invariants at rational points (`localgeom`), the
//! arithmetic audit for curves attaining the upper point-count bound
//! (`audit`), and recognition of the Hermitian model (`hermitian`). A small
//! catalog of worked examples lives in `catalog`.

#![forbid(unsafe_code)]

pub mod audit;
pub mod bivar;
pub mod curve;
pub mod embed;
pub mod factor;
pub mod field;
pub mod funcfield;
pub mod hermitian;
pub mod linalg;
pub mod localgeom;
pub mod poly;
pub mod quot;
pub mod ratfunc;
pub mod ring;
pub mod series;

pub mod smooth;

pub use audit::{
    assemble_report, castelnuovo, claim_inequality, dichotomy, lemma_chain, maximality,
    semigroup_gaps, sv_degrees, AuditError, AuditReport, Branch, CastelnuovoRow, CheckRow,
    LemmaChain, SemigroupData,
};
pub use bivar::{BivariatePoly, TrivariatePoly};
pub use curve::{poly_divides, poly_reduce, CurveError, PlaneCurve, ProjectivePoint};
pub use embed::FieldEmbedding;
pub use factor::{factor, is_irreducible, radical, roots_in_field};
pub use smooth::{smoothness_check, SingularityWitness, SmoothnessResult};
pub use field::{default_modulus, FieldElement, FieldError, FieldSpec};
pub use funcfield::{FFElem, FuncFieldError, FunctionField, TaylorLift};
pub use hermitian::{
    frobenius_relation_check, hermitian_affine, hermitian_curve, monomial_support_count,
    prime_power, recognize_hermitian, HermitianError, HermitianModel, NormalizationTrace,
    Recognition, Step,
};
pub use localgeom::{analyze_point, expand_at, nongap_check, LocalExpansion, LocalGeomError, PointReport};
pub use linalg::{determinant, rref};
pub use poly::Poly;
pub use quot::{NonUnit, QuotCtx, QuotExt};
pub use ratfunc::Rat;
pub use ring::{embed_u64, Field};
pub use series::{binomial_mod_p, newton_lift_series, Series};
