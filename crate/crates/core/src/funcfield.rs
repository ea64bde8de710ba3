//! The function field `K = F_{q²}(x)[y]/(F)` of a smooth plane curve, with
//! Hasse derivatives, the order sequence of the line system, and the
//! Frobenius order.
//!
//! Elements are residue classes of polynomials in `y` with reduced
//! rational-function coefficients in `x`; all arithmetic is exact. The k-th
//! Hasse derivative of `y` is obtained as the ε^k-coefficient of the Taylor
//! lift `Y(ε)` with `F(x+ε, Y(ε)) = 0` — never by iterating `d/dx`, which
//! loses information in characteristic p (k! vanishes). When `x` fails to be
//! a separating variable the coordinates are swapped internally.

use std::sync::Arc;

use thiserror::Error;

use crate::bivar::BivariatePoly;
use crate::curve::PlaneCurve;
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::determinant;
use crate::quot::{NonUnit, QuotCtx, QuotExt};
use crate::ratfunc::Rat;
use crate::ring::Field;
use crate::series::{newton_lift_series, Series};

/// An element of the function field: a residue class mod the defining
/// polynomial, with rational-function coefficients.
pub type FFElem = QuotExt<Rat<FieldElement>>;

#[derive(Debug, Error)]
pub enum FuncFieldError {
    #[error("neither coordinate separates the function field (defining polynomial is a p-th power in each variable)")]
    NoSeparatingVariable,
    #[error("division by zero in the function field")]
    DivisionByZero,
    #[error("defining polynomial is reducible: the divisor shares a degree-{degree} factor with it")]
    ReducibleModel { degree: usize },
    #[error("no order k ≤ {bound} makes the Wronskian nonzero; the three sections are linearly dependent")]
    DegenerateSystem { bound: u32 },
}

/// Taylor lift `Y(ε) = Σ c_k ε^k` of `y` along `x`: `c_k` is the k-th Hasse
/// derivative of `y`, and `F(x+ε, Y(ε)) ≡ 0` to the stored precision.
pub struct TaylorLift {
    coeffs: Vec<FFElem>,
}

impl TaylorLift {
    /// Highest ε-order N carried (coefficients c₀..c_N are available).
    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &FFElem {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[FFElem] {
        &self.coeffs
    }
}

/// The function field of a plane curve, oriented so that the first
/// coordinate is separating.
pub struct FunctionField {
    spec: Arc<FieldSpec>,
    /// Defining polynomial in working orientation (possibly swapped).
    f: BivariatePoly,
    swapped: bool,
    degree: u32,
    ctx: Arc<QuotCtx<Rat<FieldElement>>>,
}

impl FunctionField {
    pub fn new(curve: &PlaneCurve) -> Result<Self, FuncFieldError> {
        Self::from_affine(curve.affine().clone(), curve.degree())
    }

    /// Builds directly from an affine model (assumed irreducible; this is
    /// guaranteed for smooth curves and re-checked lazily on division).
    pub fn from_affine(affine: BivariatePoly, degree: u32) -> Result<Self, FuncFieldError> {
        let separating = |g: &BivariatePoly| g.deg_v().unwrap_or(0) >= 1 && !g.partial_v().is_zero();
        let (f, swapped) = if separating(&affine) {
            (affine, false)
        } else {
            let s = affine.swap_vars();
            if !separating(&s) {
                return Err(FuncFieldError::NoSeparatingVariable);
            }
            (s, true)
        };
        let spec = f.spec().clone();
        let modulus = f.as_rat_poly_in_v().monic();
        let ctx = QuotCtx::new(modulus);
        Ok(FunctionField { spec, f, swapped, degree, ctx })
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    /// Whether the coordinates were swapped to make the first one separating.
    pub fn swapped(&self) -> bool {
        self.swapped
    }

    pub fn ctx(&self) -> &Arc<QuotCtx<Rat<FieldElement>>> {
        &self.ctx
    }

    /// Image of the separating (working-first) coordinate.
    pub fn x(&self) -> FFElem {
        QuotExt::from_base(self.ctx.clone(), Rat::x(self.spec.clone()))
    }

    /// Image of the working-second coordinate (the algebraic generator).
    pub fn y(&self) -> FFElem {
        QuotExt::gen(self.ctx.clone())
    }

    pub fn constant(&self, c: &FieldElement) -> FFElem {
        QuotExt::from_base(self.ctx.clone(), Rat::constant(self.spec.clone(), c.clone()))
    }

    /// Image of a bivariate polynomial written in the curve's original
    /// coordinates (the internal swap, if any, is applied here).
    pub fn from_bivar(&self, a: &BivariatePoly) -> FFElem {
        let w = if self.swapped { a.swap_vars() } else { a.clone() };
        self.embed_working(&w)
    }

    fn embed_working(&self, a: &BivariatePoly) -> FFElem {
        a.eval_generic(&|c| self.constant(c), &self.x(), &self.y())
    }

    /// ∂F/∂(first working variable) as a field element.
    pub fn fx(&self) -> FFElem {
        self.embed_working(&self.f.partial_u())
    }

    /// ∂F/∂(second working variable) as a field element; nonzero by
    /// construction.
    pub fn fy(&self) -> FFElem {
        self.embed_working(&self.f.partial_v())
    }

    /// Checked division: distinguishes a genuine zero divisor from a zero
    /// denominator — the former can only arise from a reducible model.
    pub fn div(&self, a: &FFElem, b: &FFElem) -> Result<FFElem, FuncFieldError> {
        match b.inv_detailed() {
            Ok(i) => Ok(a.mul(&i)),
            Err(NonUnit::Zero) => Err(FuncFieldError::DivisionByZero),
            Err(NonUnit::SharedFactor(g)) => Err(FuncFieldError::ReducibleModel {
                degree: g.deg().unwrap_or(0),
            }),
        }
    }

    /// Series `x + ε` to the given precision, as the evaluation point of the
    /// first coordinate.
    fn x_plus_eps(&self, prec: usize) -> Series<FFElem> {
        Series::constant(self.ctx.clone(), self.x(), prec)
            .add(&Series::t(self.ctx.clone(), prec))
    }

    /// Taylor coefficients c₀..c_N of `y` along the separating variable,
    /// computed by Newton iteration with precision doubling. `c₀ = y` and
    /// `c₁ = −F_x/F_y`; `c_k` is the k-th Hasse derivative of `y`.
    pub fn hasse_derivatives(&self, n: usize) -> TaylorLift {
        let prec = n + 1;
        let embed = |c: &FieldElement| self.constant(c);
        let fu = self.f.partial_v();
        let lift = newton_lift_series(
            |ys: &Series<FFElem>| {
                let xs = self.x_plus_eps(ys.prec());
                self.f.eval_at_series(&embed, &xs, ys)
            },
            |ys: &Series<FFElem>| {
                let xs = self.x_plus_eps(ys.prec());
                fu.eval_at_series(&embed, &xs, ys)
            },
            self.y(),
            prec,
        );
        TaylorLift { coeffs: lift.coeffs().to_vec() }
    }

    /// The order sequence (ε₀, ε₁, ε₂) of the planar line system with
    /// sections (1, x, y): ε₀ = 0 and ε₁ = 1 always hold here, and ε₂ is the
    /// least k ≥ 2 whose Hasse–Wronskian
    /// `det [[1, x, y], [0, 1, c₁], [0, 0, c_k]]` is nonzero. Classical
    /// theory bounds ε₂ by the degree for an honest g²_d, so running out of
    /// candidates means the three sections are linearly dependent (as on a
    /// line, where the search range is empty) and the system is degenerate.
    pub fn order_sequence(&self) -> Result<(u32, u32, u32), FuncFieldError> {
        let d = self.degree;
        let lift = self.hasse_derivatives(d as usize);
        let one = || QuotExt::one(self.ctx.clone());
        let zero = || QuotExt::zero(self.ctx.clone());
        for k in 2..=d {
            let m = vec![
                vec![one(), self.x(), self.y()],
                vec![zero(), one(), lift.coeff(1).clone()],
                vec![zero(), zero(), lift.coeff(k as usize).clone()],
            ];
            let det = determinant::<FFElem>(&self.ctx, &m);
            if !det.is_zero() {
                return Ok((0, 1, k));
            }
        }
        Err(FuncFieldError::DegenerateSystem { bound: d })
    }

    /// The Frobenius order ν₁ of the system: 1 unless the Frobenius–Wronskian
    /// degenerates, i.e. unless `G = (x − x^{q²})·F_x − (y^{q²} − y)·F_y`
    /// vanishes identically, in which case ν₁ = ε₂.
    pub fn frobenius_order(&self, eps2: u32) -> u32 {
        if self.frobenius_identity_holds() {
            eps2
        } else {
            1
        }
    }

    /// Whether `(x − x^{q²})·F_x = (y^{q²} − y)·F_y` holds in the function
    /// field. Frobenius powers of `x` stay plain rational-function
    /// coefficients; powers of `y` are reduced modulo F at every squaring.
    pub fn frobenius_identity_holds(&self) -> bool {
        let q2 = self.spec.q2() as u128;
        let x = self.x();
        let y = self.y();
        let lhs = x.sub(&x.pow(q2)).mul(&self.fx());
        let rhs = y.pow(q2).sub(&y).mul(&self.fy());
        lhs.sub(&rhs).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::poly_reduce;

    fn biv(spec: &Arc<FieldSpec>, terms: &[(u32, u32, u64)]) -> BivariatePoly {
        BivariatePoly::from_terms(
            Arc::clone(spec),
            terms.iter().map(|&(i, j, c)| ((i, j), spec.from_prime(c))),
        )
    }

    fn hermitian_curve(p: u64, n: u32) -> PlaneCurve {
        let f = FieldSpec::new(p, n, None).unwrap();
        let q = f.q() as u32;
        let mut aff = BivariatePoly::zero(Arc::clone(&f));
        aff.add_term(0, q, f.one());
        aff.add_term(0, 1, f.one());
        aff.add_term(q + 1, 0, f.one().neg());
        PlaneCurve::new(aff).unwrap()
    }

    #[test]
    fn field_arithmetic_on_hermitian() {
        let c = hermitian_curve(2, 1);
        let k = FunctionField::new(&c).unwrap();
        let y = k.y();
        // y · y⁻¹ = 1.
        let inv = k.div(&QuotExt::one(k.ctx().clone()), &y).unwrap();
        assert!(y.mul(&inv).is_one());
        // The defining relation maps to zero.
        assert!(k.from_bivar(c.affine()).is_zero());
        // (x + y)² = x² + y² = x² + (x³ + y) in characteristic 2.
        let s = k.x().add(&y);
        let sq = s.mul(&s);
        let spec = c.spec().clone();
        let expect_poly = biv(&spec, &[(2, 0, 1), (3, 0, 1), (0, 1, 1)]);
        assert_eq!(sq, k.from_bivar(&expect_poly));
        // Same reduction through the polynomial route, then pointwise.
        let lhs_poly = biv(&spec, &[(1, 0, 1), (0, 1, 1)]);
        let red = poly_reduce(&lhs_poly.mul(&lhs_poly), c.affine()).unwrap();
        assert_eq!(red, expect_poly);
        for pt in c.rational_points().iter().filter(|p| !p.z().is_zero()) {
            let t = pt.z().inv().unwrap();
            let (x, y) = (pt.x().mul(&t), pt.y().mul(&t));
            let s = x.add(&y);
            assert_eq!(s.mul(&s), expect_poly.eval(&x, &y));
        }
    }

    #[test]
    fn division_by_zero_is_detected() {
        let c = hermitian_curve(2, 1);
        let k = FunctionField::new(&c).unwrap();
        let z = QuotExt::zero(k.ctx().clone());
        assert!(matches!(k.div(&k.x(), &z), Err(FuncFieldError::DivisionByZero)));
    }

    #[test]
    fn first_hasse_derivative_is_x_to_the_q() {
        for (p, n) in [(2u64, 1u32), (3, 1)] {
            let c = hermitian_curve(p, n);
            let q = c.spec().q() as u32;
            let k = FunctionField::new(&c).unwrap();
            let lift = k.hasse_derivatives(1);
            assert_eq!(*lift.coeff(0), k.y());
            let xq = k.from_bivar(&biv(c.spec(), &[(q, 0, 1)]));
            assert_eq!(*lift.coeff(1), xq, "c₁ must equal x^q for q = {q}");
            // And symbolically: c₁ = −F_x/F_y.
            let ratio = k.div(&k.fx().neg(), &k.fy()).unwrap();
            assert_eq!(*lift.coeff(1), ratio);
        }
    }

    #[test]
    fn graph_line_has_trivial_higher_derivatives() {
        // y − x: c₀ = y (= x in K), c₁ = 1, c_k = 0 for k ≥ 2.
        let f = FieldSpec::new(3, 1, None).unwrap();
        let line = biv(&f, &[(0, 1, 1), (1, 0, 2)]); // y − x  (2 = −1)
        let k = FunctionField::from_affine(line, 1).unwrap();
        let lift = k.hasse_derivatives(4);
        assert!(lift.coeff(1).is_one());
        for j in 2..=4 {
            assert!(lift.coeff(j).is_zero(), "c_{j} should vanish");
        }
    }

    #[test]
    fn taylor_lift_satisfies_defining_identity() {
        let c = hermitian_curve(3, 1);
        let k = FunctionField::new(&c).unwrap();
        let n = 8;
        let lift = k.hasse_derivatives(n);
        let ys = Series::from_coeffs(k.ctx().clone(), n + 1, lift.coeffs().to_vec());
        let xs = k.x_plus_eps(n + 1);
        let val = c.affine().eval_at_series(&|e| k.constant(e), &xs, &ys);
        assert!(val.is_zero_to_prec(), "F(x+ε, Y(ε)) must vanish mod ε^{}", n + 1);
    }

    #[test]
    fn hasse_composition_law_for_x_squared() {
        // Expansion of (x+ε)²: D⁰ = x², D¹ = 2x, D² = 1, D^k = 0 beyond —
        // with binomial semantics in every characteristic.
        for (p, n) in [(3u64, 1u32), (2, 2)] {
            let c = hermitian_curve(p, n);
            let k = FunctionField::new(&c).unwrap();
            let xs = k.x_plus_eps(5);
            let sq = xs.mul(&xs);
            assert_eq!(sq.coeff(0), k.x().mul(&k.x()));
            assert_eq!(sq.coeff(1), k.x().add(&k.x()));
            assert!(sq.coeff(2).is_one());
            assert!(sq.coeff(3).is_zero() && sq.coeff(4).is_zero());
        }
    }

    #[test]
    fn order_sequence_of_hermitian_is_0_1_q() {
        for (p, n) in [(2u64, 1u32), (3, 1)] {
            let c = hermitian_curve(p, n);
            let q = c.spec().q() as u32;
            let k = FunctionField::new(&c).unwrap();
            assert_eq!(k.order_sequence().unwrap(), (0, 1, q));
        }
    }

    #[test]
    fn order_sequence_of_conic_is_0_1_2() {
        let f = FieldSpec::new(3, 1, None).unwrap();
        let conic = biv(&f, &[(0, 1, 1), (2, 0, 2)]); // y − x²
        let c = PlaneCurve::new(conic).unwrap();
        let k = FunctionField::new(&c).unwrap();
        assert_eq!(k.order_sequence().unwrap(), (0, 1, 2));
        assert_eq!(k.frobenius_order(2), 1, "conic has classical Frobenius order");
    }

    #[test]
    fn frobenius_order_of_hermitian_is_q() {
        for (p, n) in [(2u64, 1u32), (3, 1)] {
            let c = hermitian_curve(p, n);
            let q = c.spec().q() as u32;
            let k = FunctionField::new(&c).unwrap();
            let (_, _, e2) = k.order_sequence().unwrap();
            assert_eq!(k.frobenius_order(e2), q);
        }
    }

    #[test]
    fn order_sequence_invariant_under_swap() {
        for aff in [
            {
                let c = hermitian_curve(3, 1);
                c.affine().clone()
            },
            {
                let f = FieldSpec::new(3, 1, None).unwrap();
                biv(&f, &[(0, 1, 1), (2, 0, 2)])
            },
        ] {
            let a = PlaneCurve::new(aff.clone()).unwrap();
            let b = PlaneCurve::new(aff.swap_vars()).unwrap();
            let ka = FunctionField::new(&a).unwrap();
            let kb = FunctionField::new(&b).unwrap();
            assert_eq!(ka.order_sequence().unwrap(), kb.order_sequence().unwrap());
        }
    }

    #[test]
    fn swapped_orientation_kicks_in_for_x_free_derivative() {
        // y² + x over F_4 (char 2): F_y = 0, so x cannot separate; the field
        // is built with coordinates swapped and still works.
        let f = FieldSpec::new(2, 1, None).unwrap();
        let conic = biv(&f, &[(0, 2, 1), (1, 0, 1)]);
        let c = PlaneCurve::new(conic).unwrap();
        let k = FunctionField::new(&c).unwrap();
        assert!(k.swapped());
        assert!(k.from_bivar(c.affine()).is_zero());
        assert_eq!(k.order_sequence().unwrap(), (0, 1, 2));
    }

    #[test]
    fn line_system_on_a_line_is_degenerate() {
        let f = FieldSpec::new(3, 1, None).unwrap();
        let line = biv(&f, &[(0, 1, 1), (1, 0, 2)]);
        let k = FunctionField::from_affine(line, 1).unwrap();
        assert!(matches!(
            k.order_sequence(),
            Err(FuncFieldError::DegenerateSystem { bound: 1 })
        ));
    }
}
