//! Quotient ring `F[y]/(h)` for a monic modulus `h`, used as the top of the
//! function-field tower: with `F = Rat<FieldElement>` and `h` the defining
//! polynomial of a curve in `y`, this is the curve's function field.
//!
//! The ring is a field exactly when `h` is irreducible over `F`. Inversion
//! reports a discovered nontrivial factor of `h` instead of guessing, so a
//! reducible modulus surfaces as a structured error, never a wrong answer.

use std::fmt;
use std::sync::Arc;

use crate::poly::Poly;
use crate::ring::Field;

/// Shared description of the quotient `F[y]/(modulus)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotCtx<F: Field> {
    base: F::Ctx,
    modulus: Poly<F>,
}

impl<F: Field> QuotCtx<F> {
    /// Requires a monic modulus of degree ≥ 1.
    pub fn new(modulus: Poly<F>) -> Arc<Self> {
        assert!(
            modulus.deg().is_some_and(|d| d >= 1),
            "quotient modulus must have degree >= 1"
        );
        assert!(modulus.lc().is_one(), "quotient modulus must be monic");
        Arc::new(QuotCtx { base: modulus.ctx().clone(), modulus })
    }

    pub fn base(&self) -> &F::Ctx {
        &self.base
    }

    pub fn modulus(&self) -> &Poly<F> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg().unwrap()
    }
}

/// Why an element of `F[y]/(h)` failed to invert.
#[derive(Clone, Debug)]
pub enum NonUnit<F: Field> {
    /// The element is zero.
    Zero,
    /// The element shares this nontrivial monic factor with the modulus,
    /// certifying that the modulus is reducible over `F`.
    SharedFactor(Poly<F>),
}

/// An element of `F[y]/(h)`, stored as its reduced representative.
#[derive(Clone, PartialEq, Eq)]
pub struct QuotExt<F: Field> {
    ctx: Arc<QuotCtx<F>>,
    v: Poly<F>,
}

impl<F: Field> QuotExt<F> {
    pub fn new(ctx: Arc<QuotCtx<F>>, rep: Poly<F>) -> Self {
        let v = rep.rem(&ctx.modulus);
        QuotExt { ctx, v }
    }

    pub fn zero(ctx: Arc<QuotCtx<F>>) -> Self {
        let z = Poly::zero(ctx.base.clone());
        QuotExt { ctx, v: z }
    }

    pub fn one(ctx: Arc<QuotCtx<F>>) -> Self {
        let o = Poly::one(ctx.base.clone());
        QuotExt { ctx, v: o }
    }

    pub fn from_base(ctx: Arc<QuotCtx<F>>, a: F) -> Self {
        let v = Poly::constant(ctx.base.clone(), a);
        QuotExt { ctx, v }
    }

    /// The residue class of the generator `y`.
    pub fn gen(ctx: Arc<QuotCtx<F>>) -> Self {
        let x = Poly::x(ctx.base.clone());
        QuotExt::new(ctx, x)
    }

    pub fn quot_ctx(&self) -> &Arc<QuotCtx<F>> {
        &self.ctx
    }

    /// Reduced representative (degree below the modulus degree).
    pub fn rep(&self) -> &Poly<F> {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    fn check(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx,
            "mixed quotient contexts"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        QuotExt { ctx: self.ctx.clone(), v: self.v.add(&other.v) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        QuotExt { ctx: self.ctx.clone(), v: self.v.sub(&other.v) }
    }

    pub fn neg(&self) -> Self {
        QuotExt { ctx: self.ctx.clone(), v: self.v.neg() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        QuotExt { ctx: self.ctx.clone(), v: self.v.mul(&other.v).rem(&self.ctx.modulus) }
    }

    /// Inversion with a certificate on failure: either the element was zero,
    /// or a nontrivial common factor with the modulus is returned.
    pub fn inv_detailed(&self) -> Result<Self, NonUnit<F>> {
        if self.is_zero() {
            return Err(NonUnit::Zero);
        }
        let (g, s, _) = self.v.ext_gcd(&self.ctx.modulus);
        if g.deg() == Some(0) {
            // ext_gcd normalizes g to 1, so s is already the inverse.
            Ok(QuotExt { ctx: self.ctx.clone(), v: s.rem(&self.ctx.modulus) })
        } else {
            Err(NonUnit::SharedFactor(g))
        }
    }
}

impl<F: Field> Field for QuotExt<F> {
    type Ctx = Arc<QuotCtx<F>>;

    fn ctx(&self) -> Self::Ctx {
        self.ctx.clone()
    }

    fn zero(ctx: &Self::Ctx) -> Self {
        QuotExt::zero(ctx.clone())
    }

    fn one(ctx: &Self::Ctx) -> Self {
        QuotExt::one(ctx.clone())
    }

    fn add(&self, other: &Self) -> Self {
        QuotExt::add(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        QuotExt::sub(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        QuotExt::mul(self, other)
    }

    fn neg(&self) -> Self {
        QuotExt::neg(self)
    }

    fn inv(&self) -> Option<Self> {
        self.inv_detailed().ok()
    }

    fn is_zero(&self) -> bool {
        QuotExt::is_zero(self)
    }

    fn characteristic(ctx: &Self::Ctx) -> u64 {
        F::characteristic(&ctx.base)
    }
}

impl<F: Field> fmt::Debug for QuotExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for QuotExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v.to_string_var("y"))
    }
}
