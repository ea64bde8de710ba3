//! The rational function field F(x) over a generic coefficient field.
//!
//! Elements are kept in canonical form — denominator monic, numerator and
//! denominator coprime — so equality is plain structural equality and zero
//! tests are exact. Together with [`crate::quot::QuotExt`] this gives the
//! function field of a plane curve as a tower of exact arithmetic.

use std::fmt;

use crate::poly::Poly;
use crate::ring::Field;

/// A rational function `num/den` in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct Rat<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> Rat<F> {
    /// Builds `num/den` and canonicalizes. Panics on a zero denominator —
    /// callers construct denominators from known-nonzero data.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = Rat { num, den };
        r.reduce();
        r
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let one = Poly::one(p.ctx().clone());
        Rat { num: p, den: one }
    }

    pub fn zero(ctx: F::Ctx) -> Self {
        Rat { num: Poly::zero(ctx.clone()), den: Poly::one(ctx) }
    }

    pub fn one(ctx: F::Ctx) -> Self {
        Rat { num: Poly::one(ctx.clone()), den: Poly::one(ctx) }
    }

    pub fn constant(ctx: F::Ctx, a: F) -> Self {
        Rat { num: Poly::constant(ctx.clone(), a), den: Poly::one(ctx) }
    }

    /// The variable x itself.
    pub fn x(ctx: F::Ctx) -> Self {
        Rat { num: Poly::x(ctx.clone()), den: Poly::one(ctx) }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one(self.den.ctx().clone());
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.deg() != Some(0) {
            self.num = self.num.divrem(&g).0;
            self.den = self.den.divrem(&g).0;
        }
        // Make the denominator monic, folding the unit into the numerator.
        let lc = self.den.lc();
        if !lc.is_one() {
            let inv = lc.inv().expect("leading coefficient is a unit");
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn ctx(&self) -> &F::Ctx {
        self.num.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is 1, i.e. the element is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den.deg() == Some(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Rat::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Rat::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        Rat { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Rat::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Rat::new(self.den.clone(), self.num.clone()))
    }

    /// Evaluates at a point where the denominator does not vanish.
    pub fn eval(&self, a: &F) -> Option<F> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(a).mul(&d.inv()?))
    }

    /// Order of vanishing at x = a: multiplicity of (x−a) in the numerator
    /// minus its multiplicity in the denominator (negative at a pole).
    pub fn ord_at(&self, a: &F) -> Option<i64> {
        if self.is_zero() {
            return None; // ord(0) = +infinity
        }
        let ctx = self.ctx().clone();
        let lin = Poly::new(ctx.clone(), vec![a.neg(), F::one(&ctx)]);
        let count = |p: &Poly<F>| {
            let mut p = p.clone();
            let mut k = 0i64;
            loop {
                let (q, r) = p.divrem(&lin);
                if !r.is_zero() {
                    return k;
                }
                k += 1;
                p = q;
            }
        };
        Some(count(&self.num) - count(&self.den))
    }
}

impl<F: Field> Field for Rat<F> {
    type Ctx = F::Ctx;

    fn ctx(&self) -> F::Ctx {
        self.num.ctx().clone()
    }

    fn zero(ctx: &Self::Ctx) -> Self {
        Rat::zero(ctx.clone())
    }

    fn one(ctx: &Self::Ctx) -> Self {
        Rat::one(ctx.clone())
    }

    fn add(&self, other: &Self) -> Self {
        Rat::add(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        Rat::sub(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        Rat::mul(self, other)
    }

    fn neg(&self) -> Self {
        Rat::neg(self)
    }

    fn inv(&self) -> Option<Self> {
        Rat::inv(self)
    }

    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }

    fn characteristic(ctx: &Self::Ctx) -> u64 {
        F::characteristic(ctx)
    }
}

impl<F: Field> fmt::Debug for Rat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for Rat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
