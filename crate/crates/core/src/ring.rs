//! The `Field` abstraction that lets one polynomial/series kernel serve
//! `F_{q²}`, rational functions over it, and the function field of a curve.
//!
//! Elements carry no global state; everything context-like (the field
//! description, a quotient modulus) lives in an associated `Ctx` value that
//! each element can reproduce. Generic containers (`Poly`, `Series`) store one
//! `Ctx` so they can mint zeros and ones even when empty.

use std::fmt;

use crate::field::FieldElement;
use crate::FieldSpec;
use std::sync::Arc;

/// A field, as needed by the generic polynomial and power-series kernels.
///
/// `inv` returns `None` exactly on zero. Implementations for quotient rings
/// whose modulus might be reducible are expected to panic on a genuine zero
/// divisor (a programming error in this crate — see `QuotExt::inv_detailed`
/// for the checked route used where reducibility is a data condition).
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display {
    /// Everything needed to construct constants of this field.
    type Ctx: Clone + PartialEq + Eq + fmt::Debug;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    /// The characteristic p (prime in every instantiation used here).
    fn characteristic(ctx: &Self::Ctx) -> u64;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    /// `self / other`; `None` when `other` is zero.
    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    /// `self^e` by square-and-multiply, with `x^0 = 1`.
    fn pow(&self, e: u128) -> Self {
        let mut acc = Self::one(&self.ctx());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Embeds a small nonnegative integer (e.g. a binomial coefficient already
/// reduced mod p) by double-and-add on `one`.
pub fn embed_u64<F: Field>(ctx: &F::Ctx, m: u64) -> F {
    let mut acc = F::zero(ctx);
    let one = F::one(ctx);
    let mut add = one;
    let mut m = m;
    while m > 0 {
        if m & 1 == 1 {
            acc = acc.add(&add);
        }
        add = add.add(&add);
        m >>= 1;
    }
    acc
}

impl Field for FieldElement {
    type Ctx = Arc<FieldSpec>;

    fn ctx(&self) -> Arc<FieldSpec> {
        Arc::clone(self.spec())
    }

    fn zero(ctx: &Arc<FieldSpec>) -> Self {
        ctx.zero()
    }

    fn one(ctx: &Arc<FieldSpec>) -> Self {
        ctx.one()
    }

    fn add(&self, other: &Self) -> Self {
        FieldElement::add(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        FieldElement::sub(self, other)
    }

    fn neg(&self) -> Self {
        FieldElement::neg(self)
    }

    fn mul(&self, other: &Self) -> Self {
        FieldElement::mul(self, other)
    }

    fn inv(&self) -> Option<Self> {
        FieldElement::inv(self).ok()
    }

    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }

    fn characteristic(ctx: &Arc<FieldSpec>) -> u64 {
        ctx.p()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trait_ops_agree_with_inherent_ones() {
        let f = FieldSpec::new(3, 1, None).unwrap();
        let w = f.gen();
        let two = f.from_prime(2);
        assert_eq!(Field::add(&w, &two), FieldElement::add(&w, &two));
        assert_eq!(Field::mul(&w, &two), FieldElement::mul(&w, &two));
        assert_eq!(Field::inv(&w), FieldElement::inv(&w).ok());
        assert_eq!(Field::inv(&f.zero()), None);
        assert_eq!(Field::pow(&w, 8), f.one(), "w generates the order-8 group of F_9");
    }

    #[test]
    fn embed_small_integers() {
        let f = FieldSpec::new(5, 1, None).unwrap();
        let ctx = f.gen().ctx();
        for m in 0..11u64 {
            assert_eq!(embed_u64::<FieldElement>(&ctx, m), f.from_prime(m));
        }
    }
}
