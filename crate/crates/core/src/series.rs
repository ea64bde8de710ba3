//! Truncated power series in a local parameter `t` over a generic field.
//!
//! A [`Series`] stores coefficients of `t^0 … t^{prec−1}` and remembers its
//! precision; arithmetic truncates to the weaker operand. Orders of vanishing
//! read straight off the coefficients, Hasse derivatives divide binomials by
//! nothing (they are defined through binomial coefficients reduced mod p, so
//! they stay meaningful in small characteristic), and a Newton iteration
//! lifts a simple root of a bivariate polynomial to a full series branch.

use std::fmt;

use crate::field::FieldElement;
use crate::ring::{embed_u64, Field};

/// A power series known modulo `t^prec`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series<F: Field> {
    ctx: F::Ctx,
    prec: usize,
    c: Vec<F>,
}

impl<F: Field> Series<F> {
    /// Builds from coefficients (index = exponent), padding or truncating to
    /// `prec` entries.
    pub fn from_coeffs(ctx: F::Ctx, prec: usize, mut coeffs: Vec<F>) -> Self {
        assert!(prec > 0, "series precision must be positive");
        coeffs.truncate(prec);
        while coeffs.len() < prec {
            coeffs.push(F::zero(&ctx));
        }
        Series { ctx, prec, c: coeffs }
    }

    pub fn zero(ctx: F::Ctx, prec: usize) -> Self {
        Series::from_coeffs(ctx, prec, vec![])
    }

    pub fn constant(ctx: F::Ctx, a: F, prec: usize) -> Self {
        Series::from_coeffs(ctx, prec, vec![a])
    }

    /// The local parameter `t` itself.
    pub fn t(ctx: F::Ctx, prec: usize) -> Self {
        let one = F::one(&ctx);
        let zero = F::zero(&ctx);
        Series::from_coeffs(ctx, prec, vec![zero, one])
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn coeff(&self, i: usize) -> F {
        self.c.get(i).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    /// Reduces the precision (or keeps it, if already lower).
    pub fn truncate(&self, prec: usize) -> Self {
        assert!(prec > 0);
        let p = self.prec.min(prec);
        Series::from_coeffs(self.ctx.clone(), p, self.c[..p].to_vec())
    }

    /// First exponent with a nonzero coefficient; `None` when the series is
    /// zero to its full precision (the caller decides whether that means
    /// "exactly zero" or "insufficient precision").
    pub fn ord(&self) -> Option<usize> {
        self.c.iter().position(|a| !a.is_zero())
    }

    pub fn is_zero_to_prec(&self) -> bool {
        self.ord().is_none()
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let c = (0..prec).map(|i| self.c[i].add(&other.c[i])).collect();
        Series { ctx: self.ctx.clone(), prec, c }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let c = (0..prec).map(|i| self.c[i].sub(&other.c[i])).collect();
        Series { ctx: self.ctx.clone(), prec, c }
    }

    pub fn neg(&self) -> Self {
        Series { ctx: self.ctx.clone(), prec: self.prec, c: self.c.iter().map(F::neg).collect() }
    }

    pub fn scale(&self, a: &F) -> Self {
        Series {
            ctx: self.ctx.clone(),
            prec: self.prec,
            c: self.c.iter().map(|x| x.mul(a)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let mut c = vec![F::zero(&self.ctx); prec];
        for (i, a) in self.c.iter().enumerate().take(prec) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate().take(prec - i) {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        Series { ctx: self.ctx.clone(), prec, c }
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inv(&self) -> Option<Self> {
        let a0 = self.c[0].inv()?;
        let mut b = vec![F::zero(&self.ctx); self.prec];
        b[0] = a0.clone();
        for n in 1..self.prec {
            let mut acc = F::zero(&self.ctx);
            for k in 1..=n {
                if !self.c[k].is_zero() {
                    acc = acc.add(&self.c[k].mul(&b[n - k]));
                }
            }
            b[n] = acc.mul(&a0).neg();
        }
        Some(Series { ctx: self.ctx.clone(), prec: self.prec, c: b })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Series::constant(self.ctx.clone(), F::one(&self.ctx), self.prec);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// k-th Hasse derivative: sends `t^n` to `C(n, k) t^{n−k}` with the
    /// binomial reduced modulo the characteristic (Lucas' rule digit by
    /// digit). Precision drops by `k`.
    pub fn hasse_derivative(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        if k >= self.prec {
            return Series::zero(self.ctx.clone(), 1);
        }
        let p = F::characteristic(&self.ctx);
        let prec = self.prec - k;
        let mut c = Vec::with_capacity(prec);
        for n in k..self.prec {
            let b = binomial_mod_p(n as u64, k as u64, p);
            if b == 0 || self.c[n].is_zero() {
                c.push(F::zero(&self.ctx));
            } else {
                c.push(self.c[n].mul(&embed_u64::<F>(&self.ctx, b)));
            }
        }
        Series { ctx: self.ctx.clone(), prec, c }
    }
}

impl Series<FieldElement> {
    /// Raises to the `q²` power, where `q²` is the order of the coefficient
    /// field: since every coefficient satisfies `a^{q²} = a` and `q²` is a
    /// power of the characteristic, the result just stretches exponents,
    /// `Σ a_i t^i ↦ Σ a_i t^{i q²}`, and the precision multiplies by `q²`.
    pub fn pow_q2(&self) -> Series<FieldElement> {
        let q2 = self.ctx.q2() as usize;
        let prec = self.prec.checked_mul(q2).expect("precision overflow");
        let mut c = vec![FieldElement::zero(&self.ctx); prec];
        for (i, a) in self.c.iter().enumerate() {
            c[i * q2] = a.clone();
        }
        Series { ctx: self.ctx.clone(), prec, c }
    }
}

/// Binomial coefficient C(n, k) mod p by Lucas' theorem: the product of the
/// digitwise binomials in base p, each computed over the integers (digits
/// are < p, so the small binomials fit comfortably in u64 for p ≤ 2^16).
pub fn binomial_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        // C(nd, kd) exactly, nd < p ≤ 2^16 keeps this in range.
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..kd {
            num *= nd - i;
            den *= i + 1;
        }
        acc = acc * ((num / den) % p) % p;
        n /= p;
        k /= p;
    }
    acc
}

/// Newton ("quadratic Hensel") lift of a simple root to a series branch.
///
/// `f` and `fy` evaluate a bivariate polynomial and its y-partial at the
/// fixed series `X(t)` and a candidate series `Y`; the initial value `y0`
/// must satisfy `f(y0) ≡ 0 (mod t)` and `fy(y0) ≢ 0 (mod t)`. Precision
/// doubles each round, so correctness follows from the standard Newton
/// invariant: if `f(Y) ≡ 0 mod t^m` then the update is `≡ 0 mod t^{2m}`.
pub fn newton_lift_series<F, Ev, Dv>(f: Ev, fy: Dv, y0: F, prec: usize) -> Series<F>
where
    F: Field,
    Ev: Fn(&Series<F>) -> Series<F>,
    Dv: Fn(&Series<F>) -> Series<F>,
{
    let ctx = y0.ctx();
    let mut cur = 1usize;
    let mut y = Series::constant(ctx.clone(), y0, 1);
    {
        let r = f(&y);
        assert!(r.coeff(0).is_zero(), "initial value is not a root");
        let d = fy(&y);
        assert!(!d.coeff(0).is_zero(), "root is not simple (y-partial vanishes)");
    }
    while cur < prec {
        let next = (cur * 2).min(prec);
        // Re-evaluate at the higher precision before updating.
        let y_ext = Series::from_coeffs(ctx.clone(), next, y.coeffs().to_vec());
        let num = f(&y_ext);
        let den = fy(&y_ext);
        let step = num.mul(&den.inv().expect("y-partial stays a unit along the lift"));
        y = y_ext.sub(&step);
        cur = next;
    }
    y
}

impl<F: Field> fmt::Debug for Series<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for Series<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = match i {
                0 => a.to_string(),
                1 if a.is_one() => "t".into(),
                1 => format!("({a})t"),
                _ if a.is_one() => format!("t^{i}"),
                _ => format!("({a})t^{i}"),
            };
            parts.push(term);
        }
        if parts.is_empty() {
            write!(f, "0 + O(t^{})", self.prec)
        } else {
            write!(f, "{} + O(t^{})", parts.join(" + "), self.prec)
        }
    }
}
