//! Dense univariate polynomials over a generic [`Field`].
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and `deg` returns `None` for it.
//! Everything here is exact: Euclidean division, (extended) gcd with monic
//! normalization, resultants by the polynomial remainder sequence, evaluation,
//! modular exponentiation, Taylor shift. The same code runs over `F_{q²}`,
//! over rational functions, and over quotient extensions.

use std::fmt;

use crate::ring::Field;

/// A univariate polynomial; the context lets even the zero polynomial mint
/// constants of the right field.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<F: Field> {
    ctx: F::Ctx,
    c: Vec<F>,
}

impl<F: Field> Poly<F> {
    /// Builds from coefficients (lowest degree first), trimming trailing zeros.
    pub fn new(ctx: F::Ctx, coeffs: Vec<F>) -> Self {
        let mut p = Poly { ctx, c: coeffs };
        p.trim();
        p
    }

    pub fn zero(ctx: F::Ctx) -> Self {
        Poly { ctx, c: vec![] }
    }

    pub fn one(ctx: F::Ctx) -> Self {
        let one = F::one(&ctx);
        Poly { ctx, c: vec![one] }
    }

    pub fn constant(ctx: F::Ctx, a: F) -> Self {
        Poly::new(ctx, vec![a])
    }

    /// The monomial `a · x^n`.
    pub fn monomial(ctx: F::Ctx, a: F, n: usize) -> Self {
        if a.is_zero() {
            return Poly::zero(ctx);
        }
        let mut c = vec![F::zero(&ctx); n + 1];
        c[n] = a;
        Poly { ctx, c }
    }

    /// The variable `x`.
    pub fn x(ctx: F::Ctx) -> Self {
        Poly::monomial(ctx.clone(), F::one(&ctx), 1)
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(F::is_zero) {
            self.c.pop();
        }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    /// Coefficients, lowest degree first, trimmed.
    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> F {
        self.c.get(i).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn deg(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> F {
        self.c.last().cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i).add(&other.coeff(i)));
        }
        Poly::new(self.ctx.clone(), c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i).sub(&other.coeff(i)));
        }
        Poly::new(self.ctx.clone(), c)
    }

    pub fn neg(&self) -> Self {
        Poly { ctx: self.ctx.clone(), c: self.c.iter().map(F::neg).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.ctx.clone());
        }
        let mut c = vec![F::zero(&self.ctx); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        Poly::new(self.ctx.clone(), c)
    }

    pub fn scale(&self, a: &F) -> Self {
        Poly::new(self.ctx.clone(), self.c.iter().map(|x| x.mul(a)).collect())
    }

    /// Multiplies by `x^n`.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![F::zero(&self.ctx); n];
        c.extend(self.c.iter().cloned());
        Poly { ctx: self.ctx.clone(), c }
    }

    /// Euclidean division `self = q·div + r` with `deg r < deg div`.
    ///
    /// Panics on a zero divisor — callers guard; a zero divisor here is a
    /// crate-internal logic error, not a data condition.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        let dd = div.deg().expect("polynomial division by zero");
        let lc_inv = div.lc().inv().expect("divisor leading coefficient must be a unit");
        let mut r = self.c.clone();
        let mut q = vec![F::zero(&self.ctx); self.c.len().saturating_sub(dd).max(1)];
        while r.len() > dd {
            let k = r.len() - 1;
            let coef = r[k].mul(&lc_inv);
            if !coef.is_zero() {
                q[k - dd] = coef.clone();
                for (i, b) in div.c.iter().enumerate() {
                    r[k - dd + i] = r[k - dd + i].sub(&coef.mul(b));
                }
            }
            r.pop();
            while r.last().is_some_and(F::is_zero) {
                r.pop();
            }
        }
        (Poly::new(self.ctx.clone(), q), Poly::new(self.ctx.clone(), r))
    }

    pub fn rem(&self, div: &Self) -> Self {
        self.divrem(div).1
    }

    /// Monic associate (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Some(i) => self.scale(&i),
            None => self.clone(),
        }
    }

    /// Monic gcd by the Euclidean algorithm; `gcd(a, 0) = monic(a)`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns monic `g` and `(s, t)` with `s·self + t·other = g`.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let ctx = self.ctx.clone();
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::one(ctx.clone());
        let mut s1 = Poly::zero(ctx.clone());
        let mut t0 = Poly::zero(ctx.clone());
        let mut t1 = Poly::one(ctx.clone());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if let Some(inv) = r0.lc().inv() {
            let scale = Poly::constant(ctx, inv);
            (r0.monic(), s0.mul(&scale), t0.mul(&scale))
        } else {
            (r0, s0, t0)
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, a: &F) -> F {
        let mut acc = F::zero(&self.ctx);
        for c in self.c.iter().rev() {
            acc = acc.mul(a).add(c);
        }
        acc
    }

    /// Ordinary derivative d/dx (coefficients multiplied by their exponent
    /// reduced mod p — fine for first partials; never iterate this in char p,
    /// higher-order information lives in the series layer).
    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Poly::zero(self.ctx.clone());
        }
        let mut c = Vec::with_capacity(self.c.len() - 1);
        for (i, a) in self.c.iter().enumerate().skip(1) {
            let m = crate::ring::embed_u64::<F>(&self.ctx, (i as u64) % F::characteristic(&self.ctx));
            c.push(a.mul(&m));
        }
        Poly::new(self.ctx.clone(), c)
    }

    /// `self^e mod m` by square-and-multiply.
    pub fn pow_mod(&self, e: u128, m: &Self) -> Self {
        let mut acc = Poly::one(self.ctx.clone()).rem(m);
        let mut base = self.rem(m);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Composition `self(g) mod m` (Horner in `g`).
    pub fn compose_mod(&self, g: &Self, m: &Self) -> Self {
        let mut acc = Poly::zero(self.ctx.clone());
        for c in self.c.iter().rev() {
            acc = acc.mul(g).rem(m).add(&Poly::constant(self.ctx.clone(), c.clone()));
        }
        acc.rem(m)
    }

    /// Taylor shift: returns `p(x + a)`, via repeated division by `(x − a)`.
    /// Characteristic-safe: no factorials, only exact remainders.
    pub fn taylor_shift(&self, a: &F) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let lin = Poly::new(self.ctx.clone(), vec![a.neg(), F::one(&self.ctx)]);
        let mut rest = self.clone();
        let mut out = Vec::with_capacity(self.c.len());
        while !rest.is_zero() {
            let (q, r) = rest.divrem(&lin);
            out.push(if r.is_zero() { F::zero(&self.ctx) } else { r.coeff(0) });
            rest = q;
        }
        Poly::new(self.ctx.clone(), out)
    }

    /// Returns `p(a·x)`.
    pub fn scale_var(&self, a: &F) -> Self {
        let mut pw = F::one(&self.ctx);
        let mut c = Vec::with_capacity(self.c.len());
        for coef in &self.c {
            c.push(coef.mul(&pw));
            pw = pw.mul(a);
        }
        Poly::new(self.ctx.clone(), c)
    }

    /// Resultant of `self` and `other` via the remainder sequence, using
    /// Res(f, g) = (−1)^{mn} · lc(g)^{m−s} · Res(g, r) with r = f mod g,
    /// s = deg r, and the base cases Res(f, c) = c^{deg f} for constant c,
    /// Res(f, 0) = 0 for deg f ≥ 1.
    pub fn resultant(&self, other: &Self) -> F {
        fn go<F: Field>(f: &Poly<F>, g: &Poly<F>) -> F {
            let ctx = f.ctx().clone();
            let m = match f.deg() {
                None => {
                    // Res(0, g): 0 unless g is a nonzero constant (empty product).
                    return if g.deg() == Some(0) { F::one(&ctx) } else { F::zero(&ctx) };
                }
                Some(m) => m,
            };
            let n = match g.deg() {
                None => return if m == 0 { F::one(&ctx) } else { F::zero(&ctx) },
                Some(n) => n,
            };
            if m < n {
                let sign = if (m * n) % 2 == 1 {
                    F::one(&ctx).neg()
                } else {
                    F::one(&ctx)
                };
                return sign.mul(&go(g, f));
            }
            if n == 0 {
                return g.lc().pow(m as u128);
            }
            let r = f.rem(g);
            let s = match r.deg() {
                None => return F::zero(&ctx), // common factor of positive degree
                Some(s) => s,
            };
            let sign = if (m * n) % 2 == 1 {
                F::one(&ctx).neg()
            } else {
                F::one(&ctx)
            };
            sign.mul(&g.lc().pow((m - s) as u128)).mul(&go(g, &r))
        }
        go(self, other)
    }

    /// Renders with the given variable name, highest degree first.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let coeff = a.to_string();
            let part = match i {
                0 => coeff,
                _ => {
                    let pow = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                    if a.is_one() {
                        pow
                    } else if coeff.contains(' ') || coeff.contains('+') {
                        format!("({coeff}){pow}")
                    } else {
                        format!("{coeff}{pow}")
                    }
                }
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}
