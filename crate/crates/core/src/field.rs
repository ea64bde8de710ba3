//! Arithmetic in the quadratic extension `F_{q²}` of a finite field `F_q`, `q = pⁿ`.
//!
//! Everything downstream (curves, function fields, local expansions) works over a
//! single extension `F_p[w]/(m(w))` with `m` monic irreducible of degree `2n`, so
//! both `F_{q²}` and its subfield `F_q` share one coefficient representation.
//! `F_q` is recovered as the fixed field of the q-power Frobenius `a ↦ a^q`
//! rather than through a second modulus — no tower arithmetic, no embeddings.
//!
//! Conventions:
//! * elements are coefficient vectors `[c₀, c₁, …, c_{2n−1}]` over `F_p` in the
//!   power basis `1, w, w², …` (lowest degree first);
//! * the default modulus for degree `d` is the first monic irreducible in the
//!   ordering by `Σ cᵢ pⁱ` of the non-leading coefficients, i.e. lexicographic
//!   from the highest coefficient down; this pins the representation so that
//!   reports and witnesses are reproducible across runs;
//! * the representation is capped at `p^{2n} ≤ 2¹⁶` elements — the toolkit is
//!   built for exact desk-scale work, not bulk computation.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Errors from field construction and element arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    /// The characteristic passed to [`FieldSpec::new`] is not prime.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// The extension degree parameter `n` must be at least 1.
    #[error("extension degree n must be >= 1")]
    ZeroDegree,
    /// The field would exceed the supported size cap of 2^16 elements.
    #[error("field size p^(2n) = {0} exceeds the supported cap of 65536")]
    TooLarge(u128),
    /// A user-supplied modulus failed validation.
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    /// Division by the zero element.
    #[error("division by zero in F_{{q^2}}")]
    DivisionByZero,
    /// Two elements from different field representations were combined.
    #[error("elements belong to different field representations")]
    SpecMismatch,
    /// A coefficient vector had the wrong length or out-of-range entries.
    #[error("invalid coefficient vector: {0}")]
    BadCoefficients(String),
}

/// Description of the ambient field `F_{q²} = F_p[w]/(m(w))`, `deg m = 2n`.
///
/// Handed around as `Arc<FieldSpec>`; elements keep a handle to their spec and
/// refuse to mix with elements of a different spec. Two specs are interchangeable
/// exactly when `p`, `n` and the modulus agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    n: u32,
    /// Monic modulus, coefficients `[m₀, …, m_{2n−1}, 1]`, lowest degree first.
    modulus: Vec<u64>,
    q: u64,
    q2: u64,
}

impl FieldSpec {
    /// Builds the descriptor of `F_{q²}`, `q = pⁿ`, with the given modulus
    /// or the canonical default one (see [`default_modulus`]).
    pub fn new(p: u64, n: u32, modulus: Option<Vec<u64>>) -> Result<Arc<FieldSpec>, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let deg = 2 * n as usize;
        let size = (p as u128).checked_pow(deg as u32).ok_or(FieldError::TooLarge(u128::MAX))?;
        if size > 1 << 16 {
            return Err(FieldError::TooLarge(size));
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != deg + 1 {
                    return Err(FieldError::BadModulus(format!(
                        "expected {} coefficients for degree {}, got {}",
                        deg + 1,
                        deg,
                        m.len()
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(FieldError::BadModulus(format!("coefficients must lie in 0..{p}")));
                }
                if m[deg] != 1 {
                    return Err(FieldError::BadModulus("modulus must be monic".into()));
                }
                if !fp::is_irreducible(&m, p) {
                    return Err(FieldError::BadModulus("modulus is reducible over F_p".into()));
                }
                m
            }
            None => default_modulus(p, deg as u32)?,
        };
        let q = p.pow(n);
        Ok(Arc::new(FieldSpec { p, n, modulus, q, q2: q * q }))
    }

    /// Characteristic `p`.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Degree parameter `n` with `q = pⁿ`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Base subfield size `q`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Ambient field size `q²`.
    pub fn q2(&self) -> u64 {
        self.q2
    }

    /// The monic modulus, lowest degree first, including the leading 1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Degree of the modulus, `2n`.
    pub fn ext_degree(&self) -> usize {
        2 * self.n as usize
    }

    /// The zero element.
    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement { spec: Arc::clone(self), c: vec![0; self.ext_degree()] }
    }

    /// The multiplicative identity.
    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_prime(1)
    }

    /// Embeds a residue from the prime field `F_p` (reduced mod `p`).
    pub fn from_prime(self: &Arc<Self>, a: u64) -> FieldElement {
        let mut c = vec![0; self.ext_degree()];
        c[0] = a % self.p;
        FieldElement { spec: Arc::clone(self), c }
    }

    /// The class of `w`, a generator of the representation.
    pub fn gen(self: &Arc<Self>) -> FieldElement {
        let mut c = vec![0; self.ext_degree()];
        if c.len() > 1 {
            c[1] = 1;
        } else {
            // 2n >= 2 always, so this is unreachable; kept for safety.
            c[0] = 0;
        }
        FieldElement { spec: Arc::clone(self), c }
    }

    /// Builds an element from a coefficient vector (length at most `2n`,
    /// entries reduced mod `p`; shorter vectors are padded with zeros).
    pub fn element(self: &Arc<Self>, coeffs: &[u64]) -> Result<FieldElement, FieldError> {
        let deg = self.ext_degree();
        if coeffs.len() > deg {
            return Err(FieldError::BadCoefficients(format!(
                "got {} coefficients, representation has degree {}",
                coeffs.len(),
                deg
            )));
        }
        let mut c = vec![0; deg];
        for (i, &a) in coeffs.iter().enumerate() {
            c[i] = a % self.p;
        }
        Ok(FieldElement { spec: Arc::clone(self), c })
    }

    /// Iterates over all `q²` elements of the field exactly once, in the
    /// deterministic order that compares coefficient vectors lexicographically
    /// (`c₀` first). The first element yielded is 0.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        let deg = self.ext_degree();
        let p = self.p;
        let total = self.q2;
        let spec = Arc::clone(self);
        (0..total).map(move |k| {
            let mut c = vec![0u64; deg];
            let mut k = k;
            // c0 is the most significant digit so the sequence is lexicographic.
            for i in (0..deg).rev() {
                c[i] = k % p;
                k /= p;
            }
            FieldElement { spec: Arc::clone(&spec), c }
        })
    }

    /// Iterates over the subfield `F_q`, the fixed field of `a ↦ a^q`.
    pub fn subfield_elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        self.elements().filter(|a| a.in_subfield())
    }
}

/// The canonical modulus used when the caller does not supply one: the first
/// monic irreducible of the given degree in the ordering by `Σ cᵢ pⁱ` over the
/// non-leading coefficients. Returns the full coefficient vector including the
/// leading 1.
pub fn default_modulus(p: u64, degree: u32) -> Result<Vec<u64>, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if degree == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let deg = degree as usize;
    let total = (p as u128).pow(degree);
    if total > 1 << 32 {
        return Err(FieldError::TooLarge(total));
    }
    for k in 0..total {
        let mut c = vec![0u64; deg + 1];
        c[deg] = 1;
        let mut k = k;
        for coeff in c.iter_mut().take(deg) {
            *coeff = (k % p as u128) as u64;
            k /= p as u128;
        }
        if fp::is_irreducible(&c, p) {
            return Ok(c);
        }
    }
    unreachable!("monic irreducibles exist in every degree over F_p");
}

/// An element of `F_{q²}`, carrying a handle to its [`FieldSpec`].
///
/// `add`/`sub`/`mul`/`neg` panic if the operands belong to different specs —
/// that is a programming error, and the `checked_*` variants are available where
/// mixed inputs are possible (e.g. straight from parsed user data). Division and
/// inversion return errors, since a zero divisor is a data condition.
#[derive(Clone)]
pub struct FieldElement {
    spec: Arc<FieldSpec>,
    c: Vec<u64>,
}

impl FieldElement {
    /// Handle to the ambient field description.
    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    /// Coefficient vector `[c₀, …, c_{2n−1}]`, lowest degree first.
    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    /// Whether both elements live in the same field representation.
    pub fn same_spec(&self, other: &FieldElement) -> bool {
        Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec
    }

    fn assert_spec(&self, other: &FieldElement) {
        assert!(self.same_spec(other), "elements belong to different field representations");
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&a| a == 0)
    }

    /// True for the multiplicative identity.
    pub fn is_one(&self) -> bool {
        self.c[0] == 1 && self.c[1..].iter().all(|&a| a == 0)
    }

    /// Sum. Panics on mismatched specs; see [`FieldElement::checked_add`].
    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.assert_spec(other);
        let p = self.spec.p;
        let c = self.c.iter().zip(&other.c).map(|(&a, &b)| (a + b) % p).collect();
        FieldElement { spec: Arc::clone(&self.spec), c }
    }

    /// Difference. Panics on mismatched specs.
    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.assert_spec(other);
        let p = self.spec.p;
        let c = self.c.iter().zip(&other.c).map(|(&a, &b)| (a + p - b) % p).collect();
        FieldElement { spec: Arc::clone(&self.spec), c }
    }

    /// Additive inverse.
    pub fn neg(&self) -> FieldElement {
        let p = self.spec.p;
        let c = self.c.iter().map(|&a| (p - a) % p).collect();
        FieldElement { spec: Arc::clone(&self.spec), c }
    }

    /// Product. Panics on mismatched specs; see [`FieldElement::checked_mul`].
    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.assert_spec(other);
        let p = self.spec.p;
        let deg = self.spec.ext_degree();
        let mut prod = vec![0u64; 2 * deg - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                if b != 0 {
                    prod[i + j] = (prod[i + j] + a * b) % p;
                }
            }
        }
        let c = fp::rem_by_monic(&prod, &self.spec.modulus, p, deg);
        FieldElement { spec: Arc::clone(&self.spec), c }
    }

    /// Multiplicative inverse, or `DivisionByZero` for the zero element.
    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let p = self.spec.p;
        let inv = fp::invert_mod(&self.c, &self.spec.modulus, p);
        let mut c = inv;
        c.resize(self.spec.ext_degree(), 0);
        Ok(FieldElement { spec: Arc::clone(&self.spec), c })
    }

    /// Quotient `self / other`, or `DivisionByZero`.
    pub fn div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Spec-checked sum, for values straight from external input.
    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        if !self.same_spec(other) {
            return Err(FieldError::SpecMismatch);
        }
        Ok(self.add(other))
    }

    /// Spec-checked difference.
    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        if !self.same_spec(other) {
            return Err(FieldError::SpecMismatch);
        }
        Ok(self.sub(other))
    }

    /// Spec-checked product.
    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        if !self.same_spec(other) {
            return Err(FieldError::SpecMismatch);
        }
        Ok(self.mul(other))
    }

    /// Spec-checked quotient.
    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        if !self.same_spec(other) {
            return Err(FieldError::SpecMismatch);
        }
        self.div(other)
    }

    /// `self^e` by square-and-multiply (`0^0 = 1`).
    pub fn pow(&self, e: u128) -> FieldElement {
        let mut base = self.clone();
        let mut e = e;
        let mut acc = self.spec.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// The q-power Frobenius `a ↦ a^q`, the generator of `Gal(F_{q²}/F_q)`.
    pub fn frobenius_q(&self) -> FieldElement {
        self.pow(self.spec.q as u128)
    }

    /// Whether the element lies in the base subfield `F_q`, i.e. `a^q = a`.
    pub fn in_subfield(&self) -> bool {
        self.frobenius_q() == *self
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_spec(other) && self.c == other.c
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on coefficient vectors (`c₀` first); matches the order
/// of [`FieldSpec::elements`]. Only meaningful between elements of one spec.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.c.cmp(&other.c)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    /// Renders as a polynomial in `w`, highest degree first, e.g. `w^3 + 2w + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &a) in self.c.iter().enumerate().rev() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "w")?,
                (1, _) => write!(f, "{a}w")?,
                (_, 1) => write!(f, "w^{i}")?,
                (_, _) => write!(f, "{a}w^{i}")?,
            }
        }
        Ok(())
    }
}

/// Trial-division primality for the small characteristics this crate supports.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense univariate arithmetic over the prime field `F_p`, used for modulus
/// validation and for the extension-field reduce/invert kernels. Polynomials
/// are coefficient vectors, lowest degree first, not necessarily trimmed.
pub(crate) mod fp {
    /// Degree, treating the polynomial as trimmed; `None` for zero.
    pub fn deg(a: &[u64]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    fn inv_mod_p(a: u64, p: u64) -> u64 {
        // Fermat: a^(p-2) mod p. p is prime and a != 0 mod p.
        let mut acc = 1u64;
        let mut base = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    }

    /// Remainder of `a` under division by a monic modulus, padded to `width`.
    pub fn rem_by_monic(a: &[u64], modulus: &[u64], p: u64, width: usize) -> Vec<u64> {
        let m = deg(modulus).expect("modulus is nonzero");
        let mut r = a.to_vec();
        while let Some(d) = deg(&r) {
            if d < m {
                break;
            }
            let lead = r[d];
            // r -= lead * x^(d-m) * modulus
            for (i, &mc) in modulus.iter().enumerate().take(m + 1) {
                let idx = d - m + i;
                r[idx] = (r[idx] + p - lead * mc % p) % p;
            }
        }
        r.resize(width, 0);
        r
    }

    /// Full division `a = q·b + r` with arbitrary nonzero divisor.
    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let db = deg(b).expect("division by zero polynomial");
        let lb_inv = inv_mod_p(b[db], p);
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len().max(1)];
        while let Some(dr) = deg(&r) {
            if dr < db {
                break;
            }
            let coeff = r[dr] * lb_inv % p;
            q[dr - db] = coeff;
            for i in 0..=db {
                let idx = dr - db + i;
                r[idx] = (r[idx] + p - coeff * b[i] % p) % p;
            }
        }
        trim(&mut q);
        trim(&mut r);
        (q, r)
    }

    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if deg(a).is_none() || deg(b).is_none() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    out[i + j] = (out[i + j] + x * y) % p;
                }
            }
        }
        out
    }

    /// Extended-Euclid inverse of `a` modulo the (irreducible) modulus.
    pub fn invert_mod(a: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
        // Maintain r0 = s0*a (mod modulus), r1 = s1*a (mod modulus).
        let mut r0 = modulus.to_vec();
        let mut r1 = a.to_vec();
        trim(&mut r0);
        trim(&mut r1);
        let mut s0: Vec<u64> = vec![];
        let mut s1: Vec<u64> = vec![1];
        while deg(&r1).is_some() {
            let (q, r) = divrem(&r0, &r1, p);
            let qs1 = mul(&q, &s1, p);
            let mut s_new = s0.clone();
            s_new.resize(s_new.len().max(qs1.len()), 0);
            for (i, &c) in qs1.iter().enumerate() {
                s_new[i] = (s_new[i] + p - c) % p;
            }
            trim(&mut s_new);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s_new;
        }
        // r0 is a nonzero constant gcd (modulus irreducible, a != 0).
        let d0 = deg(&r0).expect("gcd of nonzero elements is nonzero");
        assert!(d0 == 0, "modulus must be irreducible");
        let scale = inv_mod_p(r0[0], p);
        let mut out = s0;
        for c in out.iter_mut() {
            *c = *c * scale % p;
        }
        rem_by_monic(&out.clone(), modulus, p, modulus.len() - 1)
    }

    /// Irreducibility over `F_p` by trial division against every monic
    /// polynomial of degree 1..=deg/2.
    pub fn is_irreducible(a: &[u64], p: u64) -> bool {
        let d = match deg(a) {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        if d == 1 {
            return true;
        }
        for dd in 1..=d / 2 {
            let count = (p as u128).pow(dd as u32);
            for k in 0..count {
                let mut b = vec![0u64; dd + 1];
                b[dd] = 1;
                let mut k = k;
                for coeff in b.iter_mut().take(dd) {
                    *coeff = (k % p as u128) as u64;
                    k /= p as u128;
                }
                let (_, r) = divrem(a, &b, p);
                if deg(&r).is_none() {
                    return false;
                }
            }
        }
        true
    }
}
