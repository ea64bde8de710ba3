//! Deterministic univariate factorization over the concrete finite field.
//!
//! Everything is exact and deterministic: p-th roots are coefficientwise
//! Frobenius preimages, the squarefree part handles inseparable layers by
//! recursion, Berlekamp's algorithm finds the distinct irreducible factors of
//! a squarefree polynomial, and splitting scans field elements in a fixed
//! order — no randomness, so results are reproducible bit for bit.

use std::sync::Arc;

use crate::field::{FieldElement, FieldSpec};
use crate::linalg::nullspace;
use crate::poly::Poly;

type FPoly = Poly<FieldElement>;

/// Coefficientwise p-th root of a polynomial in `x^p`: writes `f = u^p` and
/// returns `u`. Panics if some exponent is not a multiple of p (caller
/// guarantees `f' = 0` or an explicitly constructed p-th power).
fn pth_root(f: &FPoly) -> FPoly {
    let spec: &Arc<FieldSpec> = f.ctx();
    let p = spec.p() as usize;
    // a ↦ a^{q²/p} inverts x ↦ x^p on the field.
    let e = (spec.q2() / spec.p()) as u128;
    let mut c = Vec::new();
    for (i, a) in f.coeffs().iter().enumerate() {
        if i % p == 0 {
            c.push(a.pow(e));
        } else {
            assert!(a.is_zero(), "not a polynomial in x^p");
        }
    }
    Poly::new(spec.clone(), c)
}

/// Squarefree part (radical): the monic product of the distinct irreducible
/// factors. Correct in characteristic p: factors whose multiplicity the
/// derivative kills are recovered through p-th roots.
pub fn radical(f: &FPoly) -> FPoly {
    let ctx = f.ctx().clone();
    if f.deg().map_or(true, |d| d == 0) {
        return Poly::one(ctx);
    }
    let f = f.monic();
    let d = f.derivative();
    if d.is_zero() {
        // f = u^p exactly.
        return radical(&pth_root(&f));
    }
    let g = f.gcd(&d);
    let w = f.divrem(&g).0; // distinct factors with multiplicity not divisible by p
    // Strip every w-factor from g; what survives has all multiplicities
    // divisible by p, hence is an exact p-th power.
    let mut rest = g;
    loop {
        let c = rest.gcd(&w);
        if c.deg().map_or(true, |d| d == 0) {
            break;
        }
        rest = rest.divrem(&c).0;
    }
    if rest.deg().map_or(true, |d| d == 0) {
        return w.monic();
    }
    w.monic().mul(&radical(&pth_root(&rest)))
}

/// Frobenius matrix of `F_Q[x]/(f)`: column i holds `x^{iQ} mod f` in the
/// power basis.
fn frobenius_matrix(f: &FPoly) -> Vec<Vec<FieldElement>> {
    let spec = f.ctx().clone();
    let n = f.deg().expect("nonzero modulus");
    let q2 = spec.q2() as u128;
    let x = Poly::x(spec.clone());
    let xq = x.pow_mod(q2, f);
    // Columns by iterated multiplication: x^{iQ} = (x^Q)^i.
    let mut cols = Vec::with_capacity(n);
    let mut cur = Poly::one(spec.clone());
    for _ in 0..n {
        cols.push(cur.clone());
        cur = cur.mul(&xq).rem(f);
    }
    // Assemble row-major n×n matrix (rows = basis coordinates).
    (0..n)
        .map(|r| (0..n).map(|c| cols[c].coeff(r)).collect())
        .collect()
}

/// Distinct monic irreducible factors of a squarefree monic polynomial, by
/// Berlekamp's algorithm with deterministic splitting (field elements are
/// scanned in enumeration order). Returned sorted by (degree, coefficients).
fn berlekamp_squarefree(f: &FPoly) -> Vec<FPoly> {
    let spec = f.ctx().clone();
    let n = f.deg().expect("nonzero input");
    if n == 1 {
        return vec![f.monic()];
    }
    // Kernel of (Frobenius − identity): dimension = number of factors.
    let mut m = frobenius_matrix(f);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = row[i].sub(&spec.one());
    }
    let kernel = nullspace::<FieldElement>(&spec, &m);
    let want = kernel.len();
    let mut factors = vec![f.monic()];
    if want == 1 {
        return factors;
    }
    'outer: for v in &kernel {
        let vp = Poly::new(spec.clone(), v.clone());
        if vp.is_constant() {
            continue;
        }
        let mut next = Vec::new();
        for u in factors.drain(..) {
            if u.deg() == Some(1) {
                next.push(u);
                continue;
            }
            let mut pieces = vec![u];
            for c in spec.elements() {
                let shifted = vp.sub(&Poly::constant(spec.clone(), c));
                let mut split = Vec::new();
                for piece in pieces.drain(..) {
                    let g = piece.gcd(&shifted);
                    match g.deg() {
                        Some(d) if d > 0 && d < piece.deg().unwrap() => {
                            split.push(g.clone());
                            split.push(piece.divrem(&g).0.monic());
                        }
                        _ => split.push(piece),
                    }
                }
                pieces = split;
            }
            next.extend(pieces);
        }
        factors = next;
        if factors.len() == want {
            break 'outer;
        }
    }
    debug_assert_eq!(factors.len(), want, "Berlekamp splitting incomplete");
    factors.sort_by(|a, b| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| coeff_key(a).cmp(&coeff_key(b)))
    });
    factors
}

fn coeff_key(p: &FPoly) -> Vec<Vec<u64>> {
    p.coeffs().iter().map(|c| c.coeffs().to_vec()).collect()
}

/// Full factorization of a nonzero polynomial into monic irreducibles with
/// multiplicities, sorted by (degree, coefficients). The leading coefficient
/// is returned separately so the product reconstructs the input exactly.
pub fn factor(f: &FPoly) -> (FieldElement, Vec<(FPoly, usize)>) {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let lc = f.lc();
    let monic = f.monic();
    if monic.is_constant() {
        return (lc, vec![]);
    }
    let rad = radical(&monic);
    let irreducibles = berlekamp_squarefree(&rad);
    let mut out = Vec::new();
    for r in irreducibles {
        let mut m = 0usize;
        let mut rest = monic.clone();
        loop {
            let (q, rem) = rest.divrem(&r);
            if !rem.is_zero() {
                break;
            }
            m += 1;
            rest = q;
        }
        debug_assert!(m > 0);
        out.push((r, m));
    }
    (lc, out)
}

/// Whether a polynomial of degree ≥ 1 is irreducible over the field.
pub fn is_irreducible(f: &FPoly) -> bool {
    let Some(d) = f.deg() else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let monic = f.monic();
    let der = monic.derivative();
    if der.is_zero() {
        return false; // exact p-th power
    }
    if monic.gcd(&der).deg() != Some(0) {
        return false; // repeated factor
    }
    // Squarefree: irreducible iff the Berlekamp kernel is one-dimensional.
    let spec = monic.ctx().clone();
    let mut m = frobenius_matrix(&monic);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = row[i].sub(&spec.one());
    }
    nullspace::<FieldElement>(&spec, &m).len() == 1
}

/// All roots of `f` in the coefficient field, in enumeration order, with
/// multiplicities. Found by direct scan — the field has at most 2^16
/// elements by construction.
pub fn roots_in_field(f: &FPoly) -> Vec<(FieldElement, usize)> {
    let spec = f.ctx().clone();
    let mut out = Vec::new();
    if f.is_zero() {
        return out;
    }
    for a in spec.elements() {
        if !f.eval(&a).is_zero() {
            continue;
        }
        let lin = Poly::new(spec.clone(), vec![a.neg(), spec.one()]);
        let mut m = 0usize;
        let mut rest = f.clone();
        loop {
            let (q, r) = rest.divrem(&lin);
            if !r.is_zero() {
                break;
            }
            m += 1;
            rest = q;
        }
        out.push((a, m));
    }
    out
}
