//! Bivariate and trivariate polynomials over the concrete finite field.
//!
//! [`BivariatePoly`] is the affine form `f(u, v)` used for chart-local work:
//! partial derivatives, true bivariate gcds (content/primitive-part over
//! `F[u]` with the Euclidean step done over the rational function field),
//! resultants eliminating `v`, affine substitutions, and evaluation maps into
//! arbitrary extension rings (series, quotient fields). [`TrivariatePoly`] is
//! the homogeneous form `F(X, Y, Z)` a projective curve is stored as; the two
//! convert via dehomogenization and homogenization.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::field::{FieldElement, FieldSpec};
use crate::poly::Poly;
use crate::ratfunc::Rat;
use crate::ring::Field;
use crate::series::Series;

type FPoly = Poly<FieldElement>;
type RPoly = Poly<Rat<FieldElement>>;

/// An affine polynomial `Σ c_{ij} u^i v^j` with only nonzero terms stored.
#[derive(Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    spec: Arc<FieldSpec>,
    terms: BTreeMap<(u32, u32), FieldElement>,
}

impl BivariatePoly {
    pub fn zero(spec: Arc<FieldSpec>) -> Self {
        BivariatePoly { spec, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(spec: Arc<FieldSpec>, terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), FieldElement)>,
    {
        let mut p = BivariatePoly::zero(spec);
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn constant(spec: Arc<FieldSpec>, c: FieldElement) -> Self {
        BivariatePoly::from_terms(spec, [((0, 0), c)])
    }

    /// Adds `c · u^i v^j`, merging and dropping zeros.
    pub fn add_term(&mut self, i: u32, j: u32, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j));
        use std::collections::btree_map::Entry;
        match entry {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &FieldElement)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn coeff(&self, i: u32, j: u32) -> FieldElement {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| self.spec.zero())
    }

    pub fn deg_u(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn deg_v(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((i, j), c) in &other.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((i, j), c) in &other.terms {
            out.add_term(*i, *j, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BivariatePoly {
            spec: self.spec.clone(),
            terms: self.terms.iter().map(|(&k, c)| (k, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BivariatePoly::zero(self.spec.clone());
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, a: &FieldElement) -> Self {
        let mut out = BivariatePoly::zero(self.spec.clone());
        for ((i, j), c) in &self.terms {
            out.add_term(*i, *j, c.mul(a));
        }
        out
    }

    pub fn partial_u(&self) -> Self {
        let p = self.spec.p();
        let mut out = BivariatePoly::zero(self.spec.clone());
        for ((i, j), c) in &self.terms {
            if *i == 0 {
                continue;
            }
            let m = self.spec.from_prime((*i as u64) % p);
            out.add_term(i - 1, *j, c.mul(&m));
        }
        out
    }

    pub fn partial_v(&self) -> Self {
        let p = self.spec.p();
        let mut out = BivariatePoly::zero(self.spec.clone());
        for ((i, j), c) in &self.terms {
            if *j == 0 {
                continue;
            }
            let m = self.spec.from_prime((*j as u64) % p);
            out.add_term(*i, j - 1, c.mul(&m));
        }
        out
    }

    pub fn eval(&self, u: &FieldElement, v: &FieldElement) -> FieldElement {
        self.eval_generic(&|c: &FieldElement| c.clone(), u, v)
    }

    /// Evaluation into any field `K` through a coefficient embedding; powers
    /// are cached so the cost is linear in the support.
    pub fn eval_generic<K: Field>(
        &self,
        embed: &impl Fn(&FieldElement) -> K,
        u: &K,
        v: &K,
    ) -> K {
        let ctx = u.ctx();
        let du = self.deg_u().unwrap_or(0) as usize;
        let dv = self.deg_v().unwrap_or(0) as usize;
        let upow = power_table(&ctx, u, du);
        let vpow = power_table(&ctx, v, dv);
        let mut acc = K::zero(&ctx);
        for ((i, j), c) in &self.terms {
            let t = embed(c).mul(&upow[*i as usize]).mul(&vpow[*j as usize]);
            acc = acc.add(&t);
        }
        acc
    }

    /// Evaluation at a pair of series (same embedding trick); used by the
    /// branch expansions.
    pub fn eval_at_series<K: Field>(
        &self,
        embed: &impl Fn(&FieldElement) -> K,
        u: &Series<K>,
        v: &Series<K>,
    ) -> Series<K> {
        let ctx = u.ctx().clone();
        let prec = u.prec().min(v.prec());
        let one = Series::constant(ctx.clone(), K::one(&ctx), prec);
        let du = self.deg_u().unwrap_or(0) as usize;
        let dv = self.deg_v().unwrap_or(0) as usize;
        let mut upow = Vec::with_capacity(du + 1);
        upow.push(one.clone());
        for i in 1..=du {
            upow.push(upow[i - 1].mul(u));
        }
        let mut vpow = Vec::with_capacity(dv + 1);
        vpow.push(one);
        for j in 1..=dv {
            vpow.push(vpow[j - 1].mul(v));
        }
        let mut acc = Series::zero(ctx.clone(), prec);
        for ((i, j), c) in &self.terms {
            let t = upow[*i as usize].mul(&vpow[*j as usize]).scale(&embed(c));
            acc = acc.add(&t);
        }
        acc
    }

    /// Coefficients as polynomials in `u`, indexed by the `v`-exponent.
    pub fn coeffs_in_v(&self) -> Vec<FPoly> {
        let dv = match self.deg_v() {
            None => return vec![],
            Some(d) => d as usize,
        };
        let mut out = vec![Poly::zero(self.spec.clone()); dv + 1];
        for ((i, j), c) in &self.terms {
            let idx = *j as usize;
            let mono = Poly::monomial(self.spec.clone(), c.clone(), *i as usize);
            out[idx] = out[idx].add(&mono);
        }
        out
    }

    pub fn from_coeffs_in_v(spec: Arc<FieldSpec>, coeffs: &[FPoly]) -> Self {
        let mut out = BivariatePoly::zero(spec);
        for (j, p) in coeffs.iter().enumerate() {
            for (i, c) in p.coeffs().iter().enumerate() {
                out.add_term(i as u32, j as u32, c.clone());
            }
        }
        out
    }

    /// Exchanges the two variables.
    pub fn swap_vars(&self) -> Self {
        BivariatePoly {
            spec: self.spec.clone(),
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// View as a polynomial in `v` with rational-function coefficients in `u`.
    pub fn as_rat_poly_in_v(&self) -> RPoly {
        let coeffs = self
            .coeffs_in_v()
            .into_iter()
            .map(Rat::from_poly)
            .collect();
        Poly::new(self.spec.clone(), coeffs)
    }

    /// Inverse of [`Self::as_rat_poly_in_v`]; `None` if any coefficient has a
    /// nontrivial denominator.
    pub fn from_rat_poly_in_v(spec: Arc<FieldSpec>, p: &RPoly) -> Option<Self> {
        let mut coeffs = Vec::new();
        for r in p.coeffs() {
            if !r.is_polynomial() {
                return None;
            }
            coeffs.push(r.num().clone());
        }
        Some(BivariatePoly::from_coeffs_in_v(spec, &coeffs))
    }

    /// Content with respect to `v`: the monic gcd in `F[u]` of all
    /// `v`-coefficients.
    pub fn content_v(&self) -> FPoly {
        let mut g = Poly::zero(self.spec.clone());
        for c in self.coeffs_in_v() {
            g = g.gcd(&c);
        }
        g
    }

    /// True gcd in `F[u, v]`, monic as a polynomial in `v` over `F(u)` and
    /// with primitive, monic-content normalization — deterministic up to the
    /// stated normalization. Works for every degree shape, including inputs
    /// free of one variable.
    pub fn true_gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_assoc();
        }
        if other.is_zero() {
            return self.normalized_assoc();
        }
        let a_dv = self.deg_v().unwrap_or(0);
        let b_dv = other.deg_v().unwrap_or(0);
        if a_dv == 0 && b_dv == 0 {
            // Univariate in u.
            let a = self.coeffs_in_v().remove(0);
            let b = other.coeffs_in_v().remove(0);
            return BivariatePoly::from_coeffs_in_v(self.spec.clone(), &[a.gcd(&b)]);
        }
        if a_dv == 0 {
            // Common divisors lie in F[u]; they must divide other's content.
            let a = self.coeffs_in_v().remove(0);
            let g = a.gcd(&other.content_v());
            return BivariatePoly::from_coeffs_in_v(self.spec.clone(), &[g]);
        }
        if b_dv == 0 {
            return other.true_gcd(self);
        }
        // Both have positive v-degree: Gauss.
        let ca = self.content_v();
        let cb = other.content_v();
        let content_gcd = ca.gcd(&cb);
        let pa = self.div_content(&ca);
        let pb = other.div_content(&cb);
        let g_rat = pa.as_rat_poly_in_v().gcd(&pb.as_rat_poly_in_v());
        let pp = clear_denominators(&g_rat).primitive_part_v();
        let content_part = BivariatePoly::from_coeffs_in_v(self.spec.clone(), &[content_gcd]);
        pp.mul(&content_part)
    }

    fn normalized_assoc(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content_v();
        let pp = self.div_content(&c);
        // Normalize: content monic (gcd already is), primitive part with
        // monic leading v-coefficient.
        let ppn = pp.primitive_part_v();
        ppn.mul(&BivariatePoly::from_coeffs_in_v(self.spec.clone(), &[c]))
    }

    fn div_content(&self, c: &FPoly) -> Self {
        if c.deg() == Some(0) && c.lc().is_one() {
            return self.clone();
        }
        let coeffs: Vec<FPoly> = self
            .coeffs_in_v()
            .iter()
            .map(|p| {
                let (q, r) = p.divrem(c);
                debug_assert!(r.is_zero(), "content division must be exact");
                q
            })
            .collect();
        BivariatePoly::from_coeffs_in_v(self.spec.clone(), &coeffs)
    }

    /// Divides out the content in `v` and normalizes the leading
    /// `v`-coefficient to be monic in `u`.
    fn primitive_part_v(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content_v();
        let pp = self.div_content(&c);
        let coeffs = pp.coeffs_in_v();
        let lead = coeffs.last().unwrap();
        let lc = lead.lc();
        if lc.is_one() {
            return pp;
        }
        let inv = lc.inv().expect("leading coefficient is a unit");
        let scaled: Vec<FPoly> = coeffs.iter().map(|p| p.scale(&inv)).collect();
        BivariatePoly::from_coeffs_in_v(self.spec.clone(), &scaled)
    }

    /// Exact division: `Some(q)` with `self = q · d`, or `None` when the
    /// division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if d.is_zero() {
            return None;
        }
        let (q, r) = {
            let a = self.as_rat_poly_in_v();
            let b = d.as_rat_poly_in_v();
            if b.is_zero() {
                return None;
            }
            if a.deg() < b.deg() {
                return None;
            }
            a.divrem(&b)
        };
        if !r.is_zero() {
            return None;
        }
        BivariatePoly::from_rat_poly_in_v(self.spec.clone(), &q)
    }

    /// Resultant with respect to `v`: a univariate polynomial in `u` lying in
    /// the elimination ideal, so it vanishes at the `u`-coordinate of every
    /// common zero.
    pub fn resultant_v(&self, other: &Self) -> FPoly {
        let r = self.as_rat_poly_in_v().resultant(&other.as_rat_poly_in_v());
        debug_assert!(
            r.is_zero() || r.is_polynomial(),
            "resultant of polynomial inputs is a polynomial"
        );
        r.num().clone()
    }

    /// Substitution `u ↦ u + a`.
    pub fn subst_u_translate(&self, a: &FieldElement) -> Self {
        let coeffs: Vec<FPoly> = self.coeffs_in_v().iter().map(|p| p.taylor_shift(a)).collect();
        BivariatePoly::from_coeffs_in_v(self.spec.clone(), &coeffs)
    }

    /// Substitution `u ↦ a·u`.
    pub fn subst_u_scale(&self, a: &FieldElement) -> Self {
        let coeffs: Vec<FPoly> = self.coeffs_in_v().iter().map(|p| p.scale_var(a)).collect();
        BivariatePoly::from_coeffs_in_v(self.spec.clone(), &coeffs)
    }

    /// Substitution `v ↦ v + a`.
    pub fn subst_v_translate(&self, a: &FieldElement) -> Self {
        self.swap_vars().subst_u_translate(a).swap_vars()
    }

    /// Substitution `v ↦ a·v`.
    pub fn subst_v_scale(&self, a: &FieldElement) -> Self {
        self.swap_vars().subst_u_scale(a).swap_vars()
    }

    /// Specializes `u` to an element of an extension field, leaving a
    /// univariate polynomial in `v` over that field.
    pub fn specialize_u<K: Field>(
        &self,
        embed: &impl Fn(&FieldElement) -> K,
        u: &K,
    ) -> Poly<K> {
        let ctx = u.ctx();
        let coeffs: Vec<K> = self
            .coeffs_in_v()
            .iter()
            .map(|p| {
                // Horner in the extension.
                let mut acc = K::zero(&ctx);
                for c in p.coeffs().iter().rev() {
                    acc = acc.mul(u).add(&embed(c));
                }
                acc
            })
            .collect();
        Poly::new(ctx, coeffs)
    }

    pub fn to_string_vars(&self, u: &str, v: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        // Highest total degree first, then lexicographic.
        let mut keys: Vec<(u32, u32)> = self.terms.keys().cloned().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
            let mut body = String::new();
            if i > 0 {
                body.push_str(u);
                if i > 1 {
                    body.push_str(&format!("^{i}"));
                }
            }
            if j > 0 {
                if !body.is_empty() {
                    body.push(' ');
                }
                body.push_str(v);
                if j > 1 {
                    body.push_str(&format!("^{j}"));
                }
            }
            let cs = c.to_string();
            let part = if body.is_empty() {
                cs
            } else if c.is_one() {
                body
            } else if cs.contains(' ') || cs.contains('+') {
                format!("({cs}){body}")
            } else {
                format!("{cs}{body}")
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

fn power_table<K: Field>(ctx: &K::Ctx, x: &K, max: usize) -> Vec<K> {
    let mut t = Vec::with_capacity(max + 1);
    t.push(K::one(ctx));
    for i in 1..=max {
        let next = t[i - 1].mul(x);
        t.push(next);
    }
    t
}

/// Clears denominators of a polynomial over `F(u)`, returning a bivariate
/// polynomial equal to it up to a factor in `F[u]`.
fn clear_denominators(p: &RPoly) -> BivariatePoly {
    let spec: Arc<FieldSpec> = p.ctx().clone();
    if p.is_zero() {
        return BivariatePoly::zero(spec);
    }
    // lcm of denominators via repeated lcm = a·b / gcd.
    let mut l: FPoly = Poly::one(spec.clone());
    for r in p.coeffs() {
        let d = r.den();
        let g = l.gcd(d);
        l = l.mul(&d.divrem(&g).0);
    }
    let coeffs: Vec<FPoly> = p
        .coeffs()
        .iter()
        .map(|r| {
            let scaled = r.num().mul(&l);
            let (q, rem) = scaled.divrem(r.den());
            debug_assert!(rem.is_zero());
            q
        })
        .collect();
    BivariatePoly::from_coeffs_in_v(spec, &coeffs)
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_vars("u", "v"))
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A homogeneous polynomial `Σ c X^i Y^j Z^k` (homogeneity is validated where
/// curves are constructed, not in this container).
#[derive(Clone, PartialEq, Eq)]
pub struct TrivariatePoly {
    spec: Arc<FieldSpec>,
    terms: BTreeMap<(u32, u32, u32), FieldElement>,
}

impl TrivariatePoly {
    pub fn zero(spec: Arc<FieldSpec>) -> Self {
        TrivariatePoly { spec, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(spec: Arc<FieldSpec>, terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32, u32), FieldElement)>,
    {
        let mut p = TrivariatePoly::zero(spec);
        for ((i, j, k), c) in terms {
            p.add_term(i, j, k, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, k: u32, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j, k)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, u32, &FieldElement)> {
        self.terms.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    /// Common total degree if homogeneous (`None` for zero or mixed degrees).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|&(i, j, k)| i + j + k);
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Homogenizes an affine polynomial with `Z`: `x = X/Z`, `y = Y/Z`.
    pub fn homogenize(f: &BivariatePoly) -> Self {
        let d = f.total_degree().unwrap_or(0);
        let mut out = TrivariatePoly::zero(f.spec().clone());
        for (i, j, c) in f.terms() {
            out.add_term(i, j, d - i - j, c.clone());
        }
        out
    }

    /// Sets coordinate `chart` to 1; the remaining coordinates, in increasing
    /// index order, become `(u, v)`.
    pub fn dehomogenize(&self, chart: usize) -> BivariatePoly {
        assert!(chart < 3, "chart index out of range");
        let mut out = BivariatePoly::zero(self.spec.clone());
        for (&(i, j, k), c) in &self.terms {
            let (a, b) = match chart {
                0 => (j, k),
                1 => (i, k),
                _ => (i, j),
            };
            out.add_term(a, b, c.clone());
        }
        out
    }

    /// Partial derivative with respect to coordinate `axis` (0 = X, 1 = Y, 2 = Z).
    pub fn partial(&self, axis: usize) -> Self {
        assert!(axis < 3);
        let p = self.spec.p();
        let mut out = TrivariatePoly::zero(self.spec.clone());
        for (&(i, j, k), c) in &self.terms {
            let e = [i, j, k][axis];
            if e == 0 {
                continue;
            }
            let m = self.spec.from_prime((e as u64) % p);
            let (mut ni, mut nj, mut nk) = (i, j, k);
            match axis {
                0 => ni -= 1,
                1 => nj -= 1,
                _ => nk -= 1,
            }
            out.add_term(ni, nj, nk, c.mul(&m));
        }
        out
    }

    pub fn eval(&self, x: &FieldElement, y: &FieldElement, z: &FieldElement) -> FieldElement {
        self.eval_generic(&|c: &FieldElement| c.clone(), x, y, z)
    }

    /// Evaluation into an extension through a coefficient embedding.
    pub fn eval_generic<K: Field>(
        &self,
        embed: &impl Fn(&FieldElement) -> K,
        x: &K,
        y: &K,
        z: &K,
    ) -> K {
        let ctx = x.ctx();
        let dx = self.terms.keys().map(|&(i, _, _)| i).max().unwrap_or(0) as usize;
        let dy = self.terms.keys().map(|&(_, j, _)| j).max().unwrap_or(0) as usize;
        let dz = self.terms.keys().map(|&(_, _, k)| k).max().unwrap_or(0) as usize;
        let xp = power_table(&ctx, x, dx);
        let yp = power_table(&ctx, y, dy);
        let zp = power_table(&ctx, z, dz);
        let mut acc = K::zero(&ctx);
        for (&(i, j, k), c) in &self.terms {
            let t = embed(c)
                .mul(&xp[i as usize])
                .mul(&yp[j as usize])
                .mul(&zp[k as usize]);
            acc = acc.add(&t);
        }
        acc
    }

    pub fn scale(&self, a: &FieldElement) -> Self {
        let mut out = TrivariatePoly::zero(self.spec.clone());
        for (&(i, j, k), c) in &self.terms {
            out.add_term(i, j, k, c.mul(a));
        }
        out
    }
}

impl fmt::Display for TrivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        let mut keys: Vec<(u32, u32, u32)> = self.terms.keys().cloned().collect();
        keys.sort_by(|a, b| b.cmp(a));
        for (i, j, k) in keys {
            let c = &self.terms[&(i, j, k)];
            let mut body = String::new();
            for (name, e) in [("X", i), ("Y", j), ("Z", k)] {
                if e > 0 {
                    if !body.is_empty() {
                        body.push(' ');
                    }
                    body.push_str(name);
                    if e > 1 {
                        body.push_str(&format!("^{e}"));
                    }
                }
            }
            let cs = c.to_string();
            let part = if body.is_empty() {
                cs
            } else if c.is_one() {
                body
            } else if cs.contains(' ') || cs.contains('+') {
                format!("({cs}){body}")
            } else {
                format!("{cs}{body}")
            };
            parts.push(part);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TrivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
