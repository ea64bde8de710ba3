//! Local geometry at a rational point: power-series expansion of the line
//! system's sections, (D,P)-orders, exact local valuations of the two
//! ramification divisors, and pole-order scans.
//!
//! Every quantity here is an exact order of vanishing of an exactly computed
//! truncated series; precision is raised on a fixed ladder and exhaustion is
//! a hard error, never a silent answer. Orders of the Frobenius divisor S
//! and the ramification divisor R are *computed* values — the classical
//! statements only bound them below, and the audit asserts those bounds
//! against what is computed here.

use std::sync::Arc;

use thiserror::Error;

use crate::bivar::{BivariatePoly, TrivariatePoly};
use crate::curve::{PlaneCurve, ProjectivePoint};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::rref;
use crate::series::{newton_lift_series, Series};

type FSeries = Series<FieldElement>;

#[derive(Debug, Error)]
pub enum LocalGeomError {
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("both partial derivatives vanish at the point (singular point)")]
    SingularPoint,
    #[error("the zero polynomial does not define a function")]
    ZeroFunction,
    #[error("{what}: series vanished to precision {max}; raise the cap or check for an identically-zero section")]
    PrecisionExhausted { what: &'static str, max: usize },
}

/// Truncated power-series expansion of the three sections of the line
/// system at a rational point, in the chart where the point's distinguished
/// coordinate is nonzero.
///
/// `s[i]` expands the i-th homogeneous coordinate divided by the chart
/// coordinate; the chart's own entry is the constant 1, so at least one
/// section is a unit. The series all satisfy the dehomogenized curve
/// equation exactly to the stored precision.
pub struct LocalExpansion {
    spec: Arc<FieldSpec>,
    point: ProjectivePoint,
    chart: usize,
    /// Dehomogenized model in the chart and its partials.
    g: BivariatePoly,
    gu: BivariatePoly,
    gv: BivariatePoly,
    /// Affine coordinates of the point in the chart.
    a: FieldElement,
    b: FieldElement,
    /// Whether the local parameter is (first affine coordinate − a); if
    /// false it is (second affine coordinate − b).
    param_is_first: bool,
    degree: u32,
    /// Coefficients are carried through t^n.
    n: usize,
    s: [FSeries; 3],
}

/// Expands the curve at `p` so all sections carry coefficients through t^n.
///
/// The chart is the last coordinate (in X, Y, Z order) that is nonzero at
/// `p` — so affine points use the standard Z-chart. The local parameter is
/// the affine coordinate whose *other* partial derivative survives at the
/// point: t = u − a when g_v(P) ≠ 0, else t = v − b; the remaining
/// coordinate is then a simple Hensel lift along t.
pub fn expand_at(
    curve: &PlaneCurve,
    p: &ProjectivePoint,
    n: usize,
) -> Result<LocalExpansion, LocalGeomError> {
    if !curve.is_on_curve(p) {
        return Err(LocalGeomError::PointNotOnCurve);
    }
    let coords = p.coords();
    let chart = if !coords[2].is_zero() {
        2
    } else if !coords[1].is_zero() {
        1
    } else {
        0
    };
    let inv = coords[chart].inv().expect("chart coordinate is nonzero");
    let (i0, i1) = match chart {
        2 => (0, 1),
        1 => (0, 2),
        _ => (1, 2),
    };
    let a = coords[i0].mul(&inv);
    let b = coords[i1].mul(&inv);
    let g = curve.homogeneous().dehomogenize(chart);
    let gu = g.partial_u();
    let gv = g.partial_v();
    let param_is_first = if !gv.eval(&a, &b).is_zero() {
        true
    } else if !gu.eval(&a, &b).is_zero() {
        false
    } else {
        return Err(LocalGeomError::SingularPoint);
    };
    let spec = curve.spec().clone();
    let zero = FSeries::zero(spec.clone(), 1);
    let shell = LocalExpansion {
        spec,
        point: p.clone(),
        chart,
        g,
        gu,
        gv,
        a,
        b,
        param_is_first,
        degree: curve.degree(),
        n: 0,
        s: [zero.clone(), zero.clone(), zero],
    };
    Ok(shell.reexpand(n))
}

impl LocalExpansion {
    /// Rebuilds the expansion with coefficients through t^n.
    fn reexpand(&self, n: usize) -> LocalExpansion {
        let prec = n + 1;
        let spec = self.spec.clone();
        let id = |c: &FieldElement| c.clone();
        let center = if self.param_is_first { self.a.clone() } else { self.b.clone() };
        let start = if self.param_is_first { self.b.clone() } else { self.a.clone() };
        let line = |p: usize| {
            Series::constant(spec.clone(), center.clone(), p).add(&Series::t(spec.clone(), p))
        };
        let lifted = if self.param_is_first {
            newton_lift_series(
                |vs: &FSeries| self.g.eval_at_series(&id, &line(vs.prec()), vs),
                |vs: &FSeries| self.gv.eval_at_series(&id, &line(vs.prec()), vs),
                start,
                prec,
            )
        } else {
            newton_lift_series(
                |us: &FSeries| self.g.eval_at_series(&id, us, &line(us.prec())),
                |us: &FSeries| self.gu.eval_at_series(&id, us, &line(us.prec())),
                start,
                prec,
            )
        };
        let (useries, vseries) =
            if self.param_is_first { (line(prec), lifted) } else { (lifted, line(prec)) };
        debug_assert!(
            self.g.eval_at_series(&id, &useries, &vseries).is_zero_to_prec(),
            "sections must satisfy the curve equation"
        );
        let one = Series::constant(spec.clone(), spec.one(), prec);
        let s = match self.chart {
            2 => [useries, vseries, one],
            1 => [useries, one, vseries],
            _ => [one, useries, vseries],
        };
        LocalExpansion {
            spec,
            point: self.point.clone(),
            chart: self.chart,
            g: self.g.clone(),
            gu: self.gu.clone(),
            gv: self.gv.clone(),
            a: self.a.clone(),
            b: self.b.clone(),
            param_is_first: self.param_is_first,
            degree: self.degree,
            n,
            s,
        }
    }

    pub fn point(&self) -> &ProjectivePoint {
        &self.point
    }

    /// Index of the coordinate the chart divides by (0 = X, 1 = Y, 2 = Z).
    pub fn chart(&self) -> usize {
        self.chart
    }

    /// Highest t-order carried by the section series.
    pub fn precision(&self) -> usize {
        self.n
    }

    pub fn sections(&self) -> &[FSeries; 3] {
        &self.s
    }

    /// Human-readable tag of the local parameter, e.g. "X/Z - 1".
    pub fn parameter_description(&self) -> String {
        let names: [(&str, &str); 3] =
            [("Y/X", "Z/X"), ("X/Y", "Z/Y"), ("X/Z", "Y/Z")];
        let (first, second) = names[self.chart];
        let (name, center) =
            if self.param_is_first { (first, &self.a) } else { (second, &self.b) };
        if center.is_zero() {
            format!("t = {name}")
        } else {
            format!("t = {name} - ({center})")
        }
    }

    /// The (D,P)-orders (j₀, j₁, j₂): the pivot columns of the row-reduced
    /// 3×(N+1) coefficient matrix of the sections — exactly the distinct
    /// orders of vanishing of sections of the system at the point. Raises
    /// precision on the ladder N, 2N, … capped at 4(d+1).
    pub fn j_orders(&self) -> Result<(u32, u32, u32), LocalGeomError> {
        let d1 = self.degree as usize + 1;
        let max = 4 * d1;
        let mut n = self.n.max(d1);
        loop {
            let e = self.reexpand(n);
            let mut m: Vec<Vec<FieldElement>> =
                e.s.iter().map(|si| (0..=n).map(|c| si.coeff(c)).collect()).collect();
            let piv = rref(&mut m);
            if piv.len() == 3 {
                return Ok((piv[0] as u32, piv[1] as u32, piv[2] as u32));
            }
            if n >= max {
                return Err(LocalGeomError::PrecisionExhausted { what: "j-orders", max });
            }
            n = (2 * n).min(max);
        }
    }

    /// Exact valuation at the point of the function num/den, where both
    /// polynomials are written in the affine coordinates (X/Z, Y/Z). The
    /// computation homogenizes both sides, so it is valid in every chart;
    /// negative results are pole orders.
    pub fn valuation_at(
        &self,
        num: &BivariatePoly,
        den: &BivariatePoly,
    ) -> Result<i64, LocalGeomError> {
        if num.is_zero() || den.is_zero() {
            return Err(LocalGeomError::ZeroFunction);
        }
        let nh = TrivariatePoly::homogenize(num);
        let dh = TrivariatePoly::homogenize(den);
        let dn = nh.homogeneous_degree().expect("nonzero") as i64;
        let dd = dh.homogeneous_degree().expect("nonzero") as i64;
        let mut n = self.n.max(self.degree as usize + 1);
        for attempt in 0..2 {
            let e = self.reexpand(n);
            let ns = eval_trivar_series(&nh, &e.s);
            let ds = eval_trivar_series(&dh, &e.s);
            if let (Some(num_ord), Some(den_ord), Some(z_ord)) =
                (ns.ord(), ds.ord(), e.s[2].ord())
            {
                return Ok(num_ord as i64 - den_ord as i64 - (dn - dd) * z_ord as i64);
            }
            if attempt == 0 {
                n *= 2;
            }
        }
        Err(LocalGeomError::PrecisionExhausted { what: "valuation", max: n })
    }

    /// Exact order at the point of the ramification divisor of the system:
    /// ord_t det[D^(ε_i) s_j] with term-wise Hasse derivatives.
    pub fn v_r(&self, eps: (u32, u32, u32)) -> Result<u64, LocalGeomError> {
        let d1 = self.degree as usize + 1;
        let max = 4 * d1;
        let mut n = self.n.max(d1);
        loop {
            let e = self.reexpand(n);
            let rows: Vec<[FSeries; 3]> = [eps.0, eps.1, eps.2]
                .iter()
                .map(|&k| {
                    [
                        e.s[0].hasse_derivative(k as usize),
                        e.s[1].hasse_derivative(k as usize),
                        e.s[2].hasse_derivative(k as usize),
                    ]
                })
                .collect();
            if let Some(o) = det3(&rows).ord() {
                return Ok(o as u64);
            }
            if n >= max {
                return Err(LocalGeomError::PrecisionExhausted { what: "v_P(R)", max });
            }
            n = (2 * n).min(max);
        }
    }

    /// Exact order at the point of the Frobenius divisor: ord_t of the
    /// determinant with rows [s_j^{q²}], [s_j], [D^(ν₁) s_j]. The Frobenius
    /// row stretches t-orders by q², so precision starts at q²(d+1)+1 and
    /// doubles once before giving up.
    pub fn v_s(&self, nu1: u32) -> Result<u64, LocalGeomError> {
        let q2 = self.spec.q2() as usize;
        let d1 = self.degree as usize + 1;
        let mut n = self.n.max(q2 * d1 + 1);
        for attempt in 0..2 {
            let e = self.reexpand(n);
            let prec = n + 1;
            let rows: Vec<[FSeries; 3]> = vec![
                [
                    e.s[0].pow_q2().truncate(prec),
                    e.s[1].pow_q2().truncate(prec),
                    e.s[2].pow_q2().truncate(prec),
                ],
                [e.s[0].clone(), e.s[1].clone(), e.s[2].clone()],
                [
                    e.s[0].hasse_derivative(nu1 as usize),
                    e.s[1].hasse_derivative(nu1 as usize),
                    e.s[2].hasse_derivative(nu1 as usize),
                ],
            ];
            if let Some(o) = det3(&rows).ord() {
                return Ok(o as u64);
            }
            if attempt == 0 {
                n *= 2;
            }
        }
        Err(LocalGeomError::PrecisionExhausted { what: "v_P(S)", max: n })
    }
}

/// 3×3 determinant of truncated series by cofactor expansion (precision is
/// the minimum across entries, as with all series products).
fn det3(m: &[[FSeries; 3]]) -> FSeries {
    let c0 = m[1][1].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][1]));
    let c1 = m[1][0].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][0]));
    let c2 = m[1][0].mul(&m[2][1]).sub(&m[1][1].mul(&m[2][0]));
    m[0][0].mul(&c0).sub(&m[0][1].mul(&c1)).add(&m[0][2].mul(&c2))
}

/// Evaluates a trivariate polynomial at a triple of series, caching powers.
fn eval_trivar_series(f: &TrivariatePoly, s: &[FSeries; 3]) -> FSeries {
    let ctx = s[0].ctx().clone();
    let prec = s.iter().map(|si| si.prec()).min().unwrap();
    let one = FSeries::constant(ctx.clone(), ctx.one(), prec);
    let mut pows: [Vec<FSeries>; 3] =
        [vec![one.clone()], vec![one.clone()], vec![one.clone()]];
    for (axis, p) in pows.iter_mut().enumerate() {
        let dmax = f.terms().map(|t| [t.0, t.1, t.2][axis]).max().unwrap_or(0);
        for e in 1..=dmax as usize {
            let next = p[e - 1].mul(&s[axis]);
            p.push(next);
        }
    }
    let mut acc = FSeries::zero(ctx, prec);
    for (i, j, k, c) in f.terms() {
        let term = pows[0][i as usize].mul(&pows[1][j as usize]).mul(&pows[2][k as usize]);
        acc = acc.add(&term.scale(c));
    }
    acc
}

/// Scans a fixed candidate list — the six coordinate fractions and the
/// degree ≤ 2 monomial fractions whose denominator is a power of the
/// point's chart coordinate — for functions with pole order exactly q,
/// respectively q+1, at the point. A `false` only means "not found among
/// candidates".
pub fn nongap_check(
    curve: &PlaneCurve,
    p: &ProjectivePoint,
) -> Result<(bool, bool), LocalGeomError> {
    let e = expand_at(curve, p, 2 * (curve.degree() as usize + 1))?;
    let spec = curve.spec();
    let q = spec.q() as i64;
    let mono = |i: u32, j: u32| {
        BivariatePoly::from_terms(Arc::clone(spec), [((i, j), spec.one())])
    };
    let mut cands: Vec<(BivariatePoly, BivariatePoly)> = vec![
        (mono(1, 0), mono(0, 0)), // X/Z
        (mono(0, 1), mono(0, 0)), // Y/Z
        (mono(0, 0), mono(1, 0)), // Z/X
        (mono(0, 0), mono(0, 1)), // Z/Y
        (mono(1, 0), mono(0, 1)), // X/Y
        (mono(0, 1), mono(1, 0)), // Y/X
    ];
    // Monomial fractions M / chart^deg(M) for total degrees up to 2. In the
    // Z-chart the denominator is 1 and these are just affine monomials.
    for m in 1..=2u32 {
        for i in 0..=m {
            for j in 0..=(m - i) {
                let den = match e.chart() {
                    2 => mono(0, 0),
                    1 => mono(0, m),
                    _ => mono(m, 0),
                };
                cands.push((mono(i, j), den));
            }
        }
    }
    let mut has_q = false;
    let mut has_q1 = false;
    for (nu, de) in &cands {
        if let Ok(v) = e.valuation_at(nu, de) {
            has_q |= v == -q;
            has_q1 |= v == -(q + 1);
        }
    }
    Ok((has_q, has_q1))
}

/// Per-point summary: (D,P)-orders, exact local orders of R and S, and the
/// Weierstrass flag (v_P(R) > 0). Pole orders of the affine coordinate
/// functions are included on request.
pub struct PointReport {
    pub point: ProjectivePoint,
    pub chart: usize,
    pub parameter: String,
    pub j_orders: (u32, u32, u32),
    pub v_r: u64,
    pub v_s: u64,
    pub is_weierstrass: bool,
    pub pole_orders: Vec<(String, i64)>,
}

pub fn analyze_point(
    curve: &PlaneCurve,
    p: &ProjectivePoint,
    eps: (u32, u32, u32),
    nu1: u32,
    with_coordinate_poles: bool,
) -> Result<PointReport, LocalGeomError> {
    let e = expand_at(curve, p, curve.degree() as usize + 1)?;
    let j = e.j_orders()?;
    let v_r = e.v_r(eps)?;
    let v_s = e.v_s(nu1)?;
    let mut pole_orders = Vec::new();
    if with_coordinate_poles {
        let spec = curve.spec();
        let one = BivariatePoly::from_terms(Arc::clone(spec), [((0, 0), spec.one())]);
        for (name, i, j) in [("x", 1u32, 0u32), ("y", 0, 1)] {
            let f = BivariatePoly::from_terms(Arc::clone(spec), [((i, j), spec.one())]);
            if let Ok(v) = e.valuation_at(&f, &one) {
                pole_orders.push((name.to_string(), v));
            }
        }
    }
    Ok(PointReport {
        point: p.clone(),
        chart: e.chart(),
        parameter: e.parameter_description(),
        j_orders: j,
        v_r,
        v_s,
        is_weierstrass: v_r > 0,
        pole_orders,
    })
}
