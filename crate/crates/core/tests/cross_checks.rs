//! Cross-module consistency checks: the same geometric quantity computed by
//! two independent routes must agree.

use std::collections::BTreeSet;
use std::sync::Arc;

use maxcurve_core::{
    analyze_point, determinant, frobenius_relation_check, hermitian_curve, BivariatePoly, FFElem,
    Field, FieldElement, FieldSpec, FunctionField, PlaneCurve, ProjectivePoint,
};

fn conic_f9() -> PlaneCurve {
    let f = FieldSpec::new(3, 1, None).unwrap();
    let mut a = BivariatePoly::zero(Arc::clone(&f));
    a.add_term(0, 1, f.one());
    a.add_term(2, 0, f.one().neg());
    PlaneCurve::new(a).unwrap().with_label("conic-f9")
}

fn elliptic_f9() -> PlaneCurve {
    let f = FieldSpec::new(3, 1, None).unwrap();
    let mut a = BivariatePoly::zero(Arc::clone(&f));
    a.add_term(0, 2, f.one());
    a.add_term(3, 0, f.from_prime(2));
    a.add_term(1, 0, f.one());
    a.add_term(0, 0, f.from_prime(2));
    PlaneCurve::new(a).unwrap().with_label("elliptic-ordinary-f9")
}

fn gallery() -> Vec<PlaneCurve> {
    vec![
        hermitian_curve(2).unwrap(),
        hermitian_curve(3).unwrap(),
        hermitian_curve(4).unwrap(),
        conic_f9(),
        elliptic_f9(),
    ]
}

/// The Frobenius order computed through the function-field identity must
/// match the vanishing of the Frobenius-tangent collinearity determinant
/// det [[1, x^{q²}, y^{q²}], [1, x, y], [0, 1, D¹y]].
#[test]
fn frobenius_order_agrees_with_the_collinearity_determinant() {
    for c in [hermitian_curve(2).unwrap(), hermitian_curve(3).unwrap(), conic_f9(), elliptic_f9()]
    {
        let k = FunctionField::new(&c).unwrap();
        let eps2 = k.order_sequence().unwrap().2;
        let nu1 = k.frobenius_order(eps2);

        let q2 = (c.spec().q() * c.spec().q()) as u128;
        let x = k.x();
        let y = k.y();
        let c1 = k.hasse_derivatives(1).coeff(1).clone();
        let one = k.constant(&c.spec().one());
        let zero = k.constant(&c.spec().zero());
        let m: Vec<Vec<FFElem>> = vec![
            vec![one.clone(), x.pow(q2), y.pow(q2)],
            vec![one.clone(), x.clone(), y.clone()],
            vec![zero, one, c1],
        ];
        let det = determinant::<FFElem>(k.ctx(), &m);
        assert_eq!(det.is_zero(), nu1 > 1, "curve {:?}", c.label());
    }
}

/// The polynomial-reduction route agrees as well, on every gallery curve.
#[test]
fn frobenius_relation_agrees_on_the_gallery() {
    for c in gallery() {
        let (holds, _) = frobenius_relation_check(&c);
        let k = FunctionField::new(&c).unwrap();
        let eps2 = k.order_sequence().unwrap().2;
        assert_eq!(holds, k.frobenius_order(eps2) > 1, "curve {:?}", c.label());
    }
}

/// ν₁ ≤ q + 1 − j₁(P) at every rational point of the Hermitian curves.
#[test]
fn nu1_bound_by_j1_at_every_point() {
    for q in [2u64, 3] {
        let c = hermitian_curve(q).unwrap();
        let k = FunctionField::new(&c).unwrap();
        let eps = k.order_sequence().unwrap();
        let nu1 = k.frobenius_order(eps.2);
        for p in c.rational_points() {
            let rep = analyze_point(&c, p, eps, nu1, false).unwrap();
            let j1 = rep.j_orders.1 as u64;
            assert!(
                (nu1 as u64) <= q + 1 - j1,
                "q = {q}, point {p}: nu1 = {nu1}, j1 = {j1}"
            );
        }
    }
}

/// Independent brute-force point enumeration: walk the z = 1 affine chart
/// and the line at infinity directly, evaluating polynomials term by term.
fn oracle_points(c: &PlaneCurve) -> BTreeSet<ProjectivePoint> {
    let spec = c.spec();
    let mut out = BTreeSet::new();
    let eval_homog = |x: &FieldElement, y: &FieldElement, z: &FieldElement| {
        let mut acc = spec.zero();
        for (i, j, kk, coeff) in c.homogeneous().terms() {
            let term = coeff
                .mul(&x.pow(i as u128))
                .mul(&y.pow(j as u128))
                .mul(&z.pow(kk as u128));
            acc = acc.add(&term);
        }
        acc
    };
    for x in spec.elements() {
        for y in spec.elements() {
            if c.affine().eval(&x, &y).is_zero() {
                out.insert(ProjectivePoint::new(x.clone(), y, spec.one()));
            }
        }
    }
    for x in spec.elements() {
        if eval_homog(&x, &spec.one(), &spec.zero()).is_zero() {
            out.insert(ProjectivePoint::new(x, spec.one(), spec.zero()));
        }
    }
    if eval_homog(&spec.one(), &spec.zero(), &spec.zero()).is_zero() {
        out.insert(ProjectivePoint::new(spec.one(), spec.zero(), spec.zero()));
    }
    out
}

#[test]
fn rational_points_agree_with_the_chart_oracle() {
    for c in gallery() {
        let fast: BTreeSet<ProjectivePoint> = c.rational_points().iter().cloned().collect();
        let slow = oracle_points(&c);
        assert_eq!(fast, slow, "curve {:?}", c.label());
        assert_eq!(fast.len() as u64, c.point_count());
    }
}

/// Function-field arithmetic, polynomial reduction, and pointwise
/// evaluation all present the same residue class.
#[test]
fn reduction_and_field_arithmetic_agree_pointwise() {
    for c in [hermitian_curve(3).unwrap(), conic_f9()] {
        let spec = Arc::clone(c.spec());
        // A = (x + y)^3 + x, watched through both routes.
        let mut xy = BivariatePoly::zero(Arc::clone(&spec));
        xy.add_term(1, 0, spec.one());
        xy.add_term(0, 1, spec.one());
        let mut a = xy.mul(&xy).mul(&xy);
        a.add_term(1, 0, spec.one());

        let reduced = maxcurve_core::poly_reduce(&a, c.affine()).unwrap();

        let k = FunctionField::new(&c).unwrap();
        let via_ff = k.from_bivar(&a);
        let via_red = k.from_bivar(&reduced);
        assert!(via_ff.sub(&via_red).is_zero(), "curve {:?}", c.label());

        // Pointwise on every affine rational point.
        for p in c.rational_points() {
            if p.z().is_zero() {
                continue;
            }
            let zi = p.z().inv().unwrap();
            let (x0, y0) = (p.x().mul(&zi), p.y().mul(&zi));
            assert_eq!(a.eval(&x0, &y0), reduced.eval(&x0, &y0), "at {p}");
        }
    }
}
