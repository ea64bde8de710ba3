//! Report rendering: a human-readable summary and a canonical JSON form.
//! JSON objects use sorted keys (serde_json's default map), so fixed inputs
//! produce byte-identical reports run after run.

use maxcurve_core::{AuditReport, Branch, PointReport};
use serde_json::{json, Value};

pub fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::A => "A",
        Branch::B => "B",
        Branch::Both => "both",
        Branch::Neither => "neither",
        Branch::NotApplicable => "not-applicable",
    }
}

fn point_json(p: &PointReport) -> Value {
    let poles: serde_json::Map<String, Value> =
        p.pole_orders.iter().map(|(n, v)| (n.clone(), json!(v))).collect();
    json!({
        "point": p.point.to_string(),
        "chart": p.chart,
        "parameter": p.parameter,
        "j": [p.j_orders.0, p.j_orders.1, p.j_orders.2],
        "vR": p.v_r,
        "vS": p.v_s,
        "weierstrass": p.is_weierstrass,
        "valuations": poles,
    })
}

/// The closed JSON schema: version, label, q, d, genus, points, maximal,
/// branch, epsilon, nu1, degS, degR, checks, and (with `with_points`)
/// point_table.
pub fn json_report(rep: &AuditReport, with_points: bool) -> Value {
    let checks: Vec<Value> = rep
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "expected": c.relation,
                "observed": c.observed,
                "pass": c.pass,
            })
        })
        .collect();
    let mut v = json!({
        "version": env!("CARGO_PKG_VERSION"),
        "label": rep.label,
        "q": rep.q,
        "d": rep.d,
        "genus": rep.genus,
        "points": rep.point_count,
        "maximal": rep.maximal,
        "branch": branch_name(rep.branch),
        "epsilon": rep.eps.map(|e| vec![e.0, e.1, e.2]),
        "nu1": rep.nu1,
        "degS": rep.deg_s,
        "degR": rep.deg_r,
        "checks": checks,
    });
    if with_points {
        v.as_object_mut().unwrap().insert(
            "point_table".to_string(),
            Value::Array(rep.points.iter().map(point_json).collect()),
        );
    }
    v
}

fn pass_str(pass: Option<bool>) -> &'static str {
    match pass {
        Some(true) => "pass",
        Some(false) => "FAIL",
        None => "n/a ",
    }
}

/// Human-readable report. Shows aggregates, the check table, and the first
/// five points; `all_points` lifts the truncation.
pub fn human_report(rep: &AuditReport, all_points: bool) -> String {
    let mut out = String::new();
    let label = rep.label.as_deref().unwrap_or("(unlabeled)");
    out.push_str(&format!(
        "curve {label}: degree {} over F_{} (p = {}, q = {}), genus {}\n",
        rep.d,
        rep.q * rep.q,
        rep.p,
        rep.q,
        rep.genus
    ));
    out.push_str(&format!(
        "points: {} rational; a maximal genus-{} curve has {} -> maximal: {}\n",
        rep.point_count, rep.genus, rep.expected_maximal_count, rep.maximal
    ));
    out.push_str(&format!(
        "dichotomy branch: {} (4g = {} vs (q-1)^2 = {}; 2g = {} vs (q-1)q = {})\n",
        branch_name(rep.branch),
        4 * rep.genus,
        (rep.q - 1) * (rep.q - 1),
        2 * rep.genus,
        (rep.q - 1) * rep.q
    ));
    if rep.theorem_violation {
        out.push_str("THEOREM-VIOLATION: a maximal curve matches neither dichotomy branch\n");
    }
    match (rep.eps, rep.nu1) {
        (Some(e), Some(n)) => {
            out.push_str(&format!("epsilon = ({}, {}, {}), nu1 = {n}\n", e.0, e.1, e.2));
        }
        _ => out.push_str("epsilon, nu1: n/a (degenerate line system)\n"),
    }
    if let (Some(ds), Some(dr)) = (rep.deg_s, rep.deg_r) {
        let tag = if rep.generalized_degrees { " (generalized: d differs from q+1)" } else { "" };
        out.push_str(&format!(
            "deg S = {ds} (sum of v_P(S) = {}), deg R = {dr} (sum of v_P(R) = {}){tag}\n",
            rep.sum_v_s.unwrap_or(0),
            rep.sum_v_r.unwrap_or(0)
        ));
    }
    let gaps: Vec<String> = rep.semigroup.gaps.iter().map(u64::to_string).collect();
    out.push_str(&format!(
        "semigroup <{}, {}>: {} gaps [{}]\n",
        rep.semigroup.generators[0],
        rep.semigroup.generators[1],
        rep.semigroup.gap_count,
        gaps.join(", ")
    ));
    for c in &rep.castelnuovo {
        out.push_str(&format!(
            "castelnuovo r = {} (assumed): M = {}, e = {}, bound 2g <= {}\n",
            c.r, c.m, c.e, c.bound_2g
        ));
    }
    out.push_str(&format!(
        "lemma chain (r = 2): lhs = {}, rhs = {}, certifies 4g <= (q-1)^2: {}\n",
        rep.lemma.lhs, rep.lemma.rhs, rep.lemma.certifies
    ));

    out.push_str("checks:\n");
    let width = rep.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &rep.checks {
        out.push_str(&format!(
            "  [{}] {:width$}  {}\n",
            pass_str(c.pass),
            c.name,
            c.observed,
            width = width
        ));
    }
    let (npass, nfail, nna) = rep.checks.iter().fold((0, 0, 0), |(p, f, n), c| match c.pass {
        Some(true) => (p + 1, f, n),
        Some(false) => (p, f + 1, n),
        None => (p, f, n + 1),
    });
    out.push_str(&format!("summary: {npass} passed, {nfail} failed, {nna} n/a\n"));

    if !rep.points.is_empty() {
        let shown = if all_points { rep.points.len() } else { rep.points.len().min(5) };
        out.push_str(&format!(
            "points ({} of {}{}):\n",
            shown,
            rep.points.len(),
            if shown < rep.points.len() { "; pass --points for all" } else { "" }
        ));
        out.push_str(
            "  point              chart  j-orders   v_R  v_S  W?  valuations\n",
        );
        for p in rep.points.iter().take(shown) {
            let vals: Vec<String> =
                p.pole_orders.iter().map(|(n, v)| format!("v({n}) = {v}")).collect();
            out.push_str(&format!(
                "  {:<18} {:<6} ({},{},{})    {:<4} {:<4} {}   {}\n",
                p.point.to_string(),
                p.chart,
                p.j_orders.0,
                p.j_orders.1,
                p.j_orders.2,
                p.v_r,
                p.v_s,
                if p.is_weierstrass { "W" } else { "-" },
                vals.join(", ")
            ));
        }
    }
    out
}

/// Exit code from the check table: 0 when every applicable row passed, 2
/// otherwise (a theorem violation always fails the dichotomy row).
pub fn exit_code(rep: &AuditReport) -> u8 {
    if rep.all_pass() && !rep.theorem_violation {
        0
    } else {
        2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::CurveFile;
    use maxcurve_core::assemble_report;

    fn hermitian_q2_report() -> AuditReport {
        let c = CurveFile::parse(crate::catalog::get("hermitian-q2").unwrap())
            .unwrap()
            .to_curve()
            .unwrap();
        assemble_report(&c).unwrap()
    }

    #[test]
    fn json_has_exactly_the_schema_keys() {
        let rep = hermitian_q2_report();
        let v = json_report(&rep, false);
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            vec![
                "branch", "checks", "d", "degR", "degS", "epsilon", "genus", "label", "maximal",
                "nu1", "points", "q", "version"
            ]
        );
        let v = json_report(&rep, true);
        assert!(v.as_object().unwrap().contains_key("point_table"));
        assert_eq!(v["point_table"].as_array().unwrap().len(), 9);
    }

    #[test]
    fn json_round_trips_and_is_stable() {
        let rep = hermitian_q2_report();
        let v = json_report(&rep, true);
        let s1 = serde_json::to_string_pretty(&v).unwrap();
        let parsed: Value = serde_json::from_str(&s1).unwrap();
        assert_eq!(parsed, v);
        let s2 = serde_json::to_string_pretty(&json_report(&hermitian_q2_report(), true)).unwrap();
        assert_eq!(s1, s2, "reports must be byte-identical across runs");
    }

    #[test]
    fn human_report_mentions_the_essentials() {
        let rep = hermitian_q2_report();
        let text = human_report(&rep, false);
        assert!(text.contains("maximal: true"));
        assert!(text.contains("branch: B"));
        assert!(text.contains("epsilon = (0, 1, 2), nu1 = 2"));
        assert!(text.contains("deg S = 18"));
        assert!(text.contains("summary:"));
        assert!(!text.contains("FAIL"));
        assert_eq!(exit_code(&rep), 0);
    }
}
