//! The curve file format: UTF-8 text with `key = value` lines, one `term i
//! j [c0,c1,...]` line per monomial, and `#` comment lines. Parsing is
//! deterministic; unknown or duplicate keys are rejected, and coefficients
//! are reduced into the prime field on input (negative entries are allowed
//! and wrap, so `-1` means `p - 1`).

use std::collections::BTreeSet;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use maxcurve_core::{default_modulus, BivariatePoly, FieldSpec, PlaneCurve};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFile {
    pub p: u64,
    pub n: u32,
    pub modulus: Option<Vec<u64>>,
    pub label: Option<String>,
    /// (i, j, coefficient list c0..), exponents of x^i y^j.
    pub terms: Vec<(u32, u32, Vec<u64>)>,
}

fn parse_list(s: &str, what: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| anyhow!("{what}: expected a bracketed list like [1,0,2], got `{s}`"))?;
    let inner = inner.trim();
    if inner.is_empty() {
        bail!("{what}: the coefficient list is empty");
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .with_context(|| format!("{what}: `{}` is not an integer", tok.trim()))
        })
        .collect()
}

fn reduce(cs: &[i64], p: u64) -> Vec<u64> {
    cs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect()
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<CurveFile> {
        let mut p: Option<u64> = None;
        let mut n: Option<u32> = None;
        let mut modulus_raw: Option<Vec<i64>> = None;
        let mut label: Option<String> = None;
        let mut terms_raw: Vec<(u32, u32, Vec<i64>)> = Vec::new();
        let mut seen_keys: BTreeSet<&'static str> = BTreeSet::new();
        let mut seen_terms: BTreeSet<(u32, u32)> = BTreeSet::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let at = |msg: String| anyhow!("line {}: {msg}", lineno + 1);
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("term") {
                if !rest.starts_with(char::is_whitespace) {
                    return Err(at(format!("unrecognized line `{line}`")));
                }
                let mut it = rest.split_whitespace();
                let i: u32 = it
                    .next()
                    .ok_or_else(|| at("term: missing exponent of x".into()))?
                    .parse()
                    .map_err(|_| at("term: the x exponent must be a nonnegative integer".into()))?;
                let j: u32 = it
                    .next()
                    .ok_or_else(|| at("term: missing exponent of y".into()))?
                    .parse()
                    .map_err(|_| at("term: the y exponent must be a nonnegative integer".into()))?;
                let rest: String = it.collect::<Vec<_>>().join(" ");
                let coeffs = parse_list(&rest, "term").map_err(|e| at(e.to_string()))?;
                if !seen_terms.insert((i, j)) {
                    return Err(at(format!("duplicate term for x^{i} y^{j}")));
                }
                terms_raw.push((i, j, coeffs));
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(at(format!("unrecognized line `{line}` (expected `key = value` or `term i j [..]`)")));
            };
            let key = key.trim();
            let value = value.trim();
            match key {
                "p" => {
                    if !seen_keys.insert("p") {
                        return Err(at("duplicate key `p`".into()));
                    }
                    p = Some(value.parse().map_err(|_| at(format!("p: `{value}` is not a positive integer")))?);
                }
                "n" => {
                    if !seen_keys.insert("n") {
                        return Err(at("duplicate key `n`".into()));
                    }
                    n = Some(value.parse().map_err(|_| at(format!("n: `{value}` is not a positive integer")))?);
                }
                "modulus" => {
                    if !seen_keys.insert("modulus") {
                        return Err(at("duplicate key `modulus`".into()));
                    }
                    modulus_raw = Some(parse_list(value, "modulus").map_err(|e| at(e.to_string()))?);
                }
                "label" => {
                    if !seen_keys.insert("label") {
                        return Err(at("duplicate key `label`".into()));
                    }
                    if value.is_empty() {
                        return Err(at("label: must not be empty".into()));
                    }
                    label = Some(value.to_string());
                }
                other => return Err(at(format!("unknown key `{other}`"))),
            }
        }

        let p = p.ok_or_else(|| anyhow!("missing required key `p`"))?;
        let n = n.ok_or_else(|| anyhow!("missing required key `n`"))?;
        if p < 2 {
            bail!("p = {p} is not a prime");
        }
        if terms_raw.is_empty() {
            bail!("the polynomial has no terms");
        }
        let modulus = modulus_raw.map(|m| reduce(&m, p));
        let terms = terms_raw
            .into_iter()
            .map(|(i, j, cs)| (i, j, reduce(&cs, p)))
            .collect();
        Ok(CurveFile { p, n, modulus, label, terms })
    }

    /// Builds the field and the validated curve (smoothness included).
    pub fn to_curve(&self) -> Result<PlaneCurve> {
        let spec = FieldSpec::new(self.p, self.n, self.modulus.clone())
            .map_err(|e| anyhow!("field: {e}"))?;
        let mut poly = BivariatePoly::zero(Arc::clone(&spec));
        for (i, j, cs) in &self.terms {
            let c = spec.element(cs).map_err(|e| anyhow!("term x^{i} y^{j}: {e}"))?;
            poly.add_term(*i, *j, c);
        }
        let curve = PlaneCurve::new(poly).map_err(|e| anyhow!("curve: {e}"))?;
        Ok(match &self.label {
            Some(l) => curve.with_label(l.clone()),
            None => curve,
        })
    }

    /// Renders a curve back into the file format; the modulus line appears
    /// only when it differs from the canonical default.
    pub fn render(curve: &PlaneCurve) -> String {
        let spec = curve.spec();
        let deg = spec.ext_degree() as u32;
        let mut out = String::new();
        if let Some(l) = curve.label() {
            out.push_str(&format!("label = {l}\n"));
        }
        out.push_str(&format!("p = {}\n", spec.p()));
        out.push_str(&format!("n = {}\n", deg / 2));
        let is_default = default_modulus(spec.p(), deg)
            .map(|m| m == spec.modulus())
            .unwrap_or(false);
        if !is_default {
            let list: Vec<String> = spec.modulus().iter().map(u64::to_string).collect();
            out.push_str(&format!("modulus = [{}]\n", list.join(",")));
        }
        for (i, j, c) in curve.affine().terms() {
            let mut cs = c.coeffs().to_vec();
            while cs.len() > 1 && *cs.last().unwrap() == 0 {
                cs.pop();
            }
            let list: Vec<String> = cs.iter().map(u64::to_string).collect();
            out.push_str(&format!("term {i} {j} [{}]\n", list.join(",")));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HERMITIAN_Q3: &str = "\
# the Hermitian curve for q = 3
label = hermitian-q3
p = 3
n = 1
term 0 3 [1]
term 0 1 [1]
term 4 0 [-1]
";

    #[test]
    fn parses_and_builds() {
        let cf = CurveFile::parse(HERMITIAN_Q3).unwrap();
        assert_eq!(cf.p, 3);
        assert_eq!(cf.n, 1);
        assert_eq!(cf.label.as_deref(), Some("hermitian-q3"));
        // -1 wrapped into the prime field.
        assert_eq!(cf.terms[2], (4, 0, vec![2]));
        let curve = cf.to_curve().unwrap();
        assert_eq!(curve.point_count(), 28);
        assert_eq!(curve.genus(), 3);
    }

    #[test]
    fn round_trips_through_render() {
        let curve = CurveFile::parse(HERMITIAN_Q3).unwrap().to_curve().unwrap();
        let text = CurveFile::render(&curve);
        let again = CurveFile::parse(&text).unwrap().to_curve().unwrap();
        assert!(again.affine().sub(curve.affine()).is_zero());
        assert_eq!(again.label(), curve.label());
        // Deterministic: rendering twice gives identical bytes.
        assert_eq!(text, CurveFile::render(&again));
    }

    #[test]
    fn rejects_unknown_and_duplicate_keys() {
        let e = CurveFile::parse("p = 3\nn = 1\nq = 9\nterm 0 1 [1]\n").unwrap_err();
        assert!(e.to_string().contains("unknown key `q`"));
        let e = CurveFile::parse("p = 3\np = 5\nn = 1\nterm 0 1 [1]\n").unwrap_err();
        assert!(e.to_string().contains("duplicate key `p`"));
        let e = CurveFile::parse("p = 3\nn = 1\nterm 0 1 [1]\nterm 0 1 [2]\n").unwrap_err();
        assert!(e.to_string().contains("duplicate term"));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(CurveFile::parse("n = 1\nterm 0 1 [1]\n").unwrap_err().to_string().contains("`p`"));
        assert!(CurveFile::parse("p = 3\nn = 1\n").unwrap_err().to_string().contains("no terms"));
        let e = CurveFile::parse("p = 3\nn = 1\nterm 0 1 1,2\n").unwrap_err();
        assert!(e.to_string().contains("bracketed"));
        let e = CurveFile::parse("p = 3\nn = 1\nnonsense\n").unwrap_err();
        assert!(e.to_string().contains("unrecognized line"));
    }

    #[test]
    fn custom_modulus_is_honored_and_rendered() {
        // x^2 + 1 is irreducible over F_3.
        let text = "p = 3\nn = 1\nmodulus = [1,0,1]\nterm 0 1 [1]\nterm 2 0 [-1]\n";
        let cf = CurveFile::parse(text).unwrap();
        let curve = cf.to_curve().unwrap();
        assert_eq!(curve.spec().modulus(), &[1, 0, 1]);
        let rendered = CurveFile::render(&curve);
        let is_default = default_modulus(3, 2).map(|m| m == [1, 0, 1]).unwrap_or(false);
        assert_eq!(rendered.contains("modulus"), !is_default);
    }

    #[test]
    fn singular_curves_are_reported_with_a_witness() {
        let text = "p = 3\nn = 1\nterm 0 2 [1]\nterm 3 0 [-1]\n";
        let err = CurveFile::parse(text).unwrap().to_curve().unwrap_err();
        assert!(err.to_string().contains("singular"), "{err}");
        assert!(err.to_string().contains("(0:0:1)"), "{err}");
    }
}
