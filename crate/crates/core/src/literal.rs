//! Text forms of IFN values.
//!
//! JSON: `{"mu":[q1,q2,q3,q4],"nu":[q1,q2,q3,q4]}`, or the shorthands
//! `{"ifv":[m,n]}`, `{"ivif":[[a,b],[c,d]]}` and `{"tri":[[a,b,c],[e,f,g]]}`.
//! Numbers may be JSON numbers or strings (`"0.05"`, `"2/3"`).
//!
//! Compact (used in CSV cells): `<mu-knots|nu-knots>` where each side holds 1
//! (point), 2 (interval), 3 (triangle) or 4 (trapezoid) numbers separated by
//! spaces, commas or semicolons. `⟨…⟩` is accepted as well.

use serde_json::{json, Value};

use crate::error::Error;
use crate::number::{Ifn, IfnKind, TrapFn, Validation};
use crate::scalar::{parse_rational, to_exact_string, Rational};

/// A parsed value together with any downgraded validation failures.
pub type Parsed = (Ifn, Vec<Error>);

pub fn parse_json_str(text: &str, policy: Validation) -> Result<Parsed, Error> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    from_json(&value, policy)
}

pub fn from_json(value: &Value, policy: Validation) -> Result<Parsed, Error> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse(format!("IFN literal must be an object, got {value}")))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "mu" | "nu" | "ifv" | "ivif" | "tri" | "id" | "label") {
            return Err(Error::Parse(format!("unknown key {key:?} in IFN literal")));
        }
    }
    let forms = ["mu", "ifv", "ivif", "tri"].iter().filter(|k| obj.contains_key(**k)).count();
    if forms != 1 || obj.contains_key("mu") != obj.contains_key("nu") {
        return Err(Error::Parse(
            "IFN literal needs exactly one of mu+nu, ifv, ivif, tri".to_string(),
        ));
    }

    if let Some(pair) = obj.get("ifv") {
        let [m, n] = numbers::<2>(pair, "ifv")?;
        return build(side(vec![m]), side(vec![n]), IfnKind::IfValue, policy);
    }
    if let Some(pair) = obj.get("ivif") {
        let [mu, nu] = pair_of(pair, "ivif")?;
        let [a, b] = numbers::<2>(mu, "ivif membership")?;
        let [c, d] = numbers::<2>(nu, "ivif nonmembership")?;
        return build(side(vec![a, b]), side(vec![c, d]), IfnKind::Ivif, policy);
    }
    if let Some(pair) = obj.get("tri") {
        let [mu, nu] = pair_of(pair, "tri")?;
        let mu = numbers::<3>(mu, "tri membership")?;
        let nu = numbers::<3>(nu, "tri nonmembership")?;
        return build(side(mu.to_vec()), side(nu.to_vec()), IfnKind::Triangular, policy);
    }
    let mu = numbers::<4>(obj.get("mu").unwrap_or(&Value::Null), "mu")?;
    let nu = numbers::<4>(
        obj.get("nu").ok_or_else(|| Error::Parse("mu without nu".to_string()))?,
        "nu",
    )?;
    let mu = TrapFn::new(mu).map_err(|e| rename(e, "membership"))?;
    let nu = TrapFn::new(nu).map_err(|e| rename(e, "nonmembership"))?;
    Ifn::with_policy(mu, nu, None, policy)
}

/// Canonical JSON: the shorthand matching the kind tag, exact number strings.
pub fn to_json(ifn: &Ifn) -> Value {
    let s = |v: &Rational| Value::String(to_exact_string(v));
    let [a, b1, b2, c] = ifn.mu().knots();
    let [e, f1, f2, g] = ifn.nu().knots();
    match ifn.kind() {
        IfnKind::IfValue => json!({ "ifv": [s(a), s(e)] }),
        IfnKind::Ivif => json!({ "ivif": [[s(a), s(c)], [s(e), s(g)]] }),
        IfnKind::Triangular => json!({ "tri": [[s(a), s(b1), s(c)], [s(e), s(f1), s(g)]] }),
        IfnKind::Trapezoidal => json!({
            "mu": [s(a), s(b1), s(b2), s(c)],
            "nu": [s(e), s(f1), s(f2), s(g)],
        }),
    }
}

pub fn parse_compact(text: &str, policy: Validation) -> Result<Parsed, Error> {
    let t = text.trim();
    let inner = t
        .strip_prefix('<')
        .and_then(|s| s.strip_suffix('>'))
        .or_else(|| t.strip_prefix('⟨').and_then(|s| s.strip_suffix('⟩')))
        .ok_or_else(|| Error::Parse(format!("compact literal must look like <mu|nu>, got {t:?}")))?;
    let (mu, nu) = inner
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("missing '|' in {t:?}")))?;
    let parse_side = |s: &str| -> Result<Vec<Rational>, Error> {
        let v: Vec<Rational> = s
            .split(|c: char| c.is_whitespace() || c == ',' || c == ';')
            .filter(|p| !p.is_empty())
            .map(parse_rational)
            .collect::<Result<_, _>>()?;
        if v.is_empty() || v.len() > 4 {
            return Err(Error::Parse(format!("each side needs 1 to 4 numbers, got {s:?}")));
        }
        Ok(v)
    };
    let (mu, nu) = (parse_side(mu)?, parse_side(nu)?);
    let kind = match (mu.len(), nu.len()) {
        (1, 1) => Some(IfnKind::IfValue),
        (m, n) if m <= 2 && n <= 2 => Some(IfnKind::Ivif),
        (3, 3) => Some(IfnKind::Triangular),
        _ => None,
    };
    let (mu, nu) = (side(mu), side(nu));
    match kind {
        Some(kind) => build(mu, nu, kind, policy),
        None => {
            let mu = TrapFn::new(mu).map_err(|e| rename(e, "membership"))?;
            let nu = TrapFn::new(nu).map_err(|e| rename(e, "nonmembership"))?;
            Ifn::with_policy(mu, nu, None, policy)
        }
    }
}

pub fn to_compact(ifn: &Ifn) -> String {
    let [a, b1, b2, c] = ifn.mu().knots();
    let [e, f1, f2, g] = ifn.nu().knots();
    let join = |v: &[&Rational]| v.iter().map(|x| to_exact_string(x)).collect::<Vec<_>>().join(" ");
    let (mu, nu) = match ifn.kind() {
        IfnKind::IfValue => (join(&[a]), join(&[e])),
        IfnKind::Ivif => (join(&[a, c]), join(&[e, g])),
        IfnKind::Triangular => (join(&[a, b1, c]), join(&[e, f1, g])),
        IfnKind::Trapezoidal => (join(&[a, b1, b2, c]), join(&[e, f1, f2, g])),
    };
    format!("<{mu}|{nu}>")
}

/// Expands 1/2/3/4 numbers into trapezoid knots.
fn side(v: Vec<Rational>) -> [Rational; 4] {
    match v.len() {
        1 => [v[0].clone(), v[0].clone(), v[0].clone(), v[0].clone()],
        2 => [v[0].clone(), v[0].clone(), v[1].clone(), v[1].clone()],
        3 => [v[0].clone(), v[1].clone(), v[1].clone(), v[2].clone()],
        _ => [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()],
    }
}

fn build(mu: [Rational; 4], nu: [Rational; 4], kind: IfnKind, policy: Validation) -> Result<Parsed, Error> {
    let mu = TrapFn::new(mu).map_err(|e| rename(e, "membership"))?;
    let nu = TrapFn::new(nu).map_err(|e| rename(e, "nonmembership"))?;
    Ifn::with_policy(mu, nu, Some(kind), policy)
}

fn rename(err: Error, component: &'static str) -> Error {
    match err {
        Error::KnotOrder { knots, .. } => Error::KnotOrder { component, knots },
        other => other,
    }
}

pub fn number(value: &Value, what: &str) -> Result<Rational, Error> {
    match value {
        Value::Number(n) => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("{what}: expected a number, got {other}"))),
    }
}

fn numbers<const N: usize>(value: &Value, what: &str) -> Result<[Rational; N], Error> {
    let arr = value
        .as_array()
        .filter(|a| a.len() == N)
        .ok_or_else(|| Error::Parse(format!("{what}: expected an array of {N} numbers, got {value}")))?;
    let v: Vec<Rational> = arr.iter().map(|x| number(x, what)).collect::<Result<_, _>>()?;
    Ok(v.try_into().expect("length checked"))
}

fn pair_of<'a>(value: &'a Value, what: &str) -> Result<[&'a Value; 2], Error> {
    match value.as_array().map(Vec::as_slice) {
        Some([a, b]) => Ok([a, b]),
        _ => Err(Error::Parse(format!("{what}: expected [membership, nonmembership]"))),
    }
}

/// Reads a JSON object whose values are IFN literals, keeping key order.
pub fn named_literals(value: &Value, policy: Validation) -> Result<Vec<(String, Ifn)>, Error> {
    let entries: Vec<(String, &Value)> = match value {
        Value::Array(items) => items
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let id = v
                    .get("id")
                    .and_then(Value::as_str)
                    .map(str::to_string)
                    .unwrap_or_else(|| i.to_string());
                (id, v)
            })
            .collect(),
        Value::Object(map) => map.iter().map(|(k, v)| (k.clone(), v)).collect(),
        other => return Err(Error::Parse(format!("expected an array or object of IFN literals, got {other}"))),
    };
    if entries.is_empty() {
        return Err(Error::Parse("empty list of IFN literals".to_string()));
    }
    entries
        .into_iter()
        .map(|(id, v)| {
            from_json(v, policy)
                .map(|(ifn, _)| (id.clone(), ifn))
                .map_err(|e| Error::Cell { alternative: id, attribute: "-".into(), reason: e.to_string() })
        })
        .collect()
}
