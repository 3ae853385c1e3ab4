//! Re-verification of a stored certificate: re-run the named operation on
//! the recorded inputs and compare facts and verdict.

use holonomy_core::algebra::rational::parse_rational;
use holonomy_core::certificate::{Certificate, SCHEMA_VERSION};
use holonomy_core::error::{Error, Result};
use holonomy_core::ideal::GroebnerConfig;
use serde_json::Value;

use crate::commands;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reverification {
    pub kind: String,
    pub same_facts: bool,
    pub same_verdict: bool,
}

impl Reverification {
    pub fn passed(&self) -> bool {
        self.same_facts && self.same_verdict
    }
}

fn input_str<'a>(c: &'a Certificate, key: &str) -> Result<&'a str> {
    c.inputs
        .get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Domain(format!("{} certificate lacks the string input {key:?}", c.kind)))
}

fn input_int(c: &Certificate, key: &str) -> Result<i64> {
    c.inputs
        .get(key)
        .and_then(Value::as_i64)
        .ok_or_else(|| Error::Domain(format!("{} certificate lacks the integer input {key:?}", c.kind)))
}

/// Re-runs the operation that produced `c`.
pub fn rerun(c: &Certificate) -> Result<Certificate> {
    if c.schema != SCHEMA_VERSION {
        return Err(Error::Domain(format!("unsupported certificate schema {}", c.schema)));
    }
    let out = match c.kind.as_str() {
        "character_curve" => {
            let mut cfg = GroebnerConfig::default();
            if let Some(n) = c.inputs.get("max_pairs").and_then(Value::as_u64) {
                cfg.max_pairs = n as usize;
            }
            commands::derive_curve_with(&cfg, input_str(c, "strategy")? == "fallback")?
        }
        "irreducibility" => commands::irreducibility()?,
        "domains" => commands::domains()?,
        "classification" => {
            let s = parse_rational(input_str(c, "s")?)?;
            let t = match c.inputs.get("t").and_then(Value::as_str) {
                Some(t) => Some(parse_rational(t)?),
                None => None,
            };
            commands::classify(&s, t.as_ref())?
        }
        "slope" => commands::certify(input_int(c, "n")?)?,
        "positive_witness" => commands::witness(input_int(c, "n")?)?,
        "threshold" => {
            let tol = parse_rational(input_str(c, "bound_tolerance")?)?;
            commands::threshold(Some(&tol))?
        }
        "a_polynomial" => commands::apoly_validate()?,
        "alexander" => commands::alexander(input_str(c, "poly")?)?,
        other => return Err(Error::Domain(format!("unknown certificate kind {other:?}"))),
    };
    out.certificates.into_iter().next().ok_or_else(|| Error::Verification("the operation produced no certificate".into()))
}

pub fn reverify(c: &Certificate) -> Result<Reverification> {
    let fresh = rerun(c)?;
    Ok(Reverification { kind: c.kind.clone(), same_facts: fresh.facts == c.facts, same_verdict: fresh.verdict == c.verdict })
}

/// Parses a file holding one certificate or an array of them.
pub fn parse_certificates(text: &str) -> Result<Vec<Certificate>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Domain(format!("not JSON: {e}")))?;
    let items = match v {
        Value::Array(items) => items,
        other => vec![other],
    };
    items
        .into_iter()
        .map(|i| serde_json::from_value(i).map_err(|e| Error::Domain(format!("not a certificate: {e}"))))
        .collect()
}
