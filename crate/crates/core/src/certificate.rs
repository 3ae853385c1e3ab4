//! Machine-checkable certificates. Every rational inside a certificate is the
//! decimal string `"num/den"`; floats never appear.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::rational::format_fraction;
use crate::algebra::Rational;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
/// Every computation is deterministic; the seed only feeds randomized
/// self-tests and is recorded for reproducibility.
pub const DEFAULT_SEED: u64 = 137;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fact {
    pub statement: String,
    pub method: String,
    pub exact_values: Value,
}

impl Fact {
    pub fn new(statement: impl Into<String>, method: impl Into<String>, exact_values: Value) -> Self {
        Fact { statement: statement.into(), method: method.into(), exact_values }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub kind: String,
    pub inputs: Value,
    pub facts: Vec<Fact>,
    pub verdict: String,
    pub tool_version: String,
    pub deterministic_seed: u64,
}

impl Certificate {
    pub fn new(kind: impl Into<String>, inputs: Value) -> Self {
        Certificate {
            schema: SCHEMA_VERSION,
            kind: kind.into(),
            inputs,
            facts: Vec::new(),
            verdict: String::new(),
            tool_version: TOOL_VERSION.to_string(),
            deterministic_seed: DEFAULT_SEED,
        }
    }

    pub fn fact(&mut self, statement: impl Into<String>, method: impl Into<String>, exact_values: Value) {
        self.facts.push(Fact::new(statement, method, exact_values));
    }

    pub fn with_verdict(mut self, verdict: impl Into<String>) -> Self {
        self.verdict = verdict.into();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

pub fn rational_value(r: &Rational) -> Value {
    json!(format_fraction(r))
}

/// Serde adapter for a `Rational` as `"num/den"`.
pub mod rational_str {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use crate::algebra::rational::{format_fraction, parse_rational};
    use crate::algebra::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_fraction(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }
}

/// Serde adapter for a list of rationals.
pub mod rational_vec {
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    use crate::algebra::rational::{format_fraction, parse_rational};
    use crate::algebra::Rational;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(format_fraction).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts.iter().map(|t| parse_rational(t).map_err(D::Error::custom)).collect()
    }
}

/// Serde adapter for a polynomial in the text format.
pub mod poly_str {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use crate::algebra::{parse_poly, MultiPoly};

    pub fn serialize<S: Serializer>(p: &MultiPoly, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.to_text())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<MultiPoly, D::Error> {
        let text = String::deserialize(d)?;
        parse_poly(&text).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Holder {
        #[serde(with = "rational_str")]
        r: Rational,
    }

    #[test]
    fn rationals_are_strings() {
        let h = Holder { r: rat(-3, 4) };
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(s, r#"{"r":"-3/4"}"#);
        assert_eq!(serde_json::from_str::<Holder>(&s).unwrap(), h);
    }

    #[test]
    fn certificate_round_trip() {
        let mut c = Certificate::new("test", json!({"n": -50}));
        c.fact("x", "exact", json!({"v": "1/2"}));
        let c = c.with_verdict("OK");
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.schema, 1);
    }
}
