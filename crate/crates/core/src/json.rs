//! JSON encodings.
//!
//! Group elements are written as canonical words `"s1s2"` with 1-based
//! letters (the identity is `""`). Rationals are strings `"p/q"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::algebra::{AlgebraElement, SubspaceBasis};
use crate::error::{Error, Result};
use crate::parabolic::DoubleCosetDecomposition;
use crate::rootsys::{RootSystem, WeylGroup};
use crate::steinberg::VerificationReport;

/// Version of the machine-readable output layout.
pub const SCHEMA_VERSION: u32 = 1;

pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {text:?}"));
    let (p, q) = match text.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

/// `{"word": "p/q", ...}` in enumeration order.
pub fn algebra_element_to_json(group: &WeylGroup, v: &AlgebraElement) -> Value {
    let map: Map<String, Value> = v
        .terms()
        .map(|(k, c)| (group.word_string(group.element(k)), Value::String(rational_string(c))))
        .collect();
    Value::Object(map)
}

pub fn algebra_element_from_json(group: &WeylGroup, value: &Value) -> Result<AlgebraElement> {
    let obj = value.as_object().ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    let terms = obj
        .iter()
        .map(|(word, c)| {
            let c = c.as_str().ok_or_else(|| Error::Parse(format!("coefficient of {word:?} is not a string")))?;
            Ok((group.parse_word(word)?, parse_rational(c)?))
        })
        .collect::<Result<Vec<_>>>()?;
    AlgebraElement::from_terms(group, terms)
}

pub fn basis_to_json(group: &WeylGroup, basis: &SubspaceBasis) -> Value {
    Value::Array(basis.vectors.iter().map(|v| algebra_element_to_json(group, v)).collect())
}

pub fn decomposition_to_json(group: &WeylGroup, d: &DoubleCosetDecomposition) -> Value {
    let cosets: Vec<Value> = d
        .cosets
        .iter()
        .map(|c| {
            json!({
                "min": group.word_string(c.min_rep),
                "max": group.word_string(c.max_rep),
                "size": c.len(),
            })
        })
        .collect();
    json!({ "J": d.left.indices(), "K": d.right.indices(), "cosets": cosets })
}

pub fn report_to_json(group: &WeylGroup, report: &VerificationReport) -> Value {
    let mut value = json!({
        "claim": report.claim,
        "expected": report.expected,
        "computed": report.computed,
        "passed": report.passed,
    });
    let obj = value.as_object_mut().expect("object literal");
    if let Some(witness) = &report.witness {
        obj.insert("witness".into(), basis_to_json(group, witness));
    }
    obj.insert("checks".into(), serde_json::to_value(&report.checks).expect("checks serialize"));
    value
}

/// Positive roots in order, with coordinates over the simple roots.
pub fn roots_to_json(roots: &RootSystem) -> Value {
    Value::Array(
        roots
            .positive_roots()
            .iter()
            .enumerate()
            .map(|(i, r)| json!({ "index": i, "coords": r.coords(), "height": r.height() }))
            .collect(),
    )
}

/// Group elements in enumeration order.
pub fn elements_to_json(group: &WeylGroup) -> Value {
    Value::Array(
        group
            .elements()
            .map(|w| json!({ "index": w.index(), "word": group.word_string(w), "length": group.length(w) }))
            .collect(),
    )
}
