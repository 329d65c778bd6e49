//! Loading custom algebras from structure-constant files.
//!
//! A custom algebra is a JSON object (either standalone or embedded as the
//! `"algebra"` block of a diagram file):
//!
//! ```json
//! {
//!   "k": 1,
//!   "mult": [
//!     {"a": "y:1", "b": "z:1", "out": ["x"]},
//!     {"a": "z:1", "b": "y:1", "out": ["x"]}
//!   ],
//!   "eta": [["1", "x"], ["x", "1"], ["y:1", "z:1"], ["z:1", "y:1"]],
//!   "theta": {"1": ["x"]},
//!   "phi": {"1": {"y:1": ["z:1"], "z:1": ["y:1"]}},
//!   "Phi": {"y:1": ["z:1"], "z:1": ["y:1"]}
//! }
//! ```
//!
//! Generator tokens are `1`, `x`, `y:<bits>`, `z:<bits>`. Products with the
//! unit are filled in automatically unless listed; every other unlisted
//! product is zero. `eta` lists the ordered generator pairs that pair to 1.
//! `theta` (default zero), `phi` and `Phi` (default identity) are optional.

use super::{Algebra, AlgebraError, AlgebraName, BasisGen, Element, GenName, Label, LinearMap};
use serde_json::Value;
use std::collections::{BTreeMap, BTreeSet};

fn parse_element(v: &Value, k: u8, what: &str) -> Result<Element, AlgebraError> {
    let arr = v
        .as_array()
        .ok_or_else(|| AlgebraError::Malformed(format!("{what} must be a list of generators")))?;
    let mut e = Element::zero();
    for tok in arr {
        let s = tok
            .as_str()
            .ok_or_else(|| AlgebraError::Malformed(format!("{what} contains a non-string token")))?;
        e.add_term(BasisGen::parse(s, k)?);
    }
    Ok(e)
}

fn parse_linear_map(v: &Value, k: u8, what: &str) -> Result<LinearMap, AlgebraError> {
    let obj = v
        .as_object()
        .ok_or_else(|| AlgebraError::Malformed(format!("{what} must be an object")))?;
    let mut map = LinearMap::new();
    for (tok, img) in obj {
        let g = BasisGen::parse(tok, k)?;
        map.insert(g, parse_element(img, k, &format!("{what}[{tok}]"))?);
    }
    Ok(map)
}

/// Builds an algebra from the JSON block, with the label dimension supplied
/// externally (standalone files carry their own `"k"`; diagram-embedded
/// blocks inherit the diagram's).
pub fn algebra_from_json_with_dim(value: &Value, k: u8) -> Result<Algebra, AlgebraError> {
    let obj = value
        .as_object()
        .ok_or_else(|| AlgebraError::Malformed("algebra block must be an object".into()))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "k" | "mult" | "eta" | "theta" | "phi" | "Phi") {
            return Err(AlgebraError::Malformed(format!("unknown field '{key}'")));
        }
    }

    let mut mult: BTreeMap<(BasisGen, BasisGen), Element> = BTreeMap::new();
    if let Some(entries) = obj.get("mult") {
        let arr = entries
            .as_array()
            .ok_or_else(|| AlgebraError::Malformed("'mult' must be a list".into()))?;
        for entry in arr {
            let e = entry
                .as_object()
                .ok_or_else(|| AlgebraError::Malformed("'mult' entry must be an object".into()))?;
            let field = |name: &str| -> Result<&Value, AlgebraError> {
                e.get(name).ok_or_else(|| {
                    AlgebraError::Malformed(format!("'mult' entry is missing '{name}'"))
                })
            };
            let a = BasisGen::parse(
                field("a")?.as_str().ok_or_else(|| {
                    AlgebraError::Malformed("'mult' entry field 'a' must be a string".into())
                })?,
                k,
            )?;
            let b = BasisGen::parse(
                field("b")?.as_str().ok_or_else(|| {
                    AlgebraError::Malformed("'mult' entry field 'b' must be a string".into())
                })?,
                k,
            )?;
            let out = parse_element(field("out")?, k, "'mult' entry field 'out'")?;
            mult.insert((a, b), out);
        }
    }
    // fill unit products unless explicitly overridden
    let unit = BasisGen::unit(k);
    let gens: Vec<BasisGen> = Label::all(k)
        .flat_map(|l| {
            if l.is_zero() {
                [BasisGen::new(l, GenName::One), BasisGen::new(l, GenName::X)]
            } else {
                [BasisGen::new(l, GenName::Y), BasisGen::new(l, GenName::Z)]
            }
        })
        .collect();
    for &g in &gens {
        mult.entry((unit, g)).or_insert_with(|| Element::single(g));
        mult.entry((g, unit)).or_insert_with(|| Element::single(g));
    }

    let mut eta: BTreeSet<(BasisGen, BasisGen)> = BTreeSet::new();
    if let Some(entries) = obj.get("eta") {
        let arr = entries
            .as_array()
            .ok_or_else(|| AlgebraError::Malformed("'eta' must be a list of pairs".into()))?;
        for pair in arr {
            let p = pair
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| AlgebraError::Malformed("'eta' entry must be a pair".into()))?;
            let a = BasisGen::parse(
                p[0].as_str()
                    .ok_or_else(|| AlgebraError::Malformed("'eta' tokens must be strings".into()))?,
                k,
            )?;
            let b = BasisGen::parse(
                p[1].as_str()
                    .ok_or_else(|| AlgebraError::Malformed("'eta' tokens must be strings".into()))?,
                k,
            )?;
            eta.insert((a, b));
        }
    }

    let mut theta: BTreeMap<Label, Element> = BTreeMap::new();
    if let Some(entries) = obj.get("theta") {
        let map = entries
            .as_object()
            .ok_or_else(|| AlgebraError::Malformed("'theta' must be an object".into()))?;
        for (label_str, elem) in map {
            let label = Label::parse(label_str, k)?;
            theta.insert(label, parse_element(elem, k, &format!("theta[{label_str}]"))?);
        }
    }

    let mut phi: BTreeMap<Label, LinearMap> = BTreeMap::new();
    if let Some(entries) = obj.get("phi") {
        let map = entries
            .as_object()
            .ok_or_else(|| AlgebraError::Malformed("'phi' must be an object".into()))?;
        for (label_str, inner) in map {
            let label = Label::parse(label_str, k)?;
            phi.insert(label, parse_linear_map(inner, k, &format!("phi[{label_str}]"))?);
        }
    }

    let cap_phi = obj
        .get("Phi")
        .map(|v| parse_linear_map(v, k, "Phi"))
        .transpose()?;

    Algebra::from_parts(k, AlgebraName::Custom, mult, eta, theta, phi, cap_phi)
}

/// Parses a standalone custom-algebra file; the label dimension comes from
/// its `"k"` field.
pub fn algebra_from_json(text: &str) -> Result<Algebra, AlgebraError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| AlgebraError::Malformed(format!("invalid JSON: {e}")))?;
    let k = value
        .get("k")
        .and_then(Value::as_u64)
        .ok_or_else(|| AlgebraError::Malformed("missing integer field 'k'".into()))?;
    if k > u64::from(Label::MAX_DIM) {
        return Err(AlgebraError::Malformed(format!("label dimension {k} is too large")));
    }
    algebra_from_json_with_dim(&value, k as u8)
}

#[cfg(test)]
mod tests {
    use super::super::AlgebraName;
    use super::*;

    const KHOVANOV_ALGEBRA: &str = r#"{
        "k": 0,
        "mult": [{"a": "x", "b": "x", "out": []}],
        "eta": [["1", "x"], ["x", "1"]]
    }"#;

    #[test]
    fn khovanov_algebra_loads_and_passes_axioms() {
        let alg = algebra_from_json(KHOVANOV_ALGEBRA).unwrap();
        assert_eq!(alg.k(), 0);
        assert_eq!(alg.name(), AlgebraName::Custom);
        let report = alg.check_axioms().unwrap();
        assert!(
            report.all_passed(),
            "failures: {:?}",
            report.failures().collect::<Vec<_>>()
        );
    }

    #[test]
    fn custom_file_reproducing_builtin_matches_tables() {
        let text = r#"{
            "k": 1,
            "mult": [
                {"a": "y:1", "b": "z:1", "out": ["x"]},
                {"a": "z:1", "b": "y:1", "out": ["x"]}
            ],
            "eta": [["1", "x"], ["x", "1"], ["y:1", "z:1"], ["z:1", "y:1"]]
        }"#;
        let custom = algebra_from_json(text).unwrap();
        let builtin = Algebra::builtin(AlgebraName::L, 1).unwrap();
        for a in builtin.all_basis() {
            for b in builtin.all_basis() {
                assert_eq!(custom.mult_gens(a, b), builtin.mult_gens(a, b));
                assert_eq!(custom.eta_gens(a, b), builtin.eta_gens(a, b));
            }
        }
        assert!(custom.check_axioms().unwrap().all_passed());
    }

    #[test]
    fn malformed_files_are_rejected() {
        assert!(algebra_from_json("{").is_err());
        assert!(algebra_from_json(r#"{"mult": []}"#).is_err());
        assert!(algebra_from_json(r#"{"k": 1, "mult": [{"a": "q", "b": "x", "out": []}]}"#).is_err());
        assert!(algebra_from_json(r#"{"k": 1, "bogus": 3}"#).is_err());
    }
}
