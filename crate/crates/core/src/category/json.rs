//! The category JSON format.

use std::collections::BTreeMap;
use std::io::Read;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{
    compute_fp_dims, FSymbolTable, FValue, FusionCategorySpec, FusionRing, QuantumDimensions, DIM_TOL, LOAD_TOL,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FEntry {
    pub abcd: [String; 4],
    pub e: String,
    pub f: String,
    #[serde(default)]
    pub mu: Vec<u32>,
    #[serde(default)]
    pub nu: Vec<u32>,
    #[serde(default)]
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

/// On-disk representation, one-to-one with the JSON schema.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub name: String,
    pub labels: Vec<String>,
    pub unit: String,
    pub dual: BTreeMap<String, String>,
    #[serde(rename = "N")]
    pub n: Vec<(String, String, String, u32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<BTreeMap<String, f64>>,
    #[serde(default)]
    pub dims_override: bool,
    #[serde(rename = "F")]
    pub f: Vec<FEntry>,
    pub convention: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn mult_pair(v: &[u32], what: &str) -> Result<[u32; 2]> {
    match v {
        [] => Ok([0, 0]),
        [a, b] => Ok([*a, *b]),
        _ => Err(schema(format!("{what} must have 0 or 2 entries"))),
    }
}

impl CategoryFile {
    fn into_parts(self) -> Result<(FusionCategorySpec, Option<Vec<f64>>)> {
        if self.convention != "isometry" {
            return Err(schema(format!("unsupported convention {:?}", self.convention)));
        }
        if self.labels.is_empty() {
            return Err(schema("label set is empty"));
        }
        let idx = |s: &str| {
            self.labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| schema(format!("unknown label {s:?}")))
        };
        let unit = idx(&self.unit)?;
        let mut dual = vec![usize::MAX; self.labels.len()];
        for (k, v) in &self.dual {
            dual[idx(k)?] = idx(v)?;
        }
        if let Some(x) = dual.iter().position(|&d| d == usize::MAX) {
            return Err(schema(format!("dual of {:?} missing", self.labels[x])));
        }
        let mut entries = Vec::with_capacity(self.n.len());
        for (x, y, z, m) in &self.n {
            entries.push((idx(x)?, idx(y)?, idx(z)?, *m));
        }
        let ring = FusionRing::new(self.labels.clone(), unit, dual, &entries)?;
        ring.validate()?;

        let computed = compute_fp_dims(&ring)?;
        let supplied = match &self.dims {
            None => None,
            Some(m) => {
                let mut d = vec![f64::NAN; ring.rank()];
                for (k, v) in m {
                    d[idx(k)?] = *v;
                }
                if let Some(x) = d.iter().position(|v| !v.is_finite()) {
                    return Err(schema(format!("dimension of {:?} missing", self.labels[x])));
                }
                Some(d)
            }
        };
        let dims = match (&supplied, self.dims_override) {
            (Some(d), true) => QuantumDimensions::from_dims(d.clone()),
            (Some(d), false) => {
                for (x, (&s, &c)) in d.iter().zip(&computed.d).enumerate() {
                    if (s - c).abs() > DIM_TOL {
                        return Err(Error::consistency(
                            "supplied dimension",
                            vec![self.labels[x].clone()],
                            (s - c).abs(),
                        ));
                    }
                }
                computed
            }
            (None, _) => computed,
        };

        let mut fvals = Vec::with_capacity(self.f.len());
        for ent in &self.f {
            let abcd = [
                idx(&ent.abcd[0])?,
                idx(&ent.abcd[1])?,
                idx(&ent.abcd[2])?,
                idx(&ent.abcd[3])?,
            ];
            if !ent.re.is_finite() || !ent.im.is_finite() {
                return Err(schema("non-finite F entry"));
            }
            fvals.push(FValue {
                abcd,
                e: idx(&ent.e)?,
                f: idx(&ent.f)?,
                mu: mult_pair(&ent.mu, "mu")?,
                nu: mult_pair(&ent.nu, "nu")?,
                value: Complex64::new(ent.re, ent.im),
            });
        }
        let fsymbols = FSymbolTable::from_entries(&ring, &fvals)?;
        let spec = FusionCategorySpec {
            name: self.name,
            ring,
            dims,
            fsymbols,
            metadata: self.metadata,
        };
        Ok((spec, supplied))
    }
}

fn read_file<R: Read>(mut source: R) -> Result<CategoryFile> {
    let mut buf = String::new();
    source.read_to_string(&mut buf)?;
    serde_json::from_str(&buf).map_err(|e| schema(e.to_string()))
}

/// Parses and fully validates a category file.
pub fn load_spec<R: Read>(source: R) -> Result<FusionCategorySpec> {
    let spec = load_spec_unchecked(source)?;
    spec.validate(LOAD_TOL)?;
    Ok(spec)
}

/// Parses a category file and checks the ring and dimensions only.
///
/// The F-symbols are not checked for unitarity or the pentagon, so broken
/// data can still be handed to the verification suites.
pub fn load_spec_unchecked<R: Read>(source: R) -> Result<FusionCategorySpec> {
    let (spec, _) = read_file(source)?.into_parts()?;
    Ok(spec)
}

impl FusionCategorySpec {
    pub fn to_file(&self) -> CategoryFile {
        let l = |x: usize| self.ring.name(x).to_string();
        let r = self.rank();
        CategoryFile {
            name: self.name.clone(),
            labels: self.ring.labels().to_vec(),
            unit: l(self.ring.unit()),
            dual: (0..r).map(|x| (l(x), l(self.ring.dual(x)))).collect(),
            n: self
                .ring
                .entries()
                .into_iter()
                .map(|(x, y, z, m)| (l(x), l(y), l(z), m))
                .collect(),
            dims: Some((0..r).map(|x| (l(x), self.d(x))).collect()),
            dims_override: false,
            f: self
                .fsymbols
                .nonzero_entries()
                .into_iter()
                .map(|v| FEntry {
                    abcd: v.abcd.map(l),
                    e: l(v.e),
                    f: l(v.f),
                    mu: v.mu.to_vec(),
                    nu: v.nu.to_vec(),
                    re: v.value.re,
                    im: v.value.im,
                })
                .collect(),
            convention: "isometry".into(),
            metadata: self.metadata.clone(),
        }
    }

    /// Serializes to the category JSON format.
    pub fn to_json(&self) -> String {
        crate::json::to_string(&self.to_file())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIVIAL: &str = r#"{
        "name": "trivial",
        "labels": ["1"],
        "unit": "1",
        "dual": {"1": "1"},
        "N": [["1", "1", "1", 1]],
        "F": [],
        "convention": "isometry"
    }"#;

    #[test]
    fn trivial_category_loads() {
        let spec = load_spec(TRIVIAL.as_bytes()).unwrap();
        assert_eq!(spec.rank(), 1);
        assert_eq!(spec.global_dim(), 1.0);
    }

    #[test]
    fn malformed_json_is_schema_error() {
        assert!(matches!(load_spec(&b"{"[..]), Err(Error::Schema(_))));
        let bad = TRIVIAL.replace("isometry", "trace");
        assert!(matches!(load_spec(bad.as_bytes()), Err(Error::Schema(_))));
        let bad = TRIVIAL.replace(r#"["1"]"#, "[]");
        assert!(matches!(load_spec(bad.as_bytes()), Err(Error::Schema(_))));
    }

    #[test]
    fn wrong_supplied_dims_rejected_unless_overridden() {
        let with_dims = TRIVIAL.replace(r#""F": []"#, r#""F": [], "dims": {"1": 2.0}"#);
        assert!(matches!(
            load_spec(with_dims.as_bytes()),
            Err(Error::Consistency { .. })
        ));
        let forced = with_dims.replace(r#""F": []"#, r#""F": [], "dims_override": true"#);
        let spec = load_spec_unchecked(forced.as_bytes()).unwrap();
        assert_eq!(spec.d(0), 2.0);
    }
}
