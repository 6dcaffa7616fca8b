//! JSON algebra files.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "dim": 2,
//!   "labels": ["e0", "e1"],
//!   "structure_constants": [[0, 0, 0, "1"], [1, 1, 0, "-1"]],
//!   "alpha": [["1", "0"], ["0", "-1"]],
//!   "conjugation": null,
//!   "metadata": {}
//! }
//! ```
//!
//! Rationals are strings `"p"` or `"p/q"`; `alpha` and `conjugation` are
//! row-major.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::linear_map::LinearMap;
use crate::scalar::{self, Scalar};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: u32,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub structure_constants: Vec<(usize, usize, usize, String)>,
    pub alpha: Vec<Vec<String>>,
    #[serde(default)]
    pub conjugation: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

fn matrix_strings(m: &LinearMap) -> Vec<Vec<String>> {
    m.rows().iter().map(|r| r.iter().map(scalar::format).collect()).collect()
}

fn parse_at(text: &str, location: impl FnOnce() -> String) -> Result<Scalar> {
    scalar::parse(text).map_err(|e| match e {
        Error::ZeroDenominator(t) => Error::ZeroDenominator(format!("{t} at {}", location())),
        Error::BadRational(t) => Error::BadRational(format!("{t} at {}", location())),
        other => other,
    })
}

fn parse_matrix(rows: &[Vec<String>], dim: usize, field: &str) -> Result<LinearMap> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::Invalid(format!("{field} must be a {dim}×{dim} matrix")));
    }
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter().enumerate().map(|(j, t)| parse_at(t, || format!("{field}[{i}][{j}]"))).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    LinearMap::from_rows(&parsed)
}

impl AlgebraFile {
    pub fn from_algebra(h: &HomAlgebra) -> Self {
        AlgebraFile {
            format_version: FORMAT_VERSION,
            dim: h.dim(),
            labels: h.labels().map(<[String]>::to_vec),
            structure_constants: h.constants().into_iter().map(|(i, j, k, c)| (i, j, k, scalar::format(&c))).collect(),
            alpha: matrix_strings(h.alpha()),
            conjugation: h.conjugation().map(matrix_strings),
            metadata: h.metadata().clone(),
        }
    }

    pub fn to_algebra(&self) -> Result<HomAlgebra> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Invalid(format!("unsupported format_version {}", self.format_version)));
        }
        let d = self.dim;
        if d == 0 {
            return Err(Error::Invalid("dim must be positive".into()));
        }
        let mut entries = Vec::with_capacity(self.structure_constants.len());
        for (n, (i, j, k, c)) in self.structure_constants.iter().enumerate() {
            for &index in [i, j, k] {
                if index >= d {
                    return Err(Error::IndexOutOfRange { index, dim: d });
                }
            }
            entries.push((*i, *j, *k, parse_at(c, || format!("structure_constants[{n}]"))?));
        }
        let alpha = parse_matrix(&self.alpha, d, "alpha")?;
        let mut h = HomAlgebra::from_constants(d, entries, alpha)?;
        if let Some(c) = &self.conjugation {
            h = h.with_conjugation(parse_matrix(c, d, "conjugation")?)?;
        }
        if let Some(l) = &self.labels {
            h = h.with_labels(l.clone())?;
        }
        for (k, v) in &self.metadata {
            h = h.with_metadata(k.clone(), v.clone());
        }
        Ok(h)
    }
}

pub fn algebra_from_str(text: &str) -> Result<HomAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    file.to_algebra()
}

pub fn algebra_to_string(h: &HomAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(h)).expect("plain data") + "\n"
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<HomAlgebra> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    algebra_from_str(&text)
}

pub fn save_algebra(h: &HomAlgebra, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, algebra_to_string(h)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{load_octonions, twisted_octonions};

    #[test]
    fn round_trip_octonions() {
        let o = load_octonions();
        let back = algebra_from_str(&algebra_to_string(&o)).unwrap();
        assert_eq!(back, o);
        assert_eq!(back.conjugation(), o.conjugation());
        assert_eq!(back.labels(), o.labels());
    }

    #[test]
    fn twisted_file_stays_multiplicative() {
        let back = algebra_from_str(&algebra_to_string(&twisted_octonions())).unwrap();
        assert!(back.is_multiplicative());
    }

    #[test]
    fn fractional_constants_survive() {
        let h = HomAlgebra::from_constants(1, vec![(0, 0, 0, scalar::ratio(-7, 3))], LinearMap::identity(1)).unwrap();
        let text = algebra_to_string(&h);
        assert!(text.contains("\"-7/3\""));
        assert_eq!(algebra_from_str(&text).unwrap(), h);
    }

    const BASE: &str = r#"{"format_version":1,"dim":1,"structure_constants":[[0,0,0,"C"]],"alpha":[["1"]]}"#;

    #[test]
    fn malformed_inputs() {
        assert_eq!(algebra_from_str(&BASE.replace('C', "1/0")).unwrap_err().code(), "zero-denominator");
        assert_eq!(algebra_from_str(&BASE.replace('C', "one")).unwrap_err().code(), "bad-rational");
        let unknown = BASE.replace("\"dim\"", "\"colour\":1,\"dim\"");
        match algebra_from_str(&unknown).unwrap_err() {
            Error::Parse { location, message } => {
                assert!(location.starts_with("line 1"));
                assert!(message.contains("colour"));
            }
            e => panic!("{e:?}"),
        }
        let bad_index = BASE.replace("[0,0,0", "[0,3,0").replace('C', "1");
        assert_eq!(algebra_from_str(&bad_index).unwrap_err().code(), "dimension");
        let bad_alpha = BASE.replace("[[\"1\"]]", "[[\"1\",\"0\"]]").replace('C', "1");
        assert_eq!(algebra_from_str(&bad_alpha).unwrap_err().code(), "invalid");
    }
}
