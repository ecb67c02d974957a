//! Instance file format.
//!
//! ```json
//! {
//!   "gram":   [["1","0"],["0","1"]],
//!   "tensor": {"basis": "lex-bivector", "matrix": [["3"]]},
//!   "meta":   {"name": "round plane", "generator_spec": null}
//! }
//! ```
//!
//! Entries are exact rationals written as `"p/q"` strings or bare integers.
//! Floating-point literals and decimal strings are rejected. The tensor is
//! the operator `T` on `Λ²V` in the lexicographic basis `eᵢ∧eⱼ`, `i < j`,
//! with images in columns.

use crate::curvature::CurvatureTensor;
use crate::error::{Error, Result};
use crate::exactnum::{Mat, Rational};
use crate::generators::GeneratorSpec;
use crate::space::MetricSpace;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

type Q = Rational;

pub const BASIS_NAME: &str = "lex-bivector";

/// A rational that serializes as `"p/q"` and deserializes from such a
/// string or from a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry(pub Q);

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

struct EntryVisitor;

impl Visitor<'_> for EntryVisitor {
    type Value = Entry;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational as a \"p/q\" string or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Entry, E> {
        parse_rational(v).map(Entry).map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Entry, E> {
        Ok(Entry(Q::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Entry, E> {
        Ok(Entry(Q::from_integer(v.into())))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Entry, E> {
        Err(E::custom(format!(
            "floating-point value {v} is not exact; write it as a \"p/q\" string"
        )))
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(EntryVisitor)
    }
}

/// `"p/q"`, `"-p/q"` or `"p"`, with `q ≠ 0`. Surrounding whitespace is
/// not allowed.
pub fn parse_rational(s: &str) -> std::result::Result<Q, String> {
    let ok = !s.is_empty()
        && s.chars()
            .enumerate()
            .all(|(i, c)| c.is_ascii_digit() || c == '/' || (i == 0 && (c == '-' || c == '+')));
    if !ok {
        return Err(format!("\"{s}\" is not an exact rational of the form p/q"));
    }
    if let Some((_, den)) = s.split_once('/') {
        if den.trim_start_matches('0').is_empty() {
            return Err(format!("\"{s}\" has a zero denominator"));
        }
    }
    Q::from_str(s).map_err(|_| format!("\"{s}\" is not an exact rational of the form p/q"))
}

/// `#[serde(with = "rational_string")]` for a [`Rational`] field.
pub mod rational_string {
    use super::{Entry, Q};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Q, s: S) -> Result<S::Ok, S::Error> {
        Entry(v.clone()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        Entry::deserialize(d).map(|e| e.0)
    }

    pub mod option {
        use super::{Entry, Q};
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(v: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
            v.clone().map(Entry).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
            Option::<Entry>::deserialize(d).map(|e| e.map(|e| e.0))
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_spec: Option<GeneratorSpec>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorFile {
    basis: String,
    matrix: Vec<Vec<Entry>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    gram: Vec<Vec<Entry>>,
    tensor: TensorFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<Meta>,
}

/// A parsed and validated instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub space: MetricSpace<Q>,
    pub tensor: CurvatureTensor<Q>,
    pub meta: Option<Meta>,
}

fn to_mat(rows: Vec<Vec<Entry>>, what: &str) -> Result<Mat<Q>> {
    let n = rows.len();
    for r in &rows {
        if r.len() != n {
            return Err(Error::Validation {
                invariant: format!("{what} is square"),
                witness: format!("{n} rows but a row of length {}", r.len()),
            });
        }
    }
    Ok(Mat::from_rows(
        rows.into_iter().map(|r| r.into_iter().map(|e| e.0).collect()).collect(),
    ))
}

/// Parses and validates an instance: symmetric nondegenerate Gram matrix,
/// `N = n(n−1)/2`, self-adjoint tensor with zero Bianchi residual.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    if file.tensor.basis != BASIS_NAME {
        return Err(Error::Validation {
            invariant: "tensor basis".into(),
            witness: format!("expected \"{BASIS_NAME}\", found \"{}\"", file.tensor.basis),
        });
    }
    let gram = to_mat(file.gram, "gram")?;
    let n = gram.rows();
    let space = MetricSpace::new(gram)?;
    let matrix = to_mat(file.tensor.matrix, "tensor matrix")?;
    let big_n = n * n.saturating_sub(1) / 2;
    if matrix.rows() != big_n {
        return Err(Error::DimensionMismatch {
            expected: big_n,
            found: matrix.rows(),
        });
    }
    let tensor = CurvatureTensor::new(space.clone(), matrix)?;
    Ok(Instance {
        space,
        tensor,
        meta: file.meta,
    })
}

/// serde_json appends " at line L column C"; the position is kept separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn rows_of(m: &Mat<Q>) -> Vec<Vec<Entry>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(Entry).collect())
        .collect()
}

/// Pretty-printed instance file; `parse_instance` inverts it exactly.
pub fn serialize_instance(k: &CurvatureTensor<Q>, meta: Option<&Meta>) -> String {
    let file = InstanceFile {
        gram: rows_of(k.space().gram()),
        tensor: TensorFile {
            basis: BASIS_NAME.into(),
            matrix: rows_of(k.matrix()),
        },
        meta: meta.cloned(),
    };
    let mut out = serde_json::to_string_pretty(&file).expect("instance serializes");
    out.push('\n');
    out
}
