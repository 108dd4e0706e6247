//! JSON encodings shared by the harness and the command line.
//!
//! Vertices are written as sorted 1-based element lists and read either in
//! that form or as hex mask strings such as `"0x5"`. Sets are lists of
//! vertices in binary order.

use serde::{Deserialize, Deserializer, Serializer};
use serde_json::{json, Value};

use crate::bounds::Rational;
use crate::boundary::EdgeSet;
use crate::cube::{mask_elements, CubeSet, CubeVertex, MAX_DIM};
use crate::error::{Error, Result};

/// Parses one vertex of `Q_dim`.
pub fn parse_vertex(value: &Value, dim: usize) -> Result<CubeVertex> {
    match value {
        Value::Array(items) => {
            let mut elements = Vec::with_capacity(items.len());
            for item in items {
                let e = item
                    .as_u64()
                    .ok_or_else(|| Error::Input(format!("vertex element {item} is not an integer")))?;
                if e == 0 || e > dim as u64 {
                    return Err(Error::ElementOutOfRange { element: e, dim });
                }
                elements.push(e as usize);
            }
            CubeVertex::from_elements(dim, &elements)
        }
        Value::String(s) => {
            let digits = s
                .strip_prefix("0x")
                .or_else(|| s.strip_prefix("0X"))
                .ok_or_else(|| Error::Input(format!("vertex string {s:?} is not a hex mask")))?;
            let mask = u64::from_str_radix(digits, 16)
                .map_err(|_| Error::Input(format!("vertex string {s:?} is not a hex mask")))?;
            if dim < 64 && mask >> dim != 0 {
                return Err(Error::MaskOutOfRange { mask, dim });
            }
            CubeVertex::new(dim, mask as u32)
        }
        other => Err(Error::Input(format!(
            "vertex must be an element list or hex string, got {other}"
        ))),
    }
}

/// Parses a list of vertices into a set of `Q_dim`.
pub fn parse_set(value: &Value, dim: usize) -> Result<CubeSet> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Input(format!("set must be a list of vertices, got {value}")))?;
    let mut set = CubeSet::empty(dim)?;
    for item in items {
        set.insert(parse_vertex(item, dim)?)?;
    }
    Ok(set)
}

pub fn mask_json(mask: u32) -> Value {
    json!(mask_elements(mask))
}

pub fn set_json(set: &CubeSet) -> Value {
    Value::Array(set.masks().map(mask_json).collect())
}

pub fn path_json(path: &[u32]) -> Value {
    Value::Array(path.iter().map(|&m| mask_json(m)).collect())
}

pub fn edges_json(edges: &EdgeSet) -> Value {
    Value::Array(
        edges
            .pairs()
            .iter()
            .map(|&(u, v)| json!({ "u": mask_elements(u), "v": mask_elements(v) }))
            .collect(),
    )
}

/// `"p/q"` with `q ≥ 1`.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A rational written in decimal: exact for integers, else as a real.
pub fn rational_decimal(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        fmt_real(*r.numer() as f64 / *r.denom() as f64)
    }
}

/// Twelve significant digits, trailing zeros dropped.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
        s.truncate(trimmed);
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

/// Serde adapter storing vertices as masks and writing them as element lists.
pub mod mask_lists {
    use super::*;

    pub fn serialize<S: Serializer>(masks: &[u32], ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(masks.iter().map(|&m| mask_elements(m)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Vec<u32>, D::Error> {
        let lists = Vec::<Vec<usize>>::deserialize(de)?;
        lists
            .into_iter()
            .map(|elements| {
                elements.into_iter().try_fold(0u32, |m, e| {
                    if e == 0 || e > MAX_DIM {
                        Err(serde::de::Error::custom(format!("element {e} out of range")))
                    } else {
                        Ok(m | 1 << (e - 1))
                    }
                })
            })
            .collect()
    }
}
