//! Self-contained inputs for a single theorem check.

use serde::{Deserialize, Serialize};

use crate::cube::CubeSet;
use crate::error::Result;
use crate::json::mask_lists;

/// Inputs of one check. Vertices are stored as masks and serialized as
/// element lists, so a certificate carries a full reproducer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Instance {
    Set {
        n: usize,
        #[serde(rename = "S", with = "mask_lists")]
        s: Vec<u32>,
    },
    SetCoord {
        n: usize,
        #[serde(rename = "S", with = "mask_lists")]
        s: Vec<u32>,
        i: usize,
    },
    Pair {
        n: usize,
        #[serde(rename = "A", with = "mask_lists")]
        a: Vec<u32>,
        #[serde(rename = "B", with = "mask_lists")]
        b: Vec<u32>,
    },
    Sandwich {
        n: usize,
        #[serde(rename = "A", with = "mask_lists")]
        a: Vec<u32>,
        #[serde(rename = "B", with = "mask_lists")]
        b: Vec<u32>,
        #[serde(rename = "S", with = "mask_lists")]
        s: Vec<u32>,
    },
    Level {
        n: usize,
        r: usize,
        #[serde(rename = "A", with = "mask_lists")]
        a: Vec<u32>,
    },
    Matching {
        n: usize,
        #[serde(rename = "A", with = "mask_lists")]
        a: Vec<u32>,
    },
}

fn masks(s: &CubeSet) -> Vec<u32> {
    s.masks().collect()
}

impl Instance {
    pub fn set(s: &CubeSet) -> Self {
        Instance::Set {
            n: s.dim(),
            s: masks(s),
        }
    }

    pub fn set_coord(s: &CubeSet, i: usize) -> Self {
        Instance::SetCoord {
            n: s.dim(),
            s: masks(s),
            i,
        }
    }

    pub fn pair(a: &CubeSet, b: &CubeSet) -> Self {
        Instance::Pair {
            n: a.dim(),
            a: masks(a),
            b: masks(b),
        }
    }

    pub fn sandwich(a: &CubeSet, b: &CubeSet, s: &CubeSet) -> Self {
        Instance::Sandwich {
            n: a.dim(),
            a: masks(a),
            b: masks(b),
            s: masks(s),
        }
    }

    pub fn level(a: &CubeSet, r: usize) -> Self {
        Instance::Level {
            n: a.dim(),
            r,
            a: masks(a),
        }
    }

    pub fn matching(a: &CubeSet) -> Self {
        Instance::Matching {
            n: a.dim(),
            a: masks(a),
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            Instance::Set { n, .. }
            | Instance::SetCoord { n, .. }
            | Instance::Pair { n, .. }
            | Instance::Sandwich { n, .. }
            | Instance::Level { n, .. }
            | Instance::Matching { n, .. } => n,
        }
    }

    pub fn shape_name(&self) -> &'static str {
        match self {
            Instance::Set { .. } => "set",
            Instance::SetCoord { .. } => "set_coord",
            Instance::Pair { .. } => "pair",
            Instance::Sandwich { .. } => "sandwich",
            Instance::Level { .. } => "level",
            Instance::Matching { .. } => "matching",
        }
    }
}

/// Builds a set of `Q_n` from stored masks, rejecting out-of-range ones.
pub(crate) fn load(n: usize, stored: &[u32]) -> Result<CubeSet> {
    CubeSet::from_masks(n, stored.iter().copied())
}
