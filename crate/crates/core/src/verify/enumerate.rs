//! Exhaustive instance spaces for small dimensions.

use itertools::Itertools;

use crate::cube::CubeSet;
use crate::error::{Error, Result};

/// Largest `n` for which down-sets are enumerated.
pub const MAX_DOWN_SET_DIM: usize = 5;

fn down_set_bits(n: usize) -> Vec<u64> {
    if n == 0 {
        return vec![0, 1];
    }
    let smaller = down_set_bits(n - 1);
    let shift = 1 << (n - 1);
    let mut out = Vec::new();
    // D = D0 ∪ (D1 × {n}) is a down-set iff D0, D1 are and D1 ⊆ D0
    for &d0 in &smaller {
        for &d1 in &smaller {
            if d1 & d0 == d1 {
                out.push(d0 | d1 << shift);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Every down-set of `P[n]` (including `∅`), once each.
pub fn enumerate_down_sets(n: usize) -> Result<impl Iterator<Item = CubeSet>> {
    if n == 0 || n > MAX_DOWN_SET_DIM {
        return Err(Error::DimensionOutOfRange {
            dim: n,
            max: MAX_DOWN_SET_DIM,
        });
    }
    Ok(down_set_bits(n)
        .into_iter()
        .map(move |bits| CubeSet::from_bits(n, bits).expect("dimension checked")))
}

/// Every up-set of `P[n]`: complements of the down-sets.
pub fn enumerate_up_sets(n: usize) -> Result<impl Iterator<Item = CubeSet>> {
    Ok(enumerate_down_sets(n)?.map(|d| d.complement()))
}

/// Disjoint non-empty pairs `(A, B)` with `A` a down-set and `B` an up-set.
pub fn down_up_pairs(n: usize) -> Result<Vec<(CubeSet, CubeSet)>> {
    let downs: Vec<CubeSet> = enumerate_down_sets(n)?.filter(|d| !d.is_empty()).collect();
    let ups: Vec<CubeSet> = enumerate_up_sets(n)?.filter(|u| !u.is_empty()).collect();
    Ok(downs
        .iter()
        .cartesian_product(&ups)
        .filter(|(a, b)| a.is_disjoint(b))
        .map(|(a, b)| (a.clone(), b.clone()))
        .collect())
}

/// Every subset of `P[n]`, `n ≤ 5`, in order of its bit pattern.
pub fn all_subsets(n: usize) -> Result<impl Iterator<Item = CubeSet>> {
    if n == 0 || n > 5 {
        return Err(Error::DimensionOutOfRange { dim: n, max: 5 });
    }
    let count = 1u64 << (1 << n);
    Ok((0..count).map(move |bits| CubeSet::from_bits(n, bits).expect("dimension checked")))
}

/// Every ordered pair of disjoint non-empty subsets of `P[n]`, `n ≤ 3`.
pub fn disjoint_pairs(n: usize) -> Result<impl Iterator<Item = (CubeSet, CubeSet)>> {
    if n == 0 || n > 3 {
        return Err(Error::DimensionOutOfRange { dim: n, max: 3 });
    }
    let vertices = 1usize << n;
    // each vertex goes to A, B or neither: base-3 digits
    let total = 3u64.pow(vertices as u32);
    Ok((0..total).filter_map(move |mut code| {
        let (mut a, mut b) = (0u64, 0u64);
        for v in 0..vertices {
            match code % 3 {
                1 => a |= 1 << v,
                2 => b |= 1 << v,
                _ => {}
            }
            code /= 3;
        }
        (a != 0 && b != 0).then(|| {
            (
                CubeSet::from_bits(n, a).expect("dimension checked"),
                CubeSet::from_bits(n, b).expect("dimension checked"),
            )
        })
    }))
}

/// Every `S` with `A ⊆ S ⊆ B^c`.
pub fn sets_between(a: &CubeSet, b: &CubeSet) -> Vec<CubeSet> {
    let free: Vec<u32> = (a | b).complement().masks().collect();
    (0..1u64 << free.len())
        .map(|pick| {
            let mut s = a.clone();
            for (k, &m) in free.iter().enumerate() {
                if pick >> k & 1 == 1 {
                    s.insert_mask(m);
                }
            }
            s
        })
        .collect()
}

/// Every non-empty family of `r`-subsets of `[n]`, as a set of `Q_n`.
pub fn level_families(n: usize, r: usize) -> Result<impl Iterator<Item = CubeSet>> {
    if n == 0 || n > 5 {
        return Err(Error::DimensionOutOfRange { dim: n, max: 5 });
    }
    if r > n {
        return Err(Error::Input(format!("rank {r} exceeds dimension {n}")));
    }
    let level: Vec<u32> = (0..1u32 << n).filter(|m| m.count_ones() as usize == r).collect();
    Ok((1u64..1 << level.len()).map(move |pick| {
        let members = level
            .iter()
            .enumerate()
            .filter(|&(k, _)| pick >> k & 1 == 1)
            .map(|(_, &m)| m);
        CubeSet::from_masks(n, members).expect("dimension checked")
    }))
}
