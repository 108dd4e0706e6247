//! The compressions `C_i` and `D_i` and the descent that turns a sandwiched
//! set into a down-set without growing its directed boundary.
//!
//! `C_i` removes every member `x ∋ i` whose partner `x ∖ {i}` is missing;
//! `D_i` adds every `x` whose partner `x ∪ {i}` is present. Neither one alone
//! always shrinks the directed boundary, but at each coordinate one of them
//! does not grow it, and both leave the result `i`-down.

use serde::{Deserialize, Serialize};

use crate::boundary::{directed_edge_boundary_size, directed_vertex_boundary};
use crate::cube::{check_coord, down_set_witness, up_set_witness, CubeSet};
use crate::error::{Error, Result};

/// `C_i(S) = {x ∈ S : x ∖ {i} ∈ S}`.
pub fn compress_c(s: &CubeSet, i: usize) -> Result<CubeSet> {
    check_coord(i, s.dim())?;
    let b = i - 1;
    let keep = &CubeSet::avoiding_bit(s.dim(), b) | &s.lift_bit(b);
    Ok(s & &keep)
}

/// `D_i(S) = S ∪ {x : x ∪ {i} ∈ S}`.
pub fn compress_d(s: &CubeSet, i: usize) -> Result<CubeSet> {
    check_coord(i, s.dim())?;
    Ok(s | &s.drop_bit(i - 1))
}

/// Which directed boundary a compression run is measured against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryMode {
    Edge,
    Vertex,
}

impl BoundaryMode {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundaryMode::Edge => "edge",
            BoundaryMode::Vertex => "vertex",
        }
    }
}

/// `|∂⃗_e(S)|` or `|∂⃗_v(S)|`.
pub fn directed_boundary_size(s: &CubeSet, mode: BoundaryMode) -> usize {
    match mode {
        BoundaryMode::Edge => directed_edge_boundary_size(s),
        BoundaryMode::Vertex => directed_vertex_boundary(s).len(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Compression {
    C,
    D,
}

/// One coordinate of a descent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressionStep {
    pub i: usize,
    pub choice: Compression,
    pub boundary_before: usize,
    pub boundary_after: usize,
    pub mode: BoundaryMode,
}

/// Boundary drops `(|∂⃗(S)| − |∂⃗(D_i S)|, |∂⃗(S)| − |∂⃗(C_i S)|)`.
pub fn compression_gap(s: &CubeSet, i: usize, mode: BoundaryMode) -> Result<(i64, i64)> {
    let before = directed_boundary_size(s, mode) as i64;
    let d = directed_boundary_size(&compress_d(s, i)?, mode) as i64;
    let c = directed_boundary_size(&compress_c(s, i)?, mode) as i64;
    Ok((before - d, before - c))
}

/// Checks `A` down, `B` up, `A ∩ B = ∅` and `A ⊆ S ⊆ B^c`.
pub fn check_sandwich(s: &CubeSet, a: &CubeSet, b: &CubeSet) -> Result<()> {
    s.ensure_same_dim(a)?;
    s.ensure_same_dim(b)?;
    if let Some(x) = down_set_witness(a) {
        return Err(Error::precondition("A is not a down-set", Some(x.elements())));
    }
    if let Some(x) = up_set_witness(b) {
        return Err(Error::precondition("B is not an up-set", Some(x.elements())));
    }
    if let Some(x) = (a & b).vertices().next() {
        return Err(Error::precondition("A and B intersect", Some(x.elements())));
    }
    if let Some(x) = a.first_outside(s) {
        return Err(Error::precondition("A is not contained in S", Some(x.elements())));
    }
    if let Some(x) = (s & b).vertices().next() {
        return Err(Error::precondition("S meets B", Some(x.elements())));
    }
    Ok(())
}

/// Applies `C_i` or `D_i` for `i = 1..n` in turn, always picking an operator
/// that does not grow the directed boundary (`C_i` on ties), and returns a
/// down-set `S'` with `A ⊆ S' ⊆ B^c` and `|∂⃗(S')| ≤ |∂⃗(S)|`.
pub fn compress_to_down_set(
    s: &CubeSet,
    a: &CubeSet,
    b: &CubeSet,
    mode: BoundaryMode,
) -> Result<(CubeSet, Vec<CompressionStep>)> {
    check_sandwich(s, a, b)?;
    descend(s, mode)
}

/// The descent without the sandwich checks.
pub fn descend(s: &CubeSet, mode: BoundaryMode) -> Result<(CubeSet, Vec<CompressionStep>)> {
    let mut current = s.clone();
    let mut trace = Vec::with_capacity(s.dim());
    for i in 1..=s.dim() {
        let before = directed_boundary_size(&current, mode);
        let c = compress_c(&current, i)?;
        let after_c = directed_boundary_size(&c, mode);
        let (choice, next, after) = if after_c <= before {
            (Compression::C, c, after_c)
        } else {
            let d = compress_d(&current, i)?;
            let after_d = directed_boundary_size(&d, mode);
            if after_d > before {
                return Err(Error::LemmaViolation {
                    i,
                    before,
                    after_c,
                    after_d,
                });
            }
            (Compression::D, d, after_d)
        };
        trace.push(CompressionStep {
            i,
            choice,
            boundary_before: before,
            boundary_after: after,
            mode,
        });
        current = next;
    }
    Ok((current, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{is_down_set, is_i_down, sections, CubeVertex};

    fn set(dim: usize, members: &[&[usize]]) -> CubeSet {
        let vs: Vec<_> = members
            .iter()
            .map(|e| CubeVertex::from_elements(dim, e).unwrap())
            .collect();
        CubeSet::from_vertices(dim, &vs).unwrap()
    }

    fn all_sets(dim: usize) -> impl Iterator<Item = CubeSet> {
        (0..1u64 << (1 << dim)).map(move |bits| CubeSet::from_bits(dim, bits).unwrap())
    }

    #[test]
    fn operator_examples() {
        let s = set(2, &[&[], &[1, 2]]);
        assert_eq!(compress_c(&s, 1).unwrap(), set(2, &[&[]]));
        assert_eq!(compress_d(&s, 1).unwrap(), set(2, &[&[], &[2], &[1, 2]]));

        let s = set(2, &[&[1], &[1, 2]]);
        assert!(compress_c(&s, 1).unwrap().is_empty());
        assert_eq!(compress_d(&s, 1).unwrap(), CubeSet::full(2).unwrap());

        let down = set(3, &[&[], &[1], &[2], &[1, 2], &[3]]);
        for i in 1..=3 {
            assert_eq!(compress_c(&down, i).unwrap(), down);
            assert_eq!(compress_d(&down, i).unwrap(), down);
        }
        assert!(compress_c(&down, 4).is_err());
        assert!(compress_d(&down, 0).is_err());
    }

    #[test]
    fn gap_examples() {
        let s = set(2, &[&[], &[1, 2]]);
        assert_eq!(compression_gap(&s, 1, BoundaryMode::Edge).unwrap(), (1, 0));
        assert_eq!(compression_gap(&s, 1, BoundaryMode::Vertex).unwrap(), (1, 0));
        let down = set(3, &[&[], &[2], &[3], &[2, 3]]);
        for i in 1..=3 {
            for mode in [BoundaryMode::Edge, BoundaryMode::Vertex] {
                assert_eq!(compression_gap(&down, i, mode).unwrap(), (0, 0));
            }
        }
    }

    #[test]
    fn operators_agree_with_section_forms() {
        for dim in 1..=4 {
            for s in all_sets(dim) {
                for i in 1..=dim {
                    let d = sections(&s, i).unwrap();
                    let c = compress_c(&s, i).unwrap();
                    let dd = compress_d(&s, i).unwrap();
                    assert_eq!(c, &s - &d.v.times_element(i).unwrap());
                    assert_eq!(dd, &s | &d.v);
                    assert!(c.is_subset(&s) && s.is_subset(&dd));
                    assert!(is_i_down(&c, i).unwrap());
                    assert!(is_i_down(&dd, i).unwrap());
                    for j in 1..=dim {
                        if is_i_down(&s, j).unwrap() {
                            assert!(is_i_down(&c, j).unwrap());
                            assert!(is_i_down(&dd, j).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn descent_on_down_set_is_identity() {
        let a = set(2, &[&[]]);
        let b = set(2, &[&[1, 2]]);
        let s = set(2, &[&[], &[2]]);
        let (out, trace) = compress_to_down_set(&s, &a, &b, BoundaryMode::Edge).unwrap();
        assert_eq!(out, s);
        assert_eq!(trace.len(), 2);
        assert!(trace
            .iter()
            .all(|t| t.boundary_before == t.boundary_after && t.choice == Compression::C));
    }

    #[test]
    fn descent_example_in_q3() {
        let a = set(3, &[&[]]);
        let b = set(3, &[&[1, 2, 3]]);
        let s = set(3, &[&[], &[1, 2]]);
        for mode in [BoundaryMode::Edge, BoundaryMode::Vertex] {
            let before = directed_boundary_size(&s, mode);
            if mode == BoundaryMode::Edge {
                assert_eq!(before, 4);
            }
            let (out, trace) = compress_to_down_set(&s, &a, &b, mode).unwrap();
            assert!(is_down_set(&out));
            assert!(a.is_subset(&out) && out.is_disjoint(&b));
            assert!(directed_boundary_size(&out, mode) <= before);
            assert_eq!(trace.iter().map(|t| t.i).collect::<Vec<_>>(), vec![1, 2, 3]);
            assert_eq!(trace[0].boundary_before, before);
            for w in trace.windows(2) {
                assert_eq!(w[0].boundary_after, w[1].boundary_before);
            }
            for t in &trace {
                assert!(t.boundary_after <= t.boundary_before);
            }
        }
    }

    #[test]
    fn descent_rejects_bad_sandwiches() {
        let a = set(2, &[&[1]]);
        let b = set(2, &[&[1, 2]]);
        let s = set(2, &[&[1]]);
        match compress_to_down_set(&s, &a, &b, BoundaryMode::Edge) {
            Err(Error::Precondition { witness, .. }) => assert_eq!(witness, Some(vec![1])),
            other => panic!("{other:?}"),
        }
        let a = set(2, &[&[]]);
        let s = set(2, &[&[], &[1, 2]]);
        match compress_to_down_set(&s, &a, &b, BoundaryMode::Edge) {
            Err(Error::Precondition { condition, witness }) => {
                assert_eq!(condition, "S meets B");
                assert_eq!(witness, Some(vec![1, 2]));
            }
            other => panic!("{other:?}"),
        }
        let b = set(2, &[&[1]]);
        assert!(matches!(
            compress_to_down_set(&a, &a, &b, BoundaryMode::Vertex),
            Err(Error::Precondition { .. })
        ));
    }
}
