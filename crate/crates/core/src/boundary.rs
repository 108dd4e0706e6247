//! Edge and vertex boundaries, directed and undirected, plus surface,
//! lower shadow and the up-closure `h(S) = S ∪ ∂⃗_v(S)`.
//!
//! The `*_size` functions count with word-level bit operations; the set-valued
//! functions build the boundary explicitly. Both are kept so that each can be
//! checked against the other.

use crate::cube::{CubeSet, CubeVertex};
use crate::error::{Error, Result};

/// A set of cube edges, each stored as `(smaller, larger)` masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSet {
    dim: usize,
    edges: Vec<(u32, u32)>,
}

impl EdgeSet {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges as `(smaller, larger)` mask pairs, sorted.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn iter(&self) -> impl Iterator<Item = (CubeVertex, CubeVertex)> + '_ {
        let dim = self.dim;
        self.edges.iter().map(move |&(u, v)| {
            (
                CubeVertex::new_unchecked(dim, u),
                CubeVertex::new_unchecked(dim, v),
            )
        })
    }

    pub fn contains(&self, u: u32, v: u32) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.edges.iter().all(|&(u, v)| other.contains(u, v))
    }
}

/// Every edge of `Q_n` in ascending `(smaller, larger)` order.
fn cube_edges(dim: usize) -> impl Iterator<Item = (u32, u32)> {
    (0..1u32 << dim).flat_map(move |u| {
        (0..dim)
            .filter(move |b| u >> b & 1 == 0)
            .map(move |b| (u, u | 1 << b))
    })
}

/// `∂_e(S_1, S_2)` (or the directed `∂⃗_e(S_1, S_2)`: smaller endpoint in `S_1`,
/// larger in `S_2`). Membership of the two endpoints is tested independently,
/// so overlapping inputs are allowed.
pub fn edge_between(s1: &CubeSet, s2: &CubeSet, directed: bool) -> Result<EdgeSet> {
    s1.ensure_same_dim(s2)?;
    let edges = cube_edges(s1.dim())
        .filter(|&(u, v)| {
            (s1.contains_mask(u) && s2.contains_mask(v))
                || (!directed && s1.contains_mask(v) && s2.contains_mask(u))
        })
        .collect();
    Ok(EdgeSet {
        dim: s1.dim(),
        edges,
    })
}

/// `∂_e(S)`: edges with exactly one endpoint in `S`.
pub fn edge_boundary(s: &CubeSet) -> EdgeSet {
    edge_between(s, &s.complement(), false).expect("same dimension")
}

/// `∂⃗_e(S)`: boundary edges whose smaller endpoint is in `S`.
pub fn directed_edge_boundary(s: &CubeSet) -> EdgeSet {
    edge_between(s, &s.complement(), true).expect("same dimension")
}

/// `|∂_e(S)|`.
pub fn edge_boundary_size(s: &CubeSet) -> usize {
    (0..s.dim())
        .map(|b| {
            let lower = s & &CubeSet::avoiding_bit(s.dim(), b);
            (&lower ^ &s.drop_bit(b)).len()
        })
        .sum()
}

/// `|∂⃗_e(S)|`.
pub fn directed_edge_boundary_size(s: &CubeSet) -> usize {
    (0..s.dim())
        .map(|b| {
            let lower = s & &CubeSet::avoiding_bit(s.dim(), b);
            (&lower - &s.drop_bit(b)).len()
        })
        .sum()
}

/// Union of all one-step neighbours of `S` (upward only when `up_only`).
fn neighbours(s: &CubeSet, up_only: bool) -> CubeSet {
    let mut out = CubeSet::empty_unchecked(s.dim());
    for b in 0..s.dim() {
        out = &out | &s.lift_bit(b);
        if !up_only {
            out = &out | &s.drop_bit(b);
        }
    }
    out
}

/// `∂_v(S)`: vertices outside `S` adjacent to `S`.
pub fn vertex_boundary(s: &CubeSet) -> CubeSet {
    &neighbours(s, false) - s
}

/// `∂⃗_v(S)`: vertices outside `S` with a smaller neighbour in `S`.
pub fn directed_vertex_boundary(s: &CubeSet) -> CubeSet {
    &neighbours(s, true) - s
}

/// `σ(S) = ∂_v(S^c)`: members of `S` adjacent to the complement.
pub fn surface(s: &CubeSet) -> CubeSet {
    vertex_boundary(&s.complement())
}

/// Lower shadow of a family of `r`-sets, `r ≥ 1`: every set obtained by
/// deleting one element from a member.
pub fn lower_shadow(a: &CubeSet) -> Result<CubeSet> {
    let mut members = a.vertices();
    if let Some(first) = members.next() {
        let r = first.weight() as usize;
        if r == 0 {
            return Err(Error::precondition(
                "lower shadow needs sets of size at least 1",
                Some(first.elements()),
            ));
        }
        if let Some(bad) = members.find(|v| v.weight() as usize != r) {
            return Err(Error::NotLevelHomogeneous {
                expected: r,
                witness: bad.elements(),
            });
        }
    }
    let mut out = CubeSet::empty_unchecked(a.dim());
    for b in 0..a.dim() {
        out = &out | &a.drop_bit(b);
    }
    Ok(out)
}

/// `h(S) = S ∪ ∂⃗_v(S)`.
pub fn up_closure_h(s: &CubeSet) -> CubeSet {
    s | &directed_vertex_boundary(s)
}
