//! Exhaustive oracles for minimum cuts, independent of the flow solver.

use itertools::Itertools;

use crate::boundary::edge_between;
use crate::compression::BoundaryMode;
use crate::cube::CubeSet;
use crate::error::{Error, Result};

/// Largest number of free vertices `min_boundary_oracle` will sweep.
pub const MAX_ORACLE_FREE: usize = 24;

/// Largest number of free vertices `min_vertex_cut_oracle` will sweep.
pub const MAX_VERTEX_CUT_FREE: usize = 20;

fn free_vertices(a: &CubeSet, b: &CubeSet) -> Result<Vec<u32>> {
    a.ensure_same_dim(b)?;
    if let Some(x) = (a & b).vertices().next() {
        return Err(Error::precondition("A and B intersect", Some(x.elements())));
    }
    Ok((a | b).complement().masks().collect())
}

/// Per-vertex bookkeeping for toggling vertices in and out of `S` while
/// keeping the chosen boundary size current.
struct Sweep {
    dim: usize,
    kind: BoundaryMode,
    directed: bool,
    member: Vec<bool>,
    // vertex kinds: S-neighbours (all, or lower only when directed)
    count: Vec<u32>,
    size: i64,
}

impl Sweep {
    fn new(start: &CubeSet, kind: BoundaryMode, directed: bool) -> Self {
        let dim = start.dim();
        let total = 1usize << dim;
        let member: Vec<bool> = (0..total as u32).map(|m| start.contains_mask(m)).collect();
        let mut sweep = Sweep {
            dim,
            kind,
            directed,
            member,
            count: vec![0; total],
            size: 0,
        };
        match kind {
            BoundaryMode::Edge => {
                for u in 0..total as u32 {
                    for b in 0..dim {
                        let v = u | 1 << b;
                        if v != u && sweep.edge_counted(u, v) {
                            sweep.size += 1;
                        }
                    }
                }
            }
            BoundaryMode::Vertex => {
                for x in 0..total as u32 {
                    let c = sweep.relevant_neighbours_of_target(x)
                        .filter(|&y| sweep.member[y as usize])
                        .count() as u32;
                    sweep.count[x as usize] = c;
                    if !sweep.member[x as usize] && c > 0 {
                        sweep.size += 1;
                    }
                }
            }
        }
        sweep
    }

    // edge (lower, upper) belongs to the boundary under the current membership
    fn edge_counted(&self, lower: u32, upper: u32) -> bool {
        let l = self.member[lower as usize];
        let h = self.member[upper as usize];
        if self.directed {
            l && !h
        } else {
            l != h
        }
    }

    // vertices whose membership can put x in the vertex boundary
    fn relevant_neighbours_of_target(&self, x: u32) -> impl Iterator<Item = u32> + '_ {
        let directed = self.directed;
        (0..self.dim)
            .map(move |b| x ^ 1 << b)
            .filter(move |&y| !directed || y < x)
    }

    // vertices whose boundary status depends on the membership of v
    fn dependents(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        let directed = self.directed;
        (0..self.dim)
            .map(move |b| v ^ 1 << b)
            .filter(move |&w| !directed || w > v)
    }

    fn toggle(&mut self, v: u32) {
        match self.kind {
            BoundaryMode::Edge => {
                let edges: Vec<(u32, u32)> = (0..self.dim)
                    .map(|b| {
                        let w = v ^ 1 << b;
                        (v.min(w), v.max(w))
                    })
                    .collect();
                let before: i64 = edges.iter().filter(|&&(l, h)| self.edge_counted(l, h)).count() as i64;
                self.member[v as usize] = !self.member[v as usize];
                let after: i64 = edges.iter().filter(|&&(l, h)| self.edge_counted(l, h)).count() as i64;
                self.size += after - before;
            }
            BoundaryMode::Vertex => {
                let adding = !self.member[v as usize];
                self.member[v as usize] = adding;
                if self.count[v as usize] > 0 {
                    self.size += if adding { -1 } else { 1 };
                }
                let deps: Vec<u32> = self.dependents(v).collect();
                for w in deps {
                    let w = w as usize;
                    if adding {
                        self.count[w] += 1;
                        if !self.member[w] && self.count[w] == 1 {
                            self.size += 1;
                        }
                    } else {
                        self.count[w] -= 1;
                        if !self.member[w] && self.count[w] == 0 {
                            self.size -= 1;
                        }
                    }
                }
            }
        }
    }
}

/// Exact `min{|∂(S)| : A ⊆ S ⊆ B^c}` for the chosen boundary, by sweeping
/// every `S` in Gray-code order. Returns the minimum and the first minimizer.
pub fn min_boundary_oracle(
    a: &CubeSet,
    b: &CubeSet,
    kind: BoundaryMode,
    directed: bool,
) -> Result<(usize, CubeSet)> {
    let free = free_vertices(a, b)?;
    if free.len() > MAX_ORACLE_FREE {
        return Err(Error::InstanceTooLarge {
            free: free.len(),
            max: MAX_ORACLE_FREE,
        });
    }
    let mut sweep = Sweep::new(a, kind, directed);
    let mut best = sweep.size;
    let mut best_code = 0u64;
    for j in 1..1u64 << free.len() {
        sweep.toggle(free[j.trailing_zeros() as usize]);
        if sweep.size < best {
            best = sweep.size;
            best_code = j ^ (j >> 1);
        }
    }
    let mut argmin = a.clone();
    for (idx, &m) in free.iter().enumerate() {
        if best_code >> idx & 1 == 1 {
            argmin.insert_mask(m);
        }
    }
    Ok((best as usize, argmin))
}

/// `|F|`: edges joining `A` to `B` (directed: smaller endpoint in `A`).
pub fn interface_size(a: &CubeSet, b: &CubeSet, directed: bool) -> Result<usize> {
    Ok(edge_between(a, b, directed)?.len())
}

/// True when no walk from `A` reaches `B` in `Q_n` (or the directed cube)
/// after deleting the `A`–`B` edges and the vertices of `removed`.
pub fn separates(a: &CubeSet, b: &CubeSet, removed: &CubeSet, directed: bool) -> bool {
    let dim = a.dim();
    let total = 1usize << dim;
    let mut seen = vec![false; total];
    let mut stack: Vec<u32> = a.masks().collect();
    for &m in &stack {
        seen[m as usize] = true;
    }
    while let Some(x) = stack.pop() {
        let from_a = a.contains_mask(x);
        for bit in 0..dim {
            let y = x ^ 1 << bit;
            if directed && y < x {
                continue;
            }
            if seen[y as usize] || removed.contains_mask(y) {
                continue;
            }
            if b.contains_mask(y) {
                if from_a {
                    continue;
                }
                return false;
            }
            seen[y as usize] = true;
            stack.push(y);
        }
    }
    true
}

/// `|F|` plus the smallest vertex cut separating `A` from `B` in `Q_n − F`,
/// found by trying vertex subsets of increasing size.
///
/// Returns `(total, |F|, cut)`.
pub fn min_vertex_cut_oracle(
    a: &CubeSet,
    b: &CubeSet,
    directed: bool,
) -> Result<(usize, usize, CubeSet)> {
    let free = free_vertices(a, b)?;
    if free.len() > MAX_VERTEX_CUT_FREE {
        return Err(Error::InstanceTooLarge {
            free: free.len(),
            max: MAX_VERTEX_CUT_FREE,
        });
    }
    let f = interface_size(a, b, directed)?;
    for k in 0..=free.len() {
        for pick in free.iter().copied().combinations(k) {
            let cut = CubeSet::from_masks(a.dim(), pick)?;
            if separates(a, b, &cut, directed) {
                return Ok((f + k, f, cut));
            }
        }
    }
    unreachable!("removing every free vertex separates A from B")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::{
        directed_edge_boundary_size, directed_vertex_boundary, edge_boundary_size, vertex_boundary,
    };
    use crate::cube::CubeVertex;

    fn set(dim: usize, members: &[&[usize]]) -> CubeSet {
        let vs: Vec<_> = members
            .iter()
            .map(|e| CubeVertex::from_elements(dim, e).unwrap())
            .collect();
        CubeSet::from_vertices(dim, &vs).unwrap()
    }

    fn direct(s: &CubeSet, kind: BoundaryMode, directed: bool) -> usize {
        match (kind, directed) {
            (BoundaryMode::Edge, false) => edge_boundary_size(s),
            (BoundaryMode::Edge, true) => directed_edge_boundary_size(s),
            (BoundaryMode::Vertex, false) => vertex_boundary(s).len(),
            (BoundaryMode::Vertex, true) => directed_vertex_boundary(s).len(),
        }
    }

    #[test]
    fn q2_edge_example() {
        let a = set(2, &[&[]]);
        let b = set(2, &[&[1, 2]]);
        let (best, s) = min_boundary_oracle(&a, &b, BoundaryMode::Edge, false).unwrap();
        assert_eq!(best, 2);
        assert_eq!(edge_boundary_size(&s), 2);
    }

    #[test]
    fn unique_sandwich_gives_boundary_of_a() {
        let a = set(3, &[&[], &[1], &[2], &[1, 2]]);
        let b = a.complement();
        for kind in [BoundaryMode::Edge, BoundaryMode::Vertex] {
            for directed in [false, true] {
                let (best, s) = min_boundary_oracle(&a, &b, kind, directed).unwrap();
                assert_eq!(s, a);
                assert_eq!(best, direct(&a, kind, directed));
            }
        }
    }

    #[test]
    fn gray_sweep_matches_direct_minimum() {
        // every sandwich of a few Q_3 pairs, recomputed from scratch
        let pairs = [
            (set(3, &[&[]]), set(3, &[&[1, 2, 3]])),
            (set(3, &[&[1]]), set(3, &[&[2], &[2, 3]])),
            (set(3, &[&[], &[3]]), set(3, &[&[1, 2]])),
        ];
        for (a, b) in pairs {
            let free: Vec<u32> = (&a | &b).complement().masks().collect();
            for kind in [BoundaryMode::Edge, BoundaryMode::Vertex] {
                for directed in [false, true] {
                    let mut best = usize::MAX;
                    for pick in 0..1u32 << free.len() {
                        let mut s = a.clone();
                        for (i, &m) in free.iter().enumerate() {
                            if pick >> i & 1 == 1 {
                                s.insert_mask(m);
                            }
                        }
                        best = best.min(direct(&s, kind, directed));
                    }
                    let (got, argmin) = min_boundary_oracle(&a, &b, kind, directed).unwrap();
                    assert_eq!(got, best);
                    assert_eq!(direct(&argmin, kind, directed), best);
                    assert!(a.is_subset(&argmin) && argmin.is_disjoint(&b));
                }
            }
        }
    }

    #[test]
    fn oracle_rejects_bad_input() {
        let a = set(2, &[&[]]);
        assert!(matches!(
            min_boundary_oracle(&a, &a, BoundaryMode::Edge, false),
            Err(Error::Precondition { .. })
        ));
        let a = CubeSet::from_masks(5, [0]).unwrap();
        let b = CubeSet::from_masks(5, [31]).unwrap();
        assert!(matches!(
            min_boundary_oracle(&a, &b, BoundaryMode::Edge, false),
            Err(Error::InstanceTooLarge { free: 30, .. })
        ));
    }

    #[test]
    fn vertex_cut_examples() {
        let a = set(2, &[&[]]);
        let b = set(2, &[&[1, 2]]);
        assert_eq!(min_vertex_cut_oracle(&a, &b, false).unwrap().0, 2);
        let a = set(2, &[&[], &[1]]);
        let b = set(2, &[&[2], &[1, 2]]);
        let (total, f, cut) = min_vertex_cut_oracle(&a, &b, false).unwrap();
        assert_eq!((total, f), (2, 2));
        assert!(cut.is_empty());
        let a = set(1, &[&[]]);
        let b = set(1, &[&[1]]);
        assert_eq!(min_vertex_cut_oracle(&a, &b, true).unwrap().0, 1);
    }
}
