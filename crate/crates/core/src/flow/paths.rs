//! Disjoint path families between vertex sets of the cube, realised as
//! unit-capacity flows, with min-cut witnesses read off the residual network.

use std::collections::HashSet;

use crate::boundary::{directed_edge_boundary_size, edge_boundary_size};
use crate::compression::BoundaryMode;
use crate::cube::{CubeSet, CubeVertex};
use crate::error::{Error, Result};
use crate::flow::network::{FlowNetwork, UNBOUNDED};
use crate::flow::oracle::{interface_size, separates};

/// Largest dimension the flow-based operations accept.
pub const MAX_FLOW_DIM: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathKind {
    EdgeDisjoint,
    VertexDisjointInteriors,
}

/// Paths from `A` to `B` in `Q_n`, each a list of vertex masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamily {
    pub dim: usize,
    pub paths: Vec<Vec<u32>>,
    pub kind: PathKind,
    pub directed: bool,
}

fn bad(condition: String, witness: Option<u32>) -> Error {
    Error::Precondition {
        condition,
        witness: witness.map(crate::cube::mask_elements),
    }
}

impl PathFamily {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn vertex_paths(&self) -> Vec<Vec<CubeVertex>> {
        self.paths
            .iter()
            .map(|p| p.iter().map(|&m| CubeVertex::new_unchecked(self.dim, m)).collect())
            .collect()
    }

    /// Rechecks every structural invariant of the family against `A` and `B`.
    pub fn validate(&self, a: &CubeSet, b: &CubeSet) -> Result<()> {
        let mut edges_used: HashSet<(u32, u32)> = HashSet::new();
        let mut interiors_used: HashSet<u32> = HashSet::new();
        for (k, p) in self.paths.iter().enumerate() {
            if p.len() < 2 {
                return Err(bad(format!("path {k} has fewer than two vertices"), None));
            }
            if !a.contains_mask(p[0]) {
                return Err(bad(format!("path {k} does not start in A"), Some(p[0])));
            }
            let last = *p.last().unwrap();
            if !b.contains_mask(last) {
                return Err(bad(format!("path {k} does not end in B"), Some(last)));
            }
            for &x in &p[1..p.len() - 1] {
                if a.contains_mask(x) || b.contains_mask(x) {
                    return Err(bad(format!("path {k} has an interior vertex in A ∪ B"), Some(x)));
                }
                let fresh = interiors_used.insert(x);
                if !fresh && self.kind == PathKind::VertexDisjointInteriors {
                    return Err(bad(format!("path {k} reuses an interior vertex"), Some(x)));
                }
            }
            if self.kind == PathKind::EdgeDisjoint {
                // interiors may be shared, but a path must not revisit a vertex
                let mut on_path = HashSet::new();
                if let Some(&x) = p.iter().find(|&&x| !on_path.insert(x)) {
                    return Err(bad(format!("path {k} revisits a vertex"), Some(x)));
                }
            }
            for w in p.windows(2) {
                let (x, y) = (w[0], w[1]);
                if (x ^ y).count_ones() != 1 {
                    return Err(bad(format!("path {k} steps along a non-edge"), Some(y)));
                }
                if self.directed && y < x {
                    return Err(bad(format!("path {k} steps downward"), Some(y)));
                }
                let e = (x.min(y), x.max(y));
                if !edges_used.insert(e) {
                    return Err(bad(format!("path {k} reuses an edge"), Some(y)));
                }
            }
        }
        Ok(())
    }
}

/// A set `S` with `A ⊆ S ⊆ B^c` certifying a minimum cut.
///
/// For edge kinds `cut_size` is `|∂_e(S)|` (or `|∂⃗_e(S)|`). For vertex kinds
/// `separator` holds the cut vertices and `cut_size = |F| + |separator|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutWitness {
    pub set: CubeSet,
    pub separator: Option<CubeSet>,
    pub cut_size: usize,
    pub kind: BoundaryMode,
    pub directed: bool,
}

impl CutWitness {
    /// Recomputes the cut from scratch and checks it against `cut_size`.
    pub fn verify(&self, a: &CubeSet, b: &CubeSet) -> Result<()> {
        if let Some(x) = a.first_outside(&self.set) {
            return Err(bad("witness set misses a vertex of A".into(), Some(x.mask())));
        }
        if let Some(x) = (&self.set & b).vertices().next() {
            return Err(bad("witness set meets B".into(), Some(x.mask())));
        }
        let recomputed = match self.kind {
            BoundaryMode::Edge => {
                if self.directed {
                    directed_edge_boundary_size(&self.set)
                } else {
                    edge_boundary_size(&self.set)
                }
            }
            BoundaryMode::Vertex => {
                let sep = self
                    .separator
                    .as_ref()
                    .ok_or_else(|| bad("vertex witness without separator".into(), None))?;
                if let Some(x) = (sep & &(a | b)).vertices().next() {
                    return Err(bad("separator meets A ∪ B".into(), Some(x.mask())));
                }
                if !separates(a, b, sep, self.directed) {
                    return Err(bad("separator does not separate A from B".into(), None));
                }
                interface_size(a, b, self.directed)? + sep.len()
            }
        };
        if recomputed != self.cut_size {
            return Err(bad(
                format!("witness cut is {recomputed}, recorded {}", self.cut_size),
                None,
            ));
        }
        Ok(())
    }
}

/// Result of a disjoint-path computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPaths {
    pub count: usize,
    pub family: PathFamily,
    pub cut: CutWitness,
}

fn check_endpoints(a: &CubeSet, b: &CubeSet) -> Result<()> {
    a.ensure_same_dim(b)?;
    if a.dim() > MAX_FLOW_DIM {
        return Err(Error::DimensionOutOfRange {
            dim: a.dim(),
            max: MAX_FLOW_DIM,
        });
    }
    if a.is_empty() {
        return Err(Error::precondition("A is empty", None));
    }
    if b.is_empty() {
        return Err(Error::precondition("B is empty", None));
    }
    if let Some(x) = (a & b).vertices().next() {
        return Err(Error::precondition("A and B intersect", Some(x.elements())));
    }
    Ok(())
}

// Arcs into A or out of B never help an A → B path.
fn usable(a: &CubeSet, b: &CubeSet, from: u32, to: u32) -> bool {
    !a.contains_mask(to) && !b.contains_mask(from)
}

/// Maximum family of edge-disjoint `A → B` paths (directed paths when
/// `directed`), with a minimum edge cut `∂_e(S)` / `∂⃗_e(S)` as witness.
pub fn edge_disjoint_paths(a: &CubeSet, b: &CubeSet, directed: bool) -> Result<DisjointPaths> {
    check_endpoints(a, b)?;
    let dim = a.dim();
    let total = 1usize << dim;
    let mut net = FlowNetwork::new(total);
    for u in 0..total as u32 {
        for bit in 0..dim {
            let v = u | 1 << bit;
            if v == u {
                continue;
            }
            let up = usable(a, b, u, v);
            let down = !directed && usable(a, b, v, u);
            match (up, down) {
                (true, true) => {
                    net.add_edge(u as usize, v as usize);
                }
                (true, false) => {
                    net.add_arc(u as usize, v as usize);
                }
                (false, true) => {
                    net.add_arc(v as usize, u as usize);
                }
                (false, false) => {}
            }
        }
    }
    for m in a.masks() {
        net.add_source(m as usize, None);
    }
    for m in b.masks() {
        net.add_sink(m as usize, None);
    }
    let flow = net.max_flow();
    let paths: Vec<Vec<u32>> = flow
        .residual
        .decompose()
        .into_iter()
        .map(|p| p.into_iter().map(|v| v as u32).collect())
        .collect();
    let reach = flow.residual.reachable();
    let set = CubeSet::from_masks(dim, (0..total as u32).filter(|&m| reach[m as usize]))?;
    let cut_size = if directed {
        directed_edge_boundary_size(&set)
    } else {
        edge_boundary_size(&set)
    };
    let count = flow.value as usize;
    debug_assert_eq!(count, paths.len());
    Ok(DisjointPaths {
        count,
        family: PathFamily {
            dim,
            paths,
            kind: PathKind::EdgeDisjoint,
            directed,
        },
        cut: CutWitness {
            set,
            separator: None,
            cut_size,
            kind: BoundaryMode::Edge,
            directed,
        },
    })
}

/// Maximum family of `A → B` paths with pairwise disjoint interiors.
///
/// The edges `F` joining `A` to `B` become one-edge paths; the rest is a
/// flow in `Q_n − F` where every vertex outside `A ∪ B` is split into an
/// in-half and an out-half joined by a unit arc.
pub fn vertex_disjoint_paths(a: &CubeSet, b: &CubeSet, directed: bool) -> Result<DisjointPaths> {
    check_endpoints(a, b)?;
    let dim = a.dim();
    let total = 1usize << dim;
    let is_free = |m: u32| !a.contains_mask(m) && !b.contains_mask(m);
    let inn = |m: u32| m as usize;
    let out = |m: u32| if is_free(m) { total + m as usize } else { m as usize };

    let mut net = FlowNetwork::new(2 * total);
    let mut direct: Vec<Vec<u32>> = Vec::new();
    for u in 0..total as u32 {
        for bit in 0..dim {
            let v = u | 1 << bit;
            if v == u {
                continue;
            }
            if a.contains_mask(u) && b.contains_mask(v) {
                direct.push(vec![u, v]);
                continue;
            }
            if b.contains_mask(u) && a.contains_mask(v) {
                if !directed {
                    direct.push(vec![v, u]);
                }
                continue;
            }
            // only the split arcs may appear in a minimum cut
            if usable(a, b, u, v) {
                net.add_arc_with_capacity(out(u), inn(v), UNBOUNDED);
            }
            if !directed && usable(a, b, v, u) {
                net.add_arc_with_capacity(out(v), inn(u), UNBOUNDED);
            }
        }
    }
    for m in (0..total as u32).filter(|&m| is_free(m)) {
        net.add_arc(inn(m), out(m));
    }
    for m in a.masks() {
        net.add_source(inn(m), None);
    }
    for m in b.masks() {
        net.add_sink(inn(m), None);
    }
    let flow = net.max_flow();
    let reach = flow.residual.reachable();

    let mut paths = direct;
    paths.sort();
    for walk in flow.residual.decompose() {
        let mut p: Vec<u32> = Vec::with_capacity(walk.len());
        for node in walk {
            let m = (node % total) as u32;
            if p.last() != Some(&m) {
                p.push(m);
            }
        }
        paths.push(p);
    }

    let free: Vec<u32> = (0..total as u32).filter(|&m| is_free(m)).collect();
    let mut set = a.clone();
    let mut separator = CubeSet::empty(dim)?;
    for &m in &free {
        let (i, o) = (reach[inn(m)], reach[out(m)]);
        if o {
            set.insert_mask(m);
        } else if i {
            separator.insert_mask(m);
        }
    }
    let f = interface_size(a, b, directed)?;
    let count = f + flow.value as usize;
    debug_assert_eq!(count, paths.len());
    Ok(DisjointPaths {
        count,
        family: PathFamily {
            dim,
            paths,
            kind: PathKind::VertexDisjointInteriors,
            directed,
        },
        cut: CutWitness {
            set,
            cut_size: f + separator.len(),
            separator: Some(separator),
            kind: BoundaryMode::Vertex,
            directed,
        },
    })
}

/// Size of a maximum matching between `A` and `A^c` along cube edges.
pub fn max_matching_to_complement(a: &CubeSet) -> Result<usize> {
    let dim = a.dim();
    if dim > MAX_FLOW_DIM {
        return Err(Error::DimensionOutOfRange {
            dim,
            max: MAX_FLOW_DIM,
        });
    }
    let total = 1usize << dim;
    if a.len() > total / 2 {
        return Err(Error::CountOutOfRange {
            count: a.len() as u128,
            min: 0,
            max: (total / 2) as u128,
        });
    }
    let mut net = FlowNetwork::new(total);
    for x in a.masks() {
        for bit in 0..dim {
            let y = x ^ 1 << bit;
            if !a.contains_mask(y) {
                net.add_arc(x as usize, y as usize);
            }
        }
        net.add_source(x as usize, Some(1));
    }
    for y in a.complement().masks() {
        net.add_sink(y as usize, Some(1));
    }
    Ok(net.max_flow().value as usize)
}
