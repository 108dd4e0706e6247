//! One check per theorem, each a pure function of an [`Instance`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::boundary::{edge_boundary_size, lower_shadow, vertex_boundary};
use crate::bounds::{
    bl_edge_bound, bl_vertex_bound, fractional_binomial, func_s, solve_kk_threshold, Rational,
};
use crate::compression::{
    check_sandwich, compress_c, compress_d, compress_to_down_set, directed_boundary_size,
    BoundaryMode,
};
use crate::cube::{initial_segment, is_down_set, is_i_down, is_up_set, CubeSet, VertexOrder};
use crate::error::{Error, Result};
use crate::flow::{
    edge_disjoint_paths, max_matching_to_complement, min_boundary_oracle, min_vertex_cut_oracle,
    vertex_disjoint_paths, DisjointPaths,
};
use crate::json::{rational_string, set_json};
use crate::verify::instance::{load, Instance};

/// Tolerance for edge-path counts against the real-valued bound.
pub const PATH_TOLERANCE: f64 = 1e-6;
/// Tolerance for shadow sizes against fractional binomials.
pub const SHADOW_TOLERANCE: f64 = 1e-9;

macro_rules! theorems {
    ($($variant:ident => $id:literal),* $(,)?) => {
        /// The statements the harness can check.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant),*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $id),*
                }
            }
        }

        impl FromStr for TheoremId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($id => Ok(TheoremId::$variant),)*
                    other => Err(Error::Input(format!("unknown theorem id {other:?}"))),
                }
            }
        }
    };
}

theorems! {
    DirEdges => "diredges",
    DirectedVertices => "directedvertices",
    DirEdgeIso => "diredgeiso",
    DirVertexIso => "dirvertexiso",
    CompressionReducesOutEdges => "compressionreducesoutedges",
    CompressionReducesUpNeighbours => "compressionreducesupneighbours",
    PreservesDownness => "preservesdownness",
    Containments => "containments",
    Matchings => "matchings",
    WeakKK => "weakKK",
    EdgeIso => "edgeiso",
    VertexIso => "vertexiso",
    BlEdgesFull => "bledgesfull",
    BlFullVertices => "blfullvertices",
    EdgeLemma => "edgelemma",
    VertexObs => "vertexobs",
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Verdict plus the numbers behind it.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub pass: bool,
    pub computed: BTreeMap<String, Value>,
}

struct Record {
    pass: bool,
    computed: BTreeMap<String, Value>,
}

impl Record {
    fn new() -> Self {
        Record {
            pass: true,
            computed: BTreeMap::new(),
        }
    }

    fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.computed.insert(key.to_string(), value.into());
    }

    fn require(&mut self, key: &str, holds: bool) {
        if !holds {
            self.pass = false;
            let failed = self
                .computed
                .entry("failed".into())
                .or_insert_with(|| Value::Array(Vec::new()));
            if let Value::Array(list) = failed {
                list.push(json!(key));
            }
        }
    }

    fn finish(self) -> Outcome {
        Outcome {
            pass: self.pass,
            computed: self.computed,
        }
    }
}

fn shape_error(theorem: TheoremId, instance: &Instance) -> Error {
    Error::Input(format!(
        "theorem {theorem} does not take a {} instance",
        instance.shape_name()
    ))
}

fn require_down_up(a: &CubeSet, b: &CubeSet) -> Result<()> {
    if !is_down_set(a) {
        return Err(Error::precondition("A is not a down-set", None));
    }
    if !is_up_set(b) {
        return Err(Error::precondition("B is not an up-set", None));
    }
    Ok(())
}

// family and cut both recheck, and the cut matches the count
fn sound(r: &DisjointPaths, a: &CubeSet, b: &CubeSet) -> bool {
    r.family.validate(a, b).is_ok()
        && r.cut.verify(a, b).is_ok()
        && r.family.len() == r.count
        && r.cut.cut_size == r.count
}

/// Runs `theorem` on `instance`. `Err` means the instance is malformed or
/// outside the theorem's hypotheses, never that the statement failed.
pub fn check(theorem: TheoremId, instance: &Instance) -> Result<Outcome> {
    use TheoremId::*;
    match (theorem, instance) {
        (DirEdges | DirectedVertices | DirEdgeIso | DirVertexIso, Instance::Pair { n, a, b }) => {
            let (a, b) = (load(*n, a)?, load(*n, b)?);
            require_down_up(&a, &b)?;
            match theorem {
                DirEdges => directed_paths(&a, &b, BoundaryMode::Edge),
                DirectedVertices => directed_paths(&a, &b, BoundaryMode::Vertex),
                DirEdgeIso => down_set_minimizer(&a, &b, BoundaryMode::Edge),
                _ => down_set_minimizer(&a, &b, BoundaryMode::Vertex),
            }
        }
        (CompressionReducesOutEdges, Instance::SetCoord { n, s, i }) => {
            averaged_gain(&load(*n, s)?, *i, BoundaryMode::Edge)
        }
        (CompressionReducesUpNeighbours, Instance::SetCoord { n, s, i }) => {
            averaged_gain(&load(*n, s)?, *i, BoundaryMode::Vertex)
        }
        (PreservesDownness, Instance::SetCoord { n, s, i }) => preserves_downness(&load(*n, s)?, *i),
        (Containments, Instance::Sandwich { n, a, b, s }) => {
            containments(&load(*n, a)?, &load(*n, b)?, &load(*n, s)?)
        }
        (Matchings, Instance::Matching { n, a }) => matchings(&load(*n, a)?),
        (WeakKK, Instance::Level { n, r, a }) => weak_kk(&load(*n, a)?, *r),
        (EdgeIso, Instance::Set { n, s }) => edge_iso(&load(*n, s)?),
        (VertexIso, Instance::Set { n, s }) => vertex_iso(&load(*n, s)?),
        (BlEdgesFull, Instance::Pair { n, a, b }) => bl_edges_full(&load(*n, a)?, &load(*n, b)?),
        (BlFullVertices, Instance::Pair { n, a, b }) => {
            bl_full_vertices(&load(*n, a)?, &load(*n, b)?)
        }
        (EdgeLemma, Instance::Pair { n, a, b }) => edge_lemma(&load(*n, a)?, &load(*n, b)?),
        (VertexObs, Instance::Pair { n, a, b }) => vertex_obs(&load(*n, a)?, &load(*n, b)?),
        _ => Err(shape_error(theorem, instance)),
    }
}

fn paths(a: &CubeSet, b: &CubeSet, mode: BoundaryMode, directed: bool) -> Result<DisjointPaths> {
    match mode {
        BoundaryMode::Edge => edge_disjoint_paths(a, b, directed),
        BoundaryMode::Vertex => vertex_disjoint_paths(a, b, directed),
    }
}

fn directed_paths(a: &CubeSet, b: &CubeSet, mode: BoundaryMode) -> Result<Outcome> {
    let undirected = paths(a, b, mode, false)?;
    let directed = paths(a, b, mode, true)?;
    let mut rec = Record::new();
    rec.put("undirected", undirected.count);
    rec.put("directed", directed.count);
    rec.require("undirected_sound", sound(&undirected, a, b));
    rec.require("directed_sound", sound(&directed, a, b));
    rec.require("equal", undirected.count == directed.count);
    if !rec.pass {
        rec.put("cut_undirected", set_json(&undirected.cut.set));
        rec.put("cut_directed", set_json(&directed.cut.set));
    }
    Ok(rec.finish())
}

fn down_set_minimizer(a: &CubeSet, b: &CubeSet, mode: BoundaryMode) -> Result<Outcome> {
    let (min_undirected, _) = min_boundary_oracle(a, b, mode, false)?;
    let (min_directed, argmin) = min_boundary_oracle(a, b, mode, true)?;
    let mut rec = Record::new();
    rec.put("min_undirected", min_undirected);
    rec.put("min_directed", min_directed);
    match compress_to_down_set(&argmin, a, b, mode) {
        Ok((down, trace)) => {
            let directed = directed_boundary_size(&down, mode);
            let undirected = match mode {
                BoundaryMode::Edge => edge_boundary_size(&down),
                BoundaryMode::Vertex => vertex_boundary(&down).len(),
            };
            rec.put("down_set", set_json(&down));
            rec.put("down_set_directed", directed);
            rec.put("down_set_undirected", undirected);
            rec.require("is_down_set", is_down_set(&down));
            rec.require("sandwiched", a.is_subset(&down) && down.is_disjoint(b));
            rec.require("attains_directed_min", directed == min_directed);
            rec.require("attains_undirected_min", undirected == min_undirected);
            rec.require(
                "trace_monotone",
                trace.iter().all(|t| t.boundary_after <= t.boundary_before),
            );
        }
        Err(Error::LemmaViolation { i, .. }) => {
            rec.put("stuck_at", i);
            rec.put("argmin", set_json(&argmin));
            rec.require("descent", false);
        }
        Err(other) => return Err(other),
    }
    Ok(rec.finish())
}

fn averaged_gain(s: &CubeSet, i: usize, mode: BoundaryMode) -> Result<Outcome> {
    let c = compress_c(s, i)?;
    let d = compress_d(s, i)?;
    let before = directed_boundary_size(s, mode);
    let after_c = directed_boundary_size(&c, mode);
    let after_d = directed_boundary_size(&d, mode);
    let mut rec = Record::new();
    rec.put("before", before);
    rec.put("after_c", after_c);
    rec.put("after_d", after_d);
    rec.require("averaged", 2 * before >= after_c + after_d);
    Ok(rec.finish())
}

fn down_coordinates(s: &CubeSet) -> Vec<usize> {
    (1..=s.dim())
        .filter(|&j| is_i_down(s, j).expect("coordinate in range"))
        .collect()
}

fn preserves_downness(s: &CubeSet, i: usize) -> Result<Outcome> {
    let c = compress_c(s, i)?;
    let d = compress_d(s, i)?;
    let before = down_coordinates(s);
    let after_c = down_coordinates(&c);
    let after_d = down_coordinates(&d);
    let mut rec = Record::new();
    rec.require("c_is_i_down", after_c.contains(&i));
    rec.require("d_is_i_down", after_d.contains(&i));
    rec.require("c_keeps", before.iter().all(|j| after_c.contains(j)));
    rec.require("d_keeps", before.iter().all(|j| after_d.contains(j)));
    rec.put("down_before", json!(before));
    rec.put("down_after_c", json!(after_c));
    rec.put("down_after_d", json!(after_d));
    Ok(rec.finish())
}

fn containments(a: &CubeSet, b: &CubeSet, s: &CubeSet) -> Result<Outcome> {
    check_sandwich(s, a, b)?;
    let outside_b = b.complement();
    let mut broken = Vec::new();
    for i in 1..=s.dim() {
        let c = compress_c(s, i)?;
        let d = compress_d(s, i)?;
        let chain = a.is_subset(&c) && c.is_subset(s) && s.is_subset(&d) && d.is_subset(&outside_b);
        if !chain {
            broken.push(i);
        }
    }
    let mut rec = Record::new();
    rec.require("chain", broken.is_empty());
    rec.put("broken_at", json!(broken));
    Ok(rec.finish())
}

fn matchings(a: &CubeSet) -> Result<Outcome> {
    let matching = max_matching_to_complement(a)?;
    // s is defined for positive sizes; an empty A needs no matching
    let bound = if a.is_empty() {
        Rational::zero()
    } else {
        func_s(a.dim() as u32, a.len() as u128)?
    };
    let mut rec = Record::new();
    rec.put("matching", matching);
    rec.put("bound", rational_string(&bound));
    rec.require("at_least_bound", Rational::from_integer(matching as i128) >= bound);
    Ok(rec.finish())
}

fn weak_kk(a: &CubeSet, r: usize) -> Result<Outcome> {
    if r == 0 {
        return Err(Error::Input("rank r must be at least 1".into()));
    }
    if a.is_empty() {
        return Err(Error::precondition("A is empty", None));
    }
    if let Some(x) = a.vertices().find(|x| x.weight() as usize != r) {
        return Err(Error::NotLevelHomogeneous {
            expected: r,
            witness: x.elements(),
        });
    }
    let shadow = lower_shadow(a)?.len();
    let x = solve_kk_threshold(a.len() as u128, r as u32)?;
    let bound = fractional_binomial(x, r as u32 - 1);
    let mut rec = Record::new();
    rec.put("shadow", shadow);
    rec.put("x", x);
    rec.put("bound", bound);
    rec.require("at_least_bound", shadow as f64 >= bound - SHADOW_TOLERANCE);
    Ok(rec.finish())
}

fn edge_iso(s: &CubeSet) -> Result<Outcome> {
    let segment = initial_segment(s.dim(), s.len(), VertexOrder::Binary)?;
    let boundary = edge_boundary_size(s);
    let segment_boundary = edge_boundary_size(&segment);
    let mut rec = Record::new();
    rec.put("boundary", boundary);
    rec.put("segment_boundary", segment_boundary);
    rec.require("segment_minimal", boundary >= segment_boundary);
    if s.len().is_power_of_two() {
        let k = s.len().trailing_zeros() as usize;
        let subcube = (s.dim() - k) << k;
        rec.put("subcube_bound", subcube);
        rec.require("subcube_bound", boundary >= subcube);
    }
    Ok(rec.finish())
}

fn vertex_iso(s: &CubeSet) -> Result<Outcome> {
    let segment = initial_segment(s.dim(), s.len(), VertexOrder::Simplicial)?;
    let boundary = vertex_boundary(s).len();
    let segment_boundary = vertex_boundary(&segment).len();
    let mut rec = Record::new();
    rec.put("boundary", boundary);
    rec.put("segment_boundary", segment_boundary);
    rec.require("segment_minimal", boundary >= segment_boundary);
    Ok(rec.finish())
}

fn bl_edges_full(a: &CubeSet, b: &CubeSet) -> Result<Outcome> {
    let n = a.dim() as u32;
    let bound = bl_edge_bound(n, a.len() as u128, b.len() as u128)?;
    let p = edge_disjoint_paths(a, b, false)?;
    let mut rec = Record::new();
    rec.put("p_e", p.count);
    rec.put("bound", bound);
    rec.require("at_least_bound", p.count as f64 >= bound - PATH_TOLERANCE);
    // the directed reading is only claimed for down/up pairs
    if is_down_set(a) && is_up_set(b) {
        let q = edge_disjoint_paths(a, b, true)?;
        rec.put("p_e_directed", q.count);
        rec.require("directed_at_least_bound", q.count as f64 >= bound - PATH_TOLERANCE);
    }
    Ok(rec.finish())
}

fn bl_full_vertices(a: &CubeSet, b: &CubeSet) -> Result<Outcome> {
    let n = a.dim() as u32;
    let bound = bl_vertex_bound(n, a.len() as u128, b.len() as u128)?;
    let p = vertex_disjoint_paths(a, b, false)?;
    let mut rec = Record::new();
    rec.put("p_v", p.count);
    rec.put("bound", rational_string(&bound));
    rec.require("at_least_bound", Rational::from_integer(p.count as i128) >= bound);
    Ok(rec.finish())
}

fn edge_lemma(a: &CubeSet, b: &CubeSet) -> Result<Outcome> {
    let p = edge_disjoint_paths(a, b, false)?;
    let (oracle, _) = min_boundary_oracle(a, b, BoundaryMode::Edge, false)?;
    let mut rec = Record::new();
    rec.put("p_e", p.count);
    rec.put("oracle", oracle);
    rec.require("sound", sound(&p, a, b));
    rec.require("duality", p.count == oracle);
    if is_down_set(a) && is_up_set(b) {
        let q = edge_disjoint_paths(a, b, true)?;
        let (oracle_directed, _) = min_boundary_oracle(a, b, BoundaryMode::Edge, true)?;
        rec.put("p_e_directed", q.count);
        rec.put("oracle_directed", oracle_directed);
        rec.require("directed_sound", sound(&q, a, b));
        rec.require("directed_duality", q.count == oracle_directed);
    }
    Ok(rec.finish())
}

fn vertex_obs(a: &CubeSet, b: &CubeSet) -> Result<Outcome> {
    let mut rec = Record::new();
    for (directed, suffix) in [(false, ""), (true, "_directed")] {
        let p = vertex_disjoint_paths(a, b, directed)?;
        let (total, f, _) = min_vertex_cut_oracle(a, b, directed)?;
        rec.put(&format!("p_v{suffix}"), p.count);
        rec.put(&format!("interface{suffix}"), f);
        rec.put(&format!("oracle{suffix}"), total);
        rec.require(&format!("sound{suffix}"), sound(&p, a, b));
        rec.require(&format!("menger{suffix}"), p.count == total);
    }
    Ok(rec.finish())
}

/// Counts of a sweep over pairs that are not down/up pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeControl {
    pub pairs_checked: usize,
    pub strict: usize,
    /// First pair found with `p⃗_e < p_e`, with both counts.
    pub witness: Option<(CubeSet, CubeSet, usize, usize)>,
}

/// Compares directed and undirected edge-path counts on `pairs`, skipping
/// down/up pairs, and counts how often the directed count is smaller.
pub fn negative_control(
    pairs: impl IntoIterator<Item = (CubeSet, CubeSet)>,
) -> Result<NegativeControl> {
    let mut out = NegativeControl {
        pairs_checked: 0,
        strict: 0,
        witness: None,
    };
    for (a, b) in pairs {
        if is_down_set(&a) && is_up_set(&b) {
            continue;
        }
        out.pairs_checked += 1;
        let directed = edge_disjoint_paths(&a, &b, true)?.count;
        let undirected = edge_disjoint_paths(&a, &b, false)?.count;
        if directed < undirected {
            out.strict += 1;
            if out.witness.is_none() {
                out.witness = Some((a, b, directed, undirected));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(n: usize, a: &[u32], b: &[u32]) -> Instance {
        Instance::Pair {
            n,
            a: a.to_vec(),
            b: b.to_vec(),
        }
    }

    #[test]
    fn ids_round_trip() {
        assert_eq!(TheoremId::ALL.len(), 16);
        for &t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
        }
        assert_eq!(TheoremId::WeakKK.to_string(), "weakKK");
        assert!("nope".parse::<TheoremId>().is_err());
    }

    #[test]
    fn q2_pair_passes_everything() {
        let inst = pair(2, &[0], &[3]);
        for t in [
            TheoremId::DirEdges,
            TheoremId::DirectedVertices,
            TheoremId::DirEdgeIso,
            TheoremId::DirVertexIso,
            TheoremId::BlEdgesFull,
            TheoremId::BlFullVertices,
            TheoremId::EdgeLemma,
            TheoremId::VertexObs,
        ] {
            let out = check(t, &inst).unwrap();
            assert!(out.pass, "{t}: {:?}", out.computed);
        }
        let out = check(TheoremId::DirEdges, &inst).unwrap();
        assert_eq!(out.computed["directed"], json!(2));
    }

    #[test]
    fn hypotheses_are_enforced() {
        // A = {{1}} is not a down-set
        let inst = pair(2, &[1], &[3]);
        assert!(matches!(
            check(TheoremId::DirEdges, &inst),
            Err(Error::Precondition { .. })
        ));
        assert!(check(TheoremId::EdgeLemma, &inst).unwrap().pass);
        assert!(check(TheoremId::EdgeIso, &inst).is_err());
        let level = Instance::Level {
            n: 3,
            r: 2,
            a: vec![0b011, 0b001],
        };
        assert!(matches!(
            check(TheoremId::WeakKK, &level),
            Err(Error::NotLevelHomogeneous { .. })
        ));
    }

    #[test]
    fn set_checks() {
        let s = Instance::Set {
            n: 3,
            s: vec![0, 1, 2, 3],
        };
        let out = check(TheoremId::EdgeIso, &s).unwrap();
        assert!(out.pass);
        assert_eq!(out.computed["boundary"], json!(4));
        assert_eq!(out.computed["subcube_bound"], json!(4));
        assert!(check(TheoremId::VertexIso, &s).unwrap().pass);
        let sc = Instance::SetCoord {
            n: 2,
            s: vec![0, 3],
            i: 1,
        };
        for t in [
            TheoremId::CompressionReducesOutEdges,
            TheoremId::CompressionReducesUpNeighbours,
            TheoremId::PreservesDownness,
        ] {
            assert!(check(t, &sc).unwrap().pass);
        }
        let out = check(TheoremId::CompressionReducesOutEdges, &sc).unwrap();
        assert_eq!(
            (&out.computed["before"], &out.computed["after_c"], &out.computed["after_d"]),
            (&json!(2), &json!(2), &json!(1))
        );
    }

    #[test]
    fn matching_and_shadow_checks() {
        let empty = Instance::Matching { n: 3, a: vec![] };
        let out = check(TheoremId::Matchings, &empty).unwrap();
        assert!(out.pass);
        assert_eq!(out.computed["bound"], json!("0/1"));
        let ball = Instance::Matching {
            n: 4,
            a: vec![0, 1, 2, 4, 8],
        };
        let out = check(TheoremId::Matchings, &ball).unwrap();
        assert!(out.pass);
        assert_eq!(out.computed["bound"], json!("4/1"));
        let level = Instance::Level {
            n: 3,
            r: 2,
            a: vec![0b011, 0b101],
        };
        let out = check(TheoremId::WeakKK, &level).unwrap();
        assert!(out.pass);
        assert_eq!(out.computed["shadow"], json!(3));
    }

    #[test]
    fn negative_control_finds_a_strict_pair() {
        let a = CubeSet::from_masks(2, [3]).unwrap();
        let b = CubeSet::from_masks(2, [0]).unwrap();
        let nc = negative_control([(a.clone(), b.clone())]).unwrap();
        assert_eq!((nc.pairs_checked, nc.strict), (1, 1));
        assert_eq!(nc.witness, Some((a, b, 0, 2)));
    }
}
