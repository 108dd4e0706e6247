//! The verification harness: sweep plans, certificates and the worker pool.
//!
//! A [`SweepPlan`] names a theorem, a dimension range and either an
//! exhaustive or a seeded random strategy. Running it yields one
//! [`Certificate`] per instance, in a fixed order regardless of thread count.
//! Set `CUBEPATHS_THREADS` to size the pool.

pub mod enumerate;
pub mod instance;
pub mod random;
pub mod theorems;

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub use enumerate::{
    all_subsets, disjoint_pairs, down_up_pairs, enumerate_down_sets, enumerate_up_sets,
    level_families, sets_between,
};
pub use instance::Instance;
pub use random::{random_instance, random_instance_capped, Shape};
pub use theorems::{check, negative_control, NegativeControl, Outcome, TheoremId};

const CHUNK: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive,
    /// `count` instances per dimension; instance `k` of the plan uses seed `seed + k`.
    Random { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepPlan {
    pub theorem: TheoremId,
    pub n_range: RangeInclusive<usize>,
    pub strategy: Strategy,
    pub fail_fast: bool,
}

impl SweepPlan {
    pub fn exhaustive(theorem: TheoremId, n_range: RangeInclusive<usize>) -> Self {
        SweepPlan {
            theorem,
            n_range,
            strategy: Strategy::Exhaustive,
            fail_fast: false,
        }
    }

    pub fn random(theorem: TheoremId, n_range: RangeInclusive<usize>, count: usize, seed: u64) -> Self {
        SweepPlan {
            theorem,
            n_range,
            strategy: Strategy::Random { count, seed },
            fail_fast: false,
        }
    }

    /// Checks the plan against the theorem's size caps.
    pub fn validate(&self) -> Result<()> {
        let limits = limits(self.theorem);
        let max = match self.strategy {
            Strategy::Exhaustive => limits.exhaustive_max,
            Strategy::Random { .. } => limits.random_max,
        };
        let (lo, hi) = (*self.n_range.start(), *self.n_range.end());
        if lo == 0 || lo > hi {
            return Err(Error::Input(format!("empty dimension range {lo}..={hi}")));
        }
        if hi > max {
            return Err(Error::DimensionOutOfRange { dim: hi, max });
        }
        Ok(())
    }
}

/// Size caps and random shape for one theorem.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub exhaustive_max: usize,
    pub random_max: usize,
    pub shape: Shape,
    pub max_free: Option<usize>,
}

pub fn limits(theorem: TheoremId) -> Limits {
    use TheoremId::*;
    let (exhaustive_max, random_max, shape, max_free) = match theorem {
        DirEdges | DirectedVertices => (4, 16, Shape::DownUpPair, None),
        DirEdgeIso | DirVertexIso => (4, 6, Shape::DownUpPair, Some(20)),
        CompressionReducesOutEdges | CompressionReducesUpNeighbours | PreservesDownness => {
            (4, 16, Shape::SubsetCoord, None)
        }
        Containments => (4, 16, Shape::BetweenSet, None),
        Matchings => (4, 16, Shape::HalfSubset, None),
        WeakKK => (5, 16, Shape::LevelFamily { rank: 1 }, None),
        EdgeIso | VertexIso => (4, 16, Shape::Subset, None),
        BlEdgesFull | BlFullVertices => (3, 16, Shape::DisjointPair, None),
        EdgeLemma => (3, 6, Shape::DisjointPair, Some(20)),
        VertexObs => (3, 6, Shape::DisjointPair, Some(16)),
    };
    Limits {
        exhaustive_max,
        random_max,
        shape,
        max_free,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// `"exhaustive"` or the seed that generated the instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seed {
    Exhaustive,
    Value(u64),
}

impl Serialize for Seed {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Seed::Exhaustive => ser.serialize_str("exhaustive"),
            Seed::Value(v) => ser.serialize_u64(*v),
        }
    }
}

impl<'de> Deserialize<'de> for Seed {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        match Value::deserialize(de)? {
            Value::String(s) if s == "exhaustive" => Ok(Seed::Exhaustive),
            Value::Number(n) if n.is_u64() => Ok(Seed::Value(n.as_u64().unwrap())),
            other => Err(serde::de::Error::custom(format!("bad seed {other}"))),
        }
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(de)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Record of one theorem check on one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub theorem_id: TheoremId,
    pub instance: Instance,
    pub computed: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub seed: Seed,
}

// a check error becomes a failing certificate so that it is persisted
fn evaluate(theorem: TheoremId, instance: &Instance) -> (Verdict, BTreeMap<String, Value>) {
    match check(theorem, instance) {
        Ok(out) => (
            if out.pass { Verdict::Pass } else { Verdict::Fail },
            out.computed,
        ),
        Err(e) => (
            Verdict::Fail,
            BTreeMap::from([("error".to_string(), json!(e.to_string()))]),
        ),
    }
}

impl Certificate {
    pub fn issue(theorem: TheoremId, instance: Instance, seed: Seed) -> Self {
        let (verdict, computed) = evaluate(theorem, &instance);
        Certificate {
            theorem_id: theorem,
            instance,
            computed,
            verdict,
            seed,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Re-runs the stored instance; true when verdict and computed values
    /// come out identical.
    pub fn recheck(&self) -> bool {
        let (verdict, computed) = evaluate(self.theorem_id, &self.instance);
        verdict == self.verdict && computed == self.computed
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("certificates always serialize")
    }
}

enum Job {
    Fixed(Instance),
    Random { n: usize, seed: u64 },
}

fn exhaustive_jobs(theorem: TheoremId, n: usize) -> Result<Box<dyn Iterator<Item = Job> + Send>> {
    use TheoremId::*;
    Ok(match theorem {
        DirEdges | DirectedVertices | DirEdgeIso | DirVertexIso => Box::new(
            down_up_pairs(n)?
                .into_iter()
                .map(|(a, b)| Job::Fixed(Instance::pair(&a, &b))),
        ),
        CompressionReducesOutEdges | CompressionReducesUpNeighbours | PreservesDownness => {
            Box::new(all_subsets(n)?.flat_map(move |s| {
                (1..=n).map(move |i| Job::Fixed(Instance::set_coord(&s, i)))
            }))
        }
        Containments => Box::new(down_up_pairs(n)?.into_iter().flat_map(|(a, b)| {
            sets_between(&a, &b)
                .into_iter()
                .map(move |s| Job::Fixed(Instance::sandwich(&a, &b, &s)))
        })),
        Matchings => Box::new(
            all_subsets(n)?
                .filter(move |a| a.len() <= 1 << (n - 1))
                .map(|a| Job::Fixed(Instance::matching(&a))),
        ),
        WeakKK => {
            let mut jobs = Vec::new();
            for r in 1..=n {
                jobs.extend(level_families(n, r)?.map(|a| Job::Fixed(Instance::level(&a, r))));
            }
            Box::new(jobs.into_iter())
        }
        EdgeIso | VertexIso => Box::new(all_subsets(n)?.map(|s| Job::Fixed(Instance::set(&s)))),
        BlEdgesFull | BlFullVertices | EdgeLemma | VertexObs => Box::new(
            disjoint_pairs(n)?.map(|(a, b)| Job::Fixed(Instance::pair(&a, &b))),
        ),
    })
}

fn plan_jobs(plan: &SweepPlan) -> Result<Box<dyn Iterator<Item = Job> + Send>> {
    match plan.strategy {
        Strategy::Exhaustive => {
            let mut all: Box<dyn Iterator<Item = Job> + Send> = Box::new(std::iter::empty());
            for n in plan.n_range.clone() {
                all = Box::new(all.chain(exhaustive_jobs(plan.theorem, n)?));
            }
            Ok(all)
        }
        Strategy::Random { count, seed } => {
            let start = *plan.n_range.start();
            Ok(Box::new(plan.n_range.clone().flat_map(move |n| {
                (0..count).map(move |j| Job::Random {
                    n,
                    seed: seed.wrapping_add(((n - start) * count + j) as u64),
                })
            })))
        }
    }
}

/// Draws the instance a random plan uses for `(theorem, n, seed)`.
pub fn sample(theorem: TheoremId, n: usize, seed: u64) -> Result<Instance> {
    let limits = limits(theorem);
    let shape = match limits.shape {
        Shape::LevelFamily { .. } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
            Shape::LevelFamily {
                rank: rng.gen_range(1..=n),
            }
        }
        other => other,
    };
    random_instance_capped(n, shape, seed, limits.max_free)
}

fn run_job(theorem: TheoremId, job: Job) -> Result<Certificate> {
    match job {
        Job::Fixed(instance) => Ok(Certificate::issue(theorem, instance, Seed::Exhaustive)),
        Job::Random { n, seed } => Ok(Certificate::issue(
            theorem,
            sample(theorem, n, seed)?,
            Seed::Value(seed),
        )),
    }
}

fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var("CUBEPATHS_THREADS")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("worker pool")
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub stopped_early: bool,
}

/// Runs a plan, handing certificates to `emit` one at a time in plan order.
/// With `fail_fast` the run stops right after the first failing certificate.
pub fn run_plan(
    plan: &SweepPlan,
    mut emit: impl FnMut(&Certificate) -> Result<()>,
) -> Result<RunSummary> {
    plan.validate()?;
    let mut jobs = plan_jobs(plan)?;
    let mut summary = RunSummary::default();
    loop {
        let chunk: Vec<Job> = jobs.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return Ok(summary);
        }
        let theorem = plan.theorem;
        let certs: Vec<Result<Certificate>> =
            pool().install(|| chunk.into_par_iter().map(|job| run_job(theorem, job)).collect());
        for cert in certs {
            let cert = cert?;
            summary.total += 1;
            if cert.passed() {
                summary.passed += 1;
            } else {
                summary.failed += 1;
            }
            emit(&cert)?;
            if plan.fail_fast && !cert.passed() {
                summary.stopped_early = true;
                return Ok(summary);
            }
        }
    }
}

/// Runs a plan and collects every certificate.
pub fn run_theorem(plan: &SweepPlan) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    run_plan(plan, |c| {
        out.push(c.clone());
        Ok(())
    })?;
    Ok(out)
}

/// One exhaustive plan and one random plan at a larger dimension for
/// every theorem.
pub fn default_suite(count: usize, seed: u64) -> Vec<SweepPlan> {
    let mut plans = Vec::new();
    for &theorem in TheoremId::ALL {
        let l = limits(theorem);
        let n = l.exhaustive_max.min(3);
        let top = (l.exhaustive_max + 2).min(l.random_max);
        plans.push(SweepPlan::exhaustive(theorem, n..=n));
        plans.push(SweepPlan::random(theorem, l.exhaustive_max + 1..=top, count, seed));
    }
    plans
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[allow(clippy::reversed_empty_ranges)]
    fn caps_are_enforced() {
        assert!(SweepPlan::exhaustive(TheoremId::EdgeLemma, 4..=4).validate().is_err());
        assert!(SweepPlan::exhaustive(TheoremId::DirEdges, 1..=4).validate().is_ok());
        assert!(SweepPlan::random(TheoremId::EdgeLemma, 7..=7, 1, 0).validate().is_err());
        assert!(SweepPlan::exhaustive(TheoremId::WeakKK, 3..=2).validate().is_err());
    }

    #[test]
    fn exhaustive_counts() {
        let certs = run_theorem(&SweepPlan::exhaustive(TheoremId::EdgeIso, 2..=2)).unwrap();
        assert_eq!(certs.len(), 16);
        let certs = run_theorem(&SweepPlan::exhaustive(TheoremId::Matchings, 3..=3)).unwrap();
        assert_eq!(certs.len(), 163);
        assert!(certs.iter().all(|c| c.passed() && c.seed == Seed::Exhaustive));
    }

    #[test]
    fn random_plans_are_reproducible() {
        let plan = SweepPlan::random(TheoremId::BlFullVertices, 4..=5, 10, 7);
        let first = run_theorem(&plan).unwrap();
        assert_eq!(first.len(), 20);
        assert_eq!(first, run_theorem(&plan).unwrap());
        assert_eq!(first[0].seed, Seed::Value(7));
        assert_eq!(first[19].seed, Seed::Value(26));
        for c in &first {
            let line = c.to_json_line();
            let back: Certificate = serde_json::from_str(&line).unwrap();
            assert_eq!(&back, c);
            assert!(back.recheck());
        }
    }

    #[test]
    fn fail_fast_stops_on_first_failure() {
        // a shape error yields a failing certificate on every instance
        let plan = SweepPlan {
            fail_fast: true,
            ..SweepPlan::exhaustive(TheoremId::EdgeIso, 2..=2)
        };
        let mut seen = 0;
        let summary = run_plan(&plan, |_| {
            seen += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(seen, summary.total);
        assert!(!summary.stopped_early);

        let cert = Certificate::issue(
            TheoremId::EdgeIso,
            Instance::Pair {
                n: 2,
                a: vec![0],
                b: vec![3],
            },
            Seed::Exhaustive,
        );
        assert!(!cert.passed());
        assert!(cert.computed.contains_key("error"));
        assert!(cert.recheck());
    }

    #[test]
    fn suite_covers_every_theorem() {
        let suite = default_suite(5, 1);
        for &t in TheoremId::ALL {
            let ex: Vec<_> = suite
                .iter()
                .filter(|p| p.theorem == t && p.strategy == Strategy::Exhaustive)
                .collect();
            let rnd: Vec<_> = suite
                .iter()
                .filter(|p| p.theorem == t && matches!(p.strategy, Strategy::Random { .. }))
                .collect();
            assert!(!ex.is_empty() && !rnd.is_empty(), "{t}");
            assert!(rnd[0].n_range.start() > ex[0].n_range.end());
            for p in ex.iter().chain(&rnd) {
                p.validate().unwrap();
            }
        }
    }

    #[test]
    fn seed_json() {
        assert_eq!(serde_json::to_string(&Seed::Exhaustive).unwrap(), r#""exhaustive""#);
        assert_eq!(serde_json::to_string(&Seed::Value(42)).unwrap(), "42");
        assert_eq!(serde_json::from_str::<Seed>("42").unwrap(), Seed::Value(42));
        assert!(serde_json::from_str::<Seed>(r#""x""#).is_err());
    }
}
