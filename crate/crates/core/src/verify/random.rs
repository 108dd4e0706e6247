//! Seeded random instances.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cube::CubeSet;
use crate::error::{Error, Result};
use crate::verify::instance::Instance;

pub const MAX_RANDOM_DIM: usize = 16;
pub const MAX_ATTEMPTS: usize = 10_000;

/// What kind of instance to draw.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Disjoint non-empty `A`, `B` with uniformly drawn sizes.
    DisjointPair,
    /// A non-empty down-set `A` and a non-empty up-set `B` disjoint from it.
    DownUpPair,
    /// A down/up pair plus a uniform `S` with `A ⊆ S ⊆ B^c`.
    BetweenSet,
    /// A non-empty family of `rank`-sets.
    LevelFamily { rank: usize },
    /// A uniform subset of `P[n]`.
    Subset,
    /// A uniform subset together with a uniform coordinate.
    SubsetCoord,
    /// A non-empty set of size at most `2^{n−1}`.
    HalfSubset,
}

/// Deterministic in `(n, shape, seed)`.
pub fn random_instance(n: usize, shape: Shape, seed: u64) -> Result<Instance> {
    random_instance_capped(n, shape, seed, None)
}

/// As [`random_instance`], redrawing until at most `max_free` vertices lie
/// outside `A ∪ B` (pair shapes only).
pub fn random_instance_capped(
    n: usize,
    shape: Shape,
    seed: u64,
    max_free: Option<usize>,
) -> Result<Instance> {
    if n == 0 || n > MAX_RANDOM_DIM {
        return Err(Error::DimensionOutOfRange {
            dim: n,
            max: MAX_RANDOM_DIM,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match shape {
        Shape::DisjointPair | Shape::DownUpPair | Shape::BetweenSet => {
            for _ in 0..MAX_ATTEMPTS {
                let pair = if shape == Shape::DisjointPair {
                    Some(disjoint_pair(n, &mut rng))
                } else {
                    down_up_pair(n, &mut rng)
                };
                let Some((a, b)) = pair else { continue };
                let free = (1usize << n) - a.len() - b.len();
                if max_free.is_some_and(|cap| free > cap) {
                    continue;
                }
                if shape == Shape::BetweenSet {
                    let s = between(&a, &b, &mut rng);
                    return Ok(Instance::sandwich(&a, &b, &s));
                }
                return Ok(Instance::pair(&a, &b));
            }
            Err(Error::NoConvergence(format!(
                "no {shape:?} instance in Q_{n} after {MAX_ATTEMPTS} attempts"
            )))
        }
        Shape::LevelFamily { rank } => {
            if rank == 0 || rank > n {
                return Err(Error::Input(format!("rank {rank} is outside 1..={n}")));
            }
            let level: Vec<u32> = (0..1u32 << n)
                .filter(|m| m.count_ones() as usize == rank)
                .collect();
            let size = rng.gen_range(1..=level.len());
            let members = index::sample(&mut rng, level.len(), size)
                .into_iter()
                .map(|k| level[k]);
            Ok(Instance::level(&CubeSet::from_masks(n, members)?, rank))
        }
        Shape::Subset => Ok(Instance::set(&uniform_subset(n, &mut rng))),
        Shape::SubsetCoord => {
            let s = uniform_subset(n, &mut rng);
            let i = rng.gen_range(1..=n);
            Ok(Instance::set_coord(&s, i))
        }
        Shape::HalfSubset => {
            let total = 1usize << n;
            let size = rng.gen_range(1..=total / 2);
            let members = index::sample(&mut rng, total, size).into_iter().map(|k| k as u32);
            Ok(Instance::matching(&CubeSet::from_masks(n, members)?))
        }
    }
}

fn uniform_subset(n: usize, rng: &mut ChaCha8Rng) -> CubeSet {
    let members: Vec<u32> = (0..1u32 << n).filter(|_| rng.gen::<bool>()).collect();
    CubeSet::from_masks(n, members).expect("dimension checked")
}

fn disjoint_pair(n: usize, rng: &mut ChaCha8Rng) -> (CubeSet, CubeSet) {
    let total = 1usize << n;
    let size_a = rng.gen_range(1..total);
    let size_b = rng.gen_range(1..=total - size_a);
    let mut order: Vec<u32> = (0..total as u32).collect();
    order.shuffle(rng);
    let a = CubeSet::from_masks(n, order[..size_a].iter().copied()).expect("dimension checked");
    let b = CubeSet::from_masks(n, order[size_a..size_a + size_b].iter().copied())
        .expect("dimension checked");
    (a, b)
}

fn down_closure(mut s: CubeSet) -> CubeSet {
    // closing under one coordinate keeps closure under the earlier ones
    for b in 0..s.dim() {
        s = &s | &s.drop_bit(b);
    }
    s
}

fn up_closure(mut s: CubeSet) -> CubeSet {
    for b in 0..s.dim() {
        s = &s | &s.lift_bit(b);
    }
    s
}

fn down_up_pair(n: usize, rng: &mut ChaCha8Rng) -> Option<(CubeSet, CubeSet)> {
    let total = 1usize << n;
    let t = rng.gen_range(1..=total / 2);
    let seeds = (0..t).map(|_| rng.gen_range(0..total as u32));
    let a = down_closure(CubeSet::from_masks(n, seeds).expect("dimension checked"));
    let outside: Vec<u32> = a.complement().masks().collect();
    if outside.is_empty() {
        return None;
    }
    let t = rng.gen_range(1..=total / 2);
    let seeds = (0..t).map(|_| outside[rng.gen_range(0..outside.len())]);
    let b = up_closure(CubeSet::from_masks(n, seeds).expect("dimension checked"));
    Some((a, b))
}

fn between(a: &CubeSet, b: &CubeSet, rng: &mut ChaCha8Rng) -> CubeSet {
    let mut s = a.clone();
    for m in (a | b).complement().masks() {
        if rng.gen::<bool>() {
            s.insert_mask(m);
        }
    }
    s
}
