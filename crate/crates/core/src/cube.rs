//! Vertices and set families of the hypercube `Q_n`.
//!
//! A vertex is a subset of `[n] = {1, ..., n}` stored as an `n`-bit mask, with
//! element `i` living in bit `i - 1`. A [`CubeSet`] is a family of vertices
//! stored as a characteristic bitset of length `2^n`, so that the binary order
//! on vertices coincides with the numeric order of masks and iteration order.
//!
//! Coordinates in the public API are 1-based, like elements.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use itertools::Itertools;
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

/// Largest dimension a [`CubeSet`] may have (a 2 MiB bitset).
pub const MAX_DIM: usize = 24;

const WORD_BITS: usize = 64;

// LOW[b] has a one at every position whose bit `b` is clear, for b < 6.
const LOW: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange { dim, max: MAX_DIM })
    }
}

pub(crate) fn check_coord(i: usize, dim: usize) -> Result<()> {
    if (1..=dim).contains(&i) {
        Ok(())
    } else {
        Err(Error::CoordinateOutOfRange { i, dim })
    }
}

fn check_same_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// 1-based elements of a mask, ascending.
pub fn mask_elements(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// A vertex of `Q_n`: a subset of `[n]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubeVertex {
    mask: u32,
    dim: u8,
}

impl CubeVertex {
    pub fn new(dim: usize, mask: u32) -> Result<Self> {
        check_dim(dim)?;
        if u64::from(mask) >> dim != 0 {
            return Err(Error::MaskOutOfRange {
                mask: mask.into(),
                dim,
            });
        }
        Ok(CubeVertex {
            mask,
            dim: dim as u8,
        })
    }

    /// Builds a vertex from 1-based elements; repeats are harmless.
    pub fn from_elements(dim: usize, elements: &[usize]) -> Result<Self> {
        check_dim(dim)?;
        let mut mask = 0u32;
        for &e in elements {
            if e == 0 || e > dim {
                return Err(Error::ElementOutOfRange {
                    element: e as u64,
                    dim,
                });
            }
            mask |= 1 << (e - 1);
        }
        Ok(CubeVertex {
            mask,
            dim: dim as u8,
        })
    }

    pub(crate) fn new_unchecked(dim: usize, mask: u32) -> Self {
        debug_assert!(dim <= MAX_DIM && u64::from(mask) >> dim == 0);
        CubeVertex {
            mask,
            dim: dim as u8,
        }
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    pub fn dim(self) -> usize {
        self.dim as usize
    }

    /// `|x|`.
    pub fn weight(self) -> u32 {
        self.mask.count_ones()
    }

    pub fn elements(self) -> Vec<usize> {
        mask_elements(self.mask)
    }

    pub fn contains(self, element: usize) -> bool {
        element >= 1 && element <= self.dim() && self.mask >> (element - 1) & 1 == 1
    }
}

impl fmt::Debug for CubeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        write!(f, "{}", self.elements().iter().join(","))?;
        write!(f, "}}")
    }
}

/// Binary order: `x < y` iff `max(x △ y) ∈ y`.
pub fn compare_binary(x: CubeVertex, y: CubeVertex) -> Result<Ordering> {
    check_same_dim(x.dim(), y.dim())?;
    let diff = x.mask ^ y.mask;
    if diff == 0 {
        return Ok(Ordering::Equal);
    }
    let top = 31 - diff.leading_zeros();
    Ok(if y.mask >> top & 1 == 1 {
        Ordering::Less
    } else {
        Ordering::Greater
    })
}

/// Simplicial order: by size, then `x < y` iff `min(x △ y) ∈ x`.
pub fn compare_simplicial(x: CubeVertex, y: CubeVertex) -> Result<Ordering> {
    check_same_dim(x.dim(), y.dim())?;
    Ok(simplicial_masks(x.mask, y.mask))
}

fn simplicial_masks(x: u32, y: u32) -> Ordering {
    match x.count_ones().cmp(&y.count_ones()) {
        Ordering::Equal => {
            let diff = x ^ y;
            if diff == 0 {
                Ordering::Equal
            } else if x >> diff.trailing_zeros() & 1 == 1 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        other => other,
    }
}

/// The two vertex orders used for initial segments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexOrder {
    Binary,
    Simplicial,
}

/// A family `S ⊆ P[n]` as a characteristic bitset of length `2^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubeSet {
    dim: u8,
    words: SmallVec<[u64; 1]>,
}

fn word_count(dim: usize) -> usize {
    ((1usize << dim) / WORD_BITS).max(1)
}

fn tail_mask(dim: usize) -> u64 {
    if dim >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << dim)) - 1
    }
}

impl CubeSet {
    pub fn empty(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self::empty_unchecked(dim))
    }

    pub(crate) fn empty_unchecked(dim: usize) -> Self {
        CubeSet {
            dim: dim as u8,
            words: smallvec![0; word_count(dim)],
        }
    }

    /// The whole cube `P[n]`.
    pub fn full(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self::full_unchecked(dim))
    }

    pub(crate) fn full_unchecked(dim: usize) -> Self {
        let mut s = CubeSet {
            dim: dim as u8,
            words: smallvec![u64::MAX; word_count(dim)],
        };
        s.trim();
        s
    }

    /// `make_cube_set`: the family holding exactly `members` (repeats collapse).
    pub fn from_vertices(dim: usize, members: &[CubeVertex]) -> Result<Self> {
        let mut s = Self::empty(dim)?;
        for v in members {
            check_same_dim(dim, v.dim())?;
            s.insert_mask(v.mask);
        }
        Ok(s)
    }

    pub fn from_masks(dim: usize, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut s = Self::empty(dim)?;
        for m in masks {
            if u64::from(m) >> dim != 0 {
                return Err(Error::MaskOutOfRange {
                    mask: m.into(),
                    dim,
                });
            }
            s.insert_mask(m);
        }
        Ok(s)
    }

    /// For `dim <= 6`: the family whose characteristic vector is `bits`.
    pub fn from_bits(dim: usize, bits: u64) -> Result<Self> {
        check_dim(dim)?;
        if dim > 6 {
            return Err(Error::DimensionOutOfRange { dim, max: 6 });
        }
        if bits & !tail_mask(dim) != 0 {
            return Err(Error::MaskOutOfRange { mask: bits, dim });
        }
        Ok(CubeSet {
            dim: dim as u8,
            words: smallvec![bits],
        })
    }

    /// Low 64 bits of the characteristic vector (the whole vector when `dim <= 6`).
    pub fn low_bits(&self) -> u64 {
        self.words[0]
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    /// Number of vertices in the cube, `2^n`.
    pub fn universe_len(&self) -> usize {
        1 << self.dim
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe_len()
    }

    pub fn contains(&self, v: CubeVertex) -> bool {
        v.dim() == self.dim() && self.contains_mask(v.mask)
    }

    pub fn contains_mask(&self, mask: u32) -> bool {
        let m = mask as usize;
        m < self.universe_len() && self.words[m / WORD_BITS] >> (m % WORD_BITS) & 1 == 1
    }

    pub fn insert_mask(&mut self, mask: u32) {
        let m = mask as usize;
        debug_assert!(m < self.universe_len());
        self.words[m / WORD_BITS] |= 1 << (m % WORD_BITS);
    }

    pub fn remove_mask(&mut self, mask: u32) {
        let m = mask as usize;
        debug_assert!(m < self.universe_len());
        self.words[m / WORD_BITS] &= !(1 << (m % WORD_BITS));
    }

    pub fn insert(&mut self, v: CubeVertex) -> Result<()> {
        check_same_dim(self.dim(), v.dim())?;
        self.insert_mask(v.mask);
        Ok(())
    }

    /// Member masks in ascending (binary) order.
    pub fn masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros();
                    rest &= rest - 1;
                    Some((wi * WORD_BITS) as u32 + b)
                }
            })
        })
    }

    pub fn vertices(&self) -> impl Iterator<Item = CubeVertex> + '_ {
        let dim = self.dim();
        self.masks().map(move |m| CubeVertex::new_unchecked(dim, m))
    }

    /// `S^c`.
    pub fn complement(&self) -> CubeSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &CubeSet) -> bool {
        self.dim == other.dim
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &CubeSet) -> bool {
        self.dim == other.dim && self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Some member of `self` missing from `other`, if any.
    pub fn first_outside(&self, other: &CubeSet) -> Option<CubeVertex> {
        (self - other).vertices().next()
    }

    pub fn ensure_same_dim(&self, other: &CubeSet) -> Result<()> {
        check_same_dim(self.dim(), other.dim())
    }

    fn trim(&mut self) {
        let t = tail_mask(self.dim());
        if let Some(last) = self.words.last_mut() {
            *last &= t;
        }
    }

    fn zip_with(&self, other: &CubeSet, f: impl Fn(u64, u64) -> u64) -> CubeSet {
        assert_eq!(self.dim, other.dim, "cube sets of different dimension");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| f(a, b))
            .collect();
        let mut out = CubeSet {
            dim: self.dim,
            words,
        };
        out.trim();
        out
    }

    // --- coordinate shifts, 0-based bit `b` ---

    /// All masks with bit `b` clear.
    pub(crate) fn avoiding_bit(dim: usize, b: usize) -> CubeSet {
        let mut out = CubeSet::empty_unchecked(dim);
        if b < 6 {
            for w in out.words.iter_mut() {
                *w = LOW[b];
            }
        } else {
            let stride = 1usize << (b - 6);
            for (j, w) in out.words.iter_mut().enumerate() {
                if j & stride == 0 {
                    *w = u64::MAX;
                }
            }
        }
        out.trim();
        out
    }

    /// `{x ∪ {b} : x ∈ S, b ∉ x}`.
    pub(crate) fn lift_bit(&self, b: usize) -> CubeSet {
        let mut out = CubeSet::empty_unchecked(self.dim());
        if b < 6 {
            for (o, &w) in out.words.iter_mut().zip(&self.words) {
                *o = (w & LOW[b]) << (1 << b);
            }
        } else {
            let stride = 1usize << (b - 6);
            for j in 0..self.words.len() {
                if j & stride == 0 {
                    out.words[j + stride] = self.words[j];
                }
            }
        }
        out.trim();
        out
    }

    /// `{x ∖ {b} : x ∈ S, b ∈ x}`.
    pub(crate) fn drop_bit(&self, b: usize) -> CubeSet {
        let mut out = CubeSet::empty_unchecked(self.dim());
        if b < 6 {
            for (o, &w) in out.words.iter_mut().zip(&self.words) {
                *o = (w >> (1 << b)) & LOW[b];
            }
        } else {
            let stride = 1usize << (b - 6);
            for j in 0..self.words.len() {
                if j & stride == 0 {
                    out.words[j] = self.words[j + stride];
                }
            }
        }
        out
    }

    /// All vertices of the cube avoiding element `i` (1-based).
    pub fn avoiding(dim: usize, i: usize) -> Result<CubeSet> {
        check_dim(dim)?;
        check_coord(i, dim)?;
        Ok(Self::avoiding_bit(dim, i - 1))
    }

    /// `A × {i}`: adds element `i` to every member that avoids it.
    pub fn times_element(&self, i: usize) -> Result<CubeSet> {
        check_coord(i, self.dim())?;
        Ok(self.lift_bit(i - 1))
    }
}

impl fmt::Debug for CubeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q{}", self.dim)?;
        f.debug_set().entries(self.vertices()).finish()
    }
}

impl BitOr for &CubeSet {
    type Output = CubeSet;
    fn bitor(self, rhs: &CubeSet) -> CubeSet {
        self.zip_with(rhs, |a, b| a | b)
    }
}

impl BitAnd for &CubeSet {
    type Output = CubeSet;
    fn bitand(self, rhs: &CubeSet) -> CubeSet {
        self.zip_with(rhs, |a, b| a & b)
    }
}

impl BitXor for &CubeSet {
    type Output = CubeSet;
    fn bitxor(self, rhs: &CubeSet) -> CubeSet {
        self.zip_with(rhs, |a, b| a ^ b)
    }
}

impl Sub for &CubeSet {
    type Output = CubeSet;
    fn sub(self, rhs: &CubeSet) -> CubeSet {
        self.zip_with(rhs, |a, b| a & !b)
    }
}

impl Not for &CubeSet {
    type Output = CubeSet;
    fn not(self) -> CubeSet {
        self.complement()
    }
}

/// `S` is `i`-down: `x ∈ S ⇒ x ∖ {i} ∈ S`.
pub fn is_i_down(s: &CubeSet, i: usize) -> Result<bool> {
    check_coord(i, s.dim())?;
    Ok(s.drop_bit(i - 1).is_subset(s))
}

/// `S` is closed under taking subsets.
///
/// Checked member by member: removing any single element of a member must
/// land back in `S`.
pub fn is_down_set(s: &CubeSet) -> bool {
    down_set_witness(s).is_none()
}

/// A member `x` of `S` with some `x ∖ {i}` outside `S`.
pub fn down_set_witness(s: &CubeSet) -> Option<CubeVertex> {
    s.vertices().find(|x| {
        let m = x.mask();
        (0..s.dim()).any(|b| m >> b & 1 == 1 && !s.contains_mask(m & !(1 << b)))
    })
}

/// `S` is the complement of a down-set.
pub fn is_up_set(s: &CubeSet) -> bool {
    is_down_set(&s.complement())
}

/// A member `x` of `S` with some `x ∪ {i}` outside `S`.
pub fn up_set_witness(s: &CubeSet) -> Option<CubeVertex> {
    s.vertices().find(|x| {
        let m = x.mask();
        (0..s.dim()).any(|b| m >> b & 1 == 0 && !s.contains_mask(m | 1 << b))
    })
}

/// The first `m` vertices of `P[n]` in the given order.
pub fn initial_segment(dim: usize, m: usize, order: VertexOrder) -> Result<CubeSet> {
    check_dim(dim)?;
    let total = 1usize << dim;
    if m > total {
        return Err(Error::CountOutOfRange {
            count: m as u128,
            min: 0,
            max: total as u128,
        });
    }
    match order {
        VertexOrder::Binary => CubeSet::from_masks(dim, 0..m as u32),
        VertexOrder::Simplicial => CubeSet::from_masks(dim, simplicial_order(dim).take(m)),
    }
}

/// Every mask of `P[n]` in simplicial order: level by level, each level in
/// lexicographic order of its sorted element lists.
pub fn simplicial_order(dim: usize) -> impl Iterator<Item = u32> {
    (0..=dim).flat_map(move |k| {
        (0..dim)
            .combinations(k)
            .map(|bits| bits.into_iter().fold(0u32, |m, b| m | 1 << b))
    })
}

/// The four membership patterns of the column pairs `(x, x ∪ {i})`, `i ∉ x`.
///
/// Each part keeps the ambient dimension; its members all avoid `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionDecomposition {
    pub i: usize,
    /// `x ∈ S` and `x ∪ {i} ∈ S`.
    pub t: CubeSet,
    /// `x ∈ S` only.
    pub u: CubeSet,
    /// `x ∪ {i} ∈ S` only.
    pub v: CubeSet,
    /// Neither.
    pub w: CubeSet,
}

impl SectionDecomposition {
    /// `(T ∪ U) ∪ (T ∪ V) × {i}`.
    pub fn reconstruct(&self) -> CubeSet {
        let bottom = &self.t | &self.u;
        let top = (&self.t | &self.v).lift_bit(self.i - 1);
        &bottom | &top
    }
}

/// Splits `S` into its `i`-sections `T, U, V, W`.
pub fn sections(s: &CubeSet, i: usize) -> Result<SectionDecomposition> {
    check_coord(i, s.dim())?;
    let b = i - 1;
    let avoid = CubeSet::avoiding_bit(s.dim(), b);
    let lower = s & &avoid;
    let upper = s.drop_bit(b);
    Ok(SectionDecomposition {
        i,
        t: &lower & &upper,
        u: &lower - &upper,
        v: &upper - &lower,
        w: &(&avoid - &lower) - &upper,
    })
}
