//! Partitions, strict partitions and skew diagrams.
//!
//! Young diagrams use English notation: row `i` (0-based) of `λ` holds the
//! boxes in columns `1..=λ[i]`. Partitions never store trailing zeros.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{check_range, Error, Result};

/// Largest `n` accepted by [`enumerate_basis`].
pub const MAX_BASIS_RANK: u32 = 16;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be weakly decreasing",
            });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of positive parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Row length, zero past the last part.
    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Membership in `ℛ(n)`: at most `n` parts, each at most `n`.
    pub fn fits(&self, n: u32) -> bool {
        self.part(0) <= n && self.len() <= n as usize
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("∅");
    }
    f.write_str("(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// An element of `𝒟(n)`: strictly decreasing positive parts bounded by `n`.
///
/// Ordering is the canonical basis order: by `n`, then weight, then parts
/// compared lexicographically in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrictPartition {
    parts: Vec<u32>,
    n: u32,
}

impl StrictPartition {
    pub fn new(parts: impl Into<Vec<u32>>, n: u32) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "n",
                value: 0,
                min: 1,
                max: i64::from(u32::MAX),
            });
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be strictly decreasing",
            });
        }
        if parts.first().is_some_and(|&p| p > n) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "largest part exceeds n",
            });
        }
        Ok(Self { parts, n })
    }

    pub fn empty(n: u32) -> Self {
        Self { parts: Vec::new(), n }
    }

    /// The strict partition whose parts are the set bits of `mask`
    /// (bit `p - 1` stands for part `p`).
    pub fn from_mask(mask: u32, n: u32) -> Self {
        let parts = (1..=n).rev().filter(|p| mask & (1 << (p - 1)) != 0).collect();
        Self { parts, n }
    }

    pub fn mask(&self) -> u32 {
        self.parts.iter().fold(0, |m, p| m | (1 << (p - 1)))
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn as_partition(&self) -> Partition {
        Partition::from_sorted(self.parts.clone())
    }

    /// `λ̂`: the parts of `{1, …, n}` not used by `λ`.
    pub fn complement(&self) -> StrictPartition {
        let full = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        Self::from_mask(full ^ self.mask(), self.n)
    }

    /// Converts a plain partition, which must be strict and fit under `n`.
    pub fn from_partition(p: &Partition, n: u32) -> Result<Self> {
        Self::new(p.parts().to_vec(), n)
    }
}

impl Ord for StrictPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.weight().cmp(&other.weight()))
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for StrictPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// All of `𝒟(n)` in canonical order. The list has `2ⁿ` entries and starts with `∅`.
pub fn enumerate_basis(n: u32) -> Result<Vec<StrictPartition>> {
    check_range("n", i64::from(n), 1, i64::from(MAX_BASIS_RANK))?;
    let mut all: Vec<_> = (0..1u32 << n).map(|mask| StrictPartition::from_mask(mask, n)).collect();
    all.sort();
    Ok(all)
}

/// `𝒟(n)` together with a reverse index.
#[derive(Debug, Clone)]
pub struct Basis {
    n: u32,
    elements: Vec<StrictPartition>,
    index: HashMap<StrictPartition, usize>,
}

impl Basis {
    pub fn new(n: u32) -> Result<Self> {
        let elements = enumerate_basis(n)?;
        let index = elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Ok(Self { n, elements, index })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[StrictPartition] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &StrictPartition {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &StrictPartition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Position of `λ̂` for every `λ`, in basis order.
    pub fn complement_indices(&self) -> Vec<usize> {
        self.elements.iter().map(|p| self.index[&p.complement()]).collect()
    }
}

/// Connected-component tallies of a skew diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentCounts {
    pub components: u32,
    pub off_first_column: u32,
}

impl ComponentCounts {
    /// `N`: components not meeting the first column.
    pub fn n(self) -> u32 {
        self.off_first_column
    }

    /// `N′`: one less than the number of components, and 0 for the empty shape.
    pub fn n_prime(self) -> u32 {
        self.components.saturating_sub(1)
    }
}

/// The skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.parts,
                inner: inner.parts,
            });
        }
        Ok(Self { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.outer.weight() - self.inner.weight()
    }

    /// Boxes as `(row, column)`, both 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        (0..self.outer.len()).flat_map(move |r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c)))
    }

    /// At most one box per column.
    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.outer.len()).all(|r| self.outer.part(r + 1) <= self.inner.part(r))
    }

    /// Components under vertex-or-edge adjacency.
    ///
    /// Each row contributes one contiguous run of boxes, and only runs in
    /// consecutive rows can touch, so components are maximal chains of
    /// touching runs.
    pub fn component_counts(&self) -> ComponentCounts {
        let mut counts = ComponentCounts {
            components: 0,
            off_first_column: 0,
        };
        // (row, start, end) of the previous nonempty run, columns 0-based half-open
        let mut prev: Option<(usize, u32, u32)> = None;
        let mut touches_first = false;
        for r in 0..self.outer.len() {
            let (start, end) = (self.inner.part(r), self.outer.part(r));
            if start == end {
                continue;
            }
            let joined = matches!(prev, Some((pr, ps, pe)) if pr + 1 == r && start <= pe && ps <= end);
            if !joined {
                if prev.is_some() && !touches_first {
                    counts.off_first_column += 1;
                }
                counts.components += 1;
                touches_first = false;
            }
            touches_first |= start == 0;
            prev = Some((r, start, end));
        }
        if prev.is_some() && !touches_first {
            counts.off_first_column += 1;
        }
        counts
    }
}

/// `N(λ, μ)` for `μ ⊇ λ`.
pub fn n_exponent(inner: &Partition, outer: &Partition) -> Result<u32> {
    Ok(SkewShape::new(outer.clone(), inner.clone())?.component_counts().n())
}

/// `N′(λ, μ)` for `μ ⊇ λ`.
pub fn n_prime_exponent(inner: &Partition, outer: &Partition) -> Result<u32> {
    Ok(SkewShape::new(outer.clone(), inner.clone())?
        .component_counts()
        .n_prime())
}

/// All `μ ⊇ λ` with `μ/λ` a horizontal strip of `size` boxes and `μ₁ ≤ max_first`.
///
/// Results are in lexicographically decreasing order of `μ`.
pub fn add_horizontal_strips(lambda: &Partition, size: u32, max_first: u32) -> Vec<Partition> {
    fn go(lambda: &Partition, row: usize, left: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        let base = lambda.part(row);
        if row > lambda.len() {
            if left == 0 {
                let mut parts = cur.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.push(Partition::from_sorted(parts));
            }
            return;
        }
        if cap < base {
            return;
        }
        let most = (cap - base).min(left);
        for add in (0..=most).rev() {
            cur.push(base + add);
            go(lambda, row + 1, left - add, base, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, size, max_first, &mut Vec::new(), &mut out);
    out
}

/// All `ν ⊆ λ` with `λ/ν` a horizontal strip of `size` boxes.
///
/// Results are in lexicographically decreasing order of `ν`.
pub fn remove_horizontal_strips(lambda: &Partition, size: u32) -> Vec<Partition> {
    fn go(lambda: &Partition, row: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == lambda.len() {
            if left == 0 {
                let mut parts = cur.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.push(Partition::from_sorted(parts));
            }
            return;
        }
        let top = lambda.part(row);
        let floor = lambda.part(row + 1);
        let most = (top - floor).min(left);
        for cut in 0..=most {
            cur.push(top - cut);
            go(lambda, row + 1, left - cut, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, size, &mut Vec::new(), &mut out);
    out
}
