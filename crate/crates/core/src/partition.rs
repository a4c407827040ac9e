//! Integer partitions, compositions, multipartitions and box operations on
//! Young diagrams.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive integers.
///
/// The empty sequence is the unique partition of 0. Trailing zeros are
/// stripped on construction so every partition has exactly one representation.
///
/// The derived ordering is the canonical enumeration order used throughout the
/// crate: partitions of the same weight are ordered lexicographically
/// decreasing on their part sequences, so `[4] < [3,1] < [2,2] < [2,1,1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build a partition from its parts. Zero parts are stripped; parts that
    /// are not weakly decreasing are rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Length of the i-th row, with missing rows read as 0.
    pub fn row(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// The number being partitioned.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Does `inner` fit inside `self` rowwise?
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= self.row(i))
    }

    /// All partitions obtained from `self` by adding one box: the set Y+.
    pub fn y_plus(&self) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        for i in 0..=self.parts.len() {
            // A box may be appended to row i iff the result stays weakly
            // decreasing, i.e. row i is strictly shorter than row i-1.
            if i == 0 || self.row(i) < self.row(i - 1) {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.insert(Partition { parts });
            }
        }
        out
    }

    /// All partitions obtained from `self` by removing one box: the set Y-.
    pub fn y_minus(&self) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        for i in 0..self.parts.len() {
            if self.row(i) > self.row(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.insert(Partition { parts });
            }
        }
        out
    }

    /// Hook length of the box in row `r`, column `c` (0-based).
    fn hook(&self, r: usize, c: usize) -> u64 {
        let arm = self.parts[r] as u64 - c as u64 - 1;
        let leg = self
            .parts
            .iter()
            .skip(r + 1)
            .filter(|&&p| p as usize > c)
            .count() as u64;
        arm + leg + 1
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reverse lexicographic so the canonical enumeration order ascends.
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// An integer composition: a tuple of non-negative integers of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        Composition {
            parts: parts.into(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
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
}

/// A tuple of `l` partitions, indexing an irreducible of `F wr S_n` when `F`
/// has `l` irreducibles.
///
/// The derived ordering (componentwise, using the canonical partition order)
/// is the canonical enumeration order for multipartitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: impl Into<Vec<Partition>>) -> Self {
        MultiPartition {
            components: components.into(),
        }
    }

    /// The all-empty multipartition with `l` components.
    pub fn empty(l: usize) -> Self {
        MultiPartition {
            components: vec![Partition::empty(); l],
        }
    }

    /// `([1], {}, ..., {})` with the single box in component `i` (0-based).
    pub fn single_box(l: usize, i: usize) -> Self {
        let mut components = vec![Partition::empty(); l];
        components[i] = Partition::new(vec![1]).expect("[1] is a partition");
        MultiPartition { components }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    /// Number of components `l`.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// The composition of component weights.
    pub fn shape(&self) -> Composition {
        Composition::new(
            self.components
                .iter()
                .map(|p| p.weight())
                .collect::<Vec<_>>(),
        )
    }

    /// Total number of boxes.
    pub fn weight(&self) -> u32 {
        self.components.iter().map(|p| p.weight()).sum()
    }

    /// Copy of `self` with component `i` replaced by `p`.
    pub fn with_component(&self, i: usize, p: Partition) -> Self {
        let mut components = self.components.clone();
        components[i] = p;
        MultiPartition { components }
    }

    /// Error unless `self` and `other` have the same component count.
    pub fn check_same_len(&self, other: &MultiPartition) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::ComponentCountMismatch {
                expected: self.len(),
                got: other.len(),
            })
        }
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n` in canonical (lexicographically decreasing) order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let mut part = remaining.min(max_part);
    while part >= 1 {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
        part -= 1;
    }
}

/// All multipartitions of `n` with `l` components, in canonical order.
///
/// The result has `P_l(n)` entries.
pub fn multipartitions_of(n: u32, l: usize) -> Vec<MultiPartition> {
    assert!(l >= 1, "component count must be positive");
    let mut out = Vec::new();
    let mut current: Vec<Partition> = Vec::new();
    multi_descend(n, l, &mut current, &mut out);
    // The recursion groups by first-component weight; resort so the output
    // follows the componentwise canonical order used everywhere else.
    out.sort();
    out
}

fn multi_descend(
    remaining: u32,
    slots: usize,
    current: &mut Vec<Partition>,
    out: &mut Vec<MultiPartition>,
) {
    if slots == 1 {
        for p in partitions_of(remaining) {
            current.push(p);
            out.push(MultiPartition {
                components: current.clone(),
            });
            current.pop();
        }
        return;
    }
    // First-component weight descending keeps the output in canonical order.
    for w in (0..=remaining).rev() {
        for p in partitions_of(w) {
            current.push(p);
            multi_descend(remaining - w, slots - 1, current, out);
            current.pop();
        }
    }
}

/// The number of standard Young tableaux of shape `lambda`, by the hook
/// length formula. This is the dimension of the irreducible `S_n`-module
/// indexed by `lambda`.
pub fn standard_tableau_count(lambda: &Partition) -> u64 {
    let n = lambda.weight() as u64;
    let mut numerator: u128 = 1;
    for k in 1..=n {
        numerator *= k as u128;
    }
    let mut denominator: u128 = 1;
    for r in 0..lambda.rows() {
        for c in 0..lambda.parts()[r] as usize {
            denominator *= lambda.hook(r, c) as u128;
        }
    }
    debug_assert_eq!(numerator % denominator, 0);
    (numerator / denominator) as u64
}
