//! Ground sets and bitmask subsets.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

pub const MAX_GROUND: usize = 64;

/// An ordered universe of up to 64 labeled elements.
///
/// Labels are addressed by bit index; clones share the label storage.
#[derive(Clone)]
pub struct GroundSet {
    labels: Arc<[String]>,
}

impl GroundSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() || labels.len() > MAX_GROUND {
            return Err(Error::InvalidGroundSize(labels.len()));
        }
        for (i, label) in labels.iter().enumerate() {
            if !is_valid_label(label) {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GroundSet {
            labels: labels.into(),
        })
    }

    /// The ground set `{1, ..., n}`.
    pub fn range(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    pub fn contains_set(&self, set: VertexSet) -> bool {
        set.is_subset(self.full())
    }

    /// Looks up every label of `labels`.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        let mut set = VertexSet::EMPTY;
        for label in labels {
            let label = label.as_ref();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            set = set.with(i);
        }
        Ok(set)
    }

    pub fn labels_of(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|i| self.label(i)).collect()
    }

    /// The ground set formed by the members of `set`, in index order.
    pub fn subset(&self, set: VertexSet) -> Result<GroundSet> {
        if !self.contains_set(set) {
            return Err(Error::OutOfGround);
        }
        GroundSet::new(set.iter().map(|i| self.labels[i].clone()))
    }

    /// Concatenates label-disjoint ground sets.
    pub fn concat(parts: &[&GroundSet]) -> Result<GroundSet> {
        let mut labels: Vec<String> = Vec::new();
        for part in parts {
            for label in part.labels() {
                if labels.contains(label) {
                    return Err(Error::OverlappingLabels(label.clone()));
                }
                labels.push(label.clone());
            }
        }
        GroundSet::new(labels)
    }

    pub fn format_set(&self, set: VertexSet) -> String {
        format!("{{{}}}", self.labels_of(set).join(","))
    }
}

pub(crate) fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && !label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, ',' | '-' | '#' | ':' | '{' | '}'))
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl Eq for GroundSet {}

impl std::hash::Hash for GroundSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.labels.hash(state)
    }
}

impl PartialOrd for GroundSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroundSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.labels.cmp(&other.labels)
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroundSet({})", self.labels.join(","))
    }
}

/// A subset of a ground set, stored as a 64-bit mask over label indices.
///
/// Ordered by cardinality first and then by mask value, which is the
/// canonical edge order of a [`Hypergraph`](crate::Hypergraph).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
#[repr(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        VertexSet(1u64 << i)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        indices.into_iter().fold(Self::EMPTY, |s, i| s.with(i))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub const fn with(self, i: usize) -> Self {
        VertexSet(self.0 | 1u64 << i)
    }

    pub const fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1u64 << i))
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Compresses the set onto the positions of `within`: the k-th member of
    /// `within` becomes bit k.
    pub fn compress(self, within: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for (k, i) in within.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << k;
            }
        }
        VertexSet(out)
    }

    /// Inverse of [`compress`](Self::compress).
    pub fn expand(self, within: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for (k, i) in within.iter().enumerate() {
            if self.contains(k) {
                out |= 1 << i;
            }
        }
        VertexSet(out)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then(self.0.cmp(&other.0))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// All subsets of `{0..n}` with exactly `k` members, in increasing mask order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let start = if k == 0 {
        Some(0u64)
    } else if k > n {
        None
    } else {
        Some(VertexSet::full(k).bits())
    };
    let mut state = start;
    std::iter::from_fn(move || {
        let cur = state?;
        // Gosper's hack for the next mask with the same popcount.
        state = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let next = (((r ^ cur) >> 2) / c) | r;
                (next <= limit && next > cur).then_some(next)
            }
        };
        Some(VertexSet(cur))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_rejects_duplicates_and_bad_sizes() {
        assert_eq!(
            GroundSet::new(["a", "b", "a"]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        assert_eq!(
            GroundSet::new(Vec::<String>::new()).unwrap_err(),
            Error::InvalidGroundSize(0)
        );
        assert!(GroundSet::range(64).is_ok());
        assert_eq!(
            GroundSet::range(65).unwrap_err(),
            Error::InvalidGroundSize(65)
        );
        assert!(matches!(
            GroundSet::new(["a-b"]),
            Err(Error::InvalidLabel(_))
        ));
    }

    #[test]
    fn subsets_of_size_counts() {
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(5, 0).count(), 1);
        assert_eq!(subsets_of_size(5, 5).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(64, 63).count(), 64);
        let v: Vec<u64> = subsets_of_size(4, 2).map(|s| s.bits()).collect();
        assert_eq!(v, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
    }

    #[test]
    fn compress_expand_inverse() {
        let within = VertexSet::from_indices([1, 3, 4, 7]);
        let s = VertexSet::from_indices([3, 7]);
        assert_eq!(s.compress(within), VertexSet::from_indices([1, 3]));
        assert_eq!(s.compress(within).expand(within), s);
    }

    #[test]
    fn canonical_set_order() {
        let mut sets = [
            VertexSet::from_bits(0b110),
            VertexSet::from_bits(0b1000),
            VertexSet::from_bits(0b011),
        ];
        sets.sort();
        assert_eq!(
            sets.iter().map(|s| s.bits()).collect::<Vec<_>>(),
            vec![0b1000, 0b011, 0b110]
        );
    }
}
