use std::fmt;

use serde::{Deserialize, Serialize};

/// A subset of the generator indices `1..=rank`, stored as a bitset
/// (bit `s - 1` for generator `s`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DescentSet(pub u32);

impl DescentSet {
    pub const EMPTY: DescentSet = DescentSet(0);

    pub fn full(rank: usize) -> Self {
        DescentSet(((1u64 << rank) - 1) as u32)
    }

    pub fn singleton(s: usize) -> Self {
        DescentSet(1 << (s - 1))
    }

    pub fn from_elems(elems: impl IntoIterator<Item = usize>) -> Self {
        elems.into_iter().fold(Self::EMPTY, |acc, s| acc.with(s))
    }

    pub fn contains(self, s: usize) -> bool {
        s >= 1 && self.0 & (1 << (s - 1)) != 0
    }

    pub fn with(self, s: usize) -> Self {
        DescentSet(self.0 | (1 << (s - 1)))
    }

    pub fn without(self, s: usize) -> Self {
        DescentSet(self.0 & !(1 << (s - 1)))
    }

    pub fn union(self, o: Self) -> Self {
        DescentSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        DescentSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        DescentSet(self.0 & !o.0)
    }

    pub fn complement(self, rank: usize) -> Self {
        Self::full(rank).difference(self)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_disjoint(self, o: Self) -> bool {
        self.0 & o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Elements in increasing order, 1-based.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=32).filter(move |&s| self.contains(s))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `1..=rank`, ordered by size and then
    /// lexicographically; a linear extension of inclusion.
    pub fn all(rank: usize) -> Vec<DescentSet> {
        let mut v: Vec<DescentSet> = (0..1u32 << rank).map(DescentSet).collect();
        v.sort();
        v
    }

    pub fn sort_key(self) -> (usize, Vec<usize>) {
        (self.len(), self.to_vec())
    }

    /// Parses `"{1,3}"`, `"1,3"` or `"{}"`.
    pub fn parse(s: &str) -> Option<Self> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if t.is_empty() {
            return Some(Self::EMPTY);
        }
        t.split(',')
            .map(|x| x.trim().parse::<usize>().ok().filter(|&v| (1..=32).contains(&v)))
            .collect::<Option<Vec<_>>>()
            .map(Self::from_elems)
    }
}

/// Ordered by size, then lexicographically.
impl Ord for DescentSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for DescentSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
