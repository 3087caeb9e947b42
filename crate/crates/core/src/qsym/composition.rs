use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coxeter::DescentSet;
use crate::error::{Error, Result};

/// A composition of `n`, parts left to right. The empty composition is the
/// unique composition of 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `(n)`, or `()` for `n = 0`.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n])
        }
    }

    /// `(s_1, s_2 − s_1, …, n − s_p)`.
    pub fn from_set(s: DescentSet, n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        let mut parts = Vec::new();
        let mut last = 0;
        for x in s.iter().filter(|&x| x < n) {
            parts.push(x - last);
            last = x;
        }
        parts.push(n - last);
        Composition(parts)
    }

    /// Partial sums, last one excluded.
    pub fn descent_set(&self) -> DescentSet {
        let mut acc = 0;
        let k = self.0.len().saturating_sub(1);
        DescentSet::from_elems(self.0[..k].iter().map(|&p| {
            acc += p;
            acc
        }))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The composition whose descent set is the complement in `1..n−1`.
    pub fn complement(&self) -> Self {
        let n = self.size();
        Self::from_set(self.descent_set().complement(n.saturating_sub(1)), n)
    }

    /// `self` is finer than `other`: `Des(self) ⊇ Des(other)`, same size.
    pub fn is_finer(&self, other: &Self) -> bool {
        self.size() == other.size() && other.descent_set().is_subset(self.descent_set())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Composition([self.0.clone(), other.0.clone()].concat())
    }

    /// `I ▹ J`: last part of `I` glued to the first part of `J`.
    pub fn near_concat(&self, other: &Self) -> Option<Self> {
        let (a, b) = (self.0.last()?, other.0.first()?);
        let mut parts = self.0[..self.0.len() - 1].to_vec();
        parts.push(a + b);
        parts.extend_from_slice(&other.0[1..]);
        Some(Composition(parts))
    }

    /// Sorted decreasingly.
    pub fn to_partition(&self) -> Vec<usize> {
        let mut p = self.0.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    /// All compositions of `n`, in the order of their descent sets.
    pub fn all(n: usize) -> Vec<Self> {
        if n == 0 {
            return vec![Self::empty()];
        }
        DescentSet::all(n - 1).into_iter().map(|s| Self::from_set(s, n)).collect()
    }

    /// Coarser compositions (including itself).
    pub fn coarsenings(&self) -> Vec<Self> {
        let n = self.size();
        Self::all(n).into_iter().filter(|j| self.is_finer(j)).collect()
    }

    /// Finer compositions (including itself).
    pub fn refinements(&self) -> Vec<Self> {
        let n = self.size();
        Self::all(n).into_iter().filter(|j| j.is_finer(self)).collect()
    }

    /// Cut at position `k`: the parts covering `1..k` and `k+1..n`, splitting
    /// a part if needed.
    pub fn split_at(&self, k: usize) -> (Self, Self) {
        let n = self.size();
        let d = self.descent_set();
        let left = Self::from_set(DescentSet::from_elems(d.iter().filter(|&x| x < k)), k);
        let right = Self::from_set(DescentSet::from_elems(d.iter().filter(|&x| x > k).map(|x| x - k)), n - k);
        (left, right)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        if t.is_empty() {
            return Ok(Self::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad composition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Composition::new(parts).map_err(serde::de::Error::custom)
    }
}
