use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coxeter::DescentSet;
use crate::error::{Error, Result};

/// A subset of `{1..n}`, used as the label of `e_S` in an exterior power.
pub type Subset = DescentSet;

/// A nondecreasing map `{1..n} → {1..n}`, stored by its values.
/// Monoid product is `f.then(g)`: apply `f` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NdFunction(Vec<usize>);

impl NdFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if values.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::Precondition(format!("values of {values:?} leave 1..={n}")));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Precondition(format!("{values:?} is not nondecreasing")));
        }
        Ok(NdFunction(values))
    }

    pub fn identity(n: usize) -> Self {
        NdFunction((1..=n).collect())
    }

    /// `π_i`: sends `i + 1` to `i`.
    pub fn pi(n: usize, i: usize) -> Self {
        let mut v: Vec<usize> = (1..=n).collect();
        v[i] = i;
        NdFunction(v)
    }

    /// `π̄_i`: sends `i` to `i + 1`.
    pub fn pibar(n: usize, i: usize) -> Self {
        let mut v: Vec<usize> = (1..=n).collect();
        v[i - 1] = i + 1;
        NdFunction(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `f(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_parking(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v <= i + 1)
    }

    /// Image is an initial segment `{1..k}`.
    pub fn is_initial(&self) -> bool {
        self.0[0] == 1 && self.0.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    pub fn then(&self, other: &Self) -> Self {
        NdFunction(self.0.iter().map(|&v| other.0[v - 1]).collect())
    }

    pub fn image(&self) -> Subset {
        Subset::from_elems(self.0.iter().copied())
    }

    /// `f(S)`, or `None` when `f` is not injective on `S`.
    pub fn apply_set(&self, s: Subset) -> Option<Subset> {
        let img = Subset::from_elems(s.iter().map(|i| self.at(i)));
        (img.len() == s.len()).then_some(img)
    }

    /// Product of the monoid generators in a word; letters `i` for `π_i`
    /// and `-i` for `π̄_i`.
    pub fn from_word(n: usize, word: &[i32]) -> Self {
        word.iter().fold(Self::identity(n), |acc, &l| {
            let g = if l > 0 { Self::pi(n, l as usize) } else { Self::pibar(n, (-l) as usize) };
            acc.then(&g)
        })
    }

    /// `f × g` acting on `{1..n}` and on `{n+1..n+m}`.
    pub fn juxtapose(&self, other: &Self) -> Self {
        let n = self.n();
        NdFunction(self.0.iter().copied().chain(other.0.iter().map(|&v| v + n)).collect())
    }
}

impl fmt::Display for NdFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for NdFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad value in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        NdFunction::new(values)
    }
}

impl Serialize for NdFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for NdFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All of `NDF_n`, in lexicographic order of value tables.
pub fn ndf_enumerate(n: usize) -> Vec<NdFunction> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<NdFunction>) {
        if prefix.len() == n {
            out.push(NdFunction(prefix.clone()));
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1);
        for v in lo..=n {
            prefix.push(v);
            rec(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `NDPF_n`: the parking members of `NDF_n`.
pub fn ndpf_enumerate(n: usize) -> Vec<NdFunction> {
    ndf_enumerate(n).into_iter().filter(NdFunction::is_parking).collect()
}

/// Nondecreasing initial functions.
pub fn nd_initial_enumerate(n: usize) -> Vec<NdFunction> {
    ndf_enumerate(n).into_iter().filter(NdFunction::is_initial).collect()
}

/// `C(n, k)` as an exact integer; 0 when `k > n`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn catalan(n: usize) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

/// `k`-subsets of `{1..n}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Subset> {
    DescentSet::all(n).into_iter().filter(|s| s.len() == k).collect()
}
