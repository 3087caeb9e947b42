use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coxeter::DescentSet;
use crate::error::{Error, Result};

/// Largest group the crate is willing to tabulate.
pub const MAX_GROUP_ORDER: usize = 1_000_000;

/// Supported Coxeter types. `A(r)` is the symmetric group on `r + 1`
/// letters, `B(n)` the hyperoctahedral group on `n` letters and `I2(m)`
/// the dihedral group of order `2m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    I2(usize),
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(r) | CoxeterType::B(r) => r,
            CoxeterType::I2(_) => 2,
        }
    }

    pub fn order(self) -> usize {
        match self {
            CoxeterType::A(r) => (1..=r + 1).product(),
            CoxeterType::B(n) => (1..=n).product::<usize>() << n,
            CoxeterType::I2(m) => 2 * m,
        }
    }

    /// The symmetric group `S_n`.
    pub fn symmetric(n: usize) -> Self {
        CoxeterType::A(n.saturating_sub(1))
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(r) => write!(f, "A{r}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Config(format!("unsupported group descriptor {s:?}"));
        if let Some(rest) = s.strip_prefix("I2(") {
            let m: usize = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if m < 2 {
                return Err(bad());
            }
            return Ok(CoxeterType::I2(m));
        }
        let (head, num) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let r: usize = num.parse().map_err(|_| bad())?;
        match head {
            "A" => Ok(CoxeterType::A(r)),
            "B" if r >= 1 => Ok(CoxeterType::B(r)),
            _ => Err(bad()),
        }
    }
}

/// Index of an element in its group's canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Element(pub usize);

impl Element {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite Coxeter group realized as permutations of a point set, with
/// all elements tabulated in canonical order (length, then the
/// lexicographic order of the realization).
#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    ctype: CoxeterType,
    rank: usize,
    perms: Vec<Vec<u16>>,
    index: HashMap<Vec<u16>, usize>,
    length: Vec<usize>,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    words: Vec<Vec<usize>>,
}

fn generator_perms(t: CoxeterType) -> (usize, Vec<Vec<u16>>) {
    match t {
        CoxeterType::A(r) => {
            let n = r + 1;
            let gens = (1..=r)
                .map(|s| {
                    let mut p: Vec<u16> = (0..n as u16).collect();
                    p.swap(s - 1, s);
                    p
                })
                .collect();
            (n, gens)
        }
        CoxeterType::B(n) => {
            // point i-1 is +i, point n+i-1 is -i
            let gens = (1..=n)
                .map(|s| {
                    let mut p: Vec<u16> = (0..2 * n as u16).collect();
                    if s < n {
                        p.swap(s - 1, s);
                        p.swap(n + s - 1, n + s);
                    } else {
                        p.swap(n - 1, 2 * n - 1);
                    }
                    p
                })
                .collect();
            (2 * n, gens)
        }
        CoxeterType::I2(m) => {
            let k = 2 * m;
            let refl = |c: usize| (0..k).map(|x| ((c + k - x) % k) as u16).collect::<Vec<u16>>();
            (k, vec![refl(0), refl(2)])
        }
    }
}

fn compose(p: &[u16], q: &[u16]) -> Vec<u16> {
    // (p ∘ q)(x) = p(q(x))
    q.iter().map(|&x| p[x as usize]).collect()
}

impl CoxeterGroup {
    pub fn new(ctype: CoxeterType) -> Result<Self> {
        if ctype.order() > MAX_GROUP_ORDER {
            return Err(Error::Config(format!(
                "{ctype} has {} elements, above the limit {MAX_GROUP_ORDER}",
                ctype.order()
            )));
        }
        let rank = ctype.rank();
        let (npoints, gens) = generator_perms(ctype);
        // breadth-first search from the identity under right multiplication
        let id: Vec<u16> = (0..npoints as u16).collect();
        let mut perms = vec![id.clone()];
        let mut dist = vec![0usize];
        let mut seen: HashMap<Vec<u16>, usize> = HashMap::from([(id, 0)]);
        let mut head = 0;
        while head < perms.len() {
            let p = perms[head].clone();
            for g in &gens {
                let q = compose(&p, g);
                if !seen.contains_key(&q) {
                    seen.insert(q.clone(), perms.len());
                    perms.push(q);
                    dist.push(dist[head] + 1);
                }
            }
            head += 1;
        }
        debug_assert_eq!(perms.len(), ctype.order());
        let lookup = |p: &Vec<u16>| seen[p];
        let right_bfs: Vec<Vec<usize>> =
            perms.iter().map(|p| gens.iter().map(|g| lookup(&compose(p, g))).collect()).collect();
        let left_bfs: Vec<Vec<usize>> =
            perms.iter().map(|p| gens.iter().map(|g| lookup(&compose(g, p))).collect()).collect();

        // lexicographically smallest reduced words, built along increasing length
        let mut by_len: Vec<usize> = (0..perms.len()).collect();
        by_len.sort_by_key(|&i| dist[i]);
        let mut words_bfs: Vec<Vec<usize>> = vec![Vec::new(); perms.len()];
        for &w in &by_len {
            if dist[w] == 0 {
                continue;
            }
            let s = (0..rank).find(|&s| dist[left_bfs[w][s]] < dist[w]).expect("non-identity has a left descent");
            let mut word = vec![s + 1];
            word.extend_from_slice(&words_bfs[left_bfs[w][s]]);
            words_bfs[w] = word;
        }

        let key = |i: usize| -> Vec<i64> {
            match ctype {
                CoxeterType::A(_) => perms[i].iter().map(|&x| x as i64 + 1).collect(),
                CoxeterType::B(n) => signed_one_line(&perms[i], n),
                CoxeterType::I2(_) => words_bfs[i].iter().map(|&s| s as i64).collect(),
            }
        };
        let mut order: Vec<usize> = (0..perms.len()).collect();
        order.sort_by_cached_key(|&i| (dist[i], key(i)));
        let mut new_index = vec![0; perms.len()];
        for (k, &i) in order.iter().enumerate() {
            new_index[i] = k;
        }
        let remap = |table: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            order.iter().map(|&i| table[i].iter().map(|&j| new_index[j]).collect()).collect()
        };
        let right = remap(&right_bfs);
        let left = remap(&left_bfs);
        let perms: Vec<Vec<u16>> = order.iter().map(|&i| perms[i].clone()).collect();
        let length: Vec<usize> = order.iter().map(|&i| dist[i]).collect();
        let words: Vec<Vec<usize>> = order.iter().map(|&i| words_bfs[i].clone()).collect();
        let index: HashMap<Vec<u16>, usize> = perms.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
        let inverse = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0u16; p.len()];
                for (x, &y) in p.iter().enumerate() {
                    inv[y as usize] = x as u16;
                }
                index[&inv]
            })
            .collect();
        Ok(CoxeterGroup { ctype, rank, perms, index, length, right, left, inverse, words })
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    /// Generator indices `1..=rank`.
    pub fn generators(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank
    }

    pub fn all_generators(&self) -> DescentSet {
        DescentSet::full(self.rank)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(Element)
    }

    pub fn identity(&self) -> Element {
        Element(0)
    }

    pub fn longest(&self) -> Element {
        Element(self.order() - 1)
    }

    pub fn length(&self, w: Element) -> usize {
        self.length[w.0]
    }

    /// `ws`.
    pub fn right_mul(&self, w: Element, s: usize) -> Element {
        Element(self.right[w.0][s - 1])
    }

    /// `sw`.
    pub fn left_mul(&self, w: Element, s: usize) -> Element {
        Element(self.left[w.0][s - 1])
    }

    pub fn inverse(&self, w: Element) -> Element {
        Element(self.inverse[w.0])
    }

    /// Group product `uv`.
    pub fn mul(&self, u: Element, v: Element) -> Element {
        self.apply_word(u, &self.words[v.0])
    }

    pub fn apply_word(&self, w: Element, word: &[usize]) -> Element {
        word.iter().fold(w, |acc, &s| self.right_mul(acc, s))
    }

    pub fn from_word(&self, word: &[usize]) -> Element {
        self.apply_word(self.identity(), word)
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self, w: Element) -> &[usize] {
        &self.words[w.0]
    }

    /// Every reduced word, in lexicographic order.
    pub fn all_reduced_words(&self, w: Element) -> Vec<Vec<usize>> {
        if self.length(w) == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for s in self.generators() {
            let u = self.left_mul(w, s);
            if self.length(u) < self.length(w) {
                for tail in self.all_reduced_words(u) {
                    let mut word = vec![s];
                    word.extend(tail);
                    out.push(word);
                }
            }
        }
        out
    }

    /// Right descents `{s : ℓ(ws) < ℓ(w)}`.
    pub fn descents(&self, w: Element) -> DescentSet {
        DescentSet::from_elems(self.generators().filter(|&s| self.length(self.right_mul(w, s)) < self.length(w)))
    }

    /// Inverse descents (recoils) `Des(w⁻¹)`.
    pub fn recoils(&self, w: Element) -> DescentSet {
        self.descents(self.inverse(w))
    }

    /// Descent test read off the realization, independent of the length
    /// table.
    pub fn is_descent_by_realization(&self, w: Element, s: usize) -> bool {
        let p = &self.perms[w.0];
        match self.ctype {
            CoxeterType::A(_) => p[s - 1] > p[s],
            CoxeterType::B(n) => {
                let v = signed_one_line(p, n);
                if s < n {
                    v[s - 1] > v[s]
                } else {
                    v[n - 1] < 0
                }
            }
            CoxeterType::I2(m) => {
                // below the top length the reduced word is unique
                let word = &self.words[w.0];
                word.len() == m || word.last() == Some(&s)
            }
        }
    }

    pub fn act_s(&self, w: Element, s: usize) -> Element {
        self.right_mul(w, s)
    }

    /// Sorting operator: `w` if `s` is a descent of `w`, else `ws`.
    pub fn act_pi(&self, w: Element, s: usize) -> Element {
        let ws = self.right_mul(w, s);
        if self.length(ws) < self.length(w) {
            w
        } else {
            ws
        }
    }

    /// Anti-sorting operator: `w` if `s` is not a descent of `w`, else `ws`.
    pub fn act_pibar(&self, w: Element, s: usize) -> Element {
        if self.is_descent_by_realization(w, s) {
            self.right_mul(w, s)
        } else {
            w
        }
    }

    pub fn act_pi_along(&self, w: Element, word: &[usize]) -> Element {
        word.iter().fold(w, |acc, &s| self.act_pi(acc, s))
    }

    /// Applies `π` along a reduced word of `τ`.
    pub fn act_pi_word(&self, w: Element, tau: Element) -> Element {
        self.act_pi_along(w, self.reduced_word(tau))
    }

    /// Minimal coset representatives `{μ : iDes(μ) ∩ I = ∅}`.
    pub fn recoil_class(&self, i: DescentSet) -> Vec<Element> {
        self.elements().filter(|&w| self.recoils(w).is_disjoint(i)).collect()
    }

    /// Elements of the parabolic subgroup `W_I`.
    pub fn parabolic(&self, i: DescentSet) -> Vec<Element> {
        self.elements().filter(|&w| self.reduced_word(w).iter().all(|&s| i.contains(s))).collect()
    }

    pub fn descent_class_sizes(&self) -> BTreeMap<DescentSet, usize> {
        let mut out: BTreeMap<DescentSet, usize> = DescentSet::all(self.rank).into_iter().map(|d| (d, 0)).collect();
        for w in self.elements() {
            *out.get_mut(&self.descents(w)).expect("descents lie in S") += 1;
        }
        out
    }

    /// Right weak order: `u ≤ v` iff `ℓ(u⁻¹v) = ℓ(v) − ℓ(u)`.
    pub fn weak_right_leq(&self, u: Element, v: Element) -> bool {
        let d = self.mul(self.inverse(u), v);
        self.length(u) + self.length(d) == self.length(v)
    }

    /// One-line (type A) or signed one-line (type B) notation; the point
    /// permutation for dihedral groups.
    pub fn one_line(&self, w: Element) -> Vec<i64> {
        let p = &self.perms[w.0];
        match self.ctype {
            CoxeterType::A(_) | CoxeterType::I2(_) => p.iter().map(|&x| x as i64 + 1).collect(),
            CoxeterType::B(n) => signed_one_line(p, n),
        }
    }

    pub fn format(&self, w: Element) -> String {
        match self.ctype {
            CoxeterType::A(r) => {
                let v = self.one_line(w);
                if r < 9 {
                    v.iter().map(|x| x.to_string()).collect()
                } else {
                    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                }
            }
            CoxeterType::B(_) => self.one_line(w).iter().map(|&x| format!("{x:+}")).collect(),
            CoxeterType::I2(_) => {
                let word = self.reduced_word(w);
                if word.is_empty() {
                    "e".into()
                } else {
                    word.iter().map(|s| s.to_string()).collect()
                }
            }
        }
    }

    pub fn parse_element(&self, s: &str) -> Result<Element> {
        let s = s.trim();
        let bad = || Error::Parse(format!("{s:?} is not an element of {}", self.ctype));
        match self.ctype {
            CoxeterType::A(r) => {
                let n = r + 1;
                let vals: Vec<usize> = if s.contains(',') {
                    s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
                } else {
                    s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
                };
                if vals.len() != n || vals.iter().any(|&v| v == 0 || v > n) {
                    return Err(bad());
                }
                let p: Vec<u16> = vals.iter().map(|&v| (v - 1) as u16).collect();
                self.index.get(&p).map(|&i| Element(i)).ok_or_else(bad)
            }
            CoxeterType::B(n) => {
                let mut vals = Vec::new();
                let mut rest = s;
                while !rest.is_empty() {
                    let sign = match rest.as_bytes()[0] {
                        b'+' => 1i64,
                        b'-' => -1,
                        _ => return Err(bad()),
                    };
                    rest = &rest[1..];
                    let end = rest.find(['+', '-']).unwrap_or(rest.len());
                    let v: i64 = rest[..end].parse().map_err(|_| bad())?;
                    vals.push(sign * v);
                    rest = &rest[end..];
                }
                if vals.len() != n {
                    return Err(bad());
                }
                let mut p = vec![0u16; 2 * n];
                let point = |v: i64| if v > 0 { (v - 1) as usize } else { n + (-v - 1) as usize };
                for (i, &v) in vals.iter().enumerate() {
                    if v == 0 || v.unsigned_abs() as usize > n {
                        return Err(bad());
                    }
                    p[i] = point(v) as u16;
                    p[n + i] = point(-v) as u16;
                }
                self.index.get(&p).map(|&i| Element(i)).ok_or_else(bad)
            }
            CoxeterType::I2(_) => {
                if s == "e" || s.is_empty() {
                    return Ok(self.identity());
                }
                let word: Vec<usize> = s
                    .chars()
                    .map(|c| match c {
                        '1' => Ok(1),
                        '2' => Ok(2),
                        _ => Err(bad()),
                    })
                    .collect::<Result<_>>()?;
                Ok(self.from_word(&word))
            }
        }
    }
}

fn signed_one_line(p: &[u16], n: usize) -> Vec<i64> {
    p[..n].iter().map(|&x| if (x as usize) < n { x as i64 + 1 } else { -((x as usize - n) as i64 + 1) }).collect()
}
