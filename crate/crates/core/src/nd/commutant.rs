use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{commutant, OperatorAlgebra, SparseMatrix, SparseVec, SubspaceBasis};
use crate::nd::function::{nd_initial_enumerate, ndf_enumerate, ndpf_enumerate, NdFunction};
use crate::scalar::Scalar;

/// Which space of words and which monoid of nondecreasing maps acting on
/// their values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CommutantVariant {
    /// All of `A^n` under `NDF_A`.
    Words { alphabet: usize },
    /// Parking functions under `NDPF_n`.
    Parking,
    /// Initial functions under nondecreasing initial functions.
    Initial,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutantReport {
    pub n: usize,
    pub variant: CommutantVariant,
    pub words: usize,
    pub end_e_dim: usize,
    pub commutant_dim: usize,
    /// Dimension of the algebra generated by `s_i, π_i` on the same space.
    pub s_pi_dim: usize,
    pub s_pi_in_commutant: bool,
}

fn all_words(n: usize, a: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| (1..=a).map(move |x| [w.clone(), vec![x]].concat())).collect();
    }
    out
}

fn is_parking(w: &[usize]) -> bool {
    let mut s = w.to_vec();
    s.sort_unstable();
    s.iter().enumerate().all(|(i, &v)| v <= i + 1)
}

fn is_initial(w: &[usize]) -> bool {
    let max = w.iter().copied().max().unwrap_or(0);
    (1..=max).all(|v| w.contains(&v))
}

fn evaluation(w: &[usize], a: usize) -> Vec<usize> {
    let mut e = vec![0; a];
    for &x in w {
        e[x - 1] += 1;
    }
    e
}

pub fn evaluation_commutant<F: Scalar>(n: usize, variant: CommutantVariant) -> Result<CommutantReport> {
    let (a, words, monoid): (usize, Vec<Vec<usize>>, Vec<NdFunction>) = match variant {
        CommutantVariant::Words { alphabet } => {
            if alphabet < n {
                return Err(Error::Precondition(format!("alphabet of size {alphabet} is smaller than n = {n}")));
            }
            (alphabet, all_words(n, alphabet), ndf_enumerate(alphabet))
        }
        CommutantVariant::Parking => {
            (n, all_words(n, n).into_iter().filter(|w| is_parking(w)).collect(), ndpf_enumerate(n))
        }
        CommutantVariant::Initial => {
            (n, all_words(n, n).into_iter().filter(|w| is_initial(w)).collect(), nd_initial_enumerate(n))
        }
    };
    let index: HashMap<Vec<usize>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let d = words.len();
    let on_values = |f: &NdFunction| -> Result<SparseMatrix<F>> {
        let images = words
            .iter()
            .map(|w| {
                let img: Vec<usize> = w.iter().map(|&x| f.at(x)).collect();
                index.get(&img).copied().ok_or_else(|| Error::Precondition(format!("{f} leaves the word set")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::from_map(d, |i| Some(images[i])))
    };
    let gens = monoid.iter().map(on_values).collect::<Result<Vec<_>>>()?;
    let evals: Vec<Vec<usize>> = words.iter().map(|w| evaluation(w, a)).collect();
    let mut ambient = SubspaceBasis::new(d * d);
    for u in 0..d {
        for v in 0..d {
            if evals[u] == evals[v] {
                ambient.span_insert(&SparseVec::unit(d * d, u * d + v))?;
            }
        }
    }
    let comm = commutant(d, &gens, &ambient)?;
    let position_op = |i: usize, sort: bool| {
        SparseMatrix::<F>::from_map(d, |k| {
            let w = &words[k];
            let mut x = w.clone();
            if !sort || w[i - 1] < w[i] {
                x.swap(i - 1, i);
            }
            Some(index[&x])
        })
    };
    let s_pi: Vec<SparseMatrix<F>> = (1..n).flat_map(|i| [position_op(i, false), position_op(i, true)]).collect();
    let algebra = OperatorAlgebra::closure(d, &s_pi, true)?;
    let s_pi_in_commutant = algebra.basis().iter().all(|b| comm.contains(&b.flatten()));
    Ok(CommutantReport {
        n,
        variant,
        words: d,
        end_e_dim: ambient.dim(),
        commutant_dim: comm.dim(),
        s_pi_dim: algebra.dim(),
        s_pi_in_commutant,
    })
}
