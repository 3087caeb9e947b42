use serde::Serialize;

use crate::hecke::HeckeGroupAlgebra;
use crate::linalg::SparseMatrix;
use crate::scalar::Scalar;

/// Outcome of checking one operator identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

fn check<F: Scalar>(name: String, lhs: SparseMatrix<F>, rhs: SparseMatrix<F>) -> RelationCheck {
    RelationCheck { name, holds: lhs == rhs }
}

fn product<F: Scalar>(ops: &[&SparseMatrix<F>]) -> SparseMatrix<F> {
    let mut it = ops.iter();
    let first = (*it.next().expect("nonempty product")).clone();
    it.fold(first, |acc, x| acc.mul(x))
}

fn alternating<F: Scalar>(a: &SparseMatrix<F>, b: &SparseMatrix<F>, len: usize) -> SparseMatrix<F> {
    let ops: Vec<&SparseMatrix<F>> = (0..len).map(|k| if k % 2 == 0 { a } else { b }).collect();
    product(&ops)
}

impl<F: Scalar> HeckeGroupAlgebra<F> {
    /// Order of `s_i s_j` in the group.
    pub fn coxeter_exponent(&self, i: usize, j: usize) -> usize {
        let g = self.group();
        let mut w = g.identity();
        for k in 1.. {
            w = g.right_mul(g.right_mul(w, i), j);
            if w == g.identity() {
                return k;
            }
        }
        unreachable!()
    }

    /// Quadratic, braid and mixed relations among `s_i`, `π_i`, `π̄_i`.
    pub fn relation_pack(&self) -> Vec<RelationCheck> {
        let id = self.identity();
        let mut out = Vec::new();
        for i in self.group().generators() {
            let (s, p, pb) = (self.s(i), self.pi(i), self.pibar(i));
            out.push(check(format!("s{i}^2 = 1"), s.mul(s), id.clone()));
            out.push(check(format!("pi{i}^2 = pi{i}"), p.mul(p), p.clone()));
            out.push(check(format!("pibar{i}^2 = pibar{i}"), pb.mul(pb), pb.clone()));
            out.push(check(format!("s{i} pi{i} = pi{i}"), s.mul(p), p.clone()));
            out.push(check(format!("s{i} pibar{i} = pibar{i}"), s.mul(pb), pb.clone()));
            out.push(check(format!("pibar{i} pi{i} = pi{i}"), pb.mul(p), p.clone()));
            out.push(check(format!("pi{i} pibar{i} = pibar{i}"), p.mul(pb), pb.clone()));
            out.push(check(format!("pi{i} s{i} = pibar{i}"), p.mul(s), pb.clone()));
            out.push(check(format!("pibar{i} s{i} = pi{i}"), pb.mul(s), p.clone()));
            out.push(check(format!("pi{i} + pibar{i} = 1 + s{i}"), p.add(pb), id.add(s)));
        }
        for i in self.group().generators() {
            for j in self.group().generators().filter(|&j| j > i) {
                let m = self.coxeter_exponent(i, j);
                for (name, a, b) in [
                    ("s", self.s(i), self.s(j)),
                    ("pi", self.pi(i), self.pi(j)),
                    ("pibar", self.pibar(i), self.pibar(j)),
                ] {
                    out.push(check(
                        format!("braid {name}{i},{name}{j} (m = {m})"),
                        alternating(a, b, m),
                        alternating(b, a, m),
                    ));
                }
            }
        }
        out
    }

    /// The three straightening relations of type A, for `1 ≤ i ≤ n − 2`.
    pub fn rewrite_relations(&self) -> Vec<RelationCheck> {
        let mut out = Vec::new();
        let r = self.rank();
        for i in 1..r {
            let j = i + 1;
            let (si, sj, pi, pj) = (self.s(i), self.s(j), self.pi(i), self.pi(j));
            let pij_i = product(&[pi, pj, pi]);
            out.push(check(
                format!("pi{j} s{i} = pi{j} pi{i} + s{i} s{j} pi{i} pi{j} - pi{i} pi{j} pi{i}"),
                pj.mul(si),
                pj.mul(pi).add(&product(&[si, sj, pi, pj])).sub(&pij_i),
            ));
            out.push(check(
                format!("pi{i} s{j} = pi{i} pi{j} + s{j} s{i} pi{j} pi{i} - pi{i} pi{j} pi{i}"),
                pi.mul(sj),
                pi.mul(pj).add(&product(&[sj, si, pj, pi])).sub(&pij_i),
            ));
            out.push(check(
                format!("s{i} pi{j} s{i} = s{j} pi{i} s{j}"),
                product(&[si, pj, si]),
                product(&[sj, pi, sj]),
            ));
        }
        out
    }

    /// `T_s(q)² = (q − 1) T_s(q) + q` and the braid relations of the `T_s(q)`.
    pub fn hecke_q_relations(&self, q: &F) -> Vec<RelationCheck> {
        let id = self.identity();
        let ts: Vec<SparseMatrix<F>> = self.group().generators().map(|s| self.hecke_q_generator(s, q)).collect();
        let mut out = Vec::new();
        for (k, t) in ts.iter().enumerate() {
            out.push(check(
                format!("T{}^2 = (q-1) T{} + q at q = {}", k + 1, k + 1, q.to_exact_string()),
                t.mul(t),
                t.scaled(&(q.clone() - F::one())).add(&id.scaled(q)),
            ));
        }
        for i in 0..ts.len() {
            for j in i + 1..ts.len() {
                let m = self.coxeter_exponent(i + 1, j + 1);
                out.push(check(
                    format!("braid T{},T{} at q = {}", i + 1, j + 1, q.to_exact_string()),
                    alternating(&ts[i], &ts[j], m),
                    alternating(&ts[j], &ts[i], m),
                ));
            }
        }
        out
    }
}

/// Expresses every product of two named operators in the span of the
/// named family, rendered as signed sums such as `1 + s1 - pi1`.
pub fn multiplication_table<F: Scalar>(names: &[&str], ops: &[SparseMatrix<F>]) -> Option<Vec<Vec<String>>> {
    let flat: Vec<_> = ops.iter().map(SparseMatrix::flatten).collect();
    let mut table = Vec::new();
    for a in ops {
        let mut row = Vec::new();
        for b in ops {
            let c = crate::linalg::solve_in_basis(&flat, &[a.mul(b).flatten()]).ok()?.pop()?;
            row.push(render_combination(names, &c.to_dense()));
        }
        table.push(row);
    }
    Some(table)
}

pub fn render_combination<F: Scalar>(names: &[&str], coeffs: &[F]) -> String {
    let mut s = String::new();
    for (name, c) in names.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        let term = if abs.is_one() { name.to_string() } else { format!("{}*{name}", abs.to_exact_string()) };
        if s.is_empty() {
            s = if neg { format!("-{term}") } else { term };
        } else {
            s.push_str(if neg { " - " } else { " + " });
            s.push_str(&term);
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}
