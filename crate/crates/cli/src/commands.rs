use std::fmt;

use heckegroup::coxeter::{CoxeterGroup, CoxeterType, DescentSet};
use heckegroup::hecke::{
    disjoint_descent_pair_count, multiplication_table, symmetric_pair_count, variant_monoid, HeckeGroupAlgebra,
    MonoidVariant, RelationCheck,
};
use heckegroup::linalg::{monoid_closure, SubspaceBasis, Transformation};
use heckegroup::nd::{
    binomial, border_delta, catalan, delta_sequence_exact, evaluation_commutant, exterior_rep_rank, idempotent_report,
    incidence_dimension, ndf_enumerate, ndfa_cartan, ndpf_enumerate, ndpfa_structure, quotient_chain, simple_dims,
    CommutantVariant,
};
use heckegroup::tower::{g_basis_report, projective_characters, Tower, TowerKind};
use heckegroup::{Rational, Scalar};
use serde_json::{json, Value};

use crate::report::{Check, Outcome, Table};

type H = HeckeGroupAlgebra<Rational>;

#[derive(Debug)]
pub enum Failure {
    /// Refused or malformed request; exit code 2.
    Usage(String),
    /// The library reported an error; exit code 3.
    Compute(heckegroup::Error),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => f.write_str(m),
            Failure::Compute(e) => write!(f, "{e}"),
        }
    }
}

impl From<heckegroup::Error> for Failure {
    fn from(e: heckegroup::Error) -> Self {
        Failure::Compute(e)
    }
}

pub type Run = Result<Outcome, Failure>;

/// A JSON number when it fits in 64 bits, a decimal string otherwise.
fn big(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v))
}

/// Refuses work beyond a desk-scale bound unless forced.
pub fn guard(what: &str, value: usize, limit: usize, force: bool) -> Result<(), Failure> {
    if value > limit && !force {
        Err(Failure::Usage(format!(
            "{what} = {value} exceeds the desk-scale limit {limit}; pass --force to run anyway"
        )))
    } else {
        Ok(())
    }
}

fn group_of(t: CoxeterType) -> Result<CoxeterGroup, Failure> {
    Ok(CoxeterGroup::new(t)?)
}

fn relation_checks(prefix: &str, rs: Vec<RelationCheck>) -> Vec<Check> {
    rs.into_iter().map(|r| Check::new(format!("{prefix}: {}", r.name), r.holds)).collect()
}

fn labels(rank: usize) -> Vec<String> {
    DescentSet::all(rank).iter().map(ToString::to_string).collect()
}

pub fn dims(t: CoxeterType, count_only: bool, force: bool) -> Run {
    let h = match t {
        CoxeterType::A(r) => {
            guard("n", r + 1, 20, force)?;
            symmetric_pair_count(r + 1)?
        }
        _ => {
            guard("|W|", t.order(), 5040, force)?;
            disjoint_descent_pair_count(&group_of(t)?)
        }
    };
    let mut result = json!({"group": t.to_string(), "order": t.order(), "h": big(h)});
    let mut checks = vec![Check::new("pair count is positive", h > 0)];
    if !count_only {
        guard("|W| for closure", t.order(), 24, force)?;
        let a = H::of_type(t)?;
        let closure = a.closure()?;
        let sandwich = a.sandwich_space()?;
        result["closure"] = json!(closure.dim());
        result["sandwich"] = json!(sandwich.dim());
        checks.push(Check::new("closure = pair count", closure.dim() as u128 == h));
        checks.push(Check::new("sandwich = pair count", sandwich.dim() as u128 == h));
    }
    Ok(Outcome::new(result, checks))
}

pub fn table(t: CoxeterType) -> Run {
    let a = H::of_type(t)?;
    if a.rank() != 1 {
        return Err(Failure::Usage(format!("table needs a rank-one group, got {t}")));
    }
    let names = ["1", "s1", "pi1"];
    let ops = [a.identity(), a.s(1).clone(), a.pi(1).clone()];
    let table = multiplication_table(&names, &ops);
    let pibar_ok = a.pibar(1) == &a.identity().add(a.s(1)).sub(a.pi(1));
    let result = json!({"group": t.to_string(), "names": names, "table": table});
    let checks = vec![
        Check::new("products lie in span{1, s1, pi1}", table.is_some()),
        Check::new("pibar1 = 1 + s1 - pi1", pibar_ok),
    ];
    let out = Outcome::new(result, checks);
    Ok(match table {
        Some(rows) => {
            let labels: Vec<String> = names.iter().map(|s| s.to_string()).collect();
            out.with_table(Table { row_labels: labels.clone(), col_labels: labels, rows })
        }
        None => out,
    })
}

pub fn basis_b(t: CoxeterType, force: bool) -> Run {
    guard("|W|", t.order(), 24, force)?;
    let a = H::of_type(t)?;
    let g = a.group();
    let b = a.basis_b();
    let failures: Vec<String> = b
        .iter()
        .filter(|e| !a.check_triangularity(e))
        .map(|e| format!("{} pi_{}", g.format(e.sigma), g.format(e.tau)))
        .collect();
    let flat: Vec<_> = b.iter().map(|e| e.op.flatten()).collect();
    let rank = SubspaceBasis::spanned_by(a.n() * a.n(), &flat)?.dim();
    let h = disjoint_descent_pair_count(g);
    let result = json!({
        "group": t.to_string(),
        "size": b.len(),
        "rank": rank,
        "h": big(h),
        "triangularity_failures": failures,
    });
    let checks = vec![
        Check::new("size = pair count", b.len() as u128 == h),
        Check::new("triangularity for every pair", failures.is_empty()),
        Check::new("linearly independent", rank == b.len()),
    ];
    Ok(Outcome::new(result, checks))
}

pub fn basis_vsigma(t: CoxeterType, force: bool) -> Run {
    guard("|W|", t.order(), 120, force)?;
    let a = H::of_type(t)?;
    let g = a.group();
    let vectors: Vec<Value> =
        g.elements().map(|w| json!({"sigma": g.format(w), "v": a.format_vector(&a.v_sigma(w))})).collect();
    let v_rank = SubspaceBasis::spanned_by(a.n(), a.v_basis_matrix().rows())?.dim();
    let mut modules = Vec::new();
    let mut dims_ok = true;
    let mut spans_ok = true;
    let mut total = 0;
    for i in DescentSet::all(a.rank()) {
        let p = a.projective(i)?;
        let s = a.simple(i)?;
        let expected = g.order() / g.parabolic(i).len();
        dims_ok &= p.span.dim() == expected;
        spans_ok &= SubspaceBasis::spanned_by(a.n(), &p.vsigma_basis)? == p.span;
        total += s.module.dim();
        modules.push(
            json!({"I": i.to_string(), "dim_p": p.span.dim(), "expected_dim_p": expected, "dim_s": s.module.dim()}),
        );
    }
    let result = json!({"group": t.to_string(), "vectors": vectors, "modules": modules, "sum_dim_s": total});
    let checks = vec![
        Check::new("v basis spans kW", v_rank == a.n()),
        Check::new("dim P_I = |W| / |W_I|", dims_ok),
        Check::new("v_sigma with matching recoils span P_I", spans_ok),
        Check::new("sum of dim S_I = |W|", total == a.n()),
    ];
    Ok(Outcome::new(result, checks))
}

pub fn cartan_group(t: CoxeterType, force: bool) -> Run {
    guard("|W|", t.order(), 24, force)?;
    let a = H::of_type(t)?;
    let r = a.rank();
    let subsets = DescentSet::all(r);
    let c = a.cartan_matrix()?;
    let incidence =
        subsets.iter().zip(&c).all(|(i, row)| subsets.iter().zip(row).all(|(j, &v)| v == usize::from(j.is_subset(*i))));
    let morita = a.morita_dimension()?;
    let pairs = 3usize.pow(r as u32);
    let mut modules = Vec::new();
    for &i in &subsets {
        modules.push(
            json!({"I": i.to_string(), "dim_p": a.projective(i)?.span.dim(), "dim_s": a.simple(i)?.module.dim()}),
        );
    }
    let names = labels(r);
    let result = json!({
        "group": t.to_string(),
        "labels": names,
        "cartan": c,
        "morita_dimension": morita,
        "subset_pairs": pairs,
        "modules": modules,
    });
    let checks = vec![
        Check::new("Hom(P_I, P_J) = 1 iff J ⊆ I", incidence),
        Check::new("dim e·HW·e = #{I ⊆ J}", morita == pairs),
    ];
    Ok(Outcome::new(result, checks).with_table(Table::from_ints(&names, &c)))
}

pub fn cartan_ndfa(n: usize, force: bool) -> Run {
    guard("n", n, 6, force)?;
    let c = ndfa_cartan::<Rational>(n)?;
    let bidiagonal = (1..=n).all(|k| (1..=n).all(|l| c[k - 1][l - 1] == usize::from(k == l || k == l + 1)));
    let dims = simple_dims(n)?;
    let expected: Vec<usize> = (1..=n).map(|k| binomial(n - 1, k - 1) as usize).collect();
    let square_zero = (2..=n).all(|k| border_delta::<Rational>(n, k).mul(&border_delta(n, k - 1)).is_zero());
    let exact = delta_sequence_exact::<Rational>(n)?;
    let names: Vec<String> = (1..=n).map(|k| k.to_string()).collect();
    let result = json!({"n": n, "labels": names, "cartan": c, "simple_dims": dims});
    let checks = vec![
        Check::new("Cartan is 1 iff k in {l, l+1}", bidiagonal),
        Check::new("dim S^k = C(n-1, k-1)", dims == expected),
        Check::new("delta^2 = 0", square_zero),
        Check::new("delta complex is exact", exact),
    ];
    Ok(Outcome::new(result, checks).with_table(Table::from_ints(&names, &c)))
}

pub fn cartan_ndpfa(n: usize, force: bool) -> Run {
    guard("n", n, 5, force)?;
    let rep = ndpfa_structure::<Rational>(n, n <= 4)?;
    let names = labels(n.saturating_sub(1));
    let mut checks = vec![
        Check::new("dim = Catalan", rep.dim as u128 == rep.catalan),
        Check::new("incidence dimension = Catalan", rep.incidence_dim as u128 == rep.catalan),
        Check::new("2^(n-1) one-dimensional simples", rep.semisimple_quotient_dim == 1 << (n - 1)),
        Check::new("semisimple quotient is commutative", rep.quotient_commutative),
        Check::new("characters consistent", rep.characters_consistent),
        Check::new("Cartan matches the Grassmann order", rep.cartan_matches_grassmann),
        Check::new("Cartan by traces = Cartan by Hom", rep.cartan == rep.cartan_by_hom),
    ];
    if let Some(k) = &rep.kernel {
        checks.push(Check::new("0-Hecke map is well defined", k.well_defined));
        checks.push(Check::new("kernel has the fibre dimension", k.kernel_dim == k.expected_kernel_dim));
        checks.push(Check::new("kernel lies in the radical", k.contained_in_radical));
    }
    let table = Table::from_ints(&names, &rep.cartan);
    let mut result = serde_json::to_value(&rep).expect("serializable");
    result["labels"] = json!(names);
    if let Some(obj) = result.as_object_mut() {
        obj.remove("pass");
    }
    Ok(Outcome::new(result, checks).with_table(table))
}

pub fn verify_relations(n: usize, qs: &[Rational], force: bool) -> Run {
    guard("n", n, 5, force)?;
    let a = H::symmetric(n)?;
    let mut checks = relation_checks("pack", a.relation_pack());
    checks.extend(relation_checks("rewrite", a.rewrite_relations()));
    let with_q = n <= 4 || force;
    if with_q {
        for q in qs {
            checks.extend(relation_checks("hecke", a.hecke_q_relations(q)));
        }
    }
    if checks.is_empty() {
        checks.push(Check::new("no generators, nothing to check", true));
    }
    let qs: Vec<String> = if with_q { qs.iter().map(|q| q.to_exact_string()).collect() } else { Vec::new() };
    let result = json!({"n": n, "relations": checks.len(), "q": qs});
    Ok(Outcome::new(result, checks))
}

pub fn verify_sandwich(n: usize, force: bool) -> Run {
    guard("n", n, 4, force)?;
    let a = H::symmetric(n)?;
    let closure = a.closure()?;
    let sandwich = a.sandwich_space()?;
    let h = symmetric_pair_count(n)?;
    let result = json!({"n": n, "closure": closure.dim(), "sandwich": sandwich.dim(), "h": big(h)});
    let checks = vec![
        Check::new("sandwich space = closure span", &sandwich == closure.span()),
        Check::new("dimension = pair count", sandwich.dim() as u128 == h),
    ];
    Ok(Outcome::new(result, checks))
}

pub fn verify_tl(n: usize, force: bool) -> Run {
    guard("n", n, 5, force)?;
    let q = quotient_chain::<Rational>(n)?;
    let tl = &q.temperley_lieb;
    let mut checks = vec![
        Check::new("closure of {s, pi} = dim NDFA_n", q.dim_s_pi as u128 == q.ndfa_dim),
        Check::new("closure of {pi} = Catalan", q.dim_pi as u128 == q.catalan),
        Check::new("closure of {pi - pibar} = Catalan", tl.dim as u128 == tl.catalan),
    ];
    checks.extend(relation_checks("TL", tl.relations.clone()));
    let mut result = serde_json::to_value(&q).expect("serializable");
    if let Some(obj) = result.as_object_mut() {
        obj.remove("pass");
    }
    Ok(Outcome::new(result, checks))
}

pub fn verify_idempotents(n: usize, force: bool) -> Run {
    guard("n", n, 6, force)?;
    let mut rows = Vec::new();
    let mut checks = Vec::new();
    for k in 1..=n {
        let r = idempotent_report::<Rational>(n, k)?;
        checks.push(Check::new(format!("e_{n}^{k} idempotent"), r.idempotent));
        checks.push(Check::new(format!("e_{n}^{k} pi rule"), r.pi_rule));
        checks.push(Check::new(format!("dim e_{n}^{k} NDFA = C({n},{k})"), r.principal_dim as u128 == r.expected_dim));
        rows.push(r);
    }
    if checks.is_empty() {
        checks.push(Check::new("no idempotents at n = 0", true));
    }
    Ok(Outcome::new(json!({"n": n, "idempotents": rows}), checks))
}

pub fn monoid(which: MonoidVariant, n: usize, force: bool) -> Run {
    guard("n", n, 4, force)?;
    let g = group_of(CoxeterType::symmetric(n))?;
    let all = variant_monoid(&g, which, None)?;
    let pis: Vec<Transformation> =
        g.generators().map(|s| Transformation(g.elements().map(|w| g.act_pi(w, s).0 as u32).collect())).collect();
    let zero_hecke = monoid_closure(&pis, Transformation::identity(g.order()), |a, b| a.then(b), None)?;
    let contains = zero_hecke.iter().all(|x| all.contains(x));
    let mut checks = vec![Check::new("contains the 0-Hecke monoid", zero_hecke.len() == g.order() && contains)];
    if which == MonoidVariant::SPi {
        let perms = all.iter().filter(|t| is_bijection(t)).count();
        checks.push(Check::new("invertible elements form W", perms == g.order()));
    }
    let result = json!({"which": which.to_string(), "n": n, "size": all.len()});
    Ok(Outcome::new(result, checks))
}

fn is_bijection(t: &Transformation) -> bool {
    let mut seen = vec![false; t.0.len()];
    t.0.iter().all(|&x| !std::mem::replace(&mut seen[x as usize], true))
}

pub fn count(ndf: Option<usize>, ndpf: Option<usize>, force: bool) -> Run {
    if ndf.is_none() && ndpf.is_none() {
        return Err(Failure::Usage("count needs --ndf or --ndpf".into()));
    }
    let mut result = json!({});
    let mut checks = Vec::new();
    if let Some(n) = ndf {
        guard("ndf n", n, 9, force)?;
        let size = ndf_enumerate(n).len();
        let expected = if n == 0 { 1 } else { binomial(2 * n - 1, n - 1) };
        result["ndf"] = json!({"n": n, "size": size, "binomial": big(expected)});
        checks.push(Check::new("|NDF_n| = C(2n-1, n-1)", size as u128 == expected));
        if n <= 5 || force {
            let r = exterior_rep_rank::<Rational>(n)?;
            result["ndf"]["exterior_rank"] = json!(r);
            checks.push(Check::new("exterior representation is faithful", r as u128 == expected));
        }
    }
    if let Some(n) = ndpf {
        guard("ndpf n", n, 11, force)?;
        let size = ndpf_enumerate(n).len();
        let c = catalan(n);
        let inc = incidence_dimension(n);
        result["ndpf"] = json!({"n": n, "size": size, "catalan": big(c), "incidence_dim": inc});
        checks.push(Check::new("|NDPF_n| = Catalan", size as u128 == c));
        checks.push(Check::new("incidence dimension = Catalan", inc as u128 == c));
    }
    Ok(Outcome::new(result, checks))
}

pub fn tower(kind: TowerKind, pairs: &[(usize, usize)], force: bool) -> Run {
    let max = pairs.iter().map(|(m, n)| m + n).max().unwrap_or(0);
    guard("m + n", max, 4, force)?;
    if pairs.iter().any(|&(m, n)| m == 0 || n == 0) {
        return Err(Failure::Usage("m and n must be positive".into()));
    }
    let t = Tower::<Rational>::new(kind, max)?;
    let mut reports = Vec::new();
    let mut checks = Vec::new();
    for &(m, n) in pairs {
        let certs = t.certificates(m, n)?;
        let asserted = certs.iter().filter(|c| c.asserted).count();
        let passed = certs.iter().filter(|c| c.asserted && c.pass == Some(true)).count();
        for c in certs.iter().filter(|c| c.asserted) {
            checks.push(Check::new(
                format!(
                    "{} ({m},{n}) {}: {}",
                    kind,
                    serde_json::to_value(c.operation).expect("op").as_str().unwrap_or(""),
                    c.input
                ),
                c.pass == Some(true),
            ));
        }
        reports.push(json!({"m": m, "n": n, "asserted": asserted, "passed": passed, "certificates": certs}));
    }
    if checks.is_empty() {
        checks.push(Check::new("nothing asserted", true));
    }
    Ok(Outcome::new(json!({"tower": kind.to_string(), "pairs": reports}), checks))
}

pub fn grothendieck_g(n: usize, force: bool) -> Run {
    guard("n", n, 5, force)?;
    let rep = g_basis_report::<Rational>(n)?;
    let table = Table::from_ints(&rep.labels, &rep.transition);
    let result = json!({"n": n, "labels": rep.labels, "transition": rep.transition, "cartan": rep.cartan});
    Ok(Outcome::new(result, vec![Check::new("R-to-G transition = NDPFA Cartan", rep.pass)]).with_table(table))
}

pub fn grothendieck_characters(n: usize, force: bool) -> Run {
    guard("n", n, 4, force)?;
    let (rows, pass) = projective_characters::<Rational>(n)?;
    Ok(Outcome::new(json!({"n": n, "rows": rows}), vec![Check::new("P_I characters match e_K", pass)]))
}

pub fn commutant(n: usize, variant: CommutantVariant, force: bool) -> Run {
    guard("n", n, 3, force)?;
    if let CommutantVariant::Words { alphabet } = variant {
        guard("alphabet", alphabet, 3, force)?;
    }
    let rep = evaluation_commutant::<Rational>(n, variant)?;
    let h = symmetric_pair_count(n)?;
    let checks = vec![
        Check::new("commutant dimension = dim HS_n", rep.commutant_dim as u128 == h),
        Check::new("{s, pi} generate a copy of HS_n", rep.s_pi_dim as u128 == h),
        Check::new("{s, pi} lie in the commutant", rep.s_pi_in_commutant),
    ];
    let mut result = serde_json::to_value(&rep).expect("serializable");
    result["h"] = big(h);
    Ok(Outcome::new(result, checks))
}

pub fn parse_q(s: &str) -> Result<Rational, String> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: i64 = num.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
    let den: i64 = den.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
    if den == 0 {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(heckegroup::ratio(num, den))
}
