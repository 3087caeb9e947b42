//! Acceptance suite: drives the `heckegroup` binary and prints one line per
//! criterion. Criteria listed in `EXPECTED_FAIL` are known to be false as
//! stated; they still print FAIL, and the suite only errors if they flip.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::{json, Value};

const EXPECTED_FAIL: &[usize] = &[14];

struct Run {
    report: Value,
    code: i32,
}

fn cli(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_heckegroup")).args(args).output().expect("spawn heckegroup");
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    Run { report, code: out.status.code().unwrap_or(-1) }
}

/// Collects failures for one criterion.
#[derive(Default)]
struct Verdict {
    problems: Vec<String>,
}

impl Verdict {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.problems.push(what());
        }
    }

    /// The run exited 0 and its report says pass.
    fn passes(&mut self, args: &[&str]) -> Value {
        let r = cli(args);
        let failed: Vec<String> = r.report["checks"]
            .as_array()
            .map(|cs| cs.iter().filter(|c| c["pass"] != json!(true)).map(|c| c["name"].to_string()).collect())
            .unwrap_or_default();
        self.expect(r.code == 0 && r.report["pass"] == json!(true), || {
            format!("`{}` exited {} failing {}", args.join(" "), r.code, failed.join(", "))
        });
        r.report
    }
}

/// `"a - b + c"` as a map from term to sign.
fn signed_terms(text: &str) -> BTreeMap<String, i64> {
    let mut out = BTreeMap::new();
    let mut sign = 1;
    for tok in text.split_whitespace() {
        match tok {
            "+" => sign = 1,
            "-" => sign = -1,
            t => {
                let (s, t) = t.strip_prefix('-').map_or((sign, t), |t| (-sign, t));
                *out.entry(t.to_string()).or_insert(0) += s;
            }
        }
    }
    out
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn catalan(n: u128) -> u128 {
    binom(2 * n, n) / (n + 1)
}

fn group(n: usize) -> String {
    format!("A{}", n - 1)
}

fn ac1() -> (Verdict, String) {
    let mut v = Verdict::default();
    let mut n4 = Duration::ZERO;
    for (n, h) in [(1, 1), (2, 3), (3, 19), (4, 211)] {
        let g = group(n);
        let start = Instant::now();
        let r = v.passes(&["dims", "--group", &g]);
        if n == 4 {
            n4 = start.elapsed();
        }
        for key in ["h", "closure", "sandwich"] {
            v.expect(r["result"][key] == json!(h), || format!("n={n}: {key} = {}", r["result"][key]));
        }
    }
    for (n, h) in [(5, 3651), (6, 90921)] {
        let r = v.passes(&["dims", "--group", &group(n), "--count-only"]);
        v.expect(r["result"]["h"] == json!(h), || format!("n={n}: pair count {}", r["result"]["h"]));
    }
    v.expect(n4 <= Duration::from_secs(60), || format!("n=4 closure took {n4:?}"));
    (v, format!("1, 3, 19, 211 three ways, 3651 and 90921 by pair count; n=4 run {:.2} s", n4.as_secs_f64()))
}

fn ac2() -> (Verdict, String) {
    let mut v = Verdict::default();
    let r = v.passes(&["table", "--group", "A1"]);
    let expected = json!([["1", "s1", "pi1"], ["s1", "1", "pi1"], ["pi1", "1 + s1 - pi1", "pi1"]]);
    v.expect(r["result"]["table"] == expected, || format!("table {}", r["result"]["table"]));
    (v, "HS2 table with pi1 s1 = 1 + s1 - pi1".into())
}

fn ac3() -> (Verdict, String) {
    let mut v = Verdict::default();
    let mut sizes = Vec::new();
    for n in 1..=4 {
        let r = v.passes(&["basis", "--group", &group(n), "--kind", "B"]);
        sizes.push(r["result"]["size"].to_string());
    }
    (v, format!("basis B triangular and independent, sizes {}", sizes.join(", ")))
}

fn ac4() -> (Verdict, String) {
    let mut v = Verdict::default();
    for n in 1..=4 {
        let r = v.passes(&["cartan", "--group", &group(n)]);
        let pairs = 3u64.pow(n as u32 - 1);
        v.expect(r["result"]["morita_dimension"] == json!(pairs), || {
            format!("n={n}: Morita {}", r["result"]["morita_dimension"])
        });
        let size = 1usize << (n - 1);
        v.expect(r["result"]["cartan"].as_array().map(Vec::len) == Some(size), || format!("n={n}: Cartan size"));
    }
    (v, "Cartan = boolean incidence, Morita dimension 3^(n-1), n <= 4".into())
}

fn ac5() -> (Verdict, String) {
    let mut v = Verdict::default();
    for n in 1..=5 {
        let r = v.passes(&["basis", "--group", &group(n), "--kind", "vsigma"]);
        let order: u64 = (1..=n as u64).product();
        v.expect(r["result"]["sum_dim_s"] == json!(order), || {
            format!("n={n}: sum dim S = {}", r["result"]["sum_dim_s"])
        });
        for m in r["result"]["modules"].as_array().into_iter().flatten() {
            v.expect(m["dim_p"] == m["expected_dim_p"], || format!("n={n}: {m}"));
        }
    }
    let expected_s3 = [
        ("123", "123 - 213 - 132 + 231 + 312 - 321"),
        ("213", "213 - 312"),
        ("132", "132 - 231"),
        ("231", "231 - 321"),
        ("312", "312 - 321"),
        ("321", "321"),
    ];
    let r = cli(&["basis", "--group", "A2", "--kind", "vsigma"]);
    let got: BTreeMap<String, BTreeMap<String, i64>> = r.report["result"]["vectors"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|e| (e["sigma"].as_str().unwrap_or("").to_string(), signed_terms(e["v"].as_str().unwrap_or(""))))
        .collect();
    let want: BTreeMap<String, BTreeMap<String, i64>> =
        expected_s3.iter().map(|(s, text)| (s.to_string(), signed_terms(text))).collect();
    v.expect(got == want, || format!("S_3 v basis {}", r.report["result"]["vectors"]));
    (v, "dim P_I multinomial, sum dim S_I = n!, n <= 5; S_3 v basis matches".into())
}

fn ac6() -> (Verdict, String) {
    let mut v = Verdict::default();
    for n in 1..=5 {
        let r = v.passes(&["verify", "relations", "--n", &n.to_string()]);
        let qs = r["result"]["q"].as_array().map(Vec::len).unwrap_or(0);
        v.expect(n > 4 || qs == 3, || format!("n={n}: q values {}", r["result"]["q"]));
    }
    (v, "relation pack and rewrite rules n <= 5; quadratic at q = 2, -1, 1/3 for n <= 4".into())
}

fn ac7() -> (Verdict, String) {
    let mut v = Verdict::default();
    for (which, sizes) in [("s-pi", [1, 4, 66, 6264]), ("pi-pibar", [1, 3, 23, 477])] {
        for (n, size) in (1..=4).zip(sizes) {
            let r = v.passes(&["monoid", "--which", which, "--n", &n.to_string()]);
            v.expect(r["result"]["size"] == json!(size), || format!("{which} n={n}: {}", r["result"]["size"]));
        }
    }
    (v, "monoid sizes 1, 4, 66, 6264 and 1, 3, 23, 477".into())
}

fn ac8() -> (Verdict, String) {
    let mut v = Verdict::default();
    for n in 1..=8u128 {
        let r = v.passes(&["count", "--ndf", &n.to_string()]);
        let b = binom(2 * n - 1, n - 1) as u64;
        v.expect(r["result"]["ndf"]["size"] == json!(b), || format!("ndf n={n}: {}", r["result"]["ndf"]));
        if n <= 5 {
            v.expect(r["result"]["ndf"]["exterior_rank"] == json!(b), || format!("rank n={n}: {}", r["result"]["ndf"]));
        }
    }
    for n in 1..=10u128 {
        let r = v.passes(&["count", "--ndpf", &n.to_string()]);
        v.expect(r["result"]["ndpf"]["size"] == json!(catalan(n) as u64), || {
            format!("ndpf n={n}: {}", r["result"]["ndpf"])
        });
    }
    (v, "|NDF_n| = C(2n-1, n-1) for n <= 8, |NDPF_n| = C_n for n <= 10, faithful rank n <= 5".into())
}

fn ac9() -> (Verdict, String) {
    let mut v = Verdict::default();
    for n in 1..=5u128 {
        let r = v.passes(&["verify", "tl", "--n", &n.to_string()]);
        let res = &r["result"];
        v.expect(res["dim_s_pi"] == json!(binom(2 * n - 1, n - 1) as u64), || format!("n={n}: {}", res["dim_s_pi"]));
        v.expect(res["dim_pi"] == json!(catalan(n) as u64), || format!("n={n}: {}", res["dim_pi"]));
        v.expect(res["temperley_lieb"]["dim"] == json!(catalan(n) as u64), || format!("n={n}: TL dim"));
    }
    (v, "quotient chain dims and Temperley-Lieb relations, n <= 5".into())
}

fn ac10() -> (Verdict, String) {
    let mut v = Verdict::default();
    for n in 1..=6 {
        v.passes(&["verify", "idempotents", "--n", &n.to_string()]);
    }
    (v, "e_n^k idempotent, pi rule, dim e NDFA_n = C(n,k), 1 <= k <= n <= 6".into())
}

fn ac11() -> (Verdict, String) {
    let mut v = Verdict::default();
    for n in 1..=6 {
        v.passes(&["cartan", "--ndfa", &n.to_string()]);
    }
    (v, "NDFA Cartan bidiagonal, dim S^k = C(n-1,k-1), delta^2 = 0, n <= 6".into())
}

fn ac12() -> (Verdict, String) {
    let mut v = Verdict::default();
    for n in 1..=4usize {
        let r = v.passes(&["cartan", "--ndpfa", &n.to_string()]);
        v.expect(r["result"]["semisimple_quotient_dim"] == json!(1 << (n - 1)), || format!("n={n}: simples"));
        v.expect(r["result"]["kernel"].is_object(), || format!("n={n}: kernel not checked"));
    }
    for n in 1..=7 {
        v.passes(&["count", "--ndpf", &n.to_string()]);
    }
    (v, "2^(n-1) simples, kernel in radical, Grassmann Cartan n <= 4; incidence dimension n <= 7".into())
}

fn ac13() -> (Verdict, String) {
    let mut v = Verdict::default();
    for (n, a) in [(2, 2), (2, 3), (3, 3)] {
        v.passes(&["commutant", "--n", &n.to_string(), "--alphabet", &a.to_string()]);
    }
    for n in [2, 3] {
        v.passes(&["commutant", "--n", &n.to_string(), "--parking"]);
    }
    (v, "evaluation commutants have dim HS_n".into())
}

fn ac14() -> (Verdict, String) {
    let mut v = Verdict::default();
    let mut failing = Vec::new();
    for kind in ["H0", "HS", "HS*", "NDPFA", "NDFA"] {
        let r = cli(&["tower", "--which", kind, "--up-to", "4"]);
        let bad: Vec<String> = r.report["checks"]
            .as_array()
            .into_iter()
            .flatten()
            .filter(|c| c["pass"] != json!(true))
            .map(|c| c["name"].as_str().unwrap_or("?").to_string())
            .collect();
        if r.code != 0 || !bad.is_empty() {
            failing.push(format!("{kind}: {} failing", bad.len()));
            v.expect(false, || {
                format!("{kind}: {}", bad.first().cloned().unwrap_or_else(|| format!("exit {}", r.code)))
            });
        }
    }
    for n in 1..=4 {
        v.passes(&["grothendieck", "--which", "ndpfa-G", "--n", &n.to_string()]);
    }
    let detail = if failing.is_empty() {
        "tower certificates for m + n <= 4 and G transition = NDPFA Cartan".to_string()
    } else {
        format!("tower certificates for m + n <= 4 ({}); G transition = NDPFA Cartan", failing.join("; "))
    };
    (v, detail)
}

fn main() -> ExitCode {
    let criteria: [fn() -> (Verdict, String); 14] =
        [ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10, ac11, ac12, ac13, ac14];
    let mut unexpected = Vec::new();
    for (k, f) in criteria.iter().enumerate() {
        let id = k + 1;
        let start = Instant::now();
        let (v, detail) = f();
        let pass = v.problems.is_empty();
        let known = EXPECTED_FAIL.contains(&id);
        let tag = match (pass, known) {
            (true, false) => "",
            (false, true) => " [known failure]",
            (true, true) => " [expected to fail, now passes]",
            (false, false) => "",
        };
        println!(
            "AC{id} {}: {detail} ({:.1} s){tag}",
            if pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        for p in v.problems.iter().take(5) {
            println!("    {p}");
        }
        if pass == known {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome for {unexpected:?}");
        ExitCode::FAILURE
    }
}
