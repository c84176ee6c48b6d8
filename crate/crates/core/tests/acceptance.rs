//! Acceptance checks, one printed PASS/FAIL line per criterion.
//!
//! All comparisons are exact: two polynomial maps agree when every
//! coefficient agrees. Point checks use an interpolation oracle that only
//! evaluates polynomials and never differentiates them symbolically.

use std::process::Command;
use std::time::{Duration, Instant};

use rfdb::cli::parse_map;
use rfdb::corpus::{Corpus, CorpusConfig};
use rfdb::crdc::{forward_derivative, partial_reverse, reverse_derivative};
use rfdb::faa_di_bruno::{fdb_report, reverse_fdb, reverse_summands, Mode};
use rfdb::higher_order::rho;
use rfdb::laws::{run_suite, LawReport, Suite, VerifyConfig};
use rfdb::{ArityProfile, PolyMap, Polynomial, Scalar, Slot};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn config(cases: usize) -> VerifyConfig {
    VerifyConfig {
        seed: 42,
        cases,
        max_dim: 3,
        max_deg: 3,
        max_order: 3,
    }
}

/// Every listed law ran at least `min_cases` times without a failure.
fn laws_hold(report: &LawReport, ids: &[&str], min_cases: usize) -> Result<String, String> {
    for id in ids {
        let tally = report
            .tally(id)
            .ok_or_else(|| format!("law {id} missing"))?;
        if tally.cases < min_cases {
            return Err(format!("{id}: only {} cases", tally.cases));
        }
        if tally.failures > 0 {
            let f = report
                .failures
                .iter()
                .find(|f| f.law == *id)
                .expect("failure recorded");
            return Err(format!(
                "{id}: {} failures, e.g. maps {:?}: {} vs {}",
                tally.failures, f.maps, f.lhs, f.rhs
            ));
        }
    }
    Ok(format!(
        "{} laws x {} cases, 0 failures",
        ids.len(),
        report.cases
    ))
}

fn from_result(r: Result<String, String>) -> Outcome {
    match r {
        Ok(d) => outcome(true, d),
        Err(d) => outcome(false, d),
    }
}

// ---- interpolation oracle -------------------------------------------------

fn binomial(n: u32, k: u32) -> Scalar {
    let mut c = Scalar::one();
    for i in 0..k {
        c = &(&c * &Scalar::from(n - i)) * &Scalar::from(i + 1).inverse().unwrap();
    }
    c
}

/// `d/dt q(t)` at 0 for a polynomial `q` of degree at most `degree`, given
/// `q(0), …, q(degree)`. Uses the derivative of the Lagrange basis on the
/// nodes 0..=degree at 0.
fn derivative_at_zero(samples: &[Scalar]) -> Scalar {
    let d = samples.len() as u32 - 1;
    let mut total = Scalar::zero();
    let mut weight_sum = Scalar::zero();
    for (k, q) in samples.iter().enumerate().skip(1) {
        let k = k as u32;
        let sign = if k % 2 == 1 {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        let w = &(&sign * &binomial(d, k)) * &Scalar::from(k).inverse().unwrap();
        total += &(&w * q);
        weight_sum += &w;
    }
    total += &(&(-weight_sum) * &samples[0]);
    total
}

fn axpy(a: &[Scalar], t: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(v).map(|(x, y)| x + &(t * y)).collect()
}

/// Mixed directional derivative `∂_{v₁} ⋯ ∂_{v_k} p` at `a`, by nesting the
/// one-dimensional oracle.
fn mixed(p: &Polynomial, a: &[Scalar], dirs: &[Vec<Scalar>]) -> Scalar {
    match dirs.split_first() {
        None => p.eval(a).unwrap(),
        Some((v, rest)) => {
            let degree = p.degree().unwrap_or(0);
            let samples: Vec<Scalar> = (0..=degree)
                .map(|t| mixed(p, &axpy(a, &Scalar::from(t), v), rest))
                .collect();
            derivative_at_zero(&samples)
        }
    }
}

fn unit(dim: usize, i: usize) -> Vec<Scalar> {
    (0..dim)
        .map(|k| {
            if k == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect()
}

fn point(c: &mut Corpus, dim: usize) -> Vec<Scalar> {
    (0..dim).map(|_| c.scalar()).collect()
}

/// `ρ⁽ᵏ⁾[h](a₀, b, a₂, …, a_k)` from the oracle: component `i` is
/// `Σ_j b_j ∂_{e_i} ∂_{a₂} ⋯ ∂_{a_k} h_j(a₀)`.
fn rho_oracle(h: &PolyMap, a0: &[Scalar], b: &[Scalar], rest: &[Vec<Scalar>]) -> Vec<Scalar> {
    let n = a0.len();
    (0..n)
        .map(|i| {
            let mut dirs = vec![unit(n, i)];
            dirs.extend(rest.iter().cloned());
            let mut acc = Scalar::zero();
            for (hj, bj) in h.coords().iter().zip(b) {
                acc += &(bj * &mixed(hj, a0, &dirs));
            }
            acc
        })
        .collect()
}

// ---- criteria -------------------------------------------------------------

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let report = run_suite(Suite::RdAxioms, &config(100)).unwrap();
    let ids = [
        "rd1-linearity",
        "rd2-cotangent-linear",
        "rd3-identity",
        "rd3-projection",
        "rd4-tuple",
        "rd5-chain",
        "rd6-transpose-involution",
        "rd7-mixed-symmetry",
        "schwarz",
    ];
    if let Err(e) = laws_hold(&report, &ids, 100) {
        return outcome(false, e);
    }
    // R[f](a, b)_i = Σ_j b_j ∂f_j/∂x_i (a), checked pointwise against the oracle
    let mut c = Corpus::new(1, CorpusConfig::default());
    for _ in 0..100 {
        let f = c.single_map();
        let (n, m) = (f.domain().total(), f.codomain_dim());
        let (a, b) = (point(&mut c, n), point(&mut c, m));
        let mut ab = a.clone();
        ab.extend(b.iter().cloned());
        let got = reverse_derivative(&f).unwrap().eval(&ab).unwrap();
        let want = rho_oracle(&f, &a, &b, &[]);
        if got != want {
            return outcome(
                false,
                format!("R[{f}] at {ab:?}: {got:?} vs oracle {want:?}"),
            );
        }
    }
    let elapsed = start.elapsed();
    outcome(
        elapsed < Duration::from_secs(60),
        format!("RD.1-RD.7 + Schwarz, 100 cases each, 0 failures; R matches the oracle at 100 points; {elapsed:.1?}"),
    )
}

fn criterion_2() -> Outcome {
    let report = run_suite(Suite::Context, &config(100)).unwrap();
    let ids = [
        "ctx-rd1-linearity",
        "ctx-rd2-cotangent-linear",
        "ctx-rd3-projection",
        "ctx-rd4-tuple",
        "ctx-rd5-chain",
        "ctx-rd6-transpose-involution",
        "ctx-rd7-mixed-symmetry",
        "ctx-pairing-helper",
    ];
    from_result(laws_hold(&report, &ids, 50))
}

fn criterion_3() -> Outcome {
    let report = run_suite(Suite::Dagger, &config(100)).unwrap();
    let ids = [
        "dagger-of-forward",
        "dagger-contravariant",
        "base-free",
        "dagger-of-partial-forward",
        "dagger-involution",
    ];
    if let Err(e) = laws_hold(&report, &ids, 50) {
        return outcome(false, e);
    }
    // base independence as a syntactic fact: the cotangent block never occurs
    let mut c = Corpus::new(3, CorpusConfig::default());
    for _ in 0..50 {
        let f = c.single_map();
        let lhs = partial_reverse(&reverse_derivative(&f).unwrap(), 1).unwrap();
        if lhs.depends_on_block(1).unwrap() {
            return outcome(false, format!("R2[R[{f}]] depends on b"));
        }
    }
    outcome(
        true,
        "5 laws x 100 cases, 0 failures; b absent from R2[R[f]] in 50 maps",
    )
}

fn criterion_4() -> Outcome {
    let report = run_suite(Suite::Stable, &config(100)).unwrap();
    from_result(laws_hold(
        &report,
        &["stable-rule", "stable-rule-context"],
        100,
    ))
}

fn criterion_5() -> Outcome {
    let report = run_suite(Suite::Bridge, &config(100)).unwrap();
    let ids = [
        "dagger-bridge.n0",
        "dagger-bridge.n1",
        "dagger-bridge.n2",
        "dagger-bridge.n3",
    ];
    from_result(laws_hold(&report, &ids, 50))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let report = run_suite(Suite::FdbForward, &config(100)).unwrap();
    let ids = [
        "fdb-forward.n0",
        "fdb-forward.n1",
        "fdb-forward.n2",
        "fdb-forward.n3",
    ];
    if let Err(e) = laws_hold(&report, &ids, 50) {
        return outcome(false, e);
    }
    // ∂⁽ⁿ⁺¹⁾[g∘f](a₀, a₁, …) against the oracle's mixed derivative of g∘f
    let mut c = Corpus::new(6, CorpusConfig::default());
    for n in 0..=3 {
        for _ in 0..10 {
            let (f, g) = c.composable_pair();
            let h = g.compose(&f).unwrap();
            let dim = f.domain().total();
            let formula = rfdb::faa_di_bruno::forward_fdb(&f, &g, n).unwrap();
            let a0 = point(&mut c, dim);
            let dirs: Vec<Vec<Scalar>> = (0..=n).map(|_| point(&mut c, dim)).collect();
            let mut flat = a0.clone();
            flat.extend(dirs.iter().flatten().cloned());
            let got = formula.eval(&flat).unwrap();
            let want: Vec<Scalar> = h.coords().iter().map(|p| mixed(p, &a0, &dirs)).collect();
            if got != want {
                return outcome(
                    false,
                    format!("n={n}, f={f}, g={g}: {got:?} vs oracle {want:?}"),
                );
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        elapsed < Duration::from_secs(120),
        format!("n=0..3 x 100 pairs equal to iterated D1; 40 oracle points agree; {elapsed:.1?}"),
    )
}

fn criterion_7() -> Outcome {
    let report = run_suite(Suite::FdbReverse, &config(100)).unwrap();
    let ids = [
        "fdb-reverse.n0",
        "fdb-reverse.n1",
        "fdb-reverse.n2",
        "fdb-reverse.n3",
    ];
    if let Err(e) = laws_hold(&report, &ids, 50) {
        return outcome(false, e);
    }
    let mut c = Corpus::new(7, CorpusConfig::default());
    for _ in 0..50 {
        let (f, g) = c.composable_pair();
        let (a, b) = (f.domain().total(), g.codomain_dim());
        // n = 0 spells out R[f](a, R[g](f(a), b)) exactly
        let dom0 = ArityProfile::new(vec![a, b]).unwrap();
        let image = f.rewire(dom0.clone(), &[Slot::Block(0)]).unwrap();
        let cot = PolyMap::proj(&dom0, 1).unwrap();
        let base = PolyMap::proj(&dom0, 0).unwrap();
        let inner = reverse_derivative(&g)
            .unwrap()
            .compose(&PolyMap::pair(&[image, cot]).unwrap())
            .unwrap();
        let chain = reverse_derivative(&f)
            .unwrap()
            .compose(&PolyMap::pair(&[base, inner]).unwrap())
            .unwrap();
        let n0 = reverse_fdb(&f, &g, 0).unwrap();
        if n0.to_string() != chain.to_string() {
            return outcome(
                false,
                format!("n=0 differs from the chain rule for f={f}, g={g}"),
            );
        }

        // n = 1 term by term: ρ¹f·(ρ²g·b·(Df·a₂)) then ρ²f·(ρ¹g·b)·a₂
        let dom = ArityProfile::new(vec![a, b, a]).unwrap();
        let p = |k| PolyMap::proj(&dom, k).unwrap();
        let image = f.rewire(dom.clone(), &[Slot::Block(0)]).unwrap();
        let push = forward_derivative(&f)
            .unwrap()
            .rewire(dom.clone(), &[Slot::Block(0), Slot::Block(2)])
            .unwrap();
        let g2 = rho(&g, 2)
            .unwrap()
            .result
            .compose(&PolyMap::pair(&[image.clone(), p(1), push]).unwrap())
            .unwrap();
        let first = reverse_derivative(&f)
            .unwrap()
            .compose(&PolyMap::pair(&[p(0), g2]).unwrap())
            .unwrap();
        let g1 = reverse_derivative(&g)
            .unwrap()
            .compose(&PolyMap::pair(&[image, p(1)]).unwrap())
            .unwrap();
        let second = rho(&f, 2)
            .unwrap()
            .result
            .compose(&PolyMap::pair(&[p(0), g1, p(2)]).unwrap())
            .unwrap();
        let summands = reverse_summands(&f, &g, 1).unwrap();
        if summands.len() != 2 || summands[0].map != first || summands[1].map != second {
            return outcome(
                false,
                format!("n=1 summands differ from the displayed terms for f={f}, g={g}"),
            );
        }
    }
    // pointwise oracle for n = 0..3
    for n in 0..=3 {
        for _ in 0..10 {
            let (f, g) = c.composable_pair();
            let h = g.compose(&f).unwrap();
            let (a, cdim) = (f.domain().total(), g.codomain_dim());
            let a0 = point(&mut c, a);
            let b = point(&mut c, cdim);
            let rest: Vec<Vec<Scalar>> = (0..n).map(|_| point(&mut c, a)).collect();
            let mut flat = a0.clone();
            flat.extend(b.iter().cloned());
            flat.extend(rest.iter().flatten().cloned());
            let got = reverse_fdb(&f, &g, n).unwrap().eval(&flat).unwrap();
            let want = rho_oracle(&h, &a0, &b, &rest);
            if got != want {
                return outcome(
                    false,
                    format!("n={n}, f={f}, g={g}: {got:?} vs oracle {want:?}"),
                );
            }
        }
    }
    // f = g = x²: ρ⁽²⁾[x⁴](a₀, b, a₂) = 12 a₀² b a₂
    let sq = parse_map("(x1^2)", None).unwrap();
    let r = reverse_fdb(&sq, &sq, 1).unwrap();
    if r.to_string() != "(12*x1^2*x2*x3)" {
        return outcome(false, format!("x^2 o x^2 gave {r}"));
    }
    outcome(
        true,
        "n=0..3 x 100 pairs equal rho(g o f); n=0 text-identical to the chain rule; n=1 matches the two displayed terms; 40 oracle points agree",
    )
}

fn criterion_8() -> Outcome {
    let f = parse_map("(x1^2 + x2, x1*x2)", None).unwrap();
    let g = parse_map("(x1*x2^2 - x1)", None).unwrap();
    let mut counts = Vec::new();
    for n in 0..=3 {
        let report = fdb_report(&f, &g, n, Mode::Reverse).unwrap();
        if !report.equal() {
            return outcome(false, format!("n={n} report not equal"));
        }
        counts.push(report.summands.len());
    }
    outcome(
        counts == [1, 2, 5, 15],
        format!("summand counts {counts:?}"),
    )
}

fn criterion_9() -> Outcome {
    let report = run_suite(Suite::Symmetry, &config(100)).unwrap();
    let ids = [
        "del-dlinear.n0",
        "del-dlinear.n1",
        "del-dlinear.n2",
        "del-symmetric.n1",
        "del-symmetric.n2",
    ];
    from_result(laws_hold(&report, &ids, 30))
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_rfdb"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_10() -> Outcome {
    // round trip on generated maps and on their derivatives
    let mut c = Corpus::new(10, CorpusConfig::default());
    for i in 0..1000 {
        let domain = c.any_profile();
        let m = c.dim();
        let f = c.map(domain.clone(), m);
        let subject = if i % 4 == 3 {
            partial_reverse(&f, 0).unwrap()
        } else {
            f
        };
        let text = subject.to_string();
        match parse_map(&text, Some(subject.domain())) {
            Ok(back) if back == subject => {}
            other => return outcome(false, format!("{text} parsed back as {other:?}")),
        }
    }

    let verify = [
        "verify", "--suite", "stable", "--seed", "7", "--cases", "20",
    ];
    let (code_a, out_a) = run_cli(&verify);
    let (code_b, out_b) = run_cli(&verify);
    if code_a != 0 || out_a != out_b {
        return outcome(
            false,
            format!("verify not reproducible (exit {code_a}, {code_b})"),
        );
    }
    let fdb = [
        "fdb", "--f", "(x1^2)", "--g", "(x1^2)", "--n", "1", "--json",
    ];
    if run_cli(&fdb) != run_cli(&fdb) {
        return outcome(false, "fdb --json not reproducible");
    }

    let expectations: [(&[&str], i32); 5] = [
        (
            &["derive", "--map", "(x1^3)", "--blocks", "1", "--order", "2"],
            0,
        ),
        (&["partitions", "4"], 0),
        (&["derive", "--map", "(x1 +)"], 2),
        (&["verify", "--suite", "nonsense"], 2),
        (&["fdb", "--f", "(x1, x1)", "--g", "(x3)"], 2),
    ];
    for (args, want) in expectations {
        let (code, _) = run_cli(args);
        if code != want {
            return outcome(false, format!("{args:?} exited {code}, expected {want}"));
        }
    }
    outcome(true, "1000 maps round-trip; verify and fdb output byte-identical across runs; exit codes 0/2 as documented")
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("RD axiom suite", criterion_1),
        ("context identities", criterion_2),
        ("dagger suite", criterion_3),
        ("stable rule", criterion_4),
        ("dagger bridge n=0..3", criterion_5),
        ("forward Faa di Bruno", criterion_6),
        ("reverse Faa di Bruno", criterion_7),
        ("summand counts", criterion_8),
        ("symmetry and D-linearity of del", criterion_9),
        ("CLI contract", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} {:>2} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
