//! Acceptance criteria, one line each. All comparisons are exact.
//!
//! Runs as a plain binary so every line is printed even when an earlier
//! criterion fails; the exit status is nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use codegree_core::analysis::GroupAnalysis;
use codegree_core::catalog::{build, parse_name};
use codegree_core::structure::is_isomorphic;
use codegree_core::verify::{check_step7_diophantine, suite_lemmas, Corpus, NoClock, Verdict};
use codegree_core::{Cyclotomic, FiniteGroup, Subgroup};

const MAX_ORDER: usize = 100;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn analysis(name: &str) -> GroupAnalysis {
    let recipe = parse_name(name).unwrap();
    GroupAnalysis::new(recipe.name(), build(&recipe).unwrap()).unwrap()
}

fn secs(d: Duration) -> String {
    format!("{:.3} s", d.as_secs_f64())
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `h ∩ h^g = 1` for every `g` outside `h`, checked element by element.
fn is_malnormal(g: &FiniteGroup, h: &Subgroup) -> bool {
    (0..g.order()).filter(|&x| !h.contains(x)).all(|x| {
        h.members().iter().all(|&y| y == 0 || !h.contains(g.conj(y, x)))
    })
}

/// Frobenius with kernel `n` and complement `h`, from the definition: `h` is
/// malnormal and `n` is the identity plus the elements outside every
/// conjugate of `h`.
fn is_frobenius_pair(g: &FiniteGroup, n: &Subgroup, h: &Subgroup) -> bool {
    if h.is_trivial() || h.order() == g.order() || !is_malnormal(g, h) {
        return false;
    }
    let mut covered = vec![false; g.order()];
    for x in 0..g.order() {
        for &y in h.members() {
            covered[g.conj(y, x)] = true;
        }
    }
    (0..g.order()).all(|x| n.contains(x) == (x == 0 || !covered[x])) && n.order() * h.order() == g.order()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let expected: [(&str, &[u64]); 4] =
        [("S3", &[2, 3]), ("D10", &[2, 5, 5]), ("A4", &[3, 3, 4]), ("F(7,3)", &[3, 3, 7, 7])];
    let mut bad = Vec::new();
    for (name, want) in expected {
        let got = analysis(name).nonprincipal_codegrees();
        if got != want {
            bad.push(format!("{name}: {got:?}"));
        }
    }
    // C2 and C3 each carry a single codegree value.
    for (name, value) in [("C2", 2u64), ("C3", 3)] {
        let mut got = analysis(name).nonprincipal_codegrees();
        got.dedup();
        if got != [value] {
            bad.push(format!("{name}: {got:?}"));
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed < Duration::from_secs(1);
    outcome(pass, format!("6 groups in {}{}", secs(elapsed), if bad.is_empty() { String::new() } else { format!("; mismatches {bad:?}") }))
}

fn criterion_2(corpus: &Corpus, build_time: Duration) -> Outcome {
    let start = Instant::now();
    let reference: Vec<(&str, FiniteGroup)> = ["C2", "C3", "S3", "D10", "A4", "F(7,3)"]
        .into_iter()
        .map(|n| (n, build(&parse_name(n).unwrap()).unwrap()))
        .collect();
    let mut bad = Vec::new();
    let mut found = vec![false; reference.len()];
    for a in corpus.groups.iter().filter(|a| a.order() > 1) {
        let matched = reference
            .iter()
            .position(|(_, r)| r.order() == a.order() && is_isomorphic(r, &a.group).unwrap());
        if let Some(i) = matched {
            found[i] = true;
        }
        if a.is_triangle_free() != matched.is_some() {
            bad.push(a.name.clone());
        }
    }
    for (i, (name, _)) in reference.iter().enumerate() {
        if !found[i] {
            bad.push(format!("{name} missing from corpus"));
        }
    }
    let elapsed = build_time + start.elapsed();
    let pass = bad.is_empty() && elapsed < Duration::from_secs(60);
    outcome(pass, format!("{} groups in {}{}", corpus.groups.len(), secs(elapsed), if bad.is_empty() { String::new() } else { format!("; disagree {bad:?}") }))
}

fn criterion_3(corpus: &Corpus, build_time: Duration) -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for a in corpus.groups.iter().filter(|a| a.order() > 1) {
        let lhs = a.nonprincipal_codegrees().iter().all(|&c| prime_factors(c).len() == 1);
        let primes = prime_factors(a.order() as u64);
        let frobenius = a.frobenius.as_ref().is_some_and(|w| is_frobenius_pair(&a.group, &w.kernel, &w.complement));
        if a.frobenius.is_some() != frobenius {
            bad.push(format!("{}: invalid Frobenius witness", a.name));
        }
        let rhs = primes.len() == 1 || (frobenius && primes.len() == 2);
        if lhs != rhs {
            bad.push(format!("{} (codegrees {:?}, primes {:?}, lhs {lhs}, rhs {rhs})", a.name, a.nonprincipal_codegrees(), primes));
        }
    }
    let elapsed = build_time + start.elapsed();
    let pass = bad.is_empty() && elapsed < Duration::from_secs(60);
    outcome(pass, format!("failures: {}, {}{}", bad.len(), secs(elapsed), if bad.is_empty() { String::new() } else { format!(": {}", bad.join("; ")) }))
}

/// Checks the 2-Frobenius conditions for `1 < k < l < g` from the
/// definition: `l` is Frobenius with kernel `k`, `g/k` is Frobenius with
/// kernel `l/k`.
fn is_two_frobenius(g: &FiniteGroup, k: &Subgroup, l: &Subgroup) -> bool {
    let lg = g.subgroup_as_group(l);
    let back = |s: &Subgroup| -> Subgroup {
        let members: Vec<usize> = (0..lg.group.order()).filter(|&i| s.contains(lg.embedding[i])).collect();
        lg.group.subgroup_generated(&members)
    };
    let k_in_l = back(k);
    let l_is_frobenius = (0..lg.group.order()).any(|x| {
        // Complements of k in l are found among cyclic and 2-generated subgroups.
        (0..lg.group.order()).any(|y| {
            let h = lg.group.subgroup_generated(&[x, y]);
            h.order() * k_in_l.order() == lg.group.order() && is_frobenius_pair(&lg.group, &k_in_l, &h)
        })
    });
    let q = g.quotient(k).unwrap();
    let image = |s: &Subgroup| -> Subgroup {
        let members: Vec<usize> = s.members().iter().map(|&x| q.projection[x]).collect();
        q.group.subgroup_generated(&members)
    };
    let lq = image(l);
    let quotient_is_frobenius = (0..q.group.order()).any(|x| {
        let h = q.group.subgroup_generated(&[x]);
        h.order() * lq.order() == q.group.order() && is_frobenius_pair(&q.group, &lq, &h)
    });
    l_is_frobenius && quotient_is_frobenius
}

fn criterion_4(corpus: &Corpus) -> Outcome {
    let mut bad = Vec::new();
    let mut max_diameter = 0;
    for a in corpus.groups.iter().filter(|a| a.order() > 1) {
        let s = &a.gamma_stats;
        if s.component_count > 2 {
            bad.push(format!("{}: {} components", a.name, s.component_count));
        }
        if s.component_count == 1 {
            let d = s.diameters[0];
            max_diameter = max_diameter.max(d);
            if d > 4 {
                bad.push(format!("{}: diameter {d}", a.name));
            }
        }
        let witnessed = a.frobenius.is_some() || a.two_frobenius.is_some();
        if (s.component_count == 2) != witnessed {
            bad.push(format!("{}: disconnected {} but witness {}", a.name, s.component_count == 2, witnessed));
        }
        if s.component_count != a.delta_stats.component_count {
            bad.push(format!("{}: gamma {} vs delta {} components", a.name, s.component_count, a.delta_stats.component_count));
        }
    }
    let s4 = corpus.get("S4").expect("S4 is in the corpus");
    let v4 = build(&parse_name("C2xC2").unwrap()).unwrap();
    let a4 = build(&parse_name("A4").unwrap()).unwrap();
    match &s4.two_frobenius {
        Some(w) => {
            let k = s4.group.subgroup_as_group(&w.k).group;
            let l = s4.group.subgroup_as_group(&w.l).group;
            if !(is_isomorphic(&k, &v4).unwrap() && is_isomorphic(&l, &a4).unwrap()) {
                bad.push(format!("S4 witness K order {}, L order {}", w.k.order(), w.l.order()));
            }
            if !is_two_frobenius(&s4.group, &w.k, &w.l) {
                bad.push("S4 witness fails the 2-Frobenius definition".into());
            }
        }
        None => bad.push("S4 has no 2-Frobenius witness".into()),
    }
    outcome(
        bad.is_empty(),
        format!("{} groups, largest connected diameter {max_diameter}, S4 certified with K = V4, L = A4{}", corpus.groups.len(), if bad.is_empty() { String::new() } else { format!("; {bad:?}") }),
    )
}

/// Orthogonality with plain cyclotomic arithmetic, independent of the
/// table's own check.
fn generic_orthogonality(a: &GroupAnalysis) -> bool {
    let t = &a.table;
    let (r, n, e) = (t.len(), t.order() as i128, t.conductor());
    let sum_sq: u64 = t.degrees().iter().map(|d| d * d).sum();
    if sum_sq != t.order() as u64 {
        return false;
    }
    let rows_ok = (0..r).all(|i| {
        (i..r).all(|j| {
            let mut acc = Cyclotomic::zero(e);
            for c in 0..r {
                acc = &acc + &(t.value(i, c) * &t.value(j, c).conj()).scale((t.class_sizes()[c] as i128).into());
            }
            acc.as_integer() == Some(if i == j { n } else { 0 })
        })
    });
    let cols_ok = (0..r).all(|c| {
        (c..r).all(|d| {
            let mut acc = Cyclotomic::zero(e);
            for i in 0..r {
                acc = &acc + &(t.value(i, c) * &t.value(i, d).conj());
            }
            acc.as_integer() == Some(if c == d { n / t.class_sizes()[c] as i128 } else { 0 })
        })
    });
    rows_ok && cols_ok
}

fn criterion_5(corpus: &Corpus) -> Outcome {
    let start = Instant::now();
    let a5 = analysis("A5");
    let a5_ok = a5.table.verify_orthogonality().is_ok() && generic_orthogonality(&a5);
    let a5_time = start.elapsed();
    // Both golden-ratio values (1 + z + z^4 and 1 + z^2 + z^3 over Q(z_5)) occur.
    let golden = |a: i64, b: i64| {
        let z = |k| Cyclotomic::root_of_unity(5, k);
        (&(&Cyclotomic::one(5) + &z(a)) + &z(b)).embed(a5.table.conductor())
    };
    let irrational = [golden(1, 4), golden(2, 3)]
        .iter()
        .all(|v| a5.table.distinct_values().iter().any(|x| x == v));
    let mut bad = Vec::new();
    for a in &corpus.groups {
        if a.table.verify_orthogonality().is_err() || (a.order() <= 60 && !generic_orthogonality(a)) {
            bad.push(a.name.clone());
        }
    }
    let pass = a5_ok && irrational && bad.is_empty() && a5_time < Duration::from_secs(5);
    outcome(
        pass,
        format!(
            "A5 in {} (irrational values {}), {} corpus tables{}",
            secs(a5_time),
            if irrational { "present" } else { "missing" },
            corpus.groups.len(),
            if bad.is_empty() { String::new() } else { format!("; failing {bad:?}") }
        ),
    )
}

fn totient(d: u64) -> usize {
    (1..=d).filter(|&k| prime_factors(d).iter().all(|p| k % p != 0)).count()
}

fn criterion_6(corpus: &Corpus) -> Outcome {
    let start = Instant::now();
    let results = suite_lemmas(corpus, &NoClock);
    let elapsed = start.elapsed();
    let failures: Vec<String> = results
        .iter()
        .filter(|r| r.verdict == Verdict::Fail)
        .map(|r| format!("{} {}", r.check, r.group))
        .collect();
    let count = |check: &str| results.iter().filter(|r| r.check == check && r.verdict == Verdict::Pass).count();
    let a5_complete = results
        .iter()
        .any(|r| r.check == "simple_group_complete_graph" && r.group == "A5" && r.verdict == Verdict::Pass);
    // Totient counts against an independent count, every n <= 500 and d | n.
    let mut totient_bad = Vec::new();
    for n in 1..=500u64 {
        let a = GroupAnalysis::new(format!("C{n}"), build(&parse_name(&format!("C{n}")).unwrap()).unwrap()).unwrap();
        let codegrees = a.codegree_multiset();
        for d in (1..=n).filter(|d| n % d == 0) {
            if codegrees.iter().filter(|&&c| c == d).count() != totient(d) {
                totient_bad.push((n, d));
            }
        }
    }
    let pass = failures.is_empty()
        && a5_complete
        && count("cyclic_totient_counts") == 500
        && count("quotient_subgraph") == corpus.groups.len()
        && count("constituent_divisibility") == corpus.groups.len()
        && count("coprime_product_multiplicativity") > 0
        && count("sylow_product_multiplicativity") > 0
        && count("frobenius_kernel_nilpotent") > 0
        && totient_bad.is_empty()
        && elapsed < Duration::from_secs(30);
    outcome(
        pass,
        format!(
            "{} lemma results in {}, A5 complete {a5_complete}, failures {failures:?}, totient mismatches {totient_bad:?}",
            results.len(),
            secs(elapsed)
        ),
    )
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let got = check_step7_diophantine(20);
    let elapsed = start.elapsed();
    let oracle: Vec<(u32, u64)> = (2..=20u32)
        .filter_map(|n| {
            let rhs = 4u64.pow(n) - 4;
            (rhs % 3 == 0).then_some(rhs / 3).and_then(|sq| {
                let y = (0..=1u64 << 20).find(|y| y * y >= sq)?;
                (y > 0 && y * y == sq).then_some((n, y))
            })
        })
        .collect();
    let pass = got == [(2, 2)] && got == oracle && elapsed < Duration::from_millis(1);
    outcome(pass, format!("solutions {got:?} in {} us", elapsed.as_micros()))
}

fn criterion_8() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for run in 0..2 {
        let path = dir.path().join(format!("run{run}.jsonl"));
        let (mut out, mut err) = (Vec::new(), Vec::new());
        codegree::cli::run(["codegree", "verify", "all", "--report", path.to_str().unwrap()], &mut out, &mut err);
        reports.push(std::fs::read(&path).unwrap_or_default());
    }
    let lines = reports[0].iter().filter(|&&b| b == b'\n').count();
    outcome(!reports[0].is_empty() && reports[0] == reports[1], format!("two reports of {} bytes, {lines} lines, identical {}", reports[0].len(), reports[0] == reports[1]))
}

fn main() -> ExitCode {
    let mut all_pass = true;
    let mut report = |number: u32, title: &str, f: &mut dyn FnMut() -> Outcome| {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            outcome(false, format!("panicked: {}", msg.unwrap_or_default()))
        });
        all_pass &= result.pass;
        println!("criterion {number} {title}: {} ({})", if result.pass { "PASS" } else { "FAIL" }, result.detail);
    };
    report(1, "codegree table reproduction", &mut criterion_1);
    let start = Instant::now();
    let corpus = Corpus::build(MAX_ORDER).expect("corpus builds");
    let build_time = start.elapsed();
    report(2, "triangle-free classification", &mut || criterion_2(&corpus, build_time));
    report(3, "prime-power codegrees", &mut || criterion_3(&corpus, build_time));
    report(4, "connectivity", &mut || criterion_4(&corpus));
    report(5, "character table self-checks", &mut || criterion_5(&corpus));
    report(6, "lemma suite", &mut || criterion_6(&corpus));
    report(7, "power-of-four equation", &mut criterion_7);
    report(8, "deterministic reports", &mut criterion_8);
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
