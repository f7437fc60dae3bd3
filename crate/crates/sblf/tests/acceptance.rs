//! End-to-end acceptance sweep. Each test covers one acceptance
//! criterion and prints a single `criterion N [PASS|FAIL]` line (run
//! with `--nocapture` to see the lines for passing tests too).

use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sblf::blf::CheckStatus;
use sblf::hurwitz::{Move, MoveDirection};
use sblf::mcg::{self, MappingClass};
use sblf::surface::{chain_twists, standard_model, ChainTwistTable};
use sblf::{
    build_ws, cap_along_last_handle, hurwitz_equivalent_bounded, parse_class_expr,
    parse_curve_expr, print_class_expr, print_curve_expr, run_paper_lemmas, CurveExpr, CycleSpec,
    Factorization, FactorizationEntry, FreeAutomorphism, IntegerMatrix, SBLFDescriptor,
    SearchStatus, Word, DEFAULT_CLOSED_BOUND,
};

/// Print the one-line verdict and enforce pass plus a wall-clock bound.
fn conclude(n: usize, label: &str, failures: &[String], start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed <= budget;
    // Write past the harness's per-test capture so the line is visible
    // in a plain `cargo test` run.
    {
        use std::io::Write;
        let line = format!(
            "criterion {n} [{}] {label} ({:.2?})\n",
            if pass { "PASS" } else { "FAIL" },
            elapsed
        );
        let _ = std::io::stdout().lock().write_all(line.as_bytes());
    }
    assert!(
        failures.is_empty(),
        "criterion {n} ({label}) failed: {}",
        failures.join("; ")
    );
    assert!(
        elapsed <= budget,
        "criterion {n} ({label}) exceeded its {budget:?} budget: {elapsed:?}"
    );
}

fn genus2() -> ChainTwistTable {
    chain_twists(&standard_model(2).unwrap()).unwrap()
}

fn require(failures: &mut Vec<String>, ok: bool, what: &str) {
    if !ok {
        failures.push(what.to_string());
    }
}

#[test]
fn criterion_1_exact_identity_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let report = run_paper_lemmas(None).unwrap();
    let mut want: Vec<String> = vec![
        "eq1".into(),          // (a) t4 t5^2 t4 = t5^-1 xi t5^-1
        "lem-gamma".into(),    // (b)
        "lem-beta".into(),     // (c)
        "iota2-words".into(),  // (e) both expressions for iota2
        "iota2-swap".into(),   // (f) swap formula
    ];
    want.extend((3..=8).map(|s| format!("lem-alphabeta-s{s}"))); // (d)
    want.extend(["t2", "t3", "t4", "t5"].iter().map(|n| format!("iota2-commute-{n}"))); // (f)
    for id in &want {
        match report.checks.iter().find(|c| &c.id == id) {
            Some(c) => require(&mut failures, c.pass, &format!("check {id} failed")),
            None => failures.push(format!("check {id} missing from suite")),
        }
    }
    conclude(1, "exact identity suite", &failures, start, Duration::from_secs(60));
}

#[test]
fn criterion_2_cap_kernel_membership() {
    let start = Instant::now();
    let mut failures = Vec::new();

    // The suite's kernel checks certify membership for the lem-gamma
    // product, xi t5^-4, and xi^(s-1) t5^(-5s+6) for s = 3..8.
    let report = run_paper_lemmas(None).unwrap();
    let mut want: Vec<String> = vec!["kernel-gamma".into(), "kernel-beta".into()];
    want.extend((3..=8).map(|s| format!("kernel-alphabeta-s{s}")));
    for id in &want {
        match report.checks.iter().find(|c| &c.id == id) {
            Some(c) => require(&mut failures, c.pass, &format!("check {id} failed")),
            None => failures.push(format!("check {id} missing from suite")),
        }
    }

    // Direct image checks: capping the second handle kills t5 and xi
    // but not t2.
    let table = genus2();
    let cap = cap_along_last_handle(table.model());
    let t5 = mcg::twist(&table, "t5").unwrap();
    require(
        &mut failures,
        cap.in_kernel(t5.automorphism()).unwrap(),
        "t5 should cap to the identity",
    );
    let xi = MappingClass::from_word(&table, &[("xi".to_string(), 1)]).unwrap();
    require(
        &mut failures,
        cap.in_kernel(xi.automorphism()).unwrap(),
        "xi should cap to the identity",
    );
    let t2 = mcg::twist(&table, "t2").unwrap();
    require(
        &mut failures,
        !cap.in_kernel(t2.automorphism()).unwrap(),
        "t2 should survive capping",
    );
    conclude(2, "cap kernel membership", &failures, start, Duration::from_secs(60));
}

#[test]
fn criterion_3_hyperelliptic_involution() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let table = genus2();
    let iota = mcg::hyperelliptic_involution(&table);

    let mut minus_identity = IntegerMatrix::zero(4, 4);
    for i in 0..4 {
        minus_identity.set_i64(i, i, -1);
    }
    require(
        &mut failures,
        iota.automorphism().abelianization_matrix() == minus_identity,
        "homology action is not -I",
    );
    require(
        &mut failures,
        iota.automorphism().lefschetz_number() == 6,
        "Lefschetz number is not 6",
    );
    let squared = iota.pow(2).unwrap();
    let verdict = squared
        .equal_closed(&MappingClass::identity(table.model()), DEFAULT_CLOSED_BOUND)
        .unwrap();
    require(&mut failures, verdict.is_equal(), "iota^2 not closed-trivial within bound");
    conclude(3, "hyperelliptic involution action", &failures, start, Duration::from_secs(60));
}

#[test]
fn criterion_4_ws_family_invariants() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for s in 2..=10usize {
        let d = build_ws(s, false).unwrap();
        let v = d.validate().unwrap();
        require(&mut failures, v.status == CheckStatus::Pass, &format!("W_{s} invalid"));
        let inv = d.invariants().unwrap();
        require(&mut failures, inv.chi == s as i64, &format!("chi(W_{s}) != {s}"));
        require(&mut failures, inv.h1 == vec![0], &format!("H1(W_{s}) != Z"));

        let dn = build_ws(s, true).unwrap();
        let vn = dn.validate().unwrap();
        require(
            &mut failures,
            vn.status == CheckStatus::Pass,
            &format!("normalized W_{s} invalid"),
        );
        let invn = dn.invariants().unwrap();
        require(&mut failures, invn.chi == s as i64, &format!("chi(nW_{s}) != {s}"));
        require(&mut failures, invn.h1.is_empty(), &format!("H1(nW_{s}) != 0"));
        require(
            &mut failures,
            invn.b2 == s as i64 - 2,
            &format!("b2(nW_{s}) != {}", s as i64 - 2),
        );
    }
    conclude(4, "W_s family invariants", &failures, start, Duration::from_secs(300));
}

/// A random conjugated chain twist: base twist conjugated by a twist
/// word of at most 3 single-exponent syllables, so each factor's twist
/// word `conj^-1 · base · conj` has at most 7 letters.
fn random_entry(table: &ChainTwistTable, rng: &mut ChaCha8Rng) -> FactorizationEntry {
    let names = table.twist_names();
    let base = names[rng.gen_range(0..names.len())].to_string();
    let syllables = rng.gen_range(0..=3);
    let mut word = Vec::new();
    for _ in 0..syllables {
        let name = names[rng.gen_range(0..names.len())].to_string();
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        word.push((name, e));
    }
    let conj = MappingClass::from_word(table, &word).unwrap();
    FactorizationEntry::conjugated(table, &base, &conj).unwrap()
}

fn random_factorization(
    table: &ChainTwistTable,
    rng: &mut ChaCha8Rng,
    min_len: usize,
) -> Factorization {
    let len = rng.gen_range(min_len..=6);
    let entries = (0..len).map(|_| random_entry(table, rng)).collect();
    Factorization::new(table.model(), entries).unwrap()
}

fn same_factorization(a: &Factorization, b: &Factorization) -> bool {
    a.len() == b.len()
        && a.entries().iter().zip(b.entries()).all(|(x, y)| {
            x.curve() == y.curve() && x.class().automorphism() == y.class().automorphism()
        })
}

#[test]
fn criterion_5_hurwitz_moves_and_search() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let table = genus2();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5b1f_0001);

    // Move invariance and invertibility over 1000 random factorizations.
    let mut checked = 0usize;
    for _ in 0..1000 {
        let f = random_factorization(&table, &mut rng, 1);
        let total = f.total_monodromy().unwrap();
        for index in 0..f.len().saturating_sub(1) {
            for direction in [MoveDirection::Forward, MoveDirection::Backward] {
                let mv = Move { index, direction };
                let moved = f.elementary_move(mv).unwrap();
                if !moved
                    .total_monodromy()
                    .unwrap()
                    .equal_bounded(&total)
                    .unwrap()
                {
                    failures.push(format!("move {mv} changed the total monodromy"));
                }
                let back = moved.elementary_move(mv.inverse()).unwrap();
                if !same_factorization(&back, &f) {
                    failures.push(format!("move {mv} then its inverse is not the identity"));
                }
                checked += 1;
            }
        }
        if !failures.is_empty() {
            break;
        }
    }
    require(&mut failures, checked > 1000, "too few move checks ran");

    // Witness recovery: scramble by up to 4 moves, search at depth 6.
    for trial in 0..24 {
        let f = random_factorization(&table, &mut rng, 2);
        let count = rng.gen_range(1..=4);
        let mut g = f.clone();
        for _ in 0..count {
            let index = rng.gen_range(0..g.len() - 1);
            let direction = if rng.gen_bool(0.5) {
                MoveDirection::Forward
            } else {
                MoveDirection::Backward
            };
            g = g.elementary_move(Move { index, direction }).unwrap();
        }
        let outcome = hurwitz_equivalent_bounded(&table, &f, &g, 6, 0).unwrap();
        if outcome.status != SearchStatus::Equivalent {
            failures.push(format!("trial {trial}: scrambled input not recovered"));
            continue;
        }
        let mut replayed = f.apply_moves(&outcome.moves).unwrap();
        if let Some(h) = &outcome.conjugator {
            replayed = replayed.global_conjugate(h).unwrap();
        }
        if !same_factorization(&replayed, &g) {
            failures.push(format!("trial {trial}: witness does not replay to the target"));
        }
    }
    conclude(
        5,
        "Hurwitz move properties and bounded search",
        &failures,
        start,
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_6_table_self_validation() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let table = genus2();
    let report = table.validation_report();
    for kind in ["braid-", "commute-", "boundary-fixed-", "transvection-", "symplectic-"] {
        require(
            &mut failures,
            report.iter().any(|c| c.name.starts_with(kind)),
            &format!("no {kind}* checks present"),
        );
    }
    for c in &report {
        require(&mut failures, c.pass, &format!("table check {} failed", c.name));
    }

    // Negative control: flip one letter of t11 (b1 -> b1 a1 instead of
    // b1 a1^-1) and watch the suite catch it.
    let flipped = {
        let images = vec![
            Word::reduce(4, &[1]).unwrap(),
            Word::reduce(4, &[2, 1]).unwrap(),
            Word::reduce(4, &[3]).unwrap(),
            Word::reduce(4, &[4]).unwrap(),
        ];
        let inverses = vec![
            Word::reduce(4, &[1]).unwrap(),
            Word::reduce(4, &[2, -1]).unwrap(),
            Word::reduce(4, &[3]).unwrap(),
            Word::reduce(4, &[4]).unwrap(),
        ];
        FreeAutomorphism::new(4, images, inverses).unwrap()
    };
    let corrupted = table.with_replaced_automorphism("t11", flipped).unwrap();
    require(
        &mut failures,
        corrupted.validation_report().iter().any(|c| !c.pass),
        "corrupted table passed every check",
    );
    require(
        &mut failures,
        corrupted.validate().is_err(),
        "corrupted table validated",
    );
    conclude(
        6,
        "twist-table self-validation and negative control",
        &failures,
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_7_cycle_classification() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for s in 2..=10usize {
        for normalized in [false, true] {
            let d = build_ws(s, normalized).unwrap();
            let c = d.classify_cycles().unwrap();
            require(
                &mut failures,
                c.separating_count == 0,
                &format!("W_{s} (normalized={normalized}) reports separating cycles"),
            );
        }
    }

    // A synthetic descriptor with one commutator-class (separating)
    // cycle: one isolated fixed point on the total space.
    let d = SBLFDescriptor::new(
        2,
        vec![
            CycleSpec::new("[1,2,-1,-2]", Some("sep")),
            CycleSpec::new("c5", None),
        ],
        Some("c5".to_string()),
        true,
        false,
    )
    .unwrap();
    let c = d.classify_cycles().unwrap();
    require(&mut failures, c.separating_count == 1, "synthetic separating count != 1");
    let fpd = d.fixed_point_descriptor().unwrap();
    require(&mut failures, fpd.isolated_points == 1, "isolated fixed points != 1");
    conclude(
        7,
        "cycle classification and fixed points",
        &failures,
        start,
        Duration::from_secs(60),
    );
}

fn run_cli(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sblf"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(text) = stdin {
        use std::io::Write;
        child.stdin.as_mut().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().expect("binary exits")
}

fn random_class_expr(table: &ChainTwistTable, rng: &mut ChaCha8Rng) -> String {
    let names = table.twist_names();
    let syllables = rng.gen_range(1..=5);
    let mut parts: Vec<String> = Vec::new();
    let mut last = String::new();
    for _ in 0..syllables {
        let mut name = names[rng.gen_range(0..names.len())].to_string();
        while name == last {
            name = names[rng.gen_range(0..names.len())].to_string();
        }
        let e: i32 = *[-3, -2, -1, 1, 2, 3].get(rng.gen_range(0..6)).unwrap();
        parts.push(if e == 1 { name.clone() } else { format!("{name}^{e}") });
        last = name;
    }
    parts.join(" ")
}

fn random_curve_expr(table: &ChainTwistTable, rng: &mut ChaCha8Rng, depth: usize) -> String {
    let curves = table.curve_names();
    if depth == 0 || rng.gen_bool(0.4) {
        if rng.gen_bool(0.25) {
            let len = rng.gen_range(0..=4);
            let letters: Vec<String> = (0..len)
                .map(|_| {
                    let l = rng.gen_range(1..=4i32);
                    (if rng.gen_bool(0.5) { l } else { -l }).to_string()
                })
                .collect();
            format!("[{}]", letters.join(","))
        } else {
            curves[rng.gen_range(0..curves.len())].to_string()
        }
    } else {
        format!(
            "({})({})",
            random_class_expr(table, rng),
            random_curve_expr(table, rng, depth - 1)
        )
    }
}

#[test]
fn criterion_8_cli_and_grammar() {
    let start = Instant::now();
    let mut failures = Vec::new();

    // verify paper-lemmas: all checks pass, exit 0.
    let out = run_cli(&["verify", "paper-lemmas"], None);
    require(&mut failures, out.status.code() == Some(0), "verify exit code != 0");
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    require(&mut failures, report["suite"] == "paper-lemmas", "verify suite name");
    require(&mut failures, report["all_pass"] == true, "verify all_pass");

    // ws | invariants, plain and normalized.
    let ws = run_cli(&["ws", "--s", "6"], None);
    require(&mut failures, ws.status.code() == Some(0), "ws exit code != 0");
    let ws_json = String::from_utf8(ws.stdout).unwrap();
    let inv = run_cli(&["invariants", "-"], Some(&ws_json));
    let inv_json: serde_json::Value = serde_json::from_slice(&inv.stdout).unwrap();
    require(
        &mut failures,
        inv_json == serde_json::json!({"chi": 6, "h1": [0], "b2": 6}),
        "invariants of W_6",
    );
    let wsn = run_cli(&["ws", "--s", "6", "--normalized"], None);
    let wsn_json = String::from_utf8(wsn.stdout).unwrap();
    let invn = run_cli(&["invariants", "-"], Some(&wsn_json));
    let invn_json: serde_json::Value = serde_json::from_slice(&invn.stdout).unwrap();
    require(
        &mut failures,
        invn_json == serde_json::json!({"chi": 6, "h1": [], "b2": 4}),
        "invariants of normalized W_6",
    );

    // validate: pass (exit 0) on W_6, fail (exit 1) on a descriptor
    // whose total monodromy does not cap away.
    let ok = run_cli(&["validate", "-"], Some(&ws_json));
    require(&mut failures, ok.status.code() == Some(0), "validate W_6 exit code != 0");
    let bad = SBLFDescriptor::new(2, vec![CycleSpec::new("c2", None)], None, false, false)
        .unwrap()
        .to_json();
    let rejected = run_cli(&["validate", "-"], Some(&bad));
    require(
        &mut failures,
        rejected.status.code() == Some(1),
        "validate invalid descriptor exit code != 1",
    );

    // mcg equal: braid relation holds (exit 0), distinct pair exits 1.
    let eq = run_cli(&["mcg", "equal", "t4 t5 t4", "t5 t4 t5"], None);
    require(&mut failures, eq.status.code() == Some(0), "mcg equal braid exit code != 0");
    let ne = run_cli(&["mcg", "equal", "t4", "t5"], None);
    require(&mut failures, ne.status.code() == Some(1), "mcg equal distinct exit code != 1");

    // Usage and data errors.
    let usage = run_cli(&["no-such-command"], None);
    require(&mut failures, usage.status.code() == Some(64), "usage error exit code != 64");
    let data = run_cli(&["validate", "-"], Some("this is not json"));
    require(&mut failures, data.status.code() == Some(65), "data error exit code != 65");

    // Parser round-trip over 500 random well-formed expressions.
    let table = genus2();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5b1f_0008);
    for i in 0..250 {
        let s = random_class_expr(&table, &mut rng);
        let parsed = parse_class_expr(&table, &s).unwrap();
        let reparsed = parse_class_expr(&table, &print_class_expr(&parsed)).unwrap();
        require(&mut failures, parsed == reparsed, &format!("class round-trip {i}: `{s}`"));
    }
    for i in 0..250 {
        let s = random_curve_expr(&table, &mut rng, 2);
        let parsed: CurveExpr = parse_curve_expr(&table, &s).unwrap();
        let reparsed = parse_curve_expr(&table, &print_curve_expr(&parsed)).unwrap();
        require(&mut failures, parsed == reparsed, &format!("curve round-trip {i}: `{s}`"));
    }
    conclude(
        8,
        "command-line interface and expression grammar",
        &failures,
        start,
        Duration::from_secs(120),
    );
}
