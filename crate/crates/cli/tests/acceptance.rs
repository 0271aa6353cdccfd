//! Acceptance suite. Prints one PASS/FAIL line per criterion, with details
//! for failed sub-checks. Exits nonzero unless every failure is listed in
//! `KNOWN_UNATTAINABLE` and the independent oracle confirms the computed value.

use std::process::Command;
use std::time::{Duration, Instant};

use bounded_subseq::oracles::{
    oracle_min_rep, oracle_ov, oracle_p_match, oracle_partial_words, oracle_pmas,
};
use bounded_subseq::reductions::{
    kp_non_univ_to_kp_non_equiv, match_to_pmas, match_to_pmas_stream, ov_to_match,
    partial_words_to_kp_non_univ, psas_instance_from_partial_words, PartialWordSet,
};
use bounded_subseq::{
    best_iterated_circular_match, circular_match, is_pmas, is_psas, iterated_circular_match,
    iterated_circular_match_from, kp_non_equivalent, kp_non_universal, minimal_representation,
    p_subsequence_match, Cell, KpGadget, OvInstance, PartialWord, Payload, SearchConfig, Symbol,
    Word,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Sub-checks expected to fail, with the reason printed next to them.
const KNOWN_UNATTAINABLE: &[(&str, &str)] = &[(
    "golden aababaababaa",
    "(ababa)^(12/5) has seven a's, the input has eight; the brute-force oracle also returns (aabab, 12)",
)];

struct Check {
    name: String,
    ok: bool,
    detail: String,
}

struct Criterion {
    id: u32,
    title: &'static str,
    checks: Vec<Check>,
    elapsed: Duration,
}

fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        ok,
        detail: detail.into(),
    }
}

fn all_words(n: usize, sigma: u32) -> impl Iterator<Item = Word> {
    let total = (sigma as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        let mut s = vec![0; n];
        for x in s.iter_mut().rev() {
            *x = (code % sigma as u64) as Symbol + 1;
            code /= sigma as u64;
        }
        Word::new(s, sigma).unwrap()
    })
}

fn random_word(rng: &mut StdRng, n: usize, sigma: u32) -> Word {
    Word::new((0..n).map(|_| rng.gen_range(1..=sigma)).collect(), sigma).unwrap()
}

fn letters(s: &str) -> Word {
    Word::from_letters(s)
}

fn criterion_1() -> Vec<Check> {
    let mut cases = 0u64;
    let mut bad = Vec::new();
    for n in 0..=12 {
        for w in all_words(n, 2) {
            for m in 0..=4.min(n) {
                for u in all_words(m, 2) {
                    for p in m..=n {
                        cases += 1;
                        if p_subsequence_match(&u, &w, p) != oracle_p_match(&u, &w, p).unwrap() {
                            bad.push(format!("u={u:?} w={w:?} p={p}"));
                        }
                    }
                }
            }
        }
    }
    let exhaustive = check(
        "exhaustive σ=2, n≤12, m≤4",
        bad.is_empty(),
        format!(
            "{cases} cases, {} disagreements {:?}",
            bad.len(),
            bad.iter().take(3).collect::<Vec<_>>()
        ),
    );
    let mut rng = StdRng::seed_from_u64(1);
    let mut bad = Vec::new();
    for _ in 0..10_000 {
        let sigma = rng.gen_range(1..=4);
        let n = rng.gen_range(0..=200);
        let m = rng.gen_range(0..=6.min(n));
        let w = random_word(&mut rng, n, sigma);
        let u = random_word(&mut rng, m, sigma);
        let p = rng.gen_range(m..=n + 2);
        if p_subsequence_match(&u, &w, p) != oracle_p_match(&u, &w, p).unwrap() {
            bad.push(format!("u={u:?} w={w:?} p={p}"));
        }
    }
    let random = check(
        "10^4 random, n≤200, σ≤4",
        bad.is_empty(),
        format!("{} disagreements {:?}", bad.len(), bad.first()),
    );
    vec![exhaustive, random]
}

fn criterion_2() -> Vec<Check> {
    let mut cases = 0u64;
    let mut positives = 0u64;
    let mut bad = Vec::new();
    for n in 0..=10 {
        for w in all_words(n, 2) {
            for m in 1..=4 {
                for v in all_words(m, 2) {
                    for p in 1..=n.max(1) {
                        cases += 1;
                        let expect = oracle_pmas(&v, &w, p);
                        positives += expect as u64;
                        if is_pmas(&v, &w, p) != expect {
                            bad.push(format!("v={v:?} w={w:?} p={p}"));
                        }
                    }
                }
            }
        }
    }
    let exhaustive = check(
        "exhaustive σ=2, n≤10, m≤4",
        bad.is_empty(),
        format!(
            "{cases} cases ({positives} pMAS), {} disagreements {:?}",
            bad.len(),
            bad.first()
        ),
    );
    let mut rng = StdRng::seed_from_u64(2);
    let mut bad = Vec::new();
    let mut positives = 0;
    for _ in 0..10_000 {
        let sigma = rng.gen_range(1..=3);
        let n = rng.gen_range(0..=60);
        let m = rng.gen_range(1..=5);
        let w = random_word(&mut rng, n, sigma);
        let v = random_word(&mut rng, m, sigma);
        let p = rng.gen_range(1..=n.max(1));
        let expect = oracle_pmas(&v, &w, p);
        positives += expect as u32;
        if is_pmas(&v, &w, p) != expect {
            bad.push(format!("v={v:?} w={w:?} p={p}"));
        }
    }
    let random = check(
        "10^4 random, n≤60, σ≤3",
        bad.is_empty(),
        format!(
            "{positives} pMAS, {} disagreements {:?}",
            bad.len(),
            bad.first()
        ),
    );
    vec![exhaustive, random]
}

fn criterion_3() -> Vec<Check> {
    let mut rng = StdRng::seed_from_u64(3);
    let mut bad = Vec::new();
    let mut sizes_ok = true;
    let mut yes = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=8);
        let d = rng.gen_range(1..=6);
        let density = rng.gen_range(0.2..0.8);
        let mut set = || -> Vec<Vec<bool>> {
            (0..n)
                .map(|_| (0..d).map(|_| rng.gen_bool(density)).collect())
                .collect()
        };
        let inst = OvInstance::new(set(), set()).unwrap();
        let red = ov_to_match(&inst).unwrap();
        let Payload::Match(mi) = &red.payload else {
            unreachable!()
        };
        sizes_ok &= red.size_checks.iter().all(|c| c.holds())
            && mi.window == (2 * n + 3) * (3 * d + 2)
            && mi.pattern.len() == (n + 2) * (2 * d + 2)
            && mi.text.len() == 2 * mi.window;
        let expect = oracle_ov(&inst);
        yes += expect as u32;
        if p_subsequence_match(&mi.pattern, &mi.text, mi.window).found != expect {
            bad.push(format!("{inst:?}"));
        }
    }
    vec![
        check(
            "500 random, n≤8, d≤6",
            bad.is_empty(),
            format!("{yes} orthogonal, {} disagreements", bad.len()),
        ),
        check("|W|=(2n+3)(3d+2), |U|=(n+2)(2d+2)", sizes_ok, ""),
    ]
}

fn partial_word_round_trip(s: &PartialWordSet, bad: &mut Vec<String>) {
    let expect = oracle_partial_words(&s.words, s.len, 1 << 20)
        .unwrap()
        .is_some();
    let cfg = SearchConfig::default();
    let univ = partial_words_to_kp_non_univ(s, KpGadget::Sound).unwrap();
    let Payload::NonUniv { text, k, p } = &univ.payload else {
        unreachable!()
    };
    let got = kp_non_universal(text, *k, *p, &cfg).unwrap().answer();
    if got != expect {
        bad.push(format!("nonuniv {s:?}: {got} vs {expect}"));
    }
    let equiv = kp_non_univ_to_kp_non_equiv(s, KpGadget::Sound).unwrap();
    let Payload::NonEquiv { text, other, k, p } = &equiv.payload else {
        unreachable!()
    };
    let got = kp_non_equivalent(text, other, *k, *p, &cfg)
        .unwrap()
        .answer();
    if got != expect {
        bad.push(format!("nonequiv {s:?}: {got} vs {expect}"));
    }
    let psas = psas_instance_from_partial_words(s, KpGadget::Sound).unwrap();
    let Payload::Psas { pattern, text, p } = &psas.payload else {
        unreachable!()
    };
    let got = is_psas(pattern, text, *p).unwrap();
    if got != !expect {
        bad.push(format!("psas {s:?}: {got} vs {}", !expect));
    }
    for r in [&univ, &equiv, &psas] {
        if !r.size_checks.iter().all(|c| c.holds()) {
            bad.push(format!("size check {s:?}"));
        }
    }
}

fn criterion_4() -> Vec<Check> {
    let cells = [Cell::Zero, Cell::One, Cell::Wildcard];
    let l2: Vec<PartialWord> = cells
        .iter()
        .flat_map(|&a| cells.iter().map(move |&b| PartialWord::new(vec![a, b])))
        .collect();
    let mut sets = vec![vec![]];
    for (i, a) in l2.iter().enumerate() {
        sets.push(vec![a.clone()]);
        for b in &l2[i + 1..] {
            sets.push(vec![a.clone(), b.clone()]);
        }
    }
    let mut bad = Vec::new();
    for words in &sets {
        partial_word_round_trip(&PartialWordSet::new(2, words.clone()).unwrap(), &mut bad);
    }
    let exhaustive = check(
        "exhaustive L=2, |S|≤2",
        bad.is_empty(),
        format!(
            "{} sets, {} disagreements {:?}",
            sets.len(),
            bad.len(),
            bad.first()
        ),
    );
    let mut rng = StdRng::seed_from_u64(4);
    let mut bad = Vec::new();
    let samples = 200;
    for _ in 0..samples {
        let size = rng.gen_range(1..=4);
        let words = (0..size)
            .map(|_| PartialWord::new((0..3).map(|_| cells[rng.gen_range(0..3)]).collect()))
            .collect();
        partial_word_round_trip(&PartialWordSet::new(3, words).unwrap(), &mut bad);
    }
    let sampled = check(
        "sampled L=3",
        bad.is_empty(),
        format!(
            "{samples} sets, {} disagreements {:?}",
            bad.len(),
            bad.first()
        ),
    );
    vec![exhaustive, sampled]
}

fn criterion_5() -> Vec<Check> {
    let mut cases = 0u64;
    let mut bad12 = Vec::new();
    let mut bad19 = Vec::new();
    for n in 1..=8 {
        for w in all_words(n, 2) {
            for m in 1..=3.min(n) {
                for u in all_words(m, 2) {
                    for p in m..=n {
                        cases += 1;
                        let occurs = oracle_p_match(&u, &w, p).unwrap().found;
                        let r = match_to_pmas(&u, &w, p).unwrap();
                        let Payload::Pmas {
                            pattern,
                            text,
                            p: q,
                        } = &r.payload
                        else {
                            unreachable!()
                        };
                        if is_pmas(pattern, text, *q) == occurs {
                            bad12.push(format!("u={u:?} w={w:?} p0={p}"));
                        }
                        let r = match_to_pmas_stream(&u, &w, p).unwrap();
                        let Payload::Pmas {
                            pattern,
                            text,
                            p: q,
                        } = &r.payload
                        else {
                            unreachable!()
                        };
                        if is_pmas(pattern, text, *q) != !occurs {
                            bad19.push(format!("u={u:?} w={w:?} p={p}"));
                        }
                    }
                }
            }
        }
    }
    vec![
        check(
            "u ≤p₀ w ⇔ ¬pMAS (windowed construction)",
            bad12.is_empty(),
            format!(
                "{cases} cases, {} disagreements {:?}",
                bad12.len(),
                bad12.first()
            ),
        ),
        check(
            "u p-absent ⇔ pMAS (streaming construction)",
            bad19.is_empty(),
            format!(
                "{cases} cases, {} disagreements {:?}",
                bad19.len(),
                bad19.first()
            ),
        ),
    ]
}

fn criterion_6() -> Vec<Check> {
    let mut checks = Vec::new();
    for (w, root, n) in [("baaba", "ab", 5), ("aababaababaa", "ababa", 12)] {
        let r = minimal_representation(&letters(w)).unwrap();
        let o = oracle_min_rep(&letters(w)).unwrap();
        let got = (r.root.to_letters(), r.total_len);
        checks.push(check(
            format!("golden {w}"),
            got == (root.to_string(), n),
            format!(
                "expected ({root}, {n}), got ({}, {}), oracle ({}, {})",
                got.0,
                got.1,
                o.root.to_letters(),
                o.total_len
            ),
        ));
    }
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in 1..=12 {
        for w in all_words(n, 2) {
            cases += 1;
            if minimal_representation(&w).unwrap() != oracle_min_rep(&w).unwrap() {
                bad.push(format!("{w:?}"));
            }
        }
    }
    checks.push(check(
        "oracle equivalence σ=2, n≤12",
        bad.is_empty(),
        format!(
            "{cases} words, {} disagreements {:?}",
            bad.len(),
            bad.first()
        ),
    ));
    let mut rng = StdRng::seed_from_u64(6);
    let mut bad = Vec::new();
    for _ in 0..1000 {
        let sigma = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=40);
        // periodic words make the check meaningful
        let q = rng.gen_range(1..=n);
        let base = random_word(&mut rng, q, sigma);
        let w = Word::new((0..n).map(|i| base.symbols()[i % q]).collect(), sigma).unwrap();
        let r = minimal_representation(&w).unwrap();
        let s = minimal_representation(&w.rotation(rng.gen_range(1..=n))).unwrap();
        if (r.root.clone(), r.total_len) != (s.root.clone(), s.total_len)
            || r.expand() != w.rotation(r.rotation_offset)
        {
            bad.push(format!("{w:?}"));
        }
    }
    checks.push(check(
        "rotation invariance, 10^3 random",
        bad.is_empty(),
        format!("{} disagreements {:?}", bad.len(), bad.first()),
    ));
    checks
}

fn criterion_7() -> Vec<Check> {
    let (v, w) = (letters("ca"), letters("ababcc"));
    let from_start = iterated_circular_match_from(&v, &w, 1).unwrap();
    let canonical = iterated_circular_match(&v, &w).unwrap();
    let best = best_iterated_circular_match(&v, &w, 1).unwrap();
    vec![
        check("circular_match(ca, ababcc)", circular_match(&v, &w), ""),
        check(
            "iterated ℓ = 2 reading ababcc from its first letter",
            from_start == Some(2),
            format!("got {from_start:?}; from the minimal rotation abccab: {canonical:?}"),
        ),
        check(
            "best ℓ = 1",
            best.map(|b| b.0) == Some(1),
            format!("got {best:?}"),
        ),
    ]
}

fn criterion_8() -> Vec<Check> {
    let mut rng = StdRng::seed_from_u64(8);
    let (n, m) = (1_000_000, 1_000);
    let u = random_word(&mut rng, m, 4);
    let w1 = random_word(&mut rng, n, 4);
    let w2 = random_word(&mut rng, 2 * n, 4);
    let time = |w: &Word| {
        let start = Instant::now();
        std::hint::black_box(p_subsequence_match(&u, w, w.len() / 2));
        start.elapsed()
    };
    let runs = 5;
    let (mut t1, mut t2) = (Duration::ZERO, Duration::ZERO);
    let mut worst = Duration::ZERO;
    for _ in 0..runs {
        let a = time(&w1);
        worst = worst.max(a);
        t1 += a;
        t2 += time(&w2);
    }
    let ratio = t2.as_secs_f64() / t1.as_secs_f64();
    vec![
        check(
            "n=10^6, m=10^3, σ=4 under 10 s",
            worst < Duration::from_secs(10),
            format!("slowest run {:.2} s", worst.as_secs_f64()),
        ),
        check(
            "doubling n scales time by [1.5, 3.0]",
            (1.5..=3.0).contains(&ratio),
            format!(
                "mean {:.2} s vs {:.2} s over {runs} runs, ratio {ratio:.2}",
                t1.as_secs_f64() / runs as f64,
                t2.as_secs_f64() / runs as f64
            ),
        ),
    ]
}

/// Decides non-universality by testing every word of length `k` with the
/// window oracle.
fn naive_non_universal(w: &Word, k: usize, p: usize) -> bool {
    all_words(k, w.alphabet_size()).any(|x| !oracle_p_match(&x, w, p).unwrap().found)
}

fn naive_non_equivalent(w: &Word, v: &Word, k: usize, p: usize) -> bool {
    let sigma = w.alphabet_size().max(v.alphabet_size());
    let (w, v) = (
        w.with_alphabet(sigma).unwrap(),
        v.with_alphabet(sigma).unwrap(),
    );
    all_words(k, sigma).any(|x| {
        oracle_p_match(&x, &w, p).unwrap().found != oracle_p_match(&x, &v, p).unwrap().found
    })
}

fn bsub(dir: &std::path::Path, args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bsub"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("bsub runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn criterion_9() -> Vec<Check> {
    let mut checks = Vec::new();
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("w.txt"), "abc".repeat(10) + "\n").unwrap();
    std::fs::write(dir.path().join("v.txt"), "cba".repeat(10) + "\n").unwrap();
    std::fs::write(dir.path().join("s.txt"), "aaaaaaaaa\n").unwrap();
    let over = [
        (
            "nonuniv",
            vec![
                "--budget", "1000", "nonuniv", "w.txt", "--k", "8", "--p", "30",
            ],
        ),
        (
            "nonequiv",
            vec![
                "--budget", "1000", "nonequiv", "w.txt", "v.txt", "--k", "7", "--p", "12",
            ],
        ),
        (
            "psas",
            vec!["--budget", "1000", "psas", "s.txt", "w.txt", "--p", "30"],
        ),
    ];
    for (name, args) in over {
        let (code, out, err) = bsub(dir.path(), &args);
        checks.push(check(
            format!("{name} over budget exits 2"),
            code == 2 && out.is_empty() && err.contains("budget exceeded"),
            format!("exit {code}, stderr {:?}", err.trim()),
        ));
    }

    let mut rng = StdRng::seed_from_u64(9);
    let mut bad = Vec::new();
    let mut cases = 0;
    for _ in 0..300 {
        let sigma = rng.gen_range(1..=3);
        let n = rng.gen_range(0..=14);
        let k = rng.gen_range(0..=4);
        let p = rng.gen_range(1..=n.max(1) + 1);
        let w = random_word(&mut rng, n, sigma);
        let (vn, vs) = (rng.gen_range(0..=14), rng.gen_range(1..=3));
        let v = random_word(&mut rng, vn, vs);
        let cfg = SearchConfig::default();
        cases += 1;
        if kp_non_universal(&w, k, p, &cfg).unwrap().answer() != naive_non_universal(&w, k, p) {
            bad.push(format!("nonuniv w={w:?} k={k} p={p}"));
        }
        if kp_non_equivalent(&w, &v, k, p, &cfg).unwrap().answer()
            != naive_non_equivalent(&w, &v, k, p)
        {
            bad.push(format!("nonequiv w={w:?} v={v:?} k={k} p={p}"));
        }
        let tight = SearchConfig {
            budget: (sigma as u128).pow(k as u32),
            threads: 2,
        };
        if kp_non_universal(&w, k, p, &tight).unwrap().answer() != naive_non_universal(&w, k, p) {
            bad.push(format!("nonuniv at exact budget w={w:?} k={k} p={p}"));
        }
    }
    checks.push(check(
        "library deciders match the naive decider within budget",
        bad.is_empty(),
        format!(
            "{cases} cases, {} disagreements {:?}",
            bad.len(),
            bad.first()
        ),
    ));

    let mut bad = Vec::new();
    for _ in 0..40 {
        let sigma: u32 = rng.gen_range(2..=3);
        let n = rng.gen_range(sigma as usize * 2..=12);
        let k = 2;
        let p = rng.gen_range(2..=n);
        let w = random_word(&mut rng, n, sigma);
        // ascii ids follow byte order, which matches the ids once every letter occurs
        if w.alph().len() != sigma as usize {
            continue;
        }
        let text = w.to_letters();
        std::fs::write(dir.path().join("r.txt"), format!("{text}\n")).unwrap();
        let expect = naive_non_universal(&w, k, p);
        let budget = sigma.pow(k as u32).to_string();
        let (code, _, err) = bsub(
            dir.path(),
            &[
                "--budget",
                &budget,
                "nonuniv",
                "r.txt",
                "--k",
                "2",
                "--p",
                &p.to_string(),
            ],
        );
        if code != if expect { 0 } else { 1 } {
            bad.push(format!("{text} p={p}: exit {code} {err}"));
        }
    }
    checks.push(check(
        "CLI exit codes match the naive decider within budget",
        bad.is_empty(),
        format!("{} disagreements {:?}", bad.len(), bad.first()),
    ));
    checks
}

fn main() {
    type Run = fn() -> Vec<Check>;
    let plan: [(u32, &str, Run); 9] = [
        (1, "matcher agrees with the window oracle", criterion_1),
        (2, "pMAS scanner agrees with the oracle", criterion_2),
        (3, "orthogonal vectors round trip", criterion_3),
        (4, "partial-word round trips", criterion_4),
        (5, "pMAS round trips from matching", criterion_5),
        (6, "minimal representation", criterion_6),
        (7, "circular examples", criterion_7),
        (8, "matcher performance", criterion_8),
        (9, "budgeted brute-force deciders", criterion_9),
    ];
    let mut results = Vec::new();
    for (id, title, f) in plan {
        let start = Instant::now();
        let checks = f();
        results.push(Criterion {
            id,
            title,
            checks,
            elapsed: start.elapsed(),
        });
    }
    let mut unexpected = 0;
    println!();
    for c in &results {
        let pass = c.checks.iter().all(|x| x.ok);
        println!(
            "{} {}. {} ({:.1} s)",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            c.elapsed.as_secs_f64()
        );
        for x in &c.checks {
            let known = KNOWN_UNATTAINABLE.iter().find(|(n, _)| *n == x.name);
            let mark = match (x.ok, known) {
                (true, _) => "ok",
                (false, Some(_)) => "FAIL (known)",
                (false, None) => {
                    unexpected += 1;
                    "FAIL"
                }
            };
            println!("    [{mark}] {}: {}", x.name, x.detail);
            if let (false, Some((_, why))) = (x.ok, known) {
                println!("        {why}");
            }
        }
    }
    // a known failure is tolerated only while the oracle backs the computed value
    let oracle = oracle_min_rep(&letters("aababaababaa")).unwrap();
    let fast = minimal_representation(&letters("aababaababaa")).unwrap();
    if oracle != fast {
        unexpected += 1;
        println!("oracle and fast minimal representation disagree on aababaababaa");
    }
    println!();
    if unexpected > 0 {
        println!("{unexpected} unexpected failures");
        std::process::exit(1);
    }
}
