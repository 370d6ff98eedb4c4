//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Everything is exact integer arithmetic; there are no numeric tolerances,
//! only budgets on wall-clock time for the full sweeps.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bigmcg::atlas::{default_atlas, CurveAtlas};
use bigmcg::builtin::builtin_script;
use bigmcg::ends::{factorial, perm_of, subgroup_closure};
use bigmcg::engine::{evaluate_curve, word_matrix};
use bigmcg::lattice::transvection;
use bigmcg::script::{run_script, Step, StepStatus, VerificationReport};
use bigmcg::surface::{CurveName, SurfaceConfig};
use bigmcg::word::{parse_word, GeneratorToken, MappingWord, TokenKind};
use bigmcg::HomologyClass;

const DEPTH: u32 = 6;

fn cfg(n: u32) -> SurfaceConfig {
    SurfaceConfig::new(n, DEPTH).unwrap()
}

fn atlas(n: u32) -> CurveAtlas {
    default_atlas(&cfg(n)).unwrap()
}

fn outcome(name: &str, ok: bool) {
    println!("ACCEPTANCE {name}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "acceptance criterion failed: {name}");
}

fn replay(id: &str, n: u32) -> VerificationReport {
    let cfg = cfg(n);
    let script = builtin_script(id, &cfg).expect("known script");
    run_script(&script, &atlas(n)).expect("script applicable")
}

#[test]
fn criterion_1_atlas_validation() {
    let mut ok = true;
    for n in 3..=8 {
        let started = Instant::now();
        let atlas = default_atlas(&cfg(n));
        let elapsed = started.elapsed();
        ok &= atlas.is_ok();
        ok &= elapsed < Duration::from_secs(1);
        println!(
            "  atlas n={n}: {} in {elapsed:?}",
            if atlas.is_ok() { "valid" } else { "INVALID" }
        );
    }
    outcome("1 atlas validation n=3..8", ok);
}

#[test]
fn criterion_2_generator_sanity() {
    let mut ok = true;
    for n in 3..=8 {
        let cfg = cfg(n);
        let atlas = atlas(n);
        let m = |text: &str| word_matrix(&parse_word(text).unwrap(), &atlas).unwrap();
        for gen in ["rho1", "rho2", "tau1", "tau2"] {
            let sq = m(&format!("{gen}*{gen}"));
            ok &= sq.is_total() && sq.is_identity_on_domain();
        }
        let rn = m(&format!("R^{n}"));
        ok &= rn.is_total() && rn.is_identity_on_domain();

        let taus = m("tau1*tau2");
        let h = m("h[1]");
        for v in h.domain() {
            ok &= taus.col(v) == h.col(v);
        }

        let r_ends = perm_of(&parse_word("R").unwrap(), &cfg);
        for i in 1..=n {
            ok &= r_ends.map(i) == i % n + 1;
        }
        let t_ends = perm_of(&parse_word("tau1").unwrap(), &cfg);
        ok &= t_ends.map(1) == 2 && t_ends.map(2) == 1;
        for i in 3..=n {
            ok &= t_ends.map(i) == i;
        }
    }
    outcome("2 generator sanity (exact)", ok);
}

#[test]
fn criterion_3_lem33() {
    let mut ok = true;
    for n in [3, 4, 5, 7] {
        let report = replay("lem33", n);
        ok &= report.passed;
        if n == 3 {
            // The special branch must actually be exercised.
            ok &= report.steps.iter().any(|s| s.name.as_deref() == Some("Q3A"));
        }
        println!("  lem33 n={n}: {}", if report.passed { "pass" } else { "fail" });
    }
    outcome("3 lem33 for n in {3,4,5,7} incl. n=3 branch", ok);
}

#[test]
fn criterion_4_lem44_lantern_and_d_curves() {
    let mut ok = true;
    for n in [3, 5] {
        let report = replay("lem44", n);
        ok &= report.passed;
        let step_passed = |name: &str| {
            report
                .steps
                .iter()
                .any(|s| s.name.as_deref() == Some(name) && s.status == StepStatus::Pass)
        };
        ok &= report
            .steps
            .iter()
            .any(|s| s.kind == "relation" && s.cite.contains("lantern") && s.status == StepStatus::Pass);
        ok &= step_passed("S9") && step_passed("S12");
        println!("  lem44 n={n}: {}", if report.passed { "pass" } else { "fail" });
    }

    // Cross-validate the lantern interior classes against the image oracle
    // directly: the conjugating words must carry b_2 to d_1 and d_1 to d_2.
    let atlas = atlas(5);
    let w1 = parse_word(
        "B[2,2]*inv(A[2,1])*C[2,1]*inv(A[2,1])*A[2,1]*inv(A[2,2])*C[2,2]*inv(A[2,1])",
    )
    .unwrap();
    let d1 = evaluate_curve(&w1, &"b[2,2]".parse().unwrap(), &atlas).unwrap();
    ok &= d1.eq_up_to_sign(atlas.class(&"d[1]".parse::<CurveName>().unwrap()).unwrap());
    let w2 = parse_word(
        "B[2,3]*inv(A[2,1])*C[2,2]*inv(A[2,1])*A[2,3]*inv(A[2,1])*B[2,3]*inv(A[2,1])",
    )
    .unwrap();
    let d2 = evaluate_curve(&w2, &"d[1]".parse().unwrap(), &atlas).unwrap();
    ok &= d2.eq_up_to_sign(atlas.class(&"d[2]".parse::<CurveName>().unwrap()).unwrap());

    // The lantern itself, as an exact matrix identity with no sign slack.
    let lhs = word_matrix(&parse_word("A[2,1]*C[2,1]*C[2,2]*A[2,3]").unwrap(), &atlas).unwrap();
    let rhs = word_matrix(&parse_word("A[2,2]*D[1]*D[2]").unwrap(), &atlas).unwrap();
    ok &= lhs == rhs;

    outcome("4 lem44 for n in {3,5}, lantern exact, d-curves cross-validated", ok);
}

#[test]
fn criterion_5_remaining_scripts() {
    let mut ok = true;
    for (id, ns) in [
        ("lem4", vec![7, 8]),
        ("lem5", vec![6]),
        ("lem6", vec![3, 4, 5]),
        ("lemthm", vec![3, 6]),
    ] {
        for n in ns {
            let report = replay(id, n);
            ok &= report.passed;
            println!("  {id} n={n}: {}", if report.passed { "pass" } else { "fail" });
        }
    }

    // The two routes to C_1 inv(C_2) at n = 6 must agree on the same target.
    let lem5 = replay("lem5", 6);
    let lem6 = replay("lem6", 6);
    let route = |r: &VerificationReport| {
        r.targets
            .iter()
            .find(|(name, _)| name == "CC12")
            .map(|(_, word)| word.clone())
            .expect("CC12 target")
    };
    let (w5, w6) = (route(&lem5), route(&lem6));
    ok &= w5 == w6;
    let atlas6 = atlas(6);
    let m5 = word_matrix(&parse_word(&w5).unwrap(), &atlas6).unwrap();
    let m6 = word_matrix(&parse_word(&w6).unwrap(), &atlas6).unwrap();
    ok &= m5 == m6;

    outcome("5 lem4 {7,8}, lem5 {6}, lem6 {3,4,5}, lemthm {3,6}, dual route", ok);
}

#[test]
fn criterion_6_involution_suite() {
    let mut ok = true;

    let check_involution = |atlas: &CurveAtlas, text: &str| -> bool {
        let w = parse_word(text).unwrap();
        let sq = word_matrix(&w.compose(&w), atlas).unwrap();
        let id_on_homology = sq.is_identity_on_domain();
        let p = perm_of(&w, atlas.cfg());
        id_on_homology && p.compose(&p).is_identity()
    };
    let check_images = |atlas: &CurveAtlas, word: &str, pairs: &[(&str, &str)]| -> bool {
        let w = parse_word(word).unwrap();
        pairs.iter().all(|(from, to)| {
            let img = evaluate_curve(&w, &from.parse().unwrap(), atlas).unwrap();
            img.eq_up_to_sign(atlas.class(&to.parse::<CurveName>().unwrap()).unwrap())
        })
    };

    // Five involutions for n >= 7.
    for n in [7, 8] {
        let atlas = atlas(n);
        let composite = "rho3*A[1,1]*C0[1]*B[3,1]*inv(B[5,1])*inv(C0[6])*inv(A'[7,1])";
        for w in ["rho1", "rho2", "tau1", "tau2", composite] {
            ok &= check_involution(&atlas, w);
        }
        ok &= check_images(
            &atlas,
            "rho3",
            &[("a[1,1]", "a'[7,1]"), ("c0[1]", "c0[6]"), ("b[3,1]", "b[5,1]")],
        );
    }

    // Five involutions for n = 6.
    {
        let atlas = atlas(6);
        let composite = "rho2*A[1,1]*C0[1]*B[3,1]*inv(B[4,1])*inv(C0[5])*inv(A'[6,1])";
        for w in ["rho1", "rho2", "tau1", "tau2", composite] {
            ok &= check_involution(&atlas, w);
        }
        ok &= check_images(
            &atlas,
            "rho2",
            &[("a[1,1]", "a'[6,1]"), ("c0[1]", "c0[5]"), ("b[3,1]", "b[4,1]")],
        );
    }

    // Six involutions for n >= 3.
    for n in 3..=8 {
        let atlas = atlas(n);
        let w4 = "rho4*B[1,1]*C0[1]*inv(C0[2])*inv(B[3,1])";
        let w5 = "rho5*A[1,1]*inv(A'[2,1])";
        for w in ["rho1", "rho2", "tau1", "tau2", w4, w5] {
            ok &= check_involution(&atlas, w);
        }
        ok &= check_images(&atlas, "rho4", &[("b[1,1]", "b[3,1]"), ("c0[1]", "c0[2]")]);
        ok &= check_images(&atlas, "rho5", &[("a[1,1]", "a'[2,1]")]);
    }

    // The main scripts package the same checks; they must all pass too.
    for (id, ns) in [("main-n7", vec![7, 8]), ("main-n6", vec![6]), ("main-n3", vec![3, 4, 5, 6, 7, 8])] {
        for n in ns {
            ok &= replay(id, n).passed;
        }
    }

    outcome("6 involution suites (homology window + ends)", ok);
}

#[test]
fn criterion_7_symmetric_group_closure() {
    let expected = [6usize, 24, 120, 720, 5040, 40320];
    let started = Instant::now();
    let mut ok = true;
    for n in 3..=8u32 {
        let cfg = cfg(n);
        let generating_set: Vec<&str> = if n >= 7 {
            vec![
                "rho1",
                "rho2",
                "rho3*A[1,1]*C0[1]*B[3,1]*inv(B[5,1])*inv(C0[6])*inv(A'[7,1])",
                "tau1",
                "tau2",
            ]
        } else if n == 6 {
            vec![
                "rho1",
                "rho2",
                "rho2*A[1,1]*C0[1]*B[3,1]*inv(B[4,1])*inv(C0[5])*inv(A'[6,1])",
                "tau1",
                "tau2",
            ]
        } else {
            vec![
                "rho1",
                "rho2",
                "rho4*B[1,1]*C0[1]*inv(C0[2])*inv(B[3,1])",
                "rho5*A[1,1]*inv(A'[2,1])",
                "tau1",
                "tau2",
            ]
        };
        let perms: Vec<_> = generating_set
            .iter()
            .map(|t| perm_of(&parse_word(t).unwrap(), &cfg))
            .collect();
        let closure = subgroup_closure(&perms, n).unwrap();
        let want = expected[(n - 3) as usize];
        ok &= closure.order() == want && factorial(n) == want;
        println!("  closure n={n}: order {} (want {want})", closure.order());
    }
    let elapsed = started.elapsed();
    ok &= elapsed < Duration::from_secs(5);
    println!("  total closure time {elapsed:?}");
    outcome("7 symmetric group closure n=3..8", ok);
}

/// Random total word over twists and rotations (no shifts), for matrix laws.
fn random_total_word(rng: &mut ChaCha8Rng, atlas: &CurveAtlas, len: usize) -> MappingWord {
    let curves: Vec<CurveName> = atlas.curves().map(|(n, _)| *n).collect();
    let mut tokens = Vec::with_capacity(len);
    for _ in 0..len {
        let kind = match rng.gen_range(0..6) {
            0..=2 => TokenKind::Twist(curves[rng.gen_range(0..curves.len())]),
            3 => TokenKind::Rho1,
            4 => TokenKind::Rho2,
            _ => [TokenKind::Tau1, TokenKind::Tau2][rng.gen_range(0..2)],
        };
        tokens.push(GeneratorToken { kind, inverse: rng.gen_bool(0.5) });
    }
    MappingWord::from_tokens(tokens)
}

/// Random word that may include handle shifts and planted cancellations.
fn random_word_with_shifts(rng: &mut ChaCha8Rng, atlas: &CurveAtlas, len: usize) -> MappingWord {
    let cfg = atlas.cfg();
    let curves: Vec<CurveName> = atlas.curves().map(|(n, _)| *n).collect();
    let mut tokens = Vec::with_capacity(len + 4);
    for _ in 0..len {
        let kind = match rng.gen_range(0..7) {
            0..=1 => TokenKind::Twist(curves[rng.gen_range(0..curves.len())]),
            2 => TokenKind::Rho1,
            3 => TokenKind::Rho2,
            4 => TokenKind::Tau1,
            5 => TokenKind::Tau2,
            _ => TokenKind::Shift(rng.gen_range(1..cfg.ends)),
        };
        let token = GeneratorToken { kind, inverse: rng.gen_bool(0.5) };
        tokens.push(token);
        if rng.gen_bool(0.3) {
            // Plant an immediate cancellation for the reducer to find.
            tokens.push(token.inverted());
        }
    }
    MappingWord::from_tokens(tokens)
}

fn random_class(rng: &mut ChaCha8Rng, cfg: &SurfaceConfig) -> HomologyClass {
    loop {
        let coeffs: Vec<i64> = (0..cfg.rank())
            .map(|_| if rng.gen_bool(0.2) { rng.gen_range(-2..=2) } else { 0 })
            .collect();
        let class = HomologyClass::from_coeffs(coeffs);
        if !class.is_zero() {
            return class;
        }
    }
}

#[test]
fn criterion_8_randomized_property_suite() {
    let cfg3 = cfg(3);
    let atlas3 = atlas(3);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let cases = 1000;
    let mut ok = true;

    // Form preservation of random total words.
    for _ in 0..cases {
        let w = random_total_word(&mut rng, &atlas3, 8);
        let m = word_matrix(&w, &atlas3).unwrap();
        ok &= m.preserves_form().unwrap();
    }
    println!("  form preservation: {cases} cases");

    // Conjugation identity M T_v M^-1 = T_{Mv}, exactly.
    for _ in 0..cases {
        let w = random_total_word(&mut rng, &atlas3, 6);
        let m = word_matrix(&w, &atlas3).unwrap();
        let m_inv = word_matrix(&w.invert(), &atlas3).unwrap();
        let v = random_class(&mut rng, &cfg3);
        let tv = transvection(&cfg3, &v, 1).unwrap();
        let lhs = m.compose(&tv).unwrap().compose(&m_inv).unwrap();
        let rhs = transvection(&cfg3, &m.apply(&v).unwrap(), 1).unwrap();
        ok &= lhs == rhs;
    }
    println!("  conjugation identity: {cases} cases");

    // Disjoint curves have commuting twist matrices.
    let names: Vec<CurveName> = atlas3.curves().map(|(n, _)| *n).collect();
    let mut checked = 0;
    while checked < cases {
        let x = names[rng.gen_range(0..names.len())];
        let y = names[rng.gen_range(0..names.len())];
        if atlas3.intersection(&x, &y).unwrap() != 0 {
            continue;
        }
        let tx = transvection(&cfg3, atlas3.class(&x).unwrap(), 1).unwrap();
        let ty = transvection(&cfg3, atlas3.class(&y).unwrap(), 1).unwrap();
        ok &= tx.compose(&ty).unwrap() == ty.compose(&tx).unwrap();
        checked += 1;
    }
    println!("  disjointness commutation: {cases} cases");

    // End projection is a homomorphism.
    for _ in 0..cases {
        let u = random_word_with_shifts(&mut rng, &atlas3, 10);
        let v = random_word_with_shifts(&mut rng, &atlas3, 10);
        let lhs = perm_of(&u.compose(&v), &cfg3);
        let rhs = perm_of(&u, &cfg3).compose(&perm_of(&v, &cfg3));
        ok &= lhs == rhs;
        ok &= perm_of(&u.invert(), &cfg3) == perm_of(&u, &cfg3).inverse();
    }
    println!("  end homomorphism: {cases} cases");

    // Free reduction changes neither the matrix nor the end action.
    for _ in 0..cases {
        let w = random_word_with_shifts(&mut rng, &atlas3, 50);
        let reduced = w.free_reduce();
        ok &= reduced.len() <= w.len();
        ok &= reduced.free_reduce() == reduced;
        let m = word_matrix(&w, &atlas3).unwrap();
        let mr = word_matrix(&reduced, &atlas3).unwrap();
        ok &= m.equal_on_common_domain(&mr).unwrap();
        ok &= perm_of(&w, &cfg3) == perm_of(&reduced, &cfg3);
    }
    println!("  free reduction invariance: {cases} cases");

    outcome("8 randomized property suite (1000 cases each, exact)", ok);
}

#[test]
fn criterion_9_full_verify_under_budget() {
    let started = Instant::now();
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_bigmcg"))
        .args(["verify", "--ends", "3..8", "--all"])
        .output()
        .expect("binary runs");
    let elapsed = started.elapsed();
    let ok = output.status.code() == Some(0) && elapsed < Duration::from_secs(30);
    println!(
        "  verify --ends 3..8 --all: exit {:?} in {elapsed:?}",
        output.status.code()
    );
    outcome("9 full verify sweep under 30 s with exit 0", ok);
}

#[test]
fn step_kinds_exercised_by_bundled_scripts() {
    // Structural guard: the bundled scripts really exercise every checkable
    // step kind the replay engine implements.
    let mut seen = std::collections::BTreeSet::new();
    for n in [3u32, 6, 7] {
        let cfg = cfg(n);
        for script in bigmcg::builtin::applicable_scripts(&cfg) {
            for step in &script.steps {
                seen.insert(step.kind().to_string());
            }
        }
    }
    for kind in ["define", "conjugation", "product", "image", "relation", "involution", "closure"] {
        assert!(seen.contains(kind), "no bundled script exercises {kind}");
    }
    let _ = Step::Define {
        name: String::new(),
        word: String::new(),
        cite: String::new(),
    };
}
