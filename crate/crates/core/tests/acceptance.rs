//! Acceptance suite: one PASS/FAIL line per criterion, all checks exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gkm_core::coeffs::{rat, sign_law_report};
use gkm_core::gkm::SerrePresentation;
use gkm_core::lattice::{integral_lattice_closure, IntegralForm};
use gkm_core::ncsf::{comult_s_check, quasidet_expand, s_from_psi_explicit, s_from_psi_recursive};
use gkm_core::quiver::{DimVector, GeneratorIndex, Quiver, TwistForm};
use gkm_core::seminil::{character_identity_check, kostant_count};
use gkm_core::twist::{
    minus_q_correspondence_check, minus_q_dimension_clause, tilde_coproduct_check, twisted_bialgebra_check,
    TensorTwist,
};
use gkm_core::coeffs::{BigRational, RatFunc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

/// Real vertex `a` with `t` arrows to `v`, which carries `loops` loops.
fn real_plus(loops: usize, t: usize) -> Quiver {
    let mut arrows = vec![("v", "v"); loops];
    arrows.extend(std::iter::repeat_n(("a", "v"), t));
    Quiver::new(&["a", "v"], &arrows).unwrap()
}

fn two_real(t: usize) -> Quiver {
    Quiver::new(&["a", "b"], &vec![("a", "b"); t]).unwrap()
}

fn c1_ncsf() -> Outcome {
    let two = s_from_psi_recursive(2).scale(&rat(2, 1)).to_string();
    let three = s_from_psi_recursive(3).scale(&rat(3, 1)).to_string();
    if two != "Psi2 + Psi1 Psi1" {
        return fail(format!("2S2 = {two}"));
    }
    if three != "Psi3 + Psi1 Psi2 + 1/2 Psi2 Psi1 + 1/2 Psi1 Psi1 Psi1" {
        return fail(format!("3S3 = {three}"));
    }
    for n in 1..=8 {
        let r = s_from_psi_recursive(n);
        if r != s_from_psi_explicit(n) || r != quasidet_expand(n) {
            return fail(format!("routes disagree at n = {n}"));
        }
    }
    pass(format!("2S2 = {two}; 3S3 = {three}; three routes agree for n <= 8"))
}

fn c2_comult() -> Outcome {
    match (0..=8).find(|&n| !comult_s_check(n)) {
        None => pass("Delta S_n = sum S_p (x) S_q for n <= 8"),
        Some(n) => fail(format!("fails at n = {n}")),
    }
}

fn c3_characters() -> Outcome {
    for (g, max) in [(0, 8), (1, 6), (2, 6), (3, 6)] {
        match character_identity_check(&Quiver::one_vertex(g), max) {
            Ok(r) if r.ok() => {}
            Ok(r) => return fail(format!("g = {g}: {:?}", r.rows)),
            Err(e) => return fail(format!("g = {g}: {e}")),
        }
    }
    pass("g=0 (d<=8) all 1, g=1 (d<=6) p(d), g=2,3 (d<=6) 2^(d-1)")
}

fn c4_kostant() -> Outcome {
    let mut checked = 0;
    for (name, q, bound) in [("A2", Quiver::linear(2), 6), ("A3", Quiver::linear(3), 5)] {
        let p = SerrePresentation::classical(&q, bound);
        for d in DimVector::all_up_to(q.vertex_count(), bound) {
            let dim = p.graded_dimension(&d).unwrap() as u64;
            let k = kostant_count(name, &d.0).unwrap();
            if dim != k {
                return fail(format!("{name} {d}: dim {dim}, Kostant {k}"));
            }
            checked += 1;
        }
    }
    pass(format!("{checked} degrees agree (A2 total <= 6, A3 total <= 5)"))
}

fn c5_serre() -> Outcome {
    let quivers = [
        Quiver::linear(2),
        Quiver::linear(3),
        Quiver::one_vertex(1),
        two_real(2),
        real_plus(1, 1),
        real_plus(1, 2),
        real_plus(2, 1),
    ];
    let mut relations = 0;
    for q in &quivers {
        let c = SerrePresentation::classical(q, 5);
        for r in c.relations() {
            if !c.in_ideal(r).unwrap() {
                return fail(format!("classical relation survives on {:?}", q.to_spec()));
            }
        }
        let qq = SerrePresentation::quantum(q, 5);
        for r in qq.relations() {
            if !qq.in_ideal(r).unwrap() {
                return fail(format!("quantum relation survives on {:?}", q.to_spec()));
            }
        }
        relations += c.relations().len() + qq.relations().len();
    }
    let mut cases = 0;
    for t in 1..=2 {
        let real = two_real(t);
        let mixed = real_plus(1, t);
        for (q, max_n) in [(&real, 1), (&mixed, 2)] {
            let p = SerrePresentation::quantum(q, (2 * t + 1 + 2) as u32);
            for n in 0..=max_n {
                let r = p.divided_serre_check(0, 1, n).unwrap();
                if !r.in_ideal {
                    return fail(format!("divided-power sum survives: t = {t}, n = {n}, degree {:?}", r.degree));
                }
                cases += 1;
            }
        }
    }
    pass(format!("{relations} relations reduce to 0; {cases} divided-power sums (t <= 2, n <= 2) in the ideal"))
}

fn c6_tilde() -> Outcome {
    let mut cases = 0;
    for t in 1..=2usize {
        for loops in [1, 2] {
            let q = real_plus(loops, t);
            let p = SerrePresentation::classical(&q, (2 * t + 1 + 2) as u32);
            for n in 1..=2 {
                let ok = p.tilde_serre_check(0, 1, n, 0).unwrap();
                if !ok.in_ideal {
                    return fail(format!("relation fails: loops {loops}, t = {t}, n = {n}"));
                }
                let control = p.tilde_serre_check(0, 1, n, 1).unwrap();
                if control.in_ideal {
                    return fail(format!("lower exponent already vanishes: loops {loops}, t = {t}, n = {n}"));
                }
                cases += 1;
            }
        }
    }
    for loops in [1, 2] {
        let p = SerrePresentation::classical(&Quiver::one_vertex(loops), 4);
        for n in 1..=4 {
            if !tilde_coproduct_check(&p, 0, n).unwrap() {
                return fail(format!("coproduct of e~ fails: loops {loops}, n = {n}"));
            }
        }
    }
    pass(format!("{cases} tilde Serre relations hold and their controls fail; grouplike sums hold for n <= 4"))
}

fn c7_minus_q() -> Outcome {
    let mut signs = Vec::new();
    for t in 1..=3 {
        let q = two_real(t);
        let twist = q.default_twist();
        for (j, i) in [(0, 1), (1, 0)] {
            let r = minus_q_correspondence_check(&q, &twist, GeneratorIndex::new(j, 1), GeneratorIndex::new(i, 1))
                .unwrap();
            match r.overall_sign {
                Some(s) if r.holds() => signs.push(format!("t={t} ({j},{i}): {s:+}")),
                _ => return fail(format!("t = {t}, ({j},{i}): {r:?}")),
            }
        }
        for row in minus_q_dimension_clause(&q, 5).unwrap() {
            if row.dim_q != row.dim_minus_q {
                return fail(format!("dimension clause fails at {:?}", row.degree));
            }
        }
    }
    let a2 = two_real(1);
    let control = minus_q_correspondence_check(
        &a2,
        &TwistForm::trivial(2),
        GeneratorIndex::new(0, 1),
        GeneratorIndex::new(1, 1),
    )
    .unwrap();
    if control.holds() {
        return fail("trivial twist control unexpectedly holds");
    }
    pass(format!("signs [{}]; dim U_q = dim U_-q for total <= 5; trivial-twist control fails", signs.join(", ")))
}

fn c8_sign_law() -> Outcome {
    let r = sign_law_report(10).unwrap();
    if !r.law_holds {
        return fail("probe differs from (-1)^(k(n-k))");
    }
    pass(format!(
        "probe = (-1)^(k(n-k)) on all {} rows (n <= 10); printed parity case split disagrees on {} rows{}",
        r.rows.len(),
        r.case_split_mismatches,
        if r.case_split_off_by_global_sign { ", i.e. it is off by a global sign" } else { "" }
    ))
}

fn random_quiver(rng: &mut ChaCha8Rng) -> Quiver {
    let n = rng.gen_range(1..=4);
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut arrows = Vec::new();
    for v in &names {
        for _ in 0..rng.gen_range(0..=3) {
            arrows.push((v.clone(), v.clone()));
        }
    }
    for _ in 0..rng.gen_range(0..=4) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            arrows.push((names[a].clone(), names[b].clone()));
        }
    }
    Quiver::new(&names, &arrows).unwrap()
}

fn c9_twists() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for k in 0..10 {
        let q = random_quiver(&mut rng);
        if let Err(e) = q.validate_twist(&q.default_twist()) {
            return fail(format!("random quiver {k}: {e}"));
        }
    }
    for q in [two_real(1), Quiver::one_vertex(1), two_real(2), real_plus(1, 1)] {
        let t = q.default_twist();
        let n = q.vertex_count();
        if let Some(bad) = twisted_bialgebra_check::<BigRational>(&q, &t, &TensorTwist::trivial(n), 4).unwrap() {
            return fail(format!("untwisted base fails on {bad:?}"));
        }
        if let Some(bad) = twisted_bialgebra_check::<RatFunc>(&q, &t, &TensorTwist::quantum(&q), 4).unwrap() {
            return fail(format!("quantum base fails on {bad:?}"));
        }
    }
    pass("default twist valid on 10 random quivers; twisted bialgebra axiom holds on monomials of total <= 4")
}

fn c10_lattices() -> Outcome {
    let cases = [
        ("A2 divided powers <= (2,2)", Quiver::linear(2), IntegralForm::DividedPower, DimVector(vec![2, 2]), 4),
        ("Jordan e~ d <= 4", Quiver::one_vertex(1), IntegralForm::Tilde, DimVector(vec![4]), 4),
        ("g=2 divided powers d <= 5", Quiver::one_vertex(2), IntegralForm::DividedPower, DimVector(vec![5]), 5),
    ];
    let mut notes = Vec::new();
    for (label, q, form, max, bound) in cases {
        let p = SerrePresentation::classical(&q, bound);
        let r = integral_lattice_closure(&p, form, &max).unwrap();
        if !r.ok() {
            return fail(format!("{label}: {r:?}"));
        }
        notes.push(label);
    }
    pass(format!("closed and full rank: {}", notes.join("; ")))
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        (1, "NCSF printed formulas", Duration::from_secs(1), c1_ncsf),
        (2, "coproduct of S_n", Duration::from_secs(5), c2_comult),
        (3, "character identities", Duration::from_secs(30), c3_characters),
        (4, "loop-free Kostant oracle", Duration::from_secs(120), c4_kostant),
        (5, "Serre machinery", Duration::from_secs(60), c5_serre),
        (6, "tilde generators", Duration::from_secs(60), c6_tilde),
        (7, "q -> -q correspondence", Duration::from_secs(60), c7_minus_q),
        (8, "q-binomial sign law", Duration::from_secs(1), c8_sign_law),
        (9, "twist axioms", Duration::from_secs(30), c9_twists),
        (10, "integral lattices", Duration::from_secs(60), c10_lattices),
    ];
    let mut failures = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let ok = outcome.ok && in_time;
        if !ok {
            failures += 1;
        }
        println!(
            "criterion {id:>2} [{}] {name}: {} (exact, tolerance 0; {:.3}s of {}s){}",
            if ok { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            limit.as_secs(),
            if in_time { "" } else { " time limit exceeded" },
        );
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
