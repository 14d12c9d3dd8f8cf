//! Acceptance checks, one line per criterion. Run with
//! `cargo test -p nacyc --test acceptance`.
//!
//! Criterion 1 compares against a reference table of norm groups for the
//! quadratic extensions of Q_2. Two of its rows are not subgroups
//! consistent with the 2-adic Hilbert symbol, so it cannot match all 56
//! bits; it is reported as FAIL and listed in `KNOWN_FAILURES`. The process
//! exits nonzero if any other criterion fails or if a known failure changes.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nacyc::base::{BaseElem, BaseField};
use nacyc::classify::{self, Window};
use nacyc::extension::{artin_schreier_sample, enumerate_extensions, CyclicExtension, ExtElem};
use nacyc::ffield::FqSpec;
use nacyc::localfield::{hensel_lift, LocalElem, LocalFieldSpec};
use nacyc::nacalg::{CyclicAlgebra, NucleusKind};
use nacyc::oracle;
use nacyc::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criterion number and the exact detail it is expected to fail with.
const KNOWN_FAILURES: [(u32, &str); 1] = [(1, "48/56 bits agree with the reference groups")];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn within(t: Instant, limit: Duration) -> bool {
    t.elapsed() <= limit
}

fn qp(p: u64) -> BaseField {
    BaseField::Local(LocalFieldSpec::padic(p, 12).unwrap())
}

/// Reference norm-group members (square classes) per extension `Q_2(sqrt c)`.
const REFERENCE_NORM_GROUPS: [(i64, [i64; 4]); 7] = [
    (-3, [1, -1, 3, -3]),
    (-6, [2, -2, 6, -6]),
    (2, [1, -1, 2, -2]),
    (-1, [1, -2, -3, 6]),
    (-2, [1, 2, 3, 6]),
    (3, [1, -2, -3, 6]),
    (6, [1, -2, 3, -6]),
];

/// Independent reference: `x` is a norm from `Q_2(sqrt c)` iff
/// `x = u^2 - c w^2` is solvable, checked modulo 2^7 over small integers.
fn norm_by_search(c: i64, x: i64) -> bool {
    let m = 1 << 7;
    // scale x by squares 2^(2k) so solutions with denominators are found
    (0..3).any(|k| {
        let target = (x << (2 * k)).rem_euclid(m);
        (0..m).any(|u| (0..m).any(|w| (u * u - c * w * w).rem_euclid(m) == target && (u % 2 != 0 || w % 2 != 0)))
    })
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let f = qp(2);
    let classes = [1, -1, 2, -2, 3, -3, 6, -6];
    let (mut agree_ref, mut agree_search) = (0, 0);
    for (c, group) in REFERENCE_NORM_GROUPS {
        let k = CyclicExtension::quadratic(&f, f.from_i64(c)).unwrap();
        for x in classes {
            let computed = k.is_norm(&f.from_i64(x)).unwrap();
            agree_ref += usize::from(computed == group.contains(&x));
            agree_search += usize::from(computed == norm_by_search(c, x));
        }
    }
    let fast = within(t, Duration::from_secs(1));
    outcome(
        agree_ref == 56 && fast,
        format!(
            "{agree_ref}/56 bits agree with the reference groups; {agree_search}/56 agree with a direct search for u^2 - c w^2 = x"
        ),
    )
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let mut parts = Vec::new();
    let mut ok = true;
    for (q, m) in [(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)] {
        let r = oracle::brute_classes(q, m).unwrap();
        ok &= r.agreement && r.classes_brute == r.classes_criterion;
        if (q, m) == (3, 2) {
            ok &= r.classes_brute == 2;
        }
        parts.push(format!("({q},{m}): {} classes, agree={}", r.classes_brute, r.agreement));
    }
    ok &= within(t, Duration::from_secs(60));
    outcome(ok, format!("{} in {:.1?}", parts.join("; "), t.elapsed()))
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let r = oracle::verify_theorem("sigma_distinct", 2, 3).unwrap();
    let ok = r.passed && r.checked == 36 && r.counterexamples.is_empty() && within(t, Duration::from_secs(60));
    outcome(ok, format!("{} pairs checked, {} counterexamples, {:.1?}", r.checked, r.counterexamples.len(), t.elapsed()))
}

fn proper_elements(k: &CyclicExtension, spec: &FqSpec) -> Vec<ExtElem> {
    spec.tuples(k.degree())
        .map(|t| k.elem(t.into_iter().map(BaseElem::Fq).collect()).unwrap())
        .filter(|a| !a.in_base())
        .collect()
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    let mut ok = true;
    let mut checked = 0;
    for (p, m) in [(3, 2), (2, 3)] {
        let spec = FqSpec::prime(p).unwrap();
        let k = CyclicExtension::finite(&spec, m).unwrap();
        for a in proper_elements(&k, &spec) {
            let alg = CyclicAlgebra::new(&k, 1, a).unwrap();
            let dims: Vec<usize> = [NucleusKind::Left, NucleusKind::Middle, NucleusKind::Right, NucleusKind::Center]
                .into_iter()
                .map(|w| alg.nucleus(w).unwrap().len())
                .collect();
            ok &= dims == [m, m, m, 1];
            checked += 1;
        }
        let r = oracle::verify_theorem("nuclei", p, m).unwrap();
        ok &= r.passed;
    }
    outcome(ok, format!("{checked} algebras, library and oracle dimensions (m, m, m, 1), {:.1?}", t.elapsed()))
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    let mut ok = true;
    let f2 = FqSpec::prime(2).unwrap();
    let k16 = CyclicExtension::finite(&f2, 4).unwrap();
    let mut generating = 0;
    for a in proper_elements(&k16, &f2) {
        if k16.subfield_degree(&a) == 4 {
            generating += 1;
            ok &= CyclicAlgebra::new(&k16, 1, a).unwrap().exhaustive_is_division().unwrap();
        }
    }
    let steele = oracle::verify_theorem("steele", 2, 4).unwrap();
    ok &= steele.passed && steele.checked == generating;
    let mut prime_cases = 0;
    for (p, m) in [(2, 2), (3, 2), (2, 3)] {
        let spec = FqSpec::prime(p).unwrap();
        let k = CyclicExtension::finite(&spec, m).unwrap();
        for a in proper_elements(&k, &spec) {
            prime_cases += 1;
            ok &= CyclicAlgebra::new(&k, 1, a).unwrap().exhaustive_is_division().unwrap();
        }
        ok &= oracle::verify_theorem("petit_division", p, m).unwrap().passed;
    }
    ok &= within(t, Duration::from_secs(120));
    outcome(
        ok,
        format!("F16: {generating} generating a all division; {prime_cases} prime-degree instances over F4, F9, F8 all division; {:.1?}", t.elapsed()),
    )
}

fn random_local(spec: &LocalFieldSpec, rng: &mut ChaCha8Rng) -> LocalElem {
    let res = spec.residue();
    let q = res.order();
    let mut digits = vec![res.element(rng.gen_range(1..q))];
    digits.extend((1..12).map(|_| res.element(rng.gen_range(0..q))));
    spec.from_digits(rng.gen_range(-2..=2), &digits).unwrap()
}

fn random_proper(k: &CyclicExtension, rng: &mut ChaCha8Rng) -> ExtElem {
    let spec = k.base().local().unwrap().clone();
    loop {
        let coeffs: Vec<BaseElem> = (0..k.degree())
            .map(|_| if rng.gen_bool(0.25) { k.base().zero() } else { BaseElem::Local(random_local(&spec, rng)) })
            .collect();
        let a = k.elem(coeffs).unwrap();
        if !a.in_base() {
            return a;
        }
    }
}

fn random_nonzero(k: &CyclicExtension, rng: &mut ChaCha8Rng) -> ExtElem {
    let spec = k.base().local().unwrap().clone();
    let coeffs: Vec<BaseElem> = (0..k.degree()).map(|_| BaseElem::Local(random_local(&spec, rng))).collect();
    k.elem(coeffs).unwrap()
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let q5 = qp(5);
    let q3 = qp(3);
    let q7 = qp(7);
    let cases = vec![
        CyclicExtension::quadratic(&q5, q5.from_i64(2)).unwrap(),
        CyclicExtension::quadratic(&q3, q3.from_i64(3)).unwrap(),
        CyclicExtension::kummer(&q7, 3, q7.from_i64(7)).unwrap(),
        CyclicExtension::unramified(&q7, 3).unwrap(),
    ];
    let (mut idem, mut sound, mut sep, mut total) = (0, 0, 0, 0);
    for k in &cases {
        for _ in 0..500 {
            total += 1;
            let a = random_proper(k, &mut rng);
            let ca = classify::canonical(k, 1, &a).unwrap();
            let cca = classify::canonical(k, 1, &ca.a).unwrap();
            idem += usize::from(!cca.a.same(&ca.a));
            sound += usize::from(!classify::equivalent(k, &a, &ca.a).unwrap());
            // one unrelated partner, one equivalent partner, one partner
            // scaled by a non-norm class representative
            let n = k.norm(&random_nonzero(k, &mut rng)).unwrap();
            let i = rng.gen_range(0..k.degree()) as i64;
            let reps = k.norm_class_reps().unwrap();
            let r = &reps[rng.gen_range(1..reps.len())];
            let partners = [random_proper(k, &mut rng), a.sigma(i).scale(&n), a.scale(r)];
            for b in partners {
                let cb = classify::canonical(k, 1, &b).unwrap();
                let eq = classify::equivalent(k, &a, &b).unwrap();
                sep += usize::from(eq != ca.a.same(&cb.a));
            }
        }
    }
    let ok = idem + sound + sep == 0 && within(t, Duration::from_secs(60));
    outcome(
        ok,
        format!("{total} samples: {idem} idempotence, {sound} soundness, {sep} separation failures, {:.1?}", t.elapsed()),
    )
}

/// Expected class count for a window holding `t` elements `pi^v w`.
fn expected_count(k: &CyclicExtension, t: usize) -> usize {
    let base = k.base();
    let q = base.q() as usize;
    if matches!(k.kind(), nacyc::extension::ExtKind::ArtinSchreier { .. }) {
        // s and s + 1 collapse only for s = 1, which pairs with s = 0
        return 2 * t;
    }
    if k.degree() == 2 {
        let c = k.quadratic_c().unwrap();
        let minus_one_norm = if base.is_q2() {
            [-3, 2, -6].contains(&c.as_local().unwrap().q2_square_class().unwrap())
        } else {
            k.is_unramified() || q % 4 == 1
        };
        // -1 is in mu_(q-1) exactly when p is odd
        let w = if base.p() == 2 { t } else { t / 2 };
        return if minus_one_norm { 2 + 2 * w } else { 1 + 2 * w };
    }
    if k.is_unramified() || q % 9 == 1 {
        3 * (2 + t + t * t / 3)
    } else {
        t * t + 3 * t + 2
    }
}

fn criterion_7() -> Outcome {
    let t0 = Instant::now();
    let w = Window { vmin: -1, vmax: 1, digits: 4 };
    let mut cases: Vec<CyclicExtension> = Vec::new();
    for p in [5, 3, 2] {
        cases.extend(enumerate_extensions(&qp(p), 2).unwrap());
    }
    for p in [7, 19] {
        cases.extend(enumerate_extensions(&qp(p), 3).unwrap());
    }
    let f2t = BaseField::Local(LocalFieldSpec::laurent(FqSpec::prime(2).unwrap(), 12).unwrap());
    cases.push(artin_schreier_sample(&f2t, 1).unwrap());
    let mut ok = true;
    let mut lines = Vec::new();
    let mut pairs = 0usize;
    for k in &cases {
        let t = classify::window_elements(k.base(), &w).unwrap().len();
        let reps = classify::enumerate(k, 1, &w).unwrap();
        let want = expected_count(k, t);
        let mut clash = 0;
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                pairs += 1;
                clash += usize::from(classify::equivalent(k, &reps[i].a, &reps[j].a).unwrap());
            }
        }
        ok &= reps.len() == want && clash == 0;
        lines.push(format!("{}:{} {}/{}", k.base(), k.field_key(), reps.len(), want));
    }
    ok &= within(t0, Duration::from_secs(60));
    outcome(ok, format!("{} cases, {pairs} pairs inequivalent, counts [{}], {:.1?}", cases.len(), lines.join(", "), t0.elapsed()))
}

fn criterion_8() -> Outcome {
    let z5 = LocalFieldSpec::padic(5, 10).unwrap();
    let two = z5.residue().from_u64(2);
    let b = z5.teichmuller(&two, 10).unwrap();
    let (value, _) = b.unit_int().unwrap();
    let fourth = b.powi(4).unwrap();
    let teich_ok = value % 25 == 7 && fourth.same(&z5.one()) && fourth.precision() >= 10;
    let z3 = LocalFieldSpec::padic(3, 10).unwrap();
    let f = [z3.from_i64(-7), z3.zero(), z3.one()];
    let r = hensel_lift(&f, &z3.from_i64(1), 10).unwrap();
    let (rv, _) = r.unit_int().unwrap();
    let hensel_ok = rv % 27 == 13 && r.mul(&r).same(&z3.from_i64(7));
    outcome(teich_ok && hensel_ok, format!("teichmuller(2) mod 25 = {}, hensel root mod 27 = {}", value % 25, rv % 27))
}

fn criterion_9() -> Outcome {
    let n3 = classify::degree4_types(&qp(3)).unwrap().len();
    let n5 = classify::degree4_types(&qp(5)).unwrap().len();
    outcome(n3 == 4 && n5 == 12, format!("Q_3: {n3} types, Q_5: {n5} types"))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome); 9] = [
        (1, "Q_2 quadratic norm groups", criterion_1),
        (2, "oracle and criterion partitions agree", criterion_2),
        (3, "generators give distinct classes over F_8", criterion_3),
        (4, "nucleus dimensions", criterion_4),
        (5, "division criteria", criterion_5),
        (6, "canonicalization contract", criterion_6),
        (7, "windowed enumeration", criterion_7),
        (8, "Hensel and Teichmuller digits", criterion_8),
        (9, "degree-four type counts", criterion_9),
    ];
    let mut unexpected = 0;
    for (n, name, run) in criteria {
        let o = run();
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n);
        let status = if o.pass { "PASS" } else { "FAIL" };
        let note = match (known, o.pass) {
            (Some((_, d)), false) if o.detail.starts_with(d) => " (known, see notes)",
            (None, true) => "",
            _ => {
                unexpected += 1;
                " (unexpected)"
            }
        };
        println!("criterion {n} [{name}]: {status}{note} - {}", o.detail);
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
