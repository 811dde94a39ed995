//! One PASS/FAIL line per acceptance criterion, written straight to stdout
//! so they show without `--nocapture`.

use std::collections::{BTreeMap, HashMap};
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toricdd_core::ddideal::{chart_partition, containment_check, dd_ideal, verify_chart, ChartVerifier, DDParams};
use toricdd_core::groebner::{buchberger, eliminate, groebner_basis};
use toricdd_core::hilbert::{degree_monomials, hs_multiplicity, quotient_numerator, Ambient, MultiplicityConfig, MultiplicityMethod};
use toricdd_core::polyring::{parse_polynomial, Dims, Monomial, MonomialOrder, Polynomial, Ring, RingRef, VarId};
use toricdd_core::toric::{toric_equality, DEFAULT_VAR_CAP};
use toricdd_core::Q;

// wall-clock budgets
const TABLE_BUDGET: Duration = Duration::from_secs(600);
const TABLE_K8_BUDGET: Duration = Duration::from_secs(60);
const RING_BUDGET: Duration = Duration::from_secs(30);
const SWEEP_BUDGET: Duration = Duration::from_secs(300);
const TORIC_BUDGET: Duration = Duration::from_secs(600);
const CHART_BUDGET: Duration = Duration::from_secs(120);
const DEGENERATE_BUDGET: Duration = Duration::from_secs(30);
const MULT_BUDGET: Duration = Duration::from_secs(600);
const LECH_BUDGET: Duration = Duration::from_secs(1800);
const GB_BUDGET: Duration = Duration::from_secs(300);

// the printed table
const LENGTHS: [u64; 12] = [1, 9, 36, 100, 225, 441, 784, 1296, 2025, 3025, 4356, 6084];
const DECIMALS: [&str; 11] = [".25", ".444", ".562", ".64", ".694", ".734", ".766", ".79", ".81", ".826", ".84"];

// Lech sweep
const LECH_SEED: u64 = 1;
const LECH_COUNT: usize = 30;
const ENVELOPE: (&str, &str) = ("1/25", "3/20");
const ENVELOPE_SHARE: f64 = 0.8;

struct Outcome {
    pass: bool,
    detail: String,
}

fn q(s: &str) -> Q {
    s.parse().unwrap()
}

fn toricdd(args: &[&str]) -> (bool, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_toricdd")).args(args).output().expect("binary runs");
    (
        out.status.success(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn csv_rows(bytes: &[u8]) -> Vec<Vec<String>> {
    csv::Reader::from_reader(bytes)
        .records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

fn within(start: Instant, budget: Duration) -> (bool, String) {
    let t = start.elapsed();
    (t <= budget, format!("{:.1}s of {}s", t.as_secs_f64(), budget.as_secs()))
}

/// Returns the outcome and the list of `k` whose printed digits disagree.
fn criterion_table() -> (Outcome, Vec<u32>) {
    let start = Instant::now();
    let (ok, stdout, stderr) = toricdd(&["table", "--kmax", "12"]);
    let (fast, took) = within(start, TABLE_BUDGET);
    if !ok {
        return (Outcome { pass: false, detail: format!("table failed: {stderr}") }, Vec::new());
    }
    let start8 = Instant::now();
    let (ok8, _, _) = toricdd(&["table", "--kmax", "8"]);
    let (fast8, took8) = within(start8, TABLE_K8_BUDGET);

    let mut exact = true;
    let mut digits_off = Vec::new();
    let mut notes = Vec::new();
    let rows = csv_rows(stdout.as_bytes());
    exact &= rows.len() == 12;
    for row in &rows {
        let k: u64 = row[0].parse().unwrap();
        let length: u64 = row[1].parse().unwrap();
        let ratio = q(&row[3]);
        exact &= length == LENGTHS[k as usize - 1];
        exact &= ratio == q(&format!("{}/{}", k * k, (k + 1) * (k + 1)));
        if k == 12 {
            exact &= ratio == q("124416/146016");
        } else if row[4] != DECIMALS[k as usize - 1] {
            digits_off.push(k as u32);
            notes.push(format!("k={k}: {} truncates to {}, printed {}", row[3], row[4], DECIMALS[k as usize - 1]));
        }
    }
    let pass = ok8 && fast && fast8 && exact && digits_off.is_empty();
    let detail = format!(
        "lengths and ratios exact: {exact}; {}; k<=12 {took}, k<=8 {took8}",
        if notes.is_empty() { "all decimals match".to_string() } else { notes.join("; ") }
    );
    (Outcome { pass, detail }, digits_off)
}

fn criterion_ring_invariants() -> Outcome {
    let start = Instant::now();
    let dims = Dims::new(2, 2, 2);
    let gens = dd_ideal::<Q>(&DDParams::toric(dims)).unwrap();
    let num = quotient_numerator(&gens, &Ring::x_ring(dims).unwrap()).unwrap();
    let (dim, deg) = (num.krull_dim().unwrap(), num.degree().unwrap());
    let (fast, took) = within(start, RING_BUDGET);
    Outcome { pass: dim == 4 && deg == 6 && fast, detail: format!("dim {dim}, degree {deg}, {took}") }
}

fn criterion_dimension_sweep() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut seen = Vec::new();
    for (m, n, r) in [(2, 2, 2), (3, 2, 2), (2, 3, 2), (3, 3, 2), (2, 2, 3)] {
        let dims = Dims::new(m, n, r);
        let gens = dd_ideal::<Q>(&DDParams::toric(dims)).unwrap();
        let proj = quotient_numerator(&gens, &Ring::x_ring(dims).unwrap()).unwrap().krull_dim().unwrap() - 1;
        pass &= proj as u32 == m + n + r - 3;
        seen.push(format!("{dims}:{proj}"));
    }
    let (fast, took) = within(start, SWEEP_BUDGET);
    Outcome { pass: pass && fast, detail: format!("projective dims {}, {took}", seen.join(" ")) }
}

fn criterion_toric() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut seen = Vec::new();
    for (m, n, r) in [(2, 2, 2), (3, 2, 2), (2, 2, 3)] {
        let rep = toric_equality::<Q>(&DDParams::toric(Dims::new(m, n, r)), DEFAULT_VAR_CAP).unwrap();
        pass &= rep.passed();
        seen.push(format!("({m},{n},{r}):{}", rep.passed()));
    }
    let (fast, took) = within(start, TORIC_BUDGET);
    Outcome { pass: pass && fast, detail: format!("{}, {took}", seen.join(" ")) }
}

fn criterion_charts() -> Outcome {
    let start = Instant::now();
    let params = DDParams::toric(Dims::new(2, 2, 2));
    let verifier = ChartVerifier::<Q>::new(params.clone()).unwrap();
    let small = params.dims().x_vars().iter().filter(|&&p| verifier.verify(p).unwrap().passed()).count();
    let example = verify_chart::<Q>(&DDParams::toric(Dims::new(3, 3, 2)), VarId::x(1, 3, 2)).unwrap().passed();
    let mut y1_ok = true;
    let mut pivots = 0;
    for m in 2..=4 {
        for n in 2..=4 {
            for r in 2..=4 {
                let p = DDParams::toric(Dims::new(m, n, r));
                for v in p.dims().x_vars() {
                    pivots += 1;
                    y1_ok &= chart_partition(&p, v).unwrap().y1.len() as u32 == m + n + r - 2;
                }
            }
        }
    }
    let (fast, took) = within(start, CHART_BUDGET);
    Outcome {
        pass: small == 8 && example && y1_ok && fast,
        detail: format!("(2,2,2) {small}/8 pivots, (3,3,2) x[1,3,2] {example}, |Y1| over {pivots} pivots {y1_ok}, {took}"),
    }
}

fn criterion_degenerate() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut seen = Vec::new();
    for (m, n, b) in [(2, 3, 3), (2, 4, 3)] {
        let a = containment_check::<Q>(&DDParams::new(m, n, 2, 2, b).unwrap()).unwrap();
        let t = containment_check::<Q>(&DDParams::new(n, m, 2, b, 2).unwrap()).unwrap();
        let ok = a.holds() && !a.is_vacuous() && t.holds() && !t.is_vacuous();
        pass &= ok;
        seen.push(format!("({m},{n},{b}):{ok}"));
    }
    let (fast, took) = within(start, DEGENERATE_BUDGET);
    Outcome { pass: pass && fast, detail: format!("{}, {took}", seen.join(" ")) }
}

fn criterion_multiplicity() -> Outcome {
    let start = Instant::now();
    let cfg = MultiplicityConfig::default();
    let both = |gens: &[Polynomial<Q>], ambient: &Ambient<Q>| {
        let red = hs_multiplicity(gens, ambient, MultiplicityMethod::GenericReduction, &cfg).unwrap().value;
        let fit = hs_multiplicity(gens, ambient, MultiplicityMethod::HsFit, &cfg).unwrap().value;
        (red, fit)
    };
    let dims = Dims::new(2, 2, 2);
    let toric = Ambient::<Q>::toric(dims).unwrap();
    let ring = toric.ring().clone();
    let power = |k| -> Vec<Polynomial<Q>> {
        degree_monomials(ring.nvars(), k).into_iter().map(|m| Polynomial::monomial(&ring, m)).collect()
    };
    let mu = both(&power(1), &toric);
    let mu2 = both(&power(2), &toric);
    let free = Ambient::<Q>::free(&ring);
    let nv = ring.nvars();
    let fat: Vec<Polynomial<Q>> = (0..nv)
        .map(|k| Polynomial::monomial(&ring, Monomial::var_pow(nv, k, if k == 0 { 2 } else { 1 })))
        .collect();
    let point = both(&fat, &free);
    let (fast, took) = within(start, MULT_BUDGET);
    Outcome {
        pass: mu == (6, 6) && mu2 == (96, 96) && point == (2, 2) && fast,
        detail: format!("(reduction, fit): m {mu:?}, m^2 {mu2:?}, free (x1^2,x2..x8) {point:?}, {took}"),
    }
}

fn criterion_lech() -> Outcome {
    let start = Instant::now();
    let dir = std::env::temp_dir().join(format!("toricdd-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run = |name: &str| {
        let path = dir.join(name);
        let (ok, _, err) = toricdd(&[
            "lech",
            "--seed",
            &LECH_SEED.to_string(),
            "--count",
            &LECH_COUNT.to_string(),
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(ok, "lech failed: {err}");
        std::fs::read(&path).unwrap()
    };
    let first = run("a.csv");
    let second = run("b.csv");
    std::fs::remove_dir_all(&dir).ok();
    let ratios: Vec<Q> = csv_rows(&first).iter().filter(|r| !r[6].is_empty()).map(|r| q(&r[6])).collect();
    let (lo, hi) = (q(ENVELOPE.0), q(ENVELOPE.1));
    let complete = ratios.len() == LECH_COUNT;
    let lech = ratios.iter().all(|r| *r <= q("6"));
    let below_one = ratios.iter().all(|r| *r < q("1"));
    let inside = ratios.iter().filter(|r| **r >= lo && **r <= hi).count();
    let share = inside as f64 / LECH_COUNT as f64;
    let identical = first == second;
    let (fast, took) = within(start, LECH_BUDGET);
    Outcome {
        pass: complete && lech && below_one && share >= ENVELOPE_SHARE && identical && fast,
        detail: format!(
            "{} samples, <= 6: {lech}, < 1: {below_one}, in [.04,.15]: {inside}/{LECH_COUNT}, identical rerun: {identical}, {took}",
            ratios.len()
        ),
    }
}

fn span_reduce(pivots: &BTreeMap<usize, BTreeMap<usize, Q>>, mut row: BTreeMap<usize, Q>) -> BTreeMap<usize, Q> {
    while let Some((&lead, _)) = row.iter().find(|(c, _)| pivots.contains_key(c)) {
        let piv = &pivots[&lead];
        let factor = &row[&lead] / &piv[&lead];
        for (c, v) in piv {
            let e = row.entry(*c).or_insert_with(|| q("0"));
            *e -= &factor * v;
            if *e == q("0") {
                row.remove(c);
            }
        }
    }
    row
}

/// Elimination of `s, t` from the twisted cubic against linear algebra up to degree 6.
fn elimination_agrees() -> bool {
    let dims = Dims::new(1, 4, 1);
    let mut roster = vec![VarId::S(1), VarId::T(1)];
    roster.extend(dims.x_vars());
    let ring: RingRef = Ring::new(dims, roster, MonomialOrder::Grevlex).unwrap();
    let gens: Vec<Polynomial<Q>> =
        ["x[1,1,1] - s[1]^3", "x[1,1,2] - s[1]^2*t[1]", "x[1,1,3] - s[1]*t[1]^2", "x[1,1,4] - t[1]^3"]
            .iter()
            .map(|s| parse_polynomial(s, &ring).unwrap())
            .collect();
    let nv = ring.nvars();
    let all: Vec<Monomial> = (0..=6).flat_map(|d| degree_monomials(nv, d)).collect();
    let (with, without): (Vec<_>, Vec<_>) = all.into_iter().partition(|m| m.subdegree(&[0, 1]) > 0);
    let first_free = with.len();
    let monos: Vec<Monomial> = with.into_iter().chain(without).collect();
    let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
    let to_row = |p: &Polynomial<Q>| -> BTreeMap<usize, Q> {
        p.terms().iter().map(|t| (index[&t.mono], t.coeff.clone())).collect()
    };
    let mut pivots = BTreeMap::new();
    for g in &gens {
        for d in 0..=3 {
            for m in degree_monomials(nv, d) {
                let row = span_reduce(&pivots, to_row(&g.mul_term(&q("1"), &m)));
                if let Some((&lead, _)) = row.iter().next() {
                    pivots.insert(lead, row);
                }
            }
        }
    }
    let kernel = eliminate(&gens, &[VarId::S(1), VarId::T(1)]).unwrap();
    let kernel_gb = buchberger(&kernel, &ring).unwrap();
    let forward = kernel.iter().all(|k| span_reduce(&pivots, to_row(k)).is_empty());
    let backward = pivots.iter().filter(|(lead, _)| **lead >= first_free).all(|(_, row)| {
        let p = Polynomial::from_terms(&ring, row.iter().map(|(c, v)| (v.clone(), monos[*c].clone())));
        kernel_gb.ideal_member(&p).unwrap()
    });
    forward && backward && kernel.len() == 3
}

fn criterion_groebner() -> Outcome {
    let start = Instant::now();
    let gens = dd_ideal::<Q>(&DDParams::toric(Dims::new(2, 2, 2))).unwrap();
    let ring = gens[0].ring().clone();
    let canonical = |gb: &toricdd_core::QGroebnerBasis| {
        let mut v: Vec<String> = gb.basis().iter().map(|p| p.to_string()).collect();
        v.sort();
        v
    };
    let reference = groebner_basis(&gens).unwrap();
    let expected = canonical(&reference);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut unique = true;
    for _ in 0..10 {
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rng);
        unique &= canonical(&buchberger(&shuffled, &ring).unwrap()) == expected;
    }
    let mut linear = true;
    let random_poly = |rng: &mut ChaCha8Rng| {
        let terms: Vec<(Q, Monomial)> = (0..5)
            .map(|_| {
                let d = rng.gen_range(0..=3);
                let monos = degree_monomials(ring.nvars(), d);
                (q(&rng.gen_range(-20i64..=20).to_string()), monos[rng.gen_range(0..monos.len())].clone())
            })
            .collect();
        Polynomial::from_terms(&ring, terms)
    };
    for _ in 0..30 {
        let (f, g) = (random_poly(&mut rng), random_poly(&mut rng));
        let c = q(&rng.gen_range(-5i64..=5).to_string());
        let lhs = reference.reduce(&(&f + &g.scale(&c))).unwrap();
        let rhs = &reference.reduce(&f).unwrap() + &reference.reduce(&g).unwrap().scale(&c);
        linear &= lhs == rhs;
    }
    let elimination = elimination_agrees();
    let (fast, took) = within(start, GB_BUDGET);
    Outcome {
        pass: unique && linear && elimination && fast,
        detail: format!("shuffle-invariant: {unique}, NF linear: {linear}, elimination vs brute force: {elimination}, {took}"),
    }
}

#[test]
fn acceptance_criteria() {
    let (table, digits_off) = criterion_table();
    let outcomes = [
        table,
        criterion_ring_invariants(),
        criterion_dimension_sweep(),
        criterion_toric(),
        criterion_charts(),
        criterion_degenerate(),
        criterion_multiplicity(),
        criterion_lech(),
        criterion_groebner(),
    ];
    let mut stdout = std::io::stdout().lock();
    writeln!(stdout).unwrap();
    for (i, o) in outcomes.iter().enumerate() {
        writeln!(stdout, "{} criterion {}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail).unwrap();
    }
    drop(stdout);
    // 49/64 = .765625 truncates to .765 while the table prints .766; no
    // truncation rule reproduces that cell, so criterion 1 is expected to
    // fail on it and on nothing else.
    assert_eq!(digits_off, vec![7], "{}", outcomes[0].detail);
    for (i, o) in outcomes.iter().enumerate().skip(1) {
        assert!(o.pass, "criterion {}: {}", i + 1, o.detail);
    }
}
