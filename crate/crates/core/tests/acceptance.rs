//! Acceptance criteria. Runs without the libtest harness so that every
//! `criterion N: PASS|FAIL ...` line reaches stdout, passing or not. Exits
//! nonzero if any criterion fails.

#![allow(clippy::needless_range_loop)]

use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use agcycles::arith::{
    factorial_prime_parts, ng, proportionality_factor, rat, torsion_bound, PPoly, Rational,
};
use agcycles::cycleclasses::{
    bg_class, compare_rows, published_g3, strata_table, superspecial_mass, ta_class, Conventions,
    RowComparison,
};
use agcycles::polyengine::{determinant, pfaffian, MPoly, Monomial, Var};
use agcycles::tautring::oracle::OracleRing;
use agcycles::tautring::{
    basis, degree_ag_tilde, lambda1_power, lambda1_power_degree, top_degree, LambdaMonomial,
    RingMode, TautClass,
};
use agcycles::weyl::{all_elements, enumerate_strata};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_917;
const TRIALS: usize = 128;

fn report(n: u32, name: &str, failures: &[String], elapsed: Duration, limit: Duration) -> bool {
    let in_time = elapsed < limit;
    let ok = failures.is_empty() && in_time;
    let mut line = format!(
        "criterion {n}: {} {name} ({:.3}s, limit {}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    for f in failures {
        line.push_str(&format!("\n    {f}"));
    }
    if !in_time {
        line.push_str("\n    runtime limit exceeded");
    }
    println!("{line}");
    ok
}

fn check<T: PartialEq + std::fmt::Debug>(failures: &mut Vec<String>, what: &str, want: T, got: T) {
    if want != got {
        failures.push(format!("{what}: expected {want:?}, got {got:?}"));
    }
}

fn lam(g: usize, idx: &[usize]) -> TautClass {
    TautClass::monomial(g, RingMode::Compact, idx).unwrap()
}

fn poly(ascending: &[i64]) -> PPoly {
    PPoly::from_ints(ascending)
}

fn criterion_01_proportionality_constants() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let want = [rat(1, 24), rat(1, 5760), rat(1, 2903040)];
    for (g, w) in (1..).zip(want) {
        check(
            &mut failures,
            &format!("p({g})"),
            w,
            proportionality_factor(g),
        );
    }
    report(
        1,
        "proportionality constants",
        &failures,
        start.elapsed(),
        Duration::from_secs(1),
    )
}

fn criterion_02_lambda1_top_degrees() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let want = [rat(1, 24), rat(1, 2880), rat(1, 181440)];
    for (g, w) in (1..).zip(want) {
        let top = lambda1_power(g, RingMode::Compact, top_degree(g) as u32).unwrap();
        let by_ring = degree_ag_tilde(&top).unwrap();
        let closed = lambda1_power_degree(g);
        check(
            &mut failures,
            &format!("rewriting g={g}"),
            PPoly::constant(w.clone()),
            by_ring,
        );
        check(&mut failures, &format!("closed form g={g}"), w, closed);
    }
    report(
        2,
        "degrees of lambda_1^G",
        &failures,
        start.elapsed(),
        Duration::from_secs(5),
    )
}

fn describe(rows: &[RowComparison]) -> Vec<String> {
    rows.iter()
        .filter(|r| !r.matches())
        .map(|r| {
            let ratio = r.ratio().map_or("none".to_string(), |q| q.to_string());
            format!(
                "stratum {}: printed {}, computed {}, computed/printed = {ratio}",
                r.mu, r.expected, r.computed
            )
        })
        .collect()
}

/// Compared against the table exactly as printed. Three printed rows carry
/// sign errors, so this criterion is expected to fail; the corrected table
/// is pinned in `golden_tables.rs`.
fn criterion_03_g3_pushforward_table() -> bool {
    let start = Instant::now();
    let reports = strata_table(3, Conventions::FROZEN).unwrap();
    let rows = compare_rows(&reports, &published_g3());
    let mut failures = describe(&rows);
    check(&mut failures, "row count", 8, rows.len());
    report(
        3,
        "g=3 push-forward table as printed",
        &failures,
        start.elapsed(),
        Duration::from_secs(60),
    )
}

fn criterion_04_weyl_table() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let golden: [(&str, &str, usize, &[usize]); 8] = [
        ("{}", "[4,5,6,1,2,3]", 6, &[3, 2, 3, 1, 2, 3]),
        ("{1}", "[4,5,1,6,2,3]", 5, &[2, 3, 1, 2, 3]),
        ("{2}", "[4,1,5,2,6,3]", 4, &[3, 1, 2, 3]),
        ("{3}", "[1,4,5,2,3,6]", 3, &[3, 2, 3]),
        ("{2,1}", "[4,1,2,5,6,3]", 3, &[1, 2, 3]),
        ("{3,1}", "[1,4,2,5,3,6]", 2, &[2, 3]),
        ("{3,2}", "[1,2,4,3,5,6]", 1, &[3]),
        ("{3,2,1}", "[1,2,3,4,5,6]", 0, &[]),
    ];
    let strata = enumerate_strata(3).unwrap();
    check(
        &mut failures,
        "row count (duplicate {3} once)",
        8,
        strata.len(),
    );
    for (mu, bracket, length, word) in golden {
        let hits: Vec<_> = strata.iter().filter(|s| s.mu.to_string() == mu).collect();
        check(&mut failures, &format!("{mu} occurrences"), 1, hits.len());
        if let Some(s) = hits.first() {
            check(
                &mut failures,
                &format!("{mu} bracket"),
                bracket.to_string(),
                s.weyl.to_string(),
            );
            check(&mut failures, &format!("{mu} length"), length, s.length);
            check(
                &mut failures,
                &format!("{mu} word"),
                word.to_vec(),
                s.word.clone(),
            );
        }
    }
    for g in 1..=3 {
        let elements = all_elements(g);
        let order = (1..=g).product::<usize>() << g;
        check(&mut failures, &format!("|W_{g}|"), order, elements.len());
        for w in elements {
            if w.length() + w.codim() != g * g {
                failures.push(format!("length + codim of {w} is not {}", g * g));
            }
        }
    }
    report(
        4,
        "Weyl table and length identity",
        &failures,
        start.elapsed(),
        Duration::from_secs(1),
    )
}

fn criterion_05_ta_formulas() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let t1 = lam(3, &[1]).scale(&poly(&[-1, 1]));
    check(&mut failures, "T_1 (g=3)", t1, ta_class(3, 1).unwrap());
    check(
        &mut failures,
        "T_1 (g=1)",
        lam(1, &[1]).scale(&poly(&[-1, 1])),
        ta_class(1, 1).unwrap(),
    );
    let t2 = lam(3, &[1, 2])
        .scale(&(&poly(&[-1, 1]) * &poly(&[1, 0, 1])))
        .sub(&lam(3, &[3]).scale(&poly(&[-2, 0, 0, 2])))
        .unwrap();
    check(&mut failures, "T_2 (g=3)", t2, ta_class(3, 2).unwrap());
    for g in 1..=5usize {
        let c: PPoly = (1..=g as u32)
            .map(|j| PPoly::p_pow_plus(j, if j % 2 == 0 { 1 } else { -1 }))
            .product();
        let want = TautClass::basis_term(g, RingMode::Compact, LambdaMonomial::full(g), c);
        check(
            &mut failures,
            &format!("T_{g}"),
            want,
            ta_class(g, g).unwrap(),
        );
    }
    report(
        5,
        "T_a classes",
        &failures,
        start.elapsed(),
        Duration::from_secs(30),
    )
}

fn criterion_06_mass_formulas() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    check(
        &mut failures,
        "mass g=1",
        poly(&[-1, 1]).scale(&rat(1, 24)),
        superspecial_mass(1).unwrap(),
    );
    for g in 1..=3 {
        let deg = degree_ag_tilde(&ta_class(g, g).unwrap()).unwrap();
        check(
            &mut failures,
            &format!("mass vs deg T_{g}"),
            superspecial_mass(g).unwrap(),
            deg,
        );
    }
    report(
        6,
        "superspecial masses",
        &failures,
        start.elapsed(),
        Duration::from_secs(10),
    )
}

fn criterion_07_torsion_bounds() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let want = [24u32, 5760, 5806080];
    let mut prod = BigUint::from(1u32);
    for (g, w) in (1..).zip(want) {
        check(
            &mut failures,
            &format!("bound g={g}"),
            BigUint::from(w),
            torsion_bound(g).unwrap(),
        );
        prod *= ng(g).unwrap();
        check(
            &mut failures,
            &format!("prime parts of factorials g={g}"),
            factorial_prime_parts(g),
            prod.clone(),
        );
    }
    report(
        7,
        "torsion bounds",
        &failures,
        start.elapsed(),
        Duration::from_secs(30),
    )
}

fn criterion_08_boundary_classes() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    check(
        &mut failures,
        "b_1",
        lam(1, &[1]).scale(&PPoly::from_int(12)),
        bg_class(1).unwrap(),
    );
    check(
        &mut failures,
        "b_2",
        lam(2, &[2]).scale(&PPoly::from_int(120)),
        bg_class(2).unwrap(),
    );
    report(
        8,
        "boundary classes",
        &failures,
        start.elapsed(),
        Duration::from_secs(1),
    )
}

fn total_chern_relation(g: usize) -> TautClass {
    let mut c = TautClass::one(g, RingMode::Compact);
    let mut dual = TautClass::one(g, RingMode::Compact);
    for i in 1..=g {
        let l = lam(g, &[i]);
        c = c.add(&l).unwrap();
        dual = if i % 2 == 0 {
            dual.add(&l)
        } else {
            dual.sub(&l)
        }
        .unwrap();
    }
    c.mul(&dual).unwrap()
}

fn criterion_09_ring_oracle_equivalence() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for g in 1..=4 {
        let oracle = OracleRing::new(g).unwrap();
        let b = basis(g, RingMode::Compact);
        for x in &b {
            for y in &b {
                let mut idx = x.indices();
                idx.extend(y.indices());
                idx.sort_unstable();
                let fast = lam(g, &idx);
                let slow = oracle.reduce(&idx).unwrap();
                if fast != slow {
                    failures.push(format!("g={g} {x}*{y}: rewriting {fast}, oracle {slow}"));
                }
            }
        }
    }
    for g in 1..=6 {
        check(
            &mut failures,
            &format!("relation g={g}"),
            TautClass::one(g, RingMode::Compact),
            total_chern_relation(g),
        );
        let n = (g * (g - 1) / 2) as u32;
        let last = lambda1_power(g, RingMode::Open, n).unwrap();
        let beyond = lambda1_power(g, RingMode::Open, n + 1).unwrap();
        check(
            &mut failures,
            &format!("open l1^{n} nonzero, g={g}"),
            false,
            last.is_zero(),
        );
        check(
            &mut failures,
            &format!("open l1^{} zero, g={g}", n + 1),
            true,
            beyond.is_zero(),
        );
    }
    for g in 1..=5 {
        let b = basis(g, RingMode::Compact);
        let top = LambdaMonomial::full(g);
        let matrix: Vec<Vec<Rational>> = b
            .iter()
            .map(|x| {
                b.iter()
                    .map(|y| {
                        let mut idx = x.indices();
                        idx.extend(y.indices());
                        lam(g, &idx).coeff(top).coeff(0)
                    })
                    .collect()
            })
            .collect();
        check(
            &mut failures,
            &format!("pairing rank g={g}"),
            b.len(),
            agcycles::arith::rank(&matrix),
        );
    }
    report(
        9,
        "ring oracle, relations, Gorenstein pairing",
        &failures,
        start.elapsed(),
        Duration::from_secs(300),
    )
}

fn random_poly(rng: &mut ChaCha8Rng, g: usize) -> MPoly<i128> {
    let mut f = MPoly::zero();
    for _ in 0..rng.gen_range(1..6) {
        let mut m = Monomial::ONE;
        for i in 1..=g {
            m = m.with_exponent(Var::X(i), rng.gen_range(0..4));
            m = m.with_exponent(Var::Y(i), rng.gen_range(0..2));
        }
        f.add_term(m, &rng.gen_range(-6i128..=6));
    }
    f
}

fn apply(f: &MPoly<i128>, g: usize, ops: &[usize]) -> MPoly<i128> {
    ops.iter()
        .rev()
        .fold(f.clone(), |acc, &i| acc.divided_difference(g, i).unwrap())
}

fn criterion_10_operator_properties() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut squares, mut braids, mut pfaffians) = (0, 0, 0);
    for trial in 0..TRIALS {
        let g = rng.gen_range(2..=4);
        let f = random_poly(&mut rng, g);
        for i in 1..=g {
            squares += 1;
            if !apply(&f, g, &[i, i]).is_zero() {
                failures.push(format!("trial {trial}: d{i}^2 f != 0 for f = {f}"));
            }
        }
        for i in 1..g {
            braids += 1;
            let (lhs, rhs) = if i + 1 < g {
                (
                    apply(&f, g, &[i, i + 1, i]),
                    apply(&f, g, &[i + 1, i, i + 1]),
                )
            } else {
                (apply(&f, g, &[i, g, i, g]), apply(&f, g, &[g, i, g, i]))
            };
            if lhs != rhs {
                failures.push(format!("trial {trial}: braid at {i} fails for f = {f}"));
            }
        }
        let n = 2 * rng.gen_range(1..=3);
        let mut m = vec![vec![MPoly::<i128>::zero(); n]; n];
        for r in 0..n {
            for c in r + 1..n {
                let mut e = MPoly::zero();
                for v in 1..=2 {
                    e.add_term(Monomial::var(Var::L(v)), &rng.gen_range(-4i128..=4));
                }
                e.add_term(Monomial::ONE, &rng.gen_range(-4i128..=4));
                m[c][r] = e.neg();
                m[r][c] = e;
            }
        }
        pfaffians += 1;
        let pf = pfaffian(&m).unwrap();
        if pf.mul(&pf) != determinant(&m, &MPoly::one()) {
            failures.push(format!("trial {trial}: Pf^2 != det for n={n}"));
        }
    }
    check(
        &mut failures,
        "enough trials",
        true,
        squares >= 100 && braids >= 100 && pfaffians >= 100,
    );
    report(
        10,
        "divided differences and Pfaffians",
        &failures,
        start.elapsed(),
        Duration::from_secs(30),
    )
}

/// Each single flip must break a row that the frozen conventions reproduce
/// as printed, so the table pins every switch on its own.
fn criterion_11_convention_falsifiability() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let printed = published_g3();
    let frozen = compare_rows(&strata_table(3, Conventions::FROZEN).unwrap(), &printed);
    for (name, conv) in Conventions::single_flips() {
        let flipped = compare_rows(&strata_table(3, conv).unwrap(), &printed);
        let broken: Vec<String> = frozen
            .iter()
            .zip(&flipped)
            .filter(|(a, b)| a.matches() && !b.matches())
            .map(|(a, _)| a.mu.to_string())
            .collect();
        if broken.is_empty() {
            failures.push(format!(
                "flipping {name} breaks no row matched by the frozen choice"
            ));
        } else {
            notes.push(format!("flipping {name} breaks {}", broken.join(" ")));
        }
    }
    let ok = report(
        11,
        "convention falsifiability",
        &failures,
        start.elapsed(),
        Duration::from_secs(60),
    );
    for note in notes {
        println!("    {note}");
    }
    ok
}

fn main() -> ExitCode {
    let criteria: [fn() -> bool; 11] = [
        criterion_01_proportionality_constants,
        criterion_02_lambda1_top_degrees,
        criterion_03_g3_pushforward_table,
        criterion_04_weyl_table,
        criterion_05_ta_formulas,
        criterion_06_mass_formulas,
        criterion_07_torsion_bounds,
        criterion_08_boundary_classes,
        criterion_09_ring_oracle_equivalence,
        criterion_10_operator_properties,
        criterion_11_convention_falsifiability,
    ];
    let mut failed = 0;
    for (n, criterion) in (1..).zip(criteria) {
        // A panic inside a criterion counts as a failure, not an abort.
        let ok = panic::catch_unwind(criterion).unwrap_or_else(|_| {
            println!("criterion {n}: FAIL (panicked)");
            false
        });
        if !ok {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
