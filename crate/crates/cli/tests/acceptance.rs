//! One PASS/FAIL line per acceptance criterion, with the tolerance and time
//! limit each is held to.

use std::time::{Duration, Instant};

use ninf_core::certify::*;
use ninf_core::construct::*;
use ninf_core::verify::*;
use ninf_core::{Hypercube, LatinSquare};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn latin_again(l: &LatinSquare) -> bool {
    LatinSquare::from_cells(l.order(), l.cells().to_vec()).is_ok()
}

fn one_based(x: &XMember) -> ([usize; 3], [usize; 3]) {
    (
        [x.w2.x1 + 1, x.w2.x2 + 1, x.w2.y3() + 1],
        [x.w3.r1 + 1, x.w3.r2 + 1, x.w3.sigma as usize + 1],
    )
}

fn fixtures_ok() -> Outcome {
    let squares = [fixtures::e(), fixtures::a8(), fixtures::b8(), fixtures::a9(), fixtures::b9()];
    let sq = squares.iter().all(|l| latin_again(l) && find_proper_subsquare(l).is_none());
    let cubes = [fixtures::cube4(), fixtures::cube6()];
    let cb = cubes.iter().all(|h| {
        Hypercube::from_data(h.order(), h.dim(), h.data().to_vec()).is_ok() && find_proper_subhypercube(h).is_none()
    });
    outcome(sq && cb, format!("5 squares N∞: {sq}, 2 cubes N∞: {cb}"))
}

fn pairs_ok() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (data, d, tuple) in [
        (CorrupterData::alpha8(), [4, 8, 6], [5, 7, 4, 6, 7, 4]),
        (CorrupterData::alpha9(), [2, 8, 6], [3, 6, 2, 5, 9, 4]),
    ] {
        let pair = check_corrupting_pair(&data.a, &data.b);
        let props = check_properties(&data);
        let d_ok = data.d.map(|x| x + 1) == d;
        let t_ok = data.p3.to_one_based() == tuple;
        ok &= pair.passed() && props.passed() && d_ok && t_ok;
        notes.push(format!(
            "order {}: pair {} properties {} d {:?} p3 {:?}",
            data.order(),
            pair.passed(),
            props.passed(),
            d,
            tuple
        ));
    }
    let listed = CycleTuple::from_one_based([5, 7, 2, 6, 7, 4]);
    let a8 = CorrupterData::alpha8();
    notes.push(format!(
        "listed order-8 tuple (5,7,2,6,7,4) passes P3: {} (highlighted cells give (5,7,4,6,7,4))",
        check_cycle_tuple(&a8.a, &a8.d, &listed)
    ));
    outcome(ok, notes.join("; "))
}

fn bases_ok() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in [16, 24, 32, 36, 48, 54, 64, 72] {
        match base_square(n, CertLevel::FullyVerified) {
            Ok(x) => {
                let good = x.level == CertLevel::FullyVerified && x.shift == 1;
                ok &= good;
                if n == 24 {
                    ok &= one_based(&x) == ([2, 7, 16], [2, 5, 3]);
                }
                if n == 72 {
                    ok &= one_based(&x) == ([2, 7, 48], [2, 5, 19]);
                }
                let (w2, w3) = one_based(&x);
                notes.push(format!("{n}: rho{w2:?} rows/sym {w3:?}"));
            }
            Err(e) => {
                ok = false;
                notes.push(format!("{n}: {e}"));
            }
        }
    }
    for (n, seed) in SEARCH_SEEDS.into_iter().filter(|p| p.0 != 10) {
        let t = Instant::now();
        let found = search_ninf(n, seed, SEARCH_BUDGET);
        let stored = searched_square(n);
        let cert = found.as_ref().ok().and_then(|l| certify_x_member(l, 1, CertLevel::FullyVerified).ok());
        let good = found.is_ok() && found.as_ref().ok() == stored.as_ref().ok() && cert.is_some();
        ok &= good;
        notes.push(format!("{n}: search seed {seed} + certification {good} in {:.1?}, stored copy matches", t.elapsed()));
    }
    outcome(ok, notes.join("; "))
}

fn recursion_ok() -> Outcome {
    let Ok(base) = base_square(12, CertLevel::FullyVerified) else {
        return outcome(false, "base 12 failed");
    };
    let mut ok = true;
    let mut notes = Vec::new();
    for alpha in [8, 9] {
        let t = Instant::now();
        let Ok(x) = extend(&base, alpha, ExtendOptions { verify_below: 0, condition_i: false }) else {
            return outcome(false, format!("extend by {alpha} failed"));
        };
        let none = find_proper_subsquare(&x.square).is_none();
        let w = check_condition_ii(&x.square, x.shift, &x.w2) && check_condition_iii(&x.square, x.shift, &x.w3);
        let in_time = t.elapsed() < Duration::from_secs(600);
        ok &= none && w && in_time;
        notes.push(format!("order {}: N∞ {none}, witnesses {w}, {:.1?}", x.order(), t.elapsed()));
        if alpha == 8 {
            let t = Instant::now();
            let ci = check_condition_i(&x.square, x.shift).unwrap_or(false);
            ok &= ci && t.elapsed() < Duration::from_secs(1800);
            notes.push(format!("condition (i) at 96: {ci}, {:.1?}", t.elapsed()));
        }
    }
    outcome(ok, notes.join("; "))
}

fn deep_chain_ok() -> Outcome {
    let Ok(base) = base_square(12, CertLevel::ConditionsChecked) else {
        return outcome(false, "base 12 failed");
    };
    let opts = ExtendOptions::default();
    let Ok(y) = extend(&base, 8, opts).and_then(|x| extend(&x, 8, opts)) else {
        return outcome(false, "extension to 768 failed");
    };
    let t = Instant::now();
    let ic = count_intercalates(&y.square);
    let ic_time = t.elapsed();
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let sampled = sampled_subsquare(&y.square, 1_000_000, &mut rng);
    let s_time = t.elapsed();
    let full = if std::env::var_os("NINF_FULL_768").is_some() {
        let t = Instant::now();
        format!("full N∞ check {} in {:.1?}", is_ninf(&y.square), t.elapsed())
    } else {
        "full N∞ check skipped (set NINF_FULL_768=1)".to_string()
    };
    let ok = y.order() == 768 && ic == 0 && sampled.is_none() && ic_time < Duration::from_secs(600);
    outcome(
        ok,
        format!(
            "order {} ({}): intercalates {ic} in {ic_time:.1?}; 10^6 closure seeds found {} in {s_time:.1?}; {full}",
            y.order(),
            y.level.name(),
            if sampled.is_none() { "none" } else { "a subsquare" },
        ),
    )
}

fn detectors_ok() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut squares: Vec<LatinSquare> = (2..=8).map(LatinSquare::cyclic).collect();
    for n in 4..=7 {
        squares.extend((0..100).map(|_| random_square(n, &mut rng)));
    }
    let mut mismatches = 0;
    let mut with_sub = 0;
    for l in &squares {
        let brute = brute_force_subsquares(l).expect("order at most 8");
        let found = find_proper_subsquare(l);
        with_sub += usize::from(!brute.is_empty());
        if found.as_ref() != brute.first() || is_ninf(l) != brute.is_empty() {
            mismatches += 1;
        }
    }
    outcome(
        mismatches == 0,
        format!("{} squares ({with_sub} with subsquares), {mismatches} mismatches", squares.len()),
    )
}

fn boost_ok() -> Outcome {
    let mut squares: Vec<LatinSquare> =
        (2..=12).filter(|n| ![4, 6].contains(n)).filter_map(|n| build_square(n).ok()).collect();
    squares.extend([fixtures::e(), fixtures::a8(), fixtures::b8(), fixtures::a9(), fixtures::b9()]);
    let certified = squares.iter().filter(|l| is_ninf(l)).count();
    let clean = squares
        .iter()
        .all(|l| find_proper_subhypercube(&Hypercube::from_square(l).boost(3).unwrap()).is_none());
    let neg = find_proper_subhypercube(&Hypercube::from_square(&LatinSquare::cyclic(4)).boost(3).unwrap());
    outcome(
        clean && neg.is_some() && certified == squares.len(),
        format!("{} squares boosted to d=3 clean: {clean}; cyclic 4 control found {:?}", squares.len(), neg.map(|b| b.axes)),
    )
}

fn planner_ok() -> Outcome {
    let mut count = 0;
    let mut ok = true;
    let mut p2 = 1usize;
    while p2 <= 1_000_000 {
        p2 *= 2;
        let mut n = p2;
        while n <= 1_000_000 {
            if n >= 12 {
                count += 1;
                ok &= match plan_order(n) {
                    Ok(p) => p.order() == n && BASE_ORDERS.contains(&p.base),
                    Err(_) => false,
                };
            }
            n *= 3;
        }
    }
    outcome(ok, format!("{count} orders"))
}

fn cli(args: &[String], stdin: &[u8]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut input = stdin;
    let code = ninf_cli::run(
        std::iter::once("ninf".to_string()).chain(args.iter().cloned()),
        &mut input,
        &mut out,
        &mut err,
    );
    (code, out)
}

fn gen_surface_ok() -> Outcome {
    let mut ok = true;
    let mut ones = Vec::new();
    let mut budget_limited = 0;
    for n in 2..=12usize {
        for d in [2usize, 3] {
            let args: Vec<String> =
                ["gen", "--order", &n.to_string(), "--dim", &d.to_string(), "--no-cache"].map(String::from).to_vec();
            let (code, out) = cli(&args, b"");
            match code {
                0 => {
                    let mode = if d == 2 { "ninf" } else { "hypercube" };
                    let (vcode, _) = cli(&["verify", "-", "--mode", mode].map(String::from), &out);
                    ok &= vcode == 0;
                }
                1 => ones.push((n, d)),
                3 => budget_limited += 1,
                _ => ok = false,
            }
        }
    }
    ok &= ones == [(4, 2), (6, 2)];
    outcome(ok, format!("exit 1 at {ones:?}, {budget_limited} budget-limited cells, all emitted objects re-verify: {ok}"))
}

/// Name, tolerance, time limit in seconds, check.
type Criterion = (&'static str, &'static str, u64, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("fixtures", "exact", 1, fixtures_ok),
        ("corrupting pairs", "exact", 300, pairs_ok),
        ("base cases", "exact", 900, bases_ok),
        ("recursion", "exact", 2400, recursion_ok),
        ("deep chain", "exact, sampled", 1800, deep_chain_ok),
        ("detector vs brute force", "exact", 600, detectors_ok),
        ("boost preservation", "exact", 600, boost_ok),
        ("planner", "exact", 1, planner_ok),
        ("generation surface", "exact", 600, gen_surface_ok),
    ];
    let mut failed = 0;
    for (i, (name, tol, limit, run)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let o = run();
        let took = t.elapsed();
        let pass = o.ok && took <= Duration::from_secs(limit);
        failed += usize::from(!pass);
        println!(
            "criterion {} {name}: {} [tolerance {tol}, limit {limit}s, took {took:.2?}] {}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
