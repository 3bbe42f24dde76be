//! End-to-end checks, one line per criterion. Run with
//! `cargo test -p fplrs --test acceptance`.

use std::sync::Arc;
use std::time::{Duration, Instant};

use fplrs::fpl::{asm_count_formula, count_configs, refined_counts, PsiTable};
use fplrs::groundstate::{rs_residual, stationary_vector};
use fplrs::gyration::{class_plaquette_sums, generalized_gyration_check, verify_h, SquareGyration};
use fplrs::identities::{c_rectangle, gyration_direction, run_suite};
use fplrs::lattice::{build_square, Sign};
use fplrs::random::random_valid_triplet;
use fplrs::relations::{check_close_add, check_close_add_product, check_tl, exhaustive};
use fplrs::{rotation_classes, LinkPattern};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every comparison below is exact: integers, big integers or big
/// rationals, never floating point.
const TOLERANCE: &str = "exact";
/// Wall-clock budget for enumerating the `n = 7` square.
const N7_BUDGET: Duration = Duration::from_secs(300);
/// Random `(pattern, index)` samples per size for the relation suite.
const RANDOM_SAMPLES: usize = 10_000;
/// Random general domains for the `H` checks, and their size cap.
const RANDOM_DOMAINS: usize = 50;
const RANDOM_DOMAIN_CELLS: usize = 30;
/// Random domains for the generalized gyration check.
const RANDOM_GG_DOMAINS: usize = 30;
const RANDOM_GG_CELLS: usize = 20;
const SEED: u64 = 20_061_017;

struct Outcome {
    passed: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn bad(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

fn counting() -> Outcome {
    let expected = [1u64, 2, 7, 42, 429, 7436, 218348];
    let mut found = Vec::new();
    let start = Instant::now();
    let mut n7_time = Duration::ZERO;
    for n in 1..=7 {
        let t0 = Instant::now();
        let (d, t) = build_square(n, Sign::Plus);
        let c = count_configs(&Arc::new(d), &t).unwrap();
        if n == 7 {
            n7_time = t0.elapsed();
        }
        let formula = asm_count_formula(n);
        if BigUint::from(c) != formula || c != expected[n - 1] {
            return bad(format!("n = {n}: enumerated {c}, formula {formula}"));
        }
        found.push(c.to_string());
    }
    if n7_time > N7_BUDGET {
        return bad(format!("n = 7 took {n7_time:?}, budget {N7_BUDGET:?}"));
    }
    ok(format!(
        "A_n = {} for n = 1..7 (n = 7 in {:.1?}, total {:.1?})",
        found.join(", "),
        n7_time,
        start.elapsed()
    ))
}

fn psi(n: usize, sign: Sign) -> PsiTable {
    refined_counts(n, sign, None)
}

fn razumov_stroganov() -> Outcome {
    for n in 1..=6 {
        let v = psi(n, Sign::Plus).to_vector();
        let r = rs_residual(&v);
        if !r.is_zero() {
            return bad(format!("n = {n}: (H - 2n) Psi has {} nonzero entries", r.support()));
        }
        let k = match stationary_vector(n) {
            Ok(k) => k,
            Err(e) => return bad(format!("n = {n}: {e}")),
        };
        if let Some((p, a, b)) = v.first_difference(&k) {
            return bad(format!("n = {n}: Psi({p}) = {a}, kernel {b}"));
        }
    }
    ok("(H - 2n) Psi = 0 and kernel vector = Psi for n = 1..6")
}

fn dihedral() -> Outcome {
    for n in 1..=6 {
        let plus = psi(n, Sign::Plus);
        let minus = psi(n, Sign::Minus);
        for p in LinkPattern::all(n) {
            if plus.get(&p) != plus.get(&p.rotate(1)) {
                return bad(format!("n = {n}: Psi({p}) != Psi(R {p})"));
            }
            if plus.get(&p) != minus.get(&p) {
                return bad(format!("n = {n}: Psi+({p}) = {}, Psi-({p}) = {}", plus.get(&p), minus.get(&p)));
            }
        }
    }
    ok("Psi(pi) = Psi(R pi) and Psi+ = Psi- for n = 1..6")
}

fn propp() -> Outcome {
    for n in 2..=6 {
        let got = psi(n, Sign::Plus).get(&LinkPattern::serial(n));
        let want = asm_count_formula(n - 1);
        if got != want {
            return bad(format!("n = {n}: Psi(serial) = {got}, A_(n-1) = {want}"));
        }
    }
    ok("Psi(()()...()) = A_(n-1) for n = 2..6")
}

fn orbit_sums() -> Outcome {
    let mut orbits_seen = 0;
    for n in 1..=5 {
        let ctx = SquareGyration::new(n).unwrap();
        let orbits = ctx.all_orbits().unwrap();
        orbits_seen += orbits.len();
        for o in &orbits {
            for a in ctx.domain.plaquettes() {
                let s = o.plaquette_sum(a);
                if s != 0 {
                    return bad(format!("n = {n}: orbit sum {s} at ({}, {})", a.x, a.y));
                }
            }
        }
        for a in ctx.domain.plaquettes() {
            for (rep, (p, m)) in class_plaquette_sums(&ctx, a).unwrap() {
                if p != m {
                    return bad(format!("n = {n}: class [{rep}] at ({}, {}): +{p} / -{m}", a.x, a.y));
                }
            }
        }
    }
    // the plaquette in column 3, row 2, counted from 1 at the lower left
    let ctx = SquareGyration::new(4).unwrap();
    let a = ctx.domain.plaquette_at(2, 1).unwrap();
    let sums = class_plaquette_sums(&ctx, a).unwrap();
    let classes = rotation_classes(4).len();
    let balanced: Vec<String> = sums.iter().map(|(r, (p, m))| format!("[{r}] {p}/{m}")).collect();
    if sums.values().any(|(p, m)| p != m) {
        return bad(format!("n = 4 plaquette (3,2): {}", balanced.join(", ")));
    }
    ok(format!(
        "{orbits_seen} orbits for n = 1..5, all orbit and class sums 0; n = 4 plaquette (3,2) over {} of {classes} classes: {}",
        sums.len(),
        balanced.join(", ")
    ))
}

fn identity_suite() -> Outcome {
    let d = match gyration_direction() {
        Ok(d) => d,
        Err(e) => return bad(format!("gyration exponent not pinned: {e}")),
    };
    let mut total = 0;
    for n in 1..=5 {
        let results = match run_suite(n) {
            Ok(r) => r,
            Err(e) => return bad(format!("n = {n}: {e}")),
        };
        total += results.len();
        if let Some(r) = results.iter().find(|r| !r.passed()) {
            return bad(format!("{} n = {} j = {:?}: {:?}", r.identity, n, r.j, r.witness));
        }
    }
    ok(format!("{total} checks pass for n = 1..5; gyration relations use R^{d} (R^{} for the even-column b relation)", -d))
}

fn property_suites() -> Outcome {
    for n in 1..=4 {
        if let (_, Some(f)) = exhaustive(n) {
            return bad(format!("n = {n}: {f}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in 5..=7 {
        let all = LinkPattern::all(n);
        let m = 2 * n;
        for _ in 0..RANDOM_SAMPLES {
            let p = &all[rng.gen_range(0..all.len())];
            let (i, j) = (rng.gen_range(1..=m), rng.gen_range(1..=m + 1));
            let mask: u32 = rng.gen_range(0..1 << (m - 1));
            let set: Vec<usize> = (1..m).filter(|k| mask >> (k - 1) & 1 == 1 && mask >> k & 1 == 0).collect();
            let f = check_tl(p, i, j.min(m))
                .or_else(|| check_close_add(p, i.min(m - 1), j))
                .or_else(|| check_close_add_product(p, &set));
            if let Some(f) = f {
                return bad(format!("n = {n}: {f}"));
            }
        }
    }
    for n in 1..=4 {
        let (d, t) = build_square(n, Sign::Plus);
        let d = Arc::new(d);
        for parity in [Sign::Plus, Sign::Minus] {
            for tau in [t.clone(), t.complement()] {
                let r = verify_h(&d, &tau, parity).unwrap();
                if !r.passed() {
                    return bad(format!("square n = {n} {parity}: {r:?}"));
                }
            }
        }
    }
    let mut cells = 0;
    let mut with_swaps = 0;
    for _ in 0..RANDOM_DOMAINS {
        let (d, t) = random_valid_triplet(&mut rng, RANDOM_DOMAIN_CELLS);
        cells = cells.max(d.num_cells());
        for parity in [Sign::Plus, Sign::Minus] {
            let r = match verify_h(&d, &t, parity) {
                Ok(r) => r,
                Err(e) => return bad(format!("{} {t}: {e}", d.to_json())),
            };
            with_swaps += usize::from(!r.swaps.is_empty());
            if !r.passed() {
                return bad(format!("{} {t} {parity}: {r:?}", d.to_json()));
            }
        }
    }
    ok(format!(
        "relations exhaustive n <= 4 and {RANDOM_SAMPLES} samples each n = 5..7; H on the square n <= 4 and {RANDOM_DOMAINS} random domains (up to {cells} cells, {with_swaps} pairings with corner swaps)"
    ))
}

fn generalized_gyration() -> Outcome {
    let mut sets = Vec::new();
    for n in 3..=5usize {
        for j in 1..=n.div_ceil(2) {
            let (d, t) = c_rectangle(n, j).unwrap();
            let sides = match generalized_gyration_check(&d, &t) {
                Ok(s) => s,
                Err(e) => return bad(format!("n = {n} j = {j}: {e}")),
            };
            let prev = if j == 1 { 2 * t.n() } else { j - 1 };
            let mut j1: Vec<Vec<usize>> = sides.iter().map(|s| s.j1_base.clone()).collect();
            j1.sort();
            let mut want = vec![vec![prev], vec![j]];
            want.sort();
            if j1 != want || sides.iter().any(|s| !s.j2.is_empty()) {
                return bad(format!("n = {n} j = {j}: J1 sets {j1:?}, expected {want:?} and empty J2"));
            }
            if let Some(s) = sides.iter().find(|s| !s.holds()) {
                return bad(format!("n = {n} j = {j}: relation fails for the {} pairing", s.parity));
            }
            if n == 4 {
                sets.push(format!("j={j}: +{:?} -{:?}", sides[0].j1_base, sides[1].j1_base));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for _ in 0..RANDOM_GG_DOMAINS {
        let (d, t) = random_valid_triplet(&mut rng, RANDOM_GG_CELLS);
        for s in generalized_gyration_check(&d, &t).unwrap() {
            if !s.holds() {
                return bad(format!("{} {t} {}", d.to_json(), s.parity));
            }
        }
    }
    ok(format!(
        "holds on the frozen c rectangle n = 3..5 with J1 = {{j-1}} and {{j}} for the two pairings, J2 empty (n = 4: {}); and on {RANDOM_GG_DOMAINS} random domains",
        sets.join("; ")
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("counting", counting),
        ("razumov-stroganov", razumov_stroganov),
        ("dihedral symmetry", dihedral),
        ("serial arcs", propp),
        ("orbit sums", orbit_sums),
        ("identity suite", identity_suite),
        ("property suites", property_suites),
        ("generalized gyration", generalized_gyration),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let o = run();
        failures += usize::from(!o.passed);
        println!(
            "criterion {} {name}: {} [{TOLERANCE}, {:.1?}] {}",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" },
            t0.elapsed(),
            o.detail
        );
    }
    if failures > 0 {
        eprintln!("{failures} criteria failed");
        std::process::exit(1);
    }
}
