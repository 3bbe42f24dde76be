//! Verification suites behind `fplrs verify`.

use std::sync::Arc;

use clap::ValueEnum;
use fplrs::fpl::refined_counts;
use fplrs::groundstate::verify_rs;
use fplrs::gyration::{class_plaquette_sums, generalized_gyration_check, gyration_rotation, verify_h, SquareGyration};
use fplrs::identities::{c_rectangle, gyration_direction, run_suite};
use fplrs::lattice::{build_square, Sign};
use fplrs::relations::exhaustive;
use fplrs::LinkPattern;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Rs,
    Wieland,
    Orbits,
    Identities,
    Tl,
    GyrationGeneral,
}

impl Suite {
    /// Largest `n` run without `--allow-large`.
    pub fn cap(self) -> usize {
        match self {
            Suite::Rs => 7,
            Suite::Wieland | Suite::Orbits | Suite::Identities | Suite::GyrationGeneral => 6,
            Suite::Tl => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rs => "rs",
            Suite::Wieland => "wieland",
            Suite::Orbits => "orbits",
            Suite::Identities => "identities",
            Suite::Tl => "tl",
            Suite::GyrationGeneral => "gyration-general",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub check: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    pub status: &'static str,
    pub detail: String,
}

fn check(suite: Suite, name: impl Into<String>, n: usize, j: Option<usize>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        suite: suite.name(),
        check: name.into(),
        n,
        j,
        status: if passed { "pass" } else { "fail" },
        detail: detail.into(),
    }
}

fn err(suite: Suite, name: &str, n: usize, e: impl std::fmt::Display) -> Check {
    check(suite, name, n, None, false, e.to_string())
}

pub fn run(suite: Suite, n_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        match suite {
            Suite::Rs => rs(n, &mut out),
            Suite::Wieland => wieland(n, &mut out),
            Suite::Orbits => orbits(n, &mut out),
            Suite::Identities => identities(n, &mut out),
            Suite::Tl => {
                let (count, f) = exhaustive(n);
                let passed = f.is_none();
                let detail = f.unwrap_or_else(|| format!("{count} relations, e_i^2 = e_i among them"));
                out.push(check(suite, "tl+close/add", n, None, passed, detail));
            }
            Suite::GyrationGeneral => gyration_general(n, &mut out),
        }
    }
    out
}

fn rs(n: usize, out: &mut Vec<Check>) {
    match verify_rs(n) {
        Ok(r) => {
            let detail = match (&r.residual_witness, &r.kernel_witness) {
                (None, None) => format!("(H - 2n)|s> = 0, Psi = kernel vector, sum {}", r.total),
                (Some((p, c)), _) => format!("(H - 2n)|s> has {c} at {p}"),
                (None, Some((p, a, b))) => format!("Psi({p}) = {a}, kernel {b}"),
            };
            out.push(check(Suite::Rs, "razumov-stroganov", n, None, r.passed(), detail));
        }
        Err(e) => out.push(err(Suite::Rs, "razumov-stroganov", n, e)),
    }
}

fn wieland(n: usize, out: &mut Vec<Check>) {
    let s = Suite::Wieland;
    let (d, t) = build_square(n, Sign::Plus);
    let d = Arc::new(d);
    for (parity, tau) in [(Sign::Plus, t.clone()), (Sign::Minus, t.complement())] {
        match verify_h(&d, &tau, parity) {
            Ok(r) => out.push(check(
                s,
                format!("H{parity} involution and link conservation"),
                n,
                None,
                r.passed(),
                r.failure.clone().unwrap_or_else(|| format!("{} configurations", r.configs)),
            )),
            Err(e) => out.push(err(s, "H", n, e)),
        }
    }
    match SquareGyration::new(n).and_then(|ctx| gyration_rotation(&ctx)) {
        Ok(k) => out.push(check(s, "gyration rotates link patterns", n, None, !k.is_empty(), format!("exponents {k:?}"))),
        Err(e) => out.push(err(s, "gyration", n, e)),
    }
    let plus = refined_counts(n, Sign::Plus, None);
    let minus = refined_counts(n, Sign::Minus, None);
    let bad = LinkPattern::all(n)
        .into_iter()
        .find(|p| plus.get(p) != plus.get(&p.rotate(1)) || plus.get(p) != minus.get(p));
    out.push(check(
        s,
        "rotation invariance and Psi+ = Psi-",
        n,
        None,
        bad.is_none(),
        bad.map_or_else(|| "all patterns".to_string(), |p| format!("differs at {p}")),
    ));
}

fn orbits(n: usize, out: &mut Vec<Check>) {
    let s = Suite::Orbits;
    let ctx = match SquareGyration::new(n) {
        Ok(c) => c,
        Err(e) => return out.push(err(s, "orbits", n, e)),
    };
    let orbits = match ctx.all_orbits() {
        Ok(o) => o,
        Err(e) => return out.push(err(s, "orbits", n, e)),
    };
    for a in ctx.domain.plaquettes() {
        let bad = orbits.iter().map(|o| o.plaquette_sum(a)).find(|&v| v != 0);
        out.push(check(
            s,
            format!("orbit sums at ({}, {})", a.x, a.y),
            n,
            None,
            bad.is_none(),
            match bad {
                None => format!("0 over {} orbits", orbits.len()),
                Some(v) => format!("an orbit sums to {v}"),
            },
        ));
        match class_plaquette_sums(&ctx, a) {
            Ok(m) => {
                let bad = m.iter().find(|(_, (p, q))| p != q);
                out.push(check(
                    s,
                    format!("class sums at ({}, {})", a.x, a.y),
                    n,
                    None,
                    bad.is_none(),
                    match bad {
                        None => format!("balanced in {} classes", m.len()),
                        Some((r, (p, q))) => format!("[{r}]: +{p} / -{q}"),
                    },
                ));
            }
            Err(e) => out.push(err(s, "class sums", n, e)),
        }
    }
}

fn identities(n: usize, out: &mut Vec<Check>) {
    let s = Suite::Identities;
    if n == 1 {
        match gyration_direction() {
            Ok(d) => out.push(check(s, "gyration exponent", 0, None, true, format!("pinned to {d} on n = 3, 4"))),
            Err(e) => out.push(err(s, "gyration exponent", 0, e)),
        }
    }
    match run_suite(n) {
        Ok(rs) => {
            for r in rs {
                let detail = match &r.witness {
                    None => r.note.clone().unwrap_or_default(),
                    Some(w) => format!("{}: at {} lhs {} rhs {}", w.equation, w.pattern, w.lhs, w.rhs),
                };
                out.push(check(s, r.identity.clone(), n, r.j, r.passed(), detail));
            }
        }
        Err(e) => out.push(err(s, "identities", n, e)),
    }
}

fn gyration_general(n: usize, out: &mut Vec<Check>) {
    let s = Suite::GyrationGeneral;
    let (d, t) = build_square(n, Sign::Plus);
    match generalized_gyration_check(&d, &t) {
        Ok(sides) => {
            for g in sides {
                out.push(check(s, format!("square, {} pairing", g.parity), n, None, g.holds(), format!("J1 {:?} J2 {:?}", g.j1, g.j2)));
            }
        }
        Err(e) => out.push(err(s, "square", n, e)),
    }
    if n < 2 {
        return;
    }
    for j in 1..=n.div_ceil(2) {
        let r = c_rectangle(n, j).and_then(|(d, t)| generalized_gyration_check(&d, &t));
        match r {
            Ok(sides) => {
                for g in sides {
                    out.push(check(
                        s,
                        format!("c rectangle, {} pairing", g.parity),
                        n,
                        Some(j),
                        g.holds(),
                        format!("J1 {:?} J2 {:?}", g.j1_base, g.j2_base),
                    ));
                }
            }
            Err(e) => out.push(err(s, "c rectangle", n, e)),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn to_csv(checks: &[Check]) -> String {
    let mut out = String::from("suite,check,n,j,status,detail\n");
    for c in checks {
        out += &format!(
            "{},{},{},{},{},{}\n",
            c.suite,
            csv_field(&c.check),
            c.n,
            c.j.map(|j| j.to_string()).unwrap_or_default(),
            c.status,
            csv_field(&c.detail)
        );
    }
    out
}

pub fn to_text(checks: &[Check]) -> String {
    checks
        .iter()
        .map(|c| {
            let j = c.j.map(|j| format!(" j={j}")).unwrap_or_default();
            format!("{} {} n={}{}: {} {}\n", c.status.to_uppercase(), c.check, c.n, j, c.suite, c.detail)
        })
        .collect()
}
