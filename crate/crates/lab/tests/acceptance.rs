//! One line per acceptance criterion. Criteria whose failure is established and explained
//! in the project notes are reported as FAIL without failing the run; any other failure does.

use std::process::ExitCode;
use std::time::Instant;

use hesse_lab::{run, HarnessConfig, Status};

struct Criterion {
    number: u32,
    title: &'static str,
    globs: &'static [&'static str],
    budget_s: f64,
    /// Checks known to fail for reasons recorded in the notes.
    known_failures: &'static [&'static str],
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "configuration (12_3, 9_4) and matrix triples", globs: &["hesse.configuration.incidence"], budget_s: 1.0, known_failures: &[] },
    Criterion { number: 2, title: "Hessian identity and duality", globs: &["hesse.identity.a", "hesse.identity.duality"], budget_s: 5.0, known_failures: &[] },
    Criterion { number: 3, title: "discriminant identity and j-values", globs: &["hesse.identity.b", "hesse.j_values"], budget_s: 60.0, known_failures: &[] },
    Criterion {
        number: 4,
        title: "group orders and actions",
        globs: &["groups.order.*", "groups.parameter_image", "groups.base_points"],
        budget_s: 60.0,
        known_failures: &[],
    },
    Criterion {
        number: 5,
        title: "invariants",
        globs: &["groups.invariance.*", "hesse.identity.c", "hesse.identity.d", "hesse.identity.e"],
        budget_s: 60.0,
        known_failures: &[],
    },
    Criterion {
        number: 6,
        title: "Halphen suite",
        globs: &["hesse.identity.f", "groups.halphen.permutations", "hesse.halphen.pairs", "ellaw.nine_torsion.*"],
        budget_s: 120.0,
        known_failures: &[],
    },
    Criterion {
        number: 7,
        title: "cuspidal sextic",
        globs: &["hesse.sextic.cusps", "hesse.identity.n", "hesse.sextic.relative_invariance"],
        budget_s: 60.0,
        known_failures: &[],
    },
    Criterion { number: 8, title: "relation fits", globs: &["hesse.relation.fits"], budget_s: 60.0, known_failures: &[] },
    Criterion {
        number: 9,
        title: "torsion tables",
        globs: &["ellaw.three_torsion.*", "ellaw.two_torsion.*", "ellaw.translations"],
        budget_s: 60.0,
        known_failures: &[],
    },
    Criterion {
        number: 10,
        title: "surface identities and symplectic ratios",
        globs: &["surface.identity.i", "surface.identity.j", "surface.identity.k", "groups.symplectic.*"],
        budget_s: 60.0,
        known_failures: &["surface.identity.k"],
    },
    Criterion {
        number: 11,
        title: "lattice suite",
        globs: &[
            "lattice.y.det",
            "lattice.a2m6.snf",
            "lattice.a2m3.norm12",
            "lattice.a2m6.embed_a2m2",
            "lattice.a2m6.embed_a2m3",
            "lattice.shioda_tate.*",
        ],
        budget_s: 30.0,
        known_failures: &[],
    },
    Criterion {
        number: 12,
        title: "extras",
        globs: &["hesse.identity.l", "surface.identity.h", "hesse.dual_curve.*", "hesse.dynamics.*", "ellaw.tangent_sextic.l_0", "ellaw.tangent_sextic.l_1"],
        budget_s: 180.0,
        known_failures: &["ellaw.tangent_sextic.l_0"],
    },
];

fn main() -> ExitCode {
    let mut unexpected = vec![];
    let mut passed = 0;
    let start = Instant::now();
    for c in CRITERIA {
        let config = HarnessConfig { filters: c.globs.iter().map(|g| g.to_string()).collect(), ..HarnessConfig::default() };
        let t = Instant::now();
        let report = match run(&config) {
            Ok(r) => r,
            Err(e) => {
                println!("criterion {:>2} FAIL  {}: {e}", c.number, c.title);
                unexpected.push(format!("{}: {e}", c.number));
                continue;
            }
        };
        let secs = t.elapsed().as_secs_f64();
        let failed: Vec<&str> = report.results.iter().filter(|r| r.status == Status::Fail).map(|r| r.check_id.as_str()).collect();
        let in_budget = secs <= c.budget_s;
        let ok = failed.is_empty() && in_budget;
        if ok {
            passed += 1;
        }
        let mut line = format!("criterion {:>2} {}  {} ({} checks, {:.2} s, budget {} s)", c.number, if ok { "PASS" } else { "FAIL" }, c.title, report.results.len(), secs, c.budget_s);
        if !failed.is_empty() {
            line.push_str(&format!(" failed: {}", failed.join(", ")));
        }
        if !in_budget {
            line.push_str(" over budget");
        }
        println!("{line}");
        for f in &failed {
            if !c.known_failures.contains(f) {
                unexpected.push(format!("{}: {f}", c.number));
            }
        }
        for k in c.known_failures {
            if !report.results.iter().any(|r| r.check_id == *k) {
                unexpected.push(format!("{}: {k} missing from the registry", c.number));
            }
        }
        if !in_budget {
            unexpected.push(format!("{}: {:.1} s over the {} s budget", c.number, secs, c.budget_s));
        }
    }
    println!("{passed}/{} criteria pass, total {:.1} s", CRITERIA.len(), start.elapsed().as_secs_f64());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {}", unexpected.join("; "));
        ExitCode::FAILURE
    }
}
