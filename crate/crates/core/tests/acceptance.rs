//! Acceptance battery: one line per criterion.
//!
//! Every criterion has a pinned expectation. Criteria 1, 3 and 6 are known
//! to fail on specific, characterized inputs; for those the run also checks
//! that the failure keeps its shape and that the identity holds on the
//! domain where it is expected to. The process fails only when an outcome
//! departs from its expectation.

use std::time::{Duration, Instant};

use pregerst_core::verify::MUTATION_DETECTORS;
use pregerst_core::{
    parse_element, run_suite, CoproductId, Element, EnvelopeContext, FormsModel, Generator,
    QPart, ReportFormat, SuiteConfig, SuiteId, Verdict, VerificationReport, Word,
};

struct Criterion {
    id: u8,
    title: &'static str,
    limit: Duration,
    /// Whether the identity is expected to hold as stated.
    expect_pass: bool,
}

struct Observed {
    pass: bool,
    /// For expected failures: the failure matched its known shape and the
    /// restricted domain passed.
    as_characterized: bool,
    notes: Vec<String>,
}

impl Observed {
    fn new() -> Self {
        Observed {
            pass: true,
            as_characterized: true,
            notes: Vec::new(),
        }
    }

    fn report(&mut self, label: &str, r: &VerificationReport) {
        let s = &r.summary;
        if s.verdict != Verdict::Pass {
            self.pass = false;
        }
        self.notes.push(format!(
            "{label}: {}/{} zero{}",
            s.passed,
            s.checks,
            if s.aborted > 0 { format!(", {} aborted", s.aborted) } else { String::new() }
        ));
    }

    /// Notes each check's zero count; returns whether all of them passed.
    fn per_check(&mut self, r: &VerificationReport, checks: &[&str]) -> bool {
        let mut all = true;
        for c in checks {
            let total = r.checks(c).count();
            let bad = r.checks(c).filter(|x| x.verdict != Verdict::Pass).count();
            if bad > 0 || total == 0 {
                all = false;
            }
            self.notes.push(format!("{c} {}/{total}", total - bad));
        }
        self.pass &= all;
        all
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.as_characterized = false;
            self.notes.push(format!("UNEXPECTED: {}", what.into()));
        }
    }
}

fn config(suite: SuiteId, edit: impl FnOnce(&mut SuiteConfig)) -> SuiteConfig {
    let mut c = SuiteConfig::new(suite);
    edit(&mut c);
    c
}

fn run(suite: SuiteId, edit: impl FnOnce(&mut SuiteConfig)) -> VerificationReport {
    run_suite(&config(suite, edit)).expect("suite runs")
}

/// Inputs of the failing records, re-parsed so their shape can be inspected
/// (degrees are irrelevant for that).
fn failing(r: &VerificationReport, check: &str) -> Vec<Element> {
    r.checks(check)
        .filter(|x| x.verdict == Verdict::Fail)
        .map(|x| parse_element(&x.input[0], &|n| Ok(Generator::new(n, 0))).expect("input parses"))
        .collect()
}

fn head_len(w: &Word) -> usize {
    match w {
        Word::Pair(h, _) => h.tensor_len().unwrap_or(0),
        _ => 0,
    }
}

fn axioms() -> Observed {
    let mut o = Observed::new();
    let suites: [(SuiteId, &[&str]); 5] = [
        (SuiteId::ZinbielAxioms, &["ZINBIEL"]),
        (SuiteId::PrelieAxioms, &["PRELIE"]),
        (SuiteId::Compat, &["COMPAT_A", "COMPAT_B", "COMPAT_C"]),
        (SuiteId::GerstDerived, &["DERIVED_1", "DERIVED_2", "LEIBNIZ_GERST"]),
        (SuiteId::Aguiar, &["AGUIAR_1", "AGUIAR_2"]),
    ];
    for n in [2, 3] {
        o.notes.push(format!("n={n}:"));
        for (suite, checks) in suites {
            let r = run(suite, |c| {
                c.n_coords = n;
                c.samples = 200;
            });
            let all = o.per_check(&r, checks);
            if suite == SuiteId::Aguiar {
                // Known: both relations fail on forms (e.g. on three functions).
                for c in checks.iter() {
                    let bad = r.checks(c).filter(|x| x.verdict == Verdict::Fail).count();
                    o.require(bad > 0, format!("{c} no longer fails at n={n}"));
                }
            } else {
                o.require(all, format!("{suite} has a nonzero defect at n={n}"));
            }
        }
    }
    o
}

fn mu_shuffle() -> Observed {
    let mut o = Observed::new();
    let r = run(SuiteId::MuShuffleLemma, |c| {
        c.generators = vec![("a".into(), 0), ("b".into(), 1), ("c".into(), 2)];
        c.max_tensor_len = 6;
    });
    o.report("exhaustive p+q<=6, degrees {0,1,2}", &r);
    o
}

fn coalgebra_laws() -> Observed {
    let mut o = Observed::new();
    let r = run(SuiteId::LeibnizCoalgebra, |c| {
        c.generators = vec![("a".into(), 1), ("b".into(), 2), ("c".into(), 3)];
        c.max_tensor_len = 5;
    });
    o.per_check(&r, &["LEIBNIZ_COALG"]);
    let family = |c: &mut SuiteConfig| {
        c.max_tensor_len = 3;
        c.max_tail_factors = 2;
        c.max_factor_len = 2;
        c.samples = 100;
    };
    let perm = run(SuiteId::PermCoalgebra, family);
    o.per_check(&perm, &["PERM_COALG"]);
    let kappa = run(SuiteId::KappaCojacobi, family);
    o.per_check(&kappa, &["KAPPA_COSYM", "KAPPA_COJACOBI"]);
    let compat = run(SuiteId::KappaCompat, family);
    o.per_check(&compat, &["COMPAT_1", "COMPAT_2", "COMPAT_3"]);

    // Known: KAPPA_COJACOBI fails exactly on some pair words with a head of
    // tensor length 3, and holds whenever heads have length at most 2.
    let failures = failing(&kappa, "KAPPA_COJACOBI");
    let heads_ok = failures.iter().all(|e| e.keys().all(|w| head_len(w) == 3));
    o.require(heads_ok, "KAPPA_COJACOBI fails on a head shorter than 3");
    o.require(
        kappa.checks("KAPPA_COJACOBI").any(|x| x.verdict == Verdict::Fail),
        "KAPPA_COJACOBI no longer fails",
    );
    let others_ok = [&perm, &compat].iter().all(|r| r.passed())
        && kappa.checks("KAPPA_COSYM").all(|x| x.verdict == Verdict::Pass);
    o.require(others_ok, "a law other than KAPPA_COJACOBI failed");
    let short = run(SuiteId::KappaCojacobi, |c| {
        family(c);
        c.max_tensor_len = 2;
        c.seed = 7;
    });
    o.require(short.passed(), "KAPPA_COJACOBI fails on heads of length <= 2");
    o.notes.push(format!(
        "restricted to heads <= 2: KAPPA_COJACOBI {}/{}",
        short.checks("KAPPA_COJACOBI").filter(|x| x.verdict == Verdict::Pass).count(),
        short.checks("KAPPA_COJACOBI").count()
    ));
    o
}

fn r2_theorem() -> Observed {
    let mut o = Observed::new();
    for differential in [true, false] {
        let edit = |c: &mut SuiteConfig| {
            c.differential = differential;
            c.samples = 100;
            c.max_tensor_len = 3;
            c.max_factor_len = 2;
        };
        let d = if differential { "d" } else { "d=0" };
        o.report(&format!("pre-Lie ({d})"), &run(SuiteId::R2Prelie, edit));
        o.report(&format!("derivation ({d})"), &run(SuiteId::R2Derivation, edit));
    }
    o
}

fn envelope_squares() -> Observed {
    let mut o = Observed::new();
    for differential in [true, false] {
        let d = if differential { "d" } else { "d=0" };
        let set = |c: &mut SuiteConfig| c.differential = differential;
        o.report(
            &format!("Z D^2 ({d})"),
            &run(SuiteId::ZinfSquare, |c| {
                set(c);
                c.max_tensor_len = 4;
            }),
        );
        o.report(&format!("preL Q^2 ({d})"), &run(SuiteId::PrelinfSquare, set));
        o.report(&format!("L Q^2 ({d})"), &run(SuiteId::LinfSquare, set));
        o.report(&format!("Q^2 ({d})"), &run(SuiteId::QSquare, set));
    }
    o
}

fn coderivations() -> Observed {
    let mut o = Observed::new();
    let delta = run(SuiteId::QCoderivDelta, |_| {});
    o.per_check(&delta, &["DELTA_CODERIVATION_Q"]);
    let kappa = run(SuiteId::QCoderivKappa, |_| {});
    o.per_check(&kappa, &["KAPPA_CODERIVATION_M", "KAPPA_CODERIVATION_R", "KAPPA_CODERIVATION_Q"]);

    o.require(delta.passed(), "Q is not a coderivation of Delta_perm");
    o.require(
        kappa.checks("KAPPA_CODERIVATION_M").all(|x| x.verdict == Verdict::Pass),
        "m is not a kappa-coderivation",
    );
    o.require(
        kappa.checks("KAPPA_CODERIVATION_R").any(|x| x.verdict == Verdict::Fail),
        "R is now a kappa-coderivation",
    );
    let letters = run(SuiteId::QCoderivKappa, |c| {
        c.max_tensor_len = 1;
        c.max_factor_len = 1;
        c.max_tail_factors = 3;
    });
    o.require(letters.passed(), "kappa-coderivation fails on single-letter words");
    o.notes.push(format!(
        "restricted to single-letter words: {}/{} zero",
        letters.summary.passed, letters.summary.checks
    ));

    // Smallest witness: X = u1 ⊗ (u2⊗u3). κ(R X) contains (u3) ⊠ (u1◇u2)
    // and nothing on the other side has a left leg with head u3.
    let m = FormsModel::new(3, 3).unwrap();
    let ctx = EnvelopeContext::new(&m);
    let x = parse_element("1/1 * P(T(u1); S(T(u2,u3)))", &|n| {
        pregerst_core::AlgebraModel::resolve(&m, n)
    })
    .unwrap();
    let defect = ctx.check_coderivation(CoproductId::Kappa, QPart::R, &x).unwrap();
    let witness = defect
        .iter()
        .any(|(legs, _)| legs[0].to_string() == "P(T(u3); S())" && legs[1].to_string() == "P(T(u1.u2); S())");
    o.require(witness, "the P(u1; u2⊗u3) witness term is gone");
    o
}

fn mutations() -> Observed {
    let mut o = Observed::new();
    let r = run(SuiteId::MutationSanity, |_| {});
    o.pass = r.passed() && MUTATION_DETECTORS.len() >= 8;
    o.notes.push(format!(
        "{}/{} mutations produced a nonzero defect",
        r.summary.passed, r.summary.checks
    ));
    for rec in r.records.iter().filter(|x| x.verdict != Verdict::Pass) {
        o.notes.push(format!("undetected: {}", rec.check));
    }
    o
}

fn determinism() -> Observed {
    let mut o = Observed::new();
    let mut same = 0;
    for suite in SuiteId::ALL {
        let cfg = config(suite, |c| {
            c.samples = c.samples.min(20);
            c.report_format = ReportFormat::Structured;
            if suite == SuiteId::MuShuffleLemma {
                c.max_tensor_len = 5;
            }
        });
        let a = run_suite(&cfg).unwrap().to_structured();
        let b = run_suite(&cfg).unwrap().to_structured();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let c = pool.install(|| run_suite(&cfg).unwrap().to_structured());
        if a == b && b == c {
            same += 1;
        } else {
            o.pass = false;
            o.notes.push(format!("{suite} differs between runs"));
        }
    }
    o.notes.push(format!("{same}/{} suites byte-identical across 3 runs (1 and N threads)", SuiteId::ALL.len()));
    o
}

fn main() {
    let criteria: [(Criterion, fn() -> Observed); 8] = [
        (Criterion { id: 1, title: "axiom suite on forms", limit: Duration::from_secs(30), expect_pass: false }, axioms),
        (Criterion { id: 2, title: "mu o sh = 0", limit: Duration::from_secs(60), expect_pass: true }, mu_shuffle),
        (Criterion { id: 3, title: "coalgebra laws", limit: Duration::from_secs(180), expect_pass: false }, coalgebra_laws),
        (Criterion { id: 4, title: "R2 pre-Lie and derivation", limit: Duration::from_secs(180), expect_pass: true }, r2_theorem),
        (Criterion { id: 5, title: "envelope squares", limit: Duration::from_secs(300), expect_pass: true }, envelope_squares),
        (Criterion { id: 6, title: "Q coderivation of Delta and kappa", limit: Duration::from_secs(300), expect_pass: false }, coderivations),
        (Criterion { id: 7, title: "mutation sanity", limit: Duration::from_secs(120), expect_pass: true }, mutations),
        (Criterion { id: 8, title: "determinism", limit: Duration::from_secs(600), expect_pass: true }, determinism),
    ];
    let mut unexpected = 0;
    for (c, f) in criteria {
        let t = Instant::now();
        let mut o = f();
        let elapsed = t.elapsed();
        if elapsed > c.limit {
            o.pass = false;
            o.notes.push(format!("over time limit {:?}", c.limit));
        }
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        let expected = if c.expect_pass {
            o.pass
        } else {
            !o.pass && o.as_characterized
        };
        let tag = match (o.pass, expected) {
            (true, true) => "",
            (false, true) => " (known failure, characterized)",
            _ => " (UNEXPECTED)",
        };
        if !expected {
            unexpected += 1;
        }
        println!(
            "criterion {}: {verdict}{tag} - {} [{:.1}s] {}",
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            o.notes.join("; ")
        );
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria departed from their expected outcome");
        std::process::exit(1);
    }
}
