//! Oracle checks: both Schubert backends, Pieri's identity, and the
//! insertion bijection, swept exhaustively over small symmetric groups.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::par::{self, Execution};
use crate::permutation::Permutation;
use crate::pieri::{self, admissible_expansion, check_admissible, RunOptions};
use crate::polynomial::{complete_homogeneous, schubert_ddiff, MultiPoly};
use crate::rcgraph::{compositions, enumerate_rc, enumerate_rc_by_words, RcGraph};
use crate::{schubert_rc, Result};

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyConfig {
    /// Per-step assertions inside every insertion and inverse run.
    pub lemma_checks: bool,
    pub execution: Execution,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Subject {
    Permutation { w: String },
    Triple { w: String, r: usize, m: usize },
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Permutation { w } => write!(f, "w={w}"),
            Subject::Triple { w, r, m } => write!(f, "w={w} r={r} m={m}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(name: &str, result: std::result::Result<String, String>) -> Self {
        match result {
            Ok(detail) => Self::new(name, true, detail),
            Err(detail) => Self::new(name, false, detail),
        }
    }
}

/// Outcome of one group of checks. A failing report carries the command
/// line that reruns it in isolation.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub subject: Subject,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub repro: Option<String>,
}

impl Report {
    fn finish(subject: Subject, checks: Vec<Check>, started: Instant, repro: String) -> Self {
        let failed = checks.iter().any(|c| !c.passed);
        Self {
            subject,
            checks,
            elapsed: started.elapsed(),
            repro: failed.then_some(repro),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// One JSON object on a single line. Timing is left out so that output
    /// is reproducible byte for byte.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {}", self.subject)?;
        for c in &self.checks {
            let mark = if c.passed { "ok" } else { "FAILED" };
            writeln!(f, "  {mark:6} {}: {}", c.name, c.detail)?;
        }
        if let Some(cmd) = &self.repro {
            writeln!(f, "  repro: {cmd}")?;
        }
        Ok(())
    }
}

/// `Σ_{D ∈ RC(w)} x^D` against the divided-difference polynomial in `S_n`,
/// and ladder-move enumeration against word enumeration.
pub fn check_schubert_backends(w: &Permutation, n: usize) -> Report {
    let started = Instant::now();
    let mut checks = Vec::new();
    let by_rc = schubert_rc(w);
    let by_ddiff = schubert_ddiff(w, n);
    checks.push(Check::from_result(
        "rc_equals_ddiff",
        match (&by_rc, &by_ddiff) {
            (Ok(a), Ok(b)) if a == b => Ok(a.to_string()),
            (Ok(a), Ok(b)) => Err(format!("rc gives {a}, divided differences give {b}")),
            (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
        },
    ));
    let ladder = enumerate_rc(w);
    let words = enumerate_rc_by_words(w);
    checks.push(Check::new(
        "ladder_equals_words",
        ladder == words,
        format!(
            "{} graphs by ladder moves, {} by compatible sequences",
            ladder.len(),
            words.len()
        ),
    ));
    let bad = ladder
        .iter()
        .find(|d| d.permutation() != *w || !d.is_reduced());
    checks.push(Check::new(
        "members_reduced",
        bad.is_none(),
        bad.map_or_else(
            || "all reduced".to_string(),
            |d| format!("{d} is not a reduced graph of {w}"),
        ),
    ));
    Report::finish(
        Subject::Permutation { w: w.to_string() },
        checks,
        started,
        format!("schubert schubert {w} --backend both"),
    )
}

/// Products `w · t_{ab}` with `a <= r < b <= top` and length one more than
/// `w`: Monk's rule, enumerated directly.
pub fn monk_expansion(w: &Permutation, r: usize, top: usize) -> Vec<Permutation> {
    let mut out = BTreeSet::new();
    for a in 1..=r {
        for b in r + 1..=top {
            let wt = w.right_transpose(a, b).expect("a < b");
            if wt.length() == w.length() + 1 {
                out.insert(wt);
            }
        }
    }
    out.into_iter().collect()
}

fn product_window(w: &Permutation, r: usize, m: usize) -> usize {
    w.support().max(r) + m
}

/// `P_w · h_m(x_1..x_r) = Σ P_{w'}` over the admissible expansion, with
/// both sides computed by both Schubert backends.
pub fn check_pieri_identity(w: &Permutation, r: usize, m: usize) -> Report {
    let started = Instant::now();
    let n = product_window(w, r, m);
    let mut checks = Vec::new();
    let subject = Subject::Triple {
        w: w.to_string(),
        r,
        m,
    };
    let repro = format!("schubert pieri verify --w {w} --r {r} --m {m}");

    let terms = match admissible_expansion(w, r, m) {
        Ok(t) => t,
        Err(e) => {
            checks.push(Check::new("expansion", false, e.to_string()));
            return Report::finish(subject, checks, started, repro);
        }
    };
    checks.push(Check::new(
        "expansion",
        true,
        format!("{} terms", terms.len()),
    ));

    let h = complete_homogeneous(m, r);
    let evaluate =
        |f: &dyn Fn(&Permutation) -> Result<MultiPoly>| -> Result<(MultiPoly, MultiPoly)> {
            let lhs = f(w)?.checked_mul(&h)?;
            let parts = terms
                .iter()
                .map(|t| f(&t.permutation))
                .collect::<Result<Vec<_>>>()?;
            Ok((lhs, MultiPoly::checked_sum(&parts)?))
        };
    let rc = evaluate(&|v: &Permutation| schubert_rc(v));
    let dd = evaluate(&|v: &Permutation| schubert_ddiff(v, n));
    for (name, sides) in [("identity_rc", &rc), ("identity_ddiff", &dd)] {
        checks.push(Check::from_result(
            name,
            match sides {
                Ok((lhs, rhs)) if lhs == rhs => Ok(format!("{} terms", lhs.num_terms())),
                Ok((lhs, rhs)) => Err(format!("lhs {lhs} != rhs {rhs}")),
                Err(e) => Err(e.to_string()),
            },
        ));
    }
    if let (Ok(rc), Ok(dd)) = (&rc, &dd) {
        checks.push(Check::new(
            "backends_agree",
            rc == dd,
            "both sides match across backends",
        ));
    }
    if m == 1 {
        let expected = monk_expansion(w, r, n);
        let got: Vec<Permutation> = terms.iter().map(|t| t.permutation.clone()).collect();
        checks.push(Check::new(
            "monk",
            got == expected,
            format!("{} covers by transpositions", expected.len()),
        ));
    }
    Report::finish(subject, checks, started, repro)
}

/// Runs the insertion on every `(D, comp) ∈ RC(w) × compositions(m, r)` and
/// checks that it is a bijection onto `⨄ RC(w')` inverted by
/// [`pieri::inverse`].
pub fn check_bijection(w: &Permutation, r: usize, m: usize, config: VerifyConfig) -> Report {
    let started = Instant::now();
    let subject = Subject::Triple {
        w: w.to_string(),
        r,
        m,
    };
    let mut repro = format!("schubert pieri verify --w {w} --r {r} --m {m}");
    if config.lemma_checks {
        repro.push_str(" --lemmas");
    }
    let options = RunOptions {
        verify: config.lemma_checks,
        trace: false,
    };

    let terms = match admissible_expansion(w, r, m) {
        Ok(t) => t,
        Err(e) => {
            let checks = vec![Check::new("expansion", false, e.to_string())];
            return Report::finish(subject, checks, started, repro);
        }
    };

    let mut failures: [Option<String>; 6] = Default::default();
    let mut note = |slot: usize, msg: String| {
        failures[slot].get_or_insert(msg);
    };
    const RUNS: usize = 0;
    const REDUCED: usize = 1;
    const ADMISSIBLE: usize = 2;
    const ROUNDTRIP: usize = 3;
    const TRANSPORT: usize = 4;
    const LEMMAS: usize = 5;

    let sources = enumerate_rc(w);
    let comps = compositions(m, r);
    let mut images: Vec<RcGraph> = Vec::new();
    let mut lemma_checks = 0;
    for d in &sources {
        for comp in &comps {
            let case = format!("D={d} comp={comp}");
            let out = match pieri::insert(d, r, comp, options) {
                Ok(out) => out,
                Err(e) => {
                    let slot = if matches!(e, crate::Error::Violated(_)) {
                        LEMMAS
                    } else {
                        RUNS
                    };
                    note(slot, format!("{case}: {e}"));
                    continue;
                }
            };
            lemma_checks += out.checks;
            let w_prime = out.permutation();
            if !out.graph.is_reduced() {
                note(
                    REDUCED,
                    format!("{case}: output {} is not reduced", out.graph),
                );
            }
            if let Err(e) = check_admissible(w, &w_prime, r, &out.ledger) {
                note(ADMISSIBLE, format!("{case}: {e}"));
            } else if !terms
                .iter()
                .any(|t| t.permutation == w_prime && t.ledger == out.ledger)
            {
                note(
                    ADMISSIBLE,
                    format!(
                        "{case}: ledger {} is not the expansion's ledger",
                        out.ledger
                    ),
                );
            }
            if out.graph.monomial() != &d.monomial() * &comp.monomial() {
                note(
                    TRANSPORT,
                    format!(
                        "{case}: x^D' = {} but x^D·x^k = {}",
                        out.graph.monomial(),
                        &d.monomial() * &comp.monomial()
                    ),
                );
            }
            match pieri::inverse(&out.graph, w, r, &out.ledger, options) {
                Ok(back) => {
                    lemma_checks += back.checks;
                    if back.graph != *d || back.composition != *comp {
                        note(
                            ROUNDTRIP,
                            format!(
                                "{case}: inverse gave D={} comp={}",
                                back.graph, back.composition
                            ),
                        );
                    }
                    if out.graph.monomial() != &back.graph.monomial() * &back.composition.monomial()
                    {
                        note(
                            TRANSPORT,
                            format!("{case}: inverse does not transport monomials"),
                        );
                    }
                }
                Err(e) => note(ROUNDTRIP, format!("{case}: inverse failed: {e}")),
            }
            images.push(out.graph);
        }
    }

    let produced = images.len();
    images.sort();
    let distinct = images.iter().collect::<BTreeSet<_>>().len();
    let mut union: Vec<RcGraph> = terms
        .iter()
        .flat_map(|t| enumerate_rc(&t.permutation))
        .collect();
    union.sort();

    let outcome = |slot: usize, ok: String| match &failures[slot] {
        None => Ok(ok),
        Some(msg) => Err(msg.clone()),
    };
    let pairs = sources.len() * comps.len();
    let mut checks = vec![
        Check::from_result("insert_runs", outcome(RUNS, format!("{pairs} pairs"))),
        Check::from_result("outputs_reduced", outcome(REDUCED, "all reduced".into())),
        Check::from_result(
            "outputs_admissible",
            outcome(ADMISSIBLE, "all admissible".into()),
        ),
        Check::new(
            "injective",
            distinct == produced,
            format!("{distinct} distinct images of {produced}"),
        ),
        Check::from_result(
            "inverse_roundtrip",
            outcome(ROUNDTRIP, "identity on every pair".into()),
        ),
        Check::from_result(
            "monomial_transport",
            outcome(TRANSPORT, "x^D' = x^D·∏x_s^k_s".into()),
        ),
        Check::new(
            "image_equals_union",
            images == union,
            format!(
                "{} images, {} graphs over {} permutations w'",
                images.len(),
                union.len(),
                terms.len()
            ),
        ),
    ];
    if config.lemma_checks {
        checks.push(Check::from_result(
            "lemmas",
            outcome(LEMMAS, format!("{lemma_checks} step assertions")),
        ));
    } else if let Some(msg) = &failures[LEMMAS] {
        checks.push(Check::new("lemmas", false, msg.clone()));
    }
    Report::finish(subject, checks, started, repro)
}

/// Backend checks for every `w ∈ S_n`, then Pieri identity and bijection
/// checks for every `r <= r_max`, `1 <= m <= m_max`. Reports come back in
/// subject order whatever the execution mode.
pub fn sweep(n: usize, r_max: usize, m_max: usize, config: VerifyConfig) -> Vec<Report> {
    #[derive(Clone)]
    enum Item {
        Backends(Permutation),
        Pieri(Permutation, usize, usize),
    }
    let mut items = Vec::new();
    for w in Permutation::all(n) {
        items.push(Item::Backends(w.clone()));
        for r in 1..=r_max {
            for m in 1..=m_max {
                items.push(Item::Pieri(w.clone(), r, m));
            }
        }
    }
    par::map(&items, config.execution, |item| match item {
        Item::Backends(w) => vec![check_schubert_backends(w, n)],
        Item::Pieri(w, r, m) => vec![
            check_pieri_identity(w, *r, *m),
            check_bijection(w, *r, *m, config),
        ],
    })
    .into_iter()
    .flatten()
    .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub reports: usize,
    pub passed: usize,
    pub failed: usize,
    pub checks: usize,
}

pub fn summarize(reports: &[Report]) -> Summary {
    let passed = reports.iter().filter(|r| r.passed()).count();
    Summary {
        reports: reports.len(),
        passed,
        failed: reports.len() - passed,
        checks: reports.iter().map(|r| r.checks.len()).sum(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn backends_on_small_cases() {
        let report = check_schubert_backends(&Permutation::identity(3), 3);
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks[0].detail, "1");
        let report = check_schubert_backends(&p("3,2,1"), 3);
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks[0].detail, "x1^2*x2");
        assert!(report.repro.is_none());
    }

    #[test]
    fn failing_backend_report_has_repro() {
        // 1,2,4,3 is not in S_3, so the divided-difference side errors out
        let report = check_schubert_backends(&p("1,2,4,3"), 3);
        assert!(!report.passed());
        assert_eq!(
            report.repro.as_deref(),
            Some("schubert schubert 1,2,4,3 --backend both")
        );
    }

    #[test]
    fn pieri_micro_example() {
        let report = check_pieri_identity(&p("2,1,3"), 2, 1);
        assert!(report.passed(), "{report}");
        assert!(report.checks.iter().any(|c| c.name == "monk" && c.passed));
    }

    #[test]
    fn bijection_small() {
        let report = check_bijection(&Permutation::identity(1), 1, 1, VerifyConfig::default());
        assert!(report.passed(), "{report}");
        let report = check_bijection(
            &p("2,1,3"),
            2,
            1,
            VerifyConfig {
                lemma_checks: true,
                ..Default::default()
            },
        );
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn tiny_sweeps() {
        let reports = sweep(2, 1, 1, VerifyConfig::default());
        assert_eq!(reports.len(), 2 * 3);
        assert_eq!(summarize(&reports).failed, 0);
        let reports = sweep(3, 2, 2, VerifyConfig::default());
        assert!(
            reports.iter().all(Report::passed),
            "{}",
            reports
                .iter()
                .filter(|r| !r.passed())
                .map(|r| r.to_string())
                .collect::<String>()
        );
    }

    #[test]
    fn json_line_is_single_line() {
        let line = check_pieri_identity(&p("2,1,3"), 2, 1).to_json_line();
        assert!(!line.contains('\n'));
        assert!(line.starts_with(r#"{"subject":{"w":"2,1,3","r":2,"m":1},"checks":["#));
    }
}
