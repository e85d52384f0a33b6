//! End-to-end acceptance gate: runs the full verification suite at its
//! default sample sizes and reports one line per acceptance criterion.
//! Every equality involved is exact rational arithmetic; any failure in a
//! grouped check fails the corresponding criterion.

use std::time::{Duration, Instant};

use pointfree::suite::{run, CheckRecord, SuiteConfig, SuiteName};

struct SuiteRun {
    records: Vec<CheckRecord>,
    elapsed: std::collections::HashMap<&'static str, Duration>,
}

fn run_all() -> SuiteRun {
    let mut records = Vec::new();
    let mut elapsed = std::collections::HashMap::new();
    for suite in SuiteName::all() {
        let cfg = SuiteConfig {
            suites: vec![suite],
            ..SuiteConfig::default()
        };
        let start = Instant::now();
        let report = run(&cfg).expect("default configuration is valid");
        elapsed.insert(suite.as_str(), start.elapsed());
        records.extend(report.records);
    }
    SuiteRun { records, elapsed }
}

struct Criterion<'a> {
    number: usize,
    title: &'a str,
    ids: &'a [&'a str],
    /// suite-name → max duration, when the criterion carries a time bound
    time_bound: Option<(&'a str, Duration)>,
}

fn main() {
    let run_data = run_all();
    let criteria = [
        Criterion {
            number: 1,
            title: "operation-preserving embedding into the regular-element quotient \
                    (+, scalars, ∨, ∧; injective via double-negation reconstruction)",
            ids: &[
                "realfn/embedding-riesz-laws",
                "realfn/embedding-injective",
                "realfn/algebra",
            ],
            time_bound: Some(("realfn", Duration::from_secs(60))),
        },
        Criterion {
            number: 2,
            title: "density of scale witnesses under every nonnegative function on Boolean \
                    frames up to 2^4, with ingredient checks on all small frames (the full \
                    density statement needs a regular frame, which at finite size forces \
                    Boolean; this limitation is inherent to finite models)",
            ids: &["universal/density", "universal/ingredients"],
            time_bound: None,
        },
        Criterion {
            number: 3,
            title: "the two-sided-function translation to the regular-element quotient is a \
                    bijection preserving and reflecting both orders",
            ids: &["intervalfn/quotient-iso"],
            time_bound: None,
        },
        Criterion {
            number: 4,
            title: "direct regularized-convolution arithmetic equals the quotient-side route \
                    for addition, scalar multiples and negation",
            ids: &["intervalfn/dual-path-ops"],
            time_bound: None,
        },
        Criterion {
            number: 5,
            title: "scale-built suprema of discrete nonnegative pairs are least upper bounds \
                    against the exhaustive grid function space",
            ids: &["realfn/discrete-sup"],
            time_bound: Some(("realfn", Duration::from_secs(120))),
        },
        Criterion {
            number: 6,
            title: "per-frame trichotomy: an equality certificate or an explicit separating \
                    witness, machine-verified",
            ids: &["intervalfn/trichotomy"],
            time_bound: None,
        },
        Criterion {
            number: 7,
            title: "separation equals maximality for the information order, against \
                    brute-force extension search",
            ids: &["intervalfn/maximal-iff-separated"],
            time_bound: None,
        },
        Criterion {
            number: 8,
            title: "spatial translation suite: interval bijections, order transfer, envelope \
                    laws, pointwise-vs-frame operations, and the equality-versus-structure \
                    dichotomy over all topologies on up to four points",
            ids: &[
                "spatial/interval-bijection",
                "spatial/order-transfer",
                "spatial/envelope-laws",
                "spatial/normal-lsc-ops",
                "spatial/equality-vs-structure",
            ],
            time_bound: None,
        },
        Criterion {
            number: 9,
            title: "coordinate-model suite: scales, embedding laws, atom evaluation, \
                    sandwich brackets and the band correspondence",
            ids: &[
                "rieszfd/coordinate-scale",
                "rieszfd/embedding-laws",
                "rieszfd/atom-oracle",
                "rieszfd/sandwich",
                "rieszfd/bands",
                "rieszfd/band-correspondence",
            ],
            time_bound: Some(("rieszfd", Duration::from_secs(60))),
        },
        Criterion {
            number: 10,
            title: "structural checks: generator revalidation, Boolean quotient with dense \
                    unit, and the cozero oracle",
            ids: &[
                "core/frame-generation",
                "core/booleanize",
                "core/cozero-oracle",
                "core/spectrum-unit",
            ],
            time_bound: None,
        },
    ];

    let mut all_ok = true;
    for crit in &criteria {
        let mut instances = 0;
        let mut failures = 0;
        let mut first_cex: Option<String> = None;
        for id in crit.ids {
            let rec = run_data
                .records
                .iter()
                .find(|r| r.id == *id)
                .unwrap_or_else(|| panic!("missing check record {id}"));
            instances += rec.instances;
            failures += rec.failures;
            if first_cex.is_none() {
                first_cex = rec
                    .counterexample
                    .clone()
                    .map(|c| format!("{}: {c}", rec.id));
            }
        }
        let mut time_ok = true;
        if let Some((suite, bound)) = crit.time_bound {
            let took = run_data.elapsed[suite];
            if took > bound {
                time_ok = false;
                if first_cex.is_none() {
                    first_cex = Some(format!(
                        "suite {suite} took {took:?}, bound {bound:?}"
                    ));
                }
            }
        }
        let ok = failures == 0 && time_ok;
        all_ok &= ok;
        println!(
            "criterion {:2}: {} ({} instances) — {}",
            crit.number,
            if ok { "PASS" } else { "FAIL" },
            instances,
            crit.title
        );
        if !ok {
            if let Some(cex) = first_cex {
                println!("              counterexample: {cex}");
            }
        }
    }

    // every produced record must belong to some criterion, so nothing that
    // failed can hide outside the groups above
    for rec in &run_data.records {
        assert!(
            criteria.iter().any(|c| c.ids.contains(&rec.id.as_str())),
            "check {} is not covered by any acceptance criterion",
            rec.id
        );
    }

    assert!(all_ok, "acceptance criteria failed");
    println!("all acceptance criteria passed");
}
