//! Acceptance suite: one line per criterion. Runs without the libtest harness so
//! the lines always print; exits nonzero on any unexpected failure.
//!
//! A criterion whose claimed value disagrees with the exact computation prints
//! FAIL. The disagreements found so far are pinned in `KNOWN_DEVIATIONS` with the
//! value actually computed; any other failing row, or a pinned row computing a
//! different value, fails the run.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use prismdom::bits::MaskGraph;
use prismdom::geodesic;
use prismdom::verify::universe::{connected_graphs, random_connected_graph};
use prismdom::verify::{
    counterexample_table, run_check, CheckId, RowStatus, Table, TableOptions, VerifyConfig,
};
use prismdom::{gamma_variant, oracle_gamma_variant, GammaVariant, Graph, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SEED: u64 = 0x5eed;
/// Per-row solver budget for the table.
const TABLE_BUDGET: Duration = Duration::from_secs(600);

/// Table rows whose claimed value is not what the exact solver computes:
/// (row id, computed value).
const KNOWN_DEVIATIONS: &[(&str, &str)] = &[
    // K1,2 under (0 1) is P3 under a centre/end swap; its base layer {0, 1, 2} is convex dominating.
    ("star2.prism.con", "3"),
    // H1 is P6, whose weakly convex domination number is 4.
    ("path-gadget1.wcon", "4"),
];

struct Outcome {
    pass: bool,
    /// Whether a failure is exactly one of the pinned deviations.
    expected_failure: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Outcome {
        Outcome {
            pass,
            expected_failure: false,
            detail: detail.into(),
        }
    }
}

fn known(id: &str) -> Option<&'static str> {
    KNOWN_DEVIATIONS
        .iter()
        .find(|(r, _)| *r == id)
        .map(|(_, v)| *v)
}

/// Rows `ids` must pass within `limit_ms` each. Pinned deviations make the
/// criterion fail, but count as expected when their computed value matches.
fn table_rows(table: &Table, ids: &[String], limit_ms: u64) -> Outcome {
    let mut problems = Vec::new();
    let mut unexpected = false;
    for id in ids {
        let Some(row) = table.row(id) else {
            problems.push(format!("{id}: missing"));
            unexpected = true;
            continue;
        };
        if row.elapsed_ms > limit_ms {
            problems.push(format!("{id}: {} ms > {limit_ms} ms", row.elapsed_ms));
            unexpected = true;
        }
        match row.status {
            RowStatus::Pass | RowStatus::Recorded => {}
            RowStatus::Inconclusive if row.optional => {}
            _ => {
                problems.push(format!(
                    "{id}: {} (expected {}, computed {})",
                    row.status, row.expected, row.computed
                ));
                unexpected |= known(id) != Some(row.computed.as_str());
            }
        }
    }
    let pass = problems.is_empty();
    Outcome {
        pass,
        expected_failure: !pass && !unexpected,
        detail: if pass {
            format!("{} rows", ids.len())
        } else {
            problems.join("; ")
        },
    }
}

fn ids(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn c1(t: &Table) -> Outcome {
    let mut o = table_rows(
        t,
        &ids(&["p3.con", "p3.prism.con", "p3.prism.wcon", "p3.reading"]),
        1000,
    );
    if let Some(r) = t.row("p3.reading") {
        o.detail = format!("{}; {}", o.detail, r.computed);
    }
    o
}

fn c2(t: &Table) -> Outcome {
    let rows: Vec<String> = (2..=5)
        .flat_map(|k| [format!("star{k}.prism.con"), format!("star{k}.prism.wcon")])
        .collect();
    table_rows(t, &rows, 1000)
}

fn c3(t: &Table) -> Outcome {
    table_rows(
        t,
        &ids(&["c7.wcon", "c7.prism.wcon", "c7.prism.witness"]),
        5000,
    )
}

fn c4(t: &Table) -> Outcome {
    let rows: Vec<String> = (1..=2)
        .flat_map(|k| {
            [
                format!("cycle-gadget{k}.wcon"),
                format!("cycle-gadget{k}.prism.wcon"),
                format!("cycle-gadget{k}.prism.witness"),
            ]
        })
        .collect();
    table_rows(t, &rows, 600_000)
}

fn c5(t: &Table) -> Outcome {
    let mut o = table_rows(
        t,
        &ids(&[
            "path-gadget1.wcon",
            "path-gadget1.prism.wcon",
            "path-gadget2.prism.upper",
            "path-gadget2.witness",
        ]),
        30_000,
    );
    if let Some(r) = t.row("path-gadget2.prism.wcon") {
        o.detail = format!(
            "{}; optional exact σ2H2 row: {} ({})",
            o.detail, r.status, r.computed
        );
    }
    o
}

fn c6(t: &Table) -> Outcome {
    let rows: Vec<String> = [(2, 1), (2, 2), (3, 1)]
        .iter()
        .flat_map(|(k, l)| {
            [
                format!("spider{k}-{l}.con"),
                format!("spider{k}-{l}.prism.con"),
            ]
        })
        .collect();
    table_rows(t, &rows, 300_000)
}

fn c7(t: &Table) -> Outcome {
    table_rows(
        t,
        &ids(&["sept3.con", "sept3.prism.witness", "sept3.prism.con"]),
        600_000,
    )
}

fn c8() -> Outcome {
    let start = Instant::now();
    let config = VerifyConfig {
        exhaustive_max: 6,
        random_max: 6,
        random_graphs: 0,
        trials: 0,
        seed: SEED,
    };
    let r = run_check(CheckId::Tidg, &config).expect("tidg runs");
    let elapsed = start.elapsed();
    let pass = r.pass && elapsed < Duration::from_secs(15 * 60);
    Outcome::new(
        pass,
        format!(
            "{} graphs, {} ms, counterexample {:?}",
            r.stats["graphs"],
            elapsed.as_millis(),
            r.counterexample
        ),
    )
}

fn oracle_agrees(g: &Graph) -> Option<String> {
    for variant in GammaVariant::ALL {
        let a = gamma_variant(g, variant).expect("solver runs");
        let b = oracle_gamma_variant(g, variant).expect("oracle runs");
        if a.value != b.value || a.witness != b.witness {
            return Some(format!(
                "{variant} on {:?}: solver {} {}, oracle {} {}",
                g.edges().collect::<Vec<_>>(),
                a.value,
                a.witness,
                b.value,
                b.witness
            ));
        }
    }
    None
}

fn random_graphs(count: usize, n_lo: usize, n_hi: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| random_connected_graph(n_lo + i % (n_hi - n_lo + 1), &mut rng))
        .collect()
}

fn c9() -> Outcome {
    let mut graphs: Vec<Graph> = (1..=6).flat_map(connected_graphs).collect();
    let exhaustive = graphs.len();
    graphs.extend(random_graphs(500, 2, 8, SEED));
    let bad: Vec<String> = graphs.par_iter().filter_map(oracle_agrees).collect();
    Outcome::new(
        bad.is_empty(),
        format!(
            "{exhaustive} exhaustive + 500 random graphs, 4 variants, {} discrepancies{}",
            bad.len(),
            bad.first().map_or(String::new(), |b| format!(": {b}"))
        ),
    )
}

/// Convexity from explicit geodesic lists: (convex, weakly convex).
fn by_definition(geodesics: &[Vec<Vec<Vec<usize>>>], set: &VertexSet) -> (bool, bool) {
    let members = set.to_vec();
    let mut convex = true;
    let mut weak = true;
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            let paths = &geodesics[u][v];
            let inside = |p: &Vec<usize>| p.iter().all(|&x| set.contains(x));
            convex &= paths.iter().all(inside);
            weak &= paths.iter().any(inside);
        }
    }
    (convex, weak)
}

fn geodesic_mismatch(g: &Graph) -> Option<String> {
    let n = g.n();
    let dist = g.all_pairs_distances();
    let mg = MaskGraph::new(g).expect("small graph");
    let geodesics: Vec<Vec<Vec<Vec<usize>>>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| geodesic::enumerate_geodesics(g, u, v).expect("connected"))
                .collect()
        })
        .collect();
    for mask in 0u64..1 << n {
        let set = VertexSet::from_mask(n, mask);
        let (convex, weak) = by_definition(&geodesics, &set);
        let got = (
            geodesic::is_convex(&dist, &set),
            geodesic::is_weakly_convex(g, &dist, &set),
        );
        let masked = (mg.is_convex(mask), mg.is_weakly_convex(mask));
        if got != (convex, weak) || masked != (convex, weak) {
            return Some(format!(
                "{:?} set {set}: definition {:?}, predicates {got:?}, bit-mask {masked:?}",
                g.edges().collect::<Vec<_>>(),
                (convex, weak)
            ));
        }
    }
    None
}

fn c10() -> Outcome {
    let graphs = random_graphs(120, 2, 8, SEED ^ 1);
    let bad: Vec<String> = graphs.par_iter().filter_map(geodesic_mismatch).collect();
    Outcome::new(
        bad.is_empty(),
        format!(
            "{} random graphs, all subsets, {} discrepancies{}",
            graphs.len(),
            bad.len(),
            bad.first().map_or(String::new(), |b| format!(": {b}"))
        ),
    )
}

fn c11() -> Outcome {
    let config = VerifyConfig::default();
    let checks = [
        CheckId::LemmaPlus1,
        CheckId::DominationSandwich,
        CheckId::DiamVSets,
        CheckId::D1D2Structure,
        CheckId::ProjectionLemmas,
        CheckId::IdPrismLemmas,
        CheckId::WconIdBoundPartition,
    ];
    let mut failed = Vec::new();
    for id in checks {
        let r = run_check(id, &config).expect("check runs");
        if !r.pass {
            failed.push(format!("{id}: {:?}", r.counterexample));
        }
    }
    Outcome::new(
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} checks", checks.len())
        } else {
            failed.join("; ")
        },
    )
}

fn c12() -> Outcome {
    let config = VerifyConfig {
        exhaustive_max: 6,
        random_max: 6,
        random_graphs: 0,
        trials: 50,
        seed: SEED,
    };
    let r = run_check(CheckId::Prop3, &config).expect("prop3 runs");
    Outcome::new(
        r.pass,
        format!(
            "{} graphs in hypothesis, {} instances, counterexample {:?}",
            r.stats.get("graphs_in_hypothesis").copied().unwrap_or(0),
            r.stats.get("instances").copied().unwrap_or(0),
            r.counterexample
        ),
    )
}

fn c13(t: &Table) -> Outcome {
    let mut rows = ids(&["unbounded.sept", "unbounded.spider"]);
    for k in 3..=5 {
        rows.push(format!("sept{k}.con"));
        rows.push(format!("sept{k}.prism.witness"));
    }
    let mut o = table_rows(t, &rows, 600_000);
    for id in ["unbounded.sept", "unbounded.spider"] {
        if let Some(r) = t.row(id) {
            o.detail = format!("{}; {id}: {}", o.detail, r.computed);
        }
    }
    o
}

type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let table = counterexample_table(&TableOptions {
        max_k: 5,
        budget: Some(TABLE_BUDGET),
        threads: 1,
    })
    .expect("table computes");

    let criteria: Vec<Criterion> = vec![
        (
            1,
            "P3 connected/weakly convex values",
            Box::new(|| c1(&table)),
        ),
        (2, "stars under (0 1), k = 2..5", Box::new(|| c2(&table))),
        (3, "C7 and its prism witness", Box::new(|| c3(&table))),
        (4, "cycle gadgets k = 1, 2", Box::new(|| c4(&table))),
        (5, "path gadgets", Box::new(|| c5(&table))),
        (6, "spider trees", Box::new(|| c6(&table))),
        (
            7,
            "shared-endpoint P7 gadget k = 3",
            Box::new(|| c7(&table)),
        ),
        (8, "γ_con(Id G) = min(2γ_con, |V|), n <= 6", Box::new(c8)),
        (9, "solver/oracle equivalence", Box::new(c9)),
        (10, "geodesic predicates vs. definitions", Box::new(c10)),
        (11, "verify checks on the default universe", Box::new(c11)),
        (
            12,
            "certificate iff γ_c(πG) = γ(G) + 1, n <= 6, 50 permutations",
            Box::new(c12),
        ),
        (13, "unboundedness rows", Box::new(|| c13(&table))),
    ];

    let mut unexpected = 0;
    for (n, name, run) in &criteria {
        let start = Instant::now();
        let o = run();
        let status = match (o.pass, o.expected_failure) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known deviation)",
            (false, false) => {
                unexpected += 1;
                "FAIL"
            }
        };
        println!(
            "criterion {n:>2} {status}: {name} [{} ms] {}",
            start.elapsed().as_millis(),
            o.detail
        );
    }
    print!("{}", table.render());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria failed unexpectedly");
        ExitCode::FAILURE
    }
}
