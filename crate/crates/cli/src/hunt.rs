//! Greedy-versus-oracle sweeps.
//!
//! Exhaustive hunts enumerate every labeled graph for `p = 1..=max_p` (or
//! `k..=max_p` for cliques). Random hunts draw graphs from `G(p, 1/2)` with a
//! seeded ChaCha8 stream. Work is spread over rayon workers and collected in
//! input order, then counterexamples are sorted by graph6 string, so the
//! body never depends on scheduling.

use std::collections::HashMap;
use std::hash::Hash;

use bitableau_core::{
    canonical_form_exhaustive, certified_difference, clique_exhaustive, encode_graph6,
    enumerate_labeled_graphs, find_k_clique_traced, iso_exhaustive, labeled_graph_count,
    oracle::permutations, render_trace, standardize_ib, standardize_vab, step_budget,
    CliqueVerdict, Graph, OracleConfig, Permutation, TraceStep,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::commands::IsoMethod;
use crate::error::CliError;

/// Largest `p` for exhaustive isomorphism hunts (`2^15` graphs at `p = 6`).
pub const MAX_EXHAUSTIVE_ISO_P: usize = 6;
/// Largest `p` for exhaustive clique hunts (`2^21` graphs at `p = 7`).
pub const MAX_EXHAUSTIVE_CLIQUE_P: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GreedyMethod {
    Vab,
    Ib,
}

impl GreedyMethod {
    pub fn from_iso(method: IsoMethod) -> Result<GreedyMethod, CliError> {
        match method {
            IsoMethod::Vab => Ok(GreedyMethod::Vab),
            IsoMethod::Ib => Ok(GreedyMethod::Ib),
            IsoMethod::Oracle => Err(CliError::Usage(
                "hunts compare a greedy method against the oracle; use --method vab or ib".into(),
            )),
        }
    }

    fn name(self) -> &'static str {
        match self {
            GreedyMethod::Vab => "vab",
            GreedyMethod::Ib => "ib",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HuntMode {
    Exhaustive,
    Random { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoHuntConfig {
    pub max_p: usize,
    pub method: GreedyMethod,
    pub mode: HuntMode,
    /// Keep at most this many counterexamples; `None` keeps all.
    pub max_counterexamples: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueHuntConfig {
    pub max_p: usize,
    pub k: usize,
    pub max_counterexamples: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct HistogramBin {
    pub steps: usize,
    pub count: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct StepStats {
    pub runs: u64,
    pub budget_exceeded: u64,
    pub fraction_exceeded: f64,
    pub max_steps: usize,
    pub histogram: Vec<HistogramBin>,
}

#[derive(Default)]
struct StepTally {
    runs: u64,
    exceeded: u64,
    bins: std::collections::BTreeMap<usize, u64>,
}

impl StepTally {
    fn add(&mut self, steps: usize, budget: usize) {
        self.runs += 1;
        if steps > budget {
            self.exceeded += 1;
        }
        *self.bins.entry(steps).or_default() += 1;
    }

    fn absorb(&mut self, other: &StepTally) {
        self.runs += other.runs;
        self.exceeded += other.exceeded;
        for (&s, &c) in &other.bins {
            *self.bins.entry(s).or_default() += c;
        }
    }

    fn stats(&self) -> StepStats {
        StepStats {
            runs: self.runs,
            budget_exceeded: self.exceeded,
            fraction_exceeded: if self.runs == 0 {
                0.0
            } else {
                self.exceeded as f64 / self.runs as f64
            },
            max_steps: self.bins.keys().next_back().copied().unwrap_or(0),
            histogram: self
                .bins
                .iter()
                .map(|(&steps, &count)| HistogramBin { steps, count })
                .collect(),
        }
    }
}

/// Pair and per-graph counts. In each report,
/// `pairs_total = agreements + disagreements + inconclusive_resolved`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IsoTotals {
    pub graphs_examined: u64,
    /// Isomorphism classes met; exhaustive mode only.
    pub oracle_classes: Option<u64>,
    /// Graphs whose greedy form is not the maximum-key form (vab only).
    pub greedy_stalls: Option<u64>,
    /// Graphs whose greedy form differs from that of their class
    /// representative; exhaustive mode only.
    pub label_dependent: Option<u64>,
    pub pairs_total: u64,
    pub verified_isomorphic: u64,
    pub certified_not_isomorphic: u64,
    pub unsound_isomorphic: u64,
    pub wrong_certified_not_isomorphic: u64,
    pub inconclusive_resolved_isomorphic: u64,
    pub inconclusive_resolved_not_isomorphic: u64,
    pub agreements: u64,
    pub disagreements: u64,
    pub inconclusive_resolved: u64,
}

impl IsoTotals {
    fn finish(&mut self) {
        self.agreements = self.verified_isomorphic + self.certified_not_isomorphic;
        self.disagreements = self.unsound_isomorphic + self.wrong_certified_not_isomorphic;
        self.inconclusive_resolved =
            self.inconclusive_resolved_isomorphic + self.inconclusive_resolved_not_isomorphic;
    }

    fn absorb(&mut self, o: &IsoTotals) {
        fn add(a: &mut Option<u64>, b: Option<u64>) {
            *a = match (*a, b) {
                (Some(x), Some(y)) => Some(x + y),
                (x, y) => x.or(y),
            };
        }
        self.graphs_examined += o.graphs_examined;
        add(&mut self.oracle_classes, o.oracle_classes);
        add(&mut self.greedy_stalls, o.greedy_stalls);
        add(&mut self.label_dependent, o.label_dependent);
        self.pairs_total += o.pairs_total;
        self.verified_isomorphic += o.verified_isomorphic;
        self.certified_not_isomorphic += o.certified_not_isomorphic;
        self.unsound_isomorphic += o.unsound_isomorphic;
        self.wrong_certified_not_isomorphic += o.wrong_certified_not_isomorphic;
        self.inconclusive_resolved_isomorphic += o.inconclusive_resolved_isomorphic;
        self.inconclusive_resolved_not_isomorphic += o.inconclusive_resolved_not_isomorphic;
        self.finish();
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsoPerP {
    pub p: usize,
    pub totals: IsoTotals,
    pub step_stats: StepStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoScope {
    pub mode: &'static str,
    pub method: GreedyMethod,
    pub max_p: usize,
    pub p_values: Vec<usize>,
    pub count: Option<usize>,
    pub seed: Option<u64>,
    /// How `step_stats` budgets are computed.
    pub step_budget: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub partner_graph6: Option<String>,
    pub p: usize,
    pub categories: Vec<&'static str>,
    pub greedy_verdict: String,
    pub oracle_verdict: String,
    pub greedy_tableau: Vec<Vec<usize>>,
    pub oracle_tableau: Option<Vec<Vec<usize>>>,
    pub greedy_steps: usize,
    pub trace: Vec<String>,
    pub reproduce: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsoHuntBody {
    pub command: &'static str,
    pub scope: IsoScope,
    pub totals: IsoTotals,
    pub per_p: Vec<IsoPerP>,
    pub step_stats: StepStats,
    pub counterexamples_total: u64,
    pub counterexamples_truncated: bool,
    pub counterexamples: Vec<Counterexample>,
}

/// Hunts stay far below the short-form size limit.
fn graph6_of(g: &Graph) -> String {
    encode_graph6(g).expect("hunt graphs fit the short form")
}

fn trace_lines(trace: &[TraceStep]) -> Vec<String> {
    render_trace(trace).lines().map(str::to_string).collect()
}

fn canonize_command(g6: &str, method: &str) -> String {
    let trace = if method == "oracle" { "" } else { " --trace" };
    format!("bitableau canonize --format graph6 --method {method}{trace} --inline '{g6}'")
}

fn iso_command(a: &str, b: &str, method: &str) -> String {
    format!("bitableau iso --format graph6 --method {method} --inline '{a}' '{b}'")
}

/// One greedy run, reduced to what the hunt compares.
struct Greedy {
    rows: Vec<Vec<usize>>,
    steps: usize,
    budget: usize,
    trace: Vec<TraceStep>,
}

fn run_greedy(g: &Graph, method: GreedyMethod) -> Greedy {
    match method {
        GreedyMethod::Vab => {
            let r = standardize_vab(g);
            Greedy {
                rows: r.tableau.rows().to_vec(),
                steps: r.steps,
                budget: step_budget(g.p()),
                trace: r.trace,
            }
        }
        GreedyMethod::Ib => {
            let r = standardize_ib(&g.label_edges());
            Greedy {
                rows: r.tableau.rows().to_vec(),
                steps: r.steps,
                budget: step_budget(g.p()) + step_budget(g.q()),
                trace: r.trace,
            }
        }
    }
}

fn budget_rule(method: GreedyMethod) -> &'static str {
    match method {
        GreedyMethod::Vab => "p(p-1)/2",
        GreedyMethod::Ib => "p(p-1)/2 + q(q-1)/2",
    }
}

fn pairs(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

fn pair_count<K: Hash + Eq>(keys: impl Iterator<Item = K>) -> u64 {
    let mut sizes: HashMap<K, u64> = HashMap::new();
    for key in keys {
        *sizes.entry(key).or_default() += 1;
    }
    sizes.values().map(|&n| pairs(n)).sum()
}

fn truncate(mut list: Vec<Counterexample>, cap: Option<usize>) -> (Vec<Counterexample>, u64, bool) {
    list.sort();
    let total = list.len() as u64;
    let truncated = cap.is_some_and(|c| list.len() > c);
    if let Some(c) = cap {
        list.truncate(c);
    }
    (list, total, truncated)
}

/// Oracle data for one isomorphism class.
struct Class {
    canonical: Vec<Vec<usize>>,
    representative: usize,
}

struct GraphRecord {
    graph6: String,
    class: usize,
    invariants: (usize, Vec<usize>),
    greedy: Greedy,
}

pub fn hunt_iso(cfg: &IsoHuntConfig, oracle: &OracleConfig) -> Result<IsoHuntBody, CliError> {
    match cfg.mode {
        HuntMode::Exhaustive => hunt_iso_exhaustive(cfg, oracle),
        HuntMode::Random { count, seed } => hunt_iso_random(cfg, count, seed, oracle),
    }
}

fn hunt_iso_exhaustive(
    cfg: &IsoHuntConfig,
    oracle: &OracleConfig,
) -> Result<IsoHuntBody, CliError> {
    if cfg.max_p > MAX_EXHAUSTIVE_ISO_P {
        return Err(bitableau_core::Error::CapExceeded {
            what: "exhaustive hunt vertex count",
            requested: cfg.max_p as u128,
            cap: MAX_EXHAUSTIVE_ISO_P as u128,
        }
        .into());
    }
    let method = cfg.method.name();
    let mut totals = IsoTotals::default();
    let mut steps = StepTally::default();
    let mut per_p = Vec::new();
    let mut found = Vec::new();

    for p in 1..=cfg.max_p {
        let graphs: Vec<Graph> = enumerate_labeled_graphs(p, MAX_EXHAUSTIVE_ISO_P)?.collect();

        // every relabeling of a new graph joins its class at once
        let mut class_of: HashMap<Graph, usize> = HashMap::new();
        let mut classes: Vec<Class> = Vec::new();
        for (index, g) in graphs.iter().enumerate() {
            if class_of.contains_key(g) {
                continue;
            }
            let canon = canonical_form_exhaustive(g, oracle)?;
            let id = classes.len();
            classes.push(Class {
                canonical: canon.tableau.rows().to_vec(),
                representative: index,
            });
            for sigma in permutations(p) {
                class_of.entry(g.relabel(&sigma)?).or_insert(id);
            }
        }

        let records: Vec<GraphRecord> = graphs
            .par_iter()
            .map(|g| GraphRecord {
                graph6: graph6_of(g),
                class: class_of[g],
                invariants: (g.q(), g.sorted_degrees()),
                greedy: run_greedy(g, cfg.method),
            })
            .collect();

        let mut t = IsoTotals {
            graphs_examined: graphs.len() as u64,
            oracle_classes: Some(classes.len() as u64),
            ..IsoTotals::default()
        };
        let mut stalls = 0;
        let mut dependent = 0;
        let mut tally = StepTally::default();
        for r in &records {
            tally.add(r.greedy.steps, r.greedy.budget);
            let class = &classes[r.class];
            let rep = &records[class.representative];
            let stalled = cfg.method == GreedyMethod::Vab && r.greedy.rows != class.canonical;
            let label_dep = r.greedy.rows != rep.greedy.rows;
            stalls += u64::from(stalled);
            dependent += u64::from(label_dep);
            if !(stalled || label_dep) {
                continue;
            }
            let mut categories = Vec::new();
            let mut reproduce = Vec::new();
            if stalled {
                categories.push("greedy-stall");
                reproduce.push(canonize_command(&r.graph6, method));
                reproduce.push(canonize_command(&r.graph6, "oracle"));
            }
            let (partner, greedy_verdict, oracle_verdict) = if label_dep {
                categories.push("inconclusive-isomorphic");
                reproduce.push(iso_command(&r.graph6, &rep.graph6, method));
                (
                    Some(rep.graph6.clone()),
                    "inconclusive".to_string(),
                    "isomorphic".to_string(),
                )
            } else {
                (
                    None,
                    "local maximum".to_string(),
                    "larger key exists".to_string(),
                )
            };
            found.push(Counterexample {
                graph6: r.graph6.clone(),
                partner_graph6: partner,
                p,
                categories,
                greedy_verdict,
                oracle_verdict,
                greedy_tableau: r.greedy.rows.clone(),
                oracle_tableau: Some(class.canonical.clone()),
                greedy_steps: r.greedy.steps,
                trace: trace_lines(&r.greedy.trace),
                reproduce,
            });
        }
        if cfg.method == GreedyMethod::Vab {
            t.greedy_stalls = Some(stalls);
        }
        t.label_dependent = Some(dependent);

        // Pair verdicts follow from group sizes: equal greedy forms give a
        // verified witness, unequal invariants a certificate, and everything
        // else is inconclusive until the oracle class decides it.
        let all = pairs(records.len() as u64);
        let same_inv = pair_count(records.iter().map(|r| &r.invariants));
        let same_class = pair_count(records.iter().map(|r| r.class));
        let same_class_inv = pair_count(records.iter().map(|r| (r.class, &r.invariants)));
        let same_form_inv = pair_count(records.iter().map(|r| (&r.greedy.rows, &r.invariants)));
        let same_class_form = pair_count(records.iter().map(|r| (r.class, &r.greedy.rows)));
        t.pairs_total = all;
        t.wrong_certified_not_isomorphic = same_class - same_class_inv;
        t.certified_not_isomorphic = all - same_inv - t.wrong_certified_not_isomorphic;
        t.verified_isomorphic = same_class_form;
        t.unsound_isomorphic = same_form_inv - same_class_form;
        let open = same_inv - same_form_inv;
        t.inconclusive_resolved_isomorphic = same_class_inv - same_class_form;
        t.inconclusive_resolved_not_isomorphic = open - t.inconclusive_resolved_isomorphic;
        t.finish();

        if t.unsound_isomorphic > 0 {
            found.extend(unsound_pairs(&records, p, method));
        }

        totals.absorb(&t);
        steps.absorb(&tally);
        per_p.push(IsoPerP {
            p,
            totals: t,
            step_stats: tally.stats(),
        });
    }

    let (counterexamples, total, truncated) = truncate(found, cfg.max_counterexamples);
    Ok(IsoHuntBody {
        command: "hunt-iso",
        scope: IsoScope {
            mode: "exhaustive",
            method: cfg.method,
            max_p: cfg.max_p,
            p_values: (1..=cfg.max_p).collect(),
            count: None,
            seed: None,
            step_budget: budget_rule(cfg.method),
        },
        totals,
        per_p,
        step_stats: steps.stats(),
        counterexamples_total: total,
        counterexamples_truncated: truncated,
        counterexamples,
    })
}

/// One pair per greedy form shared by two classes.
fn unsound_pairs(records: &[GraphRecord], p: usize, method: &str) -> Vec<Counterexample> {
    let mut first: HashMap<&Vec<Vec<usize>>, &GraphRecord> = HashMap::new();
    let mut out = Vec::new();
    for r in records {
        match first.get(&r.greedy.rows) {
            None => {
                first.insert(&r.greedy.rows, r);
            }
            Some(f) if f.class != r.class => out.push(Counterexample {
                graph6: f.graph6.clone(),
                partner_graph6: Some(r.graph6.clone()),
                p,
                categories: vec!["unsound-isomorphic"],
                greedy_verdict: "isomorphic".into(),
                oracle_verdict: "not isomorphic".into(),
                greedy_tableau: r.greedy.rows.clone(),
                oracle_tableau: None,
                greedy_steps: r.greedy.steps,
                trace: trace_lines(&r.greedy.trace),
                reproduce: vec![iso_command(&f.graph6, &r.graph6, method)],
            }),
            Some(_) => {}
        }
    }
    out
}

/// A graph from `G(p, 1/2)`: each pair `(u, v)`, `u < v` in lexicographic
/// order, is an edge when the next draw is true.
pub fn random_graph(p: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=p {
        for v in u + 1..=p {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(p, &edges).expect("pairs are distinct and in range")
}

pub fn random_permutation(p: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (1..=p).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("shuffle keeps a permutation")
}

#[derive(Default)]
struct SampleOutcome {
    totals: IsoTotals,
    tally: StepTally,
    found: Vec<Counterexample>,
}

fn hunt_iso_random(
    cfg: &IsoHuntConfig,
    count: usize,
    seed: u64,
    oracle: &OracleConfig,
) -> Result<IsoHuntBody, CliError> {
    let p = cfg.max_p;
    if p > oracle.max_vertices {
        return Err(bitableau_core::Error::CapExceeded {
            what: "oracle vertex count",
            requested: p as u128,
            cap: oracle.max_vertices as u128,
        }
        .into());
    }
    let method = cfg.method.name();

    // draw everything up front so workers never touch the stream
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<(Graph, Permutation, Graph)> = (0..count)
        .map(|_| {
            let g = random_graph(p, &mut rng);
            let sigma = random_permutation(p, &mut rng);
            let other = random_graph(p, &mut rng);
            (g, sigma, other)
        })
        .collect();

    let outcomes: Vec<Result<SampleOutcome, CliError>> = samples
        .par_iter()
        .map(|(g, sigma, other)| {
            let h = g.relabel(sigma)?;
            let rg = run_greedy(g, cfg.method);
            let rh = run_greedy(&h, cfg.method);
            let ro = run_greedy(other, cfg.method);
            let mut out = SampleOutcome::default();
            for r in [&rg, &rh, &ro] {
                out.tally.add(r.steps, r.budget);
            }
            let g6 = graph6_of(g);
            let t = &mut out.totals;
            t.graphs_examined = 1;
            t.pairs_total = 2;

            let canon = canonical_form_exhaustive(g, oracle)?;
            let canonical = canon.tableau.rows().to_vec();
            let stalled = cfg.method == GreedyMethod::Vab && rg.rows != canonical;
            if cfg.method == GreedyMethod::Vab {
                t.greedy_stalls = Some(u64::from(stalled));
            }
            if stalled {
                out.found.push(Counterexample {
                    graph6: g6.clone(),
                    partner_graph6: None,
                    p,
                    categories: vec!["greedy-stall"],
                    greedy_verdict: "local maximum".into(),
                    oracle_verdict: "larger key exists".into(),
                    greedy_tableau: rg.rows.clone(),
                    oracle_tableau: Some(canonical.clone()),
                    greedy_steps: rg.steps,
                    trace: trace_lines(&rg.trace),
                    reproduce: vec![
                        canonize_command(&g6, method),
                        canonize_command(&g6, "oracle"),
                    ],
                });
            }

            // (g, h) is isomorphic by construction
            if certified_difference(g, &h).is_some() {
                t.wrong_certified_not_isomorphic += 1;
            } else if rg.rows == rh.rows {
                t.verified_isomorphic += 1;
            } else {
                t.inconclusive_resolved_isomorphic += 1;
                let h6 = graph6_of(&h);
                out.found.push(Counterexample {
                    graph6: g6.clone(),
                    partner_graph6: Some(h6.clone()),
                    p,
                    categories: vec!["inconclusive-isomorphic"],
                    greedy_verdict: "inconclusive".into(),
                    oracle_verdict: "isomorphic".into(),
                    greedy_tableau: rg.rows.clone(),
                    oracle_tableau: Some(canonical.clone()),
                    greedy_steps: rg.steps,
                    trace: trace_lines(&rg.trace),
                    reproduce: vec![iso_command(&g6, &h6, method)],
                });
            }

            // (g, other) is decided by the oracle
            let truly_iso = iso_exhaustive(g, other, oracle)?.is_some();
            let certified = certified_difference(g, other).is_some();
            let equal_forms = rg.rows == ro.rows;
            match (truly_iso, certified, equal_forms) {
                (true, true, _) => t.wrong_certified_not_isomorphic += 1,
                (false, true, _) => t.certified_not_isomorphic += 1,
                (true, false, true) => t.verified_isomorphic += 1,
                (true, false, false) => t.inconclusive_resolved_isomorphic += 1,
                (false, false, false) => t.inconclusive_resolved_not_isomorphic += 1,
                (false, false, true) => {
                    t.unsound_isomorphic += 1;
                    let o6 = graph6_of(other);
                    out.found.push(Counterexample {
                        graph6: g6.clone(),
                        partner_graph6: Some(o6.clone()),
                        p,
                        categories: vec!["unsound-isomorphic"],
                        greedy_verdict: "isomorphic".into(),
                        oracle_verdict: "not isomorphic".into(),
                        greedy_tableau: rg.rows.clone(),
                        oracle_tableau: None,
                        greedy_steps: rg.steps,
                        trace: trace_lines(&rg.trace),
                        reproduce: vec![iso_command(&g6, &o6, method)],
                    });
                }
            }
            t.finish();
            Ok(out)
        })
        .collect();

    let mut totals = IsoTotals::default();
    let mut tally = StepTally::default();
    let mut found = Vec::new();
    for o in outcomes {
        let o = o?;
        totals.absorb(&o.totals);
        tally.absorb(&o.tally);
        found.extend(o.found);
    }
    if cfg.method == GreedyMethod::Vab && totals.greedy_stalls.is_none() {
        totals.greedy_stalls = Some(0);
    }
    totals.finish();

    let (counterexamples, total, truncated) = truncate(found, cfg.max_counterexamples);
    Ok(IsoHuntBody {
        command: "hunt-iso",
        scope: IsoScope {
            mode: "random",
            method: cfg.method,
            max_p: p,
            p_values: vec![p],
            count: Some(count),
            seed: Some(seed),
            step_budget: budget_rule(cfg.method),
        },
        per_p: vec![IsoPerP {
            p,
            totals: totals.clone(),
            step_stats: tally.stats(),
        }],
        totals,
        step_stats: tally.stats(),
        counterexamples_total: total,
        counterexamples_truncated: truncated,
        counterexamples,
    })
}

/// Per-graph clique verdict counts. In each report
/// `graphs_examined = agreements + disagreements + inconclusive_resolved`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CliqueTotals {
    pub graphs_examined: u64,
    pub found_agree: u64,
    pub not_found_agree: u64,
    pub unsound_found: u64,
    pub wrong_certified_negative: u64,
    pub inconclusive_resolved_absent: u64,
    /// Inconclusive although the oracle finds a clique.
    pub missed: u64,
    /// Graphs rejected by the degree filter before standardization.
    pub degree_filtered: u64,
    pub oracle_found: u64,
    pub agreements: u64,
    pub disagreements: u64,
    pub inconclusive_resolved: u64,
}

impl CliqueTotals {
    fn finish(&mut self) {
        self.agreements = self.found_agree + self.not_found_agree;
        self.disagreements = self.unsound_found + self.wrong_certified_negative;
        self.inconclusive_resolved = self.inconclusive_resolved_absent + self.missed;
    }

    fn absorb(&mut self, o: &CliqueTotals) {
        self.graphs_examined += o.graphs_examined;
        self.found_agree += o.found_agree;
        self.not_found_agree += o.not_found_agree;
        self.unsound_found += o.unsound_found;
        self.wrong_certified_negative += o.wrong_certified_negative;
        self.inconclusive_resolved_absent += o.inconclusive_resolved_absent;
        self.missed += o.missed;
        self.degree_filtered += o.degree_filtered;
        self.oracle_found += o.oracle_found;
        self.finish();
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CliquePerP {
    pub p: usize,
    pub totals: CliqueTotals,
    pub step_stats: StepStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueScope {
    pub mode: &'static str,
    pub method: &'static str,
    pub k: usize,
    pub max_p: usize,
    pub p_values: Vec<usize>,
    pub step_budget: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CliqueHuntBody {
    pub command: &'static str,
    pub scope: CliqueScope,
    pub totals: CliqueTotals,
    pub per_p: Vec<CliquePerP>,
    pub step_stats: StepStats,
    pub counterexamples_total: u64,
    pub counterexamples_truncated: bool,
    pub counterexamples: Vec<Counterexample>,
}

/// Counts, step total and optional counterexample for one graph.
type GraphVerdicts = (CliqueTotals, usize, Option<Counterexample>);

fn render_set(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn clique_command(g6: &str, k: usize, method: &str) -> String {
    let trace = if method == "oracle" { "" } else { " --trace" };
    format!("bitableau clique --format graph6 --k {k} --method {method}{trace} --inline '{g6}'")
}

pub fn hunt_clique(
    cfg: &CliqueHuntConfig,
    oracle: &OracleConfig,
) -> Result<CliqueHuntBody, CliError> {
    let CliqueHuntConfig { max_p, k, .. } = *cfg;
    if k < 2 || k > max_p {
        return Err(CliError::Usage(format!(
            "--k must satisfy 2 <= k <= max-p (got k = {k}, max-p = {max_p})"
        )));
    }
    if max_p > MAX_EXHAUSTIVE_CLIQUE_P {
        return Err(bitableau_core::Error::CapExceeded {
            what: "exhaustive hunt vertex count",
            requested: max_p as u128,
            cap: MAX_EXHAUSTIVE_CLIQUE_P as u128,
        }
        .into());
    }

    let mut totals = CliqueTotals::default();
    let mut steps = StepTally::default();
    let mut per_p = Vec::new();
    let mut found = Vec::new();
    for p in k..=max_p {
        debug_assert!(labeled_graph_count(p) <= 1 << 21);
        let graphs: Vec<Graph> = enumerate_labeled_graphs(p, MAX_EXHAUSTIVE_CLIQUE_P)?.collect();
        let rows: Vec<Result<GraphVerdicts, CliError>> = graphs
            .par_iter()
            .map(|g| {
                let (verdict, run) = find_k_clique_traced(g, k)?;
                let truth = clique_exhaustive(g, k, oracle)?;
                let mut t = CliqueTotals {
                    graphs_examined: 1,
                    oracle_found: u64::from(truth.is_some()),
                    ..CliqueTotals::default()
                };
                let mut example = None;
                match (&verdict, &truth) {
                    (CliqueVerdict::Found(_), Some(_)) => t.found_agree += 1,
                    (CliqueVerdict::NotFound, None) => t.not_found_agree += 1,
                    (CliqueVerdict::Inconclusive, None) => t.inconclusive_resolved_absent += 1,
                    _ => {
                        let g6 = graph6_of(g);
                        let (category, greedy_verdict) = match &verdict {
                            CliqueVerdict::Inconclusive => {
                                t.missed += 1;
                                ("missed", "inconclusive".to_string())
                            }
                            CliqueVerdict::NotFound => {
                                t.wrong_certified_negative += 1;
                                ("wrong-certified-negative", "not found".to_string())
                            }
                            CliqueVerdict::Found(w) => {
                                t.unsound_found += 1;
                                ("unsound-found", format!("found {}", render_set(w)))
                            }
                        };
                        let oracle_verdict = match &truth {
                            Some(w) => format!("found {}", render_set(w)),
                            None => "not found".to_string(),
                        };
                        example = Some(Counterexample {
                            graph6: g6.clone(),
                            partner_graph6: None,
                            p,
                            categories: vec![category],
                            greedy_verdict,
                            oracle_verdict,
                            greedy_tableau: run.tableau.vab().rows().to_vec(),
                            oracle_tableau: None,
                            greedy_steps: run.steps,
                            trace: trace_lines(&run.trace),
                            reproduce: vec![
                                clique_command(&g6, k, "restricted"),
                                clique_command(&g6, k, "oracle"),
                            ],
                        });
                    }
                }
                if verdict == CliqueVerdict::NotFound {
                    t.degree_filtered += 1;
                }
                t.finish();
                Ok((t, run.steps, example))
            })
            .collect();

        let mut t = CliqueTotals::default();
        let mut tally = StepTally::default();
        for row in rows {
            let (gt, s, example) = row?;
            t.absorb(&gt);
            tally.add(s, step_budget(p));
            found.extend(example);
        }
        totals.absorb(&t);
        steps.absorb(&tally);
        per_p.push(CliquePerP {
            p,
            totals: t,
            step_stats: tally.stats(),
        });
    }

    let (counterexamples, total, truncated) = truncate(found, cfg.max_counterexamples);
    Ok(CliqueHuntBody {
        command: "hunt-clique",
        scope: CliqueScope {
            mode: "exhaustive",
            method: "restricted",
            k,
            max_p,
            p_values: (k..=max_p).collect(),
            step_budget: "p(p-1)/2",
        },
        totals,
        per_p,
        step_stats: steps.stats(),
        counterexamples_total: total,
        counterexamples_truncated: truncated,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iso_cfg(max_p: usize) -> IsoHuntConfig {
        IsoHuntConfig {
            max_p,
            method: GreedyMethod::Vab,
            mode: HuntMode::Exhaustive,
            max_counterexamples: None,
        }
    }

    #[test]
    fn trivial_sweep() {
        let body = hunt_iso(&iso_cfg(1), &OracleConfig::default()).unwrap();
        assert_eq!(body.totals.graphs_examined, 1);
        assert_eq!(body.totals.pairs_total, 0);
        assert_eq!(body.totals.greedy_stalls, Some(0));
        assert!(body.counterexamples.is_empty());
    }

    #[test]
    fn pair_totals_by_hand_at_p3() {
        // 8 graphs in 4 classes of sizes 1, 3, 3, 1; all invariants differ
        // across classes, so every cross-class pair is certified
        let body = hunt_iso(&iso_cfg(3), &OracleConfig::default()).unwrap();
        let t = &body.per_p[2].totals;
        assert_eq!(t.graphs_examined, 8);
        assert_eq!(t.oracle_classes, Some(4));
        assert_eq!(t.pairs_total, 28);
        assert_eq!(t.certified_not_isomorphic, 28 - 6);
        assert_eq!(
            t.verified_isomorphic + t.inconclusive_resolved_isomorphic,
            6
        );
        assert_eq!(t.unsound_isomorphic, 0);
    }

    #[test]
    fn pair_totals_match_per_pair_calls() {
        use bitableau_core::{iso_check_vab, IsoVerdict};
        let oracle = OracleConfig::default();
        let p = 5;
        let body = hunt_iso(&iso_cfg(p), &oracle).unwrap();
        let t = &body.per_p[p - 1].totals;

        let graphs: Vec<Graph> = enumerate_labeled_graphs(p, p).unwrap().collect();
        let forms: Vec<_> = graphs
            .iter()
            .map(|g| canonical_form_exhaustive(g, &oracle).unwrap().tableau)
            .collect();
        let mut want = IsoTotals::default();
        for a in 0..graphs.len() {
            for b in a + 1..graphs.len() {
                let same = forms[a] == forms[b];
                match iso_check_vab(&graphs[a], &graphs[b], false).unwrap() {
                    IsoVerdict::Isomorphic(_) if same => want.verified_isomorphic += 1,
                    IsoVerdict::Isomorphic(_) => want.unsound_isomorphic += 1,
                    IsoVerdict::NotIsomorphic(_) if same => {
                        want.wrong_certified_not_isomorphic += 1
                    }
                    IsoVerdict::NotIsomorphic(_) => want.certified_not_isomorphic += 1,
                    IsoVerdict::Inconclusive if same => want.inconclusive_resolved_isomorphic += 1,
                    IsoVerdict::Inconclusive => want.inconclusive_resolved_not_isomorphic += 1,
                }
            }
        }
        assert_eq!(t.verified_isomorphic, want.verified_isomorphic);
        assert_eq!(t.unsound_isomorphic, want.unsound_isomorphic);
        assert_eq!(t.certified_not_isomorphic, want.certified_not_isomorphic);
        assert_eq!(
            t.wrong_certified_not_isomorphic,
            want.wrong_certified_not_isomorphic
        );
        assert_eq!(
            t.inconclusive_resolved_isomorphic,
            want.inconclusive_resolved_isomorphic
        );
        assert_eq!(
            t.inconclusive_resolved_not_isomorphic,
            want.inconclusive_resolved_not_isomorphic
        );
    }

    #[test]
    fn clique_refuses_large_k() {
        let cfg = CliqueHuntConfig {
            max_p: 3,
            k: 4,
            max_counterexamples: None,
        };
        assert!(hunt_clique(&cfg, &OracleConfig::default()).is_err());
    }

    #[test]
    fn random_graphs_follow_the_seed() {
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        assert_eq!(random_graph(6, &mut a), random_graph(6, &mut b));
        assert_eq!(random_permutation(6, &mut a), random_permutation(6, &mut b));
    }
}
