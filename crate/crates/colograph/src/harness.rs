//! The verification harness: named suites wiring the library into
//! reproducible checks with deterministic text reports.

use std::path::PathBuf;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::census::{
    boundary_bubble, c0_within, cycle_census, gurau_degree, interaction_colors,
    replace_with_boundary,
};
use crate::embedding::{check_face_bound, is_planar};
use crate::fixtures;
use crate::generate::{enumerate_bubbles_up_to, fixture_multisets, random_closed_graph};
use crate::graph::{serialize_graph, Bubble, ColoredGraph, EdgeId, VertexId};
use crate::moves::{all_three_bubbles_planar, flip, reduce_to_canonical, ReductionVerdict};
use crate::search::{
    bubble_occurrences, edge_cut_partition, enumerate_pairings, max_gluings, max_pairings,
    realize_pairing, verify_only_planar, SearchError,
};

pub const SUITES: &[&str] = &[
    "flip-law",
    "gurau-nonneg",
    "melonic-c1",
    "four-cut",
    "max-two-cut",
    "only-planar-formula",
    "face-bound",
    "boundary-invariance",
    "topology-sphere",
];

#[derive(Error, Debug)]
pub enum HarnessError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("{0}")]
    Search(#[from] SearchError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug)]
pub struct HarnessConfig {
    /// Total-vertex budget for gluing sweeps.
    pub vertex_budget: usize,
    /// Move budget for dipole reduction, as a factor of the vertex count.
    pub move_budget_factor: usize,
    /// Worker threads for partitioned sweeps; None = rayon default.
    pub jobs: Option<usize>,
    /// When set, suite reports (and maximizer graphs) are written here.
    pub output_dir: Option<PathBuf>,
}

impl Default for HarnessConfig {
    fn default() -> HarnessConfig {
        HarnessConfig {
            vertex_budget: 16,
            move_budget_factor: 10,
            jobs: None,
            output_dir: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: String,
    pub pass: bool,
    pub cases: usize,
    pub failures: usize,
    /// Per-case lines; deterministic for identical invocations.
    pub lines: Vec<String>,
    pub wall_seconds: f64,
}

impl SuiteResult {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out.push_str(&format!("# wall {:.3}s (timing line, not deterministic)\n", self.wall_seconds));
        out.push_str(&format!(
            "RESULT {} {} {} {}\n",
            self.name,
            if self.pass { "pass" } else { "fail" },
            self.cases,
            self.failures
        ));
        out
    }
}

struct SuiteBuilder {
    name: String,
    cases: usize,
    failures: usize,
    lines: Vec<String>,
    started: Instant,
}

impl SuiteBuilder {
    fn new(name: &str) -> SuiteBuilder {
        SuiteBuilder {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            lines: Vec::new(),
            started: Instant::now(),
        }
    }

    fn case(&mut self, id: &str, ok: bool, detail: &str) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
        self.lines.push(format!("case {id} {} {detail}", if ok { "ok" } else { "FAIL" }));
    }

    /// A batch of uniform cases reported on one line.
    fn batch(&mut self, id: &str, cases: usize, failures: usize, detail: &str) {
        self.cases += cases;
        self.failures += failures;
        self.lines.push(format!(
            "case {id} {} cases={cases} failures={failures} {detail}",
            if failures == 0 { "ok" } else { "FAIL" }
        ));
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            pass: self.failures == 0,
            cases: self.cases,
            failures: self.failures,
            lines: self.lines,
            wall_seconds: self.started.elapsed().as_secs_f64(),
            name: self.name,
        }
    }
}

pub fn run_suite(name: &str, cfg: &HarnessConfig) -> Result<SuiteResult, HarnessError> {
    if !SUITES.contains(&name) {
        return Err(HarnessError::UnknownSuite(name.to_string()));
    }
    let body = || -> Result<SuiteResult, HarnessError> {
        let result = match name {
            "flip-law" => suite_flip_law(cfg),
            "gurau-nonneg" => suite_gurau_nonneg(cfg)?,
            "melonic-c1" => suite_melonic_c1(),
            "four-cut" => suite_four_cut(cfg)?,
            "max-two-cut" => suite_max_two_cut(cfg)?,
            "only-planar-formula" => suite_only_planar_formula(cfg)?,
            "face-bound" => suite_face_bound(),
            "boundary-invariance" => suite_boundary_invariance(),
            "topology-sphere" => suite_topology_sphere(cfg)?,
            _ => unreachable!(),
        };
        Ok(result)
    };
    let result = match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(body)?,
        None => body()?,
    };
    if let Some(dir) = &cfg.output_dir {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join(format!("{name}.txt")), result.render())?;
    }
    Ok(result)
}

pub fn run_all(cfg: &HarnessConfig) -> Result<Vec<SuiteResult>, HarnessError> {
    SUITES.iter().map(|s| run_suite(s, cfg)).collect()
}

/// C_0 changes by exactly -d + 2|I| under every connected flip.
fn suite_flip_law(cfg: &HarnessConfig) -> SuiteResult {
    let mut b = SuiteBuilder::new("flip-law");
    let mut rng = ChaCha8Rng::seed_from_u64(0xC010);
    let target = 10_000;
    let mut checked = 0;
    let mut failures = 0;
    while checked < target {
        let g = random_closed_graph(cfg.vertex_budget.min(12), &mut rng);
        let zero: Vec<EdgeId> = (0..g.n_edges()).filter(|&e| g.edge(e).color == 0).collect();
        if zero.len() < 2 {
            continue;
        }
        let i = rng.gen_range(0..zero.len());
        let j = loop {
            let j = rng.gen_range(0..zero.len());
            if j != i {
                break j;
            }
        };
        let r = flip(&g, zero[i], zero[j]).expect("valid color-0 pair");
        if r.components.len() != 1 {
            continue;
        }
        checked += 1;
        let expect = r.c0_before as i64 - 3 + 2 * r.interaction.len() as i64;
        if r.c0_after as i64 != expect {
            failures += 1;
            b.lines.push(format!(
                "counterexample instance={checked} before={} after={} interaction={}",
                r.c0_before,
                r.c0_after,
                r.interaction.len()
            ));
        }
    }
    b.batch("random-connected-flips", checked, failures, "law C0' = C0 - 3 + 2|I|");
    b.finish()
}

/// The degree is a nonnegative integer on every connected gluing of every
/// fixture multiset within the budget.
fn suite_gurau_nonneg(cfg: &HarnessConfig) -> Result<SuiteResult, HarnessError> {
    let mut b = SuiteBuilder::new("gurau-nonneg");
    let cap = cfg.vertex_budget.min(12);
    let multisets = fixture_multisets(cap);
    let evaluated: Vec<(String, usize, usize)> = multisets
        .par_iter()
        .map(|ms| {
            let id = multiset_id(ms);
            let gluings =
                crate::search::enumerate_gluings(ms, true, cap).expect("within budget");
            let bad = gluings
                .iter()
                .filter(|g| !gurau_degree(g).map(|d| d.is_nonnegative_integer).unwrap_or(false))
                .count();
            (id, gluings.len(), bad)
        })
        .collect();
    for (id, n, bad) in evaluated {
        b.batch(&id, n, bad, "degree is a nonnegative integer");
    }
    Ok(b.finish())
}

fn multiset_id(ms: &[Bubble]) -> String {
    ms.iter().map(|b| b.tag()).collect::<Vec<_>>().join("+")
}

/// Melonic bubbles: C_1 = V + 1 with a unique maximizer pairing.
fn suite_melonic_c1() -> SuiteResult {
    let mut b = SuiteBuilder::new("melonic-c1");
    for (bub, expect) in [
        (fixtures::melon_b2(), 3),
        (fixtures::q1_b4(), 5),
        (fixtures::melon6a(), 7),
        (fixtures::melon6b(), 7),
    ] {
        let r = max_pairings(&bub);
        let ok = r.max_c0 == expect && r.maximizer_count == 1;
        b.case(
            bub.tag(),
            ok,
            &format!("expected C1={expect} unique, observed C1={} count={}", r.max_c0, r.maximizer_count),
        );
    }
    b.finish()
}

fn acceptance_multisets() -> Vec<(String, Vec<Bubble>)> {
    let m1 = vec![fixtures::octa(), fixtures::melon_b2()];
    let m2 = vec![fixtures::octa(), fixtures::octa()];
    let m3 = vec![fixtures::q1_b4(), fixtures::q1_b4(), fixtures::melon_b2()];
    [m1, m2, m3].into_iter().map(|ms| (multiset_id(&ms), ms)).collect()
}

/// No maximizer contains a color-0 cut class of size 4.
fn suite_four_cut(cfg: &HarnessConfig) -> Result<SuiteResult, HarnessError> {
    let mut b = SuiteBuilder::new("four-cut");
    for (id, ms) in acceptance_multisets() {
        let report = max_gluings(&ms, cfg.vertex_budget)?;
        let mut bad = 0;
        for g in &report.maximizers {
            for idx in 0..bubble_occurrences(g).len() {
                let part = edge_cut_partition(g, idx)?;
                if part.classes.iter().any(|c| c.len() == 4) {
                    bad += 1;
                }
            }
        }
        if let Some(dir) = &cfg.output_dir {
            let sub = dir.join("maximizers").join(&id);
            std::fs::create_dir_all(&sub)?;
            for (i, g) in report.maximizers.iter().enumerate() {
                std::fs::write(sub.join(format!("{i}.cg")), serialize_graph(g))?;
            }
        }
        b.batch(
            &id,
            report.maximizers.len(),
            bad,
            &format!("maximizers Cmax={} occurrences free of size-4 cuts", report.max_c0),
        );
    }
    Ok(b.finish())
}

fn marked_multisets() -> Vec<(String, Vec<Bubble>, usize)> {
    let mut out: Vec<(String, Vec<Bubble>, usize)> =
        acceptance_multisets().into_iter().map(|(id, ms)| (id, ms, 0)).collect();
    let m4 = vec![fixtures::k33(), fixtures::melon_b2()];
    out.push((multiset_id(&m4), m4, 0));
    out
}

/// Maximizing is equivalent to every bubble occurrence passing the maximal
/// 2-cut check, over full gluing sweeps.
fn suite_max_two_cut(cfg: &HarnessConfig) -> Result<SuiteResult, HarnessError> {
    let mut b = SuiteBuilder::new("max-two-cut");
    for (id, ms, marked) in marked_multisets() {
        let r = verify_only_planar(&ms, marked, cfg.vertex_budget)?;
        b.case(
            &id,
            r.equivalence_holds,
            &format!("maximizers={} Cmax={} equivalence", r.maximizer_count, r.brute_max),
        );
    }
    Ok(b.finish())
}

/// Closed-form maximum C_1(B) + sum n_i (C_1(B_i) - 3) against brute force.
fn suite_only_planar_formula(cfg: &HarnessConfig) -> Result<SuiteResult, HarnessError> {
    let mut b = SuiteBuilder::new("only-planar-formula");
    for (id, ms, marked) in marked_multisets() {
        let r = verify_only_planar(&ms, marked, cfg.vertex_budget)?;
        b.case(
            &id,
            r.formula_matches,
            &format!("formula={} brute={}", r.formula, r.brute_max),
        );
    }
    Ok(b.finish())
}

/// Every planar bubble up to 10 vertices satisfies the short-face bound.
fn suite_face_bound() -> SuiteResult {
    let mut b = SuiteBuilder::new("face-bound");
    let bubbles = enumerate_bubbles_up_to(10);
    let mut planar_count = 0;
    let mut bad = 0;
    for bub in &bubbles {
        if !is_planar(bub.graph()).expect("cubic") {
            continue;
        }
        planar_count += 1;
        let r = check_face_bound(bub).expect("planar");
        if !r.holds {
            bad += 1;
            b.lines.push(format!("counterexample {} f2={} f4={}", bub.tag(), r.f2, r.f4));
        }
    }
    b.batch(
        "planar-bubbles-to-10",
        planar_count,
        bad,
        &format!("of {} bubble classes total", bubbles.len()),
    );
    b.finish()
}

/// Interaction colors and crossing-cycle counts are unchanged when a colored
/// subgraph is replaced by its boundary bubble.
fn suite_boundary_invariance() -> SuiteResult {
    let mut b = SuiteBuilder::new("boundary-invariance");
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0B1);
    let target = 1_000;
    let mut checked = 0;
    let mut failures = 0;
    while checked < target {
        let g = random_closed_graph(12, &mut rng);
        let occ = bubble_occurrences(&g);
        if occ.len() < 2 {
            continue;
        }
        // a random nonempty proper subset of the bubble occurrences
        let take: Vec<usize> = loop {
            let t: Vec<usize> = (0..occ.len()).filter(|_| rng.gen_bool(0.5)).collect();
            if !t.is_empty() && t.len() < occ.len() {
                break t;
            }
        };
        let mut h: Vec<VertexId> = take.iter().flat_map(|&i| occ[i].iter().copied()).collect();
        h.sort_unstable();
        checked += 1;
        if !boundary_invariance_case(&g, &h) {
            failures += 1;
            b.lines.push(format!("counterexample instance={checked} n={} |H|={}", g.n_vertices(), h.len()));
        }
    }
    b.batch("random-subgraph-replacements", checked, failures, "interaction and crossing counts preserved");
    b.finish()
}

fn boundary_invariance_case(g: &ColoredGraph, h: &[VertexId]) -> bool {
    let inside = |v: VertexId| h.binary_search(&v).is_ok();
    let complement: Vec<VertexId> = g.vertices().filter(|&v| !inside(v)).collect();
    let Ok(rep) = replace_with_boundary(g, h) else { return false };
    let Ok(bd) = boundary_bubble(g, h) else { return false };

    // crossing color-0 edges and the interaction-color invariance
    let crossing: Vec<EdgeId> = (0..g.n_edges())
        .filter(|&id| {
            let e = g.edge(id);
            e.color == 0 && inside(e.u) != inside(e.v)
        })
        .collect();
    for i in 0..crossing.len() {
        for j in i + 1..crossing.len() {
            let before = interaction_colors(g, crossing[i], crossing[j]);
            let after = interaction_colors(
                &rep.graph,
                rep.edge_map[&crossing[i]],
                rep.edge_map[&crossing[j]],
            );
            match (before, after) {
                (Ok(x), Ok(y)) if x == y => {}
                _ => return false,
            }
        }
    }

    // C_0 decomposition: the crossing contribution survives the replacement
    let c0_g = cycle_census(g).c0();
    let c0_h = c0_within(g, h);
    let c0_rest = c0_within(g, &complement);
    let crossing_count = c0_g - c0_h - c0_rest;

    let new_bd: Vec<VertexId> = bd.orig_ids.iter().map(|v| rep.vertex_map[v]).collect();
    let new_rest: Vec<VertexId> = complement.iter().map(|v| rep.vertex_map[v]).collect();
    let c0_new = cycle_census(&rep.graph).c0();
    let c0_new_bd = c0_within(&rep.graph, &new_bd);
    let c0_new_rest = c0_within(&rep.graph, &new_rest);
    c0_new - c0_new_bd - c0_new_rest == crossing_count && c0_new_rest == c0_rest
}

/// Every computed maximizer reduces to the 2-vertex sphere graph through
/// topological dipole removals, and its 3-color restrictions are all planar;
/// gluings with a non-planar 3-color component are never called spheres.
fn suite_topology_sphere(cfg: &HarnessConfig) -> Result<SuiteResult, HarnessError> {
    let mut b = SuiteBuilder::new("topology-sphere");
    for (id, ms) in acceptance_multisets() {
        let report = max_gluings(&ms, cfg.vertex_budget)?;
        let mut bad = 0;
        for g in &report.maximizers {
            let trace = reduce_to_canonical(g, Some(cfg.move_budget_factor * g.n_vertices()));
            let ok = trace.verdict == ReductionVerdict::CanonicalSphere
                && trace.moves.iter().all(|m| m.topological)
                && all_three_bubbles_planar(g);
            if !ok {
                bad += 1;
            }
        }
        b.batch(&id, report.maximizers.len(), bad, "maximizers reduce to the sphere");
    }
    // negative control: closures of a non-planar bubble
    let k33 = fixtures::k33();
    let mut cases = 0;
    let mut bad = 0;
    for p in enumerate_pairings(&k33).into_iter().filter(|p| p.connected) {
        let g = realize_pairing(&k33, &p.pi);
        cases += 1;
        let trace = reduce_to_canonical(&g, Some(cfg.move_budget_factor * g.n_vertices()));
        if trace.verdict == ReductionVerdict::CanonicalSphere {
            bad += 1;
        }
    }
    b.batch("k33-closures", cases, bad, "never reported canonical-sphere");
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(
            run_suite("no-such-suite", &HarnessConfig::default()),
            Err(HarnessError::UnknownSuite(_))
        ));
    }

    #[test]
    fn melonic_c1_suite_passes() {
        let r = run_suite("melonic-c1", &HarnessConfig::default()).unwrap();
        assert!(r.pass);
        assert_eq!(r.cases, 4);
        assert!(r.render().contains("RESULT melonic-c1 pass 4 0"));
    }

    #[test]
    fn result_line_reports_failures() {
        let mut b = SuiteBuilder::new("demo");
        b.case("a", true, "fine");
        b.case("b", false, "broken");
        let r = b.finish();
        assert!(!r.pass);
        assert!(r.render().contains("RESULT demo fail 2 1"));
    }
}
