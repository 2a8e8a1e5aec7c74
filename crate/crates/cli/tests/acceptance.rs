//! Acceptance suite: one test per release criterion, each printing a
//! single `ACCEPTANCE <n> PASS|FAIL: <detail>` line (visible with
//! `--nocapture`).
//!
//! The criteria check the machinery, not the claims: a claim that fails
//! on some graph is a recorded finding, and several do fail on this
//! corpus.  A criterion goes red only when the machinery itself is wrong
//! — an oracle mismatch, a non-dominating accepted witness, an unstable
//! closure, nondeterministic output, or a truncated run that was
//! supposed to be exhaustive.

use std::collections::BTreeSet;
use std::fs;
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use domstruct_cli::campaign::{build_corpus, run_campaign, CampaignConfig, CorpusEntry};
use domstruct_cli::report::GraphReport;
use domstruct_core::{
    brute_force_gamma, build_families, enumerate_structures, grow_structure, is_dominating,
    is_seamless, labels_for, min_assignment, phases_feasible, CycleBudget, Graph, NamedGraph,
    PatternRule, Structure, VerifyParams, VertexSet,
};

// ============================================================
// Shared fixtures
// ============================================================

struct Campaign {
    corpus: Vec<CorpusEntry>,
    params: VerifyParams,
    reports: Vec<GraphReport>,
}

/// The default corpus, verified once and shared by the criteria that
/// read reports rather than recompute.
fn campaign() -> &'static Campaign {
    static CAMPAIGN: OnceLock<Campaign> = OnceLock::new();
    CAMPAIGN.get_or_init(|| {
        let config = CampaignConfig::default();
        let corpus = build_corpus(&config).expect("default corpus builds");
        let params = config.params();
        let reports = run_campaign(&corpus, &params, false);
        Campaign {
            corpus,
            params,
            reports,
        }
    })
}

fn report_line(criterion: usize, ok: bool, detail: &str) {
    println!(
        "ACCEPTANCE {criterion} {}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

/// Deterministic 64-bit LCG; good enough for sampling test inputs.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    fn below(&mut self, n: usize) -> usize {
        ((self.next() >> 33) as usize) % n
    }
}

// ============================================================
// 1. Oracle exactness against a plain subset sweep
// ============================================================

/// Minimum dominating set by full 2^n enumeration, returning the
/// lexicographically smallest witness among the minimum-size sets.
fn subset_sweep(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut nbhd = vec![0u64; n];
    for (v, mask) in nbhd.iter_mut().enumerate() {
        *mask = 1 << v;
        for &w in g.neighbors(v) {
            *mask |= 1 << w;
        }
    }
    let full = (1u64 << n) - 1;
    let mut best: Option<(usize, Vec<usize>)> = None;
    for mask in 0..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if best.as_ref().is_some_and(|(b, _)| size > *b) {
            continue;
        }
        let mut cover = 0u64;
        for (v, vmask) in nbhd.iter().enumerate() {
            if mask >> v & 1 == 1 {
                cover |= vmask;
            }
        }
        if cover != full {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        match &mut best {
            Some((b, w)) => {
                if size < *b || (size == *b && verts < *w) {
                    *b = size;
                    *w = verts;
                }
            }
            None => best = Some((size, verts)),
        }
    }
    best.expect("the full vertex set dominates")
}

#[test]
fn criterion_1_oracle_matches_subset_enumeration() {
    let start = Instant::now();
    let mut rng = Lcg(0xD05EED);
    let mut mismatches = Vec::new();
    for i in 0..50usize {
        // Mixed sizes and densities; no connectivity filter, so many of
        // these are disconnected or have isolated vertices.
        let n = 4 + i % 11;
        let percent = 20 + (i * 7) % 61;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.below(100) < percent {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).expect("generated edges are simple");
        let oracle = brute_force_gamma(&g, 30).expect("n <= 14");
        let (gamma, witness) = subset_sweep(&g);
        if oracle.gamma != gamma || oracle.witness.to_vec() != witness {
            mismatches.push(format!(
                "graph {i} (n={n}): oracle {}/{:?} vs sweep {gamma}/{witness:?}",
                oracle.gamma,
                oracle.witness.to_vec()
            ));
        }
    }
    let elapsed = start.elapsed();
    let in_time = elapsed < Duration::from_secs(60);
    let ok = mismatches.is_empty() && in_time;
    report_line(
        1,
        ok,
        &format!(
            "exact oracle == 2^n subset sweep (gamma and witness) on 50 mixed random graphs, \
             {} mismatches, {elapsed:.2?}",
            mismatches.len()
        ),
    );
    assert!(ok, "mismatches: {mismatches:?}, in_time: {in_time}");
}

// ============================================================
// 2. Pinned domination numbers
// ============================================================

#[test]
fn criterion_2_pinned_gammas_reproduced() {
    let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
    let cases: [(&str, Graph, usize); 5] = [
        ("k4", NamedGraph::K4.build(), 1),
        ("c6", c6, 2),
        ("petersen", NamedGraph::Petersen.build(), 3),
        ("prism3", NamedGraph::Prism3.build(), 2),
        ("cube_q3", NamedGraph::CubeQ3.build(), 2),
    ];
    let mut wrong = Vec::new();
    for (name, g, want) in &cases {
        let r = brute_force_gamma(g, 30).expect("small graphs");
        if r.gamma != *want || !is_dominating(g, &r.witness) {
            wrong.push(format!("{name}: got {} want {want}", r.gamma));
        }
    }
    let ok = wrong.is_empty();
    report_line(
        2,
        ok,
        "domination numbers reproduced: k4=1 c6=2 petersen=3 prism3=2 cube_q3=2",
    );
    assert!(ok, "{wrong:?}");
}

// ============================================================
// 3. Cycle pools nonempty, checked exhaustively corpus-wide
// ============================================================

#[test]
fn criterion_3_cycle_pool_check_runs_exhaustively() {
    let c = campaign();
    let truncated: Vec<&str> = c
        .reports
        .iter()
        .filter(|r| r.cycles_truncated)
        .map(|r| r.graph_id.as_str())
        .collect();
    let empty: Vec<&str> = c
        .reports
        .iter()
        .filter(|r| r.cycles_nonempty == "fail")
        .map(|r| r.graph_id.as_str())
        .collect();
    // The assertion is about coverage: the check ran without budget cuts
    // on every graph.  Empty pools are falsification findings, not
    // failures of this suite.
    let ok = truncated.is_empty();
    report_line(
        3,
        ok,
        &format!(
            "cycle enumeration exhaustive on {}/{} corpus graphs; {} empty pools recorded as findings",
            c.reports.len() - truncated.len(),
            c.reports.len(),
            empty.len()
        ),
    );
    assert!(ok, "truncated on {truncated:?}");
}

// ============================================================
// 4. Family bound tallied; reports deterministic
// ============================================================

fn serialize_reports(reports: &[GraphReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("report serializes"));
        out.push('\n');
    }
    out
}

#[test]
fn criterion_4_family_bound_tally_and_determinism() {
    let c = campaign();
    let total = c.reports.len();
    let untruncated = c
        .reports
        .iter()
        .filter(|r| !r.cycles_truncated && !r.structures_truncated && !r.families_truncated)
        .count();
    let coverage = untruncated as f64 / total as f64;
    let bound_fail = c
        .reports
        .iter()
        .filter(|r| r.family_bound_ok == "fail")
        .count();

    let rerun = run_campaign(&c.corpus, &c.params, false);
    let deterministic = serialize_reports(&c.reports) == serialize_reports(&rerun);

    let ok = coverage >= 0.95 && deterministic;
    report_line(
        4,
        ok,
        &format!(
            "family counts exhaustive on {untruncated}/{total} graphs ({:.0}%), \
             bound violations: {bound_fail}, reports byte-identical on rerun: {deterministic}",
            coverage * 100.0
        ),
    );
    assert!(ok, "coverage {coverage}, deterministic {deterministic}");
}

// ============================================================
// 5. Structure-derived sets: recorded, and accepted ones dominate
// ============================================================

#[test]
fn criterion_5_accepted_witnesses_dominate() {
    let c = campaign();
    let mut violations = Vec::new();
    let mut small = 0usize;
    let mut accepted = 0usize;
    let mut dominating = 0usize;
    let mut matches_oracle = 0usize;
    for (entry, r) in c.corpus.iter().zip(&c.reports) {
        if r.n > 14 {
            continue;
        }
        small += 1;
        if r.oracle_gamma.is_none() {
            violations.push(format!("{}: no oracle gamma", r.graph_id));
        }
        if r.exceptional_cover_ok == "inconclusive" {
            violations.push(format!("{}: cover check did not complete", r.graph_id));
        }
        // The report must record an outcome: a candidate or the reasons.
        if r.structure_gamma.is_some() == r.structure_failure.is_some() {
            violations.push(format!("{}: ambiguous structure outcome", r.graph_id));
        }
        if let Some(witness) = &r.structure_witness {
            accepted += 1;
            let set: VertexSet = witness.iter().copied().collect();
            if is_dominating(&entry.graph, &set) {
                dominating += 1;
            } else {
                violations.push(format!("{}: accepted witness {witness:?} does not dominate", r.graph_id));
            }
            if r.structure_gamma == r.oracle_gamma {
                matches_oracle += 1;
            }
            if r.optimality_ok == "inconclusive" {
                violations.push(format!("{}: optimality unrecorded despite candidate + oracle", r.graph_id));
            }
        }
    }
    let ok = violations.is_empty() && accepted == dominating;
    report_line(
        5,
        ok,
        &format!(
            "on {small} graphs with n <= 14: {accepted} accepted candidates, \
             {dominating}/{accepted} dominate (hard), {matches_oracle} match oracle gamma \
             (optimality gaps are findings)"
        ),
    );
    assert!(ok, "{violations:?}");
}

// ============================================================
// 6. Assignment predicate and minimality
// ============================================================

/// Label set straight from the definition: every third vertex of each
/// pattern cycle, starting at that cycle's phase.
fn direct_labels(s: &Structure, phases: &[u8]) -> Vec<usize> {
    let mut set = BTreeSet::new();
    for (c, &p) in s.pattern_cycles().zip(phases) {
        for (t, &v) in c.vertices().iter().enumerate() {
            if t % 3 == p as usize {
                set.insert(v);
            }
        }
    }
    set.into_iter().collect()
}

/// The two-sided pattern predicate recomputed positionally: on every
/// pattern cycle, a vertex is labeled exactly at the selected residue.
fn direct_two_sided(s: &Structure, phases: &[u8]) -> bool {
    if phases.len() != s.pattern_indices().len() || phases.iter().any(|&p| p > 2) {
        return false;
    }
    let labels: BTreeSet<usize> = direct_labels(s, phases).into_iter().collect();
    s.pattern_cycles().zip(phases).all(|(c, &p)| {
        c.vertices()
            .iter()
            .enumerate()
            .all(|(t, v)| (t % 3 == p as usize) == labels.contains(v))
    })
}

#[test]
fn criterion_6_assignments_match_direct_recomputation() {
    let c = campaign();
    let mut rng = Lcg(0xA55164);
    let mut samples = 0usize;
    let mut sweeps = 0usize;
    let mut violations = Vec::new();
    for entry in &c.corpus {
        let budget = CycleBudget::new(entry.graph.n(), c.params.max_cycles);
        let sset =
            enumerate_structures(&entry.graph, &budget, c.params.max_structures, c.params.seam);
        for s in &sset.structures {
            let k = s.pattern_indices().len();
            for _ in 0..10 {
                let phases: Vec<u8> = (0..k).map(|_| rng.below(3) as u8).collect();
                let want = direct_two_sided(s, &phases);
                if phases_feasible(s, &phases, PatternRule::Exact) != want {
                    violations.push(format!(
                        "{}: predicate disagrees on phases {phases:?}",
                        entry.id
                    ));
                }
                if want && labels_for(s, &phases).to_vec() != direct_labels(s, &phases) {
                    violations.push(format!("{}: label sets differ on {phases:?}", entry.id));
                }
                samples += 1;
            }
            if k <= 6 {
                let mut best: Option<usize> = None;
                for code in 0..3usize.pow(k as u32) {
                    let mut digits = code;
                    let phases: Vec<u8> = (0..k)
                        .map(|_| {
                            let d = (digits % 3) as u8;
                            digits /= 3;
                            d
                        })
                        .collect();
                    if direct_two_sided(s, &phases) {
                        let size = direct_labels(s, &phases).len();
                        best = Some(best.map_or(size, |b| b.min(size)));
                    }
                }
                match (best, min_assignment(s, PatternRule::Exact)) {
                    (None, None) => {}
                    (Some(b), Some(a)) => {
                        if a.labels.len() != b || !direct_two_sided(s, &a.phases) {
                            violations.push(format!(
                                "{}: search found {} labels, sweep minimum is {b}",
                                entry.id,
                                a.labels.len()
                            ));
                        }
                    }
                    (b, a) => violations.push(format!(
                        "{}: feasibility disagreement, sweep {b:?} vs search {:?}",
                        entry.id,
                        a.map(|x| x.labels.len())
                    )),
                }
                sweeps += 1;
            }
        }
    }
    let ok = violations.is_empty() && samples >= 1000 && sweeps > 0;
    report_line(
        6,
        ok,
        &format!(
            "{samples} sampled (structure, phases) pairs agree with direct recomputation; \
             minimum label size matched exhaustive 3^k sweep on {sweeps} structures"
        ),
    );
    assert!(ok, "samples {samples}, sweeps {sweeps}, violations: {violations:?}");
}

// ============================================================
// 7. Byte-identical verify runs
// ============================================================

#[test]
fn criterion_7_verify_output_is_byte_identical() {
    let dir = tempfile::tempdir().expect("tempdir");
    let config_path = dir.path().join("campaign.json");
    fs::write(
        &config_path,
        r#"{"named":["k4","prism3","petersen","cube_q3"],"random":{"count":12,"n_min":6,"n_max":11,"seed":7}}"#,
    )
    .expect("write config");
    let mut outputs = Vec::new();
    for run in 0..2 {
        let out = dir.path().join(format!("run{run}.jsonl"));
        let status = Command::new(env!("CARGO_BIN_EXE_domstruct"))
            .arg("verify")
            .arg(&config_path)
            .arg("--out")
            .arg(&out)
            .status()
            .expect("spawn domstruct");
        assert!(status.success(), "verify exited nonzero on run {run}");
        outputs.push(fs::read(&out).expect("read output"));
    }
    let lines = outputs[0].iter().filter(|&&b| b == b'\n').count();
    let ok = outputs[0] == outputs[1] && !outputs[0].is_empty();
    report_line(
        7,
        ok,
        &format!("two verify runs over 16 graphs produced byte-identical output ({lines} JSON lines)"),
    );
    assert!(ok);
}

// ============================================================
// 8. Structural invariants, corpus-wide
// ============================================================

fn union_is_connected(s: &Structure) -> bool {
    let verts = s.union_vertices().to_vec();
    let Some(&start) = verts.first() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(a, b) in s.union_edges() {
            let w = match () {
                _ if a == v => b,
                _ if b == v => a,
                _ => continue,
            };
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == verts.len()
}

#[test]
fn criterion_8_structural_invariants_hold() {
    let c = campaign();
    let mut rng = Lcg(0x5EA1E55);
    let mut violations = Vec::new();
    let mut structures_checked = 0usize;
    let mut symmetry_samples = 0usize;
    let mut multi_member = 0usize;
    for entry in &c.corpus {
        let budget = CycleBudget::new(entry.graph.n(), c.params.max_cycles);
        let sset =
            enumerate_structures(&entry.graph, &budget, c.params.max_structures, c.params.seam);
        for s in &sset.structures {
            // Pattern cycles cover the whole union graph.
            for v in s.union_vertices().iter() {
                if !s.pattern_cycles().any(|pc| pc.contains(v)) {
                    violations.push(format!("{}: union vertex {v} not on any pattern cycle", entry.id));
                }
            }
            // A structure's union graph is connected.
            if !union_is_connected(s) {
                violations.push(format!("{}: disconnected union graph", entry.id));
            }
            // Growing again from a member reproduces the structure.
            let regrown = grow_structure(&s.cycles()[0], &sset.pool.cycles, c.params.seam);
            if regrown.cycles() != s.cycles() {
                violations.push(format!("{}: closure not stable", entry.id));
            }
            // Seamlessness is symmetric.
            let k = s.cycles().len();
            if k >= 2 {
                for _ in 0..20 {
                    let (i, j) = (rng.below(k), rng.below(k));
                    let a = is_seamless(&s.cycles()[i], &s.cycles()[j], c.params.seam);
                    let b = is_seamless(&s.cycles()[j], &s.cycles()[i], c.params.seam);
                    if a != b {
                        violations.push(format!("{}: asymmetric seam ({i}, {j})", entry.id));
                    }
                    symmetry_samples += 1;
                }
            }
            structures_checked += 1;
        }
        let fset = build_families(&sset.structures, c.params.max_families);
        multi_member += fset.families.iter().filter(|f| f.members.len() > 1).count();
    }
    let ok = violations.is_empty();
    report_line(
        8,
        ok,
        &format!(
            "coverage, connectivity, closure stability, seam symmetry held on \
             {structures_checked} structures ({symmetry_samples} symmetry samples); \
             multi-member families tallied: {multi_member}"
        ),
    );
    assert!(ok, "{violations:?}");
}
