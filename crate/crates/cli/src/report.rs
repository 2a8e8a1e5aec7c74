//! JSON report records for single graphs and whole campaigns.
//!
//! A report is one line of JSON per graph.  Check verdicts serialize as
//! the strings `"pass"`, `"fail"`, `"inconclusive"`; a failed check also
//! attaches a counterexample block carrying the graph itself, so a report
//! file alone suffices to reproduce a falsification.

use domstruct_core::{Graph, StructureOutcome, Tri, Verification};
use serde::{Deserialize, Serialize};

use crate::formats::write_edge_list;

// ============================================================
// Per-graph report
// ============================================================

/// A failed graph, replayable: the checks that failed plus the graph in
/// edge-list form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub failed_checks: Vec<String>,
    pub edge_list: String,
}

/// Everything learned about one graph, flattened for serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub is_3_connected: bool,

    pub cycle_count: usize,
    pub cycles_truncated: bool,
    pub cycles_nonempty: String,

    pub structure_count: usize,
    pub structures_truncated: bool,
    pub family_count: usize,
    /// The bound the family count is checked against (n + 1).
    pub family_bound: usize,
    pub families_truncated: bool,
    pub family_bound_ok: String,
    pub single_member_ok: String,

    pub exceptional_cover_ok: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_path_spot: Option<bool>,

    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_gamma: Option<usize>,
    pub greedy_gamma: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure_gamma: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure_witness: Option<Vec<usize>>,
    /// First rejection reason per family when no family was accepted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure_failure: Option<Vec<String>>,
    pub optimality_ok: String,

    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl GraphReport {
    /// Flattens a verification record.  `runtime_ms` is reported only when
    /// the caller timed the run.
    pub fn from_verification(
        graph_id: &str,
        g: &Graph,
        v: &Verification,
        runtime_ms: Option<u64>,
    ) -> GraphReport {
        let (structure_gamma, structure_witness, structure_failure) = match &v.structure_result {
            StructureOutcome::Accepted { result, .. } => (
                Some(result.gamma),
                Some(result.witness.to_vec()),
                None,
            ),
            StructureOutcome::Failed { rejections } => (
                None,
                None,
                Some(
                    rejections
                        .iter()
                        .map(|r| format!("family {}: {}", r.family, r.reason))
                        .collect(),
                ),
            ),
        };

        let mut failed_checks = Vec::new();
        for (name, tri) in [
            ("cycles_nonempty", v.cycles_nonempty),
            ("family_bound_ok", v.family_bound_ok),
            ("single_member_ok", v.single_member_ok),
            ("exceptional_cover_ok", v.exceptional_cover_ok),
            ("optimality_ok", v.optimality_ok),
        ] {
            if tri.is_fail() {
                failed_checks.push(name.to_string());
            }
        }
        if v.closed_path_spot == Some(false) {
            failed_checks.push("closed_path_spot".to_string());
        }
        let counterexample = (!failed_checks.is_empty()).then(|| Counterexample {
            failed_checks,
            edge_list: write_edge_list(g),
        });

        GraphReport {
            graph_id: graph_id.to_string(),
            n: v.n,
            m: v.m,
            is_3_connected: v.is_3_connected,
            cycle_count: v.cycle_count,
            cycles_truncated: v.cycles_truncated,
            cycles_nonempty: v.cycles_nonempty.as_str().to_string(),
            structure_count: v.structure_count,
            structures_truncated: v.structures_truncated,
            family_count: v.family_count,
            family_bound: v.n + 1,
            families_truncated: v.families_truncated,
            family_bound_ok: v.family_bound_ok.as_str().to_string(),
            single_member_ok: v.single_member_ok.as_str().to_string(),
            exceptional_cover_ok: v.exceptional_cover_ok.as_str().to_string(),
            closed_path_spot: v.closed_path_spot,
            oracle_gamma: v.oracle_gamma,
            greedy_gamma: v.greedy_gamma,
            structure_gamma,
            structure_witness,
            structure_failure,
            optimality_ok: v.optimality_ok.as_str().to_string(),
            runtime_ms,
            counterexample,
        }
    }
}

// ============================================================
// Campaign summary
// ============================================================

/// Pass/fail/inconclusive counts for one check across a campaign.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

impl Tally {
    fn add(&mut self, verdict: &str) {
        match verdict {
            "pass" => self.pass += 1,
            "fail" => self.fail += 1,
            _ => self.inconclusive += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.inconclusive
    }
}

/// Aggregate of a whole campaign; fail counts are findings, not errors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub three_connected: usize,
    /// Graphs where some family produced an accepted label set.
    pub structure_accepted: usize,
    pub cycles_nonempty: Tally,
    pub family_bound: Tally,
    pub single_member: Tally,
    pub exceptional_cover: Tally,
    pub optimality: Tally,
    pub closed_path_spot_checked: usize,
    pub closed_path_spot_failed: usize,
    pub counterexamples: usize,
}

/// Tallies per-graph reports into a campaign summary.
pub fn summarize(reports: &[GraphReport]) -> Summary {
    let mut s = Summary {
        graphs: reports.len(),
        ..Summary::default()
    };
    for r in reports {
        if r.is_3_connected {
            s.three_connected += 1;
        }
        if r.structure_gamma.is_some() {
            s.structure_accepted += 1;
        }
        s.cycles_nonempty.add(&r.cycles_nonempty);
        s.family_bound.add(&r.family_bound_ok);
        s.single_member.add(&r.single_member_ok);
        s.exceptional_cover.add(&r.exceptional_cover_ok);
        s.optimality.add(&r.optimality_ok);
        if let Some(ok) = r.closed_path_spot {
            s.closed_path_spot_checked += 1;
            if !ok {
                s.closed_path_spot_failed += 1;
            }
        }
        if r.counterexample.is_some() {
            s.counterexamples += 1;
        }
    }
    s
}

/// Convenience used by checks that lift a `Tri` directly into a tally.
pub fn tally_tri(tally: &mut Tally, t: Tri) {
    tally.add(t.as_str());
}

// ============================================================
// tests
// ============================================================
