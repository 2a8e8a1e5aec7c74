//! Campaign driver: build a graph corpus from a config and run the
//! verification pipeline over it in parallel.
//!
//! A campaign that *completes* succeeds, whatever the per-graph verdicts
//! say — failed checks are findings and land in the reports.  Errors here
//! are strictly operational: an unknown graph name, a malformed random
//! spec, a generator that gave up.

use domstruct_core::{
    random_3connected, verify_graph, GenError, Graph, NamedGraph, PatternRule, SeamRule,
    VerifyParams,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::str::FromStr;
use std::time::Instant;
use thiserror::Error;

use crate::report::GraphReport;

// ============================================================
// Config
// ============================================================

/// How many random graphs to generate, at which sizes, from which seed.
/// The seed is mandatory: a campaign must be reproducible from its config.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomSpec {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
}

fn default_max_cycles() -> usize {
    VerifyParams::default().max_cycles
}

fn default_max_structures() -> usize {
    VerifyParams::default().max_structures
}

fn default_max_families() -> usize {
    VerifyParams::default().max_families
}

fn default_oracle_limit() -> usize {
    VerifyParams::default().oracle_limit
}

/// A campaign config file.  An explicit config describes its corpus
/// exactly; the `Default` value is the built-in corpus used when no
/// config is given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    #[serde(default)]
    pub named: Vec<String>,
    #[serde(default)]
    pub random: Option<RandomSpec>,
    #[serde(default)]
    pub max_cycle_len: Option<usize>,
    #[serde(default = "default_max_cycles")]
    pub max_cycles: usize,
    #[serde(default = "default_max_structures")]
    pub max_structures: usize,
    #[serde(default = "default_max_families")]
    pub max_families: usize,
    #[serde(default = "default_oracle_limit")]
    pub oracle_limit: usize,
    /// Accept seams that are a single shared vertex (default: a seam
    /// needs at least one shared edge).
    #[serde(default)]
    pub allow_vertex_seam: bool,
    /// Score phase assignments with the relaxed window rule.
    #[serde(default)]
    pub loose_pattern: bool,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            named: [
                "k4",
                "k5",
                "prism3",
                "wheel5",
                "wheel6",
                "petersen",
                "cube_q3",
                "moebius_kantor",
            ]
            .map(String::from)
            .to_vec(),
            random: Some(RandomSpec {
                count: 100,
                n_min: 6,
                n_max: 14,
                seed: 42,
            }),
            max_cycle_len: None,
            max_cycles: default_max_cycles(),
            max_structures: default_max_structures(),
            max_families: default_max_families(),
            oracle_limit: default_oracle_limit(),
            allow_vertex_seam: false,
            loose_pattern: false,
        }
    }
}

impl CampaignConfig {
    pub fn params(&self) -> VerifyParams {
        VerifyParams {
            max_cycle_len: self.max_cycle_len,
            max_cycles: self.max_cycles,
            max_structures: self.max_structures,
            max_families: self.max_families,
            oracle_limit: self.oracle_limit,
            seam: if self.allow_vertex_seam {
                SeamRule::AllowVertex
            } else {
                SeamRule::RequireEdge
            },
            pattern: if self.loose_pattern {
                PatternRule::Loose
            } else {
                PatternRule::Exact
            },
        }
    }
}

// ============================================================
// Corpus
// ============================================================

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub graph: Graph,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CampaignError {
    #[error("unknown named graph {0:?}")]
    UnknownGraph(String),
    #[error("invalid random spec: {0}")]
    BadRandomSpec(String),
    #[error(transparent)]
    Generation(#[from] GenError),
    #[error("campaign corpus is empty")]
    EmptyCorpus,
}

/// Materializes the corpus a config describes: named graphs first, in
/// config order, then the random graphs.  Random sizes sweep
/// `n_min..=n_max` round-robin and each graph gets its own derived seed,
/// so any corpus member can be regenerated in isolation.
pub fn build_corpus(config: &CampaignConfig) -> Result<Vec<CorpusEntry>, CampaignError> {
    let mut corpus = Vec::new();
    for name in &config.named {
        let named = NamedGraph::from_str(name)
            .map_err(|_| CampaignError::UnknownGraph(name.clone()))?;
        corpus.push(CorpusEntry {
            id: named.to_string(),
            graph: named.build(),
        });
    }
    if let Some(spec) = &config.random {
        if spec.n_min < 4 {
            return Err(CampaignError::BadRandomSpec(format!(
                "n_min = {} but 3-connected graphs need at least 4 vertices",
                spec.n_min
            )));
        }
        if spec.n_min > spec.n_max {
            return Err(CampaignError::BadRandomSpec(format!(
                "n_min = {} exceeds n_max = {}",
                spec.n_min, spec.n_max
            )));
        }
        let span = spec.n_max - spec.n_min + 1;
        for i in 0..spec.count {
            let n = spec.n_min + i % span;
            let seed = spec.seed + i as u64;
            let graph = random_3connected(n, seed, 64)?;
            corpus.push(CorpusEntry {
                id: format!("random-{i}-n{n}-seed{seed}"),
                graph,
            });
        }
    }
    if corpus.is_empty() {
        return Err(CampaignError::EmptyCorpus);
    }
    Ok(corpus)
}

// ============================================================
// Running
// ============================================================

/// Verifies every corpus entry, in parallel, preserving corpus order in
/// the output.  With `timings` each report carries its wall-clock cost;
/// without it the output is fully deterministic byte for byte.
pub fn run_campaign(
    corpus: &[CorpusEntry],
    params: &VerifyParams,
    timings: bool,
) -> Vec<GraphReport> {
    corpus
        .par_iter()
        .map(|entry| {
            let start = timings.then(Instant::now);
            let v = verify_graph(&entry.graph, params);
            let ms = start.map(|t| t.elapsed().as_millis() as u64);
            GraphReport::from_verification(&entry.id, &entry.graph, &v, ms)
        })
        .collect()
}

// ============================================================
// tests
// ============================================================
