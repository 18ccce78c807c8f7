//! Census of small labelled graphs.

use std::collections::{BTreeMap, HashSet};

use super::{decide_adapted, SearchOptions};
use crate::algebra::GraphLieAlgebra;
use crate::error::SearchError;
use crate::graph::Graph;
use crate::structure::{basic_subgraph, nilpotency_step};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub graph: Graph,
    pub admits: bool,
    /// `(p1, p2, p3)` of the certificate's basic subgraph.
    pub signature: Option<(usize, usize, usize)>,
    pub step: Option<u8>,
}

impl CensusRow {
    /// Tab-separated: compact edge list, verdict, signature, step.
    pub fn to_line(&self) -> String {
        let verdict = if self.admits { "admits" } else { "refuted" };
        let sig = self.signature.map_or("-".to_string(), |(a, b, c)| format!("({a},{b},{c})"));
        let step = self.step.map_or("-".to_string(), |s| s.to_string());
        format!("{}\t{verdict}\t{sig}\t{step}", self.graph.to_compact())
    }
}

/// `(|V|, |E|, signature)`; refuted graphs have no signature.
pub type CensusKey = (usize, usize, Option<(usize, usize, usize)>);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusTally {
    pub counts: BTreeMap<CensusKey, usize>,
}

impl CensusTally {
    pub fn add(&mut self, row: &CensusRow) {
        *self.counts.entry((row.graph.n(), row.graph.m(), row.signature)).or_default() += 1;
    }

    pub fn admitted(&self) -> usize {
        self.counts.iter().filter(|(k, _)| k.2.is_some()).map(|(_, c)| c).sum()
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

/// Invariant of the isomorphism class: for each vertex its degree and the
/// sorted degrees of its neighbours, sorted. Distinct classes may collide,
/// so deduplicating by it is only a heuristic.
pub fn census_key(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut key: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&x| g.degree(x)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    key.sort();
    key
}

/// Decides every labelled graph on `1..=max_vertices` vertices, in order of
/// vertex count and then edge-subset bitmask.
pub fn enumerate_admitting(
    max_vertices: usize,
    opts: &SearchOptions,
    dedup: bool,
) -> Result<Vec<CensusRow>, SearchError> {
    let mut rows = Vec::new();
    for n in 1..=max_vertices {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut seen = HashSet::new();
        for mask in 0u64..(1u64 << slots.len()) {
            let edges = slots.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            let g = Graph::new(n, edges).expect("distinct slots");
            if dedup && !seen.insert(census_key(&g)) {
                continue;
            }
            rows.push(census_row(g, opts)?);
        }
    }
    Ok(rows)
}

fn census_row(g: Graph, opts: &SearchOptions) -> Result<CensusRow, SearchError> {
    let d = decide_adapted(&g, opts)?;
    let Some(j) = d.certificate() else {
        return Ok(CensusRow { graph: g, admits: false, signature: None, step: None });
    };
    let alg = GraphLieAlgebra::new(g.clone());
    let base = basic_subgraph(&alg, j).expect("certificates are integrable");
    let step = nilpotency_step(&alg, j);
    Ok(CensusRow { graph: g, admits: true, signature: Some(base.signature()), step: Some(step) })
}
