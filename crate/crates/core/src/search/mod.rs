//! Deciding whether a graph carries an adapted complex structure.
//!
//! [`decide_adapted`] runs cheap exact criteria first (dimension parity,
//! forests, single cycles, local obstructions) and falls back to a
//! structured search over basic subgraphs and wedge matchings. Every
//! `Admits` certificate has passed the full integrability check; a budget
//! overrun is an error, never a refutation.

mod census;
mod forest;
mod oracle;
mod structured;

use std::fmt;

pub use census::{census_key, enumerate_admitting, CensusRow, CensusTally};
pub use forest::forest_decision;
pub use oracle::{brute_force_enumerate, OracleResult, ORACLE_DIM_LIMIT};

use crate::algebra::GraphLieAlgebra;
use crate::catalog;
use crate::complex::AdaptedMap;
use crate::error::SearchError;
use crate::graph::Graph;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of search nodes before giving up.
    pub budget: u64,
    /// Worker threads for the structured search; `1` runs inline.
    pub workers: usize,
    /// Skip the forest, cycle and obstruction shortcuts.
    pub generic_only: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, workers: 1, generic_only: false }
    }
}

/// Prune counts of the structured search, one per rule.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PruneCounts {
    /// Paired vertices of different degree parity.
    pub parity: u64,
    /// Adjacent pair, or odd pair without a common neighbour.
    pub distance: u64,
    /// Vertex sent to an edge with odd degree or a neighbour also sent to an edge.
    pub isolated: u64,
    /// An edge that can no longer lie in any wedge.
    pub wedge: u64,
    /// Wrong number of vertices sent to edges.
    pub count: u64,
    /// Edges left over after matching wedges.
    pub partner: u64,
    /// Assembled structure failed the integrability check.
    pub verify: u64,
}

impl PruneCounts {
    fn add(&mut self, o: &PruneCounts) {
        self.parity += o.parity;
        self.distance += o.distance;
        self.isolated += o.isolated;
        self.wedge += o.wedge;
        self.count += o.count;
        self.partner += o.partner;
        self.verify += o.verify;
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    /// Candidate distinguished-edge sets examined.
    pub edge_sets: u64,
    pub prunes: PruneCounts,
}

impl SearchStats {
    fn add(&mut self, o: &SearchStats) {
        self.nodes += o.nodes;
        self.edge_sets += o.edge_sets;
        self.prunes.add(&o.prunes);
    }
}

impl fmt::Display for SearchStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.prunes;
        write!(
            f,
            "nodes={} edge-sets={} prune-parity={} prune-distance={} prune-isolated={} \
             prune-wedge={} prune-count={} prune-partner={} prune-verify={}",
            self.nodes, self.edge_sets, p.parity, p.distance, p.isolated, p.wedge, p.count,
            p.partner, p.verify
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RefutationReason {
    OddDimension,
    ParityObstruction,
    OddDistanceObstruction,
    ForestCriterion,
    CycleCriterion,
    ExhaustedSearch,
}

impl RefutationReason {
    pub fn tag(&self) -> &'static str {
        match self {
            RefutationReason::OddDimension => "odd-dimension",
            RefutationReason::ParityObstruction => "parity-obstruction",
            RefutationReason::OddDistanceObstruction => "odd-distance-obstruction",
            RefutationReason::ForestCriterion => "forest-criterion",
            RefutationReason::CycleCriterion => "cycle-criterion",
            RefutationReason::ExhaustedSearch => "exhausted-search",
        }
    }
}

/// How an affirmative answer was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Forest,
    Cycle,
    Search,
}

impl Route {
    pub fn tag(&self) -> &'static str {
        match self {
            Route::Forest => "forest-construction",
            Route::Cycle => "cycle-certificate",
            Route::Search => "structured-search",
        }
    }
}

/// Data backing a refutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Dimension(usize),
    /// An odd vertex at distance at least 3 from every other odd vertex.
    Vertex(usize),
    /// No `(p1, p2, p3)` with `2 p1 + 3 p2 + 4 p3 = n`.
    VertexCount(usize),
    /// A forest with an odd number of components.
    ComponentCount(usize),
    /// A tree (named by its least vertex) with these even-degree vertices.
    EvenVertices { component: usize, even: Vec<usize> },
    Cycle(usize),
    Search,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Dimension(d) => write!(f, "dimension {d}"),
            Witness::Vertex(v) => write!(f, "vertex v{}", v + 1),
            Witness::VertexCount(n) => write!(f, "{n} vertices fit no basic signature"),
            Witness::ComponentCount(c) => write!(f, "{c} components"),
            Witness::EvenVertices { component, even } => {
                let names: Vec<String> = even.iter().map(|v| format!("v{}", v + 1)).collect();
                write!(f, "tree of v{} has even vertices {}", component + 1, names.join(" "))
            }
            Witness::Cycle(n) => write!(f, "cycle of length {n}"),
            Witness::Search => write!(f, "search space exhausted"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Admits { certificate: AdaptedMap, route: Route, stats: SearchStats },
    Refuted { reason: RefutationReason, witness: Witness, stats: SearchStats },
}

impl Decision {
    pub fn admits(&self) -> bool {
        matches!(self, Decision::Admits { .. })
    }

    pub fn certificate(&self) -> Option<&AdaptedMap> {
        match self {
            Decision::Admits { certificate, .. } => Some(certificate),
            Decision::Refuted { .. } => None,
        }
    }

    pub fn reason(&self) -> Option<RefutationReason> {
        match self {
            Decision::Admits { .. } => None,
            Decision::Refuted { reason, .. } => Some(*reason),
        }
    }

    pub fn stats(&self) -> &SearchStats {
        match self {
            Decision::Admits { stats, .. } | Decision::Refuted { stats, .. } => stats,
        }
    }

    fn refuted(reason: RefutationReason, witness: Witness) -> Decision {
        Decision::Refuted { reason, witness, stats: SearchStats::default() }
    }
}

/// A sound reason why no adapted structure exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    OddDimension { dim: usize },
    /// Odd vertex whose nearest other odd vertex is at distance ≥ 3 or unreachable.
    FarOddVertex { vertex: usize },
    NoBasicSignature { n: usize },
}

impl Obstruction {
    pub fn reason(&self) -> RefutationReason {
        match self {
            Obstruction::OddDimension { .. } => RefutationReason::OddDimension,
            Obstruction::FarOddVertex { .. } => RefutationReason::OddDistanceObstruction,
            Obstruction::NoBasicSignature { .. } => RefutationReason::ParityObstruction,
        }
    }

    fn witness(&self) -> Witness {
        match *self {
            Obstruction::OddDimension { dim } => Witness::Dimension(dim),
            Obstruction::FarOddVertex { vertex } => Witness::Vertex(vertex),
            Obstruction::NoBasicSignature { n } => Witness::VertexCount(n),
        }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.reason().tag(), self.witness())
    }
}

/// Signatures `(p1, p2, p3)` with `2 p1 + 3 p2 + 4 p3 = n`.
pub fn basic_signatures(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for p3 in 0..=n / 4 {
        for p2 in 0..=(n - 4 * p3) / 3 {
            let rest = n - 4 * p3 - 3 * p2;
            if rest.is_multiple_of(2) {
                out.push((rest / 2, p2, p3));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Every cheap obstruction that applies; empty decides nothing.
pub fn obstruction_scan(g: &Graph) -> Vec<Obstruction> {
    let mut out = Vec::new();
    let dim = g.n() + g.m();
    if dim % 2 == 1 {
        out.push(Obstruction::OddDimension { dim });
    }
    let odd = g.odd_vertices();
    for &v in &odd {
        let dist = g.distances_from(v);
        let near = odd.iter().any(|&w| w != v && matches!(dist[w], Some(d) if d <= 2));
        if !near {
            out.push(Obstruction::FarOddVertex { vertex: v });
        }
    }
    if basic_signatures(g.n()).is_empty() {
        out.push(Obstruction::NoBasicSignature { n: g.n() });
    }
    out
}

/// If `g` is a single cycle through all its vertices, the vertices in cyclic
/// order starting at `0` and continuing to its smaller neighbour.
fn cycle_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || g.m() != n || (0..n).any(|v| g.degree(v) != 2) {
        return None;
    }
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = g.neighbors(0)[0];
    while cur != 0 {
        order.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&x| x != prev).expect("degree 2");
        prev = cur;
        cur = next;
    }
    (order.len() == n).then_some(order)
}

/// Sound and complete decision for finite graphs.
pub fn decide_adapted(g: &Graph, opts: &SearchOptions) -> Result<Decision, SearchError> {
    let dim = g.n() + g.m();
    if dim % 2 == 1 {
        return Ok(Decision::refuted(RefutationReason::OddDimension, Witness::Dimension(dim)));
    }
    if !opts.generic_only {
        if g.is_forest() {
            return forest_decision(g);
        }
        if let Some(order) = cycle_order(g) {
            return Ok(cycle_decision(g, &order));
        }
        if let Some(ob) = obstruction_scan(g).first() {
            return Ok(Decision::refuted(ob.reason(), ob.witness()));
        }
    }
    structured::search(g, opts)
}

fn cycle_decision(g: &Graph, order: &[usize]) -> Decision {
    let n = order.len();
    let template = match n {
        3 => catalog::cycle3(),
        4 => catalog::cycle4(),
        _ => return Decision::refuted(RefutationReason::CycleCriterion, Witness::Cycle(n)),
    };
    let from = template.algebra();
    let to = GraphLieAlgebra::new(g.clone());
    // the template's cycle is 0, 1, .., n-1 in order
    let certificate = template.j.transport(&from, &to, order);
    Decision::Admits { certificate, route: Route::Cycle, stats: SearchStats::default() }
}
