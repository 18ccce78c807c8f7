//! Structured search over basic subgraphs.
//!
//! An adapted structure is fixed, up to choices that never affect
//! integrability, by three pieces of data:
//!
//! * `D`, the distinguished edges (a matching, `|D| ≡ |V| mod 2`);
//! * `S`, the uncovered vertices sent to edges (`|S| ≤ |D|`,
//!   `|D| - |S|` even, each of even degree with no neighbour in `S`);
//! * a pairing of the remaining vertices (same degree parity, never
//!   adjacent, odd pairs at distance exactly 2).
//!
//! Given these, every edge outside `D` must share a wedge with `{a, P(b)}`
//! or `{b, P(a)}`. That partner relation has maximum degree 2, so a wedge
//! matching exists iff every component has an even number of edges.
//!
//! Edge sets `D` are scanned by increasing size, lexicographically within
//! a size. Inside one `D` the first success wins; across the `D` of the
//! first successful size the smallest orbit list is emitted, so the answer
//! and the node count do not depend on the worker count.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::{Decision, RefutationReason, Route, SearchOptions, SearchStats, Witness};
use crate::algebra::GraphLieAlgebra;
use crate::complex::{is_integrable, AdaptedMap, IntegrabilityMode};
use crate::error::SearchError;
use crate::graph::Graph;
use crate::structure::{expand, BasicCopy, BasicDecomposition, ExpansionPlan};

const NONE: usize = usize::MAX;

struct Shared<'a> {
    g: &'a Graph,
    /// `common[u * n + v]`: `u` and `v` have a common neighbour.
    common: Vec<bool>,
    budget: u64,
    nodes: AtomicU64,
    exceeded: AtomicBool,
}

impl Shared<'_> {
    /// Counts one node; false once the budget is spent.
    fn tick(&self, local: &mut SearchStats) -> bool {
        local.nodes += 1;
        let total = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if total > self.budget {
            self.exceeded.store(true, Ordering::Relaxed);
            return false;
        }
        !self.exceeded.load(Ordering::Relaxed)
    }
}

pub(super) fn search(g: &Graph, opts: &SearchOptions) -> Result<Decision, SearchError> {
    let n = g.n();
    let mut common = vec![false; n * n];
    for u in 0..n {
        for &x in g.neighbors(u) {
            for &v in g.neighbors(x) {
                if v != u {
                    common[u * n + v] = true;
                }
            }
        }
    }
    let shared = Shared {
        g,
        common,
        budget: opts.budget,
        nodes: AtomicU64::new(0),
        exceeded: AtomicBool::new(false),
    };
    let pool = if opts.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
                .expect("thread pool"),
        )
    } else {
        None
    };

    let mut stats = SearchStats::default();
    let mut size = n % 2;
    loop {
        let sets = matchings_of_size(&shared, size, &mut stats);
        if shared.exceeded.load(Ordering::Relaxed) {
            return Err(budget_error(&shared));
        }
        if sets.is_empty() {
            break;
        }
        let run = |d: &Vec<usize>| {
            let mut local = SearchStats { edge_sets: 1, ..SearchStats::default() };
            let found = explore(&shared, d, &mut local);
            (found, local)
        };
        let results: Vec<(Option<AdaptedMap>, SearchStats)> = match &pool {
            Some(p) => p.install(|| sets.par_iter().map(run).collect()),
            None => sets.iter().map(run).collect(),
        };
        if shared.exceeded.load(Ordering::Relaxed) {
            return Err(budget_error(&shared));
        }
        let mut best: Option<AdaptedMap> = None;
        for (found, local) in results {
            stats.add(&local);
            if let Some(j) = found {
                if best.as_ref().is_none_or(|b| j.orbits() < b.orbits()) {
                    best = Some(j);
                }
            }
        }
        if let Some(certificate) = best {
            return Ok(Decision::Admits { certificate, route: Route::Search, stats });
        }
        size += 2;
    }
    Ok(Decision::Refuted { reason: RefutationReason::ExhaustedSearch, witness: Witness::Search, stats })
}

fn budget_error(shared: &Shared) -> SearchError {
    SearchError::BudgetExceeded { budget: shared.budget, nodes: shared.nodes.load(Ordering::Relaxed) }
}

/// All matchings with `size` edges, as ascending edge-index lists in
/// lexicographic order. Each emitted set costs one node.
fn matchings_of_size(shared: &Shared, size: usize, stats: &mut SearchStats) -> Vec<Vec<usize>> {
    fn rec(
        shared: &Shared,
        start: usize,
        size: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        stats: &mut SearchStats,
    ) -> bool {
        if cur.len() == size {
            out.push(cur.clone());
            return shared.tick(stats);
        }
        let edges = shared.g.edges();
        let need = size - cur.len();
        for k in start..edges.len() {
            if edges.len() - k < need {
                break;
            }
            let (a, b) = edges[k];
            if used[a] || used[b] {
                continue;
            }
            used[a] = true;
            used[b] = true;
            cur.push(k);
            let go_on = rec(shared, k + 1, size, used, cur, out, stats);
            cur.pop();
            used[a] = false;
            used[b] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    let mut used = vec![false; shared.g.n()];
    if 2 * size <= shared.g.n() {
        rec(shared, 0, size, &mut used, &mut Vec::new(), &mut out, stats);
    }
    out
}

struct State<'s, 'a> {
    shared: &'s Shared<'a>,
    d: &'s [usize],
    in_d: Vec<bool>,
    /// Vertex partner, or `NONE` if unassigned or sent to an edge.
    pair: Vec<usize>,
    in_s: Vec<bool>,
    s_count: usize,
    order: Vec<usize>,
}

impl State<'_, '_> {
    fn assigned(&self, v: usize) -> bool {
        self.pair[v] != NONE || self.in_s[v]
    }

    /// Edge `{a, b}` outside `D` with both ends assigned still has a
    /// possible wedge partner.
    fn edge_alive(&self, a: usize, b: usize) -> bool {
        let g = self.shared.g;
        let via = |c: usize, x: usize| {
            let px = self.pair[x];
            px != NONE && px != c && g.has_edge(c, px)
        };
        via(a, b) || via(b, a)
    }

    /// Checks every edge at `v` whose other end is assigned.
    fn edges_alive_at(&self, v: usize) -> bool {
        let g = self.shared.g;
        g.neighbors(v).iter().all(|&x| {
            if !self.assigned(x) {
                return true;
            }
            let k = g.edge_index(v, x).expect("neighbour");
            self.in_d[k] || self.edge_alive(v, x)
        })
    }
}

fn explore(shared: &Shared, d: &[usize], stats: &mut SearchStats) -> Option<AdaptedMap> {
    let g = shared.g;
    let n = g.n();
    let mut st = State {
        shared,
        d,
        in_d: vec![false; g.m()],
        pair: vec![NONE; n],
        in_s: vec![false; n],
        s_count: 0,
        order: Vec::new(),
    };
    for &k in d {
        let (a, b) = g.edges()[k];
        if g.degree(a) % 2 != g.degree(b) % 2 {
            stats.prunes.parity += 1;
            return None;
        }
        st.in_d[k] = true;
        st.pair[a] = b;
        st.pair[b] = a;
    }
    for &k in d {
        let (a, b) = g.edges()[k];
        if !st.edges_alive_at(a) || !st.edges_alive_at(b) {
            stats.prunes.wedge += 1;
            return None;
        }
    }
    // odd vertices first: they can only pair among themselves at distance 2
    let mut order: Vec<usize> = (0..n).filter(|&v| st.pair[v] == NONE).collect();
    order.sort_by_key(|&v| (g.degree(v).is_multiple_of(2), v));
    st.order = order;
    backtrack(&mut st, 0, stats)
}

fn backtrack(st: &mut State, idx: usize, stats: &mut SearchStats) -> Option<AdaptedMap> {
    let g = st.shared.g;
    let Some(pos) = (idx..st.order.len()).find(|&p| !st.assigned(st.order[p])) else {
        return finish(st, stats);
    };
    let v = st.order[pos];
    let even = g.degree(v).is_multiple_of(2);

    if even && st.s_count < st.d.len() {
        if st.shared.tick(stats) {
            st.in_s[v] = true;
            st.s_count += 1;
            if g.neighbors(v).iter().any(|&x| st.in_s[x]) {
                stats.prunes.isolated += 1;
            } else if !st.edges_alive_at(v) {
                stats.prunes.wedge += 1;
            } else if let Some(j) = backtrack(st, pos + 1, stats) {
                return Some(j);
            }
            st.in_s[v] = false;
            st.s_count -= 1;
        } else {
            return None;
        }
    }

    for p in pos + 1..st.order.len() {
        let w = st.order[p];
        if st.assigned(w) {
            continue;
        }
        if g.degree(w).is_multiple_of(2) != even {
            stats.prunes.parity += 1;
            continue;
        }
        let n = g.n();
        if g.has_edge(v, w) || (!even && !st.shared.common[v * n + w]) {
            stats.prunes.distance += 1;
            continue;
        }
        if !st.shared.tick(stats) {
            return None;
        }
        st.pair[v] = w;
        st.pair[w] = v;
        if st.edges_alive_at(v) && st.edges_alive_at(w) {
            if let Some(j) = backtrack(st, pos + 1, stats) {
                return Some(j);
            }
        } else {
            stats.prunes.wedge += 1;
        }
        st.pair[v] = NONE;
        st.pair[w] = NONE;
    }
    None
}

/// All vertices placed: check counts, match wedges and assemble `J`.
fn finish(st: &State, stats: &mut SearchStats) -> Option<AdaptedMap> {
    let g = st.shared.g;
    let n = g.n();
    if (st.d.len() - st.s_count) % 2 == 1 {
        stats.prunes.count += 1;
        return None;
    }
    let Some(wedges) = wedge_matching(st) else {
        stats.prunes.partner += 1;
        return None;
    };

    let mut copies = Vec::new();
    for v in 0..n {
        let w = st.pair[v];
        if w != NONE && v < w && !g.edge_index(v, w).is_some_and(|k| st.in_d[k]) {
            copies.push(BasicCopy::A1 { pair: (v, w) });
        }
    }
    let s_list: Vec<usize> = (0..n).filter(|&v| st.in_s[v]).collect();
    let d_edges: Vec<(usize, usize)> = st.d.iter().map(|&k| g.edges()[k]).collect();
    for (&s, &e) in s_list.iter().zip(&d_edges) {
        copies.push(BasicCopy::A2 { isolated: s, edge: e, sign: 1 });
    }
    for c in d_edges[s_list.len()..].chunks(2) {
        copies.push(BasicCopy::A3 { first: c[0], second: c[1], sign: 1 });
    }
    let base = BasicDecomposition::new(n, copies).expect("search covers every vertex");
    let (built, j) = expand(&ExpansionPlan { base, wedges }).expect("matched wedges form a valid plan");
    debug_assert_eq!(&built, g);
    if !is_integrable(&GraphLieAlgebra::new(built), &j, IntegrabilityMode::Full) {
        stats.prunes.verify += 1;
        return None;
    }
    Some(j)
}

/// Perfect matching of the partner relation on edges outside `D`, as
/// wedges `(centre, lower endpoint)`; `None` if some component is odd.
fn wedge_matching(st: &State) -> Option<Vec<(usize, usize)>> {
    let g = st.shared.g;
    let m = g.m();
    let links = |k: usize| -> [Option<(usize, usize)>; 2] {
        let (a, b) = g.edges()[k];
        let via = |c: usize, x: usize| {
            let px = st.pair[x];
            if px == NONE || px == c {
                return None;
            }
            g.edge_index(c, px).map(|e| (e, c))
        };
        [via(a, b), via(b, a)]
    };
    let mut matched = vec![false; m];
    let mut wedges = Vec::new();
    let mut take = |k: usize, e: usize, c: usize, matched: &mut Vec<bool>| {
        matched[k] = true;
        matched[e] = true;
        let other = |x: usize| {
            let (a, b) = g.edges()[x];
            if a == c {
                b
            } else {
                a
            }
        };
        wedges.push((c, other(k).min(other(e))));
    };
    let degree = |k: usize| links(k).iter().flatten().filter(|&&(e, _)| !st.in_d[e]).count();
    // paths first, walked from an end; then the remaining even cycles
    for pass in 0..2 {
        for k in 0..m {
            if st.in_d[k] || matched[k] {
                continue;
            }
            if pass == 0 && degree(k) == 2 {
                continue;
            }
            let mut cur = k;
            loop {
                let (e, c) = links(cur).into_iter().flatten().find(|&(e, _)| !matched[e] && e != cur)?;
                take(cur, e, c, &mut matched);
                let after = links(e).into_iter().flatten().find(|&(x, _)| !matched[x]);
                match after {
                    Some((x, _)) => cur = x,
                    None => break,
                }
            }
        }
    }
    wedges.sort_unstable();
    Some(wedges)
}
