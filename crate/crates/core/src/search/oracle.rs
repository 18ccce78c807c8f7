//! Brute-force enumeration of integrable adapted maps.
//!
//! Independent of the structural theory: every signed fixed-point-free
//! pairing of the basis is a candidate, and a branch dies as soon as some
//! basis pair has a fully determined, nonzero Nijenhuis value. Elements
//! are paired in index order, so vertices are fixed first. `J` and `-J`
//! are integrable together; only the one with `J b_0 = +b_k` is listed.

use crate::algebra::GraphLieAlgebra;
use crate::complex::{is_integrable, AdaptedMap, IntegrabilityMode};
use crate::error::SearchError;
use crate::graph::Graph;

/// Largest basis the oracle accepts.
pub const ORACLE_DIM_LIMIT: usize = 16;

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// Integrable maps in enumeration order.
    pub maps: Vec<AdaptedMap>,
    /// False if enumeration stopped at the cap.
    pub complete: bool,
    pub nodes: u64,
}

struct Partial<'a> {
    alg: &'a GraphLieAlgebra,
    partner: Vec<usize>,
    sign: Vec<i64>,
}

impl Partial<'_> {
    /// `N(b_a, b_b)` if every value it needs is assigned.
    fn nijenhuis(&self, a: usize, b: usize) -> Option<Vec<(usize, i64)>> {
        let (pa, pb) = (self.partner[a], self.partner[b]);
        if pa == NONE || pb == NONE {
            return None;
        }
        let (sa, sb) = (self.sign[a], self.sign[b]);
        let mut terms: Vec<(usize, i64)> = Vec::with_capacity(4);
        let mut push = |k: usize, c: i64| match terms.iter_mut().find(|t| t.0 == k) {
            Some(t) => t.1 += c,
            None => terms.push((k, c)),
        };
        if let Some((k, c)) = self.alg.basis_bracket(a, b) {
            push(k, c);
        }
        for (x, y, s) in [(pa, b, sa), (a, pb, sb)] {
            if let Some((k, c)) = self.alg.basis_bracket(x, y) {
                let pk = self.partner[k];
                if pk == NONE {
                    return None;
                }
                push(pk, s * c * self.sign[k]);
            }
        }
        if let Some((k, c)) = self.alg.basis_bracket(pa, pb) {
            push(k, -sa * sb * c);
        }
        terms.retain(|t| t.1 != 0);
        Some(terms)
    }

    fn vanishes_if_determined(&self, a: usize, b: usize) -> bool {
        self.nijenhuis(a, b).is_none_or(|t| t.is_empty())
    }

    /// Checks the pairs that may have become determined when `i` was assigned.
    fn consistent_after(&self, i: usize) -> bool {
        let dim = self.partner.len();
        for x in 0..dim {
            if x != i && !self.vanishes_if_determined(x.min(i), x.max(i)) {
                return false;
            }
        }
        // pairs whose inner brackets land on edge `i`
        if let Some((x, y)) = self.alg.edge_endpoints(i) {
            for (u, v) in [(x, y), (y, x)] {
                let pu = self.partner[u];
                if pu != NONE && pu != v && !self.vanishes_if_determined(pu.min(v), pu.max(v)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Every integrable adapted map with positive sign on `b_0`, up to `limit`.
pub fn brute_force_enumerate(g: &Graph, limit: usize) -> Result<OracleResult, SearchError> {
    let alg = GraphLieAlgebra::new(g.clone());
    let dim = alg.dim();
    if dim > ORACLE_DIM_LIMIT {
        return Err(SearchError::BasisTooLarge { dim, limit: ORACLE_DIM_LIMIT });
    }
    let mut out = OracleResult { maps: Vec::new(), complete: true, nodes: 0 };
    if dim % 2 == 1 {
        return Ok(out);
    }
    let mut p = Partial { alg: &alg, partner: vec![NONE; dim], sign: vec![0; dim] };
    rec(&mut p, limit, &mut out);
    Ok(out)
}

fn rec(p: &mut Partial, limit: usize, out: &mut OracleResult) {
    let Some(a) = p.partner.iter().position(|&x| x == NONE) else {
        let partner = p.partner.clone();
        let sign = p.sign.iter().map(|&s| s as i8).collect();
        let j = AdaptedMap::new(partner, sign).expect("complete signed pairing");
        debug_assert!(is_integrable(p.alg, &j, IntegrabilityMode::Full));
        if out.maps.len() == limit {
            out.complete = false;
        } else {
            out.maps.push(j);
        }
        return;
    };
    for b in a + 1..p.partner.len() {
        if p.partner[b] != NONE {
            continue;
        }
        let signs: &[i64] = if a == 0 { &[1] } else { &[1, -1] };
        for &s in signs {
            if !out.complete {
                return;
            }
            out.nodes += 1;
            p.partner[a] = b;
            p.partner[b] = a;
            p.sign[a] = s;
            p.sign[b] = -s;
            if p.consistent_after(a) && p.consistent_after(b) {
                rec(p, limit, out);
            }
            p.partner[a] = NONE;
            p.partner[b] = NONE;
            p.sign[a] = 0;
            p.sign[b] = 0;
        }
    }
}
