//! Exact decision for forests.
//!
//! A forest admits an adapted structure iff it has an even number of
//! components and every component has at most one even-degree vertex.
//! The certificate pairs components in order of their least vertex and
//! seeds each pair with a basic copy: two even roots give an A1 pair, an
//! even root and an all-odd tree give an A2 on the tree's least edge, two
//! all-odd trees give an A3 on their least edges. Everything else is
//! reached by wedges: the unvisited neighbours of each reached vertex are
//! paired in ascending order and hung from it.

use std::collections::VecDeque;

use super::{Decision, RefutationReason, Route, SearchStats, Witness};
use crate::error::SearchError;
use crate::graph::Graph;
use crate::structure::{expand, BasicCopy, BasicDecomposition, ExpansionPlan};

/// Decides a forest; errors if `g` has a cycle.
pub fn forest_decision(g: &Graph) -> Result<Decision, SearchError> {
    if !g.is_forest() {
        return Err(SearchError::NotForest);
    }
    let comps = g.components();
    let refuted = |witness| Decision::Refuted {
        reason: RefutationReason::ForestCriterion,
        witness,
        stats: SearchStats::default(),
    };
    if comps.len() % 2 == 1 {
        return Ok(refuted(Witness::ComponentCount(comps.len())));
    }
    let mut roots = Vec::with_capacity(comps.len());
    for c in &comps {
        let even: Vec<usize> = c.iter().copied().filter(|&v| g.degree(v).is_multiple_of(2)).collect();
        match even.len() {
            0 => {
                let edge = g
                    .edges()
                    .iter()
                    .copied()
                    .find(|&(a, _)| c.binary_search(&a).is_ok())
                    .expect("an all-odd tree has an edge");
                roots.push(Root::Edge(edge));
            }
            1 => roots.push(Root::Vertex(even[0])),
            _ => return Ok(refuted(Witness::EvenVertices { component: c[0], even })),
        }
    }

    let mut copies = Vec::new();
    for pair in roots.chunks(2) {
        copies.push(match (pair[0], pair[1]) {
            (Root::Vertex(x), Root::Vertex(y)) => BasicCopy::A1 { pair: (x, y) },
            (Root::Vertex(x), Root::Edge(e)) | (Root::Edge(e), Root::Vertex(x)) => {
                BasicCopy::A2 { isolated: x, edge: e, sign: 1 }
            }
            (Root::Edge(e), Root::Edge(f)) => BasicCopy::A3 { first: e, second: f, sign: 1 },
        });
    }

    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    for r in &roots {
        match *r {
            Root::Vertex(x) => {
                seen[x] = true;
                queue.push_back(x);
            }
            Root::Edge((a, b)) => {
                seen[a] = true;
                seen[b] = true;
                queue.push_back(a);
                queue.push_back(b);
            }
        }
    }
    let mut wedges = Vec::new();
    while let Some(u) = queue.pop_front() {
        let children: Vec<usize> = g.neighbors(u).iter().copied().filter(|&x| !seen[x]).collect();
        debug_assert!(children.len().is_multiple_of(2));
        for c in children.chunks(2) {
            copies.push(BasicCopy::A1 { pair: (c[0], c[1]) });
            wedges.push((u, c[0]));
            for &x in c {
                seen[x] = true;
                queue.push_back(x);
            }
        }
    }
    let base = BasicDecomposition::new(g.n(), copies).expect("roots and children cover the forest");
    let (built, certificate) = expand(&ExpansionPlan { base, wedges }).expect("forest plan is valid");
    debug_assert_eq!(&built, g);
    Ok(Decision::Admits { certificate, route: Route::Forest, stats: SearchStats::default() })
}

#[derive(Clone, Copy)]
enum Root {
    Vertex(usize),
    Edge((usize, usize)),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GraphLieAlgebra;
    use crate::complex::{is_integrable, IntegrabilityMode};
    use crate::families;

    fn verified(g: &Graph) -> bool {
        match forest_decision(g).unwrap() {
            Decision::Admits { certificate, .. } => {
                let alg = GraphLieAlgebra::new(g.clone());
                assert!(is_integrable(&alg, &certificate, IntegrabilityMode::Full));
                true
            }
            Decision::Refuted { .. } => false,
        }
    }

    #[test]
    fn two_tree_examples() {
        for v in 1..=3 {
            assert!(verified(&families::star_union(v).unwrap()));
        }
    }

    #[test]
    fn path_plus_point() {
        let admitted: Vec<usize> =
            (2..=8).filter(|&n| verified(&families::path(n).unwrap().with_isolated(1))).collect();
        assert_eq!(admitted, vec![2, 3]);
        // a single vertex plus a point is A1
        assert!(verified(&families::path(1).unwrap().with_isolated(1)));
    }

    #[test]
    fn single_tree_is_refuted() {
        let d = forest_decision(&families::path(2).unwrap()).unwrap();
        assert_eq!(d.reason(), Some(RefutationReason::ForestCriterion));
    }

    #[test]
    fn cycles_are_rejected() {
        assert_eq!(forest_decision(&families::cycle(3).unwrap()), Err(SearchError::NotForest));
    }
}
