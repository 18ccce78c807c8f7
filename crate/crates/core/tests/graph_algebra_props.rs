use std::collections::HashSet;

use nilgraph::algebra::{GraphLieAlgebra, LieVector};
use nilgraph::forms::{ce_differential, AltForm};
use nilgraph::linalg::{q, qf, Q};
use nilgraph::{families, Graph};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn rational() -> impl Strategy<Value = Q> {
    (-5i64..=5, 1i64..=3).prop_map(|(a, b)| qf(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn handshake_and_odd_count(g in graph_strategy(9)) {
        let total: usize = g.degrees().iter().sum();
        prop_assert_eq!(total, 2 * g.m());
        prop_assert_eq!(g.odd_vertices().len() % 2, 0);
    }

    #[test]
    fn text_round_trip(g in graph_strategy(9)) {
        let text = g.to_text();
        let back = Graph::parse(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_text(), text);
    }

    #[test]
    fn even_blow_up_has_even_degrees(g in graph_strategy(5), k in proptest::collection::vec(0usize..=2, 5)) {
        let mult: Vec<usize> = k[..g.n()].iter().map(|x| 2 * x).collect();
        let b = g.blow_up(&mult);
        prop_assert!(b.degrees().iter().all(|d| d % 2 == 0));
    }

    #[test]
    fn differential_squares_to_zero_on_two_forms(
        g in graph_strategy(8),
        coeffs in proptest::collection::vec(rational(), 12),
        picks in proptest::collection::vec((0usize..64, 0usize..64), 12),
    ) {
        let alg = GraphLieAlgebra::new(g);
        let dim = alg.dim();
        prop_assume!(dim >= 2);
        let mut f = AltForm::zero(dim, 2).unwrap();
        for ((a, b), c) in picks.iter().zip(&coeffs) {
            let (a, b) = (a % dim, b % dim);
            if a != b {
                f.add_value(&[a, b], c).unwrap();
            }
        }
        let ddf = ce_differential(&alg, &ce_differential(&alg, &f).unwrap()).unwrap();
        prop_assert!(ddf.is_zero());
    }
}

#[test]
fn complete_bipartite_edges_cross_the_colouring() {
    for m in 1..=5 {
        for n in 1..=5 {
            let g = families::complete_bipartite(m, n);
            assert_eq!(g.m(), m * n);
            assert!(g.edges().iter().all(|&(a, b)| (a < m) != (b < m)));
        }
    }
}

#[test]
fn girth_gadget_girth() {
    for n in 3..=10 {
        assert_eq!(families::girth_gadget(n).unwrap().girth(), Some(n), "n={n}");
    }
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << slots.len()).map(move |mask| {
        let edges = slots.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

/// Sample of graphs up to 8 vertices: all graphs to 4 vertices plus named families.
fn sample_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=4).flat_map(all_graphs).collect();
    out.extend([
        families::complete(8),
        families::cycle(8).unwrap(),
        families::wheel(8).unwrap(),
        families::cubic8(),
        families::moser(),
        families::complete_bipartite(3, 5),
        families::path(8).unwrap(),
    ]);
    out
}

#[test]
fn differential_squares_to_zero_on_one_forms() {
    for g in sample_graphs() {
        let alg = GraphLieAlgebra::new(g);
        for i in 0..alg.dim() {
            let f = AltForm::monomial(alg.dim(), &[i]).unwrap();
            let ddf = ce_differential(&alg, &ce_differential(&alg, &f).unwrap()).unwrap();
            assert!(ddf.is_zero(), "{}", alg.graph().to_compact());
        }
    }
}

#[test]
fn jacobi_and_centrality() {
    for g in sample_graphs() {
        let alg = GraphLieAlgebra::new(g);
        let dim = alg.dim();
        let b = |i| LieVector::basis(dim, i);
        for x in 0..dim {
            for y in 0..dim {
                let xy = alg.bracket(&b(x), &b(y)).unwrap();
                for z in 0..dim {
                    assert!(alg.bracket(&xy, &b(z)).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn nonzero_brackets_are_injective() {
    for g in sample_graphs() {
        let alg = GraphLieAlgebra::new(g);
        let mut seen = HashSet::new();
        for i in 0..alg.dim() {
            for j in i + 1..alg.dim() {
                if let Some((k, _)) = alg.basis_bracket(i, j) {
                    assert!(seen.insert(k), "edge {k} hit twice");
                }
            }
        }
        assert_eq!(seen.len(), alg.graph().m());
    }
}

#[test]
fn edge_dual_differential() {
    for g in sample_graphs() {
        let alg = GraphLieAlgebra::new(g);
        let n = alg.n_vertices();
        for e in n..alg.dim() {
            let (a, b) = alg.edge_endpoints(e).unwrap();
            let de = ce_differential(&alg, &AltForm::monomial(alg.dim(), &[e]).unwrap()).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    let want = if (u, v) == (a, b) { q(-1) } else { q(0) };
                    assert_eq!(de.eval_basis(&[u, v]), want);
                }
            }
        }
    }
}
