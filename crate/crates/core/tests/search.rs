use nilgraph::algebra::GraphLieAlgebra;
use nilgraph::complex::{is_integrable, AdaptedMap, IntegrabilityMode};
use nilgraph::search::{
    brute_force_enumerate, decide_adapted, forest_decision, Decision, RefutationReason,
    SearchOptions,
};
use nilgraph::structure::{expand, ExpansionPlan};
use nilgraph::{families, Graph};

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << slots.len()).map(move |mask| {
        let edges = slots.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

fn generic() -> SearchOptions {
    SearchOptions { generic_only: true, ..SearchOptions::default() }
}

fn check_certificate(g: &Graph, d: &Decision) {
    if let Some(j) = d.certificate() {
        let alg = GraphLieAlgebra::new(g.clone());
        assert!(is_integrable(&alg, j, IntegrabilityMode::Full), "{g:?}");
        let plan = ExpansionPlan::recover(&alg, j).unwrap();
        let (g2, j2) = expand(&plan).unwrap();
        assert_eq!(&g2, g);
        assert_eq!(&j2, j);
    }
}

#[test]
fn oracle_agreement_up_to_five_vertices() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            if n + g.m() > 12 {
                continue;
            }
            let oracle = !brute_force_enumerate(&g, 1).unwrap().maps.is_empty();
            for opts in [SearchOptions::default(), generic()] {
                let d = decide_adapted(&g, &opts).unwrap();
                assert_eq!(d.admits(), oracle, "{} generic={}", g.to_compact(), opts.generic_only);
                check_certificate(&g, &d);
            }
        }
    }
}

/// Every signed pairing with `J b_0 = +b_k`, filtered by the library's
/// integrability check without any pruning.
fn unpruned_count(g: &Graph) -> usize {
    fn rec(partner: &mut Vec<usize>, sign: &mut Vec<i8>, alg: &GraphLieAlgebra, count: &mut usize) {
        let Some(a) = partner.iter().position(|&x| x == usize::MAX) else {
            let j = AdaptedMap::new(partner.clone(), sign.clone()).unwrap();
            *count += is_integrable(alg, &j, IntegrabilityMode::Full) as usize;
            return;
        };
        for b in a + 1..partner.len() {
            if partner[b] != usize::MAX {
                continue;
            }
            for s in if a == 0 { vec![1] } else { vec![1, -1] } {
                partner[a] = b;
                partner[b] = a;
                sign[a] = s;
                sign[b] = -s;
                rec(partner, sign, alg, count);
                partner[a] = usize::MAX;
                partner[b] = usize::MAX;
            }
        }
    }
    let alg = GraphLieAlgebra::new(g.clone());
    let mut count = 0;
    rec(&mut vec![usize::MAX; alg.dim()], &mut vec![0; alg.dim()], &alg, &mut count);
    count
}

#[test]
fn oracle_counts_match_unpruned_enumeration() {
    for g in [
        families::cycle(3).unwrap(),
        families::cycle(4).unwrap(),
        families::complete(4),
        families::basic(0, 1, 0),
        families::basic(2, 0, 0),
        families::path(4).unwrap(),
    ] {
        let r = brute_force_enumerate(&g, usize::MAX).unwrap();
        assert_eq!(r.maps.len(), unpruned_count(&g), "{}", g.to_compact());
    }
}

#[test]
fn four_cycle_structure_count() {
    let r = brute_force_enumerate(&families::cycle(4).unwrap(), usize::MAX).unwrap();
    assert!(r.complete);
    assert_eq!(r.maps.len(), 4);
}

#[test]
fn cycles() {
    for n in 3..=12 {
        let g = families::cycle(n).unwrap();
        let d = decide_adapted(&g, &SearchOptions::default()).unwrap();
        assert_eq!(d.admits(), n <= 4, "C{n}");
        check_certificate(&g, &d);
        if n > 4 {
            assert_eq!(d.reason(), Some(RefutationReason::CycleCriterion));
        }
        if n <= 10 {
            assert_eq!(decide_adapted(&g, &generic()).unwrap().admits(), n <= 4, "generic C{n}");
        }
    }
}

#[test]
fn wheels() {
    let w4 = families::wheel(4).unwrap();
    assert!(decide_adapted(&w4, &SearchOptions::default()).unwrap().admits());
    for total in [6, 8] {
        let d = decide_adapted(&families::wheel(total).unwrap(), &SearchOptions::default()).unwrap();
        assert_eq!(d.reason(), Some(RefutationReason::ExhaustedSearch), "W{total}");
    }
}

#[test]
fn complete_bipartite() {
    for m in 1..=4 {
        for n in m..=4 {
            let g = families::complete_bipartite(m, n);
            let d = decide_adapted(&g, &SearchOptions::default()).unwrap();
            check_certificate(&g, &d);
            if m % 2 == 0 && n % 2 == 0 {
                assert!(d.admits(), "K{m},{n}");
            }
        }
    }
}

#[test]
fn forests_agree_with_generic_search_up_to_six_vertices() {
    for n in 1..=6 {
        for g in all_graphs(n).filter(Graph::is_forest) {
            let fast = forest_decision(&g).unwrap();
            check_certificate(&g, &fast);
            let slow = decide_adapted(&g, &generic()).unwrap();
            assert_eq!(fast.admits(), slow.admits(), "{}", g.to_compact());
        }
    }
}
