//! Worked examples of integrable adapted structures, either as explicit
//! orbit tables or built by expanding a basic graph.

use crate::algebra::GraphLieAlgebra;
use crate::complex::{AdaptedMap, Orbit};
use crate::error::FamilyError;
use crate::families::{self, one_based};
use crate::graph::Graph;
use crate::structure::{expand, BasicCopy, BasicDecomposition, ExpansionPlan};

/// A graph together with an adapted structure on its algebra.
#[derive(Clone, Debug)]
pub struct Example {
    pub name: String,
    pub graph: Graph,
    pub j: AdaptedMap,
}

impl Example {
    pub fn algebra(&self) -> GraphLieAlgebra {
        GraphLieAlgebra::new(self.graph.clone())
    }
}

/// Orbit table in 1-based names, one entry `J a = [-]b` per orbit.
fn table(g: &Graph, rows: &[(&str, &str)]) -> AdaptedMap {
    let alg = GraphLieAlgebra::new(g.clone());
    let orbits: Vec<Orbit> = rows
        .iter()
        .map(|&(a, b)| {
            let (sign, b) = match b.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, b),
            };
            let ia = alg.parse_basis_name(a).unwrap_or_else(|| panic!("bad token {a}"));
            let ib = alg.parse_basis_name(b).unwrap_or_else(|| panic!("bad token {b}"));
            Orbit { a: ia, b: ib, sign }
        })
        .collect();
    AdaptedMap::from_orbits(alg.dim(), &orbits).expect("complete orbit table")
}

fn example(name: impl Into<String>, graph: Graph, rows: &[(&str, &str)]) -> Example {
    let j = table(&graph, rows);
    Example { name: name.into(), graph, j }
}

fn expanded(name: impl Into<String>, base: BasicDecomposition, wedges: Vec<(usize, usize)>) -> Example {
    let (graph, j) = expand(&ExpansionPlan { base, wedges }).expect("valid expansion plan");
    Example { name: name.into(), graph, j }
}

pub fn a1() -> Example {
    example("A1", families::basic(1, 0, 0), &[("v1", "v2")])
}

pub fn a2() -> Example {
    example("A2", one_based(3, &[(1, 2)]), &[("v1", "v2"), ("v3", "e1,2")])
}

pub fn a3() -> Example {
    example("A3", one_based(4, &[(1, 2), (3, 4)]), &[("v1", "v2"), ("v3", "v4"), ("e1,2", "e3,4")])
}

pub fn cycle3() -> Example {
    let g = families::cycle(3).expect("n = 3");
    example("C3", g, &[("v1", "e2,3"), ("v2", "v3"), ("e1,2", "e1,3")])
}

pub fn cycle4() -> Example {
    let g = families::cycle(4).expect("n = 4");
    example("C4", g, &[("v1", "v3"), ("v2", "v4"), ("e2,3", "e1,2"), ("e1,4", "e3,4")])
}

/// The second structure on `C_4`, with wedges centred at `v1` and `v3`.
pub fn cycle4_wedges() -> Example {
    let g = families::cycle(4).expect("n = 4");
    example("C4-wedges", g, &[("v1", "v3"), ("v2", "v4"), ("e1,2", "e1,4"), ("e2,3", "-e3,4")])
}

/// `K_4` with basic subgraph `(0,0,1)`.
pub fn g1() -> Example {
    example(
        "G1",
        families::complete(4),
        &[("v1", "v2"), ("v3", "v4"), ("e1,2", "e3,4"), ("e1,3", "e1,4"), ("e2,3", "e2,4")],
    )
}

/// Five vertices, seven edges, basic subgraph `(1,1,0)`, 3-step.
pub fn g2() -> Example {
    let g = one_based(5, &[(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)]);
    example(
        "G2",
        g,
        &[
            ("v1", "e2,3"), ("v2", "v3"), ("v4", "v5"),
            ("e1,2", "e1,3"), ("e2,4", "e3,4"), ("e2,5", "e3,5"),
        ],
    )
}

/// The comb `F_n`, whose structure pairs `v_1` with `w_n`.
pub fn comb(n: usize) -> Result<Example, FamilyError> {
    let g = families::comb(n)?;
    let v = |k: usize| format!("v{k}");
    let w = |k: usize| format!("v{}", n + k);
    let e = |a: usize, b: usize| format!("e{},{}", a.min(b), a.max(b));
    let mut rows: Vec<(String, String)> = vec![(v(1), w(n))];
    for k in 2..=n {
        rows.push((v(k), w(k - 1)));
    }
    rows.push((e(n, 2 * n), e(2 * n - 1, 2 * n)));
    for k in 1..n {
        rows.push((e(k, k + 1), e(k, n + k)));
    }
    let rows: Vec<(&str, &str)> = rows.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Ok(example(format!("F{n}"), g, &rows))
}

pub fn moser() -> Example {
    example(
        "Moser",
        families::moser(),
        &[
            ("v1", "e6,7"), ("v6", "v7"), ("v2", "v3"), ("v4", "v5"), ("e2,3", "e4,5"),
            ("e1,2", "e1,3"), ("e2,6", "e3,6"), ("e1,4", "e1,5"), ("e4,7", "e5,7"),
        ],
    )
}

pub fn cubic8() -> Example {
    let wedges = vec![(5, 0), (7, 2), (1, 2), (4, 2), (6, 4), (0, 6)];
    expanded("cubic8", BasicDecomposition::canonical(4, 0, 0), wedges)
}

/// Connected, girth `n`, all copies of type A1.
pub fn girth_gadget(n: usize) -> Result<Example, FamilyError> {
    families::girth_gadget(n)?;
    let base = BasicDecomposition::new(
        2 * n,
        (0..n).map(|i| BasicCopy::A1 { pair: (i, n + i) }).collect(),
    )
    .expect("pairs partition the vertices");
    let mut wedges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    wedges.push((n - 1, 0));
    Ok(expanded(format!("girth{n}"), base, wedges))
}

/// `K_{m,n}` for even `m, n`: pairs inside each part, wedges centred in the first.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Example, FamilyError> {
    if m % 2 == 1 || n % 2 == 1 {
        return Err(FamilyError::BadParams {
            family: "complete_bipartite".into(),
            reason: "both parts must have even size for the explicit structure".into(),
        });
    }
    let copies = (0..(m + n) / 2).map(|t| BasicCopy::A1 { pair: (2 * t, 2 * t + 1) }).collect();
    let base = BasicDecomposition::new(m + n, copies).expect("pairs");
    let wedges = (0..m).flat_map(|x| (0..n / 2).map(move |t| (x, m + 2 * t))).collect();
    Ok(expanded(format!("K{m},{n}"), base, wedges))
}

/// Blow-up of `g` with even multiplicities: copies of each vertex are
/// paired, and every edge `{i, j}`, `i < j`, becomes wedges centred at the
/// copies of `i`.
pub fn blow_up(g: &Graph, k: &[usize]) -> Result<Example, FamilyError> {
    if k.iter().any(|&x| x == 0 || x % 2 == 1) {
        return Err(FamilyError::BadParams {
            family: "blow_up".into(),
            reason: "multiplicities must be positive and even".into(),
        });
    }
    let off = g.blow_up_offsets(k);
    let copies = (0..off[g.n()] / 2).map(|t| BasicCopy::A1 { pair: (2 * t, 2 * t + 1) }).collect();
    let base = BasicDecomposition::new(off[g.n()], copies).expect("pairs");
    let mut wedges = Vec::new();
    for &(i, j) in g.edges() {
        for x in off[i]..off[i + 1] {
            for y in (off[j]..off[j + 1]).step_by(2) {
                wedges.push((x, y));
            }
        }
    }
    let ex = expanded("blow-up", base, wedges);
    debug_assert_eq!(ex.graph, g.blow_up(k));
    Ok(ex)
}

/// Complete graphs: `K_m` for `m ≡ 0, 3 (mod 4)`, and `K_m` plus an
/// isolated vertex `m` for `m ≡ 1, 2 (mod 4)`.
pub fn complete(m: usize) -> Example {
    let pairs_from = |start: usize, count: usize| -> Vec<(usize, usize)> {
        (0..count).map(|t| (start + 2 * t, start + 2 * t + 1)).collect()
    };
    let a3_copies = |pairs: &[(usize, usize)]| -> Vec<BasicCopy> {
        pairs.chunks(2).map(|c| BasicCopy::A3 { first: c[0], second: c[1], sign: 1 }).collect()
    };
    // wedges between distinct vertex pairs, centred on the earlier pair
    let between = |pairs: &[(usize, usize)]| -> Vec<(usize, usize)> {
        let mut w = Vec::new();
        for (a, p) in pairs.iter().enumerate() {
            for q in &pairs[a + 1..] {
                w.push((p.0, q.0));
                w.push((p.1, q.0));
            }
        }
        w
    };
    let (n_total, copies, wedges, name) = match m % 4 {
        0 => {
            let pairs = pairs_from(0, m / 2);
            (m, a3_copies(&pairs), between(&pairs), format!("K{m}"))
        }
        3 => {
            let pairs = pairs_from(3, (m - 3) / 2);
            let mut copies = vec![BasicCopy::A2 { isolated: 0, edge: (1, 2), sign: 1 }];
            copies.extend(a3_copies(&pairs));
            let mut all = vec![(1, 2)];
            all.extend(&pairs);
            let mut wedges: Vec<(usize, usize)> = all.iter().map(|p| (0, p.0)).collect();
            wedges.extend(between(&all));
            (m, copies, wedges, format!("K{m}"))
        }
        1 => {
            let pairs = pairs_from(1, (m - 1) / 2);
            let mut copies = vec![BasicCopy::A1 { pair: (0, m) }];
            copies.extend(a3_copies(&pairs));
            let mut wedges: Vec<(usize, usize)> = pairs.iter().map(|p| (0, p.0)).collect();
            wedges.extend(between(&pairs));
            (m + 1, copies, wedges, format!("K{m}*"))
        }
        _ => {
            let pairs = pairs_from(2, (m - 2) / 2);
            let mut copies = vec![BasicCopy::A2 { isolated: m, edge: (0, 1), sign: 1 }];
            copies.extend(a3_copies(&pairs));
            let mut all = vec![(0, 1)];
            all.extend(&pairs);
            (m + 1, copies, between(&all), format!("K{m}*"))
        }
    };
    let base = BasicDecomposition::new(n_total, copies).expect("complete-graph base");
    expanded(name, base, wedges)
}

/// Nine-vertex expansion of `(1,1,1)` with the isolated A2 vertex last.
pub fn expansion9() -> Example {
    let base = BasicDecomposition::new(
        9,
        vec![
            BasicCopy::A1 { pair: (0, 1) },
            BasicCopy::A2 { isolated: 4, edge: (2, 3), sign: 1 },
            BasicCopy::A3 { first: (5, 6), second: (7, 8), sign: 1 },
        ],
    )
    .expect("partition");
    expanded("expansion9", base, vec![(1, 2), (4, 0), (4, 5), (6, 7)])
}

/// Two expansions of `(3,0,0)` sharing the wedge `(v1; v3, v4)`.
pub fn expansions300() -> [Example; 2] {
    let base = BasicDecomposition::canonical(3, 0, 0);
    [
        expanded("300-a", base.clone(), vec![(0, 2), (4, 2)]),
        expanded("300-b", base, vec![(0, 2), (1, 2)]),
    ]
}

/// Eight vertices, basic subgraph `(0,0,2)` whose edges form a perfect matching.
pub fn matching8() -> Example {
    let base = BasicDecomposition::new(
        8,
        vec![
            BasicCopy::A3 { first: (0, 1), second: (2, 3), sign: 1 },
            BasicCopy::A3 { first: (4, 7), second: (5, 6), sign: 1 },
        ],
    )
    .expect("partition");
    expanded("matching8", base, vec![(0, 2), (1, 2), (2, 5), (3, 5), (3, 4), (6, 4)])
}

/// The three two-tree forests with their explicit structures.
pub fn star_union(variant: usize) -> Result<Example, FamilyError> {
    let g = families::star_union(variant)?;
    let ex = match variant {
        // v1..v7 then w1..w5 = v8..v12
        1 => example(
            "trees-1",
            g,
            &[
                ("v1", "v8"), ("v2", "v3"), ("v4", "v5"), ("v6", "v7"), ("v9", "v10"),
                ("v11", "v12"), ("e1,2", "e1,3"), ("e2,4", "e2,5"), ("e3,6", "e3,7"),
                ("e8,9", "e8,10"), ("e9,11", "e9,12"),
            ],
        ),
        // v1..v5 then w1..w6 = v6..v11
        2 => example(
            "trees-2",
            g,
            &[
                ("v1", "e6,7"), ("v2", "v3"), ("v4", "v5"), ("v6", "v7"), ("v8", "v9"),
                ("v10", "v11"), ("e1,2", "e1,3"), ("e2,4", "e2,5"), ("e6,8", "e6,9"),
                ("e7,10", "e7,11"),
            ],
        ),
        // v1..v6 then w1..w6 = v7..v12
        _ => example(
            "trees-3",
            g,
            &[
                ("v1", "v2"), ("v3", "v4"), ("v5", "v6"), ("v7", "v8"), ("v9", "v10"),
                ("v11", "v12"), ("e1,2", "e7,8"), ("e1,3", "e1,4"), ("e2,5", "e2,6"),
                ("e7,9", "e7,10"), ("e8,11", "e8,12"),
            ],
        ),
    };
    Ok(ex)
}

/// Every fixed example, for corpus-wide checks.
pub fn all_examples() -> Vec<Example> {
    let mut v = vec![
        a1(), a2(), a3(), cycle3(), cycle4(), cycle4_wedges(), g1(), g2(), moser(), cubic8(),
        expansion9(), matching8(),
    ];
    v.extend(expansions300());
    v.push(comb(3).expect("n = 3"));
    v.push(comb(5).expect("n = 5"));
    v.push(girth_gadget(3).expect("n = 3"));
    v.push(girth_gadget(6).expect("n = 6"));
    v.push(complete_bipartite(2, 2).expect("even"));
    v.push(complete_bipartite(2, 4).expect("even"));
    v.push(blow_up(&families::complete(3), &[2, 2, 2]).expect("even"));
    for m in 1..=8 {
        v.push(complete(m));
    }
    for variant in 1..=3 {
        v.push(star_union(variant).expect("variant"));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{is_integrable, IntegrabilityMode};

    #[test]
    fn every_example_is_integrable_in_full() {
        for ex in all_examples() {
            let alg = ex.algebra();
            assert!(is_integrable(&alg, &ex.j, IntegrabilityMode::Full), "{}", ex.name);
        }
    }

    #[test]
    fn expansions_match_named_graphs() {
        assert_eq!(cubic8().graph, families::cubic8());
        assert_eq!(girth_gadget(6).unwrap().graph, families::girth_gadget(6).unwrap());
        assert_eq!(complete_bipartite(2, 4).unwrap().graph, families::complete_bipartite(2, 4));
        assert_eq!(complete(7).graph, families::complete(7));
        assert_eq!(complete(8).graph, families::complete(8));
        assert_eq!(complete(5).graph, families::complete(5).with_isolated(1));
        assert_eq!(complete(6).graph, families::complete(6).with_isolated(1));
    }
}
