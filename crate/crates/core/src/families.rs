//! Named graph families. Vertex numbering is fixed per family and
//! documented on each constructor; certificates in [`crate::catalog`]
//! rely on it.

use crate::error::FamilyError;
use crate::graph::Graph;
use crate::hermitian::skt_graph;
use crate::structure::BasicDecomposition;

fn bad(family: &str, reason: impl Into<String>) -> FamilyError {
    FamilyError::BadParams { family: family.into(), reason: reason.into() }
}

/// Builds a graph from 1-based edge pairs.
pub(crate) fn one_based(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().map(|&(a, b)| (a - 1, b - 1))).expect("fixed edge list")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("simple")
}

/// Parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::new(m + n, (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j)))).expect("simple")
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("cycle", "needs at least 3 vertices"));
    }
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("simple"))
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(bad("path", "needs at least 1 vertex"));
    }
    Ok(Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("simple"))
}

/// Wheel on `total` vertices: hub `0` joined to the cycle `1..total`.
pub fn wheel(total: usize) -> Result<Graph, FamilyError> {
    if total % 2 == 1 || total < 4 {
        return Err(bad("wheel", "total vertex count must be even and at least 4"));
    }
    let rim = total - 1;
    let spokes = (1..total).map(|i| (0, i));
    let ring = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
    Ok(Graph::new(total, spokes.chain(ring)).expect("simple"))
}

/// Comb `F_n`: `v_k = k-1`, `w_k = n+k-1`; edges `v_k v_{k+1}`,
/// `v_k w_k` and `w_{n-1} w_n`.
pub fn comb(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(bad("comb", "needs n >= 2"));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|k| (k - 1, k)).collect();
    edges.extend((0..n).map(|k| (k, n + k)));
    edges.push((2 * n - 2, 2 * n - 1));
    Ok(Graph::new(2 * n, edges).expect("simple"))
}

/// The Moser spindle, seven vertices and eleven edges.
pub fn moser() -> Graph {
    one_based(
        7,
        &[(1, 2), (1, 3), (2, 3), (2, 6), (3, 6), (1, 4), (1, 5), (4, 5), (4, 7), (5, 7), (6, 7)],
    )
}

/// A 3-regular graph on eight vertices built from four A1 pairs.
pub fn cubic8() -> Graph {
    one_based(
        8,
        &[
            (6, 1), (6, 2), (8, 3), (8, 4), (2, 3), (2, 4),
            (5, 3), (5, 4), (7, 5), (7, 6), (1, 7), (1, 8),
        ],
    )
}

/// Girth-`n` gadget: the cycle `0..n`, where vertex `i` also carries the
/// pendant vertex `n + (i + 1) % n`.
pub fn girth_gadget(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("girth_gadget", "needs n >= 3"));
    }
    let mut edges = Vec::new();
    for i in 0..n - 1 {
        edges.push((i, i + 1));
        edges.push((i, n + i + 1));
    }
    edges.push((n - 1, 0));
    edges.push((n - 1, n));
    Ok(Graph::new(2 * n, edges).expect("simple"))
}

/// `p1 A1 ∪ p2 A2 ∪ p3 A3` in canonical labelling.
pub fn basic(p1: usize, p2: usize, p3: usize) -> Graph {
    BasicDecomposition::canonical(p1, p2, p3).graph()
}

/// Two-tree forests: `1` both trees with one even vertex, `2` one such
/// tree plus an all-odd tree, `3` two all-odd trees. First tree first.
pub fn star_union(variant: usize) -> Result<Graph, FamilyError> {
    let one_even_7 = [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7)];
    let one_even_5 = [(1, 2), (1, 3), (2, 4), (2, 5)];
    let all_odd_6 = [(1, 3), (1, 4), (1, 2), (2, 5), (2, 6)];
    let (first, second) = match variant {
        1 => (one_based(7, &one_even_7), one_based(5, &one_even_5)),
        2 => (one_based(5, &one_even_5), one_based(6, &all_odd_6)),
        3 => (one_based(6, &all_odd_6), one_based(6, &all_odd_6)),
        _ => return Err(bad("star_union", "variant must be 1, 2 or 3")),
    };
    Ok(first.disjoint_union(&second))
}

/// Nine vertices whose odd vertices `0` and `8` are at distance at least
/// three from every other odd vertex.
pub fn odd_far() -> Graph {
    one_based(9, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6), (6, 7), (7, 8), (8, 9)])
}

fn param(family: &str, params: &[usize], k: usize) -> Result<usize, FamilyError> {
    params.get(k).copied().ok_or_else(|| bad(family, format!("missing parameter {}", k + 1)))
}

fn arity(family: &str, params: &[usize], k: usize) -> Result<(), FamilyError> {
    if params.len() != k {
        return Err(bad(family, format!("expected {k} parameters, got {}", params.len())));
    }
    Ok(())
}

/// Family names accepted by [`by_name`].
pub const FAMILY_NAMES: &[&str] = &[
    "complete", "complete_bipartite", "cycle", "path", "wheel", "comb", "moser",
    "girth_gadget", "basic", "cubic8", "star_union", "skt", "odd_far",
];

pub fn by_name(name: &str, params: &[usize]) -> Result<Graph, FamilyError> {
    let p = |k| param(name, params, k);
    match name {
        "complete" => arity(name, params, 1).and_then(|_| Ok(complete(p(0)?))),
        "complete_bipartite" => {
            arity(name, params, 2)?;
            Ok(complete_bipartite(p(0)?, p(1)?))
        }
        "cycle" => arity(name, params, 1).and_then(|_| cycle(p(0)?)),
        "path" => arity(name, params, 1).and_then(|_| path(p(0)?)),
        "wheel" => arity(name, params, 1).and_then(|_| wheel(p(0)?)),
        "comb" => arity(name, params, 1).and_then(|_| comb(p(0)?)),
        "moser" => arity(name, params, 0).map(|_| moser()),
        "girth_gadget" => arity(name, params, 1).and_then(|_| girth_gadget(p(0)?)),
        "basic" => {
            arity(name, params, 3)?;
            Ok(basic(p(0)?, p(1)?, p(2)?))
        }
        "cubic8" => arity(name, params, 0).map(|_| cubic8()),
        "star_union" => arity(name, params, 1).and_then(|_| star_union(p(0)?)),
        "skt" => {
            arity(name, params, 1)?;
            let n = p(0)?;
            if n == 0 {
                return Err(bad(name, "needs n >= 1"));
            }
            Ok(skt_graph(n))
        }
        "odd_far" => arity(name, params, 0).map(|_| odd_far()),
        _ => Err(FamilyError::Unknown(name.into())),
    }
}
