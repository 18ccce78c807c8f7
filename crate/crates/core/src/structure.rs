//! Combinatorial shape of an integrable adapted structure: distinguished
//! edges, complex wedges, the basic subgraph, expansions and nilpotency.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::algebra::GraphLieAlgebra;
use crate::complex::{is_integrable, AdaptedMap, IntegrabilityMode, Orbit};
use crate::error::StructureError;
use crate::graph::Graph;
use crate::linalg::{q, Matrix, Q};

/// Edges `{v, w}` with `J v = ±w`, in canonical order.
pub fn distinguished_edges(alg: &GraphLieAlgebra, j: &AdaptedMap) -> Vec<(usize, usize)> {
    alg.graph()
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| j.partner(a) == b)
        .collect()
}

/// A complex wedge `(centre; v, w)`: edges `{centre, v}` and `{centre, w}`
/// with `J v = +w` and `[centre, v] + J[centre, w] = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wedge {
    pub centre: usize,
    pub v: usize,
    pub w: usize,
}

/// Every non-distinguished edge sits in exactly one wedge when `J` is
/// integrable. Wedges are sorted by `(v, w, centre)`.
pub fn complex_wedges(alg: &GraphLieAlgebra, j: &AdaptedMap) -> Result<Vec<Wedge>, StructureError> {
    let n = alg.n_vertices();
    let mut found = BTreeSet::new();
    for (k, &(x, y)) in alg.graph().edges().iter().enumerate() {
        if j.partner(x) == y {
            continue;
        }
        let wedge = wedge_of_edge(alg, j, n + k, x, y).ok_or(StructureError::NoWedge((x, y)))?;
        found.insert((wedge.v, wedge.w, wedge.centre));
    }
    Ok(found.into_iter().map(|(v, w, centre)| Wedge { centre, v, w }).collect())
}

fn wedge_of_edge(alg: &GraphLieAlgebra, j: &AdaptedMap, e: usize, x: usize, y: usize) -> Option<Wedge> {
    let (p, _) = j.image(e);
    let (px, py) = alg.edge_endpoints(p)?;
    let (centre, a, c) = if px == x || py == x {
        (x, y, if px == x { py } else { px })
    } else if px == y || py == y {
        (y, x, if px == y { py } else { px })
    } else {
        return None;
    };
    if j.partner(a) != c {
        return None;
    }
    let (v, w) = if j.sign(a) > 0 { (a, c) } else { (c, a) };
    // [centre, v] + J[centre, w] = 0
    let (ev, cv) = alg.basis_bracket(centre, v)?;
    let (ew, cw) = alg.basis_bracket(centre, w)?;
    let (jew, sj) = j.image(ew);
    (jew == ev && cv + cw * sj == 0).then_some(Wedge { centre, v, w })
}

/// One connected piece of a basic graph. Vertex pairs are oriented:
/// `(x, y)` means `J v_x = +v_y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasicCopy {
    /// Two isolated vertices.
    A1 { pair: (usize, usize) },
    /// An edge on `edge` plus an isolated vertex; `J v_isolated = sign * e_edge`.
    A2 { isolated: usize, edge: (usize, usize), sign: i8 },
    /// Two disjoint edges; `J e_first = sign * e_second`.
    A3 { first: (usize, usize), second: (usize, usize), sign: i8 },
}

impl BasicCopy {
    fn vertices(&self) -> Vec<usize> {
        match *self {
            BasicCopy::A1 { pair } => vec![pair.0, pair.1],
            BasicCopy::A2 { isolated, edge, .. } => vec![isolated, edge.0, edge.1],
            BasicCopy::A3 { first, second, .. } => vec![first.0, first.1, second.0, second.1],
        }
    }

    fn kind(&self) -> u8 {
        match self {
            BasicCopy::A1 { .. } => 1,
            BasicCopy::A2 { .. } => 2,
            BasicCopy::A3 { .. } => 3,
        }
    }
}

/// A basic graph on `n` labelled vertices as a disjoint union of copies.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasicDecomposition {
    n: usize,
    copies: Vec<BasicCopy>,
}

impl BasicDecomposition {
    /// Checks that the copies partition `0..n`.
    pub fn new(n: usize, copies: Vec<BasicCopy>) -> Result<Self, StructureError> {
        let mut seen = vec![false; n];
        for c in &copies {
            for v in c.vertices() {
                if v >= n {
                    return Err(StructureError::BadDecomposition(format!("vertex {v} out of range")));
                }
                if seen[v] {
                    return Err(StructureError::BadDecomposition(format!("vertex {v} used twice")));
                }
                seen[v] = true;
            }
            if let BasicCopy::A2 { sign, .. } | BasicCopy::A3 { sign, .. } = *c {
                if sign.abs() != 1 {
                    return Err(StructureError::BadDecomposition("sign must be ±1".into()));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(StructureError::BadDecomposition(format!("vertex {v} not covered")));
        }
        Ok(BasicDecomposition { n, copies })
    }

    /// Canonical labelling: A1 pairs `(2t, 2t+1)`, then A2 triples
    /// `(isolated, x, y)` with edge `{x, y}`, then A3 quadruples with
    /// edges on the first and last two vertices.
    pub fn canonical(p1: usize, p2: usize, p3: usize) -> Self {
        let mut copies = Vec::new();
        let mut next = 0;
        for _ in 0..p1 {
            copies.push(BasicCopy::A1 { pair: (next, next + 1) });
            next += 2;
        }
        for _ in 0..p2 {
            copies.push(BasicCopy::A2 { isolated: next, edge: (next + 1, next + 2), sign: 1 });
            next += 3;
        }
        for _ in 0..p3 {
            copies.push(BasicCopy::A3 {
                first: (next, next + 1),
                second: (next + 2, next + 3),
                sign: 1,
            });
            next += 4;
        }
        BasicDecomposition { n: next, copies }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn copies(&self) -> &[BasicCopy] {
        &self.copies
    }

    /// `(p1, p2, p3)`: number of A1, A2 and A3 copies.
    pub fn signature(&self) -> (usize, usize, usize) {
        let count = |k| self.copies.iter().filter(|c| c.kind() == k).count();
        (count(1), count(2), count(3))
    }

    /// The distinguished edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for c in &self.copies {
            match *c {
                BasicCopy::A1 { .. } => {}
                BasicCopy::A2 { edge, .. } => out.push(edge),
                BasicCopy::A3 { first, second, .. } => {
                    out.push(first);
                    out.push(second);
                }
            }
        }
        out
    }

    pub fn graph(&self) -> Graph {
        Graph::new(self.n, self.edges()).expect("copies are vertex-disjoint")
    }

    /// `(partner, sign)` for each vertex paired with a vertex.
    pub fn vertex_pairing(&self) -> Vec<Option<(usize, i8)>> {
        let mut out = vec![None; self.n];
        let mut pair = |(x, y): (usize, usize)| {
            out[x] = Some((y, 1));
            out[y] = Some((x, -1));
        };
        for c in &self.copies {
            match *c {
                BasicCopy::A1 { pair: p } => pair(p),
                BasicCopy::A2 { edge, .. } => pair(edge),
                BasicCopy::A3 { first, second, .. } => {
                    pair(first);
                    pair(second);
                }
            }
        }
        out
    }

    /// Orbits of `J` on the algebra of any graph containing these edges.
    pub fn orbits_in(&self, alg: &GraphLieAlgebra) -> Vec<Orbit> {
        let e = |(x, y): (usize, usize)| alg.edge_basis(x, y).expect("distinguished edge present");
        let mut out = Vec::new();
        let pair = |(x, y): (usize, usize), out: &mut Vec<Orbit>| {
            out.push(Orbit { a: x, b: y, sign: 1 });
        };
        for c in &self.copies {
            match *c {
                BasicCopy::A1 { pair: p } => pair(p, &mut out),
                BasicCopy::A2 { isolated, edge, sign } => {
                    pair(edge, &mut out);
                    out.push(Orbit { a: isolated, b: e(edge), sign });
                }
                BasicCopy::A3 { first, second, sign } => {
                    pair(first, &mut out);
                    pair(second, &mut out);
                    out.push(Orbit { a: e(first), b: e(second), sign });
                }
            }
        }
        out
    }

    /// The basic graph with its structure.
    pub fn structure(&self) -> (GraphLieAlgebra, AdaptedMap) {
        let alg = GraphLieAlgebra::new(self.graph());
        let j = AdaptedMap::from_orbits(alg.dim(), &self.orbits_in(&alg))
            .expect("copies give a complete pairing");
        (alg, j)
    }
}

/// Reads off the basic subgraph of an integrable `J`.
pub fn basic_subgraph(alg: &GraphLieAlgebra, j: &AdaptedMap) -> Result<BasicDecomposition, StructureError> {
    if !is_integrable(alg, j, IntegrabilityMode::Fast) {
        return Err(StructureError::NotIntegrable);
    }
    let g = alg.graph();
    let n = g.n();
    let orient = |x: usize, y: usize| if j.sign(x) > 0 { (x, y) } else { (y, x) };
    let mut a1 = Vec::new();
    let mut a2 = Vec::new();
    let mut a3 = Vec::new();
    for v in 0..n {
        let p = j.partner(v);
        if p < n {
            if v < p && !g.has_edge(v, p) {
                a1.push(BasicCopy::A1 { pair: orient(v, p) });
            }
            continue;
        }
        let (x, y) = alg.edge_endpoints(p).expect("edge basis");
        if j.partner(x) != y {
            return Err(StructureError::BadOrbit(v));
        }
        a2.push(BasicCopy::A2 { isolated: v, edge: orient(x, y), sign: j.sign(v) });
    }
    for (k, &(x, y)) in g.edges().iter().enumerate() {
        let e = n + k;
        if j.partner(x) != y {
            continue;
        }
        let p = j.partner(e);
        if p < n {
            continue;
        }
        let (a, b) = alg.edge_endpoints(p).expect("edge basis");
        if j.partner(a) != b {
            return Err(StructureError::BadOrbit(e));
        }
        if e < p {
            a3.push(BasicCopy::A3 { first: orient(x, y), second: orient(a, b), sign: j.sign(e) });
        }
    }
    let mut copies = a1;
    copies.extend(a2);
    copies.extend(a3);
    BasicDecomposition::new(n, copies)
}

/// A basic graph plus wedges `(centre, v)`, each adding `{centre, v}` and
/// `{centre, J v}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionPlan {
    pub base: BasicDecomposition,
    pub wedges: Vec<(usize, usize)>,
}

impl ExpansionPlan {
    /// The plan that rebuilds an integrable structure from its own basic
    /// subgraph and wedges.
    pub fn recover(alg: &GraphLieAlgebra, j: &AdaptedMap) -> Result<Self, StructureError> {
        let base = basic_subgraph(alg, j)?;
        let wedges = complex_wedges(alg, j)?.into_iter().map(|w| (w.centre, w.v)).collect();
        Ok(ExpansionPlan { base, wedges })
    }
}

/// Sign in `J e_{ik} = ± e_{jk}` for a wedge centred at `k` over the
/// pair `J v_i = +v_j`: negative exactly when `k` lies strictly between.
pub fn wedge_sign(i: usize, j: usize, k: usize) -> i8 {
    if i.min(j) < k && k < i.max(j) {
        -1
    } else {
        1
    }
}

/// Applies the wedges of `plan` to its basic graph.
pub fn expand(plan: &ExpansionPlan) -> Result<(Graph, AdaptedMap), StructureError> {
    let base = &plan.base;
    let n = base.n();
    let pairing = base.vertex_pairing();
    let mut edges: BTreeSet<(usize, usize)> = base.edges().into_iter().collect();
    let mut wedge_orbits = Vec::new();
    for &(u, v) in &plan.wedges {
        if u >= n || v >= n {
            return Err(StructureError::BadDecomposition(format!("wedge ({u}, {v}) out of range")));
        }
        let (w, s) = pairing[v].ok_or(StructureError::EndpointNotPaired(v))?;
        if u == v || u == w {
            return Err(StructureError::CentreIsEndpoint { centre: u });
        }
        let (i, jj) = if s > 0 { (v, w) } else { (w, v) };
        for x in [i, jj] {
            let e = (u.min(x), u.max(x));
            if !edges.insert(e) {
                return Err(StructureError::EdgeExists(e));
            }
        }
        wedge_orbits.push((u, i, jj));
    }
    let g = Graph::new(n, edges).expect("validated edges");
    let alg = GraphLieAlgebra::new(g.clone());
    let mut orbits = base.orbits_in(&alg);
    for (k, i, jj) in wedge_orbits {
        let a = alg.edge_basis(i, k).expect("added edge");
        let b = alg.edge_basis(jj, k).expect("added edge");
        orbits.push(Orbit { a, b, sign: wedge_sign(i, jj, k) });
    }
    let j = AdaptedMap::from_orbits(alg.dim(), &orbits)
        .map_err(|e| StructureError::BadDecomposition(e.to_string()))?;
    Ok((g, j))
}

/// 2 if `J` maps every edge into the centre, 3 otherwise.
pub fn nilpotency_step(alg: &GraphLieAlgebra, j: &AdaptedMap) -> u8 {
    let n = alg.n_vertices();
    let all_central = (n..alg.dim()).all(|e| alg.is_central(j.partner(e)));
    if all_central {
        2
    } else {
        3
    }
}

/// Dimensions of the ascending series `a_0 = 0`,
/// `a_k = {x : [x, g] ⊆ a_{k-1} and [Jx, g] ⊆ a_{k-1}}`, until it stops
/// growing.
pub fn ascending_series(alg: &GraphLieAlgebra, j: &AdaptedMap) -> Vec<usize> {
    let dim = alg.dim();
    let mut dims = vec![0];
    let mut current: Vec<Vec<Q>> = Vec::new();
    loop {
        let ann: Vec<Vec<Q>> = if current.is_empty() {
            (0..dim)
                .map(|k| (0..dim).map(|i| if i == k { q(1) } else { q(0) }).collect())
                .collect()
        } else {
            Matrix::from_rows(current.clone()).nullspace()
        };
        let mut rows = Vec::new();
        for phi in &ann {
            for t in 0..dim {
                let mut r = vec![q(0); dim];
                let mut rj = vec![q(0); dim];
                for l in 0..dim {
                    if let Some((k, c)) = alg.basis_bracket(l, t) {
                        r[l] += &phi[k] * q(c);
                    }
                    let (pl, sl) = j.image(l);
                    if let Some((k, c)) = alg.basis_bracket(pl, t) {
                        rj[l] += &phi[k] * q(c * sl);
                    }
                }
                for row in [r, rj] {
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let next = if rows.is_empty() {
            (0..dim)
                .map(|k| (0..dim).map(|i| if i == k { q(1) } else { q(0) }).collect())
                .collect()
        } else {
            Matrix::from_rows(rows).nullspace()
        };
        let d = next.len();
        if d == *dims.last().unwrap() {
            return dims;
        }
        dims.push(d);
        if d == dim {
            return dims;
        }
        current = next;
    }
}

/// Step of the algebra read off the ascending series, or `None` if the
/// series stalls below the full algebra.
pub fn series_step(alg: &GraphLieAlgebra, j: &AdaptedMap) -> Option<usize> {
    let dims = ascending_series(alg, j);
    (*dims.last().unwrap() == alg.dim()).then(|| dims.len() - 1)
}

/// Graph criterion for step 3: some A2 isolated vertex of the basic
/// subgraph has an edge in the full graph.
pub fn three_step_by_graph(alg: &GraphLieAlgebra, j: &AdaptedMap) -> Result<bool, StructureError> {
    let b = basic_subgraph(alg, j)?;
    Ok(b.copies().iter().any(|c| match *c {
        BasicCopy::A2 { isolated, .. } => !alg.graph().is_isolated(isolated),
        _ => false,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_basic_labelling() {
        let b = BasicDecomposition::canonical(1, 1, 1);
        assert_eq!(b.n(), 9);
        assert_eq!(b.edges(), vec![(3, 4), (5, 6), (7, 8)]);
        assert_eq!(b.signature(), (1, 1, 1));
    }

    #[test]
    fn decomposition_must_partition() {
        let bad = BasicDecomposition::new(3, vec![BasicCopy::A1 { pair: (0, 1) }]);
        assert!(bad.is_err());
        let twice = BasicDecomposition::new(
            4,
            vec![BasicCopy::A1 { pair: (0, 1) }, BasicCopy::A1 { pair: (1, 2) }],
        );
        assert!(twice.is_err());
    }

    #[test]
    fn wedge_sign_rule() {
        assert_eq!(wedge_sign(1, 3, 0), 1);
        assert_eq!(wedge_sign(1, 3, 2), -1);
        assert_eq!(wedge_sign(3, 1, 2), -1);
        assert_eq!(wedge_sign(1, 3, 5), 1);
    }

    #[test]
    fn basic_structures_are_integrable_and_two_step() {
        for (p1, p2, p3) in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 1, 1)] {
            let (alg, j) = BasicDecomposition::canonical(p1, p2, p3).structure();
            assert!(is_integrable(&alg, &j, IntegrabilityMode::Full));
            assert_eq!(nilpotency_step(&alg, &j), 2);
            assert_eq!(basic_subgraph(&alg, &j).unwrap().signature(), (p1, p2, p3));
        }
    }

    #[test]
    fn expansion_rejects_bad_wedges() {
        let base = BasicDecomposition::canonical(1, 1, 0);
        let plan = |w| ExpansionPlan { base: base.clone(), wedges: vec![w] };
        assert_eq!(expand(&plan((0, 1))), Err(StructureError::CentreIsEndpoint { centre: 0 }));
        assert_eq!(expand(&plan((0, 2))), Err(StructureError::EndpointNotPaired(2)));
        let twice = ExpansionPlan { base: base.clone(), wedges: vec![(2, 0), (2, 1)] };
        assert_eq!(expand(&twice), Err(StructureError::EdgeExists((0, 2))));
    }
}
