//! The two-step nilpotent Lie algebra attached to a graph.
//!
//! Basis: vertices `0..n` first, then edges in canonical order, so edge `k`
//! has basis index `n + k`. For adjacent `i < j`, `[v_i, v_j] = e_ij`; every
//! other bracket of basis elements vanishes. Edges are central.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::graph::Graph;
use crate::linalg::{fmt_q, q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElement {
    Vertex(usize),
    Edge(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphLieAlgebra {
    graph: Graph,
}

impl GraphLieAlgebra {
    pub fn new(graph: Graph) -> Self {
        GraphLieAlgebra { graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn dim(&self) -> usize {
        self.graph.n() + self.graph.m()
    }

    pub fn n_vertices(&self) -> usize {
        self.graph.n()
    }

    pub fn is_vertex(&self, i: usize) -> bool {
        i < self.graph.n()
    }

    pub fn element(&self, i: usize) -> BasisElement {
        let n = self.graph.n();
        if i < n {
            BasisElement::Vertex(i)
        } else {
            let (a, b) = self.graph.edges()[i - n];
            BasisElement::Edge(a, b)
        }
    }

    pub fn index_of(&self, e: BasisElement) -> Option<usize> {
        match e {
            BasisElement::Vertex(v) => (v < self.graph.n()).then_some(v),
            BasisElement::Edge(a, b) => self.edge_basis(a, b),
        }
    }

    /// Basis index of edge `{a, b}`.
    pub fn edge_basis(&self, a: usize, b: usize) -> Option<usize> {
        self.graph.edge_index(a, b).map(|k| self.graph.n() + k)
    }

    /// Endpoints of an edge basis element.
    pub fn edge_endpoints(&self, i: usize) -> Option<(usize, usize)> {
        i.checked_sub(self.graph.n()).and_then(|k| self.graph.edges().get(k).copied())
    }

    /// `[b_i, b_j] = c * b_k` as `Some((k, c))`, or `None` when it vanishes.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Option<(usize, i64)> {
        let n = self.graph.n();
        if i >= n || j >= n {
            return None;
        }
        let k = self.graph.edge_index(i, j)?;
        Some((n + k, if i < j { 1 } else { -1 }))
    }

    pub fn is_central(&self, i: usize) -> bool {
        !self.is_vertex(i) || self.graph.is_isolated(i)
    }

    /// Basis of the centre: edges and isolated vertices.
    pub fn center_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.is_central(i)).collect()
    }

    /// Basis of the commutator ideal: the edges.
    pub fn commutator_basis(&self) -> Vec<usize> {
        (self.graph.n()..self.dim()).collect()
    }

    pub fn bracket(&self, x: &LieVector, y: &LieVector) -> Result<LieVector, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        let n = self.graph.n();
        let mut out = LieVector::zero(self.dim());
        for (&i, a) in x.coeffs.range(..n) {
            for (&j, b) in y.coeffs.range(..n) {
                if let Some((k, c)) = self.basis_bracket(i, j) {
                    out.add_term(k, &(a * b * q(c)));
                }
            }
        }
        Ok(out)
    }

    fn check(&self, x: &LieVector) -> Result<(), AlgebraError> {
        if x.dim != self.dim() {
            Err(AlgebraError::DimensionMismatch(x.dim, self.dim()))
        } else {
            Ok(())
        }
    }

    /// Human name with 1-based vertices: `v3`, `e1,4`.
    pub fn basis_name(&self, i: usize) -> String {
        match self.element(i) {
            BasisElement::Vertex(v) => format!("v{}", v + 1),
            BasisElement::Edge(a, b) => format!("e{},{}", a + 1, b + 1),
        }
    }

    /// Inverse of [`GraphLieAlgebra::basis_name`].
    pub fn parse_basis_name(&self, s: &str) -> Option<usize> {
        if let Some(rest) = s.strip_prefix('v') {
            let v: usize = rest.parse().ok()?;
            v.checked_sub(1).filter(|&v| v < self.graph.n())
        } else if let Some(rest) = s.strip_prefix('e') {
            let (a, b) = rest.split_once(',')?;
            let a: usize = a.trim().parse().ok()?;
            let b: usize = b.trim().parse().ok()?;
            if a == 0 || b == 0 || a >= b {
                return None;
            }
            self.edge_basis(a - 1, b - 1)
        } else {
            None
        }
    }
}

/// Sparse vector in a [`GraphLieAlgebra`]; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieVector {
    dim: usize,
    coeffs: BTreeMap<usize, Q>,
}

impl LieVector {
    pub fn zero(dim: usize) -> Self {
        LieVector { dim, coeffs: BTreeMap::new() }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index out of range");
        let mut v = Self::zero(dim);
        v.coeffs.insert(i, Q::one());
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Q)>>(dim: usize, terms: I) -> Self {
        let mut v = Self::zero(dim);
        for (i, c) in terms {
            assert!(i < dim, "basis index out of range");
            v.add_term(i, &c);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize) -> Q {
        self.coeffs.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, i: usize, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(i).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn add(&self, other: &LieVector) -> LieVector {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            out.add_term(i, c);
        }
        out
    }

    pub fn sub(&self, other: &LieVector) -> LieVector {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, s: &Q) -> LieVector {
        LieVector::from_terms(self.dim, self.coeffs.iter().map(|(&i, c)| (i, c * s)))
    }

    pub fn to_dense(&self) -> Vec<Q> {
        (0..self.dim).map(|i| self.get(i)).collect()
    }

    pub fn display(&self, alg: &GraphLieAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|(&i, c)| format!("{}*{}", fmt_q(c), alg.basis_name(i)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
