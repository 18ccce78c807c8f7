//! Alternating multilinear forms on a [`GraphLieAlgebra`] and the
//! Chevalley–Eilenberg differential.
//!
//! A form is stored by its values on strictly increasing tuples of basis
//! indices, so the key `[i, j, k]` with coefficient `c` is `c b^i ∧ b^j ∧ b^k`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::Zero;

use crate::algebra::GraphLieAlgebra;
use crate::error::AlgebraError;
use crate::linalg::{fmt_q, q, Q};

pub const MAX_DEGREE: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltForm {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Q>,
}

/// Sorts `idx` in place and returns the permutation sign, or `None` on a repeat.
fn sort_with_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl AltForm {
    pub fn zero(dim: usize, degree: usize) -> Result<Self, AlgebraError> {
        if degree > MAX_DEGREE {
            return Err(AlgebraError::DegreeTooLarge(degree, MAX_DEGREE));
        }
        Ok(AltForm { dim, degree, terms: BTreeMap::new() })
    }

    /// `b^{i1} ∧ … ∧ b^{ik}` for indices in any order.
    pub fn monomial(dim: usize, idx: &[usize]) -> Result<Self, AlgebraError> {
        let mut f = Self::zero(dim, idx.len())?;
        f.add_value(idx, &q(1))?;
        Ok(f)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Q)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value on basis vectors `(b_{idx[0]}, …)`, in any order.
    pub fn eval_basis(&self, idx: &[usize]) -> Q {
        debug_assert_eq!(idx.len(), self.degree);
        let mut key = idx.to_vec();
        match sort_with_sign(&mut key) {
            None => Q::zero(),
            Some(s) => self.terms.get(&key).map_or_else(Q::zero, |c| c * q(s)),
        }
    }

    /// Adds `c` to the value on `(b_{idx[0]}, …)`, keeping the form alternating.
    pub fn add_value(&mut self, idx: &[usize], c: &Q) -> Result<(), AlgebraError> {
        if idx.len() != self.degree {
            return Err(AlgebraError::DimensionMismatch(idx.len(), self.degree));
        }
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.dim) {
            return Err(AlgebraError::IndexOutOfRange { index: bad, dim: self.dim });
        }
        let mut key = idx.to_vec();
        if let Some(s) = sort_with_sign(&mut key) {
            let e = self.terms.entry(key.clone()).or_insert_with(Q::zero);
            *e += c * q(s);
            if e.is_zero() {
                self.terms.remove(&key);
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &AltForm) -> Result<AltForm, AlgebraError> {
        if self.dim != other.dim || self.degree != other.degree {
            return Err(AlgebraError::DimensionMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_value(k, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Q) -> AltForm {
        let mut out = self.clone();
        out.terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), c * s))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        out
    }

    pub fn wedge(&self, other: &AltForm) -> Result<AltForm, AlgebraError> {
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = AltForm::zero(self.dim, self.degree + other.degree)?;
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let idx: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                out.add_value(&idx, &(x * y))?;
            }
        }
        Ok(out)
    }

    /// One line per term, `coeff ^ i1 i2 … ik` with 0-based basis indices.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (k, c) in &self.terms {
            let idx: Vec<String> = k.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "{} ^ {}", fmt_q(c), idx.join(" "));
        }
        s
    }
}

/// `(df)(x_0, …, x_k) = Σ_{p<q} (-1)^{p+q} f([x_p, x_q], x_0, …, x̂_p, …, x̂_q, …, x_k)`.
///
/// Only tuples that can be non-zero are visited: each arises from a term of
/// `f` by replacing one edge with its two endpoints.
pub fn ce_differential(alg: &GraphLieAlgebra, f: &AltForm) -> Result<AltForm, AlgebraError> {
    if f.dim != alg.dim() {
        return Err(AlgebraError::DimensionMismatch(f.dim, alg.dim()));
    }
    let mut out = AltForm::zero(f.dim, f.degree + 1)?;
    let mut candidates: BTreeSet<Vec<usize>> = BTreeSet::new();
    for key in f.terms.keys() {
        for (pos, &e) in key.iter().enumerate() {
            let Some((a, b)) = alg.edge_endpoints(e) else { continue };
            if key.contains(&a) || key.contains(&b) {
                continue;
            }
            let mut t: Vec<usize> =
                key.iter().enumerate().filter(|&(p, _)| p != pos).map(|(_, &x)| x).collect();
            t.push(a);
            t.push(b);
            t.sort_unstable();
            candidates.insert(t);
        }
    }
    let k1 = f.degree + 1;
    for t in candidates {
        let mut total = Q::zero();
        for p in 0..k1 {
            for r in p + 1..k1 {
                let Some((e, c)) = alg.basis_bracket(t[p], t[r]) else { continue };
                let mut args = Vec::with_capacity(f.degree);
                args.push(e);
                args.extend(t.iter().enumerate().filter(|&(i, _)| i != p && i != r).map(|(_, &x)| x));
                let v = f.eval_basis(&args);
                if !v.is_zero() {
                    let sign = if (p + r) % 2 == 0 { c } else { -c };
                    total += v * q(sign);
                }
            }
        }
        if !total.is_zero() {
            out.terms.insert(t, total);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn edge_alg() -> GraphLieAlgebra {
        GraphLieAlgebra::new(Graph::new(2, [(0, 1)]).unwrap())
    }

    #[test]
    fn alternation() {
        let f = AltForm::monomial(5, &[3, 1]).unwrap();
        assert_eq!(f.eval_basis(&[1, 3]), q(-1));
        assert_eq!(f.eval_basis(&[3, 1]), q(1));
        assert_eq!(f.eval_basis(&[1, 1]), q(0));
    }

    #[test]
    fn wedge_is_graded_commutative() {
        let a = AltForm::monomial(6, &[0]).unwrap();
        let b = AltForm::monomial(6, &[2, 4]).unwrap();
        let c = AltForm::monomial(6, &[1]).unwrap();
        assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
        assert_eq!(a.wedge(&c).unwrap(), c.wedge(&a).unwrap().scale(&q(-1)));
        assert!(a.wedge(&a).unwrap().is_zero());
    }

    #[test]
    fn degree_cap() {
        let a = AltForm::monomial(8, &[0, 1, 2]).unwrap();
        let b = AltForm::monomial(8, &[3, 4]).unwrap();
        assert!(matches!(a.wedge(&b), Err(AlgebraError::DegreeTooLarge(5, 4))));
    }

    #[test]
    fn differential_of_edge_dual() {
        let alg = edge_alg();
        let de = ce_differential(&alg, &AltForm::monomial(3, &[2]).unwrap()).unwrap();
        assert_eq!(de, AltForm::monomial(3, &[0, 1]).unwrap().scale(&q(-1)));
        let dv = ce_differential(&alg, &AltForm::monomial(3, &[0]).unwrap()).unwrap();
        assert!(dv.is_zero());
    }

    #[test]
    fn dump_format() {
        let f = AltForm::monomial(5, &[4, 0]).unwrap().scale(&crate::linalg::qf(3, 2));
        assert_eq!(f.dump(), "-3/2 ^ 0 4\n");
    }
}
