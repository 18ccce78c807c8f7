//! Adapted almost complex structures and their Nijenhuis tensor.
//!
//! An [`AdaptedMap`] sends every basis element to plus or minus another
//! basis element: `J b_i = sign[i] * b_{partner[i]}`, with `partner` a
//! fixed-point-free involution and `sign[i] * sign[partner[i]] = -1`, so
//! `J² = -1`. The representation is unique, so two maps are equal exactly
//! when they act identically.

use std::fmt::Write as _;

use crate::algebra::{GraphLieAlgebra, LieVector};
use crate::error::{AlgebraError, MapError, ParseError, ParseErrorKind};
use crate::linalg::q;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdaptedMap {
    partner: Vec<usize>,
    sign: Vec<i8>,
}

/// One orbit `{a, b}` with `J b_a = sign * b_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbit {
    pub a: usize,
    pub b: usize,
    pub sign: i8,
}

impl AdaptedMap {
    pub fn new(partner: Vec<usize>, sign: Vec<i8>) -> Result<Self, MapError> {
        let dim = partner.len();
        if dim % 2 == 1 {
            return Err(MapError::OddDimension(dim));
        }
        assert_eq!(sign.len(), dim, "sign table length");
        for i in 0..dim {
            let p = partner[i];
            if p == i {
                return Err(MapError::FixedPoint(i));
            }
            if p >= dim || partner[p] != i {
                return Err(MapError::NotInvolution(i));
            }
            if !matches!(sign[i], 1 | -1) || sign[i] + sign[p] != 0 {
                return Err(MapError::SignMismatch(i));
            }
        }
        Ok(AdaptedMap { partner, sign })
    }

    /// Builds a map from orbits `J b_a = sign * b_b` covering every index once.
    pub fn from_orbits(dim: usize, orbits: &[Orbit]) -> Result<Self, MapError> {
        if dim % 2 == 1 {
            return Err(MapError::OddDimension(dim));
        }
        let mut partner = vec![usize::MAX; dim];
        let mut sign = vec![0i8; dim];
        for o in orbits {
            for x in [o.a, o.b] {
                if x >= dim {
                    return Err(MapError::UnknownToken(x.to_string()));
                }
                if partner[x] != usize::MAX {
                    return Err(MapError::Duplicate(x));
                }
            }
            if o.a == o.b {
                return Err(MapError::FixedPoint(o.a));
            }
            partner[o.a] = o.b;
            partner[o.b] = o.a;
            sign[o.a] = o.sign;
            sign[o.b] = -o.sign;
        }
        if let Some(i) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(MapError::Missing(i));
        }
        Self::new(partner, sign)
    }

    pub fn dim(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    pub fn sign(&self, i: usize) -> i8 {
        self.sign[i]
    }

    /// `J b_i` as `(index, sign)`.
    pub fn image(&self, i: usize) -> (usize, i64) {
        (self.partner[i], self.sign[i] as i64)
    }

    /// Orbits listed by their lower index, ascending.
    pub fn orbits(&self) -> Vec<Orbit> {
        (0..self.dim())
            .filter(|&i| i < self.partner[i])
            .map(|i| Orbit { a: i, b: self.partner[i], sign: self.sign[i] })
            .collect()
    }

    pub fn apply(&self, x: &LieVector) -> LieVector {
        assert_eq!(x.dim(), self.dim(), "dimension mismatch");
        LieVector::from_terms(
            x.dim(),
            x.terms().map(|(i, c)| (self.partner[i], c * q(self.sign[i] as i64))),
        )
    }

    /// Conjugates by the algebra isomorphism induced by `perm[old] = new` on vertices.
    pub fn transport(
        &self,
        from: &GraphLieAlgebra,
        to: &GraphLieAlgebra,
        perm: &[usize],
    ) -> AdaptedMap {
        let phi = basis_isomorphism(from, to, perm);
        let dim = self.dim();
        let mut partner = vec![0; dim];
        let mut sign = vec![0i8; dim];
        for i in 0..dim {
            let (pi, si) = phi[i];
            let (ji, sj) = self.image(i);
            let (pj, sp) = phi[ji];
            // J'(s_i b'_{pi}) = s_j s_p b'_{pj}
            partner[pi] = pj;
            sign[pi] = (si * sj * sp) as i8;
        }
        AdaptedMap::new(partner, sign).expect("conjugate of a valid map")
    }

    pub fn parse_certificate(alg: &GraphLieAlgebra, text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| {
            ParseError::new(1, ParseErrorKind::MalformedHeader("empty certificate".into()))
        })?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let bad_header = || ParseError::new(hl, ParseErrorKind::MalformedHeader(header.into()));
        let (n, m) = match parts.as_slice() {
            ["J", n, m] => (
                n.parse::<usize>().map_err(|_| bad_header())?,
                m.parse::<usize>().map_err(|_| bad_header())?,
            ),
            _ => return Err(bad_header()),
        };
        let g = alg.graph();
        if (n, m) != (g.n(), g.m()) {
            return Err(ParseError::new(
                hl,
                ParseErrorKind::Invalid(
                    MapError::GraphMismatch { n: g.n(), m: g.m(), found_n: n, found_m: m }
                        .to_string(),
                ),
            ));
        }
        let dim = alg.dim();
        let mut seen = vec![false; dim];
        let mut orbits = Vec::new();
        let mut last = hl;
        for (ln, line) in lines {
            last = ln;
            let bad = |msg: String| ParseError::new(ln, ParseErrorKind::MalformedLine(msg));
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| bad(line.into()))?;
            let lhs = lhs.trim();
            let rhs = rhs.trim();
            let (s, rhs) = match rhs.strip_prefix('-') {
                Some(r) => (-1i8, r.trim()),
                None => (1i8, rhs.strip_prefix('+').unwrap_or(rhs).trim()),
            };
            let token = |t: &str| {
                alg.parse_basis_name(t).ok_or_else(|| {
                    ParseError::new(
                        ln,
                        ParseErrorKind::Invalid(MapError::UnknownToken(t.into()).to_string()),
                    )
                })
            };
            let a = token(lhs)?;
            let b = token(rhs)?;
            for x in [a, b] {
                if seen[x] {
                    return Err(ParseError::new(
                        ln,
                        ParseErrorKind::Invalid(MapError::Duplicate(x).to_string()),
                    ));
                }
                seen[x] = true;
            }
            if a == b {
                return Err(ParseError::new(
                    ln,
                    ParseErrorKind::Invalid(MapError::FixedPoint(a).to_string()),
                ));
            }
            orbits.push(Orbit { a, b, sign: s });
        }
        if let Some(i) = seen.iter().position(|&s| !s) {
            return Err(ParseError::new(
                last,
                ParseErrorKind::Invalid(
                    format!("{} ({})", MapError::Missing(i), alg.basis_name(i)),
                ),
            ));
        }
        AdaptedMap::from_orbits(dim, &orbits)
            .map_err(|e| ParseError::new(last, ParseErrorKind::Invalid(e.to_string())))
    }

    /// Canonical certificate: header `J n m`, then `A -> B` or `A -> -B`
    /// per orbit with `A` the lower basis index, ascending.
    pub fn to_certificate(&self, alg: &GraphLieAlgebra) -> String {
        let g = alg.graph();
        let mut s = format!("J {} {}\n", g.n(), g.m());
        for o in self.orbits() {
            let neg = if o.sign < 0 { "-" } else { "" };
            let _ = writeln!(s, "{} -> {}{}", alg.basis_name(o.a), neg, alg.basis_name(o.b));
        }
        s
    }
}

/// Images `(index, sign)` of the basis under the isomorphism induced by a
/// vertex relabelling `perm[old] = new`.
pub fn basis_isomorphism(
    from: &GraphLieAlgebra,
    to: &GraphLieAlgebra,
    perm: &[usize],
) -> Vec<(usize, i64)> {
    (0..from.dim())
        .map(|i| match from.edge_endpoints(i) {
            None => (perm[i], 1),
            Some((a, b)) => {
                let (x, y) = (perm[a], perm[b]);
                let idx = to.edge_basis(x, y).expect("relabelled edge exists");
                (idx, if x < y { 1 } else { -1 })
            }
        })
        .collect()
}

/// Small integer vector used by the fast Nijenhuis path.
pub(crate) type IntTerms = Vec<(usize, i64)>;

fn push_term(out: &mut IntTerms, k: usize, c: i64) {
    if let Some(t) = out.iter_mut().find(|t| t.0 == k) {
        t.1 += c;
    } else {
        out.push((k, c));
    }
}

/// `N_J(b_a, b_b)` with integer coefficients.
pub(crate) fn nijenhuis_basis_int(alg: &GraphLieAlgebra, j: &AdaptedMap, a: usize, b: usize) -> IntTerms {
    let mut out: IntTerms = Vec::with_capacity(4);
    if let Some((k, c)) = alg.basis_bracket(a, b) {
        push_term(&mut out, k, c);
    }
    let (pa, sa) = j.image(a);
    let (pb, sb) = j.image(b);
    if let Some((k, c)) = alg.basis_bracket(pa, b) {
        let (jk, sk) = j.image(k);
        push_term(&mut out, jk, sa * c * sk);
    }
    if let Some((k, c)) = alg.basis_bracket(a, pb) {
        let (jk, sk) = j.image(k);
        push_term(&mut out, jk, sb * c * sk);
    }
    if let Some((k, c)) = alg.basis_bracket(pa, pb) {
        push_term(&mut out, k, -sa * sb * c);
    }
    out.retain(|t| t.1 != 0);
    out
}

/// `N_J(x, y) = [x, y] + J([Jx, y] + [x, Jy]) - [Jx, Jy]`.
pub fn nijenhuis(
    alg: &GraphLieAlgebra,
    j: &AdaptedMap,
    x: &LieVector,
    y: &LieVector,
) -> Result<LieVector, AlgebraError> {
    if j.dim() != alg.dim() {
        return Err(AlgebraError::DimensionMismatch(j.dim(), alg.dim()));
    }
    let jx = j.apply(x);
    let jy = j.apply(y);
    let inner = alg.bracket(&jx, y)?.add(&alg.bracket(x, &jy)?);
    Ok(alg.bracket(x, y)?.add(&j.apply(&inner)).sub(&alg.bracket(&jx, &jy)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegrabilityMode {
    /// Vertex–vertex pairs only; sufficient by the Nijenhuis symmetries.
    Fast,
    /// Every pair of basis elements.
    Full,
}

/// First basis pair `(a, b)`, `a < b`, with `N_J(b_a, b_b) ≠ 0`.
pub fn integrability_defect(
    alg: &GraphLieAlgebra,
    j: &AdaptedMap,
    mode: IntegrabilityMode,
) -> Option<(usize, usize)> {
    assert_eq!(j.dim(), alg.dim(), "dimension mismatch");
    let top = match mode {
        IntegrabilityMode::Fast => alg.n_vertices(),
        IntegrabilityMode::Full => alg.dim(),
    };
    for a in 0..top {
        for b in a + 1..top {
            if !nijenhuis_basis_int(alg, j, a, b).is_empty() {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_integrable(alg: &GraphLieAlgebra, j: &AdaptedMap, mode: IntegrabilityMode) -> bool {
    integrability_defect(alg, j, mode).is_none()
}

/// `[Jx, Jy] = [x, y]` for all `x, y`.
pub fn is_abelian(alg: &GraphLieAlgebra, j: &AdaptedMap) -> bool {
    let dim = alg.dim();
    for a in 0..dim {
        for b in a + 1..dim {
            let lhs = alg.basis_bracket(a, b);
            let (pa, sa) = j.image(a);
            let (pb, sb) = j.image(b);
            let rhs = alg.basis_bracket(pa, pb).map(|(k, c)| (k, c * sa * sb));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn a2() -> (GraphLieAlgebra, AdaptedMap) {
        let alg = GraphLieAlgebra::new(Graph::new(3, [(0, 1)]).unwrap());
        let j = AdaptedMap::from_orbits(
            4,
            &[Orbit { a: 0, b: 1, sign: 1 }, Orbit { a: 2, b: 3, sign: 1 }],
        )
        .unwrap();
        (alg, j)
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(AdaptedMap::new(vec![0, 1], vec![1, -1]), Err(MapError::FixedPoint(0)));
        assert_eq!(AdaptedMap::new(vec![1, 0], vec![1, 1]), Err(MapError::SignMismatch(0)));
        assert_eq!(AdaptedMap::new(vec![1, 0, 2], vec![1, -1, 1]), Err(MapError::OddDimension(3)));
        assert!(matches!(
            AdaptedMap::from_orbits(4, &[Orbit { a: 0, b: 1, sign: 1 }]),
            Err(MapError::Missing(2))
        ));
    }

    #[test]
    fn squares_to_minus_one() {
        let (_, j) = a2();
        for i in 0..4 {
            let x = LieVector::basis(4, i);
            assert_eq!(j.apply(&j.apply(&x)), x.scale(&q(-1)));
        }
    }

    #[test]
    fn a2_is_integrable_and_abelian() {
        let (alg, j) = a2();
        assert!(is_integrable(&alg, &j, IntegrabilityMode::Full));
        assert!(is_abelian(&alg, &j));
    }

    #[test]
    fn certificate_round_trip() {
        let (alg, j) = a2();
        let text = j.to_certificate(&alg);
        assert_eq!(text, "J 3 1\nv1 -> v2\nv3 -> e1,2\n");
        assert_eq!(AdaptedMap::parse_certificate(&alg, &text).unwrap(), j);
        let flipped = "J 3 1\ne1,2 -> -v3\nv2 -> -v1\n";
        assert_eq!(AdaptedMap::parse_certificate(&alg, flipped).unwrap(), j);
    }

    #[test]
    fn certificate_errors() {
        let (alg, _) = a2();
        let dup = "J 3 1\nv1 -> v2\nv2 -> v3\n";
        assert_eq!(AdaptedMap::parse_certificate(&alg, dup).unwrap_err().line, 3);
        let missing = "J 3 1\nv1 -> v2\n";
        assert!(AdaptedMap::parse_certificate(&alg, missing).is_err());
        let wrong = "J 4 1\nv1 -> v2\n";
        assert_eq!(AdaptedMap::parse_certificate(&alg, wrong).unwrap_err().line, 1);
        let token = "J 3 1\nv1 -> x2\nv3 -> e1,2\n";
        assert_eq!(AdaptedMap::parse_certificate(&alg, token).unwrap_err().line, 2);
    }

    #[test]
    fn fast_and_rational_nijenhuis_agree() {
        let alg = GraphLieAlgebra::new(Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
        // deliberately non-integrable pairing
        let j = AdaptedMap::from_orbits(
            6,
            &[
                Orbit { a: 0, b: 1, sign: 1 },
                Orbit { a: 2, b: 3, sign: 1 },
                Orbit { a: 4, b: 5, sign: -1 },
            ],
        )
        .unwrap();
        for a in 0..6 {
            for b in 0..6 {
                let fast = nijenhuis_basis_int(&alg, &j, a, b);
                let slow = nijenhuis(&alg, &j, &LieVector::basis(6, a), &LieVector::basis(6, b))
                    .unwrap();
                let fast = LieVector::from_terms(6, fast.into_iter().map(|(k, c)| (k, q(c))));
                assert_eq!(fast, slow, "pair {a} {b}");
            }
        }
    }
}
