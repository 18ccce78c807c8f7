//! Rational inner products compatible with an adapted structure: the
//! Hermitian condition, balanced and SKT tests, and the SKT family `G_n`.

use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::algebra::{GraphLieAlgebra, LieVector};
use crate::complex::{AdaptedMap, Orbit};
use crate::error::{MetricError, ParseError, ParseErrorKind};
use crate::forms::{ce_differential, AltForm};
use crate::graph::Graph;
use crate::linalg::{fmt_q, parse_q, q, signum, Matrix, Q};
use crate::structure::distinguished_edges;

/// A symmetric bilinear form given by its Gram matrix in the algebra basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    gram: Matrix,
}

impl Metric {
    pub fn new(alg: &GraphLieAlgebra, gram: Matrix) -> Result<Metric, MetricError> {
        if gram.rows() != alg.dim() || gram.cols() != alg.dim() {
            return Err(MetricError::Dimension { dim: alg.dim(), found: gram.rows() });
        }
        if let Some((i, j)) = gram.is_symmetric() {
            return Err(MetricError::NotSymmetric(i, j));
        }
        Ok(Metric { gram })
    }

    pub fn identity(alg: &GraphLieAlgebra) -> Metric {
        Metric { gram: Matrix::identity(alg.dim()) }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn inner(&self, x: &LieVector, y: &LieVector) -> Q {
        let mut s = Q::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                s += a * b * self.gram.get(i, j);
            }
        }
        s
    }

    /// Header `G d`, then `d` rows of `d` rationals.
    pub fn parse(alg: &GraphLieAlgebra, text: &str) -> Result<Metric, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| {
            ParseError::new(1, ParseErrorKind::MalformedHeader("empty Gram file".into()))
        })?;
        let d = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["G", d] => d.parse::<usize>().ok(),
            _ => None,
        }
        .ok_or_else(|| ParseError::new(hl, ParseErrorKind::MalformedHeader(header.into())))?;
        let mut rows = Vec::with_capacity(d);
        let mut last = hl;
        for (ln, line) in lines {
            last = ln;
            let row: Option<Vec<Q>> = line.split_whitespace().map(parse_q).collect();
            let row = row.ok_or_else(|| ParseError::new(ln, ParseErrorKind::MalformedLine(line.into())))?;
            if row.len() != d {
                return Err(ParseError::new(
                    ln,
                    ParseErrorKind::CountMismatch { expected: d, found: row.len() },
                ));
            }
            rows.push(row);
        }
        if rows.len() != d {
            return Err(ParseError::new(
                last,
                ParseErrorKind::CountMismatch { expected: d, found: rows.len() },
            ));
        }
        Metric::new(alg, Matrix::from_rows(rows))
            .map_err(|e| ParseError::new(hl, ParseErrorKind::Invalid(e.to_string())))
    }

    pub fn to_text(&self) -> String {
        let d = self.dim();
        let mut s = format!("G {d}\n");
        for i in 0..d {
            let row: Vec<String> = self.gram.row(i).iter().map(fmt_q).collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s
    }
}

/// Sylvester test over the leading principal minors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinitenessReport {
    pub positive_definite: bool,
    /// Leading principal minors, sizes `1..=d`.
    pub minors: Vec<Q>,
    /// Size of the first non-positive leading minor.
    pub first_failure: Option<usize>,
}

pub fn positive_definiteness(gram: &Matrix) -> DefinitenessReport {
    let minors = gram.leading_minors();
    let first_failure = minors.iter().position(|m| signum(m) <= 0).map(|i| i + 1);
    DefinitenessReport { positive_definite: first_failure.is_none(), minors, first_failure }
}

pub fn is_positive_definite(gram: &Matrix) -> bool {
    positive_definiteness(gram).positive_definite
}

/// `<Jx, Jy> = <x, y>` for all basis pairs.
pub fn is_hermitian(j: &AdaptedMap, metric: &Metric) -> bool {
    let g = metric.gram();
    let d = metric.dim();
    (0..d).all(|a| {
        (a..d).all(|b| {
            let (pa, sa) = j.image(a);
            let (pb, sb) = j.image(b);
            g.get(pa, pb) * q(sa * sb) == *g.get(a, b)
        })
    })
}

/// `Σ_{p,q} (G^{-1})_{pq} [b_p, J b_q]`, which vanishes exactly for balanced metrics.
pub fn balanced_defect(
    alg: &GraphLieAlgebra,
    j: &AdaptedMap,
    metric: &Metric,
) -> Result<LieVector, MetricError> {
    let inv = metric.gram().inverse().ok_or(MetricError::Singular)?;
    let n = alg.n_vertices();
    let mut out = LieVector::zero(alg.dim());
    for p in 0..n {
        for qq in 0..alg.dim() {
            let c = inv.get(p, qq);
            if c.is_zero() {
                continue;
            }
            let (jq, s) = j.image(qq);
            if let Some((k, b)) = alg.basis_bracket(p, jq) {
                out.add_term(k, &(c * q(s * b)));
            }
        }
    }
    Ok(out)
}

pub fn is_balanced(alg: &GraphLieAlgebra, j: &AdaptedMap, metric: &Metric) -> Result<bool, MetricError> {
    Ok(balanced_defect(alg, j, metric)?.is_zero())
}

/// Balanced criterion when vertices are orthogonal: no distinguished edges.
pub fn balanced_vertex_orthogonal(alg: &GraphLieAlgebra, j: &AdaptedMap) -> bool {
    distinguished_edges(alg, j).is_empty()
}

fn bracket_pairing(alg: &GraphLieAlgebra, g: &Matrix, x: (usize, i64), y: (usize, i64), z: usize) -> Q {
    match alg.basis_bracket(x.0, y.0) {
        Some((k, c)) => g.get(k, z) * q(c * x.1 * y.1),
        None => Q::zero(),
    }
}

/// `c(x,y,z) = -<[Jx,Jy],z> - <[Jy,Jz],x> - <[Jz,Jx],y>` as a 3-form.
pub fn bismut_torsion(alg: &GraphLieAlgebra, j: &AdaptedMap, metric: &Metric) -> AltForm {
    let d = alg.dim();
    let g = metric.gram();
    let mut c = AltForm::zero(d, 3).expect("degree 3");
    for a in 0..d {
        for b in a + 1..d {
            for e in b + 1..d {
                let (ja, jb, je) = (j.image(a), j.image(b), j.image(e));
                let v = bracket_pairing(alg, g, ja, jb, e)
                    + bracket_pairing(alg, g, jb, je, a)
                    + bracket_pairing(alg, g, je, ja, b);
                if !v.is_zero() {
                    c.add_value(&[a, b, e], &(-v)).expect("valid indices");
                }
            }
        }
    }
    c
}

/// `dc = 0` for the Bismut torsion form.
pub fn is_skt(alg: &GraphLieAlgebra, j: &AdaptedMap, metric: &Metric) -> bool {
    ce_differential(alg, &bismut_torsion(alg, j, metric))
        .expect("3-form differential")
        .is_zero()
}

/// Whether non-isolated vertices are orthogonal to the centre, in which
/// case `c(x, y, z) = -<[Jx, Jy], z>` for such vertices `x, y` and central `z`.
pub fn vertices_orthogonal_to_centre(alg: &GraphLieAlgebra, metric: &Metric) -> bool {
    let centre = alg.center_basis();
    (0..alg.n_vertices())
        .filter(|&v| !alg.is_central(v))
        .all(|v| centre.iter().all(|&z| metric.gram().get(v, z).is_zero()))
}

/// The Hermitian structure on `G_n` with central-block parameter `k`.
#[derive(Clone, Debug)]
pub struct SktFamily {
    pub n: usize,
    pub k: Q,
    pub alg: GraphLieAlgebra,
    pub j: AdaptedMap,
    pub metric: Metric,
    /// Basis indices of `(v0, t0, a_1..a_n, b_1..b_n)`.
    pub central_block: Vec<usize>,
}

/// Vertex labels of `G_n`: `v0, v1, v2` then `x_j, y_j, z_j, w_j` for each `j`.
pub fn skt_vertex(n_index: usize, role: char) -> usize {
    let base = 3 + 4 * (n_index - 1);
    match role {
        'x' => base,
        'y' => base + 1,
        'z' => base + 2,
        'w' => base + 3,
        _ => panic!("unknown role {role}"),
    }
}

pub fn skt_graph(n: usize) -> Graph {
    let mut edges = vec![(1, 2)];
    for jj in 1..=n {
        let (x, y, z, w) =
            (skt_vertex(jj, 'x'), skt_vertex(jj, 'y'), skt_vertex(jj, 'z'), skt_vertex(jj, 'w'));
        edges.extend([(x, y), (z, w), (1, x), (1, y), (2, z), (2, w)]);
    }
    Graph::new(3 + 4 * n, edges).expect("G_n is simple")
}

pub fn skt_family(n: usize, k: &Q) -> SktFamily {
    assert!(n >= 1, "G_n needs n >= 1");
    let alg = GraphLieAlgebra::new(skt_graph(n));
    let e = |a: usize, b: usize| alg.edge_basis(a, b).expect("edge of G_n");
    let t0 = e(1, 2);
    let mut orbits = vec![Orbit { a: 0, b: t0, sign: 1 }, Orbit { a: 1, b: 2, sign: 1 }];
    let mut a_idx = Vec::new();
    let mut b_idx = Vec::new();
    for jj in 1..=n {
        let (x, y, z, w) =
            (skt_vertex(jj, 'x'), skt_vertex(jj, 'y'), skt_vertex(jj, 'z'), skt_vertex(jj, 'w'));
        orbits.push(Orbit { a: x, b: y, sign: 1 });
        orbits.push(Orbit { a: z, b: w, sign: 1 });
        orbits.push(Orbit { a: e(x, y), b: e(z, w), sign: 1 });
        orbits.push(Orbit { a: e(1, x), b: e(1, y), sign: 1 });
        orbits.push(Orbit { a: e(2, z), b: e(2, w), sign: 1 });
        a_idx.push(e(x, y));
        b_idx.push(e(z, w));
    }
    let j = AdaptedMap::from_orbits(alg.dim(), &orbits).expect("G_n orbits");
    let mut gram = Matrix::identity(alg.dim());
    let mut set = |x: usize, y: usize, v: Q| {
        gram.set(x, y, v.clone());
        gram.set(y, x, v);
    };
    for &c in [0, t0].iter().chain(&a_idx).chain(&b_idx) {
        set(c, c, k.clone());
    }
    for &a in &a_idx {
        set(t0, a, Q::one());
        set(0, a, Q::one());
    }
    for &b in &b_idx {
        set(t0, b, Q::one());
        set(0, b, -Q::one());
    }
    let metric = Metric::new(&alg, gram).expect("symmetric by construction");
    let mut central_block = vec![0, t0];
    central_block.extend(a_idx);
    central_block.extend(b_idx);
    SktFamily { n, k: k.clone(), alg, j, metric, central_block }
}

impl SktFamily {
    /// The Gram matrix restricted to `(v0, t0, a_1..a_n, b_1..b_n)`.
    pub fn central_matrix(&self) -> Matrix {
        self.metric.gram().principal(&self.central_block)
    }

    /// `det A_j` for `j = 1..=2n`, where `A_j` is the leading
    /// `(j+2) x (j+2)` block of the central matrix.
    pub fn block_minors(&self) -> Vec<Q> {
        self.central_matrix().leading_minors().into_iter().skip(2).collect()
    }
}

/// Closed form of `det A_j` for the central matrix of `G_n`.
pub fn skt_minor_closed_form(n: usize, k: &Q, jj: usize) -> Q {
    let k2 = k * k;
    let pow = |e: usize| (0..e).fold(Q::one(), |acc, _| acc * k);
    if jj <= n {
        pow(jj) * (k2 - q(2 * jj as i64))
    } else {
        pow(jj - 2) * (&k2 - q(2 * n as i64)) * (k2 - q(2 * (jj - n) as i64))
    }
}
