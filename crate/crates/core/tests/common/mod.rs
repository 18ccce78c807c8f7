//! Shared fixtures and invariant checkers for the integration tests.
#![allow(dead_code)]

use nilgraph::algebra::{GraphLieAlgebra, LieVector};
use nilgraph::forms::AltForm;
use nilgraph::catalog;
use nilgraph::complex::{is_abelian, is_integrable, nijenhuis, AdaptedMap, IntegrabilityMode};
use nilgraph::hermitian::{
    balanced_vertex_orthogonal, is_balanced, is_hermitian, is_positive_definite, is_skt,
    skt_family, skt_vertex, Metric,
};
use nilgraph::linalg::{q, qf, Matrix, Q};
use nilgraph::search::{brute_force_enumerate, decide_adapted, SearchOptions};
use nilgraph::structure::{
    ascending_series, basic_subgraph, complex_wedges, distinguished_edges, expand,
    nilpotency_step, series_step, three_step_by_graph, ExpansionPlan,
};
use nilgraph::Graph;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub struct Instance {
    pub name: String,
    pub alg: GraphLieAlgebra,
    pub j: AdaptedMap,
}

/// Every worked example plus the `G_n` structures for `n = 1, 2, 3`.
pub fn corpus() -> Vec<Instance> {
    let mut out: Vec<Instance> = catalog::all_examples()
        .into_iter()
        .map(|ex| Instance { alg: ex.algebra(), j: ex.j, name: ex.name })
        .collect();
    for n in 1..=3 {
        let fam = skt_family(n, &q(3));
        out.push(Instance { name: format!("G{n}-skt"), alg: fam.alg, j: fam.j });
    }
    out
}

/// Random graph on 2..=max_n vertices with edge probability about `p`.
pub fn random_graph(rng: &mut TestRng, max_n: usize, p: f64) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Structures found on `g`: the decision certificate and, for small
/// bases, a few oracle maps.
pub fn structures_on(g: &Graph) -> Vec<AdaptedMap> {
    let mut out = Vec::new();
    if let Some(j) = decide_adapted(g, &SearchOptions::default()).unwrap().certificate() {
        out.push(j.clone());
    }
    if g.n() + g.m() <= 12 {
        for j in brute_force_enumerate(g, 6).unwrap().maps {
            if !out.contains(&j) {
                out.push(j);
            }
        }
    }
    out
}

/// 100 seeded random graphs with at most 7 vertices, with every structure found.
pub fn random_instances(seed: u64) -> Vec<Instance> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for t in 0..100 {
        let g = random_graph(&mut r, 7, 0.4);
        let alg = GraphLieAlgebra::new(g.clone());
        for (k, j) in structures_on(&g).into_iter().enumerate() {
            out.push(Instance { name: format!("random{t}.{k} {}", g.to_compact()), alg: alg.clone(), j });
        }
    }
    out
}

pub fn random_q(rng: &mut TestRng) -> Q {
    qf(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

pub fn random_vector(rng: &mut TestRng, dim: usize) -> LieVector {
    let mut terms = Vec::new();
    for i in 0..dim {
        if rng.gen_bool(0.6) {
            terms.push((i, random_q(rng)));
        }
    }
    LieVector::from_terms(dim, terms)
}

/// A random adapted map (signed pairing) on `dim` basis elements.
pub fn random_map(rng: &mut TestRng, dim: usize) -> AdaptedMap {
    use rand::seq::SliceRandom;
    let mut idx: Vec<usize> = (0..dim).collect();
    idx.shuffle(rng);
    let mut partner = vec![0; dim];
    let mut sign = vec![0i8; dim];
    for c in idx.chunks(2) {
        let s = if rng.gen_bool(0.5) { 1 } else { -1 };
        partner[c[0]] = c[1];
        partner[c[1]] = c[0];
        sign[c[0]] = s;
        sign[c[1]] = -s;
    }
    AdaptedMap::new(partner, sign).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `N(Jx, Jy) = -N(x, y)`, `N(Jx, y) = -J N(x, y)` and
/// `N(x, Jy) = -J N(x, y)` on random rational vectors. Holds for any `J`
/// with `J² = -1`.
pub fn check_symmetries(alg: &GraphLieAlgebra, j: &AdaptedMap, rng: &mut TestRng, trials: usize) -> Result<(), String> {
    let dim = alg.dim();
    for _ in 0..trials {
        let x = random_vector(rng, dim);
        let y = random_vector(rng, dim);
        let (jx, jy) = (j.apply(&x), j.apply(&y));
        let n = nijenhuis(alg, j, &x, &y).unwrap();
        let jn = j.apply(&n);
        let minus = |v: &LieVector| v.scale(&q(-1));
        ensure(nijenhuis(alg, j, &jx, &jy).unwrap() == minus(&n), || "N(Jx,Jy) != -N(x,y)".into())?;
        ensure(nijenhuis(alg, j, &jx, &y).unwrap() == minus(&jn), || "N(Jx,y) != -J N(x,y)".into())?;
        ensure(nijenhuis(alg, j, &x, &jy).unwrap() == minus(&jn), || "N(x,Jy) != -J N(x,y)".into())?;
        ensure(j.apply(&jx) == minus(&x), || "J² != -1".into())?;
    }
    Ok(())
}

/// Vertex pairs decide integrability.
pub fn check_orbit_reduction(alg: &GraphLieAlgebra, j: &AdaptedMap) -> Result<(), String> {
    let fast = is_integrable(alg, j, IntegrabilityMode::Fast);
    let full = is_integrable(alg, j, IntegrabilityMode::Full);
    ensure(fast == full, || format!("fast={fast} full={full}"))
}

/// Structural consequences of integrability for an adapted `J`.
pub fn check_structure(alg: &GraphLieAlgebra, j: &AdaptedMap) -> Result<(), String> {
    let g = alg.graph();
    let n = g.n();
    ensure(is_integrable(alg, j, IntegrabilityMode::Full), || "not integrable".into())?;

    let dist = distinguished_edges(alg, j);
    let wedges = complex_wedges(alg, j).map_err(|e| e.to_string())?;
    let abelian = is_abelian(alg, j);
    ensure(abelian == (dist.len() == g.m()), || format!("abelian={abelian} but {} of {} edges distinguished", dist.len(), g.m()))?;
    ensure(abelian == wedges.is_empty(), || format!("abelian={abelian} with {} wedges", wedges.len()))?;

    for v in 0..n {
        let w = j.partner(v);
        let dv = g.degree(v);
        if w < n {
            ensure(dv % 2 == g.degree(w) % 2, || format!("v{} and v{} differ in parity", v + 1, w + 1))?;
            if g.distance(v, w).is_none_or(|d| d >= 3) {
                ensure(dv.is_multiple_of(2), || format!("far pair v{} v{} is odd", v + 1, w + 1))?;
            }
        } else {
            ensure(dv.is_multiple_of(2), || format!("odd v{} sent to an edge", v + 1))?;
        }
        if g.is_isolated(v) {
            let ok = if w < n { g.degree(w).is_multiple_of(2) } else { dist.contains(&alg.edge_endpoints(w).unwrap()) };
            ensure(ok, || format!("isolated v{} has a bad image", v + 1))?;
        }
        if alg.is_central(w) {
            let nb = g.neighbors(v);
            let invariant = nb.iter().all(|&x| {
                let px = j.partner(x);
                px < n && nb.contains(&px)
            });
            ensure(invariant && dv.is_multiple_of(2), || format!("neighbourhood of v{} not J-invariant", v + 1))?;
        }
    }

    let base = basic_subgraph(alg, j).map_err(|e| e.to_string())?;
    let (p1, p2, p3) = base.signature();
    ensure(p2 % 2 == n % 2, || format!("p2={p2} but n={n}"))?;
    ensure(2 * p1 + 3 * p2 + 4 * p3 == n, || "signature does not count vertices".into())?;
    if p1 == 0 && p2 == 0 {
        ensure(g.is_perfect_matching(&dist), || "distinguished edges are not a perfect matching".into())?;
    }
    let plan = ExpansionPlan::recover(alg, j).map_err(|e| e.to_string())?;
    let (g2, j2) = expand(&plan).map_err(|e| e.to_string())?;
    ensure(&g2 == g && &j2 == j, || "expansion does not reproduce the structure".into())?;

    check_steps(alg, j).map(|_| ())
}

/// The three step computations agree; the series reports 1 on abelian algebras.
pub fn check_steps(alg: &GraphLieAlgebra, j: &AdaptedMap) -> Result<u8, String> {
    let step = nilpotency_step(alg, j);
    ensure(step == 2 || step == 3, || format!("step {step}"))?;
    let series = series_step(alg, j)
        .ok_or_else(|| format!("series stalls: {:?}", ascending_series(alg, j)))?;
    ensure(series.max(2) == step as usize, || format!("series step {series} vs {step}"))?;
    let graph3 = three_step_by_graph(alg, j).map_err(|e| e.to_string())?;
    ensure(graph3 == (step == 3), || format!("graph test says 3-step={graph3}, step {step}"))?;
    Ok(step)
}

/// Random positive definite Hermitian metric whose edge block is diagonal
/// and in which non-isolated vertices are orthogonal to the centre.
pub fn random_hermitian_metric(alg: &GraphLieAlgebra, j: &AdaptedMap, rng: &mut TestRng) -> Metric {
    let dim = alg.dim();
    let n = alg.n_vertices();
    let orbits = j.orbits();
    loop {
        let mut g = Matrix::zeros(dim, dim);
        for o in &orbits {
            let d = q(rng.gen_range(2..=5));
            g.set(o.a, o.a, d.clone());
            g.set(o.b, o.b, d);
        }
        // entries that must stay zero: edge-edge and non-central vertex against centre
        let fixed = |x: usize, y: usize| {
            (x >= n && y >= n) || alg.is_central(x) != alg.is_central(y)
        };
        for (k, o1) in orbits.iter().enumerate() {
            for o2 in &orbits[k + 1..] {
                if !rng.gen_bool(0.3) {
                    continue;
                }
                // <a,c> = <Ja,Jc> = t and <a,Jc> = -<Ja,c> = s, signs carried by J
                let (a, ja, sa) = (o1.a, o1.b, o1.sign as i64);
                let (c, jc, sc) = (o2.a, o2.b, o2.sign as i64);
                let mut t = qf(rng.gen_range(-1..=1), 2);
                let mut s = qf(rng.gen_range(-1..=1), 2);
                if fixed(a, c) || fixed(ja, jc) {
                    t = Q::zero();
                }
                if fixed(a, jc) || fixed(ja, c) {
                    s = Q::zero();
                }
                let mut put = |x: usize, y: usize, v: Q| {
                    g.set(x, y, v.clone());
                    g.set(y, x, v);
                };
                // J a = sa·ja, J c = sc·jc
                put(a, c, t.clone());
                put(ja, jc, &t * q(sa * sc));
                put(a, jc, &s * q(sc));
                put(ja, c, -&s * q(sa));
            }
        }
        if is_positive_definite(&g) {
            let m = Metric::new(alg, g).unwrap();
            assert!(is_hermitian(j, &m));
            return m;
        }
    }
}

fn max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0)
}

/// Identity-metric balance equals the vertex criterion; metrics with an
/// orthogonal edge basis are never SKT on a graph with a vertex of degree ≥ 2.
pub fn check_hermitian(alg: &GraphLieAlgebra, j: &AdaptedMap, rng: &mut TestRng, metrics: usize) -> Result<(), String> {
    let id = Metric::identity(alg);
    ensure(is_hermitian(j, &id), || "identity not Hermitian".into())?;
    let bal = is_balanced(alg, j, &id).unwrap();
    ensure(bal == balanced_vertex_orthogonal(alg, j), || format!("balanced={bal} disagrees"))?;
    ensure(bal == distinguished_edges(alg, j).is_empty(), || "balanced vs distinguished".into())?;
    if max_degree(alg.graph()) >= 2 {
        for _ in 0..metrics {
            let m = random_hermitian_metric(alg, j, rng);
            ensure(!is_skt(alg, j, &m), || "SKT metric with orthogonal edges on a non-basic graph".into())?;
        }
    }
    Ok(())
}

/// The torsion of `G_n` written out term by term in the dual basis.
pub fn expected_torsion(n: usize, k: &Q) -> AltForm {
    let f = skt_family(n, k);
    let alg = &f.alg;
    let e = |a: usize, b: usize| alg.edge_basis(a, b).unwrap();
    let (v0, v1, v2) = (0, 1, 2);
    let t0 = e(v1, v2);
    let mut c = AltForm::zero(alg.dim(), 3).unwrap();
    let mut add = |idx: [usize; 3], val: Q| c.add_value(&idx, &val).unwrap();
    let mk = -k.clone();
    add([v1, v2, t0], mk.clone());
    for jj in 1..=n {
        let (x, y, z, w) = (skt_vertex(jj, 'x'), skt_vertex(jj, 'y'), skt_vertex(jj, 'z'), skt_vertex(jj, 'w'));
        let (a, b) = (e(x, y), e(z, w));
        let (ff, g, h, kk) = (e(v1, x), e(v1, y), e(v2, z), e(v2, w));
        add([v1, v2, a], q(-1));
        add([v1, v2, b], q(-1));
        add([x, y, a], mk.clone());
        add([x, y, t0], q(-1));
        add([x, y, v0], q(-1));
        add([z, w, b], mk.clone());
        add([z, w, t0], q(-1));
        add([z, w, v0], q(1));
        add([v1, z, kk], q(-1));
        add([v1, w, h], q(1));
        add([v2, x, g], q(1));
        add([v2, y, ff], q(-1));
    }
    c
}

fn norm2(m: &Metric, x: &LieVector) -> Q {
    m.inner(x, x)
}

/// `2<[v,Jv],[w,Jw]> = |[v,w]|² + |[v,Jw]|² + |[Jv,w]|² + |[Jv,Jw]|²` for
/// vertices `w ≠ v, Jv`; holds for SKT metrics.
pub fn skt_bracket_identity_holds(alg: &GraphLieAlgebra, j: &AdaptedMap, m: &Metric) -> Result<(), String> {
    let n = alg.n_vertices();
    let b = |i| LieVector::basis(alg.dim(), i);
    let br = |x: &LieVector, y: &LieVector| alg.bracket(x, y).unwrap();
    for v in 0..n {
        for w in 0..n {
            if w == v || w == j.partner(v) {
                continue;
            }
            let (bv, bw) = (b(v), b(w));
            let (jv, jw) = (j.apply(&bv), j.apply(&bw));
            let lhs = q(2) * m.inner(&br(&bv, &jv), &br(&bw, &jw));
            let rhs = norm2(m, &br(&bv, &bw))
                + norm2(m, &br(&bv, &jw))
                + norm2(m, &br(&jv, &bw))
                + norm2(m, &br(&jv, &jw));
            if lhs != rhs {
                return Err(format!("v{} v{}: {lhs} != {rhs}", v + 1, w + 1));
            }
        }
    }
    Ok(())
}

/// `(n, k)` with `n` in 1..=3 and `k` in {3/2, 2, 3, 7/2} such that `k² > 2n`.
pub fn skt_parameters() -> Vec<(usize, Q)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for k in [qf(3, 2), q(2), q(3), qf(7, 2)] {
            if &k * &k > q(2 * n as i64) {
                out.push((n, k));
            }
        }
    }
    out
}

/// Distinguished edges `a` with `J a = ±b` an edge have no edge between
/// an endpoint of `a` and an endpoint of `b`.
pub fn check_unjoined_distinguished(alg: &GraphLieAlgebra, j: &AdaptedMap) -> Result<(), String> {
    let g = alg.graph();
    for (a, b) in distinguished_edges(alg, j) {
        let jb = j.partner(alg.edge_basis(a, b).unwrap());
        let Some((c, d)) = alg.edge_endpoints(jb) else { continue };
        for x in [a, b] {
            for y in [c, d] {
                ensure(!g.has_edge(x, y), || format!("v{} v{} joined", x + 1, y + 1))?;
            }
        }
    }
    Ok(())
}
