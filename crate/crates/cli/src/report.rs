//! Text reports for each subcommand. Every report opens with the same
//! header; basis elements are printed with 1-based names.

use std::fmt::Write as _;
use std::path::Path;

use nilgraph::algebra::GraphLieAlgebra;
use nilgraph::catalog;
use nilgraph::complex::{integrability_defect, is_abelian, AdaptedMap, IntegrabilityMode};
use nilgraph::families;
use nilgraph::forms::AltForm;
use nilgraph::hermitian::{
    balanced_defect, bismut_torsion, is_hermitian, is_skt, positive_definiteness, skt_family,
    vertices_orthogonal_to_centre, Metric,
};
use nilgraph::linalg::{fmt_q, q};
use nilgraph::plan::{format_basic, parse_basic, parse_wedges};
use nilgraph::search::{
    brute_force_enumerate, decide_adapted, enumerate_admitting, obstruction_scan, CensusTally,
    Decision, SearchOptions,
};
use nilgraph::structure::{
    basic_subgraph, complex_wedges, distinguished_edges, expand as expand_plan, nilpotency_step,
    BasicDecomposition, ExpansionPlan,
};
use nilgraph::Graph;

use crate::{Failure, Verdict};

pub fn header(echo: &str) -> String {
    format!("# vertices numbered from 1\n# nilgraph {echo}\n")
}

fn vname(v: usize) -> String {
    format!("v{}", v + 1)
}

fn edge_name((a, b): (usize, usize)) -> String {
    format!("e{},{}", a + 1, b + 1)
}

fn list_or_none(items: Vec<String>) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.join(" ")
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn analyze(echo: &str, g: &Graph) -> String {
    let mut s = header(echo);
    let _ = writeln!(s, "vertices: {}", g.n());
    let _ = writeln!(s, "edges: {}", g.m());
    let degrees: Vec<String> = (0..g.n()).map(|v| format!("{}={}", vname(v), g.degree(v))).collect();
    let _ = writeln!(s, "degrees: {}", list_or_none(degrees));
    let _ = writeln!(s, "odd vertices: {}", list_or_none(g.odd_vertices().into_iter().map(vname).collect()));
    let comps = g.components();
    let _ = writeln!(s, "components: {}", comps.len());
    for c in &comps {
        let names: Vec<String> = c.iter().copied().map(vname).collect();
        let edges = g.edges().iter().filter(|(a, _)| c.binary_search(a).is_ok()).count();
        let kind = if edges + 1 == c.len() { "tree" } else { "cyclic" };
        let _ = writeln!(s, "  {kind}: {}", names.join(" "));
    }
    let girth = g.girth().map_or("infinite".to_string(), |x| x.to_string());
    let _ = writeln!(s, "girth: {girth}");
    let _ = writeln!(s, "forest: {}", yes(g.is_forest()));
    let _ = writeln!(s, "dimension: {}", g.n() + g.m());
    let obs = obstruction_scan(g);
    if obs.is_empty() {
        let _ = writeln!(s, "obstructions: none");
    } else {
        let _ = writeln!(s, "obstructions:");
        for o in obs {
            let _ = writeln!(s, "  {o}");
        }
    }
    s
}

pub fn find(echo: &str, g: &Graph, opts: &SearchOptions) -> Result<(String, Option<AdaptedMap>), Failure> {
    let d = decide_adapted(g, opts)?;
    let mut s = header(echo);
    match &d {
        Decision::Admits { certificate, route, stats } => {
            let _ = writeln!(s, "verdict: admits");
            let _ = writeln!(s, "route: {}", route.tag());
            let _ = writeln!(s, "stats: {stats}");
            s.push_str(&certificate.to_certificate(&GraphLieAlgebra::new(g.clone())));
        }
        Decision::Refuted { reason, witness, stats } => {
            let _ = writeln!(s, "verdict: refuted");
            let _ = writeln!(s, "reason: {}", reason.tag());
            let _ = writeln!(s, "witness: {witness}");
            let _ = writeln!(s, "stats: {stats}");
        }
    }
    Ok((s, d.certificate().cloned()))
}

pub fn find_oracle(echo: &str, g: &Graph, all: bool) -> Result<(String, Option<AdaptedMap>), Failure> {
    let r = brute_force_enumerate(g, if all { usize::MAX } else { 1 })?;
    let alg = GraphLieAlgebra::new(g.clone());
    let mut s = header(echo);
    let _ = writeln!(s, "verdict: {}", if r.maps.is_empty() { "refuted" } else { "admits" });
    let _ = writeln!(s, "route: oracle");
    let _ = writeln!(s, "nodes: {}", r.nodes);
    if all {
        let _ = writeln!(s, "maps: {} (each listed with J b1 positive)", r.maps.len());
        for (k, j) in r.maps.iter().enumerate() {
            let _ = writeln!(s, "# map {}", k + 1);
            s.push_str(&j.to_certificate(&alg));
        }
    } else if let Some(j) = r.maps.first() {
        s.push_str(&j.to_certificate(&alg));
    }
    Ok((s, r.maps.into_iter().next()))
}

pub fn verify(echo: &str, alg: &GraphLieAlgebra, j: &AdaptedMap, full: bool) -> (String, Verdict) {
    let mode = if full { IntegrabilityMode::Full } else { IntegrabilityMode::Fast };
    let mut s = header(echo);
    let _ = writeln!(s, "mode: {}", if full { "full" } else { "fast" });
    if let Some((a, b)) = integrability_defect(alg, j, mode) {
        let _ = writeln!(s, "integrable: false");
        let _ = writeln!(s, "defect: N({}, {}) != 0", alg.basis_name(a), alg.basis_name(b));
        return (s, Verdict::No);
    }
    let _ = writeln!(s, "integrable: true");
    let _ = writeln!(s, "abelian: {}", yes(is_abelian(alg, j)));
    let dist = distinguished_edges(alg, j);
    let _ = writeln!(s, "distinguished: {}", list_or_none(dist.into_iter().map(edge_name).collect()));
    let wedges = complex_wedges(alg, j).expect("integrable");
    let names: Vec<String> = wedges
        .iter()
        .map(|w| format!("({}; {}, {})", vname(w.centre), vname(w.v), vname(w.w)))
        .collect();
    let _ = writeln!(s, "wedges: {}", list_or_none(names));
    let _ = writeln!(s, "step: {}", nilpotency_step(alg, j));
    (s, Verdict::Yes)
}

pub fn basic(echo: &str, alg: &GraphLieAlgebra, j: &AdaptedMap) -> (String, Verdict) {
    let mut s = header(echo);
    match basic_subgraph(alg, j) {
        Ok(b) => {
            let (p1, p2, p3) = b.signature();
            let _ = writeln!(s, "signature: ({p1},{p2},{p3})");
            s.push_str(&format_basic(&b));
            (s, Verdict::Yes)
        }
        Err(e) => {
            let _ = writeln!(s, "no basic subgraph: {e}");
            (s, Verdict::No)
        }
    }
}

pub fn expand(
    spec_path: &Path,
    spec: &str,
    plan_path: &Path,
    plan: &str,
) -> Result<(Graph, AdaptedMap), Failure> {
    let base = parse_basic(spec).map_err(|e| Failure::Input(format!("{}: {e}", spec_path.display())))?;
    let wedges =
        parse_wedges(plan, base.n()).map_err(|e| Failure::Input(format!("{}: {e}", plan_path.display())))?;
    expand_plan(&ExpansionPlan { base, wedges }).map_err(|e| Failure::Input(format!("{}: {e}", plan_path.display())))
}

/// The family graph and, where a construction is known, a certificate.
pub fn family(name: &str, params: &[usize]) -> Result<(Graph, Option<AdaptedMap>), Failure> {
    let g = families::by_name(name, params).map_err(|e| Failure::Input(e.to_string()))?;
    let p = |k: usize| params[k];
    let example = match name {
        "complete_bipartite" => catalog::complete_bipartite(p(0), p(1)).ok(),
        "comb" => catalog::comb(p(0)).ok(),
        "girth_gadget" => catalog::girth_gadget(p(0)).ok(),
        "moser" => Some(catalog::moser()),
        "cubic8" => Some(catalog::cubic8()),
        "star_union" => catalog::star_union(p(0)).ok(),
        "complete" => Some(catalog::complete(p(0))),
        "cycle" if p(0) == 3 => Some(catalog::cycle3()),
        "cycle" if p(0) == 4 => Some(catalog::cycle4()),
        _ => None,
    };
    let j = match name {
        "basic" => Some(BasicDecomposition::canonical(p(0), p(1), p(2)).structure().1),
        "skt" => Some(skt_family(p(0), &q(3)).j),
        _ => example.filter(|ex| ex.graph == g).map(|ex| ex.j),
    };
    Ok((g, j))
}

pub fn hermitian(echo: &str, j: &AdaptedMap, m: &Metric) -> (String, Verdict) {
    let h = is_hermitian(j, m);
    let mut s = header(echo);
    let _ = writeln!(s, "hermitian: {}", yes(h));
    (s, if h { Verdict::Yes } else { Verdict::No })
}

pub fn pd(echo: &str, m: &Metric) -> (String, Verdict) {
    let r = positive_definiteness(m.gram());
    let mut s = header(echo);
    let _ = writeln!(s, "positive definite: {}", yes(r.positive_definite));
    let minors: Vec<String> = r.minors.iter().map(fmt_q).collect();
    let _ = writeln!(s, "leading minors: {}", minors.join(" "));
    if let Some(k) = r.first_failure {
        let _ = writeln!(s, "first non-positive minor: size {k}");
    }
    (s, if r.positive_definite { Verdict::Yes } else { Verdict::No })
}

pub fn balanced(echo: &str, alg: &GraphLieAlgebra, j: &AdaptedMap, m: &Metric) -> Result<(String, Verdict), Failure> {
    let defect = balanced_defect(alg, j, m).map_err(|e| Failure::Input(e.to_string()))?;
    let mut s = header(echo);
    let _ = writeln!(s, "hermitian: {}", yes(is_hermitian(j, m)));
    let _ = writeln!(s, "balanced: {}", yes(defect.is_zero()));
    if !defect.is_zero() {
        let _ = writeln!(s, "defect: {}", defect.display(alg));
    }
    Ok((s, if defect.is_zero() { Verdict::Yes } else { Verdict::No }))
}

fn named_dump(alg: &GraphLieAlgebra, f: &AltForm) -> String {
    let mut s = String::new();
    for (idx, c) in f.terms() {
        let names: Vec<String> = idx.iter().map(|&i| alg.basis_name(i)).collect();
        let _ = writeln!(s, "  {} {}", fmt_q(c), names.join(" ^ "));
    }
    s
}

pub fn skt(echo: &str, alg: &GraphLieAlgebra, j: &AdaptedMap, m: &Metric) -> (String, Verdict) {
    let ok = is_skt(alg, j, m);
    let mut s = header(echo);
    let _ = writeln!(s, "hermitian: {}", yes(is_hermitian(j, m)));
    let _ = writeln!(s, "vertices orthogonal to centre: {}", yes(vertices_orthogonal_to_centre(alg, m)));
    let _ = writeln!(s, "skt: {}", yes(ok));
    let _ = writeln!(s, "torsion:");
    s.push_str(&named_dump(alg, &bismut_torsion(alg, j, m)));
    (s, if ok { Verdict::Yes } else { Verdict::No })
}

pub fn census(echo: &str, max_vertices: usize, opts: &SearchOptions, dedup: bool) -> Result<String, Failure> {
    if max_vertices > 7 {
        return Err(Failure::Input("--max-vertices above 7 is not supported".into()));
    }
    let rows = enumerate_admitting(max_vertices, opts, dedup)?;
    let mut tally = CensusTally::default();
    let mut s = header(echo);
    for r in &rows {
        tally.add(r);
        let _ = writeln!(s, "{}", r.to_line());
    }
    let _ = writeln!(s, "# admitted {} of {}", tally.admitted(), tally.total());
    for ((n, m, sig), count) in &tally.counts {
        let sig = sig.map_or("refuted".to_string(), |(a, b, c)| format!("({a},{b},{c})"));
        let _ = writeln!(s, "# n={n} m={m} {sig}: {count}");
    }
    Ok(s)
}
