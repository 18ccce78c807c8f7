//! Writes the example corpus: every catalog example as a graph file and a
//! certificate, plus graphs without structures and a few metrics and plans.
//!
//! Usage: `cargo run -p nilgraph --example write_corpus -- <dir>`

use std::fs;
use std::path::Path;

use nilgraph::catalog;
use nilgraph::hermitian::{skt_family, Metric};
use nilgraph::linalg::q;
use nilgraph::plan::{format_basic, format_wedges};
use nilgraph::structure::ExpansionPlan;
use nilgraph::{families, GraphLieAlgebra};

/// File stem for an example name: lower case, `,` to `_`, `*` to `star`.
fn stem(name: &str) -> String {
    name.to_lowercase().replace(',', "_").replace('*', "star")
}

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "corpus".into());
    let dir = Path::new(&dir);
    fs::create_dir_all(dir)?;
    for ex in catalog::all_examples() {
        let s = stem(&ex.name);
        let alg = ex.algebra();
        fs::write(dir.join(format!("{s}.txt")), ex.graph.to_text())?;
        fs::write(dir.join(format!("{s}.J")), ex.j.to_certificate(&alg))?;
        fs::write(dir.join(format!("{s}.id.gram")), Metric::identity(&alg).to_text())?;
    }
    for (s, g) in [
        ("c5", families::cycle(5).unwrap()),
        ("c8", families::cycle(8).unwrap()),
        ("w6", families::wheel(6).unwrap()),
        ("p4star", families::path(4).unwrap().with_isolated(1)),
        ("odd_far", families::odd_far()),
    ] {
        fs::write(dir.join(format!("{s}.txt")), g.to_text())?;
    }
    let f = skt_family(1, &q(3));
    fs::write(dir.join("skt1.txt"), f.alg.graph().to_text())?;
    fs::write(dir.join("skt1.J"), f.j.to_certificate(&f.alg))?;
    fs::write(dir.join("skt1.gram"), f.metric.to_text())?;
    fs::write(dir.join("skt1.id.gram"), Metric::identity(&f.alg).to_text())?;
    let low = skt_family(1, &q(1));
    fs::write(dir.join("skt1.k1.gram"), low.metric.to_text())?;

    let ex = catalog::expansion9();
    let plan = ExpansionPlan::recover(&GraphLieAlgebra::new(ex.graph.clone()), &ex.j).unwrap();
    fs::write(dir.join("expansion9.basic"), format_basic(&plan.base))?;
    fs::write(dir.join("expansion9.plan"), format_wedges(&plan.wedges))?;
    Ok(())
}
