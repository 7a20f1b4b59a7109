//! Projection onto an attribute subset: only the least element of each
//! group of concepts agreeing on the kept attributes survives.

use patternbase::algebra::{a_equivalent, project_attrs_with};
use patternbase::fixtures::example_db;
use patternbase::oracle::enumerate_concepts;
use patternbase::ConceptGraph;

fn main() -> patternbase::Result<()> {
    let db = example_db();
    let g = ConceptGraph::construct(&enumerate_concepts(&db)?)?;
    let u = g.universe().clone();
    let abc = u.attr_set(["A", "B", "C"])?;

    println!("groups by X ∩ {{A,B,C}}:");
    let concepts: Vec<_> = g.concepts().iter().cloned().collect();
    let mut seen = vec![false; concepts.len()];
    for i in 0..concepts.len() {
        if seen[i] {
            continue;
        }
        let group: Vec<String> = (i..concepts.len())
            .filter(|&j| a_equivalent(&concepts[i], &concepts[j], &abc))
            .inspect(|&j| seen[j] = true)
            .map(|j| u.render(&concepts[j]))
            .collect();
        println!(
            "  {}: {group:?}",
            u.attrs.render(&concepts[i].attrs.intersection(&abc))
        );
    }

    let p = project_attrs_with(&g, &abc, true)?;
    println!("\nprojected: {:?}", p.graph.concepts().render());
    println!("{:#?}", p.report);

    let direct = enumerate_concepts(&db.project(&abc)?)?;
    println!("mined from the projected database: {:?}", direct.render());
    p.graph.check_integrity().into_result()
}
