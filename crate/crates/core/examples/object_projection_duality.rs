//! Object projection is attribute projection on the transposed graph.

use patternbase::algebra::{project_attrs, project_objs};
use patternbase::fixtures::example_db;
use patternbase::oracle::enumerate_concepts;
use patternbase::ConceptGraph;

fn main() -> patternbase::Result<()> {
    let db = example_db();
    let g = ConceptGraph::construct(&enumerate_concepts(&db)?)?;
    let objs = g.universe().obj_set(["2", "5"])?;

    let p = project_objs(&g, &objs)?;
    let conjugated = project_attrs(&g.transpose(), &objs)?.transpose();
    assert_eq!(p, conjugated);
    println!("onto objects 2,5: {:?}", p.concepts().render());

    let rows = enumerate_concepts(&db.project_objects(&objs)?)?;
    println!("mined from rows 2,5: {:?}", rows.render());

    let t = g.transpose();
    println!("transposed graph: {:?}", t.concepts().render());
    assert_eq!(t.transpose(), g);
    Ok(())
}
