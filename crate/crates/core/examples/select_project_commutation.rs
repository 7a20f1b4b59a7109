//! Selection and projection commute when the predicate only looks at the
//! kept attributes, and may not otherwise.

use patternbase::algebra::{commutes, parse_predicate, project_attrs, select};
use patternbase::fixtures::example_db;
use patternbase::oracle::enumerate_concepts;
use patternbase::ConceptGraph;

fn main() -> patternbase::Result<()> {
    let g = ConceptGraph::construct(&enumerate_concepts(&example_db())?)?;
    let u = g.universe().clone();
    let abc = u.attr_set(["A", "B", "C"])?;

    for expr in [
        "minfreq(2)",
        "hasattr(B)",
        "and(hasobj(2),hasattr(C))",
        "hasattr(D)",
    ] {
        let p = parse_predicate(expr, &u)?;
        let select_then_project = project_attrs(&select(&g, &p)?, &abc)?.concepts();
        let project_then_select = select(&project_attrs(&g, &abc)?, &p)?.concepts();
        println!("{expr}: commutes {}", commutes(&p, &abc));
        println!("  π∘σ {:?}", select_then_project.render());
        println!("  σ∘π {:?}", project_then_select.render());
        if commutes(&p, &abc) {
            assert_eq!(select_then_project, project_then_select);
        }
    }
    Ok(())
}
