//! Selection with the three traversal strategies.

use patternbase::algebra::{parse_predicate, select_with, Strategy};
use patternbase::fixtures::example_db;
use patternbase::oracle::enumerate_concepts;
use patternbase::ConceptGraph;

fn main() -> patternbase::Result<()> {
    let g = ConceptGraph::construct(&enumerate_concepts(&example_db())?)?;
    let u = g.universe().clone();

    for expr in [
        "minfreq(2)",
        "hasobj(5)",
        "hasattr(E)",
        "minarea(5)",
        "and(minfreq(1),maxlen(4))",
    ] {
        let p = parse_predicate(expr, &u)?;
        let sel = select_with(&g, &p, Strategy::Auto)?;
        println!("{expr}  [{:?}, {:?}]", p.classify(), sel.strategy);
        println!("  kept   {:?}", sel.graph.concepts().render());
        println!("  marked {:?}", sel.graph.marked().render());
        println!(
            "  predicate evaluated on {} of {} concepts",
            sel.visited,
            g.concept_count()
        );

        let full = select_with(&g, &p, Strategy::Full)?;
        assert_eq!(full.graph, sel.graph);
        sel.graph.check_integrity().into_result()?;
    }
    Ok(())
}
