//! Save a graph, load it back, and export it for Graphviz.

use patternbase::algebra::{select, Predicate};
use patternbase::fixtures::example_db;
use patternbase::io::{
    export_dot, parse_concept_list, read_graph, write_concept_list, write_graph, LabelMode,
};
use patternbase::oracle::enumerate_concepts;
use patternbase::ConceptGraph;

fn main() -> patternbase::Result<()> {
    let concepts = enumerate_concepts(&example_db())?;
    let list = write_concept_list(&concepts);
    print!("{list}");
    assert_eq!(parse_concept_list(&list)?, concepts);

    let g = select(
        &ConceptGraph::construct(&concepts)?,
        &Predicate::MinFrequency(2),
    )?;
    let doc = write_graph(&g, false);
    print!("\n{doc}");
    let back = read_graph(&doc)?;
    assert_eq!(back.graph, g);
    assert_eq!(write_graph(&back.graph, back.complete), doc);

    print!("\n{}", export_dot(&g, LabelMode::Edges));
    Ok(())
}
