//! Build the Hasse diagram of a concept collection, one insertion at a
//! time, and read the edge labels.

use patternbase::fixtures::example_db;
use patternbase::oracle::enumerate_concepts;
use patternbase::{ConceptGraph, Node};

fn main() -> patternbase::Result<()> {
    let concepts = enumerate_concepts(&example_db())?;
    let u = concepts.universe().clone();

    // Insertion must go by increasing number of attributes; the collection
    // already iterates in that order.
    let mut g = ConceptGraph::new(u.clone());
    for c in &concepts {
        g.insert_concept(c.clone())?;
        println!("inserted {:<12} {} edges", u.render(c), g.edge_count());
    }
    assert_eq!(g, ConceptGraph::construct(&concepts)?);

    println!("\nedges labelled with attributes gained and objects lost:");
    for (a, b) in g.concept_edges() {
        let l = g.edge_label(&a, &b)?;
        println!(
            "  {:<11} -> {:<11} +{}/-{}",
            u.render(&a),
            u.render(&b),
            u.attrs.render(&l.added_attrs),
            u.objs.render(&l.removed_objs)
        );
    }

    let minimal: Vec<String> = g
        .successors(patternbase::BOTTOM)
        .filter_map(|v| match g.node(v) {
            Node::Concept(b) => Some(u.render(b)),
            _ => None,
        })
        .collect();
    println!("\nabove the bottom sentinel: {minimal:?}");
    g.check_integrity().into_result()
}
