//! Partial collections keep the concepts just outside them as marked
//! vertices. Projection uses the marks to tell whether a group's least
//! element is missing.

use patternbase::algebra::project_attrs_with;
use patternbase::fixtures::example_db;
use patternbase::oracle::enumerate_concepts;
use patternbase::ConceptGraph;

fn main() -> patternbase::Result<()> {
    let full = enumerate_concepts(&example_db())?;
    let u = full.universe().clone();
    let d = u.biset(["D"], ["1", "2", "3", "4", "5"])?;
    let abc = u.attr_set(["A", "B", "C"])?;
    let rest: Vec<_> = full.iter().filter(|&b| *b != d).cloned().collect();

    let mut marked = ConceptGraph::construct_from(u.clone(), rest.clone())?;
    marked.add_marked_boundary([&d])?;
    println!("{marked:?}");
    let p = project_attrs_with(&marked, &abc, false)?;
    println!("with (D,12345) marked: {:?}", p.graph.concepts().render());
    println!(
        "  groups without a least element: {}",
        p.report.nil_vertices
    );
    println!("  possibly unsound: {}", p.report.possibly_unsound);

    let unmarked = ConceptGraph::construct_from(u, rest)?;
    let p = project_attrs_with(&unmarked, &abc, false)?;
    println!("without the mark: {:?}", p.graph.concepts().render());
    println!("  unverified roots: {}", p.report.unverified_roots);
    println!("  possibly unsound: {}", p.report.possibly_unsound);
    Ok(())
}
