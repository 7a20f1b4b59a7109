//! Enumerate the concepts of a small database and check a few bi-sets
//! against the closure operators.

use patternbase::fixtures::example_db;
use patternbase::oracle::{common_attributes, common_objects, enumerate_concepts, is_concept};

fn main() -> patternbase::Result<()> {
    let db = example_db();
    print!("{}", db.write());

    let concepts = enumerate_concepts(&db)?;
    println!("\n{} concepts:", concepts.len());
    for c in concepts.render() {
        println!("  {c}");
    }

    let u = db.universe();
    for (attrs, objs) in [
        (vec!["A", "B", "D"], vec!["1", "2", "3"]),
        (vec!["E"], vec!["1", "3", "5"]),
    ] {
        let b = u.biset(&attrs, &objs)?;
        println!(
            "\n{}: 1-rectangle {}, concept {}",
            u.render(&b),
            db.is_one_rectangle(&b),
            is_concept(&db, &b)
        );
        let closed_objs = common_objects(&db, &b.attrs);
        let closed_attrs = common_attributes(&db, &closed_objs);
        println!(
            "  closes to ({},{})",
            u.attrs.render(&closed_attrs),
            u.objs.render(&closed_objs)
        );
    }
    Ok(())
}
