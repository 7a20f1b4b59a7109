//! Text formats: graph documents, concept lists and DOT export.
//!
//! All formats are line-oriented UTF-8. Blank lines and lines starting
//! with `#` are ignored on input.

mod concept_list;
mod dot;
mod graph_doc;

pub use concept_list::{parse_concept_list, write_concept_list};
pub use dot::{export_dot, LabelMode};
pub use graph_doc::{parse_graph_document, read_graph, write_graph, GraphDocument, FORMAT_VERSION};

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Split `attrs ; objs` into its two whitespace-separated name lists.
fn split_biset(s: &str) -> Option<(Vec<&str>, Vec<&str>)> {
    let (a, o) = s.split_once(';')?;
    if o.contains(';') {
        return None;
    }
    Some((
        a.split_whitespace().collect(),
        o.split_whitespace().collect(),
    ))
}

fn join_biset(u: &crate::Universe, b: &crate::BiSet) -> String {
    let attrs: Vec<&str> = u.attrs.names_of(&b.attrs).collect();
    let objs: Vec<&str> = u.objs.names_of(&b.objs).collect();
    match (attrs.is_empty(), objs.is_empty()) {
        (false, false) => format!("{} ; {}", attrs.join(" "), objs.join(" ")),
        (true, false) => format!("; {}", objs.join(" ")),
        (false, true) => format!("{} ;", attrs.join(" ")),
        (true, true) => ";".to_owned(),
    }
}
