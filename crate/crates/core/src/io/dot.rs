//! Graphviz export.

use std::fmt::Write as _;

use crate::lattice::{ConceptGraph, Node, VertexId};

/// Where the graph's labels go: on the vertices as `X | Y`, or on the
/// edges as the attributes gained and objects lost, `+AB/-5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LabelMode {
    #[default]
    Vertices,
    Edges,
}

pub fn export_dot(g: &ConceptGraph, mode: LabelMode) -> String {
    let u = g.universe();
    let order = g.canonical_order();
    let mut pos = vec![0; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        pos[v.index()] = i;
    }
    let name = |v: VertexId| format!("v{}", pos[v.index()]);

    let mut out = String::from("digraph concepts {\n  rankdir=BT;\n  node [shape=box];\n");
    for &v in &order {
        let label = match (g.node(v), mode) {
            (Node::Bottom, _) => "⊥".to_owned(),
            (Node::Top, _) => "⊤".to_owned(),
            (Node::Concept(b), LabelMode::Vertices) => {
                format!("{} | {}", u.attrs.render(&b.attrs), u.objs.render(&b.objs))
            }
            (Node::Concept(_), LabelMode::Edges) => String::new(),
        };
        let style = if g.is_marked(v) { ", style=dashed" } else { "" };
        let _ = writeln!(out, "  {} [label=\"{}\"{style}];", name(v), escape(&label));
    }
    let mut edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    edges.sort_by_key(|&(a, b)| (pos[a.index()], pos[b.index()]));
    for (a, b) in edges {
        let label = match (mode, g.edge_label_by_id(a, b)) {
            (LabelMode::Edges, Ok(l)) => format!(
                " [label=\"{}\"]",
                escape(&format!(
                    "+{}/-{}",
                    u.attrs.render(&l.added_attrs),
                    u.objs.render(&l.removed_objs)
                ))
            ),
            _ => String::new(),
        };
        let _ = writeln!(out, "  {} -> {}{label};", name(a), name(b));
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_db;
    use crate::oracle::enumerate_concepts;

    fn example_graph() -> ConceptGraph {
        ConceptGraph::construct(&enumerate_concepts(&example_db()).unwrap()).unwrap()
    }

    #[test]
    fn edge_labels() {
        let dot = export_dot(&example_graph(), LabelMode::Edges);
        assert!(dot.contains("  v2 -> v5 [label=\"+AB/-5\"];"), "{dot}");
        assert!(dot.contains("[label=\"+E/-24\"]"));
        assert_eq!(dot.matches("[label=\"+").count(), 12);
    }

    #[test]
    fn vertex_labels() {
        let g = example_graph();
        let dot = export_dot(&g, LabelMode::Vertices);
        assert!(dot.contains("  v2 [label=\"D | 12345\"];"), "{dot}");
        assert_eq!(dot.matches(" [label=").count(), g.vertex_count());
        assert_eq!(dot.matches(" -> ").count(), g.edge_count());
    }

    #[test]
    fn empty_graph() {
        let g = ConceptGraph::new(example_db().universe().clone());
        let dot = export_dot(&g, LabelMode::Edges);
        assert_eq!(
            dot,
            "digraph concepts {\n  rankdir=BT;\n  node [shape=box];\n  v0 [label=\"⊥\"];\n  \
             v1 [label=\"⊤\"];\n  v0 -> v1;\n}\n"
        );
    }

    #[test]
    fn marked_vertices_are_dashed() {
        let g = example_graph();
        let sel = crate::algebra::select(&g, &crate::algebra::Predicate::MinFrequency(2)).unwrap();
        let dot = export_dot(&sel, LabelMode::Vertices);
        assert_eq!(dot.matches("style=dashed").count(), 5);
    }
}
