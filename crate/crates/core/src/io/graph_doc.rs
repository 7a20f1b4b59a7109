//! The graph document format.
//!
//! ```text
//! format 1
//! complete true
//! attributes A B C D E F
//! objects 1 2 3 4 5
//! vertex 0 bot
//! vertex 1 top
//! vertex 2 concept D ; 1 2 3 4 5
//! vertex 3 marked C D ; 2 5
//! edge 0 2
//! edge 2 3
//! end
//! ```
//!
//! Ids are dense from 0, with `⊥` at 0 and `⊤` at 1. The writer lists
//! concepts in canonical order and edges sorted by id pair, so writing a
//! graph read from a canonical document reproduces it byte for byte.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use super::{content_lines, join_biset, split_biset};
use crate::dataset::{BiSet, Names, Universe};
use crate::error::{Error, Result};
use crate::lattice::{ConceptGraph, Node, VertexId};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: ConceptGraph,
    /// Whether the unmarked concepts are the whole concept lattice of some
    /// database. Projection soundness depends on it.
    pub complete: bool,
}

pub fn write_graph(g: &ConceptGraph, complete: bool) -> String {
    let u = g.universe();
    let order = g.canonical_order();
    let new_id: HashMap<VertexId, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let mut out = String::new();
    let _ = writeln!(out, "format {FORMAT_VERSION}");
    let _ = writeln!(out, "complete {complete}");
    let _ = writeln!(out, "{}", header("attributes", &u.attrs));
    let _ = writeln!(out, "{}", header("objects", &u.objs));
    for (i, &v) in order.iter().enumerate() {
        let _ = match g.node(v) {
            Node::Bottom => writeln!(out, "vertex {i} bot"),
            Node::Top => writeln!(out, "vertex {i} top"),
            Node::Concept(b) => {
                let kind = if g.is_marked(v) { "marked" } else { "concept" };
                writeln!(out, "vertex {i} {kind} {}", join_biset(u, b))
            }
        };
    }
    let edges: BTreeSet<(usize, usize)> =
        g.edges().map(|(a, b)| (new_id[&a], new_id[&b])).collect();
    for (a, b) in edges {
        let _ = writeln!(out, "edge {a} {b}");
    }
    out.push_str("end\n");
    out
}

fn header(key: &str, names: &Names) -> String {
    if names.is_empty() {
        key.to_owned()
    } else {
        format!("{key} {}", names.as_slice().join(" "))
    }
}

/// Parse a document and verify every graph invariant.
pub fn read_graph(text: &str) -> Result<GraphDocument> {
    let doc = parse_graph_document(text)?;
    doc.graph.check_integrity().into_result()?;
    Ok(doc)
}

/// Parse a document without checking the Hasse invariants, so that broken
/// graphs can still be loaded and inspected.
pub fn parse_graph_document(text: &str) -> Result<GraphDocument> {
    let mut lines = content_lines(text);
    let last_line = text.lines().count().max(1);

    let (line, first) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty document, expected `format`"))?;
    match first.split_whitespace().collect::<Vec<_>>()[..] {
        ["format", v] if v == FORMAT_VERSION.to_string() => {}
        ["format", v] => {
            return Err(Error::parse(
                line,
                format!("unsupported format version {v}, expected {FORMAT_VERSION}"),
            ))
        }
        _ => return Err(Error::parse(line, "expected `format <version>`")),
    }

    let mut complete = None;
    let mut attrs = None;
    let mut objs = None;
    let mut graph: Option<ConceptGraph> = None;
    let mut next_id = 0;
    let mut edges = BTreeSet::new();
    let mut ended = false;

    for (line, l) in lines {
        if ended {
            return Err(Error::parse(line, "content after `end`"));
        }
        let (key, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        let in_header = graph.is_none();
        match key {
            "complete" | "attributes" | "objects" if !in_header => {
                return Err(Error::parse(
                    line,
                    format!("`{key}` after the first vertex"),
                ))
            }
            "complete" => {
                if complete.is_some() {
                    return Err(Error::parse(line, "repeated `complete`"));
                }
                complete = Some(match rest {
                    "true" => true,
                    "false" => false,
                    _ => {
                        return Err(Error::parse(
                            line,
                            "expected `complete true` or `complete false`",
                        ))
                    }
                });
            }
            "attributes" | "objects" => {
                let slot = if key == "attributes" {
                    &mut attrs
                } else {
                    &mut objs
                };
                if slot.is_some() {
                    return Err(Error::parse(line, format!("repeated `{key}`")));
                }
                *slot = Some(
                    Names::new(rest.split_whitespace())
                        .map_err(|e| Error::parse(line, e.to_string()))?,
                );
            }
            "vertex" => {
                let g = match &mut graph {
                    Some(g) => g,
                    None => {
                        let (Some(a), Some(o)) = (attrs.take(), objs.take()) else {
                            return Err(Error::parse(
                                line,
                                "`attributes` and `objects` must precede the vertices",
                            ));
                        };
                        graph.insert(ConceptGraph::sentinels_only(Universe::new(a, o)))
                    }
                };
                parse_vertex(g, next_id, line, rest)?;
                next_id += 1;
            }
            "edge" => {
                let Some(g) = &mut graph else {
                    return Err(Error::parse(line, "edge before any vertex"));
                };
                let ids: Vec<&str> = rest.split_whitespace().collect();
                let [a, b] = ids[..] else {
                    return Err(Error::parse(line, "expected `edge <from> <to>`"));
                };
                let a = parse_id(next_id, line, a)?;
                let b = parse_id(next_id, line, b)?;
                if !edges.insert((a, b)) {
                    return Err(Error::parse(
                        line,
                        format!("repeated edge {} {}", a.index(), b.index()),
                    ));
                }
                g.add_edge(a, b);
            }
            "end" if rest.is_empty() => {
                if next_id < 2 {
                    return Err(Error::parse(line, "document ends before both sentinels"));
                }
                ended = true;
            }
            "format" => return Err(Error::parse(line, "repeated `format`")),
            _ => return Err(Error::parse(line, format!("unknown record `{key}`"))),
        }
    }
    if !ended {
        return Err(Error::parse(last_line, "truncated document: missing `end`"));
    }
    Ok(GraphDocument {
        graph: graph.expect("checked at `end`"),
        complete: complete.unwrap_or(false),
    })
}

/// Parse the vertex expected to carry id `expected`. The sentinels are
/// already in `g`.
fn parse_vertex(g: &mut ConceptGraph, expected: usize, line: usize, rest: &str) -> Result<()> {
    let mut parts = rest.splitn(3, char::is_whitespace);
    let id = parts.next().unwrap_or("");
    let kind = parts.next().unwrap_or("");
    let body = parts.next().unwrap_or("").trim();
    match id.parse::<usize>() {
        Ok(i) if i == expected => {}
        Ok(i) => {
            return Err(Error::parse(
                line,
                format!("vertex id {i} out of sequence, expected {expected}"),
            ))
        }
        Err(_) => return Err(Error::parse(line, format!("bad vertex id `{id}`"))),
    }
    let sentinel = match expected {
        0 => Some("bot"),
        1 => Some("top"),
        _ => None,
    };
    match (sentinel, kind) {
        (Some(want), k) if k == want && body.is_empty() => return Ok(()),
        (Some(want), _) => {
            return Err(Error::parse(
                line,
                format!("vertex {expected} must be `{want}`"),
            ))
        }
        (None, "concept" | "marked") => {}
        (None, "bot" | "top") => {
            return Err(Error::parse(
                line,
                "sentinels are only allowed at ids 0 and 1",
            ))
        }
        (None, other) => return Err(Error::parse(line, format!("unknown vertex kind `{other}`"))),
    }
    let Some((a, o)) = split_biset(body) else {
        return Err(Error::parse(line, "expected `<attributes> ; <objects>`"));
    };
    let u = g.universe();
    let b = BiSet::new(
        u.attrs
            .set(&a)
            .map_err(|e| Error::parse(line, e.to_string()))?,
        u.objs
            .set(&o)
            .map_err(|e| Error::parse(line, e.to_string()))?,
    );
    if g.id_of(&b).is_some() {
        return Err(Error::parse(
            line,
            format!("duplicate vertex {}", u.render(&b)),
        ));
    }
    g.push_vertex(Node::Concept(b), kind == "marked");
    Ok(())
}

fn parse_id(vertices: usize, line: usize, s: &str) -> Result<VertexId> {
    let id: usize = s
        .parse()
        .map_err(|_| Error::parse(line, format!("bad vertex id `{s}`")))?;
    if id >= vertices {
        return Err(Error::parse(
            line,
            format!("edge refers to unknown vertex {id}"),
        ));
    }
    Ok(VertexId(id))
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
    fn empty_graph_document() {
        let g = ConceptGraph::new(example_db().universe().clone());
        let text = write_graph(&g, true);
        assert_eq!(
            text,
            "format 1\ncomplete true\nattributes A B C D E F\nobjects 1 2 3 4 5\n\
             vertex 0 bot\nvertex 1 top\nedge 0 1\nend\n"
        );
        assert_eq!(
            read_graph(&text).unwrap(),
            GraphDocument {
                graph: g,
                complete: true
            }
        );
    }

    #[test]
    fn example_round_trip() {
        let g = example_graph();
        let text = write_graph(&g, true);
        assert_eq!(text.lines().filter(|l| l.starts_with("vertex")).count(), 11);
        assert_eq!(text.lines().filter(|l| l.starts_with("edge")).count(), 16);
        assert!(text.contains("vertex 2 concept D ; 1 2 3 4 5\n"));
        let doc = read_graph(&text).unwrap();
        assert!(doc.complete);
        assert_eq!(doc.graph, g);
        assert_eq!(write_graph(&doc.graph, doc.complete), text);
    }

    #[test]
    fn marked_vertices_and_empty_sides_round_trip() {
        let u = Universe::from_names(["a", "b"], ["x", "y"]).unwrap();
        let mut g = ConceptGraph::new(u.clone());
        g.insert_concept(u.biset(["a"], ["x", "y"]).unwrap())
            .unwrap();
        g.add_marked_boundary([&u.biset(["a", "b"], Vec::<&str>::new()).unwrap()])
            .unwrap();
        let text = write_graph(&g, false);
        assert!(text.contains("marked a b ;\n"), "{text}");
        let doc = read_graph(&text).unwrap();
        assert_eq!(doc.graph, g);
        assert!(!doc.complete);
        assert_eq!(write_graph(&doc.graph, false), text);
    }

    fn error_line(text: &str) -> usize {
        match read_graph(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_documents() {
        let good = write_graph(&example_graph(), true);
        let truncated: String = good.lines().take(9).map(|l| format!("{l}\n")).collect();
        assert_eq!(error_line(&truncated), 9);
        assert_eq!(error_line(&good.replace("format 1", "format 2")), 1);
        assert_eq!(error_line(&good.replace("edge 0 2", "edge 0 42")), 16);
        assert_eq!(error_line(&good.replace("vertex 3", "vertex 4")), 8);
        assert_eq!(error_line(&format!("{good}edge 0 1\n")), 33);
        assert_eq!(error_line(""), 1);
    }

    #[test]
    fn completeness_defaults_to_false() {
        let text = write_graph(&example_graph(), true).replace("complete true\n", "");
        assert!(!read_graph(&text).unwrap().complete);
    }

    #[test]
    fn rejects_hasse_violations() {
        let text = write_graph(&example_graph(), true);
        let doc = parse_graph_document(&text.replace("end\n", "edge 2 10\nend\n")).unwrap();
        assert!(!doc.graph.check_integrity().is_ok());
        let err = read_graph(&text.replace("end\n", "edge 2 10\nend\n")).unwrap_err();
        assert!(matches!(err, Error::Integrity(_)), "{err:?}");
    }

    #[test]
    fn rejects_marked_vertex_linked_to_top() {
        let u = Universe::from_names(["a", "b"], ["x", "y"]).unwrap();
        let text = "format 1\ncomplete false\nattributes a b\nobjects x y\n\
                    vertex 0 bot\nvertex 1 top\nvertex 2 concept a ; x y\nvertex 3 marked a b ; x\n\
                    edge 0 2\nedge 2 1\nedge 2 3\nedge 3 1\nend\n";
        let err = read_graph(text).unwrap_err();
        assert!(
            matches!(&err, Error::Integrity(m) if m.contains("sentinel")),
            "{err:?}"
        );
        assert_eq!(
            u,
            parse_graph_document(text).unwrap().graph.universe().clone()
        );
    }
}
