//! The command-line workflows, independent of argument parsing.
//!
//! Each command reads its inputs from paths (`-` for stdin), writes its
//! result to a path (`-` for stdout) and reports on `stderr`. Exit codes:
//! 0 on success, 1 when a graph fails verification, 2 for usage, parse
//! and capacity errors.

use std::fs;
use std::io::{Read, Write};

use crate::algebra::{
    parse_predicate, project_attrs_with, project_objs_with, select_with, Strategy,
};
use crate::dataset::Database;
use crate::error::Error;
use crate::io::{
    export_dot, parse_concept_list, parse_graph_document, read_graph, write_concept_list,
    write_graph, GraphDocument, LabelMode,
};
use crate::lattice::ConceptGraph;
use crate::oracle::enumerate_concepts_bounded;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjectOnto {
    Attrs(Vec<String>),
    Objs(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommandSpec {
    Mine {
        db: String,
        out: String,
        max_side: usize,
    },
    Build {
        concepts: String,
        out: String,
        complete: bool,
    },
    Select {
        graph: String,
        expr: String,
        out: String,
        strategy: Strategy,
    },
    Project {
        graph: String,
        onto: ProjectOnto,
        out: String,
    },
    Info {
        graph: String,
    },
    Check {
        graph: String,
    },
    Export {
        graph: String,
        out: String,
        labels: LabelMode,
    },
}

/// Standard streams, injectable for tests.
pub struct Streams<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Integrity(_) => EXIT_VERIFY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Run one command and return its exit code. Errors are reported on
/// `stderr`.
pub fn run(cmd: &CommandSpec, io: &mut Streams<'_>) -> i32 {
    match execute(cmd, io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cmd: &CommandSpec, io: &mut Streams<'_>) -> Result<i32, Failure> {
    match cmd {
        CommandSpec::Mine { db, out, max_side } => {
            let text = read_input(db, io)?;
            let db = Database::parse(&text).map_err(|e| located(db, e))?;
            let concepts = enumerate_concepts_bounded(&db, *max_side)?;
            write_output(out, &write_concept_list(&concepts), io)?;
            let _ = writeln!(io.stderr, "{} concepts", concepts.len());
        }
        CommandSpec::Build {
            concepts,
            out,
            complete,
        } => {
            let text = read_input(concepts, io)?;
            let coll = parse_concept_list(&text).map_err(|e| located(concepts, e))?;
            let g = ConceptGraph::construct(&coll)?;
            write_output(out, &write_graph(&g, *complete), io)?;
            let _ = writeln!(
                io.stderr,
                "{} concepts, {} edges",
                g.concept_count(),
                g.edge_count()
            );
        }
        CommandSpec::Select {
            graph,
            expr,
            out,
            strategy,
        } => {
            let doc = load(graph, io)?;
            let p = parse_predicate(expr, doc.graph.universe())
                .map_err(|e| usage(format!("predicate `{expr}` {e}")))?;
            let sel = select_with(&doc.graph, &p, *strategy)?;
            let complete = doc.complete && p.is_trivially_true();
            write_output(out, &write_graph(&sel.graph, complete), io)?;
            let _ = writeln!(
                io.stderr,
                "kept {}, marked {}, visited {} ({} traversal)",
                sel.kept(),
                sel.marked(),
                sel.visited,
                strategy_name(sel.strategy)
            );
        }
        CommandSpec::Project { graph, onto, out } => {
            let doc = load(graph, io)?;
            let u = doc.graph.universe();
            let p = match onto {
                ProjectOnto::Attrs(names) => {
                    project_attrs_with(&doc.graph, &u.attrs.set(names)?, doc.complete)?
                }
                ProjectOnto::Objs(names) => {
                    project_objs_with(&doc.graph, &u.objs.set(names)?, doc.complete)?
                }
            };
            if !doc.complete {
                let _ = writeln!(
                    io.stderr,
                    "warning: input is not flagged complete; least elements are only checked against marked vertices"
                );
            }
            if p.report.possibly_unsound {
                let _ = writeln!(
                    io.stderr,
                    "warning: {} concept(s) have no recorded predecessor; the projection may keep concepts that are not least elements",
                    p.report.unverified_roots
                );
            }
            if p.report.nil_vertices > 0 {
                let _ = writeln!(
                    io.stderr,
                    "{} concept(s) dropped: their least element is outside the collection",
                    p.report.nil_vertices
                );
            }
            write_output(out, &write_graph(&p.graph, doc.complete), io)?;
            let _ = writeln!(io.stderr, "{} concepts", p.graph.concept_count());
        }
        CommandSpec::Info { graph } => {
            let text = read_input(graph, io)?;
            let doc = parse_graph_document(&text).map_err(|e| located(graph, e))?;
            let g = &doc.graph;
            let u = g.universe();
            let report = format!(
                "vertices: {} ({} concepts, 2 sentinels, {} marked)\nedges: {}\ncomplete: {}\n\
                 attributes ({}): {}\nobjects ({}): {}\n",
                g.vertex_count(),
                g.concept_count(),
                g.marked_count(),
                g.edge_count(),
                doc.complete,
                u.attrs.len(),
                u.attrs.as_slice().join(" "),
                u.objs.len(),
                u.objs.as_slice().join(" "),
            );
            write_output("-", &report, io)?;
        }
        CommandSpec::Check { graph } => {
            let text = read_input(graph, io)?;
            let doc = parse_graph_document(&text).map_err(|e| located(graph, e))?;
            let report = doc.graph.check_integrity();
            if !report.is_ok() {
                for v in &report.violations {
                    let _ = writeln!(io.stderr, "{graph}: {v}");
                }
                return Ok(EXIT_VERIFY);
            }
            write_output("-", "ok\n", io)?;
        }
        CommandSpec::Export { graph, out, labels } => {
            let doc = load(graph, io)?;
            write_output(out, &export_dot(&doc.graph, *labels), io)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn strategy_name(s: Strategy) -> &'static str {
    match s {
        Strategy::Auto => "auto",
        Strategy::AntiMonotone => "am",
        Strategy::Monotone => "m",
        Strategy::Full => "full",
    }
}

fn located(path: &str, e: Error) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("{path}: {}", f.message);
    f
}

fn load(path: &str, io: &mut Streams<'_>) -> Result<GraphDocument, Failure> {
    let text = read_input(path, io)?;
    read_graph(&text).map_err(|e| located(path, e))
}

fn read_input(path: &str, io: &mut Streams<'_>) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io.stdin
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
    }
}

fn write_output(path: &str, text: &str, io: &mut Streams<'_>) -> Result<(), Failure> {
    if path == "-" {
        io.stdout
            .write_all(text.as_bytes())
            .map_err(|e| usage(format!("writing stdout: {e}")))
    } else {
        fs::write(path, text).map_err(|e| usage(format!("{path}: {e}")))
    }
}

/// Split a comma-separated set literal; the empty string is the empty set.
pub fn parse_set_literal(s: &str) -> Vec<String> {
    s.split(',')
        .filter(|n| !n.is_empty())
        .map(str::to_owned)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::EXAMPLE_DB;

    fn run_with(cmd: CommandSpec, stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            &cmd,
            &mut Streams {
                stdin: &mut input,
                stdout: &mut out,
                stderr: &mut err,
            },
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn example_graph_doc() -> String {
        let (_, list, _) = run_with(
            CommandSpec::Mine {
                db: "-".into(),
                out: "-".into(),
                max_side: 20,
            },
            EXAMPLE_DB,
        );
        let (code, doc, _) = run_with(
            CommandSpec::Build {
                concepts: "-".into(),
                out: "-".into(),
                complete: true,
            },
            &list,
        );
        assert_eq!(code, 0);
        doc
    }

    #[test]
    fn mine_example() {
        let (code, out, err) = run_with(
            CommandSpec::Mine {
                db: "-".into(),
                out: "-".into(),
                max_side: 20,
            },
            EXAMPLE_DB,
        );
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| !l.starts_with('@')).count(), 9);
        assert_eq!(err, "9 concepts\n");
    }

    #[test]
    fn info_and_check() {
        let doc = example_graph_doc();
        let (code, out, _) = run_with(CommandSpec::Info { graph: "-".into() }, &doc);
        assert_eq!(code, 0);
        assert!(
            out.starts_with("vertices: 11 (9 concepts, 2 sentinels, 0 marked)\nedges: 16\n"),
            "{out}"
        );
        let (code, out, _) = run_with(CommandSpec::Check { graph: "-".into() }, &doc);
        assert_eq!((code, out.as_str()), (0, "ok\n"));
        let broken = doc.replace("end\n", "edge 0 10\nend\n");
        let (code, _, err) = run_with(CommandSpec::Check { graph: "-".into() }, &broken);
        assert_eq!(code, EXIT_VERIFY);
        assert!(err.contains("skips"), "{err}");
    }

    #[test]
    fn select_reports_counts() {
        let doc = example_graph_doc();
        let cmd = |strategy| CommandSpec::Select {
            graph: "-".into(),
            expr: "minfreq(2)".into(),
            out: "-".into(),
            strategy,
        };
        let (code, am, err) = run_with(cmd(Strategy::AntiMonotone), &doc);
        assert_eq!(code, 0);
        assert_eq!(err, "kept 3, marked 5, visited 8 (am traversal)\n");
        assert!(am.contains("complete false"));
        let (_, full, _) = run_with(cmd(Strategy::Full), &doc);
        assert_eq!(am, full);
        let (code, _, err) = run_with(cmd(Strategy::Monotone), &doc);
        assert_eq!(code, EXIT_USAGE, "{err}");
    }

    #[test]
    fn bad_predicate_is_a_usage_error() {
        let doc = example_graph_doc();
        let (code, _, err) = run_with(
            CommandSpec::Select {
                graph: "-".into(),
                expr: "minfreq(".into(),
                out: "-".into(),
                strategy: Strategy::Auto,
            },
            &doc,
        );
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("offset 8"), "{err}");
    }

    #[test]
    fn project_example() {
        let doc = example_graph_doc();
        let (code, out, err) = run_with(
            CommandSpec::Project {
                graph: "-".into(),
                onto: ProjectOnto::Attrs(parse_set_literal("A,B,C")),
                out: "-".into(),
            },
            &doc,
        );
        assert_eq!(code, 0, "{err}");
        assert_eq!(out.lines().filter(|l| l.contains(" concept ")).count(), 3);
        assert!(!err.contains("warning"));
        let partial = doc.replace("complete true", "complete false");
        let (_, _, err) = run_with(
            CommandSpec::Project {
                graph: "-".into(),
                onto: ProjectOnto::Objs(parse_set_literal("2,5")),
                out: "-".into(),
            },
            &partial,
        );
        assert!(
            err.contains("warning: input is not flagged complete"),
            "{err}"
        );
    }

    #[test]
    fn unknown_names_are_usage_errors() {
        let doc = example_graph_doc();
        let (code, _, _) = run_with(
            CommandSpec::Project {
                graph: "-".into(),
                onto: ProjectOnto::Attrs(vec!["Z".into()]),
                out: "-".into(),
            },
            &doc,
        );
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn set_literals() {
        assert_eq!(parse_set_literal("A,B,C"), ["A", "B", "C"]);
        assert!(parse_set_literal("").is_empty());
    }
}
