//! Concept lists, one bi-set per line:
//!
//! ```text
//! @attributes A B C D E F
//! @objects 1 2 3 4 5
//! A B D ; 1 2 3 4
//! C D ; 2 5
//! ```
//!
//! The `@attributes` and `@objects` directives pin the universe and must
//! come before the first bi-set. Without them the universe is the names
//! seen, in order of first appearance.

use std::fmt::Write as _;

use super::{content_lines, join_biset, split_biset};
use crate::dataset::{BiSet, Names, Universe};
use crate::error::{Error, Result};
use crate::oracle::ConceptCollection;

/// Parse a concept list. Repeated lines collapse into one bi-set, and the
/// bi-sets `(∅, all objects)` and `(all attributes, ∅)` are dropped since
/// graphs represent them by their sentinels.
pub fn parse_concept_list(text: &str) -> Result<ConceptCollection> {
    let mut pinned_attrs: Option<Names> = None;
    let mut pinned_objs: Option<Names> = None;
    let mut rows: Vec<(usize, Vec<&str>, Vec<&str>)> = Vec::new();

    for (line, l) in content_lines(text) {
        if let Some(directive) = l.strip_prefix('@') {
            let (key, rest) = directive
                .split_once(char::is_whitespace)
                .unwrap_or((directive, ""));
            let slot = match key {
                "attributes" => &mut pinned_attrs,
                "objects" => &mut pinned_objs,
                _ => return Err(Error::parse(line, format!("unknown directive `@{key}`"))),
            };
            if !rows.is_empty() {
                return Err(Error::parse(
                    line,
                    format!("`@{key}` after the first concept"),
                ));
            }
            if slot.is_some() {
                return Err(Error::parse(line, format!("repeated `@{key}`")));
            }
            *slot = Some(
                Names::new(rest.split_whitespace())
                    .map_err(|e| Error::parse(line, e.to_string()))?,
            );
            continue;
        }
        let Some((a, o)) = split_biset(l) else {
            return Err(Error::parse(line, "expected `<attributes> ; <objects>`"));
        };
        rows.push((line, a, o));
    }

    let attrs = infer(pinned_attrs, rows.iter().map(|r| (r.0, &r.1)))?;
    let objs = infer(pinned_objs, rows.iter().map(|r| (r.0, &r.2)))?;
    let universe = Universe::new(attrs, objs);
    let mut coll = ConceptCollection::new(universe.clone());
    let (all_attrs, all_objs) = (universe.all_attrs(), universe.all_objs());
    for (line, a, o) in &rows {
        let b = BiSet::new(
            universe
                .attrs
                .set(a)
                .map_err(|e| Error::parse(*line, e.to_string()))?,
            universe
                .objs
                .set(o)
                .map_err(|e| Error::parse(*line, e.to_string()))?,
        );
        let sentinel = (b.attrs.is_empty() && b.objs == all_objs)
            || (b.objs.is_empty() && b.attrs == all_attrs);
        if !sentinel {
            coll.insert(b)?;
        }
    }
    Ok(coll)
}

fn infer<'a>(
    pinned: Option<Names>,
    rows: impl Iterator<Item = (usize, &'a Vec<&'a str>)>,
) -> Result<Names> {
    if let Some(names) = pinned {
        return Ok(names);
    }
    let mut names = Names::default();
    for (line, row) in rows {
        for &n in row {
            if names.index_of(n).is_none() {
                // Validate through the public constructor.
                Names::new([n]).map_err(|e| Error::parse(line, e.to_string()))?;
                names.push(n.to_owned());
            }
        }
    }
    Ok(names)
}

/// Write a collection with its universe pinned, in canonical order.
pub fn write_concept_list(coll: &ConceptCollection) -> String {
    let u = coll.universe();
    let mut out = String::new();
    let _ = writeln!(out, "{}", directive("@attributes", &u.attrs));
    let _ = writeln!(out, "{}", directive("@objects", &u.objs));
    for b in coll {
        let _ = writeln!(out, "{}", join_biset(u, b));
    }
    out
}

fn directive(key: &str, names: &Names) -> String {
    if names.is_empty() {
        key.to_owned()
    } else {
        format!("{key} {}", names.as_slice().join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_db;
    use crate::oracle::enumerate_concepts;

    #[test]
    fn reads_a_line() {
        let c = parse_concept_list("A B D ; 1 2 3 4\n").unwrap();
        assert_eq!(c.render(), ["(ABD,1234)"]);
        assert_eq!(c.universe().attrs.as_slice(), ["A", "B", "D"]);
    }

    #[test]
    fn empty_and_duplicate_input() {
        assert!(parse_concept_list("").unwrap().is_empty());
        assert!(parse_concept_list("# nothing\n\n").unwrap().is_empty());
        let c = parse_concept_list("A ; 1\nA ; 1\n  A ;   1  \n").unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn empty_sides() {
        let c = parse_concept_list("@attributes A B\n@objects 1 2\n; 1\nA B ;\nA ; 1 2\n").unwrap();
        // `(AB,∅)` is the top sentinel of this universe.
        assert_eq!(c.render(), ["(,1)", "(A,12)"]);
    }

    #[test]
    fn round_trips_mined_concepts() {
        let mined = enumerate_concepts(&example_db()).unwrap();
        let text = write_concept_list(&mined);
        assert_eq!(text.lines().count(), 11);
        assert_eq!(parse_concept_list(&text).unwrap(), mined);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line = |t: &str| match parse_concept_list(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(line("A ; 1\nA B 1\n"), 2);
        assert_eq!(line("A ; 1 ; 2\n"), 1);
        assert_eq!(line("@attributes A\n\nB ; 1\n"), 3);
        assert_eq!(line("A ; 1\n@objects 1\n"), 2);
        assert_eq!(line("@frob x\n"), 1);
    }
}
