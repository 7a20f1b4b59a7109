//! Boolean databases (formal contexts), their universes and bi-sets.
//!
//! Attribute and object names are mapped to dense indices when a
//! [`Universe`] is built. Everything downstream works on [`BitSet`]s of
//! those indices; names only come back at the I/O boundary.

use std::cmp::{Ordering, Reverse};
use std::collections::HashMap;
use std::fmt::{self, Write as _};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub type AttrSet = BitSet;
pub type ObjSet = BitSet;

/// Names must survive every text format and comma-separated set literals.
fn check_name(name: &str) -> Result<()> {
    if name.is_empty()
        || name.starts_with('#')
        || name
            .chars()
            .any(|c| c.is_whitespace() || c == ';' || c == ',')
    {
        return Err(Error::domain(format!(
            "invalid name `{name}`: names are non-empty, contain no whitespace, `;` or `,`, and do not start with `#`"
        )));
    }
    Ok(())
}

/// An ordered list of unique names with a reverse index.
#[derive(Clone, Default)]
pub struct Names {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Names {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Names::default();
        for name in names {
            let name = name.into();
            check_name(&name)?;
            if out.index.contains_key(&name) {
                return Err(Error::domain(format!("duplicate name `{name}`")));
            }
            out.push(name);
        }
        Ok(out)
    }

    pub(crate) fn push(&mut self, name: String) -> usize {
        let i = self.names.len();
        self.index.insert(name.clone(), i);
        self.names.push(name);
        i
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn as_slice(&self) -> &[String] {
        &self.names
    }

    /// Resolve names into a set; unknown names are an error.
    pub fn set<I, S>(&self, names: I) -> Result<BitSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        names
            .into_iter()
            .map(|n| {
                let n = n.as_ref();
                self.index_of(n)
                    .ok_or_else(|| Error::domain(format!("unknown name `{n}`")))
            })
            .collect()
    }

    /// The names of the members of `set`, in index order.
    pub fn names_of<'a>(&'a self, set: &'a BitSet) -> impl Iterator<Item = &'a str> + 'a {
        set.iter().map(move |i| self.name(i))
    }

    /// Compact rendering: names are concatenated when every name in the
    /// universe is a single character (`ABD`), comma-joined otherwise.
    pub fn render(&self, set: &BitSet) -> String {
        let sep = if self.names.iter().all(|n| n.chars().count() == 1) {
            ""
        } else {
            ","
        };
        self.names_of(set).collect::<Vec<_>>().join(sep)
    }
}

impl PartialEq for Names {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Names {}

impl fmt::Debug for Names {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}

/// The pair of name universes shared by a database and everything derived
/// from it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Universe {
    pub attrs: Names,
    pub objs: Names,
}

impl Universe {
    pub fn new(attrs: Names, objs: Names) -> Self {
        Universe { attrs, objs }
    }

    pub fn from_names<A, O, S, T>(attrs: A, objs: O) -> Result<Self>
    where
        A: IntoIterator<Item = S>,
        O: IntoIterator<Item = T>,
        S: Into<String>,
        T: Into<String>,
    {
        Ok(Universe {
            attrs: Names::new(attrs)?,
            objs: Names::new(objs)?,
        })
    }

    pub fn all_attrs(&self) -> AttrSet {
        BitSet::full(self.attrs.len())
    }

    pub fn all_objs(&self) -> ObjSet {
        BitSet::full(self.objs.len())
    }

    pub fn attr_set<I, S>(&self, names: I) -> Result<AttrSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.attrs.set(names)
    }

    pub fn obj_set<I, S>(&self, names: I) -> Result<ObjSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.objs.set(names)
    }

    /// Build a bi-set from name lists.
    pub fn biset<A, O, S, T>(&self, attrs: A, objs: O) -> Result<BiSet>
    where
        A: IntoIterator<Item = S>,
        O: IntoIterator<Item = T>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        Ok(BiSet::new(self.attr_set(attrs)?, self.obj_set(objs)?))
    }

    pub fn contains(&self, b: &BiSet) -> bool {
        b.attrs.bound() <= self.attrs.len() && b.objs.bound() <= self.objs.len()
    }

    pub fn check_attrs(&self, set: &AttrSet) -> Result<()> {
        if set.bound() > self.attrs.len() {
            return Err(Error::domain(format!(
                "attribute index {} outside a universe of {} attributes",
                set.bound() - 1,
                self.attrs.len()
            )));
        }
        Ok(())
    }

    pub fn check_objs(&self, set: &ObjSet) -> Result<()> {
        if set.bound() > self.objs.len() {
            return Err(Error::domain(format!(
                "object index {} outside a universe of {} objects",
                set.bound() - 1,
                self.objs.len()
            )));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Universe {
        Universe {
            attrs: self.objs.clone(),
            objs: self.attrs.clone(),
        }
    }

    /// `(ABD,1234)`-style rendering used in messages, tests and DOT output.
    pub fn render(&self, b: &BiSet) -> String {
        format!(
            "({},{})",
            self.attrs.render(&b.attrs),
            self.objs.render(&b.objs)
        )
    }
}

/// A pair `(X, Y)` of an attribute set and an object set.
///
/// The derived `Ord` is the canonical vertex order: by `|X|`, then `X`
/// lexicographically, then `|Y|` descending, then `Y`. It is a linear
/// extension of the concept order, so sorting by it gives a valid
/// insertion and topological order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiSet {
    pub attrs: AttrSet,
    pub objs: ObjSet,
}

impl BiSet {
    pub fn new(attrs: AttrSet, objs: ObjSet) -> Self {
        BiSet { attrs, objs }
    }

    /// `(X,Y) ⪯ (X',Y')` iff `X ⊆ X'` and `Y' ⊆ Y`.
    pub fn precedes(&self, other: &BiSet) -> bool {
        self.attrs.is_subset(&other.attrs) && other.objs.is_subset(&self.objs)
    }

    pub fn strictly_precedes(&self, other: &BiSet) -> bool {
        self != other && self.precedes(other)
    }

    pub fn transpose(&self) -> BiSet {
        BiSet {
            attrs: self.objs.clone(),
            objs: self.attrs.clone(),
        }
    }

    pub fn has_empty_side(&self) -> bool {
        self.attrs.is_empty() || self.objs.is_empty()
    }

    fn key(&self) -> (usize, &BitSet, Reverse<usize>, &BitSet) {
        (
            self.attrs.len(),
            &self.attrs,
            Reverse(self.objs.len()),
            &self.objs,
        )
    }
}

impl Ord for BiSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for BiSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BiSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.attrs, self.objs)
    }
}

/// A boolean relation between attributes (columns) and objects (rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Database {
    universe: Universe,
    /// Per object, the attributes it is related to.
    rows: Vec<AttrSet>,
    /// Per attribute, the objects it is related to.
    cols: Vec<ObjSet>,
}

impl Database {
    /// Build from per-object attribute sets; `rows.len()` must match the
    /// object universe.
    pub fn from_rows(universe: Universe, rows: Vec<AttrSet>) -> Result<Self> {
        if rows.len() != universe.objs.len() {
            return Err(Error::domain(format!(
                "{} rows for {} objects",
                rows.len(),
                universe.objs.len()
            )));
        }
        for row in &rows {
            universe.check_attrs(row)?;
        }
        let mut cols = vec![BitSet::new(); universe.attrs.len()];
        for (o, row) in rows.iter().enumerate() {
            for a in row {
                cols[a].insert(o);
            }
        }
        Ok(Database {
            universe,
            rows,
            cols,
        })
    }

    /// Build from a dense 0/1 matrix indexed `[object][attribute]`.
    pub fn from_matrix<A, O, S, T>(attrs: A, objs: O, matrix: &[Vec<bool>]) -> Result<Self>
    where
        A: IntoIterator<Item = S>,
        O: IntoIterator<Item = T>,
        S: Into<String>,
        T: Into<String>,
    {
        let universe = Universe::from_names(attrs, objs)?;
        let mut rows = Vec::with_capacity(matrix.len());
        for (o, row) in matrix.iter().enumerate() {
            if row.len() != universe.attrs.len() {
                return Err(Error::domain(format!(
                    "row {o} has {} cells, expected {}",
                    row.len(),
                    universe.attrs.len()
                )));
            }
            rows.push(
                row.iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(a, _)| a)
                    .collect(),
            );
        }
        Database::from_rows(universe, rows)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn attr_count(&self) -> usize {
        self.universe.attrs.len()
    }

    pub fn obj_count(&self) -> usize {
        self.universe.objs.len()
    }

    pub fn bit(&self, obj: usize, attr: usize) -> bool {
        self.rows[obj].contains(attr)
    }

    /// Attributes of object `obj`.
    pub fn row(&self, obj: usize) -> &AttrSet {
        &self.rows[obj]
    }

    /// Objects of attribute `attr`.
    pub fn column(&self, attr: usize) -> &ObjSet {
        &self.cols[attr]
    }

    /// Keep only the columns in `attrs`, re-indexed densely in their
    /// original order. Objects are unchanged.
    pub fn project(&self, attrs: &AttrSet) -> Result<Database> {
        self.universe.check_attrs(attrs)?;
        let kept: Vec<usize> = attrs.iter().collect();
        let names = Names::new(kept.iter().map(|&a| self.universe.attrs.name(a).to_owned()))?;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                kept.iter()
                    .enumerate()
                    .filter(|(_, &a)| row.contains(a))
                    .map(|(new, _)| new)
                    .collect()
            })
            .collect();
        Database::from_rows(Universe::new(names, self.universe.objs.clone()), rows)
    }

    /// Keep only the rows in `objs`, re-indexed densely. Attributes are
    /// unchanged.
    pub fn project_objects(&self, objs: &ObjSet) -> Result<Database> {
        self.transpose().project(objs).map(|db| db.transpose())
    }

    /// Swap the roles of attributes and objects.
    pub fn transpose(&self) -> Database {
        Database {
            universe: self.universe.transpose(),
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }

    /// True iff every attribute of `b` is related to every object of `b`.
    pub fn is_one_rectangle(&self, b: &BiSet) -> bool {
        b.objs.iter().all(|o| b.attrs.is_subset(&self.rows[o]))
    }

    /// Parse the line-oriented database format: a header of attribute
    /// names, then one `name cell...` line per object. `#` starts a
    /// comment line.
    pub fn parse(text: &str) -> Result<Database> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
            .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());

        let (header_line, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing attribute header"))?;
        let attrs = Names::new(header.split_whitespace())
            .map_err(|e| Error::parse(header_line, e.to_string()))?;

        let mut objs = Names::default();
        let mut rows = Vec::new();
        for (line, l) in lines {
            let mut cells = l.split_whitespace();
            let name = cells.next().expect("non-blank line has a token");
            if objs.index_of(name).is_some() {
                return Err(Error::parse(line, format!("duplicate object `{name}`")));
            }
            check_name(name).map_err(|e| Error::parse(line, e.to_string()))?;
            let mut row = BitSet::new();
            let mut n = 0;
            for cell in cells {
                match cell {
                    "1" => {
                        row.insert(n);
                    }
                    "0" => {}
                    other => {
                        return Err(Error::parse(line, format!("cell `{other}` is not 0 or 1")))
                    }
                }
                n += 1;
            }
            if n != attrs.len() {
                return Err(Error::parse(
                    line,
                    format!("object `{name}` has {n} cells, expected {}", attrs.len()),
                ));
            }
            objs.push(name.to_owned());
            rows.push(row);
        }
        Database::from_rows(Universe::new(attrs, objs), rows)
    }

    /// Serialize in the format accepted by [`Database::parse`].
    pub fn write(&self) -> String {
        let mut out = self.universe.attrs.as_slice().join(" ");
        out.push('\n');
        for (o, row) in self.rows.iter().enumerate() {
            out.push_str(self.universe.objs.name(o));
            for a in 0..self.attr_count() {
                let _ = write!(out, " {}", u8::from(row.contains(a)));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_db, EXAMPLE_DB};

    #[test]
    fn parses_example() {
        let db = Database::parse(EXAMPLE_DB).unwrap();
        assert_eq!(db.attr_count(), 6);
        assert_eq!(db.obj_count(), 5);
        let u = db.universe();
        let c = u.attrs.index_of("C").unwrap();
        assert!(!db.bit(u.objs.index_of("1").unwrap(), c));
        assert!(db.bit(u.objs.index_of("2").unwrap(), c));
    }

    #[test]
    fn parses_header_only() {
        let db = Database::parse("A B\n").unwrap();
        assert_eq!(db.attr_count(), 2);
        assert_eq!(db.obj_count(), 0);
    }

    #[test]
    fn parses_identity_with_crlf_and_comments() {
        let db =
            Database::parse("# identity\r\na b c\r\nx 1 0 0\r\n# mid\r\ny 0 1 0\r\nz 0 0 1\r\n")
                .unwrap();
        for o in 0..3 {
            for a in 0..3 {
                assert_eq!(db.bit(o, a), o == a);
            }
        }
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = |t: &str| match Database::parse(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err(""), 1);
        assert_eq!(err("A A\n"), 1);
        assert_eq!(err("A B\n1 1 0\n2 1\n"), 3);
        assert_eq!(err("A B\n1 1 2\n"), 2);
        assert_eq!(err("A B\n1 1 0\n1 0 0\n"), 3);
    }

    #[test]
    fn write_then_parse_is_identity() {
        let db = example_db();
        assert_eq!(Database::parse(&db.write()).unwrap(), db);
    }

    #[test]
    fn projection_onto_abc() {
        let db = example_db();
        let abc = db.universe().attr_set(["A", "B", "C"]).unwrap();
        let p = db.project(&abc).unwrap();
        assert_eq!(p.universe().attrs.as_slice(), ["A", "B", "C"]);
        let rows: Vec<String> = (0..5)
            .map(|o| p.universe().attrs.render(p.row(o)))
            .collect();
        assert_eq!(rows, ["AB", "ABC", "AB", "AB", "C"]);
    }

    #[test]
    fn projection_edge_cases() {
        let db = example_db();
        assert_eq!(db.project(&db.universe().all_attrs()).unwrap(), db);
        let empty = db.project(&BitSet::new()).unwrap();
        assert_eq!((empty.attr_count(), empty.obj_count()), (0, 5));
        assert!(matches!(
            db.project(&BitSet::singleton(6)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn transpose_swaps_roles() {
        let db = example_db();
        let t = db.transpose();
        assert_eq!((t.attr_count(), t.obj_count()), (5, 6));
        let u = t.universe();
        assert!(t.bit(
            u.objs.index_of("C").unwrap(),
            u.attrs.index_of("2").unwrap()
        ));
        assert_eq!(t.transpose(), db);
    }

    #[test]
    fn one_rectangles_from_example() {
        let db = example_db();
        let u = db.universe();
        assert!(db.is_one_rectangle(&u.biset(["A", "B", "D"], ["1", "2", "3"]).unwrap()));
        assert!(db.is_one_rectangle(&u.biset(["E"], ["1", "3", "5"]).unwrap()));
        assert!(!db.is_one_rectangle(&u.biset(["A", "B", "C"], ["1", "2"]).unwrap()));
        assert!(db.is_one_rectangle(&BiSet::default()));
    }

    #[test]
    fn canonical_order_extends_concept_order() {
        let u = example_db().universe().clone();
        let lo = u.biset(["A", "B"], ["1", "2"]).unwrap();
        let hi = u.biset(["A", "B"], ["1"]).unwrap();
        assert!(lo.precedes(&hi));
        assert!(lo < hi);
        let d = u.biset(["D"], ["1", "2", "3", "4", "5"]).unwrap();
        assert!(d < lo);
    }
}
