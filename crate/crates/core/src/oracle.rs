//! Brute-force reference implementations.
//!
//! These are deliberately naive: closure by full row scans, concept
//! enumeration over every subset of the smaller side, least elements and
//! cover relations by pairwise comparison. They double as the miner for
//! small databases and as the correctness oracle for the graph algorithms.
//!
//! The two bi-sets with an empty side, `(∅, 𝒪)` and `(𝒜, ∅)`, are the
//! bottom and top sentinels of every concept graph. A closed pair equal to
//! one of them is absorbed by the sentinel and is never part of a
//! [`ConceptCollection`] produced here.

use std::collections::{BTreeMap, BTreeSet};

use crate::bitset::BitSet;
use crate::dataset::{AttrSet, BiSet, Database, ObjSet, Universe};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_SIDE: usize = 20;

/// A deduplicated set of bi-sets over one universe, iterated in canonical
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConceptCollection {
    universe: Universe,
    concepts: BTreeSet<BiSet>,
}

impl ConceptCollection {
    pub fn new(universe: Universe) -> Self {
        ConceptCollection {
            universe,
            concepts: BTreeSet::new(),
        }
    }

    pub fn from_concepts<I>(universe: Universe, concepts: I) -> Result<Self>
    where
        I: IntoIterator<Item = BiSet>,
    {
        let mut c = ConceptCollection::new(universe);
        for b in concepts {
            c.insert(b)?;
        }
        Ok(c)
    }

    /// Returns false if `b` was already present.
    pub fn insert(&mut self, b: BiSet) -> Result<bool> {
        if !self.universe.contains(&b) {
            return Err(Error::domain(format!(
                "{b:?} is outside the collection's universe"
            )));
        }
        Ok(self.concepts.insert(b))
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn contains(&self, b: &BiSet) -> bool {
        self.concepts.contains(b)
    }

    pub fn iter(&self) -> impl Iterator<Item = &BiSet> + '_ {
        self.concepts.iter()
    }

    pub fn as_set(&self) -> &BTreeSet<BiSet> {
        &self.concepts
    }

    pub fn transpose(&self) -> ConceptCollection {
        ConceptCollection {
            universe: self.universe.transpose(),
            concepts: self.concepts.iter().map(BiSet::transpose).collect(),
        }
    }

    /// Human-readable listing, e.g. `["(D,12345)", "(ABD,1234)"]`.
    pub fn render(&self) -> Vec<String> {
        self.concepts
            .iter()
            .map(|b| self.universe.render(b))
            .collect()
    }
}

impl<'a> IntoIterator for &'a ConceptCollection {
    type Item = &'a BiSet;
    type IntoIter = std::collections::btree_set::Iter<'a, BiSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.concepts.iter()
    }
}

/// Objects related to every attribute of `attrs`.
pub fn common_objects(db: &Database, attrs: &AttrSet) -> ObjSet {
    let mut objs = db.universe().all_objs();
    for a in attrs {
        objs.intersect_with(db.column(a));
    }
    objs
}

/// Attributes related to every object of `objs`.
pub fn common_attributes(db: &Database, objs: &ObjSet) -> AttrSet {
    let mut attrs = db.universe().all_attrs();
    for o in objs {
        attrs.intersect_with(db.row(o));
    }
    attrs
}

/// True iff `b` is closed under both derivation operators, i.e. a maximal
/// 1-rectangle.
pub fn is_concept(db: &Database, b: &BiSet) -> bool {
    common_objects(db, &b.attrs) == b.objs && common_attributes(db, &b.objs) == b.attrs
}

pub fn enumerate_concepts(db: &Database) -> Result<ConceptCollection> {
    enumerate_concepts_bounded(db, DEFAULT_MAX_SIDE)
}

/// Every formal concept of `db`, found by closing each subset of the
/// smaller side. Closed pairs with an empty side coincide with a sentinel
/// and are left out.
pub fn enumerate_concepts_bounded(db: &Database, max_side: usize) -> Result<ConceptCollection> {
    let (na, no) = (db.attr_count(), db.obj_count());
    let side = na.min(no);
    if side > max_side {
        return Err(Error::Capacity {
            size: side,
            bound: max_side,
        });
    }
    let mut out = ConceptCollection::new(db.universe().clone());
    let over_attrs = na <= no;
    for mask in 0u64..(1u64 << side) {
        let seed: BitSet = (0..side).filter(|i| mask & (1 << i) != 0).collect();
        let b = if over_attrs {
            let objs = common_objects(db, &seed);
            BiSet::new(common_attributes(db, &objs), objs)
        } else {
            let attrs = common_attributes(db, &seed);
            BiSet::new(attrs.clone(), common_objects(db, &attrs))
        };
        if !b.has_empty_side() {
            out.insert(b)?;
        }
    }
    Ok(out)
}

/// The least element of each `A`-equivalence class of a full concept set.
///
/// `coll` is completed with the bottom sentinel `(∅, 𝒪)` when none of its
/// members has full extent (the bottom concept was absorbed); sentinels
/// never appear in the result. A class with two minimal elements means
/// `coll` was not a full concept set.
pub fn least_elements_oracle(
    coll: &ConceptCollection,
    attrs: &AttrSet,
) -> Result<ConceptCollection> {
    let universe = coll.universe();
    universe.check_attrs(attrs)?;
    let all_objs = universe.all_objs();
    let mut members: Vec<&BiSet> = coll.iter().collect();
    let bottom = BiSet::new(BitSet::new(), all_objs.clone());
    if !members.iter().any(|b| b.objs == all_objs) {
        members.push(&bottom);
    }

    let mut classes: BTreeMap<AttrSet, Vec<&BiSet>> = BTreeMap::new();
    for b in members {
        classes
            .entry(b.attrs.intersection(attrs))
            .or_default()
            .push(b);
    }

    let mut out = ConceptCollection::new(universe.clone());
    for (key, class) in classes {
        let minimal: Vec<&BiSet> = class
            .iter()
            .filter(|b| !class.iter().any(|c| c.strictly_precedes(b)))
            .copied()
            .collect();
        if minimal.len() != 1 {
            return Err(Error::Integrity(format!(
                "class {} has {} minimal elements",
                universe.attrs.render(&key),
                minimal.len()
            )));
        }
        if *minimal[0] != bottom {
            out.insert(minimal[0].clone())?;
        }
    }
    Ok(out)
}

/// All pairs `(u, v)` of `concepts` with `v` covering `u`.
pub fn cover_relation<'a, I>(concepts: I) -> BTreeSet<(BiSet, BiSet)>
where
    I: IntoIterator<Item = &'a BiSet>,
{
    let cs: Vec<&BiSet> = concepts.into_iter().collect();
    let mut out = BTreeSet::new();
    for u in &cs {
        for v in &cs {
            if u.strictly_precedes(v)
                && !cs
                    .iter()
                    .any(|w| u.strictly_precedes(w) && w.strictly_precedes(v))
            {
                out.insert(((*u).clone(), (*v).clone()));
            }
        }
    }
    out
}
