#![allow(dead_code)]

use patternbase::oracle::enumerate_concepts;
use patternbase::{AttrSet, BiSet, ConceptCollection, ConceptGraph, Database, ObjSet, Universe};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub const DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];
pub const MAX_ATTRS: usize = 8;
pub const MAX_OBJS: usize = 8;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random database of at most 8 attributes and 8 objects.
pub fn random_db(rng: &mut StdRng) -> Database {
    let n_attrs = rng.gen_range(1..=MAX_ATTRS);
    let n_objs = rng.gen_range(1..=MAX_OBJS);
    let density = *DENSITIES.choose(rng).unwrap();
    let matrix: Vec<Vec<bool>> = (0..n_objs)
        .map(|_| (0..n_attrs).map(|_| rng.gen_bool(density)).collect())
        .collect();
    Database::from_matrix(
        (0..n_attrs).map(|a| format!("a{a}")),
        (0..n_objs).map(|o| format!("o{o}")),
        &matrix,
    )
    .unwrap()
}

pub fn random_subset(rng: &mut StdRng, n: usize) -> patternbase::BitSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn full_graph(db: &Database) -> ConceptGraph {
    ConceptGraph::construct(&enumerate_concepts(db).unwrap()).unwrap()
}

/// Concepts of `db` restricted to the columns `attrs`, with attribute
/// indices mapped back to the original universe.
pub fn projected_db_concepts(db: &Database, attrs: &AttrSet) -> ConceptCollection {
    let kept: Vec<usize> = attrs.iter().collect();
    let projected = enumerate_concepts(&db.project(attrs).unwrap()).unwrap();
    lift(db.universe(), &projected, |b| {
        BiSet::new(b.attrs.iter().map(|i| kept[i]).collect(), b.objs.clone())
    })
}

/// Concepts of `db` restricted to the rows `objs`, with object indices
/// mapped back to the original universe.
pub fn row_projected_db_concepts(db: &Database, objs: &ObjSet) -> ConceptCollection {
    let kept: Vec<usize> = objs.iter().collect();
    let projected = enumerate_concepts(&db.project_objects(objs).unwrap()).unwrap();
    lift(db.universe(), &projected, |b| {
        BiSet::new(b.attrs.clone(), b.objs.iter().map(|i| kept[i]).collect())
    })
}

fn lift(u: &Universe, c: &ConceptCollection, f: impl Fn(&BiSet) -> BiSet) -> ConceptCollection {
    ConceptCollection::from_concepts(u.clone(), c.iter().map(f)).unwrap()
}

use patternbase::algebra::Predicate;

/// A random predicate tree over the given universe sizes.
pub fn random_predicate(rng: &mut StdRng, n_attrs: usize, n_objs: usize, depth: u32) -> Predicate {
    let leaf = depth == 0 || rng.gen_bool(0.6);
    if leaf {
        let g = rng.gen_range(0..=6);
        return match rng.gen_range(0..10) {
            0 => Predicate::MinLength(g),
            1 => Predicate::MaxLength(g),
            2 => Predicate::MinFrequency(g),
            3 => Predicate::MaxFrequency(g),
            4 => Predicate::MinArea(g * 2),
            5 => Predicate::MaxArea(g * 2),
            6 => Predicate::HasAttr(rng.gen_range(0..n_attrs)),
            7 => Predicate::NotHasAttr(rng.gen_range(0..n_attrs)),
            8 => Predicate::HasObj(rng.gen_range(0..n_objs)),
            _ => Predicate::NotHasObj(rng.gen_range(0..n_objs)),
        };
    }
    let children = |rng: &mut StdRng| {
        (0..rng.gen_range(1..=3))
            .map(|_| random_predicate(rng, n_attrs, n_objs, depth - 1))
            .collect::<Vec<_>>()
    };
    match rng.gen_range(0..3) {
        0 => Predicate::And(children(rng)),
        1 => Predicate::Or(children(rng)),
        _ => Predicate::not(random_predicate(rng, n_attrs, n_objs, depth - 1)),
    }
}

/// A random predicate that commutes with projection onto `attrs`: built
/// from minimum frequency, object membership and membership of attributes
/// in `attrs`, possibly conjoined.
pub fn random_commuting_predicate(rng: &mut StdRng, attrs: &AttrSet, n_objs: usize) -> Predicate {
    let kept: Vec<usize> = attrs.iter().collect();
    let leaf = |rng: &mut StdRng| match rng.gen_range(0..3) {
        0 => Predicate::MinFrequency(rng.gen_range(0..=4)),
        1 => Predicate::HasObj(rng.gen_range(0..n_objs)),
        _ => match kept.choose(rng) {
            Some(&a) => Predicate::HasAttr(a),
            None => Predicate::MinFrequency(rng.gen_range(0..=4)),
        },
    };
    if rng.gen_bool(0.4) {
        let n = rng.gen_range(2..=3);
        Predicate::And((0..n).map(|_| leaf(rng)).collect())
    } else {
        leaf(rng)
    }
}

/// A random predicate the classifier recognises as anti-monotone.
pub fn random_anti_monotone(rng: &mut StdRng, n_attrs: usize, n_objs: usize) -> Predicate {
    let leaf = |rng: &mut StdRng| match rng.gen_range(0..4) {
        0 => Predicate::MaxLength(rng.gen_range(0..=n_attrs + 1)),
        1 => Predicate::MinFrequency(rng.gen_range(0..=n_objs)),
        2 => Predicate::HasObj(rng.gen_range(0..n_objs)),
        _ => Predicate::NotHasAttr(rng.gen_range(0..n_attrs)),
    };
    combine(rng, leaf)
}

/// A random predicate the classifier recognises as monotone.
pub fn random_monotone(rng: &mut StdRng, n_attrs: usize, n_objs: usize) -> Predicate {
    let leaf = |rng: &mut StdRng| match rng.gen_range(0..4) {
        0 => Predicate::MinLength(rng.gen_range(0..=n_attrs)),
        1 => Predicate::MaxFrequency(rng.gen_range(0..=n_objs + 1)),
        2 => Predicate::HasAttr(rng.gen_range(0..n_attrs)),
        _ => Predicate::NotHasObj(rng.gen_range(0..n_objs)),
    };
    combine(rng, leaf)
}

fn combine(rng: &mut StdRng, leaf: impl Fn(&mut StdRng) -> Predicate) -> Predicate {
    match rng.gen_range(0..4) {
        0 => Predicate::And(vec![leaf(rng), leaf(rng)]),
        1 => Predicate::Or(vec![leaf(rng), leaf(rng)]),
        _ => leaf(rng),
    }
}
