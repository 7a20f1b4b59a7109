//! Selection `σ_p` over a concept graph.
//!
//! Anti-monotone predicates select a down-set, so the graph is walked up
//! from `⊥` and never past a rejected concept. Monotone predicates are the
//! dual, walked down from `⊤`. Anything else is evaluated on every concept
//! and the Hasse diagram of the survivors is rebuilt. All three produce the
//! same graph: the selected concepts, their cover edges, and every
//! non-sentinel neighbour of a selected concept that was rejected or
//! already marked, as a marked vertex.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::lattice::{ConceptGraph, Node, VertexId, BOTTOM, TOP};

use super::predicate::{Monotonicity, Predicate};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Pick from the predicate's classification.
    Auto,
    /// Bottom-up pruned traversal; requires an anti-monotone predicate.
    AntiMonotone,
    /// Top-down pruned traversal; requires a monotone predicate.
    Monotone,
    /// Evaluate every concept.
    Full,
}

impl Strategy {
    pub fn resolve(self, p: &Predicate) -> Result<Strategy> {
        let class = p.classify();
        match self {
            Strategy::Auto => Ok(match class {
                Monotonicity::AntiMonotone | Monotonicity::Both => Strategy::AntiMonotone,
                Monotonicity::Monotone => Strategy::Monotone,
                Monotonicity::Neither => Strategy::Full,
            }),
            Strategy::AntiMonotone if !class.is_anti_monotone() => Err(Error::domain(
                "bottom-up selection needs an anti-monotone predicate",
            )),
            Strategy::Monotone if !class.is_monotone() => Err(Error::domain(
                "top-down selection needs a monotone predicate",
            )),
            s => Ok(s),
        }
    }
}

/// Result of a selection with traversal statistics.
#[derive(Clone, Debug)]
pub struct Selection {
    pub graph: ConceptGraph,
    /// The strategy actually run.
    pub strategy: Strategy,
    /// Distinct input concepts the predicate was evaluated on.
    pub visited: usize,
    /// Input vertices whose neighbourhood was expanded.
    pub explored: BTreeSet<VertexId>,
}

impl Selection {
    pub fn kept(&self) -> usize {
        self.graph.concept_count()
    }

    pub fn marked(&self) -> usize {
        self.graph.marked_count()
    }
}

pub fn select(g: &ConceptGraph, p: &Predicate) -> Result<ConceptGraph> {
    select_with(g, p, Strategy::Auto).map(|s| s.graph)
}

pub fn select_with(g: &ConceptGraph, p: &Predicate, strategy: Strategy) -> Result<Selection> {
    p.check_universe(g.universe())?;
    let strategy = strategy.resolve(p)?;
    let mut run = Run {
        input: g,
        predicate: p,
        output: ConceptGraph::sentinels_only(g.universe().clone()),
        mapped: HashMap::from([(BOTTOM, BOTTOM), (TOP, TOP)]),
        verdicts: HashMap::new(),
        explored: BTreeSet::new(),
    };
    match strategy {
        Strategy::AntiMonotone => run.explore(BOTTOM, Direction::Up),
        Strategy::Monotone => run.explore(TOP, Direction::Down),
        Strategy::Full => run.full(),
        Strategy::Auto => unreachable!("resolved above"),
    }
    Ok(Selection {
        visited: run.verdicts.len(),
        explored: run.explored,
        graph: run.output,
        strategy,
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Up,
    Down,
}

struct Run<'g> {
    input: &'g ConceptGraph,
    predicate: &'g Predicate,
    output: ConceptGraph,
    /// Input id to output id.
    mapped: HashMap<VertexId, VertexId>,
    verdicts: HashMap<VertexId, bool>,
    explored: BTreeSet<VertexId>,
}

impl Run<'_> {
    fn accepts(&mut self, id: VertexId) -> bool {
        if self.input.is_marked(id) {
            return false;
        }
        let (input, p) = (self.input, self.predicate);
        *self
            .verdicts
            .entry(id)
            .or_insert_with(|| match input.node(id) {
                Node::Concept(b) => p.evaluate(b),
                _ => false,
            })
    }

    fn vertex(&mut self, id: VertexId, marked: bool) -> VertexId {
        if let Some(&out) = self.mapped.get(&id) {
            return out;
        }
        let out = self.output.push_vertex(self.input.node(id).clone(), marked);
        self.mapped.insert(id, out);
        out
    }

    /// `explore` from the pruned traversal, parameterised by direction:
    /// `Up` follows successors from `⊥`, `Down` predecessors from `⊤`.
    fn explore(&mut self, v: VertexId, dir: Direction) {
        self.explored.insert(v);
        let input = self.input;
        let (start, end) = match dir {
            Direction::Up => (BOTTOM, TOP),
            Direction::Down => (TOP, BOTTOM),
        };
        let (behind, ahead): (Vec<VertexId>, Vec<VertexId>) = match dir {
            Direction::Up => (
                input.predecessors(v).collect(),
                input.successors(v).collect(),
            ),
            Direction::Down => (
                input.successors(v).collect(),
                input.predecessors(v).collect(),
            ),
        };
        let link = |run: &mut Self, a: VertexId, b: VertexId| match dir {
            Direction::Up => run.output.add_edge(a, b),
            Direction::Down => run.output.add_edge(b, a),
        };
        let here = self.mapped[&v];

        for x in behind {
            if input.is_marked(x) {
                let m = self.vertex(x, true);
                link(self, m, here);
            }
        }
        let mut link_to_end = true;
        for x in ahead {
            if x == end {
                continue;
            }
            if self.accepts(x) {
                link_to_end = false;
                if !self.explored.contains(&x) {
                    self.vertex(x, false);
                    self.explore(x, dir);
                }
                let there = self.mapped[&x];
                link(self, here, there);
            } else if v != start {
                let m = self.vertex(x, true);
                link(self, here, m);
            }
        }
        if link_to_end {
            link(self, here, end);
        }
    }

    fn full(&mut self) {
        let input = self.input;
        let accepted: Vec<VertexId> = input
            .unmarked_concepts()
            .map(|(id, _)| id)
            .filter(|&id| self.accepts(id))
            .collect();
        let survivors = accepted
            .iter()
            .map(|&id| input.node(id).concept().unwrap().clone());
        self.output = ConceptGraph::construct_from(input.universe().clone(), survivors)
            .expect("survivors are distinct, sorted by construct_from");
        for &id in &accepted {
            self.explored.insert(id);
            let b = input.node(id).concept().unwrap();
            self.mapped.insert(id, self.output.id_of(b).unwrap());
        }
        for &u in &accepted {
            let here = self.mapped[&u];
            for x in input.predecessors(u).collect::<Vec<_>>() {
                if x != BOTTOM && !self.accepts(x) {
                    let m = self.vertex(x, true);
                    self.output.add_edge(m, here);
                }
            }
            for x in input.successors(u).collect::<Vec<_>>() {
                if x != TOP && !self.accepts(x) {
                    let m = self.vertex(x, true);
                    self.output.add_edge(here, m);
                }
            }
        }
    }
}
