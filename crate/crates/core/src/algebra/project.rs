//! Projection `π_A` onto an attribute subset, and its object dual.
//!
//! Concepts are grouped by `X ∩ A`. Each group keeps only its least
//! element, projected to `(X ∩ A, Y)`. Least elements are found in one
//! pass in topological order: a concept with no predecessor in its own
//! group is the least element, unless a marked predecessor sits in the
//! group, in which case the real least element lies outside the collection
//! and the whole group is dropped (`le = NIL`). Other members inherit the
//! least element of their same-group predecessors.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::dataset::{AttrSet, BiSet, ObjSet};
use crate::error::{Error, Result};
use crate::lattice::{transitive_reduction, ConceptGraph, VertexId, BOTTOM, TOP};

/// Counters describing what a projection did.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProjectionReport {
    /// Input concepts whose least element is missing.
    pub nil_vertices: usize,
    /// Members whose least element projects onto a sentinel.
    pub absorbed: usize,
    pub self_loops_dropped: usize,
    pub duplicate_edges_dropped: usize,
    /// Input edges with an endpoint in a NIL group.
    pub nil_edges_skipped: usize,
    /// Mapped edges whose endpoints are not ordered.
    pub inconsistent_edges_dropped: usize,
    /// Order pairs missing from the mapped edges, added before reduction.
    pub order_edges_added: usize,
    /// Distinct edges after mapping, before reduction.
    pub mapped_edges: usize,
    /// Edges removed by transitive reduction.
    pub reduced_edges: usize,
    /// Members whose only predecessor is `⊥`: nothing in the graph shows
    /// whether a smaller concept of their group is missing.
    pub unverified_roots: usize,
    /// Set when the input was not declared complete and some least element
    /// could not be verified.
    pub possibly_unsound: bool,
}

#[derive(Clone, Debug)]
pub struct Projection {
    pub graph: ConceptGraph,
    pub report: ProjectionReport,
}

pub fn project_attrs(g: &ConceptGraph, attrs: &AttrSet) -> Result<ConceptGraph> {
    project_attrs_with(g, attrs, true).map(|p| p.graph)
}

/// Project onto `attrs`. `complete` declares that `g` holds a whole
/// lattice, which rules out least elements missing without a mark.
pub fn project_attrs_with(g: &ConceptGraph, attrs: &AttrSet, complete: bool) -> Result<Projection> {
    g.universe().check_attrs(attrs)?;
    g.check_integrity()
        .into_result()
        .map_err(|e| Error::domain(format!("cannot project an invalid graph: {e}")))?;
    Ok(Projector::new(g, attrs).run(complete))
}

pub fn project_objs(g: &ConceptGraph, objs: &ObjSet) -> Result<ConceptGraph> {
    project_objs_with(g, objs, true).map(|p| p.graph)
}

/// The dual of [`project_attrs_with`], computed on the transposed graph.
pub fn project_objs_with(g: &ConceptGraph, objs: &ObjSet, complete: bool) -> Result<Projection> {
    g.universe().check_objs(objs)?;
    let p = project_attrs_with(&g.transpose(), objs, complete)?;
    Ok(Projection {
        graph: p.graph.transpose(),
        report: p.report,
    })
}

struct Projector<'g> {
    g: &'g ConceptGraph,
    attrs: &'g AttrSet,
}

impl<'g> Projector<'g> {
    fn new(g: &'g ConceptGraph, attrs: &'g AttrSet) -> Self {
        Projector { g, attrs }
    }

    fn concept(&self, id: VertexId) -> &'g BiSet {
        self.g.node(id).concept().expect("concept vertex")
    }

    fn class(&self, id: VertexId) -> AttrSet {
        self.concept(id).attrs.intersection(self.attrs)
    }

    fn project(&self, id: VertexId) -> BiSet {
        let b = self.concept(id);
        BiSet::new(b.attrs.intersection(self.attrs), b.objs.clone())
    }

    fn is_member(&self, id: VertexId) -> bool {
        id != BOTTOM && id != TOP && !self.g.is_marked(id)
    }

    fn run(&self, complete: bool) -> Projection {
        let g = self.g;
        let mut report = ProjectionReport::default();

        // Least element of every member's group; `None` is NIL and `⊥`
        // stands for the group of `∅`, whose least element is `⊥` itself
        // when no attribute is shared by every object.
        let mut le: HashMap<VertexId, Option<VertexId>> = HashMap::new();
        let mut roots = Vec::new();
        for v in g.canonical_order() {
            if !self.is_member(v) {
                continue;
            }
            let class = self.class(v);
            let mut inherited = BTreeSet::new();
            let mut marked_in_class = false;
            let mut below_bottom = false;
            for u in g.predecessors(v) {
                if u == BOTTOM {
                    below_bottom = class.is_empty();
                } else if self.class(u) == class {
                    if g.is_marked(u) {
                        marked_in_class = true;
                    } else {
                        inherited.insert(le[&u]);
                    }
                }
            }
            if g.predecessors(v).all(|u| u == BOTTOM) {
                report.unverified_roots += 1;
            }
            let target = if !inherited.is_empty() {
                // Disagreeing predecessors leave the least element unknown.
                match inherited.len() {
                    1 => inherited.pop_first().unwrap(),
                    _ => None,
                }
            } else if marked_in_class {
                None
            } else if below_bottom {
                report.absorbed += 1;
                Some(BOTTOM)
            } else {
                roots.push(v);
                Some(v)
            };
            if target.is_none() {
                report.nil_vertices += 1;
            }
            le.insert(v, target);
        }

        // Emitted least elements, in canonical order of their projections.
        let mut emitted: BTreeMap<BiSet, VertexId> = BTreeMap::new();
        for &r in &roots {
            let p = self.project(r);
            if p.has_empty_side() {
                report.absorbed += 1;
            } else {
                emitted.insert(p, r);
            }
        }
        report.possibly_unsound = !complete && report.unverified_roots > 0;

        let index: HashMap<VertexId, usize> =
            emitted.values().enumerate().map(|(i, &r)| (r, i)).collect();
        let projected: Vec<&BiSet> = emitted.keys().collect();

        let mut edges = BTreeSet::new();
        for (u, v) in g.edges() {
            if !self.is_member(u) || !self.is_member(v) {
                continue;
            }
            let (Some(lu), Some(lv)) = (le[&u], le[&v]) else {
                report.nil_edges_skipped += 1;
                continue;
            };
            if lu == lv {
                report.self_loops_dropped += 1;
                continue;
            }
            let (Some(&i), Some(&j)) = (index.get(&lu), index.get(&lv)) else {
                // An absorbed endpoint maps onto a sentinel.
                continue;
            };
            if !projected[i].strictly_precedes(projected[j]) {
                report.inconsistent_edges_dropped += 1;
                continue;
            }
            if !edges.insert((i, j)) {
                report.duplicate_edges_dropped += 1;
            }
        }
        report.mapped_edges = edges.len();

        // Pairs the mapped edges fail to connect. None arise on a full
        // lattice; on partial input they keep the result a valid diagram.
        let n = projected.len();
        let order: Vec<usize> = (0..n).collect();
        let reach = reachability(n, &edges, &order);
        for i in 0..n {
            for j in 0..n {
                if projected[i].strictly_precedes(projected[j]) && !reach[i].contains(&j) {
                    edges.insert((i, j));
                    report.order_edges_added += 1;
                }
            }
        }
        let reduced = transitive_reduction(n, &edges, &order);
        report.reduced_edges = edges.len() - reduced.len();

        let mut out = ConceptGraph::sentinels_only(g.universe().clone());
        let ids: Vec<VertexId> = projected
            .iter()
            .map(|b| out.push_vertex(crate::lattice::Node::Concept((*b).clone()), false))
            .collect();
        let mut has_pred = vec![false; n];
        let mut has_succ = vec![false; n];
        for &(i, j) in &reduced {
            out.add_edge(ids[i], ids[j]);
            has_succ[i] = true;
            has_pred[j] = true;
        }
        for i in 0..n {
            if !has_pred[i] {
                out.add_edge(BOTTOM, ids[i]);
            }
            if !has_succ[i] {
                out.add_edge(ids[i], TOP);
            }
        }
        if n == 0 {
            out.add_edge(BOTTOM, TOP);
        }

        // Marked predecessors of least elements carry over as marks.
        let mut marks = BTreeSet::new();
        for &r in emitted.values() {
            for u in g.predecessors(r).filter(|&u| g.is_marked(u)) {
                let m = self.project(u);
                if !m.has_empty_side() && out.id_of(&m).is_none() {
                    marks.insert(m);
                }
            }
        }
        for m in marks {
            let (below, above) = out.boundary_neighbors(&m);
            if !below.is_empty() || !above.is_empty() {
                out.insert_marked_vertex(m, &below, &above);
            }
        }

        Projection { graph: out, report }
    }
}

/// `reach[i]`: vertices reachable from `i` by a non-empty path.
fn reachability(
    n: usize,
    edges: &BTreeSet<(usize, usize)>,
    order: &[usize],
) -> Vec<BTreeSet<usize>> {
    let mut reach = vec![BTreeSet::new(); n];
    for &u in order.iter().rev() {
        let mut r = BTreeSet::new();
        for &(_, v) in edges.range((u, 0)..(u + 1, 0)) {
            r.insert(v);
            r.extend(reach[v].iter().copied());
        }
        reach[u] = r;
    }
    reach
}
