//! The Hasse diagram of a concept collection.
//!
//! Vertices carry their full bi-set; edge labels are derived on demand.
//! Two sentinel vertices, [`BOTTOM`] and [`TOP`], sit below and above every
//! concept. Marked vertices hold concepts just outside the collection: they
//! are linked only to the collection members they cover or are covered by,
//! never to a sentinel.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::bitset::BitSet;
use crate::dataset::{AttrSet, BiSet, ObjSet, Universe};
use crate::error::{Error, Result};
use crate::oracle::ConceptCollection;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VertexId(pub(crate) usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

pub const BOTTOM: VertexId = VertexId(0);
pub const TOP: VertexId = VertexId(1);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Bottom,
    Top,
    Concept(BiSet),
}

impl Node {
    pub fn concept(&self) -> Option<&BiSet> {
        match self {
            Node::Concept(b) => Some(b),
            _ => None,
        }
    }

    /// The concept order extended with `⊥ ⪯ c ⪯ ⊤`.
    pub fn precedes(&self, other: &Node) -> bool {
        match (self, other) {
            (Node::Bottom, _) | (_, Node::Top) => true,
            (_, Node::Bottom) | (Node::Top, _) => false,
            (Node::Concept(a), Node::Concept(b)) => a.precedes(b),
        }
    }

    fn transpose(&self) -> Node {
        match self {
            Node::Bottom => Node::Top,
            Node::Top => Node::Bottom,
            Node::Concept(b) => Node::Concept(b.transpose()),
        }
    }
}

#[derive(Clone, Debug)]
struct Vertex {
    node: Node,
    marked: bool,
    succ: BTreeSet<VertexId>,
    pred: BTreeSet<VertexId>,
}

impl Vertex {
    fn new(node: Node, marked: bool) -> Self {
        Vertex {
            node,
            marked,
            succ: BTreeSet::new(),
            pred: BTreeSet::new(),
        }
    }
}

/// Label of an edge `(X,Y) → (X',Y')`: the sets `X'∖X` and `Y∖Y'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabel {
    pub added_attrs: AttrSet,
    pub removed_objs: ObjSet,
}

#[derive(Clone)]
pub struct ConceptGraph {
    universe: Universe,
    vertices: Vec<Vertex>,
    index: HashMap<BiSet, VertexId>,
    /// Largest `|X|` among unmarked concepts, for the insertion-order contract.
    max_attr_len: Option<usize>,
}

impl ConceptGraph {
    /// The graph of the empty collection: `⊥ → ⊤`.
    pub fn new(universe: Universe) -> Self {
        let mut g = Self::sentinels_only(universe);
        g.add_edge(BOTTOM, TOP);
        g
    }

    pub(crate) fn sentinels_only(universe: Universe) -> Self {
        ConceptGraph {
            universe,
            vertices: vec![
                Vertex::new(Node::Bottom, false),
                Vertex::new(Node::Top, false),
            ],
            index: HashMap::new(),
            max_attr_len: None,
        }
    }

    /// Build the graph of `coll`, inserting concepts by increasing `|X|`.
    pub fn construct(coll: &ConceptCollection) -> Result<Self> {
        // A collection iterates in canonical order already.
        Self::construct_from(coll.universe().clone(), coll.iter().cloned())
    }

    /// Like [`construct`](Self::construct) but from any sequence of
    /// bi-sets; duplicates are an error.
    pub fn construct_from<I>(universe: Universe, concepts: I) -> Result<Self>
    where
        I: IntoIterator<Item = BiSet>,
    {
        let mut sorted: Vec<BiSet> = concepts.into_iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::domain(format!(
                "duplicate concept {}",
                universe.render(&w[0])
            )));
        }
        let mut g = ConceptGraph::new(universe);
        for c in sorted {
            g.insert_concept(c)?;
        }
        Ok(g)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Insert a concept that no unmarked concept of the graph exceeds.
    ///
    /// Walks down from `⊤` through the unmarked vertices that are not below
    /// `c`; every vertex below `c` whose successors are all not below `c` is
    /// covered by it. Marked vertices are ignored.
    pub fn insert_concept(&mut self, c: BiSet) -> Result<VertexId> {
        if !self.universe.contains(&c) {
            return Err(Error::domain(format!(
                "{c:?} is outside the graph's universe"
            )));
        }
        if self.index.contains_key(&c) {
            return Err(Error::domain(format!(
                "duplicate concept {}",
                self.universe.render(&c)
            )));
        }
        let len = c.attrs.len();
        match self.max_attr_len {
            Some(max) if max > len => {
                return Err(Error::Contract(format!(
                    "{} has |X| = {len} after a concept with |X| = {max}",
                    self.universe.render(&c)
                )))
            }
            Some(max) if max == len => {
                if let Some(above) = self
                    .unmarked_concepts()
                    .find(|(_, b)| b.attrs == c.attrs && c.precedes(b))
                {
                    return Err(Error::Contract(format!(
                        "{} precedes the already inserted {}",
                        self.universe.render(&c),
                        self.universe.render(above.1)
                    )));
                }
            }
            _ => {}
        }
        self.max_attr_len = Some(len);

        let node = Node::Concept(c);
        let b = self.push_vertex(node.clone(), false);
        let mut explored = BitSet::new();
        for x in self.predecessors(TOP).collect::<Vec<_>>() {
            if self.is_marked(x) {
                continue;
            }
            if self.node(x).precedes(&node) {
                self.remove_edge(x, TOP);
                self.add_edge(x, b);
            } else {
                self.rec_insert(b, x, &mut explored);
            }
        }
        self.add_edge(b, TOP);
        Ok(b)
    }

    fn rec_insert(&mut self, b: VertexId, v: VertexId, explored: &mut BitSet) {
        for x in self.predecessors(v).collect::<Vec<_>>() {
            if self.is_marked(x) || !explored.insert(x.0) {
                continue;
            }
            let node = &self.vertices[b.0].node;
            if self.node(x).precedes(node) {
                let shadowed = self.vertices[x.0]
                    .succ
                    .iter()
                    .any(|&y| y != b && !self.is_marked(y) && self.node(y).precedes(node));
                if !shadowed {
                    self.add_edge(x, b);
                }
            } else {
                self.rec_insert(b, x, explored);
            }
        }
    }

    /// Attach concepts just outside the collection as marked vertices,
    /// linked to the unmarked concepts they cover or are covered by.
    pub fn add_marked_boundary<'a, I>(&mut self, boundary: I) -> Result<()>
    where
        I: IntoIterator<Item = &'a BiSet>,
    {
        let mut plans = Vec::new();
        let mut seen = BTreeSet::new();
        for m in boundary {
            if !self.universe.contains(m) {
                return Err(Error::domain(format!(
                    "{m:?} is outside the graph's universe"
                )));
            }
            match self.index.get(m) {
                Some(&id) if !self.is_marked(id) => {
                    return Err(Error::domain(format!(
                        "boundary concept {} is already in the collection",
                        self.universe.render(m)
                    )))
                }
                Some(_) => continue,
                None => {}
            }
            if !seen.insert(m.clone()) {
                continue;
            }
            let (below, above) = self.boundary_neighbors(m);
            if below.is_empty() && above.is_empty() {
                return Err(Error::domain(format!(
                    "boundary concept {} is adjacent to no concept of the collection",
                    self.universe.render(m)
                )));
            }
            plans.push((m.clone(), below, above));
        }
        for (m, below, above) in plans {
            self.insert_marked_vertex(m, &below, &above);
        }
        Ok(())
    }

    /// Unmarked concepts covered by `m` and covering `m`, with covers taken
    /// within the unmarked set plus `m`.
    pub(crate) fn boundary_neighbors(&self, m: &BiSet) -> (Vec<VertexId>, Vec<VertexId>) {
        let lower: Vec<(VertexId, &BiSet)> = self
            .unmarked_concepts()
            .filter(|(_, b)| b.strictly_precedes(m))
            .collect();
        let upper: Vec<(VertexId, &BiSet)> = self
            .unmarked_concepts()
            .filter(|(_, b)| m.strictly_precedes(b))
            .collect();
        let below = lower
            .iter()
            .filter(|(_, u)| !lower.iter().any(|(_, w)| u.strictly_precedes(w)))
            .map(|(id, _)| *id)
            .collect();
        let above = upper
            .iter()
            .filter(|(_, v)| !upper.iter().any(|(_, w)| w.strictly_precedes(v)))
            .map(|(id, _)| *id)
            .collect();
        (below, above)
    }

    pub(crate) fn insert_marked_vertex(
        &mut self,
        m: BiSet,
        below: &[VertexId],
        above: &[VertexId],
    ) -> VertexId {
        let id = match self.index.get(&m) {
            Some(&id) => id,
            None => self.push_vertex(Node::Concept(m), true),
        };
        for &u in below {
            self.add_edge(u, id);
        }
        for &v in above {
            self.add_edge(id, v);
        }
        id
    }

    pub(crate) fn push_vertex(&mut self, node: Node, marked: bool) -> VertexId {
        let id = VertexId(self.vertices.len());
        if let Node::Concept(b) = &node {
            self.index.insert(b.clone(), id);
            if !marked {
                let len = b.attrs.len();
                self.max_attr_len = Some(self.max_attr_len.map_or(len, |m| m.max(len)));
            }
        }
        self.vertices.push(Vertex::new(node, marked));
        id
    }

    pub(crate) fn add_edge(&mut self, u: VertexId, v: VertexId) {
        self.vertices[u.0].succ.insert(v);
        self.vertices[v.0].pred.insert(u);
    }

    pub(crate) fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        self.vertices[u.0].succ.remove(&v);
        self.vertices[v.0].pred.remove(&u);
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|v| v.succ.len()).sum()
    }

    pub fn marked_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.marked).count()
    }

    /// Number of unmarked, non-sentinel vertices.
    pub fn concept_count(&self) -> usize {
        self.unmarked_concepts().count()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn node(&self, id: VertexId) -> &Node {
        &self.vertices[id.0].node
    }

    pub fn is_marked(&self, id: VertexId) -> bool {
        self.vertices[id.0].marked
    }

    pub fn id_of(&self, b: &BiSet) -> Option<VertexId> {
        self.index.get(b).copied()
    }

    pub fn successors(&self, id: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices[id.0].succ.iter().copied()
    }

    pub fn predecessors(&self, id: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices[id.0].pred.iter().copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.vertices[u.0].succ.contains(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertex_ids()
            .flat_map(move |u| self.successors(u).map(move |v| (u, v)))
    }

    /// Unmarked non-sentinel vertices with their bi-sets.
    pub fn unmarked_concepts(&self) -> impl Iterator<Item = (VertexId, &BiSet)> + '_ {
        self.vertices
            .iter()
            .enumerate()
            .filter_map(|(i, v)| match &v.node {
                Node::Concept(b) if !v.marked => Some((VertexId(i), b)),
                _ => None,
            })
    }

    pub fn marked_concepts(&self) -> impl Iterator<Item = (VertexId, &BiSet)> + '_ {
        self.vertices
            .iter()
            .enumerate()
            .filter_map(|(i, v)| match &v.node {
                Node::Concept(b) if v.marked => Some((VertexId(i), b)),
                _ => None,
            })
    }

    /// The stored collection: unmarked, non-sentinel concepts.
    pub fn concepts(&self) -> ConceptCollection {
        ConceptCollection::from_concepts(
            self.universe.clone(),
            self.unmarked_concepts().map(|(_, b)| b.clone()),
        )
        .expect("graph vertices lie in the graph's universe")
    }

    pub fn marked(&self) -> ConceptCollection {
        ConceptCollection::from_concepts(
            self.universe.clone(),
            self.marked_concepts().map(|(_, b)| b.clone()),
        )
        .expect("graph vertices lie in the graph's universe")
    }

    /// Label of the edge `u → v`, looked up by the endpoint concepts.
    pub fn edge_label(&self, u: &BiSet, v: &BiSet) -> Result<EdgeLabel> {
        let (Some(iu), Some(iv)) = (self.id_of(u), self.id_of(v)) else {
            return Err(Error::domain("edge endpoint is not a vertex of the graph"));
        };
        self.edge_label_by_id(iu, iv)
    }

    pub fn edge_label_by_id(&self, u: VertexId, v: VertexId) -> Result<EdgeLabel> {
        let (Some(bu), Some(bv)) = (self.node(u).concept(), self.node(v).concept()) else {
            return Err(Error::domain(
                "edge labels are undefined on sentinel endpoints",
            ));
        };
        if !self.has_edge(u, v) {
            return Err(Error::domain(format!(
                "no edge {} → {}",
                self.universe.render(bu),
                self.universe.render(bv)
            )));
        }
        Ok(EdgeLabel {
            added_attrs: bv.attrs.difference(&bu.attrs),
            removed_objs: bu.objs.difference(&bv.objs),
        })
    }

    /// Swap attributes and objects. The concept order reverses, so every
    /// edge flips and the sentinels trade places.
    pub fn transpose(&self) -> ConceptGraph {
        let swap = |id: VertexId| match id {
            BOTTOM => TOP,
            TOP => BOTTOM,
            other => other,
        };
        let mut vertices: Vec<Vertex> = Vec::with_capacity(self.vertices.len());
        for i in 0..self.vertices.len() {
            let v = &self.vertices[swap(VertexId(i)).0];
            vertices.push(Vertex {
                node: v.node.transpose(),
                marked: v.marked,
                succ: v.pred.iter().map(|&p| swap(p)).collect(),
                pred: v.succ.iter().map(|&s| swap(s)).collect(),
            });
        }
        let index = self
            .index
            .iter()
            .map(|(b, &id)| (b.transpose(), id))
            .collect();
        let mut g = ConceptGraph {
            universe: self.universe.transpose(),
            vertices,
            index,
            max_attr_len: None,
        };
        g.max_attr_len = g.unmarked_concepts().map(|(_, b)| b.attrs.len()).max();
        g
    }

    /// Vertex ids in canonical order: `⊥`, `⊤`, then concepts (marked or
    /// not) by the canonical bi-set order.
    pub fn canonical_order(&self) -> Vec<VertexId> {
        let mut concepts: Vec<(VertexId, &BiSet)> = self
            .vertices
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.node.concept().map(|b| (VertexId(i), b)))
            .collect();
        concepts.sort_by(|a, b| a.1.cmp(b.1));
        [BOTTOM, TOP]
            .into_iter()
            .chain(concepts.into_iter().map(|(id, _)| id))
            .collect()
    }

    /// Vertices as `(node, marked)` pairs, independent of ids.
    pub fn vertex_set(&self) -> BTreeSet<(Node, bool)> {
        self.vertices
            .iter()
            .map(|v| (v.node.clone(), v.marked))
            .collect()
    }

    /// Edges as node pairs, independent of ids.
    pub fn edge_set(&self) -> BTreeSet<(Node, Node)> {
        self.edges()
            .map(|(u, v)| (self.node(u).clone(), self.node(v).clone()))
            .collect()
    }

    /// Edges between unmarked concepts, sentinels excluded.
    pub fn concept_edges(&self) -> BTreeSet<(BiSet, BiSet)> {
        self.edges()
            .filter(|&(u, v)| !self.is_marked(u) && !self.is_marked(v))
            .filter_map(|(u, v)| {
                Some((
                    self.node(u).concept()?.clone(),
                    self.node(v).concept()?.clone(),
                ))
            })
            .collect()
    }

    /// Verify every structural invariant by brute force.
    pub fn check_integrity(&self) -> IntegrityReport {
        let mut report = IntegrityReport::default();
        let r = |b: &BiSet| self.universe.render(b);
        let name = |id: VertexId| match self.node(id) {
            Node::Bottom => "⊥".to_owned(),
            Node::Top => "⊤".to_owned(),
            Node::Concept(b) => r(b),
        };

        if self.vertices.len() < 2
            || self.vertices[BOTTOM.0].node != Node::Bottom
            || self.vertices[TOP.0].node != Node::Top
        {
            report.push("sentinels missing from ids 0 and 1");
            return report;
        }
        for id in self.vertex_ids().skip(2) {
            if self.node(id).concept().is_none() {
                report.push(format!("extra sentinel at id {}", id.0));
            }
        }
        for s in [BOTTOM, TOP] {
            if self.is_marked(s) {
                report.push(format!("sentinel {} is marked", name(s)));
            }
        }
        if self.predecessors(BOTTOM).next().is_some() {
            report.push("⊥ has predecessors");
        }
        if self.successors(TOP).next().is_some() {
            report.push("⊤ has successors");
        }

        let mut seen = HashMap::new();
        for id in self.vertex_ids() {
            if let Node::Concept(b) = self.node(id) {
                if !self.universe.contains(b) {
                    report.push(format!("{b:?} lies outside the universe"));
                }
                if let Some(prev) = seen.insert(b.clone(), id) {
                    report.push(format!(
                        "duplicate vertex {} (ids {} and {})",
                        r(b),
                        prev.0,
                        id.0
                    ));
                }
                if self.index.get(b) != Some(&id) {
                    report.push(format!("index out of sync for {}", r(b)));
                }
            }
            for v in self.successors(id) {
                if v == id {
                    report.push(format!("self-loop on {}", name(id)));
                }
                if !self.vertices[v.0].pred.contains(&id) {
                    report.push(format!(
                        "adjacency out of sync on {} → {}",
                        name(id),
                        name(v)
                    ));
                }
            }
            for u in self.predecessors(id) {
                if !self.vertices[u.0].succ.contains(&id) {
                    report.push(format!(
                        "adjacency out of sync on {} → {}",
                        name(u),
                        name(id)
                    ));
                }
            }
        }

        // Hasse condition over the unmarked concepts.
        let unmarked: Vec<(VertexId, &BiSet)> = self.unmarked_concepts().collect();
        let mut has_lower = vec![false; self.vertices.len()];
        let mut has_upper = vec![false; self.vertices.len()];
        for &(u, bu) in &unmarked {
            for &(v, bv) in &unmarked {
                if !bu.strictly_precedes(bv) {
                    if self.has_edge(u, v) {
                        report.push(format!("edge {} → {} goes against the order", r(bu), r(bv)));
                    }
                    continue;
                }
                has_upper[u.0] = true;
                has_lower[v.0] = true;
                let covers = !unmarked
                    .iter()
                    .any(|(_, w)| bu.strictly_precedes(w) && w.strictly_precedes(bv));
                match (covers, self.has_edge(u, v)) {
                    (true, false) => {
                        report.push(format!("missing cover edge {} → {}", r(bu), r(bv)))
                    }
                    (false, true) => {
                        report.push(format!("edge {} → {} is not a cover", r(bu), r(bv)))
                    }
                    _ => {}
                }
            }
        }
        for &(u, bu) in &unmarked {
            if has_lower[u.0] != !self.has_edge(BOTTOM, u) {
                report.push(if has_lower[u.0] {
                    format!("⊥ → {} skips a lower concept", r(bu))
                } else {
                    format!("minimal concept {} not linked from ⊥", r(bu))
                });
            }
            if has_upper[u.0] != !self.has_edge(u, TOP) {
                report.push(if has_upper[u.0] {
                    format!("{} → ⊤ skips an upper concept", r(bu))
                } else {
                    format!("maximal concept {} not linked to ⊤", r(bu))
                });
            }
        }
        if unmarked.is_empty() != self.has_edge(BOTTOM, TOP) {
            report.push(if unmarked.is_empty() {
                "empty collection without ⊥ → ⊤"
            } else {
                "⊥ → ⊤ alongside concepts"
            });
        }

        for (m, bm) in self.marked_concepts() {
            if self.has_edge(BOTTOM, m) || self.has_edge(m, TOP) {
                report.push(format!("marked {} is linked to a sentinel", r(bm)));
            }
            let mut adjacent = false;
            for v in self.successors(m) {
                if let Some(bv) = self.node(v).concept() {
                    adjacent |= self.check_marked_edge(&mut report, bm, v, bv, false, &unmarked);
                }
            }
            for u in self.predecessors(m) {
                if let Some(bu) = self.node(u).concept() {
                    adjacent |= self.check_marked_edge(&mut report, bm, u, bu, true, &unmarked);
                }
            }
            if !adjacent {
                report.push(format!(
                    "marked {} is adjacent to no concept of the collection",
                    r(bm)
                ));
            }
        }

        if !self.is_acyclic() {
            report.push("graph has a cycle");
        }
        report
    }

    /// Returns true when the edge links `m` to an unmarked concept.
    fn check_marked_edge(
        &self,
        report: &mut IntegrityReport,
        m: &BiSet,
        other: VertexId,
        bo: &BiSet,
        other_is_lower: bool,
        unmarked: &[(VertexId, &BiSet)],
    ) -> bool {
        let r = |b: &BiSet| self.universe.render(b);
        if self.is_marked(other) {
            report.push(format!("edge between marked {} and marked {}", r(m), r(bo)));
            return false;
        }
        let (lo, hi) = if other_is_lower { (bo, m) } else { (m, bo) };
        if !lo.strictly_precedes(hi) {
            report.push(format!("edge {} → {} goes against the order", r(lo), r(hi)));
        } else if unmarked
            .iter()
            .any(|(_, w)| lo.strictly_precedes(w) && w.strictly_precedes(hi))
        {
            report.push(format!("marked edge {} → {} is not a cover", r(lo), r(hi)));
        }
        true
    }

    fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = self.vertices.iter().map(|v| v.pred.len()).collect();
        let mut stack: Vec<usize> = (0..indeg.len()).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(u) = stack.pop() {
            seen += 1;
            for v in &self.vertices[u].succ {
                indeg[v.0] -= 1;
                if indeg[v.0] == 0 {
                    stack.push(v.0);
                }
            }
        }
        seen == self.vertices.len()
    }
}

impl PartialEq for ConceptGraph {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self.vertex_set() == other.vertex_set()
            && self.edge_set() == other.edge_set()
    }
}

impl Eq for ConceptGraph {}

impl fmt::Debug for ConceptGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |id: VertexId| match self.node(id) {
            Node::Bottom => "⊥".to_owned(),
            Node::Top => "⊤".to_owned(),
            Node::Concept(b) if self.is_marked(id) => format!("*{}", self.universe.render(b)),
            Node::Concept(b) => self.universe.render(b),
        };
        let order = self.canonical_order();
        let mut edges: Vec<(String, String)> =
            self.edges().map(|(u, v)| (name(u), name(v))).collect();
        edges.sort();
        f.debug_struct("ConceptGraph")
            .field(
                "vertices",
                &order.iter().map(|&id| name(id)).collect::<Vec<_>>(),
            )
            .field("edges", &edges)
            .finish()
    }
}

/// Outcome of [`ConceptGraph::check_integrity`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntegrityReport {
    pub violations: Vec<String>,
}

impl IntegrityReport {
    fn push(&mut self, v: impl Into<String>) {
        self.violations.push(v.into());
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::Integrity(self.violations.join("; ")))
        }
    }
}

/// Transitive reduction of a DAG on `0..n`. `order` must list the vertices
/// in a topological order of `edges`.
pub(crate) fn transitive_reduction(
    n: usize,
    edges: &BTreeSet<(usize, usize)>,
    order: &[usize],
) -> BTreeSet<(usize, usize)> {
    let mut succ = vec![Vec::new(); n];
    for &(u, v) in edges {
        succ[u].push(v);
    }
    // reach[u]: vertices reachable from u by a path of length >= 1.
    let mut reach = vec![BitSet::new(); n];
    for &u in order.iter().rev() {
        let mut r = BitSet::new();
        for &v in &succ[u] {
            r.insert(v);
            r.union_with(&reach[v]);
        }
        reach[u] = r;
    }
    edges
        .iter()
        .copied()
        .filter(|&(u, v)| !succ[u].iter().any(|&w| w != v && reach[w].contains(v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_db;
    use crate::oracle::{cover_relation, enumerate_concepts};

    fn bs(u: &Universe, a: &str, o: &str) -> BiSet {
        let split = |s: &str| s.chars().map(String::from).collect::<Vec<_>>();
        u.biset(split(a), split(o)).unwrap()
    }

    fn example_graph() -> ConceptGraph {
        ConceptGraph::construct(&enumerate_concepts(&example_db()).unwrap()).unwrap()
    }

    #[test]
    fn empty_graph() {
        let g = ConceptGraph::new(example_db().universe().clone());
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        assert!(g.has_edge(BOTTOM, TOP));
        assert!(g.concepts().is_empty());
        assert!(g.check_integrity().is_ok());
    }

    #[test]
    fn first_insertions_move_sentinel_edges() {
        let u = example_db().universe().clone();
        let mut g = ConceptGraph::new(u.clone());
        let d = g.insert_concept(bs(&u, "D", "12345")).unwrap();
        assert!(!g.has_edge(BOTTOM, TOP));
        assert!(g.has_edge(BOTTOM, d) && g.has_edge(d, TOP));
        let abd = g.insert_concept(bs(&u, "ABD", "1234")).unwrap();
        assert!(g.has_edge(d, abd) && g.has_edge(abd, TOP));
        assert!(!g.has_edge(d, TOP));
        assert!(g.check_integrity().is_ok());
    }

    #[test]
    fn example_graph_matches_cover_relation() {
        let g = example_graph();
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(g.edge_count(), 16);
        let all = enumerate_concepts(&example_db()).unwrap();
        assert_eq!(g.concept_edges(), cover_relation(all.iter()));
        assert_eq!(g.concepts(), all);
        assert!(g.check_integrity().is_ok());
    }

    #[test]
    fn construct_edge_cases() {
        let u = example_db().universe().clone();
        let empty = ConceptGraph::construct(&ConceptCollection::new(u.clone())).unwrap();
        assert_eq!(empty, ConceptGraph::new(u.clone()));
        let c = bs(&u, "DE", "135");
        let single = ConceptGraph::construct_from(u.clone(), [c.clone()]).unwrap();
        let id = single.id_of(&c).unwrap();
        assert!(single.has_edge(BOTTOM, id) && single.has_edge(id, TOP));
        assert_eq!(single.edge_count(), 2);
        assert!(matches!(
            ConceptGraph::construct_from(u.clone(), [c.clone(), c]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn insertion_contract() {
        let u = example_db().universe().clone();
        let mut g = ConceptGraph::new(u.clone());
        g.insert_concept(bs(&u, "ABD", "1234")).unwrap();
        assert!(matches!(
            g.insert_concept(bs(&u, "D", "12345")),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            g.insert_concept(bs(&u, "ABD", "1234")),
            Err(Error::Domain(_))
        ));
        // Same X with a smaller Y would sit above the existing vertex: fine.
        g.insert_concept(bs(&u, "ABD", "12")).unwrap();
        // Same X with a larger Y would sit below it: refused.
        assert!(matches!(
            g.insert_concept(bs(&u, "ABD", "12345")),
            Err(Error::Contract(_))
        ));
        assert!(g.check_integrity().is_ok());
    }

    #[test]
    fn marked_boundary() {
        let u = example_db().universe().clone();
        let all = enumerate_concepts(&example_db()).unwrap();
        let d = bs(&u, "D", "12345");
        let rest: Vec<BiSet> = all.iter().filter(|b| **b != d).cloned().collect();
        let mut g = ConceptGraph::construct_from(u.clone(), rest).unwrap();
        let before = g.concepts();
        g.add_marked_boundary([&d]).unwrap();
        let m = g.id_of(&d).unwrap();
        assert!(g.is_marked(m));
        let above: BTreeSet<String> = g
            .successors(m)
            .map(|v| u.render(g.node(v).concept().unwrap()))
            .collect();
        assert_eq!(
            above,
            ["(ABD,1234)", "(CD,25)", "(DE,135)"]
                .map(String::from)
                .into()
        );
        assert!(!g.has_edge(BOTTOM, m));
        assert_eq!(g.concepts(), before);
        assert!(g.check_integrity().is_ok(), "{:?}", g.check_integrity());

        let mut same = g.clone();
        same.add_marked_boundary(std::iter::empty()).unwrap();
        assert_eq!(same, g);

        let abd = bs(&u, "ABD", "1234");
        assert!(matches!(
            g.add_marked_boundary([&abd]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn marked_boundary_two_element() {
        let u = example_db().universe().clone();
        let mut g = ConceptGraph::construct_from(u.clone(), [bs(&u, "ABD", "1234")]).unwrap();
        g.add_marked_boundary([&bs(&u, "D", "12345")]).unwrap();
        let m = g.id_of(&bs(&u, "D", "12345")).unwrap();
        let abd = g.id_of(&bs(&u, "ABD", "1234")).unwrap();
        assert!(g.has_edge(m, abd));
        assert_eq!(g.edge_count(), 3);
        assert!(g.check_integrity().is_ok());
    }

    #[test]
    fn orphan_boundary_rejected() {
        let u = example_db().universe().clone();
        let mut g = ConceptGraph::new(u.clone());
        assert!(matches!(
            g.add_marked_boundary([&bs(&u, "D", "12345")]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn edge_labels() {
        let u = example_db().universe().clone();
        let g = example_graph();
        let label = |a: (&str, &str), b: (&str, &str)| {
            let l = g.edge_label(&bs(&u, a.0, a.1), &bs(&u, b.0, b.1)).unwrap();
            (
                u.attrs.render(&l.added_attrs),
                u.objs.render(&l.removed_objs),
            )
        };
        assert_eq!(
            label(("D", "12345"), ("ABD", "1234")),
            ("AB".into(), "5".into())
        );
        assert_eq!(
            label(("ABD", "1234"), ("ABDE", "13")),
            ("E".into(), "24".into())
        );
        assert_eq!(
            label(("DE", "135"), ("CDE", "5")),
            ("C".into(), "13".into())
        );
        assert!(g
            .edge_label(&bs(&u, "D", "12345"), &bs(&u, "ABDE", "13"))
            .is_err());
        assert!(g
            .edge_label_by_id(BOTTOM, g.id_of(&bs(&u, "D", "12345")).unwrap())
            .is_err());
    }

    #[test]
    fn integrity_flags_transitive_edge() {
        let u = example_db().universe().clone();
        let mut g = example_graph();
        let d = g.id_of(&bs(&u, "D", "12345")).unwrap();
        let abde = g.id_of(&bs(&u, "ABDE", "13")).unwrap();
        g.add_edge(d, abde);
        let report = g.check_integrity();
        assert!(!report.is_ok());
        assert!(
            report.violations.iter().any(|v| v.contains("not a cover")),
            "{report:?}"
        );
    }

    #[test]
    fn integrity_flags_marked_vertex_on_sentinel() {
        let u = example_db().universe().clone();
        let mut g = example_graph();
        let extra = g.push_vertex(Node::Concept(bs(&u, "A", "1")), true);
        g.add_edge(extra, TOP);
        assert!(!g.check_integrity().is_ok());
    }

    #[test]
    fn transpose_is_an_involution() {
        let g = example_graph();
        let t = g.transpose();
        assert!(t.check_integrity().is_ok(), "{:?}", t.check_integrity());
        assert_eq!(t.concepts(), g.concepts().transpose());
        assert_eq!(t.transpose(), g);
    }

    #[test]
    fn reduction_drops_shortcuts() {
        let edges: BTreeSet<(usize, usize)> = [(0, 1), (1, 2), (0, 2), (2, 3), (0, 3)].into();
        let red = transitive_reduction(4, &edges, &[0, 1, 2, 3]);
        assert_eq!(red, [(0, 1), (1, 2), (2, 3)].into());
    }
}
