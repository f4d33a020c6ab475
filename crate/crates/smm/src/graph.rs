//! Labeled multigraph representation shared by the whole crate.
//!
//! Nodes carry a *set* of labels, node pairs may carry several distinctly
//! labeled edges, and the graph is either directed or undirected. Node ids
//! are dense insertion-order indices; that order doubles as the total order
//! used by the symmetry-breaking comparisons, so it must never be permuted
//! after construction.
//!
//! Graphs are mutable while being built (`&mut self` operations) and become
//! immutable, freely shareable values once construction hands out `&self`
//! references only. There is no internal locking.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::util::sorted_subset;

/// Dense node index, assigned in insertion order, `0..n-1`.
pub type NodeId = usize;

/// Dense label index inside one [`LabelDictionary`].
pub type LabelId = u32;

/// Interns label strings to dense ids. Interning is a bijection between the
/// distinct strings seen so far and `0..len()-1`.
#[derive(Debug, Clone, Default)]
pub struct LabelDictionary {
    names: Vec<String>,
    index: HashMap<String, LabelId>,
}

impl LabelDictionary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id for `name`, interning it if unseen.
    pub fn intern(&mut self, name: &str) -> LabelId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.names.len() as LabelId;
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }

    pub fn id(&self, name: &str) -> Option<LabelId> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: LabelId) -> &str {
        &self.names[id as usize]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| s.as_str())
    }

    /// Union dictionary plus the id remapping for each input.
    pub fn union(a: &LabelDictionary, b: &LabelDictionary) -> (LabelDictionary, Vec<LabelId>, Vec<LabelId>) {
        let mut out = LabelDictionary::new();
        let map_a: Vec<LabelId> = a.names().map(|n| out.intern(n)).collect();
        let map_b: Vec<LabelId> = b.names().map(|n| out.intern(n)).collect();
        (out, map_a, map_b)
    }
}

impl PartialEq for LabelDictionary {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}
impl Eq for LabelDictionary {}

/// In-memory labeled multigraph.
///
/// Adjacency is kept as per-node sorted lists of `(neighbor, edge label)`
/// entries. Undirected graphs store every edge in both endpoints' out-lists;
/// directed graphs additionally maintain mirrored in-lists.
#[derive(Debug, Clone)]
pub struct LabeledMultigraph {
    directed: bool,
    node_labels: Vec<Vec<LabelId>>,
    out_adj: Vec<Vec<(NodeId, LabelId)>>,
    in_adj: Vec<Vec<(NodeId, LabelId)>>,
    node_dict: LabelDictionary,
    edge_dict: LabelDictionary,
    edge_count: usize,
}

impl LabeledMultigraph {
    pub fn new(directed: bool) -> Self {
        LabeledMultigraph {
            directed,
            node_labels: Vec::new(),
            out_adj: Vec::new(),
            in_adj: Vec::new(),
            node_dict: LabelDictionary::new(),
            edge_dict: LabelDictionary::new(),
            edge_count: 0,
        }
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn node_count(&self) -> usize {
        self.node_labels.len()
    }

    /// Number of distinct `(u, v, l)` edge triples. Undirected edges count
    /// once even though they are stored under both endpoints.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn node_dictionary(&self) -> &LabelDictionary {
        &self.node_dict
    }

    pub fn edge_dictionary(&self) -> &LabelDictionary {
        &self.edge_dict
    }

    pub fn intern_node_label(&mut self, name: &str) -> LabelId {
        self.node_dict.intern(name)
    }

    pub fn intern_edge_label(&mut self, name: &str) -> LabelId {
        self.edge_dict.intern(name)
    }

    /// Adds a node carrying `labels` (deduplicated) and returns its dense id.
    /// An empty label set is allowed and matches anything during search.
    pub fn add_node(&mut self, labels: &[LabelId]) -> NodeId {
        let mut set: Vec<LabelId> = labels.to_vec();
        set.sort_unstable();
        set.dedup();
        self.node_labels.push(set);
        self.out_adj.push(Vec::new());
        if self.directed {
            self.in_adj.push(Vec::new());
        }
        self.node_labels.len() - 1
    }

    fn check_node(&self, u: NodeId) -> Result<()> {
        if u < self.node_count() {
            Ok(())
        } else {
            Err(Error::UnknownNode(u))
        }
    }

    /// Inserts the edge triple `(u, v, l)`. Returns `false` without change
    /// when the triple is already present (the edge set has set semantics).
    pub fn add_edge(&mut self, u: NodeId, v: NodeId, l: LabelId) -> Result<bool> {
        self.check_node(u)?;
        self.check_node(v)?;
        let entry = (v, l);
        let pos = match self.out_adj[u].binary_search(&entry) {
            Ok(_) => return Ok(false),
            Err(pos) => pos,
        };
        self.out_adj[u].insert(pos, entry);
        if self.directed {
            let back = (u, l);
            let pos = self.in_adj[v].binary_search(&back).unwrap_err();
            self.in_adj[v].insert(pos, back);
        } else if u != v {
            let back = (u, l);
            let pos = self.out_adj[v].binary_search(&back).unwrap_err();
            self.out_adj[v].insert(pos, back);
        }
        self.edge_count += 1;
        Ok(true)
    }

    /// Sorted label set of node `u`.
    pub fn node_labels(&self, u: NodeId) -> &[LabelId] {
        &self.node_labels[u]
    }

    /// Number of labels on `u`.
    pub fn node_multiplicity(&self, u: NodeId) -> usize {
        self.node_labels[u].len()
    }

    /// Drops every node's label set, leaving edges untouched. Matching then
    /// treats every node as compatible with every other (unlabeled mode).
    pub fn clear_node_labels(&mut self) {
        for labels in &mut self.node_labels {
            labels.clear();
        }
    }

    /// Sorted `(neighbor, label)` out-entries of `u`. For undirected graphs
    /// these cover every incident edge.
    pub fn out_entries(&self, u: NodeId) -> &[(NodeId, LabelId)] {
        &self.out_adj[u]
    }

    /// Sorted `(neighbor, label)` in-entries of `u` (directed graphs only;
    /// empty for undirected graphs).
    pub fn in_entries(&self, u: NodeId) -> &[(NodeId, LabelId)] {
        if self.directed {
            &self.in_adj[u]
        } else {
            &[]
        }
    }

    /// The contiguous run of out-entries of `u` whose neighbor is `v`.
    fn pair_run(&self, u: NodeId, v: NodeId) -> &[(NodeId, LabelId)] {
        let adj = &self.out_adj[u];
        let lo = adj.partition_point(|&(n, _)| n < v);
        let hi = adj.partition_point(|&(n, _)| n <= v);
        &adj[lo..hi]
    }

    /// Exact triple membership test for `(u, v, l)`.
    pub fn has_edge(&self, u: NodeId, v: NodeId, l: LabelId) -> bool {
        self.out_adj[u].binary_search(&(v, l)).is_ok()
    }

    /// Number of distinctly labeled edges from `u` to `v` (for undirected
    /// graphs, between `u` and `v`).
    pub fn edge_multiplicity(&self, u: NodeId, v: NodeId) -> usize {
        self.pair_run(u, v).len()
    }

    /// Labels of the edges from `u` to `v`, ascending.
    pub fn edge_labels_between(&self, u: NodeId, v: NodeId) -> impl Iterator<Item = LabelId> + '_ {
        self.pair_run(u, v).iter().map(|&(_, l)| l)
    }

    /// Distinct neighbors of `u`, ascending: every `v` with an edge `(u,v,l)`
    /// or `(v,u,l)` for some label, counted once regardless of multiplicity.
    pub fn neighbors(&self, u: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut push = |v: NodeId| {
            if out.last() != Some(&v) {
                out.push(v);
            }
        };
        if self.directed {
            let mut a = self.out_adj[u].iter().map(|&(v, _)| v).peekable();
            let mut b = self.in_adj[u].iter().map(|&(v, _)| v).peekable();
            loop {
                match (a.peek(), b.peek()) {
                    (Some(&x), Some(&y)) if x <= y => push(a.next().unwrap()),
                    (Some(_), Some(_)) => push(b.next().unwrap()),
                    (Some(_), None) => push(a.next().unwrap()),
                    (None, Some(_)) => push(b.next().unwrap()),
                    (None, None) => break,
                }
            }
        } else {
            for &(v, _) in &self.out_adj[u] {
                push(v);
            }
        }
        out
    }

    /// `deg(u)`: the number of distinct neighbors, not the edge count.
    pub fn degree(&self, u: NodeId) -> usize {
        self.neighbors(u).len()
    }

    /// Distinct nodes reachable by at least one out-edge of `u`.
    pub fn out_degree(&self, u: NodeId) -> usize {
        distinct_count(&self.out_adj[u])
    }

    /// Distinct nodes with at least one edge into `u`.
    pub fn in_degree(&self, u: NodeId) -> usize {
        if self.directed {
            distinct_count(&self.in_adj[u])
        } else {
            distinct_count(&self.out_adj[u])
        }
    }

    /// Every edge triple once, in canonical order. Undirected triples are
    /// reported with `u <= v`.
    pub fn edges(&self) -> Vec<(NodeId, NodeId, LabelId)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.node_count() {
            for &(v, l) in &self.out_adj[u] {
                if self.directed || u <= v {
                    out.push((u, v, l));
                }
            }
        }
        out
    }

    /// Rebuilds this graph against the given dictionaries, remapping every
    /// label id. Used to put a query/target pair on one shared dictionary
    /// pair so that label comparisons are plain integer comparisons.
    pub fn with_dictionaries(
        &self,
        node_dict: LabelDictionary,
        edge_dict: LabelDictionary,
        node_map: &[LabelId],
        edge_map: &[LabelId],
    ) -> LabeledMultigraph {
        let mut g = LabeledMultigraph::new(self.directed);
        g.node_dict = node_dict;
        g.edge_dict = edge_dict;
        for labels in &self.node_labels {
            let mapped: Vec<LabelId> = labels.iter().map(|&l| node_map[l as usize]).collect();
            g.add_node(&mapped);
        }
        for (u, v, l) in self.edges() {
            g.add_edge(u, v, edge_map[l as usize]).expect("nodes exist");
        }
        g
    }
}

fn distinct_count(adj: &[(NodeId, LabelId)]) -> usize {
    let mut count = 0;
    let mut last = None;
    for &(v, _) in adj {
        if last != Some(v) {
            count += 1;
            last = Some(v);
        }
    }
    count
}

/// Remaps `query` and `target` onto shared union dictionaries. Node ids are
/// untouched, so matches computed on the remapped pair are valid against the
/// originals.
pub fn align_dictionaries(
    query: &LabeledMultigraph,
    target: &LabeledMultigraph,
) -> (LabeledMultigraph, LabeledMultigraph) {
    let (node_dict, node_q, node_t) = LabelDictionary::union(&query.node_dict, &target.node_dict);
    let (edge_dict, edge_q, edge_t) = LabelDictionary::union(&query.edge_dict, &target.edge_dict);
    let q = query.with_dictionaries(node_dict.clone(), edge_dict.clone(), &node_q, &edge_q);
    let t = target.with_dictionaries(node_dict, edge_dict, &node_t, &edge_t);
    (q, t)
}

/// True when every query-node label is subset-compatible: `labels(q) ⊆
/// labels(t)`. Both graphs must share one node dictionary.
pub fn labels_compatible(query: &LabeledMultigraph, q: NodeId, target: &LabeledMultigraph, t: NodeId) -> bool {
    sorted_subset(query.node_labels(q), target.node_labels(t))
}

/// Exact label-set equality between two nodes of one graph: the node-label
/// predicate of the automorphism definition, deliberately distinct from the
/// subset test used for matching.
pub fn labels_identical(g: &LabeledMultigraph, u: NodeId, v: NodeId) -> bool {
    g.node_labels(u) == g.node_labels(v)
}

impl PartialEq for LabeledMultigraph {
    /// Structural equality modulo label-interning order: same directedness,
    /// node count, per-node label *names* and edge triples by label *name*.
    fn eq(&self, other: &Self) -> bool {
        if self.directed != other.directed
            || self.node_count() != other.node_count()
            || self.edge_count != other.edge_count
        {
            return false;
        }
        for u in 0..self.node_count() {
            let mut a: Vec<&str> = self.node_labels(u).iter().map(|&l| self.node_dict.name(l)).collect();
            let mut b: Vec<&str> = other.node_labels(u).iter().map(|&l| other.node_dict.name(l)).collect();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return false;
            }
        }
        let key = |g: &Self, edges: Vec<(NodeId, NodeId, LabelId)>| -> Vec<(NodeId, NodeId, String)> {
            let mut v: Vec<(NodeId, NodeId, String)> = edges
                .into_iter()
                .map(|(u, w, l)| (u, w, g.edge_dict.name(l).to_string()))
                .collect();
            v.sort();
            v
        };
        key(self, self.edges()) == key(other, other.edges())
    }
}
impl Eq for LabeledMultigraph {}

#[cfg(test)]
mod tests {
    use super::*;

    fn undirected() -> LabeledMultigraph {
        LabeledMultigraph::new(false)
    }

    #[test]
    fn add_node_assigns_dense_ids_in_order() {
        let mut g = undirected();
        assert_eq!(g.add_node(&[]), 0);
        let red = g.intern_node_label("red");
        let green = g.intern_node_label("green");
        assert_eq!(g.add_node(&[red]), 1);
        assert_eq!(g.add_node(&[green]), 2);
        assert_eq!(g.node_count(), 3);
    }

    #[test]
    fn duplicate_edge_is_noop() {
        let mut g = undirected();
        let a = g.intern_edge_label("a");
        g.add_node(&[]);
        g.add_node(&[]);
        assert!(g.add_edge(0, 1, a).unwrap());
        assert!(!g.add_edge(0, 1, a).unwrap());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn undirected_edges_are_symmetric() {
        let mut g = undirected();
        let a = g.intern_edge_label("a");
        g.add_node(&[]);
        g.add_node(&[]);
        g.add_edge(0, 1, a).unwrap();
        assert_eq!(g.neighbors(1), vec![0]);
        assert!(g.has_edge(1, 0, a));
    }

    #[test]
    fn directed_edges_are_one_way() {
        let mut g = LabeledMultigraph::new(true);
        let a = g.intern_edge_label("a");
        g.add_node(&[]);
        g.add_node(&[]);
        g.add_edge(0, 1, a).unwrap();
        assert_eq!(g.in_degree(1), 1);
        assert_eq!(g.in_degree(0), 0);
        // both endpoints see each other as neighbors
        assert_eq!(g.neighbors(0), vec![1]);
        assert_eq!(g.neighbors(1), vec![0]);
        assert!(!g.has_edge(1, 0, a));
    }

    #[test]
    fn multiplicity_does_not_inflate_degree() {
        let mut g = undirected();
        let a = g.intern_edge_label("a");
        let b = g.intern_edge_label("b");
        g.add_node(&[]);
        g.add_node(&[]);
        g.add_edge(0, 1, a).unwrap();
        g.add_edge(0, 1, b).unwrap();
        assert_eq!(g.neighbors(0), vec![1]);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.edge_multiplicity(0, 1), 2);
        let c = g.intern_edge_label("c");
        assert!(!g.has_edge(0, 1, c));
    }

    #[test]
    fn star_center_degree() {
        let mut g = undirected();
        let a = g.intern_edge_label("a");
        for _ in 0..4 {
            g.add_node(&[]);
        }
        for leaf in 1..4 {
            g.add_edge(0, leaf, a).unwrap();
        }
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.neighbors(3), vec![0]);
    }

    #[test]
    fn isolated_node_has_no_neighbors() {
        let mut g = undirected();
        g.add_node(&[]);
        assert!(g.neighbors(0).is_empty());
        assert_eq!(g.degree(0), 0);
    }

    #[test]
    fn node_multiplicity_counts_labels() {
        let mut g = undirected();
        let green = g.intern_node_label("green");
        let brown = g.intern_node_label("brown");
        g.add_node(&[green, brown, green]);
        assert_eq!(g.node_multiplicity(0), 2);
    }

    #[test]
    fn add_edge_rejects_unknown_nodes() {
        let mut g = undirected();
        let a = g.intern_edge_label("a");
        g.add_node(&[]);
        assert!(matches!(g.add_edge(0, 5, a), Err(Error::UnknownNode(5))));
    }

    #[test]
    #[should_panic]
    fn neighbors_panics_on_unknown_node() {
        let g = undirected();
        let _ = g.neighbors(3);
    }

    #[test]
    fn degree_equals_neighbor_count_for_all_nodes() {
        let mut g = LabeledMultigraph::new(true);
        let a = g.intern_edge_label("a");
        let b = g.intern_edge_label("b");
        for _ in 0..5 {
            g.add_node(&[]);
        }
        for (u, v, l) in [(0, 1, a), (1, 0, b), (1, 2, a), (3, 1, a), (2, 2, b)] {
            g.add_edge(u, v, l).unwrap();
        }
        for u in 0..5 {
            assert_eq!(g.degree(u), g.neighbors(u).len());
        }
    }

    #[test]
    fn self_loop_counts_once_undirected() {
        let mut g = undirected();
        let a = g.intern_edge_label("a");
        g.add_node(&[]);
        assert!(g.add_edge(0, 0, a).unwrap());
        assert!(!g.add_edge(0, 0, a).unwrap());
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), vec![0]);
        assert_eq!(g.edges(), vec![(0, 0, a)]);
    }

    #[test]
    fn alignment_shares_dictionaries_and_preserves_structure() {
        let mut q = undirected();
        let x = q.intern_node_label("x");
        let e = q.intern_edge_label("e");
        q.add_node(&[x]);
        q.add_node(&[x]);
        q.add_edge(0, 1, e).unwrap();

        let mut t = undirected();
        let y = t.intern_node_label("y");
        let x2 = t.intern_node_label("x");
        let e2 = t.intern_edge_label("e");
        t.add_node(&[y]);
        t.add_node(&[x2]);
        t.add_edge(0, 1, e2).unwrap();

        let (q2, t2) = align_dictionaries(&q, &t);
        assert_eq!(q2.node_dictionary(), t2.node_dictionary());
        assert_eq!(q2.edge_dictionary(), t2.edge_dictionary());
        assert_eq!(q2, q);
        assert_eq!(t2, t);
        assert!(labels_compatible(&q2, 0, &t2, 1));
        assert!(!labels_compatible(&q2, 0, &t2, 0));
    }
}
