//! Query automorphisms, orbits and symmetry breaking conditions.
//!
//! An automorphism here preserves node label sets *exactly* (not the subset
//! relation used for matching) and preserves every labeled edge in both
//! directions. All automorphisms are enumerated by backtracking over the
//! query nodes; queries are small, so no external canonical-labeling tool is
//! needed, and a hard node-count guard keeps the worst case out of reach.
//!
//! From the automorphism matrix, orbits are the groups of columns sharing
//! one node set. Breaking conditions are generated by repeatedly fixing the
//! minimum-id node of a non-trivial orbit, emitting `fixed < mate` for its
//! orbit mates, and dropping every automorphism that moves the fixed node,
//! until only the identity remains.

use crate::error::{Error, Result};
use crate::graph::{labels_identical, LabeledMultigraph, NodeId};

/// Hard limit for automorphism enumeration.
pub const MAX_SYMMETRY_NODES: usize = 20;

/// All automorphisms of a query, one permutation per row. Column `j` holds
/// the image of node `j`; rows are in lexicographic order and always include
/// the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismMatrix {
    rows: Vec<Vec<NodeId>>,
}

impl AutomorphismMatrix {
    /// Wraps explicit rows. Every row must be a permutation of `0..width`.
    pub fn from_rows(rows: Vec<Vec<NodeId>>) -> Self {
        assert!(!rows.is_empty(), "a matrix needs at least the identity row");
        let width = rows[0].len();
        for row in &rows {
            assert_eq!(row.len(), width);
            let mut seen = vec![false; width];
            for &v in row {
                assert!(v < width && !seen[v], "row is not a permutation");
                seen[v] = true;
            }
        }
        AutomorphismMatrix { rows }
    }

    pub fn rows(&self) -> &[Vec<NodeId>] {
        &self.rows
    }

    /// Number of automorphisms.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of query nodes (columns).
    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    /// Keeps only the rows whose permutation fixes `q`.
    pub fn retain_fixing(&self, q: NodeId) -> AutomorphismMatrix {
        AutomorphismMatrix {
            rows: self.rows.iter().filter(|row| row[q] == q).cloned().collect(),
        }
    }
}

/// Orbit partition of the query nodes: two nodes share an orbit exactly when
/// their matrix columns hold the same node set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    orbit_of: Vec<usize>,
    members: Vec<Vec<NodeId>>,
}

impl OrbitPartition {
    /// Orbit identifier of node `q`. Ids are assigned by first appearance in
    /// column order.
    pub fn orbit_of(&self, q: NodeId) -> usize {
        self.orbit_of[q]
    }

    /// Members of each orbit, ascending within an orbit.
    pub fn orbits(&self) -> &[Vec<NodeId>] {
        &self.members
    }

    pub fn orbit_members(&self, q: NodeId) -> &[NodeId] {
        &self.members[self.orbit_of[q]]
    }
}

/// Set of required orders `a < b` between query nodes, with per-node partner
/// lists for constant-time feasibility lookups.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BreakingConditionSet {
    pairs: Vec<(NodeId, NodeId)>,
    /// `lesser[q]`: nodes that must map to a smaller target id than `q` does.
    lesser: Vec<Vec<NodeId>>,
    /// `greater[q]`: nodes that must map to a greater target id than `q` does.
    greater: Vec<Vec<NodeId>>,
}

impl BreakingConditionSet {
    pub fn empty(n_nodes: usize) -> Self {
        BreakingConditionSet {
            pairs: Vec::new(),
            lesser: vec![Vec::new(); n_nodes],
            greater: vec![Vec::new(); n_nodes],
        }
    }

    fn add(&mut self, a: NodeId, b: NodeId) {
        debug_assert!(a < b, "conditions always order the smaller id first");
        self.pairs.push((a, b));
        self.greater[a].push(b);
        self.lesser[b].push(a);
    }

    /// The conditions as `(a, b)` pairs meaning `a` must precede `b`.
    pub fn pairs(&self) -> &[(NodeId, NodeId)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Nodes `a` with `a < q` required.
    pub fn lesser_partners(&self, q: NodeId) -> &[NodeId] {
        &self.lesser[q]
    }

    /// Nodes `b` with `q < b` required.
    pub fn greater_partners(&self, q: NodeId) -> &[NodeId] {
        &self.greater[q]
    }
}

/// Enumerates every automorphism of `query` by backtracking in column order
/// with exact-label and degree-profile pruning.
pub fn compute_automorphism_matrix(query: &LabeledMultigraph) -> Result<AutomorphismMatrix> {
    let n = query.node_count();
    if n > MAX_SYMMETRY_NODES {
        return Err(Error::QueryTooLargeForSymmetry(n));
    }
    if n == 0 {
        return Ok(AutomorphismMatrix { rows: vec![Vec::new()] });
    }

    let directed = query.is_directed();
    let deg: Vec<(usize, usize, usize)> = (0..n)
        .map(|u| (query.degree(u), query.out_degree(u), query.in_degree(u)))
        .collect();

    let mut rows = Vec::new();
    let mut image = vec![0usize; n];
    let mut used = vec![false; n];

    // Candidate images are tried in ascending order, so rows come out in
    // lexicographic order without an extra sort.
    fn extend(
        depth: usize,
        query: &LabeledMultigraph,
        deg: &[(usize, usize, usize)],
        directed: bool,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        rows: &mut Vec<Vec<usize>>,
    ) {
        let n = deg.len();
        if depth == n {
            rows.push(image.clone());
            return;
        }
        'candidates: for w in 0..n {
            if used[w] || deg[depth] != deg[w] || !labels_identical(query, depth, w) {
                continue;
            }
            // labels between (depth, prior) must equal labels between (w, image(prior))
            let same_run = |a: NodeId, b: NodeId, c: NodeId, d: NodeId| {
                query.edge_labels_between(a, b).eq(query.edge_labels_between(c, d))
            };
            if !same_run(depth, depth, w, w) {
                continue;
            }
            for prior in 0..depth {
                if !same_run(depth, prior, w, image[prior]) {
                    continue 'candidates;
                }
                if directed && !same_run(prior, depth, image[prior], w) {
                    continue 'candidates;
                }
            }
            image[depth] = w;
            used[w] = true;
            extend(depth + 1, query, deg, directed, image, used, rows);
            used[w] = false;
        }
    }

    extend(0, query, &deg, directed, &mut image, &mut used, &mut rows);
    debug_assert!(rows.contains(&(0..n).collect::<Vec<_>>()));
    Ok(AutomorphismMatrix { rows })
}

/// Groups matrix columns with identical node sets into orbits.
pub fn compute_orbits(matrix: &AutomorphismMatrix) -> OrbitPartition {
    let n = matrix.width();
    let mut column_sets: Vec<Vec<NodeId>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut set: Vec<NodeId> = matrix.rows.iter().map(|row| row[j]).collect();
        set.sort_unstable();
        set.dedup();
        column_sets.push(set);
    }
    let mut orbit_of = vec![usize::MAX; n];
    let mut members: Vec<Vec<NodeId>> = Vec::new();
    for j in 0..n {
        if orbit_of[j] != usize::MAX {
            continue;
        }
        let id = members.len();
        for j2 in j..n {
            if orbit_of[j2] == usize::MAX && column_sets[j2] == column_sets[j] {
                orbit_of[j2] = id;
            }
        }
        members.push((0..n).filter(|&q| orbit_of[q] == id).collect());
    }
    OrbitPartition { orbit_of, members }
}

/// Runs the fixing loop on an explicit matrix: while more than one
/// automorphism survives, fix the minimum-id node of a non-trivial orbit,
/// emit its conditions and drop the rows that move it.
pub fn conditions_from_matrix(matrix: AutomorphismMatrix) -> BreakingConditionSet {
    let n = matrix.width();
    let mut conditions = BreakingConditionSet::empty(n);
    let mut current = matrix;
    while current.len() > 1 {
        let orbits = compute_orbits(&current);
        let fixed = (0..n)
            .find(|&q| orbits.orbit_members(q).len() > 1)
            .expect("more than one automorphism implies a non-trivial orbit");
        for &mate in orbits.orbit_members(fixed) {
            if mate != fixed {
                conditions.add(fixed, mate);
            }
        }
        current = current.retain_fixing(fixed);
    }
    conditions
}

/// Computes the full symmetry breaking condition set of a query.
pub fn compute_symm_break_cond(query: &LabeledMultigraph) -> Result<BreakingConditionSet> {
    Ok(conditions_from_matrix(compute_automorphism_matrix(query)?))
}
