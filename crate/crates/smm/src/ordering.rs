//! Static processing order for query nodes.
//!
//! Nodes already well connected to the partial ordering come first. At each
//! step the candidate scores are, in priority order: the number of ordered
//! neighbors (`vis`), the number of ordered non-neighbors adjacent to an
//! unordered neighbor of the candidate (`neig`), and the number of neighbors
//! that are neither ordered nor adjacent to anything ordered (`unv`). Full
//! ties break on the lowest node id by default so runs are reproducible; a
//! seeded random tie-break is available for variance studies.
//!
//! Each ordered node also records a parent: the earliest ordered neighbor,
//! which the search uses to generate candidate target nodes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{LabeledMultigraph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelectionStats {
    pub vis: usize,
    pub neig: usize,
    pub unv: usize,
}

/// Processing order `mu` plus a parent pointer per query node.
#[derive(Debug, Clone)]
pub struct NodeOrdering {
    mu: Vec<NodeId>,
    parent: Vec<Option<NodeId>>,
    stats: Vec<SelectionStats>,
}

impl NodeOrdering {
    /// The permutation of query nodes in processing order.
    pub fn mu(&self) -> &[NodeId] {
        &self.mu
    }

    /// Earliest ordered neighbor of `q`; `None` for the first node and for
    /// nodes with no previously ordered neighbor (disconnected queries).
    pub fn parent(&self, q: NodeId) -> Option<NodeId> {
        self.parent[q]
    }

    /// Scores of the node picked at each position, for inspection.
    pub fn stats(&self) -> &[SelectionStats] {
        &self.stats
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }
}

/// Tie-break rule applied when all three scores tie.
#[derive(Debug, Clone, Copy)]
pub enum TieBreak {
    LowestId,
    Seeded(u64),
}

pub fn order_query_nodes(query: &LabeledMultigraph) -> NodeOrdering {
    order_query_nodes_with(query, TieBreak::LowestId)
}

pub fn order_query_nodes_with(query: &LabeledMultigraph, tie: TieBreak) -> NodeOrdering {
    let n = query.node_count();
    let neighbors: Vec<Vec<NodeId>> = (0..n).map(|q| query.neighbors(q)).collect();
    let mut rng = match tie {
        TieBreak::LowestId => None,
        TieBreak::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };

    let mut ordered = vec![false; n]; // in mu
    let mut near_mu = vec![false; n]; // member of N(mu)
    let mut mu = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    let mut stats = Vec::with_capacity(n);

    while mu.len() < n {
        let mut best: Vec<(NodeId, SelectionStats)> = Vec::new();
        for q in 0..n {
            if ordered[q] {
                continue;
            }
            let s = scores(q, &neighbors, &ordered, &near_mu);
            match best.first() {
                None => best.push((q, s)),
                Some(&(_, b)) => {
                    let cur = (s.vis, s.neig, s.unv);
                    let top = (b.vis, b.neig, b.unv);
                    if cur > top {
                        best.clear();
                        best.push((q, s));
                    } else if cur == top {
                        best.push((q, s));
                    }
                }
            }
        }
        let (pick, s) = match &mut rng {
            Some(rng) if best.len() > 1 => best[rng.gen_range(0..best.len())],
            _ => best[0], // candidates scanned ascending, so [0] is the lowest id
        };
        parent[pick] = mu.iter().copied().find(|&p| neighbors[pick].contains(&p));
        ordered[pick] = true;
        for &v in &neighbors[pick] {
            near_mu[v] = true;
        }
        mu.push(pick);
        stats.push(s);
    }

    NodeOrdering { mu, parent, stats }
}

fn scores(q: NodeId, neighbors: &[Vec<NodeId>], ordered: &[bool], near_mu: &[bool]) -> SelectionStats {
    let n = neighbors.len();
    let is_neighbor = |a: NodeId, b: NodeId| neighbors[a].binary_search(&b).is_ok();
    let mut s = SelectionStats { vis: 0, neig: 0, unv: 0 };
    for q2 in 0..n {
        if ordered[q2] {
            if is_neighbor(q, q2) {
                s.vis += 1;
            } else {
                // ordered non-neighbor adjacent to some unordered neighbor of q
                let touches = neighbors[q]
                    .iter()
                    .any(|&u| !ordered[u] && is_neighbor(q2, u));
                if touches {
                    s.neig += 1;
                }
            }
        } else if is_neighbor(q, q2) && !near_mu[q2] {
            s.unv += 1;
        }
    }
    s
}
