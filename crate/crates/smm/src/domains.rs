//! Compatibility domains and their arc-consistency refinement.
//!
//! `Dom(q)` holds the target nodes that could still be matched to query node
//! `q`: their label sets must contain `q`'s labels and their degrees must
//! dominate `q`'s (out- and in-degree as well on directed graphs). Arc
//! consistency then repeatedly drops a target node from `Dom(q)` when some
//! query edge at `q` has no label-matching counterpart reaching the domain of
//! the other endpoint, until a fixpoint is reached. Refinement only ever
//! shrinks domains, and never removes a node that participates in any valid
//! match.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{labels_compatible, LabeledMultigraph, NodeId};
use crate::util::BitSet;

/// Per-query-node sorted sets of candidate target nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainMap {
    domains: Vec<Vec<NodeId>>,
}

impl DomainMap {
    pub fn len(&self) -> usize {
        self.domains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domains.is_empty()
    }

    /// Candidate target nodes for query node `q`, ascending.
    pub fn domain(&self, q: NodeId) -> &[NodeId] {
        &self.domains[q]
    }

    pub fn contains(&self, q: NodeId, t: NodeId) -> bool {
        self.domains[q].binary_search(&t).is_ok()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.domains.iter().map(|d| d.len()).collect()
    }
}

/// Builds the initial compatibility domains from the label-subset and degree
/// conditions. Both graphs must share dictionaries and directedness.
pub fn compute_domains(query: &LabeledMultigraph, target: &LabeledMultigraph) -> Result<DomainMap> {
    if query.is_directed() != target.is_directed() {
        return Err(Error::DirectednessMismatch);
    }
    if query.node_dictionary() != target.node_dictionary()
        || query.edge_dictionary() != target.edge_dictionary()
    {
        return Err(Error::DictionaryMismatch);
    }
    let directed = query.is_directed();
    let t_deg: Vec<usize> = (0..target.node_count()).map(|t| target.degree(t)).collect();
    let (t_out, t_in): (Vec<usize>, Vec<usize>) = if directed {
        (
            (0..target.node_count()).map(|t| target.out_degree(t)).collect(),
            (0..target.node_count()).map(|t| target.in_degree(t)).collect(),
        )
    } else {
        (Vec::new(), Vec::new())
    };

    let mut domains = Vec::with_capacity(query.node_count());
    for q in 0..query.node_count() {
        let q_deg = query.degree(q);
        let (q_out, q_in) = if directed {
            (query.out_degree(q), query.in_degree(q))
        } else {
            (0, 0)
        };
        let mut dom = Vec::new();
        for t in 0..target.node_count() {
            if q_deg > t_deg[t] {
                continue;
            }
            if directed && (q_out > t_out[t] || q_in > t_in[t]) {
                continue;
            }
            if labels_compatible(query, q, target, t) {
                dom.push(t);
            }
        }
        domains.push(dom);
    }
    Ok(DomainMap { domains })
}

/// Arc-consistency refinement to a fixpoint.
///
/// Each query edge `(q', q'', l)` is enforced label-aware on both endpoint
/// domains: a survivor in `Dom(q')` needs an `l`-labeled edge to some member
/// of `Dom(q'')`, and a survivor in `Dom(q'')` needs one coming from
/// `Dom(q')`. Query nodes are processed from a worklist in ascending id
/// order, so intermediate states are reproducible. An empty resulting domain
/// is a legal outcome and simply means there are no matches.
pub fn arc_consistency(query: &LabeledMultigraph, target: &LabeledMultigraph, dom: DomainMap) -> DomainMap {
    let mut dom = dom;
    let n_q = query.node_count();
    let directed = query.is_directed();

    // Bitset mirror of each domain for O(1) membership during the scans.
    let mut member: Vec<BitSet> = (0..n_q).map(|_| BitSet::new(target.node_count())).collect();
    for q in 0..n_q {
        for &t in dom.domain(q) {
            member[q].insert(t);
        }
    }

    let mut worklist: BTreeSet<NodeId> = (0..n_q).collect();
    while let Some(q) = worklist.pop_first() {
        let before = dom.domains[q].len();
        let member_ref = &member;
        dom.domains[q].retain(|&t| {
            // every out-edge (q, q'', l) needs (t, t'', l) with t'' in Dom(q'')
            for &(q2, l) in query.out_entries(q) {
                let ok = target
                    .out_entries(t)
                    .iter()
                    .any(|&(t2, l2)| l2 == l && member_ref[q2].contains(t2));
                if !ok {
                    return false;
                }
            }
            // every in-edge (q'', q, l) needs (t'', t, l) with t'' in Dom(q'')
            if directed {
                for &(q2, l) in query.in_entries(q) {
                    let ok = target
                        .in_entries(t)
                        .iter()
                        .any(|&(t2, l2)| l2 == l && member_ref[q2].contains(t2));
                    if !ok {
                        return false;
                    }
                }
            }
            true
        });
        if dom.domains[q].len() != before {
            member[q].clear();
            for &t in &dom.domains[q] {
                member[q].insert(t);
            }
            // re-examine every query node whose constraints mention Dom(q)
            for q2 in query.neighbors(q) {
                worklist.insert(q2);
            }
        }
    }
    dom
}
