//! Brute-force reference matcher for tests.
//!
//! Enumerates every injective query-to-target assignment with no pruning
//! beyond injectivity and keeps the ones satisfying the matching conditions,
//! so it shares no logic with the search engine. Hard size guards keep the
//! factorial enumeration at test scale.

use crate::engine::Match;
use crate::error::{Error, Result};
use crate::graph::{labels_compatible, LabeledMultigraph, NodeId};
use crate::symmetry::AutomorphismMatrix;
use crate::util::BitSet;

pub const MAX_QUERY_NODES: usize = 6;
pub const MAX_TARGET_NODES: usize = 30;

/// All valid matches, in lexicographic assignment order.
pub fn brute_force_matches(query: &LabeledMultigraph, target: &LabeledMultigraph) -> Result<Vec<Match>> {
    let n_q = query.node_count();
    let n_t = target.node_count();
    if n_q > MAX_QUERY_NODES || n_t > MAX_TARGET_NODES {
        return Err(Error::OracleLimit {
            query_nodes: n_q,
            target_nodes: n_t,
            max_query: MAX_QUERY_NODES,
            max_target: MAX_TARGET_NODES,
        });
    }
    if query.is_directed() != target.is_directed() {
        return Err(Error::DirectednessMismatch);
    }

    let mut matches = Vec::new();
    let mut assignment = vec![0usize; n_q];
    let mut used = BitSet::new(n_t);
    enumerate(query, target, 0, &mut assignment, &mut used, &mut matches);
    Ok(matches)
}

fn enumerate(
    query: &LabeledMultigraph,
    target: &LabeledMultigraph,
    q: NodeId,
    assignment: &mut Vec<NodeId>,
    used: &mut BitSet,
    matches: &mut Vec<Match>,
) {
    if q == query.node_count() {
        if is_valid(query, target, assignment) {
            matches.push(Match::new(assignment.clone()));
        }
        return;
    }
    for t in 0..target.node_count() {
        if used.contains(t) {
            continue;
        }
        assignment[q] = t;
        used.insert(t);
        enumerate(query, target, q + 1, assignment, used, matches);
        used.remove(t);
    }
}

fn is_valid(query: &LabeledMultigraph, target: &LabeledMultigraph, assignment: &[NodeId]) -> bool {
    for q in 0..query.node_count() {
        if !labels_compatible(query, q, target, assignment[q]) {
            return false;
        }
    }
    for (u, v, l) in query.edges() {
        if !target.has_edge(assignment[u], assignment[v], l) {
            return false;
        }
    }
    true
}

/// Matches grouped into classes closed under composition with the query's
/// automorphisms. Every class has size exactly `|Aut|` because the group
/// acts freely on injective assignments.
#[derive(Debug)]
pub struct OrbitGrouping {
    pub classes: Vec<Vec<Match>>,
}

impl OrbitGrouping {
    /// Index of the class containing an equal match, if any.
    pub fn class_of(&self, m: &Match) -> Option<usize> {
        self.classes.iter().position(|class| class.contains(m))
    }
}

/// Partitions `matches` under the automorphism action `m ∘ ρ`. Returns an
/// error if any class does not have exactly `|Aut|` members, which flags a
/// matching or automorphism bug.
pub fn group_by_automorphism(matches: &[Match], aut: &AutomorphismMatrix) -> Result<OrbitGrouping> {
    let mut remaining: Vec<Match> = matches.to_vec();
    remaining.sort();
    let mut classes = Vec::new();
    while let Some(seed) = remaining.first().cloned() {
        let mut class: Vec<Match> = aut
            .rows()
            .iter()
            .map(|rho| {
                let composed: Vec<NodeId> = (0..seed.len()).map(|q| seed.target_of(rho[q])).collect();
                Match::new(composed)
            })
            .collect();
        class.sort();
        class.dedup();
        if class.len() != aut.len() {
            return Err(Error::InvalidConfig(format!(
                "automorphism class of size {} instead of {}",
                class.len(),
                aut.len()
            )));
        }
        for m in &class {
            match remaining.binary_search(m) {
                Ok(pos) => {
                    remaining.remove(pos);
                }
                Err(_) => {
                    return Err(Error::InvalidConfig(
                        "match set is not closed under the automorphism action".into(),
                    ))
                }
            }
        }
        classes.push(class);
    }
    Ok(OrbitGrouping { classes })
}
