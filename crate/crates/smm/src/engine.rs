//! Backtracking search for all occurrences of a query in a target.
//!
//! The search walks query nodes in the precomputed order. Candidates for the
//! first node are its whole refined domain; every later node draws
//! candidates from the target neighborhood of its parent's image,
//! intersected with its own domain and minus already used targets. A
//! candidate survives feasibility when it keeps the mapping injective,
//! respects every symmetry breaking condition in both directions, and has a
//! same-label target edge for every query edge to an already matched node.
//!
//! With breaking conditions enabled the emitted set contains exactly one
//! member of each automorphism orbit of the full match set; disabling them
//! yields the full set. The search is iterative with an explicit stack, so
//! deep queries cannot overflow, and a wall-clock deadline is polled every
//! 1024 examined candidate pairs.

use std::time::{Duration, Instant};

use crate::domains::{arc_consistency, compute_domains, DomainMap};
use crate::error::{Error, Result};
use crate::graph::{align_dictionaries, labels_compatible, LabeledMultigraph, NodeId};
use crate::ordering::{order_query_nodes, NodeOrdering};
use crate::symmetry::{compute_symm_break_cond, BreakingConditionSet};
use crate::util::BitSet;

/// A complete query-to-target assignment, indexed by query node id.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Match {
    assignment: Vec<NodeId>,
}

impl Match {
    pub fn new(assignment: Vec<NodeId>) -> Self {
        Match { assignment }
    }

    pub fn target_of(&self, q: NodeId) -> NodeId {
        self.assignment[q]
    }

    pub fn assignment(&self) -> &[NodeId] {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }
}

/// What the search materializes besides counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EmitMode {
    /// Count matches only; nothing is stored per match.
    #[default]
    Count,
    /// Collect all matches in memory.
    Collect,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Apply symmetry breaking conditions (one match per occurrence). When
    /// false the full redundant match set is enumerated.
    pub sbc_enabled: bool,
    pub emit: EmitMode,
    /// Wall-clock budget for the search stage.
    pub timeout: Option<Duration>,
    /// Upper bound on examined candidate pairs.
    pub max_candidate_pairs: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            sbc_enabled: true,
            emit: EmitMode::Count,
            timeout: None,
            max_candidate_pairs: None,
        }
    }
}

/// Counters and outcome of one search run.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub matches: u64,
    pub candidate_pairs: u64,
    pub elapsed: Duration,
    /// False when the run stopped on the timeout or the candidate-pair cap.
    pub completed: bool,
}

#[derive(Debug)]
pub struct SearchOutput {
    pub report: SearchReport,
    pub matches: Vec<Match>,
}

/// A partial query-to-target mapping with its used-target set.
#[derive(Debug, Clone)]
pub struct PartialMap {
    assignment: Vec<Option<NodeId>>,
    used: BitSet,
}

impl PartialMap {
    pub fn new(query_nodes: usize, target_nodes: usize) -> Self {
        PartialMap {
            assignment: vec![None; query_nodes],
            used: BitSet::new(target_nodes),
        }
    }

    pub fn assign(&mut self, q: NodeId, t: NodeId) {
        debug_assert!(self.assignment[q].is_none());
        self.assignment[q] = Some(t);
        self.used.insert(t);
    }

    pub fn unassign(&mut self, q: NodeId) {
        if let Some(t) = self.assignment[q].take() {
            self.used.remove(t);
        }
    }

    pub fn target_of(&self, q: NodeId) -> Option<NodeId> {
        self.assignment[q]
    }

    pub fn uses_target(&self, t: NodeId) -> bool {
        self.used.contains(t)
    }
}

/// The feasibility rules for extending a partial match with the pair
/// `(q, t)`:
///
/// 1. `t` is not already used (the mapping stays injective);
/// 2. for every matched `q'` with condition `q < q'`, `id(t) < id(f(q'))`,
///    and for every matched `q'` with `q' < q`, `id(f(q')) < id(t)`;
/// 3. every query edge between `q` and a matched node, in either
///    orientation, has a target edge with the same label between the images.
pub fn check_feasibility(
    q: NodeId,
    t: NodeId,
    partial: &PartialMap,
    conds: &BreakingConditionSet,
    query: &LabeledMultigraph,
    target: &LabeledMultigraph,
) -> bool {
    if partial.uses_target(t) {
        return false;
    }
    for &after in conds.greater_partners(q) {
        if let Some(ft) = partial.target_of(after) {
            if t >= ft {
                return false;
            }
        }
    }
    for &before in conds.lesser_partners(q) {
        if let Some(ft) = partial.target_of(before) {
            if ft >= t {
                return false;
            }
        }
    }
    for &(q2, l) in query.out_entries(q) {
        let image = if q2 == q { Some(t) } else { partial.target_of(q2) };
        if let Some(t2) = image {
            if !target.has_edge(t, t2, l) {
                return false;
            }
        }
    }
    if query.is_directed() {
        for &(q2, l) in query.in_entries(q) {
            if q2 == q {
                continue; // self loop already checked through the out entry
            }
            if let Some(t2) = partial.target_of(q2) {
                if !target.has_edge(t2, t, l) {
                    return false;
                }
            }
        }
    }
    true
}

/// Def.-style validity check of a complete match: injectivity, label
/// containment on every node, and presence of every labeled query edge.
pub fn verify_match(query: &LabeledMultigraph, target: &LabeledMultigraph, m: &Match) -> bool {
    if m.len() != query.node_count() {
        return false;
    }
    let mut seen = BitSet::new(target.node_count());
    for q in 0..query.node_count() {
        let t = m.target_of(q);
        if t >= target.node_count() || seen.contains(t) {
            return false;
        }
        seen.insert(t);
        if !labels_compatible(query, q, target, t) {
            return false;
        }
    }
    for (u, v, l) in query.edges() {
        if !target.has_edge(m.target_of(u), m.target_of(v), l) {
            return false;
        }
    }
    true
}

// Precomputed per-depth feasibility program: which earlier stack slots must
// be edge-checked (and with which label/orientation) and which must be
// id-compared for symmetry breaking.
struct DepthPlan {
    parent_depth: Option<usize>,
    /// (earlier depth, label, edge points out of the current node)
    edge_checks: Vec<(usize, u32, bool)>,
    /// labels of self loops on the current query node
    self_loops: Vec<u32>,
    /// (earlier depth, earlier image must be smaller than the candidate)
    sbc_checks: Vec<(usize, bool)>,
}

enum AdjProbe {
    /// One n*n bit matrix per edge label; targets small enough to afford it.
    Bits { per_label: Vec<BitSet>, n: usize },
    /// Binary search in the sorted adjacency of the target.
    Search,
}

impl AdjProbe {
    fn build(target: &LabeledMultigraph) -> AdjProbe {
        let n = target.node_count();
        let labels = target.edge_dictionary().len().max(1);
        let cells = (n as u64) * (n as u64) * (labels as u64);
        if n > 0 && cells <= 1 << 28 {
            let mut per_label = vec![BitSet::new(n * n); labels];
            for u in 0..n {
                for &(v, l) in target.out_entries(u) {
                    per_label[l as usize].insert(u * n + v);
                }
            }
            AdjProbe::Bits { per_label, n }
        } else {
            AdjProbe::Search
        }
    }

    #[inline]
    fn has(&self, target: &LabeledMultigraph, u: NodeId, v: NodeId, l: u32) -> bool {
        match self {
            AdjProbe::Bits { per_label, n } => per_label[l as usize].contains(u * n + v),
            AdjProbe::Search => target.has_edge(u, v, l),
        }
    }
}

/// Runs the search over prepared inputs, forwarding each match to `emit`.
/// Returns the report; `emit` decides what to keep.
fn run_search(
    query: &LabeledMultigraph,
    target: &LabeledMultigraph,
    dom: &DomainMap,
    ordering: &NodeOrdering,
    conds: &BreakingConditionSet,
    cfg: &SearchConfig,
    emit: &mut dyn FnMut(&[NodeId]),
) -> SearchReport {
    let start = Instant::now();
    let n_q = query.node_count();
    let mu = ordering.mu();
    let mut report = SearchReport {
        matches: 0,
        candidate_pairs: 0,
        elapsed: Duration::ZERO,
        completed: true,
    };
    if n_q == 0 {
        report.elapsed = start.elapsed();
        return report;
    }

    // position of each query node in mu
    let mut depth_of = vec![0usize; n_q];
    for (d, &q) in mu.iter().enumerate() {
        depth_of[q] = d;
    }

    let plans: Vec<DepthPlan> = (0..n_q)
        .map(|d| {
            let q = mu[d];
            let mut edge_checks = Vec::new();
            let mut self_loops = Vec::new();
            for &(q2, l) in query.out_entries(q) {
                if q2 == q {
                    self_loops.push(l);
                } else if depth_of[q2] < d {
                    edge_checks.push((depth_of[q2], l, true));
                }
            }
            if query.is_directed() {
                for &(q2, l) in query.in_entries(q) {
                    if q2 != q && depth_of[q2] < d {
                        edge_checks.push((depth_of[q2], l, false));
                    }
                }
            }
            let mut sbc_checks = Vec::new();
            for &after in conds.greater_partners(q) {
                if depth_of[after] < d {
                    sbc_checks.push((depth_of[after], false));
                }
            }
            for &before in conds.lesser_partners(q) {
                if depth_of[before] < d {
                    sbc_checks.push((depth_of[before], true));
                }
            }
            DepthPlan {
                parent_depth: ordering.parent(q).map(|p| depth_of[p]),
                edge_checks,
                self_loops,
                sbc_checks,
            }
        })
        .collect();

    let probe = AdjProbe::build(target);
    let n_t = target.node_count();

    // distinct sorted neighbors of every target node, flattened
    let mut neigh_start = Vec::with_capacity(n_t + 1);
    let mut neigh = Vec::new();
    neigh_start.push(0);
    for t in 0..n_t {
        neigh.extend(target.neighbors(t));
        neigh_start.push(neigh.len());
    }

    let mut dom_bits: Vec<BitSet> = (0..n_q).map(|_| BitSet::new(n_t)).collect();
    for q in 0..n_q {
        for &t in dom.domain(q) {
            dom_bits[q].insert(t);
        }
    }

    let mut used = BitSet::new(n_t);
    // images along mu, one slot per depth
    let mut flat = vec![0usize; n_q];
    let mut cands: Vec<Vec<NodeId>> = vec![Vec::new(); n_q];
    let mut cursor = vec![0usize; n_q];
    let mut assignment_buf = vec![0usize; n_q];

    let deadline = cfg.timeout.map(|t| start + t);
    let cap = cfg.max_candidate_pairs.unwrap_or(u64::MAX);

    cands[0].extend_from_slice(dom.domain(mu[0]));
    let mut depth = 0usize;

    'search: loop {
        if cursor[depth] >= cands[depth].len() {
            // exhausted this frame: backtrack
            if depth == 0 {
                break;
            }
            depth -= 1;
            used.remove(flat[depth]);
            continue;
        }
        if report.candidate_pairs >= cap {
            report.completed = false;
            break;
        }
        let t = cands[depth][cursor[depth]];
        cursor[depth] += 1;

        report.candidate_pairs += 1;
        if report.candidate_pairs & 1023 == 0 {
            if let Some(deadline) = deadline {
                if Instant::now() >= deadline {
                    report.completed = false;
                    break;
                }
            }
        }

        let plan = &plans[depth];
        for &(d2, smaller) in &plan.sbc_checks {
            let other = flat[d2];
            if smaller {
                if other >= t {
                    continue 'search;
                }
            } else if t >= other {
                continue 'search;
            }
        }
        for &l in &plan.self_loops {
            if !probe.has(target, t, t, l) {
                continue 'search;
            }
        }
        for &(d2, l, outgoing) in &plan.edge_checks {
            let other = flat[d2];
            let ok = if outgoing {
                probe.has(target, t, other, l)
            } else {
                probe.has(target, other, t, l)
            };
            if !ok {
                continue 'search;
            }
        }

        if depth + 1 == n_q {
            flat[depth] = t;
            report.matches += 1;
            for d in 0..n_q {
                assignment_buf[mu[d]] = flat[d];
            }
            if report.matches <= 1024 {
                debug_assert!(
                    verify_match(query, target, &Match::new(assignment_buf.clone())),
                    "emitted match violates the matching conditions"
                );
            }
            emit(&assignment_buf);
            continue;
        }

        // descend
        flat[depth] = t;
        used.insert(t);
        depth += 1;
        let q_next = mu[depth];
        let frame = &mut cands[depth];
        frame.clear();
        match plans[depth].parent_depth {
            Some(pd) => {
                let anchor = flat[pd];
                let bits = &dom_bits[q_next];
                for &t2 in &neigh[neigh_start[anchor]..neigh_start[anchor + 1]] {
                    if bits.contains(t2) && !used.contains(t2) {
                        frame.push(t2);
                    }
                }
            }
            None => {
                for &t2 in dom.domain(q_next) {
                    if !used.contains(t2) {
                        frame.push(t2);
                    }
                }
            }
        }
        cursor[depth] = 0;
    }

    report.elapsed = start.elapsed();
    report
}

/// Search over prepared stages, materializing according to `cfg.emit`.
pub fn subgraph_matching(
    query: &LabeledMultigraph,
    target: &LabeledMultigraph,
    dom: &DomainMap,
    ordering: &NodeOrdering,
    conds: &BreakingConditionSet,
    cfg: &SearchConfig,
) -> SearchOutput {
    let mut matches = Vec::new();
    let report = match cfg.emit {
        EmitMode::Count => run_search(query, target, dom, ordering, conds, cfg, &mut |_| {}),
        EmitMode::Collect => run_search(query, target, dom, ordering, conds, cfg, &mut |assignment| {
            matches.push(Match::new(assignment.to_vec()));
        }),
    };
    SearchOutput { report, matches }
}

/// Search over prepared stages, streaming each match to `on_match` as a
/// query-id-indexed assignment. Nothing is stored.
pub fn subgraph_matching_streaming(
    query: &LabeledMultigraph,
    target: &LabeledMultigraph,
    dom: &DomainMap,
    ordering: &NodeOrdering,
    conds: &BreakingConditionSet,
    cfg: &SearchConfig,
    mut on_match: impl FnMut(&Match),
) -> SearchReport {
    run_search(query, target, dom, ordering, conds, cfg, &mut |assignment| {
        on_match(&Match::new(assignment.to_vec()));
    })
}

/// Pipeline stages shared by the front-ends: shared dictionaries, domains,
/// arc consistency, ordering and (optionally) breaking conditions.
pub struct PreparedSearch {
    pub query: LabeledMultigraph,
    pub target: LabeledMultigraph,
    pub domains: DomainMap,
    pub ordering: NodeOrdering,
    pub conditions: BreakingConditionSet,
}

pub fn prepare(
    query: &LabeledMultigraph,
    target: &LabeledMultigraph,
    cfg: &SearchConfig,
) -> Result<PreparedSearch> {
    if query.node_count() == 0 {
        return Err(Error::InvalidConfig("query has no nodes".into()));
    }
    let (query, target) = align_dictionaries(query, target);
    let dom = compute_domains(&query, &target)?;
    let dom = arc_consistency(&query, &target, dom);
    let ordering = order_query_nodes(&query);
    let conditions = if cfg.sbc_enabled {
        compute_symm_break_cond(&query)?
    } else {
        BreakingConditionSet::empty(query.node_count())
    };
    Ok(PreparedSearch {
        query,
        target,
        domains: dom,
        ordering,
        conditions,
    })
}

/// Full pipeline, collecting matches according to `cfg.emit`.
pub fn find_matches(
    query: &LabeledMultigraph,
    target: &LabeledMultigraph,
    cfg: &SearchConfig,
) -> Result<SearchOutput> {
    let prep = prepare(query, target, cfg)?;
    Ok(subgraph_matching(
        &prep.query,
        &prep.target,
        &prep.domains,
        &prep.ordering,
        &prep.conditions,
        cfg,
    ))
}

/// Full pipeline in count-only mode; no per-match storage is allocated.
pub fn count_matches(
    query: &LabeledMultigraph,
    target: &LabeledMultigraph,
    cfg: &SearchConfig,
) -> Result<SearchReport> {
    let cfg = SearchConfig {
        emit: EmitMode::Count,
        ..cfg.clone()
    };
    Ok(find_matches(query, target, &cfg)?.report)
}

/// Full pipeline streaming matches to a callback.
pub fn find_matches_streaming(
    query: &LabeledMultigraph,
    target: &LabeledMultigraph,
    cfg: &SearchConfig,
    on_match: impl FnMut(&Match),
) -> Result<SearchReport> {
    let prep = prepare(query, target, cfg)?;
    Ok(subgraph_matching_streaming(
        &prep.query,
        &prep.target,
        &prep.domains,
        &prep.ordering,
        &prep.conditions,
        cfg,
        on_match,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo;

    fn collect_cfg(sbc: bool) -> SearchConfig {
        SearchConfig {
            sbc_enabled: sbc,
            emit: EmitMode::Collect,
            ..SearchConfig::default()
        }
    }

    fn sorted_assignments(out: &SearchOutput) -> Vec<Vec<NodeId>> {
        let mut v: Vec<Vec<NodeId>> = out.matches.iter().map(|m| m.assignment().to_vec()).collect();
        v.sort();
        v
    }

    fn unlabeled(n: usize, edges: &[(usize, usize)]) -> LabeledMultigraph {
        let mut g = LabeledMultigraph::new(false);
        let e = g.intern_edge_label("e");
        for _ in 0..n {
            g.add_node(&[]);
        }
        for &(u, v) in edges {
            g.add_edge(u, v, e).unwrap();
        }
        g
    }

    fn complete(n: usize) -> LabeledMultigraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        unlabeled(n, &edges)
    }

    #[test]
    fn demo_instance_has_four_matches_without_sbc() {
        let (q, t) = demo::instance();
        let out = find_matches(&q, &t, &collect_cfg(false)).unwrap();
        assert_eq!(
            sorted_assignments(&out),
            vec![vec![0, 2, 3], vec![0, 3, 2], vec![1, 0, 2], vec![1, 2, 0]]
        );
        assert_eq!(out.report.matches, 4);
        assert!(out.report.completed);
    }

    #[test]
    fn demo_instance_sbc_keeps_the_id_ordered_representatives() {
        let (q, t) = demo::instance();
        let out = find_matches(&q, &t, &collect_cfg(true)).unwrap();
        // of the four matches, exactly those with id(f(1)) < id(f(2)) survive
        assert_eq!(sorted_assignments(&out), vec![vec![0, 2, 3], vec![1, 0, 2]]);
    }

    #[test]
    fn feasibility_accepts_ordered_and_rejects_swapped_pairs() {
        let (q, t) = demo::instance();
        let conds = compute_symm_break_cond(&q).unwrap();
        // partial state: f(q0)=t0, f(q1)=t2; condition is q1 < q2
        let mut partial = PartialMap::new(q.node_count(), t.node_count());
        partial.assign(0, 0);
        partial.assign(1, 2);
        assert!(check_feasibility(2, 3, &partial, &conds, &q, &t));
        // swapped: f(q1)=t3 and the candidate t2 for q2 violates q1 < q2
        let mut partial = PartialMap::new(q.node_count(), t.node_count());
        partial.assign(0, 0);
        partial.assign(1, 3);
        assert!(!check_feasibility(2, 2, &partial, &conds, &q, &t));
    }

    #[test]
    fn feasibility_rejects_used_targets_and_missing_edges() {
        let (q, t) = demo::instance();
        let conds = BreakingConditionSet::empty(q.node_count());
        let mut partial = PartialMap::new(q.node_count(), t.node_count());
        partial.assign(0, 0);
        assert!(!check_feasibility(1, 0, &partial, &conds, &q, &t));
        // t4 (id 4) has no brown edge into t0; edge rule fails
        assert!(!check_feasibility(1, 4, &partial, &conds, &q, &t));
    }

    #[test]
    fn triangle_into_k4_counts() {
        let triangle = unlabeled(3, &[(0, 1), (1, 2), (0, 2)]);
        let k4 = complete(4);
        let no_sbc = find_matches(&triangle, &k4, &collect_cfg(false)).unwrap();
        assert_eq!(no_sbc.report.matches, 24);
        let sbc = find_matches(&triangle, &k4, &collect_cfg(true)).unwrap();
        assert_eq!(sbc.report.matches, 4);
        for m in &sbc.matches {
            assert!(verify_match(&triangle, &k4, m));
            let a = m.assignment();
            assert!(a[0] < a[1] && a[1] < a[2]);
        }
        assert!(sbc.report.candidate_pairs <= no_sbc.report.candidate_pairs);
    }

    #[test]
    fn path_into_k4_counts() {
        let path = unlabeled(3, &[(0, 1), (1, 2)]);
        let k4 = complete(4);
        assert_eq!(find_matches(&path, &k4, &collect_cfg(false)).unwrap().report.matches, 24);
        assert_eq!(find_matches(&path, &k4, &collect_cfg(true)).unwrap().report.matches, 12);
    }

    #[test]
    fn single_node_query_matches_every_target_node() {
        let mut q = LabeledMultigraph::new(false);
        q.add_node(&[]);
        let t = complete(5);
        let report = count_matches(&q, &t, &SearchConfig::default()).unwrap();
        assert_eq!(report.matches, 5);
    }

    #[test]
    fn absent_label_means_no_matches_and_no_deep_pairs() {
        let mut q = unlabeled(3, &[(0, 1), (1, 2)]);
        let rare = q.intern_node_label("rare");
        let e = q.intern_edge_label("e");
        q.add_node(&[rare]);
        q.add_edge(2, 3, e).unwrap();
        let t = complete(6);
        let report = count_matches(&q, &t, &SearchConfig::default()).unwrap();
        assert_eq!(report.matches, 0);
        // arc consistency empties every domain of the connected query
        assert_eq!(report.candidate_pairs, 0);
    }

    #[test]
    fn empty_query_is_rejected() {
        let q = LabeledMultigraph::new(false);
        let t = complete(3);
        assert!(find_matches(&q, &t, &SearchConfig::default()).is_err());
    }

    #[test]
    fn directed_reversal_preserves_match_count() {
        let mut q = LabeledMultigraph::new(true);
        let e = q.intern_edge_label("e");
        let f = q.intern_edge_label("f");
        for _ in 0..3 {
            q.add_node(&[]);
        }
        q.add_edge(0, 1, e).unwrap();
        q.add_edge(2, 1, f).unwrap();

        let mut t = LabeledMultigraph::new(true);
        let e2 = t.intern_edge_label("e");
        let f2 = t.intern_edge_label("f");
        for _ in 0..6 {
            t.add_node(&[]);
        }
        for (u, v, l) in [(0, 1, e2), (2, 1, f2), (3, 4, e2), (5, 4, f2), (0, 4, e2), (1, 3, f2)] {
            t.add_edge(u, v, l).unwrap();
        }

        let reverse = |g: &LabeledMultigraph| {
            let mut r = LabeledMultigraph::new(true);
            for u in 0..g.node_count() {
                let labels: Vec<_> = g
                    .node_labels(u)
                    .iter()
                    .map(|&l| r.intern_node_label(g.node_dictionary().name(l)))
                    .collect();
                r.add_node(&labels);
            }
            for (u, v, l) in g.edges() {
                let l2 = r.intern_edge_label(g.edge_dictionary().name(l));
                r.add_edge(v, u, l2).unwrap();
            }
            r
        };

        let forward = count_matches(&q, &t, &SearchConfig::default()).unwrap();
        let backward = count_matches(&reverse(&q), &reverse(&t), &SearchConfig::default()).unwrap();
        assert_eq!(forward.matches, backward.matches);
    }

    #[test]
    fn candidate_pair_cap_flags_incomplete() {
        let path = unlabeled(3, &[(0, 1), (1, 2)]);
        let k = complete(8);
        let cfg = SearchConfig {
            sbc_enabled: false,
            max_candidate_pairs: Some(5),
            ..SearchConfig::default()
        };
        let report = count_matches(&path, &k, &cfg).unwrap();
        assert!(!report.completed);
        assert!(report.candidate_pairs <= 5);
    }

    #[test]
    fn streaming_sees_every_match_in_emit_order() {
        let (q, t) = demo::instance();
        let mut streamed = Vec::new();
        let report = find_matches_streaming(&q, &t, &collect_cfg(false), |m| {
            streamed.push(m.assignment().to_vec());
        })
        .unwrap();
        assert_eq!(report.matches, 4);
        let collected = find_matches(&q, &t, &collect_cfg(false)).unwrap();
        let collected: Vec<Vec<NodeId>> = collected.matches.iter().map(|m| m.assignment().to_vec()).collect();
        assert_eq!(streamed, collected);
    }

    #[test]
    fn disconnected_query_uses_domain_fallback() {
        // two isolated query nodes against a 3-node target with one edge
        let q = unlabeled(2, &[]);
        let t = unlabeled(3, &[(0, 1)]);
        let out = find_matches(&q, &t, &collect_cfg(false)).unwrap();
        // all injective pairs: 3 * 2
        assert_eq!(out.report.matches, 6);
        for m in &out.matches {
            assert!(verify_match(&q, &t, m));
        }
    }

    #[test]
    fn multiedge_labels_must_all_be_present() {
        let mut q = LabeledMultigraph::new(false);
        let a = q.intern_edge_label("a");
        let b = q.intern_edge_label("b");
        q.add_node(&[]);
        q.add_node(&[]);
        q.add_edge(0, 1, a).unwrap();
        q.add_edge(0, 1, b).unwrap();

        let mut t = LabeledMultigraph::new(false);
        let a2 = t.intern_edge_label("a");
        let b2 = t.intern_edge_label("b");
        for _ in 0..4 {
            t.add_node(&[]);
        }
        t.add_edge(0, 1, a2).unwrap(); // only one label: not enough
        t.add_edge(2, 3, a2).unwrap();
        t.add_edge(2, 3, b2).unwrap(); // both labels: matches
        let out = find_matches(&q, &t, &collect_cfg(false)).unwrap();
        assert_eq!(sorted_assignments(&out), vec![vec![2, 3], vec![3, 2]]);
    }
}
