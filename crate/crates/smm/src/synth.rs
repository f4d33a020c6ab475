//! Synthetic benchmark inputs: preferential-attachment targets, random-walk
//! query extraction, and canonical path/star/clique queries.
//!
//! Everything is a pure function of its inputs and a 64-bit seed. The RNG is
//! ChaCha8 seeded with `seed_from_u64`, which produces the same stream on
//! every platform; generated files record the generator identity in a header
//! comment.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{LabeledMultigraph, NodeId};
use crate::util::BitSet;

/// Name of the RNG, recorded in output headers.
pub const GENERATOR_ID: &str = "chacha8";

/// Restart probability of the extraction walk, in percent.
const RESTART_PERCENT: u64 = 15;

/// Parameters of the preferential-attachment generator.
///
/// `n`: node count; `d`: edges per arriving node (so the final edge/node
/// ratio approaches `d`, multi-edges per pair counted once); `sigma`/`gamma`:
/// node/edge label alphabet sizes; `nm`/`em`: maximum node/edge multiplicity.
#[derive(Debug, Clone)]
pub struct SynthConfig {
    pub n: usize,
    pub d: usize,
    pub sigma: usize,
    pub nm: usize,
    pub gamma: usize,
    pub em: usize,
    pub seed: u64,
}

impl SynthConfig {
    fn validate(&self) -> Result<()> {
        if self.n < 1 || self.d < 1 || self.sigma < 1 || self.nm < 1 || self.gamma < 1 || self.em < 1 {
            return Err(Error::InvalidConfig("all generator parameters must be >= 1".into()));
        }
        if self.d >= self.n {
            return Err(Error::InvalidConfig(format!(
                "density {} must be smaller than the node count {}",
                self.d, self.n
            )));
        }
        if self.nm > self.sigma {
            return Err(Error::InvalidConfig(format!(
                "node multiplicity {} exceeds the node alphabet {}",
                self.nm, self.sigma
            )));
        }
        if self.em > self.gamma {
            return Err(Error::InvalidConfig(format!(
                "edge multiplicity {} exceeds the edge alphabet {}",
                self.em, self.gamma
            )));
        }
        Ok(())
    }
}

/// Draws `count` distinct values from `1..=alphabet`.
fn distinct_labels(rng: &mut ChaCha8Rng, alphabet: usize, count: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (1..=alphabet).collect();
    for i in 0..count {
        let j = rng.gen_range(i..pool.len());
        pool.swap(i, j);
    }
    pool.truncate(count);
    pool
}

/// Undirected preferential-attachment multigraph.
///
/// Starting from a single node, each arriving node links to `d` distinct
/// existing endpoints (fewer while fewer exist), sampled proportionally to
/// current degree + 1. Each node then gets `m` distinct labels with `m`
/// uniform in `1..=nm`; each adjacent pair gets `m'` distinct edge labels
/// with `m'` uniform in `1..=em`.
pub fn generate_ba_multigraph(cfg: &SynthConfig) -> Result<LabeledMultigraph> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut g = LabeledMultigraph::new(false);

    let node_labels: Vec<_> = (1..=cfg.sigma).map(|v| g.intern_node_label(&v.to_string())).collect();
    let edge_labels: Vec<_> = (1..=cfg.gamma).map(|v| g.intern_edge_label(&v.to_string())).collect();

    for _ in 0..cfg.n {
        let m = rng.gen_range(1..=cfg.nm);
        let labels: Vec<_> = distinct_labels(&mut rng, cfg.sigma, m)
            .into_iter()
            .map(|v| node_labels[v - 1])
            .collect();
        g.add_node(&labels);
    }

    // sampling pool: node u appears degree(u) + 1 times
    let mut pool: Vec<NodeId> = vec![0];
    for u in 1..cfg.n {
        let want = cfg.d.min(u);
        let snapshot = pool.len();
        let mut picked: Vec<NodeId> = Vec::with_capacity(want);
        while picked.len() < want {
            let v = pool[rng.gen_range(0..snapshot)];
            if !picked.contains(&v) {
                picked.push(v);
            }
        }
        pool.push(u);
        for v in picked {
            let m = rng.gen_range(1..=cfg.em);
            for lab in distinct_labels(&mut rng, cfg.gamma, m) {
                g.add_edge(u, v, edge_labels[lab - 1])?;
            }
            pool.push(u);
            pool.push(v);
        }
    }
    Ok(g)
}

#[derive(Debug, Clone)]
pub struct QueryExtractConfig {
    pub k: usize,
    pub seed: u64,
}

/// Connected components as sorted node lists, ordered by smallest member.
fn components(g: &LabeledMultigraph) -> Vec<Vec<NodeId>> {
    let n = g.node_count();
    let mut seen = BitSet::new(n);
    let mut out = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        let mut comp = vec![start];
        seen.insert(start);
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            for v in g.neighbors(u) {
                if !seen.contains(v) {
                    seen.insert(v);
                    comp.push(v);
                    queue.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Extracts a `k`-node query by random walk with restart, together with the
/// embedding of its nodes into `g`.
///
/// A component with at least `k` nodes is chosen uniformly, then a start
/// node inside it. The walk restarts to the start node with probability
/// 0.15, otherwise follows a uniformly chosen incident edge (either
/// orientation on directed graphs), and stops once `k` distinct nodes are
/// visited. The query consists of the visited nodes and all traversed
/// edges; afterwards, with `R` the edges of `g` between visited nodes that
/// the walk missed, a uniform `r` in `0..=|R|` of them are added back.
/// Query ids are assigned in first-visit order.
pub fn extract_query(
    g: &LabeledMultigraph,
    cfg: &QueryExtractConfig,
) -> Result<(LabeledMultigraph, Vec<(NodeId, NodeId)>)> {
    if cfg.k < 1 {
        return Err(Error::InvalidConfig("query size must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let eligible: Vec<Vec<NodeId>> = components(g).into_iter().filter(|c| c.len() >= cfg.k).collect();
    if eligible.is_empty() {
        return Err(Error::ComponentTooSmall(cfg.k));
    }
    let comp = &eligible[rng.gen_range(0..eligible.len())];
    let start = comp[rng.gen_range(0..comp.len())];

    let mut visit_order = vec![start];
    let mut visited = BitSet::new(g.node_count());
    visited.insert(start);
    let mut traversed: Vec<(NodeId, NodeId, u32)> = Vec::new();
    let mut current = start;
    while visit_order.len() < cfg.k {
        if rng.gen_range(0..100) < RESTART_PERCENT {
            current = start;
            continue;
        }
        let out_n = g.out_entries(current).len();
        let in_n = g.in_entries(current).len();
        if out_n + in_n == 0 {
            current = start; // isolated start inside a component of size >= k cannot happen
            continue;
        }
        let pick = rng.gen_range(0..out_n + in_n);
        let (triple, next) = if pick < out_n {
            let (v, l) = g.out_entries(current)[pick];
            ((current, v, l), v)
        } else {
            let (v, l) = g.in_entries(current)[pick - out_n];
            ((v, current, l), v)
        };
        traversed.push(triple);
        if !visited.contains(next) {
            visited.insert(next);
            visit_order.push(next);
        }
        current = next;
    }

    // map visited target nodes to fresh dense query ids, in visit order
    let mut id_of = vec![usize::MAX; g.node_count()];
    for (q, &t) in visit_order.iter().enumerate() {
        id_of[t] = q;
    }

    let mut query = LabeledMultigraph::new(g.is_directed());
    for &t in &visit_order {
        let labels: Vec<_> = g
            .node_labels(t)
            .iter()
            .map(|&l| query.intern_node_label(g.node_dictionary().name(l)))
            .collect();
        query.add_node(&labels);
    }
    for (u, v, l) in traversed {
        let ql = query.intern_edge_label(g.edge_dictionary().name(l));
        query.add_edge(id_of[u], id_of[v], ql)?;
    }

    // remaining set: edges of g between visited nodes that the walk missed
    let mut remaining: Vec<(NodeId, NodeId, u32)> = Vec::new();
    for &t in &visit_order {
        for &(t2, l) in g.out_entries(t) {
            if id_of[t2] == usize::MAX {
                continue;
            }
            if !g.is_directed() && t > t2 {
                continue; // undirected triple seen from its lower endpoint
            }
            let ql = query
                .edge_dictionary()
                .id(g.edge_dictionary().name(l))
                .filter(|&ql| query.has_edge(id_of[t], id_of[t2], ql));
            if ql.is_none() {
                remaining.push((t, t2, l));
            }
        }
    }
    let r = rng.gen_range(0..=remaining.len());
    for i in 0..r {
        let j = rng.gen_range(i..remaining.len());
        remaining.swap(i, j);
        let (u, v, l) = remaining[i];
        let ql = query.intern_edge_label(g.edge_dictionary().name(l));
        query.add_edge(id_of[u], id_of[v], ql)?;
    }

    let embedding = visit_order.iter().enumerate().map(|(q, &t)| (q, t)).collect();
    Ok((query, embedding))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologyKind {
    Path,
    Star,
    Clique,
}

impl TopologyKind {
    pub fn name(&self) -> &'static str {
        match self {
            TopologyKind::Path => "path",
            TopologyKind::Star => "star",
            TopologyKind::Clique => "clique",
        }
    }
}

impl std::str::FromStr for TopologyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(TopologyKind::Path),
            "star" => Ok(TopologyKind::Star),
            "clique" => Ok(TopologyKind::Clique),
            other => Err(Error::InvalidConfig(format!("unknown topology '{other}'"))),
        }
    }
}

/// Canonical undirected `k`-node topology query. Stars put the center at
/// id 0. `node_label: None` makes the nodes unlabeled (compatible with
/// anything); every edge carries `edge_label`.
pub fn make_topology_query(
    kind: TopologyKind,
    k: usize,
    node_label: Option<&str>,
    edge_label: &str,
) -> Result<LabeledMultigraph> {
    let min = match kind {
        TopologyKind::Star => 3,
        _ => 2,
    };
    if k < min {
        return Err(Error::InvalidConfig(format!(
            "{} queries need at least {} nodes, got {}",
            kind.name(),
            min,
            k
        )));
    }
    let mut g = LabeledMultigraph::new(false);
    let labels: Vec<_> = match node_label {
        Some(name) => vec![g.intern_node_label(name)],
        None => Vec::new(),
    };
    let e = g.intern_edge_label(edge_label);
    for _ in 0..k {
        g.add_node(&labels);
    }
    match kind {
        TopologyKind::Path => {
            for i in 0..k - 1 {
                g.add_edge(i, i + 1, e)?;
            }
        }
        TopologyKind::Star => {
            for leaf in 1..k {
                g.add_edge(0, leaf, e)?;
            }
        }
        TopologyKind::Clique => {
            for u in 0..k {
                for v in (u + 1)..k {
                    g.add_edge(u, v, e)?;
                }
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::serialize;
    use crate::symmetry::compute_automorphism_matrix;

    #[test]
    fn d1_generation_is_a_spanning_tree() {
        let cfg = SynthConfig { n: 10, d: 1, sigma: 1, nm: 1, gamma: 1, em: 1, seed: 42 };
        let g = generate_ba_multigraph(&cfg).unwrap();
        assert_eq!(g.node_count(), 10);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(components(&g).len(), 1);
    }

    #[test]
    fn identical_seeds_reproduce_identical_graphs() {
        let cfg = SynthConfig { n: 60, d: 3, sigma: 4, nm: 2, gamma: 3, em: 2, seed: 7 };
        let a = generate_ba_multigraph(&cfg).unwrap();
        let b = generate_ba_multigraph(&cfg).unwrap();
        assert_eq!(serialize(&a), serialize(&b));
        let c = generate_ba_multigraph(&SynthConfig { seed: 8, ..cfg }).unwrap();
        assert_ne!(serialize(&a), serialize(&c));
    }

    #[test]
    fn generator_respects_alphabets_and_multiplicities() {
        let cfg = SynthConfig { n: 100, d: 5, sigma: 6, nm: 3, gamma: 4, em: 2, seed: 5 };
        let g = generate_ba_multigraph(&cfg).unwrap();
        let mut pairs = std::collections::HashSet::new();
        for u in 0..g.node_count() {
            let m = g.node_multiplicity(u);
            assert!((1..=cfg.nm).contains(&m));
            for &l in g.node_labels(u) {
                let name: usize = g.node_dictionary().name(l).parse().unwrap();
                assert!((1..=cfg.sigma).contains(&name));
            }
            for (a, b, _) in g.edges() {
                pairs.insert((a.min(b), a.max(b)));
            }
        }
        for &(u, v) in &pairs {
            let m = g.edge_multiplicity(u, v);
            assert!((1..=cfg.em).contains(&m), "pair ({u},{v}) multiplicity {m}");
        }
        // distinct pair count comes from the attachment process exactly
        let expected: usize = (1..cfg.n).map(|i| cfg.d.min(i)).sum();
        assert_eq!(pairs.len(), expected);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let base = SynthConfig { n: 10, d: 1, sigma: 2, nm: 1, gamma: 2, em: 1, seed: 0 };
        assert!(generate_ba_multigraph(&SynthConfig { d: 10, ..base.clone() }).is_err());
        assert!(generate_ba_multigraph(&SynthConfig { nm: 3, ..base.clone() }).is_err());
        assert!(generate_ba_multigraph(&SynthConfig { em: 3, ..base.clone() }).is_err());
        assert!(generate_ba_multigraph(&SynthConfig { sigma: 0, ..base }).is_err());
    }

    #[test]
    fn degree_distribution_has_a_heavy_tail() {
        let mut hits = 0;
        let seeds = 100;
        for seed in 0..seeds {
            let cfg = SynthConfig { n: 1000, d: 5, sigma: 1, nm: 1, gamma: 1, em: 1, seed };
            let g = generate_ba_multigraph(&cfg).unwrap();
            let degrees: Vec<usize> = (0..g.node_count()).map(|u| g.degree(u)).collect();
            let mean = degrees.iter().sum::<usize>() as f64 / degrees.len() as f64;
            let max = *degrees.iter().max().unwrap() as f64;
            if max > 4.0 * mean {
                hits += 1;
            }
        }
        assert!(hits >= 95, "heavy tail in only {hits}/{seeds} seeds");
    }

    #[test]
    fn extraction_of_k1_keeps_the_full_label_set() {
        let cfg = SynthConfig { n: 30, d: 2, sigma: 5, nm: 3, gamma: 2, em: 1, seed: 3 };
        let g = generate_ba_multigraph(&cfg).unwrap();
        let (q, emb) = extract_query(&g, &QueryExtractConfig { k: 1, seed: 11 }).unwrap();
        assert_eq!(q.node_count(), 1);
        assert_eq!(q.edge_count(), 0);
        assert_eq!(emb.len(), 1);
        let (qid, t) = emb[0];
        assert_eq!(qid, 0);
        let names: Vec<&str> = q.node_labels(0).iter().map(|&l| q.node_dictionary().name(l)).collect();
        let expect: Vec<&str> = g.node_labels(t).iter().map(|&l| g.node_dictionary().name(l)).collect();
        assert_eq!(names, expect);
    }

    #[test]
    fn extraction_is_connected_and_embedded() {
        let cfg = SynthConfig { n: 80, d: 3, sigma: 3, nm: 2, gamma: 3, em: 2, seed: 9 };
        let g = generate_ba_multigraph(&cfg).unwrap();
        for seed in 0..10 {
            let (q, emb) = extract_query(&g, &QueryExtractConfig { k: 6, seed }).unwrap();
            assert_eq!(q.node_count(), 6);
            assert_eq!(components(&q).len(), 1);
            // the recorded embedding really is a match: labels and edges
            let map: Vec<NodeId> = emb.iter().map(|&(_, t)| t).collect();
            for qn in 0..q.node_count() {
                for &l in q.node_labels(qn) {
                    let name = q.node_dictionary().name(l);
                    let gl = g.node_dictionary().id(name).unwrap();
                    assert!(g.node_labels(map[qn]).contains(&gl));
                }
            }
            for (u, v, l) in q.edges() {
                let gl = g.edge_dictionary().id(q.edge_dictionary().name(l)).unwrap();
                assert!(g.has_edge(map[u], map[v], gl));
            }
        }
    }

    #[test]
    fn extraction_saturates_to_the_component() {
        // a 4-node component plus an isolated node; k = 4 with every seed
        // must return a subgraph of the square, sometimes with the chords
        let mut g = LabeledMultigraph::new(false);
        let e = g.intern_edge_label("e");
        for _ in 0..5 {
            g.add_node(&[]);
        }
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)] {
            g.add_edge(u, v, e).unwrap();
        }
        let mut saw_saturated = false;
        for seed in 0..40 {
            let (q, emb) = extract_query(&g, &QueryExtractConfig { k: 4, seed }).unwrap();
            assert_eq!(q.node_count(), 4);
            assert!(q.edge_count() <= 6);
            assert!(emb.iter().all(|&(_, t)| t != 4));
            if q.edge_count() == 6 {
                saw_saturated = true;
            }
        }
        assert!(saw_saturated, "r = |R| case never hit across 40 seeds");
    }

    #[test]
    fn extraction_needs_a_large_enough_component() {
        let mut g = LabeledMultigraph::new(false);
        g.add_node(&[]);
        g.add_node(&[]);
        assert!(matches!(
            extract_query(&g, &QueryExtractConfig { k: 2, seed: 0 }),
            Err(Error::ComponentTooSmall(2))
        ));
    }

    #[test]
    fn topology_queries_have_the_expected_automorphism_counts() {
        let clique = make_topology_query(TopologyKind::Clique, 4, None, "1").unwrap();
        assert_eq!(clique.edge_count(), 6);
        assert_eq!(compute_automorphism_matrix(&clique).unwrap().len(), 24);

        let path = make_topology_query(TopologyKind::Path, 4, None, "1").unwrap();
        assert_eq!(compute_automorphism_matrix(&path).unwrap().len(), 2);

        // a 4-node star has 3 leaves: (k-1)! = 6 automorphisms
        let star = make_topology_query(TopologyKind::Star, 4, None, "1").unwrap();
        assert_eq!(compute_automorphism_matrix(&star).unwrap().len(), 6);
    }

    #[test]
    fn topology_size_limits() {
        assert!(make_topology_query(TopologyKind::Path, 1, None, "1").is_err());
        assert!(make_topology_query(TopologyKind::Star, 2, None, "1").is_err());
        assert!(make_topology_query(TopologyKind::Clique, 2, None, "1").is_ok());
    }

    #[test]
    fn directed_extraction_records_true_orientation() {
        let mut g = LabeledMultigraph::new(true);
        let e = g.intern_edge_label("e");
        for _ in 0..4 {
            g.add_node(&[]);
        }
        for (u, v) in [(0, 1), (2, 1), (2, 3), (3, 0)] {
            g.add_edge(u, v, e).unwrap();
        }
        for seed in 0..10 {
            let (q, emb) = extract_query(&g, &QueryExtractConfig { k: 3, seed }).unwrap();
            let map: Vec<NodeId> = emb.iter().map(|&(_, t)| t).collect();
            for (u, v, l) in q.edges() {
                let gl = g.edge_dictionary().id(q.edge_dictionary().name(l)).unwrap();
                assert!(g.has_edge(map[u], map[v], gl), "orientation flipped");
            }
        }
    }
}
