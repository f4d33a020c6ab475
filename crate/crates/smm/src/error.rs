use thiserror::Error;

/// Errors produced by graph construction, parsing and the matching pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown node id {0}")]
    UnknownNode(usize),

    #[error("query and target disagree on directedness")]
    DirectednessMismatch,

    #[error("query and target do not share label dictionaries")]
    DictionaryMismatch,

    #[error("query too large for symmetry analysis ({0} nodes, limit {limit})", limit = crate::symmetry::MAX_SYMMETRY_NODES)]
    QueryTooLargeForSymmetry(usize),

    #[error("oracle limit exceeded: query {query_nodes} nodes (max {max_query}), target {target_nodes} nodes (max {max_target})")]
    OracleLimit {
        query_nodes: usize,
        target_nodes: usize,
        max_query: usize,
        max_target: usize,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("no connected component with at least {0} nodes")]
    ComponentTooSmall(usize),

    #[error("match count {no_sbc} with symmetry breaking off is not {sbc} x {aut} (automorphism count)")]
    QuotientViolation { no_sbc: u64, sbc: u64, aut: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
