//! A small directed query/target pair used by the examples and tests.
//!
//! The query asks for a red node with two green nodes pointing at it over
//! brown edges. Its two green nodes are interchangeable, which makes the
//! instance just big enough to show every stage of the pipeline: domain
//! filtering, arc consistency, ordering, symmetry breaking and search. The
//! target admits exactly four matches, which collapse to two occurrences
//! once symmetry is broken.

use crate::format::parse;
use crate::graph::LabeledMultigraph;

pub const QUERY_TEXT: &str = "\
multigraph directed
v 0 red
v 1 green
v 2 green
e 1 0 brown
e 2 0 brown
";

pub const TARGET_TEXT: &str = "\
multigraph directed
v 0 green,red
v 1 red
v 2 green
v 3 green,red
v 4 red
e 2 0 brown
e 3 0 brown
e 2 1 brown
e 0 1 brown
e 3 4 brown
e 4 3 blue
e 0 3 blue
";

pub fn query() -> LabeledMultigraph {
    parse(QUERY_TEXT).expect("embedded query text is well formed")
}

pub fn target() -> LabeledMultigraph {
    parse(TARGET_TEXT).expect("embedded target text is well formed")
}

/// The query/target pair on shared label dictionaries.
pub fn instance() -> (LabeledMultigraph, LabeledMultigraph) {
    crate::graph::align_dictionaries(&query(), &target())
}
