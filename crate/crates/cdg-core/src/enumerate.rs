//! Exhaustive enumeration of graph isomorphism classes on `n` vertices.
//!
//! Classes are generated level by level: every class on `k` vertices is
//! extended by one new vertex with every possible neighbor set, and the
//! results are deduplicated by canonical key. This reproduces exactly the
//! universe obtained by canonicalizing all `2^(n(n-1)/2)` labeled graphs
//! (checked in tests), just without the exponential sweep.

use crate::graph::{CanonicalKey, Diameter, Graph, MAX_VERTICES};
use crate::rules;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// Errors from universe construction and filtering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    VertexCountOutOfRange(u8),
    UnknownPredicate(alloc::string::String),
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::VertexCountOutOfRange(n) => {
                write!(f, "vertex count {n} outside 1..={MAX_VERTICES}")
            }
            EnumerateError::UnknownPredicate(name) => write!(f, "unknown predicate {name:?}"),
        }
    }
}

impl core::error::Error for EnumerateError {}

/// One representative graph per isomorphism class, in ascending canonical
/// key order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphUniverse {
    pub n: u8,
    pub graphs: Vec<Graph>,
}

impl GraphUniverse {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Graph> {
        self.graphs.iter()
    }
}

/// Enumerates all isomorphism classes on `n` vertices, optionally keeping
/// only the connected ones. Deterministic: representatives are canonical
/// and sorted by key.
///
/// `n = 8` works but takes a while; callers with a user interface should
/// warn before invoking it.
pub fn enumerate_graphs(n: u8, connected_only: bool) -> Result<GraphUniverse, EnumerateError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(EnumerateError::VertexCountOutOfRange(n));
    }
    let mut classes: BTreeSet<CanonicalKey> = BTreeSet::new();
    classes.insert(Graph::empty(1).expect("single vertex").canonical_form());
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for key in &classes {
            let g = key.to_graph();
            for mask in 0u16..(1 << (k - 1)) {
                next.insert(g.extend_with(mask as u8).canonical_form());
            }
        }
        classes = next;
    }
    let graphs = classes
        .into_iter()
        .map(|k| k.to_graph())
        .filter(|g| !connected_only || g.is_connected())
        .collect();
    Ok(GraphUniverse { n, graphs })
}

/// Keeps the universe members passing a named structural test, preserving
/// order. Recognized names: `palfy`, `diam3`, `diam_le_2`, `connected`,
/// `true`.
pub fn filter_universe(
    u: &GraphUniverse,
    predicate: &str,
) -> Result<GraphUniverse, EnumerateError> {
    let test: fn(&Graph) -> bool = match predicate {
        "palfy" => |g| rules::satisfies_palfy(g).is_ok(),
        "diam3" => |g| g.diameter() == Diameter::Finite(3),
        "diam_le_2" => |g| matches!(g.diameter(), Diameter::Finite(d) if d <= 2),
        "connected" => Graph::is_connected,
        "true" => |_| true,
        other => return Err(EnumerateError::UnknownPredicate(other.into())),
    };
    Ok(GraphUniverse {
        n: u.n,
        graphs: u.graphs.iter().copied().filter(test).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference universe: canonicalize every labeled graph.
    fn labeled_sweep(n: u8) -> BTreeSet<CanonicalKey> {
        let pairs = (n as u32 * (n as u32 - 1)) / 2;
        let mut keys = BTreeSet::new();
        for word in 0u32..(1u32 << pairs) {
            keys.insert(crate::graph::Graph::from_edge_word(n, word).canonical_form());
        }
        keys
    }

    #[test]
    fn extension_matches_labeled_sweep_small() {
        for n in 1..=6u8 {
            let ext: Vec<CanonicalKey> = enumerate_graphs(n, false)
                .unwrap()
                .graphs
                .iter()
                .map(Graph::canonical_form)
                .collect();
            let swept: Vec<CanonicalKey> = labeled_sweep(n).into_iter().collect();
            assert_eq!(ext, swept, "universe mismatch at n={n}");
        }
    }

    #[test]
    fn class_counts() {
        let all: Vec<usize> = (1..=6)
            .map(|n| enumerate_graphs(n, false).unwrap().len())
            .collect();
        assert_eq!(all, [1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6)
            .map(|n| enumerate_graphs(n, true).unwrap().len())
            .collect();
        assert_eq!(connected, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_graphs(0, false).is_err());
        assert!(enumerate_graphs(9, false).is_err());
    }

    #[test]
    fn universe_is_duplicate_free_and_sorted() {
        let u = enumerate_graphs(6, true).unwrap();
        let keys: Vec<CanonicalKey> = u.graphs.iter().map(Graph::canonical_form).collect();
        for w in keys.windows(2) {
            assert!(w[0] < w[1], "keys must be strictly increasing");
        }
        for g in u.iter() {
            assert!(g.is_connected());
            assert_eq!(g.canonical_form().to_graph(), *g);
        }
    }

    #[test]
    fn filters() {
        let u6 = enumerate_graphs(6, true).unwrap();
        let palfy = filter_universe(&u6, "palfy").unwrap();
        assert_eq!(palfy.len(), 35);
        let survivors = filter_universe(&palfy, "diam_le_2").unwrap();
        assert_eq!(survivors.len(), 27);
        assert_eq!(filter_universe(&u6, "true").unwrap(), u6);
        assert!(filter_universe(&u6, "no_such_test").is_err());
    }

    #[test]
    fn connected_plus_disconnected_covers_all() {
        for n in 1..=6u8 {
            let all = enumerate_graphs(n, false).unwrap().len();
            let conn = enumerate_graphs(n, true).unwrap().len();
            assert!(conn <= all);
            let disconnected = enumerate_graphs(n, false)
                .unwrap()
                .iter()
                .filter(|g| !g.is_connected())
                .count();
            assert_eq!(conn + disconnected, all);
        }
    }
}
