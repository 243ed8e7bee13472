//! Simple undirected graphs on at most eight labeled vertices.
//!
//! Vertices carry 1-based labels `1..=n` and adjacency is stored as one
//! neighbor bitmask per vertex. Graphs are immutable values: every
//! "mutating" operation returns a fresh graph, so canonical keys can be
//! used to memoize anything computed from one.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Hard cap on the vertex count. Canonicalization enumerates all `n!`
/// relabelings, which stays cheap up to this bound.
pub const MAX_VERTICES: u8 = 8;

/// Errors raised by graph constructors and accessors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    /// Vertex count outside `1..=MAX_VERTICES`.
    VertexCountOutOfRange(u8),
    /// A vertex label outside `1..=n`.
    VertexOutOfRange { vertex: u8, n: u8 },
    /// An edge from a vertex to itself.
    SelfLoop(u8),
    /// An induced subgraph was requested on an empty vertex set.
    EmptyVertexSet,
    /// An edge deletion named a pair that is not an edge.
    NotAnEdge(u8, u8),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::VertexCountOutOfRange(n) => {
                write!(f, "vertex count {n} outside 1..={MAX_VERTICES}")
            }
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} outside 1..={n}")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::EmptyVertexSet => write!(f, "empty vertex set"),
            GraphError::NotAnEdge(u, v) => write!(f, "{u}-{v} is not an edge"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A subset of the vertex labels `1..=8`, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    bits: u8,
}

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    /// The full set `{1, .., n}`.
    pub fn full(n: u8) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet {
            bits: if n >= 8 { 0xff } else { (1u8 << n) - 1 },
        }
    }

    /// Builds a set from labels; labels must lie in `1..=8`.
    pub fn from_labels(labels: &[u8]) -> Result<VertexSet, GraphError> {
        let mut s = VertexSet::EMPTY;
        for &v in labels {
            if v == 0 || v > MAX_VERTICES {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: MAX_VERTICES,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_mask(bits: u8) -> VertexSet {
        VertexSet { bits }
    }

    pub fn insert(&mut self, v: u8) {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        self.bits |= 1 << (v - 1);
    }

    pub fn remove(&mut self, v: u8) {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        self.bits &= !(1 << (v - 1));
    }

    pub fn contains(self, v: u8) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.bits & (1 << (v - 1)) != 0
    }

    pub fn len(self) -> u8 {
        self.bits.count_ones() as u8
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    /// Smallest label in the set, if any.
    pub fn smallest(self) -> Option<u8> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as u8 + 1)
        }
    }

    /// Labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        (1..=MAX_VERTICES).filter(move |&v| self.contains(v))
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & !other.bits,
        }
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// All nonempty subsets, in ascending bitmask order.
    pub fn nonempty_subsets(self) -> impl Iterator<Item = VertexSet> {
        let m = self.bits;
        (1u16..=0xff)
            .map(|b| b as u8)
            .filter(move |b| b & !m == 0 && *b != 0)
            .map(VertexSet::from_mask)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for v in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "p{v}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Diameter of a graph: the largest shortest-path distance, or `Infinite`
/// when the graph is disconnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u8),
    Infinite,
}

impl Diameter {
    pub fn is_finite(self) -> bool {
        matches!(self, Diameter::Finite(_))
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// Bit index of the unordered pair `(a, b)` of 0-based vertex indices.
#[inline]
fn pair_bit(a: u8, b: u8) -> u32 {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    (hi as u32 * (hi as u32 - 1)) / 2 + lo as u32
}

/// Runs `f` on every permutation of `0..n` (as u8 slices), each exactly once.
pub(crate) fn for_each_permutation<F: FnMut(&[u8])>(n: usize, mut f: F) {
    debug_assert!(n <= MAX_VERTICES as usize);
    let mut p: [u8; 8] = [0, 1, 2, 3, 4, 5, 6, 7];
    let mut c = [0usize; 8];
    f(&p[..n]);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p[..n]);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Isomorphism-invariant identity of a graph: the vertex count together
/// with the minimum adjacency bit-word over all vertex relabelings.
///
/// Two graphs on at most eight vertices are isomorphic if and only if their
/// keys are equal, and every key decodes back to a representative graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    n: u8,
    bits: u32,
}

/// Errors from decoding a serialized canonical key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KeyError {
    BadHex(String),
    BadLength(usize),
    VertexCountOutOfRange(u8),
    BitsOutOfRange(u32),
    /// The encoded adjacency word is not minimal over relabelings.
    NotCanonical,
}

impl fmt::Display for KeyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KeyError::BadHex(s) => write!(f, "invalid hex key {s:?}"),
            KeyError::BadLength(l) => write!(f, "key must be 5 bytes, got {l}"),
            KeyError::VertexCountOutOfRange(n) => write!(f, "key vertex count {n} out of range"),
            KeyError::BitsOutOfRange(b) => write!(f, "key bits {b:#x} exceed the edge-word range"),
            KeyError::NotCanonical => write!(f, "key is not a canonical form"),
        }
    }
}

impl core::error::Error for KeyError {}

impl CanonicalKey {
    pub fn vertex_count(self) -> u8 {
        self.n
    }

    /// The representative graph this key encodes.
    pub fn to_graph(self) -> Graph {
        Graph::from_edge_word(self.n, self.bits)
    }

    pub fn bytes(self) -> [u8; 5] {
        let b = self.bits.to_be_bytes();
        [self.n, b[0], b[1], b[2], b[3]]
    }

    pub fn hex(self) -> String {
        let mut s = String::with_capacity(10);
        for byte in self.bytes() {
            let hi = b"0123456789abcdef"[(byte >> 4) as usize];
            let lo = b"0123456789abcdef"[(byte & 0xf) as usize];
            s.push(hi as char);
            s.push(lo as char);
        }
        s
    }

    /// Decodes and fully validates a key previously produced by [`hex`](Self::hex).
    pub fn from_hex(s: &str) -> Result<CanonicalKey, KeyError> {
        let digits: Vec<u8> = s
            .bytes()
            .map(|b| match b {
                b'0'..=b'9' => Ok(b - b'0'),
                b'a'..=b'f' => Ok(b - b'a' + 10),
                b'A'..=b'F' => Ok(b - b'A' + 10),
                _ => Err(KeyError::BadHex(String::from(s))),
            })
            .collect::<Result<_, _>>()?;
        if digits.len() != 10 {
            return Err(KeyError::BadLength(digits.len() / 2));
        }
        let bytes: Vec<u8> = digits.chunks(2).map(|c| (c[0] << 4) | c[1]).collect();
        let n = bytes[0];
        if n == 0 || n > MAX_VERTICES {
            return Err(KeyError::VertexCountOutOfRange(n));
        }
        let bits = u32::from_be_bytes([bytes[1], bytes[2], bytes[3], bytes[4]]);
        let max_edges = (n as u32 * (n as u32 - 1)) / 2;
        if max_edges < 32 && bits >> max_edges != 0 {
            return Err(KeyError::BitsOutOfRange(bits));
        }
        let key = CanonicalKey { n, bits };
        if key.to_graph().canonical_form() != key {
            return Err(KeyError::NotCanonical);
        }
        Ok(key)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hex())
    }
}

/// A finite simple undirected graph on labeled vertices `1..=n`, `n <= 8`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: u8,
    adj: [u8; 8],
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edge_list(n: u8, edges: &[(u8, u8)]) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCountOutOfRange(n));
        }
        let mut g = Graph { n, adj: [0; 8] };
        for &(u, v) in edges {
            if u == 0 || u > n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v == 0 || v > n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[(u - 1) as usize] |= 1 << (v - 1);
            g.adj[(v - 1) as usize] |= 1 << (u - 1);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: u8) -> Result<Graph, GraphError> {
        Graph::from_edge_list(n, &[])
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: u8) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCountOutOfRange(n));
        }
        let mut g = Graph { n, adj: [0; 8] };
        let full = if n == 8 { 0xff } else { (1u8 << n) - 1 };
        for i in 0..n as usize {
            g.adj[i] = full & !(1 << i);
        }
        Ok(g)
    }

    /// Reconstructs a graph from its packed upper-triangle edge word.
    pub(crate) fn from_edge_word(n: u8, word: u32) -> Graph {
        let mut g = Graph { n, adj: [0; 8] };
        for b in 1..n {
            for a in 0..b {
                if word & (1 << pair_bit(a, b)) != 0 {
                    g.adj[a as usize] |= 1 << b;
                    g.adj[b as usize] |= 1 << a;
                }
            }
        }
        g
    }

    pub fn vertex_count(&self) -> u8 {
        self.n
    }

    /// Vertex labels `1..=n` in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = u8> {
        1..=self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_mask(if self.n == 8 {
            0xff
        } else {
            (1u8 << self.n) - 1
        })
    }

    pub fn has_edge(&self, u: u8, v: u8) -> bool {
        u >= 1
            && v >= 1
            && u <= self.n
            && v <= self.n
            && u != v
            && self.adj[(u - 1) as usize] & (1 << (v - 1)) != 0
    }

    /// Number of neighbors of `v`.
    pub fn degree(&self, v: u8) -> Result<u8, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[(v - 1) as usize].count_ones() as u8)
    }

    pub fn neighbors(&self, v: u8) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_mask(self.adj[(v - 1) as usize]))
    }

    fn check_vertex(&self, v: u8) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Edges as ordered pairs `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for u in 1..self.n {
            for v in (u + 1)..=self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n as usize]
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Same vertices, edge present exactly where absent before.
    pub fn complement(&self) -> Graph {
        let full = if self.n == 8 {
            0xff
        } else {
            (1u8 << self.n) - 1
        };
        let mut g = Graph {
            n: self.n,
            adj: [0; 8],
        };
        for i in 0..self.n as usize {
            g.adj[i] = full & !self.adj[i] & !(1 << i);
        }
        g
    }

    fn component_mask_from(&self, start: usize) -> u8 {
        let mut seen = 1u8 << start;
        loop {
            let mut next = seen;
            for v in 0..self.n as usize {
                if seen & (1 << v) != 0 {
                    next |= self.adj[v];
                }
            }
            if next == seen {
                return seen;
            }
            seen = next;
        }
    }

    /// Maximal connected pieces, ordered by increasing size then by
    /// smallest member. This ordering fixes all downstream tie-breaking.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut comps: Vec<u8> = Vec::new();
        let mut seen = 0u8;
        for v in 0..self.n as usize {
            if seen & (1 << v) == 0 {
                let m = self.component_mask_from(v);
                seen |= m;
                comps.push(m);
            }
        }
        comps.sort_by_key(|m| (m.count_ones(), m.trailing_zeros()));
        comps.into_iter().map(VertexSet::from_mask).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_mask_from(0).count_ones() as u8 == self.n
    }

    /// Largest shortest-path distance over vertex pairs; `Infinite` when
    /// disconnected.
    pub fn diameter(&self) -> Diameter {
        if !self.is_connected() {
            return Diameter::Infinite;
        }
        let mut best = 0u8;
        for s in 0..self.n as usize {
            let mut seen = 1u8 << s;
            let mut frontier = seen;
            let mut dist = 0u8;
            while seen.count_ones() as u8 != self.n {
                let mut next = 0u8;
                for v in 0..self.n as usize {
                    if frontier & (1 << v) != 0 {
                        next |= self.adj[v];
                    }
                }
                frontier = next & !seen;
                seen |= next;
                dist += 1;
            }
            best = best.max(dist);
        }
        Diameter::Finite(best)
    }

    /// Subgraph induced on `keep`, vertices relabeled `1..=|keep|`
    /// preserving label order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<Graph, GraphError> {
        if keep.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        for v in keep.iter() {
            self.check_vertex(v)?;
        }
        let kept: Vec<u8> = keep.iter().collect();
        let mut g = Graph {
            n: kept.len() as u8,
            adj: [0; 8],
        };
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        Ok(g)
    }

    /// Same vertices with the listed edges removed; every listed pair must
    /// currently be an edge.
    pub fn delete_edges(&self, edges: &[(u8, u8)]) -> Result<Graph, GraphError> {
        let mut g = *self;
        for &(u, v) in edges {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(GraphError::NotAnEdge(u, v));
            }
            g.adj[(u - 1) as usize] &= !(1 << (v - 1));
            g.adj[(v - 1) as usize] &= !(1 << (u - 1));
        }
        Ok(g)
    }

    /// Removes one vertex and relabels the rest, preserving order.
    pub fn delete_vertex(&self, v: u8) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut keep = self.vertex_set();
        keep.remove(v);
        if keep.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        self.induced_subgraph(keep)
    }

    /// Applies a relabeling: 0-based `perm[i]` is the new 0-based index of
    /// the vertex currently labeled `i + 1`.
    pub fn relabel(&self, perm: &[u8]) -> Graph {
        debug_assert_eq!(perm.len(), self.n as usize);
        let mut g = Graph {
            n: self.n,
            adj: [0; 8],
        };
        for b in 1..self.n {
            for a in 0..b {
                if self.adj[a as usize] & (1 << b) != 0 {
                    let (x, y) = (perm[a as usize], perm[b as usize]);
                    g.adj[x as usize] |= 1 << y;
                    g.adj[y as usize] |= 1 << x;
                }
            }
        }
        g
    }

    /// Appends a new highest-labeled vertex whose 0-based neighbor mask is
    /// `mask`; used by the enumerator.
    pub(crate) fn extend_with(&self, mask: u8) -> Graph {
        debug_assert!(self.n < MAX_VERTICES);
        debug_assert_eq!(mask & !((1u8 << self.n) - 1), 0);
        let mut g = Graph {
            n: self.n + 1,
            adj: self.adj,
        };
        let k = self.n as usize;
        g.adj[k] = mask;
        for v in 0..k {
            if mask & (1 << v) != 0 {
                g.adj[v] |= 1 << k;
            }
        }
        g
    }

    /// The canonical key: minimum edge word over all `n!` relabelings.
    pub fn canonical_form(&self) -> CanonicalKey {
        self.canonical_form_with_perm().0
    }

    /// Canonical key plus the lexicographically first relabeling that
    /// attains it (`perm[i]` = new 0-based index of old index `i`).
    pub fn canonical_form_with_perm(&self) -> (CanonicalKey, [u8; 8]) {
        let n = self.n as usize;
        let edges = self.edges();
        let mut pairs = [(0u8, 0u8); 28];
        for (i, &(u, v)) in edges.iter().enumerate() {
            pairs[i] = (u - 1, v - 1);
        }
        let m = edges.len();
        let mut best = u32::MAX;
        let mut best_perm = [0u8; 8];
        for_each_permutation(n, |perm| {
            let mut w = 0u32;
            for &(u, v) in &pairs[..m] {
                w |= 1 << pair_bit(perm[u as usize], perm[v as usize]);
            }
            if w < best || (w == best && perm < &best_perm[..n]) {
                best = w;
                best_perm[..n].copy_from_slice(perm);
            }
        });
        (
            CanonicalKey {
                n: self.n,
                bits: best,
            },
            best_perm,
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={};edges=", self.n)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        write!(f, ")")
    }
}
