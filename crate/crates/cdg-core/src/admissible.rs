//! Vertex admissibility and the side-condition checkers behind the
//! hand-proved eliminations.
//!
//! A vertex is *admissible* when removing it, or any nonempty set of its
//! incident edges, always yields a graph that occurs for no solvable
//! group. It is *strongly admissible* when, additionally, removing it
//! together with any nonempty set of edges between its neighbors does the
//! same. These checkers only verify hypotheses; the group-theoretic
//! conclusions they feed stay literature facts in the knowledge base.

use crate::classify::Classifier;
use crate::graph::{Graph, GraphError, VertexSet};
use crate::rules;
use crate::verdict::Verdict;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors from the admissibility operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdmissibleError {
    Graph(GraphError),
    /// The two given sets do not partition the vertex's neighborhood.
    NotAPartition(String),
    /// The vertex has no non-neighbors.
    EmptyNonNeighbors,
    /// The vertex has no neighbors.
    EmptyNeighbors,
    /// The pair-witness search needs at least five vertices.
    TooFewVertices(u8),
    /// The pair-witness search requires the triple condition.
    TripleConditionFails,
}

impl fmt::Display for AdmissibleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdmissibleError::Graph(e) => write!(f, "{e}"),
            AdmissibleError::NotAPartition(d) => write!(f, "not a neighborhood partition: {d}"),
            AdmissibleError::EmptyNonNeighbors => write!(f, "the vertex has no non-neighbors"),
            AdmissibleError::EmptyNeighbors => write!(f, "the vertex has no neighbors"),
            AdmissibleError::TooFewVertices(n) => {
                write!(f, "need at least five vertices, got {n}")
            }
            AdmissibleError::TripleConditionFails => {
                write!(f, "the graph fails the triple condition")
            }
        }
    }
}

impl core::error::Error for AdmissibleError {}

impl From<GraphError> for AdmissibleError {
    fn from(e: GraphError) -> Self {
        AdmissibleError::Graph(e)
    }
}

/// Three-valued check result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriValue {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for TriValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriValue::Yes => "YES",
            TriValue::No => "NO",
            TriValue::Unknown => "UNKNOWN",
        })
    }
}

/// One checked subgraph: how it was produced, the graph itself, and its
/// classifier verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub operation: String,
    pub graph: Graph,
    pub verdict: Verdict,
}

/// Admissibility result with its evidence: for `Yes` the full list of
/// checked subgraphs (all eliminated), for `No` the single occurring
/// subgraph, for `Unknown` the subgraphs whose status is open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Admissibility {
    pub value: TriValue,
    pub evidence: Vec<Evidence>,
}

fn edge_set_label(edges: &[(u8, u8)]) -> String {
    let mut s = String::from("{");
    for (i, (u, v)) in edges.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&format!("p{u}-p{v}"));
    }
    s.push('}');
    s
}

fn run_checks(candidates: Vec<(String, Graph)>, cls: &mut Classifier<'_>) -> Admissibility {
    let mut all = Vec::with_capacity(candidates.len());
    for (operation, graph) in candidates {
        let verdict = cls.classify(&graph).verdict;
        let ev = Evidence {
            operation,
            graph,
            verdict,
        };
        if verdict == Verdict::Occurs {
            return Admissibility {
                value: TriValue::No,
                evidence: alloc::vec![ev],
            };
        }
        all.push(ev);
    }
    let unknowns: Vec<Evidence> = all
        .iter()
        .filter(|e| e.verdict == Verdict::Unknown)
        .cloned()
        .collect();
    if unknowns.is_empty() {
        Admissibility {
            value: TriValue::Yes,
            evidence: all,
        }
    } else {
        Admissibility {
            value: TriValue::Unknown,
            evidence: unknowns,
        }
    }
}

/// Subgraphs checked for plain admissibility of `p`: the vertex deletion,
/// then every nonempty subset of `p`'s incident edges deleted, in
/// ascending subset order.
fn admissibility_candidates(g: &Graph, p: u8) -> Result<Vec<(String, Graph)>, AdmissibleError> {
    let neighbors = g.neighbors(p)?;
    let mut candidates = Vec::new();
    candidates.push((format!("remove vertex p{p}"), g.delete_vertex(p)?));
    for subset in neighbors.nonempty_subsets() {
        let edges: Vec<(u8, u8)> = subset
            .iter()
            .map(|v| if v < p { (v, p) } else { (p, v) })
            .collect();
        let h = g.delete_edges(&edges)?;
        candidates.push((format!("delete edges {}", edge_set_label(&edges)), h));
    }
    Ok(candidates)
}

/// Checks whether `p` is an admissible vertex of `g`.
pub fn vertex_admissible(
    g: &Graph,
    p: u8,
    cls: &mut Classifier<'_>,
) -> Result<Admissibility, AdmissibleError> {
    Ok(run_checks(admissibility_candidates(g, p)?, cls))
}

/// Checks whether `p` is strongly admissible: admissible, and every
/// deletion of `p` together with a nonempty set of edges between `p`'s
/// neighbors is also eliminated.
pub fn vertex_strongly_admissible(
    g: &Graph,
    p: u8,
    cls: &mut Classifier<'_>,
) -> Result<Admissibility, AdmissibleError> {
    let mut candidates = admissibility_candidates(g, p)?;
    let neighbors = g.neighbors(p)?;
    let nbr_edges: Vec<(u8, u8)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| neighbors.contains(u) && neighbors.contains(v))
        .collect();
    let reduced = g.delete_vertex(p)?;
    // Vertex labels above p shift down by one after the deletion.
    let shift = |v: u8| if v > p { v - 1 } else { v };
    for mask in 1u32..(1 << nbr_edges.len()) {
        let chosen: Vec<(u8, u8)> = nbr_edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let shifted: Vec<(u8, u8)> = chosen.iter().map(|&(u, v)| (shift(u), shift(v))).collect();
        let h = reduced.delete_edges(&shifted)?;
        candidates.push((
            format!(
                "remove vertex p{p} and delete edges {}",
                edge_set_label(&chosen)
            ),
            h,
        ));
    }
    Ok(run_checks(candidates, cls))
}

/// Witness for the split-neighborhood condition: `v` in the second part,
/// adjacent to an admissible non-neighbor `s` of the pivot, with `w` a
/// non-neighbor of the pivot not adjacent to `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitWitness {
    pub v: u8,
    pub s: u8,
    pub w: u8,
}

/// Outcome of the split-neighborhood check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitOutcome {
    Satisfied(SplitWitness),
    Violated { condition: String },
}

/// Verifies the split-neighborhood configuration at pivot `q`: the graph
/// passes the triple condition, `part1`/`part2` partition `q`'s
/// neighborhood with no edges between them, and some `v` in `part2` is
/// adjacent to an admissible vertex `s` among `q`'s non-neighbors while
/// another non-neighbor `w` is non-adjacent to `v`. Returns the first
/// witness in `(v, s, w)` order.
pub fn check_split_neighborhood(
    g: &Graph,
    q: u8,
    part1: VertexSet,
    part2: VertexSet,
    cls: &mut Classifier<'_>,
) -> Result<SplitOutcome, AdmissibleError> {
    let neighborhood = g.neighbors(q)?;
    if part1.is_empty() || part2.is_empty() {
        return Err(AdmissibleError::NotAPartition(
            "both parts must be nonempty".into(),
        ));
    }
    if !part1.intersection(part2).is_empty() {
        return Err(AdmissibleError::NotAPartition("the parts overlap".into()));
    }
    if part1.union(part2) != neighborhood {
        return Err(AdmissibleError::NotAPartition(format!(
            "parts cover {} but the neighborhood is {neighborhood}",
            part1.union(part2)
        )));
    }
    let mut rho = g.vertex_set().difference(neighborhood);
    rho.remove(q);
    if rho.is_empty() {
        return Err(AdmissibleError::EmptyNonNeighbors);
    }

    if let Err(w) = rules::satisfies_palfy(g) {
        return Ok(SplitOutcome::Violated {
            condition: format!("the triple condition fails: {}", w.data),
        });
    }
    for u in part1.iter() {
        for v in part2.iter() {
            if g.has_edge(u, v) {
                return Ok(SplitOutcome::Violated {
                    condition: format!("the parts are joined by the edge p{u}-p{v}"),
                });
            }
        }
    }
    for v in part2.iter() {
        for s in rho.iter() {
            if !g.has_edge(v, s) {
                continue;
            }
            if vertex_admissible(g, s, cls)?.value != TriValue::Yes {
                continue;
            }
            for w in rho.iter() {
                if w != v && !g.has_edge(w, v) {
                    return Ok(SplitOutcome::Satisfied(SplitWitness { v, s, w }));
                }
            }
        }
    }
    Ok(SplitOutcome::Violated {
        condition: "no vertex in the second part has an admissible neighbor among the \
                    pivot's non-neighbors together with a non-adjacent non-neighbor"
            .into(),
    })
}

/// Status of one condition of the normal-Sylow hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionStatus {
    Holds,
    Fails,
    Unknown,
}

impl fmt::Display for ConditionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConditionStatus::Holds => "HOLDS",
            ConditionStatus::Fails => "FAILS",
            ConditionStatus::Unknown => "UNKNOWN",
        })
    }
}

/// One checked condition with a human-readable account.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub status: ConditionStatus,
    pub detail: String,
}

/// A complete subgraph `pi_star ∪ rho_star` together with the derived set
/// `tau`: the union of all cliques containing it, minus itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueCase {
    pub pi_star: VertexSet,
    pub rho_star: VertexSet,
    pub tau: VertexSet,
}

/// The five-condition report for one pivot vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalSylowReport {
    pub pivot: u8,
    pub neighbors: VertexSet,
    pub non_neighbors: VertexSet,
    pub conditions: [ConditionReport; 5],
    pub clique_cases: Vec<CliqueCase>,
}

impl NormalSylowReport {
    pub fn all_hold(&self) -> bool {
        self.conditions
            .iter()
            .all(|c| c.status == ConditionStatus::Holds)
    }
}

enum SubgraphSweep {
    AllEliminated,
    Occurring(Graph),
    Blocked(Vec<Graph>),
}

/// Checks that no proper connected spanning subgraph of the graph induced
/// on `keep` occurs: every way of removing at least one edge while
/// staying connected must classify as eliminated.
fn sweep_proper_connected_spanning(
    g: &Graph,
    keep: VertexSet,
    cls: &mut Classifier<'_>,
) -> Result<SubgraphSweep, AdmissibleError> {
    let induced = g.induced_subgraph(keep)?;
    let edges = induced.edges();
    let mut blocked = Vec::new();
    for mask in 1u32..(1 << edges.len()) {
        let chosen: Vec<(u8, u8)> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let h = induced.delete_edges(&chosen)?;
        if !h.is_connected() {
            continue;
        }
        match cls.classify(&h).verdict {
            Verdict::Occurs => return Ok(SubgraphSweep::Occurring(h)),
            Verdict::Unknown => blocked.push(h),
            Verdict::DoesNotOccur => {}
        }
    }
    if blocked.is_empty() {
        Ok(SubgraphSweep::AllEliminated)
    } else {
        Ok(SubgraphSweep::Blocked(blocked))
    }
}

fn merge(status: &mut ConditionStatus, incoming: ConditionStatus) {
    use ConditionStatus::*;
    *status = match (&status, incoming) {
        (Fails, _) | (_, Fails) => Fails,
        (Unknown, _) | (_, Unknown) => Unknown,
        _ => Holds,
    };
}

/// Mechanically evaluates the five conditions that rule out a normal
/// Sylow subgroup at the pivot: (i)/(ii) mutual non-domination between
/// the neighborhood and its complement, (iii) admissibility of the
/// neighborhood plus elimination of the relevant connected subgraphs,
/// (iv) the same for the derived sets of every complete
/// `pi_star ∪ rho_star`, and (v) the spanning two-clique analysis.
pub fn check_normal_sylow_hypothesis(
    g: &Graph,
    p: u8,
    cls: &mut Classifier<'_>,
) -> Result<NormalSylowReport, AdmissibleError> {
    let pi = g.neighbors(p)?;
    let mut rho = g.vertex_set().difference(pi);
    rho.remove(p);
    if pi.is_empty() {
        return Err(AdmissibleError::EmptyNeighbors);
    }
    if rho.is_empty() {
        return Err(AdmissibleError::EmptyNonNeighbors);
    }

    // (i) every non-neighbor misses some neighbor.
    let mut c1 = ConditionReport {
        status: ConditionStatus::Holds,
        detail: String::new(),
    };
    for v in rho.iter() {
        if pi.iter().all(|u| g.has_edge(u, v)) {
            c1.status = ConditionStatus::Fails;
            c1.detail = format!("p{v} is adjacent to every neighbor of p{p}");
            break;
        }
    }
    if c1.status == ConditionStatus::Holds {
        c1.detail = "every non-neighbor misses some neighbor".into();
    }

    // (ii) every neighbor misses some non-neighbor.
    let mut c2 = ConditionReport {
        status: ConditionStatus::Holds,
        detail: String::new(),
    };
    for u in pi.iter() {
        if rho.iter().all(|v| g.has_edge(u, v)) {
            c2.status = ConditionStatus::Fails;
            c2.detail = format!("p{u} is adjacent to every non-neighbor of p{p}");
            break;
        }
    }
    if c2.status == ConditionStatus::Holds {
        c2.detail = "every neighbor misses some non-neighbor".into();
    }

    // (iii) neighbors admissible; no proper connected subgraph on
    // {p} ∪ pi_star ∪ rho occurs, for any nonempty pi_star.
    let mut c3 = ConditionReport {
        status: ConditionStatus::Holds,
        detail: String::new(),
    };
    let mut c3_notes: Vec<String> = Vec::new();
    for u in pi.iter() {
        match vertex_admissible(g, u, cls)?.value {
            TriValue::Yes => {}
            TriValue::No => {
                merge(&mut c3.status, ConditionStatus::Fails);
                c3_notes.push(format!("p{u} is not admissible"));
            }
            TriValue::Unknown => {
                merge(&mut c3.status, ConditionStatus::Unknown);
                c3_notes.push(format!("admissibility of p{u} is open"));
            }
        }
    }
    for pi_star in pi.nonempty_subsets() {
        let mut keep = pi_star.union(rho);
        keep.insert(p);
        match sweep_proper_connected_spanning(g, keep, cls)? {
            SubgraphSweep::AllEliminated => {}
            SubgraphSweep::Occurring(h) => {
                merge(&mut c3.status, ConditionStatus::Fails);
                c3_notes.push(format!("a connected subgraph on {keep} occurs: {h:?}"));
            }
            SubgraphSweep::Blocked(hs) => {
                merge(&mut c3.status, ConditionStatus::Unknown);
                c3_notes.push(format!("{} subgraphs on {keep} are open", hs.len()));
            }
        }
    }
    c3.detail = if c3_notes.is_empty() {
        "all neighbors admissible; every relevant connected subgraph eliminated".into()
    } else {
        c3_notes.join("; ")
    };

    // (iv) for each complete pi_star ∪ rho_star, the derived vertices are
    // admissible and the complements of their subsets are eliminated.
    let mut c4 = ConditionReport {
        status: ConditionStatus::Holds,
        detail: String::new(),
    };
    let mut c4_notes: Vec<String> = Vec::new();
    let mut clique_cases = Vec::new();
    for pi_star in pi.nonempty_subsets() {
        for rho_star in rho.nonempty_subsets() {
            let base = pi_star.union(rho_star);
            if !is_clique(g, base) {
                continue;
            }
            let mut extent = VertexSet::EMPTY;
            for candidate in g.vertex_set().nonempty_subsets() {
                if base.is_subset_of(candidate) && is_clique(g, candidate) {
                    extent = extent.union(candidate);
                }
            }
            let tau = extent.difference(base);
            clique_cases.push(CliqueCase {
                pi_star,
                rho_star,
                tau,
            });
            for t in tau.iter() {
                match vertex_admissible(g, t, cls)?.value {
                    TriValue::Yes => {}
                    TriValue::No => {
                        merge(&mut c4.status, ConditionStatus::Fails);
                        c4_notes.push(format!("derived vertex p{t} is not admissible"));
                    }
                    TriValue::Unknown => {
                        merge(&mut c4.status, ConditionStatus::Unknown);
                        c4_notes.push(format!("admissibility of derived vertex p{t} is open"));
                    }
                }
            }
            for tau_star in tau.nonempty_subsets() {
                let keep = g.vertex_set().difference(tau_star);
                match sweep_proper_connected_spanning(g, keep, cls)? {
                    SubgraphSweep::AllEliminated => {}
                    SubgraphSweep::Occurring(h) => {
                        merge(&mut c4.status, ConditionStatus::Fails);
                        c4_notes.push(format!("a connected subgraph on {keep} occurs: {h:?}"));
                    }
                    SubgraphSweep::Blocked(hs) => {
                        merge(&mut c4.status, ConditionStatus::Unknown);
                        c4_notes.push(format!("{} subgraphs on {keep} are open", hs.len()));
                    }
                }
            }
        }
    }
    c4.detail = if c4_notes.is_empty() {
        format!(
            "{} complete cases, all derived sets verified",
            clique_cases.len()
        )
    } else {
        c4_notes.join("; ")
    };

    // (v) spanning two-clique subgraphs must fail the size inequality, or
    // carry sizes (m, 2^m - 1) with m > 1 and occur.
    let mut c5 = ConditionReport {
        status: ConditionStatus::Holds,
        detail: String::new(),
    };
    let mut c5_notes: Vec<String> = Vec::new();
    let full = g.vertex_set();
    for side in full.nonempty_subsets() {
        if !side.contains(1) {
            continue; // each split counted once
        }
        let other = full.difference(side);
        if other.is_empty() || !is_clique(g, side) || !is_clique(g, other) {
            continue;
        }
        let (a, b) = {
            let (x, y) = (side.len(), other.len());
            if x <= y {
                (x, y)
            } else {
                (y, x)
            }
        };
        if (b as u32) < (1u32 << a) - 1 {
            c5_notes.push(format!(
                "split {side} | {other}: sizes ({a},{b}) violate the size inequality"
            ));
            continue;
        }
        let two_clique = two_complete_components(a, b);
        let verdict = cls.classify(&two_clique).verdict;
        let sizes_fit = a > 1 && (b as u32) == (1u32 << a) - 1;
        match (verdict, sizes_fit) {
            (Verdict::Occurs, true) => {
                c5_notes.push(format!("split {side} | {other}: occurs with allowed sizes"));
            }
            (Verdict::Occurs, false) => {
                merge(&mut c5.status, ConditionStatus::Fails);
                c5_notes.push(format!(
                    "split {side} | {other}: occurs but sizes ({a},{b}) are not (m, 2^m-1)"
                ));
            }
            (Verdict::DoesNotOccur, _) => {
                // Eliminated for a reason other than the size inequality.
                merge(&mut c5.status, ConditionStatus::Unknown);
                c5_notes.push(format!(
                    "split {side} | {other}: eliminated, but not by the size inequality"
                ));
            }
            (Verdict::Unknown, _) => {
                merge(&mut c5.status, ConditionStatus::Unknown);
                c5_notes.push(format!("split {side} | {other}: occurrence is open"));
            }
        }
    }
    c5.detail = if c5_notes.is_empty() {
        "no spanning two-clique subgraph exists".into()
    } else {
        c5_notes.join("; ")
    };

    Ok(NormalSylowReport {
        pivot: p,
        neighbors: pi,
        non_neighbors: rho,
        conditions: [c1, c2, c3, c4, c5],
        clique_cases,
    })
}

fn is_clique(g: &Graph, s: VertexSet) -> bool {
    let members: Vec<u8> = s.iter().collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

fn two_complete_components(a: u8, b: u8) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=a {
        for v in (u + 1)..=a {
            edges.push((u, v));
        }
    }
    for u in (a + 1)..=(a + b) {
        for v in (u + 1)..=(a + b) {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(a + b, &edges).expect("sizes within cap")
}

/// A four-vertex witness: `a` adjacent to admissible `c`, `b` not
/// adjacent to `c`, and `a` not adjacent to admissible `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdmissiblePair {
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub d: u8,
}

/// Searches for the lexicographically first admissible-pair witness.
/// Vertices whose admissibility is open are skipped.
pub fn admissible_pair_witness(
    g: &Graph,
    cls: &mut Classifier<'_>,
) -> Result<Option<AdmissiblePair>, AdmissibleError> {
    let n = g.vertex_count();
    if n < 5 {
        return Err(AdmissibleError::TooFewVertices(n));
    }
    if rules::satisfies_palfy(g).is_err() {
        return Err(AdmissibleError::TripleConditionFails);
    }
    let mut admissible = [false; 8];
    for v in g.vertices() {
        admissible[(v - 1) as usize] = vertex_admissible(g, v, cls)?.value == TriValue::Yes;
    }
    for a in 1..=n {
        for b in 1..=n {
            if b == a {
                continue;
            }
            for c in 1..=n {
                if c == b || !g.has_edge(a, c) || g.has_edge(b, c) || !admissible[(c - 1) as usize]
                {
                    continue;
                }
                for d in 1..=n {
                    if d != a && !g.has_edge(a, d) && admissible[(d - 1) as usize] {
                        return Ok(Some(AdmissiblePair { a, b, c, d }));
                    }
                }
            }
        }
    }
    Ok(None)
}
