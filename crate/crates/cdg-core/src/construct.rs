//! Occurrence constructions: joins of smaller graphs, and the degree sets
//! of a field of order `q^n` acted on by its multiplication group and then
//! its Galois group. The latter realize disconnected graphs with two
//! complete components.

use crate::factor::{self, FactorError};
use crate::graph::{Graph, GraphError, MAX_VERTICES};
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// Errors from the construction operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    /// Joins need at least two factors.
    TooFewFactors(usize),
    /// The joined graph would exceed the vertex cap.
    VertexBudgetExceeded(usize),
    /// The field parameter `q` must be prime.
    NotPrime(u64),
    /// The field exponent must be at least 2.
    ExponentTooSmall(u32),
    /// `q^n` does not fit in 64 bits.
    Overflow {
        q: u64,
        exponent: u32,
    },
    /// A degree set with no prime divisors induces no graph.
    NoPrimes,
    /// The primes dividing the degrees exceed the vertex cap.
    TooManyPrimes(usize),
    /// Component sizes for the certificate search must satisfy
    /// `1 <= small <= large <= 7`.
    BadComponentSizes {
        small: u8,
        large: u8,
    },
    Factor(FactorError),
    Graph(GraphError),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::TooFewFactors(k) => write!(f, "join needs >= 2 factors, got {k}"),
            ConstructError::VertexBudgetExceeded(k) => {
                write!(f, "join would have {k} vertices, cap is {MAX_VERTICES}")
            }
            ConstructError::NotPrime(q) => write!(f, "{q} is not prime"),
            ConstructError::ExponentTooSmall(n) => write!(f, "exponent {n} must be >= 2"),
            ConstructError::Overflow { q, exponent } => {
                write!(f, "{q}^{exponent} exceeds 64 bits")
            }
            ConstructError::NoPrimes => write!(f, "degree set has no prime divisors"),
            ConstructError::TooManyPrimes(k) => {
                write!(f, "{k} primes divide the degrees, cap is {MAX_VERTICES}")
            }
            ConstructError::BadComponentSizes { small, large } => {
                write!(
                    f,
                    "component sizes ({small},{large}) outside 1 <= a <= b <= 7"
                )
            }
            ConstructError::Factor(e) => write!(f, "{e}"),
            ConstructError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ConstructError {}

impl From<FactorError> for ConstructError {
    fn from(e: FactorError) -> Self {
        ConstructError::Factor(e)
    }
}

impl From<GraphError> for ConstructError {
    fn from(e: GraphError) -> Self {
        ConstructError::Graph(e)
    }
}

/// A finite set of character degrees; always contains 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegreeSet {
    degrees: BTreeSet<u64>,
}

impl DegreeSet {
    pub fn new(values: impl IntoIterator<Item = u64>) -> DegreeSet {
        let mut degrees: BTreeSet<u64> = values.into_iter().filter(|&d| d >= 1).collect();
        degrees.insert(1);
        DegreeSet { degrees }
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.degrees.iter().copied()
    }

    pub fn contains(&self, d: u64) -> bool {
        self.degrees.contains(&d)
    }

    pub fn largest(&self) -> u64 {
        *self.degrees.iter().next_back().expect("contains 1")
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        false // 1 is always present
    }
}

impl fmt::Display for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

/// A field-action occurrence certificate: the graph induced by the degree
/// set of a field of order `q^exponent` under its full multiplication and
/// Galois groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCertificate {
    pub q: u64,
    pub exponent: u32,
    pub degrees: DegreeSet,
}

impl fmt::Display for FieldCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FIELD(q={}, n={}) degrees {}",
            self.q, self.exponent, self.degrees
        )
    }
}

/// Disjoint union of the factors with every cross-factor edge added.
/// Factor `i`'s vertices are relabeled to follow factor `i-1`'s.
pub fn join_graphs(factors: &[Graph]) -> Result<Graph, ConstructError> {
    if factors.len() < 2 {
        return Err(ConstructError::TooFewFactors(factors.len()));
    }
    let total: usize = factors.iter().map(|g| g.vertex_count() as usize).sum();
    if total > MAX_VERTICES as usize {
        return Err(ConstructError::VertexBudgetExceeded(total));
    }
    let mut edges: Vec<(u8, u8)> = Vec::new();
    let mut offset = 0u8;
    let mut placed: Vec<(u8, u8)> = Vec::new(); // (start, len) per factor
    for g in factors {
        for (u, v) in g.edges() {
            edges.push((u + offset, v + offset));
        }
        placed.push((offset, g.vertex_count()));
        offset += g.vertex_count();
    }
    for (i, &(si, li)) in placed.iter().enumerate() {
        for &(sj, lj) in &placed[i + 1..] {
            for u in (si + 1)..=(si + li) {
                for v in (sj + 1)..=(sj + lj) {
                    edges.push((u, v));
                }
            }
        }
    }
    Ok(Graph::from_edge_list(total as u8, &edges)?)
}

fn checked_pow(q: u64, n: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(q)?;
    }
    Some(acc)
}

/// Degree set of the field construction: the divisors of the exponent
/// together with `q^n - 1`.
pub fn field_construction_degrees(q: u64, exponent: u32) -> Result<DegreeSet, ConstructError> {
    if !factor::is_prime(q) {
        return Err(ConstructError::NotPrime(q));
    }
    if exponent < 2 {
        return Err(ConstructError::ExponentTooSmall(exponent));
    }
    let power = checked_pow(q, exponent).ok_or(ConstructError::Overflow { q, exponent })?;
    let mut degrees: Vec<u64> = (1..=exponent as u64)
        .filter(|d| (exponent as u64).is_multiple_of(*d))
        .collect();
    degrees.push(power - 1);
    Ok(DegreeSet::new(degrees))
}

/// Builds the prime graph of a degree set: vertices are the primes
/// dividing some degree, labeled `1..=k` in ascending prime order; two
/// primes are adjacent when their product divides some degree. Returns the
/// graph together with the prime carried by each vertex label.
pub fn degree_set_to_graph(d: &DegreeSet) -> Result<(Graph, Vec<u64>), ConstructError> {
    let mut primes: BTreeSet<u64> = BTreeSet::new();
    for deg in d.iter() {
        if deg >= 2 {
            primes.extend(factor::distinct_primes(deg)?);
        }
    }
    let primes: Vec<u64> = primes.into_iter().collect();
    if primes.is_empty() {
        return Err(ConstructError::NoPrimes);
    }
    if primes.len() > MAX_VERTICES as usize {
        return Err(ConstructError::TooManyPrimes(primes.len()));
    }
    let mut edges: Vec<(u8, u8)> = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for (j, &r) in primes.iter().enumerate().skip(i + 1) {
            let product = (p as u128) * (r as u128);
            if d.iter().any(|deg| (deg as u128).is_multiple_of(product)) {
                edges.push((i as u8 + 1, j as u8 + 1));
            }
        }
    }
    let g = Graph::from_edge_list(primes.len() as u8, &edges)?;
    Ok((g, primes))
}

const SEARCH_PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

/// Searches the field-construction family for a certificate whose graph is
/// two complete components of sizes `(small, large)`: `small` distinct
/// primes dividing the exponent and `large` distinct primes dividing
/// `q^n - 1`, with no overlap. Scans `q` over the first ten primes and all
/// exponents with `q^n < 2^64`, returning the first valid hit in `(q, n)`
/// order, or `None` once the budget is exhausted.
pub fn search_field_certificate(
    small: u8,
    large: u8,
) -> Result<Option<FieldCertificate>, ConstructError> {
    if small == 0 || small > large || large > 7 {
        return Err(ConstructError::BadComponentSizes { small, large });
    }
    for q in SEARCH_PRIMES {
        for exponent in 2u32..=64 {
            if checked_pow(q, exponent).is_none() {
                break;
            }
            let degrees = field_construction_degrees(q, exponent)?;
            if let Some(cert) = validate_shape(q, exponent, &degrees, small, large)? {
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

/// Accepts the candidate only if its degree-set graph is exactly two
/// complete components of the requested sizes. Shared primes between the
/// exponent and `q^n - 1` merge the components and are rejected here.
fn validate_shape(
    q: u64,
    exponent: u32,
    degrees: &DegreeSet,
    small: u8,
    large: u8,
) -> Result<Option<FieldCertificate>, ConstructError> {
    let (g, _primes) = match degree_set_to_graph(degrees) {
        Ok(x) => x,
        Err(ConstructError::TooManyPrimes(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    if g.vertex_count() != small + large || g.is_connected() {
        return Ok(None);
    }
    let comps = g.connected_components();
    if comps.len() != 2 || comps[0].len() != small || comps[1].len() != large {
        return Ok(None);
    }
    for comp in &comps {
        let members: Vec<u8> = comp.iter().collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !g.has_edge(u, v) {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(FieldCertificate {
        q,
        exponent,
        degrees: degrees.clone(),
    }))
}

/// Checks a field certificate against a target graph: the degree set must
/// regenerate, and its prime graph must be isomorphic to the target.
pub fn validate_field_certificate(cert: &FieldCertificate, target: &Graph) -> bool {
    let regenerated = match field_construction_degrees(cert.q, cert.exponent) {
        Ok(d) => d,
        Err(_) => return false,
    };
    if regenerated != cert.degrees {
        return false;
    }
    match degree_set_to_graph(&cert.degrees) {
        Ok((g, _)) => g.canonical_form() == target.canonical_form(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn join_examples() {
        let k1 = Graph::complete(1).unwrap();
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(join_graphs(&[k1, k5]).unwrap(), Graph::complete(6).unwrap());

        assert!(matches!(
            join_graphs(&[k1]),
            Err(ConstructError::TooFewFactors(1))
        ));
        let k5b = Graph::complete(5).unwrap();
        assert!(matches!(
            join_graphs(&[k5, k5b]),
            Err(ConstructError::VertexBudgetExceeded(10))
        ));
    }

    #[test]
    fn join_edge_count_formula() {
        let a = Graph::from_edge_list(3, &[(1, 2)]).unwrap();
        let b = Graph::from_edge_list(2, &[(1, 2)]).unwrap();
        let c = Graph::from_edge_list(3, &[(1, 3), (2, 3)]).unwrap();
        let j = join_graphs(&[a, b, c]).unwrap();
        let cross = 3 * 2 + 3 * 3 + 2 * 3;
        assert_eq!(j.edge_count(), 1 + 1 + 2 + cross);
    }

    #[test]
    fn rejoining_finest_factors_reconstructs_catalog_graphs() {
        for i in 1..=12 {
            let g = fixtures::fig4(i);
            let comps = crate::rules::join_components(&g).expect("decomposable");
            let factors: Vec<Graph> = comps
                .iter()
                .map(|&c| g.induced_subgraph(c).unwrap())
                .collect();
            let rejoined = join_graphs(&factors).unwrap();
            assert_eq!(
                rejoined.canonical_form(),
                g.canonical_form(),
                "catalog join graph {i}"
            );
            // Labeled equality under the component relabeling.
            let mut perm = [0u8; 8];
            let mut next = 0u8;
            for comp in &comps {
                for v in comp.iter() {
                    perm[(v - 1) as usize] = next;
                    next += 1;
                }
            }
            assert_eq!(g.relabel(&perm[..g.vertex_count() as usize]), rejoined);
        }
    }

    #[test]
    fn field_degree_examples() {
        let d32 = field_construction_degrees(2, 32).unwrap();
        assert_eq!(
            d32.iter().collect::<Vec<_>>(),
            [1, 2, 4, 8, 16, 32, 4294967295]
        );

        let d35 = field_construction_degrees(2, 35).unwrap();
        assert_eq!(d35.iter().collect::<Vec<_>>(), [1, 5, 7, 35, 34359738367]);

        let d2 = field_construction_degrees(2, 2).unwrap();
        assert_eq!(d2.iter().collect::<Vec<_>>(), [1, 2, 3]);

        assert!(matches!(
            field_construction_degrees(4, 3),
            Err(ConstructError::NotPrime(4))
        ));
        assert!(matches!(
            field_construction_degrees(2, 1),
            Err(ConstructError::ExponentTooSmall(1))
        ));
        assert!(matches!(
            field_construction_degrees(2, 64),
            Err(ConstructError::Overflow { .. })
        ));
    }

    #[test]
    fn degree_set_graphs() {
        let (g, primes) = degree_set_to_graph(&field_construction_degrees(2, 32).unwrap()).unwrap();
        assert_eq!(primes, [2, 3, 5, 17, 257, 65537]);
        let sizes: Vec<u8> = g.connected_components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, [1, 5]);
        assert_eq!(g.canonical_form(), fixtures::fig3a().canonical_form());

        let (g, primes) = degree_set_to_graph(&field_construction_degrees(2, 35).unwrap()).unwrap();
        assert_eq!(primes, [5, 7, 31, 71, 127, 122921]);
        assert_eq!(g.canonical_form(), fixtures::fig3b().canonical_form());
        // The small component is exactly {5, 7}.
        let comps = g.connected_components();
        let small: Vec<u64> = comps[0].iter().map(|v| primes[(v - 1) as usize]).collect();
        assert_eq!(small, [5, 7]);

        assert_eq!(
            degree_set_to_graph(&DegreeSet::new([1])),
            Err(ConstructError::NoPrimes)
        );

        let (g, _) = degree_set_to_graph(&field_construction_degrees(2, 2).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn certificate_search_hits() {
        let c15 = search_field_certificate(1, 5).unwrap().expect("hit");
        assert_eq!((c15.q, c15.exponent), (2, 32));
        assert!(validate_field_certificate(&c15, &fixtures::fig3a()));

        // First valid exponent with two divisor primes and four large-side
        // primes: 2^22 - 1 = 3 * 23 * 89 * 683.
        let c24 = search_field_certificate(2, 4).unwrap().expect("hit");
        assert_eq!((c24.q, c24.exponent), (2, 22));
        assert!(validate_field_certificate(&c24, &fixtures::fig3b()));

        assert_eq!(search_field_certificate(3, 3).unwrap(), None);

        assert!(matches!(
            search_field_certificate(4, 2),
            Err(ConstructError::BadComponentSizes { .. })
        ));
    }

    #[test]
    fn shared_prime_candidates_are_rejected_by_shape() {
        // 2^12 - 1 = 3^2 * 5 * 7 * 13 shares the prime 3 with the exponent;
        // the merged graph must not validate as two components.
        let d = field_construction_degrees(2, 12).unwrap();
        let (g, _) = degree_set_to_graph(&d).unwrap();
        assert!(g.is_connected());
    }

    #[test]
    fn budget_wide_degree_structure() {
        for q in SEARCH_PRIMES {
            for exponent in 2u32..=64 {
                if checked_pow(q, exponent).is_none() {
                    break;
                }
                let d = field_construction_degrees(q, exponent).unwrap();
                let power = checked_pow(q, exponent).unwrap();
                assert_eq!(d.largest(), power - 1);
                let rest: Vec<u64> = d.iter().filter(|&x| x != power - 1).collect();
                let divisors: Vec<u64> = (1..=exponent as u64)
                    .filter(|x| (exponent as u64).is_multiple_of(*x))
                    .collect();
                assert_eq!(rest, divisors);
            }
        }
    }

    #[test]
    fn accepted_certificates_have_two_complete_components() {
        for (a, b) in [(1u8, 1u8), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4)] {
            let cert = search_field_certificate(a, b)
                .unwrap()
                .unwrap_or_else(|| panic!("certificate for ({a},{b})"));
            let (g, _) = degree_set_to_graph(&cert.degrees).unwrap();
            let comps = g.connected_components();
            assert_eq!(comps.len(), 2);
            assert_eq!((comps[0].len(), comps[1].len()), (a, b));
            for comp in comps {
                let members: Vec<u8> = comp.iter().collect();
                for (i, &u) in members.iter().enumerate() {
                    for &v in &members[i + 1..] {
                        assert!(g.has_edge(u, v), "({a},{b}): component {comp} not complete");
                    }
                }
            }
        }
    }
}
