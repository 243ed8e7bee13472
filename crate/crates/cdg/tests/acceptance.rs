//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! 1. enumeration counts, cross-checked against an independent
//!    pairwise-isomorphism oracle;
//! 2. the six-vertex pipeline counts;
//! 3. the catalog graphs' verdicts and witness kinds;
//! 4. the field certificates and their factorizations;
//! 5. the mechanical replay of the nine-edge graph's elimination;
//! 6. the property suites (canonicalization, dual-route agreement,
//!    certificate re-validation, round trips, determinism).

// The oracle below sticks to plain matrix indexing on purpose.
#![allow(clippy::needless_range_loop)]

use cdg_core::admissible::{
    admissible_pair_witness, check_normal_sylow_hypothesis, check_split_neighborhood,
    vertex_strongly_admissible, ConditionStatus, SplitOutcome, TriValue,
};
use cdg_core::construct::{degree_set_to_graph, field_construction_degrees};
use cdg_core::graph::{Diameter, Graph, VertexSet};
use cdg_core::rules::{self, RuleId, WitnessData};
use cdg_core::verdict::{Source, StepBody, Verdict};
use cdg_core::{enumerate_graphs, fixtures, kb, Classifier};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

// ---------------------------------------------------------------------
// Independent oracle: labeled enumeration + pairwise isomorphism search.
// Uses its own adjacency-matrix representation throughout.
// ---------------------------------------------------------------------

#[derive(Clone, PartialEq)]
struct Matrix {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Matrix {
    fn from_mask(n: usize, mask: u32) -> Matrix {
        let mut adj = vec![vec![false; n]; n];
        let mut bit = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if mask & (1 << bit) != 0 {
                    adj[u][v] = true;
                    adj[v][u] = true;
                }
                bit += 1;
            }
        }
        Matrix { n, adj }
    }

    fn connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if self.adj[u][v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

fn isomorphic(a: &Matrix, b: &Matrix, perms: &[Vec<usize>]) -> bool {
    'outer: for p in perms {
        for u in 0..a.n {
            for v in 0..a.n {
                if a.adj[u][v] != b.adj[p[u]][p[v]] {
                    continue 'outer;
                }
            }
        }
        return true;
    }
    false
}

/// Counts connected isomorphism classes on `n` vertices by grouping all
/// labeled graphs under pairwise isomorphism tests.
fn oracle_connected_classes(n: usize) -> usize {
    let pairs = n * (n - 1) / 2;
    let perms = permutations(n);
    let mut representatives: Vec<Matrix> = Vec::new();
    for mask in 0..(1u32 << pairs) {
        let m = Matrix::from_mask(n, mask);
        if !m.connected() {
            continue;
        }
        if !representatives.iter().any(|r| isomorphic(r, &m, &perms)) {
            representatives.push(m);
        }
    }
    representatives.len()
}

#[test]
fn criterion_1_enumeration_counts() {
    let on_six = enumerate_graphs(6, true).unwrap().len();
    assert_eq!(on_six, 112);
    let expected = [1usize, 1, 2, 6, 21];
    for n in 1..=5usize {
        let enumerated = enumerate_graphs(n as u8, true).unwrap().len();
        let oracle = oracle_connected_classes(n);
        assert_eq!(enumerated, oracle, "oracle disagrees at n={n}");
        assert_eq!(enumerated, expected[n - 1], "expected count at n={n}");
    }
    println!("criterion 1: connected classes 1,1,2,6,21 (oracle-checked) and 112 at n=6 - PASS");
}

#[test]
fn criterion_2_pipeline_counts() {
    let seed = kb::seed();
    let mut cls = Classifier::new(&seed);
    let report = cls.classify_all(6).unwrap();
    let p = &report.pipeline;
    assert_eq!(p.connected, 112);
    assert_eq!(p.palfy, 35);
    assert_eq!(p.post_diameter, 27);
    assert_eq!(p.joins, 12);
    assert_eq!(p.eliminated, 6);
    assert_eq!(p.unknown, 9);

    let mut connected_occurs = 0usize;
    let mut disconnected_occurs = 0usize;
    let mut disconnected_dno = Vec::new();
    for (key, record) in &report.per_graph {
        let g = key.to_graph();
        match (g.is_connected(), record.verdict) {
            (true, Verdict::Occurs) => connected_occurs += 1,
            (false, Verdict::Occurs) => disconnected_occurs += 1,
            (false, Verdict::DoesNotOccur) => disconnected_dno.push(*key),
            _ => {}
        }
    }
    assert_eq!(connected_occurs, 13);
    assert_eq!(disconnected_occurs, 2);
    assert!(disconnected_dno.contains(&fixtures::fig2().canonical_form()));
    println!(
        "criterion 2: pipeline 112/35/27/12/6/9, occurrences 13+2, two triangles eliminated - PASS"
    );
}

#[test]
fn criterion_3_catalog_verdicts() {
    let seed = kb::seed();
    let mut cls = Classifier::new(&seed);

    let fig1 = fixtures::fig1();
    assert_eq!(fig1.diameter(), Diameter::Finite(3));
    assert_eq!(cls.classify(&fig1).verdict, Verdict::Occurs);

    for i in [1usize, 2] {
        let g = fixtures::fig5(i);
        let rec = cls.classify(&g);
        assert_eq!(rec.verdict, Verdict::DoesNotOccur, "eliminated graph ({i})");
        let last = rec.justification.steps.last().unwrap();
        assert_eq!(last.rule, RuleId::BisslerFamily, "eliminated graph ({i})");
        match &last.body {
            StepBody::Witness(w) => {
                assert!(matches!(w.data, WitnessData::DegreeTwoPair(_, _)));
                assert!(rules::replay(&g, w), "witness must replay for ({i})");
            }
            other => panic!("unexpected body {other:?}"),
        }
    }

    for i in [3usize, 4] {
        let g = fixtures::fig5(i);
        let rec = cls.classify(&g);
        assert_eq!(rec.verdict, Verdict::DoesNotOccur, "eliminated graph ({i})");
        let last = rec.justification.steps.last().unwrap();
        assert_eq!(last.rule, RuleId::OddCycle, "eliminated graph ({i})");
        match &last.body {
            StepBody::Witness(w) => match &w.data {
                WitnessData::OddCycle(vs) => {
                    assert_eq!(vs.len(), 5, "length-five cycle for ({i})");
                    assert!(rules::replay(&g, w), "witness must replay for ({i})");
                }
                other => panic!("unexpected witness {other:?}"),
            },
            other => panic!("unexpected body {other:?}"),
        }
    }

    for i in [5usize, 6] {
        let rec = cls.classify(&fixtures::fig5(i));
        assert_eq!(rec.verdict, Verdict::DoesNotOccur, "eliminated graph ({i})");
        assert_eq!(
            rec.source,
            Source::Seeded,
            "eliminated graph ({i}) comes from the seed"
        );
        assert_eq!(rec.justification.steps[0].rule, RuleId::Kb);
    }

    for i in 1..=9 {
        let rec = cls.classify(&fixtures::fig7(i));
        assert_eq!(rec.verdict, Verdict::Unknown, "open graph {i}");
    }
    println!("criterion 3: catalog verdicts and witness kinds all match - PASS");
}

#[test]
fn criterion_4_field_certificates() {
    let d32 = field_construction_degrees(2, 32).unwrap();
    assert_eq!(
        d32.iter().collect::<Vec<_>>(),
        [1, 2, 4, 8, 16, 32, 4294967295]
    );
    let (g32, primes32) = degree_set_to_graph(&d32).unwrap();
    assert_eq!(g32.canonical_form(), fixtures::fig3a().canonical_form());
    let comps = g32.connected_components();
    let large_component: Vec<u64> = comps[1]
        .iter()
        .map(|v| primes32[(v - 1) as usize])
        .collect();
    assert_eq!(large_component, [3, 5, 17, 257, 65537]);
    let product: u64 = large_component.iter().product();
    assert_eq!(product, 4294967295);

    let d35 = field_construction_degrees(2, 35).unwrap();
    assert_eq!(d35.iter().collect::<Vec<_>>(), [1, 5, 7, 35, 34359738367]);
    let (g35, primes35) = degree_set_to_graph(&d35).unwrap();
    assert_eq!(g35.canonical_form(), fixtures::fig3b().canonical_form());
    let comps = g35.connected_components();
    let small_part: Vec<u64> = comps[0]
        .iter()
        .map(|v| primes35[(v - 1) as usize])
        .collect();
    let large_part: Vec<u64> = comps[1]
        .iter()
        .map(|v| primes35[(v - 1) as usize])
        .collect();
    assert_eq!(small_part, [5, 7]);
    assert_eq!(large_part, [31, 71, 127, 122921]);
    let product: u64 = large_part.iter().product();
    assert_eq!(product, 34359738367);
    println!("criterion 4: field degree sets, prime components, and factorizations match - PASS");
}

#[test]
fn criterion_5_nine_edge_graph_replay() {
    let seed = kb::seed();
    let mut cls = Classifier::new(&seed);
    let g = fixtures::fig6();

    for p in [1u8, 4, 5, 6] {
        let adm = vertex_strongly_admissible(&g, p, &mut cls).unwrap();
        assert_eq!(adm.value, TriValue::Yes, "p{p} strongly admissible");
    }

    let outcome = check_split_neighborhood(
        &g,
        3,
        VertexSet::from_labels(&[1]).unwrap(),
        VertexSet::from_labels(&[5, 6]).unwrap(),
        &mut cls,
    )
    .unwrap();
    assert!(matches!(outcome, SplitOutcome::Satisfied(_)), "{outcome:?}");

    let report = check_normal_sylow_hypothesis(&g, 2, &mut cls).unwrap();
    for (i, cond) in report.conditions.iter().enumerate() {
        assert_eq!(
            cond.status,
            ConditionStatus::Holds,
            "condition {} ({})",
            i + 1,
            cond.detail
        );
    }
    let mut cases: Vec<(Vec<u8>, Vec<u8>)> = report
        .clique_cases
        .iter()
        .map(|c| (c.pi_star.iter().collect(), c.rho_star.iter().collect()))
        .collect();
    cases.sort();
    assert_eq!(
        cases,
        vec![
            (vec![1], vec![3]),
            (vec![4], vec![5]),
            (vec![4], vec![5, 6]),
            (vec![4], vec![6]),
        ]
    );

    assert!(admissible_pair_witness(&g, &mut cls).unwrap().is_some());
    println!("criterion 5: strong admissibility, split-neighborhood, five conditions, pair witness - PASS");
}

#[test]
fn criterion_6_property_suites() {
    // Canonicalization is invariant under 200 random relabelings of 200
    // random graphs.
    let mut rng = SmallRng::seed_from_u64(42);
    for _ in 0..200 {
        let n: u8 = rng.random_range(1..=6);
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                if rng.random_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        let key = g.canonical_form();
        assert_eq!(g.complement().complement(), g);
        for _ in 0..200 {
            let mut perm: Vec<u8> = (0..n).collect();
            for i in (1..n as usize).rev() {
                let j = rng.random_range(0..=i);
                perm.swap(i, j);
            }
            assert_eq!(g.relabel(&perm).canonical_form(), key);
        }
    }

    // The two routes to the triple condition agree on all 156 classes.
    for g in enumerate_graphs(6, false).unwrap().iter() {
        assert_eq!(
            rules::satisfies_palfy(g).is_ok(),
            rules::satisfies_palfy_via_complement(g).is_ok()
        );
    }

    // Every stored verdict re-verifies: occurrence certificates
    // reconstruct their graphs and elimination witnesses replay.
    let seed = kb::seed();
    let mut cls = Classifier::new(&seed);
    let report = cls.classify_all(6).unwrap();
    for (key, record) in &report.per_graph {
        kb::verify_entry(key, record).unwrap_or_else(|e| panic!("{e}"));
    }

    // Knowledge-base round trip is the identity.
    let text = cdg::kbfile::store(&seed);
    assert_eq!(cdg::kbfile::parse(&text).unwrap(), seed);

    // Two full runs serialize byte-identically.
    let mut cls2 = Classifier::new(&seed);
    let report2 = cls2.classify_all(6).unwrap();
    let json1 = serde_json::to_string(&cdg::json::ReportDto::from_core(&report)).unwrap();
    let json2 = serde_json::to_string(&cdg::json::ReportDto::from_core(&report2)).unwrap();
    assert_eq!(json1, json2);

    println!("criterion 6: canonicalization, dual routes, certificate replay, round trips, determinism - PASS");
}
